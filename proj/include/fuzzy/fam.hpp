#pragma once

#include "fuzzy/matrix.hpp"

#include <string>
#include <utility>

namespace fuzzy {

struct FamModel {
    Matrix matrix;  // rows: effects W_i, cols: causes R_j
    void validate() const;
};

// a_i = max_j min(m_ij, b_j)
Vector fam_backward(const FamModel& model, const Vector& b);

// b_j = max_i min(a_i, m_ij)
Vector fam_forward(const FamModel& model, const Vector& a);

// Descending by value; equal values keep index order.
std::vector<std::pair<std::string, double>> fam_rank(const Vector& v, const Labels& labels);

}  // namespace fuzzy
