#pragma once

#include "fuzzy/cetd.hpp"
#include "fuzzy/fcm.hpp"
#include "fuzzy/matrix.hpp"

#include <utility>

namespace fuzzy {

struct Frm {
    Matrix relation;  // domain rows x range columns
    Labels domain_labels;
    Labels range_labels;
    double theta = 1.0;

    std::size_t domain_size() const { return relation.rows(); }
    std::size_t range_size() const { return relation.cols(); }
    void validate() const;
};

enum class Space { domain, range };

enum class PairKind { fixed_pair, limit_cycle };

const char* to_string(PairKind k);

using StatePair = std::pair<StateVector, StateVector>;  // (domain, range)

struct HiddenPatternPair {
    PairKind kind = PairKind::fixed_pair;
    std::vector<StatePair> pairs;           // every pair through the first repeat
    std::vector<StatePair> terminal_pairs;  // fixed pair, or the repeating segment
    std::size_t steps = 0;
};

// A pair that recurs immediately is a fixed pair, except when the recurring
// pair is the very first one: the start vector came straight back, which is
// reported as a limit cycle through the other space.
HiddenPatternPair frm_hidden_pattern(const Frm& f, const StateVector& initial, Space start,
                                     std::size_t max_steps = kDefaultMaxSteps);

Frm frm_combine(const std::vector<Frm>& maps, double theta = 1.0);

Matrix scale_divide(const Matrix& m, double divisor);

// 0 below mu - alpha*sd, 1 above mu + alpha*sd, linear in between.
Matrix frm_fuzzify(const Matrix& avg, const ColumnStats& stats, double alpha);

// (R - min) / (max - min)
Vector frm_membership_grades(const Vector& row_sums);

struct CombinedFuzzy {
    Matrix matrix;
    Vector row_sums;
    Vector grades;
};

CombinedFuzzy frm_combined_fuzzy(const Matrix& avg, const ColumnStats& stats,
                                 const std::vector<double>& alpha_grid);

}  // namespace fuzzy
