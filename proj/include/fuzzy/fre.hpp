#pragma once

#include "fuzzy/matrix.hpp"

#include <optional>

namespace fuzzy {

struct FreSolution {
    Vector p_hat;
    bool solvable = false;
    double residual = 0.0;  // max_k |max_j min(p_j, q_jk) - r_k|
};

constexpr double kSolvableTol = 1e-12;

enum class Composition { max_min, max_product };

// False iff some column of Q peaks below its r_k.
bool fre_necessary_check(const Matrix& q, const Vector& r);

// p_j = min_k sigma(q_jk, r_k), sigma = r_k if q_jk > r_k else 1.
FreSolution fre_max_solution(const Matrix& q, const Vector& r);

double fre_verify(const Matrix& p, const Matrix& q, const Matrix& r, Composition c);

// Clip to [0, 1].
double linear_activation(double a);

// p_ij = r_i / q_j* with j* the first index of max q; then max_j p_ij q_j = r_i.
Matrix fre_fit_max_product(const Vector& q, const Vector& r);

struct PartitionPeak {
    std::vector<std::size_t> indices;
    Matrix p;
    std::size_t peak_index;  // into the full vectors
    double peak_value;
};

// Consecutive chunks of `size` indices starting at `first`; `count` elements in total.
std::vector<std::vector<std::size_t>> equal_chunks(std::size_t first, std::size_t count, std::size_t size);

std::vector<PartitionPeak> fre_partition_peaks(const Vector& q_full, const Vector& r_full,
                                               const std::vector<std::vector<std::size_t>>& partitions);

}  // namespace fuzzy
