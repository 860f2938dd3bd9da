#include "fuzzy/fre.hpp"

#include "fuzzy/algebra.hpp"

#include <algorithm>
#include <cmath>

namespace fuzzy {

namespace {

void require_problem(const Matrix& q, const Vector& r, const char* op) {
    if (q.empty()) throw DimensionError(std::string(op) + ": Q must be at least 1x1");
    if (q.cols() != r.size()) {
        throw DimensionError(std::string(op) + ": Q is " + q.shape() + " but r has length " +
                             std::to_string(r.size()));
    }
}

}  // namespace

bool fre_necessary_check(const Matrix& q, const Vector& r) {
    require_problem(q, r, "fre_necessary_check");
    for (std::size_t k = 0; k < q.cols(); ++k) {
        double best = q(0, k);
        for (std::size_t j = 1; j < q.rows(); ++j) best = std::max(best, q(j, k));
        if (best < r[k]) return false;
    }
    return true;
}

FreSolution fre_max_solution(const Matrix& q, const Vector& r) {
    require_problem(q, r, "fre_max_solution");
    FreSolution s;
    s.p_hat.assign(q.rows(), 1.0);
    for (std::size_t j = 0; j < q.rows(); ++j)
        for (std::size_t k = 0; k < q.cols(); ++k)
            if (q(j, k) > r[k]) s.p_hat[j] = std::min(s.p_hat[j], r[k]);
    const Vector got = vec_max_min(s.p_hat, q);
    for (std::size_t k = 0; k < r.size(); ++k) s.residual = std::max(s.residual, std::fabs(got[k] - r[k]));
    s.solvable = s.residual <= kSolvableTol;
    return s;
}

double fre_verify(const Matrix& p, const Matrix& q, const Matrix& r, Composition c) {
    const Matrix got = c == Composition::max_min ? compose_max_min(p, q) : compose_max_product(p, q);
    if (got.rows() != r.rows() || got.cols() != r.cols()) {
        throw DimensionError("fre_verify: composition is " + got.shape() + " but R is " + r.shape());
    }
    return max_abs_diff(got, r);
}

double linear_activation(double a) { return std::clamp(a, 0.0, 1.0); }

Matrix fre_fit_max_product(const Vector& q, const Vector& r) {
    if (q.empty()) throw DimensionError("fre_fit_max_product: empty input vector");
    for (std::size_t j = 0; j < q.size(); ++j) {
        if (!(q[j] > 0.0)) {
            throw DomainError("fre_fit_max_product: input " + std::to_string(j + 1) + " must be positive");
        }
    }
    const std::size_t jstar = static_cast<std::size_t>(std::max_element(q.begin(), q.end()) - q.begin());
    Matrix p(r.size(), q.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        const double w = r[i] / q[jstar];
        if (w < 0.0 || w > 1.0) {
            throw DomainError("fre_fit_max_product: row " + std::to_string(i + 1) +
                              " needs weight " + std::to_string(w) + " outside [0, 1]");
        }
        for (std::size_t j = 0; j < q.size(); ++j) p(i, j) = linear_activation(w);
    }
    return p;
}

std::vector<std::vector<std::size_t>> equal_chunks(std::size_t first, std::size_t count, std::size_t size) {
    if (size == 0) throw DomainError("equal_chunks: chunk size must be positive");
    if (count % size != 0) {
        throw DomainError("equal_chunks: " + std::to_string(count) + " elements do not split into chunks of " +
                          std::to_string(size));
    }
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t start = first; start < first + count; start += size) {
        std::vector<std::size_t> chunk(size);
        for (std::size_t k = 0; k < size; ++k) chunk[k] = start + k;
        out.push_back(std::move(chunk));
    }
    return out;
}

std::vector<PartitionPeak> fre_partition_peaks(const Vector& q_full, const Vector& r_full,
                                               const std::vector<std::vector<std::size_t>>& partitions) {
    if (q_full.size() != r_full.size()) {
        throw DimensionError("fre_partition_peaks: Q has " + std::to_string(q_full.size()) +
                             " entries, R has " + std::to_string(r_full.size()));
    }
    std::vector<int> owner(q_full.size(), -1);
    std::vector<PartitionPeak> out;
    for (std::size_t p = 0; p < partitions.size(); ++p) {
        const auto& idx = partitions[p];
        if (idx.empty()) throw DomainError("fre_partition_peaks: partition " + std::to_string(p + 1) + " is empty");
        Vector q, r;
        for (std::size_t i : idx) {
            if (i >= q_full.size()) {
                throw DimensionError("fre_partition_peaks: index " + std::to_string(i) + " outside data of length " +
                                     std::to_string(q_full.size()));
            }
            if (owner[i] >= 0) {
                throw DomainError("fre_partition_peaks: partitions " + std::to_string(owner[i] + 1) + " and " +
                                  std::to_string(p + 1) + " overlap at index " + std::to_string(i));
            }
            owner[i] = static_cast<int>(p);
            q.push_back(q_full[i]);
            r.push_back(r_full[i]);
        }
        std::size_t best = 0;
        for (std::size_t k = 1; k < idx.size(); ++k)
            if (r[k] > r[best] || (r[k] == r[best] && idx[k] < idx[best])) best = k;
        out.push_back({idx, fre_fit_max_product(q, r), idx[best], r[best]});
    }
    return out;
}

}  // namespace fuzzy
