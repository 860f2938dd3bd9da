#include "fuzzy/fam.hpp"

#include "fuzzy/algebra.hpp"

#include <algorithm>
#include <numeric>

namespace fuzzy {

namespace {

void require_unit(const Vector& v, const char* what) {
    for (double x : v) {
        if (!(x >= 0.0 && x <= 1.0)) throw DomainError(std::string(what) + " entries must lie in [0, 1]");
    }
}

}  // namespace

void FamModel::validate() const {
    if (matrix.empty()) throw DimensionError("FAM matrix must be at least 1x1");
    if (!is_fuzzy(matrix)) throw DomainError("FAM matrix entries must lie in [0, 1]");
}

Vector fam_backward(const FamModel& model, const Vector& b) {
    model.validate();
    if (b.size() != model.matrix.cols()) {
        throw DimensionError("fam_backward: fit vector of length " + std::to_string(b.size()) +
                             " for " + model.matrix.shape());
    }
    require_unit(b, "fam_backward: fit vector");
    return compose_max_min(model.matrix, Matrix::column_vector(b)).col(0);
}

Vector fam_forward(const FamModel& model, const Vector& a) {
    model.validate();
    if (a.size() != model.matrix.rows()) {
        throw DimensionError("fam_forward: fit vector of length " + std::to_string(a.size()) +
                             " for " + model.matrix.shape());
    }
    require_unit(a, "fam_forward: fit vector");
    return vec_max_min(a, model.matrix);
}

std::vector<std::pair<std::string, double>> fam_rank(const Vector& v, const Labels& labels) {
    if (!labels.empty() && labels.size() != v.size()) {
        throw DimensionError("fam_rank: " + std::to_string(labels.size()) + " labels for " +
                             std::to_string(v.size()) + " values");
    }
    std::vector<std::size_t> order(v.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return v[a] > v[b]; });
    std::vector<std::pair<std::string, double>> out;
    out.reserve(v.size());
    for (std::size_t i : order) out.emplace_back(labels.empty() ? std::to_string(i + 1) : labels[i], v[i]);
    return out;
}

}  // namespace fuzzy
