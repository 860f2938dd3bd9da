#include "fuzzy/relations.hpp"

#include <algorithm>

namespace fuzzy {

RelationSummary relation_summary(const Matrix& r) {
    RelationSummary s{Vector(r.rows(), 0.0), Vector(r.cols(), 0.0), 0.0};
    for (std::size_t i = 0; i < r.rows(); ++i) {
        for (std::size_t j = 0; j < r.cols(); ++j) {
            const double v = r(i, j);
            if (j == 0 || v > s.dom[i]) s.dom[i] = v;
            if (i == 0 || v > s.ran[j]) s.ran[j] = v;
            if ((i == 0 && j == 0) || v > s.height) s.height = v;
        }
    }
    return s;
}

Matrix Tensor3::collapse() const {
    Matrix out(nx_, nz_);
    for (std::size_t x = 0; x < nx_; ++x)
        for (std::size_t z = 0; z < nz_; ++z) {
            double best = 0.0;
            for (std::size_t y = 0; y < ny_; ++y) best = std::max(best, (*this)(x, y, z));
            out(x, z) = best;
        }
    return out;
}

Tensor3 relational_join(const Matrix& p, const Matrix& q) {
    if (p.cols() != q.rows()) {
        throw DimensionError("relational_join: inner dimension mismatch " + p.shape() + " vs " +
                             q.shape());
    }
    Tensor3 t(p.rows(), p.cols(), q.cols());
    for (std::size_t x = 0; x < p.rows(); ++x)
        for (std::size_t y = 0; y < p.cols(); ++y)
            for (std::size_t z = 0; z < q.cols(); ++z) t(x, y, z) = std::min(p(x, y), q(y, z));
    return t;
}

Matrix alpha_cut(const Matrix& r, double alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0)) {
        throw DomainError("alpha_cut: alpha must lie in (0, 1], got " + std::to_string(alpha));
    }
    Matrix out(r.rows(), r.cols());
    for (std::size_t i = 0; i < r.rows(); ++i)
        for (std::size_t j = 0; j < r.cols(); ++j) out(i, j) = r(i, j) >= alpha ? 1.0 : 0.0;
    out.set_row_labels(r.row_labels());
    out.set_col_labels(r.col_labels());
    return out;
}

RelationFlags relation_properties(const Matrix& r, double epsilon) {
    if (!r.square()) throw DimensionError("relation_properties: relation " + r.shape() + " is not square");
    const std::size_t n = r.rows();
    RelationFlags f;
    f.reflexive = true;
    f.anti_reflexive = true;
    f.symmetric = true;
    f.max_min_transitive = true;
    for (std::size_t i = 0; i < n; ++i) {
        if (r(i, i) < epsilon) f.reflexive = false;
        if (r(i, i) != 0.0) f.anti_reflexive = false;
        for (std::size_t j = 0; j < n; ++j)
            if (r(i, j) != r(j, i)) f.symmetric = false;
    }
    for (std::size_t x = 0; x < n && f.max_min_transitive; ++x)
        for (std::size_t z = 0; z < n && f.max_min_transitive; ++z)
            for (std::size_t y = 0; y < n; ++y)
                if (r(x, z) < std::min(r(x, y), r(y, z))) {
                    f.max_min_transitive = false;
                    break;
                }
    f.compatibility = f.reflexive && f.symmetric;
    f.similarity = f.compatibility && f.max_min_transitive;
    return f;
}

}  // namespace fuzzy
