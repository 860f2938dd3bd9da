#include "fuzzy/algebra.hpp"

#include <algorithm>
#include <limits>

namespace fuzzy {

namespace {

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError(std::string(op) + ": shape mismatch " + a.shape() + " vs " + b.shape());
    }
}

void require_inner(const Matrix& a, const Matrix& b, const char* op) {
    if (a.cols() != b.rows()) {
        throw DimensionError(std::string(op) + ": inner dimension mismatch " + a.shape() + " vs " +
                             b.shape());
    }
}

template <class F>
Matrix zip(const Matrix& a, const Matrix& b, F f) {
    Matrix out(a.rows(), a.cols());
    const double* pa = a.data();
    const double* pb = b.data();
    double* po = out.data();
    for (std::size_t k = 0, n = a.rows() * a.cols(); k < n; ++k) po[k] = f(pa[k], pb[k]);
    out.set_row_labels(a.row_labels());
    out.set_col_labels(a.col_labels());
    return out;
}

// Generic (outer, inner) semiring kernel. `init` is the identity of `outer`.
template <class Outer, class Inner>
void semiring_cell(const Matrix& a, const Matrix& b, Matrix& out, std::size_t i, std::size_t k,
                   double init, Outer outer, Inner inner) {
    double acc = init;
    for (std::size_t j = 0; j < a.cols(); ++j) acc = outer(acc, inner(a(i, j), b(j, k)));
    out(i, k) = acc;
}

template <class Outer, class Inner>
Matrix semiring_serial(const Matrix& a, const Matrix& b, double init, Outer outer, Inner inner) {
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < b.cols(); ++k) semiring_cell(a, b, out, i, k, init, outer, inner);
    return out;
}

constexpr long kParallelCutoff = 1 << 14;

template <class Outer, class Inner>
Matrix semiring_parallel(const Matrix& a, const Matrix& b, double init, Outer outer, Inner inner) {
    Matrix out(a.rows(), b.cols());
    const long rows = static_cast<long>(a.rows());
    const long cols = static_cast<long>(b.cols());
    const long work = rows * cols * static_cast<long>(a.cols());
#pragma omp parallel for collapse(2) schedule(static) if (work > kParallelCutoff)
    for (long i = 0; i < rows; ++i)
        for (long k = 0; k < cols; ++k)
            semiring_cell(a, b, out, static_cast<std::size_t>(i), static_cast<std::size_t>(k), init,
                          outer, inner);
    return out;
}

void carry_labels(const Matrix& a, const Matrix& b, Matrix& out) {
    out.set_row_labels(a.row_labels());
    out.set_col_labels(b.col_labels());
}

const auto fmax2 = [](double x, double y) { return x < y ? y : x; };
const auto fmin2 = [](double x, double y) { return y < x ? y : x; };
const auto fmul = [](double x, double y) { return x * y; };
const auto fadd = [](double x, double y) { return x + y; };
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kPosInf = std::numeric_limits<double>::infinity();

}  // namespace

Matrix elementwise_max(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b, "elementwise_max");
    return zip(a, b, fmax2);
}

Matrix elementwise_min(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b, "elementwise_min");
    return zip(a, b, fmin2);
}

namespace serial {

Matrix compose_max_min(const Matrix& a, const Matrix& b) {
    require_inner(a, b, "compose_max_min");
    Matrix out = semiring_serial(a, b, kNegInf, fmax2, fmin2);
    carry_labels(a, b, out);
    return out;
}

Matrix compose_min_max(const Matrix& a, const Matrix& b) {
    require_inner(a, b, "compose_min_max");
    Matrix out = semiring_serial(a, b, kPosInf, fmin2, fmax2);
    carry_labels(a, b, out);
    return out;
}

Matrix compose_max_product(const Matrix& a, const Matrix& b) {
    require_inner(a, b, "compose_max_product");
    Matrix out = semiring_serial(a, b, kNegInf, fmax2, fmul);
    carry_labels(a, b, out);
    return out;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
    require_inner(a, b, "multiply");
    Matrix out = semiring_serial(a, b, 0.0, fadd, fmul);
    carry_labels(a, b, out);
    return out;
}

}  // namespace serial

namespace parallel {

Matrix compose_max_min(const Matrix& a, const Matrix& b) {
    require_inner(a, b, "compose_max_min");
    Matrix out = semiring_parallel(a, b, kNegInf, fmax2, fmin2);
    carry_labels(a, b, out);
    return out;
}

Matrix compose_min_max(const Matrix& a, const Matrix& b) {
    require_inner(a, b, "compose_min_max");
    Matrix out = semiring_parallel(a, b, kPosInf, fmin2, fmax2);
    carry_labels(a, b, out);
    return out;
}

Matrix compose_max_product(const Matrix& a, const Matrix& b) {
    require_inner(a, b, "compose_max_product");
    Matrix out = semiring_parallel(a, b, kNegInf, fmax2, fmul);
    carry_labels(a, b, out);
    return out;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
    require_inner(a, b, "multiply");
    Matrix out = semiring_parallel(a, b, 0.0, fadd, fmul);
    carry_labels(a, b, out);
    return out;
}

}  // namespace parallel

Matrix compose_max_min(const Matrix& a, const Matrix& b) { return parallel::compose_max_min(a, b); }
Matrix compose_min_max(const Matrix& a, const Matrix& b) { return parallel::compose_min_max(a, b); }
Matrix compose_max_product(const Matrix& a, const Matrix& b) {
    return parallel::compose_max_product(a, b);
}
Matrix multiply(const Matrix& a, const Matrix& b) { return parallel::multiply(a, b); }

Matrix transpose(const Matrix& a) {
    Matrix out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
    out.set_row_labels(a.col_labels());
    out.set_col_labels(a.row_labels());
    return out;
}

Vector margins(const Matrix& a, Axis axis) {
    if (axis == Axis::row) {
        Vector s(a.rows(), 0.0);
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j) s[i] += a(i, j);
        return s;
    }
    Vector s(a.cols(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) s[j] += a(i, j);
    return s;
}

Vector vec_mul(const Vector& v, const Matrix& m) {
    if (v.size() != m.rows()) {
        throw DimensionError("vector of length " + std::to_string(v.size()) +
                             " cannot multiply " + m.shape());
    }
    Vector out(m.cols(), 0.0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (v[i] == 0.0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * m(i, j);
    }
    return out;
}

Vector vec_max_min(const Vector& v, const Matrix& m) {
    return compose_max_min(Matrix::row_vector(v), m).row(0);
}

StateVector threshold(const Vector& v, double theta) {
    StateVector s;
    s.bits.resize(v.size());
    std::transform(v.begin(), v.end(), s.bits.begin(), [theta](double x) { return x >= theta ? 1 : 0; });
    return s;
}

}  // namespace fuzzy
