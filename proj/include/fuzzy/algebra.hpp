#pragma once

#include "fuzzy/matrix.hpp"

namespace fuzzy {

enum class Axis { row, column };

Matrix elementwise_max(const Matrix& a, const Matrix& b);
Matrix elementwise_min(const Matrix& a, const Matrix& b);

// Compositions. The unqualified versions dispatch to the OpenMP kernels.
Matrix compose_max_min(const Matrix& a, const Matrix& b);
Matrix compose_min_max(const Matrix& a, const Matrix& b);
Matrix compose_max_product(const Matrix& a, const Matrix& b);
Matrix multiply(const Matrix& a, const Matrix& b);

// Single-threaded reference kernels.
namespace serial {
Matrix compose_max_min(const Matrix& a, const Matrix& b);
Matrix compose_min_max(const Matrix& a, const Matrix& b);
Matrix compose_max_product(const Matrix& a, const Matrix& b);
Matrix multiply(const Matrix& a, const Matrix& b);
}  // namespace serial

// OpenMP kernels; fall back to one thread below a work cutoff.
namespace parallel {
Matrix compose_max_min(const Matrix& a, const Matrix& b);
Matrix compose_min_max(const Matrix& a, const Matrix& b);
Matrix compose_max_product(const Matrix& a, const Matrix& b);
Matrix multiply(const Matrix& a, const Matrix& b);
}  // namespace parallel

Matrix transpose(const Matrix& a);
Vector margins(const Matrix& a, Axis axis);

// Row vector times matrix.
Vector vec_mul(const Vector& v, const Matrix& m);
Vector vec_max_min(const Vector& v, const Matrix& m);

// bit = 1 iff v >= theta; empty clamp set.
StateVector threshold(const Vector& v, double theta);

}  // namespace fuzzy
