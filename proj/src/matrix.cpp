#include "fuzzy/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace fuzzy {

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    std::size_t r = 0;
    for (const auto& row : rows) {
        if (row.size() != cols_) {
            throw DimensionError("ragged initializer at row " + std::to_string(r + 1));
        }
        data_.insert(data_.end(), row.begin(), row.end());
        ++r;
    }
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) {
            throw DimensionError("ragged rows: row " + std::to_string(i + 1) + " has " +
                                 std::to_string(rows[i].size()) + " entries, expected " +
                                 std::to_string(m.cols_));
        }
        std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + i * m.cols_);
    }
    return m;
}

Matrix Matrix::row_vector(const Vector& v) {
    Matrix m(1, v.size());
    m.data_ = v;
    return m;
}

Matrix Matrix::column_vector(const Vector& v) {
    Matrix m(v.size(), 1);
    m.data_ = v;
    return m;
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

double Matrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) {
        throw DimensionError("index (" + std::to_string(i) + "," + std::to_string(j) +
                             ") outside " + shape());
    }
    return (*this)(i, j);
}

Vector Matrix::row(std::size_t i) const {
    return Vector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

Vector Matrix::col(std::size_t j) const {
    Vector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
}

void Matrix::set_row_labels(Labels labels) {
    if (!labels.empty() && labels.size() != rows_) {
        throw DimensionError("row label count " + std::to_string(labels.size()) +
                             " does not match " + shape());
    }
    row_labels_ = std::move(labels);
}

void Matrix::set_col_labels(Labels labels) {
    if (!labels.empty() && labels.size() != cols_) {
        throw DimensionError("column label count " + std::to_string(labels.size()) +
                             " does not match " + shape());
    }
    col_labels_ = std::move(labels);
}

std::string Matrix::shape() const {
    return std::to_string(rows_) + "x" + std::to_string(cols_);
}

bool Matrix::operator==(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

bool is_fuzzy(const Matrix& m) {
    return std::all_of(m.values().begin(), m.values().end(),
                       [](double v) { return v >= 0.0 && v <= 1.0; });
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError("shape mismatch " + a.shape() + " vs " + b.shape());
    }
    double worst = 0.0;
    for (std::size_t k = 0; k < a.values().size(); ++k) {
        worst = std::max(worst, std::fabs(a.values()[k] - b.values()[k]));
    }
    return worst;
}

bool approx_equal(const Matrix& a, const Matrix& b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    return max_abs_diff(a, b) <= tol;
}

void StateVector::validate() const {
    for (int b : bits) {
        if (b != 0 && b != 1) throw DomainError("state bits must be 0 or 1");
    }
    for (std::size_t c : clamp) {
        if (c >= bits.size()) {
            throw DimensionError("clamp index " + std::to_string(c) + " outside state of length " +
                                 std::to_string(bits.size()));
        }
        if (bits[c] != 1) throw DomainError("clamped position " + std::to_string(c) + " is off");
    }
}

StateVector make_state(std::size_t n, const std::vector<std::size_t>& on) {
    StateVector s;
    s.bits.assign(n, 0);
    for (std::size_t i : on) {
        if (i >= n) {
            throw DimensionError("on index " + std::to_string(i) + " outside state of length " +
                                 std::to_string(n));
        }
        s.bits[i] = 1;
    }
    s.clamp = on;
    std::sort(s.clamp.begin(), s.clamp.end());
    s.clamp.erase(std::unique(s.clamp.begin(), s.clamp.end()), s.clamp.end());
    return s;
}

StateVector state_from_bits(const std::vector<int>& bits) {
    std::vector<std::size_t> on;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] != 0 && bits[i] != 1) throw DomainError("state bits must be 0 or 1");
        if (bits[i]) on.push_back(i);
    }
    return make_state(bits.size(), on);
}

std::string to_string(const StateVector& s) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < s.bits.size(); ++i) os << (i ? "," : "") << s.bits[i];
    os << ')';
    return os.str();
}

}  // namespace fuzzy
