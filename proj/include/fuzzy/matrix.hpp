#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace fuzzy {

using Vector = std::vector<double>;
using Labels = std::vector<std::string>;

// Base for every error the library raises on bad model input.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class NonterminationError : public Error {
public:
    using Error::Error;
};

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
    Matrix(std::initializer_list<std::initializer_list<double>> rows);

    static Matrix from_rows(const std::vector<Vector>& rows);
    static Matrix row_vector(const Vector& v);
    static Matrix column_vector(const Vector& v);
    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }
    bool square() const { return rows_ == cols_; }

    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double at(std::size_t i, std::size_t j) const;

    const double* data() const { return data_.data(); }
    double* data() { return data_.data(); }
    const Vector& values() const { return data_; }

    Vector row(std::size_t i) const;
    Vector col(std::size_t j) const;

    const Labels& row_labels() const { return row_labels_; }
    const Labels& col_labels() const { return col_labels_; }
    void set_row_labels(Labels labels);
    void set_col_labels(Labels labels);

    std::string shape() const;

    // Exact comparison of entries; labels are ignored.
    bool operator==(const Matrix& other) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Vector data_;
    Labels row_labels_;
    Labels col_labels_;
};

bool is_fuzzy(const Matrix& m);
bool approx_equal(const Matrix& a, const Matrix& b, double tol = 1e-9);
double max_abs_diff(const Matrix& a, const Matrix& b);

// Binary state with a set of positions held on.
struct StateVector {
    std::vector<int> bits;
    std::vector<std::size_t> clamp;

    std::size_t size() const { return bits.size(); }
    void validate() const;
    bool operator==(const StateVector& o) const { return bits == o.bits; }
};

StateVector make_state(std::size_t n, const std::vector<std::size_t>& on);
StateVector state_from_bits(const std::vector<int>& bits);

std::string to_string(const StateVector& s);

}  // namespace fuzzy
