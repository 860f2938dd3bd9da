#pragma once

#include "fuzzy/matrix.hpp"

namespace fuzzy {

struct RelationSummary {
    Vector dom;     // row maxima
    Vector ran;     // column maxima
    double height;  // global maximum
};

RelationSummary relation_summary(const Matrix& r);

// Dense x-by-y-by-z array holding min(P(x,y), Q(y,z)).
class Tensor3 {
public:
    Tensor3(std::size_t nx, std::size_t ny, std::size_t nz)
        : nx_(nx), ny_(ny), nz_(nz), data_(nx * ny * nz, 0.0) {}
    std::size_t nx() const { return nx_; }
    std::size_t ny() const { return ny_; }
    std::size_t nz() const { return nz_; }
    double operator()(std::size_t x, std::size_t y, std::size_t z) const {
        return data_[(x * ny_ + y) * nz_ + z];
    }
    double& operator()(std::size_t x, std::size_t y, std::size_t z) {
        return data_[(x * ny_ + y) * nz_ + z];
    }
    // max over the middle index
    Matrix collapse() const;

private:
    std::size_t nx_, ny_, nz_;
    Vector data_;
};

Tensor3 relational_join(const Matrix& p, const Matrix& q);

// 1 where r >= alpha. alpha must lie in (0, 1].
Matrix alpha_cut(const Matrix& r, double alpha);

struct RelationFlags {
    bool reflexive = false;
    bool anti_reflexive = false;
    bool symmetric = false;
    bool max_min_transitive = false;
    bool compatibility = false;
    bool similarity = false;
};

// epsilon relaxes reflexivity to R(x,x) >= epsilon.
RelationFlags relation_properties(const Matrix& r, double epsilon = 1.0);

}  // namespace fuzzy
