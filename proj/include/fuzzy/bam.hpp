#pragma once

#include "fuzzy/frm.hpp"
#include "fuzzy/matrix.hpp"

#include <utility>

namespace fuzzy {

struct BamModel {
    Matrix synaptic;  // n (F_X) x p (F_Y), entries in [-scale, scale]
    Vector thresholds_u;
    Vector thresholds_v;
    Vector inputs_i;
    Vector inputs_j;
    double scale = 5.0;

    std::size_t nx() const { return synaptic.rows(); }
    std::size_t ny() const { return synaptic.cols(); }
    void validate() const;
};

// Zero thresholds and zero external inputs.
BamModel make_bam(Matrix synaptic, double scale);

enum class Side { x, y };

struct BamTrace {
    PairKind kind = PairKind::fixed_pair;
    std::vector<std::pair<StateVector, StateVector>> pairs;  // (S(x), S(y)) per exchange
    std::vector<Vector> activations;                         // raw vectors, alternating sides
    std::pair<StateVector, StateVector> fixed_pair;
    std::size_t settle_step = 0;  // half-exchange index of the last signal change
};

// 1 if x > U, 0 if x < U, previous bit on equality.
StateVector bam_signal(const Vector& x, const Vector& thresholds, const StateVector& prev);

BamTrace bam_run(const BamModel& model, const Vector& initial, Side start,
                 std::size_t max_steps = kDefaultMaxSteps);

struct IndirectRelation {
    Matrix matrix;  // (A x B) transposed
    double bound;   // entries lie in [-bound, bound]
};

IndirectRelation bam_indirect(const BamModel& a, const BamModel& b);

}  // namespace fuzzy
