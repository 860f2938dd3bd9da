#pragma once

#include "fuzzy/matrix.hpp"

namespace fuzzy {

struct Fcm {
    Matrix adjacency;  // square, zero diagonal
    Labels node_labels;
    double theta = 1.0;

    std::size_t size() const { return adjacency.rows(); }
    void validate() const;
};

enum class PatternKind { fixed_point, limit_cycle };

const char* to_string(PatternKind k);

struct HiddenPattern {
    PatternKind kind = PatternKind::fixed_point;
    std::vector<StateVector> terminal_states;  // one state, or the cycle in first-visit order
    std::vector<StateVector> trace;            // initial state through the first repeat
    std::size_t steps = 0;

    std::size_t period() const { return terminal_states.size(); }
};

constexpr std::size_t kDefaultMaxSteps = 1u << 16;

// raw = s * E, threshold at theta, then force clamped positions on.
StateVector fcm_step(const Fcm& f, const StateVector& s);

HiddenPattern fcm_hidden_pattern(const Fcm& f, const StateVector& initial,
                                 std::size_t max_steps = kDefaultMaxSteps);

Fcm fcm_combine(const std::vector<Fcm>& maps, double theta = 1.0);

struct Block {
    std::vector<std::size_t> indices;
    Matrix weights;  // indices.size() square
};

// Adds each block into an n x n zero matrix; overlapping cells accumulate.
Fcm fcm_assemble_blocks(std::size_t n, const std::vector<Block>& blocks, double theta = 1.0);

}  // namespace fuzzy
