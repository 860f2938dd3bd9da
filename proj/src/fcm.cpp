#include "fuzzy/fcm.hpp"

#include "fuzzy/algebra.hpp"
#include "fuzzy/detail/recurrence.hpp"

namespace fuzzy {

void Fcm::validate() const {
    if (!adjacency.square()) throw DimensionError("FCM adjacency " + adjacency.shape() + " is not square");
    for (std::size_t i = 0; i < adjacency.rows(); ++i) {
        if (adjacency(i, i) != 0.0) {
            throw DomainError("FCM adjacency has nonzero diagonal at node " + std::to_string(i + 1));
        }
    }
    if (!node_labels.empty() && node_labels.size() != adjacency.rows()) {
        throw DimensionError("FCM label count does not match " + adjacency.shape());
    }
}

const char* to_string(PatternKind k) {
    return k == PatternKind::fixed_point ? "fixed_point" : "limit_cycle";
}

StateVector fcm_step(const Fcm& f, const StateVector& s) {
    if (s.size() != f.size()) {
        throw DimensionError("state of length " + std::to_string(s.size()) + " for FCM with " +
                             std::to_string(f.size()) + " nodes");
    }
    Vector raw(s.bits.begin(), s.bits.end());
    StateVector next = threshold(vec_mul(raw, f.adjacency), f.theta);
    next.clamp = s.clamp;
    for (std::size_t c : s.clamp) next.bits[c] = 1;
    return next;
}

HiddenPattern fcm_hidden_pattern(const Fcm& f, const StateVector& initial, std::size_t max_steps) {
    f.validate();
    initial.validate();
    if (initial.size() != f.size()) {
        throw DimensionError("initial state of length " + std::to_string(initial.size()) +
                             " for FCM with " + std::to_string(f.size()) + " nodes");
    }
    HiddenPattern hp;
    detail::RecurrenceTracker<std::vector<int>> seen;
    hp.trace.push_back(initial);
    seen.visit(initial.bits, 0);
    for (std::size_t t = 1; t <= max_steps; ++t) {
        StateVector next = fcm_step(f, hp.trace.back());
        hp.trace.push_back(next);
        if (auto j = seen.visit(next.bits, t)) {
            hp.steps = t;
            if (*j + 1 == t) {
                hp.kind = PatternKind::fixed_point;
                hp.terminal_states = {next};
            } else {
                hp.kind = PatternKind::limit_cycle;
                hp.terminal_states.assign(hp.trace.begin() + static_cast<long>(*j),
                                          hp.trace.begin() + static_cast<long>(t));
            }
            return hp;
        }
    }
    throw NonterminationError("FCM run did not recur within " + std::to_string(max_steps) + " steps");
}

Fcm fcm_combine(const std::vector<Fcm>& maps, double theta) {
    if (maps.empty()) throw DomainError("fcm_combine: no maps given");
    Fcm out{Matrix(maps.front().size(), maps.front().size()), maps.front().node_labels, theta};
    for (const Fcm& m : maps) {
        if (m.size() != out.size() || !m.adjacency.square()) {
            throw DimensionError("fcm_combine: node-set mismatch " + out.adjacency.shape() + " vs " +
                                 m.adjacency.shape());
        }
        if (!m.node_labels.empty() && !out.node_labels.empty() && m.node_labels != out.node_labels) {
            throw DimensionError("fcm_combine: node labels differ between maps");
        }
        for (std::size_t k = 0; k < m.adjacency.values().size(); ++k)
            out.adjacency.data()[k] += m.adjacency.values()[k];
    }
    out.adjacency.set_row_labels(out.node_labels);
    out.adjacency.set_col_labels(out.node_labels);
    return out;
}

Fcm fcm_assemble_blocks(std::size_t n, const std::vector<Block>& blocks, double theta) {
    Fcm out{Matrix(n, n), {}, theta};
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        const Block& blk = blocks[b];
        const std::size_t k = blk.indices.size();
        if (blk.weights.rows() != k || blk.weights.cols() != k) {
            throw DimensionError("block " + std::to_string(b + 1) + " is " + blk.weights.shape() +
                                 " but lists " + std::to_string(k) + " indices");
        }
        std::vector<bool> used(n, false);
        for (std::size_t idx : blk.indices) {
            if (idx >= n) {
                throw DimensionError("block " + std::to_string(b + 1) + " index " + std::to_string(idx) +
                                     " outside " + std::to_string(n) + " nodes");
            }
            if (used[idx]) {
                throw DomainError("block " + std::to_string(b + 1) + " repeats index " + std::to_string(idx));
            }
            used[idx] = true;
        }
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < k; ++c)
                out.adjacency(blk.indices[r], blk.indices[c]) += blk.weights(r, c);
    }
    return out;
}

}  // namespace fuzzy
