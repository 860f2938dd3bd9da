#include "fuzzy/bam.hpp"

#include "fuzzy/algebra.hpp"
#include "fuzzy/detail/recurrence.hpp"

#include <cmath>

namespace fuzzy {

void BamModel::validate() const {
    if (synaptic.empty()) throw DimensionError("BAM synaptic matrix must be at least 1x1");
    if (!(scale > 0.0)) throw DomainError("BAM scale must be positive");
    for (double v : synaptic.values()) {
        if (std::fabs(v) > scale) {
            throw DomainError("synaptic entry " + std::to_string(v) + " outside scale [-" +
                              std::to_string(scale) + ", " + std::to_string(scale) + "]");
        }
    }
    auto check = [](const Vector& v, std::size_t n, const char* what) {
        if (v.size() != n) {
            throw DimensionError(std::string(what) + " has length " + std::to_string(v.size()) +
                                 ", expected " + std::to_string(n));
        }
    };
    check(thresholds_u, nx(), "threshold vector U");
    check(thresholds_v, ny(), "threshold vector V");
    check(inputs_i, nx(), "input vector I");
    check(inputs_j, ny(), "input vector J");
}

BamModel make_bam(Matrix synaptic, double scale) {
    BamModel m;
    const std::size_t n = synaptic.rows(), p = synaptic.cols();
    m.synaptic = std::move(synaptic);
    m.thresholds_u.assign(n, 0.0);
    m.thresholds_v.assign(p, 0.0);
    m.inputs_i.assign(n, 0.0);
    m.inputs_j.assign(p, 0.0);
    m.scale = scale;
    return m;
}

StateVector bam_signal(const Vector& x, const Vector& thresholds, const StateVector& prev) {
    if (x.size() != thresholds.size() || x.size() != prev.size()) {
        throw DimensionError("bam_signal: lengths " + std::to_string(x.size()) + ", " +
                             std::to_string(thresholds.size()) + ", " + std::to_string(prev.size()));
    }
    StateVector s;
    s.bits.resize(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        s.bits[i] = x[i] > thresholds[i] ? 1 : (x[i] < thresholds[i] ? 0 : prev.bits[i]);
    }
    return s;
}

namespace {

Vector add(Vector a, const Vector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

Vector as_real(const StateVector& s) { return Vector(s.bits.begin(), s.bits.end()); }

StateVector zeros(std::size_t n) {
    StateVector s;
    s.bits.assign(n, 0);
    return s;
}

BamTrace run_from_x(const BamModel& m, const Vector& initial, std::size_t max_steps) {
    const Matrix mt = transpose(m.synaptic);
    BamTrace tr;
    std::vector<StateVector> signals;  // sx0, sy0, sx1, sy1, ...

    tr.activations.push_back(initial);
    StateVector sx = bam_signal(initial, m.thresholds_u, zeros(m.nx()));
    Vector y = add(vec_mul(as_real(sx), m.synaptic), m.inputs_j);
    tr.activations.push_back(y);
    StateVector sy = bam_signal(y, m.thresholds_v, zeros(m.ny()));
    signals.push_back(sx);
    signals.push_back(sy);
    tr.pairs.emplace_back(sx, sy);

    detail::RecurrenceTracker<std::pair<std::vector<int>, std::vector<int>>> seen;
    seen.visit({sx.bits, sy.bits}, 0);
    for (std::size_t t = 1; t <= max_steps; ++t) {
        Vector x = add(vec_mul(as_real(sy), mt), m.inputs_i);
        tr.activations.push_back(x);
        sx = bam_signal(x, m.thresholds_u, sx);
        y = add(vec_mul(as_real(sx), m.synaptic), m.inputs_j);
        tr.activations.push_back(y);
        sy = bam_signal(y, m.thresholds_v, sy);
        signals.push_back(sx);
        signals.push_back(sy);
        tr.pairs.emplace_back(sx, sy);
        if (auto j = seen.visit({sx.bits, sy.bits}, t)) {
            tr.kind = (*j + 1 == t) ? PairKind::fixed_pair : PairKind::limit_cycle;
            tr.fixed_pair = tr.pairs.back();
            tr.settle_step = 1;
            for (std::size_t k = 2; k < signals.size(); ++k)
                if (signals[k].bits != signals[k - 2].bits) tr.settle_step = k;
            return tr;
        }
    }
    throw NonterminationError("BAM run did not recur within " + std::to_string(max_steps) + " steps");
}

}  // namespace

BamTrace bam_run(const BamModel& model, const Vector& initial, Side start, std::size_t max_steps) {
    model.validate();
    const std::size_t expect = start == Side::x ? model.nx() : model.ny();
    if (initial.size() != expect) {
        throw DimensionError("initial activation of length " + std::to_string(initial.size()) +
                             ", expected " + std::to_string(expect));
    }
    if (start == Side::x) return run_from_x(model, initial, max_steps);

    BamModel flipped = model;
    flipped.synaptic = transpose(model.synaptic);
    std::swap(flipped.thresholds_u, flipped.thresholds_v);
    std::swap(flipped.inputs_i, flipped.inputs_j);
    BamTrace tr = run_from_x(flipped, initial, max_steps);
    for (auto& p : tr.pairs) std::swap(p.first, p.second);
    std::swap(tr.fixed_pair.first, tr.fixed_pair.second);
    return tr;
}

IndirectRelation bam_indirect(const BamModel& a, const BamModel& b) {
    if (a.synaptic.cols() != b.synaptic.rows()) {
        throw DimensionError("bam_indirect: " + a.synaptic.shape() + " cannot chain with " +
                             b.synaptic.shape());
    }
    return {transpose(multiply(a.synaptic, b.synaptic)),
            a.scale * b.scale * static_cast<double>(a.synaptic.cols())};
}

}  // namespace fuzzy
