#include "fuzzy/frm.hpp"

#include "fuzzy/algebra.hpp"
#include "fuzzy/detail/recurrence.hpp"

#include <algorithm>

namespace fuzzy {

void Frm::validate() const {
    if (relation.empty()) throw DimensionError("FRM relation must be at least 1x1");
    if (!domain_labels.empty() && domain_labels.size() != relation.rows()) {
        throw DimensionError("FRM domain label count does not match " + relation.shape());
    }
    if (!range_labels.empty() && range_labels.size() != relation.cols()) {
        throw DimensionError("FRM range label count does not match " + relation.shape());
    }
}

const char* to_string(PairKind k) {
    return k == PairKind::fixed_pair ? "fixed_pair" : "limit_cycle";
}

namespace {

StateVector project(const Vector& raw, double theta) { return threshold(raw, theta); }

Vector as_real(const StateVector& s) { return Vector(s.bits.begin(), s.bits.end()); }

// Runs with the start space as rows of `e`; pairs come back as (start, other).
HiddenPatternPair run_from_rows(const Matrix& e, double theta, const StateVector& initial,
                                std::size_t max_steps) {
    const Matrix et = transpose(e);
    auto clamp = [&](StateVector s) {
        s.clamp = initial.clamp;
        for (std::size_t c : initial.clamp) s.bits[c] = 1;
        return s;
    };
    HiddenPatternPair hp;
    detail::RecurrenceTracker<std::pair<std::vector<int>, std::vector<int>>> seen;
    StateVector v = initial;
    StateVector w = project(vec_mul(as_real(v), e), theta);
    hp.pairs.emplace_back(v, w);
    seen.visit({v.bits, w.bits}, 0);
    for (std::size_t t = 1; t <= max_steps; ++t) {
        v = clamp(project(vec_mul(as_real(w), et), theta));
        w = project(vec_mul(as_real(v), e), theta);
        hp.pairs.emplace_back(v, w);
        if (auto j = seen.visit({v.bits, w.bits}, t)) {
            hp.steps = t;
            if (*j + 1 == t && *j >= 1) {
                hp.kind = PairKind::fixed_pair;
                hp.terminal_pairs = {hp.pairs.back()};
            } else {
                hp.kind = PairKind::limit_cycle;
                hp.terminal_pairs.assign(hp.pairs.begin() + static_cast<long>(*j),
                                         hp.pairs.begin() + static_cast<long>(t));
            }
            return hp;
        }
    }
    throw NonterminationError("FRM run did not recur within " + std::to_string(max_steps) + " steps");
}

}  // namespace

HiddenPatternPair frm_hidden_pattern(const Frm& f, const StateVector& initial, Space start,
                                     std::size_t max_steps) {
    f.validate();
    initial.validate();
    const std::size_t expect = start == Space::domain ? f.domain_size() : f.range_size();
    if (initial.size() != expect) {
        throw DimensionError("initial state of length " + std::to_string(initial.size()) + " for " +
                             (start == Space::domain ? "domain" : "range") + " space of size " +
                             std::to_string(expect));
    }
    if (start == Space::domain) return run_from_rows(f.relation, f.theta, initial, max_steps);

    HiddenPatternPair hp = run_from_rows(transpose(f.relation), f.theta, initial, max_steps);
    for (auto* seq : {&hp.pairs, &hp.terminal_pairs})
        for (StatePair& p : *seq) std::swap(p.first, p.second);
    return hp;
}

Frm frm_combine(const std::vector<Frm>& maps, double theta) {
    if (maps.empty()) throw DomainError("frm_combine: no maps given");
    const Frm& first = maps.front();
    Frm out{Matrix(first.domain_size(), first.range_size()), first.domain_labels, first.range_labels,
            theta};
    for (const Frm& m : maps) {
        if (m.domain_size() != out.domain_size() || m.range_size() != out.range_size()) {
            throw DimensionError("frm_combine: node-set mismatch " + out.relation.shape() + " vs " +
                                 m.relation.shape());
        }
        if ((!m.domain_labels.empty() && !out.domain_labels.empty() && m.domain_labels != out.domain_labels) ||
            (!m.range_labels.empty() && !out.range_labels.empty() && m.range_labels != out.range_labels)) {
            throw DimensionError("frm_combine: node labels differ between maps");
        }
        for (std::size_t k = 0; k < m.relation.values().size(); ++k)
            out.relation.data()[k] += m.relation.values()[k];
    }
    out.relation.set_row_labels(out.domain_labels);
    out.relation.set_col_labels(out.range_labels);
    return out;
}

Matrix scale_divide(const Matrix& m, double divisor) {
    if (divisor == 0.0) throw DomainError("scale_divide: divisor is zero");
    Matrix out = m;
    for (std::size_t k = 0; k < out.values().size(); ++k) out.data()[k] /= divisor;
    return out;
}

Matrix frm_fuzzify(const Matrix& avg, const ColumnStats& stats, double alpha) {
    if (stats.means.size() != avg.cols() || stats.sds.size() != avg.cols()) {
        throw DimensionError("frm_fuzzify: stats cover " + std::to_string(stats.means.size()) +
                             " columns, matrix is " + avg.shape());
    }
    if (!(alpha > 0.0 && alpha <= 1.0)) {
        throw DomainError("frm_fuzzify: alpha must lie in (0, 1], got " + std::to_string(alpha));
    }
    Matrix out(avg.rows(), avg.cols());
    for (std::size_t j = 0; j < avg.cols(); ++j) {
        const double lo = stats.means[j] - alpha * stats.sds[j];
        const double hi = stats.means[j] + alpha * stats.sds[j];
        for (std::size_t i = 0; i < avg.rows(); ++i) {
            const double a = avg(i, j);
            if (a <= lo) {
                out(i, j) = 0.0;
            } else if (a >= hi) {
                out(i, j) = 1.0;
            } else {
                out(i, j) = std::clamp((a - lo) / (hi - lo), 0.0, 1.0);
            }
        }
    }
    out.set_row_labels(avg.row_labels());
    out.set_col_labels(avg.col_labels());
    return out;
}

Vector frm_membership_grades(const Vector& row_sums) {
    if (row_sums.size() < 2) throw DomainError("membership grades need at least two row sums");
    const auto [mn, mx] = std::minmax_element(row_sums.begin(), row_sums.end());
    const double lo = *mn, hi = *mx;
    if (!(hi > lo)) throw DomainError("membership grades: all row sums are equal");
    Vector g(row_sums.size());
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = std::clamp((row_sums[i] - lo) / (hi - lo), 0.0, 1.0);
    return g;
}

CombinedFuzzy frm_combined_fuzzy(const Matrix& avg, const ColumnStats& stats,
                                 const std::vector<double>& alpha_grid) {
    if (alpha_grid.empty()) throw DomainError("frm_combined_fuzzy: empty alpha grid");
    CombinedFuzzy c{Matrix(avg.rows(), avg.cols()), {}, {}};
    for (double a : alpha_grid) {
        Matrix b = frm_fuzzify(avg, stats, a);
        for (std::size_t k = 0; k < b.values().size(); ++k) c.matrix.data()[k] += b.values()[k];
    }
    c.matrix.set_row_labels(avg.row_labels());
    c.matrix.set_col_labels(avg.col_labels());
    c.row_sums = margins(c.matrix, Axis::row);
    c.grades = frm_membership_grades(c.row_sums);
    return c;
}

}  // namespace fuzzy
