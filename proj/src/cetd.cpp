#include "fuzzy/cetd.hpp"

#include "fuzzy/algebra.hpp"

#include <algorithm>
#include <cmath>

namespace fuzzy {

void RawDataTable::validate() const {
    if (interval_lengths.size() != counts.rows()) {
        throw DimensionError("raw table has " + std::to_string(counts.rows()) + " groups but " +
                             std::to_string(interval_lengths.size()) + " interval lengths");
    }
    if (!group_labels.empty() && group_labels.size() != counts.rows()) {
        throw DimensionError("group label count does not match " + counts.shape());
    }
    if (!attribute_labels.empty() && attribute_labels.size() != counts.cols()) {
        throw DimensionError("attribute label count does not match " + counts.shape());
    }
    for (std::size_t i = 0; i < interval_lengths.size(); ++i) {
        if (!(interval_lengths[i] > 0.0)) {
            throw DomainError("interval length for group " + std::to_string(i + 1) +
                              " must be positive");
        }
    }
    for (double v : counts.values()) {
        if (v < 0.0) throw DomainError("raw counts must be non-negative");
    }
}

Matrix atd(const RawDataTable& raw) {
    raw.validate();
    Matrix out(raw.counts.rows(), raw.counts.cols());
    for (std::size_t i = 0; i < out.rows(); ++i)
        for (std::size_t j = 0; j < out.cols(); ++j)
            out(i, j) = raw.counts(i, j) / raw.interval_lengths[i];
    out.set_row_labels(raw.group_labels);
    out.set_col_labels(raw.attribute_labels);
    return out;
}

ColumnStats column_stats(const Matrix& m, SdMode mode) {
    const std::size_t n = m.rows();
    if (n == 0) throw DimensionError("column_stats: empty matrix");
    if (mode == SdMode::sample_n_minus_1 && n < 2) {
        throw DimensionError("column_stats: sample standard deviation needs at least 2 rows");
    }
    ColumnStats s;
    s.sd_mode = mode;
    s.means.assign(m.cols(), 0.0);
    s.sds.assign(m.cols(), 0.0);
    for (std::size_t j = 0; j < m.cols(); ++j) {
        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) sum += m(i, j);
        const double mu = sum / static_cast<double>(n);
        s.means[j] = mu;
        if (mode == SdMode::sample_n_minus_1) {
            double ss = 0.0;
            for (std::size_t i = 0; i < n; ++i) ss += (m(i, j) - mu) * (m(i, j) - mu);
            s.sds[j] = std::sqrt(ss / static_cast<double>(n - 1));
        } else {
            double sd1 = 0.0, sd2 = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                const double d = std::fabs(m(i, j) - mu);
                sd1 += d;
                sd2 += d * d;
            }
            const double nn = static_cast<double>(n);
            const double var = sd2 / nn - (sd1 / nn) * (sd1 / nn);
            s.sds[j] = std::sqrt(std::max(0.0, var));
        }
    }
    return s;
}

Matrix rtd(const Matrix& a, const ColumnStats& stats, double alpha) {
    if (stats.means.size() != a.cols() || stats.sds.size() != a.cols()) {
        throw DimensionError("rtd: stats cover " + std::to_string(stats.means.size()) +
                             " columns, matrix is " + a.shape());
    }
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw DomainError("rtd: alpha must lie in [0, 1], got " + std::to_string(alpha));
    }
    Matrix out(a.rows(), a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        const double lo = stats.means[j] - alpha * stats.sds[j];
        const double hi = stats.means[j] + alpha * stats.sds[j];
        for (std::size_t i = 0; i < a.rows(); ++i) {
            const double v = a(i, j);
            out(i, j) = v <= lo ? -1.0 : (v >= hi ? 1.0 : 0.0);
        }
    }
    out.set_row_labels(a.row_labels());
    out.set_col_labels(a.col_labels());
    return out;
}

std::pair<Matrix, Vector> cetd(const std::vector<Matrix>& rtds) {
    if (rtds.empty()) throw DomainError("cetd: no RTD matrices given");
    Matrix sum(rtds.front().rows(), rtds.front().cols());
    for (const Matrix& m : rtds) {
        if (m.rows() != sum.rows() || m.cols() != sum.cols()) {
            throw DimensionError("cetd: shape mismatch " + sum.shape() + " vs " + m.shape());
        }
        for (std::size_t k = 0; k < m.values().size(); ++k) sum.data()[k] += m.values()[k];
    }
    sum.set_row_labels(rtds.front().row_labels());
    sum.set_col_labels(rtds.front().col_labels());
    Vector rs = margins(sum, Axis::row);
    return {std::move(sum), std::move(rs)};
}

CetdReport cetd_pipeline(const RawDataTable& raw, std::vector<double> alphas, SdMode mode) {
    if (alphas.empty()) throw DomainError("cetd_pipeline: no alpha values given");
    std::stable_sort(alphas.begin(), alphas.end());
    CetdReport rep;
    rep.atd = atd(raw);
    rep.stats = column_stats(rep.atd, mode);
    std::vector<Matrix> mats;
    for (double a : alphas) {
        Matrix r = rtd(rep.atd, rep.stats, a);
        rep.rtds.push_back({a, r, margins(r, Axis::row)});
        mats.push_back(std::move(r));
    }
    auto [c, rs] = cetd(mats);
    rep.cetd = std::move(c);
    rep.cetd_row_sums = std::move(rs);
    return rep;
}

}  // namespace fuzzy
