#pragma once

#include "fuzzy/matrix.hpp"

#include <utility>

namespace fuzzy {

struct RawDataTable {
    Labels group_labels;
    Vector interval_lengths;  // years per group
    Labels attribute_labels;
    Matrix counts;            // groups x attributes

    void validate() const;
};

enum class SdMode {
    sample_n_minus_1,
    // sqrt(mean(d^2) - mean(d)^2) with d = |x - mu|
    abs_deviation,
};

struct ColumnStats {
    Vector means;
    Vector sds;
    SdMode sd_mode = SdMode::sample_n_minus_1;
};

struct RtdEntry {
    double alpha;
    Matrix rtd;
    Vector row_sums;
};

struct CetdReport {
    Matrix atd;
    ColumnStats stats;
    std::vector<RtdEntry> rtds;  // ascending alpha
    Matrix cetd;
    Vector cetd_row_sums;
};

Matrix atd(const RawDataTable& raw);
ColumnStats column_stats(const Matrix& m, SdMode mode = SdMode::sample_n_minus_1);

// -1 if a <= mu - alpha*sd, else +1 if a >= mu + alpha*sd, else 0.
Matrix rtd(const Matrix& atd, const ColumnStats& stats, double alpha);

std::pair<Matrix, Vector> cetd(const std::vector<Matrix>& rtds);

CetdReport cetd_pipeline(const RawDataTable& raw, std::vector<double> alphas,
                         SdMode mode = SdMode::sample_n_minus_1);

}  // namespace fuzzy
