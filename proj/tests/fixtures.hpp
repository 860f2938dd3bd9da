#pragma once

#include "fuzzy/fuzzy.hpp"

#include <string>
#include <vector>

namespace fixtures {

using fuzzy::Matrix;
using fuzzy::RawDataTable;
using fuzzy::Vector;

inline fuzzy::Labels symptoms(std::size_t n) {
    fuzzy::Labels l;
    for (std::size_t i = 1; i <= n; ++i) l.push_back("S" + std::to_string(i));
    return l;
}

// ---------------------------------------------------------------- CETD

inline RawDataTable cardio_3x8() {
    return {{"20-30", "31-43", "44-65"},
            {11, 13, 22},
            symptoms(8),
            Matrix{{23, 18, 24, 16, 29, 10, 16, 10}, {38, 32, 38, 31, 35, 18, 33, 10}, {22, 21, 21, 22, 20, 11, 20, 5}}};
}

inline Matrix cardio_3x8_printed_atd() {
    return Matrix{{2.09, 1.64, 2.18, 1.46, 2.64, 0.91, 1.46, 0.91},
                  {2.92, 2.46, 2.92, 2.39, 2.69, 1.39, 2.54, 0.77},
                  {1, 0.95, 0.95, 1, 0.91, 0.5, 0.91, 0.23}};
}
inline Vector cardio_3x8_printed_means() { return {2.00, 1.68, 2.02, 1.62, 2.08, 0.93, 1.64, 0.64}; }
inline Vector cardio_3x8_printed_sds() { return {0.96, 0.76, 0.995, 0.71, 1.01, 0.45, 0.83, 0.36}; }

inline std::vector<Matrix> cardio_3x8_printed_rtds() {
    return {Matrix{{0, 0, 1, -1, 1, 0, -1, 1}, {1, 1, 1, 1, 1, 1, 1, 1}, {-1, -1, -1, -1, -1, -1, -1, -1}},
            Matrix{{0, 0, 0, 0, 1, 0, 0, 1}, {1, 1, 1, 1, 1, 1, 1, 0}, {-1, -1, -1, -1, -1, -1, -1, -1}},
            Matrix{{0, 0, 0, 0, 1, 0, 0, 1}, {1, 1, 1, 1, 1, 1, 1, 0}, {-1, -1, -1, -1, -1, -1, -1, -1}},
            Matrix{{0, 0, 0, 0, 0, 0, 0, 0}, {1, 1, 1, 1, 0, 1, 1, 0}, {-1, -1, -1, -1, -1, -1, -1, -1}}};
}
inline std::vector<Vector> cardio_3x8_printed_row_sums() { return {{1, 8, -8}, {2, 7, -8}, {2, 7, -8}, {0, 6, -8}}; }
inline Matrix cardio_3x8_printed_cetd() {
    return Matrix{{0, 0, 0, -1, 3, 0, -1, 3}, {4, 4, 4, 4, 4, 4, 4, 1}, {-4, -4, -4, -4, -4, -4, -4, -4}};
}
inline Vector cardio_3x8_printed_cetd_row_sums() { return {4, 29, -32}; }

inline RawDataTable cardio_5x8() {
    return {{"20-24", "25-30", "31-36", "37-43", "44-65"},
            {5, 6, 6, 7, 22},
            symptoms(8),
            Matrix{{2, 1, 3, 1, 3, 0, 2, 1},
                   {21, 17, 21, 15, 26, 10, 14, 9},
                   {18, 15, 20, 14, 17, 6, 13, 5},
                   {20, 17, 18, 17, 18, 12, 20, 5},
                   {22, 21, 21, 22, 20, 11, 20, 5}}};
}

inline RawDataTable digestive_3x6() {
    return {{"20-30", "31-43", "44-65"},
            {11, 13, 22},
            symptoms(6),
            Matrix{{17, 11, 8, 16, 16, 17}, {29, 26, 15, 17, 20, 20}, {22, 15, 11, 9, 12, 15}}};
}

inline RawDataTable nervous_5x8() {
    return {{"20-24", "25-30", "31-36", "37-43", "44-65"},
            {5, 6, 6, 7, 22},
            symptoms(8),
            Matrix{{6, 5, 3, 5, 5, 5, 3, 3},
                   {22, 22, 12, 22, 20, 15, 10, 13},
                   {22, 22, 12, 21, 18, 19, 10, 15},
                   {16, 20, 15, 18, 16, 15, 13, 8},
                   {23, 23, 17, 22, 20, 24, 19, 15}}};
}

inline RawDataTable respiratory_5x6() {
    return {{"20-24", "25-30", "31-36", "37-43", "44-65"},
            {5, 6, 6, 7, 22},
            symptoms(6),
            Matrix{{1, 3, 4, 6, 4, 5},
                   {4, 12, 14, 20, 20, 16},
                   {7, 16, 13, 17, 15, 16},
                   {6, 10, 17, 18, 18, 19},
                   {3, 14, 17, 22, 23, 23}}};
}

// Three-group studies use the first set, five-group studies the second.
inline const Vector kCetdAlphas{0.15, 0.35, 0.45, 0.75};
inline const Vector kCetdAlphas5{0.1, 0.15, 0.2, 0.35};

// ---------------------------------------------------------------- FCM

inline Matrix socio() {
    return Matrix{{0, 0, -1, 0, 1}, {0, 0, 0, -1, 0}, {0, -1, 0, 0, -1}, {-1, 1, 0, 0, 0}, {0, 0, 0, 1, 0}};
}

// Node order A1..A12, zero-based indices.
inline std::vector<fuzzy::Block> disjoint_blocks() {
    return {{{0, 5, 6, 11}, Matrix{{0, 1, 1, 0}, {1, 0, 1, 0}, {0, 1, 0, 1}, {0, 1, 0, 0}}},
            {{1, 2, 3, 9}, Matrix{{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 1, 0, 0}, {1, 1, 0, 0}}},
            {{4, 7, 8, 10}, Matrix{{0, 1, 1, 1}, {1, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}}}};
}

// The block-diagonal matrix in the class order A1 A6 A7 A12 | A2 A3 A4 A10 | A5 A8 A9 A11.
inline Matrix disjoint_block_diagonal() {
    Matrix b(12, 12);
    const auto blocks = disjoint_blocks();
    for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < 4; ++c) b(4 * k + r, 4 * k + c) = blocks[k].weights(r, c);
    return b;
}
inline std::vector<std::size_t> disjoint_class_order() { return {0, 5, 6, 11, 1, 2, 3, 9, 4, 7, 8, 10}; }

inline std::vector<fuzzy::Block> overlap_blocks() {
    return {{{0, 1, 2, 3}, Matrix{{0, 1, 1, 1}, {0, 0, 1, 0}, {0, 0, 0, 0}, {0, 1, 0, 0}}},
            {{2, 3, 4, 5}, Matrix{{0, 0, 0, 0}, {0, 0, 0, 0}, {1, 1, 0, 1}, {1, 0, 0, 0}}},
            {{4, 5, 6, 7}, Matrix{{0, 1, 1, 0}, {0, 0, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, 0}}},
            {{6, 7, 8, 9}, Matrix{{0, 1, 0, 0}, {0, 0, 0, 1}, {1, 1, 0, 0}, {0, 0, 0, 0}}},
            {{8, 9, 10, 11}, Matrix{{0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 0, 1}, {0, 0, 1, 0}}},
            {{10, 11, 0, 1}, Matrix{{0, 1, 0, 0}, {0, 0, 0, 0}, {0, 1, 0, 0}, {0, 1, 0, 0}}}};
}

// W transcribed cell by cell from the six class matrices (A1..A12 order).
inline Matrix overlap_w() {
    return Matrix{{0, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 1},
                  {0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1},
                  {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
                  {0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
                  {0, 0, 1, 1, 0, 2, 1, 0, 0, 0, 0, 0},
                  {0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0},
                  {0, 0, 0, 0, 0, 1, 0, 2, 0, 0, 0, 0},
                  {0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0},
                  {0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 0, 0},
                  {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
                  {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2},
                  {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0}};
}

// ---------------------------------------------------------------- FRM

inline Matrix employer_e1() {
    return Matrix{{0, 0, 0, 0, 1}, {1, 0, 0, 0, 0}, {0, 0, 1, 0, 0}, {1, 0, 0, 0, 0},
                  {0, 1, 0, 0, 0}, {0, 0, 0, 0, 1}, {1, 0, 0, 0, 0}, {0, 0, 0, 1, 0}};
}
inline Matrix employer_e2() {
    return Matrix{{0, 0, 0, 1, 1}, {0, 0, 1, 0, 0}, {0, 0, 1, 0, 0}, {1, 1, 0, 0, 0},
                  {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}, {0, 0, 0, 1, 1}};
}
inline Matrix employer_e3() {
    return Matrix{{0, 0, 0, 1, 0}, {0, 0, 1, 0, 0}, {0, 1, 0, 0, 0}, {1, 0, 0, 0, 0},
                  {0, 0, 1, 0, 0}, {0, 0, 0, 0, 1}, {0, 1, 0, 0, 0}, {0, 0, 0, 0, 1}};
}
inline Matrix employer_combined_printed() {
    return Matrix{{0, 0, 0, 2, 2}, {1, 0, 2, 0, 0}, {0, 1, 2, 0, 0}, {3, 1, 0, 0, 0},
                  {0, 1, 2, 0, 0}, {0, 0, 0, 1, 2}, {1, 1, 0, 0, 1}, {0, 0, 0, 2, 2}};
}

inline Matrix cement_raw() {
    Matrix m{{70.99, 82.61, 11.61, 5.856, 2.239, 1.23, 7.19, 0.867},
             {74.33, 85.05, 10.71, 5.558, 2.058, 0.88, 6.02, 0.427},
             {74.25, 84.29, 10.04, 5.969, 2.704, 0.769, 6.068, 0.144},
             {71.08, 81.42, 10.34, 7.070, 2.386, 1.197, 7.411, 0.498},
             {70.65, 80.85, 10.19, 7.102, 2.589, 1.112, 8.093, 0.238},
             {72.03, 80.06, 8.028, 6.297, 3.276, 1.373, 8.563, 0.413}};
    m.set_row_labels({"Y1", "Y2", "Y3", "Y4", "Y5", "Y6"});
    m.set_col_labels({"X1", "X2", "X3", "X4", "X5", "X6", "X7", "X8"});
    return m;
}

// Printed average matrix; row 4 column 7 read as 3.706 (printed 3.076).
inline Matrix cement_printed_average() {
    return Matrix{{35.49, 41.30, 5.805, 2.928, 1.119, 0.615, 3.595, 0.433},
                  {37.16, 42.53, 5.355, 2.779, 1.029, 0.44, 3.01, 0.213},
                  {37.13, 42.15, 5.02, 2.985, 1.352, 0.385, 3.034, 0.072},
                  {35.54, 40.71, 5.17, 3.535, 1.193, 0.598, 3.706, 0.249},
                  {35.33, 40.43, 5.095, 3.551, 1.295, 0.556, 4.046, 0.119},
                  {36.02, 40.03, 4.014, 3.148, 1.638, 0.687, 4.281, 0.207}};
}
inline fuzzy::ColumnStats cement_printed_stats() {
    return {{36.1116, 41.191, 5.076, 3.154, 1.271, 0.547, 3.612, 0.2155},
            {0.32175, 0.41368, 0.390285, 0.141763, 0.1162292, 0.05250, 0.253748, 0.07790},
            fuzzy::SdMode::abs_deviation};
}
inline Matrix cement_printed_b01() {
    return Matrix{{0, 1, 1, 0, 0, 1, 0.165, 1},   {1, 1, 1, 0, 0, 0, 0, 0.339}, {1, 1, 0, 0, 1, 0, 0, 0},
                  {0, 0, 1, 1, 0, 1, 1, 1},       {0, 0, 0.743, 1, 1, 1, 1, 0}, {0, 0, 0, 0.288, 1, 1, 1, 0}};
}
inline Vector cement_printed_row_sums() { return {4.165, 3.339, 3, 5, 4.743, 3.288}; }
inline Vector cement_printed_grades() { return {0.5825, 0.1695, 0, 1, 0.8715, 0.144}; }
inline Vector cement_alpha_grid() { return {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0}; }

// ---------------------------------------------------------------- BAM

inline Matrix bam_m1() {
    return Matrix{{5, 2, 4, 4}, {4, 3, 5, 3}, {-1, -2, 4, 0}, {0, 4, 2, 0}, {2, 4, 3, 3}, {0, 1, 2, 0}};
}
inline Matrix bam_m2() {
    return Matrix{{3, 4, -2, 0, -1, 5}, {5, 4, 3, -1, 0, 4}, {1, 3, 0, 1, 4, 2}, {2, 3, -2, -3, 0, 3}, {3, 2, 0, 3, 1, 4}};
}
inline Matrix bam_m3() { return Matrix{{4, 0, 5, 3, 4}, {3, -2, -4, 4, 3}, {3, 0, 4, -1, -2}, {2, 1, 0, 5, 4}}; }

inline Matrix indirect_m1() {
    return Matrix{{2, 0, 0, 0, 0, 0},  {3, 2, 2, 2, 1, 3}, {-2, 3, 0, 2, 0, 0}, {0, 0, 0, 0, 0, 0},  {0, 0, 0, 1, -2, 0},
                  {4, 3, -2, 3, 2, 0}, {0, -1, 0, 0, -2, 0}, {0, 0, 0, 2, 0, 0}, {0, -3, 0, 0, -2, 0}};
}
inline Matrix indirect_m2() {
    return Matrix{{0, 3, 4, 2, 0, 0, 0}, {0, 2, 3, 3, 2, 0, 3}, {0, 2, 3, 2, 0, 0, 0},
                  {0, 3, 2, 3, 2, 0, 0}, {0, 2, 2, 2, 0, 0, 1}, {0, 2, 1, 2, 0, 0, 1}};
}
// Printed 9x7 table (it is M1 x M2 laid out with the 9 rows of M1).
inline Matrix indirect_printed() {
    return Matrix{{0, 6, 8, 4, 0, 0, 0},        {0, 31, 33, 33, 8, 0, 10},   {0, 6, 8, 11, 10, 0, 9},
                  {0, 0, 0, 0, 0, 0, 0},        {0, -1, -2, -1, 0, 0, -2},   {0, 27, 29, 26, 12, 0, 11},
                  {0, -6, -7, -7, -2, 0, -5},   {0, 6, 4, 6, 4, 0, 0},       {0, -10, -13, -13, -6, 0, -13}};
}

// ---------------------------------------------------------------- FAM

inline Matrix fam_matrix() {
    return Matrix{{.9, .8, .7, 0, 0, 0, 0, 0, 0, .7}, {.5, .8, .6, 0, 0, 0, 0, 0, 0, 0},
                  {0, .3, .6, 0, 0, 0, 0, 0, 0, 0},   {0, 0, 0, .6, 0, 0, 0, 0, 0, 0},
                  {0, 0, 0, 0, .9, .6, .7, 0, 0, 0},  {0, 0, 0, 0, 0, .7, .5, 0, 0, 0},
                  {0, 0, 0, 0, .6, 0, 0, 0, 0, 0}};
}
inline Vector fam_b() { return {0, 1, 1, 0, 0, 0, 0, 1, 0, 0}; }

// ---------------------------------------------------------------- FRE

inline Matrix silk_p() {
    return Matrix{{.8, 0, 0, 0}, {.8, .3, .3, 0}, {.1, .2, .3, .4}, {0, .1, .1, .1}, {.8, .1, .2, .4}, {.2, .4, .4, .9}};
}
inline Vector silk_q() { return {.6, .5, .7, .5}; }
inline Vector silk_pq() { return {.6, .6, .4, .1, .6, .5}; }
inline Vector silk_r() { return {.6, .4, .5, .4, .2, .6}; }
inline Vector silk_ptr() { return {.6, .4, .4, .6}; }

inline Matrix p1() {
    return Matrix{{0.03, 0.06, 0.12}, {0.0221875, 0.044375, 0.08875}, {0.069375, 0.13875, 0.2775}};
}
inline Vector q1() { return {.06, .07, .08}; }
inline Vector r1() { return {.0096, .0071, .0222}; }

// Hours 6..22 scaled by 1e-2, passengers scaled by 1e-4.
inline Vector pallavan_hours() {
    Vector v;
    for (int h = 6; h <= 22; ++h) v.push_back(h * 1e-2);
    return v;
}
inline Vector pallavan_passengers() {
    const int raw[] = {96, 71, 222, 269, 300, 220, 241, 265, 249, 114, 381, 288, 356, 189, 376, 182, 67};
    Vector v;
    for (int p : raw) v.push_back(p * 1e-4);
    return v;
}

// ---------------------------------------------------------------- relations

inline Matrix rel_7x5() {
    return Matrix{{0, .7, .5, 0, 0}, {0, .4, 0, .1, 0}, {.2, 0, 0, 0, 0}, {0, 0, .1, 1, 0},
                  {0, 0, 0, .3, .7}, {0, 0, 0, .6, .7}, {.2, 0, .8, 0, .5}};
}

inline Matrix compat_8x8() {
    return Matrix{{1, .3, 0, 0, .4, 0, 0, .6},  {.3, 1, .5, .3, 0, 0, 0, 0},   {0, .5, 1, 0, 0, .7, .6, .8},
                  {0, .3, 0, 1, .2, 0, .7, .5}, {.4, 0, 0, .2, 1, 0, 0, 0},    {0, 0, .7, 0, 0, 1, .2, 0},
                  {0, 0, .6, .7, 0, .2, 1, .8}, {.6, 0, .8, .5, 0, 0, .8, 1}};
}

}  // namespace fixtures
