/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 npnkit contributors
 * SPDX-License-Identifier: Apache-2.0
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

// Reference implementations used only by tests. They re-derive results from
// first principles with the most direct method available (enumeration,
// grid search, closed forms typed in from the standard) and share no code
// with the library beyond plain data types.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace oracle {

// ---------------------------------------------------------------------------
// Alignment delay by enumeration of every symbol arrival offset
// ---------------------------------------------------------------------------

struct Split {
    int dl = 10;
    int guard = 2;
    int ul = 2;
};

// 'D' or 'U' or '-' for symbol t of the pattern (t >= 0).
inline char symbol_dir(const std::string& pattern, Split split, long long t) {
    const long long period = static_cast<long long>(pattern.size()) * 14;
    const long long s = t % period;
    const char slot = pattern[static_cast<std::size_t>(s / 14)];
    const int sym = static_cast<int>(s % 14);
    if (slot != 'S') return slot;
    if (sym < split.dl) return 'D';
    if (sym < split.dl + split.guard) return '-';
    return 'U';
}

struct Grid {
    int per_slot;
    int duration;
    char dir;
};

inline bool is_occasion(const std::string& pattern, Split split, const Grid& g, long long t) {
    const int sym = static_cast<int>(t % 14);
    const int spread = (14 + g.per_slot - 1) / g.per_slot;
    const int step = std::max(g.duration, spread);
    if (sym % step != 0 || sym + g.duration > 14) return false;
    for (int k = 0; k < g.duration; ++k)
        if (symbol_dir(pattern, split, t + k) != g.dir) return false;
    return true;
}

// Scans forward one symbol at a time; -1 when nothing is found within two periods.
inline long long next_occasion(const std::string& pattern, Split split, const Grid& g, long long t) {
    const long long limit = t + 2 * static_cast<long long>(pattern.size()) * 14 + 14;
    for (; t <= limit; ++t)
        if (is_occasion(pattern, split, g, t)) return t;
    return -1;
}

struct Stage {
    Grid grid;
    int after;  // symbols spent after the stage starts
};

// Max over offsets o in [0, period) of (start of final stage - o); -1 if unusable.
inline long long worst_alignment_symbols(const std::string& pattern, Split split, const std::vector<Stage>& stages) {
    const long long period = static_cast<long long>(pattern.size()) * 14;
    long long worst = 0;
    for (long long o = 0; o < period; ++o) {
        long long t = o;
        for (std::size_t i = 0; i < stages.size(); ++i) {
            t = next_occasion(pattern, split, stages[i].grid, t);
            if (t < 0) return -1;
            if (i + 1 < stages.size()) t += stages[i].after;
        }
        worst = std::max(worst, t - o);
    }
    return worst;
}

// ---------------------------------------------------------------------------
// InF pathloss and LOS probability, typed in from TR 38.901
// ---------------------------------------------------------------------------

inline double lg(double x) { return std::log(x) / std::log(10.0); }

inline double inf_los_pl(double d3d, double fc) { return 31.84 + 21.50 * lg(d3d) + 19.00 * lg(fc); }
inline double inf_sh_pl(double d3d, double fc) { return std::max(inf_los_pl(d3d, fc), 32.40 + 23.00 * lg(d3d) + 20.00 * lg(fc)); }
inline double inf_dh_pl(double d3d, double fc) { return std::max(inf_los_pl(d3d, fc), 33.63 + 21.90 * lg(d3d) + 20.00 * lg(fc)); }

// InF-SH / InF-DH: exp(-d2d / k_subsce), k_subsce = -d_clutter / ln(1 - r) * (h_c - h_UT) / (h_BS - h_UT).
inline double inf_los_probability(double d2d, double r, double d_clutter, double h_c, double h_bs, double h_ut) {
    const double k = -d_clutter / std::log(1.0 - r) * (h_c - h_ut) / (h_bs - h_ut);
    return std::exp(-d2d / k);
}

// ---------------------------------------------------------------------------
// Max-min SE by exhaustive grid search for M = 2, K = 2
// ---------------------------------------------------------------------------

struct TinyInstance {
    double h2[2][2];  // |h_mk|^2
    double g2[2];     // |g_m1|^2, single test point
    double noise_ratio;
    double gamma;
};

inline double tiny_min_se(const TinyInstance& in, const double rho[2][2]) {
    const double s0 = rho[0][0] * in.h2[0][0] + rho[1][0] * in.h2[1][0];
    const double s1 = rho[0][1] * in.h2[0][1] + rho[1][1] * in.h2[1][1];
    const double se0 = std::log2(1.0 + s0 / (s1 + in.noise_ratio));
    const double se1 = std::log2(1.0 + s1 / (s0 + in.noise_ratio));
    return std::min(se0, se1);
}

// Best min-SE over rho on a `step` grid with per-AP sums <= 1 and, when
// `use_exclusion`, sum_mk rho_mk g2_m <= gamma.
inline double tiny_grid_maxmin(const TinyInstance& in, bool use_exclusion, double step = 0.01) {
    const int n = static_cast<int>(std::lround(1.0 / step));
    double best = 0.0;
    double rho[2][2];
    for (int a = 0; a <= n; ++a)
        for (int b = 0; a + b <= n; ++b)
            for (int c = 0; c <= n; ++c)
                for (int d = 0; c + d <= n; ++d) {
                    rho[0][0] = a * step;
                    rho[0][1] = b * step;
                    rho[1][0] = c * step;
                    rho[1][1] = d * step;
                    if (use_exclusion && (rho[0][0] + rho[0][1]) * in.g2[0] + (rho[1][0] + rho[1][1]) * in.g2[1] > in.gamma)
                        continue;
                    best = std::max(best, tiny_min_se(in, rho));
                }
    return best;
}

// ---------------------------------------------------------------------------
// NR transmission bandwidth from guard bands (TS 38.101 minimum guard band)
// ---------------------------------------------------------------------------

// N_RB = floor((BW - 2 * guard - scs) / (12 * scs)), all in kHz.
inline int rbs_from_guard_band(double bw_mhz, double scs_khz, double guard_khz) {
    return static_cast<int>(std::floor((bw_mhz * 1000.0 - 2.0 * guard_khz - scs_khz) / (12.0 * scs_khz) + 1e-9));
}

}  // namespace oracle
