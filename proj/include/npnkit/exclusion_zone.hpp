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

// Max-min spectral efficiency power allocation for a cell-free deployment
// with a received-power ceiling inside an exclusion volume.
//
// With S_k = sum_m rho_mk |h_mk|^2 and noise ratio n / P_T:
//
//   SE_k = log2(1 + S_k / (sum_{k' != k} S_k' + n / P_T))
//
// The covariance Q_k is taken as P_T diag(rho_1k .. rho_Mk), so the power
// at test point l is sum_k sum_m rho_mk |g_ml|^2 in units of P_T. Every
// constraint is then linear in rho and a fixed SINR target is an LP.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "npnkit/common.hpp"
#include "npnkit/lp_simplex.hpp"
#include "npnkit/propagation.hpp"

namespace npn {

struct CellFreeScenario {
    int M = 0;
    int K = 0;
    int L = 0;
    std::vector<std::complex<double>> h;  // [m * K + k]
    std::vector<std::complex<double>> g;  // [m * L + l]
    double p_t_mw = 200.0;
    double noise_mw = 1e-9;
    double gamma_norm = 1.0;

    std::vector<Point3> ap_positions;
    std::vector<Point3> user_positions;
    std::vector<Point3> test_points;

    double h2(int m, int k) const { return std::norm(h[static_cast<std::size_t>(m) * K + k]); }
    double g2(int m, int l) const { return std::norm(g[static_cast<std::size_t>(m) * L + l]); }
    double noise_ratio() const { return noise_mw / p_t_mw; }

    void validate() const {
        if (M < 1 || K < 1 || L < 1) throw ValidationError("M, K and L must be at least 1");
        if (h.size() != static_cast<std::size_t>(M) * K) throw ValidationError("h must be M x K");
        if (g.size() != static_cast<std::size_t>(M) * L) throw ValidationError("g must be M x L");
        if (!(p_t_mw > 0.0) || !(noise_mw > 0.0)) throw ValidationError("P_T and noise must be positive");
        if (!(gamma_norm > 0.0)) throw ValidationError("gamma_norm must be positive");
        for (const auto& v : h)
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw ValidationError("non-finite channel");
        for (const auto& v : g)
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw ValidationError("non-finite channel");
        for (int k = 0; k < K; ++k) {
            double sum = 0.0;
            for (int m = 0; m < M; ++m) sum += h2(m, k);
            if (!(sum > 0.0)) throw ValidationError("user " + std::to_string(k) + " has an all-zero channel");
        }
    }
};

struct PowerAllocation {
    int M = 0;
    int K = 0;
    std::vector<double> rho;  // [m * K + k]

    static PowerAllocation zeros(int m, int k) { return {m, k, std::vector<double>(static_cast<std::size_t>(m) * k, 0.0)}; }

    /// Every AP at full power split evenly over users.
    static PowerAllocation uniform(int m, int k) {
        return {m, k, std::vector<double>(static_cast<std::size_t>(m) * k, 1.0 / k)};
    }

    double operator()(int m, int k) const { return rho[static_cast<std::size_t>(m) * K + k]; }
    double& operator()(int m, int k) { return rho[static_cast<std::size_t>(m) * K + k]; }

    double ap_load(int m) const {
        double s = 0.0;
        for (int k = 0; k < K; ++k) s += (*this)(m, k);
        return s;
    }
};

inline std::vector<double> user_signals(const CellFreeScenario& s, const PowerAllocation& rho) {
    std::vector<double> sig(static_cast<std::size_t>(s.K), 0.0);
    for (int m = 0; m < s.M; ++m)
        for (int k = 0; k < s.K; ++k) sig[static_cast<std::size_t>(k)] += rho(m, k) * s.h2(m, k);
    return sig;
}

inline std::vector<double> user_sinrs(const CellFreeScenario& s, const PowerAllocation& rho) {
    const auto sig = user_signals(s, rho);
    double total = 0.0;
    for (double v : sig) total += v;
    std::vector<double> out(sig.size());
    for (std::size_t k = 0; k < sig.size(); ++k) out[k] = sig[k] / (total - sig[k] + s.noise_ratio());
    return out;
}

inline double user_se(const CellFreeScenario& s, const PowerAllocation& rho, int k) {
    if (k < 0 || k >= s.K) throw ValidationError("user index out of range");
    return std::log2(1.0 + user_sinrs(s, rho)[static_cast<std::size_t>(k)]);
}

inline std::vector<double> all_user_se(const CellFreeScenario& s, const PowerAllocation& rho) {
    auto v = user_sinrs(s, rho);
    for (auto& x : v) x = std::log2(1.0 + x);
    return v;
}

/// Received power at test point l in units of P_T.
inline double exclusion_power(const CellFreeScenario& s, const PowerAllocation& rho, int l) {
    if (l < 0 || l >= s.L) throw ValidationError("test point index out of range");
    double p = 0.0;
    for (int m = 0; m < s.M; ++m) {
        const double gm = s.g2(m, l);
        for (int k = 0; k < s.K; ++k) p += rho(m, k) * gm;
    }
    return p;
}

inline std::vector<double> all_exclusion_power(const CellFreeScenario& s, const PowerAllocation& rho) {
    std::vector<double> out(static_cast<std::size_t>(s.L));
    for (int l = 0; l < s.L; ++l) out[static_cast<std::size_t>(l)] = exclusion_power(s, rho, l);
    return out;
}

/// Largest relative violation of the allocation constraints: rho >= 0,
/// per-AP sum <= 1 and, when requested, per-point power <= gamma.
inline double constraint_residual(const CellFreeScenario& s, const PowerAllocation& rho, bool use_exclusion) {
    double worst = 0.0;
    for (double r : rho.rho) worst = std::max(worst, -r);
    for (int m = 0; m < s.M; ++m) worst = std::max(worst, rho.ap_load(m) - 1.0);
    if (use_exclusion)
        for (int l = 0; l < s.L; ++l) worst = std::max(worst, exclusion_power(s, rho, l) / s.gamma_norm - 1.0);
    return worst;
}

/// Bound on the common SINR: every AP serving one user alone at full power,
/// and 1 / (K - 1) from the additive interference term.
inline double sinr_upper_bound(const CellFreeScenario& s) {
    double best = 0.0;
    for (int k = 0; k < s.K; ++k) {
        double sum = 0.0;
        for (int m = 0; m < s.M; ++m) sum += s.h2(m, k);
        best = std::max(best, sum / s.noise_ratio());
    }
    if (s.K > 1) best = std::min(best, 1.0 / (s.K - 1));
    return best;
}

namespace detail {

inline constexpr double kTargetMargin = 1e-9;
inline constexpr double kBudgetMargin = 1e-10;

/// Clamp round-off and pull the witness back inside the allocation set.
inline void clean_allocation(const CellFreeScenario& s, PowerAllocation& rho, bool use_exclusion) {
    for (auto& r : rho.rho) r = std::max(0.0, r);
    for (int m = 0; m < s.M; ++m) {
        const double load = rho.ap_load(m);
        if (load > 1.0)
            for (int k = 0; k < s.K; ++k) rho(m, k) /= load;
    }
    if (use_exclusion) {
        double worst = 0.0;
        for (int l = 0; l < s.L; ++l) worst = std::max(worst, exclusion_power(s, rho, l) / s.gamma_norm);
        if (worst > 1.0)
            for (auto& r : rho.rho) r /= worst;
    }
}

}  // namespace detail

/// Minimum-total-power allocation meeting SINR >= sinr_target for every
/// user, or nullopt when none exists.
///
/// The smallest signal vector meeting every SINR constraint gives each user
/// the same received signal S* = t n / (1 + t - t K), which exists only for
/// t (K - 1) < 1. Any allocation with S_k >= S* can be scaled down per user
/// to hit S* exactly, so the coupled SINR rows reduce to S_k >= S*.
inline std::optional<PowerAllocation> feasibility_lp(const CellFreeScenario& s, double sinr_target,
                                                     bool use_exclusion) {
    if (!(sinr_target >= 0.0)) throw ValidationError("sinr_target must be non-negative");
    const double denom = 1.0 + sinr_target - sinr_target * s.K;
    if (!(denom > 0.0)) return std::nullopt;
    const double s_star = sinr_target * s.noise_ratio() / denom;

    const int n = s.M * s.K;
    const int rows = s.M + (sinr_target > 0.0 ? s.K : 0) + (use_exclusion ? s.L : 0);
    std::vector<double> a(static_cast<std::size_t>(rows) * n, 0.0);
    std::vector<double> b(static_cast<std::size_t>(rows), 0.0);
    std::vector<double> c(static_cast<std::size_t>(n), -1.0);
    auto col = [&](int m, int k) { return static_cast<std::size_t>(m) * s.K + k; };
    int r = 0;

    for (int m = 0; m < s.M; ++m, ++r) {
        for (int k = 0; k < s.K; ++k) a[static_cast<std::size_t>(r) * n + col(m, k)] = 1.0;
        b[static_cast<std::size_t>(r)] = 1.0 - detail::kBudgetMargin;
    }

    // -S_k / S* <= -(1 + margin)
    if (sinr_target > 0.0) {
        for (int k = 0; k < s.K; ++k, ++r) {
            for (int m = 0; m < s.M; ++m) a[static_cast<std::size_t>(r) * n + col(m, k)] = -s.h2(m, k) / s_star;
            b[static_cast<std::size_t>(r)] = -(1.0 + detail::kTargetMargin);
        }
    }

    if (use_exclusion) {
        for (int l = 0; l < s.L; ++l, ++r) {
            for (int m = 0; m < s.M; ++m) {
                const double gt = s.g2(m, l) / s.gamma_norm;
                for (int k = 0; k < s.K; ++k) a[static_cast<std::size_t>(r) * n + col(m, k)] = gt;
            }
            b[static_cast<std::size_t>(r)] = 1.0 - detail::kBudgetMargin;
        }
    }

    // Column equilibration: x_j = colmax_j * rho_j keeps every coefficient
    // in [-1, 1] with unit right-hand sides, so the simplex tolerances are
    // relative even when the exclusion rows force rho far below 1.
    std::vector<double> colmax(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < n; ++j)
            colmax[static_cast<std::size_t>(j)] =
                std::max(colmax[static_cast<std::size_t>(j)], std::abs(a[static_cast<std::size_t>(i) * n + j]));
    double cmax = 0.0;
    for (double v : colmax) cmax = std::max(cmax, 1.0 / v);
    for (int j = 0; j < n; ++j) {
        const double cj = colmax[static_cast<std::size_t>(j)];
        for (int i = 0; i < rows; ++i) a[static_cast<std::size_t>(i) * n + j] /= cj;
        c[static_cast<std::size_t>(j)] = -(1.0 / cj) / cmax;
    }

    const auto res = solve_lp(a, b, c);
    if (res.status == LpStatus::Infeasible) return std::nullopt;
    if (res.status == LpStatus::Unbounded) throw SolverFailure("bounded power LP reported unbounded");
    std::vector<double> x = res.x;
    for (int j = 0; j < n; ++j) x[static_cast<std::size_t>(j)] /= colmax[static_cast<std::size_t>(j)];
    PowerAllocation rho{s.M, s.K, std::move(x)};
    if (sinr_target > 0.0) {
        // pull every user's signal onto S* from above
        const auto sig = user_signals(s, rho);
        for (int k = 0; k < s.K; ++k) {
            const double sk = sig[static_cast<std::size_t>(k)];
            if (!(sk > 0.0)) throw SolverFailure("LP witness leaves a user without signal");
            const double f = std::min(1.0, s_star / sk);
            for (int m = 0; m < s.M; ++m) rho(m, k) *= f;
        }
    }
    detail::clean_allocation(s, rho, use_exclusion);
    if (sinr_target > 0.0) {
        const auto sinr = user_sinrs(s, rho);
        for (double v : sinr)
            if (!(v >= sinr_target * (1.0 - 1e-6))) throw SolverFailure("LP witness misses the SINR target");
    }
    return rho;
}

struct MaxMinResult {
    PowerAllocation rho;
    double min_se = 0.0;
    std::vector<double> per_user_se;
    std::vector<double> per_point_power;
    int bisection_iterations = 0;
    double sinr_target = 0.0;
};

inline MaxMinResult evaluate_allocation(const CellFreeScenario& s, const PowerAllocation& rho) {
    MaxMinResult r;
    r.rho = rho;
    r.per_user_se = all_user_se(s, rho);
    r.min_se = *std::min_element(r.per_user_se.begin(), r.per_user_se.end());
    r.per_point_power = all_exclusion_power(s, rho);
    return r;
}

/// Upper bound on bisection steps for a gap `tol_bits` over [0, se_max].
inline int bisection_iteration_bound(double se_max, double tol_bits) {
    return std::max(0, static_cast<int>(std::ceil(std::log2(se_max / tol_bits))));
}

/// Bisection on the common SE level over [0, log2(1 + t_max)]. Probes are
/// the same dyadic points for every gamma, so the result is monotone in gamma.
inline MaxMinResult solve_maxmin(const CellFreeScenario& s, bool use_exclusion, double tol_bits = 1e-4) {
    if (!(tol_bits > 0.0)) throw ValidationError("tol_bits must be positive");
    s.validate();
    if (!feasibility_lp(s, 0.0, use_exclusion)) throw SolverFailure("zero target reported infeasible");

    const double se_max = std::log2(1.0 + sinr_upper_bound(s));
    double lo = 0.0;
    double hi = se_max;
    PowerAllocation best = PowerAllocation::zeros(s.M, s.K);
    int iterations = 0;
    while (hi - lo > tol_bits) {
        const double mid = 0.5 * (lo + hi);
        ++iterations;
        if (auto w = feasibility_lp(s, std::exp2(mid) - 1.0, use_exclusion)) {
            lo = mid;
            best = std::move(*w);
        } else {
            hi = mid;
        }
    }
    MaxMinResult r = evaluate_allocation(s, best);
    r.bisection_iterations = iterations;
    r.sinr_target = std::exp2(lo) - 1.0;
    return r;
}

// ---------------------------------------------------------------------------
// Reference factory scenario
// ---------------------------------------------------------------------------

struct Table15Params {
    Hall hall{30.0, 15.0, 5.0};
    double ap_spacing_m = 2.5;
    double ap_height_m = 4.0;
    int users = 112;
    double user_height_m = 1.5;
    Point3 zone_center{15.0, 7.5, 0.0};
    double zone_length_m = 1.0;
    double zone_width_m = 1.0;
    double zone_height_m = 1.5;
    /// Users are kept this far outside the zone footprint.
    double zone_clearance_m = 0.5;
    double carrier_ghz = 30.0;
    int max_reflections = 2;
    double wall_reflection_db = -3.0;
    double p_t_mw = 200.0;
    double gamma_dbm = -120.0;
    double bandwidth_hz = 100e6;
    double noise_figure_db = 9.0;

    friend bool operator==(const Table15Params&, const Table15Params&) = default;
};

inline double gamma_norm_from_dbm(double gamma_dbm, double p_t_mw) { return dbm_to_mw(gamma_dbm) / p_t_mw; }

/// 72 ceiling APs on a 2.5 m grid over a 30 x 15 m hall, 112 users dropped
/// uniformly outside the zone, 8 test points at the zone vertices.
inline CellFreeScenario table15_scenario(std::uint64_t seed, const Table15Params& p = {}) {
    CellFreeScenario s;
    const int nx = static_cast<int>(std::lround(p.hall.length_m / p.ap_spacing_m));
    const int ny = static_cast<int>(std::lround(p.hall.width_m / p.ap_spacing_m));
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i)
            s.ap_positions.push_back({(i + 0.5) * p.ap_spacing_m, (j + 0.5) * p.ap_spacing_m, p.ap_height_m});

    for (double dz : {0.0, p.zone_height_m})
        for (double dy : {-0.5, 0.5})
            for (double dx : {-0.5, 0.5})
                s.test_points.push_back({p.zone_center.x + dx * p.zone_length_m, p.zone_center.y + dy * p.zone_width_m,
                                         p.zone_center.z + dz});

    Rng rng(seed);
    const double hx = 0.5 * p.zone_length_m + p.zone_clearance_m;
    const double hy = 0.5 * p.zone_width_m + p.zone_clearance_m;
    while (static_cast<int>(s.user_positions.size()) < p.users) {
        const double x = rng.uniform(0.0, p.hall.length_m);
        const double y = rng.uniform(0.0, p.hall.width_m);
        if (std::abs(x - p.zone_center.x) <= hx && std::abs(y - p.zone_center.y) <= hy) continue;
        s.user_positions.push_back({x, y, p.user_height_m});
    }

    s.M = static_cast<int>(s.ap_positions.size());
    s.K = p.users;
    s.L = static_cast<int>(s.test_points.size());
    s.h.resize(static_cast<std::size_t>(s.M) * s.K);
    s.g.resize(static_cast<std::size_t>(s.M) * s.L);
    for (int m = 0; m < s.M; ++m) {
        for (int k = 0; k < s.K; ++k)
            s.h[static_cast<std::size_t>(m) * s.K + k] =
                synthesize_multipath(s.ap_positions[static_cast<std::size_t>(m)],
                                     s.user_positions[static_cast<std::size_t>(k)], p.hall, p.max_reflections,
                                     p.carrier_ghz, p.wall_reflection_db)
                    .coefficient();
        for (int l = 0; l < s.L; ++l)
            s.g[static_cast<std::size_t>(m) * s.L + l] =
                synthesize_multipath(s.ap_positions[static_cast<std::size_t>(m)],
                                     s.test_points[static_cast<std::size_t>(l)], p.hall, p.max_reflections,
                                     p.carrier_ghz, p.wall_reflection_db)
                    .coefficient();
    }
    s.p_t_mw = p.p_t_mw;
    s.noise_mw = dbm_to_mw(thermal_noise_dbm(p.bandwidth_hz, p.noise_figure_db));
    s.gamma_norm = gamma_norm_from_dbm(p.gamma_dbm, p.p_t_mw);
    return s;
}

}  // namespace npn
