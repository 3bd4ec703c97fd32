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

// Indoor-factory propagation: TR 38.901 InF pathloss, LOS probability and
// log-normal shadowing, UE dropping, and an image-method multipath
// synthesizer for a rectangular hall.

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "npnkit/common.hpp"

namespace npn {

class DegenerateGeometry : public ValidationError {
public:
    using ValidationError::ValidationError;
};

enum class InfScenario { DH, SH };

inline const char* to_string(InfScenario s) { return s == InfScenario::DH ? "InF-DH" : "InF-SH"; }

/// PL = intercept + distance_slope * log10(d3d [m]) + frequency_slope * log10(fc [GHz])
struct PathlossCoefficients {
    double intercept = 0.0;
    double distance_slope = 0.0;
    double frequency_slope = 0.0;

    double evaluate(double d3d_m, double carrier_ghz) const {
        return intercept + distance_slope * std::log10(d3d_m) + frequency_slope * std::log10(carrier_ghz);
    }

    friend bool operator==(const PathlossCoefficients&, const PathlossCoefficients&) = default;
};

/// InF rows of TR 38.901 Table 7.4.1-1. NLOS pathloss is floored by LOS.
struct InfPathlossTable {
    PathlossCoefficients los{31.84, 21.50, 19.00};
    PathlossCoefficients nlos_sh{32.40, 23.00, 20.00};
    PathlossCoefficients nlos_dh{33.63, 21.90, 20.00};
    double sigma_los_db = 4.3;
    double sigma_nlos_sh_db = 5.9;
    double sigma_nlos_dh_db = 4.0;

    const PathlossCoefficients& nlos(InfScenario s) const { return s == InfScenario::DH ? nlos_dh : nlos_sh; }

    double shadow_sigma_db(InfScenario s, bool los_state) const {
        if (los_state) return sigma_los_db;
        return s == InfScenario::DH ? sigma_nlos_dh_db : sigma_nlos_sh_db;
    }

    friend bool operator==(const InfPathlossTable&, const InfPathlossTable&) = default;
};

struct Hall {
    double length_m = 120.0;
    double width_m = 50.0;
    double height_m = 10.0;

    bool contains(const Point3& p) const {
        return p.x >= 0.0 && p.x <= length_m && p.y >= 0.0 && p.y <= width_m && p.z >= 0.0 && p.z <= height_m;
    }

    friend bool operator==(const Hall&, const Hall&) = default;
};

struct Clutter {
    double density = 0.60;
    double height_m = 6.0;
    double size_m = 2.0;

    friend bool operator==(const Clutter&, const Clutter&) = default;
};

/// gNBs at the centres of a rows x cols tiling of the hall floor plan.
inline std::vector<Point3> grid_layout(const Hall& hall, int rows, int cols, double height_m) {
    if (rows < 1 || cols < 1) throw ValidationError("gNB grid needs at least one row and column");
    std::vector<Point3> out;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            out.push_back({(c + 0.5) * hall.length_m / cols, (r + 0.5) * hall.width_m / rows, height_m});
    return out;
}

struct FactoryScenario {
    Hall hall;
    std::vector<Point3> gnb_positions;
    double ue_height_m = 1.5;
    Clutter clutter;
    InfScenario scenario_type = InfScenario::DH;
    double carrier_ghz = 3.8;
    std::uint64_t rng_seed = 1;
    InfPathlossTable pathloss_table;

    /// 120 x 50 x 10 m hall with 1, 3 or 12 ceiling gNBs at 8 m (1x1, 1x3 or 2x6 grid).
    static FactoryScenario default_hall(int n_gnbs, double carrier_ghz = 3.8) {
        FactoryScenario s;
        s.carrier_ghz = carrier_ghz;
        switch (n_gnbs) {
            case 1: s.gnb_positions = grid_layout(s.hall, 1, 1, 8.0); break;
            case 3: s.gnb_positions = grid_layout(s.hall, 1, 3, 8.0); break;
            case 12: s.gnb_positions = grid_layout(s.hall, 2, 6, 8.0); break;
            default: throw ValidationError("default hall layouts exist for 1, 3 or 12 gNBs");
        }
        return s;
    }

    /// Latency trade-off layout: 12 gNBs at 8 m with 20 m spacing, InF-SH clutter.
    static FactoryScenario trade_off_layout(double carrier_ghz = 4.0) {
        FactoryScenario s = default_hall(12, carrier_ghz);
        s.scenario_type = InfScenario::SH;
        return s;
    }

    double gnb_height_m() const { return gnb_positions.empty() ? 8.0 : gnb_positions.front().z; }

    void validate() const {
        if (!(hall.length_m > 0.0 && hall.width_m > 0.0 && hall.height_m > 0.0))
            throw ValidationError("hall dimensions must be positive");
        if (!(clutter.density > 0.0 && clutter.density < 1.0))
            throw ValidationError("clutter density must be in (0, 1)");
        if (!(clutter.size_m > 0.0) || clutter.height_m < 0.0) throw ValidationError("invalid clutter geometry");
        if (!(ue_height_m >= 0.0 && ue_height_m <= hall.height_m))
            throw ValidationError("UE height must lie inside the hall");
        for (const auto& p : gnb_positions)
            if (!hall.contains(p)) throw ValidationError("gNB position outside the hall");
        if (!(carrier_ghz >= 0.5 && carrier_ghz <= 100.0)) throw ValidationError("carrier must be in [0.5, 100] GHz");
    }

    friend bool operator==(const FactoryScenario&, const FactoryScenario&) = default;
};

/// InF LOS probability exp(-d2d / k) with
/// k = -d_clutter / ln(1 - r) * (h_c - h_ut) / (h_bs - h_ut) for the high-BS
/// sub-scenarios. Clutter no taller than the UE never blocks.
inline double los_probability(const Clutter& clutter, double d2d_m, double bs_height_m, double ue_height_m) {
    if (d2d_m < 0.0) throw ValidationError("distance must be non-negative");
    if (d2d_m == 0.0) return 1.0;
    if (clutter.height_m <= ue_height_m) return 1.0;
    if (!(bs_height_m > ue_height_m)) throw ValidationError("BS must be above the UE for InF-SH/DH");
    const double k =
        -clutter.size_m / std::log(1.0 - clutter.density) * (clutter.height_m - ue_height_m) / (bs_height_m - ue_height_m);
    return std::exp(-d2d_m / k);
}

inline double los_probability(const FactoryScenario& scenario, double d2d_m) {
    return los_probability(scenario.clutter, d2d_m, scenario.gnb_height_m(), scenario.ue_height_m);
}

inline double pathloss(InfScenario type, bool los_state, double d3d_m, double carrier_ghz,
                       const InfPathlossTable& table = {}) {
    if (!(d3d_m >= 1.0)) throw OutOfRange("3D distance must be at least 1 m");
    if (!(carrier_ghz >= 0.5 && carrier_ghz <= 100.0)) throw OutOfRange("carrier must be in [0.5, 100] GHz");
    const double pl_los = table.los.evaluate(d3d_m, carrier_ghz);
    if (los_state) return pl_los;
    return std::max(pl_los, table.nlos(type).evaluate(d3d_m, carrier_ghz));
}

/// Pathloss with LOS and NLOS mixed in the linear (gain) domain by the LOS
/// probability. Used for deterministic coverage maps.
inline double expected_pathloss(const FactoryScenario& s, const Point3& bs, const Point3& ue) {
    const double d3d = std::max(1.0, distance(bs, ue));
    const double p = los_probability(s.clutter, distance_2d(bs, ue), bs.z, ue.z);
    const double g_los = db_to_linear(-pathloss(s.scenario_type, true, d3d, s.carrier_ghz, s.pathloss_table));
    const double g_nlos = db_to_linear(-pathloss(s.scenario_type, false, d3d, s.carrier_ghz, s.pathloss_table));
    return -linear_to_db(p * g_los + (1.0 - p) * g_nlos);
}

struct LinkSample {
    double d2d_m = 0.0;
    double d3d_m = 0.0;
    bool los = false;
    double pathloss_db = 0.0;
    double shadow_db = 0.0;

    double total_loss_db() const { return pathloss_db + shadow_db; }
};

/// Draws LOS state and shadowing for one link; shadowing is independent per link.
inline LinkSample sample_link(const FactoryScenario& s, const Point3& bs, const Point3& ue, Rng& rng) {
    LinkSample l;
    l.d2d_m = distance_2d(bs, ue);
    l.d3d_m = std::max(1.0, distance(bs, ue));
    l.los = rng.uniform() < los_probability(s.clutter, l.d2d_m, bs.z, ue.z);
    l.pathloss_db = pathloss(s.scenario_type, l.los, l.d3d_m, s.carrier_ghz, s.pathloss_table);
    l.shadow_db = rng.normal(0.0, s.pathloss_table.shadow_sigma_db(s.scenario_type, l.los));
    return l;
}

/// Uniform UE positions at UE height. Position i depends only on (seed, i),
/// so drop_ues(s, n + 1, seed) extends drop_ues(s, n, seed).
inline std::vector<Point3> drop_ues(const FactoryScenario& s, int n, std::uint64_t seed) {
    if (n < 0) throw ValidationError("UE count must be non-negative");
    std::vector<Point3> out;
    out.reserve(static_cast<std::size_t>(n));
    Rng rng(seed);
    for (int i = 0; i < n; ++i) {
        const double x = rng.uniform(0.0, s.hall.length_m);
        const double y = rng.uniform(0.0, s.hall.width_m);
        out.push_back({x, y, s.ue_height_m});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Image-method multipath
// ---------------------------------------------------------------------------

struct Ray {
    std::complex<double> amplitude;
    double delay_s = 0.0;
    int reflections = 0;
};

/// H = sum_a A_a exp(-j w0 tau_a) over the ray set.
struct MultipathChannel {
    std::vector<Ray> rays;
    double carrier_hz = 0.0;

    std::size_t ray_count() const { return rays.size(); }

    std::complex<double> coefficient() const {
        const double w0 = 2.0 * kPi * carrier_hz;
        std::complex<double> h{0.0, 0.0};
        for (const auto& r : rays) h += r.amplitude * std::polar(1.0, -w0 * r.delay_s);
        return h;
    }

    double gain() const { return std::norm(coefficient()); }

    double power_sum() const {
        double p = 0.0;
        for (const auto& r : rays) p += std::norm(r.amplitude);
        return p;
    }
};

namespace detail {

struct AxisImage {
    double coordinate;
    int reflections;
};

/// Images of `source` along one axis of a [0, extent] slab: (1 - 2p) s + 2 m L
/// with |2m - p| wall crossings.
inline std::vector<AxisImage> axis_images(double source, double extent, int max_reflections) {
    std::vector<AxisImage> out;
    for (int m = -2; m <= 2; ++m) {
        for (int p = 0; p <= 1; ++p) {
            const int count = std::abs(2 * m - p);
            if (count > max_reflections) continue;
            out.push_back({(1 - 2 * p) * source + 2.0 * m * extent, count});
        }
    }
    std::sort(out.begin(), out.end(), [](const AxisImage& a, const AxisImage& b) {
        return a.reflections != b.reflections ? a.reflections < b.reflections : a.coordinate < b.coordinate;
    });
    return out;
}

}  // namespace detail

/// Specular rays from tx to rx off the six hall surfaces, up to
/// `max_reflections` bounces. Ray magnitude is the free-space amplitude
/// lambda / (4 pi d) times one reflection coefficient per bounce.
inline MultipathChannel synthesize_multipath(const Point3& tx, const Point3& rx, const Hall& hall, int max_reflections,
                                             double carrier_ghz, double wall_reflection_db = -3.0) {
    if (max_reflections < 0 || max_reflections > 3) throw ValidationError("max_reflections must be in 0..3");
    if (!(carrier_ghz > 0.0)) throw ValidationError("carrier must be positive");
    if (distance(tx, rx) < 1e-9) throw DegenerateGeometry("transmitter and receiver coincide");

    const double fc = carrier_ghz * 1e9;
    const double lambda = kSpeedOfLight / fc;
    const double bounce = std::pow(10.0, wall_reflection_db / 20.0);

    const auto xs = detail::axis_images(tx.x, hall.length_m, max_reflections);
    const auto ys = detail::axis_images(tx.y, hall.width_m, max_reflections);
    const auto zs = detail::axis_images(tx.z, hall.height_m, max_reflections);

    MultipathChannel ch;
    ch.carrier_hz = fc;
    for (int order = 0; order <= max_reflections; ++order) {
        for (const auto& ix : xs)
            for (const auto& iy : ys)
                for (const auto& iz : zs) {
                    if (ix.reflections + iy.reflections + iz.reflections != order) continue;
                    const double d = distance({ix.coordinate, iy.coordinate, iz.coordinate}, rx);
                    const double magnitude = lambda / (4.0 * kPi * d) * std::pow(bounce, order);
                    ch.rays.push_back({{magnitude, 0.0}, d / kSpeedOfLight, order});
                }
    }
    return ch;
}

}  // namespace npn
