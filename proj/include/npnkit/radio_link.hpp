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

// Link budgets for omni, DAS and AAS deployments.
//
// All SINR evaluation goes through LinkSnapshot: a cells x UEs matrix of
// coupling losses (pathloss plus shadowing, antenna gains excluded) with a
// serving-cell assignment. DAS heads are merged into a single cell whose
// loss is the power sum over heads.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "npnkit/airlink_timing.hpp"
#include "npnkit/common.hpp"
#include "npnkit/propagation.hpp"

namespace npn {

class NoGnb : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// ---------------------------------------------------------------------------
// Band
// ---------------------------------------------------------------------------

enum class Duplex { FDD, TDD };

inline const char* to_string(Duplex d) { return d == Duplex::FDD ? "FDD" : "TDD"; }

struct BandConfig {
    std::string name;
    Duplex duplex = Duplex::TDD;
    double carrier_ghz = 3.8;
    /// Per direction for FDD, shared for TDD.
    double bandwidth_mhz = 100.0;
    int scs_khz = 30;
    std::optional<TddPattern> tdd_pattern;
    int tti_symbols = 14;

    Numerology numerology() const { return Numerology::from_khz(scs_khz); }

    /// FDD bands time-share nothing: one paired slot carries both directions.
    TddPattern pattern() const { return duplex == Duplex::FDD ? TddPattern::fdd() : *tdd_pattern; }

    double bandwidth_hz() const { return bandwidth_mhz * 1e6; }

    void validate() const {
        if (duplex == Duplex::FDD && tdd_pattern) throw ValidationError("FDD band must not carry a TDD pattern");
        if (duplex == Duplex::TDD && !tdd_pattern) throw ValidationError("TDD band needs a TDD pattern");
        if (tdd_pattern && tdd_pattern->is_fdd()) throw ValidationError("TDD pattern must use D/U/S slots");
        if (!(carrier_ghz >= 0.5 && carrier_ghz <= 100.0)) throw ValidationError("carrier_ghz must be in [0.5, 100]");
        if (!(bandwidth_mhz > 0.0)) throw ValidationError("bandwidth_mhz must be positive");
        (void)numerology();
        if (tti_symbols < 2 || tti_symbols > kSymbolsPerSlot) throw ValidationError("tti_symbols must be in 2..14");
    }

    static BandConfig fdd2100() { return {"fdd2100", Duplex::FDD, 2.1, 20.0, 30, std::nullopt, 14}; }

    static BandConfig tdd3800(std::string_view pattern = "DDDSU", int tti = 14) {
        return {"tdd3800", Duplex::TDD, 3.8, 100.0, 30, TddPattern::parse(pattern), tti};
    }

    static BandConfig tdd26000(std::string_view pattern = "DDDSU", int tti = 14) {
        return {"tdd26000", Duplex::TDD, 26.0, 400.0, 120, TddPattern::parse(pattern), tti};
    }

    friend bool operator==(const BandConfig&, const BandConfig&) = default;
};

// ---------------------------------------------------------------------------
// Radio
// ---------------------------------------------------------------------------

enum class AntennaKind { Omni, Das, Aas };

inline const char* to_string(AntennaKind k) {
    switch (k) {
        case AntennaKind::Omni: return "omni";
        case AntennaKind::Das: return "das";
        case AntennaKind::Aas: return "aas";
    }
    return "?";
}

struct Panel {
    int rows = 4;
    int cols = 4;
    int pol = 2;
    double element_gain_dbi = 5.0;

    int elements() const { return rows * cols * pol; }

    void validate() const {
        if (rows < 1 || cols < 1 || pol < 1 || pol > 2) throw ValidationError("panel must be rows x cols x {1,2}");
    }

    friend bool operator==(const Panel&, const Panel&) = default;
};

/// Fixed array gain toward the served UE; interfering links see the same
/// array gain less a flat suppression.
inline double beamforming_gain(const Panel& panel, bool serving, double suppression_db = 20.0) {
    panel.validate();
    const double g = panel.element_gain_dbi + 10.0 * std::log10(static_cast<double>(panel.elements()));
    return serving ? g : g - suppression_db;
}

struct AntennaConfig {
    AntennaKind kind = AntennaKind::Omni;
    double omni_gain_dbi = 2.0;
    double das_head_gain_dbi = 0.0;
    Panel panel;
    double suppression_db = 20.0;

    double serving_gain_dbi() const {
        switch (kind) {
            case AntennaKind::Omni: return omni_gain_dbi;
            case AntennaKind::Das: return das_head_gain_dbi;
            case AntennaKind::Aas: return beamforming_gain(panel, true, suppression_db);
        }
        return 0.0;
    }

    double interfering_gain_dbi() const {
        return kind == AntennaKind::Aas ? beamforming_gain(panel, false, suppression_db) : serving_gain_dbi();
    }

    friend bool operator==(const AntennaConfig&, const AntennaConfig&) = default;
};

struct UlPowerControl {
    double snr_target_db = 10.0;
    double alpha = 0.8;

    friend bool operator==(const UlPowerControl&, const UlPowerControl&) = default;
};

struct RadioConfig {
    AntennaConfig antenna;
    double gnb_tx_dbm = 30.0;
    double ue_tx_max_dbm = 23.0;
    double ue_gain_dbi = 0.0;
    double gnb_nf_db = 7.0;
    double ue_nf_db = 6.0;
    UlPowerControl ul_pc;

    void validate() const {
        if (antenna.kind == AntennaKind::Aas) antenna.panel.validate();
        if (antenna.suppression_db < 0.0) throw ValidationError("suppression_db must be non-negative");
        if (!(ul_pc.alpha >= 0.0 && ul_pc.alpha <= 1.0)) throw ValidationError("ul_pc alpha must be in [0, 1]");
        if (gnb_nf_db < 0.0 || ue_nf_db < 0.0) throw ValidationError("noise figures must be non-negative");
    }

    /// Omni / DAS / AAS rows for a band preset; unknown names fall back to mid-band values.
    static RadioConfig preset(std::string_view band_name, AntennaKind kind) {
        RadioConfig r;
        r.antenna.kind = kind;
        if (band_name == "fdd2100") {
            r.gnb_nf_db = 7.0;
            r.ue_nf_db = 6.0;
        } else if (band_name == "tdd26000") {
            r.gnb_nf_db = 7.0;
            r.ue_nf_db = 10.0;
            r.ue_gain_dbi = 9.0;
        } else {
            r.gnb_nf_db = 5.0;
            r.ue_nf_db = 9.0;
        }
        if (kind == AntennaKind::Das) r.gnb_nf_db = 19.0;
        return r;
    }

    friend bool operator==(const RadioConfig&, const RadioConfig&) = default;
};

/// Fractional open-loop UL power: min(Pmax, P0 + alpha * PL) with
/// P0 = SNR target + thermal noise over the allocation + gNB noise figure.
inline double ul_tx_power(double pathloss_db, const RadioConfig& config, double allocated_bw_hz) {
    if (!(allocated_bw_hz > 0.0)) throw ValidationError("allocated bandwidth must be positive");
    const double p0 = config.ul_pc.snr_target_db + thermal_noise_dbm(allocated_bw_hz, config.gnb_nf_db);
    return std::min(config.ue_tx_max_dbm, p0 + config.ul_pc.alpha * pathloss_db);
}

// ---------------------------------------------------------------------------
// Link adaptation
// ---------------------------------------------------------------------------

struct LinkAdaptation {
    double efficiency = 0.75;
    double backoff_db_per_decade = 1.0;
    double max_se = 7.4;

    friend bool operator==(const LinkAdaptation&, const LinkAdaptation&) = default;
};

/// Attenuated Shannon: min(max_se, eta * log2(1 + SINR / backoff)) with a
/// backoff of k dB per decade of BLER target.
inline double sinr_to_se(double sinr_db, double bler_target, const LinkAdaptation& la = {}) {
    if (!(bler_target > 0.0 && bler_target < 1.0)) throw ValidationError("bler_target must be in (0, 1)");
    if (std::isnan(sinr_db)) throw ValidationError("SINR is NaN");
    const double backoff = -la.backoff_db_per_decade * std::log10(bler_target);
    const double se = la.efficiency * std::log2(1.0 + db_to_linear(sinr_db - backoff));
    return std::min(la.max_se, se);
}

inline double sinr_to_se(double sinr_db, double bler_target, double max_se) {
    LinkAdaptation la;
    la.max_se = max_se;
    return sinr_to_se(sinr_db, bler_target, la);
}

// ---------------------------------------------------------------------------
// Snapshot evaluation
// ---------------------------------------------------------------------------

class LinkSnapshot {
public:
    /// Deterministic losses: LOS-probability-weighted pathloss, median shadowing.
    static LinkSnapshot median(const FactoryScenario& scenario, const RadioConfig& radio,
                               const std::vector<Point3>& ues) {
        return build(scenario, radio, ues, [&](const Point3& bs, const Point3& ue, std::size_t, std::size_t) {
            return expected_pathloss(scenario, bs, ue);
        });
    }

    /// Random LOS state and shadowing per link. UE u draws its links to all
    /// gNBs in order from an independent stream derive_seed(seed, u).
    static LinkSnapshot sampled(const FactoryScenario& scenario, const RadioConfig& radio,
                                const std::vector<Point3>& ues, std::uint64_t seed) {
        std::vector<std::vector<double>> per_ue(ues.size());
        for (std::size_t u = 0; u < ues.size(); ++u) {
            Rng rng(derive_seed(seed, u));
            per_ue[u].reserve(scenario.gnb_positions.size());
            for (const auto& bs : scenario.gnb_positions)
                per_ue[u].push_back(sample_link(scenario, bs, ues[u], rng).total_loss_db());
        }
        return build(scenario, radio, ues,
                     [&](const Point3&, const Point3&, std::size_t g, std::size_t u) { return per_ue[u][g]; });
    }

    std::size_t cells() const { return loss_db_.size(); }
    std::size_t ues() const { return serving_.size(); }
    int serving_cell(std::size_t u) const { return serving_[u]; }
    double coupling_loss_db(std::size_t cell, std::size_t u) const { return loss_db_[cell][u]; }

    /// UEs attached to each cell.
    std::vector<int> cell_load() const {
        std::vector<int> out(cells(), 0);
        for (int s : serving_) ++out[static_cast<std::size_t>(s)];
        return out;
    }

    std::vector<double> dl_sinr_db(const BandConfig& band, const RadioConfig& radio,
                                   const std::vector<double>& activity) const {
        check_activity(activity);
        const double g_srv = radio.antenna.serving_gain_dbi();
        const double g_int = radio.antenna.interfering_gain_dbi();
        const double noise = dbm_to_mw(thermal_noise_dbm(band.bandwidth_hz(), radio.ue_nf_db));
        std::vector<double> out(ues());
        for (std::size_t u = 0; u < ues(); ++u) {
            const auto s = static_cast<std::size_t>(serving_[u]);
            const double signal = dbm_to_mw(radio.gnb_tx_dbm + g_srv + radio.ue_gain_dbi - loss_db_[s][u]);
            double interference = 0.0;
            for (std::size_t c = 0; c < cells(); ++c) {
                if (c == s || activity[c] <= 0.0) continue;
                interference += activity[c] * dbm_to_mw(radio.gnb_tx_dbm + g_int + radio.ue_gain_dbi - loss_db_[c][u]);
            }
            out[u] = linear_to_db(signal / (interference + noise));
        }
        return out;
    }

    /// UL interference at cell c from cell j is activity_j times the mean
    /// received power over the UEs attached to j.
    std::vector<double> ul_sinr_db(const BandConfig& band, const RadioConfig& radio,
                                   const std::vector<double>& activity) const {
        check_activity(activity);
        const double g_srv = radio.antenna.serving_gain_dbi();
        const double g_int = radio.antenna.interfering_gain_dbi();
        const double bw = band.bandwidth_hz();
        const double noise = dbm_to_mw(thermal_noise_dbm(bw, radio.gnb_nf_db));

        std::vector<double> tx(ues());
        for (std::size_t u = 0; u < ues(); ++u) {
            const auto s = static_cast<std::size_t>(serving_[u]);
            tx[u] = ul_tx_power(loss_db_[s][u] - g_srv - radio.ue_gain_dbi, radio, bw);
        }

        // interference[c]: expected power at cell c from one active UE of each other cell
        std::vector<double> interference(cells(), 0.0);
        const auto load = cell_load();
        for (std::size_t c = 0; c < cells(); ++c) {
            std::vector<double> sum_from(cells(), 0.0);
            for (std::size_t v = 0; v < ues(); ++v) {
                const auto j = static_cast<std::size_t>(serving_[v]);
                if (j == c) continue;
                sum_from[j] += dbm_to_mw(tx[v] + g_int + radio.ue_gain_dbi - loss_db_[c][v]);
            }
            for (std::size_t j = 0; j < cells(); ++j)
                if (j != c && load[j] > 0) interference[c] += activity[j] * sum_from[j] / load[j];
        }

        std::vector<double> out(ues());
        for (std::size_t u = 0; u < ues(); ++u) {
            const auto s = static_cast<std::size_t>(serving_[u]);
            const double signal = dbm_to_mw(tx[u] + g_srv + radio.ue_gain_dbi - loss_db_[s][u]);
            out[u] = linear_to_db(signal / (interference[s] + noise));
        }
        return out;
    }

    std::vector<double> sinr_db(Direction d, const BandConfig& band, const RadioConfig& radio,
                                const std::vector<double>& activity) const {
        return d == Direction::DL ? dl_sinr_db(band, radio, activity) : ul_sinr_db(band, radio, activity);
    }

private:
    std::vector<std::vector<double>> loss_db_;  // [cell][ue]
    std::vector<int> serving_;

    void check_activity(const std::vector<double>& activity) const {
        if (activity.size() != cells()) throw ValidationError("one activity value per cell required");
        for (double a : activity)
            if (!(a >= 0.0 && a <= 1.0)) throw ValidationError("interferer activity must be in [0, 1]");
    }

    template <class LossFn>
    static LinkSnapshot build(const FactoryScenario& scenario, const RadioConfig& radio,
                              const std::vector<Point3>& ues, LossFn&& loss) {
        if (scenario.gnb_positions.empty()) throw NoGnb("scenario has no gNB");
        const std::size_t heads = scenario.gnb_positions.size();
        LinkSnapshot snap;
        if (radio.antenna.kind == AntennaKind::Das) {
            snap.loss_db_.assign(1, std::vector<double>(ues.size()));
            for (std::size_t u = 0; u < ues.size(); ++u) {
                double gain = 0.0;
                for (std::size_t g = 0; g < heads; ++g)
                    gain += db_to_linear(-loss(scenario.gnb_positions[g], ues[u], g, u));
                snap.loss_db_[0][u] = -linear_to_db(gain);
            }
            snap.serving_.assign(ues.size(), 0);
            return snap;
        }
        snap.loss_db_.assign(heads, std::vector<double>(ues.size()));
        for (std::size_t g = 0; g < heads; ++g)
            for (std::size_t u = 0; u < ues.size(); ++u)
                snap.loss_db_[g][u] = loss(scenario.gnb_positions[g], ues[u], g, u);
        // equal tx power and antenna gain per cell: strongest received = smallest loss
        snap.serving_.resize(ues.size());
        for (std::size_t u = 0; u < ues.size(); ++u) {
            std::size_t best = 0;
            for (std::size_t g = 1; g < heads; ++g)
                if (snap.loss_db_[g][u] < snap.loss_db_[best][u]) best = g;
            snap.serving_[u] = static_cast<int>(best);
        }
        return snap;
    }
};

// ---------------------------------------------------------------------------
// Single-point and grid evaluation
// ---------------------------------------------------------------------------

struct SinrMap {
    std::vector<std::vector<double>> grid;  // [row = y][col = x]
    double resolution_m = 1.0;
    double z_m = 1.5;
    Direction direction = Direction::DL;

    std::size_t rows() const { return grid.size(); }
    std::size_t cols() const { return grid.empty() ? 0 : grid.front().size(); }

    double x_at(std::size_t col) const { return (static_cast<double>(col) + 0.5) * resolution_m; }
    double y_at(std::size_t row) const { return (static_cast<double>(row) + 0.5) * resolution_m; }

    double min() const {
        double m = std::numeric_limits<double>::infinity();
        for (const auto& r : grid)
            for (double v : r) m = std::min(m, v);
        return m;
    }

    double max() const {
        double m = -std::numeric_limits<double>::infinity();
        for (const auto& r : grid)
            for (double v : r) m = std::max(m, v);
        return m;
    }
};

/// Grid points at cell centres (i + 0.5) * resolution.
inline std::vector<Point3> hall_grid_points(const Hall& hall, double resolution_m, double z_m, std::size_t* rows = nullptr,
                                            std::size_t* cols = nullptr) {
    if (!(resolution_m > 0.0)) throw ValidationError("resolution must be positive");
    const auto nx = static_cast<std::size_t>(std::ceil(hall.length_m / resolution_m - 1e-9));
    const auto ny = static_cast<std::size_t>(std::ceil(hall.width_m / resolution_m - 1e-9));
    std::vector<Point3> pts;
    pts.reserve(nx * ny);
    for (std::size_t r = 0; r < ny; ++r)
        for (std::size_t c = 0; c < nx; ++c)
            pts.push_back({(c + 0.5) * resolution_m, (r + 0.5) * resolution_m, z_m});
    if (rows) *rows = ny;
    if (cols) *cols = nx;
    return pts;
}

/// UL interferers default to a 5 m grid population over the hall.
inline constexpr double kDefaultInterfererGridM = 5.0;

inline double dl_sinr(const Point3& ue, const FactoryScenario& scenario, const BandConfig& band,
                      const RadioConfig& radio, double interferer_activity) {
    const auto snap = LinkSnapshot::median(scenario, radio, {ue});
    return snap.dl_sinr_db(band, radio, std::vector<double>(snap.cells(), interferer_activity)).front();
}

inline double ul_sinr(const Point3& ue, const FactoryScenario& scenario, const BandConfig& band,
                      const RadioConfig& radio, double interferer_activity, std::vector<Point3> interferers = {}) {
    if (interferers.empty())
        interferers = hall_grid_points(scenario.hall, kDefaultInterfererGridM, scenario.ue_height_m);
    std::vector<Point3> population{ue};
    population.insert(population.end(), interferers.begin(), interferers.end());
    const auto snap = LinkSnapshot::median(scenario, radio, population);
    return snap.ul_sinr_db(band, radio, std::vector<double>(snap.cells(), interferer_activity)).front();
}

/// SINR heatmap at UE height with median shadowing. For UL the grid points
/// themselves form the interfering population.
inline SinrMap sinr_grid(const FactoryScenario& scenario, const BandConfig& band, const RadioConfig& radio,
                         Direction direction, double resolution_m, double activity) {
    std::size_t rows = 0, cols = 0;
    const auto pts = hall_grid_points(scenario.hall, resolution_m, scenario.ue_height_m, &rows, &cols);
    const auto snap = LinkSnapshot::median(scenario, radio, pts);
    const auto values = snap.sinr_db(direction, band, radio, std::vector<double>(snap.cells(), activity));
    SinrMap map;
    map.resolution_m = resolution_m;
    map.z_m = scenario.ue_height_m;
    map.direction = direction;
    map.grid.assign(rows, std::vector<double>(cols));
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) map.grid[r][c] = values[r * cols + c];
    return map;
}

inline void write_heatmap_csv(std::ostream& os, const SinrMap& map) {
    os << "x_m,y_m,sinr_db\n";
    char buf[96];
    for (std::size_t r = 0; r < map.rows(); ++r)
        for (std::size_t c = 0; c < map.cols(); ++c) {
            std::snprintf(buf, sizeof buf, "%.3f,%.3f,%.6f\n", map.x_at(c), map.y_at(r), map.grid[r][c]);
            os << buf;
        }
}

}  // namespace npn
