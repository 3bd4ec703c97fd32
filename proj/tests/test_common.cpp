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

#include <gtest/gtest.h>

#include <atomic>
#include <cmath>
#include <set>
#include <stdexcept>
#include <vector>

#include "npnkit/common.hpp"

namespace {

TEST(Units, DecibelRoundTrip) {
    for (double db : {-130.0, -3.0, 0.0, 10.0, 46.5}) EXPECT_NEAR(npn::linear_to_db(npn::db_to_linear(db)), db, 1e-12);
    EXPECT_DOUBLE_EQ(npn::dbm_to_mw(0.0), 1.0);
    EXPECT_DOUBLE_EQ(npn::dbm_to_mw(30.0), 1000.0);
}

TEST(Units, ThermalNoiseOver100MHz) {
    // -174 dBm/Hz + 80 dB + NF
    EXPECT_NEAR(npn::thermal_noise_dbm(100e6, 9.0), -85.0, 1e-12);
    EXPECT_NEAR(npn::thermal_noise_dbm(1.0, 0.0), -174.0, 1e-12);
}

TEST(Geometry, Distances) {
    const npn::Point3 a{0, 0, 0}, b{3, 4, 12};
    EXPECT_DOUBLE_EQ(npn::distance(a, b), 13.0);
    EXPECT_DOUBLE_EQ(npn::distance_2d(a, b), 5.0);
}

TEST(Rng, SameSeedSameStream) {
    npn::Rng a(42), b(42);
    for (int i = 0; i < 1000; ++i) ASSERT_EQ(a.next(), b.next());
}

TEST(Rng, UniformStaysInUnitInterval) {
    npn::Rng r(7);
    for (int i = 0; i < 100000; ++i) {
        const double u = r.uniform();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
    }
}

TEST(Rng, NormalMomentsOverManyDraws) {
    npn::Rng r(11);
    const int n = 200000;
    double s = 0.0, s2 = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x = r.normal();
        s += x;
        s2 += x * x;
    }
    const double mean = s / n;
    const double var = s2 / n - mean * mean;
    EXPECT_NEAR(mean, 0.0, 4.0 / std::sqrt(n));
    EXPECT_NEAR(var, 1.0, 0.02);
}

TEST(DeriveSeed, DistinctChildren) {
    std::set<std::uint64_t> seen;
    for (std::uint64_t p = 0; p < 20; ++p)
        for (std::uint64_t i = 0; i < 50; ++i) seen.insert(npn::derive_seed(p, i));
    EXPECT_EQ(seen.size(), 1000u);
    EXPECT_EQ(npn::derive_seed(5, 9), npn::derive_seed(5, 9));
}

TEST(ParallelFor, VisitsEveryIndexOnce) {
    for (unsigned threads : {1u, 2u, 3u, 8u}) {
        std::vector<std::atomic<int>> hits(97);
        npn::parallel_for(hits.size(), threads, [&](std::size_t i) { hits[i]++; });
        for (auto& h : hits) ASSERT_EQ(h.load(), 1);
    }
}

TEST(ParallelFor, PropagatesWorkerException) {
    EXPECT_THROW(npn::parallel_for(10, 4,
                                   [](std::size_t i) {
                                       if (i == 7) throw std::runtime_error("boom");
                                   }),
                 std::runtime_error);
}

}  // namespace
