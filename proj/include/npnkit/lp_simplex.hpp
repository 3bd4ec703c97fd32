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

// Dense two-phase simplex on a contiguous tableau.
//
//   maximize c'x  subject to  A x <= b,  x >= 0
//
// Phase 1 adds a single artificial column that is pivoted in against the
// most negative right-hand side. Entering column: most negative reduced
// cost, ties by variable id. Leaving row: minimum ratio, ties by basic id.

#include <cmath>
#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include "npnkit/common.hpp"

namespace npn {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    double objective = 0.0;
    std::vector<double> x;
    long pivots = 0;
};

class DenseSimplex {
public:
    /// `a` is row-major with rows() = b.size() and cols() = c.size().
    DenseSimplex(const std::vector<double>& a, const std::vector<double>& b, const std::vector<double>& c,
                 double eps = 1e-9)
        : m_(static_cast<int>(b.size())),
          n_(static_cast<int>(c.size())),
          w_(n_ + 2),
          eps_(eps),
          nonbasic_(static_cast<std::size_t>(n_ + 1)),
          basic_(static_cast<std::size_t>(m_)),
          d_(static_cast<std::size_t>(m_ + 2) * static_cast<std::size_t>(n_ + 2), 0.0) {
        if (a.size() != static_cast<std::size_t>(m_) * static_cast<std::size_t>(n_))
            throw ValidationError("constraint matrix has the wrong size");
        for (int i = 0; i < m_; ++i) {
            for (int j = 0; j < n_; ++j) at(i, j) = a[static_cast<std::size_t>(i) * n_ + j];
            basic_[static_cast<std::size_t>(i)] = n_ + i;
            at(i, n_) = -1.0;
            at(i, n_ + 1) = b[static_cast<std::size_t>(i)];
        }
        for (int j = 0; j < n_; ++j) {
            nonbasic_[static_cast<std::size_t>(j)] = j;
            at(m_, j) = -c[static_cast<std::size_t>(j)];
        }
        nonbasic_[static_cast<std::size_t>(n_)] = -1;
        at(m_ + 1, n_) = 1.0;
        max_pivots_ = 50L * (m_ + n_ + 10);
    }

    LpResult solve() {
        LpResult res;
        int r = 0;
        for (int i = 1; i < m_; ++i)
            if (at(i, n_ + 1) < at(r, n_ + 1)) r = i;
        if (m_ > 0 && at(r, n_ + 1) < -eps_) {
            pivot(r, n_);
            if (!run(2) || at(m_ + 1, n_ + 1) < -eps_) {
                res.status = LpStatus::Infeasible;
                res.pivots = pivots_;
                return res;
            }
            for (int i = 0; i < m_; ++i) {
                if (basic_[static_cast<std::size_t>(i)] != -1) continue;
                int s = 0;
                for (int j = 1; j <= n_; ++j) s = better(i, j, s);
                pivot(i, s);
            }
        }
        const bool bounded = run(1);
        res.x.assign(static_cast<std::size_t>(n_), 0.0);
        for (int i = 0; i < m_; ++i)
            if (basic_[static_cast<std::size_t>(i)] < n_ && basic_[static_cast<std::size_t>(i)] >= 0)
                res.x[static_cast<std::size_t>(basic_[static_cast<std::size_t>(i)])] = at(i, n_ + 1);
        res.status = bounded ? LpStatus::Optimal : LpStatus::Unbounded;
        res.objective = bounded ? at(m_, n_ + 1) : std::numeric_limits<double>::infinity();
        res.pivots = pivots_;
        return res;
    }

private:
    int m_;
    int n_;
    int w_;
    double eps_;
    std::vector<int> nonbasic_;
    std::vector<int> basic_;
    std::vector<double> d_;
    long pivots_ = 0;
    long max_pivots_ = 0;
    std::vector<int> nz_;

    double& at(int i, int j) { return d_[static_cast<std::size_t>(i) * w_ + j]; }

    /// Column choice among s and j on row `row`: smaller value, ties by id.
    int better(int row, int j, int s) {
        if (s == -1) return j;
        const double vj = at(row, j);
        const double vs = at(row, s);
        if (vj < vs || (vj == vs && nonbasic_[static_cast<std::size_t>(j)] < nonbasic_[static_cast<std::size_t>(s)]))
            return j;
        return s;
    }

    void pivot(int r, int s) {
        if (++pivots_ > max_pivots_) throw SolverFailure("simplex pivot limit exceeded");
        double* row_r = &at(r, 0);
        const double inv = 1.0 / row_r[s];
        nz_.clear();
        for (int j = 0; j < w_; ++j)
            if (row_r[j] != 0.0) nz_.push_back(j);
        for (int i = 0; i < m_ + 2; ++i) {
            if (i == r) continue;
            double* row_i = &at(i, 0);
            if (std::abs(row_i[s]) <= eps_) continue;
            const double f = row_i[s] * inv;
            for (int j : nz_) row_i[j] -= row_r[j] * f;
            row_i[s] = row_r[s] * f;
        }
        for (int j = 0; j < w_; ++j)
            if (j != s) row_r[j] *= inv;
        for (int i = 0; i < m_ + 2; ++i)
            if (i != r) at(i, s) *= -inv;
        row_r[s] = inv;
        std::swap(basic_[static_cast<std::size_t>(r)], nonbasic_[static_cast<std::size_t>(s)]);
    }

    bool run(int phase) {
        const int obj = m_ + phase - 1;
        for (;;) {
            int s = -1;
            for (int j = 0; j <= n_; ++j)
                if (nonbasic_[static_cast<std::size_t>(j)] != -phase) s = better(obj, j, s);
            if (!std::isfinite(at(obj, s))) throw SolverFailure("non-finite reduced cost");
            if (at(obj, s) >= -eps_) return true;
            int r = -1;
            for (int i = 0; i < m_; ++i) {
                if (at(i, s) <= eps_) continue;
                if (r == -1) {
                    r = i;
                    continue;
                }
                const double ri = at(i, n_ + 1) / at(i, s);
                const double rr = at(r, n_ + 1) / at(r, s);
                if (ri < rr || (ri == rr && basic_[static_cast<std::size_t>(i)] < basic_[static_cast<std::size_t>(r)]))
                    r = i;
            }
            if (r == -1) return false;
            pivot(r, s);
        }
    }
};

/// maximize c'x s.t. A x <= b, x >= 0 with A given row-major.
inline LpResult solve_lp(const std::vector<double>& a, const std::vector<double>& b, const std::vector<double>& c,
                         double eps = 1e-9) {
    DenseSimplex lp(a, b, c, eps);
    return lp.solve();
}

}  // namespace npn
