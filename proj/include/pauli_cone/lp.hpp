// Copyright 2026 The Pauli Cone Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PAULI_CONE_LP_HPP
#define PAULI_CONE_LP_HPP

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pauli_cone/matrix.hpp"
#include "pauli_cone/rational.hpp"

namespace pauli_cone {

struct LpStats {
    std::size_t pivots = 0;
};

namespace detail {

// log of C(n, k), used only as a termination guard for Bland's rule.
inline long double log_binomial(std::size_t n, std::size_t k) {
    return std::lgamma(static_cast<long double>(n) + 1) - std::lgamma(static_cast<long double>(k) + 1) -
           std::lgamma(static_cast<long double>(n - k) + 1);
}

}  // namespace detail

/// Finds x >= 0 with equalities * x = rhs by an exact phase-1 simplex with
/// Bland's rule. Returns any feasible basic solution, or nullopt when the
/// system has no nonnegative solution.
inline std::optional<RatVector> lp_feasible(const RatMatrix &equalities, std::span<const Rat> rhs,
                                            std::size_t nonneg_vars, LpStats *stats = nullptr) {
    const std::size_t m = equalities.rows();
    const std::size_t n = nonneg_vars;
    if (equalities.cols() != n) {
        throw std::invalid_argument("lp_feasible: equalities has " + std::to_string(equalities.cols()) +
                                    " columns, expected " + std::to_string(n));
    }
    if (rhs.size() != m) {
        throw std::invalid_argument("lp_feasible: rhs has " + std::to_string(rhs.size()) + " entries, expected " +
                                    std::to_string(m));
    }
    if (m == 0) {
        return RatVector(n, Rat(0));
    }

    // Tableau columns: n structural, m artificial, 1 rhs. Rows flipped so rhs >= 0.
    const std::size_t width = n + m + 1;
    const std::size_t rhs_col = n + m;
    std::vector<RatVector> t(m, RatVector(width, Rat(0)));
    for (std::size_t i = 0; i < m; ++i) {
        const bool flip = rhs[i] < 0;
        for (std::size_t j = 0; j < n; ++j) {
            t[i][j] = flip ? Rat(-equalities(i, j)) : equalities(i, j);
        }
        t[i][n + i] = 1;
        t[i][rhs_col] = flip ? Rat(-rhs[i]) : rhs[i];
    }
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        basis[i] = n + i;
    }
    // Reduced costs of min sum(artificials): c_j = -sum_i t[i][j] on structurals.
    RatVector cost(width, Rat(0));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < m; ++i) {
            cost[j] -= t[i][j];
        }
    }
    for (std::size_t i = 0; i < m; ++i) {
        cost[rhs_col] -= t[i][rhs_col];
    }

    const long double log_bound = detail::log_binomial(n + m, m);
    std::size_t iterations = 0;
    while (true) {
        std::size_t enter = width;
        for (std::size_t j = 0; j < rhs_col; ++j) {
            if (sgn(cost[j]) < 0) {
                enter = j;
                break;
            }
        }
        if (enter == width) {
            break;
        }
        std::size_t leave = m;
        Rat best_ratio;
        for (std::size_t i = 0; i < m; ++i) {
            if (sgn(t[i][enter]) <= 0) {
                continue;
            }
            Rat ratio = t[i][rhs_col] / t[i][enter];
            if (leave == m || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
                leave = i;
                best_ratio = std::move(ratio);
            }
        }
        if (leave == m) {
            // Phase-1 objective is bounded below by zero.
            throw std::logic_error("lp_feasible: unbounded phase-1 ray");
        }
        ++iterations;
        if (std::log(static_cast<long double>(iterations)) > log_bound + 1e-9L) {
            throw std::logic_error("lp_feasible: Bland iteration bound C(n+m, m) exceeded");
        }

        const Rat piv = t[leave][enter];
        for (auto &x : t[leave]) {
            if (sgn(x) != 0) {
                x /= piv;
            }
        }
        std::vector<std::size_t> nz;
        for (std::size_t j = 0; j < width; ++j) {
            if (sgn(t[leave][j]) != 0) {
                nz.push_back(j);
            }
        }
        auto eliminate = [&](RatVector &r) {
            if (sgn(r[enter]) == 0) {
                return;
            }
            const Rat f = r[enter];
            for (std::size_t j : nz) {
                r[j] -= f * t[leave][j];
            }
        };
        for (std::size_t i = 0; i < m; ++i) {
            if (i != leave) {
                eliminate(t[i]);
            }
        }
        eliminate(cost);
        basis[leave] = enter;
    }
    if (stats != nullptr) {
        stats->pivots = iterations;
    }
    // Remaining objective value is -cost[rhs].
    if (sgn(cost[rhs_col]) != 0) {
        return std::nullopt;
    }
    RatVector x(n, Rat(0));
    for (std::size_t i = 0; i < m; ++i) {
        if (basis[i] < n) {
            x[basis[i]] = t[i][rhs_col];
        }
    }
    return x;
}

}  // namespace pauli_cone

#endif  // PAULI_CONE_LP_HPP
