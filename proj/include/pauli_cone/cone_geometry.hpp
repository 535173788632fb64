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

#ifndef PAULI_CONE_CONE_GEOMETRY_HPP
#define PAULI_CONE_CONE_GEOMETRY_HPP

#include <algorithm>
#include <bit>
#include <bitset>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pauli_cone/matrix.hpp"
#include "pauli_cone/pauli_maps.hpp"
#include "pauli_cone/rational.hpp"

namespace pauli_cone {

/// Zero positions of (p, q) as bitmasks. Orders up to 3 fit in 64 bits.
struct ZeroPattern {
    int order = 0;
    std::uint64_t p_zeros = 0;
    std::uint64_t q_zeros = 0;

    int size() const {
        return std::popcount(p_zeros) + std::popcount(q_zeros);
    }

    friend bool operator==(const ZeroPattern &, const ZeroPattern &) = default;
};

inline ZeroPattern zero_pattern(const SpectrumPair &pair) {
    if (pair.order() > 3) {
        throw std::invalid_argument("zero_pattern: order must be <= 3");
    }
    ZeroPattern z;
    z.order = pair.order();
    for (std::size_t i = 0; i < pair.p().size(); ++i) {
        if (sgn(pair.p()[i]) == 0) {
            z.p_zeros |= std::uint64_t{1} << i;
        }
        if (sgn(pair.q()[i]) == 0) {
            z.q_zeros |= std::uint64_t{1} << i;
        }
    }
    return z;
}

/// a <=_Z b: every zero of a is also a zero of b, on both sides.
inline bool leq_z(const ZeroPattern &a, const ZeroPattern &b) {
    if (a.order != b.order) {
        throw std::invalid_argument("leq_z: order mismatch");
    }
    return (a.p_zeros & ~b.p_zeros) == 0 && (a.q_zeros & ~b.q_zeros) == 0;
}

/// Necessary condition for extremality: at least 4^n - 1 zeros in total.
inline bool check_rank_bound(const ZeroPattern &z) {
    return static_cast<std::size_t>(z.size()) + 1 >= pauli_dim(z.order);
}

inline const RatMatrix &exchange_power(int n) {
    static const std::vector<RatMatrix> powers = [] {
        std::vector<RatMatrix> v;
        for (int k = 0; k <= 3; ++k) {
            v.push_back(kron_power(spectrum_exchange_matrix(), k));
        }
        return v;
    }();
    if (n < 0 || n > 3) {
        throw std::invalid_argument("exchange_power: order must be <= 3");
    }
    return powers[n];
}

/// Dimension of {x : x_i = 0 on p-zeros, (K^n x)_j = 0 on q-zeros}.
inline std::size_t pattern_solution_dim(const ZeroPattern &z) {
    const std::size_t d = pauli_dim(z.order);
    const RatMatrix &k = exchange_power(z.order);
    RatMatrix rows(static_cast<std::size_t>(z.size()), d);
    std::size_t r = 0;
    for (std::size_t i = 0; i < d; ++i) {
        if ((z.p_zeros >> i) & 1u) {
            rows(r++, i) = 1;
        }
    }
    for (std::size_t j = 0; j < d; ++j) {
        if ((z.q_zeros >> j) & 1u) {
            for (std::size_t i = 0; i < d; ++i) {
                rows(r, i) = k(j, i);
            }
            ++r;
        }
    }
    return d - rank(rows);
}

/// A nonzero cone member spans an extremal ray iff its zero pattern cuts the
/// eigenspace down to a line.
inline bool is_extremal(const SpectrumPair &pair) {
    if (pair.is_zero()) {
        throw std::invalid_argument("is_extremal: the zero pair spans no ray");
    }
    if (!pair.in_cone()) {
        throw std::invalid_argument("is_extremal: pair is not in the cone");
    }
    return pattern_solution_dim(zero_pattern(pair)) == 1;
}

enum class OrbitLabel { Box, Diagonal, Cross, Other };

inline std::string_view to_string(OrbitLabel label) {
    switch (label) {
        case OrbitLabel::Box:
            return "Box";
        case OrbitLabel::Diagonal:
            return "Diagonal";
        case OrbitLabel::Cross:
            return "Cross";
        case OrbitLabel::Other:
            break;
    }
    return "Other";
}

inline OrbitLabel parse_orbit_label(std::string_view s) {
    if (s == "Box") {
        return OrbitLabel::Box;
    }
    if (s == "Diagonal") {
        return OrbitLabel::Diagonal;
    }
    if (s == "Cross") {
        return OrbitLabel::Cross;
    }
    if (s == "Other") {
        return OrbitLabel::Other;
    }
    throw std::invalid_argument("unknown orbit label '" + std::string(s) + "'");
}

/// Scales (p, q) jointly to nonnegative-or-not integers with gcd 1.
inline SpectrumPair primitive_pair(const SpectrumPair &pair) {
    RatVector joined(pair.p());
    joined.insert(joined.end(), pair.q().begin(), pair.q().end());
    const IntVector prim = primitive_integer_form(std::span<const Rat>(joined));
    const std::size_t d = pair.p().size();
    RatVector p(prim.begin(), prim.begin() + static_cast<std::ptrdiff_t>(d));
    RatVector q(prim.begin() + static_cast<std::ptrdiff_t>(d), prim.end());
    return SpectrumPair(pair.order(), std::move(p), std::move(q));
}

struct RayGenerator {
    SpectrumPair pair;
    ZeroPattern pattern;
    std::optional<OrbitLabel> label;

    /// Normalizes to primitive integer form. Does not test extremality.
    static RayGenerator from_pair(const SpectrumPair &pair) {
        SpectrumPair prim = primitive_pair(pair);
        ZeroPattern z = zero_pattern(prim);
        return {std::move(prim), z, std::nullopt};
    }

    int order() const {
        return pair.order();
    }
    const RatVector &p() const {
        return pair.p();
    }
    const RatVector &q() const {
        return pair.q();
    }
};

inline bool ray_less(const RayGenerator &a, const RayGenerator &b) {
    if (a.p() != b.p()) {
        return a.p() < b.p();
    }
    return a.q() < b.q();
}

inline RayGenerator tensor_rays(const RayGenerator &a, const RayGenerator &b) {
    if (!is_extremal(a.pair) || !is_extremal(b.pair)) {
        throw std::invalid_argument("tensor_rays: both factors must be extremal");
    }
    SpectrumPair prod(a.order() + b.order(), kron<Rat>(a.p(), b.p()), kron<Rat>(a.q(), b.q()));
    RayGenerator r = RayGenerator::from_pair(prod);
    if (!is_extremal(r.pair)) {
        throw std::logic_error("tensor_rays: product of extremal rays is not extremal");
    }
    return r;
}

namespace detail {

using TightSet = std::bitset<128>;

struct DdRay {
    IntVector x;
    TightSet tight;
};

}  // namespace detail

/// Extremal rays of {p >= 0, K^n p >= 0} by the double description method,
/// starting from the orthant and adding the K-halfspaces in `order`
/// (natural order when empty). Sorted by (p, q).
inline std::vector<RayGenerator> enumerate_rays(int n, std::vector<std::size_t> order = {}) {
    if (n < 1 || n > 3) {
        throw std::invalid_argument("enumerate_rays: order must be 1, 2 or 3");
    }
    const std::size_t d = pauli_dim(n);
    if (order.empty()) {
        order.resize(d);
        std::iota(order.begin(), order.end(), std::size_t{0});
    }
    {
        std::vector<std::size_t> check = order;
        std::sort(check.begin(), check.end());
        for (std::size_t i = 0; i < d; ++i) {
            if (check.size() != d || check[i] != i) {
                throw std::invalid_argument("enumerate_rays: order must be a permutation of the K rows");
            }
        }
    }

    // Rows of (2K)^n have entries +-1.
    const RatMatrix &k = exchange_power(n);
    const Rat scale(Int(1) << n);
    std::vector<std::vector<int>> krows(d, std::vector<int>(d));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            const Rat v = k(i, j) * scale;
            krows[i][j] = static_cast<int>(v.get_num().get_si());
        }
    }
    auto evaluate = [&](std::size_t row, const IntVector &x) {
        Int acc = 0;
        for (std::size_t j = 0; j < d; ++j) {
            if (sgn(x[j]) != 0) {
                if (krows[row][j] > 0) {
                    acc += x[j];
                } else {
                    acc -= x[j];
                }
            }
        }
        return acc;
    };

    // Tight bit i < d: p_i = 0; bit d + j: (K^n p)_j = 0.
    std::vector<detail::DdRay> rays;
    for (std::size_t i = 0; i < d; ++i) {
        detail::DdRay r{IntVector(d, Int(0)), {}};
        r.x[i] = 1;
        for (std::size_t j = 0; j < d; ++j) {
            if (j != i) {
                r.tight.set(j);
            }
        }
        rays.push_back(std::move(r));
    }

    for (std::size_t row : order) {
        const std::size_t bit = d + row;
        std::vector<Int> val(rays.size());
        std::vector<std::size_t> pos, neg;
        std::vector<detail::DdRay> next;
        for (std::size_t r = 0; r < rays.size(); ++r) {
            val[r] = evaluate(row, rays[r].x);
            const int s = sgn(val[r]);
            if (s > 0) {
                pos.push_back(r);
            } else if (s < 0) {
                neg.push_back(r);
            }
        }
        for (std::size_t r = 0; r < rays.size(); ++r) {
            if (sgn(val[r]) >= 0) {
                next.push_back(rays[r]);
                if (sgn(val[r]) == 0) {
                    next.back().tight.set(bit);
                }
            }
        }
        for (std::size_t a : pos) {
            for (std::size_t b : neg) {
                const detail::TightSet common = rays[a].tight & rays[b].tight;
                if (common.count() + 2 < d) {
                    continue;
                }
                bool adjacent = true;
                for (std::size_t c = 0; c < rays.size() && adjacent; ++c) {
                    if (c != a && c != b && (rays[c].tight & common) == common) {
                        adjacent = false;
                    }
                }
                if (!adjacent) {
                    continue;
                }
                IntVector x(d);
                const Int wa = -val[b];
                const Int &wb = val[a];
                for (std::size_t j = 0; j < d; ++j) {
                    x[j] = wa * rays[a].x[j] + wb * rays[b].x[j];
                }
                x = primitive_integer_form(std::span<const Int>(x));
                detail::TightSet t = common;
                t.set(bit);
                next.push_back({std::move(x), t});
            }
        }
        rays = std::move(next);
    }

    std::vector<RayGenerator> out;
    out.reserve(rays.size());
    for (const auto &r : rays) {
        out.push_back(RayGenerator::from_pair(SpectrumPair::from_p(n, to_rat(r.x))));
    }
    std::sort(out.begin(), out.end(), ray_less);
    out.erase(std::unique(out.begin(), out.end(),
                          [](const RayGenerator &a, const RayGenerator &b) { return a.pair == b.pair; }),
              out.end());
    return out;
}

/// enumerate_rays(n) computed once per process (n = 1, 2).
inline const std::vector<RayGenerator> &cone_rays(int n) {
    if (n == 1) {
        static const std::vector<RayGenerator> r1 = enumerate_rays(1);
        return r1;
    }
    if (n == 2) {
        static const std::vector<RayGenerator> r2 = enumerate_rays(2);
        return r2;
    }
    throw std::invalid_argument("cone_rays: cached only for orders 1 and 2");
}

/// Order-2 pair from a 4x4 P matrix, flattened row-major (P[i][j] = p[4i+j]).
inline SpectrumPair pair_from_p_matrix(const RatMatrix &p) {
    if (p.rows() != 4 || p.cols() != 4) {
        throw std::invalid_argument("pair_from_p_matrix: expected 4x4");
    }
    return SpectrumPair::from_p(2, RatVector(p.entries().begin(), p.entries().end()));
}

inline RatMatrix p_matrix(const SpectrumPair &pair) {
    if (pair.order() != 2) {
        throw std::invalid_argument("p_matrix: order must be 2");
    }
    RatMatrix m(4, 4);
    for (std::size_t i = 0; i < 16; ++i) {
        m(i / 4, i % 4) = pair.p()[i];
    }
    return m;
}

inline RatMatrix q_matrix(const SpectrumPair &pair) {
    if (pair.order() != 2) {
        throw std::invalid_argument("q_matrix: order must be 2");
    }
    RatMatrix m(4, 4);
    for (std::size_t i = 0; i < 16; ++i) {
        m(i / 4, i % 4) = pair.q()[i];
    }
    return m;
}

// The three orbit representatives at order 2.
inline SpectrumPair reference_box() {
    return pair_from_p_matrix({{1, 1, 0, 0}, {1, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}});
}
inline SpectrumPair reference_diagonal() {
    return pair_from_p_matrix(RatMatrix::identity(4));
}
inline SpectrumPair reference_cross() {
    return pair_from_p_matrix({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {1, 1, 1, 0}});
}

}  // namespace pauli_cone

#endif  // PAULI_CONE_CONE_GEOMETRY_HPP
