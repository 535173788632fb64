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

#ifndef PAULI_CONE_PATTERN_COMBINATORICS_HPP
#define PAULI_CONE_PATTERN_COMBINATORICS_HPP

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pauli_cone/cone_geometry.hpp"
#include "pauli_cone/matrix.hpp"
#include "pauli_cone/pauli_maps.hpp"
#include "pauli_cone/symmetry.hpp"

namespace pauli_cone {

/// Partition of 8 into at most four parts, each at most 4.
class Partition {
   public:
    Partition(int a, int b, int c, int d) : parts_{a, b, c, d} {
        for (std::size_t i = 0; i < 4; ++i) {
            if (parts_[i] < 0 || parts_[i] > 4 || (i > 0 && parts_[i] > parts_[i - 1])) {
                throw std::invalid_argument("Partition: parts must be weakly decreasing in [0, 4], got " + str());
            }
        }
        if (a + b + c + d != 8) {
            throw std::invalid_argument("Partition: parts must sum to 8, got " + str());
        }
    }

    int operator[](std::size_t i) const {
        return parts_[i];
    }
    const std::array<int, 4> &parts() const {
        return parts_;
    }

    std::string str() const {
        return "(" + std::to_string(parts_[0]) + "," + std::to_string(parts_[1]) + "," + std::to_string(parts_[2]) +
               "," + std::to_string(parts_[3]) + ")";
    }

    friend bool operator==(const Partition &, const Partition &) = default;
    friend auto operator<=>(const Partition &, const Partition &) = default;
    friend std::ostream &operator<<(std::ostream &out, const Partition &p) {
        return out << p.str();
    }

   private:
    std::array<int, 4> parts_;
};

/// All eight partitions in table order.
inline const std::vector<Partition> &table_partitions() {
    static const std::vector<Partition> all{{4, 4, 0, 0}, {4, 3, 1, 0}, {4, 2, 2, 0}, {4, 2, 1, 1},
                                            {3, 3, 2, 0}, {3, 3, 1, 1}, {3, 2, 2, 1}, {2, 2, 2, 2}};
    return all;
}

inline Partition conjugate(const Partition &p) {
    std::array<int, 4> c{};
    for (std::size_t j = 0; j < 4; ++j) {
        for (std::size_t i = 0; i < 4; ++i) {
            if (p[i] > static_cast<int>(j)) {
                ++c[j];
            }
        }
    }
    return {c[0], c[1], c[2], c[3]};
}

/// Prefix sums of a dominate those of b.
inline bool majorizes(const Partition &a, const Partition &b) {
    int sa = 0, sb = 0;
    for (std::size_t i = 0; i < 4; ++i) {
        sa += a[i];
        sb += b[i];
        if (sa < sb) {
            return false;
        }
    }
    return true;
}

/// Number of semistandard tableaux of the given shape with `content[k]`
/// entries equal to k + 1, by filling cells row by row.
inline long long kostka(const Partition &shape, const Partition &content) {
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < shape[static_cast<std::size_t>(r)]; ++c) {
            cells.emplace_back(r, c);
        }
    }
    std::array<std::array<int, 4>, 4> t{};
    std::array<int, 4> left = content.parts();
    long long count = 0;
    auto fill = [&](auto &&self, std::size_t k) -> void {
        if (k == cells.size()) {
            ++count;
            return;
        }
        const auto [r, c] = cells[k];
        int lo = 0;
        if (c > 0) {
            lo = std::max(lo, t[r][c - 1]);
        }
        if (r > 0) {
            lo = std::max(lo, t[r - 1][c] + 1);
        }
        for (int v = lo; v < 4; ++v) {
            if (left[static_cast<std::size_t>(v)] == 0) {
                continue;
            }
            --left[static_cast<std::size_t>(v)];
            t[r][c] = v;
            self(self, k + 1);
            ++left[static_cast<std::size_t>(v)];
        }
    };
    fill(fill, 0);
    return count;
}

/// |A(r, s)| as a sum of Kostka products over s <= lambda <= r*.
inline long long brualdi_count(const Partition &r, const Partition &s) {
    const Partition rc = conjugate(r);
    long long total = 0;
    for (const auto &lambda : table_partitions()) {
        if (majorizes(lambda, s) && majorizes(rc, lambda)) {
            total += kostka(conjugate(lambda), r) * kostka(lambda, s);
        }
    }
    return total;
}

/// 4x4 (0,1)-matrix; bit 4i+j holds entry (i, j).
struct PatternMatrix {
    std::uint16_t bits = 0;

    bool at(int i, int j) const {
        return (bits >> (4 * i + j)) & 1u;
    }
    int ones() const {
        return std::popcount(bits);
    }
    PatternMatrix transpose() const {
        PatternMatrix t;
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                if (at(i, j)) {
                    t.bits |= static_cast<std::uint16_t>(1u << (4 * j + i));
                }
            }
        }
        return t;
    }
    // Rows read as 4-bit words, first row most significant.
    std::uint16_t lex_key() const {
        std::uint16_t k = 0;
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                k = static_cast<std::uint16_t>((k << 1) | (at(i, j) ? 1u : 0u));
            }
        }
        return k;
    }

    friend bool operator==(const PatternMatrix &, const PatternMatrix &) = default;
    friend std::ostream &operator<<(std::ostream &out, const PatternMatrix &m) {
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                out << (m.at(i, j) ? '1' : '0');
            }
            if (i < 3) {
                out << '/';
            }
        }
        return out;
    }
};

/// All (0,1)-matrices with row sums r and column sums s.
inline std::vector<PatternMatrix> enumerate_patterns(const Partition &r, const Partition &s) {
    std::vector<PatternMatrix> out;
    std::array<int, 4> col_left = s.parts();
    std::uint16_t bits = 0;
    auto rec = [&](auto &&self, int row) -> void {
        if (row == 4) {
            if (col_left == std::array<int, 4>{0, 0, 0, 0}) {
                out.push_back({bits});
            }
            return;
        }
        for (unsigned mask = 0; mask < 16; ++mask) {
            if (std::popcount(mask) != r[static_cast<std::size_t>(row)]) {
                continue;
            }
            bool ok = true;
            for (int j = 0; j < 4; ++j) {
                if (((mask >> j) & 1u) && col_left[static_cast<std::size_t>(j)] == 0) {
                    ok = false;
                }
            }
            if (!ok) {
                continue;
            }
            for (int j = 0; j < 4; ++j) {
                col_left[static_cast<std::size_t>(j)] -= static_cast<int>((mask >> j) & 1u);
            }
            bits = static_cast<std::uint16_t>(bits | (mask << (4 * row)));
            self(self, row + 1);
            bits = static_cast<std::uint16_t>(bits & ~(0xFu << (4 * row)));
            for (int j = 0; j < 4; ++j) {
                col_left[static_cast<std::size_t>(j)] += static_cast<int>((mask >> j) & 1u);
            }
        }
    };
    rec(rec, 0);
    return out;
}

/// Least lex_key image under all 24 x 24 row and column permutations.
inline PatternMatrix canonical_pattern(const PatternMatrix &m) {
    const auto &perms = all_perm4();
    PatternMatrix best = m;
    std::uint16_t best_key = m.lex_key();
    for (const auto &rp : perms) {
        for (const auto &cp : perms) {
            PatternMatrix img;
            for (int i = 0; i < 4; ++i) {
                for (int j = 0; j < 4; ++j) {
                    if (m.at(i, j)) {
                        img.bits |= static_cast<std::uint16_t>(1u << (4 * rp[static_cast<std::size_t>(i)] +
                                                                      cp[static_cast<std::size_t>(j)]));
                    }
                }
            }
            const std::uint16_t k = img.lex_key();
            if (k < best_key) {
                best_key = k;
                best = img;
            }
        }
    }
    return best;
}

/// One canonical representative per row/column permutation class, sorted.
inline std::vector<PatternMatrix> classify_up_to_permutation(const std::vector<PatternMatrix> &patterns) {
    std::set<std::uint16_t> seen;
    std::vector<PatternMatrix> reps;
    for (const auto &p : patterns) {
        const PatternMatrix c = canonical_pattern(p);
        if (seen.insert(c.lex_key()).second) {
            reps.push_back(c);
        }
    }
    std::sort(reps.begin(), reps.end(),
              [](const PatternMatrix &a, const PatternMatrix &b) { return a.lex_key() < b.lex_key(); });
    return reps;
}

/// 8x8 table over table_partitions(), rows r and columns s.
using CountTable = std::array<std::array<long long, 8>, 8>;

inline CountTable kostka_table() {
    CountTable t{};
    const auto &ps = table_partitions();
    for (std::size_t i = 0; i < 8; ++i) {
        for (std::size_t j = 0; j < 8; ++j) {
            t[i][j] = kostka(ps[i], ps[j]);
        }
    }
    return t;
}

inline CountTable brualdi_table() {
    CountTable t{};
    const auto &ps = table_partitions();
    for (std::size_t i = 0; i < 8; ++i) {
        for (std::size_t j = 0; j < 8; ++j) {
            t[i][j] = brualdi_count(ps[i], ps[j]);
        }
    }
    return t;
}

inline CountTable enumeration_table() {
    CountTable t{};
    const auto &ps = table_partitions();
    for (std::size_t i = 0; i < 8; ++i) {
        for (std::size_t j = 0; j < 8; ++j) {
            t[i][j] = static_cast<long long>(enumerate_patterns(ps[i], ps[j]).size());
        }
    }
    return t;
}

/// Row/column permutation classes per cell, transposes not merged.
inline CountTable class_table() {
    CountTable t{};
    const auto &ps = table_partitions();
    for (std::size_t i = 0; i < 8; ++i) {
        for (std::size_t j = 0; j < 8; ++j) {
            t[i][j] = static_cast<long long>(classify_up_to_permutation(enumerate_patterns(ps[i], ps[j])).size());
        }
    }
    return t;
}

/// Number of classes over the whole table when a matrix and its transpose
/// are identified.
inline long long transpose_merged_class_total() {
    std::set<std::uint16_t> seen;
    const auto &ps = table_partitions();
    for (const auto &r : ps) {
        for (const auto &s : ps) {
            for (const auto &m : enumerate_patterns(r, s)) {
                const std::uint16_t a = canonical_pattern(m).lex_key();
                const std::uint16_t b = canonical_pattern(m.transpose()).lex_key();
                seen.insert(std::min(a, b));
            }
        }
    }
    return static_cast<long long>(seen.size());
}

namespace detail {

inline void require_order2(const SpectrumPair &pair, const char *who) {
    if (pair.order() != 2) {
        throw std::invalid_argument(std::string(who) + ": order must be 2");
    }
}

inline RatMatrix permutation_matrix(const Perm4 &sigma) {
    RatMatrix u(4, 4);
    for (std::size_t i = 0; i < 4; ++i) {
        u(static_cast<std::size_t>(sigma[i]), i) = 1;
    }
    return u;
}

inline Rat trace_product(const RatMatrix &a, const RatMatrix &b) {
    Rat t = 0;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t k = 0; k < 4; ++k) {
            t += a(i, k) * b(k, i);
        }
    }
    return t;
}

}  // namespace detail

/// Box rule, 0-based: (<{i,j}|P|{k,l}> == 0, <{i,j}^c|Q|{k,l}^c> == 0).
inline std::pair<bool, bool> rule_box(const SpectrumPair &pair, int i, int j, int k, int l) {
    detail::require_order2(pair, "rule_box");
    for (int v : {i, j, k, l}) {
        if (v < 0 || v > 3) {
            throw std::invalid_argument("rule_box: indices must be in 0..3");
        }
    }
    if (!(i < j) || !(k < l)) {
        throw std::invalid_argument("rule_box: need i < j and k < l");
    }
    const RatMatrix p = p_matrix(pair);
    const RatMatrix q = q_matrix(pair);
    auto block = [](const RatMatrix &m, std::array<int, 2> rows, std::array<int, 2> cols) {
        Rat s = 0;
        for (int a : rows) {
            for (int b : cols) {
                s += m(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
            }
        }
        return s;
    };
    auto complement = [](int a, int b) {
        std::array<int, 2> c{};
        std::size_t n = 0;
        for (int v = 0; v < 4; ++v) {
            if (v != a && v != b) {
                c[n++] = v;
            }
        }
        return c;
    };
    return {sgn(block(p, {i, j}, {k, l})) == 0, sgn(block(q, complement(i, j), complement(k, l))) == 0};
}

/// Diagonal rule: (Tr(U_sigma P) == 0, Tr(U_sigma Q) == 0).
inline std::pair<bool, bool> rule_diagonal(const SpectrumPair &pair, const Perm4 &sigma) {
    detail::require_order2(pair, "rule_diagonal");
    const RatMatrix u = detail::permutation_matrix(sigma);
    return {sgn(detail::trace_product(u, p_matrix(pair))) == 0, sgn(detail::trace_product(u, q_matrix(pair))) == 0};
}

/// Cross rule. side 0: (Tr(U1 P3 U2 P) == 0, Tr(U1 P3^T U2 Q) == 0);
/// side 1 exchanges the roles of P and Q.
inline std::pair<bool, bool> rule_cross(const SpectrumPair &pair, const Perm4 &sigma1, const Perm4 &sigma2, int side) {
    detail::require_order2(pair, "rule_cross");
    if (side != 0 && side != 1) {
        throw std::invalid_argument("rule_cross: side must be 0 or 1");
    }
    const RatMatrix p3 = p_matrix(reference_cross());
    const RatMatrix u1 = detail::permutation_matrix(sigma1);
    const RatMatrix u2 = detail::permutation_matrix(sigma2);
    const RatMatrix a = u1 * p3 * u2;
    const RatMatrix b = u1 * p3.transpose() * u2;
    const RatMatrix p = p_matrix(pair);
    const RatMatrix q = q_matrix(pair);
    const RatMatrix &first = side == 0 ? p : q;
    const RatMatrix &second = side == 0 ? q : p;
    return {sgn(detail::trace_product(a, first)) == 0, sgn(detail::trace_product(b, second)) == 0};
}

}  // namespace pauli_cone

#endif  // PAULI_CONE_PATTERN_COMBINATORICS_HPP
