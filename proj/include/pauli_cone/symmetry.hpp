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

#ifndef PAULI_CONE_SYMMETRY_HPP
#define PAULI_CONE_SYMMETRY_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pauli_cone/cone_geometry.hpp"
#include "pauli_cone/pauli_maps.hpp"
#include "pauli_cone/rational.hpp"

namespace pauli_cone {

/// Permutation of {0,1,2,3}: perm[i] is the image of i.
using Perm4 = std::array<int, 4>;

inline const std::vector<Perm4> &all_perm4() {
    static const std::vector<Perm4> perms = [] {
        std::vector<Perm4> v;
        Perm4 p{0, 1, 2, 3};
        do {
            v.push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
        return v;
    }();
    return perms;
}

inline bool is_permutation_of_range(const std::vector<int> &p) {
    std::vector<int> s = p;
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != static_cast<int>(i)) {
            return false;
        }
    }
    return true;
}

/// Acts as V_tau (U_{sigma_1} (x) ... (x) U_{sigma_n}) (K^n)^x, read right
/// to left. U_sigma e_i = e_{sigma(i)}; V_tau moves slot m to slot tau(m).
struct GroupElement {
    std::vector<int> tau;
    std::vector<Perm4> sigmas;
    bool x = false;

    static GroupElement identity(int n) {
        GroupElement g;
        g.tau.resize(static_cast<std::size_t>(n));
        std::iota(g.tau.begin(), g.tau.end(), 0);
        g.sigmas.assign(static_cast<std::size_t>(n), Perm4{0, 1, 2, 3});
        return g;
    }

    int order() const {
        return static_cast<int>(tau.size());
    }

    void validate() const {
        if (sigmas.size() != tau.size()) {
            throw std::invalid_argument("GroupElement: tau and sigmas disagree on the order");
        }
        if (!is_permutation_of_range(tau)) {
            throw std::invalid_argument("GroupElement: tau is not a permutation");
        }
        for (const auto &s : sigmas) {
            if (!is_permutation_of_range(std::vector<int>(s.begin(), s.end()))) {
                throw std::invalid_argument("GroupElement: sigma is not a permutation of 4 points");
            }
        }
    }

    /// Flat index after applying the slot permutations (K part excluded).
    std::size_t map_index(std::size_t flat) const {
        const std::size_t n = tau.size();
        std::vector<int> digits(n);
        for (std::size_t m = n; m-- > 0;) {
            digits[m] = static_cast<int>(flat % 4);
            flat /= 4;
        }
        std::vector<int> out(n);
        for (std::size_t m = 0; m < n; ++m) {
            out[static_cast<std::size_t>(tau[m])] = sigmas[m][static_cast<std::size_t>(digits[m])];
        }
        std::size_t r = 0;
        for (int v : out) {
            r = r * 4 + static_cast<std::size_t>(v);
        }
        return r;
    }
};

/// (g h)(v) = g(h(v)). K^n commutes with every U and V factor.
inline GroupElement compose(const GroupElement &g, const GroupElement &h) {
    if (g.order() != h.order()) {
        throw std::invalid_argument("compose: order mismatch");
    }
    const std::size_t n = g.tau.size();
    GroupElement r;
    r.tau.resize(n);
    r.sigmas.resize(n);
    for (std::size_t m = 0; m < n; ++m) {
        const auto moved = static_cast<std::size_t>(h.tau[m]);
        r.tau[m] = g.tau[moved];
        for (std::size_t i = 0; i < 4; ++i) {
            r.sigmas[m][i] = g.sigmas[moved][static_cast<std::size_t>(h.sigmas[m][i])];
        }
    }
    r.x = g.x != h.x;
    return r;
}

inline std::size_t group_order(int n) {
    std::size_t fact = 1;
    for (int i = 2; i <= n; ++i) {
        fact *= static_cast<std::size_t>(i);
    }
    std::size_t s = 1;
    for (int i = 0; i < n; ++i) {
        s *= 24;
    }
    return 2 * fact * s;
}

inline std::vector<GroupElement> group_elements(int n) {
    if (n < 1 || n > 3) {
        throw std::invalid_argument("group_elements: order must be 1, 2 or 3");
    }
    std::vector<int> tau(static_cast<std::size_t>(n));
    std::iota(tau.begin(), tau.end(), 0);
    std::vector<std::vector<int>> taus;
    do {
        taus.push_back(tau);
    } while (std::next_permutation(tau.begin(), tau.end()));

    const auto &perms = all_perm4();
    std::vector<GroupElement> out;
    out.reserve(group_order(n));
    for (bool x : {false, true}) {
        for (const auto &t : taus) {
            std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
            while (true) {
                GroupElement g;
                g.tau = t;
                g.x = x;
                for (std::size_t m = 0; m < idx.size(); ++m) {
                    g.sigmas.push_back(perms[idx[m]]);
                }
                out.push_back(std::move(g));
                std::size_t m = 0;
                while (m < idx.size() && ++idx[m] == perms.size()) {
                    idx[m++] = 0;
                }
                if (m == idx.size()) {
                    break;
                }
            }
        }
    }
    return out;
}

inline SpectrumPair act(const GroupElement &g, const SpectrumPair &pair) {
    g.validate();
    if (g.order() != pair.order()) {
        throw std::invalid_argument("act: order mismatch");
    }
    // (K^n p, K^n q) = (q, p).
    const RatVector &src_p = g.x ? pair.q() : pair.p();
    const RatVector &src_q = g.x ? pair.p() : pair.q();
    RatVector p(src_p.size());
    RatVector q(src_q.size());
    for (std::size_t i = 0; i < src_p.size(); ++i) {
        const std::size_t j = g.map_index(i);
        p[j] = src_p[i];
        q[j] = src_q[i];
    }
    SpectrumPair out(pair.order(), std::move(p), std::move(q));
    if (pair.in_cone() && !out.in_cone()) {
        throw std::logic_error("act: image left the cone");
    }
    return out;
}

namespace detail {

// For every group element, source position of each output position in the
// concatenation p || q.
inline const std::vector<std::vector<std::size_t>> &pullback_tables(int n) {
    auto build = [](int order) {
        const std::size_t d = pauli_dim(order);
        std::vector<std::vector<std::size_t>> tables;
        for (const auto &g : group_elements(order)) {
            std::vector<std::size_t> src(2 * d);
            for (std::size_t i = 0; i < d; ++i) {
                const std::size_t j = g.map_index(i);
                src[j] = g.x ? d + i : i;
                src[d + j] = g.x ? i : d + i;
            }
            tables.push_back(std::move(src));
        }
        return tables;
    };
    if (n == 1) {
        static const auto t1 = build(1);
        return t1;
    }
    if (n == 2) {
        static const auto t2 = build(2);
        return t2;
    }
    if (n == 3) {
        static const auto t3 = build(3);
        return t3;
    }
    throw std::invalid_argument("pullback_tables: order must be 1, 2 or 3");
}

}  // namespace detail

/// Lexicographically least p || q over the orbit, in primitive integer form.
/// Two pairs lie on the same scaled orbit iff their canonical forms agree.
inline SpectrumPair canonical_form(const SpectrumPair &pair) {
    if (pair.is_zero()) {
        return pair;
    }
    const SpectrumPair prim = primitive_pair(pair);
    const std::size_t d = prim.p().size();
    RatVector v(prim.p());
    v.insert(v.end(), prim.q().begin(), prim.q().end());

    const auto &tables = detail::pullback_tables(pair.order());
    const std::vector<std::size_t> *best = &tables.front();
    for (const auto &t : tables) {
        for (std::size_t j = 0; j < 2 * d; ++j) {
            const int c = cmp(v[t[j]], v[(*best)[j]]);
            if (c < 0) {
                best = &t;
                break;
            }
            if (c > 0) {
                break;
            }
        }
    }
    RatVector p(d), q(d);
    for (std::size_t j = 0; j < d; ++j) {
        p[j] = v[(*best)[j]];
        q[j] = v[(*best)[d + j]];
    }
    return SpectrumPair(pair.order(), std::move(p), std::move(q));
}

struct OrbitReport {
    RayGenerator representative;
    std::size_t size = 0;
    OrbitLabel label = OrbitLabel::Other;
};

/// Label of a canonical form: order 1 has a single orbit, called Box since
/// its tensor squares are the order-2 boxes.
inline OrbitLabel label_for_canonical(const SpectrumPair &canon) {
    if (canon.order() == 1) {
        static const SpectrumPair box1 = canonical_form(SpectrumPair::from_p(1, {1, 1, 0, 0}));
        return canon == box1 ? OrbitLabel::Box : OrbitLabel::Other;
    }
    if (canon.order() == 2) {
        static const SpectrumPair box = canonical_form(reference_box());
        static const SpectrumPair diag = canonical_form(reference_diagonal());
        static const SpectrumPair cross = canonical_form(reference_cross());
        if (canon == box) {
            return OrbitLabel::Box;
        }
        if (canon == diag) {
            return OrbitLabel::Diagonal;
        }
        if (canon == cross) {
            return OrbitLabel::Cross;
        }
    }
    return OrbitLabel::Other;
}

/// Groups rays by canonical form. Reports are ordered Box, Diagonal, Cross,
/// Other, then by representative.
inline std::vector<OrbitReport> orbit_decompose(const std::vector<RayGenerator> &rays) {
    std::map<std::pair<RatVector, RatVector>, OrbitReport> groups;
    for (const auto &r : rays) {
        const SpectrumPair canon = canonical_form(r.pair);
        auto key = std::make_pair(canon.p(), canon.q());
        auto it = groups.find(key);
        if (it == groups.end()) {
            RayGenerator rep = RayGenerator::from_pair(canon);
            rep.label = label_for_canonical(canon);
            it = groups.emplace(std::move(key), OrbitReport{rep, 0, *rep.label}).first;
        }
        ++it->second.size;
    }
    std::vector<OrbitReport> out;
    for (auto &[key, rep] : groups) {
        out.push_back(std::move(rep));
    }
    std::stable_sort(out.begin(), out.end(), [](const OrbitReport &a, const OrbitReport &b) {
        return static_cast<int>(a.label) < static_cast<int>(b.label);
    });
    return out;
}

/// Copies of the rays with their orbit label filled in.
inline std::vector<RayGenerator> label_rays(std::vector<RayGenerator> rays) {
    for (auto &r : rays) {
        r.label = label_for_canonical(canonical_form(r.pair));
    }
    return rays;
}

/// Labeled cone_rays(n), computed once.
inline const std::vector<RayGenerator> &labeled_cone_rays(int n) {
    if (n == 1) {
        static const std::vector<RayGenerator> r1 = label_rays(cone_rays(1));
        return r1;
    }
    if (n == 2) {
        static const std::vector<RayGenerator> r2 = label_rays(cone_rays(2));
        return r2;
    }
    throw std::invalid_argument("labeled_cone_rays: cached only for orders 1 and 2");
}

}  // namespace pauli_cone

#endif  // PAULI_CONE_SYMMETRY_HPP
