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


#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "pauli_cone/symmetry.hpp"
#include "test_support.hpp"

namespace pc = pauli_cone;
using pc::GroupElement;
using pc::OrbitLabel;
using pc::Rat;
using pc::RatVector;
using pc::SpectrumPair;

namespace {

using Key = std::pair<RatVector, RatVector>;

const GroupElement &random_element(std::mt19937_64 &rng, int n) {
    static const auto g1 = pc::group_elements(1);
    static const auto g2 = pc::group_elements(2);
    const auto &g = n == 1 ? g1 : g2;
    std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
    return g[pick(rng)];
}

SpectrumPair random_pair(std::mt19937_64 &rng, int n) {
    return SpectrumPair::from_p(n, oracle::random_vector(rng, pc::pauli_dim(n), -3, 3, 5));
}

SpectrumPair random_cone_member(std::mt19937_64 &rng, int n) {
    const auto &rays = pc::cone_rays(n);
    std::uniform_int_distribution<std::size_t> pick(0, rays.size() - 1);
    RatVector p(pc::pauli_dim(n), Rat(0));
    for (int t = 0; t < 4; ++t) {
        const Rat w = oracle::random_rat(rng, 0, 2, 9);
        const auto &r = rays[pick(rng)];
        for (std::size_t i = 0; i < p.size(); ++i) {
            p[i] += w * r.p()[i];
        }
    }
    return SpectrumPair::from_p(n, p);
}

// Orbit of a pair by applying every group element, as a set of primitive pairs.
std::set<Key> orbit_by_sweep(const SpectrumPair &seed) {
    std::set<Key> out;
    for (const auto &g : pc::group_elements(seed.order())) {
        const auto img = pc::primitive_pair(pc::act(g, seed));
        out.emplace(img.p(), img.q());
    }
    return out;
}

}  // namespace

TEST(Group, Orders) {
    EXPECT_EQ(pc::group_order(1), 48u);
    EXPECT_EQ(pc::group_order(2), 2304u);
    EXPECT_EQ(pc::group_elements(1).size(), 48u);
    EXPECT_EQ(pc::group_elements(2).size(), 2304u);
}

TEST(Group, ElementsActDistinctlyOnGenericPair) {
    // A generic pair has trivial stabilizer, so distinct elements give distinct images.
    std::mt19937_64 rng(41);
    const SpectrumPair v = random_pair(rng, 2);
    std::set<Key> images;
    for (const auto &g : pc::group_elements(2)) {
        const auto img = pc::act(g, v);
        images.emplace(img.p(), img.q());
    }
    EXPECT_EQ(images.size(), 2304u);
}

TEST(Act, Identity) {
    std::mt19937_64 rng(42);
    for (int n = 1; n <= 2; ++n) {
        const auto v = random_pair(rng, n);
        EXPECT_EQ(pc::act(GroupElement::identity(n), v), v);
    }
}

TEST(Act, FlipExchangesSpectra) {
    std::mt19937_64 rng(43);
    GroupElement g = GroupElement::identity(2);
    g.x = true;
    const auto v = random_pair(rng, 2);
    const auto w = pc::act(g, v);
    EXPECT_EQ(w.p(), v.q());
    EXPECT_EQ(w.q(), v.p());
}

TEST(Act, SwapStabilizesOrderOneRay) {
    GroupElement g = GroupElement::identity(1);
    g.sigmas[0] = {0, 1, 3, 2};
    const auto v = SpectrumPair::from_p(1, {1, 1, 0, 0});
    EXPECT_EQ(pc::act(g, v), v);
}

TEST(Act, MatchesPermutationMatrices) {
    // V_tau (U_s1 (x) U_s2) applied as an explicit 16x16 matrix.
    std::mt19937_64 rng(44);
    for (int trial = 0; trial < 20; ++trial) {
        GroupElement g = random_element(rng, 2);
        g.x = false;
        oracle::Dense u[2];
        for (int m = 0; m < 2; ++m) {
            u[m].assign(4, std::vector<Rat>(4, Rat(0)));
            for (int i = 0; i < 4; ++i) {
                u[m][g.sigmas[m][i]][i] = 1;
            }
        }
        oracle::Dense full = oracle::kron(u[0], u[1]);
        if (g.tau[0] == 1) {
            oracle::Dense swap(16, std::vector<Rat>(16, Rat(0)));
            for (int i = 0; i < 4; ++i) {
                for (int j = 0; j < 4; ++j) {
                    swap[4 * j + i][4 * i + j] = 1;
                }
            }
            full = oracle::multiply(swap, full);
        }
        const auto v = random_pair(rng, 2);
        const auto w = pc::act(g, v);
        EXPECT_EQ(w.p(), oracle::apply(full, v.p()));
        EXPECT_EQ(w.q(), oracle::apply(full, v.q()));
    }
}

TEST(Act, CompositionLaw) {
    std::mt19937_64 rng(45);
    for (int n = 1; n <= 2; ++n) {
        for (int trial = 0; trial < 100; ++trial) {
            const auto &g = random_element(rng, n);
            const auto &h = random_element(rng, n);
            const auto v = random_pair(rng, n);
            EXPECT_EQ(pc::act(pc::compose(g, h), v), pc::act(g, pc::act(h, v)));
        }
    }
}

TEST(Act, PreservesCone) {
    std::mt19937_64 rng(46);
    for (int n = 1; n <= 2; ++n) {
        for (int trial = 0; trial < 100; ++trial) {
            const auto v = random_cone_member(rng, n);
            const auto w = pc::act(random_element(rng, n), v);
            EXPECT_TRUE(w.in_cone());
            EXPECT_EQ(w.q(), oracle::apply(oracle::kron_power(oracle::k_matrix(), n), w.p()));
        }
    }
}

TEST(Act, PermutesTheRays) {
    std::mt19937_64 rng(47);
    const auto &rays = pc::cone_rays(2);
    std::set<Key> all;
    for (const auto &r : rays) {
        all.emplace(r.p(), r.q());
    }
    for (int trial = 0; trial < 40; ++trial) {
        const auto &g = random_element(rng, 2);
        std::set<Key> image;
        for (const auto &r : rays) {
            const auto w = pc::act(g, r.pair);
            image.emplace(w.p(), w.q());
        }
        EXPECT_EQ(image, all);
    }
}

TEST(Act, RejectsBadInput) {
    EXPECT_THROW(pc::act(GroupElement::identity(1), SpectrumPair::from_p(2, RatVector(16, Rat(1)))),
                 std::invalid_argument);
    GroupElement bad = GroupElement::identity(1);
    bad.sigmas[0] = {0, 0, 1, 2};
    EXPECT_THROW(pc::act(bad, SpectrumPair::from_p(1, {1, 1, 0, 0})), std::invalid_argument);
}

TEST(Canonical, Idempotent) {
    std::mt19937_64 rng(48);
    for (int trial = 0; trial < 30; ++trial) {
        const auto v = random_cone_member(rng, 2);
        const auto c = pc::canonical_form(v);
        EXPECT_EQ(pc::canonical_form(c), c);
        EXPECT_EQ(pc::canonical_form(pc::act(random_element(rng, 2), v)), c);
    }
}

TEST(Canonical, IsLeastImage) {
    std::mt19937_64 rng(49);
    const auto v = random_cone_member(rng, 1);
    const auto c = pc::canonical_form(v);
    for (const auto &g : pc::group_elements(1)) {
        const auto w = pc::primitive_pair(pc::act(g, v));
        RatVector a = c.p(), b = w.p();
        a.insert(a.end(), c.q().begin(), c.q().end());
        b.insert(b.end(), w.q().begin(), w.q().end());
        EXPECT_LE(a, b);
    }
}

TEST(Canonical, BoxesShareForm) {
    const auto box = pc::canonical_form(pc::reference_box());
    for (const auto &r : pc::labeled_cone_rays(2)) {
        if (r.label == OrbitLabel::Box) {
            EXPECT_EQ(pc::canonical_form(r.pair), box);
        } else {
            EXPECT_NE(pc::canonical_form(r.pair), box);
        }
    }
}

TEST(Canonical, CrossAndItsTranspose) {
    const auto p3t = pc::pair_from_p_matrix(pc::p_matrix(pc::reference_cross()).transpose());
    EXPECT_EQ(pc::canonical_form(p3t), pc::canonical_form(pc::reference_cross()));
}

TEST(Orbits, OrderOne) {
    const auto reps = pc::orbit_decompose(pc::cone_rays(1));
    ASSERT_EQ(reps.size(), 1u);
    EXPECT_EQ(reps[0].size, 6u);
    EXPECT_EQ(reps[0].label, OrbitLabel::Box);
}

TEST(Orbits, OrderTwo) {
    const auto reps = pc::orbit_decompose(pc::cone_rays(2));
    ASSERT_EQ(reps.size(), 3u);
    std::map<OrbitLabel, std::size_t> sizes;
    for (const auto &r : reps) {
        sizes[r.label] = r.size;
        EXPECT_EQ(pc::group_order(2) % r.size, 0u);
    }
    EXPECT_EQ(sizes[OrbitLabel::Box], 36u);
    EXPECT_EQ(sizes[OrbitLabel::Diagonal], 24u);
    EXPECT_EQ(sizes[OrbitLabel::Cross], 192u);
    EXPECT_EQ(reps[0].label, OrbitLabel::Box);
    EXPECT_EQ(reps[2].label, OrbitLabel::Cross);
}

TEST(Orbits, Empty) {
    EXPECT_TRUE(pc::orbit_decompose({}).empty());
}

TEST(Orbits, SweepFromReferencesCoversCensus) {
    std::set<Key> all;
    for (const auto &r : pc::cone_rays(2)) {
        all.emplace(r.p(), r.q());
    }
    const auto box = orbit_by_sweep(pc::reference_box());
    const auto diag = orbit_by_sweep(pc::reference_diagonal());
    const auto cross = orbit_by_sweep(pc::reference_cross());
    EXPECT_EQ(box.size(), 36u);
    EXPECT_EQ(diag.size(), 24u);
    EXPECT_EQ(cross.size(), 192u);
    std::set<Key> uni = box;
    uni.insert(diag.begin(), diag.end());
    uni.insert(cross.begin(), cross.end());
    EXPECT_EQ(uni, all);
}

TEST(Orbits, LabelsOnCachedRays) {
    for (const auto &r : pc::labeled_cone_rays(2)) {
        ASSERT_TRUE(r.label);
        EXPECT_NE(*r.label, OrbitLabel::Other);
    }
    EXPECT_EQ(pc::parse_orbit_label("Cross"), OrbitLabel::Cross);
    EXPECT_EQ(pc::to_string(OrbitLabel::Diagonal), "Diagonal");
}
