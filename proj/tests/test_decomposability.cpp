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

#include <random>
#include <stdexcept>
#include <vector>

#include "pauli_cone/decomposability.hpp"
#include "test_support.hpp"

namespace pc = pauli_cone;
using pc::MultiplierTensor;
using pc::Perm4;
using pc::Rat;
using pc::RatVector;
using pc::Tri;

namespace {

const Perm4 kId{0, 1, 2, 3};
const Perm4 kSwap14{3, 1, 2, 0};
const Perm4 kCycle134{2, 1, 3, 0};

MultiplierTensor mu_from_spectrum(int n, const RatVector &s) {
    return {n, oracle::apply(oracle::transpose(oracle::kron_power(oracle::d_matrix(), n)), s)};
}

// S[i][j] = (D (x) D mu)[4i+j], computed densely.
oracle::Dense spectral_oracle(const MultiplierTensor &mu) {
    const RatVector s = oracle::apply(oracle::kron_power(oracle::d_matrix(), 2), mu.coeffs());
    oracle::Dense m(4, std::vector<Rat>(4));
    for (std::size_t i = 0; i < 16; ++i) {
        m[i / 4][i % 4] = s[i];
    }
    return m;
}

MultiplierTensor random_ppt(std::mt19937_64 &rng) {
    const auto &rays = pc::cone_rays(2);
    std::uniform_int_distribution<std::size_t> pick(0, rays.size() - 1);
    RatVector p(16, Rat(0));
    for (int t = 0; t < 3; ++t) {
        const Rat w = oracle::random_rat(rng, 0, 2, 7);
        const auto &r = rays[pick(rng)];
        for (std::size_t i = 0; i < 16; ++i) {
            p[i] += w * r.p()[i];
        }
    }
    return pc::spectrum_to_mult(pc::SpectrumPair::from_p(2, p));
}

MultiplierTensor theta_witness() {
    return pc::tensor(pc::NamedQubitMap::depolarizing(pc::frac(9, 20)).multiplier(),
                      pc::NamedQubitMap::theta(pc::frac(1, 2)).multiplier());
}

}  // namespace

TEST(Spectral, MatrixMatchesDenseOracle) {
    std::mt19937_64 rng(51);
    const MultiplierTensor mu{2, oracle::random_vector(rng, 16, -2, 2, 5)};
    const auto s = pc::spectral_matrix(mu);
    const auto want = spectral_oracle(mu);
    // S = D M D^T with M[i][j] = mu[4i+j].
    oracle::Dense m(4, std::vector<Rat>(4));
    for (std::size_t i = 0; i < 16; ++i) {
        m[i / 4][i % 4] = mu[i];
    }
    const auto d = oracle::d_matrix();
    EXPECT_EQ(oracle::multiply(oracle::multiply(d, m), oracle::transpose(d)), want);
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            EXPECT_EQ(s(i, j), want[i][j]);
        }
    }
    EXPECT_THROW(pc::spectral_matrix({1, {1, 0, 0, 0}}), std::invalid_argument);
}

TEST(RayOracle, TransposeMap) {
    const MultiplierTensor mu{1, {1, 1, 1, -1}};
    const auto v = pc::is_decomposable(mu, pc::cone_rays(1));
    ASSERT_TRUE(v.decomposable);
    EXPECT_EQ(v.s1, RatVector(4, Rat(0)));
    EXPECT_EQ(v.s2, oracle::apply(oracle::d_tilde_matrix(), mu.coeffs()));
    EXPECT_TRUE(pc::certificate_holds(mu, v));
}

TEST(RayOracle, CompletelyDepolarizing) {
    const MultiplierTensor mu{1, {1, 0, 0, 0}};
    const auto v = pc::is_decomposable(mu, pc::cone_rays(1));
    EXPECT_TRUE(v.decomposable);
    EXPECT_TRUE(pc::certificate_holds(mu, v));
}

TEST(RayOracle, ThetaWitnessIsSeparatedByACross) {
    const auto mu = theta_witness();
    const auto v = pc::is_decomposable(mu, pc::labeled_cone_rays(2));
    ASSERT_FALSE(v.decomposable);
    ASSERT_TRUE(v.violating_ray);
    EXPECT_EQ(v.violating_ray->label, pc::OrbitLabel::Cross);
    EXPECT_LT(v.violation, 0);
    EXPECT_TRUE(pc::certificate_holds(mu, v));
}

TEST(RayOracle, MixedCertificateNeedsTheLp) {
    // Half identity plus half transpose at order 2: neither CP nor coCP alone.
    const MultiplierTensor id{2, RatVector(16, Rat(1))};
    const MultiplierTensor tr = pc::tensor(MultiplierTensor(1, {1, 1, 1, -1}), MultiplierTensor(1, {1, 1, 1, -1}));
    RatVector c(16);
    for (std::size_t i = 0; i < 16; ++i) {
        c[i] = (id[i] + tr[i]) / 2;
    }
    const MultiplierTensor mu{2, c};
    EXPECT_FALSE(pc::is_cp(mu));
    EXPECT_FALSE(pc::is_cocp(mu));
    const auto v = pc::is_decomposable(mu, pc::cone_rays(2));
    ASSERT_TRUE(v.decomposable);
    EXPECT_TRUE(pc::certificate_holds(mu, v));
}

TEST(RayOracle, TamperedCertificatesFail) {
    const auto mu = theta_witness();
    auto v = pc::is_decomposable(mu, pc::cone_rays(2));
    v.violation += 1;
    EXPECT_FALSE(pc::certificate_holds(mu, v));
    const MultiplierTensor ok{1, {1, 1, 1, -1}};
    auto w = pc::is_decomposable(ok, pc::cone_rays(1));
    w.s2[0] += 1;
    EXPECT_FALSE(pc::certificate_holds(ok, w));
}

TEST(RayOracle, IncompleteListIsDetected) {
    // Dropping every ray leaves no separating functional for a non-decomposable map.
    EXPECT_THROW(pc::is_decomposable(theta_witness(), {}), std::logic_error);
    EXPECT_THROW(pc::is_decomposable(MultiplierTensor(1, {1, 0, 0, 0}), pc::cone_rays(2)), std::invalid_argument);
}

TEST(ClosedFormN1, Examples) {
    EXPECT_TRUE(pc::is_decomposable_n1_closed_form({1, {1, 1, 1, -1}}));
    const auto bad = mu_from_spectrum(1, {3, 1, 1, -2});
    EXPECT_FALSE(pc::is_decomposable_n1_closed_form(bad));
    EXPECT_FALSE(pc::is_decomposable(bad, pc::cone_rays(1)).decomposable);
    EXPECT_TRUE(pc::is_decomposable_n1_closed_form(pc::NamedQubitMap::depolarizing(pc::frac(1, 2)).multiplier()));
    EXPECT_THROW(pc::is_decomposable_n1_closed_form({2, RatVector(16)}), std::invalid_argument);
}

TEST(ClosedFormN1, AgreesWithRayOracle) {
    std::mt19937_64 rng(52);
    for (int trial = 0; trial < 300; ++trial) {
        const MultiplierTensor mu{1, oracle::random_vector(rng, 4, -2, 2, 8)};
        EXPECT_EQ(pc::is_decomposable_n1_closed_form(mu), pc::is_decomposable(mu, pc::cone_rays(1)).decomposable);
    }
}

TEST(ClosedFormN2, FamilyValuesByHand) {
    std::mt19937_64 rng(53);
    const MultiplierTensor mu{2, oracle::random_vector(rng, 16, -2, 2, 5)};
    const auto s = spectral_oracle(mu);
    const auto m = pc::spectral_matrix(mu);
    const Perm4 a{1, 3, 0, 2}, b{2, 0, 3, 1};
    EXPECT_EQ(pc::n2_family_value(m, 0, a, b), s[1][2] + s[1][0] + s[3][2] + s[3][0]);
    EXPECT_EQ(pc::n2_family_value(m, 1, a, b), s[1][2] + s[3][0] + s[0][3] + s[2][1]);
    EXPECT_EQ(pc::n2_family_value(m, 2, a, b), s[1][2] + s[3][0] + s[0][3] + s[2][2] + s[2][0] + s[2][3]);
    EXPECT_EQ(pc::n2_family_value(m, 3, a, b), s[1][2] + s[3][0] + s[0][3] + s[1][1] + s[3][1] + s[0][1]);
    EXPECT_THROW(pc::n2_family_value(m, 4, a, b), std::invalid_argument);
}

TEST(ClosedFormN2, ThetaWitnessViolatesThirdFamily) {
    const auto mu = theta_witness();
    EXPECT_FALSE(pc::is_decomposable_n2_closed_form(mu));
    const auto s = spectral_oracle(mu);
    // Rows id, columns (14): S[0][3] + S[1][1] + S[2][2] + S[3][3] + S[3][1] + S[3][2].
    const Rat value = s[0][3] + s[1][1] + s[2][2] + s[3][3] + s[3][1] + s[3][2];
    EXPECT_EQ(pc::n2_family_value(pc::spectral_matrix(mu), 2, kId, kSwap14), value);
    EXPECT_LT(value, 0);
    const auto first = pc::first_n2_violation(mu);
    ASSERT_TRUE(first);
    EXPECT_GE(first->family, 2);
}

TEST(ClosedFormN2, WitnessResidualClosedForms) {
    std::mt19937_64 rng(54);
    for (int trial = 0; trial < 50; ++trial) {
        const Rat a = oracle::random_rat(rng, 0, 1, 12), t = oracle::random_rat(rng, 0, 1, 12);
        const auto th = pc::tensor(pc::NamedQubitMap::depolarizing(t).multiplier(), pc::NamedQubitMap::theta(a).multiplier());
        EXPECT_EQ(pc::n2_family_value(pc::spectral_matrix(th), 2, kId, kSwap14), a * (1 - 3 * t));
        const Rat b = a;
        const auto la = pc::tensor(pc::NamedQubitMap::depolarizing(t).multiplier(), pc::NamedQubitMap::lambda(b).multiplier());
        EXPECT_EQ(pc::n2_family_value(pc::spectral_matrix(la), 2, kId, kCycle134), (3 - 2 * b - t - 2 * b * t) / 2);
    }
}

TEST(ClosedFormN2, BoxParametersArePpt) {
    const auto mu = pc::spectrum_to_mult(pc::reference_box());
    EXPECT_TRUE(pc::is_ppt(mu));
    EXPECT_TRUE(pc::is_decomposable_n2_closed_form(mu));
}

TEST(ClosedFormN2, AgreesWithRayOracle) {
    std::mt19937_64 rng(55);
    int dec = 0;
    for (int trial = 0; trial < 200; ++trial) {
        RatVector v = oracle::random_vector(rng, 16, -1, 1, 4);
        // Every other sample is pulled toward the completely depolarizing map.
        if (trial % 2 == 0) {
            for (auto &x : v) {
                x /= 4;
            }
        }
        v[0] = 1;
        const MultiplierTensor mu{2, v};
        const auto verdict = pc::is_decomposable(mu, pc::cone_rays(2));
        EXPECT_EQ(pc::is_decomposable_n2_closed_form(mu), verdict.decomposable);
        EXPECT_TRUE(pc::certificate_holds(mu, verdict));
        dec += verdict.decomposable ? 1 : 0;
    }
    // Both outcomes occur.
    EXPECT_GT(dec, 0);
    EXPECT_LT(dec, 200);
}

TEST(ClosedFormN2, PptMapsSatisfyFirstTwoFamilies) {
    std::mt19937_64 rng(56);
    for (int trial = 0; trial < 40; ++trial) {
        const auto mu = random_ppt(rng);
        ASSERT_TRUE(pc::is_ppt(mu));
        const auto s = pc::spectral_matrix(mu);
        for (int f = 0; f < 2; ++f) {
            for (const auto &a : pc::all_perm4()) {
                for (const auto &b : pc::all_perm4()) {
                    EXPECT_GE(pc::n2_family_value(s, f, a, b), 0);
                }
            }
        }
    }
}

TEST(TensorSquare, PositivityExamples) {
    EXPECT_TRUE(pc::tensor_square_positive(1, 1, 1));
    EXPECT_TRUE(pc::tensor_square_positive(1, 1, -1));
    EXPECT_FALSE(pc::tensor_square_positive(1, 1, pc::frac(1, 2)));
}

TEST(TensorSquare, PositivityIsSymmetricUnderSignsAndPermutations) {
    std::mt19937_64 rng(57);
    for (int trial = 0; trial < 200; ++trial) {
        const auto v = oracle::random_vector(rng, 3, -1, 1, 7);
        const bool base = pc::tensor_square_positive(v[0], v[1], v[2]);
        EXPECT_EQ(pc::tensor_square_positive(v[1], v[2], v[0]), base);
        EXPECT_EQ(pc::tensor_square_positive(v[0], -v[1], v[2]), base);
    }
}

TEST(TensorSquare, DecomposabilityExamples) {
    EXPECT_TRUE(pc::tensor_square_decomposable(1, 1, 1));
    EXPECT_THROW(pc::tensor_square_decomposable(1, 1, pc::frac(1, 2)), std::domain_error);
}

TEST(TensorSquare, AgreesWithRayOracleOnSquares) {
    std::mt19937_64 rng(58);
    int checked = 0;
    while (checked < 60) {
        const auto v = oracle::random_vector(rng, 3, -1, 1, 6);
        if (!pc::tensor_square_positive(v[0], v[1], v[2])) {
            continue;
        }
        const MultiplierTensor q{1, {1, v[0], v[1], v[2]}};
        const auto verdict = pc::is_decomposable(pc::tensor(q, q), pc::cone_rays(2));
        EXPECT_EQ(pc::tensor_square_decomposable(v[0], v[1], v[2]), verdict.decomposable);
        EXPECT_TRUE(verdict.decomposable);
        ++checked;
    }
}

TEST(TensorSquare, ProbeSeesNonPositiveSquare) {
    const MultiplierTensor q{1, {1, 1, 1, pc::frac(1, 2)}};
    EXPECT_FALSE(pc::positivity_probe(pc::tensor(q, q), 32));
    std::mt19937_64 rng(59);
    int checked = 0;
    while (checked < 10) {
        const auto v = oracle::random_vector(rng, 3, -1, 1, 6);
        if (!pc::tensor_square_positive(v[0], v[1], v[2])) {
            continue;
        }
        const MultiplierTensor p{1, {1, v[0], v[1], v[2]}};
        EXPECT_TRUE(pc::positivity_probe(pc::tensor(p, p), 16));
        ++checked;
    }
}

TEST(BoxDiagonalCone, Membership) {
    EXPECT_TRUE(pc::in_box_diagonal_cone(pc::p_matrix(pc::reference_box())));
    EXPECT_TRUE(pc::in_box_diagonal_cone(pc::p_matrix(pc::reference_diagonal())));
    EXPECT_FALSE(pc::in_box_diagonal_cone(pc::p_matrix(pc::reference_cross())));
    EXPECT_THROW(pc::in_box_diagonal_cone(pc::RatMatrix(3, 3)), std::invalid_argument);
}

TEST(BoxDiagonalCone, SquaredCross) {
    const std::array<int, 16> m{3, 1, 1, -1, -1, 1, -1, 1, -1, -1, 1, 1, 1, 1, 1, 1};
    RatVector v;
    for (int x : m) {
        v.push_back(pc::frac(x, 3));
    }
    const MultiplierTensor cross{2, v};
    EXPECT_EQ(pc::canonical_form(pc::mult_to_spectrum(cross)), pc::canonical_form(pc::reference_cross()));
    const auto s = pc::spectral_matrix(pc::schur_compose(cross, cross));
    const auto coeffs = pc::box_diagonal_coefficients(s);
    ASSERT_TRUE(coeffs);
    // Reconstruct S from the generators.
    const auto &gens = pc::box_diagonal_generators();
    ASSERT_EQ(gens.size(), 60u);
    RatVector sum(16, Rat(0));
    for (std::size_t g = 0; g < gens.size(); ++g) {
        EXPECT_GE((*coeffs)[g], 0);
        for (std::size_t i = 0; i < 16; ++i) {
            sum[i] += (*coeffs)[g] * gens[g][i];
        }
    }
    EXPECT_EQ(sum, RatVector(s.entries().begin(), s.entries().end()));
}

TEST(PptSquared, ReducedSweep) {
    const auto rep = pc::ppt_squared_sweep(pc::labeled_cone_rays(2), pc::PptSweep::Reduced);
    EXPECT_TRUE(rep.all_members);
    EXPECT_EQ(rep.pairs, 192u);
}

TEST(PptSquared, RejectsIncompleteList) {
    std::vector<pc::RayGenerator> rays = pc::labeled_cone_rays(2);
    rays.pop_back();
    EXPECT_THROW(pc::ppt_squared_sweep(rays, pc::PptSweep::Reduced), std::invalid_argument);
}

TEST(Regions, ThetaExamples) {
    const auto p = pc::region_theta(0, 1);
    EXPECT_EQ(p.positive, Tri::True);
    EXPECT_TRUE(p.decomposable);
    const auto w = pc::region_theta(pc::frac(1, 2), pc::frac(9, 20));
    EXPECT_EQ(w.positive, Tri::True);
    EXPECT_FALSE(w.decomposable);
    ASSERT_TRUE(w.residual);
    EXPECT_EQ(*w.residual, pc::frac(-7, 40));
    EXPECT_EQ(pc::region_theta(1, pc::frac(1, 2)).positive, Tri::False);
    EXPECT_EQ(pc::region_theta(1, pc::frac(1, 3)).positive, Tri::True);
}

TEST(Regions, LambdaExamples) {
    const auto w = pc::region_lambda(pc::frac(2, 3), pc::frac(3, 4));
    EXPECT_EQ(w.positive, Tri::True);
    EXPECT_FALSE(w.decomposable);
    ASSERT_TRUE(w.residual);
    EXPECT_EQ(*w.residual, pc::frac(-1, 24));
    for (int k = 0; k <= 10; ++k) {
        const auto p = pc::region_lambda(pc::frac(1, 2), pc::frac(k, 10));
        EXPECT_TRUE(pc::is_cp(pc::NamedQubitMap::lambda(pc::frac(1, 2)).multiplier()));
        EXPECT_TRUE(p.decomposable);
    }
    const auto z = pc::region_lambda(0, 0);
    EXPECT_EQ(z.positive, Tri::True);
    EXPECT_TRUE(z.decomposable);
}

TEST(Regions, OutOfRange) {
    EXPECT_THROW(pc::region_theta(pc::frac(-1, 2), 0), std::out_of_range);
    EXPECT_THROW(pc::region_lambda(0, pc::frac(3, 2)), std::out_of_range);
}

TEST(Regions, PositiveSetIsDownwardClosedInT) {
    const int steps = 20;
    for (int i = 0; i <= steps; ++i) {
        bool seen_non_positive = false;
        for (int j = 0; j <= steps; ++j) {
            const auto p = pc::region_theta(pc::frac(i, steps), pc::frac(j, steps));
            if (p.positive == Tri::False) {
                seen_non_positive = true;
            } else {
                EXPECT_FALSE(seen_non_positive) << i << "," << j;
            }
        }
    }
}

TEST(Regions, DecomposableFlagMatchesRayOracleOnPositivePoints) {
    const int steps = 8;
    for (int i = 0; i <= steps; ++i) {
        for (int j = 0; j <= steps; ++j) {
            for (const auto &p : {pc::region_theta(pc::frac(i, steps), pc::frac(j, steps)),
                                  pc::region_lambda(pc::frac(i, steps), pc::frac(j, steps))}) {
                if (p.positive != Tri::True) {
                    EXPECT_FALSE(p.decomposable);
                    continue;
                }
                const auto v = pc::is_decomposable(p.mu, pc::cone_rays(2));
                EXPECT_EQ(p.decomposable, v.decomposable);
                EXPECT_EQ(p.ppt, pc::is_cp(p.mu) && pc::is_cocp(p.mu));
            }
        }
    }
}

TEST(Probe, Examples) {
    EXPECT_TRUE(pc::positivity_probe(pc::region_theta(1, pc::frac(1, 3)).mu, 32));
    EXPECT_FALSE(pc::positivity_probe(pc::region_theta(1, pc::frac(1, 2)).mu, 32));
    EXPECT_TRUE(pc::positivity_probe({2, RatVector(16, Rat(1))}, 32));
    EXPECT_THROW(pc::positivity_probe({1, {1, 0, 0, 0}}), std::invalid_argument);
    EXPECT_THROW(pc::positivity_probe({2, RatVector(16, Rat(1))}, 4), std::invalid_argument);
}

TEST(Probe, AgreesWithClosedFormAwayFromBoundary) {
    for (const auto &[a, t] : std::vector<std::pair<Rat, Rat>>{
             {pc::frac(1, 2), pc::frac(1, 4)}, {pc::frac(1, 2), pc::frac(3, 4)}, {pc::frac(1, 4), pc::frac(1, 2)}}) {
        const auto p = pc::region_theta(a, t);
        EXPECT_EQ(pc::positivity_probe(p.mu, 32), p.positive == Tri::True) << a << "," << t;
    }
    for (const auto &[b, t] : std::vector<std::pair<Rat, Rat>>{{pc::frac(1, 2), pc::frac(1, 2)}, {1, 1}}) {
        const auto p = pc::region_lambda(b, t);
        EXPECT_EQ(pc::positivity_probe(p.mu, 32), p.positive == Tri::True) << b << "," << t;
    }
}
