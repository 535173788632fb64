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

// Acceptance checks 1..11. Each one recomputes what it needs from the
// library and compares against published fixtures or independent restatements.

#ifndef PAULI_CONE_VERIFICATION_HPP
#define PAULI_CONE_VERIFICATION_HPP

#include <array>
#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pauli_cone/cone_geometry.hpp"
#include "pauli_cone/decomposability.hpp"
#include "pauli_cone/pattern_combinatorics.hpp"
#include "pauli_cone/pauli_maps.hpp"
#include "pauli_cone/symmetry.hpp"

namespace pauli_cone {

struct CheckResult {
    int criterion = 0;
    std::string title;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

// Published fixtures, rows and columns in table_partitions() order.
inline constexpr CountTable kKostkaFixture{{{1, 1, 1, 1, 1, 2, 2, 3},
                                            {0, 1, 1, 2, 2, 4, 5, 7},
                                            {0, 0, 1, 1, 1, 1, 3, 6},
                                            {0, 0, 0, 1, 0, 1, 2, 3},
                                            {0, 0, 0, 0, 1, 1, 2, 3},
                                            {0, 0, 0, 0, 0, 1, 1, 2},
                                            {0, 0, 0, 0, 0, 0, 1, 3},
                                            {0, 0, 0, 0, 0, 0, 0, 1}}};

inline constexpr CountTable kCountFixture{{{0, 0, 0, 0, 0, 0, 0, 1},
                                           {0, 0, 0, 0, 0, 0, 1, 4},
                                           {0, 0, 0, 0, 0, 1, 2, 6},
                                           {0, 0, 0, 1, 0, 2, 5, 12},
                                           {0, 0, 0, 0, 1, 2, 5, 12},
                                           {0, 0, 1, 2, 2, 4, 12, 28},
                                           {0, 1, 2, 5, 5, 12, 24, 48},
                                           {1, 4, 6, 12, 12, 28, 48, 90}}};

// Matrices printed per cell of the class table, crossed-out ones included.
inline constexpr CountTable kPrintedClassFixture{{{0, 0, 0, 0, 0, 0, 0, 1},
                                                  {0, 0, 0, 0, 0, 0, 1, 1},
                                                  {0, 0, 0, 0, 0, 1, 1, 1},
                                                  {0, 0, 0, 1, 0, 1, 2, 1},
                                                  {0, 0, 0, 0, 1, 1, 2, 1},
                                                  {0, 0, 1, 1, 1, 1, 3, 2},
                                                  {0, 1, 1, 2, 2, 3, 6, 2},
                                                  {1, 1, 1, 1, 1, 2, 2, 2}}};

/// Unital cross multiplier with sum |mu| = 6.
inline MultiplierTensor cross_multiplier_fixture() {
    const std::array<int, 16> m{3, 1, 1, -1, -1, 1, -1, 1, -1, -1, 1, 1, 1, 1, 1, 1};
    RatVector v;
    for (int x : m) {
        v.push_back(frac(x, 3));
    }
    return {2, std::move(v)};
}

/// Criteria run by each CLI suite.
inline std::vector<int> suite_criteria(std::string_view suite) {
    if (suite == "all") {
        return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11};
    }
    if (suite == "rays") {
        return {1, 2, 3};
    }
    if (suite == "tables") {
        return {4};
    }
    if (suite == "pptsq") {
        return {8};
    }
    if (suite == "main") {
        return {5};
    }
    throw std::invalid_argument("unknown suite '" + std::string(suite) + "' (all|rays|tables|pptsq|main)");
}

inline constexpr std::uint64_t kDefaultSeed = 20240607;

// Seeded sample sets shared by the criteria that consume them.
namespace samples {

using Rng = std::mt19937_64;

/// Rational (x, y, z) in [-1, 1]^3 with a positive tensor square.
inline std::vector<std::array<Rat, 3>> positive_tensor_squares(std::uint64_t seed, std::size_t count) {
    Rng rng(seed);
    std::vector<std::array<Rat, 3>> out;
    while (out.size() < count) {
        std::array<Rat, 3> v{random_rat(rng, -1, 1), random_rat(rng, -1, 1), random_rat(rng, -1, 1)};
        if (tensor_square_positive(v[0], v[1], v[2])) {
            out.push_back(std::move(v));
        }
    }
    return out;
}

inline std::vector<MultiplierTensor> order1(std::uint64_t seed, std::size_t count) {
    Rng rng(seed ^ 0x1111);
    std::vector<MultiplierTensor> out;
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back({1, {Rat(1), random_rat(rng, -2, 2, 12), random_rat(rng, -2, 2, 12), random_rat(rng, -2, 2, 12)}});
    }
    return out;
}

/// Three generators in rotation: unital random multipliers, random points of
/// CP + coCP, and tensor products of random qubit maps.
inline std::vector<MultiplierTensor> order2(std::uint64_t seed, std::size_t count) {
    Rng rng(seed ^ 0x2222);
    std::vector<MultiplierTensor> out;
    const RatMatrix &k = exchange_power(2);
    std::bernoulli_distribution sparse(0.35);
    for (std::size_t i = 0; i < count; ++i) {
        switch (i % 3) {
            case 0: {
                RatVector v{Rat(1)};
                for (int j = 1; j < 16; ++j) {
                    v.push_back(random_rat(rng, -1, 1, 6));
                }
                out.emplace_back(2, std::move(v));
                break;
            }
            case 1: {
                RatVector s1(16), s2(16);
                for (std::size_t j = 0; j < 16; ++j) {
                    s1[j] = sparse(rng) ? random_rat(rng, 0, 1, 8) : Rat(0);
                    s2[j] = sparse(rng) ? random_rat(rng, 0, 1, 8) : Rat(0);
                }
                RatVector s = mat_vec<Rat>(k, s2);
                for (std::size_t j = 0; j < 16; ++j) {
                    s[j] += s1[j];
                }
                out.emplace_back(2, apply_kron_power<Rat>(choi_spectrum_matrix().transpose(), s, 2));
                break;
            }
            default: {
                auto qubit = [&] {
                    return MultiplierTensor(
                        1, {Rat(1), random_rat(rng, -1, 1, 10), random_rat(rng, -1, 1, 10), random_rat(rng, -1, 1, 10)});
                };
                out.push_back(tensor(qubit(), qubit()));
                break;
            }
        }
    }
    return out;
}

inline std::vector<MultiplierTensor> random_multipliers(std::uint64_t seed, int n, std::size_t count) {
    Rng rng(seed ^ (0x3333u + static_cast<unsigned>(n)));
    std::vector<MultiplierTensor> out;
    for (std::size_t i = 0; i < count; ++i) {
        RatVector v;
        for (std::size_t j = 0; j < pauli_dim(n); ++j) {
            v.push_back(random_rat(rng, -2, 2, 30));
        }
        out.emplace_back(n, std::move(v));
    }
    return out;
}

inline constexpr int kGridSteps = 50;

}  // namespace samples

namespace detail {

inline std::string table_mismatches(const CountTable &got, const CountTable &want, std::string_view what) {
    std::ostringstream out;
    const auto &ps = table_partitions();
    for (std::size_t i = 0; i < 8; ++i) {
        for (std::size_t j = 0; j < 8; ++j) {
            if (got[i][j] != want[i][j]) {
                out << what << " cell (" << ps[i] << "," << ps[j] << "): got " << got[i][j] << ", expected "
                    << want[i][j] << "; ";
            }
        }
    }
    return out.str();
}

inline std::set<std::pair<RatVector, RatVector>> as_set(const std::vector<RayGenerator> &rays) {
    std::set<std::pair<RatVector, RatVector>> s;
    for (const auto &r : rays) {
        s.emplace(r.p(), r.q());
    }
    return s;
}

inline CheckResult check_order1_census() {
    CheckResult r{1, "order-1 census: 6 rays {(e_i+e_j, complement)}", false, {}, 0};
    const auto t0 = std::chrono::steady_clock::now();
    const auto rays = enumerate_rays(1);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::set<std::pair<RatVector, RatVector>> expected;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i + 1; j < 4; ++j) {
            RatVector p(4, Rat(0)), q(4, Rat(1));
            p[i] = p[j] = 1;
            q[i] = q[j] = 0;
            expected.emplace(p, q);
        }
    }
    r.passed = rays.size() == 6 && as_set(rays) == expected && secs < 1.0;
    r.detail = std::to_string(rays.size()) + " rays in " + std::to_string(secs) + " s (limit 1 s)";
    return r;
}

inline CheckResult check_order2_census() {
    CheckResult r{2, "order-2 census: 252 rays, orbits 36/24/192, rank bound and biranks", false, {}, 0};
    const auto t0 = std::chrono::steady_clock::now();
    const auto rays = enumerate_rays(2);
    const auto orbits = orbit_decompose(rays);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream d;
    bool ok = rays.size() == 252;
    d << rays.size() << " rays;";
    std::vector<std::pair<OrbitLabel, std::size_t>> sizes;
    for (const auto &o : orbits) {
        sizes.emplace_back(o.label, o.size);
        d << " " << to_string(o.label) << "=" << o.size;
    }
    const std::vector<std::pair<OrbitLabel, std::size_t>> want{
        {OrbitLabel::Box, 36}, {OrbitLabel::Diagonal, 24}, {OrbitLabel::Cross, 192}};
    ok = ok && sizes == want;
    std::size_t bad_bound = 0, bad_birank = 0, not_extremal = 0;
    for (const auto &ray : rays) {
        if (ray.pattern.size() < 15 || !check_rank_bound(ray.pattern)) {
            ++bad_bound;
        }
        const int np = 16 - std::popcount(ray.pattern.p_zeros);
        const int nq = 16 - std::popcount(ray.pattern.q_zeros);
        if (np != nq || (np != 4 && np != 6)) {
            ++bad_birank;
        }
        if (!is_extremal(ray.pair)) {
            ++not_extremal;
        }
    }
    ok = ok && bad_bound == 0 && bad_birank == 0 && not_extremal == 0 && secs < 60.0;
    d << "; rank-bound failures " << bad_bound << ", birank failures " << bad_birank << ", non-extremal "
      << not_extremal << "; " << secs << " s (target 60 s)";
    r.passed = ok;
    r.detail = d.str();
    return r;
}

inline CheckResult check_box_generation() {
    CheckResult r{3, "36 tensor products of order-1 rays are exactly the Box orbit", false, {}, 0};
    const auto &r1 = cone_rays(1);
    std::vector<RayGenerator> products;
    for (const auto &a : r1) {
        for (const auto &b : r1) {
            products.push_back(tensor_rays(a, b));
        }
    }
    std::vector<RayGenerator> boxes;
    for (const auto &ray : labeled_cone_rays(2)) {
        if (ray.label == OrbitLabel::Box) {
            boxes.push_back(ray);
        }
    }
    const auto ps = as_set(products);
    r.passed = ps.size() == 36 && ps == as_set(boxes);
    r.detail = std::to_string(ps.size()) + " distinct products, " + std::to_string(boxes.size()) + " boxes";
    return r;
}

inline CheckResult check_tables() {
    CheckResult r{4, "Kostka table, |A(r,s)| by formula and enumeration, class counts", false, {}, 0};
    const CountTable k = kostka_table();
    const CountTable b = brualdi_table();
    const CountTable e = enumeration_table();
    const CountTable c = class_table();
    std::string mism = table_mismatches(k, kKostkaFixture, "kostka") + table_mismatches(b, e, "formula-vs-enum") +
                       table_mismatches(b, kCountFixture, "counts") + table_mismatches(c, kPrintedClassFixture, "classes");
    long long total = 0;
    for (const auto &row : c) {
        for (long long v : row) {
            total += v;
        }
    }
    r.passed = mism.empty();
    r.detail = "class total " + std::to_string(total) + " (transposes merged: " +
               std::to_string(transpose_merged_class_total()) + ")" + (mism.empty() ? "" : "; mismatches: " + mism);
    return r;
}

inline CheckResult check_positive_squares_decomposable(std::uint64_t seed) {
    CheckResult r{5, "positive tensor squares are decomposable (1000 exact samples)", false, {}, 0};
    const auto pts = samples::positive_tensor_squares(seed, 1000);
    std::size_t failures = 0;
    std::string first;
    for (const auto &v : pts) {
        if (!tensor_square_decomposable(v[0], v[1], v[2])) {
            if (failures++ == 0) {
                first = to_string(v[0]) + "," + to_string(v[1]) + "," + to_string(v[2]);
            }
        }
    }
    r.passed = failures == 0 && pts.size() >= 1000;
    r.detail = std::to_string(pts.size()) + " samples, " + std::to_string(failures) + " exceptions" +
               (first.empty() ? "" : " (first at " + first + ")");
    return r;
}

inline CheckResult check_oracle_equivalence(std::uint64_t seed) {
    CheckResult r{6, "ray oracle agrees with closed forms (1000 order-2, 1000 order-1)", false, {}, 0};
    std::size_t dis2 = 0, dec2 = 0, dis1 = 0, dec1 = 0;
    for (const auto &mu : samples::order2(seed, 1000)) {
        const bool ray = is_decomposable(mu, cone_rays(2)).decomposable;
        dec2 += ray ? 1 : 0;
        if (ray != is_decomposable_n2_closed_form(mu)) {
            ++dis2;
        }
    }
    for (const auto &mu : samples::order1(seed, 1000)) {
        const bool ray = is_decomposable(mu, cone_rays(1)).decomposable;
        dec1 += ray ? 1 : 0;
        if (ray != is_decomposable_n1_closed_form(mu)) {
            ++dis1;
        }
    }
    r.passed = dis1 == 0 && dis2 == 0;
    r.detail = "order 2: " + std::to_string(dis2) + " disagreements (" + std::to_string(dec2) +
               "/1000 decomposable); order 1: " + std::to_string(dis1) + " disagreements (" + std::to_string(dec1) +
               "/1000 decomposable)";
    return r;
}

inline CheckResult check_regions() {
    CheckResult r{7, "counterexample regions on a 50x50 grid and the two witness residuals", false, {}, 0};
    std::size_t bad = 0, nondec_theta = 0, nondec_lambda = 0;
    const int steps = samples::kGridSteps;
    for (int i = 0; i <= steps; ++i) {
        for (int j = 0; j <= steps; ++j) {
            const Rat u = frac(i, steps), t = frac(j, steps);
            // theta family, restated from the closed forms
            const RegionPoint th = region_theta(u, t);
            const bool th_pos = t <= 1 / (2 * u + 1);
            const bool th_nd = frac(1, 3) < t && t <= 1 / (2 * u + 1) && u > 0;
            if ((th.positive == Tri::True) != th_pos || (th_pos && !th.decomposable) != th_nd ||
                th.decomposable != is_decomposable(th.mu, cone_rays(2)).decomposable) {
                ++bad;
            }
            nondec_theta += th_nd ? 1 : 0;
            const RegionPoint la = region_lambda(u, t);
            const bool la_pos = u == 0 || t <= 1 / (2 * u);
            const bool la_nd = la_pos && 3 < 2 * u + t + 2 * u * t;
            if ((la.positive == Tri::True) != la_pos || (la_pos && !la.decomposable) != la_nd ||
                la.decomposable != is_decomposable(la.mu, cone_rays(2)).decomposable) {
                ++bad;
            }
            nondec_lambda += la_nd ? 1 : 0;
        }
    }
    const RegionPoint th = region_theta(frac(1, 2), frac(9, 20));
    const RegionPoint la = region_lambda(frac(2, 3), frac(3, 4));
    const Rat want_th = frac(-7, 20);
    const Rat want_la = 2 * (3 - frac(37, 12));
    const bool th_ok = th.positive == Tri::True && !th.decomposable && th.residual && *th.residual == want_th;
    const bool la_ok = la.positive == Tri::True && !la.decomposable && la.residual && *la.residual == want_la;
    r.passed = bad == 0 && th_ok && la_ok;
    std::ostringstream d;
    d << "grid inconsistencies " << bad << " (non-decomposable cells: theta " << nondec_theta << ", lambda "
      << nondec_lambda << "); (a,t)=(1/2,9/20) residual " << (th.residual ? to_string(*th.residual) : "none")
      << " vs expected " << want_th << "; (b,t)=(2/3,3/4) residual "
      << (la.residual ? to_string(*la.residual) : "none") << " vs expected " << want_la;
    r.detail = d.str();
    return r;
}

inline CheckResult check_ppt_squared() {
    CheckResult r{8, "all 192x192 cross compositions lie in cone(boxes, diagonals)", false, {}, 0};
    const auto t0 = std::chrono::steady_clock::now();
    const auto &rays = labeled_cone_rays(2);
    const PptSquaredReport full = ppt_squared_sweep(rays, PptSweep::Full);
    const PptSquaredReport reduced = ppt_squared_sweep(rays, PptSweep::Reduced);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.passed = full.all_members && full.pairs == 192 * 192 && reduced.all_members == full.all_members && secs < 300;
    r.detail = std::to_string(full.pairs) + " pairs (" + std::to_string(full.distinct_products) +
               " distinct products), reduced sweep " + std::to_string(reduced.pairs) + " pairs agrees: " +
               (reduced.all_members == full.all_members ? "yes" : "no") + "; " + std::to_string(secs) +
               " s (target 300 s)";
    return r;
}

inline CheckResult check_spectral_oracle(std::uint64_t seed) {
    CheckResult r{9, "Choi eigen-equations hold exactly (100 order-1, 100 order-2)", false, {}, 0};
    std::size_t fails = 0;
    for (int n : {1, 2}) {
        for (const auto &mu : samples::random_multipliers(seed, n, 100)) {
            if (!verify_spectrum(mu)) {
                ++fails;
            }
        }
    }
    r.passed = fails == 0;
    r.detail = std::to_string(fails) + " of 200 multipliers failed";
    return r;
}

inline CheckResult check_certificates(std::uint64_t seed) {
    CheckResult r{10, "every verdict from criteria 5-7 carries an exact certificate", false, {}, 0};
    std::size_t verdicts = 0, bad = 0, lp_backed = 0, ray_backed = 0;
    auto check = [&](const MultiplierTensor &mu) {
        const auto &rays = cone_rays(mu.order());
        const DecompVerdict v = is_decomposable(mu, rays);
        ++verdicts;
        (v.decomposable ? lp_backed : ray_backed) += 1;
        if (!certificate_holds(mu, v)) {
            ++bad;
        }
    };
    for (const auto &v : samples::positive_tensor_squares(seed, 1000)) {
        const MultiplierTensor m(1, {Rat(1), v[0], v[1], v[2]});
        check(tensor(m, m));
    }
    for (const auto &mu : samples::order2(seed, 1000)) {
        check(mu);
    }
    for (const auto &mu : samples::order1(seed, 1000)) {
        check(mu);
    }
    const int steps = samples::kGridSteps;
    for (int i = 0; i <= steps; ++i) {
        for (int j = 0; j <= steps; ++j) {
            check(region_theta(frac(i, steps), frac(j, steps)).mu);
            check(region_lambda(frac(i, steps), frac(j, steps)).mu);
        }
    }
    r.passed = bad == 0;
    r.detail = std::to_string(verdicts) + " verdicts (" + std::to_string(lp_backed) + " decomposition, " +
               std::to_string(ray_backed) + " separating ray), " + std::to_string(bad) + " invalid certificates";
    return r;
}

inline CheckResult check_realignment_witness() {
    CheckResult r{11, "realignment sum of the cross multiplier is 6 > 4", false, {}, 0};
    const MultiplierTensor fixture = cross_multiplier_fixture();
    // The same multiplier from the cross ray, normalized to mu_{11} = 1.
    const MultiplierTensor raw = spectrum_to_mult(reference_cross());
    RatVector scaled = raw.coeffs();
    for (auto &x : scaled) {
        x /= raw[0];
    }
    const Rat sum = realignment_sum(fixture);
    r.passed = sum == 6 && sum > 4 && MultiplierTensor(2, scaled) == fixture;
    r.detail = "sum |mu| = " + to_string(sum) + "; fixture " +
               (MultiplierTensor(2, scaled) == fixture ? "matches" : "differs from") + " the cross ray";
    return r;
}

}  // namespace detail

inline CheckResult run_criterion(int criterion, std::uint64_t seed = kDefaultSeed) {
    const auto t0 = std::chrono::steady_clock::now();
    CheckResult r;
    try {
        switch (criterion) {
            case 1: r = detail::check_order1_census(); break;
            case 2: r = detail::check_order2_census(); break;
            case 3: r = detail::check_box_generation(); break;
            case 4: r = detail::check_tables(); break;
            case 5: r = detail::check_positive_squares_decomposable(seed); break;
            case 6: r = detail::check_oracle_equivalence(seed); break;
            case 7: r = detail::check_regions(); break;
            case 8: r = detail::check_ppt_squared(); break;
            case 9: r = detail::check_spectral_oracle(seed); break;
            case 10: r = detail::check_certificates(seed); break;
            case 11: r = detail::check_realignment_witness(); break;
            default: throw std::invalid_argument("criterion must be 1..11, got " + std::to_string(criterion));
        }
    } catch (const std::invalid_argument &) {
        throw;
    } catch (const std::exception &e) {
        r = CheckResult{criterion, "criterion " + std::to_string(criterion), false,
                        std::string("exception: ") + e.what(), 0};
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

inline std::string format_result(const CheckResult &r) {
    std::ostringstream out;
    out << (r.passed ? "PASS" : "FAIL") << " [" << r.criterion << "] " << r.title << " -- " << r.detail;
    return out.str();
}

}  // namespace pauli_cone

#endif  // PAULI_CONE_VERIFICATION_HPP
