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

#ifndef PAULI_CONE_DECOMPOSABILITY_HPP
#define PAULI_CONE_DECOMPOSABILITY_HPP

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pauli_cone/cone_geometry.hpp"
#include "pauli_cone/lp.hpp"
#include "pauli_cone/matrix.hpp"
#include "pauli_cone/pauli_maps.hpp"
#include "pauli_cone/rational.hpp"
#include "pauli_cone/symmetry.hpp"

namespace pauli_cone {

/// s = D^n mu, the Choi spectrum.
inline RatVector spectral_vector(const MultiplierTensor &mu) {
    return apply_kron_power<Rat>(choi_spectrum_matrix(), mu.coeffs(), mu.order());
}

/// Order-2 spectral matrix S = D mu D^T, S[i][j] = s[4i+j].
inline RatMatrix spectral_matrix(const MultiplierTensor &mu) {
    if (mu.order() != 2) {
        throw std::invalid_argument("spectral_matrix: order must be 2");
    }
    const RatVector s = spectral_vector(mu);
    RatMatrix m(4, 4);
    for (std::size_t i = 0; i < 16; ++i) {
        m(i / 4, i % 4) = s[i];
    }
    return m;
}

/// Either mu = (D^T)^n s1 + (D~^T)^n s2 with s1, s2 >= 0, or a cone ray p
/// with <D^n mu, p> < 0.
struct DecompVerdict {
    bool decomposable = false;
    RatVector s1;
    RatVector s2;
    std::optional<RayGenerator> violating_ray;
    Rat violation;
};

/// Exact re-check of whichever certificate the verdict carries.
inline bool certificate_holds(const MultiplierTensor &mu, const DecompVerdict &v) {
    if (v.decomposable) {
        if (v.violating_ray || v.s1.size() != mu.coeffs().size() || v.s2.size() != mu.coeffs().size()) {
            return false;
        }
        if (!all_nonnegative(v.s1) || !all_nonnegative(v.s2)) {
            return false;
        }
        const int n = mu.order();
        RatVector a = apply_kron_power<Rat>(choi_spectrum_matrix().transpose(), v.s1, n);
        const RatVector b = apply_kron_power<Rat>(transposed_choi_spectrum_matrix().transpose(), v.s2, n);
        for (std::size_t i = 0; i < a.size(); ++i) {
            a[i] += b[i];
        }
        return a == mu.coeffs();
    }
    if (!v.violating_ray || v.violating_ray->order() != mu.order() || !v.violating_ray->pair.in_cone()) {
        return false;
    }
    const Rat value = dot(spectral_vector(mu), v.violating_ray->p());
    return value < 0 && value == v.violation;
}

/// Decides mu in CP + coCP against a complete list of extremal rays. The
/// positive verdict carries an LP certificate; if the LP disagrees with the
/// ray test the ray list was incomplete.
inline DecompVerdict is_decomposable(const MultiplierTensor &mu, const std::vector<RayGenerator> &rays) {
    const int n = mu.order();
    const RatVector s = spectral_vector(mu);
    for (const auto &r : rays) {
        if (r.order() != n) {
            throw std::invalid_argument("is_decomposable: ray order does not match the multiplier");
        }
    }
    for (const auto &r : rays) {
        Rat v = dot(s, r.p());
        if (v < 0) {
            DecompVerdict out;
            out.violating_ray = r;
            out.violation = std::move(v);
            return out;
        }
    }
    DecompVerdict out;
    out.decomposable = true;
    const std::size_t d = s.size();
    if (all_nonnegative(s)) {
        out.s1 = s;
        out.s2 = RatVector(d, Rat(0));
        return out;
    }
    const RatVector q = apply_kron_power<Rat>(spectrum_exchange_matrix(), s, n);
    if (all_nonnegative(q)) {
        out.s1 = RatVector(d, Rat(0));
        out.s2 = q;
        return out;
    }
    // In spectral coordinates: s = s1 + K^n s2.
    const RatMatrix &k = exchange_power(n);
    RatMatrix eq(d, 2 * d);
    for (std::size_t i = 0; i < d; ++i) {
        eq(i, i) = 1;
        for (std::size_t j = 0; j < d; ++j) {
            eq(i, d + j) = k(i, j);
        }
    }
    const auto x = lp_feasible(eq, s, 2 * d);
    if (!x) {
        throw std::logic_error("is_decomposable: no ray separates mu but CP + coCP is infeasible; ray list incomplete");
    }
    out.s1.assign(x->begin(), x->begin() + static_cast<std::ptrdiff_t>(d));
    out.s2.assign(x->begin() + static_cast<std::ptrdiff_t>(d), x->end());
    return out;
}

/// Order 1: with s sorted descending, decomposable (equivalently positive)
/// iff s3 >= 0 and s3 + s4 >= 0.
inline bool is_decomposable_n1_closed_form(const MultiplierTensor &mu) {
    if (mu.order() != 1) {
        throw std::invalid_argument("is_decomposable_n1_closed_form: order must be 1");
    }
    RatVector s = spectral_vector(mu);
    std::sort(s.begin(), s.end(), [](const Rat &a, const Rat &b) { return a > b; });
    return sgn(s[2]) >= 0 && sgn(s[2] + s[3]) >= 0;
}

/// The four order-2 inequality families, evaluated on S with row
/// permutation a and column permutation b (0-based).
///   0: block     S[a0,b0] + S[a0,b1] + S[a1,b0] + S[a1,b1]
///   1: diagonal  sum_k S[ak,bk]
///   2: cross     sum_{k<3} S[ak,bk] + S[a3,b0] + S[a3,b1] + S[a3,b2]
///   3: cross^T   sum_{k<3} S[ak,bk] + S[a0,b3] + S[a1,b3] + S[a2,b3]
template <class T>
T n2_family_value(const Matrix<T> &s, int family, const Perm4 &a, const Perm4 &b) {
    auto at = [&](int i, int j) -> const T & {
        return s(static_cast<std::size_t>(a[static_cast<std::size_t>(i)]),
                 static_cast<std::size_t>(b[static_cast<std::size_t>(j)]));
    };
    switch (family) {
        case 0:
            return at(0, 0) + at(0, 1) + at(1, 0) + at(1, 1);
        case 1:
            return at(0, 0) + at(1, 1) + at(2, 2) + at(3, 3);
        case 2:
            return at(0, 0) + at(1, 1) + at(2, 2) + at(3, 0) + at(3, 1) + at(3, 2);
        case 3:
            return at(0, 0) + at(1, 1) + at(2, 2) + at(0, 3) + at(1, 3) + at(2, 3);
        default:
            throw std::invalid_argument("n2_family_value: family must be 0..3");
    }
}

struct N2Violation {
    int family = 0;
    Perm4 sigma1{};
    Perm4 sigma2{};
    Rat value;
};

/// First (family, sigma1, sigma2) with a negative value, if any.
inline std::optional<N2Violation> first_n2_violation(const MultiplierTensor &mu) {
    const RatMatrix s = spectral_matrix(mu);
    // A positive rescaling to integers keeps every sign.
    const Int l = common_denominator(s.entries());
    Matrix<Int> si(4, 4, Int(0));
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            si(i, j) = s(i, j).get_num() * (l / s(i, j).get_den());
        }
    }
    const auto &perms = all_perm4();
    for (int f = 0; f < 4; ++f) {
        for (const auto &a : perms) {
            for (const auto &b : perms) {
                if (sgn(n2_family_value(si, f, a, b)) < 0) {
                    return N2Violation{f, a, b, n2_family_value(s, f, a, b)};
                }
            }
        }
    }
    return std::nullopt;
}

inline bool is_decomposable_n2_closed_form(const MultiplierTensor &mu) {
    if (mu.order() != 2) {
        throw std::invalid_argument("is_decomposable_n2_closed_form: order must be 2");
    }
    return !first_n2_violation(mu).has_value();
}

/// Positivity of the tensor square of the unital qubit map (1, x, y, z).
inline bool tensor_square_positive(const Rat &x, const Rat &y, const Rat &z) {
    const Rat x2 = x * x, y2 = y * y, z2 = z * z;
    return 1 + x2 >= y2 + z2 && 1 + y2 >= x2 + z2 && 1 + z2 >= x2 + y2;
}

/// Bracket inequality for every (sigma1, sigma2); s = D (1, x, y, z).
inline bool tensor_square_decomposable(const Rat &x, const Rat &y, const Rat &z) {
    if (!tensor_square_positive(x, y, z)) {
        throw std::domain_error("tensor_square_decomposable: tensor square is not positive at (" + to_string(x) +
                                ", " + to_string(y) + ", " + to_string(z) + ")");
    }
    const RatVector s = spectral_vector(MultiplierTensor(1, {Rat(1), x, y, z}));
    const auto &perms = all_perm4();
    for (const auto &a : perms) {
        for (const auto &b : perms) {
            Rat v = 0;
            for (std::size_t k = 0; k < 3; ++k) {
                v += (s[static_cast<std::size_t>(a[k])] + s[static_cast<std::size_t>(a[3])]) *
                     s[static_cast<std::size_t>(b[k])];
            }
            if (v < 0) {
                return false;
            }
        }
    }
    return true;
}

/// Primitive p-vectors of the 36 boxes and 24 diagonals.
inline const std::vector<RatVector> &box_diagonal_generators() {
    static const std::vector<RatVector> gens = [] {
        std::vector<RatVector> g;
        for (const auto &r : labeled_cone_rays(2)) {
            if (r.label == OrbitLabel::Box || r.label == OrbitLabel::Diagonal) {
                g.push_back(r.p());
            }
        }
        return g;
    }();
    return gens;
}

/// Conic LP: S = sum c_g G_g with c >= 0 over boxes and diagonals.
inline std::optional<RatVector> box_diagonal_coefficients(const RatMatrix &s) {
    if (s.rows() != 4 || s.cols() != 4) {
        throw std::invalid_argument("in_box_diagonal_cone: S must be 4x4");
    }
    const auto &gens = box_diagonal_generators();
    RatMatrix eq(16, gens.size());
    for (std::size_t g = 0; g < gens.size(); ++g) {
        for (std::size_t i = 0; i < 16; ++i) {
            eq(i, g) = gens[g][i];
        }
    }
    return lp_feasible(eq, s.entries(), gens.size());
}

inline bool in_box_diagonal_cone(const RatMatrix &s) {
    return box_diagonal_coefficients(s).has_value();
}

struct PptSquaredReport {
    bool all_members = true;
    std::size_t pairs = 0;
    std::size_t distinct_products = 0;
};

enum class PptSweep { Full, Reduced };

/// Composes every ordered pair of crosses (Reduced: one fixed cross against
/// all crosses, which covers every pair up to symmetry) and tests the
/// spectral matrix of the composition for membership in cone(boxes,
/// diagonals). Boxes and diagonals are entanglement breaking already.
inline PptSquaredReport ppt_squared_sweep(const std::vector<RayGenerator> &rays, PptSweep mode) {
    std::vector<RayGenerator> labeled = rays;
    if (std::any_of(labeled.begin(), labeled.end(), [](const RayGenerator &r) { return !r.label; })) {
        labeled = label_rays(std::move(labeled));
    }
    std::size_t box = 0, diag = 0;
    std::vector<RatVector> cross_mu;
    for (const auto &r : labeled) {
        if (r.order() != 2) {
            throw std::invalid_argument("verify_ppt_squared: rays must have order 2");
        }
        if (r.label == OrbitLabel::Box) {
            ++box;
        } else if (r.label == OrbitLabel::Diagonal) {
            ++diag;
        } else if (r.label == OrbitLabel::Cross) {
            cross_mu.push_back(spectrum_to_mult(r.pair).coeffs());
        }
    }
    if (box != 36 || diag != 24 || cross_mu.size() != 192) {
        throw std::invalid_argument("verify_ppt_squared: expected 36 boxes, 24 diagonals and 192 crosses, got " +
                                    std::to_string(box) + "/" + std::to_string(diag) + "/" +
                                    std::to_string(cross_mu.size()));
    }
    // Keyed by the Schur product itself; many pairs share it.
    std::map<RatVector, bool> memo;
    PptSquaredReport rep;
    const std::size_t first_count = mode == PptSweep::Full ? cross_mu.size() : 1;
    for (std::size_t i = 0; i < first_count; ++i) {
        for (std::size_t j = 0; j < cross_mu.size(); ++j) {
            RatVector prod(16);
            for (std::size_t k = 0; k < 16; ++k) {
                prod[k] = cross_mu[i][k] * cross_mu[j][k];
            }
            ++rep.pairs;
            auto it = memo.find(prod);
            if (it == memo.end()) {
                const RatMatrix s = spectral_matrix(MultiplierTensor(2, prod));
                it = memo.emplace(std::move(prod), in_box_diagonal_cone(s)).first;
            }
            rep.all_members = rep.all_members && it->second;
        }
    }
    rep.distinct_products = memo.size();
    return rep;
}

inline bool verify_ppt_squared(const std::vector<RayGenerator> &rays) {
    return ppt_squared_sweep(rays, PptSweep::Full).all_members;
}

enum class Tri { False, True, Unknown };

inline std::string_view to_string(Tri t) {
    return t == Tri::True ? "true" : t == Tri::False ? "false" : "unknown";
}

struct RegionPoint {
    std::vector<std::pair<std::string, Rat>> params;
    Tri positive = Tri::Unknown;
    bool decomposable = false;
    bool cp = false;
    bool cocp = false;
    bool ppt = false;
    MultiplierTensor mu{1, {Rat(1), Rat(0), Rat(0), Rat(0)}};
    // Value of the separating cross inequality, when it is negative.
    std::optional<Rat> residual;
};

namespace detail {

inline void require_unit_interval(const Rat &v, const char *name) {
    if (v < 0 || v > 1) {
        throw std::out_of_range(std::string(name) + " = " + to_string(v) + " is outside [0, 1]");
    }
}

inline RegionPoint finish_region(RegionPoint pt, bool closed_form_decomposable, const Perm4 &witness_sigma2) {
    pt.cp = is_cp(pt.mu);
    pt.cocp = is_cocp(pt.mu);
    pt.ppt = pt.cp && pt.cocp;
    pt.decomposable = pt.positive == Tri::True && closed_form_decomposable;
    if (is_decomposable_n2_closed_form(pt.mu) != pt.decomposable) {
        throw std::logic_error("region: closed-form decomposability disagrees with the inequality families");
    }
    Rat value = n2_family_value(spectral_matrix(pt.mu), 2, Perm4{0, 1, 2, 3}, witness_sigma2);
    if (value < 0) {
        pt.residual = std::move(value);
    }
    return pt;
}

}  // namespace detail

/// T_t (x) theta_a: positive iff t <= 1/(2a+1); positive and not
/// decomposable iff additionally t > 1/3 and a > 0.
inline RegionPoint region_theta(const Rat &a, const Rat &t) {
    detail::require_unit_interval(a, "a");
    detail::require_unit_interval(t, "t");
    RegionPoint pt;
    pt.params = {{"a", a}, {"t", t}};
    pt.mu = tensor(NamedQubitMap::depolarizing(t).multiplier(), NamedQubitMap::theta(a).multiplier());
    pt.positive = t * (2 * a + 1) <= 1 ? Tri::True : Tri::False;
    const bool decomposable = !(t > frac(1, 3) && a > 0);
    return detail::finish_region(std::move(pt), decomposable, Perm4{3, 1, 2, 0});
}

/// T_t (x) Pi_{lambda_b}: positive iff 2bt <= 1; positive and not
/// decomposable iff additionally 3 < 2b + t + 2bt.
inline RegionPoint region_lambda(const Rat &b, const Rat &t) {
    detail::require_unit_interval(b, "b");
    detail::require_unit_interval(t, "t");
    RegionPoint pt;
    pt.params = {{"b", b}, {"t", t}};
    pt.mu = tensor(NamedQubitMap::depolarizing(t).multiplier(), NamedQubitMap::lambda(b).multiplier());
    pt.positive = 2 * b * t <= 1 ? Tri::True : Tri::False;
    const bool decomposable = !(3 < 2 * b + t + 2 * b * t);
    return detail::finish_region(std::move(pt), decomposable, Perm4{2, 1, 3, 0});
}

/// Floating-point necessary condition for positivity of an order-2 map:
/// samples inputs (rho_x (x) 1)|Omega> over a polar mesh of the Bloch ball
/// and checks the output's least eigenvalue against -tol.
inline bool positivity_probe(const MultiplierTensor &mu, int grid = 64, double tol = 1e-9) {
    if (mu.order() != 2) {
        throw std::invalid_argument("positivity_probe: order must be 2");
    }
    if (grid < 8) {
        throw std::invalid_argument("positivity_probe: grid must be >= 8");
    }
    using C = std::complex<double>;
    using M2 = Eigen::Matrix2cd;
    using M4 = Eigen::Matrix4cd;
    const std::array<M2, 4> sig = [] {
        std::array<M2, 4> s;
        s[0] << 1, 0, 0, 1;
        s[1] << 0, 1, 1, 0;
        s[2] << 1, 0, 0, -1;
        s[3] << 0, C(0, -1), C(0, 1), 0;
        return s;
    }();
    std::array<M4, 16> basis;
    std::array<double, 16> weight{};
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            M4 &b = basis[4 * i + j];
            for (int r = 0; r < 4; ++r) {
                for (int c = 0; c < 4; ++c) {
                    b(r, c) = sig[i](r / 2, c / 2) * sig[j](r % 2, c % 2);
                }
            }
            weight[4 * i + j] = mu[4 * i + j].get_d() / 4.0;
        }
    }
    // Pure-state inputs factor into products and never detect entangled
    // witnesses, so the radius is sampled as well.
    const int radii = grid / 4;
    for (int ri = 0; ri <= radii; ++ri) {
        const double r = static_cast<double>(ri) / radii;
        const int polar = ri == 0 ? 1 : grid;
        for (int a = 0; a < polar; ++a) {
            const double phi1 = std::numbers::pi * a / (grid - 1);
            const int azimuth = ri == 0 ? 1 : grid;
            for (int b = 0; b < azimuth; ++b) {
                const double phi2 = 2 * std::numbers::pi * b / grid;
                const double x = r * std::sin(phi1) * std::cos(phi2);
                const double y = r * std::sin(phi1) * std::sin(phi2);
                const double z = r * std::cos(phi1);
                const M2 rho = 0.5 * (sig[0] + x * sig[1] + y * sig[3] + z * sig[2]);
                // (rho (x) 1)|Omega> is rho flattened row-major.
                Eigen::Vector4cd psi;
                psi << rho(0, 0), rho(0, 1), rho(1, 0), rho(1, 1);
                const M4 in = psi * psi.adjoint();
                M4 out = M4::Zero();
                for (std::size_t k = 0; k < 16; ++k) {
                    if (weight[k] != 0.0) {
                        out += weight[k] * (basis[k] * in).trace() * basis[k];
                    }
                }
                Eigen::SelfAdjointEigenSolver<M4> es(out, Eigen::EigenvaluesOnly);
                if (es.eigenvalues().minCoeff() < -tol) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace pauli_cone

#endif  // PAULI_CONE_DECOMPOSABILITY_HPP
