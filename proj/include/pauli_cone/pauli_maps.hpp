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

#ifndef PAULI_CONE_PAULI_MAPS_HPP
#define PAULI_CONE_PAULI_MAPS_HPP

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pauli_cone/matrix.hpp"
#include "pauli_cone/rational.hpp"

namespace pauli_cone {

/// 4^n, the dimension of the multiplier space of an n-qubit Pauli diagonal map.
inline std::size_t pauli_dim(int n) {
    if (n < 0 || n > 15) {
        throw std::invalid_argument("tensor order out of range: " + std::to_string(n));
    }
    return std::size_t{1} << (2 * n);
}

// Rows are ordered by the Bell basis (Phi+, Psi+, Phi-, Psi-); columns by the
// Pauli basis (1, X, Z, Y).
inline const RatMatrix &choi_spectrum_matrix() {
    static const RatMatrix d = [] {
        RatMatrix m{{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}};
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = 0; j < 4; ++j) {
                m(i, j) /= 2;
            }
        }
        return m;
    }();
    return d;
}

// Spectrum of the partial transpose, rows ordered (Psi-, Phi-, Psi+, Phi+).
inline const RatMatrix &transposed_choi_spectrum_matrix() {
    static const RatMatrix d = [] {
        RatMatrix m{{1, -1, -1, -1}, {1, -1, 1, 1}, {1, 1, -1, 1}, {1, 1, 1, -1}};
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = 0; j < 4; ++j) {
                m(i, j) /= 2;
            }
        }
        return m;
    }();
    return d;
}

/// Maps the Choi spectrum p to the partial-transpose spectrum q = K p.
/// Symmetric, orthogonal and an involution.
inline const RatMatrix &spectrum_exchange_matrix() {
    static const RatMatrix k = transposed_choi_spectrum_matrix() * choi_spectrum_matrix().transpose();
    return k;
}

/// Parameters of an n-th order Pauli diagonal map. Index (i_1, ..., i_n) is
/// flattened with i_1 most significant, matching kron().
class MultiplierTensor {
   public:
    MultiplierTensor(int order, RatVector coeffs) : order_(order), coeffs_(std::move(coeffs)) {
        if (order_ < 1) {
            throw std::invalid_argument("MultiplierTensor: order must be >= 1");
        }
        if (coeffs_.size() != pauli_dim(order_)) {
            throw std::invalid_argument("MultiplierTensor: expected " + std::to_string(pauli_dim(order_)) +
                                        " coefficients, got " + std::to_string(coeffs_.size()));
        }
    }

    int order() const {
        return order_;
    }
    const RatVector &coeffs() const {
        return coeffs_;
    }
    const Rat &operator[](std::size_t flat) const {
        return coeffs_[flat];
    }

    friend bool operator==(const MultiplierTensor &, const MultiplierTensor &) = default;

   private:
    int order_;
    RatVector coeffs_;
};

/// Multiplier of the tensor product of two Pauli diagonal maps.
inline MultiplierTensor tensor(const MultiplierTensor &a, const MultiplierTensor &b) {
    return {a.order() + b.order(), kron<Rat>(a.coeffs(), b.coeffs())};
}

/// Spectra (p, q) of the Choi matrix and of its partial transpose.
/// Invariant: q = K^{(x) n} p.
class SpectrumPair {
   public:
    SpectrumPair(int order, RatVector p, RatVector q) : order_(order), p_(std::move(p)), q_(std::move(q)) {
        if (p_.size() != pauli_dim(order_) || q_.size() != pauli_dim(order_)) {
            throw std::invalid_argument("SpectrumPair: wrong vector length");
        }
        if (apply_kron_power<Rat>(spectrum_exchange_matrix(), p_, order_) != q_) {
            throw std::invalid_argument("SpectrumPair: q != K^n p");
        }
    }

    static SpectrumPair from_p(int order, RatVector p) {
        RatVector q = apply_kron_power<Rat>(spectrum_exchange_matrix(), p, order);
        return SpectrumPair(order, std::move(p), std::move(q), Unchecked{});
    }

    int order() const {
        return order_;
    }
    const RatVector &p() const {
        return p_;
    }
    const RatVector &q() const {
        return q_;
    }

    bool is_zero() const {
        for (const auto &x : p_) {
            if (sgn(x) != 0) {
                return false;
            }
        }
        return true;
    }
    /// p >= 0 and q >= 0 entrywise.
    bool in_cone() const {
        for (std::size_t i = 0; i < p_.size(); ++i) {
            if (sgn(p_[i]) < 0 || sgn(q_[i]) < 0) {
                return false;
            }
        }
        return true;
    }

    friend bool operator==(const SpectrumPair &, const SpectrumPair &) = default;

   private:
    struct Unchecked {};
    SpectrumPair(int order, RatVector p, RatVector q, Unchecked)
        : order_(order), p_(std::move(p)), q_(std::move(q)) {}

    int order_;
    RatVector p_;
    RatVector q_;
};

inline SpectrumPair mult_to_spectrum(const MultiplierTensor &mu) {
    return SpectrumPair::from_p(mu.order(), apply_kron_power<Rat>(choi_spectrum_matrix(), mu.coeffs(), mu.order()));
}

inline MultiplierTensor spectrum_to_mult(const SpectrumPair &pair) {
    return {pair.order(), apply_kron_power<Rat>(choi_spectrum_matrix().transpose(), pair.p(), pair.order())};
}

inline bool all_nonnegative(std::span<const Rat> v) {
    for (const auto &x : v) {
        if (sgn(x) < 0) {
            return false;
        }
    }
    return true;
}

inline bool is_cp(const MultiplierTensor &mu) {
    return all_nonnegative(apply_kron_power<Rat>(choi_spectrum_matrix(), mu.coeffs(), mu.order()));
}

inline bool is_cocp(const MultiplierTensor &mu) {
    return all_nonnegative(apply_kron_power<Rat>(transposed_choi_spectrum_matrix(), mu.coeffs(), mu.order()));
}

inline bool is_ppt(const MultiplierTensor &mu) {
    return is_cp(mu) && is_cocp(mu);
}

using GaussMatrix = Matrix<GaussRat>;

/// sigma_1..sigma_4 = 1, X, Z, Y.
inline const std::array<GaussMatrix, 4> &pauli_matrices() {
    static const std::array<GaussMatrix, 4> sigmas = [] {
        GaussMatrix id{{1, 0}, {0, 1}};
        GaussMatrix x{{0, 1}, {1, 0}};
        GaussMatrix z{{1, 0}, {0, -1}};
        GaussMatrix y{{0, GaussRat(0, -1)}, {GaussRat(0, 1), 0}};
        return std::array<GaussMatrix, 4>{id, x, z, y};
    }();
    return sigmas;
}

/// Exact Choi matrix with the tensor factors reshuffled as A1 B1 A2 B2 ...
/// Unnormalized: Tr C = 2^n * mu_{1...1}.
struct ChoiMatrix {
    int order = 0;
    GaussMatrix entries;
    bool partial_transpose = false;

    bool is_hermitian() const {
        for (std::size_t i = 0; i < entries.rows(); ++i) {
            for (std::size_t j = 0; j < entries.cols(); ++j) {
                if (!(entries(i, j) == entries(j, i).conj())) {
                    return false;
                }
            }
        }
        return true;
    }

    GaussRat trace() const {
        GaussRat t;
        for (std::size_t i = 0; i < entries.rows(); ++i) {
            t += entries(i, i);
        }
        return t;
    }
};

/// C = sum mu/2^n sigma (x) sigma^T (x) ...; with partial_transpose the
/// second factor of every slot is sigma instead of sigma^T.
inline ChoiMatrix build_choi(const MultiplierTensor &mu, bool partial_transpose) {
    const int n = mu.order();
    if (n > 4) {
        throw std::invalid_argument("build_choi: order too large for a dense Choi matrix");
    }
    const auto &sig = pauli_matrices();
    std::array<GaussMatrix, 4> factors;
    for (int i = 0; i < 4; ++i) {
        factors[i] = kron(sig[i], partial_transpose ? sig[i] : sig[i].transpose());
    }
    const std::size_t dim = pauli_dim(n);
    GaussMatrix c(dim, dim);
    const Rat scale = frac(1, 1L << n);
    for (std::size_t flat = 0; flat < dim; ++flat) {
        if (sgn(mu[flat]) == 0) {
            continue;
        }
        GaussMatrix term = GaussMatrix::identity(1);
        std::size_t rest = flat;
        std::size_t weight = dim;
        for (int slot = 0; slot < n; ++slot) {
            weight /= 4;
            term = kron(term, factors[rest / weight]);
            rest %= weight;
        }
        const GaussRat coeff(Rat(mu[flat] * scale));
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = 0; j < dim; ++j) {
                if (!is_zero(term(i, j))) {
                    c(i, j) += coeff * term(i, j);
                }
            }
        }
    }
    return {n, std::move(c), partial_transpose};
}

// Unnormalized Bell vectors: columns of U_1 (Choi) and U_2 (partial transpose).
inline const std::array<std::array<int, 4>, 4> &bell_columns(bool partial_transpose) {
    static const std::array<std::array<int, 4>, 4> u1{{{1, 0, 0, 1}, {0, 1, 1, 0}, {1, 0, 0, -1}, {0, 1, -1, 0}}};
    static const std::array<std::array<int, 4>, 4> u2{{{0, 1, -1, 0}, {1, 0, 0, -1}, {0, 1, 1, 0}, {1, 0, 0, 1}}};
    return partial_transpose ? u2 : u1;
}

/// Checks every eigen-equation C v_k = p_k v_k and C^Gamma w_k = q_k w_k
/// exactly, with v_k, w_k tensor products of Bell vectors.
inline bool verify_spectrum(const MultiplierTensor &mu) {
    const int n = mu.order();
    if (n > 3) {
        throw std::invalid_argument("verify_spectrum: order must be <= 3");
    }
    const SpectrumPair spec = mult_to_spectrum(mu);
    const std::size_t dim = pauli_dim(n);
    for (bool pt : {false, true}) {
        const ChoiMatrix c = build_choi(mu, pt);
        if (!c.is_hermitian()) {
            return false;
        }
        const auto &cols = bell_columns(pt);
        const RatVector &eig = pt ? spec.q() : spec.p();
        for (std::size_t k = 0; k < dim; ++k) {
            RatVector v{1};
            std::size_t rest = k;
            std::size_t weight = dim;
            for (int slot = 0; slot < n; ++slot) {
                weight /= 4;
                const auto &col = cols[rest / weight];
                rest %= weight;
                RatVector b(col.begin(), col.end());
                v = kron<Rat>(v, b);
            }
            for (std::size_t i = 0; i < dim; ++i) {
                GaussRat acc;
                for (std::size_t j = 0; j < dim; ++j) {
                    if (sgn(v[j]) != 0 && !is_zero(c.entries(i, j))) {
                        acc += c.entries(i, j) * GaussRat(v[j]);
                    }
                }
                if (!(acc == GaussRat(Rat(eig[k] * v[i])))) {
                    return false;
                }
            }
        }
    }
    return true;
}

/// Sum of |mu|; > 2^n witnesses that the map is not entanglement breaking.
/// Requires a unital trace-preserving map (mu_{1...1} = 1).
inline Rat realignment_sum(const MultiplierTensor &mu) {
    if (mu[0] != 1) {
        throw std::domain_error("realignment_sum: map is not unital and trace-preserving (mu_{1..1} = " +
                                to_string(mu[0]) + ")");
    }
    Rat s = 0;
    for (const auto &x : mu.coeffs()) {
        s += abs_value(x);
    }
    return s;
}

/// Composition of Pauli diagonal maps is the entrywise product of multipliers.
inline MultiplierTensor schur_compose(const MultiplierTensor &a, const MultiplierTensor &b) {
    if (a.order() != b.order()) {
        throw std::invalid_argument("schur_compose: order mismatch");
    }
    RatVector c(a.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = a[i] * b[i];
    }
    return {a.order(), std::move(c)};
}

/// The single-qubit families used for counterexamples.
struct NamedQubitMap {
    enum class Kind { Depolarizing, Theta, Lambda, Custom };

    Kind kind;
    Rat x;
    Rat y;
    Rat z;

    static NamedQubitMap depolarizing(const Rat &t) {
        return {Kind::Depolarizing, t, t, t};
    }
    static NamedQubitMap theta(const Rat &a) {
        return {Kind::Theta, 1, 1, 1 - 2 * a};
    }
    static NamedQubitMap lambda(const Rat &b) {
        return {Kind::Lambda, b, 0, b};
    }
    static NamedQubitMap custom(const Rat &x, const Rat &y, const Rat &z) {
        return {Kind::Custom, x, y, z};
    }

    /// Parses "depol:t", "theta:a", "lambda:b".
    static NamedQubitMap parse(std::string_view spec) {
        const auto colon = spec.find(':');
        if (colon == std::string_view::npos) {
            throw std::invalid_argument("family must be name:value, got '" + std::string(spec) + "'");
        }
        const auto name = spec.substr(0, colon);
        const Rat v = parse_rat(spec.substr(colon + 1));
        if (name == "depol") {
            return depolarizing(v);
        }
        if (name == "theta") {
            return theta(v);
        }
        if (name == "lambda") {
            return lambda(v);
        }
        throw std::invalid_argument("unknown family '" + std::string(name) + "'");
    }

    MultiplierTensor multiplier() const {
        return {1, {Rat(1), x, y, z}};
    }
};

}  // namespace pauli_cone

#endif  // PAULI_CONE_PAULI_MAPS_HPP
