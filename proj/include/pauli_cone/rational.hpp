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

#ifndef PAULI_CONE_RATIONAL_HPP
#define PAULI_CONE_RATIONAL_HPP

#include <gmpxx.h>

#include <cctype>
#include <cstdint>
#include <ostream>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pauli_cone {

/// Arbitrary precision rational, always kept in lowest terms with a positive
/// denominator (GMP canonical form).
using Rat = mpq_class;
using Int = mpz_class;
using RatVector = std::vector<Rat>;
using IntVector = std::vector<Int>;

/// Parses "a", "-a", "+a" or "a/b". Decimal points and zero denominators are
/// rejected; exact paths never see floating point.
inline Rat parse_rat(std::string_view text) {
    auto is_int = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
            s.remove_prefix(1);
        }
        if (s.empty()) {
            return false;
        }
        for (char c : s) {
            if (!std::isdigit(static_cast<unsigned char>(c))) {
                return false;
            }
        }
        return true;
    };
    auto strip_plus = [](std::string_view s) {
        if (!s.empty() && s.front() == '+') {
            s.remove_prefix(1);
        }
        return std::string(s);
    };
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_int(num) || !is_int(den) || den.front() == '-' || den.front() == '+') {
        throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
    }
    Int n(strip_plus(num), 10);
    Int d(std::string(den), 10);
    if (d == 0) {
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    Rat r(n, d);
    r.canonicalize();
    return r;
}

/// num/den in lowest terms. Prefer this to Rat(num, den), which GMP does not
/// canonicalize.
inline Rat frac(long num, long den) {
    if (den == 0) {
        throw std::invalid_argument("frac: zero denominator");
    }
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rat &r) {
    return r.get_str();
}

inline Rat abs_value(const Rat &r) {
    return r < 0 ? Rat(-r) : r;
}

/// Exact Gaussian rational re + i*im.
struct GaussRat {
    Rat re;
    Rat im;

    GaussRat() = default;
    GaussRat(Rat real) : re(std::move(real)), im(0) {}
    GaussRat(int real) : re(real), im(0) {}
    GaussRat(Rat real, Rat imag) : re(std::move(real)), im(std::move(imag)) {}

    GaussRat conj() const {
        return {re, Rat(-im)};
    }

    GaussRat &operator+=(const GaussRat &o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussRat &operator-=(const GaussRat &o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussRat &operator*=(const GaussRat &o) {
        Rat r = re * o.re - im * o.im;
        Rat i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }

    friend GaussRat operator+(GaussRat a, const GaussRat &b) {
        return a += b;
    }
    friend GaussRat operator-(GaussRat a, const GaussRat &b) {
        return a -= b;
    }
    friend GaussRat operator*(GaussRat a, const GaussRat &b) {
        return a *= b;
    }
    friend GaussRat operator-(const GaussRat &a) {
        return {Rat(-a.re), Rat(-a.im)};
    }
    friend bool operator==(const GaussRat &a, const GaussRat &b) {
        return a.re == b.re && a.im == b.im;
    }
    friend std::ostream &operator<<(std::ostream &out, const GaussRat &z) {
        return out << z.re << (z.im < 0 ? "-" : "+") << abs_value(z.im) << "i";
    }
};

inline bool is_zero(const Rat &r) {
    return sgn(r) == 0;
}
inline bool is_zero(const GaussRat &z) {
    return sgn(z.re) == 0 && sgn(z.im) == 0;
}

/// Least common multiple of the denominators.
inline Int common_denominator(std::span<const Rat> v) {
    Int l = 1;
    for (const auto &x : v) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    }
    return l;
}

/// Scales v by a positive rational so that all entries are integers with
/// gcd 1. The zero vector maps to the zero vector.
inline IntVector primitive_integer_form(std::span<const Rat> v) {
    const Int l = common_denominator(v);
    IntVector out;
    out.reserve(v.size());
    Int g = 0;
    for (const auto &x : v) {
        Int k = x.get_num() * (l / x.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), k.get_mpz_t());
        out.push_back(std::move(k));
    }
    if (g > 1) {
        for (auto &k : out) {
            mpz_divexact(k.get_mpz_t(), k.get_mpz_t(), g.get_mpz_t());
        }
    }
    return out;
}

inline IntVector primitive_integer_form(std::span<const Int> v) {
    Int g = 0;
    for (const auto &k : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), k.get_mpz_t());
    }
    IntVector out(v.begin(), v.end());
    if (g > 1) {
        for (auto &k : out) {
            mpz_divexact(k.get_mpz_t(), k.get_mpz_t(), g.get_mpz_t());
        }
    }
    return out;
}

inline RatVector to_rat(std::span<const Int> v) {
    return RatVector(v.begin(), v.end());
}

inline Rat dot(std::span<const Rat> a, std::span<const Rat> b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("dot: length mismatch");
    }
    Rat acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) != 0 && sgn(b[i]) != 0) {
            acc += a[i] * b[i];
        }
    }
    return acc;
}

/// Uniform rational in [lo, hi] on a grid with denominator up to max_den.
template <class Rng>
Rat random_rat(Rng &rng, const Rat &lo, const Rat &hi, int max_den = 60) {
    std::uniform_int_distribution<int> den_dist(1, max_den);
    const int den = den_dist(rng);
    const Rat width = hi - lo;
    // Pick k/den * width + lo for k in [0, den].
    std::uniform_int_distribution<int> k_dist(0, den);
    return Rat(lo + width * frac(k_dist(rng), den));
}

}  // namespace pauli_cone

#endif  // PAULI_CONE_RATIONAL_HPP
