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

#ifndef PAULI_CONE_MATRIX_HPP
#define PAULI_CONE_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pauli_cone/rational.hpp"

namespace pauli_cone {

/// Dense row-major matrix over an exact field.
template <class T>
class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T &fill = T(0))
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
    Matrix(std::initializer_list<std::initializer_list<T>> rows) : rows_(rows.size()) {
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto &r : rows) {
            if (r.size() != cols_) {
                throw std::invalid_argument("Matrix: ragged initializer");
            }
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = T(1);
        }
        return m;
    }

    std::size_t rows() const {
        return rows_;
    }
    std::size_t cols() const {
        return cols_;
    }

    T &operator()(std::size_t i, std::size_t j) {
        return data_[i * cols_ + j];
    }
    const T &operator()(std::size_t i, std::size_t j) const {
        return data_[i * cols_ + j];
    }

    std::span<T> row(std::size_t i) {
        return {data_.data() + i * cols_, cols_};
    }
    std::span<const T> row(std::size_t i) const {
        return {data_.data() + i * cols_, cols_};
    }
    std::span<const T> entries() const {
        return data_;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                t(j, i) = (*this)(i, j);
            }
        }
        return t;
    }

    friend bool operator==(const Matrix &a, const Matrix &b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend Matrix operator*(const Matrix &a, const Matrix &b) {
        if (a.cols_ != b.rows_) {
            throw std::invalid_argument("Matrix product: shape mismatch");
        }
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T &aik = a(i, k);
                if (is_zero(aik)) {
                    continue;
                }
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    if (!is_zero(b(k, j))) {
                        c(i, j) += aik * b(k, j);
                    }
                }
            }
        }
        return c;
    }

    friend Matrix operator+(Matrix a, const Matrix &b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
            throw std::invalid_argument("Matrix sum: shape mismatch");
        }
        for (std::size_t i = 0; i < a.data_.size(); ++i) {
            a.data_[i] += b.data_[i];
        }
        return a;
    }

    friend std::ostream &operator<<(std::ostream &out, const Matrix &m) {
        for (std::size_t i = 0; i < m.rows_; ++i) {
            out << (i == 0 ? "[[" : " [");
            for (std::size_t j = 0; j < m.cols_; ++j) {
                out << (j ? ", " : "") << m(i, j);
            }
            out << (i + 1 == m.rows_ ? "]]" : "]\n");
        }
        return out;
    }

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using RatMatrix = Matrix<Rat>;

/// (A (x) B)[(i*rB + k), (j*cB + l)] = A[i,j] * B[k,l].
template <class T>
Matrix<T> kron(const Matrix<T> &a, const Matrix<T> &b) {
    Matrix<T> out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const T &aij = a(i, j);
            if (is_zero(aij)) {
                continue;
            }
            for (std::size_t k = 0; k < b.rows(); ++k) {
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
                }
            }
        }
    }
    return out;
}

template <class T>
std::vector<T> kron(std::span<const T> a, std::span<const T> b) {
    std::vector<T> out;
    out.reserve(a.size() * b.size());
    for (const auto &x : a) {
        for (const auto &y : b) {
            out.push_back(x * y);
        }
    }
    return out;
}

template <class T>
Matrix<T> kron_power(const Matrix<T> &a, int n) {
    Matrix<T> out = Matrix<T>::identity(1);
    for (int i = 0; i < n; ++i) {
        out = kron(out, a);
    }
    return out;
}

template <class T>
std::vector<T> mat_vec(const Matrix<T> &a, std::span<const T> v) {
    if (a.cols() != v.size()) {
        throw std::invalid_argument("mat_vec: shape mismatch");
    }
    std::vector<T> out(a.rows(), T(0));
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (!is_zero(a(i, j)) && !is_zero(v[j])) {
                out[i] += a(i, j) * v[j];
            }
        }
    }
    return out;
}

/// Applies m^{(x) n} to a flat vector of length d^n without forming the
/// d^n x d^n matrix. Slot 0 is the most significant digit.
template <class T>
std::vector<T> apply_kron_power(const Matrix<T> &m, std::span<const T> v, int n) {
    const std::size_t d = m.rows();
    if (m.cols() != d) {
        throw std::invalid_argument("apply_kron_power: factor must be square");
    }
    std::size_t total = 1;
    for (int i = 0; i < n; ++i) {
        total *= d;
    }
    if (v.size() != total) {
        throw std::invalid_argument("apply_kron_power: vector length is not d^n");
    }
    std::vector<T> cur(v.begin(), v.end());
    std::vector<T> next(total);
    std::size_t stride = total;
    for (int slot = 0; slot < n; ++slot) {
        stride /= d;
        for (std::size_t base = 0; base < total; base += stride * d) {
            for (std::size_t off = 0; off < stride; ++off) {
                for (std::size_t i = 0; i < d; ++i) {
                    T acc(0);
                    for (std::size_t j = 0; j < d; ++j) {
                        const T &x = cur[base + j * stride + off];
                        if (!is_zero(m(i, j)) && !is_zero(x)) {
                            acc += m(i, j) * x;
                        }
                    }
                    next[base + i * stride + off] = std::move(acc);
                }
            }
        }
        std::swap(cur, next);
    }
    return cur;
}

/// Rank over Q by fraction-free (Bareiss) elimination. Each row is first
/// scaled to integers so that all intermediate values are exact integers.
inline std::size_t rank(const RatMatrix &a) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    std::vector<IntVector> rows;
    rows.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        const Int l = common_denominator(a.row(i));
        IntVector r;
        r.reserve(n);
        for (const auto &x : a.row(i)) {
            r.push_back(x.get_num() * (l / x.get_den()));
        }
        rows.push_back(std::move(r));
    }
    std::size_t rk = 0;
    Int prev = 1;
    for (std::size_t col = 0; col < n && rk < m; ++col) {
        std::size_t piv = rk;
        while (piv < m && rows[piv][col] == 0) {
            ++piv;
        }
        if (piv == m) {
            continue;
        }
        std::swap(rows[piv], rows[rk]);
        for (std::size_t i = rk + 1; i < m; ++i) {
            for (std::size_t j = col + 1; j < n; ++j) {
                Int v = rows[rk][col] * rows[i][j] - rows[i][col] * rows[rk][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                rows[i][j] = std::move(v);
            }
            rows[i][col] = 0;
        }
        prev = rows[rk][col];
        ++rk;
    }
    return rk;
}

}  // namespace pauli_cone

#endif  // PAULI_CONE_MATRIX_HPP
