/*
 * Copyright 2026 permchar developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef PERMCHAR_MATRIX_HPP
#define PERMCHAR_MATRIX_HPP

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <utility>
#include <vector>

#include "permchar/field.hpp"

namespace pc {

struct SizeMismatch : std::runtime_error {
    explicit SizeMismatch(const char* what = "matrix size mismatch") : std::runtime_error(what) {}
};
struct IndexOutOfRange : std::runtime_error {
    IndexOutOfRange() : std::runtime_error("index out of range") {}
};
struct MultiplicityOutOfRange : std::runtime_error {
    MultiplicityOutOfRange() : std::runtime_error("multiplicity outside {0..p-1}") {}
};

/// Ring context helpers. A ring value carries its own context (field pointer,
/// truncation, variable count); zero_like/one_like produce constants in the
/// same context as a sample value.
template <class R>
R zero_like(const R& like);
template <class R>
R one_like(const R& like);

template <>
inline FElem zero_like<FElem>(const FElem& like) { return FElem::zero(like.field()); }
template <>
inline FElem one_like<FElem>(const FElem& like) { return FElem::one(like.field()); }

/// Dense matrix over a coefficient ring. Keeps a prototype zero element so
/// empty matrices still know their context. Indices are 0-based.
template <class R>
class Matrix {
  public:
    Matrix() = default;
    Matrix(int rows, int cols, const R& proto_zero)
        : r_(rows), c_(cols), proto_(zero_like(proto_zero)), d_(size_t(rows) * cols, zero_like(proto_zero)) {}

    static Matrix identity(int n, const R& proto) {
        Matrix m(n, n, proto);
        for (int i = 0; i < n; ++i) m(i, i) = one_like(proto);
        return m;
    }
    static Matrix diag(const std::vector<R>& d) {
        if (d.empty()) throw SizeMismatch("diag of empty vector needs context");
        Matrix m(int(d.size()), int(d.size()), d[0]);
        for (size_t i = 0; i < d.size(); ++i) m(int(i), int(i)) = d[i];
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }
    bool square() const { return r_ == c_; }
    const R& proto() const { return proto_; }

    R& operator()(int i, int j) { return d_[size_t(i) * c_ + j]; }
    const R& operator()(int i, int j) const { return d_[size_t(i) * c_ + j]; }

    bool operator==(const Matrix& o) const { return r_ == o.r_ && c_ == o.c_ && d_ == o.d_; }

    Matrix transpose() const {
        Matrix t(c_, r_, proto_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix operator+(const Matrix& o) const {
        if (r_ != o.r_ || c_ != o.c_) throw SizeMismatch();
        Matrix s = *this;
        for (size_t i = 0; i < d_.size(); ++i) s.d_[i] = d_[i] + o.d_[i];
        return s;
    }
    Matrix operator-(const Matrix& o) const {
        if (r_ != o.r_ || c_ != o.c_) throw SizeMismatch();
        Matrix s = *this;
        for (size_t i = 0; i < d_.size(); ++i) s.d_[i] = d_[i] - o.d_[i];
        return s;
    }
    Matrix operator*(const Matrix& o) const {
        if (c_ != o.r_) throw SizeMismatch();
        Matrix s(r_, o.c_, proto_);
        for (int i = 0; i < r_; ++i)
            for (int l = 0; l < c_; ++l) {
                const R& a = (*this)(i, l);
                if (a.is_zero()) continue;
                for (int j = 0; j < o.c_; ++j) s(i, j) = s(i, j) + a * o(l, j);
            }
        return s;
    }
    Matrix operator-() const {
        Matrix s = *this;
        for (auto& x : s.d_) x = -x;
        return s;
    }
    Matrix scaled(const R& a) const {
        Matrix s = *this;
        for (auto& x : s.d_) x = x * a;
        return s;
    }
    std::vector<R> apply(const std::vector<R>& v) const {
        if (int(v.size()) != c_) throw SizeMismatch();
        std::vector<R> out(r_, zero_like(proto_));
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) out[i] = out[i] + (*this)(i, j) * v[j];
        return out;
    }

  private:
    int r_ = 0, c_ = 0;
    R proto_;
    std::vector<R> d_;
};

using MatrixF = Matrix<FElem>;

namespace detail {
inline void check_indices(const std::vector<int>& idx, int n) {
    for (int i : idx)
        if (i < 0 || i >= n) throw IndexOutOfRange{};
}
}  // namespace detail

/// A^[I->J]: rows at positions J are replaced by the rows with indices from I,
/// paired in increasing order.
template <class R>
Matrix<R> replacement_matrix(const Matrix<R>& a, std::vector<int> I, std::vector<int> J) {
    if (I.size() != J.size()) throw SizeMismatch("replacement needs |I| == |J|");
    detail::check_indices(I, a.rows());
    detail::check_indices(J, a.rows());
    std::sort(I.begin(), I.end());
    std::sort(J.begin(), J.end());
    Matrix<R> m = a;
    for (size_t t = 0; t < I.size(); ++t)
        for (int j = 0; j < a.cols(); ++j) m(J[t], j) = a(I[t], j);
    return m;
}

/// Double replacement A^[I->J, K->L]: rows as above, and columns at positions
/// from L replaced by the columns with indices from K.
template <class R>
Matrix<R> double_replacement_matrix(const Matrix<R>& a, std::vector<int> I, std::vector<int> J,
                                    std::vector<int> K, std::vector<int> L) {
    if (K.size() != L.size()) throw SizeMismatch("replacement needs |K| == |L|");
    detail::check_indices(K, a.cols());
    detail::check_indices(L, a.cols());
    Matrix<R> m = replacement_matrix(a, std::move(I), std::move(J));
    std::sort(K.begin(), K.end());
    std::sort(L.begin(), L.end());
    Matrix<R> m2 = m;
    for (size_t t = 0; t < K.size(); ++t)
        for (int i = 0; i < a.rows(); ++i) m2(i, L[t]) = m(i, K[t]);
    return m2;
}

/// Bijection form: for each (i, f1(i)) the row at position f1(i) becomes row i;
/// likewise (k, f2(k)) for columns. Needed where row order matters (ham).
template <class R>
Matrix<R> double_replacement_bij(const Matrix<R>& a, const std::vector<std::pair<int, int>>& row_map,
                                 const std::vector<std::pair<int, int>>& col_map) {
    Matrix<R> m = a;
    for (auto [i, fi] : row_map) {
        if (i < 0 || i >= a.rows() || fi < 0 || fi >= a.rows()) throw IndexOutOfRange{};
        for (int j = 0; j < a.cols(); ++j) m(fi, j) = a(i, j);
    }
    Matrix<R> m2 = m;
    for (auto [k, fk] : col_map) {
        if (k < 0 || k >= a.cols() || fk < 0 || fk >= a.cols()) throw IndexOutOfRange{};
        for (int i = 0; i < a.rows(); ++i) m2(i, fk) = m(i, k);
    }
    return m2;
}

/// A^[I, J]: rows with indices in I doubled, columns with indices in J doubled;
/// each copy is adjacent to the original.
template <class R>
Matrix<R> repeat_matrix(const Matrix<R>& a, std::vector<int> I, std::vector<int> J) {
    detail::check_indices(I, a.rows());
    detail::check_indices(J, a.cols());
    std::sort(I.begin(), I.end());
    std::sort(J.begin(), J.end());
    std::vector<int> rsel, csel;
    for (int i = 0; i < a.rows(); ++i) {
        rsel.push_back(i);
        if (std::binary_search(I.begin(), I.end(), i)) rsel.push_back(i);
    }
    for (int j = 0; j < a.cols(); ++j) {
        csel.push_back(j);
        if (std::binary_search(J.begin(), J.end(), j)) csel.push_back(j);
    }
    Matrix<R> m(int(rsel.size()), int(csel.size()), a.proto());
    for (size_t i = 0; i < rsel.size(); ++i)
        for (size_t j = 0; j < csel.size(); ++j) m(int(i), int(j)) = a(rsel[i], csel[j]);
    return m;
}

/// A^(I, J): the submatrix on rows I and columns J, in the given order.
template <class R>
Matrix<R> submatrix(const Matrix<R>& a, const std::vector<int>& I, const std::vector<int>& J) {
    detail::check_indices(I, a.rows());
    detail::check_indices(J, a.cols());
    Matrix<R> m(int(I.size()), int(J.size()), a.proto());
    for (size_t i = 0; i < I.size(); ++i)
        for (size_t j = 0; j < J.size(); ++j) m(int(i), int(j)) = a(I[i], J[j]);
    return m;
}

/// A^(\I, \J): remove rows I and columns J.
template <class R>
Matrix<R> remove_matrix(const Matrix<R>& a, std::vector<int> I, std::vector<int> J) {
    detail::check_indices(I, a.rows());
    detail::check_indices(J, a.cols());
    std::sort(I.begin(), I.end());
    std::sort(J.begin(), J.end());
    std::vector<int> rsel, csel;
    for (int i = 0; i < a.rows(); ++i)
        if (!std::binary_search(I.begin(), I.end(), i)) rsel.push_back(i);
    for (int j = 0; j < a.cols(); ++j)
        if (!std::binary_search(J.begin(), J.end(), j)) csel.push_back(j);
    return submatrix(a, rsel, csel);
}

/// A^(alpha, beta): row i repeated alpha_i times, column j repeated beta_j
/// times (zero multiplicity removes the row/column).
template <class R>
Matrix<R> multiplicity_power(const Matrix<R>& a, const std::vector<int>& alpha,
                             const std::vector<int>& beta, int p) {
    if (int(alpha.size()) != a.rows() || int(beta.size()) != a.cols())
        throw SizeMismatch("multiplicity vectors must match matrix shape");
    for (int m : alpha)
        if (m < 0 || m > p - 1) throw MultiplicityOutOfRange{};
    for (int m : beta)
        if (m < 0 || m > p - 1) throw MultiplicityOutOfRange{};
    std::vector<int> rsel, csel;
    for (int i = 0; i < a.rows(); ++i)
        for (int t = 0; t < alpha[i]; ++t) rsel.push_back(i);
    for (int j = 0; j < a.cols(); ++j)
        for (int t = 0; t < beta[j]; ++t) csel.push_back(j);
    return submatrix(a, rsel, csel);
}

template <class R>
Matrix<R> hadamard(const Matrix<R>& a, const Matrix<R>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw SizeMismatch("hadamard shape mismatch");
    Matrix<R> m = a;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m(i, j) = a(i, j) * b(i, j);
    return m;
}

template <class R>
R ring_int_pow(const R& x, long long e) {
    if (e < 0) return ring_int_pow(x.inv(), -e);
    R acc = one_like(x), base = x;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

/// Entrywise integer power (negative powers invert entries).
template <class R>
Matrix<R> hadamard_power(const Matrix<R>& a, long long k) {
    Matrix<R> m = a;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m(i, j) = ring_int_pow(a(i, j), k);
    return m;
}

/// A^{*(k_1..k_s)}: stack of entrywise powers.
template <class R>
Matrix<R> hadamard_power_seq(const Matrix<R>& a, const std::vector<long long>& ks) {
    Matrix<R> m(int(ks.size()) * a.rows(), a.cols(), a.proto());
    for (size_t t = 0; t < ks.size(); ++t) {
        Matrix<R> pw = hadamard_power(a, ks[t]);
        for (int i = 0; i < a.rows(); ++i)
            for (int j = 0; j < a.cols(); ++j) m(int(t) * a.rows() + i, j) = pw(i, j);
    }
    return m;
}

/// Entrywise canonical square root (FElem only; throws NotASquare).
inline MatrixF hadamard_sqrt(const MatrixF& a) {
    MatrixF m = a;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m(i, j) = a(i, j).sqrt();
    return m;
}

/// a (+) b = a ⊗ 1_m + 1_n ⊗ b.
template <class R>
std::vector<R> kronecker_sum(const std::vector<R>& a, const std::vector<R>& b) {
    std::vector<R> out;
    out.reserve(a.size() * b.size());
    for (const R& x : a)
        for (const R& y : b) out.push_back(x + y);
    return out;
}

template <class R>
std::vector<R> kron_vec(const std::vector<R>& a, int copies) {
    std::vector<R> out;
    out.reserve(a.size() * copies);
    for (const R& x : a)
        for (int t = 0; t < copies; ++t) out.push_back(x);
    return out;
}

template <class R>
Matrix<R> hstack(const Matrix<R>& a, const Matrix<R>& b) {
    if (a.rows() != b.rows()) throw SizeMismatch("hstack rows mismatch");
    Matrix<R> m(a.rows(), a.cols() + b.cols(), a.proto());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
        for (int j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
    }
    return m;
}

template <class R>
Matrix<R> vstack(const Matrix<R>& a, const Matrix<R>& b) {
    if (a.cols() != b.cols()) throw SizeMismatch("vstack cols mismatch");
    Matrix<R> m(a.rows() + b.rows(), a.cols(), a.proto());
    for (int j = 0; j < a.cols(); ++j) {
        for (int i = 0; i < a.rows(); ++i) m(i, j) = a(i, j);
        for (int i = 0; i < b.rows(); ++i) m(a.rows() + i, j) = b(i, j);
    }
    return m;
}

template <class R>
Matrix<R> block2(const Matrix<R>& a11, const Matrix<R>& a12, const Matrix<R>& a21,
                 const Matrix<R>& a22) {
    return vstack(hstack(a11, a12), hstack(a21, a22));
}

inline std::vector<int> all_indices(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i;
    return v;
}

}  // namespace pc

#endif
