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

#ifndef PERMCHAR_LINALG_HPP
#define PERMCHAR_LINALG_HPP

#include <optional>
#include <vector>

#include "permchar/jet.hpp"
#include "permchar/matrix.hpp"
#include "permchar/rng.hpp"
#include "permchar/series.hpp"

namespace pc {

struct Singular : std::runtime_error {
    explicit Singular(const char* w = "singular matrix") : std::runtime_error(w) {}
};
struct NotSquare : std::runtime_error {
    NotSquare() : std::runtime_error("matrix is not square") {}
};
struct NotSkewSymmetric : std::runtime_error {
    NotSkewSymmetric() : std::runtime_error("matrix is not skew-symmetric with zero diagonal") {}
};
struct OddSize : std::runtime_error {
    OddSize() : std::runtime_error("matrix size must be even") {}
};

/// Pivot admissibility and preference. Over a plain field any nonzero entry
/// works; over Laurent series the pivot must have minimal eps-order in its
/// column (prevents precision loss); nested series compare lexicographically
/// by (outer order, inner order, ...).
template <class R>
struct pivot_traits {
    static bool usable(const R& x) { return !x.is_zero(); }
    static long long weight(const R&) { return 0; }
};
template <class R>
struct pivot_traits<Series<R>> {
    static bool usable(const Series<R>& x) {
        if (x.is_zero()) return false;
        return pivot_traits<R>::usable(x.coeff(x.order()));
    }
    static long long weight(const Series<R>& x) {
        return (long long)x.order() * 4096 + pivot_traits<R>::weight(x.coeff(x.order()));
    }
};
template <class R>
struct pivot_traits<Jet<R>> {
    static bool usable(const Jet<R>& x) { return pivot_traits<R>::usable(x.value()); }
    static long long weight(const Jet<R>& x) { return pivot_traits<R>::weight(x.value()); }
};

namespace detail {

/// Gaussian elimination with minimal-weight pivoting; exact over rings with
/// division. Returns (echelon pivots product with sign, rank). If `inv_out`
/// is non-null the matrix must be square nonsingular and A^{-1} is produced.
template <class R>
std::pair<R, int> eliminate(Matrix<R> a, Matrix<R>* inv_out) {
    const int n = a.rows(), m = a.cols();
    R detv = one_like(a.proto());
    bool neg = false;
    Matrix<R> inv;
    if (inv_out) inv = Matrix<R>::identity(n, a.proto());
    int rank = 0;
    for (int col = 0; col < m && rank < n; ++col) {
        int best = -1;
        long long bw = 0;
        for (int i = rank; i < n; ++i) {
            const R& x = a(i, col);
            if (!pivot_traits<R>::usable(x)) continue;
            long long w = pivot_traits<R>::weight(x);
            if (best < 0 || w < bw) {
                best = i;
                bw = w;
            }
        }
        if (best < 0) {
            detv = zero_like(a.proto());
            continue;
        }
        if (best != rank) {
            for (int j = 0; j < m; ++j) std::swap(a(rank, j), a(best, j));
            if (inv_out)
                for (int j = 0; j < n; ++j) std::swap(inv(rank, j), inv(best, j));
            neg = !neg;
        }
        R piv = a(rank, col);
        detv = detv * piv;
        R pivi = piv.inv();
        if (inv_out) {
            for (int j = 0; j < m; ++j) a(rank, j) = a(rank, j) * pivi;
            for (int j = 0; j < n; ++j) inv(rank, j) = inv(rank, j) * pivi;
        }
        for (int i = 0; i < n; ++i) {
            if (i == rank) continue;
            if (!inv_out && i < rank) continue;  // det/rank only need lower elimination
            R factor = inv_out ? a(i, col) : a(i, col) * pivi;
            if (factor.is_zero()) continue;
            for (int j = 0; j < m; ++j) a(i, j) = a(i, j) - factor * a(rank, j);
            if (inv_out)
                for (int j = 0; j < n; ++j) inv(i, j) = inv(i, j) - factor * inv(rank, j);
        }
        ++rank;
    }
    if (inv_out) {
        if (rank < n) throw Singular{};
        *inv_out = inv;
    }
    if (rank < std::min(n, m)) detv = zero_like(a.proto());
    if (neg) detv = -detv;
    return {detv, rank};
}

}  // namespace detail

template <class R>
R det(const Matrix<R>& a) {
    if (!a.square()) throw NotSquare{};
    if (a.rows() == 0) return one_like(a.proto());
    return detail::eliminate(a, (Matrix<R>*)nullptr).first;
}

template <class R>
int rank(const Matrix<R>& a) {
    if (a.rows() == 0 || a.cols() == 0) return 0;
    return detail::eliminate(a, (Matrix<R>*)nullptr).second;
}

template <class R>
Matrix<R> inverse(const Matrix<R>& a) {
    if (!a.square()) throw NotSquare{};
    Matrix<R> inv;
    detail::eliminate(a, &inv);
    return inv;
}

template <class R>
std::vector<R> solve(const Matrix<R>& a, const std::vector<R>& b) {
    return inverse(a).apply(b);
}

template <class R>
bool is_singular(const Matrix<R>& a) {
    return rank(a) < a.rows();
}

/// Schur complement A/A^(I,J): A22 - A21 A11^{-1} A12 with A11 the (I,J)
/// block; rows I and columns J are eliminated.
template <class R>
Matrix<R> schur_complement(const Matrix<R>& a, const std::vector<int>& I, const std::vector<int>& J) {
    if (I.size() != J.size()) throw SizeMismatch("schur block must be square");
    if (I.empty()) return a;
    std::vector<int> ri, ci;
    for (int i = 0; i < a.rows(); ++i)
        if (std::find(I.begin(), I.end(), i) == I.end()) ri.push_back(i);
    for (int j = 0; j < a.cols(); ++j)
        if (std::find(J.begin(), J.end(), j) == J.end()) ci.push_back(j);
    Matrix<R> a11 = submatrix(a, I, J);
    Matrix<R> a12 = submatrix(a, I, ci);
    Matrix<R> a21 = submatrix(a, ri, J);
    Matrix<R> a22 = submatrix(a, ri, ci);
    Matrix<R> a11i;
    try {
        a11i = inverse(a11);
    } catch (const Singular&) {
        throw Singular("singular pivot block in Schur complement");
    }
    return a22 - a21 * a11i * a12;
}

struct BlockSplit {
    int n1 = 0;  // leading block size (rows 0..n1-1, cols 0..n1-1)
};

/// [[A11^{-1}, A11^{-1}A12],[A21 A11^{-1}, A22 - A21 A11^{-1} A12]].
template <class R>
Matrix<R> partial_inverse(const Matrix<R>& a, const BlockSplit& split) {
    if (!a.square()) throw NotSquare{};
    const int n1 = split.n1, n = a.rows();
    if (n1 < 0 || n1 > n) throw IndexOutOfRange{};
    if (n1 == 0) return a;
    std::vector<int> I, rest;
    for (int i = 0; i < n1; ++i) I.push_back(i);
    for (int i = n1; i < n; ++i) rest.push_back(i);
    Matrix<R> a11 = submatrix(a, I, I), a12 = submatrix(a, I, rest);
    Matrix<R> a21 = submatrix(a, rest, I), a22 = submatrix(a, rest, rest);
    Matrix<R> a11i;
    try {
        a11i = inverse(a11);
    } catch (const Singular&) {
        throw Singular("singular leading block");
    }
    return block2(a11i, a11i * a12, a21 * a11i, a22 - a21 * a11i * a12);
}

/// Involutive variant (principal pivot transform): the top-right block is
/// negated, which makes applying it twice the identity in any
/// characteristic. The unsigned form above is involutive only in
/// characteristic 2.
template <class R>
Matrix<R> partial_inverse_signed(const Matrix<R>& a, const BlockSplit& split) {
    if (!a.square()) throw NotSquare{};
    const int n1 = split.n1, n = a.rows();
    if (n1 < 0 || n1 > n) throw IndexOutOfRange{};
    if (n1 == 0) return a;
    std::vector<int> I, rest;
    for (int i = 0; i < n1; ++i) I.push_back(i);
    for (int i = n1; i < n; ++i) rest.push_back(i);
    Matrix<R> a11 = submatrix(a, I, I), a12 = submatrix(a, I, rest);
    Matrix<R> a21 = submatrix(a, rest, I), a22 = submatrix(a, rest, rest);
    Matrix<R> a11i;
    try {
        a11i = inverse(a11);
    } catch (const Singular&) {
        throw Singular("singular leading block");
    }
    return block2(a11i, -(a11i * a12), a21 * a11i, a22 - a21 * a11i * a12);
}

template <class R>
void require_skew(const Matrix<R>& a) {
    if (!a.square()) throw NotSquare{};
    for (int i = 0; i < a.rows(); ++i) {
        if (!a(i, i).is_zero()) throw NotSkewSymmetric{};
        for (int j = i + 1; j < a.cols(); ++j)
            if (!(a(i, j) + a(j, i)).is_zero()) throw NotSkewSymmetric{};
    }
}

/// Pfaffian by expansion along the first row ((2n-1)!! terms). Exposed as an
/// independent route for cross-checks.
template <class R>
R pfaffian_expansion(const Matrix<R>& a) {
    const int n = a.rows();
    if (n == 0) return one_like(a.proto());
    std::vector<int> idx = all_indices(n);
    // recursive lambda over index list
    auto rec = [&](auto&& self, std::vector<int> v) -> R {
        if (v.empty()) return one_like(a.proto());
        R acc = zero_like(a.proto());
        int i0 = v[0];
        bool plus = true;
        for (size_t t = 1; t < v.size(); ++t) {
            const R& e = a(i0, v[t]);
            if (!e.is_zero()) {
                std::vector<int> rest;
                for (size_t s = 1; s < v.size(); ++s)
                    if (s != t) rest.push_back(v[s]);
                R sub = self(self, std::move(rest));
                acc = plus ? acc + e * sub : acc - e * sub;
            }
            plus = !plus;
        }
        return acc;
    };
    return rec(rec, idx);
}

/// Pfaffian: recursive expansion for small sizes, block elimination
/// (congruence to block-diagonal) beyond. Sign convention
/// Pf([[0,1],[-1,0]]) = +1. Input must be skew-symmetric with zero diagonal.
template <class R>
R pfaffian(const Matrix<R>& a) {
    require_skew(a);
    const int n = a.rows();
    if (n % 2 != 0) throw OddSize{};
    if (n == 0) return one_like(a.proto());
    if (n <= 12) return pfaffian_expansion(a);
    Matrix<R> m = a;
    R result = one_like(a.proto());
    bool neg = false;
    int sz = n;
    while (sz > 2) {
        // choose the minimal-weight usable pivot pair
        int bi = -1, bj = -1;
        long long bw = 0;
        for (int i = 0; i < sz; ++i)
            for (int j = i + 1; j < sz; ++j) {
                if (!pivot_traits<R>::usable(m(i, j))) continue;
                long long w = pivot_traits<R>::weight(m(i, j));
                if (bi < 0 || w < bw) {
                    bi = i;
                    bj = j;
                    bw = w;
                }
            }
        if (bi < 0) return zero_like(a.proto());
        auto swap_rc = [&](int x, int y) {
            if (x == y) return;
            for (int j = 0; j < sz; ++j) std::swap(m(x, j), m(y, j));
            for (int i = 0; i < sz; ++i) std::swap(m(i, x), m(i, y));
            neg = !neg;
        };
        swap_rc(0, bi);
        swap_rc(1, bj);
        R b = m(0, 1);
        result = result * b;
        R binv = b.inv();
        // S = D + C^T B^{-1} C where B = [[0,b],[-b,0]], rows 0,1 removed.
        // C^T B^{-1} C with B^{-1} = [[0,-1/b],[1/b,0]]:
        // S_ij = D_ij + (c0i c1j - c1i c0j)/b, c0 = m(0, 2+i), c1 = m(1, 2+i).
        Matrix<R> s(sz - 2, sz - 2, a.proto());
        for (int i = 0; i < sz - 2; ++i)
            for (int j = 0; j < sz - 2; ++j) {
                R v = m(i + 2, j + 2) +
                      (m(0, i + 2) * m(1, j + 2) - m(1, i + 2) * m(0, j + 2)) * binv;
                s(i, j) = v;
            }
        m = s;
        sz -= 2;
    }
    result = result * m(0, 1);
    return neg ? -result : result;
}

/// pol(x, y) = prod_{i,j} (x_i - y_j).
template <class R>
R pol(const std::vector<R>& x, const std::vector<R>& y, const R& proto) {
    R acc = one_like(proto);
    for (const R& a : x)
        for (const R& b : y) acc = acc * (a - b);
    return acc;
}

/// Van^[k](y): k x dim(y), rows are entrywise powers 0..k-1.
template <class R>
Matrix<R> van_k(const std::vector<R>& y, int k, const R& proto) {
    Matrix<R> m(k, int(y.size()), proto);
    for (size_t j = 0; j < y.size(); ++j) {
        R p = one_like(proto);
        for (int i = 0; i < k; ++i) {
            m(i, int(j)) = p;
            p = p * y[j];
        }
    }
    return m;
}

/// Square Vandermonde: rows are powers 0..dim(y)-1; det = prod_{i<j}(y_j - y_i).
template <class R>
Matrix<R> vandermonde(const std::vector<R>& y, const R& proto) {
    return van_k(y, int(y.size()), proto);
}

/// W^[k](x): dim(x) rows; k consecutive rows share each power 0,1,...
template <class R>
Matrix<R> w_k(const std::vector<R>& x, int k, const R& proto) {
    int n = int(x.size());
    if (k <= 0 || n % k != 0) throw SizeMismatch("dim(x) must be divisible by k");
    Matrix<R> m(n, n, proto);
    for (int i = 0; i < n; ++i) {
        long long pw = i / k;
        for (int j = 0; j < n; ++j) m(i, j) = ring_int_pow(x[size_t(j)], pw);
    }
    return m;
}

struct UnitarySample {
    MatrixF u;
    // construction log: (kind, i, j, param-index) — enough to replay
    struct Factor {
        char kind;  // 'p' swap, 'd' sign flip, 'r' rotation
        int i, j;
        uint32_t a, b;
    };
    std::vector<Factor> log;
};

/// All (a, b) with a^2 + b^2 = 1 in the field (cached per field).
const std::vector<std::pair<uint32_t, uint32_t>>& circle_points(const Field& f);

/// Random U with U U^T = I, as a product of ~3n^2 elementary factors
/// (row swaps, -1 row scalings in odd characteristic, planar rotations).
UnitarySample sample_unitary(const Field& f, int n, Rng& rng);

/// rank(A A^T - I).
inline int semi_unitarity_index(const MatrixF& a) {
    MatrixF g = a * a.transpose();
    MatrixF i = MatrixF::identity(a.rows(), a.proto());
    return rank(g - i);
}

/// 4x2 matrix F with F^T M F = 0 for nonsingular skew 4x4 M; columns span an
/// isotropic plane (full rank unless allow_degenerate).
MatrixF sample_isotropic_pair(const Field& f, const MatrixF& m, Rng& rng, bool full_rank = true);

/// Random nonsingular matrix / skew matrix helpers.
MatrixF sample_nonsingular(const Field& f, int n, Rng& rng);
MatrixF sample_nonsingular_skew(const Field& f, int n, Rng& rng);

}  // namespace pc

#endif
