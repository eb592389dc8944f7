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

// Reference (exponential-time) implementations of the permanent-class
// polynomials. These are the ground truth for all identity checks; they never
// approximate and refuse sizes beyond their caps.

#ifndef PERMCHAR_ORACLES_HPP
#define PERMCHAR_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "permchar/linalg.hpp"
#include "permchar/matrix.hpp"

namespace pc {

struct TooLarge : std::runtime_error {
    explicit TooLarge(const char* w = "instance exceeds oracle size cap") : std::runtime_error(w) {}
};
struct NotSymmetric : std::runtime_error {
    NotSymmetric() : std::runtime_error("matrix is not symmetric") {}
};

namespace detail {
template <class F>
void for_each_permutation(int n, F&& fn) {
    std::vector<int> p(size_t(n), 0);
    std::iota(p.begin(), p.end(), 0);
    do {
        fn(p);
    } while (std::next_permutation(p.begin(), p.end()));
}

inline std::vector<std::vector<int>> cycles_lexmin(const std::vector<int>& p) {
    const int n = int(p.size());
    std::vector<char> seen(size_t(n), 0);
    std::vector<std::vector<int>> cycles;
    for (int i = 0; i < n; ++i) {
        if (seen[size_t(i)]) continue;
        std::vector<int> c;
        int j = i;
        while (!seen[size_t(j)]) {
            seen[size_t(j)] = 1;
            c.push_back(j);
            j = p[size_t(j)];
        }
        cycles.push_back(std::move(c));  // starts at its minimal element
    }
    return cycles;
}
}  // namespace detail

template <class R>
R per_naive(const Matrix<R>& a) {
    if (!a.square()) throw NotSquare{};
    const int n = a.rows();
    if (n > 9) throw TooLarge("per_naive cap is 9");
    if (n == 0) return one_like(a.proto());
    R acc = zero_like(a.proto());
    detail::for_each_permutation(n, [&](const std::vector<int>& p) {
        R t = one_like(a.proto());
        for (int i = 0; i < n; ++i) t = t * a(i, p[size_t(i)]);
        acc = acc + t;
    });
    return acc;
}

template <class R>
R per_ryser(const Matrix<R>& a) {
    if (!a.square()) throw NotSquare{};
    const int n = a.rows();
    if (n > 14) throw TooLarge("per_ryser cap is 14");
    if (n == 0) return one_like(a.proto());
    R acc = zero_like(a.proto());
    for (uint32_t s = 1; s < (1u << n); ++s) {
        R prod = one_like(a.proto());
        for (int i = 0; i < n; ++i) {
            R rowsum = zero_like(a.proto());
            for (int j = 0; j < n; ++j)
                if (s & (1u << j)) rowsum = rowsum + a(i, j);
            prod = prod * rowsum;
        }
        int par = n - __builtin_popcount(s);
        acc = (par & 1) ? acc - prod : acc + prod;
    }
    return acc;
}

/// Dispatch: naive up to 9, Ryser up to 14.
template <class R>
R per(const Matrix<R>& a) {
    return a.rows() <= 9 ? per_naive(a) : per_ryser(a);
}

/// Rectangular permanent: sum of per over all n-column subsets (n <= m),
/// zero if n > m.
template <class R>
R per_rect(const Matrix<R>& a) {
    const int n = a.rows(), m = a.cols();
    if (n > m) return zero_like(a.proto());
    if (n == m) return per(a);
    R acc = zero_like(a.proto());
    std::vector<int> comb(size_t(n), 0);
    std::iota(comb.begin(), comb.end(), 0);
    while (true) {
        acc = acc + per(submatrix(a, all_indices(n), comb));
        int i = n - 1;
        while (i >= 0 && comb[size_t(i)] == m - n + i) --i;
        if (i < 0) break;
        ++comb[size_t(i)];
        for (int j = i + 1; j < n; ++j) comb[size_t(j)] = comb[size_t(j - 1)] + 1;
    }
    return acc;
}

/// Hafnian: perfect-matching sum of a symmetric even-order matrix.
template <class R>
R haf(const Matrix<R>& a) {
    if (!a.square()) throw NotSquare{};
    const int n = a.rows();
    if (n % 2 != 0) throw OddSize{};
    if (n > 14) throw TooLarge("haf cap is 14");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!(a(i, j) - a(j, i)).is_zero()) throw NotSymmetric{};
    std::vector<int> unmatched = all_indices(n);
    auto rec = [&](auto&& self, std::vector<int>& v) -> R {
        if (v.empty()) return one_like(a.proto());
        int i0 = v[0];
        R acc = zero_like(a.proto());
        for (size_t t = 1; t < v.size(); ++t) {
            const R& e = a(i0, v[t]);
            if (e.is_zero()) continue;
            std::vector<int> rest;
            for (size_t s = 1; s < v.size(); ++s)
                if (s != t) rest.push_back(v[s]);
            acc = acc + e * self(self, rest);
        }
        return acc;
    };
    return rec(rec, unmatched);
}

/// Hamiltonian cycle polynomial: sum over single-cycle permutations.
template <class R>
R ham(const Matrix<R>& a) {
    if (!a.square()) throw NotSquare{};
    const int n = a.rows();
    if (n > 10) throw TooLarge("ham cap is 10");
    if (n == 0) return one_like(a.proto());
    if (n == 1) return a(0, 0);
    std::vector<int> tail(size_t(n - 1), 0);
    std::iota(tail.begin(), tail.end(), 1);
    R acc = zero_like(a.proto());
    do {
        R t = a(0, tail[0]);
        for (int i = 0; i + 1 < n - 1; ++i) t = t * a(tail[size_t(i)], tail[size_t(i + 1)]);
        t = t * a(tail[size_t(n - 2)], 0);
        acc = acc + t;
    } while (std::next_permutation(tail.begin(), tail.end()));
    return acc;
}

/// Undirected Hamiltonian cycle polynomial: edge-product sum over undirected
/// Hamiltonian cycles of a symmetric matrix (combinatorial ham/2), n > 2.
template <class R>
R unham(const Matrix<R>& a) {
    if (!a.square()) throw NotSquare{};
    const int n = a.rows();
    if (n <= 2) throw SizeMismatch("unham needs n > 2");
    if (n > 10) throw TooLarge("unham cap is 10");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!(a(i, j) - a(j, i)).is_zero()) throw NotSymmetric{};
    std::vector<int> tail(size_t(n - 1), 0);
    std::iota(tail.begin(), tail.end(), 1);
    R acc = zero_like(a.proto());
    do {
        if (tail.front() > tail.back()) continue;  // one direction per cycle
        R t = a(0, tail[0]);
        for (int i = 0; i + 1 < n - 1; ++i) t = t * a(tail[size_t(i)], tail[size_t(i + 1)]);
        t = t * a(tail[size_t(n - 2)], 0);
        acc = acc + t;
    } while (std::next_permutation(tail.begin(), tail.end()));
    return acc;
}

/// Number of Hamiltonian cycles through the edge (u, v) of an undirected
/// graph given by a boolean adjacency matrix (exact count).
uint64_t count_ham_cycles_through_edge(const std::vector<std::vector<int>>& adj, int u, int v);

/// Even permanent: permutations with all cycle lengths even.
template <class R>
R per_even(const Matrix<R>& a) {
    if (!a.square()) throw NotSquare{};
    const int n = a.rows();
    if (n % 2 != 0) throw OddSize{};
    if (n > 10) throw TooLarge("per_even cap is 10");
    if (n == 0) return one_like(a.proto());
    R acc = zero_like(a.proto());
    detail::for_each_permutation(n, [&](const std::vector<int>& p) {
        for (auto& c : detail::cycles_lexmin(p))
            if (c.size() % 2 != 0) return;
        R t = one_like(a.proto());
        for (int i = 0; i < n; ++i) t = t * a(i, p[size_t(i)]);
        acc = acc + t;
    });
    return acc;
}

/// per_{-2,even} over the integers (characteristic-0 lift): even-cycle
/// permutations weighted by (-2)^{#cycles}.
long long per_m2_even_int(const std::vector<std::vector<long long>>& a);

/// per_lambda: all permutations, weight lambda^{#cycles} (loops count).
template <class R>
R per_lambda(const Matrix<R>& a, const R& lambda) {
    if (!a.square()) throw NotSquare{};
    const int n = a.rows();
    if (n > 9) throw TooLarge("per_lambda cap is 9");
    if (n == 0) return one_like(a.proto());
    R acc = zero_like(a.proto());
    detail::for_each_permutation(n, [&](const std::vector<int>& p) {
        R t = one_like(a.proto());
        for (int i = 0; i < n; ++i) t = t * a(i, p[size_t(i)]);
        size_t c = detail::cycles_lexmin(p).size();
        for (size_t q = 0; q < c; ++q) t = t * lambda;
        acc = acc + t;
    });
    return acc;
}

/// Cycle polynomial: prod over cycles of (1 + prod_{i in C} w_i).
template <class R>
R cycle_poly(const Matrix<R>& a, const std::vector<R>& w) {
    if (!a.square()) throw NotSquare{};
    const int n = a.rows();
    if (int(w.size()) != n) throw SizeMismatch("weight vector size");
    if (n > 9) throw TooLarge("cycle_poly cap is 9");
    if (n == 0) return one_like(a.proto());
    R acc = zero_like(a.proto());
    detail::for_each_permutation(n, [&](const std::vector<int>& p) {
        R t = one_like(a.proto());
        for (int i = 0; i < n; ++i) t = t * a(i, p[size_t(i)]);
        for (auto& c : detail::cycles_lexmin(p)) {
            R wp = one_like(a.proto());
            for (int i : c) wp = wp * w[size_t(i)];
            t = t * (one_like(a.proto()) + wp);
        }
        acc = acc + t;
    });
    return acc;
}

/// Alternate determinant of a 2n x 2n matrix: for each i < n choose row i or
/// row n+i (keeping base order), take columns 0..n-1, sum the determinants.
template <class R>
R altdet(const Matrix<R>& a) {
    if (!a.square()) throw NotSquare{};
    const int n2 = a.rows();
    if (n2 % 2 != 0) throw OddSize{};
    const int n = n2 / 2;
    if (n > 12) throw TooLarge("altdet cap is 2*12");
    std::vector<int> cols = all_indices(n);
    R acc = zero_like(a.proto());
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> rows(size_t(n), 0);
        for (int i = 0; i < n; ++i) rows[size_t(i)] = (mask & (1u << i)) ? i : n + i;
        acc = acc + det(submatrix(a, rows, cols));
    }
    return acc;
}

/// Trace-determinant of A on matrix-weights B^(1..n): permutations where each
/// proper cycle C contributes (-1)^{|C|+1} tr(prod of B along C from its
/// minimal vertex) and every entry a_{i,pi(i)} (loops included) multiplies in.
template <class R>
R trace_det(const Matrix<R>& a, const std::vector<Matrix<R>>& bs) {
    if (!a.square()) throw NotSquare{};
    const int n = a.rows();
    if (int(bs.size()) != n) throw SizeMismatch("one matrix-weight per row");
    if (n > 9) throw TooLarge("trace_det cap is 9");
    if (n == 0) return one_like(a.proto());
    R acc = zero_like(a.proto());
    detail::for_each_permutation(n, [&](const std::vector<int>& p) {
        R t = one_like(a.proto());
        for (int i = 0; i < n; ++i) t = t * a(i, p[size_t(i)]);
        for (auto& c : detail::cycles_lexmin(p)) {
            if (c.size() < 2) continue;
            Matrix<R> prod = bs[size_t(c[0])];
            for (size_t q = 1; q < c.size(); ++q) prod = prod * bs[size_t(c[q])];
            R tr = zero_like(a.proto());
            for (int i = 0; i < prod.rows(); ++i) tr = tr + prod(i, i);
            t = (c.size() % 2 == 0) ? t * (-tr) : t * tr;
        }
        acc = acc + t;
    });
    return acc;
}

/// Open trace-determinant: one cycle is broken into a path; the result is the
/// m x m matrix sum. The closing edge of the broken path is omitted from the
/// entry product (no division, so zero closing entries are fine).
template <class R>
Matrix<R> open_trace_det(const Matrix<R>& a, const std::vector<Matrix<R>>& bs) {
    if (!a.square()) throw NotSquare{};
    const int n = a.rows();
    if (int(bs.size()) != n || bs.empty()) throw SizeMismatch("one matrix-weight per row");
    if (n > 9) throw TooLarge("open_trace_det cap is 9");
    const int m = bs[0].rows();
    Matrix<R> acc(m, m, a.proto());
    detail::for_each_permutation(n, [&](const std::vector<int>& p) {
        auto cycles = detail::cycles_lexmin(p);
        for (size_t bc = 0; bc < cycles.size(); ++bc) {
            const auto& broken = cycles[bc];
            // baseline weight: all cycle trace-factors except the broken one
            R base = one_like(a.proto());
            for (size_t c = 0; c < cycles.size(); ++c) {
                if (c == bc) continue;
                const auto& cyc = cycles[c];
                for (size_t q = 0; q < cyc.size(); ++q)
                    base = base * a(cyc[q], p[size_t(cyc[q])]);
                if (cyc.size() < 2) continue;
                Matrix<R> prod = bs[size_t(cyc[0])];
                for (size_t q = 1; q < cyc.size(); ++q) prod = prod * bs[size_t(cyc[q])];
                R tr = zero_like(a.proto());
                for (int i = 0; i < prod.rows(); ++i) tr = tr + prod(i, i);
                base = (cyc.size() % 2 == 0) ? base * (-tr) : base * tr;
            }
            // each rotation of the broken cycle is a distinct path
            const size_t L = broken.size();
            for (size_t r = 0; r < L; ++r) {
                R w = base;
                // path vertices broken[r], broken[r+1], ..., edges inside path
                for (size_t q = 0; q + 1 < L; ++q) {
                    int v = broken[(r + q) % L];
                    w = w * a(v, p[size_t(v)]);
                }
                if (L % 2 == 0) w = -w;  // (-1)^{|P|+1}
                Matrix<R> prod = bs[size_t(broken[r])];
                for (size_t q = 1; q < L; ++q) prod = prod * bs[size_t(broken[(r + q) % L])];
                acc = acc + prod.scaled(w);
            }
        }
    });
    return acc;
}

namespace detail {
inline std::vector<std::vector<int>> k_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> comb(size_t(k), 0);
    std::iota(comb.begin(), comb.end(), 0);
    if (k == 0) {
        out.push_back({});
        return out;
    }
    while (true) {
        out.push_back(comb);
        int i = k - 1;
        while (i >= 0 && comb[size_t(i)] == n - k + i) --i;
        if (i < 0) break;
        ++comb[size_t(i)];
        for (int j = i + 1; j < k; ++j) comb[size_t(j)] = comb[size_t(j - 1)] + 1;
    }
    return out;
}
}  // namespace detail

/// k-th permanent-minor matrix: entry (I, J) = per(A^(I,J)), lexicographic
/// k-subset order.
template <class R>
Matrix<R> perminor_matrix(const Matrix<R>& a, int k) {
    if (!a.square()) throw NotSquare{};
    auto subs = detail::k_subsets(a.rows(), k);
    if (subs.size() > 1000) throw TooLarge("too many k-subsets");
    Matrix<R> m(int(subs.size()), int(subs.size()), a.proto());
    for (size_t i = 0; i < subs.size(); ++i)
        for (size_t j = 0; j < subs.size(); ++j) m(int(i), int(j)) = per(submatrix(a, subs[i], subs[j]));
    return m;
}

/// k-th permanent-complement matrix: entry (I, J) = per(A^(\I, \J)).
template <class R>
Matrix<R> percomp_matrix(const Matrix<R>& a, int k) {
    if (!a.square()) throw NotSquare{};
    auto subs = detail::k_subsets(a.rows(), k);
    if (subs.size() > 1000) throw TooLarge("too many k-subsets");
    Matrix<R> m(int(subs.size()), int(subs.size()), a.proto());
    for (size_t i = 0; i < subs.size(); ++i)
        for (size_t j = 0; j < subs.size(); ++j)
            m(int(i), int(j)) = per(remove_matrix(a, subs[i], subs[j]));
    return m;
}

}  // namespace pc

#endif
