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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "permchar/linalg.hpp"
#include "permchar/rng.hpp"
#include "permchar/series.hpp"

using namespace pc;

namespace {
MatrixF from_ints(const Field& f, std::vector<std::vector<long long>> rows) {
    MatrixF m(int(rows.size()), int(rows[0].size()), FElem::zero(f));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) m(int(i), int(j)) = fel(f, rows[i][j]);
    return m;
}
}  // namespace

TEST_CASE("det basics") {
    const Field& f7 = Field::get(7, 1);
    CHECK(det(MatrixF::identity(4, FElem::zero(f7))) == FElem::one(f7));
    CHECK(det(from_ints(f7, {{1, 2}, {3, 4}})) == fel(f7, 5));  // 4 - 6 = -2 = 5 mod 7
    Rng rng(11);
    for (int t = 0; t < 100; ++t) {
        MatrixF a = rng.matrix(f7, 4, 4), b = rng.matrix(f7, 4, 4);
        CHECK(det(a * b) == det(a) * det(b));
        CHECK(det(a.transpose()) == det(a));
    }
}

TEST_CASE("inverse multiply-back on GF(9)") {
    const Field& f9 = Field::get(3, 2);
    Rng rng(5);
    int done = 0;
    while (done < 100) {
        MatrixF a = rng.matrix(f9, 5, 5);
        if (is_singular(a)) continue;
        CHECK(inverse(a) * a == MatrixF::identity(5, FElem::zero(f9)));
        ++done;
    }
}

TEST_CASE("schur complement") {
    const Field& f = Field::get(11, 1);
    Rng rng(23);
    MatrixF a = rng.matrix(f, 2, 2);
    CHECK(schur_complement(a, {}, {}) == a);
    // scalar case
    while (a(0, 0).is_zero()) a = rng.matrix(f, 2, 2);
    MatrixF s = schur_complement(a, {0}, {0});
    CHECK(s(0, 0) == a(1, 1) - a(1, 0) * a(0, 1) / a(0, 0));
    // chain property on random 4x4
    int done = 0;
    while (done < 50) {
        MatrixF m = rng.matrix(f, 4, 4);
        try {
            MatrixF s2 = schur_complement(m, {0, 1}, {0, 1});
            MatrixF s1 = schur_complement(m, {0}, {0});
            MatrixF s12 = schur_complement(s1, {0}, {0});
            CHECK(s2 == s12);
            ++done;
        } catch (const Singular&) {
        }
    }
    // det(A) = det(A11) det(Schur)
    done = 0;
    while (done < 50) {
        MatrixF m = rng.matrix(f, 5, 5);
        try {
            MatrixF s2 = schur_complement(m, {0, 1}, {0, 1});
            CHECK(det(m) == det(submatrix(m, {0, 1}, {0, 1})) * det(s2));
            ++done;
        } catch (const Singular&) {
        }
    }
}

TEST_CASE("partial inverse involution") {
    // The signed principal pivot transform is an involution in any
    // characteristic; the plain block form coincides with it only in
    // characteristic 2 (where it is therefore involutive as well).
    const Field& f = Field::get(5, 1);
    Rng rng(31);
    int done = 0;
    while (done < 100) {
        MatrixF a = rng.matrix(f, 4, 4);
        BlockSplit sp{2};
        try {
            MatrixF pi = partial_inverse_signed(a, sp);
            CHECK(partial_inverse_signed(pi, sp) == a);
            ++done;
        } catch (const Singular&) {
        }
    }
    const Field& f4 = Field::get(2, 2);
    done = 0;
    while (done < 50) {
        MatrixF a = rng.matrix(f4, 4, 4);
        BlockSplit sp{2};
        try {
            MatrixF pi = partial_inverse(a, sp);
            CHECK(partial_inverse(pi, sp) == a);
            CHECK(pi == partial_inverse_signed(a, sp));
            ++done;
        } catch (const Singular&) {
        }
    }
    // empty first block: identity transform
    MatrixF a = rng.matrix(f, 3, 3);
    CHECK(partial_inverse(a, BlockSplit{0}) == a);
    // single block: plain inverse
    done = 0;
    while (done < 10) {
        MatrixF b = rng.matrix(f, 3, 3);
        try {
            CHECK(partial_inverse(b, BlockSplit{3}) == inverse(b));
            ++done;
        } catch (const Singular&) {
        }
    }
}

TEST_CASE("pfaffian") {
    const Field& f7 = Field::get(7, 1);
    Rng rng(41);
    // Pf([[0,a],[-a,0]]) = a
    FElem a = rng.nonzero(f7);
    MatrixF m2(2, 2, FElem::zero(f7));
    m2(0, 1) = a;
    m2(1, 0) = -a;
    CHECK(pfaffian(m2) == a);
    CHECK(pfaffian(MatrixF(4, 4, FElem::zero(f7))).is_zero());
    for (int t = 0; t < 100; ++t) {
        MatrixF s = rng.skew(f7, 6);
        FElem pf = pfaffian(s);
        CHECK(pf * pf == det(s));
    }
    // elimination route agrees with expansion on sizes above the cutoff
    for (int t = 0; t < 5; ++t) {
        MatrixF s = rng.skew(f7, 14);
        CHECK(pfaffian(s) == pfaffian_expansion(s));
    }
    CHECK_THROWS_AS(pfaffian(rng.matrix(f7, 4, 4)), NotSkewSymmetric);
    MatrixF odd(3, 3, FElem::zero(f7));
    CHECK_THROWS_AS(pfaffian(odd), OddSize);
}

TEST_CASE("pfaffian over Laurent series picks minimal-order pivots") {
    const Field& f7 = Field::get(7, 1);
    Rng rng(43);
    // random skew series matrix with mixed orders; Pf^2 = det must hold exactly
    for (int t = 0; t < 20; ++t) {
        int n = 6;
        Matrix<SeriesF> s(n, n, SeriesF::zero(FElem::zero(f7), 8));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                SeriesF e = SeriesF::zero(FElem::zero(f7), 8);
                int o = int(rng.below(4)) - 2;
                for (int d = 0; d < 3; ++d) e = e + SeriesF::monomial(rng.elem(f7), o + d, 8);
                s(i, j) = e;
                s(j, i) = -e;
            }
        SeriesF pf = pfaffian(s);
        SeriesF dd = det(s);
        SeriesF diff = pf * pf - dd;
        CHECK(diff.is_zero());
    }
}

TEST_CASE("vandermonde") {
    const Field& f = Field::get(11, 1);
    Rng rng(53);
    for (int t = 0; t < 50; ++t) {
        auto y = rng.distinct(f, 5);
        FElem expect = FElem::one(f);
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j) expect = expect * (y[size_t(j)] - y[size_t(i)]);
        CHECK(det(vandermonde(y, FElem::zero(f))) == expect);
    }
}

TEST_CASE("unitary sampler") {
    for (auto [p, k] : {std::pair{3, 2}, {2, 2}}) {
        const Field& f = Field::get(p, k);
        Rng rng(61 + uint64_t(p));
        for (int t = 0; t < 100; ++t) {
            int n = 1 + int(rng.below(8));
            UnitarySample s = sample_unitary(f, n, rng);
            CHECK(s.u * s.u.transpose() == MatrixF::identity(n, FElem::zero(f)));
        }
    }
    const Field& f9 = Field::get(3, 2);
    CHECK(semi_unitarity_index(MatrixF::identity(5, FElem::zero(f9))) == 0);
    Rng rng(67);
    for (int t = 0; t < 50; ++t) {
        UnitarySample s = sample_unitary(f9, 5, rng);
        int i = int(rng.below(5)), j = int(rng.below(5));
        MatrixF r = replacement_matrix(s.u, {i}, {j});
        CHECK(semi_unitarity_index(r) <= 1);
    }
}

TEST_CASE("rank(AA^T - I) invariant under unitary left multiplication") {
    const Field& f9 = Field::get(3, 2);
    Rng rng(71);
    for (int t = 0; t < 30; ++t) {
        int n = 2 + int(rng.below(5));
        MatrixF a = rng.matrix(f9, n, n);
        int idx = semi_unitarity_index(a);
        UnitarySample s = sample_unitary(f9, n, rng);
        CHECK(semi_unitarity_index(s.u * a) == idx);
    }
}

TEST_CASE("isotropic pair sampler") {
    const Field& f5 = Field::get(5, 1);
    Rng rng(73);
    int done = 0;
    while (done < 100) {
        MatrixF m = sample_nonsingular_skew(f5, 4, rng);
        MatrixF fp = sample_isotropic_pair(f5, m, rng);
        MatrixF g = fp.transpose() * m * fp;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) CHECK(g(i, j).is_zero());
        CHECK(rank(fp) == 2);
        ++done;
    }
}

TEST_CASE("det and inverse over series (Laurent pivoting)") {
    const Field& f5 = Field::get(5, 1);
    Rng rng(79);
    for (int t = 0; t < 20; ++t) {
        int n = 4;
        Matrix<SeriesF> a(n, n, SeriesF::zero(FElem::zero(f5), 6));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                SeriesF e = SeriesF::zero(FElem::zero(f5), 6);
                int o = int(rng.below(3)) - 1;
                for (int d = 0; d < 3; ++d) e = e + SeriesF::monomial(rng.elem(f5), o + d, 6);
                a(i, j) = e;
            }
        SeriesF d = det(a);
        if (d.is_zero()) continue;
        Matrix<SeriesF> inv = inverse(a);
        Matrix<SeriesF> prod = inv * a;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                SeriesF want = i == j ? SeriesF::scalar(FElem::one(f5), 0) : SeriesF::zero(FElem::zero(f5), 0);
                CHECK(prod(i, j).coeff(0) == want.coeff(0));
            }
    }
}
