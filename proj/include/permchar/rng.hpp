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

#ifndef PERMCHAR_RNG_HPP
#define PERMCHAR_RNG_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "permchar/field.hpp"
#include "permchar/matrix.hpp"

namespace pc {

/// splitmix64: tiny, seed-stable across platforms. All campaign determinism
/// rests on this generator.
struct Rng {
    uint64_t state;

    explicit Rng(uint64_t seed = 0x9e3779b97f4a7c15ull) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    uint64_t below(uint64_t n) { return n ? next() % n : 0; }

    /// Derive an independent stream (per-instance seeds).
    static uint64_t derive(uint64_t seed, uint64_t salt) {
        Rng r(seed ^ (0x6a09e667f3bcc909ull + salt * 0x9e3779b97f4a7c15ull));
        r.next();
        return r.next();
    }

    FElem elem(const Field& f) { return FElem(f, uint32_t(below(f.q()))); }
    FElem nonzero(const Field& f) { return FElem(f, 1 + uint32_t(below(f.q() - 1))); }

    std::vector<FElem> vec(const Field& f, int n) {
        std::vector<FElem> v;
        v.reserve(size_t(n));
        for (int i = 0; i < n; ++i) v.push_back(elem(f));
        return v;
    }

    /// n pairwise distinct elements (n <= q).
    std::vector<FElem> distinct(const Field& f, int n) {
        if (uint32_t(n) > f.q()) throw std::invalid_argument("field too small for distinct sample");
        std::vector<uint32_t> pool(f.q());
        for (uint32_t i = 0; i < f.q(); ++i) pool[i] = i;
        std::vector<FElem> v;
        for (int i = 0; i < n; ++i) {
            size_t j = i + size_t(below(f.q() - uint64_t(i)));
            std::swap(pool[size_t(i)], pool[j]);
            v.push_back(FElem(f, pool[size_t(i)]));
        }
        return v;
    }

    MatrixF matrix(const Field& f, int rows, int cols) {
        MatrixF m(rows, cols, FElem::zero(f));
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m(i, j) = elem(f);
        return m;
    }

    MatrixF symmetric(const Field& f, int n, bool zero_diag = false) {
        MatrixF m(n, n, FElem::zero(f));
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) m(i, j) = m(j, i) = elem(f);
            m(i, i) = zero_diag ? FElem::zero(f) : elem(f);
        }
        return m;
    }

    MatrixF skew(const Field& f, int n) {
        MatrixF m(n, n, FElem::zero(f));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                m(i, j) = elem(f);
                m(j, i) = -m(i, j);
            }
        return m;
    }
};

}  // namespace pc

#endif
