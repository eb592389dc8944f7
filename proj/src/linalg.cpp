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

#include "permchar/linalg.hpp"

#include <map>
#include <mutex>

namespace pc {

const std::vector<std::pair<uint32_t, uint32_t>>& circle_points(const Field& f) {
    static std::mutex mu;
    static std::map<const Field*, std::vector<std::pair<uint32_t, uint32_t>>>* cache =
        new std::map<const Field*, std::vector<std::pair<uint32_t, uint32_t>>>();
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache->find(&f);
    if (it != cache->end()) return it->second;
    std::vector<std::pair<uint32_t, uint32_t>> pts;
    const uint32_t one = f.from_int(1);
    for (uint32_t a = 0; a < f.q(); ++a)
        for (uint32_t b = 0; b < f.q(); ++b)
            if (f.add(f.mul(a, a), f.mul(b, b)) == one) pts.emplace_back(a, b);
    return cache->emplace(&f, std::move(pts)).first->second;
}

UnitarySample sample_unitary(const Field& f, int n, Rng& rng) {
    UnitarySample s;
    s.u = MatrixF::identity(n, FElem::zero(f));
    const auto& circle = circle_points(f);
    const int factors = 3 * n * n;
    for (int t = 0; t < factors; ++t) {
        int kind = int(rng.below(3));
        if (n < 2) kind = 1;
        if (kind == 0) {
            int i = int(rng.below(uint64_t(n))), j = int(rng.below(uint64_t(n)));
            if (i == j) continue;
            for (int c = 0; c < n; ++c) std::swap(s.u(i, c), s.u(j, c));
            s.log.push_back({'p', i, j, 0, 0});
        } else if (kind == 1) {
            if (f.p() == 2) continue;  // -1 == 1
            int i = int(rng.below(uint64_t(n)));
            for (int c = 0; c < n; ++c) s.u(i, c) = -s.u(i, c);
            s.log.push_back({'d', i, i, 0, 0});
        } else {
            int i = int(rng.below(uint64_t(n))), j = int(rng.below(uint64_t(n)));
            if (i == j) continue;
            auto [a, b] = circle[size_t(rng.below(circle.size()))];
            FElem ea(f, a), eb(f, b);
            for (int c = 0; c < n; ++c) {
                FElem ri = s.u(i, c), rj = s.u(j, c);
                s.u(i, c) = ea * ri + eb * rj;
                s.u(j, c) = -eb * ri + ea * rj;
            }
            s.log.push_back({'r', i, j, a, b});
        }
    }
    return s;
}

MatrixF sample_isotropic_pair(const Field& f, const MatrixF& m, Rng& rng, bool full_rank) {
    if (m.rows() != 4 || m.cols() != 4) throw SizeMismatch("isotropic sampler needs a 4x4 form");
    require_skew(m);
    if (is_singular(m)) throw Singular("isotropic sampler needs a nonsingular form");
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<FElem> c1 = rng.vec(f, 4);
        bool nz = false;
        for (auto& x : c1) nz = nz || !x.is_zero();
        if (!nz) continue;
        // c^T M x = 0: one linear constraint on x
        std::vector<FElem> w(4, FElem::zero(f));
        for (int j = 0; j < 4; ++j)
            for (int i = 0; i < 4; ++i) w[size_t(j)] += c1[size_t(i)] * m(i, j);
        // pick x in the null space of w^T, random
        int lead = -1;
        for (int j = 0; j < 4; ++j)
            if (!w[size_t(j)].is_zero()) { lead = j; break; }
        std::vector<FElem> c2(4, FElem::zero(f));
        if (lead < 0) {
            c2 = rng.vec(f, 4);
        } else {
            FElem acc = FElem::zero(f);
            for (int j = 0; j < 4; ++j) {
                if (j == lead) continue;
                c2[size_t(j)] = rng.elem(f);
                acc += c2[size_t(j)] * w[size_t(j)];
            }
            c2[size_t(lead)] = -acc / w[size_t(lead)];
        }
        MatrixF out(4, 2, FElem::zero(f));
        for (int i = 0; i < 4; ++i) {
            out(i, 0) = c1[size_t(i)];
            out(i, 1) = c2[size_t(i)];
        }
        if (full_rank && rank(out) < 2) continue;
        // verify F^T M F = 0 exactly
        MatrixF g = out.transpose() * m * out;
        bool ok = true;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) ok = ok && g(i, j).is_zero();
        if (ok) return out;
    }
    throw std::runtime_error("isotropic pair sampling failed");
}

MatrixF sample_nonsingular(const Field& f, int n, Rng& rng) {
    for (int t = 0; t < 2000; ++t) {
        MatrixF a = rng.matrix(f, n, n);
        if (!is_singular(a)) return a;
    }
    throw std::runtime_error("nonsingular sampling failed");
}

MatrixF sample_nonsingular_skew(const Field& f, int n, Rng& rng) {
    if (n % 2 != 0) throw OddSize{};
    for (int t = 0; t < 2000; ++t) {
        MatrixF a = rng.skew(f, n);
        if (!is_singular(a)) return a;
    }
    throw std::runtime_error("nonsingular skew sampling failed");
}

}  // namespace pc
