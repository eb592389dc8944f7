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

#ifndef PERMCHAR_JET_HPP
#define PERMCHAR_JET_HPP

#include <vector>

#include "permchar/matrix.hpp"

namespace pc {

/// First-order multilinear jet in m nilpotent components e_1..e_m with
/// e_i^2 = 0 (cross products survive). Coefficients are indexed by subset
/// mask; c[0] is the value, c[1<<i] the i-th partial, higher masks carry the
/// mixed first-order partials. Exact in any characteristic.
template <class R>
class Jet {
  public:
    Jet() = default;
    Jet(int nvars, const R& value) : m_(nvars), c_(size_t(1) << nvars, zero_like(value)) {
        c_[0] = value;
    }

    static Jet variable(int nvars, int i, const R& value) {
        Jet j(nvars, value);
        j.c_[size_t(1) << i] = one_like(value);
        return j;
    }

    int nvars() const { return m_; }
    const R& value() const { return c_[0]; }
    const R& coeff(unsigned mask) const { return c_[mask]; }
    R& coeff(unsigned mask) { return c_[mask]; }
    const R& partial(int i) const { return c_[size_t(1) << i]; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (!x.is_zero()) return false;
        return true;
    }

    Jet operator+(const Jet& o) const {
        Jet s = *this;
        for (size_t i = 0; i < c_.size(); ++i) s.c_[i] = c_[i] + o.c_[i];
        return s;
    }
    Jet operator-(const Jet& o) const {
        Jet s = *this;
        for (size_t i = 0; i < c_.size(); ++i) s.c_[i] = c_[i] - o.c_[i];
        return s;
    }
    Jet operator-() const {
        Jet s = *this;
        for (auto& x : s.c_) x = -x;
        return s;
    }
    Jet operator*(const Jet& o) const {
        Jet s(m_, zero_like(c_[0]));
        const unsigned full = unsigned(c_.size()) - 1;
        for (unsigned a = 0; a <= full; ++a) {
            if (c_[a].is_zero()) continue;
            unsigned rest = full & ~a;
            // enumerate masks b disjoint from a
            unsigned b = 0;
            while (true) {
                if (!o.c_[b].is_zero()) s.c_[a | b] = s.c_[a | b] + c_[a] * o.c_[b];
                if (b == rest) break;
                b = (b - rest) & rest;
            }
        }
        return s;
    }

    Jet inv() const {
        // (v + N)^{-1} = v^{-1} sum_t (-N/v)^t, N nilpotent of index <= m+1.
        R vi = c_[0].inv();
        Jet n = *this;
        n.c_[0] = zero_like(c_[0]);
        Jet w = n;
        for (auto& x : w.c_) x = -(x * vi);  // w = -N/v
        Jet acc(m_, one_like(c_[0]));
        Jet pw(m_, one_like(c_[0]));
        for (int t = 1; t <= m_; ++t) {
            pw = pw * w;
            acc = acc + pw;
        }
        for (auto& x : acc.c_) x = x * vi;
        return acc;
    }
    Jet operator/(const Jet& o) const { return *this * o.inv(); }

    bool operator==(const Jet& o) const { return m_ == o.m_ && c_ == o.c_; }

  private:
    int m_ = 0;
    std::vector<R> c_;
};

template <class R>
Jet<R> zero_like(const Jet<R>& like) {
    return Jet<R>(like.nvars(), zero_like(like.value()));
}
template <class R>
Jet<R> one_like(const Jet<R>& like) {
    return Jet<R>(like.nvars(), one_like(like.value()));
}

using JetF = Jet<FElem>;

/// Mixed partial d^{|S|} f / prod_{i in S} dx_i of a jet-evaluated function:
/// the coefficient of the subset mask (no factorials at first order).
template <class R>
R jet_mixed_partial(const Jet<R>& f, unsigned mask) {
    return f.coeff(mask);
}

}  // namespace pc

#endif
