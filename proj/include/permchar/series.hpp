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

#ifndef PERMCHAR_SERIES_HPP
#define PERMCHAR_SERIES_HPP

#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "permchar/matrix.hpp"

namespace pc {

struct SeriesPrecisionLoss : std::runtime_error {
    SeriesPrecisionLoss() : std::runtime_error("series truncation too low for requested coefficient") {}
};

/// Truncated Laurent series over a coefficient ring in one formal
/// infinitesimal. A value knows its coefficients on [ord, trunc]; everything
/// above trunc is unknown, everything below ord is zero. Exact scalars
/// (including exact zero) carry trunc = kExact. Nesting Series<Series<FElem>>
/// gives the two-level towers used by sequential limits (inner variable
/// eliminated first).
template <class R>
class Series {
  public:
    static constexpr int kExact = std::numeric_limits<int>::max() / 4;

    Series() = default;

    /// Exact scalar c (known to all orders).
    explicit Series(const R& c) : proto_(zero_like(c)), ord_(0), trunc_(kExact), c_{c} {
        normalize();
    }

    static Series zero(const R& proto, int trunc = kExact) {
        Series s;
        s.proto_ = zero_like(proto);
        s.ord_ = 0;
        s.trunc_ = trunc;
        s.c_.clear();
        return s;
    }
    static Series scalar(const R& c, int trunc = kExact) {
        Series s = zero(c, trunc);
        if (!c.is_zero()) {
            s.ord_ = 0;
            s.c_ = {c};
        }
        return s;
    }
    /// c * eps^k
    static Series monomial(const R& c, int k, int trunc = kExact) {
        Series s = zero(c, trunc);
        if (!c.is_zero()) {
            s.ord_ = k;
            s.c_ = {c};
        }
        return s;
    }
    static Series eps(const R& proto, int trunc = kExact) {
        return monomial(one_like(proto), 1, trunc);
    }

    const R& proto() const { return proto_; }
    bool is_zero() const { return c_.empty(); }
    int trunc() const { return trunc_; }

    /// Valuation. Requires a nonzero value (checked against known window).
    int order() const {
        if (c_.empty()) {
            if (trunc_ >= kExact) throw std::runtime_error("order of exact zero series");
            throw SeriesPrecisionLoss{};
        }
        return ord_;
    }
    /// Order if nonzero, nullopt for exact zero; throws on unknown-precision zero.
    std::optional<int> order_opt() const {
        if (!c_.empty()) return ord_;
        if (trunc_ >= kExact) return std::nullopt;
        throw SeriesPrecisionLoss{};
    }

    R coeff(int k) const {
        if (c_.empty()) {
            if (k > trunc_) throw SeriesPrecisionLoss{};
            return zero_like(proto_);
        }
        if (k > trunc_) throw SeriesPrecisionLoss{};
        if (k < ord_ || k > ord_ + int(c_.size()) - 1) return zero_like(proto_);
        return c_[size_t(k - ord_)];
    }

    Series operator+(const Series& o) const {
        Series s;
        s.proto_ = proto_;
        s.trunc_ = std::min(trunc_, o.trunc_);
        if (c_.empty() && o.c_.empty()) return zero(proto_, s.trunc_);
        int lo = c_.empty() ? o.ord_ : (o.c_.empty() ? ord_ : std::min(ord_, o.ord_));
        int hi_known = s.trunc_;
        int hi_a = c_.empty() ? lo - 1 : ord_ + int(c_.size()) - 1;
        int hi_b = o.c_.empty() ? lo - 1 : o.ord_ + int(o.c_.size()) - 1;
        int hi = std::min(std::max(hi_a, hi_b), hi_known);
        s.ord_ = lo;
        s.c_.assign(size_t(std::max(0, hi - lo + 1)), zero_like(proto_));
        for (int k = lo; k <= hi; ++k) {
            R v = zero_like(proto_);
            if (!c_.empty() && k >= ord_ && k <= hi_a) v = v + c_[size_t(k - ord_)];
            if (!o.c_.empty() && k >= o.ord_ && k <= hi_b) v = v + o.c_[size_t(k - o.ord_)];
            s.c_[size_t(k - lo)] = v;
        }
        s.normalize();
        return s;
    }
    Series operator-() const {
        Series s = *this;
        for (auto& x : s.c_) x = -x;
        return s;
    }
    Series operator-(const Series& o) const { return *this + (-o); }

    Series operator*(const Series& o) const {
        Series s;
        s.proto_ = proto_;
        if (c_.empty() || o.c_.empty()) {
            // Zero times anything: exact zero if the zero factor is exact,
            // else zero known through (trunc of the O(eps^{t+1}) factor +
            // order of the other factor).
            if ((c_.empty() && trunc_ >= kExact) || (o.c_.empty() && o.trunc_ >= kExact))
                return zero(s.proto_, kExact);
            long long oa = c_.empty() ? (long long)trunc_ + 1 : ord_;
            long long ob = o.c_.empty() ? (long long)o.trunc_ + 1 : o.ord_;
            long long t = std::min<long long>(oa + ob - 1, kExact);
            return zero(s.proto_, int(t));
        }
        long long t1 = (long long)trunc_ + o.ord_;
        long long t2 = (long long)o.trunc_ + ord_;
        s.trunc_ = int(std::min<long long>(std::min(t1, t2), kExact));
        s.ord_ = ord_ + o.ord_;
        int len = std::min<long long>(int(c_.size()) + int(o.c_.size()) - 1,
                                      (long long)s.trunc_ - s.ord_ + 1);
        if (len <= 0) return zero(s.proto_, s.trunc_);
        s.c_.assign(size_t(len), zero_like(s.proto_));
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            for (size_t j = 0; j < o.c_.size() && int(i + j) < len; ++j)
                s.c_[i + j] = s.c_[i + j] + c_[i] * o.c_[j];
        }
        s.normalize();
        return s;
    }

    Series inv() const {
        if (c_.empty()) throw DivideByZero{};
        // (c0 eps^m (1 + u))^{-1} with u of positive relative order.
        int rel = trunc_ >= kExact ? int(c_.size()) - 1 : trunc_ - ord_;
        // Exact finite Laurent polynomials do not generally have exact
        // inverses; keep a generous window for the exact case.
        if (trunc_ >= kExact) rel = std::max(rel, 2 * int(c_.size()) + 8);
        Series s;
        s.proto_ = proto_;
        s.ord_ = -ord_;
        s.trunc_ = trunc_ >= kExact ? -ord_ + rel : trunc_ - 2 * ord_;
        R c0i = c_[0].inv();
        std::vector<R> r(size_t(rel + 1), zero_like(proto_));
        r[0] = c0i;
        for (int k = 1; k <= rel; ++k) {
            R acc = zero_like(proto_);
            for (int j = 1; j <= k && j < int(c_.size()); ++j) acc = acc + c_[size_t(j)] * r[size_t(k - j)];
            r[size_t(k)] = -(c0i * acc);
        }
        s.c_ = std::move(r);
        s.normalize();
        return s;
    }
    Series operator/(const Series& o) const { return *this * o.inv(); }

    bool operator==(const Series& o) const {
        return ord_ == (o.ord_) ? (c_ == o.c_) : (c_.empty() && o.c_.empty());
    }

    /// Multiply by eps^k (exact shift).
    Series shifted(int k) const {
        Series s = *this;
        s.ord_ += k;
        if (s.trunc_ < kExact) s.trunc_ += k;
        return s;
    }

    std::string str() const {
        if (c_.empty()) return "0";
        std::string out;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (i) out += " + ";
            out += "(" + coeff_str(c_[i]) + ")e^" + std::to_string(ord_ + int(i));
        }
        return out;
    }

  private:
    static std::string coeff_str(const R& x) {
        if constexpr (requires(const R& y) { y.str(); }) return x.str();
        else return "?";
    }
    void normalize() {
        size_t lead = 0;
        while (lead < c_.size() && c_[lead].is_zero()) ++lead;
        if (lead) {
            c_.erase(c_.begin(), c_.begin() + long(lead));
            ord_ += int(lead);
        }
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
        if (c_.empty()) ord_ = 0;
        if (!c_.empty() && trunc_ < kExact && ord_ + int(c_.size()) - 1 > trunc_)
            c_.resize(size_t(trunc_ - ord_ + 1));
        if (!c_.empty() && c_.front().is_zero()) normalize();
    }

    R proto_{};
    int ord_ = 0;
    int trunc_ = kExact;
    std::vector<R> c_;
};

template <class R>
Series<R> zero_like(const Series<R>& like) {
    return Series<R>::zero(like.proto(), like.trunc());
}
template <class R>
Series<R> one_like(const Series<R>& like) {
    return Series<R>::scalar(one_like(like.proto()), like.trunc());
}

using SeriesF = Series<FElem>;

struct InfiniteLimit : std::runtime_error {
    InfiniteLimit() : std::runtime_error("limit does not exist (negative eps-order)") {}
};

/// lim_{eps->0}: the eps^0 coefficient, or "infinitely big" if order < 0.
/// Returns nullopt for the infinite marker.
template <class R>
std::optional<R> eps_limit_opt(const Series<R>& u) {
    if (!u.is_zero() && u.order() < 0) return std::nullopt;
    return u.coeff(0);  // throws SeriesPrecisionLoss if coefficient 0 is unknown
}

template <class R>
R eps_limit(const Series<R>& u) {
    auto v = eps_limit_opt(u);
    if (!v) throw InfiniteLimit{};
    return *v;
}

/// Lift a matrix over R to a matrix over Series<R> at a given truncation.
template <class R>
Matrix<Series<R>> lift_series(const Matrix<R>& a, int trunc) {
    Matrix<Series<R>> m(a.rows(), a.cols(), Series<R>::zero(a.proto(), trunc));
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m(i, j) = Series<R>::scalar(a(i, j), trunc);
    return m;
}

/// Entrywise eps-limit of a series matrix.
template <class R>
Matrix<R> eps_limit(const Matrix<Series<R>>& a) {
    Matrix<R> m(a.rows(), a.cols(), a.proto().proto());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m(i, j) = eps_limit(a(i, j));
    return m;
}

}  // namespace pc

#endif
