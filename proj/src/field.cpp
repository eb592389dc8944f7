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

#include "permchar/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace pc {

namespace {

// Polynomial helpers over GF(p), ascending coefficients, no leading zeros.
using Poly = std::vector<int>;

Poly trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Poly poly_mul_mod_p(const Poly& a, const Poly& b, int p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return trim(r);
}

// a mod m, m monic
Poly poly_mod(Poly a, const Poly& m, int p) {
    a = trim(a);
    while (a.size() >= m.size()) {
        int lead = a.back();
        size_t shift = a.size() - m.size();
        for (size_t i = 0; i < m.size(); ++i) {
            a[shift + i] = ((a[shift + i] - lead * m[i]) % p + p * p) % p;
        }
        a = trim(a);
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b, int p) {
    a = trim(a);
    b = trim(b);
    while (!b.empty()) {
        // make b monic
        int lb = b.back();
        int linv = 1;
        for (int t = 1; t < p; ++t)
            if (lb * t % p == 1) { linv = t; break; }
        for (auto& c : b) c = c * linv % p;
        Poly r = poly_mod(a, b, p);
        a = b;
        b = r;
    }
    return a;
}

Poly poly_powmod_xq(long long e, const Poly& m, int p) {
    // x^e mod m
    Poly base = {0, 1};
    Poly acc = {1};
    base = poly_mod(base, m, p);
    while (e > 0) {
        if (e & 1) acc = poly_mod(poly_mul_mod_p(acc, base, p), m, p);
        base = poly_mod(poly_mul_mod_p(base, base, p), m, p);
        e >>= 1;
    }
    return acc;
}

}  // namespace

bool Field::is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool Field::is_irreducible(int p, const std::vector<int>& poly) {
    Poly m = trim(poly);
    if (m.size() < 2) return false;
    int k = int(m.size()) - 1;
    if (m.back() != 1) return false;
    if (k == 1) return true;
    // x^{p^d} == x mod m must fail for all proper divisors d of k, and hold for d = k.
    long long pk = 1;
    for (int i = 0; i < k; ++i) pk *= p;
    Poly xqk = poly_powmod_xq(pk, m, p);
    Poly x = poly_mod({0, 1}, m, p);
    Poly diff(std::max(xqk.size(), x.size()), 0);
    for (size_t i = 0; i < xqk.size(); ++i) diff[i] = xqk[i];
    for (size_t i = 0; i < x.size(); ++i) diff[i] = ((diff[i] - x[i]) % p + p) % p;
    if (!trim(diff).empty()) return false;
    for (int d = 1; d < k; ++d) {
        if (k % d != 0) continue;
        long long pd = 1;
        for (int i = 0; i < d; ++i) pd *= p;
        Poly xqd = poly_powmod_xq(pd, m, p);
        Poly df(std::max(xqd.size(), x.size()), 0);
        for (size_t i = 0; i < xqd.size(); ++i) df[i] = xqd[i];
        for (size_t i = 0; i < x.size(); ++i) df[i] = ((df[i] - x[i]) % p + p) % p;
        Poly g = poly_gcd(m, trim(df), p);
        if (g.size() > 1) return false;
    }
    return true;
}

std::vector<int> Field::canonical_modulus(int p, int k) {
    if (k == 1) return {0, 1};  // t (unused for arithmetic; kept for uniform serialization)
    // Fixed table for the common small extensions, lexicographically least
    // monic irreducible otherwise (compared by ascending coefficient vector).
    if (p == 2 && k == 2) return {1, 1, 1};
    if (p == 3 && k == 2) return {1, 0, 1};
    if (p == 5 && k == 2) return {2, 0, 1};
    std::vector<int> c(k + 1, 0);
    c[k] = 1;
    // odometer over (c0,...,c_{k-1})
    while (true) {
        if (is_irreducible(p, c)) return c;
        int i = k - 1;
        while (i >= 0 && c[i] == p - 1) c[i--] = 0;
        if (i < 0) throw std::runtime_error("no irreducible modulus found");
        ++c[i];
    }
}

Field::Field(FieldSpec spec) : spec_(std::move(spec)) {
    if (!is_prime(spec_.p)) throw std::invalid_argument("field characteristic must be prime");
    if (spec_.k < 1 || spec_.k > 8) throw std::invalid_argument("extension degree out of range");
    if ((int)spec_.modulus.size() != spec_.k + 1 || spec_.modulus.back() != 1)
        throw std::invalid_argument("modulus must be monic of degree k");
    if (spec_.k > 1 && !is_irreducible(spec_.p, spec_.modulus))
        throw std::invalid_argument("modulus is not irreducible");
    long long q = 1;
    for (int i = 0; i < spec_.k; ++i) {
        q *= spec_.p;
        if (q > 4096) throw std::invalid_argument("field too large (q > 4096)");
    }
    q_ = uint32_t(q);
    build_tables();
}

void Field::build_tables() {
    const int p = spec_.p, k = spec_.k;
    const uint32_t q = q_;
    add_.assign(size_t(q) * q, 0);
    mul_.assign(size_t(q) * q, 0);
    neg_.assign(q, 0);
    inv_.assign(q, 0);
    frob_.assign(q, 0);
    sqrt_.assign(q, kNoSqrt);

    auto decode = [&](uint32_t v) {
        std::vector<int> c(k);
        for (int i = 0; i < k; ++i) {
            c[i] = int(v % p);
            v /= p;
        }
        return c;
    };
    auto encode = [&](const std::vector<int>& c) {
        uint32_t v = 0;
        for (int i = k - 1; i >= 0; --i) v = v * p + uint32_t(c[i] % p);
        return v;
    };

    for (uint32_t a = 0; a < q; ++a) {
        auto ca = decode(a);
        std::vector<int> cn(k);
        for (int i = 0; i < k; ++i) cn[i] = (p - ca[i]) % p;
        neg_[a] = encode(cn);
        for (uint32_t b = 0; b < q; ++b) {
            auto cb = decode(b);
            std::vector<int> cs(k);
            for (int i = 0; i < k; ++i) cs[i] = (ca[i] + cb[i]) % p;
            add_[size_t(a) * q + b] = encode(cs);
            Poly prod(2 * k - 1, 0);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
            Poly red = poly_mod(prod, spec_.modulus, p);
            red.resize(k, 0);
            mul_[size_t(a) * q + b] = encode(red);
        }
    }
    for (uint32_t a = 1; a < q; ++a) {
        // inverse by Fermat: a^(q-2)
        uint32_t acc = from_int(1), base = a;
        long long e = (long long)q - 2;
        while (e > 0) {
            if (e & 1) acc = mul_[size_t(acc) * q + base];
            base = mul_[size_t(base) * q + base];
            e >>= 1;
        }
        inv_[a] = acc;
    }
    for (uint32_t a = 0; a < q; ++a) {
        uint32_t acc = from_int(1), base = a;
        int e = p;
        while (e > 0) {
            if (e & 1) acc = mul_[size_t(acc) * q + base];
            base = mul_[size_t(base) * q + base];
            e >>= 1;
        }
        frob_[a] = acc;
    }
    // sqrt: exhaustive, keep the lexicographically least coefficient-vector root.
    auto lex_less = [&](uint32_t a, uint32_t b) {
        auto ca = decode(a), cb = decode(b);
        return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
    };
    for (uint32_t r = 0; r < q; ++r) {
        uint32_t s = mul_[size_t(r) * q + r];
        if (sqrt_[s] == kNoSqrt || lex_less(r, sqrt_[s])) sqrt_[s] = r;
    }
}

uint32_t Field::pow(uint32_t a, long long e) const {
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    uint32_t acc = from_int(1), base = a;
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

std::vector<int> Field::coeffs(uint32_t a) const {
    std::vector<int> c(spec_.k);
    for (int i = 0; i < spec_.k; ++i) {
        c[i] = int(a % spec_.p);
        a /= spec_.p;
    }
    return c;
}

uint32_t Field::from_coeffs(const std::vector<int>& c) const {
    uint32_t v = 0;
    for (int i = spec_.k - 1; i >= 0; --i) {
        int ci = i < (int)c.size() ? ((c[i] % spec_.p) + spec_.p) % spec_.p : 0;
        v = v * spec_.p + uint32_t(ci);
    }
    return v;
}

uint32_t Field::from_int(long long n) const {
    long long r = n % spec_.p;
    if (r < 0) r += spec_.p;
    return uint32_t(r);
}

std::string Field::to_string(uint32_t a) const {
    auto c = coeffs(a);
    if (spec_.k == 1) return std::to_string(c[0]);
    std::string s = "(";
    for (int i = 0; i < spec_.k; ++i) {
        if (i) s += ",";
        s += std::to_string(c[i]);
    }
    s += ")";
    return s;
}

const Field& Field::get(int p, int k) {
    return get(FieldSpec{p, k, canonical_modulus(p, k)});
}

const Field& Field::get(const FieldSpec& spec) {
    static std::mutex mu;
    static std::map<std::tuple<int, int, std::vector<int>>, std::unique_ptr<Field>>* reg =
        new std::map<std::tuple<int, int, std::vector<int>>, std::unique_ptr<Field>>();
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(spec.p, spec.k, spec.modulus);
    auto it = reg->find(key);
    if (it == reg->end()) {
        it = reg->emplace(key, std::unique_ptr<Field>(new Field(spec))).first;
    }
    return *it->second;
}

}  // namespace pc
