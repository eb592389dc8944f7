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

#ifndef PERMCHAR_FIELD_HPP
#define PERMCHAR_FIELD_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace pc {

struct DivideByZero : std::runtime_error {
    DivideByZero() : std::runtime_error("division by zero in finite field") {}
};
struct NotASquare : std::runtime_error {
    NotASquare() : std::runtime_error("element is not a square in this field") {}
};

/// Immutable description of GF(p^k): prime p, degree k, monic irreducible
/// modulus of degree k with ascending coefficients (length k+1, last = 1).
struct FieldSpec {
    int p = 2;
    int k = 1;
    std::vector<int> modulus;  // c0 + c1 t + ... + c_k t^k, c_k == 1

    bool operator==(const FieldSpec& o) const {
        return p == o.p && k == o.k && modulus == o.modulus;
    }
};

/// GF(p^k) with full arithmetic tables. Elements are packed indices
/// v = c0 + c1*p + ... + c_{k-1}*p^{k-1} of coefficient vectors.
///
/// Instances are interned and never freed, so raw pointers stay valid for
/// the process lifetime and element copies are trivial.
class Field {
  public:
    // Interned accessors. get(p,k) uses the canonical modulus; get(spec)
    // accepts a caller-supplied modulus (verified irreducible, k <= 8).
    static const Field& get(int p, int k);
    static const Field& get(const FieldSpec& spec);

    static std::vector<int> canonical_modulus(int p, int k);
    static bool is_prime(int n);
    static bool is_irreducible(int p, const std::vector<int>& poly);

    const FieldSpec& spec() const { return spec_; }
    int p() const { return spec_.p; }
    int k() const { return spec_.k; }
    uint32_t q() const { return q_; }

    uint32_t add(uint32_t a, uint32_t b) const { return add_[a * q_ + b]; }
    uint32_t sub(uint32_t a, uint32_t b) const { return add_[a * q_ + neg_[b]]; }
    uint32_t neg(uint32_t a) const { return neg_[a]; }
    uint32_t mul(uint32_t a, uint32_t b) const { return mul_[a * q_ + b]; }
    uint32_t inv(uint32_t a) const {
        if (a == 0) throw DivideByZero{};
        return inv_[a];
    }
    uint32_t frobenius(uint32_t a) const { return frob_[a]; }
    bool has_sqrt(uint32_t a) const { return sqrt_[a] != kNoSqrt; }
    // Canonical root: lexicographically least coefficient vector among the roots.
    uint32_t sqrt(uint32_t a) const {
        uint32_t r = sqrt_[a];
        if (r == kNoSqrt) throw NotASquare{};
        return r;
    }
    uint32_t pow(uint32_t a, long long e) const;

    // Packed index <-> ascending coefficient vector.
    std::vector<int> coeffs(uint32_t a) const;
    uint32_t from_coeffs(const std::vector<int>& c) const;
    uint32_t from_int(long long n) const;  // image of the integer n (prime subfield)

    std::string to_string(uint32_t a) const;

  private:
    explicit Field(FieldSpec spec);
    void build_tables();

    static constexpr uint32_t kNoSqrt = 0xffffffffu;

    FieldSpec spec_;
    uint32_t q_ = 0;
    std::vector<uint32_t> add_, mul_;
    std::vector<uint32_t> neg_, inv_, frob_, sqrt_;
};

/// A value in some GF(p^k). Comparison and arithmetic require matching fields.
class FElem {
  public:
    FElem() : f_(nullptr), v_(0) {}
    FElem(const Field& f, uint32_t v) : f_(&f), v_(v) {}

    static FElem zero(const Field& f) { return FElem(f, 0); }
    static FElem one(const Field& f) { return FElem(f, f.from_int(1)); }

    const Field& field() const { return *f_; }
    const Field* field_ptr() const { return f_; }
    uint32_t index() const { return v_; }
    bool is_zero() const { return v_ == 0; }

    FElem operator+(const FElem& o) const { return FElem(*f_, f_->add(v_, o.v_)); }
    FElem operator-(const FElem& o) const { return FElem(*f_, f_->sub(v_, o.v_)); }
    FElem operator*(const FElem& o) const { return FElem(*f_, f_->mul(v_, o.v_)); }
    FElem operator/(const FElem& o) const { return *this * o.inv(); }
    FElem operator-() const { return FElem(*f_, f_->neg(v_)); }
    FElem& operator+=(const FElem& o) { v_ = f_->add(v_, o.v_); return *this; }
    FElem& operator-=(const FElem& o) { v_ = f_->sub(v_, o.v_); return *this; }
    FElem& operator*=(const FElem& o) { v_ = f_->mul(v_, o.v_); return *this; }

    FElem inv() const { return FElem(*f_, f_->inv(v_)); }
    FElem pow(long long e) const { return FElem(*f_, f_->pow(v_, e)); }
    FElem frobenius() const { return FElem(*f_, f_->frobenius(v_)); }
    bool has_sqrt() const { return f_->has_sqrt(v_); }
    FElem sqrt() const { return FElem(*f_, f_->sqrt(v_)); }

    bool operator==(const FElem& o) const { return f_ == o.f_ && v_ == o.v_; }
    bool operator!=(const FElem& o) const { return !(*this == o); }

    std::string str() const { return f_->to_string(v_); }

  private:
    const Field* f_;
    uint32_t v_;
};

inline FElem fel(const Field& f, long long n) { return FElem(f, f.from_int(n)); }

}  // namespace pc

#endif
