// Copyright 2026 The convwam Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Finite fields GF(p^r) in a polynomial basis. Elements are addressed by their
// index in the canonical order alpha_0 = 0, alpha_1 = 1, ...: index i encodes the
// coefficient vector (c_0, ..., c_{r-1}) as i = c_0 + c_1 p + ... + c_{r-1} p^{r-1}.

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "convwam/errors.hpp"

namespace convwam {

class Field {
 public:
  using Element = std::uint16_t;

  static constexpr unsigned kMaxDegree = 8;
  static constexpr unsigned kMaxOrder = 1024;

  /// Builds GF(p^r). An empty modulus selects the least irreducible monic polynomial
  /// of degree r, ordering candidates by their low-to-high coefficients read as a
  /// base-p number. A supplied modulus has r+1 coefficients, low to high.
  static std::shared_ptr<const Field> make(unsigned p, unsigned r, std::vector<unsigned> modulus = {}) {
    return std::shared_ptr<const Field>(new Field(p, r, std::move(modulus)));
  }

  unsigned p() const { return p_; }
  unsigned r() const { return r_; }
  unsigned q() const { return q_; }
  const std::vector<unsigned> &modulus() const { return modulus_; }

  Element add(Element a, Element b) const { return add_[a * q_ + b]; }
  Element mul(Element a, Element b) const { return mul_[a * q_ + b]; }
  Element neg(Element a) const { return neg_[a]; }
  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  Element inv(Element a) const {
    if (a == 0) throw ArithmeticError("inverse of zero in GF(" + std::to_string(q_) + ")");
    return inv_[a];
  }
  /// Absolute trace to the prime field; the result is an element index < p.
  Element trace(Element a) const { return trace_[a]; }

  std::vector<unsigned> coeffs(Element a) const {
    std::vector<unsigned> c(r_);
    for (unsigned i = 0; i < r_; ++i, a /= p_) c[i] = a % p_;
    return c;
  }

  Element from_coeffs(std::span<const unsigned> c) const {
    if (c.size() != r_) throw InputError("coefficient vector has wrong length");
    unsigned idx = 0;
    for (unsigned i = r_; i-- > 0;) {
      if (c[i] >= p_) throw InputError("coefficient out of range");
      idx = idx * p_ + c[i];
    }
    return static_cast<Element>(idx);
  }

  bool same_as(const Field &o) const { return p_ == o.p_ && r_ == o.r_ && modulus_ == o.modulus_; }

  std::string describe() const {
    std::string s = "GF(" + std::to_string(q_) + ")";
    if (r_ > 1) {
      s += " mod [";
      for (std::size_t i = 0; i < modulus_.size(); ++i) s += (i ? " " : "") + std::to_string(modulus_[i]);
      s += "]";
    }
    return s;
  }

  static bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

  /// Irreducibility over GF(p) by trial division against every monic polynomial of
  /// degree 1..deg/2. `poly` is low-to-high with a nonzero leading coefficient.
  static bool is_irreducible(unsigned p, const std::vector<unsigned> &poly) {
    const std::size_t deg = poly.size() - 1;
    if (deg <= 1) return deg == 1;
    for (std::size_t d = 1; d <= deg / 2; ++d) {
      std::vector<unsigned> div(d + 1, 0);
      div[d] = 1;
      std::size_t count = 1;
      for (std::size_t i = 0; i < d; ++i) count *= p;
      for (std::size_t code = 0; code < count; ++code) {
        std::size_t c = code;
        for (std::size_t i = 0; i < d; ++i, c /= p) div[i] = static_cast<unsigned>(c % p);
        if (poly_mod(p, poly, div).empty()) return false;
      }
    }
    return true;
  }

 private:
  Field(unsigned p, unsigned r, std::vector<unsigned> modulus) : p_(p), r_(r) {
    if (!is_prime(p)) throw InputError("field characteristic " + std::to_string(p) + " is not prime");
    if (r < 1 || r > kMaxDegree) throw InputError("extension degree must be in [1, 8]");
    unsigned q = 1;
    for (unsigned i = 0; i < r; ++i) {
      q *= p;
      if (q > kMaxOrder) throw InputError("field order exceeds " + std::to_string(kMaxOrder));
    }
    q_ = q;
    if (modulus.empty()) {
      modulus_ = default_modulus(p, r);
    } else {
      if (modulus.size() != r + 1) throw InputError("modulus must have r+1 coefficients");
      for (unsigned c : modulus)
        if (c >= p) throw InputError("modulus coefficient out of range");
      if (modulus.back() == 0) throw InputError("modulus leading coefficient is zero");
      const unsigned lead_inv = prime_inverse(modulus.back(), p);
      for (unsigned &c : modulus) c = c * lead_inv % p;
      if (!is_irreducible(p, modulus)) throw InputError("modulus is not irreducible over GF(" + std::to_string(p) + ")");
      modulus_ = std::move(modulus);
    }
    build_tables();
  }

  static unsigned prime_inverse(unsigned a, unsigned p) {
    for (unsigned x = 1; x < p; ++x)
      if (a * x % p == 1) return x;
    throw ArithmeticError("no inverse modulo p");
  }

  // Remainder of a by monic b over GF(p), trimmed (empty for zero).
  static std::vector<unsigned> poly_mod(unsigned p, std::vector<unsigned> a, const std::vector<unsigned> &b) {
    const std::size_t db = b.size() - 1;
    while (!a.empty() && a.back() == 0) a.pop_back();
    while (a.size() > db) {
      const unsigned lead = a.back();
      const std::size_t shift = a.size() - 1 - db;
      for (std::size_t i = 0; i <= db; ++i) a[i + shift] = (a[i + shift] + p * p - lead * b[i] % p) % p;
      while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
  }

  static std::vector<unsigned> default_modulus(unsigned p, unsigned r) {
    if (r == 1) return {0, 1};
    std::vector<unsigned> poly(r + 1, 0);
    poly[r] = 1;
    std::size_t count = 1;
    for (unsigned i = 0; i < r; ++i) count *= p;
    for (std::size_t code = 0; code < count; ++code) {
      std::size_t c = code;
      for (unsigned i = 0; i < r; ++i, c /= p) poly[i] = static_cast<unsigned>(c % p);
      if (poly[0] != 0 && is_irreducible(p, poly)) return poly;
    }
    throw InputError("no irreducible polynomial found");
  }

  void build_tables() {
    add_.resize(std::size_t{q_} * q_);
    mul_.resize(std::size_t{q_} * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);
    trace_.resize(q_);
    std::vector<std::vector<unsigned>> c(q_);
    for (unsigned a = 0; a < q_; ++a) c[a] = coeffs(static_cast<Element>(a));
    for (unsigned a = 0; a < q_; ++a) {
      std::vector<unsigned> n(r_);
      for (unsigned i = 0; i < r_; ++i) n[i] = (p_ - c[a][i]) % p_;
      neg_[a] = from_coeffs(n);
      for (unsigned b = 0; b < q_; ++b) {
        std::vector<unsigned> s(r_);
        for (unsigned i = 0; i < r_; ++i) s[i] = (c[a][i] + c[b][i]) % p_;
        add_[a * q_ + b] = from_coeffs(s);
        std::vector<unsigned> prod(2 * r_ - 1, 0);
        for (unsigned i = 0; i < r_; ++i)
          for (unsigned j = 0; j < r_; ++j) prod[i + j] = (prod[i + j] + c[a][i] * c[b][j]) % p_;
        std::vector<unsigned> red = r_ == 1 ? prod : poly_mod(p_, prod, modulus_);
        red.resize(r_, 0);
        mul_[a * q_ + b] = from_coeffs(red);
      }
    }
    for (unsigned a = 1; a < q_; ++a)
      for (unsigned b = 1; b < q_; ++b)
        if (mul_[a * q_ + b] == 1) inv_[a] = static_cast<Element>(b);
    for (unsigned a = 0; a < q_; ++a) {
      // tr(a) = a + a^p + ... + a^{p^{r-1}}
      Element acc = 0, power = static_cast<Element>(a);
      for (unsigned i = 0; i < r_; ++i) {
        acc = add(acc, power);
        Element next = 1;
        for (unsigned j = 0; j < p_; ++j) next = mul(next, power);
        power = next;
      }
      if (acc >= p_) throw ArithmeticError("trace left the prime field");
      trace_[a] = acc;
    }
  }

  unsigned p_, r_, q_ = 0;
  std::vector<unsigned> modulus_;
  std::vector<Element> add_, mul_, neg_, inv_, trace_;
};

using FieldPtr = std::shared_ptr<const Field>;

/// A field element bound to its field; convenient at API boundaries. Bulk code
/// works on bare `Field::Element` indices.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Field::Element index) : field_(std::move(field)), index_(index) {
    if (index_ >= field_->q()) throw InputError("field element index out of range");
  }

  const FieldPtr &field() const { return field_; }
  Field::Element index() const { return index_; }
  std::vector<unsigned> coeffs() const { return field_->coeffs(index_); }

  friend FieldElement operator+(const FieldElement &a, const FieldElement &b) {
    a.check_same(b);
    return {a.field_, a.field_->add(a.index_, b.index_)};
  }
  friend FieldElement operator-(const FieldElement &a, const FieldElement &b) {
    a.check_same(b);
    return {a.field_, a.field_->sub(a.index_, b.index_)};
  }
  friend FieldElement operator*(const FieldElement &a, const FieldElement &b) {
    a.check_same(b);
    return {a.field_, a.field_->mul(a.index_, b.index_)};
  }
  friend bool operator==(const FieldElement &a, const FieldElement &b) {
    return a.field_->same_as(*b.field_) && a.index_ == b.index_;
  }

  void check_same(const FieldElement &o) const {
    if (!field_->same_as(*o.field_)) throw InputError("field mismatch");
  }

 private:
  FieldPtr field_;
  Field::Element index_;
};

inline FieldElement field_trace(const FieldElement &a) { return {a.field(), a.field()->trace(a.index())}; }

}  // namespace convwam
