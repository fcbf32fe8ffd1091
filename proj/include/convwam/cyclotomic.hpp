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

// Elements of Z[w]/(1 + w + ... + w^{p-1}), w a primitive p-th root of unity,
// stored over the basis w^0 .. w^{p-2}. The coefficient ring is a template
// parameter so character sums can be accumulated directly over polynomials.

#include <string>
#include <type_traits>
#include <vector>

#include "convwam/errors.hpp"
#include "convwam/field.hpp"

namespace convwam {

namespace detail {

template <class T>
void add_into(T &acc, const T &v) {
  if constexpr (std::is_integral_v<T>) {
    acc = checked_add(acc, v);
  } else {
    acc += v;
  }
}

template <class T>
void sub_into(T &acc, const T &v) {
  if constexpr (std::is_integral_v<T>) {
    acc = checked_sub(acc, v);
  } else {
    acc -= v;
  }
}

template <class T>
bool is_zero(const T &v) {
  if constexpr (std::is_integral_v<T>) {
    return v == 0;
  } else {
    return v.is_zero();
  }
}

}  // namespace detail

template <class T>
class Cyclotomic {
 public:
  explicit Cyclotomic(unsigned p) : p_(p), c_(p - 1, T{}) {
    if (p < 2) throw InputError("cyclotomic order must be at least 2");
  }

  /// Collapses per-exponent accumulators b[t] (meaning sum_t w^t b[t]) into the
  /// canonical basis using w^{p-1} = -(1 + w + ... + w^{p-2}).
  static Cyclotomic from_buckets(unsigned p, const std::vector<T> &buckets) {
    Cyclotomic z(p);
    for (unsigned t = 0; t + 1 < p; ++t) {
      z.c_[t] = buckets[t];
      detail::sub_into(z.c_[t], buckets[p - 1]);
    }
    return z;
  }

  static Cyclotomic power_of_root(unsigned p, unsigned e, const T &one) {
    Cyclotomic z(p);
    z.add_power(e, one);
    return z;
  }

  unsigned order() const { return p_; }
  const std::vector<T> &coeffs() const { return c_; }

  /// this += w^e * v
  void add_power(unsigned e, const T &v) {
    e %= p_;
    if (e + 1 == p_) {
      for (auto &c : c_) detail::sub_into(c, v);
    } else {
      detail::add_into(c_[e], v);
    }
  }

  bool is_integral() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (!detail::is_zero(c_[i])) return false;
    return true;
  }

  /// The value as an element of the coefficient ring; throws if any w-component survives.
  const T &integral_value() const {
    if (!is_integral()) throw ArithmeticError("character sum is not integral");
    return c_[0];
  }

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic &b) {
    a.check(b);
    for (std::size_t i = 0; i < a.c_.size(); ++i) detail::add_into(a.c_[i], b.c_[i]);
    return a;
  }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic &b) {
    a.check(b);
    for (std::size_t i = 0; i < a.c_.size(); ++i) detail::sub_into(a.c_[i], b.c_[i]);
    return a;
  }
  friend Cyclotomic operator*(const Cyclotomic &a, const Cyclotomic &b) {
    a.check(b);
    Cyclotomic z(a.p_);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (detail::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (detail::is_zero(b.c_[j])) continue;
        T prod;
        if constexpr (std::is_integral_v<T>) {
          prod = checked_mul(a.c_[i], b.c_[j]);
        } else {
          prod = a.c_[i] * b.c_[j];
        }
        z.add_power(static_cast<unsigned>(i + j), prod);
      }
    }
    return z;
  }
  friend bool operator==(const Cyclotomic &a, const Cyclotomic &b) { return a.p_ == b.p_ && a.c_ == b.c_; }

 private:
  void check(const Cyclotomic &o) const {
    if (o.p_ != p_) throw InputError("cyclotomic order mismatch");
  }

  unsigned p_;
  std::vector<T> c_;
};

using CyclotomicInt = Cyclotomic<Coeff>;

/// Additive character w^{tr(u v)}.
inline CyclotomicInt character(const FieldElement &u, const FieldElement &v) {
  u.check_same(v);
  const Field &f = *u.field();
  return CyclotomicInt::power_of_root(f.p(), f.trace(f.mul(u.index(), v.index())), 1);
}

}  // namespace convwam
