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

// Sparse multivariate polynomials with exact integer coefficients over the fixed
// variable alphabet x, y, x_I, y_I, x_P, y_P, x_O, y_O, D. An optional truncation
// degree in D turns a polynomial into a truncated power series.

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "convwam/errors.hpp"

namespace convwam {

enum class Var : std::uint8_t { x, y, xI, yI, xP, yP, xO, yO, D };

inline constexpr std::size_t kNumVars = 9;
inline constexpr std::array<std::string_view, kNumVars> kVarNames = {"x",   "y",   "x_I", "y_I", "x_P",
                                                                      "y_P", "x_O", "y_O", "D"};

inline constexpr std::size_t var_index(Var v) { return static_cast<std::size_t>(v); }
inline std::string_view var_name(Var v) { return kVarNames[var_index(v)]; }

inline std::optional<Var> parse_var(std::string_view s) {
  for (std::size_t i = 0; i < kNumVars; ++i)
    if (kVarNames[i] == s) return static_cast<Var>(i);
  return std::nullopt;
}

using Exponents = std::array<std::uint16_t, kNumVars>;

/// Canonical term order: a monomial is spelled as the word of its variables in
/// alphabet order (x*y^2 is "x y y"), and words compare lexicographically with a
/// proper prefix first. The constant term comes first; x^3 precedes x^2*y.
struct MonomialOrder {
  static bool has_later(const Exponents &e, std::size_t v) {
    for (std::size_t w = v + 1; w < kNumVars; ++w)
      if (e[w] != 0) return true;
    return false;
  }
  bool operator()(const Exponents &a, const Exponents &b) const {
    for (std::size_t v = 0; v < kNumVars; ++v) {
      if (a[v] == b[v]) continue;
      if (a[v] < b[v]) return !has_later(a, v);
      return has_later(b, v);
    }
    return false;
  }
};

class WeightPoly {
 public:
  using Terms = std::map<Exponents, Coeff, MonomialOrder>;

  WeightPoly() = default;
  WeightPoly(Coeff c) {  // NOLINT: integers promote to constant polynomials
    if (c != 0) terms_[Exponents{}] = c;
  }

  static WeightPoly variable(Var v, unsigned power = 1) {
    Exponents e{};
    e[var_index(v)] = static_cast<std::uint16_t>(power);
    return monomial(e, 1);
  }

  static WeightPoly monomial(const Exponents &e, Coeff c) {
    WeightPoly p;
    p.add_term(e, c);
    return p;
  }

  /// Returns a copy truncated in D at `d_max` (or with truncation removed).
  WeightPoly truncated(std::optional<unsigned> d_max) const {
    WeightPoly p = *this;
    p.d_max_ = d_max;
    p.retruncate();
    return p;
  }

  std::optional<unsigned> d_max() const { return d_max_; }
  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool is_monomial() const { return terms_.size() <= 1; }

  Coeff coefficient(const Exponents &e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
  }

  void add_term(const Exponents &e, Coeff c) {
    if (c == 0) return;
    if (d_max_ && e[var_index(Var::D)] > *d_max_) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second = checked_add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }

  unsigned degree(Var v) const {
    unsigned d = 0;
    for (const auto &[e, c] : terms_) d = std::max<unsigned>(d, e[var_index(v)]);
    return d;
  }

  bool contains(Var v) const {
    return std::any_of(terms_.begin(), terms_.end(), [&](const auto &t) { return t.first[var_index(v)] != 0; });
  }

  /// True when every term has total degree `degree` in the listed variables.
  bool is_homogeneous(std::initializer_list<Var> vars, unsigned degree) const {
    for (const auto &[e, c] : terms_) {
      unsigned d = 0;
      for (Var v : vars) d += e[var_index(v)];
      if (d != degree) return false;
    }
    return true;
  }

  /// Sum of all coefficients (the value at every variable = 1).
  Coeff coefficient_sum() const {
    Coeff s = 0;
    for (const auto &[e, c] : terms_) s = checked_add(s, c);
    return s;
  }

  WeightPoly &operator+=(const WeightPoly &o) {
    d_max_ = tighter(d_max_, o.d_max_);
    retruncate();
    for (const auto &[e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  WeightPoly &operator-=(const WeightPoly &o) {
    d_max_ = tighter(d_max_, o.d_max_);
    retruncate();
    for (const auto &[e, c] : o.terms_) add_term(e, checked_sub(0, c));
    return *this;
  }
  WeightPoly &operator*=(const WeightPoly &o) { return *this = *this * o; }

  friend WeightPoly operator+(WeightPoly a, const WeightPoly &b) { return a += b; }
  friend WeightPoly operator-(WeightPoly a, const WeightPoly &b) { return a -= b; }
  friend WeightPoly operator-(const WeightPoly &a) { return WeightPoly{} - a; }

  friend WeightPoly operator*(const WeightPoly &a, const WeightPoly &b) {
    WeightPoly r;
    r.d_max_ = tighter(a.d_max_, b.d_max_);
    for (const auto &[ea, ca] : a.terms_) {
      for (const auto &[eb, cb] : b.terms_) {
        Exponents e;
        for (std::size_t i = 0; i < kNumVars; ++i) {
          const unsigned s = unsigned{ea[i]} + eb[i];
          if (s > 0xFFFF) throw ArithmeticError("exponent overflow");
          e[i] = static_cast<std::uint16_t>(s);
        }
        r.add_term(e, checked_mul(ca, cb));
      }
    }
    return r;
  }

  WeightPoly scaled(Coeff s) const {
    WeightPoly r;
    r.d_max_ = d_max_;
    for (const auto &[e, c] : terms_) r.add_term(e, checked_mul(c, s));
    return r;
  }

  /// Exact division of every coefficient; throws ArithmeticError if any is not divisible.
  WeightPoly divided_exactly(Coeff s) const {
    WeightPoly r;
    r.d_max_ = d_max_;
    for (const auto &[e, c] : terms_) r.add_term(e, exact_div(c, s));
    return r;
  }

  WeightPoly pow(unsigned e) const {
    WeightPoly r = WeightPoly(1).truncated(d_max_);
    for (unsigned i = 0; i < e; ++i) r *= *this;
    return r;
  }

  /// Equality compares terms only; truncation is an attribute of the representation.
  friend bool operator==(const WeightPoly &a, const WeightPoly &b) { return a.terms_ == b.terms_; }

  /// Canonical text: "1 + 3*x*y^2 - y^3*D"; the zero polynomial is "0".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto &[e, c] : terms_) {
      const bool neg = c < 0;
      const std::uint64_t mag = neg ? 0 - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
      if (first) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      first = false;
      std::string mono;
      for (std::size_t v = 0; v < kNumVars; ++v) {
        if (e[v] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += kVarNames[v];
        if (e[v] > 1) mono += "^" + std::to_string(e[v]);
      }
      if (mono.empty()) {
        out += std::to_string(mag);
      } else if (mag == 1) {
        out += mono;
      } else {
        out += std::to_string(mag) + "*" + mono;
      }
    }
    return out;
  }

  /// Parses the canonical text form (any term order, optional spaces). Anything
  /// that is not a sum of integer-coefficient monomials in the alphabet, such as a
  /// parenthesised or rational expression, is rejected.
  static WeightPoly parse(std::string_view s) {
    Parser ps{s, 0};
    return ps.run();
  }

 private:
  static std::optional<unsigned> tighter(std::optional<unsigned> a, std::optional<unsigned> b) {
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
  }

  void retruncate() {
    if (!d_max_) return;
    for (auto it = terms_.begin(); it != terms_.end();) {
      if (it->first[var_index(Var::D)] > *d_max_) {
        it = terms_.erase(it);
      } else {
        ++it;
      }
    }
  }

  struct Parser {
    std::string_view s;
    std::size_t i;

    [[noreturn]] void fail(const std::string &why) const {
      throw InputError("cannot parse polynomial at column " + std::to_string(i + 1) + ": " + why);
    }
    void skip() {
      while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool peek_digit() const { return i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); }
    std::uint64_t number() {
      if (!peek_digit()) fail("expected a number");
      std::uint64_t v = 0;
      while (peek_digit()) {
        const unsigned d = static_cast<unsigned>(s[i++] - '0');
        if (v > (UINT64_MAX - d) / 10) fail("number too large");
        v = v * 10 + d;
      }
      return v;
    }
    Var variable() {
      std::size_t j = i;
      while (j < s.size() && (std::isalpha(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      auto v = parse_var(s.substr(i, j - i));
      if (!v) fail("unknown variable '" + std::string(s.substr(i, j - i)) + "'");
      i = j;
      return *v;
    }
    WeightPoly run() {
      WeightPoly out;
      skip();
      if (i == s.size()) fail("empty input");
      bool first = true;
      while (true) {
        skip();
        if (i == s.size()) break;
        bool neg = false;
        if (s[i] == '+' || s[i] == '-') {
          neg = s[i] == '-';
          ++i;
          skip();
        } else if (!first) {
          fail("expected '+' or '-'");
        }
        first = false;
        std::uint64_t coeff = 1;
        Exponents e{};
        bool need_factor = true;
        if (peek_digit()) {
          coeff = number();
          skip();
          need_factor = false;
          if (i < s.size() && s[i] == '*') {
            ++i;
            skip();
            need_factor = true;
          }
        }
        if (need_factor) {
          while (true) {
            const Var v = variable();
            unsigned power = 1;
            skip();
            if (i < s.size() && s[i] == '^') {
              ++i;
              skip();
              const std::uint64_t pw = number();
              if (pw > 0xFFFF) fail("exponent too large");
              power = static_cast<unsigned>(pw);
              skip();
            }
            const unsigned total = e[var_index(v)] + power;
            if (total > 0xFFFF) fail("exponent too large");
            e[var_index(v)] = static_cast<std::uint16_t>(total);
            if (i < s.size() && s[i] == '*') {
              ++i;
              skip();
              continue;
            }
            break;
          }
        }
        if (coeff > static_cast<std::uint64_t>(INT64_MAX)) fail("coefficient too large");
        const Coeff c = static_cast<Coeff>(coeff);
        out.add_term(e, neg ? -c : c);
      }
      return out;
    }
  };

  Terms terms_;
  std::optional<unsigned> d_max_;
};

using Substitution = std::map<Var, WeightPoly>;

/// Composes f with a variable map. Every variable occurring in f must be mapped.
inline WeightPoly substitute(const WeightPoly &f, const Substitution &map) {
  std::array<std::vector<WeightPoly>, kNumVars> powers;
  WeightPoly out = WeightPoly{}.truncated(f.d_max());
  for (const auto &[e, c] : f.terms()) {
    WeightPoly term = WeightPoly(c).truncated(f.d_max());
    for (std::size_t v = 0; v < kNumVars; ++v) {
      if (e[v] == 0) continue;
      auto it = map.find(static_cast<Var>(v));
      if (it == map.end()) throw InputError("substitution does not map variable " + std::string(kVarNames[v]));
      auto &pw = powers[v];
      if (pw.empty()) pw.push_back(WeightPoly(1));
      while (pw.size() <= e[v]) pw.push_back(pw.back() * it->second);
      term *= pw[e[v]];
    }
    out += term;
  }
  return out;
}

/// Identity entries for every variable not already in `map`.
inline Substitution with_identity(Substitution map) {
  for (std::size_t v = 0; v < kNumVars; ++v) map.try_emplace(static_cast<Var>(v), WeightPoly::variable(static_cast<Var>(v)));
  return map;
}

inline WeightPoly operator""_wp(const char *s, std::size_t n) { return WeightPoly::parse(std::string_view(s, n)); }

}  // namespace convwam
