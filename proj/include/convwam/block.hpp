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

// Linear block codes over GF(q): enumeration, weight generating functions,
// duals and the MacWilliams transforms.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "convwam/errors.hpp"
#include "convwam/gf_matrix.hpp"
#include "convwam/poly.hpp"

namespace convwam {

using Word = std::vector<Field::Element>;

/// Visits every message u in A_k (first coordinate fastest) with its image uG.
/// Stepping digit i from v to v' adds the precomputed row (v' - v) g_i.
template <class Fn>
void for_each_message(const GfMatrix &gen, Fn &&fn, std::uint64_t budget = kDefaultBudget) {
  const Field &f = *gen.field();
  const std::size_t k = gen.rows(), n = gen.cols();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    total *= f.q();
    if (total > budget) throw BudgetExceeded("enumeration of " + std::to_string(f.q()) + "^" + std::to_string(k) + " messages", budget);
  }
  const unsigned q = f.q();
  std::vector<Field::Element> step(k * q * n);
  for (std::size_t i = 0; i < k; ++i)
    for (unsigned v = 0; v < q; ++v) {
      const auto delta = f.sub(static_cast<Field::Element>((v + 1) % q), static_cast<Field::Element>(v));
      for (std::size_t j = 0; j < n; ++j) step[(i * q + v) * n + j] = f.mul(delta, gen(i, j));
    }
  Word msg(k, 0), cw(n, 0);
  while (true) {
    fn(static_cast<const Word &>(msg), static_cast<const Word &>(cw));
    std::size_t i = 0;
    for (; i < k; ++i) {
      const Field::Element *row = &step[(i * q + msg[i]) * n];
      for (std::size_t j = 0; j < n; ++j) cw[j] = f.add(cw[j], row[j]);
      msg[i] = static_cast<Field::Element>((msg[i] + 1u) % q);
      if (msg[i] != 0) break;
    }
    if (i == k) return;
  }
}

inline unsigned hamming_weight(const Word &w, std::size_t begin, std::size_t end) {
  unsigned c = 0;
  for (std::size_t i = begin; i < end; ++i) c += w[i] != 0;
  return c;
}

class LinearCode {
 public:
  LinearCode(FieldPtr field, std::size_t n, GfMatrix generator)
      : field_(std::move(field)), n_(n), gen_(std::move(generator)) {
    if (gen_.cols() != n_) throw InputError("generator has " + std::to_string(gen_.cols()) + " columns, expected " + std::to_string(n_));
    if (gen_.rows() > n_) throw InputError("code dimension exceeds length");
    if (gen_.rank() != gen_.rows()) throw InputError("generator rows are linearly dependent");
  }

  const FieldPtr &field() const { return field_; }
  std::size_t n() const { return n_; }
  std::size_t k() const { return gen_.rows(); }
  const GfMatrix &generator() const { return gen_; }

  bool is_systematic() const {
    for (std::size_t i = 0; i < k(); ++i)
      for (std::size_t j = 0; j < k(); ++j)
        if (gen_(i, j) != (i == j ? 1 : 0)) return false;
    return true;
  }

  template <class Fn>
  void for_each_codeword(Fn &&fn, std::uint64_t budget = kDefaultBudget) const {
    for_each_message(gen_, [&](const Word &, const Word &cw) { fn(cw); }, budget);
  }

  std::vector<Word> codewords(std::uint64_t budget = kDefaultBudget) const {
    std::vector<Word> out;
    for_each_codeword([&](const Word &cw) { out.push_back(cw); }, budget);
    return out;
  }

 private:
  FieldPtr field_;
  std::size_t n_;
  GfMatrix gen_;
};

/// Dual code. For a systematic generator (I | A) the result is (-A^T | I).
inline LinearCode dual_code(const LinearCode &c) {
  const std::size_t n = c.n(), k = c.k();
  if (c.is_systematic()) {
    const GfMatrix a = c.generator().block(0, k, k, n - k);
    GfMatrix h(c.field(), n - k, n);
    const Field &f = *c.field();
    for (std::size_t i = 0; i < n - k; ++i) {
      for (std::size_t j = 0; j < k; ++j) h(i, j) = f.neg(a(j, i));
      h(i, k + i) = 1;
    }
    return LinearCode(c.field(), n, h);
  }
  return LinearCode(c.field(), n, c.generator().nullspace());
}

/// sum over codewords of x^{n-wt} y^{wt}
inline WeightPoly hwgf(const LinearCode &c, std::uint64_t budget = kDefaultBudget) {
  std::vector<Coeff> count(c.n() + 1, 0);
  c.for_each_codeword([&](const Word &cw) { ++count[hamming_weight(cw, 0, cw.size())]; }, budget);
  WeightPoly g;
  for (std::size_t w = 0; w <= c.n(); ++w) {
    Exponents e{};
    e[var_index(Var::x)] = static_cast<std::uint16_t>(c.n() - w);
    e[var_index(Var::y)] = static_cast<std::uint16_t>(w);
    g.add_term(e, count[w]);
  }
  return g;
}

/// Input-parity enumerator with `info` information positions, taken at the front
/// of each codeword or, with `info_last`, at the back.
inline WeightPoly input_parity_wgf(const LinearCode &c, std::size_t info, bool info_last,
                                   std::uint64_t budget = kDefaultBudget) {
  const std::size_t n = c.n(), k = info;
  if (k > n) throw InputError("more information positions than symbols");
  const std::size_t begin = info_last ? n - k : 0;
  std::vector<Coeff> count((k + 1) * (n - k + 1), 0);
  c.for_each_codeword(
      [&](const Word &cw) {
        const unsigned wi = hamming_weight(cw, begin, begin + k);
        ++count[wi * (n - k + 1) + hamming_weight(cw, 0, n) - wi];
      },
      budget);
  WeightPoly g;
  for (std::size_t i = 0; i <= k; ++i)
    for (std::size_t o = 0; o <= n - k; ++o) {
      Exponents e{};
      e[var_index(Var::xI)] = static_cast<std::uint16_t>(k - i);
      e[var_index(Var::yI)] = static_cast<std::uint16_t>(i);
      e[var_index(Var::xP)] = static_cast<std::uint16_t>(n - k - o);
      e[var_index(Var::yP)] = static_cast<std::uint16_t>(o);
      g.add_term(e, count[i * (n - k + 1) + o]);
    }
  return g;
}

/// Input-parity enumerator of a systematic code; information symbols are the first k.
inline WeightPoly ipwgf(const LinearCode &c, std::uint64_t budget = kDefaultBudget) {
  if (!c.is_systematic()) throw InputError("ipwgf requires a systematic generator (I_k | A)");
  return input_parity_wgf(c, c.k(), false, budget);
}

inline void require_nonnegative(const WeightPoly &g, const char *what) {
  for (const auto &[e, c] : g.terms())
    if (c < 0) throw ArithmeticError(std::string(what) + " produced a negative coefficient");
}

/// x -> x + (q-1) y, y -> x - y
inline Substitution hamming_dual_substitution(unsigned q) {
  const WeightPoly x = WeightPoly::variable(Var::x), y = WeightPoly::variable(Var::y);
  return {{Var::x, x + y.scaled(q - 1)}, {Var::y, x - y}};
}

/// (x_I, y_I, x_P, y_P) -> (x_P + (q-1) y_P, x_P - y_P, x_I + (q-1) y_I, x_I - y_I)
inline Substitution input_parity_dual_substitution(unsigned q) {
  const WeightPoly xi = WeightPoly::variable(Var::xI), yi = WeightPoly::variable(Var::yI);
  const WeightPoly xp = WeightPoly::variable(Var::xP), yp = WeightPoly::variable(Var::yP);
  return {{Var::xI, xp + yp.scaled(q - 1)}, {Var::yI, xp - yp}, {Var::xP, xi + yi.scaled(q - 1)}, {Var::yP, xi - yi}};
}

inline void require_only(const WeightPoly &g, std::initializer_list<Var> allowed, const char *what) {
  for (std::size_t v = 0; v < kNumVars; ++v) {
    bool ok = false;
    for (Var a : allowed) ok = ok || var_index(a) == v;
    if (!ok && g.contains(static_cast<Var>(v)))
      throw InputError(std::string(what) + ": unexpected variable " + std::string(kVarNames[v]));
  }
}

inline WeightPoly macwilliams_hwgf(const WeightPoly &g, unsigned k, unsigned q) {
  require_only(g, {Var::x, Var::y}, "macwilliams_hwgf");
  if (!g.is_zero()) {
    const auto &e = g.terms().begin()->first;
    if (!g.is_homogeneous({Var::x, Var::y}, e[var_index(Var::x)] + e[var_index(Var::y)]))
      throw InputError("macwilliams_hwgf: polynomial is not homogeneous in x, y");
  }
  WeightPoly r = substitute(g, hamming_dual_substitution(q)).divided_exactly(checked_pow(q, k));
  require_nonnegative(r, "macwilliams_hwgf");
  return r;
}

inline WeightPoly macwilliams_ipwgf(const WeightPoly &g, unsigned k, unsigned n, unsigned q) {
  require_only(g, {Var::xI, Var::yI, Var::xP, Var::yP}, "macwilliams_ipwgf");
  if (!g.is_homogeneous({Var::xI, Var::yI}, k) || !g.is_homogeneous({Var::xP, Var::yP}, n - k))
    throw InputError("macwilliams_ipwgf: polynomial does not have bidegree (k, n-k)");
  WeightPoly r = substitute(g, input_parity_dual_substitution(q)).divided_exactly(checked_pow(q, k));
  require_nonnegative(r, "macwilliams_ipwgf");
  return r;
}

/// Merges x_I, x_P -> x and y_I, y_P -> y.
inline WeightPoly collapse_input_parity(const WeightPoly &g) {
  const WeightPoly x = WeightPoly::variable(Var::x), y = WeightPoly::variable(Var::y);
  return substitute(g, with_identity({{Var::xI, x}, {Var::xP, x}, {Var::yI, y}, {Var::yP, y}}));
}

}  // namespace convwam
