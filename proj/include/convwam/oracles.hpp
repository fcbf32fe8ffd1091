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

// Brute-force references that run the encoder's state equations
//   p_j = w_j C + u_j E,  w_{j+1} = w_j A + u_j B
// over explicit input sequences, without going through weight adjacency matrices.

#include <cstdint>
#include <optional>
#include <vector>

#include "convwam/conv.hpp"

namespace convwam::oracle {

struct Step {
  std::size_t next;
  unsigned weight;
};

/// table[state * inputs + input] for states and inputs in canonical order.
inline std::vector<Step> transition_table(const ConvSeed &seed) {
  const Field &f = *seed.field();
  const std::size_t m = seed.m(), k = seed.k(), n = seed.n();
  const GfMatrix a = seed.A(), b = seed.B(), c = seed.C(), e = seed.E();
  std::size_t states = 1, inputs = 1;
  for (std::size_t i = 0; i < m; ++i) states *= f.q();
  for (std::size_t i = 0; i < k; ++i) inputs *= f.q();
  std::vector<Step> table(states * inputs);
  for (std::size_t s = 0; s < states; ++s) {
    const Word w = state_digits(s, m, f.q());
    for (std::size_t in = 0; in < inputs; ++in) {
      const Word u = state_digits(in, k, f.q());
      Word p(n, 0), w2(m, 0);
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) p[j] = f.add(p[j], f.mul(w[i], c(i, j)));
        for (std::size_t j = 0; j < m; ++j) w2[j] = f.add(w2[j], f.mul(w[i], a(i, j)));
      }
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < n; ++j) p[j] = f.add(p[j], f.mul(u[i], e(i, j)));
        for (std::size_t j = 0; j < m; ++j) w2[j] = f.add(w2[j], f.mul(u[i], b(i, j)));
      }
      table[s * inputs + in] = {state_index(w2, 0, m, f.q()), hamming_weight(p, 0, n)};
    }
  }
  return table;
}

namespace detail {

inline WeightPoly walk_term(unsigned weight, unsigned length) {
  Exponents e{};
  e[var_index(Var::y)] = static_cast<std::uint16_t>(weight);
  e[var_index(Var::D)] = static_cast<std::uint16_t>(length);
  return WeightPoly::monomial(e, 1);
}

struct WalkSearch {
  std::vector<Step> table;
  std::size_t inputs;
  unsigned max_len;
  bool skip_trivial;        // forbid the zero-input transition out of state 0
  bool fundamental;         // stop at the first return to 0
  std::uint64_t budget;
  std::uint64_t visited = 0;
  std::vector<Coeff> counts;  // [length][weight], filled for walks ending in state 0

  void run(std::size_t state, unsigned len, unsigned weight, std::size_t n_out) {
    if (++visited > budget) throw BudgetExceeded("explicit trellis path enumeration", budget);
    if (len > 0 && state == 0) {
      ++counts[len * (max_len * n_out + 1) + weight];
      if (fundamental) return;
    }
    if (len == max_len) return;
    for (std::size_t in = 0; in < inputs; ++in) {
      if (skip_trivial && state == 0 && in == 0) continue;
      const Step &s = table[state * inputs + in];
      run(s.next, len + 1, weight + s.weight, n_out);
    }
  }
};

inline WalkSearch search(const ConvSeed &seed, unsigned max_len, bool skip_trivial, bool fundamental,
                         std::uint64_t budget) {
  std::size_t inputs = 1;
  for (std::size_t i = 0; i < seed.k(); ++i) inputs *= seed.field()->q();
  WalkSearch ws{transition_table(seed), inputs, max_len, skip_trivial, fundamental, budget, 0, {}};
  ws.counts.assign((max_len + 1) * (max_len * seed.n() + 1), 0);
  ws.run(0, 0, 0, seed.n());
  return ws;
}

inline WeightPoly collect(const WalkSearch &ws, unsigned max_len, std::size_t n_out, bool with_empty) {
  WeightPoly out;
  if (with_empty) out += WeightPoly(1);
  const std::size_t wmax = max_len * n_out + 1;
  for (unsigned len = 1; len <= max_len; ++len)
    for (std::size_t w = 0; w < wmax; ++w)
      if (Coeff c = ws.counts[len * wmax + w]) out += walk_term(static_cast<unsigned>(w), len).scaled(c);
  return out;
}

}  // namespace detail

/// Sum over input sequences of length L <= d_max that start and end in state 0 of y^wt D^L.
inline WeightPoly trellis_total(const ConvSeed &seed, unsigned d_max, std::uint64_t budget = kDefaultBudget) {
  const auto ws = detail::search(seed, d_max, false, false, budget);
  return detail::collect(ws, d_max, seed.n(), true);
}

/// As trellis_total, but the zero-input transition from state 0 to itself is never taken.
inline WeightPoly free_walks(const ConvSeed &seed, unsigned d_max, std::uint64_t budget = kDefaultBudget) {
  const auto ws = detail::search(seed, d_max, true, false, budget);
  return detail::collect(ws, d_max, seed.n(), true);
}

/// Fundamental paths (leave 0, no intermediate 0, end in 0) of length <= depth.
inline WeightPoly fundamental_paths(const ConvSeed &seed, unsigned depth, std::uint64_t budget = kDefaultBudget) {
  const auto ws = detail::search(seed, depth, true, true, budget);
  return detail::collect(ws, depth, seed.n(), false);
}

/// Least positive weight of a fundamental path of length <= depth.
inline std::optional<unsigned> min_fundamental_weight(const ConvSeed &seed, unsigned depth,
                                                      std::uint64_t budget = kDefaultBudget) {
  return min_degree(fundamental_paths(seed, depth, budget), Var::y, true);
}

}  // namespace convwam::oracle
