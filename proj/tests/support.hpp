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


// Shared helpers for the test binaries: fixture loading, random instances and
// brute-force oracles that do not go through the library's enumerators.

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "convwam/block.hpp"
#include "convwam/conv.hpp"
#include "convwam/io.hpp"
#include "convwam/quantum.hpp"

namespace convwam::testsupport {

inline std::string fixture(const std::string &name) { return std::string(CONVWAM_FIXTURES) + "/" + name; }

inline LinearCode load_block(const std::string &name) { return parse_block_code(read_file(fixture(name))); }
inline ConvSeed load_conv(const std::string &name) { return parse_conv_seed(read_file(fixture(name))); }
inline EaqccSpec load_spec(const std::string &name) { return parse_eaqcc(read_file(fixture(name))); }

/// Every vector of A_len, as plain integer digits.
template <class Fn>
void all_vectors(unsigned q, std::size_t len, Fn &&fn) {
  std::vector<Field::Element> v(len, 0);
  while (true) {
    fn(static_cast<const std::vector<Field::Element> &>(v));
    std::size_t i = 0;
    for (; i < len; ++i) {
      if (++v[i] < q) break;
      v[i] = 0;
    }
    if (i == len) return;
  }
}

inline unsigned weight(const std::vector<Field::Element> &v, std::size_t b, std::size_t e) {
  unsigned w = 0;
  for (std::size_t i = b; i < e; ++i) w += v[i] != 0;
  return w;
}

inline WeightPoly xy(unsigned len, unsigned w) {
  return WeightPoly::variable(Var::x, len - w) * WeightPoly::variable(Var::y, w);
}

/// Is v orthogonal to every row of g, with the coordinates in [neg_from, end) negated?
inline bool orthogonal(const GfMatrix &g, const std::vector<Field::Element> &v, std::size_t neg_from) {
  const Field &f = *g.field();
  for (std::size_t i = 0; i < g.rows(); ++i) {
    Field::Element s = 0;
    for (std::size_t j = 0; j < g.cols(); ++j) {
      const Field::Element t = f.mul(g(i, j), v[j]);
      s = j >= neg_from ? f.sub(s, t) : f.add(s, t);
    }
    if (s != 0) return false;
  }
  return true;
}

/// HWGF of the orthogonal complement, by scanning all of A_n.
inline WeightPoly brute_dual_hwgf(const LinearCode &c) {
  WeightPoly out;
  const auto n = static_cast<unsigned>(c.n());
  all_vectors(c.field()->q(), n, [&](const auto &v) {
    if (orthogonal(c.generator(), v, n)) out += xy(n, weight(v, 0, n));
  });
  return out;
}

/// IPWGF of the complement of a systematic code, information on the last n-k symbols.
inline WeightPoly brute_dual_ipwgf(const LinearCode &c) {
  WeightPoly out;
  const auto n = static_cast<unsigned>(c.n()), k = static_cast<unsigned>(c.k());
  all_vectors(c.field()->q(), n, [&](const auto &v) {
    if (!orthogonal(c.generator(), v, n)) return;
    const unsigned wp = weight(v, 0, k), wi = weight(v, k, n);
    out += WeightPoly::variable(Var::xI, n - k - wi) * WeightPoly::variable(Var::yI, wi) *
           WeightPoly::variable(Var::xP, k - wp) * WeightPoly::variable(Var::yP, wp);
  });
  return out;
}

inline std::size_t digits_index(const std::vector<Field::Element> &v, std::size_t b, std::size_t len, unsigned q) {
  std::size_t idx = 0;
  for (std::size_t i = len; i-- > 0;) idx = idx * q + v[b + i];
  return idx;
}

/// WAM from the state equations p = wC + uE, w' = wA + uB.
inline PolyMatrix brute_wam(const ConvSeed &seed) {
  const Field &f = *seed.field();
  const std::size_t m = seed.m(), k = seed.k(), n = seed.n();
  const GfMatrix t = seed.T();
  PolyMatrix out(seed.state_labels());
  all_vectors(f.q(), m + k, [&](const auto &wu) {
    std::vector<Field::Element> row(m + n, 0);
    for (std::size_t i = 0; i < m + k; ++i)
      for (std::size_t j = 0; j < m + n; ++j) row[j] = f.add(row[j], f.mul(wu[i], t(i, j)));
    out(digits_index(wu, 0, m, f.q()), digits_index(row, n, m, f.q())) += xy(static_cast<unsigned>(n), weight(row, 0, n));
  });
  return out;
}

/// WAM of the dual constraint code (w : p : w') with the pairing <w,w> + <p,p> - <w',w'>.
inline PolyMatrix brute_dual_wam(const ConvSeed &seed) {
  const Field &f = *seed.field();
  const std::size_t m = seed.m(), n = seed.n();
  const GfMatrix g = seed.constraint_generator();
  PolyMatrix out(seed.state_labels());
  all_vectors(f.q(), 2 * m + n, [&](const auto &v) {
    if (!orthogonal(g, v, m + n)) return;
    out(digits_index(v, 0, m, f.q()), digits_index(v, m + n, m, f.q())) +=
        xy(static_cast<unsigned>(n), weight(v, m, m + n));
  });
  return out;
}

inline GfMatrix random_matrix(const FieldPtr &f, std::size_t r, std::size_t c, std::mt19937_64 &rng) {
  std::uniform_int_distribution<unsigned> el(0, f->q() - 1);
  GfMatrix g(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) g(i, j) = static_cast<Field::Element>(el(rng));
  return g;
}

inline LinearCode random_block_code(const FieldPtr &f, std::size_t n, std::size_t k, bool systematic,
                                    std::mt19937_64 &rng) {
  while (true) {
    GfMatrix g = random_matrix(f, k, n, rng);
    if (systematic) g.set_block(0, 0, GfMatrix::identity(f, k));
    if (g.rank() == k) return LinearCode(f, n, g);
  }
}

inline ConvSeed random_conv_seed(const FieldPtr &f, std::size_t n, std::size_t k, std::size_t m, bool systematic,
                                 std::mt19937_64 &rng) {
  while (true) {
    GfMatrix t = random_matrix(f, m + k, m + n, rng);
    if (systematic) {
      t.set_block(0, 0, GfMatrix(f, m, k));
      t.set_block(m, 0, GfMatrix::identity(f, k));
    }
    GfMatrix g(f, m + k, 2 * m + n);
    for (std::size_t i = 0; i < m; ++i) g(i, i) = 1;
    g.set_block(0, m, t);
    if (g.rank() == m + k) return ConvSeed(f, n, k, m, t);
  }
}

/// Random assignment of the seed's qubits to the roles.
inline EaqccSpec random_roles(const CliffordSeed &seed, std::size_t n, std::size_t k, std::size_t c, std::size_t m,
                              std::mt19937_64 &rng) {
  EaqccSpec s;
  s.n = n;
  s.k = k;
  s.c = c;
  s.m = m;
  s.seed = seed;
  std::vector<std::size_t> perm(n + m);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  auto take = [&](std::vector<std::size_t> &dst, std::size_t from, std::size_t count) {
    dst.assign(perm.begin() + static_cast<long>(from), perm.begin() + static_cast<long>(from + count));
  };
  take(s.in_memory, 0, m);
  take(s.in_logical, m, k);
  take(s.in_ebit, m + k, c);
  take(s.in_ancilla, m + k + c, n - k - c);
  std::shuffle(perm.begin(), perm.end(), rng);
  take(s.out_memory, 0, m);
  take(s.out_physical, m, n);
  return s;
}

inline EaqccSpec random_spec(std::size_t n, std::size_t k, std::size_t c, std::size_t m, std::mt19937_64 &rng) {
  const CliffordSeed seed = CliffordSeed::random(n + m, rng, static_cast<unsigned>(4 * (n + m)));
  return random_roles(seed, n, k, c, m, rng);
}

/// Quantum WAM from the GF(2) span of the images of the chosen input generators.
/// Memory and logical qubits contribute Z and X, ancillas Z, ebits Z and X when
/// `ebits` is set and nothing otherwise; logical qubits are dropped when `logical` is unset.
inline PolyMatrix brute_quantum_wam(const EaqccSpec &spec, bool logical, bool ebits) {
  const std::size_t width = spec.n + spec.m;
  std::vector<PauliWord> gens;
  std::vector<PauliWord> inputs;
  auto add = [&](std::size_t qubit, unsigned letter) {
    const PauliWord in = PauliWord::single(width, qubit, letter);
    inputs.push_back(in);
    gens.push_back(spec.seed.apply(in));
  };
  for (auto q : spec.in_memory) add(q, 3), add(q, 1);
  if (logical)
    for (auto q : spec.in_logical) add(q, 3), add(q, 1);
  for (auto q : spec.in_ancilla) add(q, 3);
  if (ebits)
    for (auto q : spec.in_ebit) add(q, 3), add(q, 1);
  PolyMatrix out(quantum_state_labels(spec.m));
  const std::size_t count = std::size_t{1} << gens.size();
  for (std::size_t mask = 0; mask < count; ++mask) {
    PauliWord in(width), img(width);
    for (std::size_t b = 0; b < gens.size(); ++b)
      if ((mask >> b) & 1) {
        in *= inputs[b];
        img *= gens[b];
      }
    const std::size_t from = quantum_state_index(in.restricted(spec.in_memory));
    const std::size_t to = quantum_state_index(img.restricted(spec.out_memory));
    out(from, to) += xy(static_cast<unsigned>(spec.n), img.restricted(spec.out_physical).weight());
  }
  return out;
}

}  // namespace convwam::testsupport
