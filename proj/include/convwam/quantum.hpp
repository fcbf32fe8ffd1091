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

// Clifford seed transformations, entanglement-assisted quantum convolutional codes,
// their weight adjacency matrices and the quantum MacWilliams transform.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "convwam/errors.hpp"
#include "convwam/fourier.hpp"
#include "convwam/gf_matrix.hpp"
#include "convwam/pauli.hpp"
#include "convwam/poly_matrix.hpp"

namespace convwam {

/// Images U Z_i U^dagger and U X_i U^dagger, modulo phase.
class CliffordSeed {
 public:
  CliffordSeed() = default;
  CliffordSeed(std::vector<PauliWord> z_img, std::vector<PauliWord> x_img)
      : z_(std::move(z_img)), x_(std::move(x_img)) {
    if (z_.size() != x_.size()) throw InputError("Clifford seed needs as many Z images as X images");
    for (const auto &w : z_)
      if (w.size() != z_.size()) throw InputError("Clifford image has the wrong length");
    for (const auto &w : x_)
      if (w.size() != z_.size()) throw InputError("Clifford image has the wrong length");
  }

  static CliffordSeed identity(std::size_t width) {
    std::vector<PauliWord> z, x;
    for (std::size_t i = 0; i < width; ++i) {
      z.push_back(PauliWord::single(width, i, 3));
      x.push_back(PauliWord::single(width, i, 1));
    }
    return {z, x};
  }

  /// Composition of `steps` uniformly random symplectic transvections
  /// u -> u + <u, v> v applied to every image.
  template <class Rng>
  static CliffordSeed random(std::size_t width, Rng &rng, unsigned steps) {
    CliffordSeed s = identity(width);
    const std::uint64_t mask = width == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
    std::uniform_int_distribution<std::uint64_t> bits(0, mask);
    for (unsigned t = 0; t < steps; ++t) {
      PauliWord v;
      do {
        v = PauliWord(width, bits(rng), bits(rng));
      } while (v.is_identity());
      for (auto *list : {&s.z_, &s.x_})
        for (auto &img : *list)
          if (symplectic_product(img, v)) img *= v;
    }
    return s;
  }

  std::size_t width() const { return z_.size(); }
  const std::vector<PauliWord> &z_images() const { return z_; }
  const std::vector<PauliWord> &x_images() const { return x_; }

  /// Image of an arbitrary input word.
  PauliWord apply(const PauliWord &in) const {
    if (in.size() != width()) throw InputError("input word has the wrong length");
    PauliWord out(width());
    for (std::size_t i = 0; i < width(); ++i) {
      if ((in.z_bits() >> i) & 1) out *= z_[i];
      if ((in.x_bits() >> i) & 1) out *= x_[i];
    }
    return out;
  }

  /// Checks g_i * h_i anticommute and every other pair of images commutes.
  /// Returns an empty string when valid, else the first violated relation.
  std::string validate() const {
    const std::size_t n = width();
    auto name = [](char t, std::size_t i) { return std::string(1, t) + std::to_string(i + 1); };
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const unsigned want = i == j ? 1 : 0;
        if (symplectic_product(z_[i], x_[j]) != want)
          return "images of " + name('Z', i) + " and " + name('X', j) + (want ? " commute" : " anticommute");
        if (j > i && symplectic_product(z_[i], z_[j]))
          return "images of " + name('Z', i) + " and " + name('Z', j) + " anticommute";
        if (j > i && symplectic_product(x_[i], x_[j]))
          return "images of " + name('X', i) + " and " + name('X', j) + " anticommute";
      }
    return {};
  }

 private:
  std::vector<PauliWord> z_, x_;
};

/// Seed plus role sets. Indices are 0-based qubit positions of the seed.
struct EaqccSpec {
  CliffordSeed seed;
  std::size_t n = 0, k = 0, c = 0, m = 0;
  std::vector<std::size_t> in_memory, in_logical, in_ancilla, in_ebit;  // I^M, I^L, I^A, I^E
  std::vector<std::size_t> out_memory, out_physical;                    // I^{M'}, I^P

  std::size_t a() const { return n - k - c; }

  void validate() const {
    if (k + c > n) throw InputError("k + c exceeds n");
    const std::size_t width = n + m;
    if (seed.width() != width)
      throw InputError("seed acts on " + std::to_string(seed.width()) + " qubits, expected n+m = " + std::to_string(width));
    if (width > PauliWord::kMaxQubits) throw InputError("too many qubits");
    auto check_size = [](const std::vector<std::size_t> &v, std::size_t want, const char *name) {
      if (v.size() != want)
        throw InputError(std::string("role set ") + name + " has " + std::to_string(v.size()) + " entries, expected " +
                         std::to_string(want));
    };
    check_size(in_memory, m, "IM");
    check_size(in_logical, k, "IL");
    check_size(in_ancilla, a(), "IA");
    check_size(in_ebit, c, "IE");
    check_size(out_memory, m, "IMout");
    check_size(out_physical, n, "IP");
    auto check_partition = [width](std::initializer_list<const std::vector<std::size_t> *> sets, const char *what) {
      std::vector<int> seen(width, 0);
      for (const auto *s : sets)
        for (auto i : *s) {
          if (i >= width) throw InputError(std::string(what) + " role index out of range");
          if (seen[i]++) throw InputError(std::string(what) + " role sets overlap at qubit " + std::to_string(i + 1));
        }
    };
    check_partition({&in_memory, &in_logical, &in_ancilla, &in_ebit}, "input");
    check_partition({&out_memory, &out_physical}, "output");
    const std::string why = seed.validate();
    if (!why.empty()) throw InputError("seed is not a Clifford transformation: " + why);
  }
};

/// Same seed with the roles of logical qubits and ebits exchanged.
inline EaqccSpec dual_spec(const EaqccSpec &spec) {
  EaqccSpec d = spec;
  std::swap(d.k, d.c);
  std::swap(d.in_logical, d.in_ebit);
  return d;
}

/// Memory states {I,X,Y,Z}^m with the first qubit fastest.
inline std::vector<std::string> quantum_state_labels(std::size_t m) {
  static constexpr char kLetters[] = "IXYZ";
  std::size_t count = std::size_t{1} << (2 * m);
  std::vector<std::string> labels;
  for (std::size_t s = 0; s < count; ++s) {
    std::string l;
    for (std::size_t i = 0, v = s; i < m; ++i, v /= 4) l += kLetters[v % 4];
    labels.push_back(m == 0 ? std::string("-") : l);
  }
  return labels;
}

inline std::size_t quantum_state_index(const PauliWord &w) {
  std::size_t idx = 0;
  for (std::size_t i = w.size(); i-- > 0;) idx = idx * 4 + w.letter(i);
  return idx;
}

inline PauliWord quantum_state_word(std::size_t idx, std::size_t m) {
  PauliWord w(m);
  for (std::size_t i = 0; i < m; ++i, idx /= 4) w.set(i, static_cast<unsigned>(idx % 4));
  return w;
}

inline PairFn quantum_pairing(std::size_t m) {
  return [m](std::size_t a, std::size_t b) { return symplectic_product(quantum_state_word(a, m), quantum_state_word(b, m)); };
}

/// One transition of the encoder: input Pauli (on all n+m seed qubits) and its image.
struct QuantumTransition {
  PauliWord input, output;
};

/// Which input operators are enumerated. Memory positions always range over all
/// Paulis and ancillas over {I, Z}; logical qubits and ebits either range over all
/// Paulis or stay at I.
struct TransitionSet {
  bool logical = true;
  bool ebits = false;
};

/// Visits U (M (x) L (x) S (x) E) U^dagger for the chosen set, in the order
/// memory (fastest), logical, ancilla, ebit, each block first qubit fastest.
template <class Fn>
void for_each_transition(const EaqccSpec &spec, TransitionSet set, Fn &&fn, std::uint64_t budget = kDefaultBudget) {
  spec.validate();
  const std::size_t width = spec.n + spec.m;
  struct Slot {
    std::size_t qubit;
    unsigned radix;
  };
  std::vector<Slot> slots;
  for (auto q : spec.in_memory) slots.push_back({q, 4});
  if (set.logical)
    for (auto q : spec.in_logical) slots.push_back({q, 4});
  for (auto q : spec.in_ancilla) slots.push_back({q, 2});
  if (set.ebits)
    for (auto q : spec.in_ebit) slots.push_back({q, 4});
  std::uint64_t total = 1;
  for (const auto &s : slots) {
    total *= s.radix;
    if (total > budget) throw BudgetExceeded("enumeration of the transition group", budget);
  }
  std::vector<unsigned> digit(slots.size(), 0);
  PauliWord in(width);
  while (true) {
    fn(QuantumTransition{in, spec.seed.apply(in)});
    std::size_t i = 0;
    for (; i < slots.size(); ++i) {
      digit[i] = (digit[i] + 1) % slots[i].radix;
      // ancillas take I or Z only
      in.set(slots[i].qubit, slots[i].radix == 2 ? digit[i] * 3 : digit[i]);
      if (digit[i] != 0) break;
    }
    if (i == slots.size()) return;
  }
}

inline PolyMatrix quantum_transition_wam(const EaqccSpec &spec, TransitionSet set, std::uint64_t budget = kDefaultBudget) {
  const auto labels = quantum_state_labels(spec.m);
  const std::size_t states = labels.size();
  std::vector<Coeff> count(states * states * (spec.n + 1), 0);
  for_each_transition(
      spec, set,
      [&](const QuantumTransition &t) {
        const std::size_t s0 = quantum_state_index(t.input.restricted(spec.in_memory));
        const std::size_t s1 = quantum_state_index(t.output.restricted(spec.out_memory));
        const unsigned w = t.output.restricted(spec.out_physical).weight();
        ++count[(s0 * states + s1) * (spec.n + 1) + w];
      },
      budget);
  PolyMatrix out(labels);
  for (std::size_t s0 = 0; s0 < states; ++s0)
    for (std::size_t s1 = 0; s1 < states; ++s1)
      for (std::size_t w = 0; w <= spec.n; ++w) {
        Exponents e{};
        e[var_index(Var::x)] = static_cast<std::uint16_t>(spec.n - w);
        e[var_index(Var::y)] = static_cast<std::uint16_t>(w);
        out(s0, s1).add_term(e, count[(s0 * states + s1) * (spec.n + 1) + w]);
      }
  return out;
}

/// WAM over the state-diagram set U(M (x) L (x) S^Z (x) I^c)U^dagger; the entry sum
/// at x = y = 1 is 4^m 4^k 2^a.
inline PolyMatrix quantum_wam(const EaqccSpec &spec, std::uint64_t budget = kDefaultBudget) {
  return quantum_transition_wam(spec, {true, false}, budget);
}

/// WAM over the simplified stabilizer group U(M (x) I^k (x) S^Z (x) S^E)U^dagger;
/// the entry sum is 4^m 2^a 4^c.
inline PolyMatrix stabilizer_wam(const EaqccSpec &spec, std::uint64_t budget = kDefaultBudget) {
  return quantum_transition_wam(spec, {false, true}, budget);
}

/// Generators of the constraint stabilizer group on 2m+n positions ordered as
/// (memory in : physical out : memory out).
inline std::vector<PauliWord> constraint_stabilizers(const EaqccSpec &spec) {
  spec.validate();
  const std::size_t width = spec.n + spec.m;
  std::vector<PauliWord> gens;
  auto lift = [&](std::size_t qubit, unsigned letter, PauliWord memory_in) {
    const PauliWord img = spec.seed.apply(PauliWord::single(width, qubit, letter));
    return tensor(tensor(memory_in, img.restricted(spec.out_physical)), img.restricted(spec.out_memory));
  };
  for (std::size_t t = 0; t < spec.m; ++t) {
    gens.push_back(lift(spec.in_memory[t], 3, PauliWord::single(spec.m, t, 3)));
    gens.push_back(lift(spec.in_memory[t], 1, PauliWord::single(spec.m, t, 1)));
  }
  for (auto q : spec.in_ebit) {
    gens.push_back(lift(q, 3, PauliWord(spec.m)));
    gens.push_back(lift(q, 1, PauliWord(spec.m)));
  }
  for (auto q : spec.in_ancilla) gens.push_back(lift(q, 3, PauliWord(spec.m)));
  return gens;
}

/// Dual WAM: 4^{-m} 4^{-k} 2^{-a} F^{(x)m} Lambda(x+3y, x-y) F^{(x)m}.
inline PolyMatrix quantum_macwilliams(const PolyMatrix &l, std::size_t n, std::size_t k, std::size_t c, std::size_t m) {
  if (k + c > n) throw InputError("quantum_macwilliams: k + c exceeds n");
  if (l.dim() != (std::size_t{1} << (2 * m)))
    throw InputError("quantum_macwilliams: matrix dimension is not 4^m");
  const std::size_t a = n - k - c;
  const WeightPoly x = WeightPoly::variable(Var::x), y = WeightPoly::variable(Var::y);
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = 0; j < l.dim(); ++j) {
      for (std::size_t v = 0; v < kNumVars; ++v)
        if (v != var_index(Var::x) && v != var_index(Var::y) && l(i, j).contains(static_cast<Var>(v)))
          throw InputError("quantum_macwilliams: entries must be polynomials in x, y");
      if (!l(i, j).is_homogeneous({Var::x, Var::y}, static_cast<unsigned>(n)))
        throw InputError("quantum_macwilliams: entry (" + l.labels()[i] + "," + l.labels()[j] +
                         ") is not homogeneous of degree n");
    }
  const PolyMatrix sub = l.substituted({{Var::x, x + y.scaled(3)}, {Var::y, x - y}});
  const Coeff scale = checked_mul(checked_pow(4, static_cast<unsigned>(m + k)), checked_pow(2, static_cast<unsigned>(a)));
  PolyMatrix r = character_conjugate(sub, 2, quantum_pairing(m), scale);
  for (std::size_t i = 0; i < r.dim(); ++i)
    for (std::size_t j = 0; j < r.dim(); ++j)
      for (const auto &[e, cf] : r(i, j).terms())
        if (cf < 0) throw ArithmeticError("quantum_macwilliams produced a negative coefficient");
  return r;
}

struct StateDiagramEdge {
  std::size_t from, to;
  std::string logical, physical;
};

struct StateDiagram {
  std::vector<std::string> nodes;
  std::vector<StateDiagramEdge> edges;

  std::string to_dot() const {
    std::string s = "digraph state_diagram {\n";
    for (const auto &n : nodes) s += "  \"" + n + "\";\n";
    for (const auto &e : edges)
      s += "  \"" + nodes[e.from] + "\" -> \"" + nodes[e.to] + "\" [label=\"" + e.logical + "," + e.physical + "\"];\n";
    s += "}\n";
    return s;
  }

  std::string to_text() const {
    std::string s;
    for (const auto &e : edges) s += nodes[e.from] + " -> " + nodes[e.to] + " : " + e.logical + "," + e.physical + "\n";
    return s;
  }
};

/// Edges (L, P) from memory M to memory M' for every element of the state-diagram set.
inline StateDiagram state_diagram(const EaqccSpec &spec, std::uint64_t budget = kDefaultBudget) {
  if (spec.m > 3) throw BudgetExceeded("state diagrams are limited to m <= 3 memory qubits", 3);
  StateDiagram d;
  d.nodes = quantum_state_labels(spec.m);
  for_each_transition(
      spec, {true, false},
      [&](const QuantumTransition &t) {
        const std::string logical = spec.k == 0 ? std::string("-") : t.input.restricted(spec.in_logical).to_string();
        d.edges.push_back({quantum_state_index(t.input.restricted(spec.in_memory)),
                           quantum_state_index(t.output.restricted(spec.out_memory)), logical,
                           t.output.restricted(spec.out_physical).to_string()});
      },
      budget);
  return d;
}

/// Impulse responses of the encoder as binary polynomial matrices. Row r at degree
/// d is the physical output P_d (a Pauli word on the I^P positions) produced by the
/// input operator of that row at time 0.
struct PolyCheckMatrix {
  std::vector<std::string> row_names;              // e.g. "S^Z 1", "S^E 1 Z", "L 1 X"
  std::vector<PauliWord> row_inputs;               // input operator on the n+m seed qubits
  std::vector<std::vector<PauliWord>> rows;        // rows[r][d], d = 0..d_max
  std::vector<PauliWord> residual;                 // memory operator left behind once a row settles
  std::size_t logical_rows = 0, ancilla_rows = 0, ebit_rows = 0;
  bool terminates = false;  // every row settles within d_max steps: later outputs are all I

  std::string to_string() const {
    std::string s;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      std::string line;
      for (std::size_t d = 0; d < rows[r].size(); ++d) {
        if (rows[r][d].is_identity()) continue;
        if (!line.empty()) line += " + ";
        line += rows[r][d].to_string();
        if (d == 1) line += "*D";
        if (d > 1) line += "*D^" + std::to_string(d);
      }
      s += row_names[r] + ": " + (line.empty() ? std::string("0") : line) + "\n";
    }
    if (!terminates) s += "(series truncated; some row still produces output beyond D^" + std::to_string(rows.empty() ? 0 : rows[0].size() - 1) + ")\n";
    return s;
  }
};

/// Binary matrix M_U: rows are phi of the images of Z_i, X_i for the input qubits in
/// role order (memory, logical, ancilla, ebit); columns are the output positions
/// reordered as (physical I^P, memory I^{M'}), two bits (z, x) per qubit.
inline GfMatrix binary_seed_matrix(const EaqccSpec &spec) {
  spec.validate();
  auto gf2 = Field::make(2, 1);
  const std::size_t width = spec.n + spec.m;
  std::vector<std::size_t> in_order;
  for (const auto *s : {&spec.in_memory, &spec.in_logical, &spec.in_ancilla, &spec.in_ebit})
    in_order.insert(in_order.end(), s->begin(), s->end());
  std::vector<std::size_t> out_order = spec.out_physical;
  out_order.insert(out_order.end(), spec.out_memory.begin(), spec.out_memory.end());
  GfMatrix mu(gf2, 2 * width, 2 * width);
  for (std::size_t r = 0; r < width; ++r) {
    const std::size_t q = in_order[r];
    const auto zb = spec.seed.z_images()[q].restricted(out_order).phi();
    const auto xb = spec.seed.x_images()[q].restricted(out_order).phi();
    for (std::size_t c = 0; c < 2 * width; ++c) {
      mu(2 * r, c) = zb[c];
      mu(2 * r + 1, c) = xb[c];
    }
  }
  return mu;
}

/// Rows of (L; S^Z; S^E) = (G; H^Z; K) + D (B; C^Z; E) (I - D A)^{-1} F, truncated at d_max,
/// with the blocks (F A; G B; H C; K E) of the binary seed matrix.
inline PolyCheckMatrix poly_check_matrix(const EaqccSpec &spec, unsigned d_max) {
  const GfMatrix mu = binary_seed_matrix(spec);
  const std::size_t n = spec.n, m = spec.m, k = spec.k, a = spec.a(), c = spec.c;
  const GfMatrix f = mu.block(0, 0, 2 * m, 2 * n), am = mu.block(0, 2 * n, 2 * m, 2 * m);
  PolyCheckMatrix pcm;
  pcm.logical_rows = 2 * k;
  pcm.ancilla_rows = a;
  pcm.ebit_rows = 2 * c;
  // selected rows of M_U below the memory block, with their names and inputs
  std::vector<std::size_t> pick;
  const std::size_t width = n + m;
  auto add = [&](std::size_t row, std::string name, std::size_t qubit, unsigned letter) {
    pick.push_back(row);
    pcm.row_names.push_back(std::move(name));
    pcm.row_inputs.push_back(PauliWord::single(width, qubit, letter));
  };
  for (std::size_t i = 0; i < k; ++i) {
    add(2 * (m + i), "L " + std::to_string(i + 1) + " Z", spec.in_logical[i], 3);
    add(2 * (m + i) + 1, "L " + std::to_string(i + 1) + " X", spec.in_logical[i], 1);
  }
  for (std::size_t i = 0; i < a; ++i) add(2 * (m + k + i), "S^Z " + std::to_string(i + 1), spec.in_ancilla[i], 3);
  for (std::size_t i = 0; i < c; ++i) {
    add(2 * (m + k + a + i), "S^E " + std::to_string(i + 1) + " Z", spec.in_ebit[i], 3);
    add(2 * (m + k + a + i) + 1, "S^E " + std::to_string(i + 1) + " X", spec.in_ebit[i], 1);
  }
  const std::size_t rows = pick.size();
  auto gf2 = mu.field();
  GfMatrix direct(gf2, rows, 2 * n), memory(gf2, rows, 2 * m);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t j = 0; j < 2 * n; ++j) direct(r, j) = mu(pick[r], j);
    for (std::size_t j = 0; j < 2 * m; ++j) memory(r, j) = mu(pick[r], 2 * n + j);
  }
  pcm.rows.assign(rows, {});
  auto emit = [&](const GfMatrix &block) {
    for (std::size_t r = 0; r < rows; ++r) {
      std::vector<std::uint8_t> bits(2 * n);
      for (std::size_t j = 0; j < 2 * n; ++j) bits[j] = static_cast<std::uint8_t>(block(r, j));
      pcm.rows[r].push_back(PauliWord::from_phi(bits));
    }
  };
  emit(direct);
  // A row settles once its memory is a fixed point of A that F maps to identity.
  std::vector<bool> settled(rows, false);
  pcm.residual.assign(rows, PauliWord(m));
  auto settle = [&](const GfMatrix &state) {
    const GfMatrix next = state * am, out = state * f;
    for (std::size_t r = 0; r < rows; ++r) {
      if (settled[r]) continue;
      bool fixed = true;
      for (std::size_t j = 0; j < 2 * m && fixed; ++j) fixed = next(r, j) == state(r, j);
      for (std::size_t j = 0; j < 2 * n && fixed; ++j) fixed = out(r, j) == 0;
      if (!fixed) continue;
      settled[r] = true;
      std::vector<std::uint8_t> bits(2 * m);
      for (std::size_t j = 0; j < 2 * m; ++j) bits[j] = static_cast<std::uint8_t>(state(r, j));
      pcm.residual[r] = PauliWord::from_phi(bits);
    }
  };
  GfMatrix state = memory;  // (B; C; E) A^{d-1}
  settle(state);
  for (unsigned d = 1; d <= d_max; ++d) {
    emit(state * f);
    state = state * am;
    settle(state);
  }
  pcm.terminates = std::all_of(settled.begin(), settled.end(), [](bool b) { return b; });
  return pcm;
}

/// For a terminating check matrix: the symplectic product of row r and row s shifted
/// by t, summed over time and including the residual memory operators, must equal the
/// product of the two input operators when t = 0 and vanish otherwise (the encoder is
/// a Clifford circuit on the whole stream).
inline std::string check_matrix_orthogonality(const PolyCheckMatrix &pcm) {
  if (!pcm.terminates) return "series does not terminate within the truncation";
  const std::size_t rows = pcm.rows.size();
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t s = 0; s < rows; ++s) {
      const long len = static_cast<long>(pcm.rows[r].size());
      for (long t = -len + 1; t < len; ++t) {
        unsigned acc = 0;
        for (long i = 0; i < len; ++i) {
          const long j = i + t;
          if (j < 0 || j >= len) continue;
          acc ^= symplectic_product(pcm.rows[r][static_cast<std::size_t>(i)], pcm.rows[s][static_cast<std::size_t>(j)]);
        }
        acc ^= symplectic_product(pcm.residual[r], pcm.residual[s]);
        const unsigned want = t == 0 ? symplectic_product(pcm.row_inputs[r], pcm.row_inputs[s]) : 0;
        if (acc != want)
          return "rows '" + pcm.row_names[r] + "' and '" + pcm.row_names[s] + "' violate orthogonality at shift " +
                 std::to_string(t);
      }
    }
  return {};
}

}  // namespace convwam
