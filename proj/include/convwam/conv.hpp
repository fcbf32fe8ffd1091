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

// Classical convolutional codes defined by a seed matrix T = (C A; E B).

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "convwam/block.hpp"
#include "convwam/fourier.hpp"
#include "convwam/gf_matrix.hpp"
#include "convwam/poly_matrix.hpp"

namespace convwam {

/// Memory states w in GF(q)^m, first coordinate fastest. A label concatenates the
/// element indices w_1 w_2 ... (dot-separated when q > 10).
inline std::vector<std::string> classical_state_labels(const Field &f, std::size_t m) {
  std::size_t count = 1;
  for (std::size_t i = 0; i < m; ++i) count *= f.q();
  std::vector<std::string> labels;
  labels.reserve(count);
  for (std::size_t s = 0; s < count; ++s) {
    std::string l;
    std::size_t v = s;
    for (std::size_t i = 0; i < m; ++i, v /= f.q()) {
      if (i > 0 && f.q() > 10) l += ".";
      l += std::to_string(v % f.q());
    }
    labels.push_back(m == 0 ? std::string("-") : l);
  }
  return labels;
}

inline std::size_t state_index(const Word &w, std::size_t offset, std::size_t m, unsigned q) {
  std::size_t idx = 0;
  for (std::size_t i = m; i-- > 0;) idx = idx * q + w[offset + i];
  return idx;
}

inline Word state_digits(std::size_t idx, std::size_t m, unsigned q) {
  Word w(m);
  for (std::size_t i = 0; i < m; ++i, idx /= q) w[i] = static_cast<Field::Element>(idx % q);
  return w;
}

/// pair(a, b) = tr(<w_a, w_b>) for the character matrix F_{A_m}.
inline PairFn classical_pairing(FieldPtr field, std::size_t m) {
  return [field, m](std::size_t a, std::size_t b) {
    const Field &f = *field;
    Field::Element s = 0;
    for (std::size_t i = 0; i < m; ++i, a /= f.q(), b /= f.q())
      s = f.add(s, f.mul(static_cast<Field::Element>(a % f.q()), static_cast<Field::Element>(b % f.q())));
    return static_cast<unsigned>(f.trace(s));
  };
}

class ConvSeed {
 public:
  ConvSeed(FieldPtr field, std::size_t n, std::size_t k, std::size_t m, GfMatrix t)
      : field_(std::move(field)), n_(n), k_(k), m_(m), t_(std::move(t)) {
    if (k_ > n_) throw InputError("seed has k > n");
    if (n_ == 0) throw InputError("seed has n = 0");
    if (t_.rows() != m_ + k_ || t_.cols() != m_ + n_)
      throw InputError("seed matrix must be " + std::to_string(m_ + k_) + "x" + std::to_string(m_ + n_));
    if (constraint_generator().rank() != m_ + k_) throw InputError("constraint-code generator is rank deficient");
  }

  /// Reads (C' A'; E' B') off a generator already in the shape (I_m | C A; 0 | E B).
  static ConvSeed from_constraint_generator(FieldPtr field, std::size_t n, std::size_t m, const GfMatrix &g) {
    if (g.cols() != 2 * m + n || g.rows() < m) throw InputError("constraint generator has the wrong shape");
    for (std::size_t i = 0; i < g.rows(); ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (g(i, j) != (i == j ? 1 : 0)) throw InputError("constraint generator is not of the form (I_m | * *; 0 | * *)");
    return ConvSeed(std::move(field), n, g.rows() - m, m, g.block(0, m, g.rows(), m + n));
  }

  const FieldPtr &field() const { return field_; }
  std::size_t n() const { return n_; }
  std::size_t k() const { return k_; }
  std::size_t m() const { return m_; }
  const GfMatrix &T() const { return t_; }

  GfMatrix C() const { return t_.block(0, 0, m_, n_); }
  GfMatrix A() const { return t_.block(0, n_, m_, m_); }
  GfMatrix E() const { return t_.block(m_, 0, k_, n_); }
  GfMatrix B() const { return t_.block(m_, n_, k_, m_); }

  /// (I_m | C A ; 0 | E B), codewords ordered (w_j : p_j : w_{j+1}).
  GfMatrix constraint_generator() const {
    GfMatrix g(field_, m_ + k_, 2 * m_ + n_);
    for (std::size_t i = 0; i < m_; ++i) g(i, i) = 1;
    g.set_block(0, m_, t_);
    return g;
  }

  /// (C; E) = (0 C0; I_k E0): the first k outputs repeat the input symbols.
  bool is_systematic() const {
    for (std::size_t i = 0; i < m_ + k_; ++i)
      for (std::size_t j = 0; j < k_; ++j) {
        const unsigned want = (i >= m_ && i - m_ == j) ? 1 : 0;
        if (t_(i, j) != want) return false;
      }
    return true;
  }

  void require_systematic(const char *what) const {
    if (!is_systematic()) throw InputError(std::string(what) + " requires a systematic seed (C; E) = (0 C0; I_k E0)");
  }

  std::vector<std::string> state_labels() const { return classical_state_labels(*field_, m_); }

 private:
  FieldPtr field_;
  std::size_t n_, k_, m_;
  GfMatrix t_;
};

inline LinearCode constraint_code(const ConvSeed &seed) {
  return LinearCode(seed.field(), 2 * seed.m() + seed.n(), seed.constraint_generator());
}

/// Some basis of the dual constraint code: the orthogonal complement of the
/// constraint code with its memory-out coordinates negated.
inline GfMatrix dual_constraint_rowspace(const ConvSeed &seed) {
  const Field &f = *seed.field();
  const std::size_t m = seed.m(), n = seed.n();
  GfMatrix h = seed.constraint_generator().nullspace();
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = m + n; j < 2 * m + n; ++j) h(i, j) = f.neg(h(i, j));
  return h;
}

/// Generator H of the dual constraint code in the shape (I_m | C' A'; 0 | E' B'),
/// where H * diag(I_m, I_n, -I_m) spans the orthogonal complement of the constraint code.
inline GfMatrix dual_constraint_generator(const ConvSeed &seed) {
  const std::size_t m = seed.m();
  GfMatrix h = dual_constraint_rowspace(seed);
  const auto pivots = h.rref();
  for (std::size_t j = 0; j < m; ++j)
    if (j >= pivots.size() || pivots[j] != j)
      throw InputError("dual constraint code cannot be brought to the shape (I_m | * *; 0 | * *): its first " +
                       std::to_string(m) + " columns have rank " + std::to_string(j));
  return h;
}

inline LinearCode dual_constraint_code(const ConvSeed &seed) {
  return LinearCode(seed.field(), 2 * seed.m() + seed.n(), dual_constraint_generator(seed));
}

inline ConvSeed dual_seed(const ConvSeed &seed) {
  return ConvSeed::from_constraint_generator(seed.field(), seed.n(), seed.m(), dual_constraint_generator(seed));
}

/// A weight class assigns output positions to a pair of (x-like, y-like) variables.
struct WeightClass {
  Var x, y;
};

/// Transition enumerator over the row space of `gen` (length 2m+n, read as
/// (w : p : w')). Output position j contributes to class `cls[j]`. When
/// `input` is set, the weight of message coordinates m..rows-1 is tracked too.
inline PolyMatrix transition_wam(const GfMatrix &gen, std::size_t m, std::size_t n, const std::vector<WeightClass> &classes,
                                 const std::vector<std::size_t> &cls, std::optional<WeightClass> input = std::nullopt,
                                 std::uint64_t budget = kDefaultBudget) {
  const Field &f = *gen.field();
  if (gen.cols() != 2 * m + n || cls.size() != n) throw InputError("transition_wam: shape mismatch");
  const std::size_t nc = classes.size();
  std::vector<std::size_t> size(nc + 1, 1);
  for (std::size_t j = 0; j < n; ++j) ++size[cls[j]];
  const std::size_t kin = gen.rows() >= m ? gen.rows() - m : 0;
  size[nc] = input ? kin + 1 : 1;
  std::size_t profiles = 1;
  for (auto s : size) profiles *= s;
  const auto labels = classical_state_labels(f, m);
  const std::size_t states = labels.size();
  std::vector<Coeff> count(states * states * profiles, 0);
  std::vector<std::size_t> w(nc + 1);
  for_each_message(
      gen,
      [&](const Word &msg, const Word &cw) {
        std::fill(w.begin(), w.end(), 0);
        for (std::size_t j = 0; j < n; ++j) w[cls[j]] += cw[m + j] != 0;
        if (input) w[nc] = hamming_weight(msg, m, msg.size());
        std::size_t key = 0;
        for (std::size_t c = nc + 1; c-- > 0;) key = key * size[c] + w[c];
        const std::size_t s0 = state_index(cw, 0, m, f.q()), s1 = state_index(cw, m + n, m, f.q());
        ++count[(s0 * states + s1) * profiles + key];
      },
      budget);
  PolyMatrix out(labels);
  for (std::size_t s0 = 0; s0 < states; ++s0)
    for (std::size_t s1 = 0; s1 < states; ++s1)
      for (std::size_t key = 0; key < profiles; ++key) {
        const Coeff c = count[(s0 * states + s1) * profiles + key];
        if (c == 0) continue;
        Exponents e{};
        std::size_t rest = key;
        for (std::size_t cl = 0; cl <= nc; ++cl) {
          const std::size_t wt = rest % size[cl];
          rest /= size[cl];
          if (cl == nc && !input) continue;
          const WeightClass &wc = cl == nc ? *input : classes[cl];
          e[var_index(wc.x)] = static_cast<std::uint16_t>(e[var_index(wc.x)] + size[cl] - 1 - wt);
          e[var_index(wc.y)] = static_cast<std::uint16_t>(e[var_index(wc.y)] + wt);
        }
        out(s0, s1).add_term(e, c);
      }
  return out;
}

inline PolyMatrix wam(const ConvSeed &seed, std::uint64_t budget = kDefaultBudget) {
  return transition_wam(seed.constraint_generator(), seed.m(), seed.n(), {{Var::x, Var::y}},
                        std::vector<std::size_t>(seed.n(), 0), std::nullopt, budget);
}

/// Input-parity classes: the first `info` outputs are information symbols unless
/// `info_last` is set, in which case the last `info` outputs are.
inline std::vector<std::size_t> input_parity_classes(std::size_t n, std::size_t info, bool info_last) {
  std::vector<std::size_t> cls(n, 1);
  for (std::size_t j = 0; j < info; ++j) cls[info_last ? n - 1 - j : j] = 0;
  return cls;
}

inline const std::vector<WeightClass> &input_parity_vars() {
  static const std::vector<WeightClass> v = {{Var::xI, Var::yI}, {Var::xP, Var::yP}};
  return v;
}

inline PolyMatrix ipwam(const ConvSeed &seed, std::uint64_t budget = kDefaultBudget) {
  seed.require_systematic("ipwam");
  return transition_wam(seed.constraint_generator(), seed.m(), seed.n(), input_parity_vars(),
                        input_parity_classes(seed.n(), seed.k(), false), std::nullopt, budget);
}

inline PolyMatrix iowam(const ConvSeed &seed, std::uint64_t budget = kDefaultBudget) {
  return transition_wam(seed.constraint_generator(), seed.m(), seed.n(), {{Var::xO, Var::yO}},
                        std::vector<std::size_t>(seed.n(), 0), WeightClass{Var::xI, Var::yI}, budget);
}

inline void require_homogeneous_entries(const PolyMatrix &l, std::initializer_list<Var> vars, unsigned degree,
                                        const char *what) {
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = 0; j < l.dim(); ++j)
      if (!l(i, j).is_homogeneous(vars, degree))
        throw InputError(std::string(what) + ": entry (" + l.labels()[i] + "," + l.labels()[j] +
                         ") is not homogeneous of the expected degree");
}

inline void require_nonnegative(const PolyMatrix &l, const char *what) {
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = 0; j < l.dim(); ++j) require_nonnegative(l(i, j), what);
}

inline void require_states(const PolyMatrix &l, const Field &f, std::size_t m, const char *what) {
  std::size_t count = 1;
  for (std::size_t i = 0; i < m; ++i) count *= f.q();
  if (l.dim() != count)
    throw InputError(std::string(what) + ": matrix dimension " + std::to_string(l.dim()) + " is not q^m = " +
                     std::to_string(count));
}

/// WAM of the dual constraint code: q^{-(m+k)} F Lambda(x+(q-1)y, x-y) F^dagger.
inline PolyMatrix macwilliams_wam(const PolyMatrix &l, const FieldPtr &field, std::size_t n, std::size_t k, std::size_t m) {
  require_states(l, *field, m, "macwilliams_wam");
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = 0; j < l.dim(); ++j) require_only(l(i, j), {Var::x, Var::y}, "macwilliams_wam");
  require_homogeneous_entries(l, {Var::x, Var::y}, static_cast<unsigned>(n), "macwilliams_wam");
  const PolyMatrix sub = l.substituted(hamming_dual_substitution(field->q()));
  PolyMatrix r = character_conjugate(sub, field->p(), classical_pairing(field, m),
                                     checked_pow(field->q(), static_cast<unsigned>(m + k)));
  require_nonnegative(r, "macwilliams_wam");
  return r;
}

/// IPWAM of the dual systematic encoder, whose information symbols are the last n-k outputs.
inline PolyMatrix macwilliams_ipwam(const PolyMatrix &l, const FieldPtr &field, std::size_t n, std::size_t k,
                                    std::size_t m) {
  require_states(l, *field, m, "macwilliams_ipwam");
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = 0; j < l.dim(); ++j)
      require_only(l(i, j), {Var::xI, Var::yI, Var::xP, Var::yP}, "macwilliams_ipwam");
  require_homogeneous_entries(l, {Var::xI, Var::yI}, static_cast<unsigned>(k), "macwilliams_ipwam");
  require_homogeneous_entries(l, {Var::xP, Var::yP}, static_cast<unsigned>(n - k), "macwilliams_ipwam");
  const PolyMatrix sub = l.substituted(input_parity_dual_substitution(field->q()));
  PolyMatrix r = character_conjugate(sub, field->p(), classical_pairing(field, m),
                                     checked_pow(field->q(), static_cast<unsigned>(m + k)));
  require_nonnegative(r, "macwilliams_ipwam");
  return r;
}

/// Seed of the encoder G = ((I_m F; 0 I_k)) * G_S built from a systematic seed.
inline ConvSeed nonsystematic_seed(const ConvSeed &seed_s, const GfMatrix &f) {
  seed_s.require_systematic("nonsystematic_seed");
  const std::size_t m = seed_s.m(), k = seed_s.k();
  if (f.rows() != m || f.cols() != k) throw InputError("F must be m x k");
  GfMatrix left = GfMatrix::identity(seed_s.field(), m + k);
  left.set_block(0, m, f);
  const GfMatrix g = left * seed_s.constraint_generator();
  return ConvSeed::from_constraint_generator(seed_s.field(), seed_s.n(), m, g);
}

/// IOWAM of the nonsystematic encoder via the product rule
///   Delta(w, w') = Delta_S(x_I, y_I, 1, 1)(w, w' - w F B0) * Lambda(x_O, y_O)(w, w'),
/// valid when every entry of the target IOWAM is a monomial (checked).
inline PolyMatrix iowam_from_systematic(const ConvSeed &seed_s, const GfMatrix &f_mat,
                                        std::uint64_t budget = kDefaultBudget) {
  const ConvSeed target = nonsystematic_seed(seed_s, f_mat);
  const PolyMatrix direct = iowam(target, budget);
  for (std::size_t i = 0; i < direct.dim(); ++i)
    for (std::size_t j = 0; j < direct.dim(); ++j)
      if (!direct(i, j).is_monomial())
        throw InputError("iowam_from_systematic: entry (" + direct.labels()[i] + "," + direct.labels()[j] +
                         ") of the target IOWAM is not a monomial");
  const Field &fd = *seed_s.field();
  const std::size_t m = seed_s.m();
  const WeightPoly one(1);
  const PolyMatrix input_part = iowam(seed_s, budget).substituted({{Var::xO, one}, {Var::yO, one}});
  const PolyMatrix lam = wam(seed_s, budget).substituted(
      {{Var::x, WeightPoly::variable(Var::xO)}, {Var::y, WeightPoly::variable(Var::yO)}});
  const GfMatrix fb = f_mat * seed_s.B();
  PolyMatrix out(seed_s.state_labels());
  for (std::size_t i = 0; i < out.dim(); ++i) {
    const Word w = state_digits(i, m, fd.q());
    Word shift(m, 0);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) shift[b] = fd.add(shift[b], fd.mul(w[a], fb(a, b)));
    for (std::size_t j = 0; j < out.dim(); ++j) {
      Word w2 = state_digits(j, m, fd.q());
      for (std::size_t b = 0; b < m; ++b) w2[b] = fd.sub(w2[b], shift[b]);
      out(i, j) = input_part(i, state_index(w2, 0, m, fd.q())) * lam(i, j);
    }
  }
  return out;
}

/// G(D) = E + sum_{i>=1} B A^{i-1} C D^i, as coefficient matrices G_0..G_{d_max}.
struct PolyGenMatrix {
  std::vector<GfMatrix> coeffs;

  std::string to_string() const {
    if (coeffs.empty()) return "";
    const std::size_t rows = coeffs[0].rows(), cols = coeffs[0].cols();
    std::string s;
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        std::string entry;
        for (std::size_t d = 0; d < coeffs.size(); ++d) {
          const unsigned c = coeffs[d](i, j);
          if (c == 0) continue;
          if (!entry.empty()) entry += " + ";
          std::string mono = d == 0 ? "" : (d == 1 ? "D" : "D^" + std::to_string(d));
          if (mono.empty()) {
            entry += std::to_string(c);
          } else {
            entry += (c == 1 ? "" : std::to_string(c) + "*") + mono;
          }
        }
        s += (j ? " ; " : "") + (entry.empty() ? std::string("0") : entry);
      }
      s += "\n";
    }
    return s;
  }
};

inline PolyGenMatrix poly_generator(const ConvSeed &seed, unsigned d_max) {
  PolyGenMatrix g;
  g.coeffs.push_back(seed.E());
  if (d_max == 0) return g;
  GfMatrix ba = seed.B();  // B A^{i-1}
  const GfMatrix a = seed.A(), c = seed.C();
  for (unsigned i = 1; i <= d_max; ++i) {
    g.coeffs.push_back(ba * c);
    ba = ba * a;
  }
  return g;
}

/// Monic minimal polynomial of a square matrix, coefficients low to high.
inline std::vector<Field::Element> minimal_polynomial(const GfMatrix &a) {
  const FieldPtr &field = a.field();
  const Field &f = *field;
  const std::size_t m = a.rows();
  std::vector<GfMatrix> powers{GfMatrix::identity(field, m)};
  while (true) {
    const std::size_t s = powers.size();
    GfMatrix krylov(field, m * m, s);
    for (std::size_t j = 0; j < s; ++j)
      for (std::size_t e = 0; e < m * m; ++e) krylov(e, j) = powers[j](e / m, e % m);
    const GfMatrix null = krylov.nullspace();
    if (null.rows() > 0) {
      auto mu = null.row(0);
      const Field::Element lead_inv = f.inv(mu.back());
      for (auto &c : mu) c = f.mul(c, lead_inv);
      return mu;
    }
    powers.push_back(powers.back() * a);
  }
}

struct OrthogonalityReport {
  bool ok = true;
  std::string diagnostic;
};

/// Checks the four block relations between a seed and its dual seed and that
/// G(D) H(D^{-1})^T vanishes. The Laurent product is made finite by multiplying
/// with the minimal polynomial mu of A': mu(D) H(D^{-1}) is a polynomial P(D), and
/// G(D) P(D)^T is compared with zero through D^{d_max}.
inline OrthogonalityReport orthogonality_check(const ConvSeed &seed, const ConvSeed &dual, unsigned d_max) {
  OrthogonalityReport rep;
  if (!seed.field()->same_as(*dual.field()) || dual.n() != seed.n() || dual.m() != seed.m() ||
      dual.k() != seed.n() - seed.k()) {
    rep.ok = false;
    rep.diagnostic = "parameter mismatch: dual must have the same n, m and dimension n-k";
    return rep;
  }
  const FieldPtr &field = seed.field();
  const std::size_t m = seed.m();
  const GfMatrix a = seed.A(), b = seed.B(), c = seed.C(), e = seed.E();
  const GfMatrix a2 = dual.A(), b2 = dual.B(), c2 = dual.C(), e2 = dual.E();
  const struct {
    const char *name;
    GfMatrix value;
  } relations[] = {
      {"I + C C'^T - A A'^T", GfMatrix::identity(field, m) + c * c2.transposed() - a * a2.transposed()},
      {"E E'^T - B B'^T", e * e2.transposed() - b * b2.transposed()},
      {"C E'^T - A B'^T", c * e2.transposed() - a * b2.transposed()},
      {"E C'^T - B A'^T", e * c2.transposed() - b * a2.transposed()},
  };
  for (const auto &r : relations)
    if (!r.value.is_zero()) {
      rep.ok = false;
      rep.diagnostic += std::string(rep.diagnostic.empty() ? "" : "; ") + r.name + " != 0";
    }
  if (!rep.ok) return rep;

  const auto mu = minimal_polynomial(a2);
  const std::size_t s = mu.size() - 1;
  // P(D) = mu(D) E' + B' sum_{k<s} D^k B_k C',  B_k = sum_{j>k} mu_j A'^{j-k-1}
  std::vector<GfMatrix> apow{GfMatrix::identity(field, m)};
  for (std::size_t j = 1; j <= s; ++j) apow.push_back(apow.back() * a2);
  std::vector<GfMatrix> p(s + 1, GfMatrix(field, dual.k(), seed.n()));
  for (std::size_t d = 0; d <= s; ++d) p[d] = e2.scaled(mu[d]);
  for (std::size_t k = 0; k < s; ++k) {
    GfMatrix bk(field, m, m);
    for (std::size_t j = k + 1; j <= s; ++j) bk = bk + apow[j - k - 1].scaled(mu[j]);
    p[k] = p[k] + b2 * bk * c2;
  }
  const PolyGenMatrix g = poly_generator(seed, d_max);
  for (unsigned d = 0; d <= d_max; ++d) {
    GfMatrix acc(field, seed.k(), dual.k());
    for (std::size_t i = 0; i <= d && i < g.coeffs.size(); ++i)
      if (d - i <= s) acc = acc + g.coeffs[i] * p[d - i].transposed();
    if (!acc.is_zero()) {
      rep.ok = false;
      rep.diagnostic = "G(D) H(D^-1)^T has a nonzero coefficient at D^" + std::to_string(d) + " after clearing mu(D)";
      return rep;
    }
  }
  return rep;
}

/// <0| (I - Lambda D)^{-1} |0> through D^{d_max}; Lambda must be free of D.
inline WeightPoly total_wgf(const PolyMatrix &l, unsigned d_max) {
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = 0; j < l.dim(); ++j)
      if (l(i, j).contains(Var::D)) throw InputError("total_wgf: matrix already depends on D");
  return series_inverse(one_minus_times_d(l), d_max)(0, 0);
}

/// <0| [I - (Lambda - |0><0|) D]^{-1} |0>
inline WeightPoly free_wgf(const PolyMatrix &l, unsigned d_max) {
  PolyMatrix n = l;
  n(0, 0) -= WeightPoly(1);
  return total_wgf(n, d_max);
}

inline std::optional<unsigned> min_degree(const WeightPoly &p, Var v, bool positive_only) {
  std::optional<unsigned> best;
  for (const auto &[e, c] : p.terms()) {
    const unsigned d = e[var_index(v)];
    if (positive_only && d == 0) continue;
    if (!best || d < *best) best = d;
  }
  return best;
}

inline PolyMatrix set_x_to_one(const PolyMatrix &l) {
  const WeightPoly one(1);
  return l.substituted({{Var::x, one}, {Var::xI, one}, {Var::xP, one}, {Var::xO, one}});
}

/// Route 1 for the dual total enumerator: WAM MacWilliams transform, then the series.
inline WeightPoly dual_total_wgf(const PolyMatrix &l, const FieldPtr &field, std::size_t n, std::size_t k, std::size_t m,
                                 unsigned d_max) {
  return total_wgf(set_x_to_one(macwilliams_wam(l, field, n, k, m)), d_max);
}

/// Route 2 (full trellis): with L' = Lambda(1+(q-1)y, 1-y),
///   [D^d] W_dual = q^{-(m+kd)} * (sum of all entries of L'^d).
/// `substituted` must already be L' (or its input-parity analogue).
inline WeightPoly dual_total_via_trellis(const PolyMatrix &substituted, unsigned q, std::size_t k, std::size_t m,
                                         unsigned d_max) {
  WeightPoly out = WeightPoly{}.truncated(d_max);
  PolyMatrix power = PolyMatrix::identity(substituted.labels());
  const WeightPoly dvar = WeightPoly::variable(Var::D);
  for (unsigned d = 0; d <= d_max; ++d) {
    if (d > 0) power = power * substituted;
    WeightPoly sum;
    for (std::size_t i = 0; i < power.dim(); ++i)
      for (std::size_t j = 0; j < power.dim(); ++j) sum += power(i, j);
    out += sum.divided_exactly(checked_pow(q, static_cast<unsigned>(m + k * d))) * dvar.pow(d);
  }
  return out;
}

inline WeightPoly dual_total_wgf_trellis(const PolyMatrix &l, const FieldPtr &field, std::size_t k, std::size_t m,
                                         unsigned d_max) {
  const unsigned q = field->q();
  const WeightPoly y = WeightPoly::variable(Var::y);
  const PolyMatrix sub = l.substituted({{Var::x, WeightPoly(1) + y.scaled(q - 1)}, {Var::y, WeightPoly(1) - y}});
  return dual_total_via_trellis(sub, q, k, m, d_max);
}

struct IpTotals {
  WeightPoly code;       // W_C(y_I, y_P, D)
  WeightPoly dual;       // W_dual(y_I, y_P, D) through the transformed IPWAM
  WeightPoly dual_trellis;  // same, through the full-trellis sum
};

inline IpTotals ip_total_wgf(const ConvSeed &seed_s, unsigned d_max, std::uint64_t budget = kDefaultBudget) {
  const PolyMatrix l = ipwam(seed_s, budget);
  const FieldPtr &field = seed_s.field();
  const unsigned q = field->q();
  IpTotals t;
  t.code = total_wgf(set_x_to_one(l), d_max);
  t.dual = total_wgf(set_x_to_one(macwilliams_ipwam(l, field, seed_s.n(), seed_s.k(), seed_s.m())), d_max);
  const WeightPoly yi = WeightPoly::variable(Var::yI), yp = WeightPoly::variable(Var::yP), one(1);
  const PolyMatrix sub = l.substituted({{Var::xI, one + yp.scaled(q - 1)},
                                        {Var::yI, one - yp},
                                        {Var::xP, one + yi.scaled(q - 1)},
                                        {Var::yP, one - yi}});
  t.dual_trellis = dual_total_via_trellis(sub, q, seed_s.k(), seed_s.m(), d_max);
  return t;
}

struct FreeDistance {
  enum class Status { determined, not_determined, no_paths };
  Status status = Status::no_paths;
  unsigned value = 0;

  std::string to_string() const {
    switch (status) {
      case Status::determined:
        return std::to_string(value);
      case Status::not_determined:
        return "not determined at this truncation";
      default:
        return "no fundamental paths";
    }
  }
};

/// Least positive y-degree in W_free. The value is certified when every walk from
/// state 0 that has not re-merged after d_max steps already carries at least that
/// weight, so longer fundamental paths cannot undercut it.
inline FreeDistance free_distance(const PolyMatrix &l, unsigned d_max) {
  const WeightPoly wf = free_wgf(l, d_max);
  const std::optional<unsigned> found = min_degree(wf, Var::y, true);
  PolyMatrix n = l;
  n(0, 0) -= WeightPoly(1);
  const std::size_t dim = n.dim();
  std::vector<WeightPoly> alive(dim);
  for (std::size_t j = 1; j < dim; ++j) alive[j] = n(0, j);
  for (unsigned step = 1; step < d_max; ++step) {
    std::vector<WeightPoly> next(dim);
    for (std::size_t i = 1; i < dim; ++i) {
      if (alive[i].is_zero()) continue;
      for (std::size_t j = 1; j < dim; ++j)
        if (!n(i, j).is_zero()) next[j] += alive[i] * n(i, j);
    }
    alive = std::move(next);
  }
  std::optional<unsigned> alive_min;
  for (const auto &p : alive) {
    auto d = min_degree(p, Var::y, false);
    if (d && (!alive_min || *d < *alive_min)) alive_min = d;
  }
  FreeDistance fd;
  if (found && (!alive_min || *alive_min >= *found)) {
    fd.status = FreeDistance::Status::determined;
    fd.value = *found;
  } else if (!found && !alive_min) {
    fd.status = FreeDistance::Status::no_paths;
  } else {
    fd.status = FreeDistance::Status::not_determined;
  }
  return fd;
}

}  // namespace convwam
