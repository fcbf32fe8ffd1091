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

// Identity checks against brute-force references, shared by the CLI `verify`
// command and the acceptance driver.

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "convwam/block.hpp"
#include "convwam/conv.hpp"
#include "convwam/io.hpp"
#include "convwam/oracles.hpp"
#include "convwam/quantum.hpp"

namespace convwam {

struct CheckResult {
  enum class Status { pass, fail, skip };
  std::string name;
  Status status = Status::pass;
  std::string detail;

  std::string to_string() const {
    const char *tag = status == Status::pass ? "PASS" : status == Status::fail ? "FAIL" : "SKIP";
    return std::string(tag) + " " + name + (detail.empty() ? "" : ": " + detail);
  }
};

class CheckList {
 public:
  /// Runs `fn`; a false result or an exception is a failure.
  void run(const std::string &name, const std::function<bool(std::string &)> &fn) {
    CheckResult r{name, CheckResult::Status::pass, {}};
    try {
      if (!fn(r.detail)) r.status = CheckResult::Status::fail;
    } catch (const std::exception &e) {
      r.status = CheckResult::Status::fail;
      r.detail = e.what();
    }
    results_.push_back(std::move(r));
  }
  void skip(const std::string &name, const std::string &why) {
    results_.push_back({name, CheckResult::Status::skip, why});
  }
  const std::vector<CheckResult> &results() const { return results_; }
  bool all_passed() const {
    for (const auto &r : results_)
      if (r.status == CheckResult::Status::fail) return false;
    return true;
  }

 private:
  std::vector<CheckResult> results_;
};

inline bool equal_or_explain(const PolyMatrix &got, const PolyMatrix &want, std::string &detail) {
  if (got == want) return true;
  detail = "matrices differ\n" + format_matrix_text(got) + "vs\n" + format_matrix_text(want);
  return false;
}

inline bool equal_or_explain(const WeightPoly &got, const WeightPoly &want, std::string &detail) {
  if (got == want) return true;
  detail = got.to_string() + " != " + want.to_string();
  return false;
}

inline CheckList verify_block(const LinearCode &code) {
  CheckList checks;
  const unsigned q = code.field()->q();
  const auto k = static_cast<unsigned>(code.k()), n = static_cast<unsigned>(code.n());
  const LinearCode dual = dual_code(code);
  checks.run("dual generator is orthogonal (G H^T = 0)", [&](std::string &) {
    return (code.generator() * dual.generator().transposed()).is_zero() && dual.k() == n - k;
  });
  checks.run("HWGF coefficient sum equals q^k",
             [&](std::string &) { return hwgf(code).coefficient_sum() == checked_pow(q, k); });
  checks.run("MacWilliams HWGF transform equals HWGF of the dual code", [&](std::string &d) {
    return equal_or_explain(macwilliams_hwgf(hwgf(code), k, q), hwgf(dual), d);
  });
  checks.run("HWGF transform applied twice returns the original", [&](std::string &d) {
    const WeightPoly g = hwgf(code);
    return equal_or_explain(macwilliams_hwgf(macwilliams_hwgf(g, k, q), n - k, q), g, d);
  });
  if (code.is_systematic()) {
    checks.run("MacWilliams IPWGF transform equals IPWGF of the dual code", [&](std::string &d) {
      return equal_or_explain(macwilliams_ipwgf(ipwgf(code), k, n, q), input_parity_wgf(dual, n - k, true), d);
    });
    checks.run("IPWGF collapses to HWGF",
               [&](std::string &d) { return equal_or_explain(collapse_input_parity(ipwgf(code)), hwgf(code), d); });
  } else {
    checks.skip("MacWilliams IPWGF transform equals IPWGF of the dual code", "generator is not systematic");
  }
  checks.run("structured output round trip", [&](std::string &d) {
    const WeightPoly g = hwgf(code);
    return equal_or_explain(parse_poly_structured(format_poly_structured(g)), g, d);
  });
  return checks;
}

/// Impulse responses of the state equations, one input symbol at a time.
inline PolyGenMatrix impulse_response(const ConvSeed &seed, unsigned d_max) {
  const Field &f = *seed.field();
  const std::size_t m = seed.m(), n = seed.n(), k = seed.k();
  const GfMatrix a = seed.A(), b = seed.B(), c = seed.C(), e = seed.E();
  PolyGenMatrix g;
  g.coeffs.assign(d_max + 1, GfMatrix(seed.field(), k, n));
  for (std::size_t i = 0; i < k; ++i) {
    Word w(m, 0);
    for (unsigned t = 0; t <= d_max; ++t) {
      Word p(n, 0), w2(m, 0);
      for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t j = 0; j < n; ++j) p[j] = f.add(p[j], f.mul(w[r], c(r, j)));
        for (std::size_t j = 0; j < m; ++j) w2[j] = f.add(w2[j], f.mul(w[r], a(r, j)));
      }
      if (t == 0) {
        for (std::size_t j = 0; j < n; ++j) p[j] = f.add(p[j], e(i, j));
        for (std::size_t j = 0; j < m; ++j) w2[j] = f.add(w2[j], b(i, j));
      }
      for (std::size_t j = 0; j < n; ++j) g.coeffs[t](i, j) = p[j];
      w = w2;
    }
  }
  return g;
}

/// Random generator of the same row space, [[I_m, F], [0, L]] * G with L invertible.
template <class Rng>
ConvSeed random_equivalent_encoder(const ConvSeed &seed, Rng &rng) {
  const FieldPtr &f = seed.field();
  const std::size_t m = seed.m(), k = seed.k();
  std::uniform_int_distribution<unsigned> el(0, f->q() - 1);
  GfMatrix l(f, k, k);
  do {
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) l(i, j) = static_cast<Field::Element>(el(rng));
  } while (l.rank() != k);
  GfMatrix left = GfMatrix::identity(f, m + k);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < k; ++j) left(i, m + j) = static_cast<Field::Element>(el(rng));
  left.set_block(m, m, l);
  return ConvSeed::from_constraint_generator(f, seed.n(), m, left * seed.constraint_generator());
}

inline CheckList verify_conv(const ConvSeed &seed, unsigned d_max, std::uint64_t budget = kDefaultBudget) {
  CheckList checks;
  const FieldPtr &field = seed.field();
  const unsigned q = field->q();
  const std::size_t n = seed.n(), k = seed.k(), m = seed.m();
  const unsigned oracle_depth = std::min(d_max, 8u);
  const PolyMatrix lam = wam(seed, budget);
  const PolyMatrix lam_y = set_x_to_one(lam);

  checks.run("WAM entry sum equals q^(m+k)",
             [&](std::string &) { return lam.entry_sum() == checked_pow(q, static_cast<unsigned>(m + k)); });
  checks.run("G(D) matches the impulse response of the state equations", [&](std::string &) {
    return poly_generator(seed, d_max).coeffs == impulse_response(seed, d_max).coeffs;
  });
  checks.run("MacWilliams WAM transform equals WAM of the dual constraint code", [&](std::string &d) {
    const PolyMatrix oracle = transition_wam(dual_constraint_rowspace(seed), m, n, {{Var::x, Var::y}},
                                             std::vector<std::size_t>(n, 0), std::nullopt, budget);
    return equal_or_explain(macwilliams_wam(lam, field, n, k, m), oracle, d);
  });
  checks.run("dual WAM entry sum equals q^(m+n-k)", [&](std::string &) {
    return macwilliams_wam(lam, field, n, k, m).entry_sum() == checked_pow(q, static_cast<unsigned>(m + n - k));
  });
  if (seed.is_systematic()) {
    checks.run("MacWilliams IPWAM transform equals IPWAM of the dual constraint code", [&](std::string &d) {
      const PolyMatrix oracle = transition_wam(dual_constraint_rowspace(seed), m, n, input_parity_vars(),
                                               input_parity_classes(n, n - k, true), std::nullopt, budget);
      return equal_or_explain(macwilliams_ipwam(ipwam(seed, budget), field, n, k, m), oracle, d);
    });
    checks.run("IPWAM collapses to WAM", [&](std::string &d) {
      const WeightPoly x = WeightPoly::variable(Var::x), y = WeightPoly::variable(Var::y);
      return equal_or_explain(
          ipwam(seed, budget).substituted({{Var::xI, x}, {Var::xP, x}, {Var::yI, y}, {Var::yP, y}}), lam, d);
    });
    checks.run("input-parity dual totals agree along both routes", [&](std::string &d) {
      const IpTotals t = ip_total_wgf(seed, d_max, budget);
      return equal_or_explain(t.dual, t.dual_trellis, d);
    });
  } else {
    checks.skip("MacWilliams IPWAM transform equals IPWAM of the dual constraint code", "seed is not systematic");
  }
  checks.run("IOWAM with x_I = y_I = 1 equals WAM", [&](std::string &d) {
    const WeightPoly one(1), x = WeightPoly::variable(Var::x), y = WeightPoly::variable(Var::y);
    return equal_or_explain(iowam(seed, budget).substituted({{Var::xI, one}, {Var::yI, one}, {Var::xO, x}, {Var::yO, y}}),
                            lam, d);
  });
  checks.run("dual seed satisfies the orthogonality relations and G(D) H(1/D)^T = 0", [&](std::string &d) {
    const OrthogonalityReport rep = orthogonality_check(seed, dual_seed(seed), d_max);
    d = rep.diagnostic;
    return rep.ok;
  });
  checks.run("WAM is invariant under a change of encoder", [&](std::string &d) {
    std::mt19937_64 rng(0x5eed);
    for (int trial = 0; trial < 3; ++trial)
      if (!equal_or_explain(wam(random_equivalent_encoder(seed, rng), budget), lam, d)) return false;
    return true;
  });
  const WeightPoly wc = total_wgf(lam_y, d_max), wfree = free_wgf(lam_y, d_max);
  const WeightPoly dvar = WeightPoly::variable(Var::D);
  checks.run("W_free (1 + W_C D) = W_C", [&](std::string &d) {
    return equal_or_explain((wfree * (WeightPoly(1) + wc * dvar)).truncated(d_max), wc, d);
  });
  checks.run("W_C (1 - W_free D) = W_free", [&](std::string &d) {
    return equal_or_explain((wc * (WeightPoly(1) - wfree * dvar)).truncated(d_max), wfree, d);
  });
  checks.run("total WGF matches explicit trellis paths through D^" + std::to_string(oracle_depth), [&](std::string &d) {
    return equal_or_explain(wc.truncated(oracle_depth), oracle::trellis_total(seed, oracle_depth, budget), d);
  });
  checks.run("free WGF matches explicit walks through D^" + std::to_string(oracle_depth), [&](std::string &d) {
    return equal_or_explain(wfree.truncated(oracle_depth), oracle::free_walks(seed, oracle_depth, budget), d);
  });
  checks.run("dual total WGF agrees along both routes", [&](std::string &d) {
    return equal_or_explain(dual_total_wgf(lam, field, n, k, m, d_max), dual_total_wgf_trellis(lam, field, k, m, d_max), d);
  });
  checks.run("free distance matches fundamental-path search to depth " + std::to_string(oracle_depth),
             [&](std::string &d) {
               const FreeDistance fd = free_distance(lam_y, oracle_depth);
               const auto search = oracle::min_fundamental_weight(seed, oracle_depth, budget);
               d = "d_free " + fd.to_string() + ", search " + (search ? std::to_string(*search) : "none");
               if (fd.status == FreeDistance::Status::determined) return search && *search == fd.value;
               return true;
             });
  checks.run("structured output round trip", [&](std::string &d) {
    return equal_or_explain(parse_matrix_structured(format_matrix_structured(lam)), lam, d);
  });
  return checks;
}

inline CheckList verify_quantum(const EaqccSpec &spec, unsigned d_max, std::uint64_t budget = kDefaultBudget) {
  CheckList checks;
  const std::size_t n = spec.n, k = spec.k, c = spec.c, m = spec.m, a = spec.a();
  checks.run("seed satisfies the symplectic relations", [&](std::string &d) {
    d = spec.seed.validate();
    return d.empty();
  });
  const PolyMatrix lam = quantum_wam(spec, budget);
  const EaqccSpec dual = dual_spec(spec);
  checks.run("WAM entry sum equals 4^m 4^k 2^a", [&](std::string &) {
    return lam.entry_sum() == checked_mul(checked_pow(4, static_cast<unsigned>(m + k)), checked_pow(2, static_cast<unsigned>(a)));
  });
  checks.run("quantum MacWilliams transform equals WAM of the dual code", [&](std::string &d) {
    return equal_or_explain(quantum_macwilliams(lam, n, k, c, m), quantum_wam(dual, budget), d);
  });
  checks.run("stabilizer-group WAM equals WAM of the dual code", [&](std::string &d) {
    return equal_or_explain(stabilizer_wam(spec, budget), quantum_wam(dual, budget), d);
  });
  checks.run("transform applied twice with k and c exchanged returns the original", [&](std::string &d) {
    return equal_or_explain(quantum_macwilliams(quantum_macwilliams(lam, n, k, c, m), n, c, k, m), lam, d);
  });
  checks.run("dual of the dual spec is the original", [&](std::string &) {
    const EaqccSpec back = dual_spec(dual);
    return back.k == k && back.c == c && back.in_logical == spec.in_logical && back.in_ebit == spec.in_ebit;
  });
  checks.run("constraint stabilizers commute except symplectic ebit pairs", [&](std::string &d) {
    const auto gens = constraint_stabilizers(spec);
    const std::size_t ebit_begin = 2 * m, ebit_end = 2 * m + 2 * c;
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = i + 1; j < gens.size(); ++j) {
        const bool partners = i >= ebit_begin && j < ebit_end && i % 2 == 0 && j == i + 1;
        if (symplectic_product(gens[i], gens[j]) != (partners ? 1u : 0u)) {
          d = "generators " + std::to_string(i + 1) + " and " + std::to_string(j + 1);
          return false;
        }
      }
    return gens.size() == 2 * m + 2 * c + a;
  });
  if (m <= 3) {
    checks.run("state diagram edges reproduce the WAM", [&](std::string &d) {
      const StateDiagram sd = state_diagram(spec, budget);
      PolyMatrix from_edges(sd.nodes);
      for (const auto &e : sd.edges) {
        const auto w = static_cast<unsigned>(PauliWord::parse(e.physical).weight());
        from_edges(e.from, e.to) += WeightPoly::variable(Var::x, static_cast<unsigned>(n - w)) * WeightPoly::variable(Var::y, w);
      }
      return equal_or_explain(from_edges, lam, d);
    });
  }
  const PolyCheckMatrix pcm = poly_check_matrix(spec, d_max);
  if (pcm.terminates) {
    checks.run("polynomial check matrix rows are orthogonal at every shift", [&](std::string &d) {
      d = check_matrix_orthogonality(pcm);
      return d.empty();
    });
  } else {
    checks.skip("polynomial check matrix rows are orthogonal at every shift",
                "impulse responses do not settle within D^" + std::to_string(d_max));
  }
  checks.run("structured output round trip", [&](std::string &d) {
    return equal_or_explain(parse_matrix_structured(format_matrix_structured(lam)), lam, d);
  });
  return checks;
}

}  // namespace convwam
