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


// Acceptance run: one PASS/FAIL line per criterion. All comparisons are exact
// equalities; each criterion also has a wall-clock limit in seconds.

#include <chrono>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "convwam/cli.hpp"
#include "support.hpp"

using namespace convwam;
using namespace convwam::testsupport;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string &what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

PolyMatrix matrix_of(const std::vector<std::string> &labels, const std::vector<std::vector<const char *>> &rows) {
  PolyMatrix m(labels);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = WeightPoly::parse(rows[i][j]);
  return m;
}

const std::vector<std::string> kBits = {"00", "10", "01", "11"};
const std::vector<std::string> kPauli = {"I", "X", "Y", "Z"};

PolyMatrix x_to_one(const PolyMatrix &l) { return set_x_to_one(l); }

FieldPtr field_for(unsigned q) { return q == 4 ? Field::make(2, 2) : Field::make(q, 1); }

Outcome example_matrices() {
  Outcome o;
  const ConvSeed s = load_conv("example1.cc"), g = load_conv("example1-nonsys.cc");
  const PolyMatrix ip = ipwam(s), io = iowam(g);
  o.require(x_to_one(ip) == matrix_of(kBits, {{"1", "y_I*y_P", "0", "0"},
                                              {"0", "0", "y_P", "y_I"},
                                              {"y_I*y_P", "1", "0", "0"},
                                              {"0", "0", "y_I", "y_P"}}),
            "input-parity matrix differs");
  o.require(x_to_one(io) == matrix_of(kBits, {{"1", "y_I*y_O^2", "0", "0"},
                                              {"0", "0", "y_O", "y_I*y_O"},
                                              {"y_O^2", "y_I", "0", "0"},
                                              {"0", "0", "y_O", "y_I*y_O"}}),
            "input-output matrix differs");
  const PolyMatrix inv = matrix_of(kBits, {{"1", "y^2", "0", "0"}, {"0", "0", "y", "y"}, {"y^2", "1", "0", "0"}, {"0", "0", "y", "y"}});
  const WeightPoly one(1), y = WeightPoly::variable(Var::y);
  o.require(x_to_one(ip).substituted({{Var::yI, y}, {Var::yP, y}}) == inv, "input-parity matrix does not collapse");
  o.require(io.substituted({{Var::xI, one}, {Var::yI, one}, {Var::xO, one}, {Var::yO, y}}) == inv,
            "input-output matrix does not collapse");
  return o;
}

Outcome example_dual() {
  Outcome o;
  const ConvSeed s = load_conv("example1.cc");
  const PolyMatrix d = macwilliams_ipwam(ipwam(s), s.field(), s.n(), s.k(), s.m());
  o.require(x_to_one(d) == matrix_of(kBits, {{"1", "0", "y_I*y_P", "0"},
                                             {"y_I*y_P", "0", "1", "0"},
                                             {"0", "y_P", "0", "y_I"},
                                             {"0", "y_I", "0", "y_P"}}),
            "dual input-parity matrix differs");
  return o;
}

Outcome quantum_seed_one() {
  Outcome o;
  const EaqccSpec u1 = load_spec("u1.qcc");
  const PolyMatrix l = quantum_wam(u1);
  o.require(x_to_one(l) == matrix_of(kPauli, {{"1", "y^2", "y", "y"},
                                              {"y^2", "y^2", "y^2", "y^2"},
                                              {"y^2", "y", "y", "y^2"},
                                              {"y^2", "y", "y^2", "y"}}),
            "WAM differs");
  const PolyMatrix t = quantum_macwilliams(l, u1.n, u1.k, u1.c, u1.m);
  o.require(t == l.transposed(), "transform is not the transpose");
  o.require(t == quantum_wam(dual_spec(u1)), "transform differs from the dual enumeration");
  return o;
}

Outcome quantum_seed_two() {
  Outcome o;
  const EaqccSpec u2 = load_spec("u2-ea.qcc");
  const PolyMatrix l = quantum_wam(u2);
  o.require(x_to_one(l) == matrix_of(kPauli, {{"1 + y^2", "0", "0", "y + y^2"},
                                              {"0", "1 + y^2", "y + y^2", "0"},
                                              {"0", "y + y^2", "1 + y^2", "0"},
                                              {"y + y^2", "0", "0", "1 + y^2"}}),
            "WAM differs");
  o.require(x_to_one(quantum_macwilliams(l, u2.n, u2.k, u2.c, u2.m)) ==
                matrix_of(kPauli, {{"1 + y + 2*y^2", "0", "0", "0"},
                                   {"0", "y + 3*y^2", "0", "0"},
                                   {"0", "0", "y + 3*y^2", "0"},
                                   {"0", "0", "0", "1 + y + 2*y^2"}}),
            "dual WAM differs");
  return o;
}

Outcome quantum_from_dual() {
  Outcome o;
  const EaqccSpec qcc = load_spec("u2-qcc.qcc");
  // zero-logical edges of the state diagram
  const StateDiagram sd = state_diagram(qcc);
  PolyMatrix restricted(sd.nodes);
  for (const auto &e : sd.edges) {
    if (e.logical.find_first_not_of('I') != std::string::npos) continue;
    const unsigned w = PauliWord::parse(e.physical).weight();
    restricted(e.from, e.to) += xy(static_cast<unsigned>(qcc.n), w);
  }
  o.require(x_to_one(restricted) ==
                matrix_of(kPauli, {{"1", "0", "0", "y"}, {"0", "y^2", "y^2", "0"}, {"0", "y^2", "y^2", "0"}, {"y", "0", "0", "y^2"}}),
            "restricted diagram differs");
  const EaqccSpec dual = dual_spec(qcc);
  o.require(restricted == quantum_wam(dual), "restricted diagram differs from the dual enumeration");
  const PolyMatrix back = quantum_macwilliams(restricted, dual.n, dual.k, dual.c, dual.m);
  o.require(x_to_one(back) == matrix_of(kPauli, {{"1 + y^2", "y + y^2", "y + y^2", "2*y"},
                                                 {"y + y^2", "2*y^2", "2*y^2", "y + y^2"},
                                                 {"y + y^2", "2*y^2", "2*y^2", "y + y^2"},
                                                 {"2*y", "y + y^2", "y + y^2", "1 + y^2"}}),
            "recovered WAM differs");
  return o;
}

Outcome block_properties() {
  Outcome o;
  std::mt19937_64 rng(20261018);
  const unsigned qs[] = {2, 3, 4, 5};
  for (int t = 0; t < 200 && o.ok; ++t) {
    const unsigned q = qs[t % 4];
    const FieldPtr f = field_for(q);
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 12)(rng);
    // keep both the code and its dual small enough to enumerate
    std::size_t lo = 1, hi = n - 1;
    auto size_ok = [&](std::size_t k) { return checked_pow(q, static_cast<unsigned>(std::max(k, n - k))) <= 300000; };
    while (lo < hi && !size_ok(lo)) ++lo;
    while (hi > lo && !size_ok(hi)) --hi;
    if (!size_ok(lo)) continue;
    const std::size_t k = std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
    const bool sys = t % 8 < 6;
    const LinearCode c = random_block_code(f, n, k, sys, rng);
    const LinearCode d = dual_code(c);
    const auto ku = static_cast<unsigned>(k), nu = static_cast<unsigned>(n);
    const std::string tag = " (q=" + std::to_string(q) + ", n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")";
    o.require((c.generator() * d.generator().transposed()).is_zero(), "dual generator not orthogonal" + tag);
    o.require(macwilliams_hwgf(hwgf(c), ku, q) == hwgf(d), "HWGF transform mismatch" + tag);
    if (sys) o.require(macwilliams_ipwgf(ipwgf(c), ku, nu, q) == input_parity_wgf(d, n - k, true), "IPWGF transform mismatch" + tag);
    if (checked_pow(q, nu) <= 50000) o.require(hwgf(d) == brute_dual_hwgf(c), "dual code differs from full scan" + tag);
  }
  return o;
}

Outcome conv_properties() {
  Outcome o;
  std::mt19937_64 rng(777);
  int done = 0, retried = 0;
  while (done < 100 && o.ok) {
    const unsigned q = done % 2 ? 3 : 2;
    const FieldPtr f = field_for(q);
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 4)(rng);
    const std::size_t k = std::uniform_int_distribution<std::size_t>(1, n - 1)(rng);
    const std::size_t m = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    if (checked_pow(q, static_cast<unsigned>(2 * m + n)) > 100000) continue;
    const ConvSeed s = random_conv_seed(f, n, k, m, done % 3 == 0, rng);
    std::optional<ConvSeed> dual;
    try {
      dual = dual_seed(s);
    } catch (const InputError &) {
      ++retried;
      continue;
    }
    const std::string tag = " (seed " + std::to_string(done) + ")";
    const PolyMatrix l = wam(s);
    o.require(macwilliams_wam(l, f, n, k, m) == brute_dual_wam(s), "transform differs from brute-force dual" + tag);
    const OrthogonalityReport rep = orthogonality_check(s, *dual, 8);
    o.require(rep.ok, "orthogonality: " + rep.diagnostic + tag);
    GfMatrix left = GfMatrix::identity(f, m + k), lower;
    do {
      lower = random_matrix(f, k, k, rng);
    } while (lower.rank() != k);
    left.set_block(m, m, lower);
    left.set_block(0, m, random_matrix(f, m, k, rng));
    const ConvSeed other = ConvSeed::from_constraint_generator(f, n, m, left * s.constraint_generator());
    o.require(wam(other) == l, "WAM changed under row operations" + tag);
    ++done;
  }
  if (o.ok) o.detail = std::to_string(done) + " seeds, " + std::to_string(retried) + " redrawn for the dual shape";
  return o;
}

const char *const kConvFixtures[] = {"example1.cc", "example1-nonsys.cc", "gf3-rate12.cc"};

Outcome series_properties() {
  Outcome o;
  const WeightPoly dv = WeightPoly::variable(Var::D), one(1);
  for (const char *name : kConvFixtures) {
    const ConvSeed s = load_conv(name);
    const PolyMatrix l = wam(s), ly = x_to_one(l);
    const unsigned d = 10;
    const WeightPoly wc = total_wgf(ly, d), wf = free_wgf(ly, d);
    const std::string tag = std::string(" (") + name + ")";
    o.require((wf * (one + wc * dv)).truncated(d) == wc, "W_free (1 + W_C D) != W_C" + tag);
    o.require((wc * (one - wf * dv)).truncated(d) == wf, "W_C (1 - W_free D) != W_free" + tag);
    o.require(wc.truncated(8) == oracle::trellis_total(s, 8), "total differs from trellis paths" + tag);
    o.require(dual_total_wgf(l, s.field(), s.n(), s.k(), s.m(), d) == dual_total_wgf_trellis(l, s.field(), s.k(), s.m(), d),
              "dual total routes disagree" + tag);
  }
  return o;
}

Outcome free_distance_example() {
  Outcome o;
  const ConvSeed s = load_conv("example1.cc");
  const auto search = oracle::min_fundamental_weight(s, 8);
  o.require(search.has_value(), "no fundamental path found");
  const FreeDistance fd = free_distance(x_to_one(wam(s)), 10);
  o.require(fd.status == FreeDistance::Status::determined, "free distance not determined");
  o.require(!search || fd.value == *search, "free distance " + fd.to_string() + " differs from search");
  if (o.ok) o.detail = "d_free = " + std::to_string(fd.value);
  return o;
}

Outcome quantum_properties() {
  Outcome o;
  std::mt19937_64 rng(4242);
  std::vector<std::pair<std::size_t, std::size_t>> sizes;  // (n, m)
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t m = 0; n + m <= 4; ++m) sizes.emplace_back(n, m);
  int splits = 0;
  for (int t = 0; t < 50 && o.ok; ++t) {
    const auto [n, m] = sizes[static_cast<std::size_t>(t) % sizes.size()];
    const CliffordSeed seed = CliffordSeed::random(n + m, rng, static_cast<unsigned>(4 * (n + m)));
    for (std::size_t k = 0; k <= n; ++k)
      for (std::size_t c = 0; k + c <= n; ++c) {
        const EaqccSpec s = random_roles(seed, n, k, c, m, rng);
        const std::string tag = " (seed " + std::to_string(t) + ", n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                                ", c=" + std::to_string(c) + ", m=" + std::to_string(m) + ")";
        ++splits;
        try {
          const PolyMatrix l = quantum_wam(s);
          const PolyMatrix d = quantum_macwilliams(l, n, k, c, m);
          o.require(d == quantum_wam(dual_spec(s)), "transform differs from the dual enumeration" + tag);
          o.require(quantum_macwilliams(d, n, c, k, m) == l, "double transform is not the identity" + tag);
        } catch (const ArithmeticError &e) {
          o.require(false, std::string("integrality: ") + e.what() + tag);
        }
      }
  }
  if (o.ok) o.detail = std::to_string(splits) + " (seed, split) pairs";
  return o;
}

Outcome fixtures_verify() {
  Outcome o;
  std::vector<std::string> files;
  for (const auto &e : std::filesystem::directory_iterator(CONVWAM_FIXTURES)) files.push_back(e.path().string());
  std::sort(files.begin(), files.end());
  for (const auto &path : files) {
    std::ostringstream out, err;
    const int code = cli::run({"verify", "all", path}, out, err);
    o.require(code == 0, "verify all failed on " + path + "\n" + out.str() + err.str());
  }
  std::ostringstream wam_out, poly_out, err;
  cli::run({"--format", "structured", "conv", "wam", fixture("gf3-rate12.cc")}, wam_out, err);
  o.require(parse_matrix_structured(wam_out.str()) == wam(load_conv("gf3-rate12.cc")), "matrix round trip");
  cli::run({"--format", "structured", "--dmax", "6", "conv", "dual-total", fixture("example1.cc")}, poly_out, err);
  const ConvSeed s = load_conv("example1.cc");
  o.require(parse_poly_structured(poly_out.str()) == dual_total_wgf(wam(s), s.field(), s.n(), s.k(), s.m(), 6),
            "polynomial round trip");
  if (o.ok) o.detail = std::to_string(files.size()) + " fixtures";
  return o;
}

struct Criterion {
  int id;
  const char *name;
  double limit_seconds;
  Outcome (*fn)();
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "example input-parity and input-output matrices", 1.0, example_matrices},
      {2, "example dual input-parity matrix", 10.0, example_dual},
      {3, "quantum seed U1 matrix, transpose and dual", 1.0, quantum_seed_one},
      {4, "quantum seed U2 entanglement-assisted matrices", 10.0, quantum_seed_two},
      {5, "quantum code recovered from its dual", 10.0, quantum_from_dual},
      {6, "block MacWilliams property suite (200 codes)", 60.0, block_properties},
      {7, "convolutional MacWilliams property suite (100 seeds)", 120.0, conv_properties},
      {8, "series identities on every convolutional fixture", 60.0, series_properties},
      {9, "free distance against fundamental-path search", 10.0, free_distance_example},
      {10, "quantum MacWilliams property suite (50 seeds)", 120.0, quantum_properties},
      {11, "verify all on every fixture and structured round trip", 120.0, fixtures_verify},
  };
  int failed = 0;
  for (const auto &c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.fn();
    } catch (const std::exception &e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && secs > c.limit_seconds) {
      o.ok = false;
      o.detail = "over the time limit";
    }
    failed += !o.ok;
    std::cout << (o.ok ? "PASS " : "FAIL ") << c.id << " " << c.name << " [" << std::fixed << std::setprecision(3) << secs
              << " s, limit " << std::setprecision(0) << c.limit_seconds << " s]" << (o.detail.empty() ? "" : ": " + o.detail)
              << "\n";
  }
  return failed == 0 ? 0 : 1;
}
