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

// Command-line front end. `run` is the whole program minus process plumbing so it
// can be driven from tests.

#include <algorithm>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "convwam/io.hpp"
#include "convwam/verify.hpp"

namespace convwam::cli {

enum class Format { text, structured, dot };

struct Options {
  unsigned d_max = 10;
  std::string collapse;
  Format format = Format::text;
  std::uint64_t budget = kDefaultBudget;
};

inline Substitution collapse_map(const std::string &mode) {
  const WeightPoly one(1), y = WeightPoly::variable(Var::y);
  if (mode.empty()) return {};
  if (mode == "y")
    return {{Var::x, one}, {Var::xI, one}, {Var::xP, one}, {Var::xO, one}, {Var::yI, y}, {Var::yP, y}, {Var::yO, y}};
  if (mode == "yIyP") return {{Var::x, one}, {Var::xI, one}, {Var::xP, one}};
  if (mode == "yIyO") return {{Var::x, one}, {Var::xI, one}, {Var::xO, one}};
  throw InputError("unknown collapse mode '" + mode + "'");
}

class Printer {
 public:
  Printer(const Options &opt, std::ostream &out) : opt_(opt), out_(out) {}

  void matrix(const PolyMatrix &m) const {
    const PolyMatrix c = opt_.collapse.empty() ? m : m.substituted(collapse_map(opt_.collapse));
    if (opt_.format == Format::structured) {
      out_ << format_matrix_structured(c);
    } else {
      no_dot();
      out_ << format_matrix_text(c);
    }
  }

  void poly(const WeightPoly &p) const {
    const WeightPoly c = opt_.collapse.empty() ? p : substitute(p, with_identity(collapse_map(opt_.collapse)));
    if (opt_.format == Format::structured) {
      out_ << format_poly_structured(c);
    } else {
      no_dot();
      out_ << c.to_string() << "\n";
    }
  }

  void plain(const std::string &s, const char *what) const {
    if (opt_.format != Format::text) throw InputError(std::string("only text output is available for ") + what);
    out_ << s;
  }

 private:
  void no_dot() const {
    if (opt_.format == Format::dot) throw InputError("dot output is only available for state diagrams");
  }

  const Options &opt_;
  std::ostream &out_;
};

inline int report(const CheckList &checks, std::ostream &out) {
  std::size_t pass = 0, fail = 0, skip = 0;
  for (const auto &r : checks.results()) {
    out << r.to_string() << "\n";
    (r.status == CheckResult::Status::pass ? pass : r.status == CheckResult::Status::fail ? fail : skip)++;
  }
  out << "summary: " << pass << " passed, " << fail << " failed, " << skip << " skipped\n";
  return fail == 0 ? 0 : 1;
}

inline int run_block(const std::string &action, const std::string &path, const Options &opt, std::ostream &out) {
  const LinearCode code = parse_block_code(read_file(path));
  const Printer pr(opt, out);
  if (action == "hwgf") {
    pr.poly(hwgf(code, opt.budget));
  } else if (action == "ipwgf") {
    pr.poly(ipwgf(code, opt.budget));
  } else {
    pr.plain(format_block_code(dual_code(code)), "block dual");
  }
  return 0;
}

inline int run_conv(const std::string &action, const std::string &path, const Options &opt, std::ostream &out) {
  const ConvSeed seed = parse_conv_seed(read_file(path));
  const Printer pr(opt, out);
  const FieldPtr &f = seed.field();
  if (action == "wam") {
    pr.matrix(wam(seed, opt.budget));
  } else if (action == "ipwam") {
    pr.matrix(ipwam(seed, opt.budget));
  } else if (action == "iowam") {
    pr.matrix(iowam(seed, opt.budget));
  } else if (action == "dual-wam") {
    pr.matrix(macwilliams_wam(wam(seed, opt.budget), f, seed.n(), seed.k(), seed.m()));
  } else if (action == "dual-ipwam") {
    pr.matrix(macwilliams_ipwam(ipwam(seed, opt.budget), f, seed.n(), seed.k(), seed.m()));
  } else if (action == "total") {
    pr.poly(total_wgf(set_x_to_one(wam(seed, opt.budget)), opt.d_max));
  } else if (action == "dual-total") {
    pr.poly(dual_total_wgf(wam(seed, opt.budget), f, seed.n(), seed.k(), seed.m(), opt.d_max));
  } else if (action == "free") {
    pr.poly(free_wgf(set_x_to_one(wam(seed, opt.budget)), opt.d_max));
  } else if (action == "dfree") {
    pr.plain("d_free: " + free_distance(set_x_to_one(wam(seed, opt.budget)), opt.d_max).to_string() + "\n", "dfree");
  } else if (action == "gd") {
    pr.plain(poly_generator(seed, opt.d_max).to_string(), "gd");
  } else {
    const ConvSeed dual = dual_seed(seed);
    const OrthogonalityReport rep = orthogonality_check(seed, dual, opt.d_max);
    pr.plain(format_conv_seed(dual), "check-dual");
    out << (rep.ok ? "PASS orthogonality" : "FAIL orthogonality: " + rep.diagnostic) << "\n";
    return rep.ok ? 0 : 1;
  }
  return 0;
}

inline int run_quantum(const std::string &action, const std::string &path, const Options &opt, std::ostream &out) {
  const std::string src = read_file(path);
  const Printer pr(opt, out);
  if (action == "check-seed") {
    // parse without the Clifford check so the diagnostic can be reported here
    EaqccSpec spec;
    try {
      spec = parse_eaqcc(src);
    } catch (const InputError &e) {
      const std::string what = e.what();
      if (what.find("not a Clifford") == std::string::npos) throw;
      pr.plain("invalid: " + what + "\n", "check-seed");
      return 1;
    }
    pr.plain("valid\n", "check-seed");
    return 0;
  }
  const EaqccSpec spec = parse_eaqcc(src);
  if (action == "wam") {
    pr.matrix(quantum_wam(spec, opt.budget));
  } else if (action == "dual-wam") {
    pr.matrix(quantum_macwilliams(quantum_wam(spec, opt.budget), spec.n, spec.k, spec.c, spec.m));
  } else if (action == "dual-spec") {
    pr.plain(format_eaqcc(dual_spec(spec)), "dual-spec");
  } else if (action == "pcm") {
    pr.plain(poly_check_matrix(spec, opt.d_max).to_string(), "pcm");
  } else {
    const StateDiagram sd = state_diagram(spec, opt.budget);
    if (opt.format == Format::dot) {
      out << sd.to_dot();
    } else {
      pr.plain(sd.to_text(), "state-diagram");
    }
  }
  return 0;
}

inline int run_verify(const std::string &path, const Options &opt, std::ostream &out) {
  const std::string src = read_file(path);
  switch (detect_kind(src)) {
    case FileKind::block:
      return report(verify_block(parse_block_code(src)), out);
    case FileKind::conv:
      return report(verify_conv(parse_conv_seed(src), opt.d_max, opt.budget), out);
    default:
      return report(verify_quantum(parse_eaqcc(src), opt.d_max, opt.budget), out);
  }
}

/// args excludes the program name. Exit codes: 0 success, 1 failed check, 2 bad input.
inline int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Weight enumerators and MacWilliams identities for block, convolutional and quantum convolutional codes",
               "convwam"};
  app.require_subcommand(1);
  Options opt;
  std::string format = "text";
  app.add_option("--dmax", opt.d_max, "truncation degree in D")->capture_default_str();
  app.add_option("--collapse", opt.collapse, "merge variables: y, yIyP or yIyO")
      ->check(CLI::IsMember({"y", "yIyP", "yIyO"}));
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "structured", "dot"}));
  app.add_option("--budget", opt.budget, "enumeration budget (number of group elements or messages)");

  struct Sub {
    CLI::App *app;
    std::string action, file;
  };
  auto make = [&](const char *name, const char *help, std::vector<std::string> actions) {
    auto *s = app.add_subcommand(name, help);
    s->fallthrough();
    auto sub = std::make_shared<Sub>(Sub{s, {}, {}});
    s->add_option("action", sub->action, "what to compute")->required()->check(CLI::IsMember(actions));
    s->add_option("file", sub->file, "code description file")->required();
    return sub;
  };
  auto block = make("block", "linear block codes", {"hwgf", "ipwgf", "dual"});
  auto conv = make("conv", "convolutional codes",
                   {"wam", "ipwam", "iowam", "dual-wam", "dual-ipwam", "total", "dual-total", "free", "dfree", "gd",
                    "check-dual"});
  auto quantum = make("quantum", "entanglement-assisted quantum convolutional codes",
                      {"wam", "dual-wam", "dual-spec", "check-seed", "sd", "state-diagram", "pcm"});
  auto verify = make("verify", "check every applicable identity against brute force", {"all"});

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  opt.format = format == "structured" ? Format::structured : format == "dot" ? Format::dot : Format::text;

  try {
    if (*block->app) return run_block(block->action, block->file, opt, out);
    if (*conv->app) return run_conv(conv->action, conv->file, opt, out);
    if (*quantum->app) return run_quantum(quantum->action, quantum->file, opt, out);
    return run_verify(verify->file, opt, out);
  } catch (const BudgetExceeded &e) {
    err << "error: budget exceeded: " << e.what() << "\n";
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
  }
  return 2;
}

}  // namespace convwam::cli
