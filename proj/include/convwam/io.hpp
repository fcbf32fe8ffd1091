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

// Code file parsers and the text / structured (JSON) output formats.

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "convwam/block.hpp"
#include "convwam/conv.hpp"
#include "convwam/quantum.hpp"

namespace convwam {

namespace io_detail {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;  // 1-based
  std::vector<Token> tokens;
};

/// Splits on whitespace; '#' starts a comment. Blank lines are dropped.
inline std::vector<Line> tokenize(const std::string &src) {
  std::vector<Line> lines;
  std::istringstream in(src);
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      const std::size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      if (i > start) line.tokens.push_back({raw.substr(start, i - start), start + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

[[noreturn]] inline void fail(const Line &l, const Token &t, const std::string &why) {
  throw InputError("line " + std::to_string(l.number) + ", column " + std::to_string(t.column) + ": " + why);
}
[[noreturn]] inline void fail(const Line &l, const std::string &why) {
  throw InputError("line " + std::to_string(l.number) + ", column 1: " + why);
}

inline unsigned to_uint(const Line &l, const Token &t) {
  if (t.text.empty() || t.text.size() > 9) fail(l, t, "expected a non-negative integer, got '" + t.text + "'");
  for (char ch : t.text)
    if (!std::isdigit(static_cast<unsigned char>(ch))) fail(l, t, "expected a non-negative integer, got '" + t.text + "'");
  return static_cast<unsigned>(std::stoul(t.text));
}

class Cursor {
 public:
  explicit Cursor(std::vector<Line> lines) : lines_(std::move(lines)) {}

  bool done() const { return pos_ >= lines_.size(); }
  const Line &peek() const { return lines_.at(pos_); }
  const Line &next(const std::string &expect) {
    if (done()) {
      const std::size_t last = lines_.empty() ? 0 : lines_.back().number;
      throw InputError("line " + std::to_string(last + 1) + ", column 1: unexpected end of file, expected " + expect);
    }
    return lines_[pos_++];
  }

  /// Reads "<key> <uint>".
  unsigned keyed_uint(const std::string &key) {
    const Line &l = next("'" + key + "'");
    if (l.tokens[0].text != key) fail(l, l.tokens[0], "expected '" + key + "', got '" + l.tokens[0].text + "'");
    if (l.tokens.size() != 2) fail(l, "'" + key + "' takes exactly one value");
    return to_uint(l, l.tokens[1]);
  }

  FieldPtr field_line() {
    const Line &l = next("'q <p> <r> [modulus]'");
    if (l.tokens[0].text != "q") fail(l, l.tokens[0], "expected 'q', got '" + l.tokens[0].text + "'");
    if (l.tokens.size() < 3) fail(l, "'q' needs the characteristic p and the degree r");
    const unsigned p = to_uint(l, l.tokens[1]), r = to_uint(l, l.tokens[2]);
    std::vector<unsigned> modulus;
    for (std::size_t i = 3; i < l.tokens.size(); ++i) modulus.push_back(to_uint(l, l.tokens[i]));
    try {
      return Field::make(p, r, modulus);
    } catch (const InputError &e) {
      fail(l, l.tokens[1], e.what());
    }
  }

  GfMatrix matrix(const FieldPtr &f, std::size_t rows, std::size_t cols, const std::string &what) {
    GfMatrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      const Line &l = next(what + " row " + std::to_string(i + 1));
      if (l.tokens.size() != cols)
        fail(l, what + " row has " + std::to_string(l.tokens.size()) + " entries, expected " + std::to_string(cols));
      for (std::size_t j = 0; j < cols; ++j) {
        const unsigned v = to_uint(l, l.tokens[j]);
        if (v >= f->q()) fail(l, l.tokens[j], "field element index " + std::to_string(v) + " is not below q = " + std::to_string(f->q()));
        m(i, j) = static_cast<Field::Element>(v);
      }
    }
    return m;
  }

 private:
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
};

}  // namespace io_detail

inline LinearCode parse_block_code(const std::string &src) {
  io_detail::Cursor cur(io_detail::tokenize(src));
  const FieldPtr f = cur.field_line();
  const unsigned n = cur.keyed_uint("n"), k = cur.keyed_uint("k");
  if (k > n) throw InputError("k exceeds n");
  const GfMatrix g = cur.matrix(f, k, n, "generator");
  if (!cur.done()) io_detail::fail(cur.peek(), "unexpected trailing content");
  return LinearCode(f, n, g);
}

inline ConvSeed parse_conv_seed(const std::string &src) {
  io_detail::Cursor cur(io_detail::tokenize(src));
  const FieldPtr f = cur.field_line();
  const unsigned n = cur.keyed_uint("n"), k = cur.keyed_uint("k"), m = cur.keyed_uint("m");
  const auto &tl = cur.next("'T'");
  if (tl.tokens[0].text != "T" || tl.tokens.size() != 1) io_detail::fail(tl, tl.tokens[0], "expected a line containing only 'T'");
  const GfMatrix t = cur.matrix(f, m + k, m + n, "T");
  bool systematic = false;
  if (!cur.done()) {
    const auto &l = cur.next("'systematic'");
    if (l.tokens[0].text != "systematic" || l.tokens.size() != 1) io_detail::fail(l, l.tokens[0], "unexpected content");
    systematic = true;
  }
  if (!cur.done()) io_detail::fail(cur.peek(), "unexpected trailing content");
  ConvSeed seed(f, n, k, m, t);
  if (systematic && !seed.is_systematic())
    throw InputError("file declares 'systematic' but T does not have the shape (0 C0; I_k E0) in its output columns");
  return seed;
}

inline EaqccSpec parse_eaqcc(const std::string &src) {
  io_detail::Cursor cur(io_detail::tokenize(src));
  EaqccSpec spec;
  spec.n = cur.keyed_uint("n");
  spec.k = cur.keyed_uint("k");
  spec.c = cur.keyed_uint("c");
  spec.m = cur.keyed_uint("m");
  if (spec.k + spec.c > spec.n) throw InputError("k + c exceeds n");
  const std::size_t width = spec.n + spec.m;
  const std::pair<const char *, std::vector<std::size_t> *> roles[] = {
      {"IM:", &spec.in_memory}, {"IL:", &spec.in_logical},  {"IA:", &spec.in_ancilla},
      {"IE:", &spec.in_ebit},   {"IMout:", &spec.out_memory}, {"IP:", &spec.out_physical}};
  for (const auto &[key, dest] : roles) {
    const auto &l = cur.next(std::string("'") + key + "'");
    if (l.tokens[0].text != key) io_detail::fail(l, l.tokens[0], std::string("expected '") + key + "'");
    for (std::size_t i = 1; i < l.tokens.size(); ++i) {
      const unsigned v = io_detail::to_uint(l, l.tokens[i]);
      if (v < 1 || v > width) io_detail::fail(l, l.tokens[i], "qubit index must be in 1.." + std::to_string(width));
      dest->push_back(v - 1);
    }
  }
  std::vector<std::optional<PauliWord>> z(width), x(width);
  while (!cur.done()) {
    const auto &l = cur.next("an image line");
    if (l.tokens.size() != 3 || l.tokens[1].text != "->") io_detail::fail(l, "expected '<Z|X><i> -> <Pauli word>'");
    const std::string &lhs = l.tokens[0].text;
    if (lhs.size() < 2 || (lhs[0] != 'Z' && lhs[0] != 'X')) io_detail::fail(l, l.tokens[0], "expected Z<i> or X<i>");
    const io_detail::Token idx{lhs.substr(1), l.tokens[0].column + 1};
    const unsigned i = io_detail::to_uint(l, idx);
    if (i < 1 || i > width) io_detail::fail(l, idx, "qubit index must be in 1.." + std::to_string(width));
    if (l.tokens[2].text.size() != width)
      io_detail::fail(l, l.tokens[2], "image must have " + std::to_string(width) + " letters");
    auto &slot = (lhs[0] == 'Z' ? z : x)[i - 1];
    if (slot) io_detail::fail(l, l.tokens[0], "duplicate image for " + lhs);
    try {
      slot = PauliWord::parse(l.tokens[2].text);
    } catch (const InputError &e) {
      io_detail::fail(l, l.tokens[2], e.what());
    }
  }
  std::vector<PauliWord> zs, xs;
  for (std::size_t i = 0; i < width; ++i) {
    if (!z[i]) throw InputError("missing image line Z" + std::to_string(i + 1));
    if (!x[i]) throw InputError("missing image line X" + std::to_string(i + 1));
    zs.push_back(*z[i]);
    xs.push_back(*x[i]);
  }
  spec.seed = CliffordSeed(zs, xs);
  spec.validate();
  return spec;
}

enum class FileKind { block, conv, quantum };

inline FileKind detect_kind(const std::string &src) {
  for (const auto &l : io_detail::tokenize(src)) {
    if (l.tokens[0].text == "T") return FileKind::conv;
    if (l.tokens[0].text == "IM:") return FileKind::quantum;
  }
  return FileKind::block;
}

inline std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string format_block_code(const LinearCode &c) {
  const Field &f = *c.field();
  std::string s = "q " + std::to_string(f.p()) + " " + std::to_string(f.r());
  if (f.r() > 1)
    for (unsigned v : f.modulus()) s += " " + std::to_string(v);
  s += "\nn " + std::to_string(c.n()) + "\nk " + std::to_string(c.k()) + "\n";
  return s + c.generator().to_string();
}

inline std::string format_conv_seed(const ConvSeed &seed) {
  const Field &f = *seed.field();
  std::string s = "q " + std::to_string(f.p()) + " " + std::to_string(f.r());
  if (f.r() > 1)
    for (unsigned v : f.modulus()) s += " " + std::to_string(v);
  s += "\nn " + std::to_string(seed.n()) + "\nk " + std::to_string(seed.k()) + "\nm " + std::to_string(seed.m()) + "\nT\n";
  s += seed.T().to_string();
  if (seed.is_systematic()) s += "systematic\n";
  return s;
}

inline std::string format_eaqcc(const EaqccSpec &spec) {
  std::string s = "n " + std::to_string(spec.n) + "\nk " + std::to_string(spec.k) + "\nc " + std::to_string(spec.c) +
                  "\nm " + std::to_string(spec.m) + "\n";
  auto roles = [&](const char *key, const std::vector<std::size_t> &v) {
    s += key;
    for (auto i : v) s += " " + std::to_string(i + 1);
    s += "\n";
  };
  roles("IM:", spec.in_memory);
  roles("IL:", spec.in_logical);
  roles("IA:", spec.in_ancilla);
  roles("IE:", spec.in_ebit);
  roles("IMout:", spec.out_memory);
  roles("IP:", spec.out_physical);
  for (std::size_t i = 0; i < spec.seed.width(); ++i)
    s += "Z" + std::to_string(i + 1) + " -> " + spec.seed.z_images()[i].to_string() + "\n";
  for (std::size_t i = 0; i < spec.seed.width(); ++i)
    s += "X" + std::to_string(i + 1) + " -> " + spec.seed.x_images()[i].to_string() + "\n";
  return s;
}

/// "states: l1 l2 ..." followed by one "label: e1 ; e2 ; ..." line per row.
inline std::string format_matrix_text(const PolyMatrix &m) {
  std::string s = "states:";
  for (const auto &l : m.labels()) s += " " + l;
  s += "\n";
  for (std::size_t i = 0; i < m.dim(); ++i) {
    s += m.labels()[i] + ":";
    for (std::size_t j = 0; j < m.dim(); ++j) s += (j ? " ; " : " ") + m(i, j).to_string();
    s += "\n";
  }
  return s;
}

inline nlohmann::ordered_json poly_terms_json(const WeightPoly &p) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto &[e, c] : p.terms()) {
    nlohmann::ordered_json ex = nlohmann::ordered_json::object();
    for (std::size_t v = 0; v < kNumVars; ++v)
      if (e[v]) ex[std::string(kVarNames[v])] = e[v];
    terms.push_back({{"coeff", c}, {"exponents", ex}});
  }
  return terms;
}

inline std::string format_poly_structured(const WeightPoly &p) {
  nlohmann::ordered_json j;
  j["terms"] = poly_terms_json(p);
  return j.dump() + "\n";
}

inline std::string format_matrix_structured(const PolyMatrix &m) {
  nlohmann::ordered_json j;
  j["labels"] = m.labels();
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (std::size_t jj = 0; jj < m.dim(); ++jj) row.push_back(poly_terms_json(m(i, jj)));
    rows.push_back(row);
  }
  j["entries"] = rows;
  return j.dump() + "\n";
}

namespace io_detail {

inline WeightPoly poly_from_terms(const nlohmann::json &terms) {
  if (!terms.is_array()) throw InputError("structured polynomial: 'terms' must be an array");
  WeightPoly p;
  for (const auto &t : terms) {
    if (!t.is_object() || !t.contains("coeff") || !t.contains("exponents") || !t["coeff"].is_number_integer() ||
        !t["exponents"].is_object())
      throw InputError("structured polynomial: each term needs an integer 'coeff' and an 'exponents' object");
    Exponents e{};
    for (const auto &[name, val] : t["exponents"].items()) {
      const auto v = parse_var(name);
      if (!v) throw InputError("structured polynomial: unknown variable '" + name + "'");
      if (!val.is_number_unsigned() || val.get<std::uint64_t>() > 0xFFFF)
        throw InputError("structured polynomial: bad exponent for '" + name + "'");
      e[var_index(*v)] = static_cast<std::uint16_t>(val.get<std::uint64_t>());
    }
    p.add_term(e, t["coeff"].get<Coeff>());
  }
  return p;
}

inline nlohmann::json parse_json(const std::string &text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw InputError(std::string("structured input is not valid JSON: ") + e.what());
  }
}

}  // namespace io_detail

inline WeightPoly parse_poly_structured(const std::string &text) {
  const auto j = io_detail::parse_json(text);
  if (!j.is_object() || !j.contains("terms")) throw InputError("structured polynomial needs a 'terms' field");
  return io_detail::poly_from_terms(j["terms"]);
}

inline PolyMatrix parse_matrix_structured(const std::string &text) {
  const auto j = io_detail::parse_json(text);
  if (!j.is_object() || !j.contains("labels") || !j.contains("entries"))
    throw InputError("structured matrix needs 'labels' and 'entries'");
  std::vector<std::string> labels;
  for (const auto &l : j["labels"]) {
    if (!l.is_string()) throw InputError("structured matrix labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  PolyMatrix m(labels);
  const auto &rows = j["entries"];
  if (!rows.is_array() || rows.size() != m.dim()) throw InputError("structured matrix has the wrong number of rows");
  for (std::size_t i = 0; i < m.dim(); ++i) {
    if (!rows[i].is_array() || rows[i].size() != m.dim())
      throw InputError("structured matrix row " + std::to_string(i) + " has the wrong length");
    for (std::size_t jj = 0; jj < m.dim(); ++jj) m(i, jj) = io_detail::poly_from_terms(rows[i][jj]);
  }
  return m;
}

}  // namespace convwam
