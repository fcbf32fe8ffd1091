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

// Square matrices of weight polynomials indexed by memory-state labels.

#include <optional>
#include <string>
#include <vector>

#include "convwam/errors.hpp"
#include "convwam/poly.hpp"

namespace convwam {

class PolyMatrix {
 public:
  PolyMatrix() = default;
  explicit PolyMatrix(std::vector<std::string> labels) : labels_(std::move(labels)) {
    entries_.resize(labels_.size() * labels_.size());
    for (std::size_t i = 0; i < labels_.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (labels_[i] == labels_[j]) throw InputError("duplicate state label " + labels_[i]);
  }

  static PolyMatrix identity(std::vector<std::string> labels) {
    PolyMatrix m(std::move(labels));
    for (std::size_t i = 0; i < m.dim(); ++i) m(i, i) = WeightPoly(1);
    return m;
  }

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string> &labels() const { return labels_; }

  WeightPoly &operator()(std::size_t i, std::size_t j) { return entries_[i * dim() + j]; }
  const WeightPoly &operator()(std::size_t i, std::size_t j) const { return entries_[i * dim() + j]; }

  template <class Fn>
  PolyMatrix map(Fn fn) const {
    PolyMatrix r = *this;
    for (auto &e : r.entries_) e = fn(e);
    return r;
  }

  PolyMatrix substituted(const Substitution &sub) const {
    const Substitution full = with_identity(sub);
    return map([&](const WeightPoly &p) { return substitute(p, full); });
  }

  PolyMatrix truncated(std::optional<unsigned> d_max) const {
    return map([&](const WeightPoly &p) { return p.truncated(d_max); });
  }

  PolyMatrix transposed() const {
    PolyMatrix r(labels_);
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < dim(); ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  Coeff entry_sum() const {
    Coeff s = 0;
    for (const auto &e : entries_) s = checked_add(s, e.coefficient_sum());
    return s;
  }

  friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix &b) {
    a.check_shape(b);
    for (std::size_t i = 0; i < a.entries_.size(); ++i) a.entries_[i] += b.entries_[i];
    return a;
  }
  friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix &b) {
    a.check_shape(b);
    for (std::size_t i = 0; i < a.entries_.size(); ++i) a.entries_[i] -= b.entries_[i];
    return a;
  }
  friend PolyMatrix operator*(const PolyMatrix &a, const PolyMatrix &b) {
    a.check_shape(b);
    PolyMatrix r(a.labels_);
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const WeightPoly &aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j)
          if (!b(k, j).is_zero()) r(i, j) += aik * b(k, j);
      }
    return r;
  }
  friend PolyMatrix operator*(const PolyMatrix &a, const WeightPoly &s) {
    return a.map([&](const WeightPoly &p) { return p * s; });
  }

  friend bool operator==(const PolyMatrix &a, const PolyMatrix &b) {
    return a.labels_ == b.labels_ && a.entries_ == b.entries_;
  }

  void check_shape(const PolyMatrix &o) const {
    if (o.labels_ != labels_) throw InputError("matrix state labels differ");
  }

 private:
  std::vector<std::string> labels_;
  std::vector<WeightPoly> entries_;
};

/// For M = I - N*D with N free of D, returns sum_{i<=d_max} N^i D^i truncated at d_max.
inline PolyMatrix series_inverse(const PolyMatrix &m, unsigned d_max) {
  const std::size_t n = m.dim();
  PolyMatrix step(m.labels());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      WeightPoly e = m(i, j);
      if (i == j) e -= WeightPoly(1);
      for (const auto &[ex, c] : e.terms())
        if (ex[var_index(Var::D)] != 1)
          throw InputError("series_inverse: matrix is not of the form I - N*D at entry (" + std::to_string(i) + "," +
                           std::to_string(j) + ")");
      step(i, j) = (-e).truncated(d_max);
    }
  PolyMatrix result = PolyMatrix::identity(m.labels()).truncated(d_max);
  PolyMatrix power = result;
  for (unsigned i = 1; i <= d_max; ++i) {
    power = power * step;
    result = result + power;
  }
  return result;
}

/// I - N*D for a D-free matrix N.
inline PolyMatrix one_minus_times_d(const PolyMatrix &n) {
  return PolyMatrix::identity(n.labels()) - n * WeightPoly::variable(Var::D);
}

}  // namespace convwam
