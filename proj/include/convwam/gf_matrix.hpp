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

// Dense matrices over GF(q) with Gaussian elimination.

#include <string>
#include <vector>

#include "convwam/errors.hpp"
#include "convwam/field.hpp"

namespace convwam {

class GfMatrix {
 public:
  using Element = Field::Element;

  GfMatrix() = default;
  GfMatrix(FieldPtr field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static GfMatrix identity(FieldPtr field, std::size_t n) {
    GfMatrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static GfMatrix from_rows(FieldPtr field, const std::vector<std::vector<unsigned>> &rows, std::size_t cols) {
    GfMatrix m(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw InputError("matrix row " + std::to_string(i + 1) + " has wrong length");
      for (std::size_t j = 0; j < cols; ++j) {
        if (rows[i][j] >= field->q()) throw InputError("field element index out of range");
        m(i, j) = static_cast<Element>(rows[i][j]);
      }
    }
    return m;
  }

  const FieldPtr &field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Element &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Element operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Element> row(std::size_t i) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
  }

  GfMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw InputError("sub-block out of range");
    GfMatrix b(field_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }

  void set_block(std::size_t r0, std::size_t c0, const GfMatrix &b) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw InputError("sub-block out of range");
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  GfMatrix transposed() const {
    GfMatrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    for (Element e : data_)
      if (e != 0) return false;
    return true;
  }

  friend GfMatrix operator*(const GfMatrix &a, const GfMatrix &b) {
    if (a.cols_ != b.rows_) throw InputError("matrix product shape mismatch");
    const Field &f = *a.field_;
    GfMatrix r(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Element aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) = f.add(r(i, j), f.mul(aik, b(k, j)));
      }
    return r;
  }
  friend GfMatrix operator+(GfMatrix a, const GfMatrix &b) {
    a.check_shape(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] = a.field_->add(a.data_[i], b.data_[i]);
    return a;
  }
  friend GfMatrix operator-(GfMatrix a, const GfMatrix &b) {
    a.check_shape(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] = a.field_->sub(a.data_[i], b.data_[i]);
    return a;
  }
  GfMatrix scaled(Element s) const {
    GfMatrix r = *this;
    for (auto &e : r.data_) e = field_->mul(e, s);
    return r;
  }
  friend bool operator==(const GfMatrix &a, const GfMatrix &b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// Row-reduces in place to reduced echelon form; returns pivot columns.
  std::vector<std::size_t> rref() {
    const Field &f = *field_;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t piv = r;
      while (piv < rows_ && (*this)(piv, c) == 0) ++piv;
      if (piv == rows_) continue;
      swap_rows(piv, r);
      scale_row(r, f.inv((*this)(r, c)));
      for (std::size_t i = 0; i < rows_; ++i)
        if (i != r && (*this)(i, c) != 0) add_row_multiple(i, r, f.neg((*this)(i, c)));
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  std::size_t rank() const {
    GfMatrix t = *this;
    return t.rref().size();
  }

  /// Basis (as rows) of { v : this * v^T = 0 }.
  GfMatrix nullspace() const {
    GfMatrix t = *this;
    const auto pivots = t.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;
    GfMatrix basis(field_, cols_ - pivots.size(), cols_);
    std::size_t out = 0;
    for (std::size_t free = 0; free < cols_; ++free) {
      if (is_pivot[free]) continue;
      basis(out, free) = 1;
      for (std::size_t i = 0; i < pivots.size(); ++i) basis(out, pivots[i]) = field_->neg(t(i, free));
      ++out;
    }
    return basis;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void scale_row(std::size_t r, Element s) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = field_->mul((*this)(r, j), s);
  }
  /// row[dst] += s * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, Element s) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) = field_->add((*this)(dst, j), field_->mul(s, (*this)(src, j)));
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) s += (j ? " " : "") + std::to_string((*this)(i, j));
      s += "\n";
    }
    return s;
  }

 private:
  void check_shape(const GfMatrix &o) const {
    if (o.rows_ != rows_ || o.cols_ != cols_) throw InputError("matrix shape mismatch");
  }

  FieldPtr field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Element> data_;
};

inline GfMatrix hstack(const GfMatrix &a, const GfMatrix &b) {
  if (a.rows() != b.rows()) throw InputError("hstack row mismatch");
  GfMatrix r(a.field(), a.rows(), a.cols() + b.cols());
  r.set_block(0, 0, a);
  r.set_block(0, a.cols(), b);
  return r;
}

inline GfMatrix vstack(const GfMatrix &a, const GfMatrix &b) {
  if (a.cols() != b.cols()) throw InputError("vstack column mismatch");
  GfMatrix r(a.field(), a.rows() + b.rows(), a.cols());
  r.set_block(0, 0, a);
  r.set_block(a.rows(), 0, b);
  return r;
}

}  // namespace convwam
