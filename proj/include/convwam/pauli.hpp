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

// Pauli words modulo phase, in the binary symplectic picture.

#include <bit>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "convwam/errors.hpp"

namespace convwam {

class PauliWord {
 public:
  static constexpr std::size_t kMaxQubits = 64;

  PauliWord() = default;
  explicit PauliWord(std::size_t n) : n_(n) { check_len(n); }
  PauliWord(std::size_t n, std::uint64_t x, std::uint64_t z) : n_(n), x_(x), z_(z) {
    check_len(n);
    const std::uint64_t mask = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    if ((x & ~mask) || (z & ~mask)) throw InputError("Pauli bits outside word length");
  }

  static PauliWord parse(std::string_view s) {
    PauliWord w(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      switch (s[i]) {
        case 'I': break;
        case 'X': w.set(i, 1); break;
        case 'Y': w.set(i, 2); break;
        case 'Z': w.set(i, 3); break;
        default: throw InputError("invalid Pauli letter '" + std::string(1, s[i]) + "'");
      }
    }
    return w;
  }

  /// Single-qubit operator: 0=I, 1=X, 2=Y, 3=Z.
  static PauliWord single(std::size_t n, std::size_t qubit, unsigned letter) {
    PauliWord w(n);
    w.set(qubit, letter);
    return w;
  }

  std::size_t size() const { return n_; }
  std::uint64_t x_bits() const { return x_; }
  std::uint64_t z_bits() const { return z_; }

  /// Letter index on a qubit in the order I, X, Y, Z.
  unsigned letter(std::size_t i) const {
    const bool x = (x_ >> i) & 1, z = (z_ >> i) & 1;
    return x ? (z ? 2 : 1) : (z ? 3 : 0);
  }
  void set(std::size_t i, unsigned letter) {
    const std::uint64_t bit = std::uint64_t{1} << i;
    x_ &= ~bit;
    z_ &= ~bit;
    if (letter == 1 || letter == 2) x_ |= bit;
    if (letter == 2 || letter == 3) z_ |= bit;
  }

  unsigned weight() const { return static_cast<unsigned>(std::popcount(x_ | z_)); }
  bool is_identity() const { return (x_ | z_) == 0; }

  std::string to_string() const {
    static constexpr char kLetters[] = "IXYZ";
    std::string s(n_, 'I');
    for (std::size_t i = 0; i < n_; ++i) s[i] = kLetters[letter(i)];
    return s;
  }

  /// The word restricted to `positions` (0-based), in that order.
  PauliWord restricted(const std::vector<std::size_t> &positions) const {
    PauliWord w(positions.size());
    for (std::size_t i = 0; i < positions.size(); ++i) w.set(i, letter(positions[i]));
    return w;
  }

  /// Binary image, two bits per qubit (z bit, x bit): I 00, X 01, Z 10, Y 11.
  std::vector<std::uint8_t> phi() const {
    std::vector<std::uint8_t> b(2 * n_);
    for (std::size_t i = 0; i < n_; ++i) {
      b[2 * i] = (z_ >> i) & 1;
      b[2 * i + 1] = (x_ >> i) & 1;
    }
    return b;
  }
  static PauliWord from_phi(const std::vector<std::uint8_t> &b) {
    if (b.size() % 2) throw InputError("binary Pauli image must have even length");
    PauliWord w(b.size() / 2);
    for (std::size_t i = 0; i < w.n_; ++i) {
      if (b[2 * i]) w.z_ |= std::uint64_t{1} << i;
      if (b[2 * i + 1]) w.x_ |= std::uint64_t{1} << i;
    }
    return w;
  }

  PauliWord &operator*=(const PauliWord &o) {
    check_same(o);
    x_ ^= o.x_;
    z_ ^= o.z_;
    return *this;
  }
  friend PauliWord operator*(PauliWord a, const PauliWord &b) { return a *= b; }
  friend bool operator==(const PauliWord &a, const PauliWord &b) = default;

  void check_same(const PauliWord &o) const {
    if (o.n_ != n_) throw InputError("Pauli words of different lengths");
  }

  /// Concatenation a (x) b.
  friend PauliWord tensor(const PauliWord &a, const PauliWord &b) {
    if (a.n_ + b.n_ > kMaxQubits) throw InputError("Pauli word too long");
    return PauliWord(a.n_ + b.n_, a.x_ | (b.x_ << a.n_), a.z_ | (b.z_ << a.n_));
  }

 private:
  static void check_len(std::size_t n) {
    if (n > kMaxQubits) throw InputError("Pauli words are limited to 64 qubits");
  }

  std::size_t n_ = 0;
  std::uint64_t x_ = 0, z_ = 0;
};

/// 0 if g and h commute, 1 if they anticommute.
inline unsigned symplectic_product(const PauliWord &g, const PauliWord &h) {
  g.check_same(h);
  return static_cast<unsigned>(std::popcount((g.x_bits() & h.z_bits()) ^ (g.z_bits() & h.x_bits())) & 1);
}

}  // namespace convwam
