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

#include <cstdint>
#include <stdexcept>
#include <string>

namespace convwam {

/// Malformed input: bad file contents, inconsistent parameters, unsupported shapes.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive enumeration would exceed the configured message budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string &what, std::uint64_t limit)
      : std::runtime_error(what + " (limit " + std::to_string(limit) + ")"), limit_(limit) {}
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
};

/// Exact arithmetic failed: overflow, a non-integral division or a character sum
/// that did not land in the integers. Every one of these indicates a bug or
/// malformed input, never a rounding issue.
class ArithmeticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Coeff = std::int64_t;

inline Coeff checked_add(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticError("integer overflow in addition");
  return r;
}

inline Coeff checked_sub(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticError("integer overflow in subtraction");
  return r;
}

inline Coeff checked_mul(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticError("integer overflow in multiplication");
  return r;
}

inline Coeff exact_div(Coeff a, Coeff b) {
  if (b == 0) throw ArithmeticError("division by zero");
  if (a % b != 0) {
    throw ArithmeticError("non-integral division: " + std::to_string(a) + " / " + std::to_string(b));
  }
  return a / b;
}

inline Coeff checked_pow(Coeff base, unsigned e) {
  Coeff r = 1;
  for (unsigned i = 0; i < e; ++i) r = checked_mul(r, base);
  return r;
}

/// Default cap on the number of messages an exhaustive enumeration may visit.
inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 26;

}  // namespace convwam
