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

// Conjugation of a state-indexed matrix by an additive character matrix:
//   result(i,j) = (1/scale) * sum_{a,b} w^{pair(i,a) - pair(j,b)} M(a,b),
// with w a primitive p-th root of unity and pair() valued in Z_p. The sums are
// carried exactly in Z[w] and must land in the integers.

#include <functional>
#include <vector>

#include "convwam/cyclotomic.hpp"
#include "convwam/poly_matrix.hpp"

namespace convwam {

using PairFn = std::function<unsigned(std::size_t, std::size_t)>;

inline PolyMatrix character_conjugate(const PolyMatrix &m, unsigned p, const PairFn &pair, Coeff scale) {
  const std::size_t n = m.dim();
  std::vector<unsigned> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < n; ++a) {
      table[i * n + a] = pair(i, a) % p;
      if (pair(a, i) % p != table[i * n + a]) throw InputError("character pairing must be symmetric");
    }

  // half(a, j) = sum_b w^{-pair(j,b)} M(a,b)
  std::vector<Cyclotomic<WeightPoly>> half;
  half.reserve(n * n);
  std::vector<WeightPoly> buckets(p);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t j = 0; j < n; ++j) {
      std::fill(buckets.begin(), buckets.end(), WeightPoly{});
      for (std::size_t b = 0; b < n; ++b) {
        if (m(a, b).is_zero()) continue;
        buckets[(p - table[j * n + b]) % p] += m(a, b);
      }
      half.push_back(Cyclotomic<WeightPoly>::from_buckets(p, buckets));
    }

  PolyMatrix out(m.labels());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::fill(buckets.begin(), buckets.end(), WeightPoly{});
      for (std::size_t a = 0; a < n; ++a) {
        const auto &h = half[a * n + j].coeffs();
        const unsigned shift = table[i * n + a];
        for (unsigned t = 0; t + 1 < p; ++t)
          if (!h[t].is_zero()) buckets[(t + shift) % p] += h[t];
      }
      const auto sum = Cyclotomic<WeightPoly>::from_buckets(p, buckets);
      if (!sum.is_integral()) throw ArithmeticError("character conjugation left a residual root-of-unity component");
      out(i, j) = sum.integral_value().divided_exactly(scale);
    }
  return out;
}

}  // namespace convwam
