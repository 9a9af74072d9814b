/* Copyright (C) 2026 The pembed Authors.
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */

#pragma once

#include <pembed/additive_poly.hpp>
#include <pembed/laurent.hpp>

#include <cstdint>
#include <random>

namespace pembed::testing {

inline std::int64_t uniform(std::mt19937_64 &rng, std::int64_t lo,
                            std::int64_t hi) {
  return lo + static_cast<std::int64_t>(
                  rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline FqElem random_elem(const FieldPtr &field, std::mt19937_64 &rng,
                          bool nonzero = false) {
  const std::int64_t lo = nonzero ? 1 : 0;
  return FqElem{static_cast<std::uint32_t>(uniform(rng, lo, field->q() - 1))};
}

inline LaurentPoly random_laurent(const FieldPtr &field, std::mt19937_64 &rng,
                                  std::int64_t lo = -6, std::int64_t hi = 6,
                                  int max_terms = 4) {
  LaurentPoly out(field);
  const int terms = static_cast<int>(uniform(rng, 0, max_terms));
  for (int i = 0; i < terms; ++i)
    out += LaurentPoly::monomial(field, random_elem(field, rng),
                                 uniform(rng, lo, hi));
  return out;
}

inline AdditivePoly random_additive(const FieldPtr &field, std::mt19937_64 &rng,
                                    int max_m = 2) {
  const int m = static_cast<int>(uniform(rng, 0, max_m));
  std::vector<LaurentPoly> coeffs;
  for (int i = 0; i < m; ++i)
    coeffs.push_back(random_laurent(field, rng, -2, 2, 2));
  LaurentPoly lead(field);
  while (lead.is_zero())
    lead = random_laurent(field, rng, -2, 2, 2);
  coeffs.push_back(lead);
  return AdditivePoly(field, std::move(coeffs));
}

// x^e with coefficient c, shorthand.
inline LaurentPoly mono(const FieldPtr &field, std::int64_t c, std::int64_t e) {
  return LaurentPoly::monomial(field, field->from_int(c), e);
}

// p-th power by repeated multiplication; independent of frobenius_pow.
inline LaurentPoly power_by_mul(const LaurentPoly &a, std::int64_t n) {
  LaurentPoly out = LaurentPoly::constant(a.field(), a.field()->one());
  for (std::int64_t i = 0; i < n; ++i)
    out = out * a;
  return out;
}

} // namespace pembed::testing
