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

#include <pembed/finite_field.hpp>
#include <pembed/ordered_group.hpp>

#include <cstdint>
#include <map>
#include <string>

namespace pembed {

/// Sparse Laurent polynomial over F_q, the valued ring A = F_q[x, 1/x] with
/// v(a) = lowest exponent carrying a nonzero coefficient.
///
/// Terms are kept canonical: no zero coefficients are stored, and zero is
/// the empty map. Operands of binary operations must share a field spec.
class LaurentPoly {
public:
  using Terms = std::map<std::int64_t, FqElem>;

  explicit LaurentPoly(FieldPtr field);
  LaurentPoly(FieldPtr field, Terms terms);

  static LaurentPoly monomial(FieldPtr field, FqElem c, std::int64_t e);
  static LaurentPoly constant(FieldPtr field, FqElem c) {
    return monomial(std::move(field), c, 0);
  }

  const FieldPtr &field() const { return field_; }
  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  FqElem coeff(std::int64_t e) const;
  // Lowest and highest exponents; require a nonzero element.
  std::int64_t min_exponent() const;
  std::int64_t max_exponent() const;

  /// Rank-1 value; infinity for zero.
  OrderedValue valuation() const;

  LaurentPoly operator+(const LaurentPoly &b) const;
  LaurentPoly operator-(const LaurentPoly &b) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly &b) const;
  LaurentPoly scaled(FqElem c) const;
  LaurentPoly &operator+=(const LaurentPoly &b);

  bool operator==(const LaurentPoly &b) const;

  std::string to_string() const;

private:
  void require_same_field(const LaurentPoly &b) const;

  FieldPtr field_;
  Terms terms_;
};

bool same_field(const FieldPtr &a, const FieldPtr &b);

/// a^(p^i), computed term by term: (sum c_e x^e)^(p^i) = sum c_e^(p^i) x^(e p^i).
/// Throws RangeError if an exponent overflows.
LaurentPoly frobenius_pow(const LaurentPoly &a, unsigned i);

} // namespace pembed
