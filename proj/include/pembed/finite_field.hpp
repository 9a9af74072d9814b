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

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace pembed {

/// F_p[T]/(modulus) with modulus monic irreducible of degree k.
/// Coefficients are stored low degree first; modulus has k+1 entries.
struct FieldSpec {
  std::int64_t p = 0;
  int k = 0;
  std::vector<std::int64_t> modulus;

  bool operator==(const FieldSpec &) const = default;
};

/// Element of F_q, indexed by its coefficient vector read as a base-p
/// number (coefficient of T^j is digit j). Index 0 is zero, 1 is one.
struct FqElem {
  std::uint32_t index = 0;

  bool is_zero() const { return index == 0; }
  auto operator<=>(const FqElem &) const = default;
};

inline constexpr std::int64_t kMaxFieldOrder = 6561; // 3^8

bool is_prime(std::int64_t n);

// Trial division by every monic of degree 1..deg/2 over F_p.
bool is_irreducible(std::span<const std::int64_t> monic, std::int64_t p);

// Smallest monic irreducible of degree k, ordering candidates by their
// non-leading coefficients read from T^{k-1} down to T^0.
std::vector<std::int64_t> smallest_irreducible(std::int64_t p, int k);

class FiniteField {
public:
  // Uses smallest_irreducible(p, k).
  static std::shared_ptr<const FiniteField> make(std::int64_t p, int k);
  // Validates primality, irreducibility and the order cap.
  static std::shared_ptr<const FiniteField> make(const FieldSpec &spec);

  const FieldSpec &spec() const { return spec_; }
  std::int64_t p() const { return spec_.p; }
  int k() const { return spec_.k; }
  std::uint32_t q() const { return q_; }

  FqElem zero() const { return {0}; }
  FqElem one() const { return {1}; }
  // Residue class of c in the prime field.
  FqElem from_int(std::int64_t c) const;
  FqElem from_coeffs(std::span<const std::int64_t> coeffs) const;
  std::vector<std::int64_t> coeffs(FqElem a) const;
  bool contains(FqElem a) const { return a.index < q_; }

  FqElem add(FqElem a, FqElem b) const;
  FqElem sub(FqElem a, FqElem b) const;
  FqElem neg(FqElem a) const;
  FqElem mul(FqElem a, FqElem b) const;
  FqElem inv(FqElem a) const;
  FqElem pow(FqElem a, std::uint64_t e) const;
  // a^(p^i)
  FqElem frobenius(FqElem a, unsigned i) const;

  // A generator of the multiplicative group (smallest index).
  FqElem primitive() const { return primitive_; }

private:
  explicit FiniteField(FieldSpec spec);

  FieldSpec spec_;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> exp_; // exp_[i] = primitive^i, length q-1
  std::vector<std::uint32_t> log_; // log_[index], log_[0] unused
  std::vector<std::uint32_t> pow_p_; // p^j for j < k
  FqElem primitive_{1};
};

using FieldPtr = std::shared_ptr<const FiniteField>;

} // namespace pembed
