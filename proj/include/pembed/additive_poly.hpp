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

#include <pembed/laurent.hpp>
#include <pembed/ordered_group.hpp>
#include <pembed/parallel.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace pembed {

/// p-polynomial f(T) = b_0 T + b_1 T^p + ... + b_m T^(p^m) with b_i in A.
/// The coefficient vector is trimmed so that b_m != 0; the zero polynomial
/// is rejected.
class AdditivePoly {
public:
  AdditivePoly(FieldPtr field, std::vector<LaurentPoly> coeffs);

  const FieldPtr &field() const { return field_; }
  const std::vector<LaurentPoly> &coeffs() const { return coeffs_; }
  int m() const { return static_cast<int>(coeffs_.size()) - 1; }
  const LaurentPoly &leading() const { return coeffs_.back(); }
  std::int64_t p() const { return field_->p(); }
  // Every b_i is zero or a degree-0 constant.
  bool has_constant_coeffs() const;

  bool operator==(const AdditivePoly &o) const;
  std::string to_string() const;

private:
  FieldPtr field_;
  std::vector<LaurentPoly> coeffs_;
};

/// sum_i b_i a^(p^i).
LaurentPoly eval(const AdditivePoly &f, const LaurentPoly &a);

/// f o g under the twisted rule c_k = sum_{i+j=k} f_i g_j^(p^i).
AdditivePoly compose(const AdditivePoly &f, const AdditivePoly &g);

/// Low-valuation regime of f. Every a = f(a1) with v(a) < gamma0 has
/// v(a) = v(b_m) + p^m v(a1).
///
/// alpha is the largest value such that every gamma < alpha satisfies
/// (p^m - p^i) gamma < v(b_i) - v(b_m) for all i < m with b_i != 0;
/// beta = min{v(b_i) + p^i alpha} over nonzero b_i and gamma0 = beta - 1.
/// When f is a single term there is no constraint: alpha is empty and beta,
/// gamma0 are infinity, so the identity holds for every nonzero a1.
struct Threshold {
  std::optional<OrderedValue> alpha;
  OrderedValue beta = OrderedValue::infinity(1);
  OrderedValue gamma0 = OrderedValue::infinity(1);
  OrderedValue vbm = OrderedValue::zero(1);

  bool bounded() const { return alpha.has_value(); }
};

Threshold low_val_threshold(const AdditivePoly &f);

/// v(b_m) + p^m * va1.
OrderedValue predict_image_valuation(const AdditivePoly &f,
                                     const OrderedValue &va1);

/// Replayable proof that `element` is not in f(A): its valuation lies below
/// gamma0 and outside v(b_m) + pZ.
struct NonMembershipCertificate {
  LaurentPoly element;
  OrderedValue valuation;
  Threshold threshold;
  std::int64_t p = 0;
  // (v(a) - v(b_m)) mod p; nonzero.
  std::int64_t residue = 0;
};

/// Certificate when the criterion applies, std::nullopt otherwise. An empty
/// result is "inconclusive", never a membership claim. Rejects a = 0 and
/// polynomials with m < 1.
std::optional<NonMembershipCertificate>
certify_not_in_image(const AdditivePoly &f, const LaurentPoly &a);

/// Recomputes threshold and coset test from scratch and checks they match
/// the stored data.
bool verify_certificate(const AdditivePoly &f,
                        const NonMembershipCertificate &cert);

/// `count` monomials x^e_i, pairwise distinct modulo f(A), with exponents
/// from descending_nondivisible(v(b_m), gamma0, p, count). For a single-term
/// f the start value is v(b_m) itself.
std::vector<LaurentPoly> coset_witnesses(const AdditivePoly &f,
                                         std::size_t count);

inline constexpr std::uint64_t kMaxPreimageSearch = 10'000'000;

/// Candidate a1 with support in [-bound, bound], indexed by reading the
/// coefficient of x^(-bound + j) as base-q digit j.
LaurentPoly preimage_candidate(const FieldPtr &field, std::int64_t bound,
                               std::uint64_t index);

/// Exhaustive search over all a1 with support in [-bound, bound] for
/// f(a1) = a. Returns the candidate of smallest index (see
/// preimage_candidate). An empty result only means "none within bound".
/// Throws CapExceeded when q^(2 bound + 1) > 10^7.
std::optional<LaurentPoly> brute_force_in_image(const AdditivePoly &f,
                                                const LaurentPoly &a,
                                                std::int64_t bound,
                                                Exec exec = Exec::parallel);

/// F_p-basis of {y in F_(q^ext) : f(y) = 0} for constant-coefficient f.
struct KernelBasis {
  FieldPtr extension;
  // Image of the base-field generator T in the extension.
  FqElem embedded_generator;
  std::vector<FqElem> basis;
};

/// Maps a base-field element into the extension via embedded_generator.
FqElem embed(const FiniteField &base, const FiniteField &ext, FqElem gen,
             FqElem a);

KernelBasis kernel_points(const AdditivePoly &f, int ext_degree);

/// f(y) evaluated in the extension field of `kb`.
FqElem eval_in_extension(const AdditivePoly &f, const KernelBasis &kb,
                         FqElem y);

} // namespace pembed
