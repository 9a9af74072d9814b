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

// Exhaustive-search kernels. Each has an OpenMP path and a serial reference
// path selected by Exec; both produce the same output in the same order.

#include <pembed/additive_poly.hpp>
#include <pembed/groups.hpp>
#include <pembed/linalg.hpp>
#include <pembed/parallel.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace pembed::kernels {

/// Every homomorphism sending gens[i] into candidates[i], as full element
/// maps. Tuples of images are visited in lexicographic order (first
/// generator most significant) and results keep that order.
std::vector<std::vector<int>>
enumerate_hom_maps(const FiniteGroup &domain, const FiniteGroup &codomain,
                   std::span<const int> gens,
                   const std::vector<std::vector<int>> &candidates, Exec exec);

inline constexpr std::uint64_t kMaxCocycleCandidates = 1'000'000;

/// Every map Pi -> (Z/p)^r passing the crossed-homomorphism identity,
/// in increasing base-p index order. A map is the vector (c(s)_j) at
/// position s * r + j.
std::vector<linalg::Vec> enumerate_cocycles(const PGroupAction &action,
                                            Exec exec);

/// Smallest preimage_candidate index t with f(candidate) = a.
std::optional<std::uint64_t> find_preimage_index(const AdditivePoly &f,
                                                 const LaurentPoly &a,
                                                 std::int64_t bound, Exec exec);

} // namespace pembed::kernels
