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

#include <pembed/groups.hpp>
#include <pembed/linalg.hpp>
#include <pembed/parallel.hpp>

#include <cstdint>
#include <map>
#include <vector>

namespace pembed {

class EmbeddingProblem;

/// The kernel P = ker(f) of an embedding problem as an F_p-module, with the
/// conjugation action pulled back to Pi along alpha.
///
/// Basis: walk the kernel in increasing index order and keep every element
/// not already in the span of the ones kept so far.
struct KernelModule {
  PGroupAction action;
  std::vector<int> basis;               // Gamma indices
  std::map<int, linalg::Vec> coords;    // Gamma index -> coordinates in P

  const linalg::Vec &coordinates(int gamma) const;
  int element(const linalg::Vec &v) const;
};

/// Throws InputError if ker(f) is not elementary abelian. A trivial kernel
/// gives a rank-0 module (over F_2 unless the problem names another prime).
KernelModule action_from_problem(const EmbeddingProblem &problem);

/// Z^1, B^1 and H^1 of Pi = action.acting() with coefficients in (Z/p)^r.
/// Cocycles are stored as vectors of length |Pi| r with c(s)_j at s r + j.
class CocycleSpace {
public:
  static constexpr std::size_t kMaxUnknowns = 2000;

  explicit CocycleSpace(PGroupAction action);

  const PGroupAction &action() const { return action_; }
  std::int64_t p() const { return action_.p(); }
  int r() const { return action_.r(); }

  const std::vector<linalg::Vec> &z1_basis() const { return z1_basis_; }
  const std::vector<linalg::Vec> &b1_basis() const { return b1_.rows(); }
  std::size_t dim_z1() const { return z1_basis_.size(); }
  std::size_t dim_b1() const { return b1_.rank(); }
  std::size_t dim_h1() const { return dim_z1() - dim_b1(); }
  // p^dim_h1; throws RangeError past 2^63.
  std::uint64_t h1_order() const;

  bool is_cocycle(const linalg::Vec &c) const;
  bool is_coboundary(const linalg::Vec &c) const { return b1_.contains(c); }
  // Lexicographically smallest member of c + B^1.
  linalg::Vec h1_representative(const linalg::Vec &c) const;
  // All coset representatives, sorted; throws CapExceeded past `cap`.
  std::vector<linalg::Vec> h1_representatives(std::uint64_t cap = 4096) const;
  // Coboundary s -> rho(s) v - v.
  linalg::Vec coboundary(const linalg::Vec &v) const;

private:
  PGroupAction action_;
  std::vector<linalg::Vec> z1_basis_;
  linalg::RowEchelon b1_;
  // Z^1 basis vectors independent modulo B^1, reduced.
  std::vector<linalg::Vec> complement_;
};

CocycleSpace h1(const PGroupAction &action);

bool is_cocycle(const PGroupAction &action, const linalg::Vec &c);

/// Brute force: every map Pi -> P tested against the cocycle identity.
/// Capped at p^(|Pi| r) <= 10^6.
std::vector<linalg::Vec> enumerate_cocycles_oracle(const PGroupAction &action,
                                                   Exec exec = Exec::parallel);

} // namespace pembed
