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

#include <pembed/cohomology.hpp>
#include <pembed/groups.hpp>
#include <pembed/parallel.hpp>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace pembed {

/// Finite embedding problem (alpha: Pi -> G, f: Gamma -> G), both
/// surjective, with kernel P = ker(f).
class EmbeddingProblem {
public:
  EmbeddingProblem(GroupHom alpha, GroupHom f);

  const GroupHom &alpha() const { return alpha_; }
  const GroupHom &f() const { return f_; }
  const GroupPtr &pi() const { return alpha_.domain(); }
  const GroupPtr &gamma() const { return f_.domain(); }
  const GroupPtr &g() const { return f_.codomain(); }

  const std::vector<int> &kernel() const { return kernel_; }
  // A section f' with f f' = id_G, if any exists.
  const std::optional<GroupHom> &section() const { return section_; }
  bool is_split() const { return section_.has_value(); }
  // |P| is a prime power. A trivial kernel counts, with p() empty.
  bool is_p_problem() const { return is_p_problem_; }
  std::optional<std::int64_t> p() const { return p_; }

private:
  GroupHom alpha_, f_;
  std::vector<int> kernel_;
  std::optional<GroupHom> section_;
  bool is_p_problem_ = false;
  std::optional<std::int64_t> p_;
};

EmbeddingProblem make_problem(GroupHom alpha, GroupHom f);

inline constexpr std::uint64_t kMaxSolutionSearch = 10'000'000;

/// All beta: Pi -> Gamma with f beta = alpha, ordered lexicographically by
/// the images of pi().generating_set(). Capped at |Gamma|^g <= 10^7.
std::vector<GroupHom> weak_solutions(const EmbeddingProblem &problem,
                                     Exec exec = Exec::parallel);

bool is_weak_solution(const EmbeddingProblem &problem, const GroupHom &beta);
bool is_proper(const GroupHom &beta);

/// beta' = inn(x) o beta for some x in P.
bool equivalent(const EmbeddingProblem &problem, const GroupHom &beta,
                const GroupHom &beta2);

struct SolutionClassification {
  std::vector<GroupHom> solutions;
  std::vector<bool> proper;
  std::vector<int> class_of;                // solution -> class id
  std::vector<std::vector<int>> classes;    // ordered by smallest member
  std::vector<int> representatives;         // smallest member of each class
};

SolutionClassification classify_solutions(const EmbeddingProblem &problem,
                                          Exec exec = Exec::parallel);

/// Difference-cocycle comparison of WS(E) with H^1(Pi, P) relative to a
/// chosen weak solution theta: beta maps to s -> beta(s) theta(s)^-1.
struct TorsorReport {
  std::size_t solutions = 0;
  std::size_t classes = 0;
  std::size_t dim_z1 = 0;
  std::size_t dim_b1 = 0;
  std::size_t dim_h1 = 0;
  std::uint64_t h1_order = 0;
  std::int64_t p = 0;
  int r = 0;
  bool differences_are_cocycles = false;
  bool class_map_well_defined = false;
  bool injective = false;
  bool surjective = false;
  // |weak solutions| = |Z^1|.
  bool solutions_match_cocycles = false;
  // H^1 representative of each class, in class order.
  std::vector<linalg::Vec> class_images;

  bool bijective() const { return class_map_well_defined && injective && surjective; }
  bool ok() const {
    return differences_are_cocycles && bijective() &&
           solutions_match_cocycles && classes == h1_order;
  }
};

TorsorReport torsor_check(const EmbeddingProblem &problem,
                          const GroupHom &theta, Exec exec = Exec::parallel);

/// E_n = (alpha, f_n: Gamma_G^n -> G) together with the fiber power data.
struct FiberProblem {
  EmbeddingProblem base;
  FiberPower power;
  EmbeddingProblem problem;
};

FiberProblem fiber_problem(const EmbeddingProblem &problem, int n);

struct ProjectionReport {
  std::vector<GroupHom> projections; // pr_i o beta
  std::vector<bool> weak;            // f o beta_i = alpha
  std::vector<bool> proper;
  std::vector<std::pair<int, int>> equivalent_pairs;

  bool pairwise_inequivalent() const { return equivalent_pairs.empty(); }
};

/// Throws InputError unless beta is a proper solution of E_n and |P| > 1.
ProjectionReport projection_solutions(const FiberProblem &fp,
                                      const GroupHom &beta);

/// Finite-scale evidence that H^1 grows with n: for Pi = Gamma_G^n,
/// alpha = f_n and beta = id on E_n, the n projections are pairwise
/// inequivalent weak solutions of (f_n, f), and |H^1(Pi, P)| >= n.
struct DominationReport {
  int n = 0;
  int pi_order = 0;
  int kernel_order = 0;
  std::int64_t p = 0;
  int r = 0;
  ProjectionReport projections;
  std::size_t dim_z1 = 0;
  std::size_t dim_b1 = 0;
  std::size_t dim_h1 = 0;
  std::uint64_t h1_order = 0;

  bool inequality_holds() const {
    return h1_order >= static_cast<std::uint64_t>(n);
  }
  bool ok() const {
    return projections.pairwise_inequivalent() && inequality_holds();
  }
};

DominationReport projection_evidence(const EmbeddingProblem &problem, int n);

/// Builds Gamma = P x| G from the action and runs projection_evidence on
/// (id_G, pi).
DominationReport domination_evidence(const PGroupAction &action, int n);

} // namespace pembed
