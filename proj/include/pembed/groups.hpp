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

#include <pembed/linalg.hpp>

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace pembed {

/// Finite group given by its full multiplication table on indices
/// 0..order-1. Associativity, identity and inverses are checked when the
/// table is built, so every instance is a valid group.
class FiniteGroup {
public:
  static constexpr int kMaxOrder = 200;

  // Row-major table: table[a * order + b] = a * b.
  explicit FiniteGroup(std::vector<int> table,
                       std::vector<std::string> labels = {});

  int order() const { return order_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[a * order_ + b]; }
  int inv(int a) const { return inverse_[a]; }
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }
  int pow(int a, std::int64_t e) const;
  int element_order(int a) const;
  bool is_abelian() const;

  const std::vector<int> &table() const { return table_; }
  const std::vector<std::string> &labels() const { return labels_; }
  const std::string &label(int a) const { return labels_[a]; }

  // Sorted element list of <gens>.
  std::vector<int> generated_subgroup(std::span<const int> gens) const;
  // Greedy: repeatedly adds the smallest element outside the current span.
  std::vector<int> generating_set() const;

  bool operator==(const FiniteGroup &o) const { return table_ == o.table_; }

private:
  int order_ = 0;
  int identity_ = 0;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::vector<std::string> labels_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

bool same_group(const GroupPtr &a, const GroupPtr &b);

GroupPtr trivial_group();
GroupPtr cyclic(int n);
// Permutations of {0..n-1} in lexicographic order, composed right to left:
// (s t)(i) = s(t(i)). n <= 5.
GroupPtr symmetric(int n);
// Pairs (a, b) indexed a * |B| + b.
GroupPtr direct_product(const GroupPtr &a, const GroupPtr &b);
// (Z/p)^r, vector v indexed sum_j v_j p^j.
GroupPtr elementary_abelian(std::int64_t p, int r);

linalg::Vec index_to_vector(int index, std::int64_t p, int r);
int vector_to_index(const linalg::Vec &v, std::int64_t p);

class GroupHom {
public:
  // Verified on every pair of domain elements.
  GroupHom(GroupPtr domain, GroupPtr codomain, std::vector<int> map);

  // Closes generator images over products; throws InputError if the images
  // do not define a homomorphism or gens do not generate the domain.
  static GroupHom from_generators(GroupPtr domain, GroupPtr codomain,
                                  std::span<const int> gens,
                                  std::span<const int> images);
  static GroupHom identity(GroupPtr g);

  const GroupPtr &domain() const { return domain_; }
  const GroupPtr &codomain() const { return codomain_; }
  const std::vector<int> &map() const { return map_; }
  int operator()(int a) const { return map_[a]; }

  bool operator==(const GroupHom &o) const;

private:
  GroupPtr domain_, codomain_;
  std::vector<int> map_;
};

// outer o inner
GroupHom compose(const GroupHom &outer, const GroupHom &inner);

struct HomAnalysis {
  std::vector<int> kernel;
  std::vector<int> image;
  bool is_epi = false;
  bool is_iso = false;
};

HomAnalysis hom_analysis(const GroupHom &h);

/// Maps from a Cayley-graph closure over `gens`: returns the full element map
/// or an empty vector if the generator images are inconsistent.
std::vector<int> extend_generator_images(const FiniteGroup &domain,
                                         const FiniteGroup &codomain,
                                         std::span<const int> gens,
                                         std::span<const int> images);

/// All homomorphisms domain -> codomain, ordered lexicographically by the
/// images of domain.generating_set().
std::vector<GroupHom> all_homomorphisms(const GroupPtr &domain,
                                        const GroupPtr &codomain);

using Matrix = std::vector<linalg::Vec>;

/// Linear action of a finite group on P = (Z/p)^r: one r x r matrix over Z/p
/// per group element, with rho(gh) = rho(g) rho(h) checked on all pairs.
class PGroupAction {
public:
  PGroupAction(GroupPtr acting, std::int64_t p, int r,
               std::vector<Matrix> matrices);

  static PGroupAction trivial(GroupPtr acting, std::int64_t p, int r);
  static PGroupAction from_generators(GroupPtr acting, std::int64_t p, int r,
                                      std::span<const int> gens,
                                      const std::vector<Matrix> &gen_matrices);
  // rho o h for h: other -> acting.
  PGroupAction pulled_back(const GroupHom &h) const;

  const GroupPtr &acting() const { return acting_; }
  std::int64_t p() const { return p_; }
  int r() const { return r_; }
  const Matrix &matrix(int s) const { return matrices_[s]; }
  const std::vector<Matrix> &matrices() const { return matrices_; }
  // The module P as a group, in vector_to_index order.
  const GroupPtr &module() const { return module_; }

  linalg::Vec apply(int s, const linalg::Vec &v) const;

private:
  GroupPtr acting_;
  std::int64_t p_;
  int r_;
  std::vector<Matrix> matrices_;
  GroupPtr module_;
};

Matrix identity_matrix(int r);
Matrix mat_mul(const Matrix &a, const Matrix &b, std::int64_t p);

/// P x| G with (v, g)(w, h) = (v + rho(g) w, gh); element (v, g) has index
/// index(v) * |G| + g.
struct SemidirectProduct {
  GroupPtr module;
  GroupPtr group;
  GroupHom iota;    // P -> group
  GroupHom pi;      // group -> G
  GroupHom section; // G -> group, pi o section = id
};

SemidirectProduct semidirect(const PGroupAction &action);

/// n-fold fiber product of f: Gamma -> G: tuples with equal image under f,
/// sorted lexicographically, multiplied componentwise.
struct FiberPower {
  GroupPtr group;
  GroupHom fn;                         // tuple -> f(first entry)
  std::vector<GroupHom> projections;   // pr_1..pr_n
  std::vector<std::vector<int>> tuples; // element index -> tuple
};

FiberPower fiber_power(const GroupHom &f, int n);

} // namespace pembed
