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

#include <pembed/groups.hpp>

#include <pembed/errors.hpp>
#include <pembed/finite_field.hpp>
#include <pembed/kernels.hpp>
#include <pembed/ordered_group.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

namespace pembed {

FiniteGroup::FiniteGroup(std::vector<int> table,
                         std::vector<std::string> labels)
    : table_(std::move(table)), labels_(std::move(labels)) {
  int n = 0;
  while (n * n < static_cast<int>(table_.size()))
    ++n;
  if (n == 0 || n * n != static_cast<int>(table_.size()))
    throw InputError("group table must be square and nonempty");
  if (n > kMaxOrder)
    throw CapExceeded("group order " + std::to_string(n) + " exceeds 200");
  order_ = n;
  for (int x : table_)
    if (x < 0 || x >= n)
      throw InputError("group table entry out of range");

  identity_ = -1;
  for (int e = 0; e < n && identity_ < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      ok = mul(e, a) == a && mul(a, e) == a;
    if (ok)
      identity_ = e;
  }
  if (identity_ < 0)
    throw InputError("group table has no identity");

  inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (mul(a, b) == identity_ && mul(b, a) == identity_) {
        inverse_[a] = b;
        break;
      }
    if (inverse_[a] < 0)
      throw InputError("element " + std::to_string(a) + " has no inverse");
  }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int ab = mul(a, b);
      for (int c = 0; c < n; ++c)
        if (mul(ab, c) != mul(a, mul(b, c)))
          throw InputError("group table is not associative");
    }

  if (labels_.empty()) {
    for (int a = 0; a < n; ++a)
      labels_.push_back(std::to_string(a));
  } else if (static_cast<int>(labels_.size()) != n) {
    throw InputError("label count does not match group order");
  }
}

int FiniteGroup::pow(int a, std::int64_t e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  int out = identity_;
  for (std::int64_t i = 0; i < e % element_order(a); ++i)
    out = mul(out, a);
  return out;
}

int FiniteGroup::element_order(int a) const {
  int k = 1;
  for (int x = a; x != identity_; x = mul(x, a))
    ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a))
        return false;
  return true;
}

std::vector<int> FiniteGroup::generated_subgroup(std::span<const int> gens) const {
  std::vector<bool> seen(order_, false);
  std::vector<int> out{identity_};
  seen[identity_] = true;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (int g : gens) {
      const int y = mul(out[i], g);
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> FiniteGroup::generating_set() const {
  std::vector<int> gens;
  std::vector<int> span{identity_};
  for (int a = 0; a < order_ && static_cast<int>(span.size()) < order_; ++a) {
    if (std::binary_search(span.begin(), span.end(), a))
      continue;
    gens.push_back(a);
    span = generated_subgroup(gens);
  }
  return gens;
}

bool same_group(const GroupPtr &a, const GroupPtr &b) {
  return a == b || (a && b && *a == *b);
}

GroupPtr trivial_group() { return cyclic(1); }

GroupPtr cyclic(int n) {
  if (n < 1)
    throw InputError("cyclic group order must be >= 1");
  if (n > FiniteGroup::kMaxOrder)
    throw CapExceeded("group order exceeds 200");
  std::vector<int> table(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      table[a * n + b] = (a + b) % n;
  return std::make_shared<const FiniteGroup>(std::move(table));
}

GroupPtr symmetric(int n) {
  if (n < 1 || n > 5)
    throw InputError("symmetric group degree must be in 1..5");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do
    perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, int> index;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    index[perms[i]] = static_cast<int>(i);
    std::string s;
    for (int x : perms[i])
      s += std::to_string(x);
    labels.push_back(s);
  }
  const int order = static_cast<int>(perms.size());
  std::vector<int> table(order * order);
  std::vector<int> st(n);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      for (int i = 0; i < n; ++i)
        st[i] = perms[a][perms[b][i]];
      table[a * order + b] = index.at(st);
    }
  return std::make_shared<const FiniteGroup>(std::move(table), std::move(labels));
}

GroupPtr direct_product(const GroupPtr &a, const GroupPtr &b) {
  const int na = a->order(), nb = b->order();
  if (na * nb > FiniteGroup::kMaxOrder)
    throw CapExceeded("direct product order exceeds 200");
  const int n = na * nb;
  std::vector<int> table(n * n);
  std::vector<std::string> labels(n);
  for (int x = 0; x < n; ++x) {
    labels[x] = "(" + a->label(x / nb) + "," + b->label(x % nb) + ")";
    for (int y = 0; y < n; ++y)
      table[x * n + y] =
          a->mul(x / nb, y / nb) * nb + b->mul(x % nb, y % nb);
  }
  return std::make_shared<const FiniteGroup>(std::move(table), std::move(labels));
}

linalg::Vec index_to_vector(int index, std::int64_t p, int r) {
  linalg::Vec v(r);
  for (int j = 0; j < r; ++j) {
    v[j] = index % p;
    index = static_cast<int>(index / p);
  }
  return v;
}

int vector_to_index(const linalg::Vec &v, std::int64_t p) {
  std::int64_t idx = 0;
  for (std::size_t j = v.size(); j-- > 0;)
    idx = idx * p + floor_mod(v[j], p);
  return static_cast<int>(idx);
}

GroupPtr elementary_abelian(std::int64_t p, int r) {
  if (r < 0)
    throw InputError("rank must be >= 0");
  std::int64_t n = 1;
  for (int j = 0; j < r; ++j) {
    n *= p;
    if (n > FiniteGroup::kMaxOrder)
      throw CapExceeded("elementary abelian group order exceeds 200");
  }
  const int order = static_cast<int>(n);
  std::vector<int> table(order * order);
  std::vector<std::string> labels(order);
  for (int a = 0; a < order; ++a) {
    const auto va = index_to_vector(a, p, r);
    std::string s = "[";
    for (int j = 0; j < r; ++j)
      s += (j ? "," : "") + std::to_string(va[j]);
    labels[a] = s + "]";
    for (int b = 0; b < order; ++b) {
      auto vb = index_to_vector(b, p, r);
      for (int j = 0; j < r; ++j)
        vb[j] = (vb[j] + va[j]) % p;
      table[a * order + b] = vector_to_index(vb, p);
    }
  }
  return std::make_shared<const FiniteGroup>(std::move(table), std::move(labels));
}

GroupHom::GroupHom(GroupPtr domain, GroupPtr codomain, std::vector<int> map)
    : domain_(std::move(domain)), codomain_(std::move(codomain)),
      map_(std::move(map)) {
  if (!domain_ || !codomain_)
    throw InputError("homomorphism needs domain and codomain");
  const int n = domain_->order();
  if (static_cast<int>(map_.size()) != n)
    throw InputError("homomorphism map has wrong length");
  for (int x : map_)
    if (x < 0 || x >= codomain_->order())
      throw InputError("homomorphism image out of range");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (map_[domain_->mul(a, b)] != codomain_->mul(map_[a], map_[b]))
        throw InputError("map is not a homomorphism");
}

std::vector<int> extend_generator_images(const FiniteGroup &domain,
                                         const FiniteGroup &codomain,
                                         std::span<const int> gens,
                                         std::span<const int> images) {
  const int n = domain.order();
  std::vector<int> map(n, -1);
  map[domain.identity()] = codomain.identity();
  std::vector<int> queue{domain.identity()};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const int x = queue[i];
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const int y = domain.mul(x, gens[g]);
      const int img = codomain.mul(map[x], images[g]);
      if (map[y] < 0) {
        map[y] = img;
        queue.push_back(y);
      } else if (map[y] != img) {
        return {};
      }
    }
  }
  if (static_cast<int>(queue.size()) != n)
    return {};
  return map;
}

GroupHom GroupHom::from_generators(GroupPtr domain, GroupPtr codomain,
                                   std::span<const int> gens,
                                   std::span<const int> images) {
  if (gens.size() != images.size())
    throw InputError("generator and image counts differ");
  for (int g : gens)
    if (g < 0 || g >= domain->order())
      throw InputError("generator out of range");
  for (int g : images)
    if (g < 0 || g >= codomain->order())
      throw InputError("generator image out of range");
  auto map = extend_generator_images(*domain, *codomain, gens, images);
  if (map.empty())
    throw InputError(
        "generator images do not extend to a homomorphism of the domain");
  return GroupHom(std::move(domain), std::move(codomain), std::move(map));
}

GroupHom GroupHom::identity(GroupPtr g) {
  std::vector<int> map(g->order());
  std::iota(map.begin(), map.end(), 0);
  return GroupHom(g, g, std::move(map));
}

bool GroupHom::operator==(const GroupHom &o) const {
  return same_group(domain_, o.domain_) && same_group(codomain_, o.codomain_) &&
         map_ == o.map_;
}

GroupHom compose(const GroupHom &outer, const GroupHom &inner) {
  if (!same_group(inner.codomain(), outer.domain()))
    throw InputError("compose: codomain/domain mismatch");
  std::vector<int> map(inner.domain()->order());
  for (std::size_t a = 0; a < map.size(); ++a)
    map[a] = outer(inner(static_cast<int>(a)));
  return GroupHom(inner.domain(), outer.codomain(), std::move(map));
}

HomAnalysis hom_analysis(const GroupHom &h) {
  HomAnalysis out;
  const int e = h.codomain()->identity();
  std::vector<bool> hit(h.codomain()->order(), false);
  for (int a = 0; a < h.domain()->order(); ++a) {
    if (h(a) == e)
      out.kernel.push_back(a);
    hit[h(a)] = true;
  }
  for (int b = 0; b < h.codomain()->order(); ++b)
    if (hit[b])
      out.image.push_back(b);
  out.is_epi = static_cast<int>(out.image.size()) == h.codomain()->order();
  out.is_iso = out.is_epi && out.kernel.size() == 1;
  return out;
}

std::vector<GroupHom> all_homomorphisms(const GroupPtr &domain,
                                        const GroupPtr &codomain) {
  const auto gens = domain->generating_set();
  std::vector<std::vector<int>> candidates;
  for (int g : gens) {
    const int ord = domain->element_order(g);
    std::vector<int> c;
    for (int b = 0; b < codomain->order(); ++b)
      if (ord % codomain->element_order(b) == 0)
        c.push_back(b);
    candidates.push_back(std::move(c));
  }
  std::vector<GroupHom> out;
  for (auto &map : kernels::enumerate_hom_maps(*domain, *codomain, gens,
                                               candidates, Exec::parallel))
    out.emplace_back(domain, codomain, std::move(map));
  return out;
}

Matrix identity_matrix(int r) {
  Matrix m(r, linalg::Vec(r, 0));
  for (int i = 0; i < r; ++i)
    m[i][i] = 1;
  return m;
}

Matrix mat_mul(const Matrix &a, const Matrix &b, std::int64_t p) {
  const std::size_t r = a.size();
  Matrix out(r, linalg::Vec(r, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < r; ++k) {
      if (a[i][k] == 0)
        continue;
      for (std::size_t j = 0; j < r; ++j)
        out[i][j] = (out[i][j] + a[i][k] * b[k][j]) % p;
    }
  return out;
}

PGroupAction::PGroupAction(GroupPtr acting, std::int64_t p, int r,
                           std::vector<Matrix> matrices)
    : acting_(std::move(acting)), p_(p), r_(r), matrices_(std::move(matrices)) {
  if (!acting_)
    throw InputError("action needs an acting group");
  if (!is_prime(p_))
    throw InputError("action modulus must be prime");
  if (r_ < 0)
    throw InputError("module rank must be >= 0");
  if (static_cast<int>(matrices_.size()) != acting_->order())
    throw InputError("need one matrix per group element");
  for (auto &m : matrices_) {
    if (static_cast<int>(m.size()) != r_)
      throw InputError("action matrix has wrong size");
    for (auto &row : m) {
      if (static_cast<int>(row.size()) != r_)
        throw InputError("action matrix has wrong size");
      for (auto &x : row)
        x = floor_mod(x, p_);
    }
  }
  if (matrices_[acting_->identity()] != identity_matrix(r_))
    throw InputError("identity must act trivially");
  const int n = acting_->order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (matrices_[acting_->mul(a, b)] !=
          mat_mul(matrices_[a], matrices_[b], p_))
        throw InputError("matrices do not respect the group law");
  module_ = elementary_abelian(p_, r_);
}

PGroupAction PGroupAction::trivial(GroupPtr acting, std::int64_t p, int r) {
  std::vector<Matrix> mats(acting->order(), identity_matrix(r));
  return PGroupAction(std::move(acting), p, r, std::move(mats));
}

PGroupAction PGroupAction::from_generators(GroupPtr acting, std::int64_t p,
                                           int r, std::span<const int> gens,
                                           const std::vector<Matrix> &gen_matrices) {
  if (gens.size() != gen_matrices.size())
    throw InputError("generator and matrix counts differ");
  const int n = acting->order();
  std::vector<Matrix> mats(n);
  std::vector<bool> seen(n, false);
  mats[acting->identity()] = identity_matrix(r);
  seen[acting->identity()] = true;
  std::vector<int> queue{acting->identity()};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const int y = acting->mul(queue[i], gens[g]);
      if (!seen[y]) {
        seen[y] = true;
        mats[y] = mat_mul(mats[queue[i]], gen_matrices[g], p);
        queue.push_back(y);
      }
    }
  if (static_cast<int>(queue.size()) != n)
    throw InputError("generators do not generate the acting group");
  return PGroupAction(std::move(acting), p, r, std::move(mats));
}

PGroupAction PGroupAction::pulled_back(const GroupHom &h) const {
  if (!same_group(h.codomain(), acting_))
    throw InputError("pull-back along a map into another group");
  std::vector<Matrix> mats;
  for (int s = 0; s < h.domain()->order(); ++s)
    mats.push_back(matrices_[h(s)]);
  return PGroupAction(h.domain(), p_, r_, std::move(mats));
}

linalg::Vec PGroupAction::apply(int s, const linalg::Vec &v) const {
  const Matrix &m = matrices_[s];
  linalg::Vec out(r_, 0);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < r_; ++j)
      out[i] = (out[i] + m[i][j] * v[j]) % p_;
  return out;
}

SemidirectProduct semidirect(const PGroupAction &action) {
  const GroupPtr &G = action.acting();
  const GroupPtr &P = action.module();
  const int np = P->order(), ng = G->order();
  if (np * ng > FiniteGroup::kMaxOrder)
    throw CapExceeded("semidirect product order exceeds 200");
  const int n = np * ng;
  const std::int64_t p = action.p();
  const int r = action.r();
  std::vector<int> table(n * n);
  std::vector<std::string> labels(n);
  for (int x = 0; x < n; ++x) {
    const int v = x / ng, g = x % ng;
    labels[x] = "(" + P->label(v) + "," + G->label(g) + ")";
    for (int y = 0; y < n; ++y) {
      const int w = y / ng, h = y % ng;
      const auto gw = action.apply(g, index_to_vector(w, p, r));
      const int vw = P->mul(v, vector_to_index(gw, p));
      table[x * n + y] = vw * ng + G->mul(g, h);
    }
  }
  auto group =
      std::make_shared<const FiniteGroup>(std::move(table), std::move(labels));
  std::vector<int> iota(np), pi(n), section(ng);
  for (int v = 0; v < np; ++v)
    iota[v] = v * ng + G->identity();
  for (int x = 0; x < n; ++x)
    pi[x] = x % ng;
  for (int g = 0; g < ng; ++g)
    section[g] = P->identity() * ng + g;
  return SemidirectProduct{P, group, GroupHom(P, group, std::move(iota)),
                           GroupHom(group, G, std::move(pi)),
                           GroupHom(G, group, std::move(section))};
}

FiberPower fiber_power(const GroupHom &f, int n) {
  if (n < 1)
    throw InputError("fiber power exponent must be >= 1");
  const auto info = hom_analysis(f);
  if (!info.is_epi)
    throw InputError("fiber power needs an epimorphism");
  const FiniteGroup &Gamma = *f.domain();
  const GroupPtr &G = f.codomain();
  std::int64_t size = G->order();
  for (int i = 0; i < n; ++i) {
    size *= static_cast<std::int64_t>(info.kernel.size());
    if (size > FiniteGroup::kMaxOrder)
      throw CapExceeded("fiber power order exceeds 200");
  }

  std::vector<std::vector<int>> fibers(G->order());
  for (int a = 0; a < Gamma.order(); ++a)
    fibers[f(a)].push_back(a);
  std::vector<std::vector<int>> tuples;
  for (const auto &fiber : fibers) {
    std::vector<std::size_t> odo(n, 0);
    while (true) {
      std::vector<int> t(n);
      for (int i = 0; i < n; ++i)
        t[i] = fiber[odo[i]];
      tuples.push_back(std::move(t));
      int i = n - 1;
      while (i >= 0 && ++odo[i] == fiber.size())
        odo[i--] = 0;
      if (i < 0)
        break;
    }
  }
  std::sort(tuples.begin(), tuples.end());
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < tuples.size(); ++i)
    index.emplace(tuples[i], static_cast<int>(i));

  const int order = static_cast<int>(tuples.size());
  std::vector<int> table(order * order);
  std::vector<std::string> labels(order);
  std::vector<int> prod(n);
  for (int x = 0; x < order; ++x) {
    std::string s = "(";
    for (int i = 0; i < n; ++i)
      s += (i ? "," : "") + Gamma.label(tuples[x][i]);
    labels[x] = s + ")";
    for (int y = 0; y < order; ++y) {
      for (int i = 0; i < n; ++i)
        prod[i] = Gamma.mul(tuples[x][i], tuples[y][i]);
      table[x * order + y] = index.at(prod);
    }
  }
  auto group =
      std::make_shared<const FiniteGroup>(std::move(table), std::move(labels));

  std::vector<int> fn(order);
  for (int x = 0; x < order; ++x)
    fn[x] = f(tuples[x][0]);
  std::vector<GroupHom> projections;
  for (int i = 0; i < n; ++i) {
    std::vector<int> pr(order);
    for (int x = 0; x < order; ++x)
      pr[x] = tuples[x][i];
    projections.emplace_back(group, f.domain(), std::move(pr));
  }
  return FiberPower{group, GroupHom(group, G, std::move(fn)),
                    std::move(projections), std::move(tuples)};
}

} // namespace pembed
