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

#include <pembed/embedding.hpp>

#include <pembed/errors.hpp>
#include <pembed/kernels.hpp>

#include <algorithm>
#include <map>
#include <set>

namespace pembed {

namespace {

// Prime p with n = p^k, k >= 1, if any.
std::optional<std::int64_t> prime_power_base(std::int64_t n) {
  if (n < 2)
    return std::nullopt;
  std::int64_t p = 2;
  while (n % p != 0)
    ++p;
  while (n % p == 0)
    n /= p;
  if (n != 1)
    return std::nullopt;
  return p;
}

std::vector<std::vector<int>> lift_candidates(const EmbeddingProblem &problem,
                                              std::span<const int> gens) {
  std::vector<std::vector<int>> out;
  for (int s : gens) {
    std::vector<int> c;
    for (int g = 0; g < problem.gamma()->order(); ++g)
      if (problem.f()(g) == problem.alpha()(s))
        c.push_back(g);
    out.push_back(std::move(c));
  }
  return out;
}

} // namespace

EmbeddingProblem::EmbeddingProblem(GroupHom alpha, GroupHom f)
    : alpha_(std::move(alpha)), f_(std::move(f)) {
  if (!same_group(alpha_.codomain(), f_.codomain()))
    throw InputError("alpha and f must share the codomain G");
  if (!hom_analysis(alpha_).is_epi)
    throw InputError("alpha is not surjective");
  const auto fa = hom_analysis(f_);
  if (!fa.is_epi)
    throw InputError("f is not surjective");
  kernel_ = fa.kernel;

  if (kernel_.size() == 1) {
    is_p_problem_ = true;
  } else {
    p_ = prime_power_base(static_cast<std::int64_t>(kernel_.size()));
    is_p_problem_ = p_.has_value();
  }

  // Section search: G -> Gamma with each generator sent into its fiber.
  const FiniteGroup &G = *g();
  const auto gens = G.generating_set();
  std::vector<std::vector<int>> candidates;
  for (int s : gens) {
    std::vector<int> c;
    for (int x = 0; x < gamma()->order(); ++x)
      if (f_(x) == s)
        c.push_back(x);
    candidates.push_back(std::move(c));
  }
  auto maps = kernels::enumerate_hom_maps(G, *gamma(), gens, candidates,
                                          Exec::serial);
  if (!maps.empty())
    section_.emplace(g(), gamma(), std::move(maps.front()));
}

EmbeddingProblem make_problem(GroupHom alpha, GroupHom f) {
  return EmbeddingProblem(std::move(alpha), std::move(f));
}

bool is_weak_solution(const EmbeddingProblem &problem, const GroupHom &beta) {
  if (!same_group(beta.domain(), problem.pi()) ||
      !same_group(beta.codomain(), problem.gamma()))
    return false;
  for (int s = 0; s < problem.pi()->order(); ++s)
    if (problem.f()(beta(s)) != problem.alpha()(s))
      return false;
  return true;
}

bool is_proper(const GroupHom &beta) { return hom_analysis(beta).is_epi; }

std::vector<GroupHom> weak_solutions(const EmbeddingProblem &problem,
                                     Exec exec) {
  const auto gens = problem.pi()->generating_set();
  std::uint64_t space = 1;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    space *= static_cast<std::uint64_t>(problem.gamma()->order());
    if (space > kMaxSolutionSearch)
      throw CapExceeded("weak solution search exceeds |Gamma|^g <= 10^7");
  }
  const auto candidates = lift_candidates(problem, gens);
  std::vector<GroupHom> out;
  for (auto &map : kernels::enumerate_hom_maps(*problem.pi(), *problem.gamma(),
                                               gens, candidates, exec)) {
    out.emplace_back(problem.pi(), problem.gamma(), std::move(map));
    if (!is_weak_solution(problem, out.back()))
      throw InputError("enumerated map is not a weak solution"); // unreachable
  }
  return out;
}

bool equivalent(const EmbeddingProblem &problem, const GroupHom &beta,
                const GroupHom &beta2) {
  const FiniteGroup &Gamma = *problem.gamma();
  for (int x : problem.kernel()) {
    bool all = true;
    for (int s = 0; s < problem.pi()->order() && all; ++s)
      all = beta2(s) == Gamma.conj(x, beta(s));
    if (all)
      return true;
  }
  return false;
}

SolutionClassification classify_solutions(const EmbeddingProblem &problem,
                                          Exec exec) {
  SolutionClassification out;
  out.solutions = weak_solutions(problem, exec);
  const std::size_t n = out.solutions.size();
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < n; ++i) {
    index.emplace(out.solutions[i].map(), static_cast<int>(i));
    out.proper.push_back(is_proper(out.solutions[i]));
  }

  // Classes are inn(P)-orbits.
  const FiniteGroup &Gamma = *problem.gamma();
  out.class_of.assign(n, -1);
  std::vector<int> conj(problem.pi()->order());
  for (std::size_t i = 0; i < n; ++i) {
    if (out.class_of[i] >= 0)
      continue;
    const int id = static_cast<int>(out.classes.size());
    out.classes.emplace_back();
    for (int x : problem.kernel()) {
      for (std::size_t s = 0; s < conj.size(); ++s)
        conj[s] = Gamma.conj(x, out.solutions[i](static_cast<int>(s)));
      const int j = index.at(conj);
      if (out.class_of[j] < 0) {
        out.class_of[j] = id;
        out.classes[id].push_back(j);
      }
    }
    std::sort(out.classes[id].begin(), out.classes[id].end());
    out.representatives.push_back(out.classes[id].front());
    for (int j : out.classes[id])
      if (out.proper[j] != out.proper[i])
        throw InputError("properness differs inside a class"); // unreachable
  }
  return out;
}

TorsorReport torsor_check(const EmbeddingProblem &problem,
                          const GroupHom &theta, Exec exec) {
  if (!is_weak_solution(problem, theta))
    throw InputError("theta is not a weak solution");
  const KernelModule km = action_from_problem(problem);
  const CocycleSpace cs(km.action);
  const auto cls = classify_solutions(problem, exec);
  const FiniteGroup &Gamma = *problem.gamma();
  const int n = problem.pi()->order();
  const int r = cs.r();

  TorsorReport rep;
  rep.solutions = cls.solutions.size();
  rep.classes = cls.classes.size();
  rep.dim_z1 = cs.dim_z1();
  rep.dim_b1 = cs.dim_b1();
  rep.dim_h1 = cs.dim_h1();
  rep.h1_order = cs.h1_order();
  rep.p = cs.p();
  rep.r = r;

  std::vector<linalg::Vec> image(cls.solutions.size());
  rep.differences_are_cocycles = true;
  for (std::size_t i = 0; i < cls.solutions.size(); ++i) {
    const GroupHom &beta = cls.solutions[i];
    linalg::Vec d(static_cast<std::size_t>(n) * r);
    for (int s = 0; s < n; ++s) {
      const auto &c = km.coordinates(Gamma.mul(beta(s), Gamma.inv(theta(s))));
      std::copy(c.begin(), c.end(), d.begin() + static_cast<std::ptrdiff_t>(s) * r);
    }
    if (cs.is_cocycle(d)) {
      image[i] = cs.h1_representative(d);
    } else {
      rep.differences_are_cocycles = false;
      image[i] = d;
    }
  }

  rep.class_map_well_defined = true;
  for (const auto &members : cls.classes) {
    for (int j : members)
      if (image[j] != image[members.front()])
        rep.class_map_well_defined = false;
    rep.class_images.push_back(image[members.front()]);
  }
  const std::set<linalg::Vec> distinct(rep.class_images.begin(),
                                       rep.class_images.end());
  rep.injective = distinct.size() == rep.class_images.size();
  rep.surjective = distinct.size() == rep.h1_order;

  std::uint64_t z1 = 1;
  for (std::size_t i = 0; i < rep.dim_z1; ++i)
    z1 *= static_cast<std::uint64_t>(rep.p);
  rep.solutions_match_cocycles = z1 == rep.solutions;
  return rep;
}

FiberProblem fiber_problem(const EmbeddingProblem &problem, int n) {
  FiberPower power = fiber_power(problem.f(), n);
  EmbeddingProblem en(problem.alpha(), power.fn);
  return FiberProblem{problem, std::move(power), std::move(en)};
}

ProjectionReport projection_solutions(const FiberProblem &fp,
                                      const GroupHom &beta) {
  if (fp.base.kernel().size() < 2)
    throw InputError("projection construction needs a nontrivial kernel");
  if (!is_weak_solution(fp.problem, beta) || !is_proper(beta))
    throw InputError("beta is not a proper solution of the fiber problem");
  ProjectionReport rep;
  for (const auto &pr : fp.power.projections) {
    rep.projections.push_back(compose(pr, beta));
    rep.weak.push_back(is_weak_solution(fp.base, rep.projections.back()));
    rep.proper.push_back(is_proper(rep.projections.back()));
  }
  const int n = static_cast<int>(rep.projections.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (equivalent(fp.base, rep.projections[i], rep.projections[j]))
        rep.equivalent_pairs.emplace_back(i, j);
  return rep;
}

DominationReport projection_evidence(const EmbeddingProblem &problem, int n) {
  const FiberPower power = fiber_power(problem.f(), n);
  const EmbeddingProblem lifted(power.fn, problem.f());
  const FiberProblem fp = fiber_problem(lifted, n);
  std::vector<int> id(power.group->order());
  for (std::size_t i = 0; i < id.size(); ++i)
    id[i] = static_cast<int>(i);
  const GroupHom beta(power.group, fp.problem.gamma(), std::move(id));

  DominationReport rep;
  rep.n = n;
  rep.pi_order = power.group->order();
  rep.kernel_order = static_cast<int>(problem.kernel().size());
  rep.projections = projection_solutions(fp, beta);

  const KernelModule km = action_from_problem(lifted);
  const CocycleSpace cs(km.action);
  rep.p = cs.p();
  rep.r = cs.r();
  rep.dim_z1 = cs.dim_z1();
  rep.dim_b1 = cs.dim_b1();
  rep.dim_h1 = cs.dim_h1();
  rep.h1_order = cs.h1_order();
  return rep;
}

DominationReport domination_evidence(const PGroupAction &action, int n) {
  if (action.r() < 1)
    throw InputError("domination evidence needs a nontrivial module");
  const SemidirectProduct sd = semidirect(action);
  const EmbeddingProblem base(GroupHom::identity(action.acting()), sd.pi);
  return projection_evidence(base, n);
}

} // namespace pembed
