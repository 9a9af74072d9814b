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

#include <pembed/cohomology.hpp>

#include <pembed/embedding.hpp>
#include <pembed/errors.hpp>
#include <pembed/kernels.hpp>
#include <pembed/ordered_group.hpp>

namespace pembed {

const linalg::Vec &KernelModule::coordinates(int gamma) const {
  auto it = coords.find(gamma);
  if (it == coords.end())
    throw InputError("element is not in the kernel");
  return it->second;
}

int KernelModule::element(const linalg::Vec &v) const {
  for (const auto &[g, c] : coords)
    if (c == v)
      return g;
  throw InputError("coordinate vector outside the module");
}

KernelModule action_from_problem(const EmbeddingProblem &problem) {
  const FiniteGroup &Gamma = *problem.gamma();
  const GroupHom &f = problem.f();
  const std::vector<int> &kernel = problem.kernel();

  for (std::size_t i = 0; i < kernel.size(); ++i)
    for (std::size_t j = i + 1; j < kernel.size(); ++j)
      if (Gamma.mul(kernel[i], kernel[j]) != Gamma.mul(kernel[j], kernel[i]))
        throw InputError(
            "kernel is not abelian; conjugation action is not defined");

  std::int64_t p = problem.p().value_or(2);
  if (!problem.is_p_problem())
    throw InputError("kernel is not a p-group");
  for (int x : kernel)
    if (x != Gamma.identity() && Gamma.element_order(x) != p)
      throw InputError("kernel is not elementary abelian");

  // Greedy basis with coordinates grown one generator at a time.
  std::vector<int> basis;
  std::map<int, linalg::Vec> span{{Gamma.identity(), {}}};
  for (int x : kernel) {
    if (span.count(x))
      continue;
    basis.push_back(x);
    std::map<int, linalg::Vec> next;
    for (const auto &[y, cy] : span) {
      int yb = y;
      for (std::int64_t c = 0; c < p; ++c) {
        linalg::Vec cv = cy;
        cv.push_back(c);
        next.emplace(yb, std::move(cv));
        yb = Gamma.mul(yb, x);
      }
    }
    span = std::move(next);
  }
  const int r = static_cast<int>(basis.size());

  // rho(g) from conjugation by each lift of g; every lift must agree.
  const FiniteGroup &G = *problem.g();
  std::vector<Matrix> g_mats(G.order());
  std::vector<bool> have(G.order(), false);
  for (int gamma = 0; gamma < Gamma.order(); ++gamma) {
    Matrix m(r, linalg::Vec(r, 0));
    for (int j = 0; j < r; ++j) {
      const auto &col = span.at(Gamma.conj(gamma, basis[j]));
      for (int i = 0; i < r; ++i)
        m[i][j] = col[i];
    }
    const int g = f(gamma);
    if (!have[g]) {
      g_mats[g] = std::move(m);
      have[g] = true;
    } else if (g_mats[g] != m) {
      throw InputError("conjugation action depends on the chosen lift");
    }
  }
  PGroupAction on_g(problem.g(), p, r, std::move(g_mats));
  return KernelModule{on_g.pulled_back(problem.alpha()), std::move(basis),
                      std::move(span)};
}

bool is_cocycle(const PGroupAction &action, const linalg::Vec &c) {
  const FiniteGroup &Pi = *action.acting();
  const int n = Pi.order(), r = action.r();
  const std::int64_t p = action.p();
  if (c.size() != static_cast<std::size_t>(n) * r)
    throw InputError("cocycle vector has wrong length");
  linalg::Vec ct(r);
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      for (int j = 0; j < r; ++j)
        ct[j] = c[t * r + j];
      const auto moved = action.apply(s, ct);
      const int st = Pi.mul(s, t);
      for (int j = 0; j < r; ++j)
        if (floor_mod(c[s * r + j] + moved[j] - c[st * r + j], p) != 0)
          return false;
    }
  return true;
}

CocycleSpace::CocycleSpace(PGroupAction action)
    : action_(std::move(action)),
      b1_(action_.p(), static_cast<std::size_t>(action_.acting()->order()) *
                           action_.r()) {
  const FiniteGroup &Pi = *action_.acting();
  const int n = Pi.order(), r = action_.r();
  const std::int64_t p = action_.p();
  const std::size_t unknowns = static_cast<std::size_t>(n) * r;
  if (unknowns > kMaxUnknowns)
    throw CapExceeded("cocycle system has more than 2000 unknowns");

  // c(st) - c(s) - rho(s) c(t) = 0 for s in a generating set plus the
  // identity and all t; the identity equations force c(1) = 0, and the set
  // of s satisfying the identity for all t is closed under products.
  std::vector<int> left = Pi.generating_set();
  left.push_back(Pi.identity());
  linalg::RowEchelon eqs(p, unknowns);
  for (int s : left) {
    const Matrix &m = action_.matrix(s);
    for (int t = 0; t < n; ++t) {
      const int st = Pi.mul(s, t);
      for (int i = 0; i < r; ++i) {
        linalg::Vec row(unknowns, 0);
        row[st * r + i] += 1;
        row[s * r + i] -= 1;
        for (int j = 0; j < r; ++j)
          row[t * r + j] -= m[i][j];
        eqs.insert(std::move(row));
      }
    }
  }
  z1_basis_ = eqs.nullspace();

  for (int j = 0; j < r; ++j) {
    linalg::Vec v(r, 0);
    v[j] = 1;
    b1_.insert(coboundary(v));
  }

  linalg::RowEchelon quotient = b1_;
  for (const auto &z : z1_basis_)
    if (quotient.insert(z))
      complement_.push_back(b1_.reduce(z));
  if (complement_.size() != dim_h1())
    throw InputError("coboundaries are not contained in the cocycles"); // unreachable
}

linalg::Vec CocycleSpace::coboundary(const linalg::Vec &v) const {
  const int n = action_.acting()->order(), r = action_.r();
  linalg::Vec c(static_cast<std::size_t>(n) * r);
  for (int s = 0; s < n; ++s) {
    const auto sv = action_.apply(s, v);
    for (int j = 0; j < r; ++j)
      c[s * r + j] = floor_mod(sv[j] - v[j], action_.p());
  }
  return c;
}

std::uint64_t CocycleSpace::h1_order() const {
  std::int64_t out = 1;
  for (std::size_t i = 0; i < dim_h1(); ++i)
    out = checked_mul(out, p());
  return static_cast<std::uint64_t>(out);
}

bool CocycleSpace::is_cocycle(const linalg::Vec &c) const {
  return pembed::is_cocycle(action_, c);
}

linalg::Vec CocycleSpace::h1_representative(const linalg::Vec &c) const {
  if (!is_cocycle(c))
    throw InputError("not a cocycle");
  return b1_.reduce(c);
}

std::vector<linalg::Vec>
CocycleSpace::h1_representatives(std::uint64_t cap) const {
  if (h1_order() > cap)
    throw CapExceeded("too many H^1 classes to list");
  std::vector<linalg::Vec> out;
  const std::size_t d = complement_.size();
  linalg::Vec coeff(d, 0);
  const std::size_t len = b1_.dim();
  for (std::uint64_t t = 0; t < h1_order(); ++t) {
    std::uint64_t rest = t;
    for (std::size_t i = 0; i < d; ++i) {
      coeff[i] = static_cast<std::int64_t>(rest % static_cast<std::uint64_t>(p()));
      rest /= static_cast<std::uint64_t>(p());
    }
    linalg::Vec v = d ? linalg::combine(complement_, coeff, p())
                      : linalg::Vec(len, 0);
    out.push_back(b1_.reduce(std::move(v)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

CocycleSpace h1(const PGroupAction &action) { return CocycleSpace(action); }

std::vector<linalg::Vec> enumerate_cocycles_oracle(const PGroupAction &action,
                                                   Exec exec) {
  return kernels::enumerate_cocycles(action, exec);
}

} // namespace pembed
