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

#include <gtest/gtest.h>

#include <set>
#include <string>

namespace {

using namespace pembed;
using linalg::Vec;

GroupHom sign_map() { return GroupHom(symmetric(3), cyclic(2), {0, 1, 1, 0, 0, 1}); }

PGroupAction sign_action() {
  // S3 acting on F_3 through the sign character.
  const auto sgn = sign_map();
  std::vector<Matrix> ms;
  for (int s : sgn.map())
    ms.push_back({{s ? 2 : 1}});
  return PGroupAction(symmetric(3), 3, 1, ms);
}

PGroupAction from_gen(GroupPtr g, std::int64_t p, int r, int gen, Matrix m) {
  return PGroupAction::from_generators(std::move(g), p, r, std::span(&gen, 1), {m});
}

// Direct translation of the cocycle identity, evaluated on every pair.
bool naive_cocycle(const PGroupAction &a, const Vec &c) {
  const auto &G = *a.acting();
  const int r = a.r();
  auto at = [&](int s) { return Vec(c.begin() + s * r, c.begin() + (s + 1) * r); };
  for (int s = 0; s < G.order(); ++s)
    for (int t = 0; t < G.order(); ++t) {
      const Vec moved = a.apply(s, at(t));
      const Vec lhs = at(G.mul(s, t));
      for (int j = 0; j < r; ++j)
        if (((at(s)[j] + moved[j] - lhs[j]) % a.p() + a.p()) % a.p() != 0)
          return false;
    }
  return true;
}

std::uint64_t ipow(std::int64_t p, std::size_t e) {
  std::uint64_t out = 1;
  while (e--)
    out *= static_cast<std::uint64_t>(p);
  return out;
}

struct Instance {
  std::string name;
  PGroupAction action;
  std::uint64_t z1, b1, h1;
};

std::vector<Instance> oracle_instances() {
  auto z2 = cyclic(2), z3 = cyclic(3), z4 = cyclic(4), v4 = elementary_abelian(2, 2);
  const Matrix swap = {{0, 1}, {1, 0}};
  const Matrix rot = {{0, 1}, {1, 1}};
  std::vector<Instance> out = {
      {"Z2 on F2", PGroupAction::trivial(z2, 2, 1), 2, 1, 2},
      {"Z3 on F2", PGroupAction::trivial(z3, 2, 1), 1, 1, 1},
      {"Z4 on F2", PGroupAction::trivial(z4, 2, 1), 2, 1, 2},
      {"V4 on F2", PGroupAction::trivial(v4, 2, 1), 4, 1, 4},
      {"S3 sign on F3", sign_action(), 9, 3, 3},
      {"Z2 inversion on F3", from_gen(z2, 3, 1, 1, {{2}}), 3, 3, 1},
      {"Z2 swap on F2^2", from_gen(z2, 2, 2, 1, swap), 2, 2, 1},
      {"Z4 swap on F2^2", from_gen(z4, 2, 2, 1, swap), 4, 2, 2},
      {"Z3 rotation on F2^2", from_gen(z3, 2, 2, 1, rot), 4, 4, 1},
      {"Z2 on F3^2", PGroupAction::trivial(z2, 3, 2), 1, 1, 1},
      {"Z6 on F3", PGroupAction::trivial(cyclic(6), 3, 1), 3, 1, 3},
      {"Z8 on F2", PGroupAction::trivial(cyclic(8), 2, 1), 2, 1, 2},
      {"trivial on F2", PGroupAction::trivial(trivial_group(), 2, 1), 1, 1, 1},
  };
  return out;
}

TEST(Cohomology, OracleEquivalence) {
  const auto instances = oracle_instances();
  ASSERT_GE(instances.size(), 10u);
  for (const auto &inst : instances) {
    SCOPED_TRACE(inst.name);
    const auto &a = inst.action;
    EXPECT_LE(a.acting()->order(), 8);
    const auto cs = h1(a);
    const auto cocycles = enumerate_cocycles_oracle(a, Exec::serial);
    for (const auto &c : cocycles)
      EXPECT_TRUE(naive_cocycle(a, c));
    // Coboundaries computed straight from the action.
    std::set<Vec> cobs;
    for (int i = 0; i < a.module()->order(); ++i) {
      const Vec v = index_to_vector(i, a.p(), a.r());
      Vec c;
      for (int s = 0; s < a.acting()->order(); ++s) {
        const Vec sv = a.apply(s, v);
        for (int j = 0; j < a.r(); ++j)
          c.push_back(((sv[j] - v[j]) % a.p() + a.p()) % a.p());
      }
      cobs.insert(c);
    }
    EXPECT_EQ(cocycles.size(), inst.z1);
    EXPECT_EQ(cobs.size(), inst.b1);
    EXPECT_EQ(ipow(cs.p(), cs.dim_z1()), cocycles.size());
    EXPECT_EQ(ipow(cs.p(), cs.dim_b1()), cobs.size());
    EXPECT_EQ(cs.h1_order(), inst.h1);
    EXPECT_EQ(cs.h1_order() * cobs.size(), cocycles.size());
    const auto reps = cs.h1_representatives();
    EXPECT_EQ(reps.size(), cs.h1_order());
    std::set<Vec> distinct(reps.begin(), reps.end());
    EXPECT_EQ(distinct.size(), reps.size());
  }
}

TEST(Cohomology, KnownValues) {
  EXPECT_EQ(h1(PGroupAction::trivial(cyclic(4), 2, 1)).dim_h1(), 1u);
  const auto s3 = h1(sign_action());
  EXPECT_EQ(s3.dim_z1(), 2u);
  EXPECT_EQ(s3.dim_b1(), 1u);
  EXPECT_EQ(s3.dim_h1(), 1u);
  EXPECT_EQ(h1(PGroupAction::trivial(trivial_group(), 5, 3)).h1_order(), 1u);
}

TEST(Cohomology, BasicCocycleFacts) {
  for (const auto &inst : oracle_instances()) {
    SCOPED_TRACE(inst.name);
    const auto cs = h1(inst.action);
    const int e = inst.action.acting()->identity();
    for (const auto &c : cs.z1_basis()) {
      EXPECT_TRUE(naive_cocycle(inst.action, c));
      for (int j = 0; j < cs.r(); ++j)
        EXPECT_EQ(c[e * cs.r() + j], 0);
    }
    for (const auto &b : cs.b1_basis()) {
      EXPECT_TRUE(cs.is_cocycle(b));
      EXPECT_TRUE(cs.is_coboundary(b));
    }
  }
}

TEST(Cohomology, RepresentativesAreCosetMinima) {
  for (const auto &inst : oracle_instances()) {
    SCOPED_TRACE(inst.name);
    const auto cs = h1(inst.action);
    const auto all = enumerate_cocycles_oracle(inst.action, Exec::serial);
    for (const auto &c : all) {
      const Vec rep = cs.h1_representative(c);
      Vec diff(c.size());
      for (std::size_t i = 0; i < c.size(); ++i)
        diff[i] = ((c[i] - rep[i]) % cs.p() + cs.p()) % cs.p();
      EXPECT_TRUE(cs.is_coboundary(diff));
      for (const auto &d : all) {
        Vec dd(c.size());
        for (std::size_t i = 0; i < c.size(); ++i)
          dd[i] = ((c[i] - d[i]) % cs.p() + cs.p()) % cs.p();
        if (cs.is_coboundary(dd))
          EXPECT_LE(rep, d);
      }
    }
  }
}

TEST(Cohomology, TrivialActionGivesHomomorphisms) {
  for (auto [g, p] : {std::pair{cyclic(4), 2LL}, std::pair{cyclic(6), 3LL},
                      std::pair{elementary_abelian(2, 2), 2LL},
                      std::pair{symmetric(3), 2LL}, std::pair{symmetric(3), 3LL}}) {
    const auto cs = h1(PGroupAction::trivial(g, p, 1));
    const auto homs = all_homomorphisms(g, cyclic(static_cast<int>(p)));
    EXPECT_EQ(ipow(p, cs.dim_z1()), homs.size());
    EXPECT_EQ(cs.dim_b1(), 0u);
  }
}

TEST(Cohomology, RejectsMalformedCochains) {
  const auto cs = h1(sign_action());
  EXPECT_THROW(cs.is_cocycle(Vec{1, 2}), InputError);
  EXPECT_FALSE(cs.is_cocycle(Vec{0, 1, 0, 0, 0, 0}));
  EXPECT_THROW(cs.h1_representative(Vec{0, 1, 0, 0, 0, 0}), InputError);
}

TEST(Cohomology, ActionFromSignProblem) {
  const auto sgn = sign_map();
  const EmbeddingProblem e(sgn, sgn);
  const auto km = action_from_problem(e);
  EXPECT_EQ(km.action.p(), 3);
  EXPECT_EQ(km.action.r(), 1);
  EXPECT_EQ(km.action.acting()->order(), 6);
  for (int s = 0; s < 6; ++s)
    EXPECT_EQ(km.action.matrix(s)[0][0], sgn(s) ? 2 : 1);
  for (int x : e.kernel())
    EXPECT_EQ(km.element(km.coordinates(x)), x);
}

TEST(Cohomology, ActionFromProblemRejectsBadKernels) {
  auto s3 = symmetric(3), z4 = cyclic(4), t = trivial_group();
  const GroupHom to_trivial_s3(s3, t, std::vector<int>(6, 0));
  EXPECT_THROW(action_from_problem(EmbeddingProblem(GroupHom::identity(t), to_trivial_s3)),
               InputError);
  const GroupHom to_trivial_z4(z4, t, std::vector<int>(4, 0));
  EXPECT_THROW(action_from_problem(EmbeddingProblem(GroupHom::identity(t), to_trivial_z4)),
               InputError);
  const GroupHom z6(cyclic(6), t, std::vector<int>(6, 0));
  EXPECT_THROW(action_from_problem(EmbeddingProblem(GroupHom::identity(t), z6)),
               InputError);
}

TEST(Cohomology, TrivialKernelDefaultsToRankZero) {
  auto z2 = cyclic(2);
  const EmbeddingProblem e(GroupHom::identity(z2), GroupHom::identity(z2));
  const auto km = action_from_problem(e);
  EXPECT_EQ(km.action.r(), 0);
  EXPECT_EQ(h1(km.action).h1_order(), 1u);
}

} // namespace
