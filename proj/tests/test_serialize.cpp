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

#include <pembed/errors.hpp>
#include <pembed/serialize.hpp>

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace {

using namespace pembed;
using io::json;

TEST(Serialize, OrderedValueRoundTrip) {
  for (const auto &v : {OrderedValue{-3}, OrderedValue{1, 2, -7}}) {
    EXPECT_EQ(io::value_from_json(io::to_json(v)), v);
  }
  EXPECT_TRUE(io::value_from_json("inf").is_infinity());
  EXPECT_EQ(io::to_json(OrderedValue::infinity(1)), "inf");
  EXPECT_THROW(io::value_from_json("nan"), InputError);
  EXPECT_THROW(io::value_from_json(json::array()), InputError);
}

TEST(Serialize, FieldDefaults) {
  const auto F = io::field_from_json(json::parse(R"({"p": 3, "k": 2})"));
  EXPECT_EQ(F->q(), 9u);
  EXPECT_EQ(F->spec().modulus, (std::vector<std::int64_t>{1, 0, 1}));
  EXPECT_EQ(io::field_from_json(json::parse(R"({"p": 5})"))->q(), 5u);
  EXPECT_THROW(io::field_from_json(json::parse(R"({"p": 4})")), InputError);
  EXPECT_THROW(io::field_from_json(json::parse(R"({"p": 3, "k": 2, "modulus": [2, 0, 1]})")),
               InputError);
  EXPECT_THROW(io::field_from_json(json::parse(R"({"k": 2})")), InputError);
}

TEST(Serialize, LaurentRoundTrip) {
  std::mt19937_64 rng(61);
  for (auto F : {FiniteField::make(3, 1), FiniteField::make(3, 2), FiniteField::make(2, 3)})
    for (int i = 0; i < 100; ++i) {
      const auto a = pembed::testing::random_laurent(F, rng);
      EXPECT_EQ(io::laurent_from_json(io::to_json(a), F), a);
    }
  const auto F3 = FiniteField::make(3, 1);
  const auto a = io::laurent_from_json(json::parse("[[-3, 1], [-1, -1]]"), F3);
  EXPECT_EQ(a, pembed::testing::mono(F3, 1, -3) + pembed::testing::mono(F3, 2, -1));
  EXPECT_THROW(io::laurent_from_json(json::parse("[[1]]"), F3), InputError);
  EXPECT_THROW(io::laurent_from_json(json::parse("{}"), F3), InputError);
}

TEST(Serialize, AdditiveRoundTrip) {
  std::mt19937_64 rng(62);
  for (auto F : {FiniteField::make(3, 1), FiniteField::make(3, 2)})
    for (int i = 0; i < 100; ++i) {
      const auto f = pembed::testing::random_additive(F, rng);
      EXPECT_EQ(io::additive_from_json(io::to_json(f)), f);
    }
  const auto f = io::additive_from_json(json::parse(
      R"({"field": {"p": 3}, "coeffs": [[[0, -1]], [[0, 1]]]})"));
  EXPECT_EQ(f.m(), 1);
  EXPECT_THROW(io::additive_from_json(json::parse(R"({"p": 3, "coeffs": [[]]})")),
               InputError);
}

TEST(Serialize, GroupKinds) {
  EXPECT_EQ(io::group_from_json(json::parse(R"({"kind": "cyclic", "n": 5})"))->order(), 5);
  EXPECT_EQ(io::group_from_json(json::parse(R"({"kind": "symmetric", "n": 3})"))->order(), 6);
  EXPECT_EQ(io::group_from_json(json::parse(R"({"kind": "trivial"})"))->order(), 1);
  EXPECT_EQ(io::group_from_json(json::parse(
                R"({"kind": "elementary_abelian", "p": 3, "r": 2})"))->order(), 9);
  EXPECT_EQ(io::group_from_json(json::parse(
                R"({"kind": "direct_product", "factors": [{"kind": "cyclic", "n": 2},
                    {"kind": "cyclic", "n": 3}]})"))->order(), 6);
  const auto s3 = symmetric(3);
  EXPECT_EQ(*io::group_from_json(io::to_json(*s3)), *s3);
  EXPECT_THROW(io::group_from_json(json::parse(R"({"kind": "dihedral", "n": 4})")), InputError);
  EXPECT_THROW(io::group_from_json(json::parse(R"({"order": 2, "table": [0, 1, 1]})")),
               InputError);
}

TEST(Serialize, HomForms) {
  auto z4 = cyclic(4), z2 = cyclic(2);
  const GroupHom red(z4, z2, {0, 1, 0, 1});
  EXPECT_EQ(io::hom_from_json(io::to_json(red), z4, z2), red);
  EXPECT_EQ(io::hom_from_json(json::parse("[0, 1, 0, 1]"), z4, z2), red);
  EXPECT_EQ(io::hom_from_json(json::parse(R"({"generators": [1], "images": [1]})"), z4, z2),
            red);
  EXPECT_THROW(io::hom_from_json(json::parse("[0, 1, 1, 0]"), z4, z2), InputError);
}

TEST(Serialize, ProblemParsing) {
  const auto e = io::problem_from_json(json::parse(R"({
    "schema_version": 1,
    "groups": {"Pi": {"kind": "symmetric", "n": 3}, "Gamma": "Pi",
               "G": {"kind": "cyclic", "n": 2}},
    "alpha": [0, 1, 1, 0, 0, 1], "f": [0, 1, 1, 0, 0, 1]})"));
  EXPECT_TRUE(e.is_split());
  EXPECT_EQ(e.p(), 3);
  const auto j = io::to_json(e);
  EXPECT_EQ(j["kernel_order"], 3);
  EXPECT_EQ(j["is_p_problem"], true);
}

TEST(Serialize, ProblemErrors) {
  EXPECT_THROW(io::problem_from_json(json::parse(R"({"schema_version": 2})")), InputError);
  EXPECT_THROW(io::problem_from_json(json::parse(R"({"groups": {}})")), InputError);
  EXPECT_THROW(io::problem_from_json(json::parse(R"({
    "groups": {"Pi": "Gamma", "Gamma": "Pi", "G": {"kind": "trivial"}},
    "alpha": [0], "f": [0]})")), InputError);
  EXPECT_THROW(io::problem_from_json(json::parse(R"({
    "groups": {"Pi": {"kind": "cyclic", "n": 2}, "Gamma": {"kind": "cyclic", "n": 4},
               "G": {"kind": "cyclic", "n": 4}},
    "alpha": [0, 2], "f": [0, 1, 2, 3]})")), InputError);
  EXPECT_THROW(io::problem_from_json(json::parse("[]")), InputError);
}

TEST(Serialize, ActionForms) {
  const auto a = io::action_from_json(json::parse(R"({
    "group": {"kind": "cyclic", "n": 2}, "p": 3, "r": 1,
    "generators": [1], "generator_matrices": [[[2]]]})"));
  EXPECT_EQ(a.matrix(1), (Matrix{{2}}));
  const auto b = io::action_from_json(json::parse(R"({
    "group": {"kind": "cyclic", "n": 2}, "p": 3, "r": 1, "matrices": [[[1]], [[2]]]})"));
  EXPECT_EQ(a.matrices(), b.matrices());
  const auto c = io::action_from_json(json::parse(R"({
    "group": {"kind": "trivial"}, "p": 2, "r": 1, "trivial": true})"));
  EXPECT_EQ(c.r(), 1);
  EXPECT_THROW(io::action_from_json(json::parse(R"({
    "group": {"kind": "trivial"}, "p": 2, "r": 1})")), InputError);
}

TEST(Serialize, ReportsCarryVerdicts) {
  const GroupHom sgn(symmetric(3), cyclic(2), {0, 1, 1, 0, 0, 1});
  const EmbeddingProblem e(sgn, sgn);
  const auto t = io::to_json(torsor_check(e, GroupHom::identity(symmetric(3))));
  EXPECT_EQ(t["verdict"], "OK");
  EXPECT_EQ(t["H1_order"], 3);
  const auto cs = io::to_json(h1(PGroupAction::trivial(cyclic(4), 2, 1)));
  EXPECT_EQ(cs["dim_H1"], 1);
  EXPECT_EQ(cs["H1_representatives"].size(), 2u);
}

} // namespace
