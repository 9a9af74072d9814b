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
#include <pembed/finite_field.hpp>
#include <pembed/laurent.hpp>

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace {

using pembed::FiniteField;
using pembed::FqElem;
using pembed::LaurentPoly;
using pembed::OrderedValue;
using pembed::testing::mono;

TEST(FieldSpec, SmallestIrreducibleModuli) {
  EXPECT_EQ(pembed::smallest_irreducible(3, 1), (std::vector<std::int64_t>{0, 1}));
  // T^2 + 1 is irreducible over F_3; it is the first candidate after T^2.
  EXPECT_EQ(pembed::smallest_irreducible(3, 2), (std::vector<std::int64_t>{1, 0, 1}));
  EXPECT_EQ(pembed::smallest_irreducible(2, 2), (std::vector<std::int64_t>{1, 1, 1}));
  EXPECT_EQ(pembed::smallest_irreducible(2, 3), (std::vector<std::int64_t>{1, 1, 0, 1}));
}

TEST(FieldSpec, RejectsReducibleModulus) {
  // T^2 + 2 = (T + 1)(T + 2) over F_3.
  EXPECT_THROW(FiniteField::make(pembed::FieldSpec{3, 2, {2, 0, 1}}),
               pembed::InputError);
}

TEST(FieldSpec, RejectsCompositeCharacteristicAndHugeFields) {
  EXPECT_THROW(FiniteField::make(4, 1), pembed::InputError);
  EXPECT_THROW(FiniteField::make(3, 9), pembed::CapExceeded);
  EXPECT_THROW(FiniteField::make(2, 13), pembed::CapExceeded);
  EXPECT_NO_THROW(FiniteField::make(3, 8));
}

// Field axioms on F_9 and F_8 exhaustively; catches table construction bugs.
TEST(FiniteFieldArithmetic, AxiomsHoldExhaustively) {
  for (auto [p, k] : {std::pair{3, 2}, std::pair{2, 3}, std::pair{5, 1}}) {
    auto F = FiniteField::make(p, k);
    const auto q = F->q();
    for (std::uint32_t a = 0; a < q; ++a) {
      EXPECT_EQ(F->add(FqElem{a}, F->neg(FqElem{a})), F->zero());
      if (a != 0)
        EXPECT_EQ(F->mul(FqElem{a}, F->inv(FqElem{a})), F->one());
      EXPECT_EQ(F->pow(FqElem{a}, q), FqElem{a});
      for (std::uint32_t b = 0; b < q; ++b)
        for (std::uint32_t c = 0; c < q; ++c) {
          const FqElem x{a}, y{b}, z{c};
          EXPECT_EQ(F->mul(x, F->add(y, z)), F->add(F->mul(x, y), F->mul(x, z)));
          EXPECT_EQ(F->mul(F->mul(x, y), z), F->mul(x, F->mul(y, z)));
        }
    }
  }
}

TEST(FiniteFieldArithmetic, GeneratorSquaresToMinusOneInF9) {
  auto F = FiniteField::make(3, 2);
  const FqElem g = F->from_coeffs(std::vector<std::int64_t>{0, 1});
  EXPECT_EQ(F->mul(g, g), F->from_int(-1));
}

TEST(RingArith, Examples) {
  auto F3 = FiniteField::make(3, 1);
  const auto x = mono(F3, 1, 1);
  EXPECT_TRUE((x + (-x)).is_zero());
  EXPECT_EQ(x * mono(F3, 1, 2), mono(F3, 1, 3));
  EXPECT_EQ(mono(F3, 2, 1) + mono(F3, 2, 1), x);
}

TEST(RingArith, CanonicalFormHasNoZeroCoefficients) {
  auto F3 = FiniteField::make(3, 1);
  LaurentPoly a(F3, {{1, FqElem{1}}, {2, FqElem{0}}});
  EXPECT_EQ(a.terms().size(), 1u);
  auto b = a + mono(F3, 2, 1);
  EXPECT_TRUE(b.terms().empty());
  EXPECT_TRUE(b.is_zero());
}

TEST(RingArith, FieldMismatchThrows) {
  auto F3 = FiniteField::make(3, 1), F5 = FiniteField::make(5, 1);
  EXPECT_THROW(mono(F3, 1, 0) + mono(F5, 1, 0), pembed::InputError);
  EXPECT_THROW(mono(F3, 1, 0) * mono(F5, 1, 0), pembed::InputError);
}

TEST(Valuation, Examples) {
  auto F3 = FiniteField::make(3, 1);
  EXPECT_EQ((mono(F3, 1, -2) + mono(F3, 1, 1)).valuation(), OrderedValue{-2});
  EXPECT_TRUE(LaurentPoly(F3).valuation().is_infinity());
  const auto prod = mono(F3, 1, 1) * mono(F3, 1, 2);
  EXPECT_EQ(prod.valuation(), OrderedValue{3});
  EXPECT_EQ(prod.valuation(), OrderedValue{1} + OrderedValue{2});
}

TEST(Monomial, Examples) {
  auto F3 = FiniteField::make(3, 1);
  const auto m = LaurentPoly::monomial(F3, F3->one(), -2);
  EXPECT_EQ(m.terms().size(), 1u);
  EXPECT_EQ(m.min_exponent(), -2);
  EXPECT_TRUE(LaurentPoly::monomial(F3, F3->zero(), 5).is_zero());
  for (std::int64_t e = -10; e <= 10; ++e)
    EXPECT_EQ(LaurentPoly::monomial(F3, F3->one(), e).valuation(), OrderedValue{e});
}

TEST(FrobeniusPow, Examples) {
  auto F3 = FiniteField::make(3, 1);
  const auto a = mono(F3, 1, -1) + mono(F3, 1, 1);
  EXPECT_EQ(pembed::frobenius_pow(a, 1), mono(F3, 1, -3) + mono(F3, 1, 3));
  EXPECT_EQ(pembed::frobenius_pow(a, 0), a);
}

TEST(FrobeniusPow, TwistsCoefficientsInF9) {
  auto F9 = FiniteField::make(3, 2);
  const FqElem g = F9->from_coeffs(std::vector<std::int64_t>{0, 1});
  const auto gx = LaurentPoly::monomial(F9, g, 1);
  const auto expected = pembed::testing::power_by_mul(gx, 3);
  EXPECT_EQ(pembed::frobenius_pow(gx, 1), expected);
  // g^3 = g * g^2 = -g, which differs from g.
  EXPECT_EQ(expected.coeff(3), F9->neg(g));
  EXPECT_NE(expected.coeff(3), g);
}

TEST(FrobeniusPow, ExponentOverflowIsReported) {
  auto F3 = FiniteField::make(3, 1);
  EXPECT_THROW(pembed::frobenius_pow(mono(F3, 1, INT64_MAX / 2), 1),
               pembed::RangeError);
  EXPECT_TRUE(pembed::frobenius_pow(LaurentPoly(F3), 500).is_zero());
}

TEST(ValuedRingProperties, ValuationAxioms) {
  std::mt19937_64 rng(11);
  for (auto [p, k] : {std::pair{3, 1}, std::pair{2, 2}, std::pair{3, 2}}) {
    auto F = FiniteField::make(p, k);
    for (int i = 0; i < 1000; ++i) {
      const auto a = pembed::testing::random_laurent(F, rng);
      const auto b = pembed::testing::random_laurent(F, rng);
      EXPECT_EQ((a * b).valuation(), a.valuation() + b.valuation());
      EXPECT_GE((a + b).valuation(), std::min(a.valuation(), b.valuation()));
      EXPECT_EQ(a.is_zero(), a.valuation().is_infinity());
    }
  }
}

TEST(ValuedRingProperties, FrobeniusMatchesRepeatedMultiplication) {
  std::mt19937_64 rng(12);
  for (auto [p, k] : {std::pair{3, 1}, std::pair{2, 2}, std::pair{3, 2}}) {
    auto F = FiniteField::make(p, k);
    for (int i = 0; i < 100; ++i) {
      const auto a = pembed::testing::random_laurent(F, rng, -3, 3, 3);
      LaurentPoly expected = a;
      for (unsigned step = 0; step < 2; ++step) {
        EXPECT_EQ(pembed::frobenius_pow(a, step), expected);
        expected = pembed::testing::power_by_mul(expected, p);
      }
    }
  }
}

} // namespace
