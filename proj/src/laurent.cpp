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

#include <pembed/laurent.hpp>

#include <pembed/errors.hpp>

#include <sstream>

namespace pembed {

bool same_field(const FieldPtr &a, const FieldPtr &b) {
  return a == b || (a && b && a->spec() == b->spec());
}

LaurentPoly::LaurentPoly(FieldPtr field) : field_(std::move(field)) {
  if (!field_)
    throw InputError("LaurentPoly needs a field");
}

LaurentPoly::LaurentPoly(FieldPtr field, Terms terms)
    : LaurentPoly(std::move(field)) {
  for (auto &[e, c] : terms) {
    if (!field_->contains(c))
      throw InputError("coefficient outside the field");
    if (!c.is_zero())
      terms_.emplace(e, c);
  }
}

LaurentPoly LaurentPoly::monomial(FieldPtr field, FqElem c, std::int64_t e) {
  LaurentPoly out(std::move(field));
  if (!out.field_->contains(c))
    throw InputError("coefficient outside the field");
  if (!c.is_zero())
    out.terms_.emplace(e, c);
  return out;
}

FqElem LaurentPoly::coeff(std::int64_t e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? field_->zero() : it->second;
}

std::int64_t LaurentPoly::min_exponent() const {
  if (terms_.empty())
    throw InputError("zero has no exponents");
  return terms_.begin()->first;
}

std::int64_t LaurentPoly::max_exponent() const {
  if (terms_.empty())
    throw InputError("zero has no exponents");
  return terms_.rbegin()->first;
}

OrderedValue LaurentPoly::valuation() const {
  if (terms_.empty())
    return OrderedValue::infinity(1);
  return OrderedValue{terms_.begin()->first};
}

void LaurentPoly::require_same_field(const LaurentPoly &b) const {
  if (!same_field(field_, b.field_))
    throw InputError("Laurent polynomials over different fields");
}

LaurentPoly &LaurentPoly::operator+=(const LaurentPoly &b) {
  require_same_field(b);
  for (const auto &[e, c] : b.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second = field_->add(it->second, c);
      if (it->second.is_zero())
        terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly &b) const {
  LaurentPoly out = *this;
  out += b;
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out(field_);
  for (const auto &[e, c] : terms_)
    out.terms_.emplace_hint(out.terms_.end(), e, field_->neg(c));
  return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly &b) const {
  return *this + (-b);
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly &b) const {
  require_same_field(b);
  LaurentPoly out(field_);
  for (const auto &[e1, c1] : terms_)
    for (const auto &[e2, c2] : b.terms_) {
      const std::int64_t e = checked_add(e1, e2);
      const FqElem c = field_->mul(c1, c2);
      auto [it, inserted] = out.terms_.try_emplace(e, c);
      if (!inserted) {
        it->second = field_->add(it->second, c);
        if (it->second.is_zero())
          out.terms_.erase(it);
      }
    }
  return out;
}

LaurentPoly LaurentPoly::scaled(FqElem c) const {
  LaurentPoly out(field_);
  if (c.is_zero())
    return out;
  for (const auto &[e, a] : terms_)
    out.terms_.emplace_hint(out.terms_.end(), e, field_->mul(a, c));
  return out;
}

bool LaurentPoly::operator==(const LaurentPoly &b) const {
  return same_field(field_, b.field_) && terms_ == b.terms_;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &[e, c] : terms_) {
    if (!first)
      os << " + ";
    first = false;
    auto cs = field_->coeffs(c);
    if (field_->k() == 1) {
      os << cs[0];
    } else {
      os << '[';
      for (std::size_t j = 0; j < cs.size(); ++j)
        os << (j ? "," : "") << cs[j];
      os << ']';
    }
    os << "*x^" << e;
  }
  return os.str();
}

LaurentPoly frobenius_pow(const LaurentPoly &a, unsigned i) {
  if (a.is_zero())
    return a;
  std::int64_t scale = 1;
  for (unsigned j = 0; j < i; ++j)
    scale = checked_mul(scale, a.field()->p());
  LaurentPoly::Terms terms;
  const auto &F = *a.field();
  for (const auto &[e, c] : a.terms())
    terms.emplace_hint(terms.end(), checked_mul(e, scale), F.frobenius(c, i));
  return LaurentPoly(a.field(), std::move(terms));
}

} // namespace pembed
