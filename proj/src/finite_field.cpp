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

#include <pembed/finite_field.hpp>

#include <pembed/errors.hpp>
#include <pembed/ordered_group.hpp>

#include <string>

namespace pembed {

namespace {

using Poly = std::vector<std::int64_t>;

void trim(Poly &a) {
  while (!a.empty() && a.back() == 0)
    a.pop_back();
}

// Remainder of a modulo a monic b over F_p.
Poly poly_rem(Poly a, const Poly &b, std::int64_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::int64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t j = 0; j <= db; ++j)
      a[shift + j] = floor_mod(a[shift + j] - lead * b[j], p);
    trim(a);
  }
  return a;
}

Poly digits_of(std::uint64_t index, std::int64_t p, int k) {
  Poly out(k, 0);
  for (int j = 0; j < k; ++j) {
    out[j] = static_cast<std::int64_t>(index % p);
    index /= p;
  }
  return out;
}

} // namespace

bool is_prime(std::int64_t n) {
  if (n < 2)
    return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

bool is_irreducible(std::span<const std::int64_t> monic, std::int64_t p) {
  Poly f(monic.begin(), monic.end());
  trim(f);
  if (f.empty() || f.back() != 1)
    throw InputError("is_irreducible: polynomial must be monic");
  const int deg = static_cast<int>(f.size()) - 1;
  if (deg < 1)
    return false;
  for (int d = 1; 2 * d <= deg; ++d) {
    std::uint64_t count = 1;
    for (int j = 0; j < d; ++j)
      count *= static_cast<std::uint64_t>(p);
    for (std::uint64_t t = 0; t < count; ++t) {
      Poly g = digits_of(t, p, d);
      g.push_back(1);
      if (poly_rem(f, g, p).empty())
        return false;
    }
  }
  return true;
}

std::vector<std::int64_t> smallest_irreducible(std::int64_t p, int k) {
  if (!is_prime(p))
    throw InputError("field characteristic must be prime, got " +
                     std::to_string(p));
  if (k < 1)
    throw InputError("extension degree must be >= 1");
  std::uint64_t count = 1;
  for (int j = 0; j < k; ++j) {
    count *= static_cast<std::uint64_t>(p);
    if (count > static_cast<std::uint64_t>(kMaxFieldOrder))
      throw CapExceeded("field order p^k exceeds 3^8");
  }
  for (std::uint64_t t = 0; t < count; ++t) {
    Poly f = digits_of(t, p, k);
    f.push_back(1);
    if (is_irreducible(f, p))
      return f;
  }
  throw InputError("no irreducible polynomial found"); // unreachable
}

std::shared_ptr<const FiniteField> FiniteField::make(std::int64_t p, int k) {
  return make(FieldSpec{p, k, smallest_irreducible(p, k)});
}

std::shared_ptr<const FiniteField> FiniteField::make(const FieldSpec &spec) {
  if (!is_prime(spec.p))
    throw InputError("field characteristic must be prime, got " +
                     std::to_string(spec.p));
  if (spec.k < 1)
    throw InputError("extension degree must be >= 1");
  if (static_cast<int>(spec.modulus.size()) != spec.k + 1 ||
      spec.modulus.back() != 1)
    throw InputError("modulus must be monic of degree k");
  for (auto c : spec.modulus)
    if (c < 0 || c >= spec.p)
      throw InputError("modulus coefficients must lie in [0, p)");
  std::int64_t q = 1;
  for (int j = 0; j < spec.k; ++j) {
    q *= spec.p;
    if (q > kMaxFieldOrder)
      throw CapExceeded("field order p^k exceeds 3^8");
  }
  if (!is_irreducible(spec.modulus, spec.p))
    throw InputError("modulus is not irreducible over F_p");
  return std::shared_ptr<const FiniteField>(new FiniteField(spec));
}

FiniteField::FiniteField(FieldSpec spec) : spec_(std::move(spec)) {
  const std::int64_t p = spec_.p;
  const int k = spec_.k;
  q_ = 1;
  for (int j = 0; j < k; ++j) {
    pow_p_.push_back(q_);
    q_ *= static_cast<std::uint32_t>(p);
  }

  // Schoolbook product modulo the modulus; only used to build the tables.
  auto slow_mul = [&](std::uint32_t a, std::uint32_t b) {
    Poly x = digits_of(a, p, k), y = digits_of(b, p, k);
    Poly prod(2 * k - 1, 0);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
    Poly r = poly_rem(prod, spec_.modulus, p);
    std::uint32_t idx = 0;
    for (int j = static_cast<int>(r.size()) - 1; j >= 0; --j)
      idx = idx * static_cast<std::uint32_t>(p) + static_cast<std::uint32_t>(r[j]);
    return idx;
  };

  const std::uint32_t order = q_ - 1;
  exp_.assign(order, 0);
  log_.assign(q_, 0);
  for (std::uint32_t g = 1; g < q_; ++g) {
    std::uint32_t x = 1, n = 0;
    do {
      exp_[n] = x;
      x = slow_mul(x, g);
      ++n;
    } while (x != 1 && n < order);
    if (n == order && x == 1) {
      primitive_ = {g};
      break;
    }
  }
  for (std::uint32_t i = 0; i < order; ++i)
    log_[exp_[i]] = i;
}

FqElem FiniteField::from_int(std::int64_t c) const {
  return {static_cast<std::uint32_t>(floor_mod(c, spec_.p))};
}

FqElem FiniteField::from_coeffs(std::span<const std::int64_t> coeffs) const {
  if (static_cast<int>(coeffs.size()) > spec_.k)
    throw InputError("coefficient vector longer than extension degree");
  std::uint32_t idx = 0;
  for (std::size_t j = coeffs.size(); j-- > 0;)
    idx = idx * static_cast<std::uint32_t>(spec_.p) +
          static_cast<std::uint32_t>(floor_mod(coeffs[j], spec_.p));
  return {idx};
}

std::vector<std::int64_t> FiniteField::coeffs(FqElem a) const {
  return digits_of(a.index, spec_.p, spec_.k);
}

FqElem FiniteField::add(FqElem a, FqElem b) const {
  if (spec_.k == 1)
    return {static_cast<std::uint32_t>((a.index + b.index) % spec_.p)};
  const auto p = static_cast<std::uint32_t>(spec_.p);
  std::uint32_t x = a.index, y = b.index, out = 0;
  for (int j = 0; j < spec_.k; ++j) {
    out += ((x % p + y % p) % p) * pow_p_[j];
    x /= p;
    y /= p;
  }
  return {out};
}

FqElem FiniteField::neg(FqElem a) const {
  const auto p = static_cast<std::uint32_t>(spec_.p);
  std::uint32_t x = a.index, out = 0;
  for (int j = 0; j < spec_.k; ++j) {
    out += ((p - x % p) % p) * pow_p_[j];
    x /= p;
  }
  return {out};
}

FqElem FiniteField::sub(FqElem a, FqElem b) const { return add(a, neg(b)); }

FqElem FiniteField::mul(FqElem a, FqElem b) const {
  if (a.is_zero() || b.is_zero())
    return zero();
  const std::uint32_t order = q_ - 1;
  return {exp_[(log_[a.index] + log_[b.index]) % order]};
}

FqElem FiniteField::inv(FqElem a) const {
  if (a.is_zero())
    throw InputError("inverse of zero");
  const std::uint32_t order = q_ - 1;
  return {exp_[(order - log_[a.index]) % order]};
}

FqElem FiniteField::pow(FqElem a, std::uint64_t e) const {
  if (e == 0)
    return one();
  if (a.is_zero())
    return zero();
  const std::uint64_t order = q_ - 1;
  return {exp_[(log_[a.index] * (e % order)) % order]};
}

FqElem FiniteField::frobenius(FqElem a, unsigned i) const {
  // a^(p^k) = a, so only i mod k matters.
  std::uint64_t e = 1;
  for (unsigned j = 0; j < i % static_cast<unsigned>(spec_.k); ++j)
    e *= static_cast<std::uint64_t>(spec_.p);
  return pow(a, e);
}

} // namespace pembed
