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

#include <pembed/ordered_group.hpp>

#include <pembed/errors.hpp>

#include <algorithm>
#include <sstream>

namespace pembed {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out))
    throw RangeError("integer overflow in addition");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out))
    throw RangeError("integer overflow in multiplication");
  return out;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

OrderedValue::OrderedValue(std::vector<std::int64_t> coords)
    : coords_(std::move(coords)), rank_(coords_.size()) {
  if (rank_ == 0)
    throw InputError("ordered value needs rank >= 1");
}

OrderedValue::OrderedValue(std::initializer_list<std::int64_t> coords)
    : OrderedValue(std::vector<std::int64_t>(coords)) {}

OrderedValue::OrderedValue(std::size_t rank, bool inf)
    : rank_(rank), inf_(inf) {
  if (rank_ == 0)
    throw InputError("ordered value needs rank >= 1");
  if (!inf)
    coords_.assign(rank, 0);
}

OrderedValue OrderedValue::zero(std::size_t rank) {
  return OrderedValue(rank, false);
}

OrderedValue OrderedValue::unit(std::size_t rank, std::size_t axis) {
  OrderedValue v(rank, false);
  if (axis >= rank)
    throw InputError("unit axis out of range");
  v.coords_[axis] = 1;
  return v;
}

OrderedValue OrderedValue::infinity(std::size_t rank) {
  return OrderedValue(rank, true);
}

std::span<const std::int64_t> OrderedValue::coords() const {
  if (inf_)
    throw InputError("infinity has no coordinates");
  return coords_;
}

void OrderedValue::require_rank(const OrderedValue &other) const {
  if (rank_ != other.rank_)
    throw InputError("rank mismatch: " + std::to_string(rank_) + " vs " +
                     std::to_string(other.rank_));
}

std::strong_ordering OrderedValue::operator<=>(const OrderedValue &other) const {
  require_rank(other);
  if (inf_ || other.inf_) {
    if (inf_ && other.inf_)
      return std::strong_ordering::equal;
    return inf_ ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::lexicographical_compare_three_way(
      coords_.begin(), coords_.end(), other.coords_.begin(),
      other.coords_.end());
}

bool OrderedValue::operator==(const OrderedValue &other) const {
  return (*this <=> other) == std::strong_ordering::equal;
}

OrderedValue OrderedValue::operator+(const OrderedValue &other) const {
  require_rank(other);
  if (inf_ || other.inf_)
    return infinity(rank_);
  OrderedValue out(rank_, false);
  for (std::size_t i = 0; i < rank_; ++i)
    out.coords_[i] = checked_add(coords_[i], other.coords_[i]);
  return out;
}

OrderedValue OrderedValue::operator-() const {
  if (inf_)
    throw InputError("cannot negate infinity");
  OrderedValue out(rank_, false);
  for (std::size_t i = 0; i < rank_; ++i)
    out.coords_[i] = checked_mul(coords_[i], -1);
  return out;
}

OrderedValue OrderedValue::operator-(const OrderedValue &other) const {
  require_rank(other);
  if (other.inf_)
    throw InputError("cannot subtract infinity");
  return *this + (-other);
}

OrderedValue OrderedValue::scaled(std::int64_t n) const {
  if (inf_) {
    if (n <= 0)
      throw InputError("infinity scaled by non-positive integer");
    return *this;
  }
  OrderedValue out(rank_, false);
  for (std::size_t i = 0; i < rank_; ++i)
    out.coords_[i] = checked_mul(coords_[i], n);
  return out;
}

std::string OrderedValue::to_string() const {
  if (inf_)
    return "inf";
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < rank_; ++i)
    os << (i ? "," : "") << coords_[i];
  os << ')';
  return os.str();
}

Ordering compare(const OrderedValue &a, const OrderedValue &b) {
  auto c = a <=> b;
  if (c < 0)
    return Ordering::less;
  if (c > 0)
    return Ordering::greater;
  return Ordering::equal;
}

OrderedValue element_below(const OrderedValue &gamma) {
  if (gamma.is_infinity())
    throw InputError("element_below: infinity has no canonical predecessor");
  return gamma - OrderedValue::unit(gamma.rank(), gamma.rank() - 1);
}

OrderedValue uniform_bound(
    std::span<const std::pair<OrderedValue, std::int64_t>> pairs,
    std::size_t rank) {
  if (!pairs.empty())
    rank = pairs.front().first.rank();
  OrderedValue bound = OrderedValue::zero(rank);
  for (const auto &[gamma, n] : pairs) {
    if (gamma.is_infinity())
      throw InputError("uniform_bound: values must be finite");
    if (n < 1)
      throw InputError("uniform_bound: multipliers must be positive");
    if (gamma < bound)
      bound = gamma;
  }
  return bound;
}

bool in_coset(const OrderedValue &gamma, const OrderedValue &alpha0,
              std::int64_t p) {
  if (p < 2)
    throw InputError("in_coset: p must be >= 2");
  OrderedValue diff = gamma - alpha0;
  for (auto c : diff.coords())
    if (c % p != 0)
      return false;
  return true;
}

std::vector<OrderedValue> descending_nondivisible(const OrderedValue &alpha0,
                                                  const OrderedValue &gamma0,
                                                  std::int64_t p,
                                                  std::size_t count) {
  if (alpha0.is_infinity() || gamma0.is_infinity())
    throw InputError("descending_nondivisible: values must be finite");
  if (p < 2)
    throw InputError("descending_nondivisible: p must be >= 2");
  if (count == 0)
    throw InputError("descending_nondivisible: count must be >= 1");
  const std::size_t rank = alpha0.rank();
  const OrderedValue a0 = OrderedValue::unit(rank, rank - 1);
  const std::pair<OrderedValue, std::int64_t> req{gamma0 - alpha0 - a0, p};
  const OrderedValue delta0 = uniform_bound(std::span(&req, 1));

  std::vector<OrderedValue> out;
  out.reserve(count);
  for (std::size_t i = 1; i <= count; ++i) {
    OrderedValue delta = delta0 - a0.scaled(static_cast<std::int64_t>(i));
    out.push_back(alpha0 + a0 + delta.scaled(p));
  }
  return out;
}

} // namespace pembed
