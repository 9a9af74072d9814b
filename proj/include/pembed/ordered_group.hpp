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

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pembed {

/// Element of the lexicographically ordered group Z^n, or the infinity
/// marker that sits above every finite value.
class OrderedValue {
public:
  explicit OrderedValue(std::vector<std::int64_t> coords);
  OrderedValue(std::initializer_list<std::int64_t> coords);

  static OrderedValue zero(std::size_t rank);
  static OrderedValue unit(std::size_t rank, std::size_t axis);
  static OrderedValue infinity(std::size_t rank);

  std::size_t rank() const { return rank_; }
  bool is_infinity() const { return inf_; }
  // Throws InputError on infinity.
  std::span<const std::int64_t> coords() const;
  std::int64_t operator[](std::size_t i) const { return coords()[i]; }

  // Rank mismatch throws InputError.
  std::strong_ordering operator<=>(const OrderedValue &other) const;
  bool operator==(const OrderedValue &other) const;

  // Infinity absorbs addition. Subtraction and scaling require finite values.
  OrderedValue operator+(const OrderedValue &other) const;
  OrderedValue operator-(const OrderedValue &other) const;
  OrderedValue operator-() const;
  OrderedValue scaled(std::int64_t n) const;

  std::string to_string() const;

private:
  OrderedValue(std::size_t rank, bool inf);
  void require_rank(const OrderedValue &other) const;

  std::vector<std::int64_t> coords_;
  std::size_t rank_ = 0;
  bool inf_ = false;
};

enum class Ordering { less, equal, greater };

Ordering compare(const OrderedValue &a, const OrderedValue &b);

/// A value strictly below `gamma`: the last coordinate decreased by one.
OrderedValue element_below(const OrderedValue &gamma);

/// gamma0 = min{gamma_1, ..., gamma_r, 0}. Any gamma < gamma0 then satisfies
/// n_i * gamma < gamma_i for every pair. An empty list yields zero of `rank`.
OrderedValue uniform_bound(
    std::span<const std::pair<OrderedValue, std::int64_t>> pairs,
    std::size_t rank = 1);

/// True iff gamma - alpha0 lies in p * Z^n.
bool in_coset(const OrderedValue &gamma, const OrderedValue &alpha0,
              std::int64_t p);

/// Strictly decreasing gamma_1 > ... > gamma_count, all below gamma0 and
/// none in alpha0 + pZ^n.
///
/// With a0 the last unit vector, delta0 = uniform_bound({gamma0-alpha0-a0, p})
/// and delta_i = delta0 - i*a0, the values are gamma_i = alpha0 + a0 + p*delta_i.
/// Note the bound is taken against gamma0 - alpha0 - a0 rather than gamma0
/// itself, which is what keeps gamma_i < gamma0.
std::vector<OrderedValue> descending_nondivisible(const OrderedValue &alpha0,
                                                  const OrderedValue &gamma0,
                                                  std::int64_t p,
                                                  std::size_t count);

// Checked int64 helpers shared with the ring code.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
// Floor modulus in [0, m).
std::int64_t floor_mod(std::int64_t a, std::int64_t m);

} // namespace pembed
