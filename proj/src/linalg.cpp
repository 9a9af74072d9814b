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

#include <pembed/linalg.hpp>

#include <pembed/errors.hpp>
#include <pembed/ordered_group.hpp>

#include <algorithm>
#include <tuple>

namespace pembed::linalg {

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  a = floor_mod(a, p);
  if (a == 0)
    throw InputError("inverse of zero mod p");
  // Extended Euclid.
  std::int64_t t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    std::int64_t qt = r / nr;
    std::tie(t, nt) = std::pair{nt, t - qt * nt};
    std::tie(r, nr) = std::pair{nr, r - qt * nr};
  }
  return floor_mod(t, p);
}

bool is_zero(const Vec &v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

Vec combine(const std::vector<Vec> &basis, const Vec &coeff, std::int64_t p) {
  if (basis.empty())
    return {};
  Vec out(basis.front().size(), 0);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (coeff[i] == 0)
      continue;
    for (std::size_t j = 0; j < out.size(); ++j)
      out[j] = (out[j] + coeff[i] * basis[i][j]) % p;
  }
  return out;
}

RowEchelon::RowEchelon(std::int64_t p, std::size_t n) : p_(p), n_(n) {
  if (p < 2)
    throw InputError("RowEchelon: modulus must be >= 2");
}

Vec RowEchelon::reduce(Vec v) const {
  if (v.size() != n_)
    throw InputError("RowEchelon: vector length mismatch");
  for (auto &x : v)
    x = floor_mod(x, p_);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::int64_t c = v[pivots_[r]];
    if (c == 0)
      continue;
    const Vec &row = rows_[r];
    for (std::size_t j = pivots_[r]; j < n_; ++j)
      if (row[j] != 0)
        v[j] = floor_mod(v[j] - c * row[j], p_);
  }
  return v;
}

bool RowEchelon::contains(const Vec &v) const { return is_zero(reduce(v)); }

bool RowEchelon::insert(Vec v) {
  v = reduce(std::move(v));
  auto lead = std::find_if(v.begin(), v.end(), [](std::int64_t x) { return x != 0; });
  if (lead == v.end())
    return false;
  const std::size_t piv = static_cast<std::size_t>(lead - v.begin());
  const std::int64_t scale = inv_mod(*lead, p_);
  for (std::size_t j = piv; j < n_; ++j)
    v[j] = (v[j] * scale) % p_;
  // Clear the new pivot column from the existing rows.
  for (auto &row : rows_) {
    const std::int64_t c = row[piv];
    if (c == 0)
      continue;
    for (std::size_t j = piv; j < n_; ++j)
      if (v[j] != 0)
        row[j] = floor_mod(row[j] - c * v[j], p_);
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv);
  const auto at = pos - pivots_.begin();
  pivots_.insert(pos, piv);
  rows_.insert(rows_.begin() + at, std::move(v));
  return true;
}

std::vector<Vec> RowEchelon::nullspace() const {
  std::vector<bool> is_pivot(n_, false);
  for (auto c : pivots_)
    is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < n_; ++free) {
    if (is_pivot[free])
      continue;
    Vec x(n_, 0);
    x[free] = 1;
    for (std::size_t r = 0; r < rows_.size(); ++r)
      x[pivots_[r]] = floor_mod(-rows_[r][free], p_);
    basis.push_back(std::move(x));
  }
  return basis;
}

} // namespace pembed::linalg
