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

#include <cstddef>
#include <cstdint>
#include <vector>

namespace pembed::linalg {

using Vec = std::vector<std::int64_t>;

std::int64_t inv_mod(std::int64_t a, std::int64_t p);

// Subspace of F_p^n held as a reduced row echelon basis. Rows stay sorted
// by pivot column and every pivot column is zero outside its own row.
class RowEchelon {
public:
  RowEchelon(std::int64_t p, std::size_t n);

  // Adds v to the span; returns false if v was already in it.
  bool insert(Vec v);
  // Zeroes every pivot coordinate of v. This is the lexicographically
  // smallest vector in v + span.
  Vec reduce(Vec v) const;
  bool contains(const Vec &v) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t dim() const { return n_; }
  std::int64_t p() const { return p_; }
  const std::vector<Vec> &rows() const { return rows_; }
  const std::vector<std::size_t> &pivots() const { return pivots_; }

  // Basis of { x : <row, x> = 0 for every row }.
  std::vector<Vec> nullspace() const;

private:
  std::int64_t p_;
  std::size_t n_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

bool is_zero(const Vec &v);

// Coefficient vector (mod p) for sum_i coeff_i * basis_i.
Vec combine(const std::vector<Vec> &basis, const Vec &coeff, std::int64_t p);

} // namespace pembed::linalg
