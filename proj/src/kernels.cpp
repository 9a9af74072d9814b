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

#include <pembed/kernels.hpp>

#include <pembed/errors.hpp>

#include <algorithm>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pembed {

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace kernels {

namespace {

std::uint64_t checked_product(const std::vector<std::uint64_t> &radix,
                              std::uint64_t cap, const char *what) {
  std::uint64_t total = 1;
  for (auto r : radix) {
    if (r == 0)
      return 0;
    if (total > cap / r)
      throw CapExceeded(std::string(what) + ": search space exceeds cap");
    total *= r;
  }
  return total;
}

// Mixed-radix decode, digit 0 most significant.
void decode(std::uint64_t t, const std::vector<std::uint64_t> &radix,
            std::vector<std::size_t> &digits) {
  for (std::size_t i = radix.size(); i-- > 0;) {
    digits[i] = static_cast<std::size_t>(t % radix[i]);
    t /= radix[i];
  }
}

} // namespace

std::vector<std::vector<int>>
enumerate_hom_maps(const FiniteGroup &domain, const FiniteGroup &codomain,
                   std::span<const int> gens,
                   const std::vector<std::vector<int>> &candidates, Exec exec) {
  if (gens.size() != candidates.size())
    throw InputError("enumerate_hom_maps: one candidate list per generator");
  std::vector<std::uint64_t> radix;
  for (const auto &c : candidates)
    radix.push_back(c.size());
  const std::uint64_t total = checked_product(
      radix, std::numeric_limits<std::uint32_t>::max(), "enumerate_hom_maps");

  auto try_index = [&](std::uint64_t t, std::vector<std::size_t> &digits,
                       std::vector<int> &images) {
    decode(t, radix, digits);
    for (std::size_t i = 0; i < gens.size(); ++i)
      images[i] = candidates[i][digits[i]];
    return extend_generator_images(domain, codomain, gens, images);
  };

  if (exec == Exec::serial) {
    std::vector<std::vector<int>> out;
    std::vector<std::size_t> digits(gens.size());
    std::vector<int> images(gens.size());
    for (std::uint64_t t = 0; t < total; ++t) {
      auto map = try_index(t, digits, images);
      if (!map.empty())
        out.push_back(std::move(map));
    }
    return out;
  }

  // Contiguous chunks keep each chunk's hits in index order; concatenating
  // chunks in order reproduces the serial sequence.
  const std::int64_t nchunks =
      static_cast<std::int64_t>(std::min<std::uint64_t>(total, 4096));
  std::vector<std::vector<std::vector<int>>> per_chunk(nchunks);
#pragma omp parallel
  {
    std::vector<std::size_t> digits(gens.size());
    std::vector<int> images(gens.size());
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t c = 0; c < nchunks; ++c) {
      const std::uint64_t lo = total * c / nchunks;
      const std::uint64_t hi = total * (c + 1) / nchunks;
      for (std::uint64_t t = lo; t < hi; ++t) {
        auto map = try_index(t, digits, images);
        if (!map.empty())
          per_chunk[c].push_back(std::move(map));
      }
    }
  }
  std::vector<std::vector<int>> out;
  for (auto &chunk : per_chunk)
    for (auto &map : chunk)
      out.push_back(std::move(map));
  return out;
}

std::vector<linalg::Vec> enumerate_cocycles(const PGroupAction &action,
                                            Exec exec) {
  const FiniteGroup &Pi = *action.acting();
  const int n = Pi.order();
  const int r = action.r();
  const std::int64_t p = action.p();
  const std::size_t len = static_cast<std::size_t>(n) * r;
  std::vector<std::uint64_t> radix(len, static_cast<std::uint64_t>(p));
  const std::uint64_t total =
      checked_product(radix, kMaxCocycleCandidates, "enumerate_cocycles");

  auto passes = [&](const linalg::Vec &c, linalg::Vec &lhs) {
    for (int s = 0; s < n; ++s) {
      const Matrix &m = action.matrix(s);
      for (int t = 0; t < n; ++t) {
        const std::size_t st = static_cast<std::size_t>(Pi.mul(s, t)) * r;
        for (int i = 0; i < r; ++i) {
          std::int64_t v = c[s * r + i];
          for (int j = 0; j < r; ++j)
            v += m[i][j] * c[t * r + j];
          lhs[i] = v % p;
          if (lhs[i] != c[st + i])
            return false;
        }
      }
    }
    return true;
  };
  // Base-p digits, position 0 least significant.
  auto decode_vec = [&](std::uint64_t t, linalg::Vec &c) {
    for (std::size_t i = 0; i < len; ++i) {
      c[i] = static_cast<std::int64_t>(t % static_cast<std::uint64_t>(p));
      t /= static_cast<std::uint64_t>(p);
    }
  };

  if (exec == Exec::serial) {
    std::vector<linalg::Vec> out;
    linalg::Vec c(len), lhs(r);
    for (std::uint64_t t = 0; t < total; ++t) {
      decode_vec(t, c);
      if (passes(c, lhs))
        out.push_back(c);
    }
    return out;
  }

  const std::int64_t nchunks =
      static_cast<std::int64_t>(std::min<std::uint64_t>(total, 1024));
  std::vector<std::vector<linalg::Vec>> per_chunk(nchunks);
#pragma omp parallel
  {
    linalg::Vec c(len), lhs(r);
#pragma omp for schedule(dynamic, 8)
    for (std::int64_t k = 0; k < nchunks; ++k) {
      const std::uint64_t lo = total * k / nchunks;
      const std::uint64_t hi = total * (k + 1) / nchunks;
      for (std::uint64_t t = lo; t < hi; ++t) {
        decode_vec(t, c);
        if (passes(c, lhs))
          per_chunk[k].push_back(c);
      }
    }
  }
  std::vector<linalg::Vec> out;
  for (auto &chunk : per_chunk)
    for (auto &c : chunk)
      out.push_back(std::move(c));
  return out;
}

std::optional<std::uint64_t> find_preimage_index(const AdditivePoly &f,
                                                 const LaurentPoly &a,
                                                 std::int64_t bound, Exec exec) {
  if (bound < 0)
    throw InputError("brute_force_in_image: bound must be >= 0");
  if (!same_field(f.field(), a.field()))
    throw InputError("brute_force_in_image: element over a different field");
  const FieldPtr &field = f.field();
  const FiniteField &F = *field;
  const std::uint64_t q = F.q();
  const std::size_t positions = static_cast<std::size_t>(2 * bound + 1);
  const std::uint64_t total = checked_product(
      std::vector<std::uint64_t>(positions, q), kMaxPreimageSearch,
      "brute_force_in_image");

  if (exec == Exec::serial) {
    for (std::uint64_t t = 0; t < total; ++t)
      if (eval(f, preimage_candidate(field, bound, t)) == a)
        return t;
    return std::nullopt;
  }

  // f is additive, so f(sum c_e x^e) = sum f(c_e x^e). Tabulate every
  // single-term image densely over a common exponent window, as base-p
  // digit arrays, and sum per candidate.
  std::vector<std::vector<LaurentPoly>> images(positions);
  std::int64_t lo = std::numeric_limits<std::int64_t>::max();
  std::int64_t hi = std::numeric_limits<std::int64_t>::min();
  auto widen = [&](const LaurentPoly &x) {
    if (!x.is_zero()) {
      lo = std::min(lo, x.min_exponent());
      hi = std::max(hi, x.max_exponent());
    }
  };
  for (std::size_t j = 0; j < positions; ++j) {
    const std::int64_t e = -bound + static_cast<std::int64_t>(j);
    for (std::uint32_t c = 0; c < q; ++c) {
      images[j].push_back(eval(f, LaurentPoly::monomial(field, FqElem{c}, e)));
      widen(images[j].back());
    }
  }
  widen(a);
  if (lo > hi) // every image and the target are zero
    return 0;

  const std::size_t k = static_cast<std::size_t>(F.k());
  const std::size_t width = static_cast<std::size_t>(hi - lo + 1) * k;
  auto dense = [&](const LaurentPoly &x) {
    std::vector<std::uint16_t> out(width, 0);
    for (const auto &[e, c] : x.terms()) {
      const auto cs = F.coeffs(c);
      for (std::size_t d = 0; d < k; ++d)
        out[static_cast<std::size_t>(e - lo) * k + d] =
            static_cast<std::uint16_t>(cs[d]);
    }
    return out;
  };
  std::vector<std::vector<std::uint16_t>> table(positions * q);
  for (std::size_t j = 0; j < positions; ++j)
    for (std::uint32_t c = 0; c < q; ++c)
      table[j * q + c] = dense(images[j][c]);
  const auto target = dense(a);
  const auto p = static_cast<std::uint16_t>(F.p());

  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  const auto total_signed = static_cast<std::int64_t>(total);
#pragma omp parallel reduction(min : best)
  {
    std::vector<std::uint16_t> acc(width);
#pragma omp for schedule(static)
    for (std::int64_t ts = 0; ts < total_signed; ++ts) {
      const auto t = static_cast<std::uint64_t>(ts);
      if (t >= best)
        continue;
      std::fill(acc.begin(), acc.end(), 0);
      std::uint64_t rest = t;
      for (std::size_t j = 0; j < positions; ++j) {
        const auto c = static_cast<std::uint32_t>(rest % q);
        rest /= q;
        if (c == 0)
          continue;
        const auto &img = table[j * q + c];
        for (std::size_t w = 0; w < width; ++w) {
          const std::uint16_t s = acc[w] + img[w];
          acc[w] = s >= p ? s - p : s;
        }
      }
      if (acc == target)
        best = t;
    }
  }
  if (best == std::numeric_limits<std::uint64_t>::max())
    return std::nullopt;
  return best;
}

} // namespace kernels

std::optional<LaurentPoly> brute_force_in_image(const AdditivePoly &f,
                                                const LaurentPoly &a,
                                                std::int64_t bound, Exec exec) {
  auto idx = kernels::find_preimage_index(f, a, bound, exec);
  if (!idx)
    return std::nullopt;
  return preimage_candidate(f.field(), bound, *idx);
}

} // namespace pembed
