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

#include <pembed/additive_poly.hpp>

#include <pembed/errors.hpp>
#include <pembed/linalg.hpp>

#include <sstream>

namespace pembed {

namespace {

std::int64_t ipow(std::int64_t base, int e) {
  std::int64_t out = 1;
  for (int i = 0; i < e; ++i)
    out = checked_mul(out, base);
  return out;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  // b > 0
  std::int64_t q = a / b;
  if (a % b != 0 && a > 0)
    ++q;
  return q;
}

void require_nonconstant(const AdditivePoly &f, const char *what) {
  if (f.m() < 1)
    throw InputError(std::string(what) + ": needs m >= 1");
}

} // namespace

AdditivePoly::AdditivePoly(FieldPtr field, std::vector<LaurentPoly> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (!field_)
    throw InputError("AdditivePoly needs a field");
  for (const auto &b : coeffs_)
    if (!same_field(field_, b.field()))
      throw InputError("AdditivePoly coefficient over a different field");
  while (!coeffs_.empty() && coeffs_.back().is_zero())
    coeffs_.pop_back();
  if (coeffs_.empty())
    throw InputError("AdditivePoly must be nonzero");
}

bool AdditivePoly::has_constant_coeffs() const {
  for (const auto &b : coeffs_)
    if (!b.is_zero() && (b.min_exponent() != 0 || b.max_exponent() != 0))
      return false;
  return true;
}

bool AdditivePoly::operator==(const AdditivePoly &o) const {
  return same_field(field_, o.field_) && coeffs_ == o.coeffs_;
}

std::string AdditivePoly::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero())
      continue;
    if (!first)
      os << " + ";
    first = false;
    os << '(' << coeffs_[i].to_string() << ")*T^(p^" << i << ')';
  }
  return os.str();
}

LaurentPoly eval(const AdditivePoly &f, const LaurentPoly &a) {
  if (!same_field(f.field(), a.field()))
    throw InputError("eval: argument over a different field");
  LaurentPoly out(f.field());
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    const auto &b = f.coeffs()[i];
    if (b.is_zero())
      continue;
    out += b * frobenius_pow(a, static_cast<unsigned>(i));
  }
  return out;
}

AdditivePoly compose(const AdditivePoly &f, const AdditivePoly &g) {
  if (!same_field(f.field(), g.field()))
    throw InputError("compose: polynomials over different fields");
  const std::size_t n = f.coeffs().size() + g.coeffs().size() - 1;
  std::vector<LaurentPoly> c(n, LaurentPoly(f.field()));
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    const auto &fi = f.coeffs()[i];
    if (fi.is_zero())
      continue;
    for (std::size_t j = 0; j < g.coeffs().size(); ++j)
      c[i + j] += fi * frobenius_pow(g.coeffs()[j], static_cast<unsigned>(i));
  }
  return AdditivePoly(f.field(), std::move(c));
}

Threshold low_val_threshold(const AdditivePoly &f) {
  require_nonconstant(f, "low_val_threshold");
  const std::int64_t p = f.p();
  const int m = f.m();
  const std::int64_t pm = ipow(p, m);
  const std::int64_t vbm = f.leading().min_exponent();

  Threshold t;
  t.vbm = OrderedValue{vbm};

  // Integer gamma satisfies c*gamma < d exactly when gamma < ceil(d / c).
  std::optional<std::int64_t> alpha;
  for (int i = 0; i < m; ++i) {
    const auto &b = f.coeffs()[i];
    if (b.is_zero())
      continue;
    const std::int64_t c = pm - ipow(p, i);
    const std::int64_t d = checked_add(b.min_exponent(), -vbm);
    const std::int64_t bound = ceil_div(d, c);
    alpha = alpha ? std::min(*alpha, bound) : bound;
  }
  if (!alpha)
    return t;

  std::optional<std::int64_t> beta;
  for (int i = 0; i <= m; ++i) {
    const auto &b = f.coeffs()[i];
    if (b.is_zero())
      continue;
    const std::int64_t v = checked_add(b.min_exponent(),
                                       checked_mul(*alpha, ipow(p, i)));
    beta = beta ? std::min(*beta, v) : v;
  }
  t.alpha = OrderedValue{*alpha};
  t.beta = OrderedValue{*beta};
  t.gamma0 = element_below(t.beta);
  return t;
}

OrderedValue predict_image_valuation(const AdditivePoly &f,
                                     const OrderedValue &va1) {
  if (va1.is_infinity())
    throw InputError("predict_image_valuation: valuation must be finite");
  return f.leading().valuation() + va1.scaled(ipow(f.p(), f.m()));
}

std::optional<NonMembershipCertificate>
certify_not_in_image(const AdditivePoly &f, const LaurentPoly &a) {
  require_nonconstant(f, "certify_not_in_image");
  if (!same_field(f.field(), a.field()))
    throw InputError("certify_not_in_image: element over a different field");
  if (a.is_zero())
    throw InputError("certify_not_in_image: 0 = f(0) is always in the image");
  Threshold t = low_val_threshold(f);
  const OrderedValue v = a.valuation();
  if (!(v < t.gamma0) || in_coset(v, t.vbm, f.p()))
    return std::nullopt;
  const std::int64_t residue = floor_mod((v - t.vbm)[0], f.p());
  return NonMembershipCertificate{a, v, std::move(t), f.p(), residue};
}

bool verify_certificate(const AdditivePoly &f,
                        const NonMembershipCertificate &cert) {
  if (f.m() < 1 || cert.element.is_zero() || cert.p != f.p())
    return false;
  const Threshold t = low_val_threshold(f);
  if (t.alpha != cert.threshold.alpha || t.beta != cert.threshold.beta ||
      t.gamma0 != cert.threshold.gamma0 || t.vbm != cert.threshold.vbm)
    return false;
  const OrderedValue v = cert.element.valuation();
  if (v != cert.valuation || !(v < t.gamma0))
    return false;
  const std::int64_t residue = floor_mod((v - t.vbm)[0], f.p());
  return residue != 0 && residue == cert.residue;
}

std::vector<LaurentPoly> coset_witnesses(const AdditivePoly &f,
                                         std::size_t count) {
  require_nonconstant(f, "coset_witnesses");
  if (count == 0)
    throw InputError("coset_witnesses: count must be >= 1");
  const Threshold t = low_val_threshold(f);
  const OrderedValue start = t.bounded() ? t.gamma0 : t.vbm;
  std::vector<LaurentPoly> out;
  out.reserve(count);
  for (const auto &e : descending_nondivisible(t.vbm, start, f.p(), count))
    out.push_back(LaurentPoly::monomial(f.field(), f.field()->one(), e[0]));
  return out;
}

LaurentPoly preimage_candidate(const FieldPtr &field, std::int64_t bound,
                               std::uint64_t index) {
  LaurentPoly::Terms terms;
  const std::uint64_t q = field->q();
  for (std::int64_t e = -bound; e <= bound; ++e) {
    const auto c = static_cast<std::uint32_t>(index % q);
    index /= q;
    if (c != 0)
      terms.emplace(e, FqElem{c});
  }
  return LaurentPoly(field, std::move(terms));
}

FqElem embed(const FiniteField &base, const FiniteField &ext, FqElem gen,
             FqElem a) {
  FqElem out = ext.zero();
  FqElem power = ext.one();
  for (auto c : base.coeffs(a)) {
    out = ext.add(out, ext.mul(ext.from_int(c), power));
    power = ext.mul(power, gen);
  }
  return out;
}

FqElem eval_in_extension(const AdditivePoly &f, const KernelBasis &kb,
                         FqElem y) {
  const FiniteField &L = *kb.extension;
  FqElem out = L.zero();
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    const FqElem b = embed(*f.field(), L, kb.embedded_generator,
                           f.coeffs()[i].coeff(0));
    out = L.add(out, L.mul(b, L.frobenius(y, static_cast<unsigned>(i))));
  }
  return out;
}

KernelBasis kernel_points(const AdditivePoly &f, int ext_degree) {
  if (!f.has_constant_coeffs())
    throw InputError("kernel_points: coefficients must be constants");
  if (ext_degree < 1)
    throw InputError("kernel_points: extension degree must be >= 1");
  const FiniteField &F = *f.field();
  KernelBasis kb;
  kb.extension = FiniteField::make(F.p(), F.k() * ext_degree);
  const FiniteField &L = *kb.extension;

  // Smallest root of the base modulus inside L.
  bool found = false;
  for (std::uint32_t idx = 0; idx < L.q() && !found; ++idx) {
    FqElem acc = L.zero(), power = L.one();
    for (auto c : F.spec().modulus) {
      acc = L.add(acc, L.mul(L.from_int(c), power));
      power = L.mul(power, FqElem{idx});
    }
    if (acc.is_zero()) {
      kb.embedded_generator = FqElem{idx};
      found = true;
    }
  }
  if (!found)
    throw InputError("kernel_points: base field does not embed"); // unreachable

  // f is F_p-linear on L; column j is f applied to T^j.
  const auto dim = static_cast<std::size_t>(L.k());
  std::vector<linalg::Vec> cols;
  std::uint32_t basis_elem = 1;
  for (std::size_t j = 0; j < dim; ++j) {
    cols.push_back(L.coeffs(eval_in_extension(f, kb, FqElem{basis_elem})));
    basis_elem *= static_cast<std::uint32_t>(L.p());
  }
  linalg::RowEchelon rows(L.p(), dim);
  for (std::size_t r = 0; r < dim; ++r) {
    linalg::Vec row(dim);
    for (std::size_t j = 0; j < dim; ++j)
      row[j] = cols[j][r];
    rows.insert(std::move(row));
  }
  for (const auto &x : rows.nullspace())
    kb.basis.push_back(L.from_coeffs(x));
  return kb;
}

} // namespace pembed
