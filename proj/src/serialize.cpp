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

#include <pembed/serialize.hpp>

#include <pembed/errors.hpp>

namespace pembed::io {

namespace {

const json &require(const json &j, const char *key) {
  if (!j.is_object() || !j.contains(key))
    throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <class T> T get_as(const json &j, const char *key) {
  try {
    return require(j, key).get<T>();
  } catch (const json::exception &e) {
    throw InputError(std::string("field '") + key + "': " + e.what());
  }
}

json banner() {
  return "finite-scale analogue: infinitude statements are reported as "
         "verified lower bounds only";
}

} // namespace

void check_schema(const json &doc) {
  if (!doc.is_object())
    throw InputError("document must be a JSON object");
  if (doc.contains("schema_version") &&
      doc.at("schema_version") != kSchemaVersion)
    throw InputError("unsupported schema_version");
}

json to_json(const OrderedValue &v) {
  if (v.is_infinity())
    return "inf";
  return json(std::vector<std::int64_t>(v.coords().begin(), v.coords().end()));
}

OrderedValue value_from_json(const json &j) {
  if (j.is_string()) {
    if (j.get<std::string>() != "inf")
      throw InputError("ordered value string must be \"inf\"");
    return OrderedValue::infinity(1);
  }
  if (!j.is_array() || j.empty())
    throw InputError("ordered value must be a nonempty integer array");
  return OrderedValue(j.get<std::vector<std::int64_t>>());
}

json to_json(const FieldSpec &spec) {
  return {{"p", spec.p}, {"k", spec.k}, {"modulus", spec.modulus}};
}

FieldPtr field_from_json(const json &j) {
  const auto p = get_as<std::int64_t>(j, "p");
  const int k = j.contains("k") ? get_as<int>(j, "k") : 1;
  if (j.contains("modulus"))
    return FiniteField::make(
        FieldSpec{p, k, get_as<std::vector<std::int64_t>>(j, "modulus")});
  return FiniteField::make(p, k);
}

json to_json(const LaurentPoly &a) {
  json out = json::array();
  for (const auto &[e, c] : a.terms())
    out.push_back(json::array({e, a.field()->coeffs(c)}));
  return out;
}

LaurentPoly laurent_from_json(const json &j, const FieldPtr &field) {
  if (!j.is_array())
    throw InputError("Laurent polynomial must be a list of [exponent, coeffs]");
  LaurentPoly out(field);
  for (const auto &term : j) {
    if (!term.is_array() || term.size() != 2 || !term[0].is_number_integer())
      throw InputError("Laurent term must be [exponent, coefficients]");
    const auto e = term[0].get<std::int64_t>();
    FqElem c;
    if (term[1].is_number_integer())
      c = field->from_int(term[1].get<std::int64_t>());
    else if (term[1].is_array())
      c = field->from_coeffs(term[1].get<std::vector<std::int64_t>>());
    else
      throw InputError("Laurent coefficient must be an integer or a vector");
    out += LaurentPoly::monomial(field, c, e);
  }
  return out;
}

json to_json(const AdditivePoly &f) {
  json out = to_json(f.field()->spec());
  json coeffs = json::array();
  for (const auto &b : f.coeffs())
    coeffs.push_back(to_json(b));
  out["coeffs"] = coeffs;
  return out;
}

AdditivePoly additive_from_json(const json &j) {
  const json &fj = j.contains("field") ? j.at("field") : j;
  FieldPtr field = field_from_json(fj);
  std::vector<LaurentPoly> coeffs;
  for (const auto &c : require(j, "coeffs"))
    coeffs.push_back(laurent_from_json(c, field));
  return AdditivePoly(field, std::move(coeffs));
}

json to_json(const Threshold &t) {
  return {{"alpha", t.alpha ? to_json(*t.alpha) : json("unbounded")},
          {"beta", to_json(t.beta)},
          {"gamma0", to_json(t.gamma0)},
          {"v_bm", to_json(t.vbm)}};
}

json to_json(const NonMembershipCertificate &c) {
  return {{"element", to_json(c.element)},
          {"valuation", to_json(c.valuation)},
          {"threshold", to_json(c.threshold)},
          {"p", c.p},
          {"residue_mod_p", c.residue}};
}

json to_json(const FiniteGroup &g) {
  return {{"order", g.order()}, {"table", g.table()}, {"labels", g.labels()}};
}

GroupPtr group_from_json(const json &j) {
  if (j.contains("table") && !j.contains("kind")) {
    const auto table = get_as<std::vector<int>>(j, "table");
    auto labels = j.contains("labels")
                      ? get_as<std::vector<std::string>>(j, "labels")
                      : std::vector<std::string>{};
    if (j.contains("order") &&
        static_cast<std::size_t>(get_as<int>(j, "order")) *
                get_as<int>(j, "order") != table.size())
      throw InputError("table size does not match order");
    return std::make_shared<const FiniteGroup>(table, std::move(labels));
  }
  const auto kind = get_as<std::string>(j, "kind");
  if (kind == "trivial")
    return trivial_group();
  if (kind == "cyclic")
    return cyclic(get_as<int>(j, "n"));
  if (kind == "symmetric")
    return symmetric(get_as<int>(j, "n"));
  if (kind == "elementary_abelian")
    return elementary_abelian(get_as<std::int64_t>(j, "p"), get_as<int>(j, "r"));
  if (kind == "direct_product") {
    const json &fs = require(j, "factors");
    if (!fs.is_array() || fs.empty())
      throw InputError("direct_product needs a nonempty factor list");
    GroupPtr g = group_from_json(fs[0]);
    for (std::size_t i = 1; i < fs.size(); ++i)
      g = direct_product(g, group_from_json(fs[i]));
    return g;
  }
  if (kind == "table") {
    json copy = j;
    copy.erase("kind");
    return group_from_json(copy);
  }
  throw InputError("unknown group kind '" + kind + "'");
}

json to_json(const GroupHom &h) { return {{"map", h.map()}}; }

GroupHom hom_from_json(const json &j, const GroupPtr &domain,
                       const GroupPtr &codomain) {
  if (j.is_array())
    return GroupHom(domain, codomain, j.get<std::vector<int>>());
  if (j.contains("map"))
    return GroupHom(domain, codomain, get_as<std::vector<int>>(j, "map"));
  const auto gens = get_as<std::vector<int>>(j, "generators");
  const auto images = get_as<std::vector<int>>(j, "images");
  return GroupHom::from_generators(domain, codomain, gens, images);
}

EmbeddingProblem problem_from_json(const json &j) {
  check_schema(j);
  const json &groups = require(j, "groups");
  std::map<std::string, GroupPtr> built;
  auto resolve = [&](const std::string &name, auto &&self) -> GroupPtr {
    if (auto it = built.find(name); it != built.end())
      return it->second;
    const json &spec = require(groups, name.c_str());
    GroupPtr g;
    if (spec.is_string()) {
      const auto target = spec.get<std::string>();
      if (target == name)
        throw InputError("group '" + name + "' refers to itself");
      built[name] = nullptr; // cycle guard
      g = self(target, self);
    } else {
      g = group_from_json(spec);
    }
    if (!g)
      throw InputError("cyclic group reference at '" + name + "'");
    built[name] = g;
    return g;
  };
  const GroupPtr Pi = resolve("Pi", resolve);
  const GroupPtr Gamma = resolve("Gamma", resolve);
  const GroupPtr G = resolve("G", resolve);
  return make_problem(hom_from_json(require(j, "alpha"), Pi, G),
                      hom_from_json(require(j, "f"), Gamma, G));
}

json to_json(const EmbeddingProblem &e) {
  json out = {{"Pi_order", e.pi()->order()},
              {"Gamma_order", e.gamma()->order()},
              {"G_order", e.g()->order()},
              {"kernel", e.kernel()},
              {"kernel_order", e.kernel().size()},
              {"is_split", e.is_split()},
              {"is_p_problem", e.is_p_problem()},
              {"p", e.p() ? json(*e.p()) : json(nullptr)}};
  if (e.section())
    out["section"] = to_json(*e.section());
  return out;
}

PGroupAction action_from_json(const json &j) {
  check_schema(j);
  const GroupPtr g = group_from_json(require(j, "group"));
  const auto p = get_as<std::int64_t>(j, "p");
  const auto r = get_as<int>(j, "r");
  if (j.contains("matrices"))
    return PGroupAction(g, p, r, get_as<std::vector<Matrix>>(j, "matrices"));
  if (j.contains("generators"))
    return PGroupAction::from_generators(
        g, p, r, get_as<std::vector<int>>(j, "generators"),
        get_as<std::vector<Matrix>>(j, "generator_matrices"));
  if (j.value("trivial", false))
    return PGroupAction::trivial(g, p, r);
  throw InputError("action needs 'matrices', 'generators' or 'trivial'");
}

json to_json(const PGroupAction &a) {
  return {{"group_order", a.acting()->order()},
          {"p", a.p()},
          {"r", a.r()},
          {"matrices", a.matrices()}};
}

json to_json(const CocycleSpace &cs) {
  json out = {{"p", cs.p()},
              {"r", cs.r()},
              {"group_order", cs.action().acting()->order()},
              {"dim_Z1", cs.dim_z1()},
              {"dim_B1", cs.dim_b1()},
              {"dim_H1", cs.dim_h1()},
              {"H1_order", cs.h1_order()},
              {"Z1_basis", cs.z1_basis()},
              {"B1_basis", cs.b1_basis()}};
  if (cs.h1_order() <= 4096)
    out["H1_representatives"] = cs.h1_representatives();
  return out;
}

json to_json(const SolutionClassification &c) {
  json sols = json::array();
  for (std::size_t i = 0; i < c.solutions.size(); ++i)
    sols.push_back({{"map", c.solutions[i].map()},
                    {"proper", static_cast<bool>(c.proper[i])},
                    {"class", c.class_of[i]}});
  return {{"solutions", sols},
          {"solution_count", c.solutions.size()},
          {"classes", c.classes},
          {"class_count", c.classes.size()},
          {"representatives", c.representatives}};
}

json to_json(const TorsorReport &t) {
  return {{"solutions", t.solutions},
          {"classes", t.classes},
          {"p", t.p},
          {"r", t.r},
          {"dim_Z1", t.dim_z1},
          {"dim_B1", t.dim_b1},
          {"dim_H1", t.dim_h1},
          {"H1_order", t.h1_order},
          {"differences_are_cocycles", t.differences_are_cocycles},
          {"class_map_well_defined", t.class_map_well_defined},
          {"injective", t.injective},
          {"surjective", t.surjective},
          {"bijective", t.bijective()},
          {"solutions_match_Z1", t.solutions_match_cocycles},
          {"class_images", t.class_images},
          {"verdict", t.ok() ? "OK" : "FAIL"},
          {"assumption", "cd_p(Pi) <= 1 is not computed"}};
}

json to_json(const ProjectionReport &p) {
  json projs = json::array();
  for (std::size_t i = 0; i < p.projections.size(); ++i)
    projs.push_back({{"map", p.projections[i].map()},
                     {"weak_solution", static_cast<bool>(p.weak[i])},
                     {"proper", static_cast<bool>(p.proper[i])}});
  json pairs = json::array();
  for (auto [i, j] : p.equivalent_pairs)
    pairs.push_back({i, j});
  return {{"projections", projs},
          {"equivalent_pairs", pairs},
          {"pairwise_inequivalent", p.pairwise_inequivalent()}};
}

json to_json(const DominationReport &d) {
  return {{"n", d.n},
          {"Pi_order", d.pi_order},
          {"kernel_order", d.kernel_order},
          {"p", d.p},
          {"r", d.r},
          {"projections", to_json(d.projections)},
          {"dim_Z1", d.dim_z1},
          {"dim_B1", d.dim_b1},
          {"dim_H1", d.dim_h1},
          {"H1_order", d.h1_order},
          {"H1_at_least_n", d.inequality_holds()},
          {"verdict", d.ok() ? "OK" : "FAIL"},
          {"note", banner()},
          {"assumption", "cd_p(Pi) <= 1 is not computed"}};
}

json to_json(const KernelBasis &kb) {
  json basis = json::array();
  for (auto b : kb.basis)
    basis.push_back(kb.extension->coeffs(b));
  return {{"extension", to_json(kb.extension->spec())},
          {"embedded_generator", kb.extension->coeffs(kb.embedded_generator)},
          {"dimension", kb.basis.size()},
          {"basis", basis}};
}

} // namespace pembed::io
