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

// JSON forms of every input and report. All top-level documents carry
// "schema_version"; field layouts are listed in docs/schemas.md.

#include <pembed/additive_poly.hpp>
#include <pembed/cohomology.hpp>
#include <pembed/embedding.hpp>
#include <pembed/groups.hpp>
#include <pembed/laurent.hpp>
#include <pembed/ordered_group.hpp>

#include <json.hpp>

#include <map>
#include <string>

namespace pembed::io {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// Checks the version field when present; throws InputError otherwise.
void check_schema(const json &doc);

json to_json(const OrderedValue &v);
OrderedValue value_from_json(const json &j);

json to_json(const FieldSpec &spec);
FieldPtr field_from_json(const json &j);

json to_json(const LaurentPoly &a);
LaurentPoly laurent_from_json(const json &j, const FieldPtr &field);

json to_json(const AdditivePoly &f);
AdditivePoly additive_from_json(const json &j);

json to_json(const Threshold &t);
json to_json(const NonMembershipCertificate &c);

json to_json(const FiniteGroup &g);
GroupPtr group_from_json(const json &j);

json to_json(const GroupHom &h);
GroupHom hom_from_json(const json &j, const GroupPtr &domain,
                       const GroupPtr &codomain);

/// {"groups": {"Pi", "Gamma", "G"}, "alpha", "f"}. A group entry may be the
/// name of another entry to share it.
EmbeddingProblem problem_from_json(const json &j);
json to_json(const EmbeddingProblem &e);

/// {"group", "p", "r"} plus one of "matrices", "generators" with
/// "generator_matrices", or "trivial": true.
PGroupAction action_from_json(const json &j);
json to_json(const PGroupAction &a);

json to_json(const CocycleSpace &cs);
json to_json(const SolutionClassification &c);
json to_json(const TorsorReport &t);
json to_json(const ProjectionReport &p);
json to_json(const DominationReport &d);
json to_json(const KernelBasis &kb);

} // namespace pembed::io
