// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON forms of clutters, witnesses, certificates, family parameters and
// census reports. Vertices are 1-based and sorted ascending; edge indices are
// 0-based. Every from_json throws ParseError on malformed input and the
// construction errors of the core and paving modules on invalid values.

#ifndef PXM_SERIALIZE_H_
#define PXM_SERIALIZE_H_

#include <string>
#include <string_view>
#include <variant>

#include "json.hpp"
#include "pxm/blocks.h"
#include "pxm/clutter.h"
#include "pxm/enumeration.h"
#include "pxm/excluded.h"
#include "pxm/families.h"
#include "pxm/obstruction.h"
#include "pxm/ordering.h"
#include "pxm/paving.h"

namespace pxm {

using Json = nlohmann::ordered_json;

// A document without "rank" is a plain clutter.
using Document = std::variant<Clutter, PavingClutter>;

Document parse_document(std::string_view text);
Document document_from_json(const Json& j);
const Clutter& document_clutter(const Document& doc);

Json to_json(const Clutter& c);
Json to_json(const PavingClutter& p);
Json to_json(const Document& doc);
Clutter clutter_from_json(const Json& j);
PavingClutter paving_from_json(const Json& j);

// {"order": [...], "cyclic": bool}
Json to_json(const OrderingWitness& w);
OrderingWitness ordering_from_json(const Json& j);

// {"kind": "type1", "edges": [indices]}
Json to_json(const ObstructionWitness& w);
ObstructionWitness obstruction_from_json(const Json& j);

Json to_json(const MinorResult& r);
MinorResult minor_result_from_json(const Json& j);

Json to_json(const XmCertificate& cert);
XmCertificate certificate_from_json(const Json& j);

// {"family": "O", "d": 3, "a": [1, 1, 1]}
Json to_json(const FamilyParams& p);
FamilyParams params_from_json(const Json& j);

// Command-line form: comma-separated key=value pairs. A bare value extends
// the list of the preceding key, so "d=3,a=1,1,1" sets a = (1, 1, 1).
FamilyParams parse_params(FamilyTag tag, std::string_view text);

Json to_json(const CriterionReport& r);
CriterionReport criterion_from_json(const Json& j);

Json to_json(const Reduction& r);
Reduction reduction_from_json(const Json& j);

Json to_json(const Placement& p);

Json to_json(const ExcludedMinorEntry& e);
Json to_json(const CensusRow& row);
Json to_json(const CensusReport& report);

}  // namespace pxm

#endif  // PXM_SERIALIZE_H_
