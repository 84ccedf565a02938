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

#include "pxm/serialize.h"

#include <charconv>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pxm/error.h"

namespace pxm {
namespace {

[[noreturn]] void fail(const std::string& message) {
  throw Error(ErrorKind::kParseError, message);
}

const Json& field(const Json& j, const std::string& key) {
  if (!j.is_object()) fail("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) fail("missing field \"" + key + "\"");
  return *it;
}

bool has(const Json& j, const std::string& key) {
  return j.is_object() && j.contains(key) && !j.at(key).is_null();
}

int as_int(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) fail(what + " must be an integer");
  const auto v = j.get<std::int64_t>();
  if (v < std::numeric_limits<int>::min() ||
      v > std::numeric_limits<int>::max()) {
    fail(what + " is out of range");
  }
  return static_cast<int>(v);
}

std::size_t as_index(const Json& j, const std::string& what) {
  const int v = as_int(j, what);
  if (v < 0) fail(what + " must be nonnegative");
  return static_cast<std::size_t>(v);
}

bool as_bool(const Json& j, const std::string& what) {
  if (!j.is_boolean()) fail(what + " must be a boolean");
  return j.get<bool>();
}

std::string as_string(const Json& j, const std::string& what) {
  if (!j.is_string()) fail(what + " must be a string");
  return j.get<std::string>();
}

const Json& as_array(const Json& j, const std::string& what) {
  if (!j.is_array()) fail(what + " must be an array");
  return j;
}

std::vector<int> as_ints(const Json& j, const std::string& what) {
  std::vector<int> out;
  for (const Json& v : as_array(j, what)) out.push_back(as_int(v, what));
  return out;
}

std::vector<std::size_t> as_indices(const Json& j, const std::string& what) {
  std::vector<std::size_t> out;
  for (const Json& v : as_array(j, what)) out.push_back(as_index(v, what));
  return out;
}

Json edges_json(const Clutter& c) {
  Json edges = Json::array();
  for (VertexSet e : c.edges()) edges.push_back(e.to_vector());
  return edges;
}

Clutter read_clutter(const Json& j) {
  const int n = as_int(field(j, "n"), "n");
  std::vector<std::vector<int>> edges;
  for (const Json& e : as_array(field(j, "edges"), "edges")) {
    edges.push_back(as_ints(e, "edge"));
  }
  return make_clutter(n, edges);
}

// Family parameters as named integer lists, shared by the JSON and
// command-line forms.
using Fields = std::map<std::string, std::vector<int>>;

class FieldReader {
 public:
  FieldReader(FamilyTag tag, Fields fields)
      : tag_(tag), fields_(std::move(fields)) {}

  int scalar(const std::string& key) {
    const std::vector<int>& v = take(key);
    if (v.size() != 1) fail(where(key) + " must be a single integer");
    return v.front();
  }

  int scalar_or(const std::string& key, int fallback) {
    return fields_.count(key) ? scalar(key) : fallback;
  }

  std::vector<int> list(const std::string& key) { return take(key); }

  std::vector<int> list_or_empty(const std::string& key) {
    return fields_.count(key) ? take(key) : std::vector<int>{};
  }

  // An optional m must agree with the list lengths.
  void check_m(std::size_t m) {
    if (!fields_.count("m")) return;
    if (scalar("m") != static_cast<int>(m)) {
      fail(where("m") + " disagrees with the list length " +
           std::to_string(m));
    }
  }

  void finish() {
    for (const auto& [key, value] : fields_) {
      if (!used_.count(key)) fail(where(key) + " is not a parameter");
    }
  }

 private:
  std::string where(const std::string& key) const {
    return std::string(family_name(tag_)) + " field \"" + key + "\"";
  }

  const std::vector<int>& take(const std::string& key) {
    auto it = fields_.find(key);
    if (it == fields_.end()) fail(where(key) + " is required");
    used_.insert(key);
    return it->second;
  }

  FamilyTag tag_;
  Fields fields_;
  std::set<std::string> used_;
};

FamilyParams params_from_fields(FamilyTag tag, Fields fields) {
  FieldReader r(tag, std::move(fields));
  FamilyParams out;
  switch (tag) {
    case FamilyTag::kO: {
      OParams p;
      p.d = r.scalar("d");
      p.a = r.list("a");
      p.sizes = r.list_or_empty("sizes");
      r.check_m(p.a.size());
      out = p;
      break;
    }
    case FamilyTag::kY:
      out = YParams{r.scalar("d"), r.scalar("a"), r.scalar("b"),
                    r.scalar("c_size")};
      break;
    case FamilyTag::kSh:
      out = ShParams{r.scalar("d"), r.scalar("a"), r.scalar("b"),
                     r.scalar("c"), r.scalar_or("d_size", 0)};
      break;
    case FamilyTag::kYprime:
      out = YprimeParams{r.scalar("d"), r.scalar("a"), r.scalar("b")};
      break;
    case FamilyTag::kMultiY: {
      MultiYParams p;
      p.d = r.scalar("d");
      p.a = r.list("a");
      p.b = r.list("b");
      p.w_size = r.scalar_or("w_size", 1);
      r.check_m(p.a.size());
      out = p;
      break;
    }
    case FamilyTag::kDelta1:
      out = Delta1Params{r.scalar("a"), r.scalar("b"), r.scalar("c")};
      break;
    case FamilyTag::kDelta2:
      out = Delta2Params{r.scalar("a"), r.scalar("b"), r.scalar("c"),
                         r.scalar("k")};
      break;
    case FamilyTag::kDelta3:
      out = Delta3Params{r.scalar("a"), r.scalar("b"), r.scalar("c")};
      break;
  }
  r.finish();
  return out;
}

Json minor_op_json(MinorOp op) { return std::string(minor_op_name(op)); }

MinorOp minor_op_from(const Json& j) {
  const std::string s = as_string(j, "op");
  if (s == minor_op_name(MinorOp::kDelete)) return MinorOp::kDelete;
  if (s == minor_op_name(MinorOp::kContract)) return MinorOp::kContract;
  fail("unknown minor operation \"" + s + "\"");
}

}  // namespace

Document parse_document(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
  return document_from_json(j);
}

Document document_from_json(const Json& j) {
  if (!j.is_object()) fail("expected a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key != "n" && key != "rank" && key != "edges" &&
        key != "trivially_interval") {
      fail("unknown document field \"" + key + "\"");
    }
  }
  if (has(j, "trivially_interval") && !has(j, "rank")) {
    fail("trivially_interval requires rank");
  }
  if (has(j, "rank")) return paving_from_json(j);
  return clutter_from_json(j);
}

const Clutter& document_clutter(const Document& doc) {
  if (const auto* p = std::get_if<PavingClutter>(&doc)) return p->clutter();
  return std::get<Clutter>(doc);
}

Json to_json(const Clutter& c) {
  Json j;
  j["n"] = c.n();
  j["edges"] = edges_json(c);
  return j;
}

Json to_json(const PavingClutter& p) {
  Json j;
  j["n"] = p.n();
  j["rank"] = p.rank();
  j["edges"] = edges_json(p.clutter());
  if (p.trivially_interval()) j["trivially_interval"] = true;
  return j;
}

Json to_json(const Document& doc) {
  return std::visit([](const auto& v) { return to_json(v); }, doc);
}

Clutter clutter_from_json(const Json& j) { return read_clutter(j); }

PavingClutter paving_from_json(const Json& j) {
  Clutter c = read_clutter(j);
  const int rank = as_int(field(j, "rank"), "rank");
  if (has(j, "trivially_interval") &&
      as_bool(j.at("trivially_interval"), "trivially_interval")) {
    return make_trivial_paving(std::move(c), rank);
  }
  return make_paving(std::move(c), rank);
}

Json to_json(const OrderingWitness& w) {
  Json j;
  j["order"] = w.order;
  j["cyclic"] = w.kind == OrderKind::kCyclic;
  return j;
}

OrderingWitness ordering_from_json(const Json& j) {
  OrderingWitness w;
  w.order = as_ints(field(j, "order"), "order");
  w.kind = as_bool(field(j, "cyclic"), "cyclic") ? OrderKind::kCyclic
                                                 : OrderKind::kLinear;
  return w;
}

Json to_json(const ObstructionWitness& w) {
  Json j;
  j["kind"] = std::string(obstruction_name(w.kind));
  j["edges"] = w.edges;
  return j;
}

ObstructionWitness obstruction_from_json(const Json& j) {
  ObstructionWitness w;
  w.kind = parse_obstruction_kind(as_string(field(j, "kind"), "kind"));
  w.edges = as_indices(field(j, "edges"), "edges");
  return w;
}

Json to_json(const MinorResult& r) {
  Json j;
  j["x"] = r.x;
  j["op"] = minor_op_json(r.op);
  j["interval"] = r.interval();
  if (r.ordering) j["ordering"] = to_json(*r.ordering);
  if (r.obstruction) j["obstruction"] = to_json(*r.obstruction);
  return j;
}

MinorResult minor_result_from_json(const Json& j) {
  MinorResult r;
  r.x = as_int(field(j, "x"), "x");
  r.op = minor_op_from(field(j, "op"));
  if (has(j, "ordering")) r.ordering = ordering_from_json(j.at("ordering"));
  if (has(j, "obstruction")) {
    r.obstruction = obstruction_from_json(j.at("obstruction"));
  }
  if (has(j, "interval") &&
      as_bool(j.at("interval"), "interval") != r.interval()) {
    fail("\"interval\" disagrees with the presence of an ordering");
  }
  return r;
}

Json to_json(const XmCertificate& cert) {
  Json j;
  j["verdict"] = cert.verdict;
  if (cert.nonmembership) j["nonmembership"] = to_json(*cert.nonmembership);
  if (cert.own_ordering) j["own_ordering"] = to_json(*cert.own_ordering);
  Json minors = Json::array();
  for (const MinorResult& r : cert.minor_witnesses) minors.push_back(to_json(r));
  j["minor_witnesses"] = minors;
  if (cert.failure) j["failure"] = to_json(*cert.failure);
  if (!cert.diagnostics.empty()) {
    Json diag = Json::array();
    for (const MinorResult& r : cert.diagnostics) diag.push_back(to_json(r));
    j["diagnostics"] = diag;
  }
  return j;
}

XmCertificate certificate_from_json(const Json& j) {
  XmCertificate cert;
  cert.verdict = as_bool(field(j, "verdict"), "verdict");
  if (has(j, "nonmembership")) {
    cert.nonmembership = obstruction_from_json(j.at("nonmembership"));
  }
  if (has(j, "own_ordering")) {
    cert.own_ordering = ordering_from_json(j.at("own_ordering"));
  }
  if (has(j, "minor_witnesses")) {
    for (const Json& r : as_array(j.at("minor_witnesses"), "minor_witnesses")) {
      cert.minor_witnesses.push_back(minor_result_from_json(r));
    }
  }
  if (has(j, "failure")) cert.failure = minor_result_from_json(j.at("failure"));
  if (has(j, "diagnostics")) {
    for (const Json& r : as_array(j.at("diagnostics"), "diagnostics")) {
      cert.diagnostics.push_back(minor_result_from_json(r));
    }
  }
  return cert;
}

Json to_json(const FamilyParams& p) {
  Json j;
  j["family"] = std::string(family_name(family_tag(p)));
  std::visit(
      [&](const auto& q) {
        using T = std::decay_t<decltype(q)>;
        if constexpr (std::is_same_v<T, OParams>) {
          j["d"] = q.d;
          j["a"] = q.a;
          if (!q.sizes.empty()) j["sizes"] = q.sizes;
        } else if constexpr (std::is_same_v<T, YParams>) {
          j["d"] = q.d;
          j["a"] = q.a;
          j["b"] = q.b;
          j["c_size"] = q.c_size;
        } else if constexpr (std::is_same_v<T, ShParams>) {
          j["d"] = q.d;
          j["a"] = q.a;
          j["b"] = q.b;
          j["c"] = q.c;
          j["d_size"] = q.d_size;
        } else if constexpr (std::is_same_v<T, YprimeParams>) {
          j["d"] = q.d;
          j["a"] = q.a;
          j["b"] = q.b;
        } else if constexpr (std::is_same_v<T, MultiYParams>) {
          j["d"] = q.d;
          j["a"] = q.a;
          j["b"] = q.b;
          j["w_size"] = q.w_size;
        } else if constexpr (std::is_same_v<T, Delta2Params>) {
          j["a"] = q.a;
          j["b"] = q.b;
          j["c"] = q.c;
          j["k"] = q.k;
        } else {
          j["a"] = q.a;
          j["b"] = q.b;
          j["c"] = q.c;
        }
      },
      p);
  return j;
}

FamilyParams params_from_json(const Json& j) {
  const FamilyTag tag =
      parse_family_tag(as_string(field(j, "family"), "family"));
  Fields fields;
  for (const auto& [key, value] : j.items()) {
    if (key == "family") continue;
    if (value.is_array()) {
      fields[key] = as_ints(value, key);
    } else {
      fields[key] = {as_int(value, key)};
    }
  }
  return params_from_fields(tag, std::move(fields));
}

FamilyParams parse_params(FamilyTag tag, std::string_view text) {
  Fields fields;
  std::string current;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view token = text.substr(pos, comma - pos);
    pos = comma + 1;
    if (token.empty()) {
      if (comma == text.size() && current.empty() && fields.empty()) break;
      fail("empty parameter in \"" + std::string(text) + "\"");
    }
    std::string_view value = token;
    const std::size_t eq = token.find('=');
    if (eq != std::string_view::npos) {
      current = std::string(token.substr(0, eq));
      value = token.substr(eq + 1);
      if (current.empty()) fail("parameter without a name");
      if (fields.count(current)) fail("parameter \"" + current + "\" repeated");
      fields[current];
    } else if (current.empty()) {
      fail("value \"" + std::string(token) + "\" has no parameter name");
    }
    int v = 0;
    const char* begin = value.data();
    const char* end = value.data() + value.size();
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (value.empty() || ec != std::errc() || ptr != end) {
      fail("\"" + std::string(value) + "\" is not an integer");
    }
    fields[current].push_back(v);
  }
  return params_from_fields(tag, std::move(fields));
}

Json to_json(const CriterionReport& r) {
  Json j;
  j["holds"] = r.holds;
  j["violated_condition"] = r.violated_condition;
  j["detail"] = r.detail;
  j["edges"] = r.edges;
  return j;
}

CriterionReport criterion_from_json(const Json& j) {
  CriterionReport r;
  r.holds = as_bool(field(j, "holds"), "holds");
  r.violated_condition =
      as_int(field(j, "violated_condition"), "violated_condition");
  r.detail = as_string(field(j, "detail"), "detail");
  r.edges = as_indices(field(j, "edges"), "edges");
  return r;
}

Json to_json(const Reduction& r) {
  Json j;
  j["params"] = to_json(r.params);
  j["edges"] = r.edges;
  return j;
}

Reduction reduction_from_json(const Json& j) {
  Reduction r;
  r.params = params_from_json(field(j, "params"));
  r.edges = as_indices(field(j, "edges"), "edges");
  return r;
}

Json to_json(const Placement& p) {
  Json j;
  j["index"] = p.index;
  j["first_edge"] = p.first_edge;
  j["second_edge"] = p.second_edge;
  j["ambiguous"] = p.ambiguous;
  return j;
}

Json to_json(const ExcludedMinorEntry& e) {
  Json j;
  j["clutter"] = to_json(e.clutter);
  j["positroid"] = e.positroid;
  j["certificate"] = to_json(e.certificate);
  if (!e.positroid) {
    j["family"] = e.family ? to_json(*e.family) : Json("Unclassified");
  }
  if (e.criterion) j["criterion"] = to_json(*e.criterion);
  if (e.reduction) {
    j["reduction"] = to_json(*e.reduction);
  } else {
    j["reduction_error"] = e.reduction_error;
  }
  return j;
}

Json to_json(const CensusRow& row) {
  Json j;
  j["n"] = row.n;
  j["total"] = row.total;
  for (Category c : {Category::kIntervalPositroid,
                     Category::kPositroidNonInterval,
                     Category::kNonPositroid}) {
    j[std::string(category_name(c))] =
        row.by_category[static_cast<std::size_t>(c)];
  }
  j["positroid_excluded"] = row.positroid_excluded;
  j["non_positroid_excluded"] = row.non_positroid_excluded;
  return j;
}

Json to_json(const CensusReport& report) {
  Json j;
  j["d"] = report.d;
  j["n_min"] = report.n_min;
  j["n_max"] = report.n_max;
  Json rows = Json::array();
  for (const CensusRow& row : report.rows) rows.push_back(to_json(row));
  j["rows"] = rows;
  Json excluded = Json::array();
  for (const ExcludedMinorEntry& e : report.excluded) {
    excluded.push_back(to_json(e));
  }
  j["excluded"] = excluded;
  j["cross_validated"] = report.cross_validated;
  Json oracle = Json::array();
  for (const PavingClutter& p : report.oracle_disagreements) {
    oracle.push_back(to_json(p));
  }
  j["oracle_disagreements"] = oracle;
  Json criterion = Json::array();
  for (const PavingClutter& p : report.criterion_disagreements) {
    criterion.push_back(to_json(p));
  }
  j["criterion_disagreements"] = criterion;
  return j;
}

}  // namespace pxm
