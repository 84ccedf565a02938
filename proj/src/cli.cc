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

#include "pxm/cli.h"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pxm/enumeration.h"
#include "pxm/error.h"
#include "pxm/excluded.h"
#include "pxm/families.h"
#include "pxm/obstruction.h"
#include "pxm/ordering.h"
#include "pxm/paving.h"
#include "pxm/serialize.h"

namespace pxm::cli {
namespace {

constexpr ObstructionKind kNonArcKinds[] = {
    ObstructionKind::kType2, ObstructionKind::kType4, ObstructionKind::kType3,
    ObstructionKind::kFan};

struct Options {
  std::string input = "-";
  bool interval = false;
  bool ca = false;
  std::optional<int> delete_x;
  std::optional<int> contract_x;
  std::size_t edge = 0;
  bool full = false;
  std::string family;
  std::string params;
  int rank = 0;
  int max_n = 0;
  int min_n = 0;
  int jobs = 1;
  bool jsonl = false;
  bool no_cross_validate = false;
};

[[noreturn]] void usage(const std::string& message) {
  throw Error(ErrorKind::kUsage, message);
}

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(in), {});
  }
  std::ifstream file(path);
  if (!file) usage("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(file), {});
}

PavingClutter require_paving(const Document& doc) {
  if (const auto* p = std::get_if<PavingClutter>(&doc)) return *p;
  usage("this command needs a document with a \"rank\" field");
}

int enumeration_cap() {
  const char* raw = std::getenv(kCapVariable);
  if (raw == nullptr || *raw == '\0') return kDefaultEnumerationCap;
  std::string_view s(raw);
  int cap = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), cap);
  if (ec != std::errc() || ptr != s.data() + s.size() || cap < 1) {
    usage(std::string(kCapVariable) + " must be a positive integer");
  }
  return cap;
}

void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

int recognize(const Options& o, const Document& doc, std::ostream& out) {
  const Clutter& c = document_clutter(doc);
  Json j;
  std::optional<OrderingWitness> w;
  if (o.interval) {
    w = find_interval_ordering(c);
    j["interval"] = w.has_value();
  } else {
    w = find_arc_ordering(c);
    j["ca"] = w.has_value();
  }
  if (w) {
    j["ordering"] = to_json(*w);
  } else {
    std::optional<ObstructionWitness> ob =
        o.interval ? find_obstruction(c) : find_obstruction(c, kNonArcKinds);
    j["obstruction"] = ob ? to_json(*ob) : Json(nullptr);
  }
  emit(out, j);
  return w ? kExitAffirmative : kExitNegative;
}

int obstruction(const Document& doc, std::ostream& out) {
  std::optional<ObstructionWitness> ob =
      find_obstruction(document_clutter(doc));
  Json j;
  j["obstruction"] = ob ? to_json(*ob) : Json(nullptr);
  emit(out, j);
  return ob ? kExitAffirmative : kExitNegative;
}

int minor(const Options& o, const Document& doc, std::ostream& out) {
  PavingClutter p = require_paving(doc);
  const MinorOp op = o.delete_x ? MinorOp::kDelete : MinorOp::kContract;
  const int x = o.delete_x ? *o.delete_x : *o.contract_x;
  Json j;
  j["op"] = std::string(minor_op_name(op));
  j["x"] = x;
  j["minor"] = to_json(apply_minor(p, x, op));
  emit(out, j);
  return kExitAffirmative;
}

int relax_edge(const Options& o, const Document& doc, std::ostream& out) {
  PavingClutter p = require_paving(doc);
  Json j;
  j["edge"] = o.edge;
  j["relaxed"] = to_json(relax_index(p, o.edge));
  emit(out, j);
  return kExitAffirmative;
}

int check_xm(const Options& o, const Document& doc, std::ostream& out) {
  PavingClutter p = require_paving(doc);
  XmCertificate cert = check_excluded_minor(p, o.full);
  Json j;
  j["excluded_minor"] = cert.verdict;
  j["certificate"] = to_json(cert);
  emit(out, j);
  return cert.verdict ? kExitAffirmative : kExitNegative;
}

int criterion(const Document& doc, std::ostream& out) {
  CriterionReport r = positroid_xm_criterion(require_paving(doc));
  Json j;
  j["criterion"] = to_json(r);
  emit(out, j);
  return r.holds ? kExitAffirmative : kExitNegative;
}

int gen(const Options& o, std::ostream& out) {
  const FamilyTag tag = parse_family_tag(o.family);
  FamilyParams params = o.params.starts_with("{")
                            ? params_from_json(Json::parse(o.params))
                            : parse_params(tag, o.params);
  if (family_tag(params) != tag) usage("--params names a different family");
  emit(out, to_json(gen_family(params)));
  return kExitAffirmative;
}

int classify(const Document& doc, std::ostream& out) {
  std::optional<FamilyParams> f = classify_family(require_paving(doc));
  Json j;
  j["family"] = f ? to_json(*f) : Json("Unclassified");
  if (f) j["description"] = describe(*f);
  emit(out, j);
  return f ? kExitAffirmative : kExitNegative;
}

int reduce(const Document& doc, std::ostream& out) {
  Json j;
  j["reduction"] = to_json(relaxation_reduce(require_paving(doc)));
  emit(out, j);
  return kExitAffirmative;
}

int run_census(const Options& o, std::ostream& out) {
  CensusOptions opts;
  opts.n_min = o.min_n;
  opts.jobs = o.jobs;
  opts.cap = enumeration_cap();
  opts.cross_validate = !o.no_cross_validate;
  CensusReport report = census(o.rank, o.max_n, opts);
  const bool clean = report.oracle_disagreements.empty() &&
                     report.criterion_disagreements.empty();
  if (o.jsonl) {
    Json j = to_json(report);
    for (const Json& row : j["rows"]) {
      Json line;
      line["row"] = row;
      emit(out, line);
    }
    for (const Json& e : j["excluded"]) {
      Json line;
      line["excluded"] = e;
      emit(out, line);
    }
    j.erase("rows");
    j.erase("excluded");
    Json line;
    line["summary"] = j;
    emit(out, line);
  } else {
    emit(out, to_json(report));
  }
  return clean ? kExitAffirmative : kExitNegative;
}

void emit_error(std::ostream& out, std::string_view kind,
                const std::string& message) {
  Json j;
  j["error"]["kind"] = std::string(kind);
  j["error"]["message"] = message;
  emit(out, j);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Interval positroid excluded minors of paving clutters", "pxm"};
  app.require_subcommand(1, 1);

  auto with_input = [&](CLI::App* sub) {
    sub->add_option("input", o.input, "Document path, or - for stdin");
    return sub;
  };

  auto* validate =
      with_input(app.add_subcommand("validate", "Parse and validate"));
  auto* rec = with_input(
      app.add_subcommand("recognize", "Interval or circular-arc ordering"));
  auto* iv = rec->add_flag("--interval", o.interval, "Linear orderings");
  auto* ca = rec->add_flag("--ca", o.ca, "Cyclic orderings");
  iv->excludes(ca);
  auto* obs = with_input(
      app.add_subcommand("obstruction", "Forbidden partial clutter"));
  auto* min = with_input(app.add_subcommand("minor", "Single-element minor"));
  auto* del = min->add_option("--delete", o.delete_x, "Delete vertex x");
  auto* con = min->add_option("--contract", o.contract_x, "Contract vertex x");
  del->excludes(con);
  auto* rel = with_input(app.add_subcommand("relax", "Relax one edge"));
  rel->add_option("--edge", o.edge, "0-based edge index")->required();
  auto* xm = with_input(
      app.add_subcommand("check-xm", "Excluded-minor certificate"));
  xm->add_flag("--full", o.full, "Include every minor in diagnostics");
  auto* crit = with_input(
      app.add_subcommand("criterion", "Positroid excluded-minor criterion"));
  auto* gn = app.add_subcommand("gen", "Generate a family instance");
  gn->add_option("--family", o.family, "Family tag")->required();
  gn->add_option("--params", o.params, "key=value list or JSON object")
      ->required();
  auto* cls = with_input(
      app.add_subcommand("classify", "Family of a non-positroid excluded minor"));
  auto* red = with_input(
      app.add_subcommand("reduce", "Relaxation to an O, Y or Sh instance"));
  auto* cen = app.add_subcommand("census", "Enumerate and classify");
  cen->add_option("--rank", o.rank, "Rank d")->required();
  cen->add_option("--max-n", o.max_n, "Largest ground set")->required();
  cen->add_option("--min-n", o.min_n, "Smallest ground set (default d)");
  cen->add_option("--jobs", o.jobs, "Worker threads")
      ->check(CLI::PositiveNumber);
  cen->add_flag("--jsonl", o.jsonl, "One JSON object per line");
  cen->add_flag("--no-cross-validate", o.no_cross_validate,
                "Skip the definition-level re-check");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    err << app.help();
    return kExitAffirmative;
  } catch (const CLI::CallForAllHelp&) {
    err << app.help("", CLI::AppFormatMode::All);
    return kExitAffirmative;
  } catch (const CLI::ParseError& e) {
    emit_error(out, kind_name(ErrorKind::kUsage), e.what());
    return kExitError;
  }

  try {
    if (*rec && !o.interval && !o.ca) usage("recognize needs --interval or --ca");
    if (*min && !o.delete_x && !o.contract_x) {
      usage("minor needs --delete x or --contract x");
    }
    if (*gn) return gen(o, out);
    if (*cen) return run_census(o, out);

    Document doc = parse_document(read_input(o.input, in));
    if (*validate) {
      Json j;
      j["valid"] = true;
      j["document"] = to_json(doc);
      emit(out, j);
      return kExitAffirmative;
    }
    if (*rec) return recognize(o, doc, out);
    if (*obs) return obstruction(doc, out);
    if (*min) return minor(o, doc, out);
    if (*rel) return relax_edge(o, doc, out);
    if (*xm) return check_xm(o, doc, out);
    if (*crit) return criterion(doc, out);
    if (*cls) return classify(doc, out);
    if (*red) return reduce(doc, out);
    usage("unknown command");
  } catch (const Error& e) {
    emit_error(out, e.name(), e.what());
  } catch (const Json::exception& e) {
    emit_error(out, kind_name(ErrorKind::kParseError), e.what());
  } catch (const std::exception& e) {
    emit_error(out, "Internal", e.what());
  }
  return kExitError;
}

}  // namespace pxm::cli
