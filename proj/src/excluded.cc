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

#include "pxm/excluded.h"

#include <algorithm>
#include <array>
#include <set>

#include "pxm/blocks.h"
#include "pxm/canonical.h"
#include "pxm/error.h"

namespace pxm {
namespace {

MinorResult examine(const PavingClutter& p, int x, MinorOp op) {
  PavingClutter minor = apply_minor(p, x, op);
  MinorResult r{x, op, find_interval_ordering(minor.clutter()), std::nullopt};
  if (!r.ordering) r.obstruction = find_obstruction(minor.clutter());
  return r;
}

bool verify_result(const PavingClutter& p, const MinorResult& r) {
  PavingClutter minor = apply_minor(p, r.x, r.op);
  if (r.ordering) {
    return r.ordering->kind == OrderKind::kLinear &&
           verify_witness(minor.clutter(), *r.ordering);
  }
  return r.obstruction && verify_obstruction(minor.clutter(), *r.obstruction);
}

std::optional<FamilyParams> match_y(const Clutter& c, int d) {
  for (std::size_t ci = 0; ci < 3; ++ci) {
    VertexSet a = c.edge((ci + 1) % 3), b = c.edge((ci + 2) % 3);
    VertexSet cc = c.edge(ci);
    if (a.size() != d || b.size() != d || cc.size() < d) continue;
    if ((a & b & cc).size() != 1 || !((a & b) - cc).empty()) continue;
    const int priv = (cc - (a | b)).size();
    if (priv < 1 || (cc.size() > d && priv != 1)) continue;
    YParams y{d, ((a & cc) - b).size(), ((b & cc) - a).size(), cc.size()};
    if (validate_params(y).empty()) return y;
  }
  return std::nullopt;
}

std::optional<FamilyParams> match_sh(const Clutter& c, int d) {
  for (std::size_t di = 0; di < 4; ++di) {
    std::vector<VertexSet> others;
    for (std::size_t i = 0; i < 4; ++i) {
      if (i != di) others.push_back(c.edge(i));
    }
    VertexSet dd = c.edge(di);
    bool ok = true;
    for (std::size_t i = 0; i < 3 && ok; ++i) {
      ok = others[i].size() == d && others[i].intersects(dd);
      for (std::size_t j = i + 1; j < 3 && ok; ++j) {
        ok = !others[i].intersects(others[j]);
      }
    }
    if (!ok) continue;
    ShParams sh{d, (others[0] & dd).size(), (others[1] & dd).size(),
                (others[2] & dd).size(), dd.size()};
    if (validate_params(sh).empty()) return sh;
  }
  return std::nullopt;
}

std::optional<FamilyParams> match_o(const Clutter& c, int d) {
  BlockDecomposition bd;
  try {
    bd = block_decomposition(c);
  } catch (const Error&) {
    return std::nullopt;
  }
  const std::size_t m = bd.num_edges();
  OParams o{d, {}, {}};
  for (std::size_t i = 0; i < m; ++i) o.a.push_back(bd.junction(i).size());
  // A vertex of a large edge must lie in a small edge as well.
  for (std::size_t i = 0; i < m; ++i) {
    VertexSet e = c.edge(bd.cycle[i]);
    if (e.size() == d) continue;
    VertexSet covered;
    for (VertexSet f : c.edges()) {
      if (f != e && f.size() == d) covered |= f;
    }
    if (!e.subset_of(covered)) return std::nullopt;
  }
  if (!validate_params(o).empty()) return std::nullopt;
  return o;
}

bool same_class(const Clutter& c, const FamilyParams& params) {
  if (!validate_params(params).empty()) return false;
  PavingClutter g = gen_family(params);
  return g.n() == c.n() && g.clutter().size() == c.size() &&
         canonical_key(g.clutter()) == canonical_key(c);
}

// Candidate parameters read off from roles of edges; the caller confirms
// them by isomorphism.
std::vector<FamilyParams> candidates(const Clutter& c, int d) {
  std::vector<FamilyParams> out;
  const std::size_t m = c.size();
  auto add = [&](FamilyParams p) {
    if (std::find(out.begin(), out.end(), p) == out.end() &&
        validate_params(p).empty() && family_rank(p) == d &&
        family_size(p) == c.n()) {
      out.push_back(std::move(p));
    }
  };
  if (m == 3) {
    if (auto y = match_y(c, d)) add(*y);
  }
  if (m == 4) {
    if (auto sh = match_sh(c, d)) add(*sh);
  }
  // Y', multi-Y: two small edges meeting in the single point v.
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      VertexSet a = c.edge(i), b = c.edge(j);
      if ((a & b).size() != 1) continue;
      const int v = (a & b).min();
      std::vector<std::pair<int, int>> through;
      std::vector<VertexSet> rest;
      for (std::size_t k = 0; k < m; ++k) {
        if (k == i || k == j) continue;
        VertexSet e = c.edge(k);
        rest.push_back(e);
        if (e.contains(v)) {
          through.emplace_back((a & e).size() - 1, (b & e).size() - 1);
        }
      }
      if (through.size() == rest.size() && !rest.empty()) {
        std::sort(through.begin(), through.end());
        MultiYParams q{d, {}, {}, (rest[0] - (a | b)).size()};
        for (auto [x, y] : through) {
          q.a.push_back(x);
          q.b.push_back(y);
        }
        add(q);
      }
      if (m == 4 && through.size() == 1) {
        add(YprimeParams{d, through[0].first, through[0].second});
      }
    }
  }
  // Δ families: an O triangle A, B, C plus one or two further edges.
  if (m == 4 || m == 5) {
    std::array<std::size_t, 3> t{};
    for (t[0] = 0; t[0] < m; ++t[0]) {
      for (t[1] = 0; t[1] < m; ++t[1]) {
        for (t[2] = 0; t[2] < m; ++t[2]) {
          if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) continue;
          VertexSet a = c.edge(t[0]), b = c.edge(t[1]), cc = c.edge(t[2]);
          const int sa = (b & cc).size(), sb = (cc & a).size(),
                    sc = (a & b).size();
          const int k = (a - (b | cc)).size() - sa;
          add(Delta1Params{sa, sb, sc});
          add(Delta2Params{sa, sb, sc, k});
          add(Delta3Params{sa, sb, sc});
        }
      }
    }
  }
  return out;
}

std::string set_string(VertexSet s) {
  std::string out = "{";
  for (int v : s.to_vector()) {
    if (out.size() > 1) out += ",";
    out += std::to_string(v);
  }
  return out + "}";
}

}  // namespace

std::string_view minor_op_name(MinorOp op) {
  return op == MinorOp::kDelete ? "delete" : "contract";
}

PavingClutter apply_minor(const PavingClutter& p, int x, MinorOp op) {
  return op == MinorOp::kDelete ? delete_element(p, x) : contract(p, x);
}

XmCertificate check_excluded_minor(const PavingClutter& p,
                                   bool full_diagnostics) {
  if (has_coloop(p)) {
    throw Error(ErrorKind::kColoopPresent, "the matroid has a coloop");
  }
  XmCertificate cert;
  cert.own_ordering = find_interval_ordering(p.clutter());
  if (cert.own_ordering) {
    // Already interval: not an excluded minor.
    if (!full_diagnostics) return cert;
  } else {
    cert.nonmembership = find_obstruction(p.clutter());
  }
  const MinorOp ops[] = {MinorOp::kDelete, MinorOp::kContract};
  if (!cert.own_ordering) {
    for (int x = p.n(); x >= 1 && !cert.failure; --x) {
      for (MinorOp op : ops) {
        MinorResult r = examine(p, x, op);
        if (!r.interval()) {
          cert.failure = std::move(r);
          break;
        }
      }
    }
    cert.verdict = !cert.failure;
  }
  if (cert.verdict || full_diagnostics) {
    std::vector<MinorResult> all;
    for (int x = 1; x <= p.n(); ++x) {
      for (MinorOp op : ops) all.push_back(examine(p, x, op));
    }
    if (cert.verdict) cert.minor_witnesses = all;
    if (full_diagnostics) cert.diagnostics = std::move(all);
  }
  return cert;
}

namespace {

bool check_certificate(const PavingClutter& p, const XmCertificate& cert) {
  const Clutter& c = p.clutter();
  if (cert.own_ordering &&
      (cert.own_ordering->kind != OrderKind::kLinear ||
       !verify_witness(c, *cert.own_ordering))) {
    return false;
  }
  if (cert.nonmembership && !verify_obstruction(c, *cert.nonmembership)) {
    return false;
  }
  if (cert.verdict) {
    if (!cert.nonmembership || cert.own_ordering || cert.failure) return false;
    if (cert.minor_witnesses.size() != 2 * static_cast<std::size_t>(p.n())) {
      return false;
    }
    std::set<std::pair<int, int>> seen;
    for (const MinorResult& r : cert.minor_witnesses) {
      if (!r.ordering || !verify_result(p, r)) return false;
      seen.emplace(r.x, static_cast<int>(r.op));
    }
    if (seen.size() != cert.minor_witnesses.size()) return false;
  } else if (!cert.own_ordering) {
    if (!cert.failure || cert.failure->interval() ||
        !verify_result(p, *cert.failure)) {
      return false;
    }
  }
  for (const MinorResult& r : cert.diagnostics) {
    if (!verify_result(p, r)) return false;
  }
  return true;
}

}  // namespace

bool verify_certificate(const PavingClutter& p, const XmCertificate& cert) {
  // Malformed witnesses make the certificate invalid rather than an error.
  try {
    return check_certificate(p, cert);
  } catch (const Error&) {
    return false;
  }
}

CriterionReport positroid_xm_criterion(const PavingClutter& p) {
  if (!is_positroid(p)) {
    throw Error(ErrorKind::kNotAPositroid, "the clutter is not CA");
  }
  const Clutter& c = p.clutter();
  const std::size_t m = c.size();
  const int d = p.rank();
  CriterionReport report;
  if (is_interval(c)) {
    report.violated_condition = 1;
    report.detail = "the clutter is interval";
    return report;
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      for (std::size_t k = j + 1; k < m; ++k) {
        const std::size_t idx[] = {i, j, k};
        Clutter tri = restrict(c, idx);
        if (is_interval(tri) || !is_circular_arc(tri)) continue;
        VertexSet a = c.edge(i), b = c.edge(j), e = c.edge(k);
        const int large = (a.size() > d) + (b.size() > d) + (e.size() > d);
        if (has_common_point_shape(a, b, e) || large > 1) {
          report.violated_condition = 2;
          report.detail = has_common_point_shape(a, b, e)
                              ? "triangle with a common point"
                              : "triangle with two or more large edges";
          report.edges = {i, j, k};
          return report;
        }
      }
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (c.edge(i).size() <= d) continue;
    for (std::size_t j = 0; j < m; ++j) {
      if (c.edge(j).size() <= d || !c.edge(i).intersects(c.edge(j))) continue;
      const VertexSet u = c.edge(i) | c.edge(j);
      for (std::size_t k = 0; k < m; ++k) {
        if (!overlap(c.edge(k), u)) continue;
        for (std::size_t l = 0; l < m; ++l) {
          if (!overlap(c.edge(l), u)) continue;
          const VertexSet tk = u & c.edge(k), tl = u & c.edge(l);
          if (tk.subset_of(tl) || tl.subset_of(tk)) continue;
          if (!u.subset_of(c.edge(k) | c.edge(l))) {
            report.violated_condition = 3;
            report.detail = "A u B = " + set_string(u) +
                            " is not covered by C u D";
            report.edges = {i, j, k, l};
            return report;
          }
        }
      }
    }
  }
  report.holds = true;
  return report;
}

std::optional<FamilyParams> match_base_family(const Clutter& c, int d) {
  if (c.size() < 3 || !isolated_vertices(c).empty()) return std::nullopt;
  std::optional<FamilyParams> found;
  if (c.size() == 3) found = match_y(c, d);
  if (!found && c.size() == 4) found = match_sh(c, d);
  if (!found) found = match_o(c, d);
  if (found && !same_class(c, *found)) return std::nullopt;
  return found;
}

Reduction relaxation_reduce(const PavingClutter& p) {
  const Clutter& c = p.clutter();
  const std::size_t m = c.size();
  std::vector<std::size_t> pick;
  for (std::size_t k = 3; k <= m; ++k) {
    // Lexicographic k-subsets of {0..m-1}.
    pick.resize(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      VertexSet cover;
      for (std::size_t i : pick) cover |= c.edge(i);
      if (cover == c.ground()) {
        Clutter part = restrict(c, pick);
        if (auto params = match_base_family(part, p.rank())) {
          return Reduction{*params, pick};
        }
      }
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == m - k + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  throw Error(ErrorKind::kNoReduction,
              "no covering partial clutter is an O, Y or Sh instance");
}

std::optional<FamilyParams> classify_family(const PavingClutter& p) {
  if (is_positroid(p)) {
    throw Error(ErrorKind::kPreconditionFailed,
                "classification applies to non-positroids only");
  }
  if (has_coloop(p) || !check_excluded_minor(p).verdict) {
    throw Error(ErrorKind::kPreconditionFailed,
                "not an excluded minor of interval positroids");
  }
  const Clutter& c = p.clutter();
  const CanonicalKey key = canonical_key(c);
  for (const FamilyParams& cand : candidates(c, p.rank())) {
    PavingClutter g = gen_family(cand);
    if (g.clutter().size() == c.size() && canonical_key(g.clutter()) == key) {
      return cand;
    }
  }
  return std::nullopt;
}

}  // namespace pxm
