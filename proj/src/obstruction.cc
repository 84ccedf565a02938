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

#include "pxm/obstruction.h"

#include <algorithm>
#include <string>

#include "pxm/error.h"
#include "pxm/ordering.h"

namespace pxm {
namespace {

bool type1(VertexSet a, VertexSet b, VertexSet c) {
  return !((a & b) - c).empty() && !((b & c) - a).empty() &&
         !((a & c) - b).empty();
}

bool type2(VertexSet a, VertexSet b, VertexSet c) {
  return !(a - (b | c)).empty() && !(b - (a | c)).empty() &&
         !(c - (a | b)).empty() && !(a & b & c).empty();
}

bool type3(VertexSet a, VertexSet b, VertexSet c, VertexSet d) {
  return !((a & b) - (c | d)).empty() && !((b & c) - (d | a)).empty() &&
         !((c & d) - (a | b)).empty() && !((d & a) - (b | c)).empty() &&
         !(a & b & c & d).empty();
}

bool type4(VertexSet a, VertexSet b, VertexSet c, VertexSet d) {
  return !a.intersects(b) && !b.intersects(c) && !a.intersects(c) &&
         a.intersects(d) && b.intersects(d) && c.intersects(d);
}

bool fan(VertexSet a, VertexSet b, VertexSet c, VertexSet d) {
  return a.intersects(d) && b.intersects(d) && c.intersects(d) &&
         !(a - d).intersects(b - d) && !(b - d).intersects(c - d) &&
         !(a - d).intersects(c - d);
}

bool induced_cycle(const Clutter& c, const std::vector<std::size_t>& cyc) {
  const std::size_t m = cyc.size();
  if (m < 4) return false;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      bool adjacent = j == i + 1 || (i == 0 && j == m - 1);
      if (c.edge(cyc[i]).intersects(c.edge(cyc[j])) != adjacent) return false;
    }
  }
  return true;
}

class ObstructionSearch {
 public:
  explicit ObstructionSearch(const Clutter& c) : c_(c), m_(c.size()) {}

  std::optional<ObstructionWitness> find(ObstructionKind kind) {
    switch (kind) {
      case ObstructionKind::kType1:
        return triples(kind, type1);
      case ObstructionKind::kType2:
        return triples(kind, type2);
      case ObstructionKind::kType3:
        return quadruples(kind, type3, /*ordered_abc=*/false);
      case ObstructionKind::kType4:
        return quadruples(kind, type4, /*ordered_abc=*/true);
      case ObstructionKind::kFan:
        return quadruples(kind, fan, /*ordered_abc=*/true);
      case ObstructionKind::kType5:
        return cycle();
    }
    return std::nullopt;
  }

 private:
  template <typename Pred>
  std::optional<ObstructionWitness> triples(ObstructionKind kind, Pred pred) {
    // Both patterns are symmetric in their three roles.
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = i + 1; j < m_; ++j) {
        for (std::size_t k = j + 1; k < m_; ++k) {
          if (pred(c_.edge(i), c_.edge(j), c_.edge(k))) {
            return ObstructionWitness{kind, {i, j, k}};
          }
        }
      }
    }
    return std::nullopt;
  }

  template <typename Pred>
  std::optional<ObstructionWitness> quadruples(ObstructionKind kind, Pred pred,
                                               bool ordered_abc) {
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < m_; ++j) {
        if (j == i || (ordered_abc && j < i)) continue;
        for (std::size_t k = 0; k < m_; ++k) {
          if (k == i || k == j || (ordered_abc && k < j)) continue;
          for (std::size_t l = 0; l < m_; ++l) {
            if (l == i || l == j || l == k) continue;
            if (pred(c_.edge(i), c_.edge(j), c_.edge(k), c_.edge(l))) {
              return ObstructionWitness{kind, {i, j, k, l}};
            }
          }
        }
      }
    }
    return std::nullopt;
  }

  std::optional<ObstructionWitness> cycle() {
    for (std::size_t s = 0; s < m_; ++s) {
      path_.assign(1, s);
      if (extend(s)) return ObstructionWitness{ObstructionKind::kType5, path_};
    }
    return std::nullopt;
  }

  bool adjacent(std::size_t x, std::size_t y) const {
    return c_.edge(x).intersects(c_.edge(y));
  }

  // Grows an induced path from s through edges of larger index; closes it
  // once it has at least four members and returns to s.
  bool extend(std::size_t s) {
    const std::size_t last = path_.back();
    for (std::size_t w = s + 1; w < m_; ++w) {
      if (w == last || !adjacent(last, w)) continue;
      if (std::find(path_.begin(), path_.end(), w) != path_.end()) continue;
      bool chord = false;
      for (std::size_t p = 1; p + 1 < path_.size(); ++p) {
        if (adjacent(path_[p], w)) {
          chord = true;
          break;
        }
      }
      if (chord) continue;
      const bool closes = path_.size() > 1 && adjacent(w, s);
      path_.push_back(w);
      if (closes) {
        if (path_.size() >= 4) return true;
      } else if (extend(s)) {
        return true;
      }
      path_.pop_back();
    }
    return false;
  }

  const Clutter& c_;
  const std::size_t m_;
  std::vector<std::size_t> path_;
};

}  // namespace

std::string_view obstruction_name(ObstructionKind kind) {
  switch (kind) {
    case ObstructionKind::kType1: return "type1";
    case ObstructionKind::kType2: return "type2";
    case ObstructionKind::kType3: return "type3";
    case ObstructionKind::kType4: return "type4";
    case ObstructionKind::kType5: return "type5";
    case ObstructionKind::kFan: return "fan";
  }
  return "unknown";
}

ObstructionKind parse_obstruction_kind(std::string_view name) {
  for (ObstructionKind k :
       {ObstructionKind::kType1, ObstructionKind::kType2,
        ObstructionKind::kType3, ObstructionKind::kType4,
        ObstructionKind::kType5, ObstructionKind::kFan}) {
    if (obstruction_name(k) == name) return k;
  }
  throw Error(ErrorKind::kParseError,
              "unknown obstruction kind '" + std::string(name) + "'");
}

std::optional<ObstructionWitness> find_obstruction(const Clutter& c) {
  return find_obstruction(c, kObstructionPreference);
}

std::optional<ObstructionWitness> find_obstruction(
    const Clutter& c, std::span<const ObstructionKind> kinds) {
  ObstructionSearch search(c);
  for (ObstructionKind kind : kinds) {
    if (auto w = search.find(kind)) return w;
  }
  return std::nullopt;
}

bool verify_obstruction(const Clutter& c, const ObstructionWitness& w) {
  for (std::size_t i = 0; i < w.edges.size(); ++i) {
    if (w.edges[i] >= c.size()) return false;
    for (std::size_t j = 0; j < i; ++j) {
      if (w.edges[i] == w.edges[j]) return false;
    }
  }
  auto e = [&](std::size_t i) { return c.edge(w.edges[i]); };
  switch (w.kind) {
    case ObstructionKind::kType1:
      return w.edges.size() == 3 && type1(e(0), e(1), e(2));
    case ObstructionKind::kType2:
      return w.edges.size() == 3 && type2(e(0), e(1), e(2));
    case ObstructionKind::kType3:
      return w.edges.size() == 4 && type3(e(0), e(1), e(2), e(3));
    case ObstructionKind::kType4:
      return w.edges.size() == 4 && type4(e(0), e(1), e(2), e(3));
    case ObstructionKind::kFan:
      return w.edges.size() == 4 && fan(e(0), e(1), e(2), e(3));
    case ObstructionKind::kType5:
      return induced_cycle(c, w.edges);
  }
  return false;
}

bool is_fan_obstruction(VertexSet a, VertexSet b, VertexSet c, VertexSet d) {
  const VertexSet sets[] = {a, b, c, d};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < i; ++j) {
      if (sets[i].subset_of(sets[j]) || sets[j].subset_of(sets[i])) {
        throw Error(ErrorKind::kNotAClutter,
                    "fan sets must be pairwise incomparable");
      }
    }
  }
  return fan(a, b, c, d);
}

std::string_view triangle_name(TriangleKind kind) {
  switch (kind) {
    case TriangleKind::kNone: return "none";
    case TriangleKind::kTriangle: return "triangle";
    case TriangleKind::kTriangleWithCommonPoint:
      return "triangle_with_common_point";
  }
  return "unknown";
}

bool has_common_point_shape(VertexSet a, VertexSet b, VertexSet c) {
  const VertexSet s[] = {a, b, c};
  if ((a & b & c).empty()) return false;
  // B plays the middle role; A and C are symmetric.
  for (int mid = 0; mid < 3; ++mid) {
    VertexSet x = s[(mid + 1) % 3], y = s[(mid + 2) % 3], m = s[mid];
    if (!(x & y).subset_of(m) && m.proper_subset_of(x | y)) return true;
  }
  return false;
}

TriangleKind triangle_kind(const Clutter& c) {
  if (c.size() != 3) {
    throw Error(ErrorKind::kWrongEdgeCount,
                "expected 3 edges, got " + std::to_string(c.size()));
  }
  if (is_interval(c) || !is_circular_arc(c)) return TriangleKind::kNone;
  // The shape alone does not force the arc property, so it is tested last.
  if (has_common_point_shape(c.edge(0), c.edge(1), c.edge(2))) {
    return TriangleKind::kTriangleWithCommonPoint;
  }
  return TriangleKind::kTriangle;
}

}  // namespace pxm
