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

#include "pxm/ordering.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <unordered_set>

#include "pxm/error.h"

namespace pxm {
namespace {

bool contiguous_bits(std::uint64_t mask) {
  if (mask == 0) return true;
  std::uint64_t shifted = mask >> std::countr_zero(mask);
  return (shifted & (shifted + 1)) == 0;
}

// Depth-first placement of twin classes from left to right. The only state
// that matters for the remainder is the set of placed classes: every set
// that is started but unfinished must contain the next class.
class ClassPlacer {
 public:
  ClassPlacer(int num_classes, std::vector<std::uint64_t> sets)
      : all_((num_classes == 64) ? ~std::uint64_t{0}
                                 : (std::uint64_t{1} << num_classes) - 1),
        sets_(std::move(sets)) {}

  bool place(std::uint64_t placed) {
    if (placed == all_) return true;
    if (failed_.count(placed)) return false;
    std::uint64_t candidates = all_ & ~placed;
    for (std::uint64_t s : sets_) {
      if ((s & placed) != 0 && (s & ~placed) != 0) candidates &= s;
    }
    for (std::uint64_t b = candidates; b != 0; b &= b - 1) {
      int cls = std::countr_zero(b);
      order_.push_back(cls);
      if (place(placed | (std::uint64_t{1} << cls))) return true;
      order_.pop_back();
    }
    failed_.insert(placed);
    return false;
  }

  const std::vector<int>& order() const { return order_; }

 private:
  std::uint64_t all_;
  std::vector<std::uint64_t> sets_;
  std::vector<int> order_;
  std::unordered_set<std::uint64_t> failed_;
};

void normalize_linear(std::vector<int>& order) {
  std::vector<int> reversed(order.rbegin(), order.rend());
  if (reversed < order) order = std::move(reversed);
}

void normalize_cyclic(std::vector<int>& order) {
  if (order.empty()) return;
  auto one = std::find(order.begin(), order.end(), 1);
  std::rotate(order.begin(), one, order.end());
  if (order.size() > 2 && order.back() < order[1]) {
    std::reverse(order.begin() + 1, order.end());
  }
}

}  // namespace

std::optional<std::vector<int>> consecutive_arrangement(
    VertexSet universe, std::span<const VertexSet> sets) {
  std::vector<VertexSet> relevant;
  for (VertexSet s : sets) {
    if (s.size() >= 2 && s != universe &&
        std::find(relevant.begin(), relevant.end(), s) == relevant.end()) {
      relevant.push_back(s);
    }
  }
  // Twin classes: vertices with identical membership can be kept adjacent.
  std::map<std::vector<bool>, int> class_of_signature;
  std::vector<VertexSet> class_members;
  for (int v : universe.to_vector()) {
    std::vector<bool> signature(relevant.size());
    for (std::size_t i = 0; i < relevant.size(); ++i) {
      signature[i] = relevant[i].contains(v);
    }
    auto [it, inserted] = class_of_signature.try_emplace(
        std::move(signature), static_cast<int>(class_members.size()));
    if (inserted) class_members.emplace_back();
    class_members[it->second].insert(v);
  }
  std::vector<std::uint64_t> class_sets;
  class_sets.reserve(relevant.size());
  for (VertexSet s : relevant) {
    std::uint64_t mask = 0;
    for (std::size_t k = 0; k < class_members.size(); ++k) {
      if (class_members[k].subset_of(s)) mask |= std::uint64_t{1} << k;
    }
    class_sets.push_back(mask);
  }
  ClassPlacer placer(static_cast<int>(class_members.size()),
                     std::move(class_sets));
  if (!placer.place(0)) return std::nullopt;
  std::vector<int> order;
  order.reserve(universe.size());
  for (int cls : placer.order()) {
    for (int v : class_members[cls].to_vector()) order.push_back(v);
  }
  return order;
}

std::optional<OrderingWitness> find_interval_ordering(const Clutter& c) {
  auto order = consecutive_arrangement(c.ground(), c.edges());
  if (!order) return std::nullopt;
  normalize_linear(*order);
  return OrderingWitness{OrderKind::kLinear, std::move(*order)};
}

std::optional<OrderingWitness> find_arc_ordering(const Clutter& c) {
  if (c.n() == 0) return OrderingWitness{OrderKind::kCyclic, {}};
  const VertexSet ground = c.ground();
  const VertexSet rest = ground - VertexSet::singleton(1);
  std::vector<VertexSet> reduced;
  reduced.reserve(c.size());
  for (VertexSet e : c.edges()) {
    reduced.push_back(e.contains(1) ? ground - e : e);
  }
  auto tail = consecutive_arrangement(rest, reduced);
  if (!tail) return std::nullopt;
  std::vector<int> order{1};
  order.insert(order.end(), tail->begin(), tail->end());
  normalize_cyclic(order);
  return OrderingWitness{OrderKind::kCyclic, std::move(order)};
}

bool is_interval_under(VertexSet s, std::span<const int> positions, int n,
                       bool cyclic) {
  std::uint64_t mask = 0;
  for (int v : s.to_vector()) mask |= std::uint64_t{1} << positions[v - 1];
  if (contiguous_bits(mask)) return true;
  if (!cyclic) return false;
  const std::uint64_t full = VertexSet::range(n).bits();
  return contiguous_bits(full & ~mask);
}

bool verify_witness(const Clutter& c, const OrderingWitness& w) {
  const int n = c.n();
  if (static_cast<int>(w.order.size()) != n) {
    throw Error(ErrorKind::kLengthMismatch,
                "ordering has " + std::to_string(w.order.size()) +
                    " entries for " + std::to_string(n) + " vertices");
  }
  std::vector<int> positions(n, -1);
  for (int i = 0; i < n; ++i) {
    int v = w.order[i];
    if (v < 1 || v > n || positions[v - 1] != -1) {
      throw Error(ErrorKind::kNotAPermutation,
                  "ordering is not a permutation of 1.." + std::to_string(n));
    }
    positions[v - 1] = i;
  }
  const bool cyclic = w.kind == OrderKind::kCyclic;
  return std::all_of(c.edges().begin(), c.edges().end(), [&](VertexSet e) {
    return is_interval_under(e, positions, n, cyclic);
  });
}

}  // namespace pxm
