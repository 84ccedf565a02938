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

#include "pxm/canonical.h"

#include <algorithm>

namespace pxm {
namespace {

class OrderingSearch {
 public:
  explicit OrderingSearch(const Clutter& c)
      : edges_(c.edges()), used_(c.size(), false) {}

  void run(int n) {
    std::vector<VertexSet> cells;
    if (n > 0) cells.push_back(VertexSet::range(n));
    recurse(cells);
  }

  std::vector<std::size_t> best_order;
  std::vector<VertexSet> best_cells;
  std::vector<std::size_t> first_edges;

 private:
  // Compares the current prefix to the incumbent over the same length.
  int compare_prefix() const {
    if (!have_best_) return 1;
    const std::size_t len = std::min(code_.size(), best_code_.size());
    for (std::size_t i = 0; i < len; ++i) {
      if (code_[i] != best_code_[i]) return code_[i] < best_code_[i] ? -1 : 1;
    }
    return 0;
  }

  void recurse(const std::vector<VertexSet>& cells) {
    if (order_.size() == edges_.size()) {
      int cmp = compare_prefix();
      if (cmp > 0) {
        have_best_ = true;
        best_code_ = code_;
        best_order = order_;
        best_cells = cells;
        first_edges.assign(1, order_.empty() ? 0 : order_.front());
        if (order_.empty()) first_edges.clear();
      } else if (cmp == 0 && !order_.empty()) {
        std::size_t f = order_.front();
        if (std::find(first_edges.begin(), first_edges.end(), f) ==
            first_edges.end()) {
          first_edges.push_back(f);
        }
      }
      return;
    }
    std::vector<VertexSet> next;
    next.reserve(cells.size() * 2);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      if (used_[e]) continue;
      const std::size_t mark = code_.size();
      for (VertexSet cell : cells) code_.push_back((cell & edges_[e]).size());
      if (compare_prefix() < 0) {
        code_.resize(mark);
        continue;
      }
      next.clear();
      for (VertexSet cell : cells) {
        VertexSet in = cell & edges_[e];
        VertexSet out = cell - edges_[e];
        if (!in.empty()) next.push_back(in);
        if (!out.empty()) next.push_back(out);
      }
      used_[e] = true;
      order_.push_back(e);
      recurse(next);
      order_.pop_back();
      used_[e] = false;
      code_.resize(mark);
    }
  }

  const std::vector<VertexSet>& edges_;
  std::vector<bool> used_;
  std::vector<std::size_t> order_;
  std::vector<int> code_;
  std::vector<int> best_code_;
  bool have_best_ = false;
};

}  // namespace

CanonicalForm canonical_form(const Clutter& c) {
  OrderingSearch search(c);
  search.run(c.n());

  CanonicalForm form;
  form.edge_order = search.best_order;
  std::sort(search.first_edges.begin(), search.first_edges.end());
  form.first_edges = search.first_edges;
  form.vertex_map.assign(c.n(), 0);
  int label = 0;
  for (VertexSet cell : search.best_cells) {
    for (int v : cell.to_vector()) form.vertex_map[v - 1] = ++label;
  }
  form.key.n = c.n();
  form.key.edges.reserve(c.size());
  for (std::size_t e : form.edge_order) {
    VertexSet image;
    for (int v : c.edge(e).to_vector()) image.insert(form.vertex_map[v - 1]);
    form.key.edges.push_back(image);
  }
  return form;
}

CanonicalKey canonical_key(const Clutter& c) {
  return canonical_form(c).key;
}

Clutter canonical_clutter(const Clutter& c) {
  CanonicalKey key = canonical_key(c);
  return make_clutter(key.n, std::move(key.edges));
}

}  // namespace pxm
