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

// Random cyclic edge chains and edges added across one junction, for the
// block and local-to-global tests.

#ifndef PXM_TESTS_RANDOM_INSTANCES_H_
#define PXM_TESTS_RANDOM_INSTANCES_H_

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "oracles.h"

namespace oracle {

// Edges A_0..A_{m-1} with A_i = J_{i-1} ∪ P_i ∪ J_i, junctions nonempty,
// vertices randomly labeled.
struct Chain {
  int n = 0;
  Edges edges;
  std::vector<Mask> junction;  // J_i = A_i ∩ A_{i+1}
  std::vector<Mask> priv;      // P_i
};

inline Chain random_chain(std::mt19937_64& rng, int m, int max_junction,
                          int max_private) {
  std::vector<int> jsize(m), psize(m);
  int n = 0;
  for (int i = 0; i < m; ++i) {
    jsize[i] = 1 + static_cast<int>(rng() % max_junction);
    psize[i] = static_cast<int>(rng() % (max_private + 1));
    n += jsize[i] + psize[i];
  }
  std::vector<int> label(n);
  std::iota(label.begin(), label.end(), 1);
  std::shuffle(label.begin(), label.end(), rng);
  Chain c;
  c.n = n;
  int next = 0;
  auto take = [&](int count) {
    Mask s = 0;
    for (int k = 0; k < count; ++k) s |= bit(label[next++]);
    return s;
  };
  for (int i = 0; i < m; ++i) {
    c.priv.push_back(take(psize[i]));
    c.junction.push_back(take(jsize[i]));
  }
  for (int i = 0; i < m; ++i) {
    c.edges.push_back(c.junction[(i + m - 1) % m] | c.priv[i] |
                      c.junction[i]);
  }
  return c;
}

inline std::vector<int> shuffled(std::mt19937_64& rng, Mask s) {
  std::vector<int> v = vertices_of(s);
  std::shuffle(v.begin(), v.end(), rng);
  return v;
}

// A set J_{i-1}' ∪ P_i' ∪ J_i ∪ P_{i+1}' ∪ J_{i+1}' that is an interval of a
// random arrangement of A_i ∪ A_{i+1} containing J_i, or nullopt when it
// is comparable with a chain edge.
inline std::optional<Mask> random_arc(std::mt19937_64& rng, const Chain& c) {
  const int m = static_cast<int>(c.edges.size());
  const int i = static_cast<int>(rng() % m);
  const int prev = (i + m - 1) % m;
  const int next = (i + 1) % m;
  std::vector<int> line;
  for (Mask part : {c.junction[prev], c.priv[i], c.junction[i],
                    c.priv[next], c.junction[next]}) {
    for (int v : shuffled(rng, part)) line.push_back(v);
  }
  const int before = popcount(c.junction[prev]) + popcount(c.priv[i]);
  const int core_end = before + popcount(c.junction[i]);  // exclusive
  const int len = static_cast<int>(line.size());
  const int start = static_cast<int>(rng() % (before + 1));
  const int end = core_end + static_cast<int>(rng() % (len - core_end + 1));
  Mask b = 0;
  for (int k = start; k < end; ++k) b |= bit(line[k]);
  for (Mask e : c.edges) {
    if ((b & ~e) == 0 || (e & ~b) == 0) return std::nullopt;
  }
  return b;
}

}  // namespace oracle

#endif  // PXM_TESTS_RANDOM_INSTANCES_H_
