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

#include "pxm/families.h"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "pxm/error.h"

namespace pxm {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string join(const std::vector<int>& xs) {
  std::string out;
  for (int x : xs) {
    if (!out.empty()) out += ",";
    out += std::to_string(x);
  }
  return out;
}

class Checker {
 public:
  void require(bool ok, std::string constraint, std::string detail = {}) {
    if (!ok) out.push_back({std::move(constraint), std::move(detail)});
  }
  std::vector<Violation> out;
};

std::string at(const char* name, std::size_t i, int value) {
  return std::string(name) + "_" + std::to_string(i + 1) + " = " +
         std::to_string(value);
}

// Hands out consecutive vertex blocks.
class Layout {
 public:
  VertexSet take(int size) {
    VertexSet s;
    for (int i = 0; i < size; ++i) s.insert(next_++);
    return s;
  }
  int n() const { return next_ - 1; }

 private:
  int next_ = 1;
};

int o_size(const OParams& p, std::size_t i) {
  const std::size_t m = p.a.size();
  return std::max(p.d, p.a[(i + m - 1) % m] + p.a[i]);
}

void check(const OParams& p, Checker& ck) {
  const std::size_t m = p.a.size();
  ck.require(p.d >= 3, "d >= 3");
  ck.require(m >= 3, "m >= 3", "m = " + std::to_string(m));
  for (std::size_t i = 0; i < m; ++i) {
    ck.require(p.a[i] >= 1, "a_i >= 1", at("a", i, p.a[i]));
    ck.require(p.a[i] <= p.d - 2, "a_i <= d-2", at("a", i, p.a[i]));
  }
  if (m >= 3) {
    for (std::size_t i = 0; i < m; ++i) {
      int x = p.a[i], y = p.a[(i + 1) % m], z = p.a[(i + 2) % m];
      ck.require(!(x + y > p.d && y + z > p.d),
                 "no three consecutive a_i+a_{i+1} > d",
                 "at i = " + std::to_string(i + 1));
    }
  }
  if (!p.sizes.empty()) {
    ck.require(p.sizes.size() == m, "len(sizes) = m");
    if (p.sizes.size() == m && m >= 3) {
      for (std::size_t i = 0; i < m; ++i) {
        ck.require(p.sizes[i] == o_size(p, i),
                   "s_i = max(d, a_{i-1}+a_i)", at("s", i, p.sizes[i]));
      }
    }
  }
}

int y_private(const YParams& p) { return p.c_size - 1 - p.a - p.b; }

void check(const YParams& p, Checker& ck) {
  ck.require(p.d >= 3, "d >= 3");
  ck.require(p.a >= 0, "a >= 0");
  ck.require(p.a <= p.d - 3, "a <= d-3");
  ck.require(p.b >= 0, "b >= 0");
  ck.require(p.b <= p.d - 3, "b <= d-3");
  ck.require(p.c_size >= p.d, "|C| >= d");
  ck.require(y_private(p) >= 1, "|C\\(A u B)| >= 1",
             "|C| - 1 - a - b = " + std::to_string(y_private(p)));
  ck.require(p.c_size <= p.d || y_private(p) == 1,
             "|C| > d only if |C\\(A u B)| = 1");
}

int sh_d_size(const ShParams& p) {
  return p.d_size != 0 ? p.d_size : std::max(p.d, p.a + p.b + p.c);
}

void check(const ShParams& p, Checker& ck) {
  ck.require(p.d >= 3, "d >= 3");
  for (auto [name, v] : {std::pair{"a", p.a}, {"b", p.b}, {"c", p.c}}) {
    ck.require(v >= 1, std::string(name) + " >= 1");
    ck.require(v <= p.d - 2, std::string(name) + " <= d-2");
  }
  const int ds = sh_d_size(p);
  ck.require(ds >= p.d, "|D| >= d");
  ck.require(ds >= p.a + p.b + p.c, "|D| >= a+b+c");
  ck.require(ds <= p.d || ds == p.a + p.b + p.c, "|D| > d only if a+b+c = |D|");
}

void check(const YprimeParams& p, Checker& ck) {
  ck.require(p.d >= 3, "d >= 3");
  ck.require(p.a >= 1, "a >= 1", "|C_2 n A| = d-1-a must be at most d-2");
  ck.require(p.a <= p.d - 3, "a <= d-3");
  ck.require(p.b >= 1, "b >= 1", "|C_2 n B| = d-1-b must be at most d-2");
  ck.require(p.b <= p.d - 3, "b <= d-3");
  ck.require(p.a + p.b == p.d - 1, "a+b = d-1");
}

void check(const MultiYParams& p, Checker& ck) {
  const std::size_t m = p.a.size();
  ck.require(p.d >= 3, "d >= 3");
  ck.require(m >= 2, "m >= 2", "m = " + std::to_string(m));
  ck.require(p.b.size() == m, "len(b) = len(a)");
  ck.require(p.w_size >= 1, "|W| >= 1");
  if (p.b.size() != m) return;
  for (std::size_t i = 0; i < m; ++i) {
    ck.require(p.a[i] >= 0, "a_i >= 0", at("a", i, p.a[i]));
    ck.require(p.a[i] <= p.d - 3, "a_i <= d-3", at("a", i, p.a[i]));
    ck.require(p.b[i] >= 0, "b_i >= 0", at("b", i, p.b[i]));
    ck.require(p.b[i] <= p.d - 3, "b_i <= d-3", at("b", i, p.b[i]));
    const int size = 1 + p.a[i] + p.w_size + p.b[i];
    ck.require(size >= p.d, "|C_i| >= d", at("|C|", i, size));
    ck.require(size <= p.d || p.w_size == 1, "|C_i| > d only if |W| = 1",
               at("|C|", i, size));
  }
  for (std::size_t i = 0; i + 1 < m; ++i) {
    ck.require(p.a[i] < p.a[i + 1], "a strictly increasing");
    ck.require(p.b[i] > p.b[i + 1], "b strictly decreasing");
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      int meet = 1 + std::min(p.a[i], p.a[j]) + p.w_size +
                 std::min(p.b[i], p.b[j]);
      ck.require(meet <= p.d - 2, "|C_i n C_j| <= d-2",
                 "i = " + std::to_string(i + 1) + ", j = " +
                     std::to_string(j + 1) + ": " + std::to_string(meet));
    }
  }
}

void check(const Delta1Params& p, Checker& ck) {
  ck.require(p.a >= 1, "a >= 1");
  ck.require(p.b >= 1, "b >= 1");
  ck.require(p.c >= 1, "c >= 1");
}

void check(const Delta2Params& p, Checker& ck) {
  ck.require(p.a + p.k >= 2, "a+k >= 2");
  ck.require(p.b + p.k >= 2, "b+k >= 2");
  ck.require(p.c + p.k >= 2, "c+k >= 2");
  // a+k <= a, b+k <= b and c+k <= c all say k <= 0.
  ck.require(p.k <= 0, "a+k <= a", "k = " + std::to_string(p.k));
}

void check(const Delta3Params& p, Checker& ck) {
  ck.require(p.a >= 2, "a >= 2");
  ck.require(p.b >= 2, "b >= 2");
  ck.require(p.c >= 2, "c >= 2");
}

// Edges A, B, C and the six blocks of an O_{a,b,c} triangle.
struct Triangle {
  VertexSet s, t, u, s2, t2, u2;
  VertexSet a() const { return s | t2 | u2; }
  VertexSet b() const { return t | u2 | s2; }
  VertexSet c() const { return u | s2 | t2; }
};

Triangle make_triangle(int s, int t, int u, int a, int b, int c) {
  Layout l;
  Triangle tr;
  tr.s = l.take(s);
  tr.t = l.take(t);
  tr.u = l.take(u);
  tr.s2 = l.take(a);
  tr.t2 = l.take(b);
  tr.u2 = l.take(c);
  return tr;
}

struct Instance {
  int n;
  int d;
  std::vector<VertexSet> edges;
};

Instance build(const OParams& p) {
  const std::size_t m = p.a.size();
  Layout l;
  std::vector<VertexSet> junction(m), priv(m);
  VertexSet first = l.take(p.a[m - 1]);
  for (std::size_t i = 0; i < m; ++i) {
    priv[i] = l.take(o_size(p, i) - p.a[(i + m - 1) % m] - p.a[i]);
    junction[i] = i + 1 == m ? first : l.take(p.a[i]);
  }
  Instance out{l.n(), p.d, {}};
  for (std::size_t i = 0; i < m; ++i) {
    out.edges.push_back(junction[(i + m - 1) % m] | priv[i] | junction[i]);
  }
  return out;
}

struct YBlocks {
  VertexSet v, ac, a_priv, b_priv, bc, c_priv;
};

YBlocks y_blocks(int d, int a, int b, int c_priv) {
  Layout l;
  YBlocks y;
  y.v = l.take(1);
  y.ac = l.take(a);
  y.a_priv = l.take(d - 1 - a);
  y.b_priv = l.take(d - 1 - b);
  y.bc = l.take(b);
  y.c_priv = l.take(c_priv);
  return y;
}

Instance build(const YParams& p) {
  YBlocks y = y_blocks(p.d, p.a, p.b, y_private(p));
  return {2 * p.d - 1 + y_private(p), p.d,
          {y.v | y.ac | y.a_priv, y.v | y.b_priv | y.bc,
           y.v | y.ac | y.bc | y.c_priv}};
}

Instance build(const ShParams& p) {
  const int ds = sh_d_size(p);
  Layout l;
  VertexSet ad = l.take(p.a), ap = l.take(p.d - p.a);
  VertexSet bd = l.take(p.b), bp = l.take(p.d - p.b);
  VertexSet cd = l.take(p.c), cp = l.take(p.d - p.c);
  VertexSet dp = l.take(ds - p.a - p.b - p.c);
  return {l.n(), p.d, {ad | ap, bd | bp, cd | cp, ad | bd | cd | dp}};
}

Instance build(const YprimeParams& p) {
  YBlocks y = y_blocks(p.d, p.a, p.b, 1);
  return {2 * p.d, p.d,
          {y.v | y.ac | y.a_priv, y.v | y.b_priv | y.bc,
           y.v | y.ac | y.bc | y.c_priv, y.a_priv | y.c_priv | y.b_priv}};
}

Instance build(const MultiYParams& p) {
  Layout l;
  VertexSet v = l.take(1);
  std::vector<int> a_prime = l.take(p.d - 1).to_vector();
  VertexSet w = l.take(p.w_size);
  std::vector<int> b_prime = l.take(p.d - 1).to_vector();
  Instance out{l.n(), p.d, {}};
  out.edges.push_back(v | VertexSet::from_vertices(a_prime));
  out.edges.push_back(v | VertexSet::from_vertices(b_prime));
  for (std::size_t i = 0; i < p.a.size(); ++i) {
    VertexSet c = v | w;
    for (int j = 0; j < p.a[i]; ++j) c.insert(a_prime[a_prime.size() - 1 - j]);
    for (int j = 0; j < p.b[i]; ++j) c.insert(b_prime[j]);
    out.edges.push_back(c);
  }
  return out;
}

Instance build(const Delta1Params& p) {
  Triangle tr = make_triangle(p.a, p.b, p.c, p.a, p.b, p.c);
  return {2 * (p.a + p.b + p.c), p.a + p.b + p.c,
          {tr.a(), tr.b(), tr.c(), tr.s | tr.t | tr.u}};
}

Instance build(const Delta2Params& p) {
  Triangle tr = make_triangle(p.a + p.k, p.b + p.k, p.c + p.k, p.a, p.b, p.c);
  return {2 * (p.a + p.b + p.c) + 3 * p.k, p.a + p.b + p.c + p.k,
          {tr.a(), tr.b(), tr.c(), tr.s2 | tr.t2 | tr.u2}};
}

Instance build(const Delta3Params& p) {
  Triangle tr = make_triangle(p.a, p.b, p.c, p.a, p.b, p.c);
  return {2 * (p.a + p.b + p.c), p.a + p.b + p.c,
          {tr.a(), tr.b(), tr.c(), tr.s | tr.t | tr.u,
           tr.s2 | tr.t2 | tr.u2}};
}

int size_of(const OParams& p) {
  int n = 0;
  const std::size_t m = p.a.size();
  for (std::size_t i = 0; i < m; ++i) n += o_size(p, i) - p.a[i];
  return n;
}

}  // namespace

FamilyTag family_tag(const FamilyParams& p) {
  return static_cast<FamilyTag>(p.index());
}

std::string_view family_name(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::kO: return "O";
    case FamilyTag::kY: return "Y";
    case FamilyTag::kSh: return "Sh";
    case FamilyTag::kYprime: return "Yprime";
    case FamilyTag::kMultiY: return "MultiY";
    case FamilyTag::kDelta1: return "Delta1";
    case FamilyTag::kDelta2: return "Delta2";
    case FamilyTag::kDelta3: return "Delta3";
  }
  return "unknown";
}

FamilyTag parse_family_tag(std::string_view name) {
  for (int i = 0; i < 8; ++i) {
    auto tag = static_cast<FamilyTag>(i);
    if (family_name(tag) == name) return tag;
  }
  throw Error(ErrorKind::kParseError,
              "unknown family '" + std::string(name) + "'");
}

int family_rank(const FamilyParams& p) {
  return std::visit(
      Overloaded{
          [](const Delta1Params& q) { return q.a + q.b + q.c; },
          [](const Delta2Params& q) { return q.a + q.b + q.c + q.k; },
          [](const Delta3Params& q) { return q.a + q.b + q.c; },
          [](const auto& q) { return q.d; },
      },
      p);
}

std::string describe(const FamilyParams& p) {
  return std::visit(
      Overloaded{
          [](const OParams& q) {
            return "O(d=" + std::to_string(q.d) + ";a=" + join(q.a) + ")";
          },
          [](const YParams& q) {
            return "Y(d=" + std::to_string(q.d) + ";a=" + std::to_string(q.a) +
                   ",b=" + std::to_string(q.b) +
                   ",|C|=" + std::to_string(q.c_size) + ")";
          },
          [](const ShParams& q) {
            return "Sh(d=" + std::to_string(q.d) + ";a=" +
                   std::to_string(q.a) + ",b=" + std::to_string(q.b) +
                   ",c=" + std::to_string(q.c) +
                   ",|D|=" + std::to_string(sh_d_size(q)) + ")";
          },
          [](const YprimeParams& q) {
            return "Yprime(d=" + std::to_string(q.d) + ";a=" +
                   std::to_string(q.a) + ",b=" + std::to_string(q.b) + ")";
          },
          [](const MultiYParams& q) {
            return "MultiY(d=" + std::to_string(q.d) + ";a=" + join(q.a) +
                   ";b=" + join(q.b) + ";|W|=" + std::to_string(q.w_size) +
                   ")";
          },
          [](const Delta1Params& q) {
            return "Delta1(a=" + std::to_string(q.a) + ",b=" +
                   std::to_string(q.b) + ",c=" + std::to_string(q.c) + ")";
          },
          [](const Delta2Params& q) {
            return "Delta2(a=" + std::to_string(q.a) + ",b=" +
                   std::to_string(q.b) + ",c=" + std::to_string(q.c) +
                   ";k=" + std::to_string(q.k) + ")";
          },
          [](const Delta3Params& q) {
            return "Delta3(a=" + std::to_string(q.a) + ",b=" +
                   std::to_string(q.b) + ",c=" + std::to_string(q.c) + ")";
          },
      },
      p);
}

std::vector<Violation> validate_params(const FamilyParams& p) {
  Checker ck;
  std::visit([&](const auto& q) { check(q, ck); }, p);
  if (ck.out.empty()) {
    ck.require(family_size(p) <= kMaxVertices, "n <= 64",
               "n = " + std::to_string(family_size(p)));
  }
  return ck.out;
}

int family_size(const FamilyParams& p) {
  return std::visit(
      Overloaded{
          [](const OParams& q) { return size_of(q); },
          [](const YParams& q) { return 2 * q.d - 1 + y_private(q); },
          [](const ShParams& q) {
            return 3 * q.d + sh_d_size(q) - q.a - q.b - q.c;
          },
          [](const YprimeParams& q) { return 2 * q.d; },
          [](const MultiYParams& q) { return 2 * q.d - 1 + q.w_size; },
          [](const Delta1Params& q) { return 2 * (q.a + q.b + q.c); },
          [](const Delta2Params& q) {
            return 2 * (q.a + q.b + q.c) + 3 * q.k;
          },
          [](const Delta3Params& q) { return 2 * (q.a + q.b + q.c); },
      },
      p);
}

PavingClutter gen_family(const FamilyParams& p) {
  std::vector<Violation> bad = validate_params(p);
  if (!bad.empty()) {
    std::string msg = describe(p) + " violates";
    for (const Violation& v : bad) {
      msg += " [" + v.constraint;
      if (!v.detail.empty()) msg += ": " + v.detail;
      msg += "]";
    }
    throw Error(ErrorKind::kInvalidParams, msg);
  }
  Instance inst = std::visit([](const auto& q) { return build(q); }, p);
  return make_paving(make_clutter(inst.n, std::move(inst.edges)), inst.d);
}

std::vector<FamilyParams> all_family_params(int max_n) {
  std::vector<FamilyParams> out;
  auto keep = [&](FamilyParams p) {
    if (validate_params(p).empty() && family_size(p) <= max_n) {
      out.push_back(std::move(p));
    }
  };

  // O: every edge has >= d vertices and each vertex lies in <= 2 edges.
  for (int d = 3; 3 * d <= 2 * max_n; ++d) {
    for (int m = 3; m * d <= 2 * max_n; ++m) {
      std::vector<int> a(m, 1);
      std::function<void(int, int)> rec = [&](int i, int sum) {
        if (sum > max_n) return;
        if (i == m) {
          keep(OParams{d, a, {}});
          return;
        }
        for (int x = 1; x <= d - 2; ++x) {
          a[i] = x;
          rec(i + 1, sum + x);
        }
      };
      rec(0, 0);
    }
  }
  for (int d = 3; 2 * d <= max_n; ++d) {
    for (int a = 0; a <= d - 3; ++a) {
      for (int b = 0; b <= d - 3; ++b) {
        keep(YParams{d, a, b, d});
        if (a + b + 2 > d) keep(YParams{d, a, b, a + b + 2});
      }
    }
  }
  for (int d = 3; 3 * d <= max_n; ++d) {
    for (int a = 1; a <= d - 2; ++a) {
      for (int b = 1; b <= d - 2; ++b) {
        for (int c = 1; c <= d - 2; ++c) keep(ShParams{d, a, b, c, 0});
      }
    }
  }
  for (int d = 5; 2 * d <= max_n; ++d) {
    for (int a = 1; a <= d - 3; ++a) keep(YprimeParams{d, a, d - 1 - a});
  }
  for (int d = 3; 2 * d <= max_n; ++d) {
    for (int w = 1; 2 * d - 1 + w <= max_n; ++w) {
      // Choose increasing a and decreasing b of the same length m >= 2.
      const int values = d - 2;
      for (int amask = 0; amask < (1 << values); ++amask) {
        for (int bmask = 0; bmask < (1 << values); ++bmask) {
          if (std::popcount(static_cast<unsigned>(amask)) < 2 ||
              std::popcount(static_cast<unsigned>(amask)) !=
                  std::popcount(static_cast<unsigned>(bmask))) {
            continue;
          }
          MultiYParams q{d, {}, {}, w};
          for (int x = 0; x < values; ++x) {
            if (amask >> x & 1) q.a.push_back(x);
          }
          for (int x = values - 1; x >= 0; --x) {
            if (bmask >> x & 1) q.b.push_back(x);
          }
          keep(q);
        }
      }
    }
  }
  for (int a = 1; 2 * a <= max_n; ++a) {
    for (int b = 1; 2 * (a + b) <= max_n; ++b) {
      for (int c = 1; 2 * (a + b + c) <= max_n; ++c) {
        keep(Delta1Params{a, b, c});
        keep(Delta3Params{a, b, c});
      }
    }
  }
  // A negative k shrinks S, T, U, so a + b + c may exceed max_n / 2.
  for (int a = 2; a <= max_n; ++a) {
    for (int b = 2; b <= max_n; ++b) {
      for (int c = 2; c <= max_n; ++c) {
        for (int k = 2 - std::min({a, b, c}); k <= 0; ++k) {
          if (2 * (a + b + c) + 3 * k <= max_n) keep(Delta2Params{a, b, c, k});
        }
      }
    }
  }
  return out;
}

}  // namespace pxm
