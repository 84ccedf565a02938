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

#include "pxm/enumeration.h"

#include <algorithm>
#include <atomic>
#include <set>
#include <string>
#include <thread>

#include "pxm/definition_check.h"
#include "pxm/error.h"
#include "pxm/ordering.h"

namespace pxm {
namespace {

class Augmenter {
 public:
  Augmenter(int d, int n,
            const std::function<void(const PavingClutter&)>& sink)
      : d_(d), n_(n), sink_(sink) {
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t bits = 1; bits < limit; ++bits) {
      VertexSet s(bits);
      if (s.size() >= d) candidates_.push_back(s);
    }
  }

  void run() {
    Clutter root = make_clutter(n_, std::vector<VertexSet>{});
    sink_(make_paving(root, d_));
    grow(root);
  }

 private:
  void grow(const Clutter& parent) {
    int max_size = 0;
    for (VertexSet f : parent.edges()) max_size = std::max(max_size, f.size());
    std::set<CanonicalKey> seen;
    std::vector<Clutter> children;
    for (VertexSet e : candidates_) {
      // The canonical first edge always has maximum size.
      if (e.size() < max_size) continue;
      bool fits = true;
      for (VertexSet f : parent.edges()) {
        if ((e & f).size() > d_ - 2) {
          fits = false;
          break;
        }
      }
      if (!fits) continue;
      std::vector<VertexSet> edges = parent.edges();
      edges.push_back(e);
      Clutter child = make_clutter(n_, std::move(edges));
      CanonicalForm form = canonical_form(child);
      const std::size_t added = child.size() - 1;
      if (!std::binary_search(form.first_edges.begin(),
                              form.first_edges.end(), added)) {
        continue;
      }
      if (!seen.insert(form.key).second) continue;
      children.push_back(make_clutter(n_, std::move(form.key.edges)));
    }
    for (const Clutter& child : children) {
      sink_(make_paving(child, d_));
      grow(child);
    }
  }

  const int d_;
  const int n_;
  const std::function<void(const PavingClutter&)>& sink_;
  std::vector<VertexSet> candidates_;
};

struct ItemResult {
  Category category = Category::kIntervalPositroid;
  std::optional<ExcludedMinorEntry> entry;
  bool oracle_checked = false;
  bool oracle_disagrees = false;
  bool criterion_disagrees = false;
};

ItemResult process(const PavingClutter& p, bool cross_validate) {
  ItemResult r;
  r.category = categorize(p);
  XmCertificate cert;
  if (r.category != Category::kIntervalPositroid) {
    cert = check_excluded_minor(p);
  }
  if (cross_validate) {
    r.oracle_checked = true;
    r.oracle_disagrees = definition::is_excluded_minor(
                             p.n(), p.rank(), p.clutter().edges()) !=
                         cert.verdict;
  }
  const bool positroid = r.category != Category::kNonPositroid;
  std::optional<CriterionReport> criterion;
  if (positroid) {
    criterion = positroid_xm_criterion(p);
    r.criterion_disagrees = criterion->holds != cert.verdict;
  }
  if (cert.verdict) {
    ExcludedMinorEntry e;
    e.clutter = p;
    e.positroid = positroid;
    e.certificate = std::move(cert);
    if (positroid) {
      e.criterion = criterion;
    } else {
      e.family = classify_family(p);
    }
    try {
      e.reduction = relaxation_reduce(p);
    } catch (const Error& err) {
      e.reduction_error = err.what();
    }
    r.entry = std::move(e);
  }
  return r;
}

}  // namespace

void enumerate_paving(int d, int n,
                      const std::function<void(const PavingClutter&)>& sink,
                      int cap) {
  if (n > cap || n > kMaxVertices) {
    throw Error(ErrorKind::kCapExceeded,
                "n = " + std::to_string(n) + " exceeds the enumeration cap " +
                    std::to_string(std::min(cap, kMaxVertices)));
  }
  if (d < 2 || d > n) {
    throw Error(ErrorKind::kRankOutOfRange,
                "rank " + std::to_string(d) + " outside 2.." +
                    std::to_string(n));
  }
  Augmenter(d, n, sink).run();
}

std::vector<PavingClutter> enumerate_paving(int d, int n, int cap) {
  std::vector<PavingClutter> out;
  enumerate_paving(
      d, n, [&](const PavingClutter& p) { out.push_back(p); }, cap);
  return out;
}

std::string_view category_name(Category c) {
  switch (c) {
    case Category::kIntervalPositroid: return "interval_positroid";
    case Category::kPositroidNonInterval: return "positroid_non_interval";
    case Category::kNonPositroid: return "non_positroid";
  }
  return "unknown";
}

Category categorize(const PavingClutter& p) {
  if (is_interval_positroid(p)) return Category::kIntervalPositroid;
  if (is_positroid(p)) return Category::kPositroidNonInterval;
  return Category::kNonPositroid;
}

CensusReport census(int d, int n_max, const CensusOptions& options) {
  CensusReport report;
  report.d = d;
  report.n_min = options.n_min > 0 ? options.n_min : d;
  report.n_max = n_max;
  if (n_max > options.cap) {
    throw Error(ErrorKind::kCapExceeded,
                "n = " + std::to_string(n_max) +
                    " exceeds the enumeration cap " +
                    std::to_string(options.cap));
  }
  for (int n = report.n_min; n <= n_max; ++n) {
    std::vector<PavingClutter> items = enumerate_paving(d, n, options.cap);
    std::vector<ItemResult> results(items.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next++; i < items.size(); i = next++) {
        results[i] = process(items[i], options.cross_validate);
      }
    };
    const int jobs = std::max(1, options.jobs);
    std::vector<std::thread> pool;
    for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (std::thread& t : pool) t.join();

    CensusRow row;
    row.n = n;
    row.total = items.size();
    for (std::size_t i = 0; i < items.size(); ++i) {
      ItemResult& r = results[i];
      ++row.by_category[static_cast<std::size_t>(r.category)];
      if (r.oracle_checked) ++report.cross_validated;
      if (r.oracle_disagrees) report.oracle_disagreements.push_back(items[i]);
      if (r.criterion_disagrees) {
        report.criterion_disagreements.push_back(items[i]);
      }
      if (r.entry) {
        if (r.entry->positroid) {
          ++row.positroid_excluded;
        } else {
          ++row.non_positroid_excluded;
        }
        report.excluded.push_back(std::move(*r.entry));
      }
    }
    report.rows.push_back(row);
  }
  // Representatives are canonical, so their edge lists are their keys.
  auto key_of = [](const ExcludedMinorEntry& e) {
    return CanonicalKey{e.clutter.n(), e.clutter.clutter().edges()};
  };
  std::stable_sort(report.excluded.begin(), report.excluded.end(),
                   [&](const ExcludedMinorEntry& a,
                       const ExcludedMinorEntry& b) {
                     return key_of(a) < key_of(b);
                   });
  return report;
}

}  // namespace pxm
