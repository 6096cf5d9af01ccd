//  Copyright 2026 The bierlab Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.
//
//  Data-parallel kernels behind the poset layer, each paired with a
//  straightforward serial reference used by the tests and the benchmark.

#include <algorithm>
#include <numeric>

#include "bierlab/poset.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bierlab {

// Level-synchronous reachability DP: nodes grouped by longest distance to
// a sink; within a level the rows are independent.
std::vector<Bitset> transitive_closure(
    int n, const std::vector<std::vector<int>>& succ) {
  std::vector<int> order;
  order.reserve(n);
  {
    std::vector<int> indegree(n, 0);
    for (int v = 0; v < n; ++v)
      for (int w : succ[v]) indegree[w]++;
    std::vector<int> stack;
    for (int v = 0; v < n; ++v)
      if (indegree[v] == 0) stack.push_back(v);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      order.push_back(v);
      for (int w : succ[v])
        if (--indegree[w] == 0) stack.push_back(w);
    }
  }

  std::vector<int> level(n, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    for (int w : succ[*it]) level[*it] = std::max(level[*it], level[w] + 1);

  int max_level = 0;
  for (int v = 0; v < n; ++v) max_level = std::max(max_level, level[v]);
  std::vector<std::vector<int>> buckets(max_level + 1);
  for (int v : order) buckets[level[v]].push_back(v);

  std::vector<Bitset> up(n, Bitset(n));
  for (int lv = 0; lv <= max_level; ++lv) {
    auto& bucket = buckets[lv];
    const int m = static_cast<int>(bucket.size());
#pragma omp parallel for schedule(dynamic, 16) if (m >= 64)
    for (int bi = 0; bi < m; ++bi) {
      int v = bucket[bi];
      up[v].set(v);
      for (int w : succ[v]) up[v] |= up[w];
    }
  }
  return up;
}

// Reference: plain DFS from every source.
std::vector<Bitset> transitive_closure_serial(
    int n, const std::vector<std::vector<int>>& succ) {
  std::vector<Bitset> up(n, Bitset(n));
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    stack.assign(1, s);
    up[s].set(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : succ[v])
        if (!up[s].test(w)) {
          up[s].set(w);
          stack.push_back(w);
        }
    }
  }
  return up;
}

namespace {

// The extreme of a down-closed (resp. up-closed) candidate set, if any:
// pick the unique candidate of extremal height and confirm it dominates.
template <typename DomSets>
int bound_with_height(const Bitset& cand, DomSets dominates,
                      const std::vector<int>& height) {
  int best = -1, best_h = -1;
  bool tie = false;
  cand.for_each_set([&](std::size_t c) {
    int h = height[c];
    if (h > best_h) {
      best_h = h;
      best = static_cast<int>(c);
      tie = false;
    } else if (h == best_h) {
      tie = true;
    }
  });
  if (best < 0 || tie) return -1;
  if (!cand.is_subset_of(dominates(best))) return -1;
  return best;
}

}  // namespace

MeetJoinTables meet_join_tables(const Poset& p) {
  const int n = p.size();
  MeetJoinTables t;
  t.meet.assign(static_cast<std::size_t>(n) * n, -1);
  t.join.assign(static_cast<std::size_t>(n) * n, -1);
  // x < y implies |down(x)| < |down(y)| and |up(x)| > |up(y)|, so set
  // sizes serve as strict heights in both directions.
  std::vector<int> h_down(n), h_up(n);
  for (int v = 0; v < n; ++v) {
    h_down[v] = static_cast<int>(p.down_set(v).count());
    h_up[v] = static_cast<int>(p.up_set(v).count());
  }
  auto down_of = [&p](int v) -> const Bitset& { return p.down_set(v); };
  auto up_of = [&p](int v) -> const Bitset& { return p.up_set(v); };
#pragma omp parallel for schedule(dynamic, 8) if (n >= 96)
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      Bitset m = p.down_set(a);
      m &= p.down_set(b);
      int mv = m.none() ? -1 : bound_with_height(m, down_of, h_down);
      Bitset j = p.up_set(a);
      j &= p.up_set(b);
      int jv = j.none() ? -1 : bound_with_height(j, up_of, h_up);
      t.meet[static_cast<std::size_t>(a) * n + b] = mv;
      t.meet[static_cast<std::size_t>(b) * n + a] = mv;
      t.join[static_cast<std::size_t>(a) * n + b] = jv;
      t.join[static_cast<std::size_t>(b) * n + a] = jv;
    }
  }
  return t;
}

// Reference: the definition, checked naively - collect all common bounds,
// take the maximal ones by pairwise comparison, demand a unique one that
// dominates the rest.
MeetJoinTables meet_join_tables_serial(const Poset& p) {
  const int n = p.size();
  MeetJoinTables t;
  t.meet.assign(static_cast<std::size_t>(n) * n, -1);
  t.join.assign(static_cast<std::size_t>(n) * n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<int> lower, upper;
      for (int c = 0; c < n; ++c) {
        if (p.leq(c, a) && p.leq(c, b)) lower.push_back(c);
        if (p.leq(a, c) && p.leq(b, c)) upper.push_back(c);
      }
      auto unique_extreme = [&](const std::vector<int>& cs, bool want_max) {
        std::vector<int> extreme;
        for (int c : cs) {
          bool beaten = false;
          for (int d : cs)
            if (d != c && (want_max ? p.less(c, d) : p.less(d, c)))
              beaten = true;
          if (!beaten) extreme.push_back(c);
        }
        if (extreme.size() != 1) return -1;
        for (int c : cs)
          if (want_max ? !p.leq(c, extreme[0]) : !p.leq(extreme[0], c))
            return -1;
        return extreme[0];
      };
      t.meet[static_cast<std::size_t>(a) * n + b] =
          lower.empty() ? -1 : unique_extreme(lower, true);
      t.join[static_cast<std::size_t>(a) * n + b] =
          upper.empty() ? -1 : unique_extreme(upper, false);
    }
  return t;
}

}  // namespace bierlab
