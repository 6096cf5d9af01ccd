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

#include "bierlab/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

#include "bierlab/config.hpp"

namespace bierlab {

namespace {

std::vector<int> topological_order(int n,
                                   const std::vector<std::vector<int>>& succ) {
  std::vector<int> indeg(n, 0), order;
  for (int v = 0; v < n; ++v)
    for (int w : succ[v]) indeg[w]++;
  std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) ready.push(v);
  while (!ready.empty()) {
    int v = ready.top();
    ready.pop();
    order.push_back(v);
    for (int w : succ[v])
      if (--indeg[w] == 0) ready.push(w);
  }
  if (static_cast<int>(order.size()) != n)
    fail(ErrorCode::CycleDetected, "cover relation contains a cycle");
  return order;
}

std::vector<int> longest_path_ranks(int n,
                                    const std::vector<std::vector<int>>& succ,
                                    const std::vector<int>& topo) {
  std::vector<int> rank(n, 0);
  for (int v : topo)
    for (int w : succ[v]) rank[w] = std::max(rank[w], rank[v] + 1);
  return rank;
}

}  // namespace

Poset poset_from_relation(
    std::vector<std::string> elements,
    const std::vector<std::pair<int, int>>& strict_pairs) {
  const int n = static_cast<int>(elements.size());
  if (n > kMaxPosetElements)
    fail(ErrorCode::SizeTooLarge, "poset exceeds the element cap");

  std::vector<std::pair<int, int>> edges = strict_pairs;
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (auto& [a, b] : edges)
    if (a == b) fail(ErrorCode::CycleDetected, "reflexive cover pair");

  std::vector<std::vector<int>> succ(n);
  for (auto& [a, b] : edges) succ[a].push_back(b);

  topological_order(n, succ);  // rejects cycles
  std::vector<Bitset> up = transitive_closure(n, succ);
  std::vector<Bitset> down(n, Bitset(n));
  for (int v = 0; v < n; ++v)
    up[v].for_each_set([&](std::size_t w) { down[w].set(v); });

  // Keep only irredundant pairs: (a,b) is a cover unless something sits
  // strictly between.
  std::vector<std::pair<int, int>> hasse;
  for (auto& [a, b] : edges) {
    bool redundant = false;
    Bitset between = up[a];
    between &= down[b];
    between.reset(a);
    between.reset(b);
    if (between.any()) redundant = true;
    if (!redundant) hasse.emplace_back(a, b);
  }

  Poset p;
  p.labels_ = std::move(elements);
  p.covers_ = std::move(hasse);
  p.up_ = std::move(up);
  p.down_ = std::move(down);
  return p;
}

Poset Poset::from_covers(
    std::vector<std::string> elements,
    const std::vector<std::pair<std::string, std::string>>& covers) {
  std::sort(elements.begin(), elements.end());
  if (std::adjacent_find(elements.begin(), elements.end()) != elements.end())
    fail(ErrorCode::ParseError, "duplicate element label");

  auto index = [&](const std::string& s) -> int {
    auto it = std::lower_bound(elements.begin(), elements.end(), s);
    if (it == elements.end() || *it != s)
      fail(ErrorCode::UnknownElement, "cover endpoint '" + s + "'");
    return static_cast<int>(it - elements.begin());
  };

  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(covers.size());
  for (auto& [lo, hi] : covers) pairs.emplace_back(index(lo), index(hi));
  return poset_from_relation(std::move(elements), pairs);
}

Poset Poset::boolean_lattice(int n) {
  if (n < 0 || n >= 30 || (1 << n) > kMaxPosetElements)
    fail(ErrorCode::SizeTooLarge, "boolean lattice rank out of range");
  const int size = 1 << n;
  std::vector<std::string> labels(size);
  for (int mask = 0; mask < size; ++mask) {
    std::string s = "{";
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) {
        if (s.size() > 1) s += ',';
        s += std::to_string(i + 1);
      }
    s += '}';
    labels[mask] = std::move(s);
  }
  std::vector<std::string> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> pos(size);
  for (int mask = 0; mask < size; ++mask) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), labels[mask]);
    pos[mask] = static_cast<int>(it - sorted.begin());
  }
  std::vector<std::pair<int, int>> pairs;
  for (int mask = 0; mask < size; ++mask)
    for (int i = 0; i < n; ++i)
      if (!(mask & (1 << i))) pairs.emplace_back(pos[mask], pos[mask | (1 << i)]);
  return poset_from_relation(std::move(sorted), pairs);
}

std::optional<int> Poset::index_of(const std::string& label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<int>(it - labels_.begin());
}

int Poset::require_index(const std::string& label) const {
  auto i = index_of(label);
  if (!i) fail(ErrorCode::UnknownElement, "'" + label + "'");
  return *i;
}

std::vector<int> Poset::upper_covers(int i) const {
  std::vector<int> out;
  for (auto& [a, b] : covers_)
    if (a == i) out.push_back(b);
  return out;
}

std::vector<int> Poset::lower_covers(int i) const {
  std::vector<int> out;
  for (auto& [a, b] : covers_)
    if (b == i) out.push_back(a);
  return out;
}

std::vector<int> Poset::minimal_elements() const {
  std::vector<int> out;
  for (int v = 0; v < size(); ++v)
    if (down_[v].count() == 1) out.push_back(v);
  return out;
}

std::vector<int> Poset::maximal_elements() const {
  std::vector<int> out;
  for (int v = 0; v < size(); ++v)
    if (up_[v].count() == 1) out.push_back(v);
  return out;
}

std::optional<int> Poset::bottom() const {
  auto mins = minimal_elements();
  if (mins.size() == 1) return mins[0];
  return std::nullopt;
}

std::optional<int> Poset::top() const {
  auto maxs = maximal_elements();
  if (maxs.size() == 1) return maxs[0];
  return std::nullopt;
}

namespace {

// Longest-chain height of every element; strictly increasing along <, so
// the maximum of a down-closed candidate set, when it exists, is its
// unique highest-ranked member.
std::vector<int> element_ranks(const Poset& p) {
  const int n = p.size();
  std::vector<std::vector<int>> succ(n);
  for (auto& [a, b] : p.cover_pairs()) succ[a].push_back(b);
  std::vector<int> topo(n);
  std::iota(topo.begin(), topo.end(), 0);
  std::sort(topo.begin(), topo.end(), [&](int a, int b) {
    std::size_t ca = p.down_set(a).count(), cb = p.down_set(b).count();
    if (ca != cb) return ca < cb;
    return a < b;
  });
  return longest_path_ranks(n, succ, topo);
}

std::optional<int> bound_of(const Bitset& candidates,
                            const std::vector<Bitset>& dominates,
                            const std::vector<int>& height) {
  int best = -1, best_h = -1;
  bool tie = false;
  candidates.for_each_set([&](std::size_t c) {
    int h = height[c];
    if (h > best_h) {
      best_h = h;
      best = static_cast<int>(c);
      tie = false;
    } else if (h == best_h) {
      tie = true;
    }
  });
  if (best < 0 || tie) return std::nullopt;
  if (!candidates.is_subset_of(dominates[best])) return std::nullopt;
  return best;
}

}  // namespace

std::optional<int> Poset::meet(int a, int b) const {
  Bitset cand = down_[a];
  cand &= down_[b];
  if (cand.none()) return std::nullopt;
  // lazy rank vector would add state; recompute per call sites that care
  // about bulk performance use meet_join_tables instead
  std::vector<int> rank;
  {
    rank.assign(size(), 0);
    // rank by down-set size is enough for the argmax trick: x < y implies
    // |down(x)| < |down(y)|
    for (int v = 0; v < size(); ++v)
      rank[v] = static_cast<int>(down_[v].count());
  }
  return bound_of(cand, down_, rank);
}

std::optional<int> Poset::join(int a, int b) const {
  Bitset cand = up_[a];
  cand &= up_[b];
  if (cand.none()) return std::nullopt;
  std::vector<int> corank(size(), 0);
  for (int v = 0; v < size(); ++v)
    corank[v] = static_cast<int>(up_[v].count());
  return bound_of(cand, up_, corank);
}

bool Poset::is_meet_semilattice() const {
  if (size() == 0) return false;
  MeetJoinTables t = meet_join_tables(*this);
  for (int a = 0; a < size(); ++a)
    for (int b = a; b < size(); ++b)
      if (t.meet[a * size() + b] < 0) return false;
  return true;
}

bool Poset::is_join_semilattice() const {
  if (size() == 0) return false;
  MeetJoinTables t = meet_join_tables(*this);
  for (int a = 0; a < size(); ++a)
    for (int b = a; b < size(); ++b)
      if (t.join[a * size() + b] < 0) return false;
  return true;
}

bool Poset::is_lattice() const {
  if (size() == 0) return false;
  MeetJoinTables t = meet_join_tables(*this);
  for (int a = 0; a < size(); ++a)
    for (int b = a; b < size(); ++b)
      if (t.meet[a * size() + b] < 0 || t.join[a * size() + b] < 0)
        return false;
  return true;
}

Poset Poset::induced(const Bitset& keep) const {
  std::vector<int> idx = keep.to_indices();
  std::vector<std::string> labels;
  labels.reserve(idx.size());
  for (int v : idx) labels.push_back(labels_[v]);

  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j)
      if (i != j && leq(idx[i], idx[j])) pairs.emplace_back(i, j);
  return poset_from_relation(std::move(labels), pairs);
}

int Poset::chain_length(int a, int b) const {
  if (!leq(a, b)) fail(ErrorCode::NotComparable, labels_[a] + " vs " + labels_[b]);
  // longest cover-path from a to b; any such path stays inside [a,b]
  std::vector<int> order(size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    std::size_t cx = down_[x].count(), cy = down_[y].count();
    if (cx != cy) return cx < cy;
    return x < y;
  });
  std::vector<int> dist(size(), -1);
  dist[a] = 0;
  std::vector<std::vector<int>> succ(size());
  for (auto& [x, y] : covers_) succ[x].push_back(y);
  for (int v : order) {
    if (dist[v] < 0) continue;
    if (!leq(v, b)) continue;
    for (int w : succ[v])
      if (leq(w, b)) dist[w] = std::max(dist[w], dist[v] + 1);
  }
  return dist[b];
}

int Poset::length() const {
  auto ranks = element_ranks(*this);
  int best = 0;
  for (int r : ranks) best = std::max(best, r);
  return best;
}

BoundedWitness is_bounded(const Poset& p) {
  if (p.size() == 0) fail(ErrorCode::EmptyPoset, "");
  BoundedWitness w;
  auto bot = p.bottom();
  auto top = p.top();
  if (bot && top) {
    w.bounded = true;
    w.bottom = p.label(*bot);
    w.top = p.label(*top);
  }
  return w;
}

Poset interval(const Poset& p, const std::string& x, const std::string& y) {
  int a = p.require_index(x), b = p.require_index(y);
  if (!p.leq(a, b)) fail(ErrorCode::NotComparable, x + " vs " + y);
  Bitset keep = p.up_set(a);
  keep &= p.down_set(b);
  return p.induced(keep);
}

Poset proper_part(const Poset& p) {
  if (p.size() < 2 || !p.is_bounded())
    fail(ErrorCode::NotBounded, "proper part needs a bounded poset");
  Bitset keep(p.size());
  for (int v = 0; v < p.size(); ++v) keep.set(v);
  keep.reset(*p.bottom());
  keep.reset(*p.top());
  return p.induced(keep);
}

bool is_ideal(const Poset& p, const Bitset& members) {
  bool ok = true;
  members.for_each_set([&](std::size_t v) {
    if (!p.down_set(static_cast<int>(v)).is_subset_of(members)) ok = false;
  });
  return ok;
}

bool is_proper_ideal(const Poset& p, const Bitset& members) {
  return members.any() &&
         members.count() < static_cast<std::size_t>(p.size()) &&
         is_ideal(p, members);
}

Bitset ideal_from_members(const Poset& p,
                          const std::vector<std::string>& members) {
  Bitset out(p.size());
  for (auto& m : members) out.set(p.require_index(m));
  return out;
}

Bitset ideal_downward_closure(const Poset& p,
                              const std::vector<std::string>& generators) {
  Bitset out(p.size());
  for (auto& g : generators) out |= p.down_set(p.require_index(g));
  return out;
}

std::vector<std::string> ideal_member_labels(const Poset& p,
                                             const Bitset& members) {
  std::vector<std::string> out;
  members.for_each_set(
      [&](std::size_t v) { out.push_back(p.label(static_cast<int>(v))); });
  return out;
}

std::vector<Bitset> enumerate_proper_ideals(const Poset& p) {
  const int n = p.size();
  if (!p.is_bounded()) fail(ErrorCode::NotBounded, "ideal sweep needs bounds");

  // explore elements in a linear extension; an element may join only when
  // all of its lower covers are already in
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    std::size_t ca = p.down_set(a).count(), cb = p.down_set(b).count();
    if (ca != cb) return ca < cb;
    return a < b;
  });
  std::vector<std::vector<int>> pred(n);
  for (auto& [a, b] : p.cover_pairs()) pred[b].push_back(a);

  std::vector<Bitset> out;
  Bitset current(n);
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == n) {
      std::size_t c = current.count();
      if (c > 0 && c < static_cast<std::size_t>(n)) out.push_back(current);
      return;
    }
    int v = order[pos];
    self(self, pos + 1);
    for (int u : pred[v])
      if (!current.test(u)) return;
    current.set(v);
    self(self, pos + 1);
    current.reset(v);
  };
  rec(rec, 0);

  std::sort(out.begin(), out.end(), [&](const Bitset& a, const Bitset& b) {
    return Bitset::canonical_less(a, b);
  });
  return out;
}

std::vector<std::vector<int>> maximal_chains(const Poset& p) {
  const int n = p.size();
  std::vector<std::vector<int>> succ(n);
  for (auto& [a, b] : p.cover_pairs()) succ[a].push_back(b);
  for (auto& s : succ) std::sort(s.begin(), s.end());

  std::vector<std::vector<int>> out;
  std::vector<int> chain;
  auto rec = [&](auto&& self, int v) -> void {
    chain.push_back(v);
    if (succ[v].empty()) {
      out.push_back(chain);
    } else {
      for (int w : succ[v]) self(self, w);
    }
    chain.pop_back();
  };
  for (int v : p.minimal_elements()) rec(rec, v);
  return out;
}

// ---------------------------------------------------------------------
// isomorphism search
// ---------------------------------------------------------------------

namespace {

using Fingerprint = std::uint64_t;

std::vector<Fingerprint> refine_colors(const Poset& p) {
  const int n = p.size();
  std::vector<std::vector<int>> up(n), dn(n);
  for (auto& [a, b] : p.cover_pairs()) {
    up[a].push_back(b);
    dn[b].push_back(a);
  }
  auto ranks = element_ranks(p);
  std::vector<Fingerprint> color(n);
  for (int v = 0; v < n; ++v)
    color[v] = (static_cast<Fingerprint>(ranks[v]) << 32) ^
               (static_cast<Fingerprint>(up[v].size()) << 16) ^
               static_cast<Fingerprint>(dn[v].size());

  for (int round = 0; round < n; ++round) {
    std::vector<Fingerprint> next(n);
    for (int v = 0; v < n; ++v) {
      std::vector<Fingerprint> a, b;
      for (int w : up[v]) a.push_back(color[w]);
      for (int w : dn[v]) b.push_back(color[w]);
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      Fingerprint h = color[v] * 1099511628211ull + 14695981039346656037ull;
      for (auto x : a) h = (h ^ x) * 1099511628211ull;
      h = h * 31 + 7;
      for (auto x : b) h = (h ^ x) * 1099511628211ull;
      next[v] = h;
    }
    if (next == color) break;
    color = std::move(next);
  }
  return color;
}

}  // namespace

std::optional<std::vector<std::pair<std::string, std::string>>>
poset_isomorphism(const Poset& p, const Poset& q) {
  if (p.size() != q.size()) return std::nullopt;
  if (p.cover_pairs().size() != q.cover_pairs().size()) return std::nullopt;
  const int n = p.size();
  if (n > 320)
    fail(ErrorCode::SizeTooLarge, "isomorphism search is desk scale");
  if (n == 0) return std::vector<std::pair<std::string, std::string>>{};

  auto cp = refine_colors(p), cq = refine_colors(q);
  {
    auto sp = cp, sq = cq;
    std::sort(sp.begin(), sp.end());
    std::sort(sq.begin(), sq.end());
    if (sp != sq) return std::nullopt;
  }

  // candidate lists per p-vertex, rarest first
  std::vector<std::vector<int>> cands(n);
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w)
      if (cp[v] == cq[w]) cands[v].push_back(w);

  std::vector<int> vorder(n);
  std::iota(vorder.begin(), vorder.end(), 0);
  std::sort(vorder.begin(), vorder.end(), [&](int a, int b) {
    if (cands[a].size() != cands[b].size())
      return cands[a].size() < cands[b].size();
    return a < b;
  });

  std::vector<int> map(n, -1), used(n, 0);
  auto rec = [&](auto&& self, int pos) -> bool {
    if (pos == n) return true;
    int v = vorder[pos];
    for (int w : cands[v]) {
      if (used[w]) continue;
      bool ok = true;
      for (int k = 0; k < pos && ok; ++k) {
        int u = vorder[k];
        if (p.leq(u, v) != q.leq(map[u], w)) ok = false;
        if (p.leq(v, u) != q.leq(w, map[u])) ok = false;
      }
      if (!ok) continue;
      map[v] = w;
      used[w] = 1;
      if (self(self, pos + 1)) return true;
      used[w] = 0;
      map[v] = -1;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;

  // re-validate: covers must be preserved and reflected
  for (auto& [a, b] : p.cover_pairs()) {
    auto qu = q.upper_covers(map[a]);
    if (std::find(qu.begin(), qu.end(), map[b]) == qu.end())
      fail(ErrorCode::VerificationFailed, "isomorphism cover check");
  }

  std::vector<std::pair<std::string, std::string>> out;
  for (int v = 0; v < n; ++v) out.emplace_back(p.label(v), q.label(map[v]));
  return out;
}

}  // namespace bierlab
