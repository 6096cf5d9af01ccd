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

#include "bierlab/shelling.hpp"

#include <algorithm>
#include <map>

#include "bierlab/error.hpp"

namespace bierlab {

std::vector<Bitset> resolve_facets(
    const SimplicialComplex& k,
    const std::vector<std::vector<std::string>>& facets) {
  std::vector<Bitset> out;
  out.reserve(facets.size());
  for (auto& f : facets) {
    auto mask = k.face_from_labels(f);
    if (!mask) fail(ErrorCode::FaceNotPresent, face_set_name(f));
    out.push_back(*mask);
  }
  return out;
}

namespace {

void require_facet_permutation(const SimplicialComplex& k,
                               const std::vector<Bitset>& order) {
  auto facets = k.facets();
  if (order.size() != facets.size())
    fail(ErrorCode::NotCoatoms, "ordering does not list every facet once");
  auto sorted = order;
  std::sort(sorted.begin(), sorted.end(), Bitset::canonical_less);
  std::sort(facets.begin(), facets.end(), Bitset::canonical_less);
  if (sorted != facets)
    fail(ErrorCode::NotCoatoms, "ordering is not a permutation of the facets");
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
    if (sorted[i] == sorted[i + 1])
      fail(ErrorCode::NotCoatoms, "duplicate facet in ordering");
}

// (T) for the pair (i, j) inside a prefix of length j; facets as masks
bool pair_has_T_witness(const std::vector<Bitset>& f, int i, int j) {
  Bitset meet_ij = f[i];
  meet_ij &= f[j];
  const std::size_t dim_j = f[j].count();
  for (int k2 = 0; k2 < j; ++k2) {
    Bitset meet_kj = f[k2];
    meet_kj &= f[j];
    if (meet_kj.count() + 1 != dim_j) continue;
    if (meet_ij.is_subset_of(meet_kj)) return true;
  }
  return false;
}

}  // namespace

ConditionCheck check_condition_T(const SimplicialComplex& k,
                                 const std::vector<Bitset>& facet_order) {
  require_facet_permutation(k, facet_order);
  ConditionCheck r;
  const int n = static_cast<int>(facet_order.size());
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (!pair_has_T_witness(facet_order, i, j)) {
        r.i = i;
        r.j = j;
        return r;
      }
  r.ok = true;
  return r;
}

ConditionCheck check_condition_T(const Poset& lhat,
                                 const std::vector<std::string>& coatom_order) {
  if (!lhat.is_bounded()) fail(ErrorCode::NotBounded, "");
  if (!lhat.is_lattice())
    fail(ErrorCode::NotLattice, "(T) is stated for lattices");
  std::vector<int> coatoms = lhat.lower_covers(*lhat.top());
  std::vector<int> order;
  for (auto& s : coatom_order) order.push_back(lhat.require_index(s));
  {
    auto a = coatoms, b = order;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b)
      fail(ErrorCode::NotCoatoms, "ordering must list every coatom once");
  }

  ConditionCheck r;
  const int n = static_cast<int>(order.size());
  for (int j = 1; j < n; ++j) {
    // covers below c_j, for the ⋖ test
    std::vector<int> below = lhat.lower_covers(order[j]);
    for (int i = 0; i < j; ++i) {
      auto mij = lhat.meet(order[i], order[j]);
      if (!mij) fail(ErrorCode::NotLattice, "missing meet");
      bool witness = false;
      for (int k2 = 0; k2 < j && !witness; ++k2) {
        auto mkj = lhat.meet(order[k2], order[j]);
        if (!mkj) fail(ErrorCode::NotLattice, "missing meet");
        if (std::find(below.begin(), below.end(), *mkj) == below.end())
          continue;
        if (lhat.leq(*mij, *mkj)) witness = true;
      }
      if (!witness) {
        r.i = i;
        r.j = j;
        return r;
      }
    }
  }
  r.ok = true;
  return r;
}

ConditionCheck check_condition_S(const Poset& p,
                                 const std::vector<std::string>& coatom_order) {
  if (!p.is_bounded()) fail(ErrorCode::NotBounded, "");
  std::vector<int> coatoms = p.lower_covers(*p.top());
  std::vector<int> order;
  for (auto& s : coatom_order) order.push_back(p.require_index(s));
  {
    auto a = coatoms, b = order;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b)
      fail(ErrorCode::NotCoatoms, "ordering must list every coatom once");
  }

  ConditionCheck r;
  const int n = static_cast<int>(order.size());
  for (int k2 = 1; k2 < n; ++k2) {
    std::vector<int> omega = p.lower_covers(order[k2]);
    for (int i = 0; i < k2; ++i) {
      for (int x = 0; x < p.size(); ++x) {
        if (!p.leq(x, order[i]) || !p.leq(x, order[k2])) continue;
        bool witness = false;
        for (int w : omega) {
          if (!p.leq(x, w)) continue;
          for (int j = 0; j < k2 && !witness; ++j)
            if (p.leq(w, order[j])) witness = true;
          if (witness) break;
        }
        if (!witness) {
          r.i = i;
          r.j = k2;
          return r;
        }
      }
    }
  }
  r.ok = true;
  return r;
}

// ---------------------------------------------------------------------
// recursive coatom orderings
// ---------------------------------------------------------------------

namespace {

struct RcoSearcher {
  const Poset& p;
  SearchBudget& budget;
  std::map<std::pair<int, std::vector<int>>, bool> memo;

  // does [0̂, y] admit a recursive coatom ordering in which the coatoms
  // from `required` come before all others?
  bool search(int y, std::vector<int> required) {
    std::sort(required.begin(), required.end());
    auto key = std::make_pair(y, required);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    budget.consume();

    std::vector<int> coatoms;
    for (int w : p.lower_covers(y)) coatoms.push_back(w);
    std::sort(coatoms.begin(), coatoms.end());

    bool ok;
    if (coatoms.size() <= 1) {
      // [0̂,y] is a chain of length <= 2; any listing (also the empty
      // one) is recursive
      ok = true;
    } else {
      std::vector<int> placed;
      std::vector<char> used(coatoms.size(), 0);
      ok = place(y, coatoms, required, placed, used);
    }
    memo[key] = ok;
    return ok;
  }

  bool place(int y, const std::vector<int>& coatoms,
             const std::vector<int>& required, std::vector<int>& placed,
             std::vector<char>& used) {
    if (placed.size() == coatoms.size()) return true;
    budget.consume();
    const bool must_pick_required = placed.size() < required.size();
    for (std::size_t ci = 0; ci < coatoms.size(); ++ci) {
      if (used[ci]) continue;
      int c = coatoms[ci];
      if (must_pick_required &&
          !std::binary_search(required.begin(), required.end(), c))
        continue;
      if (!extend_ok(c, placed)) continue;
      // (R) for the new coatom, with its own precedence set
      std::vector<int> sub_required;
      for (int w : p.lower_covers(c))
        for (int d : placed)
          if (p.leq(w, d)) {
            sub_required.push_back(w);
            break;
          }
      if (!search(c, std::move(sub_required))) continue;
      used[ci] = 1;
      placed.push_back(c);
      if (place(y, coatoms, required, placed, used)) return true;
      placed.pop_back();
      used[ci] = 0;
    }
    return false;
  }

  // incremental (S) within [0̂, y'] where y' is implicit: x ranges over
  // everything below both
  bool extend_ok(int c, const std::vector<int>& placed) {
    std::vector<int> omega = p.lower_covers(c);
    for (int d : placed) {
      Bitset common = p.down_set(c);
      common &= p.down_set(d);
      bool all_ok = true;
      common.for_each_set([&](std::size_t x) {
        if (!all_ok) return;
        bool witness = false;
        for (int w : omega) {
          if (!p.leq(static_cast<int>(x), w)) continue;
          for (int e : placed)
            if (p.leq(w, e)) {
              witness = true;
              break;
            }
          if (witness) break;
        }
        if (!witness) all_ok = false;
      });
      if (!all_ok) return false;
    }
    return true;
  }
};

}  // namespace

bool check_recursive_coatom_ordering(const Poset& p,
                                     const std::vector<std::string>& coatom_order,
                                     SearchBudget& budget) {
  if (!p.is_bounded()) fail(ErrorCode::NotBounded, "");
  if (p.size() <= 2) return true;

  std::vector<int> coatoms = p.lower_covers(*p.top());
  std::vector<int> order;
  for (auto& s : coatom_order) order.push_back(p.require_index(s));
  {
    auto a = coatoms, b = order;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b)
      fail(ErrorCode::NotCoatoms, "ordering must list every coatom once");
  }

  if (!check_condition_S(p, coatom_order).ok) return false;

  RcoSearcher searcher{p, budget, {}};
  for (std::size_t j = 0; j < order.size(); ++j) {
    std::vector<int> required;
    for (int w : p.lower_covers(order[j]))
      for (std::size_t i = 0; i < j; ++i)
        if (p.leq(w, order[i])) {
          required.push_back(w);
          break;
        }
    if (!searcher.search(order[j], std::move(required))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------
// shelling search
// ---------------------------------------------------------------------

std::optional<ShellingReport> find_shelling(const SimplicialComplex& k,
                                            SearchBudget budget) {
  if (k.is_void()) fail(ErrorCode::EmptyComplex, "");
  std::vector<Bitset> facets = k.facets();
  std::sort(facets.begin(), facets.end(), Bitset::canonical_less);
  const int n = static_cast<int>(facets.size());

  // pairwise intersections and codimension-1 flags, cached once
  std::vector<Bitset> inter(static_cast<std::size_t>(n) * n);
  std::vector<char> codim1(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Bitset m = facets[a];
      m &= facets[b];
      codim1[static_cast<std::size_t>(a) * n + b] =
          m.count() + 1 == facets[b].count();
      inter[static_cast<std::size_t>(a) * n + b] = std::move(m);
    }

  std::vector<int> chosen;
  std::vector<char> used(n, 0);

  auto rec = [&](auto&& self) -> bool {
    if (static_cast<int>(chosen.size()) == n) return true;
    budget.consume();
    for (int c = 0; c < n; ++c) {
      if (used[c]) continue;
      bool ok = true;
      for (std::size_t i = 0; i < chosen.size() && ok; ++i) {
        bool witness = false;
        const Bitset& need = inter[static_cast<std::size_t>(chosen[i]) * n + c];
        for (std::size_t k2 = 0; k2 < chosen.size() && !witness; ++k2) {
          std::size_t kc = static_cast<std::size_t>(chosen[k2]) * n + c;
          if (codim1[kc] && need.is_subset_of(inter[kc])) witness = true;
        }
        if (!witness) ok = false;
      }
      if (ok) {
        used[c] = 1;
        chosen.push_back(c);
        if (self(self)) return true;
        chosen.pop_back();
        used[c] = 0;
      }
    }
    return false;
  };
  if (!rec(rec)) return std::nullopt;

  std::vector<Bitset> prefix;
  prefix.reserve(n);
  for (int c : chosen) prefix.push_back(facets[c]);

  ShellingReport report;
  report.criterion = "T";
  for (const Bitset& f : prefix)
    report.ordering.facets.push_back(k.face_labels(f));
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      int found = -1;
      for (int k2 = 0; k2 < j && found < 0; ++k2) {
        Bitset mkj = prefix[k2];
        mkj &= prefix[j];
        if (mkj.count() + 1 != prefix[j].count()) continue;
        Bitset mij = prefix[i];
        mij &= prefix[j];
        if (mij.is_subset_of(mkj)) found = k2;
      }
      report.witnesses.push_back({i, j, found});
    }
  return report;
}

// ---------------------------------------------------------------------
// Shelling transport across a stellar subdivision
// ---------------------------------------------------------------------

FacetOrdering transport_ordering(const SimplicialComplex& k,
                                 const FacetOrdering& o,
                                 const std::vector<std::string>& alpha,
                                 const std::string& new_vertex) {
  std::vector<Bitset> order = resolve_facets(k, o.facets);
  {
    ConditionCheck input = check_condition_T(k, order);
    if (!input.ok)
      fail(ErrorCode::InputNotCertified,
           "input ordering fails (T) at (" + std::to_string(input.i) + "," +
               std::to_string(input.j) + ")");
  }
  auto center = k.face_from_labels(alpha);
  if (!center || center->none())
    fail(ErrorCode::CenterNotFace, face_set_name(alpha));

  const int n = static_cast<int>(order.size());

  // I = positions of facets containing the center
  std::vector<char> in_i(n, 0);
  bool any_i = false;
  for (int i = 0; i < n; ++i)
    if (center->is_subset_of(order[i])) {
      in_i[i] = 1;
      any_i = true;
    }
  if (!any_i)
    fail(ErrorCode::CenterNotFace, "center not below any facet");

  // C = maximal faces avoiding α whose union with α is a face
  std::vector<Bitset> c_set;
  for (auto& g : k.faces()) {
    if (center->is_subset_of(g)) continue;
    Bitset u = g;
    u |= *center;
    if (!k.has_face(u)) continue;
    c_set.push_back(g);
  }
  {
    std::vector<Bitset> maximal;
    for (auto& g : c_set) {
      bool beaten = false;
      for (auto& h : c_set)
        if (g != h && g.is_subset_of(h)) beaten = true;
      if (!beaten) maximal.push_back(g);
    }
    c_set = std::move(maximal);
    std::sort(c_set.begin(), c_set.end(), Bitset::canonical_less);
  }

  // mf and A per member of C, as indices into the input ordering
  std::vector<int> mf(c_set.size(), -1), a_of(c_set.size(), -1);
  for (std::size_t t = 0; t < c_set.size(); ++t) {
    for (int s = 0; s < n; ++s) {
      if (!in_i[s]) continue;
      if (c_set[t].is_subset_of(order[s]) &&
          c_set[t].count() + 1 == order[s].count()) {
        mf[t] = s;
        break;
      }
    }
    for (int l2 = 0; l2 < n; ++l2)
      if (c_set[t].is_subset_of(order[l2])) {
        a_of[t] = l2;
        break;
      }
    if (mf[t] < 0)
      fail(ErrorCode::VerificationFailed,
           "member of C without a covering facet through the center");
    if (a_of[t] > mf[t])
      fail(ErrorCode::VerificationFailed, "A(G) exceeded mf(G)");
  }

  SimplicialComplex sd = stellar_subdivision(k, alpha, new_vertex);

  // nodes: untouched facets, then blown coatoms [α, G] = G ∪ {v}
  struct Node {
    bool blown;
    int plain_index;     // position in the input ordering
    std::size_t c_index;  // into c_set
    std::vector<std::string> labels;
    std::string name;
  };
  std::vector<Node> nodes;
  for (int i = 0; i < n; ++i) {
    if (in_i[i]) continue;
    Node nd{false, i, 0, k.face_labels(order[i]), ""};
    nd.name = face_set_name(nd.labels);
    nodes.push_back(std::move(nd));
  }
  for (std::size_t t = 0; t < c_set.size(); ++t) {
    Node nd{true, -1, t, k.face_labels(c_set[t]), ""};
    nd.labels.push_back(new_vertex);
    nd.name = face_set_name(nd.labels);
    nodes.push_back(std::move(nd));
  }

  // internal consistency: these are exactly the facets of sd
  {
    std::vector<Bitset> expected = resolve_facets(
        sd, [&] {
          std::vector<std::vector<std::string>> fs;
          for (auto& nd : nodes) fs.push_back(nd.labels);
          return fs;
        }());
    std::sort(expected.begin(), expected.end(), Bitset::canonical_less);
    auto actual = sd.facets();
    std::sort(actual.begin(), actual.end(), Bitset::canonical_less);
    if (expected != actual)
      fail(ErrorCode::VerificationFailed,
           "coatom set of the subdivision does not match the construction");
  }

  // precedence between the new coatoms
  const std::size_t m = nodes.size();
  std::vector<std::vector<char>> prec(m, std::vector<char>(m, 0));
  auto add_edge = [&](std::size_t x, std::size_t y2) { prec[x][y2] = 1; };
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y2 = 0; y2 < m; ++y2) {
      if (x == y2) continue;
      const Node &nx = nodes[x], &ny = nodes[y2];
      if (!nx.blown && !ny.blown) {
        if (nx.plain_index < ny.plain_index) add_edge(x, y2);
      } else if (!nx.blown && ny.blown) {
        // mixed pairs are comparable both ways: the blown coatom sits at
        // position mf(G) relative to the untouched facets
        if (nx.plain_index < mf[ny.c_index]) add_edge(x, y2);
      } else if (nx.blown && !ny.blown) {
        if (mf[nx.c_index] < ny.plain_index) add_edge(x, y2);
      } else if (nx.blown && ny.blown) {
        int me = mf[nx.c_index], mg = mf[ny.c_index];
        int ae = a_of[nx.c_index], ag = a_of[ny.c_index];
        if (me < mg || (me == mg && ae < ag)) add_edge(x, y2);
      }
    }

  // antisymmetry and acyclicity before extension
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y2 = 0; y2 < m; ++y2)
      if (x != y2 && prec[x][y2] && prec[y2][x])
        fail(ErrorCode::PartialOrderViolated, "precedence has a 2-cycle");

  // Kahn extension, lexicographically smallest coatom name first
  std::vector<int> indeg(m, 0);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y2 = 0; y2 < m; ++y2)
      if (prec[x][y2]) indeg[y2]++;
  std::vector<char> done(m, 0);
  std::vector<std::size_t> linear;
  for (std::size_t step = 0; step < m; ++step) {
    int best = -1;
    for (std::size_t x = 0; x < m; ++x) {
      if (done[x] || indeg[x] != 0) continue;
      if (best < 0 || nodes[x].name < nodes[best].name)
        best = static_cast<int>(x);
    }
    if (best < 0)
      fail(ErrorCode::PartialOrderViolated, "precedence relation has a cycle");
    done[best] = 1;
    linear.push_back(static_cast<std::size_t>(best));
    for (std::size_t y2 = 0; y2 < m; ++y2)
      if (prec[best][y2]) indeg[y2]--;
  }

  FacetOrdering out;
  for (std::size_t x : linear) {
    auto labels = nodes[x].labels;
    std::sort(labels.begin(), labels.end());
    out.facets.push_back(labels);
    if (nodes[x].blown)
      out.certificate[nodes[x].name] = {mf[nodes[x].c_index] + 1,
                                        a_of[nodes[x].c_index] + 1};
  }

  ConditionCheck final_check = check_condition_T(sd, resolve_facets(sd, out.facets));
  if (!final_check.ok)
    fail(ErrorCode::VerificationFailed,
         "transported ordering fails (T) at (" + std::to_string(final_check.i) +
             "," + std::to_string(final_check.j) + ")");
  return out;
}

PipelineReport bier_shelling_pipeline(const Poset& l, const Bitset& ideal,
                                      SearchBudget budget) {
  PipelineReport r;
  r.chain = bier_subdivision_chain(l, ideal, /*keep_intermediates=*/true);

  auto base = find_shelling(r.chain.initial, budget);
  if (!base)
    fail(ErrorCode::StepFailed, "base complex is not shellable");
  r.base = *base;

  SimplicialComplex current = r.chain.initial;
  FacetOrdering ordering = r.base.ordering;
  for (std::size_t i = 0; i < r.chain.steps.size(); ++i) {
    const SubdivisionStep& st = r.chain.steps[i];
    FacetOrdering next;
    try {
      next = transport_ordering(current, ordering, {st.x, st.y}, st.new_vertex);
    } catch (const Error& e) {
      fail(ErrorCode::StepFailed,
           "step " + std::to_string(i) + " (" + st.new_vertex +
               "): " + e.what());
    }
    current = r.chain.intermediates[i];
    ordering = std::move(next);
    r.steps.push_back(PipelineStep{st, ordering});
  }

  r.final_ordering = ordering;
  r.final_complex = current;
  return r;
}

}  // namespace bierlab
