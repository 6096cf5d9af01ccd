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

#include "bierlab/bier.hpp"

#include <algorithm>

#include "bierlab/error.hpp"

namespace bierlab {

Poset BierPoset::without_top() const {
  Bitset keep(poset.size());
  for (int i = 0; i < poset.size(); ++i)
    if (i != top_index) keep.set(i);
  return poset.induced(keep);
}

std::string BierPoset::chain_vertex_name(int i) const {
  const BierElement& e = elements[i];
  if (e.is_top) return "TOP";
  if (e.lo == p_bottom_label && e.hi != p_top_label) return e.hi;
  if (e.hi == p_top_label && e.lo != p_bottom_label) return e.lo;
  return e.serialize();
}

BierPoset bier_poset(const Poset& p, const Bitset& ideal) {
  BoundedWitness bw = is_bounded(p);
  if (!bw.bounded) fail(ErrorCode::NotBounded, "Bier needs a bounded poset");
  if (!is_proper_ideal(p, ideal))
    fail(ErrorCode::NotProperIdeal, "Bier needs a proper ideal");

  const int bot = *p.bottom(), top = *p.top();

  std::vector<BierElement> elems;
  for (int x = 0; x < p.size(); ++x) {
    if (!ideal.test(x)) continue;
    for (int y = 0; y < p.size(); ++y) {
      if (ideal.test(y)) continue;
      if (!p.leq(x, y)) continue;  // x < y is implied: I is downward closed
      elems.push_back(BierElement{false, p.label(x), p.label(y)});
    }
  }
  elems.push_back(BierElement{true, "", ""});

  std::vector<std::string> labels;
  labels.reserve(elems.size());
  for (auto& e : elems) labels.push_back(e.serialize());
  std::vector<std::string> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    fail(ErrorCode::ParseError, "element labels collide under serialization");

  auto pos = [&](const std::string& s) {
    return static_cast<int>(
        std::lower_bound(sorted.begin(), sorted.end(), s) - sorted.begin());
  };

  // reverse inclusion: [x,y] <= [v,w] iff x <= v and w <= y
  std::vector<std::pair<int, int>> pairs;
  const int m = static_cast<int>(elems.size());
  for (int a = 0; a < m; ++a) {
    if (elems[a].is_top) continue;
    int ax = p.require_index(elems[a].lo), ay = p.require_index(elems[a].hi);
    pairs.emplace_back(pos(labels[a]), pos("TOP"));
    for (int b = 0; b < m; ++b) {
      if (a == b || elems[b].is_top) continue;
      int bx = p.require_index(elems[b].lo), by = p.require_index(elems[b].hi);
      if (p.leq(ax, bx) && p.leq(by, ay) && !(ax == bx && ay == by))
        pairs.emplace_back(pos(labels[a]), pos(labels[b]));
    }
  }

  BierPoset out;
  out.poset = poset_from_relation(sorted, pairs);
  out.elements.resize(m);
  for (int a = 0; a < m; ++a) out.elements[pos(labels[a])] = elems[a];
  out.top_index = pos("TOP");
  out.bottom_index = pos("[" + p.label(bot) + "|" + p.label(top) + "]");
  out.p_bottom_label = p.label(bot);
  out.p_top_label = p.label(top);
  return out;
}

BierPoset bier_poset(const Poset& p, const std::vector<std::string>& ideal) {
  return bier_poset(p, ideal_from_members(p, ideal));
}

Bitset complex_as_ideal(const SimplicialComplex& k, const Poset& bn, int n) {
  Bitset ideal(bn.size());
  for (auto& f : k.faces()) {
    std::vector<std::string> labels = k.face_labels(f);
    std::vector<int> nums;
    for (auto& l : labels) nums.push_back(std::stoi(l));
    std::sort(nums.begin(), nums.end());
    std::string name = "{";
    for (std::size_t i = 0; i < nums.size(); ++i) {
      if (i) name += ',';
      name += std::to_string(nums[i]);
    }
    name += '}';
    ideal.set(bn.require_index(name));
  }
  (void)n;
  return ideal;
}

BooleanBierReport verify_boolean_bier(const SimplicialComplex& k, int n) {
  BooleanBierReport r;
  r.n = n;
  SimplicialComplex dj = deleted_join_bier(k, n);  // validates K proper
  Poset fl = face_lattice(dj);

  Poset bn = Poset::boolean_lattice(n);
  Bitset ideal = complex_as_ideal(k, bn, n);
  BierPoset bp = bier_poset(bn, ideal);

  r.face_lattice_size = static_cast<std::size_t>(fl.size());
  r.bier_size = static_cast<std::size_t>(bp.poset.size());
  if (r.face_lattice_size != r.bier_size) {
    r.counterexample = "size mismatch";
    return r;
  }
  auto iso = poset_isomorphism(fl, bp.poset);
  if (!iso) {
    r.counterexample = "no order isomorphism";
    return r;
  }
  r.ok = true;
  r.witness = *iso;
  return r;
}

}  // namespace bierlab
