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

#ifndef BIERLAB_NESTED_HPP_
#define BIERLAB_NESTED_HPP_

#include <optional>
#include <string>
#include <vector>

#include "bierlab/bier.hpp"
#include "bierlab/complex.hpp"
#include "bierlab/poset.hpp"

namespace bierlab {

struct BuildingSetCheck {
  bool ok = false;
  std::string counterexample;  // violating element when !ok
};

// Canonical-map building set test: for every x above the bottom, the
// product of the lower intervals of max G_{<=x} must map onto [0̂,x] by
// joins, bijectively and order-isomorphically in both directions.
// Hosts must be meet-semilattices.
BuildingSetCheck is_building_set(const Poset& l,
                                 const std::vector<std::string>& members);

bool is_nested(const Poset& l, const std::vector<std::string>& building,
               const std::vector<std::string>& candidate);

// Complex on the building set whose faces are exactly the nested sets.
SimplicialComplex nested_set_complex(const Poset& l,
                                     const std::vector<std::string>& building);

// The Bier building set {[0̂,y] : y in L̄ \ I} ∪ {[x,1̂] : x in I \ 0̂},
// inside Bier(L,I) minus its top. L must be a lattice.
struct CanonicalBierData {
  BierPoset bier;
  Poset host;  // Bier(L,I) without its top
  std::vector<std::string> building;
};
CanonicalBierData canonical_bier_building_set(const Poset& l,
                                              const Bitset& ideal);

// The explicit bijection N(G) = Δ(L̄): chains split at the ideal
// boundary.
struct ChainBijectionReport {
  bool ok = false;
  std::string failure;
  // building-set member -> proper-part element of L
  std::vector<std::pair<std::string, std::string>> vertex_map;
  std::size_t n_faces = 0;
};
ChainBijectionReport nested_chain_bijection(const Poset& l,
                                            const Bitset& ideal);

// Element of Bl_α(L): either an untouched x (with x not above α) or the
// marked pair [α, x].
struct BlowupElement {
  bool blown = false;
  std::string x;

  std::string serialize(const std::string& alpha) const {
    return blown ? "[" + alpha + "|" + x + "]" : x;
  }
};

struct BlowupPoset {
  Poset poset;
  std::vector<BlowupElement> elements;  // indexed like poset
  std::string alpha;
};

// Combinatorial blowup at alpha; host must be a meet-semilattice and
// alpha must not be the bottom. The result is validated to be a
// meet-semilattice again.
BlowupPoset combinatorial_blowup(const Poset& l, const std::string& alpha);

// Extends a building set by a maximal outside element and verifies the
// blowup identity F(N(G ∪ {α})) = Bl_B(F(N(G))), B = max G_{<=α},
// under the map A -> A / [B, A \ {α}].
struct ExtendReport {
  std::vector<std::string> extended;  // G ∪ {α}
  std::vector<std::string> b_set;     // max G_{<=α}
  bool verified = false;
  std::string failure;
};
ExtendReport extend_building_set(const Poset& l,
                                 const std::vector<std::string>& building,
                                 const std::string& alpha);

// One stellar subdivision step of the Bier chain.
struct SubdivisionStep {
  std::string x, y;        // edge endpoints (x in I \ 0̂, y in L̄ \ I)
  int length = 0;          // l(x,y) in L
  std::string new_vertex;  // "[x|y]"
};

struct ChainRecord {
  std::vector<SubdivisionStep> steps;
  SimplicialComplex initial;  // Δ(L̄)
  SimplicialComplex final;    // equals Δ(Bier(L,I)‾) under canonical naming
  std::vector<SimplicialComplex> intermediates;  // after each step, if kept
  bool verified = false;
};

// Subdivides the comparable ideal-crossing edges of Δ(L̄) in increasing
// length, verifying at every step that the new Bier interval is maximal
// among the missing elements, that the building-set blowup identity
// holds, and that the running complex equals the nested set complex of
// the grown building set under the canonical naming.
ChainRecord bier_subdivision_chain(const Poset& l, const Bitset& ideal,
                                   bool keep_intermediates = false);

// Renamed copy of a nested-set or order complex of Bier elements, with
// building-set vertices renamed to proper-part elements of L and interior
// intervals to "[x|y]".
SimplicialComplex rename_by_chain_names(const SimplicialComplex& k,
                                        const BierPoset& bier);

}  // namespace bierlab

#endif  // BIERLAB_NESTED_HPP_
