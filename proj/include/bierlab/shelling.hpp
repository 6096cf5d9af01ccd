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

#ifndef BIERLAB_SHELLING_HPP_
#define BIERLAB_SHELLING_HPP_

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bierlab/complex.hpp"
#include "bierlab/config.hpp"
#include "bierlab/nested.hpp"
#include "bierlab/poset.hpp"

namespace bierlab {

// Ordered facet (or coatom) list plus the transport certificate when one
// was produced: per blown facet, the indices mf and A into the previous
// ordering (1-based).
struct FacetOrdering {
  std::vector<std::vector<std::string>> facets;
  std::map<std::string, std::pair<int, int>> certificate;
};

std::vector<Bitset> resolve_facets(
    const SimplicialComplex& k,
    const std::vector<std::vector<std::string>>& facets);

struct ConditionCheck {
  bool ok = false;
  int i = -1, j = -1;  // first violating pair (0-based positions)
};

// (T): for all i<j there is k<j with c_i ∧ c_j <= c_k ∧ c_j ⋖ c_j.
// Checked on a bounded lattice against an ordering of all its coatoms.
ConditionCheck check_condition_T(const Poset& lhat,
                                 const std::vector<std::string>& coatom_order);

// Same condition evaluated directly on facet intersections; agrees with
// the poset route on face lattices (tested), without building them.
ConditionCheck check_condition_T(const SimplicialComplex& k,
                                 const std::vector<Bitset>& facet_order);

// (S) verbatim on a bounded poset.
ConditionCheck check_condition_S(const Poset& p,
                                 const std::vector<std::string>& coatom_order);

// Full recursive coatom ordering check: (S) for the given top-level
// ordering plus, recursively, orderings of every [0̂,c_j] honoring the
// (R) precedence constraint. Exponential worst case; budgeted.
bool check_recursive_coatom_ordering(const Poset& p,
                                     const std::vector<std::string>& coatom_order,
                                     SearchBudget& budget);

struct ShellingReport {
  FacetOrdering ordering;
  std::string criterion;                    // "T" | "R+S" | "oracle"
  std::vector<std::array<int, 3>> witnesses;  // (i, j, k) per checked pair
};

// Lexicographically first facet ordering satisfying (T), by exhaustive
// backtracking over the canonical facet order, or nullopt.
std::optional<ShellingReport> find_shelling(const SimplicialComplex& k,
                                            SearchBudget budget = {});

// Shelling-order transport across one stellar subdivision: computes
// I = {i : F_i ⊇ α}, C = max{G : G ⊉ α, G ∪ α ∈ K},
// mf(G) = min{s in I : G ⋖ F_s}, A(G) = min{l : G ⊆ F_l}, builds the
// precedence relation between the coatoms of the subdivision, and returns
// its deterministic linear extension together with the (mf, A)
// certificate. The output is re-checked against (T).
FacetOrdering transport_ordering(const SimplicialComplex& k,
                                 const FacetOrdering& o,
                                 const std::vector<std::string>& alpha,
                                 const std::string& new_vertex);

struct PipelineStep {
  SubdivisionStep subdivision;
  FacetOrdering ordering;  // certified ordering after this step
};

struct PipelineReport {
  ChainRecord chain;
  ShellingReport base;  // shelling of Δ(L̄)
  std::vector<PipelineStep> steps;
  FacetOrdering final_ordering;
  SimplicialComplex final_complex;
};

// Threads the base shelling of Δ(L̄) through every subdivision of the
// Bier chain, certifying (T) after each transport.
PipelineReport bier_shelling_pipeline(const Poset& l, const Bitset& ideal,
                                      SearchBudget budget = {});

}  // namespace bierlab

#endif  // BIERLAB_SHELLING_HPP_
