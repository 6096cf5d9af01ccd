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

#ifndef BIERLAB_BIER_HPP_
#define BIERLAB_BIER_HPP_

#include <optional>
#include <string>
#include <vector>

#include "bierlab/complex.hpp"
#include "bierlab/poset.hpp"

namespace bierlab {

// Element of Bier(P, I): an interval [lo, hi] with lo in I, hi outside I,
// or the adjoined top.
struct BierElement {
  bool is_top = false;
  std::string lo, hi;

  // "[lo|hi]", "TOP"
  std::string serialize() const {
    return is_top ? std::string("TOP") : "[" + lo + "|" + hi + "]";
  }
  bool operator==(const BierElement& o) const {
    return is_top == o.is_top && lo == o.lo && hi == o.hi;
  }
};

struct BierPoset {
  Poset poset;                        // labels are the serialized elements
  std::vector<BierElement> elements;  // indexed like poset
  int bottom_index = -1;              // [0̂_P, 1̂_P]
  int top_index = -1;
  std::string p_bottom_label, p_top_label;

  const BierElement& element(int i) const { return elements[i]; }

  // Bier(P,I) minus its top: the meet-semilattice the nested set theory
  // lives in.
  Poset without_top() const;

  // Vertex renaming used by the subdivision-chain identification:
  // [0̂,y] -> y, [x,1̂] -> x, interior [x,y] -> "[x|y]".
  std::string chain_vertex_name(int i) const;
};

// Def: intervals [x,y], x in I, y outside I, under reverse inclusion,
// plus a top. P must be bounded, I a proper ideal.
BierPoset bier_poset(const Poset& p, const Bitset& ideal);
BierPoset bier_poset(const Poset& p, const std::vector<std::string>& ideal);

struct BooleanBierReport {
  bool ok = false;
  // witness isomorphism face_lattice(Bier_n(K)) -> Bier(B_n, I_K)
  std::vector<std::pair<std::string, std::string>> witness;
  std::string counterexample;
  int n = 0;
  std::size_t face_lattice_size = 0, bier_size = 0;
};

// Checks the boolean identification Bier(B_n, I_K) = Bier_n(K), where the
// ideal is the face set of K inside B_n.
BooleanBierReport verify_boolean_bier(const SimplicialComplex& k, int n);

// The faces of K seen as the members of an ideal in B_n.
Bitset complex_as_ideal(const SimplicialComplex& k, const Poset& bn, int n);

}  // namespace bierlab

#endif  // BIERLAB_BIER_HPP_
