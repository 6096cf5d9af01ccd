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

#ifndef BIERLAB_COMPLEX_HPP_
#define BIERLAB_COMPLEX_HPP_

#include <optional>
#include <string>
#include <vector>

#include "bierlab/bitset.hpp"
#include "bierlab/poset.hpp"

namespace bierlab {

// Abstract simplicial complex over string-labeled vertices.
//
// Faces are vertex bitsets stored explicitly in a canonical order
// (dimension first, then lowest vertices first). A nonempty complex
// always contains the empty face; the void complex (no faces at all) and
// the irrelevant complex {∅} are distinct values. Every stored vertex
// occurs in some face.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  // Downward closure of the given facets. An empty list yields the void
  // complex; a single empty facet yields {∅}.
  static SimplicialComplex from_facets(
      const std::vector<std::vector<std::string>>& facets);

  // Validated build from an explicit face family over labeled vertices.
  static SimplicialComplex from_faces(std::vector<std::string> vertices,
                                      std::vector<Bitset> faces);

  int n_vertices() const { return static_cast<int>(vertices_.size()); }
  std::size_t n_faces() const { return faces_.size(); }
  bool is_void() const { return faces_.empty(); }

  // dim of the void complex is -2 by convention, of {∅} it is -1.
  int dim() const;

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::string& vertex_label(int i) const { return vertices_[i]; }
  std::optional<int> vertex_index(const std::string& label) const;

  const std::vector<Bitset>& faces() const { return faces_; }
  const std::vector<int>& facet_indices() const { return facets_; }
  std::vector<Bitset> facets() const;

  bool has_face(const Bitset& mask) const;
  std::optional<Bitset> face_from_labels(
      const std::vector<std::string>& labels) const;

  std::vector<std::string> face_labels(const Bitset& mask) const;
  std::string face_name(const Bitset& mask) const;  // "{a,b}" form

  bool operator==(const SimplicialComplex& o) const {
    return vertices_ == o.vertices_ && faces_ == o.faces_;
  }
  bool operator!=(const SimplicialComplex& o) const { return !(*this == o); }

 private:
  std::vector<std::string> vertices_;  // sorted, unique
  std::vector<Bitset> faces_;          // canonical order
  std::vector<int> facets_;            // indices of maximal faces
};

// A(K) = { ground \ σ : σ ⊆ ground, σ ∉ K }.
SimplicialComplex alexander_dual(const SimplicialComplex& k,
                                 const std::vector<std::string>& ground);

// Bier_n(K) = (K * A(K))_Δ on {1..n} ⊎ {1'..n'}; K must be a proper
// nonempty complex on ground {1..n}.
SimplicialComplex deleted_join_bier(const SimplicialComplex& k, int n);

// sd_F(K) with a caller-chosen apex label.
SimplicialComplex stellar_subdivision(const SimplicialComplex& k,
                                      const std::vector<std::string>& center,
                                      const std::string& new_vertex);

// Reproducible default apex label for a center face: "[a|b|...]" over the
// sorted vertex labels, matching the interval names used by Bier chains.
std::string canonical_subdivision_label(const std::vector<std::string>& center);

// Face poset (bottom = empty face) and face lattice (adds a "TOP").
Poset face_poset(const SimplicialComplex& k);
Poset face_lattice(const SimplicialComplex& k);

struct FVector {
  // counts[0] = f_{-1}; empty for the void complex
  std::vector<long long> counts;
  bool operator==(const FVector& o) const { return counts == o.counts; }
};
FVector f_vector(const SimplicialComplex& k);
std::vector<long long> h_vector(const SimplicialComplex& k);
long long euler_characteristic(const SimplicialComplex& k);

struct PseudomanifoldReport {
  bool ok = false;
  std::string reason;  // machine-readable on failure, empty on success
};
PseudomanifoldReport is_pseudomanifold(const SimplicialComplex& k);

// Vertex bijection carrying faces to faces bijectively, or nullopt.
std::optional<std::vector<std::pair<std::string, std::string>>>
complex_isomorphism(const SimplicialComplex& a, const SimplicialComplex& b);

// All chains of P as a complex on the element labels.
SimplicialComplex order_complex(const Poset& p);

std::string face_set_name(std::vector<std::string> labels);

}  // namespace bierlab

#endif  // BIERLAB_COMPLEX_HPP_
