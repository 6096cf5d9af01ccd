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

#ifndef BIERLAB_HOMOLOGY_HPP_
#define BIERLAB_HOMOLOGY_HPP_

#include <string>
#include <vector>

#include "bierlab/complex.hpp"

namespace bierlab {

// Integer matrix in row-major storage. Entries are overflow-checked
// int64; an overflow during reduction raises NumericOverflow instead of
// returning a wrong answer.
struct IntMatrix {
  int rows = 0, cols = 0;
  std::vector<long long> a;

  long long& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  long long at(int i, int j) const {
    return a[static_cast<std::size_t>(i) * cols + j];
  }
};

struct SnfResult {
  std::vector<long long> invariant_factors;  // positive, divisibility order
  int rank = 0;
};

// OpenMP-parallel elimination; the serial reference uses single-entry
// Euclid steps and is kept for testing and benchmarking.
SnfResult smith_normal_form(IntMatrix m);
SnfResult smith_normal_form_serial(IntMatrix m);

// Rank over Q by fraction-free elimination; an independent route to the
// Betti numbers used by the tests.
int rational_rank(IntMatrix m);

// Reduced integral homology profile. The reduced chain complex includes
// the empty face, so the irrelevant complex {∅} reports rank 1 in
// dimension -1.
struct HomologyProfile {
  int dim = -2;  // dim of the complex (-2 for void)
  long long betti_minus1 = 0;
  std::vector<long long> betti;                  // d = 0..dim
  std::vector<std::vector<long long>> torsion;   // d = 0..dim

  bool trivial_above(int d) const;
  // reduced homology of S^m (m >= -1): one Z in dimension m, else zero
  bool is_sphere(int m) const;
  bool operator==(const HomologyProfile& o) const {
    return dim == o.dim && betti_minus1 == o.betti_minus1 &&
           betti == o.betti && torsion == o.torsion;
  }
};

HomologyProfile reduced_homology(const SimplicialComplex& k);

// Boundary matrix ∂_d : C_d -> C_{d-1} of the reduced chain complex,
// rows indexed by (d-1)-faces and columns by d-faces, both in the
// complex's canonical face order.
IntMatrix boundary_matrix(const SimplicialComplex& k, int d);

std::string homology_to_string(const HomologyProfile& h);

}  // namespace bierlab

#endif  // BIERLAB_HOMOLOGY_HPP_
