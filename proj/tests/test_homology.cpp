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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bierlab/homology.hpp"
#include "oracles.hpp"

using namespace bierlab;

namespace {

SimplicialComplex hexagon() {
  return SimplicialComplex::from_facets({{"1", "2"},
                                         {"2", "3"},
                                         {"3", "4"},
                                         {"4", "5"},
                                         {"5", "6"},
                                         {"6", "1"}});
}

// minimal 6-vertex triangulation of the real projective plane
SimplicialComplex rp2() {
  return SimplicialComplex::from_facets(
      {{"1", "2", "3"}, {"1", "3", "4"}, {"1", "4", "5"}, {"1", "5", "6"},
       {"1", "2", "6"}, {"2", "3", "5"}, {"3", "4", "6"}, {"2", "4", "5"},
       {"3", "5", "6"}, {"2", "4", "6"}});
}

}  // namespace

TEST_CASE("spheres and contractible cases") {
  CHECK(reduced_homology(hexagon()).is_sphere(1));

  auto tetra = SimplicialComplex::from_facets(
      {{"1", "2", "3"}, {"1", "2", "4"}, {"1", "3", "4"}, {"2", "3", "4"}});
  CHECK(reduced_homology(tetra).is_sphere(2));

  auto point = SimplicialComplex::from_facets({{"1"}});
  auto h = reduced_homology(point);
  CHECK(h.betti_minus1 == 0);
  CHECK(h.betti == std::vector<long long>{0});

  auto s0 = SimplicialComplex::from_facets({{"1"}, {"2"}});
  CHECK(reduced_homology(s0).is_sphere(0));

  auto full = SimplicialComplex::from_facets({{"1", "2", "3"}});
  auto hf = reduced_homology(full);
  CHECK(hf.betti == std::vector<long long>{0, 0, 0});
  CHECK(hf.betti_minus1 == 0);
}

TEST_CASE("the irrelevant complex reports rank 1 in dimension -1") {
  auto irrelevant = SimplicialComplex::from_facets({{}});
  auto h = reduced_homology(irrelevant);
  CHECK(h.dim == -1);
  CHECK(h.betti_minus1 == 1);
  CHECK(h.is_sphere(-1));

  CHECK(reduced_homology(SimplicialComplex{}).dim == -2);
}

TEST_CASE("torsion: the projective plane") {
  auto k = rp2();
  REQUIRE(f_vector(k).counts == std::vector<long long>{1, 6, 15, 10});
  CHECK(is_pseudomanifold(k).ok);
  auto h = reduced_homology(k);
  CHECK(h.betti == std::vector<long long>{0, 0, 0});
  REQUIRE(h.torsion.size() == 3);
  CHECK(h.torsion[1] == std::vector<long long>{2});
  CHECK(h.torsion[2].empty());
}

TEST_CASE("two components and a wedge of circles") {
  auto two = SimplicialComplex::from_facets({{"1", "2"}, {"3", "4"}});
  auto h = reduced_homology(two);
  CHECK(h.betti[0] == 1);  // reduced

  // two hollow triangles sharing one vertex: a wedge of two circles
  auto wedge = SimplicialComplex::from_facets(
      {{"1", "2"}, {"2", "3"}, {"1", "3"}, {"3", "4"}, {"4", "5"}, {"3", "5"}});
  auto hw = reduced_homology(wedge);
  CHECK(hw.betti == std::vector<long long>{0, 2});
}

TEST_CASE("Euler characteristic equals the alternating Betti sum plus one") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    SimplicialComplex k = oracles::random_complex(rng, 6, 6);
    auto h = reduced_homology(k);
    long long alt = -h.betti_minus1;
    for (std::size_t d = 0; d < h.betti.size(); ++d)
      alt += (d % 2 == 0 ? 1 : -1) * h.betti[d];
    CHECK(euler_characteristic(k) == 1 + alt);
  }
}

TEST_CASE("Betti numbers agree with the rational-rank route") {
  std::mt19937_64 rng(78);
  for (int trial = 0; trial < 40; ++trial) {
    SimplicialComplex k = oracles::random_complex(rng, 6, 6);
    auto h = reduced_homology(k);
    auto q = oracles::rational_betti(k);
    REQUIRE(q.size() == h.betti.size() + 1);
    CHECK(q[0] == h.betti_minus1);
    for (std::size_t d = 0; d < h.betti.size(); ++d) CHECK(q[d + 1] == h.betti[d]);
  }
  // torsion does not change ranks
  auto h = reduced_homology(rp2());
  auto q = oracles::rational_betti(rp2());
  CHECK(q[1] == h.betti[0]);
  CHECK(q[2] == h.betti[1]);
}

TEST_CASE("boundary matrices compose to zero") {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 15; ++trial) {
    SimplicialComplex k = oracles::random_complex(rng, 6, 5);
    for (int d = 0; d <= k.dim(); ++d) {
      IntMatrix a = boundary_matrix(k, d);      // C_d -> C_{d-1}
      IntMatrix b = boundary_matrix(k, d + 1);  // C_{d+1} -> C_d
      if (a.rows == 0 || b.cols == 0 || a.cols == 0) continue;
      REQUIRE(a.cols == b.rows);
      for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < b.cols; ++j) {
          long long s = 0;
          for (int t = 0; t < a.cols; ++t) s += a.at(i, t) * b.at(t, j);
          CHECK(s == 0);
        }
    }
  }
}
