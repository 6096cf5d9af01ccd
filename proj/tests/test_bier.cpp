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

#include "bierlab/bier.hpp"
#include "bierlab/error.hpp"
#include "bierlab/homology.hpp"
#include "oracles.hpp"

using namespace bierlab;

namespace {

std::size_t brute_force_interval_count(const Poset& p, const Bitset& ideal) {
  std::size_t count = 0;
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y)
      if (ideal.test(x) && !ideal.test(y) && p.less(x, y)) ++count;
  return count;
}

}  // namespace

TEST_CASE("Bier poset of B_2 at the bottom ideal") {
  Poset b2 = Poset::boolean_lattice(2);
  Bitset ideal(b2.size());
  ideal.set(b2.require_index("{}"));
  BierPoset bp = bier_poset(b2, ideal);
  CHECK(bp.poset.size() == 4);  // two proper elements, bottom, top
  Poset pp = proper_part(bp.poset);
  CHECK(pp.size() == 2);
  CHECK(pp.cover_pairs().empty());
  CHECK(bp.poset.is_lattice());
}

TEST_CASE("Bier poset of B_3 at {∅,{1}}") {
  Poset b3 = Poset::boolean_lattice(3);
  Bitset ideal(b3.size());
  ideal.set(b3.require_index("{}"));
  ideal.set(b3.require_index("{1}"));
  BierPoset bp = bier_poset(b3, ideal);
  Poset pp = proper_part(bp.poset);
  CHECK(pp.size() == 8);
  auto oc = order_complex(pp);
  CHECK(f_vector(oc).counts == std::vector<long long>{1, 8, 8});
  CHECK(reduced_homology(oc).is_sphere(1));
}

TEST_CASE("Bier of a lattice is a lattice; of a bounded poset is bounded") {
  Poset b3 = Poset::boolean_lattice(3);
  for (auto& ideal : enumerate_proper_ideals(b3)) {
    BierPoset bp = bier_poset(b3, ideal);
    CHECK(is_bounded(bp.poset).bounded);
    CHECK(bp.poset.is_lattice());
    CHECK(bp.poset.label(bp.bottom_index) == "[{}|{1,2,3}]");
  }

  // bounded but not a lattice: two parallel middle antichains
  Poset bowtie = Poset::from_covers(
      {"0", "a", "b", "c", "d", "1"},
      {{"0", "a"}, {"0", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"},
       {"c", "1"}, {"d", "1"}});
  CHECK(!bowtie.is_lattice());
  Bitset ideal(bowtie.size());
  ideal.set(bowtie.require_index("0"));
  ideal.set(bowtie.require_index("a"));
  BierPoset bp = bier_poset(bowtie, ideal);
  CHECK(is_bounded(bp.poset).bounded);
  CHECK(bp.poset.size() > 2);
}

TEST_CASE("errors") {
  Poset anti = Poset::from_covers({"a", "b"}, {});
  Bitset ideal(anti.size());
  ideal.set(0);
  CHECK_THROWS_WITH_AS(bier_poset(anti, ideal),
                       doctest::Contains("NotBounded"), Error);

  Poset b2 = Poset::boolean_lattice(2);
  Bitset full(b2.size());
  for (int i = 0; i < b2.size(); ++i) full.set(i);
  CHECK_THROWS_WITH_AS(bier_poset(b2, full),
                       doctest::Contains("NotProperIdeal"), Error);
  Bitset top_only(b2.size());
  top_only.set(b2.require_index("{1,2}"));
  CHECK_THROWS_WITH_AS(bier_poset(b2, top_only),
                       doctest::Contains("NotProperIdeal"), Error);
}

TEST_CASE("reverse inclusion is the order") {
  Poset b3 = Poset::boolean_lattice(3);
  for (auto& ideal : enumerate_proper_ideals(b3)) {
    BierPoset bp = bier_poset(b3, ideal);
    for (int a = 0; a < bp.poset.size(); ++a)
      for (int b = 0; b < bp.poset.size(); ++b) {
        if (bp.elements[a].is_top || bp.elements[b].is_top) continue;
        int ax = b3.require_index(bp.elements[a].lo);
        int ay = b3.require_index(bp.elements[a].hi);
        int bx = b3.require_index(bp.elements[b].lo);
        int by = b3.require_index(bp.elements[b].hi);
        bool contained = b3.leq(ax, bx) && b3.leq(by, ay);
        CHECK(bp.poset.leq(a, b) == contained);
      }
  }
}

TEST_CASE("proper part size matches the interval count") {
  Poset b4 = Poset::boolean_lattice(4);
  for (auto& ideal : enumerate_proper_ideals(b4)) {
    BierPoset bp = bier_poset(b4, ideal);
    // the interval count includes the bottom [0̂,1̂]; only the top is extra
    CHECK(static_cast<std::size_t>(bp.poset.size()) ==
          brute_force_interval_count(b4, ideal) + 1);
  }
}

TEST_CASE("boolean identification for n = 2 and 3, exhaustively") {
  for (int n = 2; n <= 3; ++n) {
    for (auto& mc : oracles::all_complexes(n, 1 << n, /*up_to_iso=*/false)) {
      SimplicialComplex k = oracles::to_complex(mc);
      if (k.n_faces() == (std::size_t{1} << n)) continue;
      auto report = verify_boolean_bier(k, n);
      CHECK(report.ok);
      CHECK(report.witness.size() == report.bier_size);
    }
    auto report =
        verify_boolean_bier(SimplicialComplex::from_facets({{}}), n);
    CHECK(report.ok);
  }
}

TEST_CASE("hexagon face lattice matches Bier(B_3, points ideal)") {
  auto points = SimplicialComplex::from_facets({{"1"}, {"2"}, {"3"}});
  auto report = verify_boolean_bier(points, 3);
  CHECK(report.ok);
  CHECK(report.face_lattice_size == 14);  // 13 faces of the hexagon plus top
}
