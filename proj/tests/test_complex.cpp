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

#include "bierlab/complex.hpp"
#include "bierlab/error.hpp"
#include "bierlab/homology.hpp"
#include "bierlab/nested.hpp"
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

std::vector<std::string> ground(int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back(std::to_string(i));
  return out;
}

}  // namespace

TEST_CASE("from_facets") {
  auto full = SimplicialComplex::from_facets({{"1", "2", "3"}});
  CHECK(full.n_faces() == 8);
  CHECK(full.dim() == 2);

  auto none = SimplicialComplex::from_facets({});
  CHECK(none.is_void());
  CHECK(none.n_faces() == 0);

  auto path = SimplicialComplex::from_facets({{"1", "2"}, {"2", "3"}});
  CHECK(path.n_faces() == 6);

  auto irrelevant = SimplicialComplex::from_facets({{}});
  CHECK(irrelevant.n_faces() == 1);
  CHECK(irrelevant.dim() == -1);
  CHECK(irrelevant != none);
}

TEST_CASE("alexander dual") {
  auto irrelevant = SimplicialComplex::from_facets({{}});
  auto d = alexander_dual(irrelevant, ground(2));
  CHECK(d.n_faces() == 3);  // ∅, {1}, {2}
  CHECK(d.dim() == 0);

  auto full = SimplicialComplex::from_facets({{"1", "2", "3"}});
  CHECK(alexander_dual(full, ground(3)).is_void());

  auto points = SimplicialComplex::from_facets({{"1"}, {"2"}, {"3"}});
  CHECK(alexander_dual(points, ground(3)) == points);

  auto boundary = alexander_dual(irrelevant, ground(3));
  CHECK(f_vector(boundary).counts == std::vector<long long>{1, 3, 3});
}

TEST_CASE("alexander dual is an involution, exhaustively for n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    auto g = ground(n);
    for (auto& mc : oracles::all_complexes(n, 1 << n, /*up_to_iso=*/false)) {
      SimplicialComplex k = oracles::to_complex(mc);
      if (k.n_faces() == (std::size_t{1} << n)) continue;  // full simplex
      CHECK(alexander_dual(alexander_dual(k, g), g) == k);
    }
    // and the irrelevant complex
    auto irrelevant = SimplicialComplex::from_facets({{}});
    CHECK(alexander_dual(alexander_dual(irrelevant, g), g) == irrelevant);
  }
}

TEST_CASE("deleted join examples") {
  auto points = SimplicialComplex::from_facets({{"1"}, {"2"}, {"3"}});
  auto bier3 = deleted_join_bier(points, 3);
  CHECK(bier3.n_vertices() == 6);
  CHECK(f_vector(bier3).counts == std::vector<long long>{1, 6, 6});
  CHECK(reduced_homology(bier3).is_sphere(1));

  auto k2 = SimplicialComplex::from_facets({{"1"}});
  auto bier2 = deleted_join_bier(k2, 2);
  CHECK(bier2.n_vertices() == 2);
  CHECK(bier2.dim() == 0);
  CHECK(reduced_homology(bier2).is_sphere(0));

  CHECK_THROWS_WITH_AS(
      deleted_join_bier(SimplicialComplex::from_facets({{"1", "2"}}), 2),
      doctest::Contains("NotProper"), Error);
  CHECK_THROWS_WITH_AS(deleted_join_bier(SimplicialComplex{}, 2),
                       doctest::Contains("NotProper"), Error);
}

TEST_CASE("deleted join is a sphere for every proper K, n <= 4") {
  for (int n = 2; n <= 4; ++n) {
    std::size_t checked = 0;
    for (auto& mc : oracles::all_complexes(n, 1 << n, /*up_to_iso=*/false)) {
      SimplicialComplex k = oracles::to_complex(mc);
      if (k.n_faces() == (std::size_t{1} << n)) continue;
      auto bier = deleted_join_bier(k, n);
      CHECK(bier.n_vertices() <= 2 * n);
      CHECK(reduced_homology(bier).is_sphere(n - 2));
      CHECK(is_pseudomanifold(bier).ok);
      ++checked;
    }
    // the irrelevant complex is proper too
    auto bier = deleted_join_bier(SimplicialComplex::from_facets({{}}), n);
    CHECK(reduced_homology(bier).is_sphere(n - 2));
    if (n == 3) CHECK(checked == 17);  // 18 proper subcomplex ideals minus {∅}
  }
}

TEST_CASE("deleted join sampled at n = 5") {
  std::mt19937_64 rng(99);
  int done = 0;
  while (done < 12) {
    SimplicialComplex k = oracles::random_complex(rng, 5, 6);
    if (k.n_faces() == 32) continue;
    std::vector<std::vector<std::string>> shifted;  // vertices into {1..5}
    for (int fi : k.facet_indices())
      shifted.push_back(k.face_labels(k.faces()[fi]));
    SimplicialComplex k5 = SimplicialComplex::from_facets(shifted);
    auto bier = deleted_join_bier(k5, 5);
    CHECK(bier.n_vertices() <= 10);
    CHECK(reduced_homology(bier).is_sphere(3));
    CHECK(is_pseudomanifold(bier).ok);
    ++done;
  }
}

TEST_CASE("stellar subdivision") {
  auto full = SimplicialComplex::from_facets({{"1", "2", "3"}});
  auto sd = stellar_subdivision(full, {"1", "2"}, "v");
  auto facets = sd.facets();
  CHECK(facets.size() == 2);
  CHECK(sd.face_from_labels({"1", "3", "v"}).has_value());
  CHECK(sd.face_from_labels({"2", "3", "v"}).has_value());
  CHECK(!sd.face_from_labels({"1", "2"}).has_value());

  auto cone = stellar_subdivision(full, {"1", "2", "3"}, "v");
  CHECK(cone.facets().size() == 3);
  CHECK(cone.face_from_labels({"1", "2", "v"}).has_value());

  auto renamed = stellar_subdivision(full, {"1"}, "v");
  CHECK(complex_isomorphism(renamed, full).has_value());

  CHECK_THROWS_WITH_AS(stellar_subdivision(full, {}, "v"),
                       doctest::Contains("EmptyCenter"), Error);
  CHECK_THROWS_WITH_AS(stellar_subdivision(full, {"1", "4"}, "v"),
                       doctest::Contains("FaceNotPresent"), Error);
  CHECK_THROWS_WITH_AS(stellar_subdivision(full, {"1", "2"}, "3"),
                       doctest::Contains("VertexClash"), Error);
}

TEST_CASE("face poset and face lattice") {
  auto pt = SimplicialComplex::from_facets({{"1"}});
  Poset fp = face_poset(pt);
  CHECK(fp.size() == 2);
  Poset fl = face_lattice(pt);
  CHECK(fl.size() == 3);
  CHECK(fl.is_lattice());

  auto full = SimplicialComplex::from_facets({{"1", "2", "3"}});
  Poset ffl = face_lattice(full);
  CHECK(ffl.size() == 9);
  CHECK(ffl.is_lattice());

  // meets in the face poset are intersections
  auto k = SimplicialComplex::from_facets({{"1", "2", "3"}, {"2", "3", "4"}});
  Poset kp = face_poset(k);
  CHECK(kp.is_meet_semilattice());
  for (auto& f : k.faces())
    for (auto& g : k.faces()) {
      Bitset meet_fg = f;
      meet_fg &= g;
      auto m = kp.meet(kp.require_index(k.face_name(f)),
                       kp.require_index(k.face_name(g)));
      REQUIRE(m.has_value());
      CHECK(kp.label(*m) == k.face_name(meet_fg));
    }

  CHECK_THROWS_WITH_AS(face_poset(SimplicialComplex{}),
                       doctest::Contains("EmptyComplex"), Error);
}

TEST_CASE("f-vector, h-vector, Euler characteristic") {
  auto hex = hexagon();
  CHECK(f_vector(hex).counts == std::vector<long long>{1, 6, 6});
  CHECK(euler_characteristic(hex) == 0);

  auto tri = SimplicialComplex::from_facets({{"1", "2"}, {"2", "3"}, {"1", "3"}});
  CHECK(f_vector(tri).counts == std::vector<long long>{1, 3, 3});
  CHECK(euler_characteristic(tri) == 0);
  CHECK(h_vector(tri) == std::vector<long long>{1, 1, 1});

  auto full = SimplicialComplex::from_facets({{"1", "2", "3"}});
  CHECK(euler_characteristic(full) == 1);

  CHECK(f_vector(SimplicialComplex{}).counts.empty());
  CHECK(euler_characteristic(SimplicialComplex{}) == 0);
}

TEST_CASE("pseudomanifold checks") {
  CHECK(is_pseudomanifold(hexagon()).ok);
  auto wedge = SimplicialComplex::from_facets({{"1", "2", "3"}, {"3", "4", "5"}});
  auto r = is_pseudomanifold(wedge);
  CHECK(!r.ok);
  CHECK(!r.reason.empty());
  auto tetra = SimplicialComplex::from_facets(
      {{"1", "2", "3"}, {"1", "2", "4"}, {"1", "3", "4"}, {"2", "3", "4"}});
  CHECK(is_pseudomanifold(tetra).ok);
  auto s0 = SimplicialComplex::from_facets({{"1"}, {"2"}});
  CHECK(is_pseudomanifold(s0).ok);
  auto three = SimplicialComplex::from_facets({{"1"}, {"2"}, {"3"}});
  CHECK(!is_pseudomanifold(three).ok);
}

TEST_CASE("complex isomorphism") {
  auto hex = hexagon();
  auto other = SimplicialComplex::from_facets({{"a", "b"},
                                               {"b", "c"},
                                               {"c", "d"},
                                               {"d", "e"},
                                               {"e", "f"},
                                               {"f", "a"}});
  CHECK(complex_isomorphism(hex, other).has_value());

  auto twotri = SimplicialComplex::from_facets({{"1", "2", "3"}, {"4", "5", "6"}});
  CHECK(!complex_isomorphism(hex, twotri).has_value());

  auto full = SimplicialComplex::from_facets({{"1", "2", "3"}});
  auto sd = stellar_subdivision(full, {"1", "2"}, "v");
  CHECK(!complex_isomorphism(full, sd).has_value());

  // the two orientations of a path are isomorphic; the map carries faces
  auto p1 = SimplicialComplex::from_facets({{"1", "2"}, {"2", "3"}});
  auto p2 = SimplicialComplex::from_facets({{"x", "y"}, {"y", "z"}});
  auto iso = complex_isomorphism(p1, p2);
  REQUIRE(iso.has_value());
  for (auto& f : p1.faces()) {
    std::vector<std::string> image;
    for (auto& v : p1.face_labels(f))
      for (auto& [a, b] : *iso)
        if (a == v) image.push_back(b);
    CHECK(p2.face_from_labels(image).has_value());
  }
}

TEST_CASE("face poset of a stellar subdivision is the blowup, small sweep") {
  for (auto& mc : oracles::all_complexes(3, 8, /*up_to_iso=*/false)) {
    SimplicialComplex k = oracles::to_complex(mc);
    for (auto& face : k.faces()) {
      if (face.none()) continue;
      auto center = k.face_labels(face);
      SimplicialComplex sd =
          stellar_subdivision(k, center, canonical_subdivision_label(center));
      Poset sd_poset = face_poset(sd);
      BlowupPoset bl = combinatorial_blowup(face_poset(k), k.face_name(face));
      REQUIRE(sd_poset.size() == bl.poset.size());
      // canonical map: faces without the apex stay, faces with it blow up
      auto rename = [&](const Bitset& sd_face) {
        auto labels = sd.face_labels(sd_face);
        auto apex = canonical_subdivision_label(center);
        auto it = std::find(labels.begin(), labels.end(), apex);
        if (it == labels.end()) return face_set_name(labels);
        labels.erase(it);
        return "[" + k.face_name(face) + "|" + face_set_name(labels) + "]";
      };
      for (auto& fa : sd.faces())
        for (auto& fb : sd.faces()) {
          bool sub = fa.is_subset_of(fb);
          int ia = bl.poset.require_index(rename(fa));
          int ib = bl.poset.require_index(rename(fb));
          CHECK(sub == bl.poset.leq(ia, ib));
        }
    }
  }
}

TEST_CASE("stellar subdivision preserves Euler characteristic and homology") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 25; ++trial) {
    SimplicialComplex k = oracles::random_complex(rng, 6, 5);
    if (k.n_faces() < 2) continue;
    // pick a random nonempty face
    std::vector<Bitset> nonempty;
    for (auto& f : k.faces())
      if (f.any()) nonempty.push_back(f);
    auto& center = nonempty[rng() % nonempty.size()];
    auto sd = stellar_subdivision(k, k.face_labels(center), "apex");
    CHECK(euler_characteristic(sd) == euler_characteristic(k));
    CHECK(reduced_homology(sd) == reduced_homology(k));
  }
}
