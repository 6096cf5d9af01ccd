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
#include "bierlab/poset.hpp"
#include "oracles.hpp"

using namespace bierlab;

namespace {

Poset diamond() {
  return Poset::from_covers({"0", "x", "y", "1"},
                            {{"0", "x"}, {"0", "y"}, {"x", "1"}, {"y", "1"}});
}

Poset chain3() {
  return Poset::from_covers({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
}

Poset random_poset(std::mt19937_64& rng, int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> covers;
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int e = 0; e < 2 * n; ++e) {
    int a = pick(rng), b = pick(rng);
    if (a == b) continue;
    covers.emplace_back(labels[std::min(a, b)], labels[std::max(a, b)]);
  }
  return Poset::from_covers(labels, covers);
}

}  // namespace

TEST_CASE("from_covers basics") {
  Poset single = Poset::from_covers({"a"}, {});
  CHECK(single.size() == 1);

  Poset d = diamond();
  CHECK(d.size() == 4);
  CHECK(d.cover_pairs().size() == 4);
  CHECK(d.leq(d.require_index("0"), d.require_index("1")));
  CHECK(!d.comparable(d.require_index("x"), d.require_index("y")));

  CHECK_THROWS_WITH_AS(
      Poset::from_covers({"a", "b"}, {{"a", "b"}, {"b", "a"}}),
      doctest::Contains("CycleDetected"), Error);
  CHECK_THROWS_WITH_AS(Poset::from_covers({"a"}, {{"a", "z"}}),
                       doctest::Contains("UnknownElement"), Error);
}

TEST_CASE("transitively redundant covers are reduced, not rejected") {
  Poset p = Poset::from_covers({"a", "b", "c"},
                               {{"a", "b"}, {"b", "c"}, {"a", "c"}});
  CHECK(p.cover_pairs().size() == 2);
  CHECK(p.leq(p.require_index("a"), p.require_index("c")));
}

TEST_CASE("boolean lattice") {
  CHECK(Poset::boolean_lattice(0).size() == 1);
  Poset b3 = Poset::boolean_lattice(3);
  CHECK(b3.size() == 8);
  CHECK(b3.cover_pairs().size() == 12);
  CHECK(Poset::boolean_lattice(2).is_lattice());
  for (int n = 0; n <= 5; ++n) CHECK(Poset::boolean_lattice(n).is_lattice());
}

TEST_CASE("is_bounded") {
  Poset b3 = Poset::boolean_lattice(3);
  auto w = is_bounded(b3);
  CHECK(w.bounded);
  CHECK(w.bottom == "{}");
  CHECK(w.top == "{1,2,3}");

  Poset anti = Poset::from_covers({"a", "b"}, {});
  CHECK(!is_bounded(anti).bounded);

  auto wc = is_bounded(chain3());
  CHECK(wc.bounded);
  CHECK(wc.bottom == "a");
  CHECK(wc.top == "c");

  CHECK_THROWS_AS(is_bounded(Poset::from_covers({}, {})), Error);
}

TEST_CASE("meet and join on B_3") {
  Poset b3 = Poset::boolean_lattice(3);
  auto m = b3.meet(b3.require_index("{1,2}"), b3.require_index("{2,3}"));
  REQUIRE(m.has_value());
  CHECK(b3.label(*m) == "{2}");
  auto j = b3.join(b3.require_index("{1}"), b3.require_index("{2}"));
  REQUIRE(j.has_value());
  CHECK(b3.label(*j) == "{1,2}");
}

TEST_CASE("join absent in a 2-antichain with bottom adjoined") {
  Poset p = Poset::from_covers({"0", "a", "b"}, {{"0", "a"}, {"0", "b"}});
  CHECK(!p.join(p.require_index("a"), p.require_index("b")).has_value());
  CHECK(p.is_meet_semilattice());
  CHECK(!p.is_lattice());
}

TEST_CASE("semilattice but not lattice: two disjoint edges") {
  auto k = SimplicialComplex::from_facets({{"a", "b"}, {"c", "d"}});
  Poset fp = face_poset(k);
  CHECK(fp.is_meet_semilattice());
  CHECK(!fp.is_lattice());
}

TEST_CASE("meet/join agree with the definitional reference") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    Poset p = random_poset(rng, 9);
    auto fast = meet_join_tables(p);
    auto slow = meet_join_tables_serial(p);
    CHECK(fast.meet == slow.meet);
    CHECK(fast.join == slow.join);
  }
}

TEST_CASE("meet/join algebra where defined") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    Poset p = trial == 0 ? Poset::boolean_lattice(3) : random_poset(rng, 8);
    for (int a = 0; a < p.size(); ++a)
      for (int b = 0; b < p.size(); ++b) {
        auto mab = p.meet(a, b), mba = p.meet(b, a);
        CHECK(mab == mba);
        CHECK(p.meet(a, a) == a);
        if (mab) {
          CHECK(p.leq(*mab, a));
          CHECK(p.leq(*mab, b));
        }
        for (int c = 0; c < p.size(); ++c) {
          std::optional<int> m1 =
              mab ? p.meet(*mab, c) : std::optional<int>{};
          auto bc = p.meet(b, c);
          std::optional<int> m2 = bc ? p.meet(a, *bc) : std::optional<int>{};
          if (m1 && m2) CHECK(*m1 == *m2);
        }
      }
  }
}

TEST_CASE("interval") {
  Poset b3 = Poset::boolean_lattice(3);
  Poset i = interval(b3, "{}", "{1,2}");
  CHECK(i.size() == 4);
  CHECK(poset_isomorphism(i, Poset::boolean_lattice(2)).has_value());

  CHECK(interval(b3, "{1}", "{1}").size() == 1);
  Poset c = chain3();
  CHECK(interval(c, "a", "c").size() == 3);
  CHECK_THROWS_WITH_AS(interval(b3, "{1}", "{2}"),
                       doctest::Contains("NotComparable"), Error);
}

TEST_CASE("interval order matches the host order") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    Poset p = random_poset(rng, 8);
    for (int x = 0; x < p.size(); ++x)
      for (int z = 0; z < p.size(); ++z) {
        if (!p.leq(x, z)) continue;
        Poset iv = interval(p, p.label(x), p.label(z));
        for (int a = 0; a < iv.size(); ++a)
          for (int b = 0; b < iv.size(); ++b) {
            int pa = p.require_index(iv.label(a));
            int pb = p.require_index(iv.label(b));
            CHECK(iv.leq(a, b) == p.leq(pa, pb));
          }
      }
  }
}

TEST_CASE("proper part") {
  Poset pp = proper_part(Poset::boolean_lattice(3));
  CHECK(pp.size() == 6);
  CHECK(pp.minimal_elements().size() == 3);
  CHECK(pp.maximal_elements().size() == 3);

  Poset two = Poset::from_covers({"a", "b"}, {{"a", "b"}});
  CHECK(proper_part(two).size() == 0);

  Poset b2p = proper_part(Poset::boolean_lattice(2));
  CHECK(b2p.size() == 2);
  CHECK(b2p.cover_pairs().empty());

  CHECK_THROWS_WITH_AS(proper_part(Poset::from_covers({"a", "b"}, {})),
                       doctest::Contains("NotBounded"), Error);
}

TEST_CASE("proper ideal enumeration matches brute force") {
  Poset b2 = Poset::boolean_lattice(2);
  auto ideals = enumerate_proper_ideals(b2);
  REQUIRE(ideals.size() == 4);
  std::vector<std::vector<std::string>> got;
  for (auto& i : ideals) {
    auto members = ideal_member_labels(b2, i);
    std::sort(members.begin(), members.end());
    got.push_back(members);
  }
  std::vector<std::vector<std::string>> expected = {
      {"{}"}, {"{1}", "{}"}, {"{2}", "{}"}, {"{1}", "{2}", "{}"}};
  for (auto& e : expected) std::sort(e.begin(), e.end());
  std::sort(got.begin(), got.end());
  std::sort(expected.begin(), expected.end());
  CHECK(got == expected);

  Poset two = Poset::from_covers({"a", "b"}, {{"a", "b"}});
  CHECK(enumerate_proper_ideals(two).size() == 1);

  Poset b3 = Poset::boolean_lattice(3);
  auto fast3 = enumerate_proper_ideals(b3);
  auto slow3 = oracles::brute_force_proper_ideals(b3);
  CHECK(fast3.size() == slow3.size());
  CHECK(fast3 == slow3);
  CHECK(fast3.size() == 18);

  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 8; ++trial) {
    Poset p = random_poset(rng, 10);
    if (!p.is_bounded()) continue;
    CHECK(enumerate_proper_ideals(p) == oracles::brute_force_proper_ideals(p));
  }
}

TEST_CASE("ideal predicates") {
  Poset b3 = Poset::boolean_lattice(3);
  Bitset down = ideal_downward_closure(b3, {"{1,2}"});
  CHECK(down.count() == 4);
  CHECK(is_proper_ideal(b3, down));
  Bitset notclosed(b3.size());
  notclosed.set(b3.require_index("{1,2}"));
  CHECK(!is_ideal(b3, notclosed));
}

TEST_CASE("order complex") {
  Poset anti = Poset::from_covers({"a", "b"}, {});
  auto oc = order_complex(anti);
  CHECK(oc.n_vertices() == 2);
  CHECK(oc.n_faces() == 3);  // empty face and two vertices

  auto hex = order_complex(proper_part(Poset::boolean_lattice(3)));
  auto f = f_vector(hex);
  CHECK(f.counts == std::vector<long long>{1, 6, 6});

  auto simplex = order_complex(chain3());
  CHECK(simplex.n_faces() == 8);  // all subsets of a 3-chain

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    Poset p = random_poset(rng, 9);
    auto k = order_complex(p);
    auto chains = oracles::brute_force_chains(p);
    CHECK(k.n_faces() == chains.size());
    // maximal faces are exactly the maximal chains
    for (int fi : k.facet_indices()) {
      auto labels = k.face_labels(k.faces()[fi]);
      Bitset mask(p.size());
      for (auto& l : labels) mask.set(p.require_index(l));
      bool extendable = false;
      for (int v = 0; v < p.size() && !extendable; ++v) {
        if (mask.test(v)) continue;
        bool chain = true;
        mask.for_each_set([&](std::size_t u) {
          if (!p.comparable(static_cast<int>(u), v)) chain = false;
        });
        if (chain) extendable = true;
      }
      CHECK(!extendable);
    }
  }
}

TEST_CASE("chain length") {
  Poset b3 = Poset::boolean_lattice(3);
  CHECK(b3.chain_length(b3.require_index("{}"), b3.require_index("{1,2,3}")) == 3);
  CHECK(b3.chain_length(b3.require_index("{1}"), b3.require_index("{1}")) == 0);
  Poset b4 = Poset::boolean_lattice(4);
  CHECK(b4.chain_length(b4.require_index("{1}"), b4.require_index("{1,2,3}")) == 2);
  CHECK_THROWS_AS(b3.chain_length(b3.require_index("{1}"), b3.require_index("{2}")),
                  Error);
}

TEST_CASE("poset isomorphism") {
  Poset b2 = Poset::boolean_lattice(2);
  CHECK(poset_isomorphism(b2, diamond()).has_value());

  Poset chain4 = Poset::from_covers({"a", "b", "c", "d"},
                                    {{"a", "b"}, {"b", "c"}, {"c", "d"}});
  CHECK(!poset_isomorphism(b2, chain4).has_value());

  // a found isomorphism preserves and reflects the order
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    Poset p = random_poset(rng, 9);
    // relabel
    std::vector<std::string> new_labels;
    for (int i = 0; i < p.size(); ++i)
      new_labels.push_back("w" + std::to_string((i * 7 + 3) % p.size()));
    std::vector<std::pair<std::string, std::string>> covers;
    for (auto& [a, b] : p.cover_pairs())
      covers.emplace_back(new_labels[a], new_labels[b]);
    Poset q = Poset::from_covers(new_labels, covers);
    auto iso = poset_isomorphism(p, q);
    REQUIRE(iso.has_value());
    for (auto& [pa, qa] : *iso)
      for (auto& [pb, qb] : *iso)
        CHECK(p.leq(p.require_index(pa), p.require_index(pb)) ==
              q.leq(q.require_index(qa), q.require_index(qb)));
  }
}

TEST_CASE("transitivity of the derived order, exhaustively small") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 10; ++trial) {
    Poset p = random_poset(rng, 7);
    for (int x = 0; x < p.size(); ++x)
      for (int y = 0; y < p.size(); ++y)
        for (int z = 0; z < p.size(); ++z)
          if (p.leq(x, y) && p.leq(y, z)) CHECK(p.leq(x, z));
  }
}
