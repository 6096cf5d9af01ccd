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

#ifndef BIERLAB_POSET_HPP_
#define BIERLAB_POSET_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bierlab/bitset.hpp"
#include "bierlab/error.hpp"

namespace bierlab {

// Finite poset on string-labeled elements.
//
// Elements are indexed by the lexicographic order of their labels; that
// index order is the deterministic tie-break used everywhere. The order
// relation is stored as per-element up/down bitsets computed by one
// transitive-closure pass, so comparisons are O(1) and interval scans
// are word-parallel. Values are immutable once built.
class Poset {
 public:
  // Validated constructor. Cover pairs that are transitively redundant
  // are reduced to the irredundant Hasse diagram rather than rejected;
  // cycles and unknown endpoints are errors.
  static Poset from_covers(
      std::vector<std::string> elements,
      const std::vector<std::pair<std::string, std::string>>& covers);

  // Subsets of {1..n} ordered by inclusion, labeled "{}", "{1}", "{1,2}", ...
  static Poset boolean_lattice(int n);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<int> index_of(const std::string& label) const;
  int require_index(const std::string& label) const;

  // Irredundant cover pairs (lower, upper), sorted.
  const std::vector<std::pair<int, int>>& cover_pairs() const {
    return covers_;
  }
  std::vector<int> upper_covers(int i) const;
  std::vector<int> lower_covers(int i) const;

  bool leq(int a, int b) const { return up_[a].test(b); }
  bool less(int a, int b) const { return a != b && leq(a, b); }
  bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }

  // Reflexive up-set / down-set of an element, as bitsets over indices.
  const Bitset& up_set(int i) const { return up_[i]; }
  const Bitset& down_set(int i) const { return down_[i]; }

  std::vector<int> minimal_elements() const;
  std::vector<int> maximal_elements() const;

  // Unique minimum / maximum where they exist.
  std::optional<int> bottom() const;
  std::optional<int> top() const;
  bool is_bounded() const { return bottom() && top(); }

  std::optional<int> meet(int a, int b) const;
  std::optional<int> join(int a, int b) const;

  bool is_meet_semilattice() const;
  bool is_join_semilattice() const;
  bool is_lattice() const;

  // Induced subposet on the given elements; labels carry over.
  Poset induced(const Bitset& keep) const;

  // Length of a longest chain from a to b (number of covers); requires
  // a <= b.
  int chain_length(int a, int b) const;

  // Longest chain length overall (the poset's length).
  int length() const;

  bool operator==(const Poset& o) const {
    return labels_ == o.labels_ && covers_ == o.covers_;
  }

 private:
  friend Poset poset_from_relation(
      std::vector<std::string> elements,
      const std::vector<std::pair<int, int>>& strict_pairs);

  std::vector<std::string> labels_;          // sorted, unique
  std::vector<std::pair<int, int>> covers_;  // Hasse diagram
  std::vector<Bitset> up_, down_;            // reflexive closure
};

// Builds a poset from an arbitrary strict-order generator relation given
// over already-sorted element labels; reduces to the Hasse diagram.
Poset poset_from_relation(std::vector<std::string> elements,
                          const std::vector<std::pair<int, int>>& strict_pairs);

// --- module-level operations ------------------------------------------

struct BoundedWitness {
  bool bounded = false;
  std::string bottom, top;
};
BoundedWitness is_bounded(const Poset& p);

// Interval [x, y] as an induced subposet; x <= y required.
Poset interval(const Poset& p, const std::string& x, const std::string& y);

// P minus its bounds; requires P bounded with at least 2 elements.
Poset proper_part(const Poset& p);

// All nonempty proper downward-closed subsets, each exactly once, in a
// deterministic order (by size, then by sorted member labels).
std::vector<Bitset> enumerate_proper_ideals(const Poset& p);

bool is_ideal(const Poset& p, const Bitset& members);
bool is_proper_ideal(const Poset& p, const Bitset& members);
Bitset ideal_from_members(const Poset& p,
                          const std::vector<std::string>& members);
Bitset ideal_downward_closure(const Poset& p,
                              const std::vector<std::string>& generators);
std::vector<std::string> ideal_member_labels(const Poset& p,
                                             const Bitset& members);

// Order-preserving bijection with order-preserving inverse, as label
// pairs (p-label, q-label), or nullopt. Deterministic backtracking with
// degree/rank fingerprint pruning; desk scale.
std::optional<std::vector<std::pair<std::string, std::string>>>
poset_isomorphism(const Poset& p, const Poset& q);

// All maximal chains, as increasing index sequences.
std::vector<std::vector<int>> maximal_chains(const Poset& p);

// --- parallel kernels (serial references kept for testing) -------------

// Reflexive transitive closure of a DAG given by adjacency lists.
std::vector<Bitset> transitive_closure(
    int n, const std::vector<std::vector<int>>& succ);
std::vector<Bitset> transitive_closure_serial(
    int n, const std::vector<std::vector<int>>& succ);

// All-pairs meet/join tables; entry -1 where the bound does not exist.
// Row-major n*n.
struct MeetJoinTables {
  std::vector<int> meet, join;
};
MeetJoinTables meet_join_tables(const Poset& p);
MeetJoinTables meet_join_tables_serial(const Poset& p);

}  // namespace bierlab

#endif  // BIERLAB_POSET_HPP_
