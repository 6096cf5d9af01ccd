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
//
//  Benchmark comparing the OpenMP kernels against their serial
//  references: transitive closure, meet/join tables, Smith normal form,
//  and the Bier sphere sweep.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "bierlab/bier.hpp"
#include "bierlab/complex.hpp"
#include "bierlab/homology.hpp"
#include "bierlab/poset.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace bierlab;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

template <typename Fn>
double time_best_of(int reps, Fn fn) {
  double best = 1e30;
  for (int r = 0; r < reps; ++r) {
    auto t0 = Clock::now();
    fn();
    best = std::min(best, seconds_since(t0));
  }
  return best;
}

void row(const char* name, double reference, double kernel) {
  std::printf("%-28s %10.4fs %10.4fs %8.2fx\n", name, reference, kernel,
              reference / kernel);
}

// layered random DAG
std::vector<std::vector<int>> random_dag(int n, int avg_degree,
                                         std::mt19937_64& rng) {
  std::vector<std::vector<int>> succ(n);
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int e = 0; e < n * avg_degree; ++e) {
    int a = pick(rng), b = pick(rng);
    if (a == b) continue;
    succ[std::min(a, b)].push_back(std::max(a, b));
  }
  return succ;
}

// real workload: boundary maps of iterated barycentric subdivisions of
// the 2-sphere
SimplicialComplex barycentric(const SimplicialComplex& k) {
  return order_complex(proper_part(face_lattice(k)));
}

SimplicialComplex subdivided_sphere(int rounds) {
  SimplicialComplex k = SimplicialComplex::from_facets(
      {{"1", "2", "3"}, {"1", "2", "4"}, {"1", "3", "4"}, {"2", "3", "4"}});
  for (int i = 0; i < rounds; ++i) k = barycentric(k);
  return k;
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP not enabled; comparing identical serial paths\n");
#endif
  std::printf("%-28s %11s %11s %9s\n", "kernel", "reference", "parallel",
              "ratio");

  std::mt19937_64 rng(12345);

  {
    auto succ = random_dag(1500, 8, rng);
    std::vector<Bitset> a, b;
    double ts = time_best_of(3, [&] { a = transitive_closure_serial(1500, succ); });
    double tp = time_best_of(3, [&] { b = transitive_closure(1500, succ); });
    if (a != b) std::printf("closure outputs DIFFER\n");
    row("transitive_closure", ts, tp);
  }

  {
    Poset bn = Poset::boolean_lattice(9);
    MeetJoinTables a, b;
    double ts = time_best_of(3, [&] { a = meet_join_tables_serial(bn); });
    double tp = time_best_of(3, [&] { b = meet_join_tables(bn); });
    if (a.meet != b.meet || a.join != b.join)
      std::printf("meet/join tables DIFFER\n");
    row("meet_join_tables (B_9)", ts, tp);
  }

  {
    SimplicialComplex sphere = subdivided_sphere(2);
    IntMatrix m = boundary_matrix(sphere, 2);
    std::printf("boundary matrix of a subdivided S^2: %dx%d\n", m.rows, m.cols);
    SnfResult a, b;
    double ts = time_best_of(3, [&] { a = smith_normal_form_serial(m); });
    double tp = time_best_of(3, [&] { b = smith_normal_form(m); });
    if (a.invariant_factors != b.invariant_factors)
      std::printf("SNF outputs DIFFER\n");
    row("smith_normal_form (∂_2)", ts, tp);

    int rb = 0;
    double tr = time_best_of(3, [&] { rb = rational_rank(m); });
    if (a.rank != rb) std::printf("rank outputs DIFFER\n");
    row("rank: SNF vs Bareiss", ts, tr);
  }

  {
    Poset b4 = Poset::boolean_lattice(4);
    auto ideals = enumerate_proper_ideals(b4);
    auto sweep = [&](bool parallel) {
      std::vector<int> verts(ideals.size(), 0);
#pragma omp parallel for schedule(dynamic) if (parallel)
      for (std::size_t i = 0; i < ideals.size(); ++i) {
        BierPoset bp = bier_poset(b4, ideals[i]);
        SimplicialComplex sphere = order_complex(proper_part(bp.poset));
        HomologyProfile h = reduced_homology(sphere);
        verts[i] = sphere.n_vertices() + static_cast<int>(h.betti.size());
      }
      return verts;
    };
    std::vector<int> a, b;
    double ts = time_best_of(2, [&] { a = sweep(false); });
    double tp = time_best_of(2, [&] { b = sweep(true); });
    if (a != b) std::printf("sweep outputs DIFFER\n");
    row("bier sphere sweep (B_4)", ts, tp);
  }

  return 0;
}
