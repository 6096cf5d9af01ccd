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

#include "bierlab/homology.hpp"

#include <algorithm>
#include <map>

#include "bierlab/config.hpp"
#include "bierlab/error.hpp"

namespace bierlab {

namespace {

// faces grouped by dimension, keeping the canonical in-complex order
std::vector<std::vector<Bitset>> faces_by_dim(const SimplicialComplex& k) {
  std::vector<std::vector<Bitset>> out(static_cast<std::size_t>(k.dim() + 2));
  for (auto& f : k.faces()) out[f.count()].push_back(f);
  return out;
}

}  // namespace

IntMatrix boundary_matrix(const SimplicialComplex& k, int d) {
  // C_d has basis the faces with d+1 vertices; C_{-1} is spanned by ∅
  auto by_dim = faces_by_dim(k);
  auto layer = [&](int dd) -> const std::vector<Bitset>* {
    int idx = dd + 1;
    if (idx < 0 || idx >= static_cast<int>(by_dim.size())) return nullptr;
    return &by_dim[idx];
  };
  const auto* cd = layer(d);
  const auto* cd1 = layer(d - 1);
  IntMatrix m;
  m.rows = cd1 ? static_cast<int>(cd1->size()) : 0;
  m.cols = cd ? static_cast<int>(cd->size()) : 0;
  m.a.assign(static_cast<std::size_t>(m.rows) * m.cols, 0);
  if (!cd || !cd1) return m;

  std::map<std::vector<int>, int> row_of;
  for (int i = 0; i < m.rows; ++i) row_of[(*cd1)[i].to_indices()] = i;

  for (int j = 0; j < m.cols; ++j) {
    auto verts = (*cd)[j].to_indices();
    for (std::size_t k2 = 0; k2 < verts.size(); ++k2) {
      std::vector<int> sub;
      sub.reserve(verts.size() - 1);
      for (std::size_t t = 0; t < verts.size(); ++t)
        if (t != k2) sub.push_back(verts[t]);
      int i = row_of.at(sub);
      m.at(i, j) = (k2 % 2 == 0) ? 1 : -1;
    }
  }
  return m;
}

HomologyProfile reduced_homology(const SimplicialComplex& k) {
  HomologyProfile h;
  if (k.is_void()) return h;
  if (k.n_faces() > max_faces())
    fail(ErrorCode::TooLarge, "homology instance exceeds BIERLAB_MAX_FACES");

  h.dim = k.dim();
  auto by_dim = faces_by_dim(k);

  // rank and torsion of each boundary map
  std::vector<int> rank(static_cast<std::size_t>(h.dim) + 3, 0);
  std::vector<std::vector<long long>> tors(static_cast<std::size_t>(h.dim) + 3);
  for (int d = 0; d <= h.dim + 1; ++d) {
    IntMatrix bd = boundary_matrix(k, d);
    if (bd.rows == 0 || bd.cols == 0) continue;
    SnfResult s = smith_normal_form(std::move(bd));
    rank[d + 1] = s.rank;  // shifted: rank[d+1] = rank ∂_d
    for (long long f : s.invariant_factors)
      if (f > 1) tors[d + 1].push_back(f);
  }

  auto chain_dim = [&](int d) -> long long {
    int idx = d + 1;
    if (idx < 0 || idx >= static_cast<int>(by_dim.size())) return 0;
    return static_cast<long long>(by_dim[idx].size());
  };
  auto rank_of = [&](int d) -> long long {  // rank ∂_d
    int idx = d + 1;
    if (idx < 0 || idx >= static_cast<int>(rank.size())) return 0;
    return rank[idx];
  };

  h.betti_minus1 = chain_dim(-1) - rank_of(0);
  h.betti.assign(static_cast<std::size_t>(h.dim) + 1, 0);
  h.torsion.assign(static_cast<std::size_t>(h.dim) + 1, {});
  for (int d = 0; d <= h.dim; ++d) {
    h.betti[d] = chain_dim(d) - rank_of(d) - rank_of(d + 1);
    int idx = d + 2;  // torsion of H_d comes from ∂_{d+1}
    if (idx < static_cast<int>(tors.size())) h.torsion[d] = tors[idx];
  }
  return h;
}

bool HomologyProfile::trivial_above(int d) const {
  for (int i = std::max(d + 1, 0); i < static_cast<int>(betti.size()); ++i)
    if (betti[i] != 0 || !torsion[i].empty()) return false;
  return true;
}

bool HomologyProfile::is_sphere(int m) const {
  if (dim == -2) return false;
  if (betti_minus1 != (m == -1 ? 1 : 0)) return false;
  for (int d = 0; d < static_cast<int>(betti.size()); ++d) {
    if (betti[d] != (d == m ? 1 : 0)) return false;
    if (!torsion[d].empty()) return false;
  }
  if (m >= 0 && m >= static_cast<int>(betti.size())) return false;
  return true;
}

std::string homology_to_string(const HomologyProfile& h) {
  if (h.dim == -2) return "void";
  std::string s = "H~[-1]=" + std::to_string(h.betti_minus1);
  for (std::size_t d = 0; d < h.betti.size(); ++d) {
    s += " H~[" + std::to_string(d) + "]=Z^" + std::to_string(h.betti[d]);
    if (!h.torsion[d].empty()) {
      s += "+(";
      for (std::size_t i = 0; i < h.torsion[d].size(); ++i) {
        if (i) s += ",";
        s += "Z/" + std::to_string(h.torsion[d][i]);
      }
      s += ")";
    }
  }
  return s;
}

}  // namespace bierlab
