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

#include "bierlab/complex.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "bierlab/config.hpp"
#include "bierlab/error.hpp"

namespace bierlab {

namespace {

void sort_canonical(std::vector<Bitset>& faces) {
  std::sort(faces.begin(), faces.end(), Bitset::canonical_less);
}

}  // namespace

std::string face_set_name(std::vector<std::string> labels) {
  std::sort(labels.begin(), labels.end());
  std::string s = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) s += ',';
    s += labels[i];
  }
  s += '}';
  return s;
}

SimplicialComplex SimplicialComplex::from_faces(
    std::vector<std::string> vertices, std::vector<Bitset> faces) {
  // dedupe faces
  sort_canonical(faces);
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());

  if (faces.size() > max_faces())
    fail(ErrorCode::TooLarge, "face count exceeds BIERLAB_MAX_FACES");

  SimplicialComplex k;
  if (faces.empty()) return k;  // void complex

  const std::size_t n = vertices.size();
  std::unordered_set<Bitset, BitsetHash> members(faces.begin(), faces.end());

  Bitset used(n);
  for (auto& f : faces) {
    if (f.universe() != n)
      fail(ErrorCode::ParseError, "face over a different vertex table");
    used |= f;
    // downward closure check: dropping any single vertex must land in K
    f.for_each_set([&](std::size_t v) {
      Bitset sub = f;
      sub.reset(v);
      if (!members.count(sub))
        fail(ErrorCode::ParseError,
             "face family is not downward closed at " + vertices[v]);
    });
  }
  for (std::size_t v = 0; v < n; ++v)
    if (!used.test(v))
      fail(ErrorCode::ParseError, "isolated declared vertex " + vertices[v]);

  if (!faces.front().none())
    fail(ErrorCode::ParseError, "nonempty complex must contain the empty face");

  k.vertices_ = std::move(vertices);
  k.faces_ = std::move(faces);
  for (std::size_t i = 0; i < k.faces_.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < k.faces_.size() && maximal; ++j)
      if (i != j && k.faces_[i].is_subset_of(k.faces_[j]) &&
          k.faces_[i] != k.faces_[j])
        maximal = false;
    if (maximal) k.facets_.push_back(static_cast<int>(i));
  }
  return k;
}

SimplicialComplex SimplicialComplex::from_facets(
    const std::vector<std::vector<std::string>>& facets) {
  if (facets.empty()) return SimplicialComplex{};

  std::vector<std::string> vertices;
  for (auto& f : facets)
    for (auto& v : f) vertices.push_back(v);
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  const std::size_t n = vertices.size();

  auto vindex = [&](const std::string& s) {
    return static_cast<std::size_t>(
        std::lower_bound(vertices.begin(), vertices.end(), s) -
        vertices.begin());
  };

  std::unordered_set<Bitset, BitsetHash> all;
  for (auto& f : facets) {
    std::vector<std::size_t> idx;
    for (auto& v : f) idx.push_back(vindex(v));
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    if (idx.size() > 25)
      fail(ErrorCode::TooLarge, "facet too large for explicit closure");
    const std::size_t subsets = std::size_t{1} << idx.size();
    for (std::size_t m = 0; m < subsets; ++m) {
      Bitset face(n);
      for (std::size_t bit = 0; bit < idx.size(); ++bit)
        if (m & (std::size_t{1} << bit)) face.set(idx[bit]);
      all.insert(std::move(face));
      if (all.size() > max_faces())
        fail(ErrorCode::TooLarge, "face count exceeds BIERLAB_MAX_FACES");
    }
  }
  std::vector<Bitset> faces(all.begin(), all.end());
  return from_faces(std::move(vertices), std::move(faces));
}

int SimplicialComplex::dim() const {
  if (faces_.empty()) return -2;
  std::size_t best = 0;
  for (auto& f : faces_) best = std::max(best, f.count());
  return static_cast<int>(best) - 1;
}

std::optional<int> SimplicialComplex::vertex_index(
    const std::string& label) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), label);
  if (it == vertices_.end() || *it != label) return std::nullopt;
  return static_cast<int>(it - vertices_.begin());
}

std::vector<Bitset> SimplicialComplex::facets() const {
  std::vector<Bitset> out;
  out.reserve(facets_.size());
  for (int i : facets_) out.push_back(faces_[i]);
  return out;
}

bool SimplicialComplex::has_face(const Bitset& mask) const {
  auto it = std::lower_bound(faces_.begin(), faces_.end(), mask,
                             Bitset::canonical_less);
  return it != faces_.end() && *it == mask;
}

std::optional<Bitset> SimplicialComplex::face_from_labels(
    const std::vector<std::string>& labels) const {
  Bitset mask(vertices_.size());
  for (auto& l : labels) {
    auto i = vertex_index(l);
    if (!i) return std::nullopt;
    mask.set(*i);
  }
  if (!has_face(mask)) return std::nullopt;
  return mask;
}

std::vector<std::string> SimplicialComplex::face_labels(
    const Bitset& mask) const {
  std::vector<std::string> out;
  mask.for_each_set([&](std::size_t v) { out.push_back(vertices_[v]); });
  return out;
}

std::string SimplicialComplex::face_name(const Bitset& mask) const {
  return face_set_name(face_labels(mask));
}

// ---------------------------------------------------------------------

SimplicialComplex alexander_dual(const SimplicialComplex& k,
                                 const std::vector<std::string>& ground) {
  std::vector<std::string> g = ground;
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  if (g.size() > 22)
    fail(ErrorCode::TooLarge, "ground set too large for dual sweep");
  for (auto& v : k.vertices())
    if (!std::binary_search(g.begin(), g.end(), v))
      fail(ErrorCode::GroundTooSmall, "vertex " + v + " not in ground");

  const std::size_t n = g.size();
  // position of each ground element among K's vertices, or -1
  std::vector<int> to_k(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    auto idx = k.vertex_index(g[i]);
    if (idx) to_k[i] = *idx;
  }

  std::vector<std::vector<std::string>> dual_faces;
  const std::size_t total = std::size_t{1} << n;
  for (std::size_t m = 0; m < total; ++m) {
    // is the ground subset m a face of K?
    bool face = true;
    Bitset mask(static_cast<std::size_t>(k.n_vertices()));
    for (std::size_t i = 0; i < n && face; ++i)
      if (m & (std::size_t{1} << i)) {
        if (to_k[i] < 0)
          face = false;  // uses a vertex K does not have
        else
          mask.set(to_k[i]);
      }
    if (face) face = k.has_face(mask);
    if (face) continue;
    std::vector<std::string> complement;
    for (std::size_t i = 0; i < n; ++i)
      if (!(m & (std::size_t{1} << i))) complement.push_back(g[i]);
    dual_faces.push_back(std::move(complement));
  }

  if (dual_faces.empty()) return SimplicialComplex{};

  // assemble from explicit faces (the dual is downward closed; from_faces
  // re-validates that)
  std::vector<std::string> verts;
  for (auto& f : dual_faces)
    for (auto& v : f) verts.push_back(v);
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  auto vindex = [&](const std::string& s) {
    return static_cast<std::size_t>(
        std::lower_bound(verts.begin(), verts.end(), s) - verts.begin());
  };
  std::vector<Bitset> masks;
  masks.reserve(dual_faces.size());
  for (auto& f : dual_faces) {
    Bitset b(verts.size());
    for (auto& v : f) b.set(vindex(v));
    masks.push_back(std::move(b));
  }
  return SimplicialComplex::from_faces(std::move(verts), std::move(masks));
}

SimplicialComplex deleted_join_bier(const SimplicialComplex& k, int n) {
  if (k.is_void()) fail(ErrorCode::NotProper, "K is the void complex");
  if (n < 1) fail(ErrorCode::GroundTooSmall, "need n >= 1");
  std::vector<std::string> ground;
  for (int i = 1; i <= n; ++i) ground.push_back(std::to_string(i));
  {
    std::vector<std::string> g = ground;
    std::sort(g.begin(), g.end());
    for (auto& v : k.vertices())
      if (!std::binary_search(g.begin(), g.end(), v))
        fail(ErrorCode::GroundTooSmall, "vertex " + v + " outside {1.." +
                                            std::to_string(n) + "}");
  }
  if (k.n_faces() == (std::size_t{1} << n))
    fail(ErrorCode::NotProper, "K is the full simplex on the ground set");

  SimplicialComplex dual = alexander_dual(k, ground);

  // vertices i and i' on the two ground copies
  std::vector<std::vector<std::string>> faces;
  auto ground_mask = [&](const SimplicialComplex& c, const Bitset& f) {
    std::uint32_t m = 0;
    f.for_each_set([&](std::size_t v) {
      int gi = std::stoi(c.vertex_label(v));
      m |= (std::uint32_t{1} << (gi - 1));
    });
    return m;
  };
  for (auto& sigma : k.faces()) {
    std::uint32_t ms = ground_mask(k, sigma);
    for (auto& tau : dual.faces()) {
      std::uint32_t mt = ground_mask(dual, tau);
      if (ms & mt) continue;
      std::vector<std::string> f;
      sigma.for_each_set(
          [&](std::size_t v) { f.push_back(k.vertex_label(v)); });
      tau.for_each_set(
          [&](std::size_t v) { f.push_back(dual.vertex_label(v) + "'"); });
      faces.push_back(std::move(f));
    }
  }
  // the face list is closed under subsets, so treating it as a facet list
  // reproduces exactly the same family
  return SimplicialComplex::from_facets(faces);
}

std::string canonical_subdivision_label(
    const std::vector<std::string>& center) {
  std::vector<std::string> s = center;
  std::sort(s.begin(), s.end());
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += '|';
    out += s[i];
  }
  out += ']';
  return out;
}

SimplicialComplex stellar_subdivision(const SimplicialComplex& k,
                                      const std::vector<std::string>& center,
                                      const std::string& new_vertex) {
  if (center.empty()) fail(ErrorCode::EmptyCenter, "");
  auto f = k.face_from_labels(center);
  if (!f) fail(ErrorCode::FaceNotPresent, face_set_name(center));
  if (k.vertex_index(new_vertex))
    fail(ErrorCode::VertexClash, new_vertex);

  std::vector<std::vector<std::string>> faces;
  for (auto& g : k.faces()) {
    if (f->is_subset_of(g)) continue;  // G ⊇ F dropped
    faces.push_back(k.face_labels(g));
    Bitset with_center = g;
    with_center |= *f;
    if (k.has_face(with_center)) {
      auto cone = k.face_labels(g);
      cone.push_back(new_vertex);
      faces.push_back(std::move(cone));
    }
  }
  return SimplicialComplex::from_facets(faces);
}

Poset face_poset(const SimplicialComplex& k) {
  if (k.is_void()) fail(ErrorCode::EmptyComplex, "");
  std::vector<std::string> labels;
  labels.reserve(k.n_faces());
  for (auto& f : k.faces()) labels.push_back(k.face_name(f));
  std::sort(labels.begin(), labels.end());

  auto index = [&](const std::string& s) {
    return static_cast<int>(
        std::lower_bound(labels.begin(), labels.end(), s) - labels.begin());
  };

  std::vector<std::pair<int, int>> pairs;
  const auto& faces = k.faces();
  for (std::size_t i = 0; i < faces.size(); ++i)
    for (std::size_t j = 0; j < faces.size(); ++j)
      if (i != j && faces[i].is_subset_of(faces[j]) &&
          faces[i].count() + 1 == faces[j].count())
        pairs.emplace_back(index(k.face_name(faces[i])),
                           index(k.face_name(faces[j])));
  return poset_from_relation(std::move(labels), pairs);
}

Poset face_lattice(const SimplicialComplex& k) {
  if (k.is_void()) fail(ErrorCode::EmptyComplex, "");
  std::vector<std::string> labels;
  labels.reserve(k.n_faces() + 1);
  for (auto& f : k.faces()) labels.push_back(k.face_name(f));
  labels.push_back("TOP");
  std::sort(labels.begin(), labels.end());

  auto index = [&](const std::string& s) {
    return static_cast<int>(
        std::lower_bound(labels.begin(), labels.end(), s) - labels.begin());
  };

  std::vector<std::pair<int, int>> pairs;
  const auto& faces = k.faces();
  for (std::size_t i = 0; i < faces.size(); ++i)
    for (std::size_t j = 0; j < faces.size(); ++j)
      if (i != j && faces[i].is_subset_of(faces[j]) &&
          faces[i].count() + 1 == faces[j].count())
        pairs.emplace_back(index(k.face_name(faces[i])),
                           index(k.face_name(faces[j])));
  int top = index("TOP");
  for (int fi : k.facet_indices())
    pairs.emplace_back(index(k.face_name(k.faces()[fi])), top);
  return poset_from_relation(std::move(labels), pairs);
}

FVector f_vector(const SimplicialComplex& k) {
  FVector out;
  if (k.is_void()) return out;
  out.counts.assign(static_cast<std::size_t>(k.dim()) + 2, 0);
  for (auto& f : k.faces()) out.counts[f.count()]++;
  return out;
}

std::vector<long long> h_vector(const SimplicialComplex& k) {
  FVector f = f_vector(k);
  if (f.counts.empty()) return {};
  const int d = static_cast<int>(f.counts.size()) - 1;  // dim + 1
  std::vector<long long> h(d + 1, 0);
  // h_k = sum_i (-1)^(k-i) C(d-i, k-i) f_{i-1}
  std::vector<std::vector<long long>> binom(d + 1, std::vector<long long>(d + 1, 0));
  for (int i = 0; i <= d; ++i) {
    binom[i][0] = 1;
    for (int j = 1; j <= i; ++j)
      binom[i][j] = binom[i - 1][j - 1] + (j <= i - 1 ? binom[i - 1][j] : 0);
  }
  for (int kk = 0; kk <= d; ++kk)
    for (int i = 0; i <= kk; ++i) {
      long long term = binom[d - i][kk - i] * f.counts[i];
      h[kk] += ((kk - i) % 2 == 0) ? term : -term;
    }
  return h;
}

long long euler_characteristic(const SimplicialComplex& k) {
  long long chi = 0;
  for (auto& f : k.faces()) {
    if (f.none()) continue;
    chi += (f.count() % 2 == 1) ? 1 : -1;
  }
  return chi;
}

PseudomanifoldReport is_pseudomanifold(const SimplicialComplex& k) {
  PseudomanifoldReport r;
  if (k.is_void()) {
    r.reason = "void";
    return r;
  }
  auto facets = k.facets();
  const int d = k.dim();
  for (auto& f : facets)
    if (static_cast<int>(f.count()) != d + 1) {
      r.reason = "not_pure";
      return r;
    }
  if (d < 0) {
    r.ok = true;  // {∅}: no ridges, trivially connected
    return r;
  }

  // ridges = codimension-1 subfaces of facets
  std::vector<Bitset> ridges;
  std::vector<std::vector<int>> ridge_facets;
  auto find_ridge = [&](const Bitset& m) -> int {
    for (std::size_t i = 0; i < ridges.size(); ++i)
      if (ridges[i] == m) return static_cast<int>(i);
    ridges.push_back(m);
    ridge_facets.emplace_back();
    return static_cast<int>(ridges.size()) - 1;
  };
  for (std::size_t fi = 0; fi < facets.size(); ++fi) {
    facets[fi].for_each_set([&](std::size_t v) {
      Bitset ridge = facets[fi];
      ridge.reset(v);
      ridge_facets[find_ridge(ridge)].push_back(static_cast<int>(fi));
    });
  }
  for (auto& fs : ridge_facets)
    if (fs.size() != 2) {
      r.reason = "ridge_degree_" + std::to_string(fs.size());
      return r;
    }

  // facet adjacency connectivity
  std::vector<int> comp(facets.size(), -1);
  std::vector<std::vector<int>> adj(facets.size());
  for (auto& fs : ridge_facets) {
    adj[fs[0]].push_back(fs[1]);
    adj[fs[1]].push_back(fs[0]);
  }
  std::vector<int> stack{0};
  comp[0] = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (comp[w] < 0) {
        comp[w] = 0;
        stack.push_back(w);
      }
  }
  for (int c : comp)
    if (c < 0) {
      r.reason = "facet_graph_disconnected";
      return r;
    }
  r.ok = true;
  return r;
}

std::optional<std::vector<std::pair<std::string, std::string>>>
complex_isomorphism(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.n_vertices() != b.n_vertices()) return std::nullopt;
  if (a.n_faces() != b.n_faces()) return std::nullopt;
  if (f_vector(a) != f_vector(b)) return std::nullopt;
  const int n = a.n_vertices();
  if (n == 0) {
    // both void or both {∅}
    if (a.is_void() != b.is_void()) return std::nullopt;
    return std::vector<std::pair<std::string, std::string>>{};
  }

  // vertex signature: how many faces of each size contain it
  auto signature = [](const SimplicialComplex& k, int v) {
    std::vector<int> sig(static_cast<std::size_t>(k.dim()) + 2, 0);
    for (auto& f : k.faces())
      if (f.test(v)) sig[f.count()]++;
    return sig;
  };
  std::vector<std::vector<int>> sa(n), sb(n);
  for (int v = 0; v < n; ++v) {
    sa[v] = signature(a, v);
    sb[v] = signature(b, v);
  }
  {
    auto ca = sa, cb = sb;
    std::sort(ca.begin(), ca.end());
    std::sort(cb.begin(), cb.end());
    if (ca != cb) return std::nullopt;
  }

  std::vector<std::vector<int>> cands(n);
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w)
      if (sa[v] == sb[w]) cands[v].push_back(w);
  std::vector<int> vorder(n);
  std::iota(vorder.begin(), vorder.end(), 0);
  std::sort(vorder.begin(), vorder.end(), [&](int x, int y) {
    if (cands[x].size() != cands[y].size())
      return cands[x].size() < cands[y].size();
    return x < y;
  });

  std::vector<int> map(n, -1), used(n, 0);
  // faces fully inside the mapped prefix must map to faces
  auto consistent = [&](int depth) {
    Bitset dom(n);
    for (int i = 0; i < depth; ++i) dom.set(vorder[i]);
    for (auto& f : a.faces()) {
      if (!f.is_subset_of(dom)) continue;
      Bitset img(n);
      f.for_each_set([&](std::size_t v) { img.set(map[v]); });
      if (!b.has_face(img)) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, int pos) -> bool {
    if (pos == n) return true;
    int v = vorder[pos];
    for (int w : cands[v]) {
      if (used[w]) continue;
      map[v] = w;
      used[w] = 1;
      if (consistent(pos + 1) && self(self, pos + 1)) return true;
      used[w] = 0;
      map[v] = -1;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;

  std::vector<std::pair<std::string, std::string>> out;
  for (int v = 0; v < n; ++v)
    out.emplace_back(a.vertex_label(v), b.vertex_label(map[v]));
  return out;
}

SimplicialComplex order_complex(const Poset& p) {
  if (p.size() == 0) {
    // only the empty chain
    return SimplicialComplex::from_facets({{}});
  }
  std::vector<std::vector<std::string>> facets;
  for (auto& chain : maximal_chains(p)) {
    std::vector<std::string> f;
    f.reserve(chain.size());
    for (int v : chain) f.push_back(p.label(v));
    facets.push_back(std::move(f));
  }
  return SimplicialComplex::from_facets(facets);
}

}  // namespace bierlab
