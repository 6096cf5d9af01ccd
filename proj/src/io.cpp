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

#include "bierlab/io.hpp"

#include <fstream>

#include "bierlab/config.hpp"
#include "bierlab/error.hpp"

namespace bierlab {

namespace {

std::string label_from_json(const Json& e) {
  if (e.is_string()) return e.get<std::string>();
  if (e.is_object() && e.contains("lo") && e.contains("hi"))
    return "[" + e["lo"].get<std::string>() + "|" + e["hi"].get<std::string>() +
           "]";
  fail(ErrorCode::ParseError, "element label must be a string or {lo,hi}");
}

}  // namespace

Json poset_to_json(const Poset& p) {
  Json j;
  j["elements"] = Json::array();
  for (auto& l : p.labels()) j["elements"].push_back(l);
  j["covers"] = Json::array();
  for (auto& [a, b] : p.cover_pairs())
    j["covers"].push_back(Json::array({p.label(a), p.label(b)}));
  return j;
}

Json bier_poset_to_json(const BierPoset& b) {
  auto structured = [&](int i) -> Json {
    const BierElement& e = b.elements[i];
    if (e.is_top) return "TOP";
    Json o;
    o["lo"] = e.lo;
    o["hi"] = e.hi;
    return o;
  };
  Json j;
  j["elements"] = Json::array();
  for (int i = 0; i < b.poset.size(); ++i) j["elements"].push_back(structured(i));
  j["covers"] = Json::array();
  for (auto& [x, y] : b.poset.cover_pairs())
    j["covers"].push_back(Json::array({structured(x), structured(y)}));
  return j;
}

Poset poset_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("elements") || !j.contains("covers"))
    fail(ErrorCode::ParseError, "poset file needs elements and covers");
  std::vector<std::string> elements;
  for (auto& e : j["elements"]) elements.push_back(label_from_json(e));
  std::vector<std::pair<std::string, std::string>> covers;
  for (auto& c : j["covers"]) {
    if (!c.is_array() || c.size() != 2)
      fail(ErrorCode::ParseError, "cover entries are pairs");
    covers.emplace_back(label_from_json(c[0]), label_from_json(c[1]));
  }
  return Poset::from_covers(std::move(elements), covers);
}

Json ideal_to_json(const Poset& p, const Bitset& members) {
  Json j;
  j["members"] = Json::array();
  for (auto& l : ideal_member_labels(p, members)) j["members"].push_back(l);
  return j;
}

std::vector<std::string> ideal_members_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("members"))
    fail(ErrorCode::ParseError, "ideal file needs members");
  std::vector<std::string> out;
  for (auto& m : j["members"]) out.push_back(label_from_json(m));
  return out;
}

Json complex_to_json(const SimplicialComplex& k) {
  Json j;
  j["vertices"] = Json::array();
  for (auto& v : k.vertices()) j["vertices"].push_back(v);
  j["facets"] = Json::array();
  for (int fi : k.facet_indices()) {
    Json facet = Json::array();
    for (auto& v : k.face_labels(k.faces()[fi])) facet.push_back(v);
    j["facets"].push_back(facet);
  }
  return j;
}

SimplicialComplex complex_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("facets"))
    fail(ErrorCode::ParseError, "complex file needs vertices and facets");
  std::vector<std::vector<std::string>> facets;
  for (auto& f : j["facets"]) {
    std::vector<std::string> labels;
    for (auto& v : f) labels.push_back(v.get<std::string>());
    facets.push_back(std::move(labels));
  }
  SimplicialComplex k = SimplicialComplex::from_facets(facets);
  // declared vertex list must match the support
  std::vector<std::string> declared;
  for (auto& v : j["vertices"]) declared.push_back(v.get<std::string>());
  std::sort(declared.begin(), declared.end());
  if (declared != k.vertices())
    fail(ErrorCode::ParseError,
         "declared vertices must equal the union of the facets");
  return k;
}

Json homology_to_json(const HomologyProfile& h) {
  Json j;
  j["dim"] = h.dim;
  j["betti"] = h.betti;
  Json tors = Json::array();
  for (auto& t : h.torsion) tors.push_back(t);
  j["torsion"] = tors;
  j["betti_minus1"] = h.betti_minus1;
  return j;
}

Json chain_to_json(const ChainRecord& rec, bool emit_steps) {
  Json j;
  j["steps"] = Json::array();
  for (auto& s : rec.steps) {
    Json step;
    step["edge"] = Json::array({s.x, s.y});
    step["length"] = s.length;
    step["new_vertex"] = s.new_vertex;
    j["steps"].push_back(step);
  }
  j["final"] = complex_to_json(rec.final);
  if (emit_steps) {
    j["initial"] = complex_to_json(rec.initial);
    Json inter = Json::array();
    for (auto& k : rec.intermediates) inter.push_back(complex_to_json(k));
    j["intermediate"] = inter;
  }
  return j;
}

Json ordering_to_json(const FacetOrdering& o, const std::string& criterion) {
  Json j;
  j["order"] = Json::array();
  for (auto& f : o.facets) j["order"].push_back(f);
  j["criterion"] = criterion;
  Json mf = Json::object(), a = Json::object();
  for (auto& [name, pair] : o.certificate) {
    mf[name] = pair.first;
    a[name] = pair.second;
  }
  j["certificate"] = Json::object();
  j["certificate"]["mf"] = mf;
  j["certificate"]["A"] = a;
  return j;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::IoError, "cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail(ErrorCode::ParseError, path + ": " + e.what());
  }
  return j;
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::IoError, "cannot open " + path + " for writing");
  out << j.dump(2) << "\n";
}

std::string config_hash(const Json& job) {
  std::string s = job.dump();
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace bierlab
