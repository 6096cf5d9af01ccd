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
//  End-to-end runs of the command line binary.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "bierlab/io.hpp"

using namespace bierlab;

namespace {

struct RunResult {
  int exit_code;
  std::string stdout_text;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  std::string out = "cli_out_" + std::to_string(counter++) + ".txt";
  std::string cmd = std::string(BIERLAB_CLI_PATH) + " " + args + " > " + out +
                    " 2> " + out + ".err";
  int rc = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WEXITSTATUS(rc);
  r.stdout_text = slurp(out) + slurp(out + ".err");
  std::remove(out.c_str());
  std::remove((out + ".err").c_str());
  return r;
}

}  // namespace

TEST_CASE("bier subcommand builds Bier(B_3, {∅,{1}})") {
  auto r = run_cli("bier --boolean 3 --ideal '{},{1}' --out bier3.json");
  CHECK(r.exit_code == 0);
  Json report = read_json_file("bier3.json");
  CHECK(report["elements"] == 10);
  CHECK(report["proper_part_elements"] == 8);
  CHECK(report["is_lattice"] == true);
  CHECK(report["tool"] == "bierlab");
  CHECK(report["version"].is_string());
  CHECK(report["config_hash"].is_string());

  // emitted poset re-parses to an equal value (structured labels round-trip)
  Poset parsed = poset_from_json(report["poset"]);
  CHECK(parsed.size() == 10);
  std::remove("bier3.json");

  auto r2 = run_cli(
      "bier --boolean 3 --ideal '{},{1}' --out-poset bier3.poset.json");
  CHECK(r2.exit_code == 0);
  Poset bare = poset_from_json(read_json_file("bier3.poset.json"));
  CHECK(bare == parsed);
  std::remove("bier3.poset.json");
}

TEST_CASE("improper ideal exits with code 2 and a JSON error object") {
  auto r = run_cli("bier --boolean 2 --ideal '{},{1},{2},{1,2}'");
  CHECK(r.exit_code == 2);
  CHECK(r.stdout_text.find("NotProperIdeal") != std::string::npos);
}

TEST_CASE("bier with unicode empty-set ideal") {
  auto r = run_cli("bier --boolean 2 --ideal '∅'");
  CHECK(r.exit_code == 0);
}

TEST_CASE("ideal generator and facet-file forms") {
  // downward closure of {1,2} inside B_3 has 4 members
  auto r = run_cli("bier --boolean 3 --ideal-gen '{1,2}' --out gen.json");
  CHECK(r.exit_code == 0);
  Json rep = read_json_file("gen.json");
  CHECK(rep["elements"].is_number());
  std::remove("gen.json");

  // the faces of a complex as the ideal
  Json k;
  k["vertices"] = {"1", "2"};
  k["facets"] = Json::array();
  k["facets"].push_back(Json::array({"1"}));
  k["facets"].push_back(Json::array({"2"}));
  write_json_file("kfacets.json", k);
  auto f = run_cli("bier --boolean 2 --facets kfacets.json --out fc.json");
  CHECK(f.exit_code == 0);
  Json frep = read_json_file("fc.json");
  // ideal {∅,{1},{2}}: intervals [∅,12],[1,12],[2,12] plus the top
  CHECK(frep["elements"] == 4);
  std::remove("kfacets.json");
  std::remove("fc.json");
}

TEST_CASE("verify-sphere with shelling certificates") {
  auto r = run_cli("verify-sphere --boolean 2 --all-ideals --shelling --out vss.json");
  CHECK(r.exit_code == 0);
  Json rep = read_json_file("vss.json");
  CHECK(rep["all_pass"] == true);
  for (auto& row : rep["results"]) CHECK(row["shellable"] == true);
  std::remove("vss.json");
}

TEST_CASE("verify-sphere for n = 2 and 3") {
  auto r2 = run_cli("verify-sphere --boolean 2 --all-ideals --out vs2.json");
  CHECK(r2.exit_code == 0);
  Json rep2 = read_json_file("vs2.json");
  CHECK(rep2["ideal_count"] == 4);
  CHECK(rep2["all_pass"] == true);
  std::remove("vs2.json");

  auto r3 = run_cli("verify-sphere --boolean 3 --all-ideals --out vs3.json");
  CHECK(r3.exit_code == 0);
  Json rep3 = read_json_file("vs3.json");
  CHECK(rep3["ideal_count"] == 18);
  CHECK(rep3["all_pass"] == true);
  std::remove("vs3.json");
}

TEST_CASE("chain subcommand") {
  auto r = run_cli("chain --boolean 3 --ideal '{},{1}' --emit-steps --out chain.json");
  CHECK(r.exit_code == 0);
  Json rep = read_json_file("chain.json");
  CHECK(rep["step_count"] == 2);
  CHECK(rep["verified"] == true);
  SimplicialComplex final_complex = complex_from_json(rep["final"]);
  CHECK(final_complex.n_vertices() == 8);
  std::remove("chain.json");

  // a non-lattice input is rejected with exit 2
  Json bowtie;
  bowtie["elements"] = {"0", "a", "b", "c", "d", "1"};
  bowtie["covers"] = Json::array();
  for (auto& pr : std::vector<std::pair<const char*, const char*>>{
           {"0", "a"}, {"0", "b"}, {"a", "c"}, {"a", "d"},
           {"b", "c"}, {"b", "d"}, {"c", "1"}, {"d", "1"}})
    bowtie["covers"].push_back(Json::array({pr.first, pr.second}));
  write_json_file("bowtie.json", bowtie);
  auto bad = run_cli("chain --lattice bowtie.json --ideal 'IGNORED'");
  CHECK(bad.exit_code == 2);
  CHECK(bad.stdout_text.find("NotLattice") != std::string::npos);
  std::remove("bowtie.json");
}

TEST_CASE("shell subcommand: verdicts and transport") {
  Json wedge;
  wedge["vertices"] = {"1", "2", "3", "4", "5"};
  wedge["facets"] = Json::array();
  wedge["facets"].push_back(Json::array({"1", "2", "3"}));
  wedge["facets"].push_back(Json::array({"3", "4", "5"}));
  write_json_file("wedge.json", wedge);
  auto r = run_cli("shell --complex wedge.json --out shell1.json");
  CHECK(r.exit_code == 0);
  CHECK(read_json_file("shell1.json")["verdict"] == "not_shellable");
  std::remove("wedge.json");
  std::remove("shell1.json");

  Json tetra;
  tetra["vertices"] = {"1", "2", "3", "4"};
  tetra["facets"] = Json::array();
  for (auto f : std::vector<std::vector<const char*>>{
           {"1", "2", "3"}, {"1", "2", "4"}, {"1", "3", "4"}, {"2", "3", "4"}}) {
    Json jf = Json::array();
    for (auto* v : f) jf.push_back(v);
    tetra["facets"].push_back(jf);
  }
  write_json_file("tetra.json", tetra);
  auto t = run_cli("shell --complex tetra.json --transport '{1,2}' --out shell2.json");
  CHECK(t.exit_code == 0);
  Json rep = read_json_file("shell2.json");
  CHECK(rep["verdict"] == "shellable");
  CHECK(rep["shelling"]["criterion"] == "T");
  CHECK(rep["shelling"]["order"].size() == 6);  // 2 untouched + 4 blown
  std::remove("tetra.json");
  std::remove("shell2.json");
}

TEST_CASE("shell pipeline over a lattice file") {
  Poset b3 = Poset::boolean_lattice(3);
  write_json_file("b3.poset.json", poset_to_json(b3));
  auto r = run_cli(
      "shell --pipeline-lattice b3.poset.json --pipeline-ideal '{},{1}' "
      "--out pipe.json");
  CHECK(r.exit_code == 0);
  Json rep = read_json_file("pipe.json");
  CHECK(rep["steps"] == 2);
  CHECK(rep["homology"]["betti"][1] == 1);
  std::remove("b3.poset.json");
  std::remove("pipe.json");
}

TEST_CASE("iterate grows certified spheres") {
  Json tri;
  tri["vertices"] = {"1", "2", "3"};
  tri["facets"] = Json::array();
  tri["facets"].push_back(Json::array({"1", "2"}));
  tri["facets"].push_back(Json::array({"2", "3"}));
  tri["facets"].push_back(Json::array({"1", "3"}));
  write_json_file("tri.json", tri);

  auto r = run_cli(
      "iterate --seed-complex tri.json --rounds 1 --ideal-policy smallest "
      "--out iter.json");
  CHECK(r.exit_code == 0);
  Json rep = read_json_file("iter.json");
  CHECK(rep["rounds"].size() == 1);
  CHECK(rep["rounds"][0]["vertices_increased"] == true);
  CHECK(rep["rounds"][0]["homology_preserved"] == true);

  auto bad = run_cli("iterate --seed-complex tri.json --rounds 0");
  CHECK(bad.exit_code != 0);
  std::remove("tri.json");
  std::remove("iter.json");
}

TEST_CASE("reports are byte-identical across runs") {
  auto a = run_cli("verify-sphere --boolean 2 --all-ideals");
  auto b = run_cli("verify-sphere --boolean 2 --all-ideals");
  CHECK(a.exit_code == 0);
  CHECK(a.stdout_text == b.stdout_text);

  auto c = run_cli("chain --boolean 3 --ideal '{},{2}'");
  auto d = run_cli("chain --boolean 3 --ideal '{},{2}'");
  CHECK(c.stdout_text == d.stdout_text);
}

TEST_CASE("emitted poset and complex files round-trip") {
  Poset b3 = Poset::boolean_lattice(3);
  write_json_file("rt.poset.json", poset_to_json(b3));
  Poset back = poset_from_json(read_json_file("rt.poset.json"));
  CHECK(back == b3);
  std::remove("rt.poset.json");

  auto k = SimplicialComplex::from_facets({{"a", "b"}, {"b", "c"}});
  write_json_file("rt.complex.json", complex_to_json(k));
  SimplicialComplex kback = complex_from_json(read_json_file("rt.complex.json"));
  CHECK(kback == k);
  std::remove("rt.complex.json");
}
