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
//  bierlab command line: construct Bier posets, verify sphere claims,
//  run subdivision chains, certify shellings, and iterate the
//  construction. All reports are deterministic given inputs and seed.

#include <algorithm>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bierlab/bier.hpp"
#include "bierlab/complex.hpp"
#include "bierlab/config.hpp"
#include "bierlab/error.hpp"
#include "bierlab/homology.hpp"
#include "bierlab/io.hpp"
#include "bierlab/nested.hpp"
#include "bierlab/poset.hpp"
#include "bierlab/shelling.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace bierlab;

// Splits a compact set-of-sets string on top-level commas: braces and
// brackets nest, so "∅,{1},{1,2}" and "{},{1,2}" both work.
std::vector<std::string> split_top_level(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '{' || c == '[') depth++;
    if (c == '}' || c == ']') depth--;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::string canonical_subset_label(const std::string& token) {
  std::string t;
  for (char c : token)
    if (!isspace(static_cast<unsigned char>(c))) t += c;
  if (t == "∅" || t == "{}" || t.empty()) return "{}";
  if (t.front() == '{' && t.back() == '}') t = t.substr(1, t.size() - 2);
  std::vector<int> nums;
  for (auto& piece : split_top_level(t))
    if (!piece.empty()) nums.push_back(std::stoi(piece));
  std::sort(nums.begin(), nums.end());
  nums.erase(std::unique(nums.begin(), nums.end()), nums.end());
  std::string out = "{";
  for (std::size_t i = 0; i < nums.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(nums[i]);
  }
  out += '}';
  return out;
}

struct IdealOptions {
  std::string members;      // compact set-of-sets
  std::string generators;   // downward closure of listed faces
  std::string members_file;
  std::string facets_file;  // complex whose faces form the ideal
};

Bitset resolve_ideal(const Poset& host, const IdealOptions& opt, int n) {
  int given = !opt.members.empty() + !opt.generators.empty() +
              !opt.members_file.empty() + !opt.facets_file.empty();
  if (given != 1)
    fail(ErrorCode::ParseError,
         "exactly one of --ideal/--ideal-gen/--ideal-file/--facets required");
  if (!opt.members.empty()) {
    std::vector<std::string> labels;
    for (auto& tok : split_top_level(opt.members))
      labels.push_back(canonical_subset_label(tok));
    return ideal_from_members(host, labels);
  }
  if (!opt.generators.empty()) {
    std::vector<std::string> labels;
    for (auto& tok : split_top_level(opt.generators))
      labels.push_back(canonical_subset_label(tok));
    return ideal_downward_closure(host, labels);
  }
  if (!opt.members_file.empty())
    return ideal_from_members(
        host, ideal_members_from_json(read_json_file(opt.members_file)));
  SimplicialComplex k = complex_from_json(read_json_file(opt.facets_file));
  return complex_as_ideal(k, host, n);
}

void require_proper(const Poset& host, const Bitset& ideal) {
  if (!is_proper_ideal(host, ideal))
    fail(ErrorCode::NotProperIdeal, "ideal must be nonempty, proper, downward closed");
}

Json report_header(const std::string& command, const Json& params) {
  Json j;
  j["tool"] = "bierlab";
  j["version"] = kVersion;
  j["command"] = command;
  Json job;
  job["command"] = command;
  job["params"] = params;
  j["config_hash"] = config_hash(job);
  return j;
}

void emit(const Json& report, const std::string& out_path, bool text) {
  if (!out_path.empty()) write_json_file(out_path, report);
  if (text) {
    for (auto& [k, v] : report.items())
      std::cout << k << ": " << v.dump() << "\n";
  } else {
    std::cout << report.dump(2) << "\n";
  }
}

HomologyProfile sphere_profile(int m) {
  HomologyProfile h;
  h.dim = std::max(m, -1);
  h.betti_minus1 = m == -1 ? 1 : 0;
  if (m >= 0) {
    h.betti.assign(m + 1, 0);
    h.torsion.assign(m + 1, {});
    h.betti[m] = 1;
  }
  return h;
}

// --- subcommands -------------------------------------------------------

int cmd_bier(const std::string& poset_file, int boolean_n,
             const IdealOptions& ideal_opt, const std::string& out,
             const std::string& out_poset, bool text) {
  Poset host = poset_file.empty() ? Poset::boolean_lattice(boolean_n)
                                  : poset_from_json(read_json_file(poset_file));
  Bitset ideal = resolve_ideal(host, ideal_opt, boolean_n);
  require_proper(host, ideal);
  BierPoset bp = bier_poset(host, ideal);

  Json params;
  params["poset"] = poset_file.empty() ? Json("--boolean " + std::to_string(boolean_n))
                                       : Json(poset_file);
  params["ideal"] = ideal_to_json(host, ideal)["members"];
  Json report = report_header("bier", params);
  report["elements"] = bp.poset.size();
  report["proper_part_elements"] = bp.poset.size() - 2;
  report["is_lattice"] = bp.poset.is_lattice();
  report["poset"] = bier_poset_to_json(bp);
  if (!out_poset.empty()) write_json_file(out_poset, bier_poset_to_json(bp));
  emit(report, out, text);
  return 0;
}

int cmd_verify_sphere(int n, bool all_ideals, const IdealOptions& ideal_opt,
                      bool with_shelling, const std::string& out, bool text) {
  Poset bn = Poset::boolean_lattice(n);
  std::vector<Bitset> ideals;
  if (all_ideals) {
    ideals = enumerate_proper_ideals(bn);
  } else {
    Bitset ideal = resolve_ideal(bn, ideal_opt, n);
    require_proper(bn, ideal);
    ideals.push_back(ideal);
  }

  std::vector<Json> rows(ideals.size());
  std::vector<char> passed(ideals.size(), 0);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    Json row;
    row["ideal"] = ideal_to_json(bn, ideals[i])["members"];
    try {
      BierPoset bp = bier_poset(bn, ideals[i]);
      SimplicialComplex sphere = order_complex(proper_part(bp.poset));
      HomologyProfile h = reduced_homology(sphere);
      PseudomanifoldReport pm = is_pseudomanifold(sphere);
      // the minimal Bier sphere has one vertex per atom of Bier(B_n, I);
      // the order complex is its subdivision and is free to be larger
      std::size_t atoms = bp.poset.upper_covers(bp.bottom_index).size();
      bool vertex_ok = atoms <= static_cast<std::size_t>(2 * n);
      bool homology_ok = h.is_sphere(n - 2);
      row["order_complex_vertices"] = sphere.n_vertices();
      row["sphere_vertices"] = atoms;
      row["vertex_bound_ok"] = vertex_ok;
      row["pseudomanifold"] = pm.ok;
      if (!pm.ok) row["pseudomanifold_reason"] = pm.reason;
      row["homology"] = homology_to_json(h);
      row["homology_is_sphere"] = homology_ok;
      bool ok = vertex_ok && pm.ok && homology_ok;
      if (with_shelling) {
        auto rep = find_shelling(sphere);
        row["shellable"] = rep.has_value();
        ok = ok && rep.has_value();
      }
      row["pass"] = ok;
      passed[i] = ok;
    } catch (const Error& e) {
      row["error"] = e.what();
      row["pass"] = false;
      if (e.code() == ErrorCode::Timeout) row["timeout"] = true;
    }
    rows[i] = std::move(row);
  }

  Json params;
  params["n"] = n;
  params["all_ideals"] = all_ideals;
  params["shelling"] = with_shelling;
  Json report = report_header("verify-sphere", params);
  report["ideal_count"] = ideals.size();
  report["results"] = rows;  // already sorted: ideals enumerate canonically
  std::size_t npass = 0;
  for (char c : passed) npass += c;
  report["passed"] = npass;
  report["all_pass"] = npass == ideals.size();
  emit(report, out, text);
  return report["all_pass"].get<bool>() ? 0 : 3;
}

int cmd_chain(const std::string& lattice_file, int boolean_n,
              const IdealOptions& ideal_opt, bool emit_steps,
              const std::string& out, bool text) {
  Poset host = lattice_file.empty()
                   ? Poset::boolean_lattice(boolean_n)
                   : poset_from_json(read_json_file(lattice_file));
  if (!host.is_lattice()) fail(ErrorCode::NotLattice, "chain needs a lattice");
  Bitset ideal = resolve_ideal(host, ideal_opt, boolean_n);
  require_proper(host, ideal);

  ChainRecord rec = bier_subdivision_chain(host, ideal, emit_steps);

  Json params;
  params["lattice"] = lattice_file.empty()
                          ? Json("--boolean " + std::to_string(boolean_n))
                          : Json(lattice_file);
  params["ideal"] = ideal_to_json(host, ideal)["members"];
  params["emit_steps"] = emit_steps;
  Json report = report_header("chain", params);
  report["steps"] = chain_to_json(rec, emit_steps)["steps"];
  report["step_count"] = rec.steps.size();
  report["verified"] = rec.verified;
  report["final"] = complex_to_json(rec.final);
  if (emit_steps) {
    report["initial"] = complex_to_json(rec.initial);
    Json inter = Json::array();
    for (auto& k : rec.intermediates) inter.push_back(complex_to_json(k));
    report["intermediate"] = inter;
  }
  emit(report, out, text);
  return 0;
}

int cmd_shell(const std::string& complex_file, const std::string& transport_face,
              const std::string& pipeline_lattice, const std::string& pipeline_ideal,
              std::uint64_t node_budget, const std::string& out, bool text) {
  Json params;
  params["complex"] = complex_file;
  params["transport"] = transport_face;
  params["pipeline"] = pipeline_lattice.empty()
                           ? Json(nullptr)
                           : Json(pipeline_lattice + " " + pipeline_ideal);
  Json report = report_header("shell", params);

  SearchBudget budget{node_budget};

  if (!pipeline_lattice.empty()) {
    Poset host = poset_from_json(read_json_file(pipeline_lattice));
    IdealOptions opt;
    opt.members = pipeline_ideal;
    Bitset ideal = resolve_ideal(host, opt, 0);
    require_proper(host, ideal);
    PipelineReport pr = bier_shelling_pipeline(host, ideal, budget);
    report["steps"] = pr.steps.size();
    report["shelling"] = ordering_to_json(pr.final_ordering, "T");
    report["final"] = complex_to_json(pr.final_complex);
    report["homology"] = homology_to_json(reduced_homology(pr.final_complex));
    emit(report, out, text);
    return 0;
  }

  SimplicialComplex k = complex_from_json(read_json_file(complex_file));
  auto base = find_shelling(k, budget);
  if (!base) {
    report["verdict"] = "not_shellable";
    emit(report, out, text);
    return 0;
  }
  report["verdict"] = "shellable";
  if (transport_face.empty()) {
    report["shelling"] = ordering_to_json(base->ordering, base->criterion);
    emit(report, out, text);
    return 0;
  }

  std::vector<std::string> alpha;
  {
    std::string t = transport_face;
    if (!t.empty() && t.front() == '{' && t.back() == '}')
      t = t.substr(1, t.size() - 2);
    for (auto& piece : split_top_level(t))
      if (!piece.empty()) alpha.push_back(piece);
  }
  std::string apex = canonical_subdivision_label(alpha);
  FacetOrdering transported = transport_ordering(k, base->ordering, alpha, apex);
  report["base_shelling"] = ordering_to_json(base->ordering, base->criterion);
  report["new_vertex"] = apex;
  report["shelling"] = ordering_to_json(transported, "T");
  report["subdivision"] =
      complex_to_json(stellar_subdivision(k, alpha, apex));
  emit(report, out, text);
  return 0;
}

int cmd_iterate(const std::string& seed_file, int rounds,
                const std::string& policy, std::uint64_t seed,
                const std::string& out_prefix, const std::string& out,
                bool text) {
  if (rounds < 1) fail(ErrorCode::ParseError, "--rounds must be >= 1");
  if (policy != "smallest" && policy != "largest" && policy != "random")
    fail(ErrorCode::ParseError, "--ideal-policy must be smallest|largest|random");

  SimplicialComplex current = complex_from_json(read_json_file(seed_file));
  if (current.is_void()) fail(ErrorCode::EmptyComplex, "seed complex is void");
  HomologyProfile reference = reduced_homology(current);

  std::mt19937_64 rng(seed);
  Json params;
  params["seed_complex"] = seed_file;
  params["rounds"] = rounds;
  params["policy"] = policy;
  params["seed"] = seed;
  Json report = report_header("iterate", params);
  Json round_rows = Json::array();

  for (int round = 1; round <= rounds; ++round) {
    Poset lattice = face_lattice(current);
    Bitset ideal(lattice.size());
    if (policy == "smallest") {
      ideal.set(*lattice.bottom());
    } else if (policy == "largest") {
      for (int v = 0; v < lattice.size(); ++v) ideal.set(v);
      ideal.reset(*lattice.top());
    } else {
      // downward closure of a random subset; retried until proper
      std::uniform_int_distribution<int> pick(0, lattice.size() - 1);
      do {
        ideal.clear();
        int generators = 1 + static_cast<int>(rng() % 3);
        for (int g = 0; g < generators; ++g) ideal |= lattice.down_set(pick(rng));
      } while (!is_proper_ideal(lattice, ideal));
    }

    PipelineReport pr = bier_shelling_pipeline(lattice, ideal);
    HomologyProfile h = reduced_homology(pr.final_complex);
    bool homology_ok = h == reference;
    bool growth_ok = pr.final_complex.n_vertices() > current.n_vertices();

    Json row;
    row["round"] = round;
    row["ideal"] = ideal_to_json(lattice, ideal)["members"];
    row["subdivision_steps"] = pr.chain.steps.size();
    row["vertices"] = pr.final_complex.n_vertices();
    row["homology"] = homology_to_json(h);
    row["homology_preserved"] = homology_ok;
    row["vertices_increased"] = growth_ok;
    row["shelling"] = ordering_to_json(pr.final_ordering, "T");
    round_rows.push_back(row);

    if (!homology_ok)
      fail(ErrorCode::VerificationFailed,
           "homology changed in round " + std::to_string(round));
    if (!growth_ok)
      fail(ErrorCode::VerificationFailed,
           "vertex count did not grow in round " + std::to_string(round));

    if (!out_prefix.empty())
      write_json_file(out_prefix + ".round" + std::to_string(round) + ".json",
                      complex_to_json(pr.final_complex));
    current = pr.final_complex;
  }

  report["rounds"] = round_rows;
  report["final"] = complex_to_json(current);
  emit(report, out, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bierlab: Bier posets, nested set complexes, combinatorial "
               "blowups, and shelling transport"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string out, format = "json";
  app.add_option("--out", out, "write the JSON report to this path")
      ->capture_default_str();
  app.add_option("--format", format, "report format: json|text")
      ->check(CLI::IsMember({"json", "text"}));

  IdealOptions ideal_opt;
  std::string poset_file, lattice_file, complex_file;
  int boolean_n = 0;
  bool all_ideals = false, with_shelling = false, emit_steps = false;
  std::string transport_face, pipeline_lattice, pipeline_ideal;
  std::uint64_t node_budget = SearchBudget{}.nodes_left;
  std::string seed_complex, policy = "random", out_prefix;
  int rounds = 1;
  std::uint64_t seed = 1;

  auto add_ideal_flags = [&](CLI::App* cmd) {
    cmd->add_option("--ideal", ideal_opt.members,
                    "ideal members, compact set-of-sets ('∅,{1},{1,2}')");
    cmd->add_option("--ideal-gen", ideal_opt.generators,
                    "ideal generators (downward closure of listed faces)");
    cmd->add_option("--ideal-file", ideal_opt.members_file,
                    "ideal JSON file {\"members\":[...]}");
    cmd->add_option("--facets", ideal_opt.facets_file,
                    "complex JSON file; its faces form the ideal");
  };

  std::string out_poset;
  auto* bier_cmd = app.add_subcommand("bier", "construct Bier(P, I)");
  bier_cmd->add_option("--poset", poset_file, "poset JSON file (.poset.json)");
  bier_cmd->add_option("--boolean", boolean_n, "use the boolean lattice B_n");
  bier_cmd->add_option("--out-poset", out_poset,
                       "also write the bare poset JSON here");
  add_ideal_flags(bier_cmd);

  auto* verify_cmd = app.add_subcommand(
      "verify-sphere", "check the (n-2)-sphere claims for Bier(B_n, I)");
  verify_cmd->add_option("--boolean", boolean_n, "boolean lattice rank")
      ->required();
  verify_cmd->add_flag("--all-ideals", all_ideals, "sweep every proper ideal");
  verify_cmd->add_flag("--shelling", with_shelling, "also certify a shelling");
  add_ideal_flags(verify_cmd);

  auto* chain_cmd = app.add_subcommand(
      "chain", "stellar subdivision chain from Δ(L̄) to Δ(Bier(L,I)‾)");
  chain_cmd->add_option("--lattice", lattice_file, "lattice JSON file");
  chain_cmd->add_option("--boolean", boolean_n, "use the boolean lattice B_n");
  chain_cmd->add_flag("--emit-steps", emit_steps, "include every intermediate");
  add_ideal_flags(chain_cmd);

  auto* shell_cmd = app.add_subcommand("shell", "find or transport shellings");
  shell_cmd->add_option("--complex", complex_file, "complex JSON file");
  shell_cmd->add_option("--transport", transport_face,
                        "apply one transport step at this face, e.g. '{1,2}'");
  shell_cmd->add_option("--pipeline-lattice", pipeline_lattice,
                        "run the full Bier pipeline on this lattice file");
  shell_cmd->add_option("--pipeline-ideal", pipeline_ideal,
                        "ideal for --pipeline-lattice (compact syntax)");
  shell_cmd->add_option("--node-budget", node_budget,
                        "search budget in nodes (deterministic timeout)");

  auto* iterate_cmd = app.add_subcommand(
      "iterate", "iterate the Bier construction from a seed sphere");
  iterate_cmd->add_option("--seed-complex", seed_complex, "seed complex JSON")
      ->required();
  iterate_cmd->add_option("--rounds", rounds, "number of rounds")->required();
  iterate_cmd->add_option("--ideal-policy", policy,
                          "smallest | largest | random");
  iterate_cmd->add_option("--seed", seed, "RNG seed for the random policy");
  iterate_cmd->add_option("--out-prefix", out_prefix,
                          "write each round's triangulation here");

  CLI11_PARSE(app, argc, argv);
  const bool text = format == "text";

  try {
    if (bier_cmd->parsed())
      return cmd_bier(poset_file, boolean_n, ideal_opt, out, out_poset, text);
    if (verify_cmd->parsed())
      return cmd_verify_sphere(boolean_n, all_ideals, ideal_opt, with_shelling,
                               out, text);
    if (chain_cmd->parsed())
      return cmd_chain(lattice_file, boolean_n, ideal_opt, emit_steps, out,
                       text);
    if (shell_cmd->parsed())
      return cmd_shell(complex_file, transport_face, pipeline_lattice,
                       pipeline_ideal, node_budget, out, text);
    if (iterate_cmd->parsed())
      return cmd_iterate(seed_complex, rounds, policy, seed, out_prefix, out,
                         text);
  } catch (const bierlab::Error& e) {
    Json err;
    err["error"] = bierlab::error_code_name(e.code());
    err["detail"] = e.detail();
    std::cerr << err.dump(2) << "\n";
    return bierlab::error_exit_code(e.code());
  } catch (const std::exception& e) {
    Json err;
    err["error"] = "Internal";
    err["detail"] = e.what();
    std::cerr << err.dump(2) << "\n";
    return 1;
  }
  return 1;
}
