// Copyright 2026 The orbitalg Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// orbitalg: orbital-union graph search and graph classification.

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "orbitalg.hpp"
#include "orbitalg/report.hpp"

namespace {

using namespace orbitalg;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kInput = 2;
constexpr int kInconsistent = 3;

// "catalog:NAME:P1,P2" selects a built-in group, anything else is a .grp path.
PermutationGroup load_group(const std::string& arg) {
  constexpr std::string_view prefix = "catalog:";
  if (arg.starts_with(prefix)) return catalog_from_spec(std::string_view(arg).substr(prefix.size()));
  return read_group_file(arg);
}

std::string join(const std::vector<std::size_t>& v, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
  return out;
}

std::string cycles_text(const std::vector<std::vector<std::size_t>>& cycles) {
  std::string out;
  for (const auto& c : cycles) out += (out.empty() ? "(" : " (") + join(c) + ")";
  return out;
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

struct Common {
  unsigned threads = 0;
  bool json = false;
};

void add_threads(CLI::App* cmd, Common& c) {
  cmd->add_option("--threads", c.threads, "worker threads (default: $ORBITALG_THREADS or all cores)")
      ->check(CLI::PositiveNumber);
}

// ---------------------------------------------------------------- orbitals

int run_orbitals(const std::string& input, bool verify, const Common& c) {
  PermutationGroup g = load_group(input);
  OrbitalDecomposition dec(g);
  std::optional<AxiomReport> axioms;
  if (verify) {
    AxiomOptions opt;
    opt.threads = resolve_threads(c.threads);
    axioms = verify_axioms(dec, opt);
  }
  if (c.json) {
    Json j = orbitals_json(dec);
    if (axioms) {
      Json a{{"identity", axioms->identity},
             {"partition", axioms->partition},
             {"transpose", axioms->transpose},
             {"transpose_sampled", axioms->transpose_sampled},
             {"counts", axioms->counts ? Json(*axioms->counts) : Json("skipped")}};
      if (axioms->violation) {
        const auto& v = *axioms->violation;
        a["violation"] = Json{{"axiom", v.axiom}, {"pair", {v.x + 1, v.y + 1}}, {"detail", v.detail}};
      }
      j["axioms"] = a;
    }
    print_json(j);
  } else {
    std::cout << "group: " << g.name() << "\n"
              << "degree: " << dec.degree() << "\n"
              << "order: " << dec.group_order() << "\n"
              << "rank: " << dec.rank() << "\n"
              << "valencies: " << join(dec.valencies()) << "\n"
              << "pairing: " << cycles_text(pairing_cycles(dec)) << "\n";
    auto prim = g.metadata().find("primitive");
    if (prim != g.metadata().end()) std::cout << "primitive: " << prim->second << "\n";
    if (axioms) {
      std::cout << "axioms: (i) " << (axioms->identity ? "ok" : "FAIL") << ", (ii) "
                << (axioms->partition ? "ok" : "FAIL") << ", (iii) " << (axioms->transpose ? "ok" : "FAIL")
                << (axioms->transpose_sampled ? " (sampled)" : "") << ", (iv) "
                << (axioms->counts ? (*axioms->counts ? "ok" : "FAIL") : "skipped above cap") << "\n";
      if (axioms->violation)
        std::cout << "violation: axiom " << axioms->violation->axiom << " at (" << axioms->violation->x + 1 << ","
                  << axioms->violation->y + 1 << "): " << axioms->violation->detail << "\n";
    }
  }
  if (axioms && !axioms->ok()) {
    std::cerr << "orbitalg: coherent configuration axioms violated\n";
    return kInconsistent;
  }
  return kOk;
}

// ---------------------------------------------------------------- search

struct SearchFlags {
  bool srg_only = false;
  std::size_t drg_min_diameter = 3;
  bool halves = false;
  std::string export_dir;
  std::size_t sample = 1;
  std::size_t atom_cap = 20;
  std::optional<double> time_budget;
};

int run_search_cmd(const std::string& input, const SearchFlags& f, const Common& c) {
  PermutationGroup g = load_group(input);
  SearchOptions opt;
  opt.classify.srg_only = f.srg_only;
  opt.classify.check.sample_stride = f.sample;
  opt.enumerate.halves = f.halves;
  opt.enumerate.atom_cap = f.atom_cap;
  opt.drg_min_diameter = f.drg_min_diameter;
  opt.export_dir = f.export_dir;
  opt.threads = resolve_threads(c.threads);
  if (f.time_budget)
    opt.time_budget = std::chrono::milliseconds(static_cast<std::int64_t>(*f.time_budget * 1000.0));
  SearchReport rep = run_search(g, opt);
  if (c.json) {
    print_json(search_json(rep));
    return kOk;
  }
  std::cout << "group " << rep.group_name << ": degree " << rep.degree << ", order " << rep.order << ", rank "
            << rep.rank << "\n"
            << "valencies: " << join(rep.valencies) << "\n"
            << "atoms: " << rep.atoms.size() << ", candidates: " << rep.candidates.size()
            << (rep.halves ? " (one of each complement pair)" : "") << (rep.sampled ? ", SAMPLED" : "") << "\n";
  for (std::size_t i = 0; i < rep.candidates.size(); ++i) {
    const auto& r = rep.candidates[i];
    const auto& k = r.classification;
    std::cout << "  [" << i << "] " << r.bits << "  degree " << r.degree << "  " << to_string(k.kind);
    if (k.srg) std::cout << " " << to_string(*k.srg);
    if (k.drg) std::cout << " " << to_string(*k.drg);
    if (!k.note.empty()) std::cout << "  (" << k.note << ")";
    if (r.complement) std::cout << "  complement [" << *r.complement << "]";
    std::cout << "\n";
  }
  for (const auto& [p, idx] : rep.srgs) std::cout << "SRG " << to_string(p) << ": [" << join(idx, ", ") << "]\n";
  for (const auto& [a, idx] : rep.drgs) std::cout << "DRG " << to_string(a) << ": [" << join(idx, ", ") << "]\n";
  if (rep.srgs.empty() && rep.drgs.empty()) std::cout << "no SRG or DRG found\n";
  return kOk;
}

// ---------------------------------------------------------------- check, design

int run_check(const std::string& path, std::size_t sample, const Common& c) {
  auto graphs = read_graph_file(path);
  ClassifyOptions opt;
  opt.check.threads = resolve_threads(c.threads);
  opt.check.sample_stride = sample;
  Json out{{"file", path}, {"sampled", sample > 1}, {"graphs", Json::array()}};
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    Json g{{"index", i}, {"n", graphs[i].n()}, {"edges", graphs[i].edge_count()}};
    g["classification"] = to_json(classify(graphs[i], opt));
    out["graphs"].push_back(g);
  }
  print_json(out);
  return kOk;
}

int run_design(const std::string& path, const std::string& diag, const Common& c) {
  auto graphs = read_graph_file(path);
  const Diagonal d = diag == "one" ? Diagonal::One : Diagonal::Zero;
  const unsigned threads = resolve_threads(c.threads);
  Json out{{"file", path}, {"diagonal", diag}, {"graphs", Json::array()}};
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    DesignResult r = check_symmetric_design(graphs[i], d, threads);
    if (!c.json) {
      if (r.params)
        std::cout << "graph " << i << ": symmetric 2-(" << r.params->v << "," << r.params->k << "," << r.params->lambda
                  << ") design\n";
      else
        std::cout << "graph " << i << ": not a symmetric design (" << r.reason << ")\n";
      continue;
    }
    Json g{{"index", i}, {"n", graphs[i].n()}};
    if (r.params) g["design"] = to_json(*r.params);
    else g["reason"] = r.reason;
    if (r.witness) g["witness"] = {r.witness->first + 1, r.witness->second + 1};
    out["graphs"].push_back(g);
  }
  if (c.json) print_json(out);
  return kOk;
}

// ---------------------------------------------------------------- scheme

int run_scheme(const std::string& input, const Common& c) {
  PermutationGroup g = load_group(input);
  OrbitalDecomposition dec(g);
  CoherentConfiguration cfg = from_orbitals(dec);
  const unsigned threads = resolve_threads(c.threads);
  IntersectionResult res = intersection_numbers(cfg, threads);
  ConfigurationFlags f = classify_configuration(cfg, threads);
  if (c.json) {
    Json j{{"group", g.name()}, {"n", cfg.n()}, {"relations", cfg.relations()}};
    j["flags"] = Json{{"coherent", f.coherent}, {"homogeneous", f.homogeneous}, {"symmetric", f.symmetric},
                      {"association_scheme", f.association_scheme}};
    if (res.tensor) j["p"] = tensor_json(*res.tensor);
    print_json(j);
  } else {
    std::cout << "group: " << g.name() << "\n"
              << "points: " << cfg.n() << ", relations: " << cfg.relations() << "\n"
              << "coherent: " << (f.coherent ? "yes" : "no") << ", homogeneous: " << (f.homogeneous ? "yes" : "no")
              << ", association scheme: " << (f.association_scheme ? "yes" : "no") << "\n";
    if (res.tensor)
      for (std::size_t k = 0; k < cfg.relations(); ++k) {
        std::cout << "p[" << k << "]:\n";
        for (std::size_t i = 0; i < cfg.relations(); ++i) {
          std::cout << " ";
          for (std::size_t j = 0; j < cfg.relations(); ++j) std::cout << " " << (*res.tensor)(k, i, j);
          std::cout << "\n";
        }
      }
  }
  if (!res.ok()) {
    const auto& v = *res.violation;
    std::cerr << "orbitalg: intersection number p(" << v.i << "," << v.j << ") differs between (" << v.x + 1 << ","
              << v.y + 1 << ") and (" << v.x2 + 1 << "," << v.y2 + 1 << ")\n";
    return kInconsistent;
  }
  return kOk;
}

// ---------------------------------------------------------------- catalog

int run_catalog_list() {
  for (const auto& e : catalog_entries()) {
    std::string params;
    for (const auto& p : e.params) params += (params.empty() ? "" : ",") + p;
    std::cout << e.name << ":" << params << "\tdegree " << e.degree << "\t" << e.description << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vertex-transitive graphs from orbitals of permutation groups"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "orbitalg 1.0.0");
  Common common;
  std::string input;
  const std::string group_help = "group file (.grp) or catalog:NAME:PARAMS, e.g. catalog:subsets:5,2";

  auto* orbitals = app.add_subcommand("orbitals", "orbital decomposition of a transitive group");
  bool verify = false;
  orbitals->add_option("group", input, group_help)->required();
  orbitals->add_flag("--json", common.json, "JSON output");
  orbitals->add_flag("--verify", verify, "check the coherent configuration axioms");
  add_threads(orbitals, common);

  auto* search = app.add_subcommand("search", "classify every transpose-closed union of orbitals");
  SearchFlags sf;
  search->add_option("group", input, group_help)->required();
  search->add_flag("--srg-only", sf.srg_only, "skip the distance-regularity check for non-SRG candidates");
  search->add_option("--drg-min-diameter", sf.drg_min_diameter, "smallest DRG diameter to report (2 includes SRGs)")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  search->add_flag("--halves", sf.halves, "keep one candidate of each complement pair");
  search->add_option("--export-dir", sf.export_dir, "write each SRG/DRG found as <group>_<bits>.g6");
  search->add_flag("--json", common.json, "JSON report");
  search->add_option("--sample", sf.sample, "check every N-th vertex only (exploration, not proof)")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  search->add_option("--atom-cap", sf.atom_cap, "refuse groups with more atoms than this")->capture_default_str();
  search->add_option("--time-budget", sf.time_budget, "seconds per candidate; overruns are reported as skipped")
      ->check(CLI::NonNegativeNumber);
  add_threads(search, common);

  auto* check = app.add_subcommand("check", "classify graphs from a graph6 (.g6) or adjacency-list file (JSON)");
  std::size_t check_sample = 1;
  check->add_option("file", input, "graph file")->required();
  check->add_flag("--json", common.json, "JSON output (the default for check)");
  check->add_option("--sample", check_sample, "check every N-th vertex only")->check(CLI::PositiveNumber);
  add_threads(check, common);

  auto* design = app.add_subcommand("design", "read a graph's adjacency matrix as a symmetric design");
  std::string diag;
  design->add_option("file", input, "graph file")->required();
  design->add_option("--diag", diag, "diagonal of the incidence matrix: one (A+I) or zero (A)")
      ->required()
      ->check(CLI::IsMember({"one", "zero"}));
  design->add_flag("--json", common.json, "JSON output");
  add_threads(design, common);

  auto* scheme = app.add_subcommand("scheme", "intersection numbers of the orbital configuration");
  scheme->add_option("group", input, group_help)->required();
  scheme->add_flag("--json", common.json, "JSON tensor dump");
  add_threads(scheme, common);

  auto* catalog_cmd = app.add_subcommand("catalog", "built-in groups");
  auto* list = catalog_cmd->add_subcommand("list", "list catalog entries");
  catalog_cmd->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*orbitals) return run_orbitals(input, verify, common);
    if (*search) return run_search_cmd(input, sf, common);
    if (*check) return run_check(input, check_sample, common);
    if (*design) return run_design(input, diag, common);
    if (*scheme) return run_scheme(input, common);
    if (*list) return run_catalog_list();
  } catch (const InputError& e) {
    std::cerr << "orbitalg: " << e.what() << "\n";
    return kInput;
  } catch (const InconsistencyError& e) {
    std::cerr << "orbitalg: internal inconsistency: " << e.what() << "\n";
    return kInconsistent;
  } catch (const std::exception& e) {
    std::cerr << "orbitalg: " << e.what() << "\n";
    return kInconsistent;
  }
  return kUsage;
}
