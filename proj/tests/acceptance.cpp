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

// Acceptance suite. Prints one PASS/FAIL/SKIP line per criterion.
//   acceptance --desk    criteria 1-5, catalog groups only
//   acceptance --large   criteria 6-9, generator files from ORBITALG_DATA_DIR
// Exit status: 0 all run criteria passed, 1 a failure, 77 nothing could run.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "orbitalg.hpp"

namespace {

using namespace orbitalg;
using Clock = std::chrono::steady_clock;

struct Failure {
  std::string what;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

template <class T>
std::string str(const T& v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

enum class Status { Pass, Fail, Skip };

class Suite {
 public:
  // Runs one criterion; over-time runs fail even if every check passed.
  void run(int id, const std::string& title, double limit_s, const std::function<void()>& body) {
    const auto start = Clock::now();
    Status status = Status::Pass;
    std::string detail;
    try {
      body();
    } catch (const Failure& f) {
      status = Status::Fail;
      detail = f.what;
    } catch (const std::exception& e) {
      status = Status::Fail;
      detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (status == Status::Pass && secs >= limit_s) {
      status = Status::Fail;
      detail = "exceeded the " + str(limit_s) + " s limit";
    }
    report(id, title, status, secs, limit_s, detail);
  }

  void skip(int id, const std::string& title, const std::string& why) { report(id, title, Status::Skip, 0, 0, why); }

  int exit_code() const {
    if (failed_) return 1;
    return ran_ ? 0 : 77;
  }

 private:
  void report(int id, const std::string& title, Status s, double secs, double limit, const std::string& detail) {
    const char* tag = s == Status::Pass ? "PASS" : s == Status::Fail ? "FAIL" : "SKIP";
    std::cout << tag << "  " << std::setw(2) << id << "  " << title;
    if (s != Status::Skip) std::cout << "  [" << std::fixed << std::setprecision(2) << secs << " s / " << limit << " s]";
    if (!detail.empty()) std::cout << "  -- " << detail;
    std::cout << std::endl;
    if (s == Status::Fail) failed_ = true;
    if (s != Status::Skip) ran_ = true;
  }

  bool failed_ = false;
  bool ran_ = false;
};

const IntersectionArray* single_drg(const SearchReport& rep, const IntersectionArray& want) {
  auto it = rep.drgs.find(want);
  return it == rep.drgs.end() ? nullptr : &it->first;
}

std::string srg_list(const SearchReport& rep) {
  std::string out;
  for (const auto& [p, idx] : rep.srgs) out += (out.empty() ? "" : " ") + to_string(p) + "x" + str(idx.size());
  return out.empty() ? "none" : out;
}

// ---------------------------------------------------------------- desk criteria

void petersen_pipeline() {
  auto g = subsets_group(5, 2);
  OrbitalDecomposition dec(g);
  require(dec.rank() == 3, "rank " + str(dec.rank()));
  require(dec.valencies() == std::vector<std::size_t>{1, 3, 6}, "valencies differ from {1,3,6}");
  auto rep = run_search(g);
  require(rep.srgs.size() == 2 && rep.srgs.count({10, 3, 0, 1}) && rep.srgs.count({10, 6, 3, 4}),
          "SRGs found: " + srg_list(rep));
  const std::size_t kneser[] = {1};
  auto drg = check_drg(union_graph(dec, kneser));
  require(drg.array && *drg.array == IntersectionArray{{3, 2}, {1, 1}}, "Petersen array: " + drg.reason);
}

void johnson_seven_three() {
  auto g = subsets_group(7, 3);
  OrbitalDecomposition dec(g);
  std::size_t idx = 0;
  for (const auto& o : dec.orbitals())
    if (o.valency == 12) idx = o.index;
  require(idx != 0, "no valency-12 orbital");
  const std::size_t subset[] = {idx};
  Graph j = union_graph(dec, subset);
  auto drg = check_drg(j);
  const IntersectionArray want{{12, 6, 2}, {1, 4, 9}};
  require(drg.array && *drg.array == want, "array: " + (drg.array ? to_string(*drg.array) : drg.reason));
  require(drg.array->diameter() == 3, "diameter");
  auto res = intersection_numbers(distance_configuration(j));
  require(res.ok(), "distance partition intersection numbers are not constant");
  const auto& p = *res.tensor;
  for (std::size_t k = 1; k <= 3; ++k) {
    require(p(k, k - 1, 1) == want.c[k - 1], "c_" + str(k) + " != p[k][k-1][1]");
    if (k < 3) require(p(k, k + 1, 1) == want.b[k], "b_" + str(k) + " != p[k][k+1][1]");
  }
}

void rook_graph() {
  auto g = grid_group(4);
  auto rep = run_search(g);
  auto it = rep.srgs.find({16, 6, 2, 2});
  require(it != rep.srgs.end(), "SRGs found: " + srg_list(rep));
  OrbitalDecomposition dec(g);
  Graph rook = union_graph(dec, rep.candidates[it->second.front()].candidate.subset);
  auto bad = srg_identity_violation(rook, {16, 6, 2, 2});
  require(!bad, "A^2 identity fails at (" + (bad ? str(bad->first) + "," + str(bad->second) : "") + ")");
}

std::vector<PermutationGroup> catalog_up_to(std::size_t max_degree) {
  std::vector<PermutationGroup> out;
  for (std::size_t n = 1; n <= max_degree; ++n) out.push_back(symmetric_group(n));
  for (std::size_t n = 1; n <= max_degree; ++n) out.push_back(cyclic_group(n));
  for (std::size_t n = 3; n <= max_degree; ++n) out.push_back(dihedral_group(n));
  for (std::size_t m = 1; m * m <= max_degree; ++m) out.push_back(grid_group(m));
  for (std::size_t n = 2; n <= max_degree; ++n)
    for (std::size_t k = 1; k < n; ++k) {
      BigInt c = 1;
      for (std::size_t i = 0; i < k; ++i) c = c * (n - i) / (i + 1);
      if (c <= max_degree) out.push_back(subsets_group(n, k));
    }
  return out;
}

void axiom_suite() {
  std::size_t groups = 0;
  for (const auto& g : catalog_up_to(200)) {
    const std::string name = g.name() + " (degree " + str(g.degree()) + ")";
    OrbitalDecomposition dec(g);
    AxiomOptions opt;
    opt.exhaustive_cap = 200;
    auto ax = verify_axioms(dec, opt);
    require(ax.ok() && ax.counts.has_value(), name + ": axioms fail");
    std::size_t total = 0;
    for (auto v : dec.valencies()) total += v;
    require(total == g.degree(), name + ": valencies do not sum to n");
    auto pr = pairing(dec);
    for (std::size_t i = 0; i < pr.size(); ++i) require(pr[pr[i]] == i, name + ": pairing is not an involution");
    require(order(g) == BigInt(g.degree()) * order(point_stabilizer(g, 0)), name + ": |G| != n |G_0|");
    ++groups;
  }
  require(groups > 500, "catalog enumeration too small");
}

void negative_fixtures() {
  Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
  require(!check_regular(p3).degree, "P_3 reported regular");
  std::vector<std::pair<std::size_t, std::size_t>> k5;
  for (std::size_t x = 0; x < 5; ++x)
    for (std::size_t y = x + 1; y < 5; ++y) k5.emplace_back(x, y);
  require(classify(Graph::from_edges(5, k5)).kind == Kind::Degenerate, "K_5 not degenerate");
  // Cyclic group of order 8: the orbital pair {i +- 2} gives two 4-cycles.
  OrbitalDecomposition c8(cyclic_group(8));
  bool found = false;
  for (const auto& cand : enumerate(c8)) {
    Graph u = union_graph(c8, cand.subset);
    if (u.degree(0) == 2 && u.adjacent(0, 2)) {
      auto c = classify(u);
      require(c.kind == Kind::Disconnected && c.components == 2,
              std::string("two 4-cycles classified ") + to_string(c.kind) + " with " + str(c.components) + " components");
      found = true;
    }
  }
  require(found, "no {i +- 2} union among the C8 orbitals");
  OrbitalRows rows = OrbitalDecomposition(subsets_group(5, 2)).materialize();
  rows.rows[1].flip(3, 7);
  auto ax = verify_axioms(rows);
  require(!ax.partition && ax.violation && ax.violation->axiom == 2, "flipped bit not caught by axiom (ii)");
  require(ax.violation->x == 3 && ax.violation->y == 7, "axiom (ii) witness is not the flipped cell");
}

// ---------------------------------------------------------------- large-group criteria

std::filesystem::path data_dir() {
  if (const char* env = std::getenv("ORBITALG_DATA_DIR")) return env;
  return ORBITALG_DATA_DIR;
}

void large_criteria(Suite& suite) {
  const auto dir = data_dir();
  auto with_files = [&](int id, const std::string& title, double limit, std::vector<std::string> files,
                        std::function<void(const std::vector<PermutationGroup>&)> body) {
    std::vector<std::string> missing;
    for (const auto& f : files)
      if (!std::filesystem::exists(dir / f)) missing.push_back(f);
    if (!missing.empty()) {
      std::string m;
      for (const auto& f : missing) m += (m.empty() ? "" : ", ") + f;
      suite.skip(id, title, "requires-data: " + m + " not found in " + dir.string());
      return;
    }
    suite.run(id, title, limit, [&] {
      std::vector<PermutationGroup> groups;
      for (const auto& f : files) groups.push_back(read_group_file((dir / f).string()));
      body(groups);
    });
  };
  SearchOptions opt;
  opt.threads = resolve_threads(0);

  with_files(6, "G2(4) on 416 points: exactly one SRG, (416,100,36,20)", 120, {"g24_416.grp"}, [&](const auto& g) {
    auto rep = run_search(g[0], opt);
    std::size_t count = 0;
    for (const auto& [p, idx] : rep.srgs) count += idx.size();
    require(count == 1 && rep.srgs.count({416, 100, 36, 20}), "SRGs found: " + srg_list(rep));
  });

  with_files(7, "G2(4) on 1365 points: SRG(1365,340,83,85), DRG {20,16,16;1,1,5}, 2-(1365,341,85)", 900,
             {"g24_1365.grp"}, [&](const auto& g) {
               require(order(point_stabilizer(g[0], 0)) == 184320, "point stabilizer order is not 184320");
               auto rep = run_search(g[0], opt);
               auto it = rep.srgs.find({1365, 340, 83, 85});
               require(it != rep.srgs.end(), "SRGs found: " + srg_list(rep));
               require(single_drg(rep, IntersectionArray{{20, 16, 16}, {1, 1, 5}}), "DRG {20,16,16;1,1,5} not found");
               OrbitalDecomposition dec(g[0]);
               Graph srg = union_graph(dec, rep.candidates[it->second.front()].candidate.subset);
               auto d = check_symmetric_design(srg, Diagonal::One, opt.threads);
               require(d.params && *d.params == DesignParams{1365, 341, 85}, "design: " + d.reason);
               require(d.params->lambda * (d.params->v - 1) == d.params->k * (d.params->k - 1), "design identity");
             });

  with_files(8, "Tits group on 1755 and 2925 points: DRGs {10,8,8,8;1,1,1,5} and {12,8,8,8;1,1,1,3}", 3600,
             {"t_1755.grp", "t_2925.grp"}, [&](const auto& g) {
               auto a = run_search(g[0], opt);
               require(single_drg(a, IntersectionArray{{10, 8, 8, 8}, {1, 1, 1, 5}}), "1755: DRG not found");
               auto b = run_search(g[1], opt);
               require(single_drg(b, IntersectionArray{{12, 8, 8, 8}, {1, 1, 1, 3}}), "2925: DRG not found");
             });

  with_files(9, "G2(4) on 4095 points: SRG(4095,2046,1021,1023), 2-(4095,2047,1023)", 3600, {"g24_4095.grp"},
             [&](const auto& g) {
               auto rep = run_search(g[0], opt);
               auto it = rep.srgs.find({4095, 2046, 1021, 1023});
               require(it != rep.srgs.end(), "SRGs found: " + srg_list(rep));
               OrbitalDecomposition dec(g[0]);
               Graph srg = union_graph(dec, rep.candidates[it->second.front()].candidate.subset);
               auto d = check_symmetric_design(srg, Diagonal::One, opt.threads);
               require(d.params && *d.params == DesignParams{4095, 2047, 1023}, "design: " + d.reason);
             });
}

}  // namespace

int main(int argc, char** argv) {
  bool desk = false, large = false;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--desk") desk = true;
    else if (a == "--large") large = true;
    else {
      std::cerr << "usage: acceptance [--desk] [--large]\n";
      return 2;
    }
  }
  if (!desk && !large) desk = large = true;
  Suite suite;
  if (desk) {
    suite.run(1, "Petersen pipeline: rank 3, SRG(10,3,0,1) and SRG(10,6,3,4), {3,2;1,1}", 1, petersen_pipeline);
    suite.run(2, "J(7,3): DRG {12,6,2;1,4,9} and its distance scheme", 5, johnson_seven_three);
    suite.run(3, "rook's graph: SRG(16,6,2,2) and the A^2 identity", 1, rook_graph);
    suite.run(4, "axioms, valencies, pairing and orbit-stabilizer for catalog groups of degree <= 200", 30,
              axiom_suite);
    suite.run(5, "negative fixtures: P_3, K_5, disconnected union, perturbed rows", 5, negative_fixtures);
  }
  if (large) large_criteria(suite);
  return suite.exit_code();
}
