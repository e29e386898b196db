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

#ifndef ORBITALG_SEARCH_HPP
#define ORBITALG_SEARCH_HPP

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orbitalg/error.hpp"
#include "orbitalg/graph.hpp"
#include "orbitalg/graph_io.hpp"
#include "orbitalg/group.hpp"
#include "orbitalg/orbitals.hpp"
#include "orbitalg/parallel.hpp"

namespace orbitalg {

// A self-paired non-diagonal orbital, or a mutually paired couple {i, i'}.
struct Atom {
  std::vector<std::size_t> orbitals;
  bool self_paired() const { return orbitals.size() == 1; }
};

inline std::vector<Atom> atoms(const OrbitalDecomposition& dec) {
  std::vector<Atom> out;
  for (const auto& o : dec.orbitals()) {
    if (o.index == 0) continue;
    if (o.self_paired()) out.push_back({{o.index}});
    else if (o.index < o.paired_index) out.push_back({{o.index, o.paired_index}});
  }
  return out;
}

struct CandidateUnion {
  std::uint64_t mask = 0;               // bit a set iff atom a is used
  std::vector<std::size_t> atom_ids;    // ascending
  std::vector<std::size_t> subset;      // orbital indices, ascending
};

struct EnumerateOptions {
  std::size_t atom_cap = 20;
  bool halves = false;  // keep only the member of each complement pair that uses atom 0
};

// All nonempty proper atom subsets, ordered by the integer value of their
// atom mask (atom 0 is the least significant bit).
inline std::vector<CandidateUnion> enumerate(const OrbitalDecomposition& dec, const EnumerateOptions& opt = {}) {
  const auto at = atoms(dec);
  if (at.size() > opt.atom_cap)
    throw InputError(std::to_string(at.size()) + " atoms exceed the enumeration cap of " + std::to_string(opt.atom_cap));
  if (at.size() > 62) throw InputError("too many atoms");
  std::vector<CandidateUnion> out;
  if (at.size() < 2) return out;
  const std::uint64_t full = (std::uint64_t{1} << at.size()) - 1;
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    if (opt.halves && !(mask & 1)) continue;
    CandidateUnion c;
    c.mask = mask;
    for (std::size_t a = 0; a < at.size(); ++a)
      if (mask >> a & 1) {
        c.atom_ids.push_back(a);
        c.subset.insert(c.subset.end(), at[a].orbitals.begin(), at[a].orbitals.end());
      }
    std::sort(c.subset.begin(), c.subset.end());
    out.push_back(std::move(c));
  }
  return out;
}

// The graph whose adjacency matrix is the sum of the chosen orbital matrices.
inline Graph union_graph(const OrbitalDecomposition& dec, std::span<const std::size_t> subset) {
  if (subset.empty()) throw InputError("empty orbital subset");
  std::vector<bool> in(dec.rank(), false);
  for (std::size_t i : subset) {
    if (i >= dec.rank()) throw InputError("orbital index " + std::to_string(i) + " out of range");
    if (i == 0) throw InputError("the diagonal orbital cannot be part of a graph");
    in[i] = true;
  }
  for (std::size_t i : subset)
    if (!in[dec.orbital(i).paired_index])
      throw InputError("orbital subset is not closed under pairing (orbital " + std::to_string(i) + " lacks " +
                       std::to_string(dec.orbital(i).paired_index) + ")");
  return Graph(dec.union_rows(subset));
}

// '1' for every chosen orbital, orbitals 1..rank-1 left to right.
inline std::string subset_bits(const OrbitalDecomposition& dec, std::span<const std::size_t> subset) {
  std::string bits(dec.rank() - 1, '0');
  for (std::size_t i : subset) bits[i - 1] = '1';
  return bits;
}

struct SearchOptions {
  ClassifyOptions classify;
  EnumerateOptions enumerate;
  std::size_t drg_min_diameter = 3;
  std::optional<std::chrono::milliseconds> time_budget;  // per candidate
  std::string export_dir;                                 // empty: no export
  unsigned threads = 1;
};

struct CandidateResult {
  CandidateUnion candidate;
  std::string bits;
  std::size_t degree = 0;
  Classification classification;
  std::optional<std::size_t> complement;  // index of the complementary candidate, if enumerated
  std::string exported;                   // file written, if any
};

struct SearchReport {
  std::string group_name;
  std::size_t degree = 0;
  BigInt order;
  std::size_t rank = 0;
  std::vector<std::size_t> valencies;
  std::vector<std::vector<std::size_t>> pairing;
  Metadata metadata;
  std::vector<Atom> atoms;
  bool halves = false;
  bool sampled = false;
  std::size_t drg_min_diameter = 3;
  std::vector<CandidateResult> candidates;

  std::map<SrgParams, std::vector<std::size_t>> srgs;             // params -> candidates
  std::map<IntersectionArray, std::vector<std::size_t>> drgs;     // arrays with d >= drg_min_diameter
  std::vector<std::pair<std::size_t, std::size_t>> complement_pairs;
};

inline SearchReport run_search(const PermutationGroup& group, const SearchOptions& opt = {}) {
  OrbitalDecomposition dec(group);
  SearchReport rep;
  rep.group_name = group.name();
  rep.degree = dec.degree();
  rep.order = dec.group_order();
  rep.rank = dec.rank();
  rep.valencies = dec.valencies();
  rep.pairing = pairing_cycles(dec);
  rep.metadata = group.metadata();
  rep.atoms = atoms(dec);
  rep.halves = opt.enumerate.halves;
  rep.sampled = opt.classify.check.sample_stride > 1;
  rep.drg_min_diameter = opt.drg_min_diameter;

  const auto cands = enumerate(dec, opt.enumerate);
  rep.candidates.resize(cands.size());
  const unsigned threads = std::max(1u, opt.threads);
  const bool outer = threads > 1 && cands.size() >= threads;
  ClassifyOptions inner = opt.classify;
  inner.check.threads = outer ? 1 : threads;

  parallel_for(cands.size(), outer ? threads : 1, [&](std::size_t idx) {
    CandidateResult& r = rep.candidates[idx];
    r.candidate = cands[idx];
    r.bits = subset_bits(dec, r.candidate.subset);
    for (std::size_t i : r.candidate.subset) r.degree += dec.orbital(i).valency;
    ClassifyOptions local = inner;
    if (opt.time_budget) local.check.deadline = Deadline(*opt.time_budget);
    Graph g = union_graph(dec, r.candidate.subset);
    try {
      r.classification = classify(g, local);
    } catch (const Timeout&) {
      r.classification = Classification{};
      r.classification.kind = Kind::Skipped;
      r.classification.regular = true;
      r.classification.degree = r.degree;
      r.classification.note = "skipped(timeout)";
      return;
    }
    if (!r.classification.regular || r.classification.degree != r.degree)
      throw InconsistencyError("orbital union " + r.bits + " is not regular of the expected degree");
  });

  // Complements, summary and exports run sequentially in enumeration order.
  std::map<std::uint64_t, std::size_t> by_mask;
  for (std::size_t i = 0; i < rep.candidates.size(); ++i) by_mask[rep.candidates[i].candidate.mask] = i;
  const std::uint64_t full = rep.atoms.empty() ? 0 : (std::uint64_t{1} << rep.atoms.size()) - 1;
  for (std::size_t i = 0; i < rep.candidates.size(); ++i) {
    auto& r = rep.candidates[i];
    auto it = by_mask.find(full ^ r.candidate.mask);
    if (it != by_mask.end()) {
      r.complement = it->second;
      if (i < it->second) rep.complement_pairs.emplace_back(i, it->second);
      const auto& other = rep.candidates[it->second];
      if (other.degree != rep.degree - 1 - r.degree) throw InconsistencyError("complement degrees do not add up");
      if (r.classification.srg && other.classification.srg &&
          r.classification.srg->complement() != *other.classification.srg)
        throw InconsistencyError("complementary SRGs " + to_string(*r.classification.srg) + " and " +
                                 to_string(*other.classification.srg) + " violate the complement identities");
    }
    const auto& c = r.classification;
    bool hit = false;
    if (c.srg) {
      rep.srgs[*c.srg].push_back(i);
      hit = true;
    }
    if (c.drg && c.drg->diameter() >= opt.drg_min_diameter) {
      rep.drgs[*c.drg].push_back(i);
      hit = true;
    }
    if (hit && !opt.export_dir.empty()) {
      std::filesystem::create_directories(opt.export_dir);
      auto path = std::filesystem::path(opt.export_dir) / (rep.group_name + "_" + r.bits + ".g6");
      write_text_file(path.string(), to_graph6(union_graph(dec, r.candidate.subset)) + "\n");
      r.exported = path.string();
    }
  }
  return rep;
}

// Candidates grouped by classification and invariants. Equal invariants do
// not imply isomorphic graphs.
struct InvariantGroup {
  std::string key;
  std::vector<std::size_t> members;
};

inline constexpr const char* kDedupDisclaimer =
    "grouped by classification, parameters and distance distribution; equal invariants do not imply isomorphism";

inline std::string invariant_key(const Classification& c) {
  std::string key = to_string(c.kind);
  if (c.kind == Kind::Disconnected) key += " " + std::to_string(c.components);
  key += " deg=" + std::to_string(c.degree);
  if (c.srg) key += " srg" + to_string(*c.srg);
  if (c.drg) key += " array" + to_string(*c.drg);
  if (!c.distance_sizes.empty()) {
    key += " k=[";
    for (std::size_t i = 0; i < c.distance_sizes.size(); ++i) key += (i ? "," : "") + std::to_string(c.distance_sizes[i]);
    key += "]";
  }
  return key;
}

inline std::vector<InvariantGroup> dedup_by_invariants(std::span<const CandidateResult> candidates) {
  std::vector<InvariantGroup> groups;
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    std::string key = invariant_key(candidates[i].classification);
    auto [it, fresh] = index.emplace(key, groups.size());
    if (fresh) groups.push_back({key, {}});
    groups[it->second].members.push_back(i);
  }
  return groups;
}

inline std::vector<InvariantGroup> dedup_by_invariants(const SearchReport& rep) {
  return dedup_by_invariants(rep.candidates);
}

}  // namespace orbitalg

#endif  // ORBITALG_SEARCH_HPP
