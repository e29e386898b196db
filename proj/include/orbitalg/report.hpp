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

#ifndef ORBITALG_REPORT_HPP
#define ORBITALG_REPORT_HPP

#include <cstdint>
#include <limits>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>

#include "orbitalg/graph.hpp"
#include "orbitalg/group.hpp"
#include "orbitalg/orbitals.hpp"
#include "orbitalg/scheme.hpp"
#include "orbitalg/search.hpp"

namespace orbitalg {

using Json = nlohmann::ordered_json;

// Orders that fit in 64 bits are emitted as numbers, larger ones as strings.
inline Json big_json(const BigInt& v) {
  if (v <= std::numeric_limits<std::uint64_t>::max()) return Json(v.convert_to<std::uint64_t>());
  return Json(v.str());
}

inline Json to_json(const SrgParams& p) {
  return Json{{"v", p.v}, {"k", p.k}, {"lambda", p.lambda}, {"mu", p.mu}};
}

inline Json to_json(const IntersectionArray& a, const std::vector<std::uint64_t>& ki) {
  return Json{{"b", a.b}, {"c", a.c}, {"d", a.diameter()}, {"ki", ki}};
}

inline Json to_json(const DesignParams& p) { return Json{{"v", p.v}, {"k", p.k}, {"lambda", p.lambda}}; }

inline Json to_json(const Classification& c, const std::optional<DesignParams>& design = std::nullopt) {
  Json j{{"regular", c.regular}, {"degree", c.degree}, {"connected", c.connected}, {"components", c.components},
         {"kind", to_string(c.kind)}};
  if (!c.note.empty()) j["note"] = c.note;
  if (c.srg) j["srg"] = to_json(*c.srg);
  if (c.drg) j["drg"] = to_json(*c.drg, c.distance_sizes);
  if (design) j["design"] = to_json(*design);
  return j;
}

inline Json orbitals_json(const OrbitalDecomposition& dec) {
  Json j;
  j["group"] = dec.group().name();
  j["degree"] = dec.degree();
  j["order"] = big_json(dec.group_order());
  j["rank"] = dec.rank();
  j["valencies"] = dec.valencies();
  j["pairing"] = pairing_cycles(dec);
  Json reps = Json::array();
  for (const auto& o : dec.orbitals())
    reps.push_back(Json{{"index", o.index},
                        {"rep", {o.rep.first + 1, o.rep.second + 1}},
                        {"valency", o.valency},
                        {"paired_index", o.paired_index}});
  j["orbitals"] = reps;
  auto prim = dec.group().metadata().find("primitive");
  if (prim != dec.group().metadata().end()) j["primitive"] = prim->second;
  return j;
}

inline Json tensor_json(const IntersectionTensor& t) {
  Json p = Json::array();
  for (std::size_t k = 0; k < t.relations(); ++k) {
    Json mk = Json::array();
    for (std::size_t i = 0; i < t.relations(); ++i) {
      Json row = Json::array();
      for (std::size_t j = 0; j < t.relations(); ++j) row.push_back(t(k, i, j));
      mk.push_back(row);
    }
    p.push_back(mk);
  }
  return p;
}

inline Json search_json(const SearchReport& rep) {
  Json j;
  Json group{{"name", rep.group_name},
             {"degree", rep.degree},
             {"order", big_json(rep.order)},
             {"rank", rep.rank},
             {"valencies", rep.valencies},
             {"pairing", rep.pairing}};
  if (!rep.metadata.empty()) {
    Json meta = Json::object();
    for (const auto& [k, v] : rep.metadata) meta[k] = v;
    group["metadata"] = meta;
  }
  j["group"] = group;
  j["options"] = Json{{"halves", rep.halves}, {"sampled", rep.sampled}, {"drg_min_diameter", rep.drg_min_diameter}};
  Json at = Json::array();
  for (const auto& a : rep.atoms) at.push_back(a.orbitals);
  j["atoms"] = at;

  Json cands = Json::array();
  for (std::size_t i = 0; i < rep.candidates.size(); ++i) {
    const auto& r = rep.candidates[i];
    Json c{{"index", i}, {"subset", r.candidate.subset}, {"bits", r.bits}, {"degree", r.degree},
           {"classification", to_json(r.classification)}};
    if (r.complement) c["complement"] = *r.complement;
    if (!r.exported.empty()) c["exported"] = r.exported;
    cands.push_back(c);
  }
  j["candidates"] = cands;

  Json srgs = Json::array();
  for (const auto& [p, idx] : rep.srgs) srgs.push_back(Json{{"params", to_json(p)}, {"candidates", idx}});
  Json drgs = Json::array();
  for (const auto& [a, idx] : rep.drgs) {
    const auto& c = rep.candidates[idx.front()].classification;
    drgs.push_back(Json{{"array", to_json(a, c.distance_sizes)}, {"candidates", idx}});
  }
  Json pairs = Json::array();
  for (auto [a, b] : rep.complement_pairs) pairs.push_back({a, b});
  Json groups = Json::array();
  for (const auto& g : dedup_by_invariants(rep)) groups.push_back(Json{{"key", g.key}, {"candidates", g.members}});
  j["summary"] = Json{{"srg", srgs},
                      {"drg", drgs},
                      {"complement_pairs", pairs},
                      {"invariant_groups", Json{{"disclaimer", kDedupDisclaimer}, {"groups", groups}}}};
  return j;
}

}  // namespace orbitalg

#endif  // ORBITALG_REPORT_HPP
