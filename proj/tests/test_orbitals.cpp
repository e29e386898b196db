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

#include <gtest/gtest.h>

#include <map>
#include <set>

#include "oracles.hpp"
#include "orbitalg/catalog.hpp"
#include "orbitalg/group_io.hpp"
#include "orbitalg/orbitals.hpp"
#include "test_util.hpp"

namespace orbitalg {
namespace {

// Each orbital's pair set must be exactly one brute-force pair orbit.
void expect_matches_pair_orbits(const OrbitalDecomposition& dec) {
  std::size_t count = 0;
  auto label = oracle::pair_orbits(testutil::to_oracle(dec.group()), &count);
  ASSERT_EQ(dec.rank(), count);
  auto rows = dec.materialize();
  std::map<int, std::size_t> to_orbital;
  const std::size_t n = dec.degree();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      std::size_t found = dec.rank();
      for (std::size_t i = 0; i < dec.rank(); ++i)
        if (rows.rows[i].test(x, y)) {
          ASSERT_EQ(found, dec.rank()) << "pair in two orbitals";
          found = i;
        }
      ASSERT_LT(found, dec.rank());
      auto [it, fresh] = to_orbital.emplace(label[x][y], found);
      ASSERT_EQ(it->second, found);
    }
}

TEST(Decompose, PairsOfFive) {
  OrbitalDecomposition dec(subsets_group(5, 2));
  EXPECT_EQ(dec.rank(), 3u);
  EXPECT_EQ(dec.valencies(), (std::vector<std::size_t>{1, 3, 6}));
  expect_matches_pair_orbits(dec);
  EXPECT_EQ(dec.group_order(), 120);
}

// The valency-3 orbital is the Kneser graph K(5,2), i.e. the Petersen graph.
TEST(Decompose, ValencyThreeOrbitalIsPetersen) {
  OrbitalDecomposition dec(subsets_group(5, 2));
  auto rows = dec.rows(1);
  auto petersen = oracle::subset_graph(5, 2, 0);
  for (std::size_t x = 0; x < 10; ++x)
    for (std::size_t y = 0; y < 10; ++y) EXPECT_EQ(rows.test(x, y), petersen[x][y] == 1);
}

TEST(Decompose, TwoTransitive) {
  OrbitalDecomposition dec(symmetric_group(4));
  EXPECT_EQ(dec.rank(), 2u);
  EXPECT_EQ(dec.valencies(), (std::vector<std::size_t>{1, 3}));
}

TEST(Decompose, DiagonalFirst) {
  for (const auto& g : {subsets_group(6, 3), cyclic_group(7), grid_group(3)}) {
    OrbitalDecomposition dec(g);
    EXPECT_EQ(dec.orbital(0).rep, (std::pair<Point, Point>{0, 0}));
    EXPECT_EQ(dec.orbital(0).valency, 1u);
    auto rows = dec.rows(0);
    for (std::size_t x = 0; x < g.degree(); ++x) {
      EXPECT_TRUE(rows.test(x, x));
      EXPECT_EQ(rows.row(x).count(), 1u);
    }
  }
}

TEST(Decompose, OrderingBySizeThenSmallestMember) {
  for (const auto& g : {subsets_group(7, 3), grid_group(4), dihedral_group(8), testutil::mathieu11()}) {
    OrbitalDecomposition dec(g);
    for (std::size_t i = 2; i < dec.rank(); ++i) {
      const auto& a = dec.orbital(i - 1);
      const auto& b = dec.orbital(i);
      EXPECT_TRUE(a.valency < b.valency || (a.valency == b.valency && a.rep.second < b.rep.second));
    }
  }
}

TEST(Decompose, RejectsIntransitive) {
  EXPECT_THROW(OrbitalDecomposition(PermutationGroup::trivial(3)), InputError);
}

TEST(Decompose, SinglePoint) {
  OrbitalDecomposition dec(cyclic_group(1));
  EXPECT_EQ(dec.rank(), 1u);
  EXPECT_TRUE(verify_axioms(dec).ok());
}

TEST(Decompose, RowPopcountsAndValencySum) {
  for (const auto& g : {subsets_group(7, 3), grid_group(5), dihedral_group(11), cyclic_group(10), testutil::mathieu11()}) {
    OrbitalDecomposition dec(g);
    std::size_t total = 0;
    for (const auto& o : dec.orbitals()) {
      total += o.valency;
      auto rows = dec.rows(o.index);
      for (std::size_t x = 0; x < g.degree(); ++x) EXPECT_EQ(rows.row(x).count(), o.valency);
    }
    EXPECT_EQ(total, g.degree());
    // rank = 1 + number of nontrivial suborbits of the point stabilizer
    auto stab = point_stabilizer(g, 0);
    std::set<std::set<std::uint32_t>> suborbits;
    for (Point p = 1; p < g.degree(); ++p) suborbits.insert(oracle::orbit(testutil::to_oracle(stab), p));
    EXPECT_EQ(dec.rank(), 1 + suborbits.size()) << g.name();
  }
}

TEST(Pairing, CyclicFivePairsUp) {
  OrbitalDecomposition dec(cyclic_group(5));
  EXPECT_EQ(dec.rank(), 5u);
  EXPECT_EQ(pairing(dec), (std::vector<std::size_t>{0, 4, 3, 2, 1}));
  EXPECT_EQ(pairing_cycles(dec), (std::vector<std::vector<std::size_t>>{{0}, {1, 4}, {2, 3}}));
}

TEST(Pairing, PairsOfFiveAllSelfPaired) {
  OrbitalDecomposition dec(subsets_group(5, 2));
  auto p = pairing(dec);
  EXPECT_EQ(p, (std::vector<std::size_t>{0, 1, 2}));
  // Brute force: every orbital is a symmetric relation.
  for (std::size_t i = 0; i < dec.rank(); ++i) {
    auto rows = dec.rows(i);
    for (std::size_t x = 0; x < 10; ++x)
      for (std::size_t y = 0; y < 10; ++y) EXPECT_EQ(rows.test(x, y), rows.test(y, x));
  }
}

TEST(Pairing, InvolutionAndRowTranspose) {
  for (const auto& g : {cyclic_group(9), dihedral_group(9), testutil::mathieu11(), subsets_group(6, 2),
                        parse_group("6\n(1,2,3)(4,5,6)\n(1,4)(2,6)(3,5)")}) {
    OrbitalDecomposition dec(g);
    auto p = pairing(dec);
    EXPECT_EQ(p[0], 0u);
    for (std::size_t i = 0; i < p.size(); ++i) EXPECT_EQ(p[p[i]], i);
    for (std::size_t i = 0; i < dec.rank(); ++i) {
      auto a = dec.rows(i);
      auto b = dec.rows(p[i]);
      EXPECT_EQ(a.transposed(), b);
    }
  }
}

TEST(Decompose, Deterministic) {
  auto g = subsets_group(7, 3);
  OrbitalDecomposition a(g), b(g);
  EXPECT_EQ(a.valencies(), b.valencies());
  EXPECT_EQ(pairing(a), pairing(b));
  auto ra = a.materialize(), rb = b.materialize();
  EXPECT_EQ(ra.rows, rb.rows);
}

TEST(Decompose, UncachedRowsMatchCachedRows) {
  auto g = subsets_group(7, 2);
  OrbitalDecomposition cached(g), direct(g, 0);
  EXPECT_TRUE(cached.caches_rows());
  EXPECT_FALSE(direct.caches_rows());
  for (std::size_t i = 0; i < cached.rank(); ++i) EXPECT_EQ(cached.rows(i), direct.rows(i));
  const std::size_t subset[] = {1, 2};
  EXPECT_EQ(cached.union_rows(subset), direct.union_rows(subset));
}

TEST(Axioms, PairsOfFivePass) {
  auto rep = verify_axioms(OrbitalDecomposition(subsets_group(5, 2)));
  EXPECT_TRUE(rep.ok());
  EXPECT_TRUE(rep.identity && rep.partition && rep.transpose);
  ASSERT_TRUE(rep.counts.has_value());
  EXPECT_TRUE(*rep.counts);
  EXPECT_FALSE(rep.violation);
}

TEST(Axioms, FlippedBitBreaksPartition) {
  auto rows = OrbitalDecomposition(subsets_group(5, 2)).materialize();
  // (3, 7) belongs to exactly one orbital; toggle it in orbital 1.
  rows.rows[1].flip(3, 7);
  auto rep = verify_axioms(rows);
  EXPECT_FALSE(rep.ok());
  EXPECT_FALSE(rep.partition);
  ASSERT_TRUE(rep.violation);
  EXPECT_EQ(rep.violation->axiom, 2);
  EXPECT_EQ(rep.violation->x, 3u);
  EXPECT_EQ(rep.violation->y, 7u);
}

TEST(Axioms, BrokenIdentityAndPairing) {
  auto rows = OrbitalDecomposition(cyclic_group(5)).materialize();
  auto bad_identity = rows;
  bad_identity.rows[0].reset(2, 2);
  bad_identity.rows[1].set(2, 2);
  auto rep = verify_axioms(bad_identity);
  EXPECT_FALSE(rep.identity);
  EXPECT_EQ(rep.violation->axiom, 1);

  auto bad_pairing = rows;
  bad_pairing.pairing = {0, 1, 2, 3, 4};
  rep = verify_axioms(bad_pairing);
  EXPECT_FALSE(rep.transpose);
  EXPECT_EQ(rep.violation->axiom, 3);
}

// Swapping two pairs between orbitals keeps (i)-(iii) but breaks constant counts.
TEST(Axioms, NonConstantCountsDetected) {
  auto rows = OrbitalDecomposition(subsets_group(5, 2)).materialize();
  auto& petersen = rows.rows[1];
  auto& johnson = rows.rows[2];
  std::size_t x = 0, y = 0, z = 0;
  petersen.row(0).for_each([&](std::size_t c) { if (!y) y = c; });
  johnson.row(0).for_each([&](std::size_t c) { if (!z) z = c; });
  // Move edge {x,y} to the valency-6 relation and {x,z} to the valency-3 one.
  for (auto [a, b] : {std::pair{x, y}, std::pair{y, x}}) { petersen.reset(a, b); johnson.set(a, b); }
  for (auto [a, b] : {std::pair{x, z}, std::pair{z, x}}) { johnson.reset(a, b); petersen.set(a, b); }
  auto rep = verify_axioms(rows);
  EXPECT_TRUE(rep.identity);
  EXPECT_TRUE(rep.partition);
  EXPECT_TRUE(rep.transpose);
  ASSERT_TRUE(rep.counts.has_value());
  EXPECT_FALSE(*rep.counts);
  EXPECT_EQ(rep.violation->axiom, 4);
}

TEST(Axioms, AboveCapSamplesTransposeAndSkipsCounts) {
  AxiomOptions opt;
  opt.exhaustive_cap = 20;
  opt.samples = 5000;
  auto rep = verify_axioms(OrbitalDecomposition(subsets_group(9, 2)), opt);
  EXPECT_TRUE(rep.ok());
  EXPECT_TRUE(rep.transpose_sampled);
  EXPECT_FALSE(rep.counts.has_value());
}

TEST(FromOrbitals, RelationCounts) {
  auto cfg = from_orbitals(OrbitalDecomposition(subsets_group(5, 2)));
  EXPECT_EQ(cfg.n(), 10u);
  EXPECT_EQ(cfg.relations(), 3u);
  auto cfg4 = from_orbitals(OrbitalDecomposition(symmetric_group(4)));
  EXPECT_EQ(cfg4.n(), 4u);
  EXPECT_EQ(cfg4.relations(), 2u);
  EXPECT_THROW(from_orbitals(OrbitalDecomposition(subsets_group(5, 2)), 9), InputError);
}

}  // namespace
}  // namespace orbitalg
