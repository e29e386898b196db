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

#include <random>
#include <string>

#include "oracles.hpp"
#include "orbitalg/catalog.hpp"
#include "orbitalg/group.hpp"
#include "orbitalg/group_io.hpp"
#include "test_util.hpp"

namespace orbitalg {
namespace {

TEST(ParseGroup, CyclesWithUnlistedFixedPoints) {
  auto g = parse_group("10\n(1,2,3,4,5)(6,7)\n(1,2)");
  EXPECT_EQ(g.degree(), 10u);
  ASSERT_EQ(g.generators().size(), 2u);
  EXPECT_EQ(g.generators()[0](0), 1u);
  EXPECT_EQ(g.generators()[0](4), 0u);
  EXPECT_EQ(g.generators()[0](5), 6u);
  EXPECT_EQ(g.generators()[0](9), 9u);
}

TEST(ParseGroup, Errors) {
  EXPECT_THROW(parse_group("3\n(1,2,2)"), InputError);        // repeated point in cycle
  EXPECT_THROW(parse_group("3\n(1,4)"), InputError);          // out of range
  EXPECT_THROW(parse_group("3\n(1,2"), InputError);           // unterminated
  EXPECT_THROW(parse_group("3\n1,2)"), InputError);           // missing '('
  EXPECT_THROW(parse_group("3\n(1,x)"), InputError);          // not a number
  EXPECT_THROW(parse_group("3\n(1,2)(2,3)"), InputError);     // cycles not disjoint
  EXPECT_THROW(parse_group("3\nperm: 1 1 2"), InputError);    // not a bijection
  EXPECT_THROW(parse_group("3\nperm: 1 2"), InputError);      // wrong length
  EXPECT_THROW(parse_group("3\n"), InputError);               // zero generators
  EXPECT_THROW(parse_group("# only a comment\n"), InputError);
  EXPECT_THROW(parse_group("0\n()"), InputError);
  EXPECT_THROW(parse_group("1048577\n()"), InputError);       // degree cap
}

TEST(ParseGroup, ErrorNamesTheLine) {
  try {
    parse_group("4\n(1,2)\n\n(3,9)\n");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos) << e.what();
  }
}

TEST(ParseGroup, ImageListsCommentsMetadataAndCrlf) {
  auto g = parse_group("# name: tiny\r\n# primitive: yes\r\n# free text comment\r\n4\r\n\r\nperm: 2 1 3 4\r\n(1, 3 ,4)\r\n");
  EXPECT_EQ(g.degree(), 4u);
  ASSERT_EQ(g.generators().size(), 2u);
  EXPECT_EQ(g.generators()[0], Permutation::from_cycles(4, {{0, 1}}));
  EXPECT_EQ(g.generators()[1], Permutation::from_cycles(4, {{0, 2, 3}}));
  EXPECT_EQ(g.name(), "tiny");
  EXPECT_EQ(g.metadata().at("primitive"), "yes");
}

TEST(ParseGroup, BackslashContinuation) {
  auto g = parse_group("6\n(1,2,3)\\\n(4,5,6)\n");
  ASSERT_EQ(g.generators().size(), 1u);
  EXPECT_EQ(g.generators()[0], Permutation::from_cycles(6, {{0, 1, 2}, {3, 4, 5}}));
}

TEST(ParseGroup, IdentityGenerator) {
  auto g = parse_group("5\n()");
  EXPECT_TRUE(g.generators()[0].is_identity());
}

TEST(ParseGroup, PrintParseRoundTrip) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 1 + rng() % 50;
    std::vector<Permutation> gens;
    for (int k = 0; k < 1 + t % 4; ++k) gens.push_back(testutil::random_perm(n, rng));
    PermutationGroup g(n, gens, {{"name", "r" + std::to_string(t)}});
    auto h = parse_group(format_group(g));
    ASSERT_EQ(h.degree(), g.degree());
    ASSERT_EQ(h.generators().size(), g.generators().size());
    for (std::size_t i = 0; i < gens.size(); ++i) EXPECT_EQ(h.generators()[i], g.generators()[i]);
    EXPECT_EQ(h.name(), g.name());
  }
}

TEST(Orbit, IdentityGroup) {
  auto g = PermutationGroup::trivial(5);
  auto o = orbit(g, 0);
  EXPECT_EQ(o.size(), 1u);
  EXPECT_EQ(o.points()[0], 0u);
}

TEST(Orbit, PairsOfFiveMatchesClosureAndTransversals) {
  auto g = subsets_group(5, 2);
  for (Point p = 0; p < 10; ++p) {
    auto o = orbit(g, p);
    auto expect = oracle::orbit(testutil::to_oracle(g), p);
    EXPECT_EQ(o.size(), expect.size());
    EXPECT_EQ(o.size(), 10u);
    for (Point x : o.points()) EXPECT_EQ(o.transversal(x)(p), x);
  }
}

TEST(Transitivity, Examples) {
  EXPECT_FALSE(is_transitive(PermutationGroup::trivial(2)));
  EXPECT_TRUE(is_transitive(PermutationGroup::trivial(1)));
  EXPECT_TRUE(is_transitive(subsets_group(5, 2)));
  EXPECT_FALSE(is_transitive(parse_group("4\n(1,2)(3,4)")));
}

TEST(Order, SmallCases) {
  EXPECT_EQ(order(PermutationGroup::trivial(7)), 1);
  auto s52 = subsets_group(5, 2);
  EXPECT_EQ(order(s52), 120);
  EXPECT_EQ(oracle::elements(testutil::to_oracle(s52)).size(), 120u);
}

TEST(Order, KnownFactorials) {
  EXPECT_EQ(order(symmetric_group(12)), BigInt(479001600));
  BigInt f = 1;
  for (int i = 2; i <= 30; ++i) f *= i;
  EXPECT_EQ(order(symmetric_group(30)), f);
  EXPECT_EQ(order(subsets_group(10, 3)), BigInt(3628800));
}

// M11 and M24 from their standard generators; M11 is also counted by brute force.
TEST(Order, MathieuGroups) {
  auto m11 = testutil::mathieu11();
  EXPECT_EQ(oracle::elements(testutil::to_oracle(m11)).size(), 7920u);
  EXPECT_EQ(order(m11), 7920);

  auto m24 = parse_group(
      "24\n"
      "(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23)\n"
      "(3,17,10,7,9)(4,13,14,19,5)(8,18,11,12,23)(15,20,22,21,16)\n"
      "(1,24)(2,23)(3,12)(4,16)(5,18)(6,10)(7,20)(8,14)(9,21)(11,17)(13,22)(15,19)\n");
  EXPECT_EQ(order(m24), BigInt(244823040));
}

TEST(StabilizerChain, MembershipAcceptsGroupRejectsOutsiders) {
  for (const auto& g : {subsets_group(5, 2), cyclic_group(6), dihedral_group(7), testutil::mathieu11(), grid_group(3)}) {
    const auto& chain = g.chain();
    EXPECT_TRUE(chain.contains(Permutation::identity(g.degree())));
    for (const auto& s : g.generators()) {
      EXPECT_TRUE(chain.contains(s));
      EXPECT_TRUE(chain.contains(s.inverse()));
      EXPECT_TRUE(chain.contains(s * s * s.inverse() * g.generators().back()));
    }
    // The transposition (1,2) of the points lies in none of these groups.
    EXPECT_FALSE(chain.contains(Permutation::from_cycles(g.degree(), {{0, 1}}))) << g.name();
  }
  EXPECT_TRUE(symmetric_group(6).chain().contains(Permutation::from_cycles(6, {{0, 1}})));
}

TEST(StabilizerChain, LevelZeroOrbitOfTransitiveGroupIsEverything) {
  for (const auto& g : {subsets_group(6, 3), grid_group(4), dihedral_group(9)}) {
    EXPECT_EQ(g.chain().level(0).tree.orbit().size(), g.degree());
  }
}

TEST(StabilizerChain, DeterministicBase) {
  auto g = testutil::mathieu11();
  EXPECT_EQ(g.chain().base(), g.chain_with_base({}).base());
  EXPECT_EQ(g.chain().base().front(), 0u);
}

TEST(PointStabilizer, IdentityGroupIsItself) {
  auto s = point_stabilizer(PermutationGroup::trivial(4), 2);
  EXPECT_EQ(order(s), 1);
  EXPECT_EQ(s.degree(), 4u);
}

TEST(PointStabilizer, PairsOfFiveHasOrderTwelve) {
  auto g = subsets_group(5, 2);
  auto s = point_stabilizer(g, 0);
  EXPECT_EQ(order(s), 12);
  // Brute force: elements of G fixing the point.
  std::size_t fixing = 0;
  for (const auto& e : oracle::elements(testutil::to_oracle(g))) fixing += e[0] == 0;
  EXPECT_EQ(fixing, 12u);
  for (const auto& gen : s.generators()) EXPECT_EQ(gen(0), 0u);
}

// Chain orbit lengths multiply to the brute-force element count, and
// |orbit| * |stabilizer| = |G| at every point.
TEST(StabilizerChain, CatalogGroupsAgainstBruteForce) {
  std::vector<PermutationGroup> groups = {symmetric_group(5), symmetric_group(7), subsets_group(5, 2),
                                          subsets_group(6, 2), subsets_group(6, 3), cyclic_group(1),
                                          cyclic_group(12), dihedral_group(3), dihedral_group(10),
                                          grid_group(2), grid_group(3), testutil::mathieu11()};
  for (const auto& g : groups) {
    const auto brute = oracle::elements(testutil::to_oracle(g)).size();
    ASSERT_LE(brute, 10000u);
    BigInt product = 1;
    for (std::size_t l = 0; l < g.chain().depth(); ++l) product *= g.chain().level(l).tree.orbit().size();
    EXPECT_EQ(product, BigInt(brute)) << g.name();
    EXPECT_EQ(order(g), BigInt(brute)) << g.name();
    for (Point p = 0; p < g.degree(); ++p)
      EXPECT_EQ(BigInt(orbit(g, p).size()) * order(point_stabilizer(g, p)), order(g)) << g.name() << " at " << p;
  }
}

TEST(StabilizerChain, IntransitiveGroupOrbitStabilizer) {
  auto g = parse_group("7\n(1,2,3)\n(1,2)\n(4,5,6,7)\n");
  EXPECT_EQ(order(g), 24);
  for (Point p = 0; p < 7; ++p)
    EXPECT_EQ(BigInt(orbit(g, p).size()) * order(point_stabilizer(g, p)), order(g));
}

// Large symmetric and alternating groups take the giant shortcut; their
// chains must still sift every element correctly.
TEST(GiantGroups, OrdersAndMembership) {
  std::mt19937_64 rng(11);
  for (std::size_t n : {8, 9, 13, 40, 200}) {
    BigInt f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= i;
    auto sn = symmetric_group(n);
    EXPECT_EQ(order(sn), f);
    std::vector<Point> cyc(n), cyc1(n - 1);
    for (std::size_t i = 0; i < n; ++i) cyc[i] = static_cast<Point>(i);
    for (std::size_t i = 1; i < n; ++i) cyc1[i - 1] = static_cast<Point>(i);
    PermutationGroup an(n, {Permutation::from_cycles(n, {{0, 1, 2}}), Permutation::from_cycles(n, {n % 2 ? cyc : cyc1})});
    EXPECT_EQ(order(an), f / 2);
    for (int trial = 0; trial < 20; ++trial) {
      Permutation p = testutil::random_perm(n, rng);
      EXPECT_TRUE(sn.chain().contains(p));
      EXPECT_EQ(an.chain().contains(p), !detail::is_odd(p));
    }
    EXPECT_EQ(order(point_stabilizer(sn, 3)), f / n);
    const Point prefix[] = {5, 5, 0};
    auto chain = sn.chain_with_base(prefix);
    EXPECT_EQ(chain.base()[0], 5u);
    EXPECT_EQ(chain.level(1).tree.orbit().size(), 1u);
    EXPECT_EQ(chain.order(), f);
    EXPECT_TRUE(chain.contains(testutil::random_perm(n, rng)));
  }
}

TEST(GiantGroups, OnlyOnPartOfTheDomain) {
  // Sym(9) on points 3..11 of 12.
  std::vector<Point> c;
  for (Point x = 3; x < 12; ++x) c.push_back(x);
  PermutationGroup g(12, {Permutation::from_cycles(12, {{3, 4}}), Permutation::from_cycles(12, {c})});
  EXPECT_EQ(order(g), 362880);
  EXPECT_FALSE(g.chain().contains(Permutation::from_cycles(12, {{0, 3}})));
  EXPECT_TRUE(g.chain().contains(Permutation::from_cycles(12, {{5, 11}})));
}

// Groups with prime cycles that are not giants must not be mistaken for one.
TEST(GiantGroups, LookalikesUseTheGeneralAlgorithm) {
  // Imprimitive: Sym(2) wr Sym(4) contains a transposition.
  auto wr = parse_group("8\n(1,2)\n(1,3,5,7)(2,4,6,8)\n(1,3)(2,4)\n");
  EXPECT_EQ(order(wr), 384);
  EXPECT_EQ(oracle::elements(testutil::to_oracle(wr)).size(), 384u);
  // PGL(2,7) on the projective line is 3-transitive with a 7-cycle, but 7 > 8 - 3.
  auto pgl = parse_group("8\n(1,2,3,4,5,6,7)\n(2,4,3,7,5,6)\n(1,8)(2,7)(3,4)(5,6)\n");
  EXPECT_EQ(oracle::elements(testutil::to_oracle(pgl)).size(), static_cast<std::size_t>(order(pgl)));
  EXPECT_EQ(order(pgl), 336);
  // Same Sym(9) given by generators without a lone prime cycle.
  auto s9 = parse_group("9\n(1,2,3,4,5,6,7,8,9)\n(1,2,3,4)\n");
  EXPECT_FALSE(detail::recognize_giant(9, s9.generators()));
  EXPECT_EQ(order(s9), order(symmetric_group(9)));
}

}  // namespace
}  // namespace orbitalg
