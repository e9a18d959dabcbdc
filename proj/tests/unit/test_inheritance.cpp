#include <gtest/gtest.h>

#include "polycirc/errors.hpp"
#include "polycirc/inheritance.hpp"
#include "polycirc/polyhedron.hpp"
#include "polycirc/random_instances.hpp"
#include "support.hpp"

using namespace polycirc;
using testing_support::lines;
using testing_support::to_system;
using testing_support::vec;

TEST(CheckInheritance, OrthantUnderPiHasTwoWitnesses) {
  const auto r = check_inheritance(orthant(4), pi_matrix(3, 4));
  EXPECT_EQ(r.verdict, Verdict::NotAllInherited);
  EXPECT_TRUE(r.non_inherited.contains(vec({0, 0, 1})));
  EXPECT_TRUE(r.non_inherited.contains(vec({1, -1, 0})));
  EXPECT_EQ(r.non_inherited.size(), 2u);
  EXPECT_TRUE(r.inherited_equals_edges);
  EXPECT_EQ(r.P.B.rows(), 4u);
}

TEST(CheckInheritance, ReportIsConsistentWithOracleCircuits) {
  const auto r = check_inheritance(hypercube(4), pi_matrix(3, 4));
  // C(P) from an independent enumeration on the reported description.
  EXPECT_EQ(lines(r.P_circuits), lines(oracle::circuits(to_system(r.P))));
  EXPECT_EQ(r.inherited.unite(r.non_inherited), r.P_circuits);
  EXPECT_TRUE(r.inherited.intersect(r.non_inherited).empty());
  EXPECT_TRUE(r.inherited.subset_of(r.projected));
}

TEST(CheckInheritance, ModifiedSimplexProjectionInheritsEverything) {
  const auto r = check_inheritance(simplex(6), pi_prime_matrix(3, 6));
  EXPECT_EQ(r.verdict, Verdict::AllInherited);
  EXPECT_EQ(r.P.B.rows(), 6u);
  EXPECT_TRUE(r.P_circuits.contains(vec({0, 0, 1})));
  EXPECT_FALSE(r.edge_dirs.contains(vec({0, 0, 1})));
}

TEST(CheckInheritance, InvertibleMapInheritsEverything) {
  InstanceGenerator gen(7);
  for (int t = 0; t < 20; ++t) {
    const auto q = minimize_description(gen.pointed_polyhedron(3, 3, t % 2 == 0));
    const auto pi = gen.map_of_rank(3, 3, 3);
    EXPECT_EQ(check_inheritance(q, pi).verdict, Verdict::AllInherited);
  }
}

TEST(CheckInheritance, GivenDescriptionMustMatchImage) {
  EXPECT_THROW(check_inheritance(hypercube(4), pi_matrix(3, 4), hypercube(3)), ProjectionMismatch);
  const auto p = minimize_description(project(hypercube(4), pi_matrix(3, 4)));
  EXPECT_EQ(check_inheritance(hypercube(4), pi_matrix(3, 4), p).verdict, Verdict::NotAllInherited);
}

TEST(CheckInheritance, NonPointedInputIsRejected) {
  HPolyhedron q(2);
  q.add_inequality(vec({1, 0}), 1);
  EXPECT_THROW(check_inheritance(q, LinearMap{RatMatrix::identity(2)}), NotPointed);
}

TEST(CheckInheritance, SummaryListsVerdictAndWitnesses) {
  const auto s = summarize(check_inheritance(orthant(4), pi_matrix(3, 4)));
  EXPECT_NE(s.find("not all circuits inherited"), std::string::npos);
  EXPECT_NE(s.find("non-inherited (2): (0,0,1) (1,-1,0)"), std::string::npos);
}

TEST(Laws, CartesianProduct) {
  InstanceGenerator gen(101);
  for (int t = 0; t < 25; ++t)
    EXPECT_TRUE(verify_cartesian_law(gen.pointed_polyhedron(2, 1, true), gen.pointed_polyhedron(1, 1, true)));
}

TEST(Laws, SlackAndHomogenization) {
  InstanceGenerator gen(102);
  for (int t = 0; t < 25; ++t) {
    const auto p = minimize_description(gen.pointed_polyhedron(3, 2, t % 2 == 0, t % 3 == 0));
    EXPECT_TRUE(verify_slack_law(p));
    EXPECT_TRUE(verify_hom_law(p));
  }
}

TEST(Laws, EdgeInheritanceAndIsomorphism) {
  InstanceGenerator gen(103);
  for (int t = 0; t < 15; ++t) {
    const auto q = gen.pointed_polyhedron(4, 2, true);
    EXPECT_TRUE(verify_edge_inheritance(q, gen.map_of_rank(3, 4, 3)));
    EXPECT_TRUE(verify_isomorphism_law(q, gen.map_of_rank(5, 4, 4)));
  }
  EXPECT_THROW(verify_isomorphism_law(hypercube(4), pi_matrix(3, 4)), NotInjectiveOnQ);
}

TEST(Laws, LowDimensionalImagesInheritEverything) {
  InstanceGenerator gen(104);
  for (int t = 0; t < 15; ++t) {
    const auto q = gen.pointed_polyhedron(4, 3, true);
    EXPECT_EQ(check_inheritance(q, gen.map_of_rank(2, 4, 2)).verdict, Verdict::AllInherited);
  }
}

TEST(Generator, DeterministicAndWellFormed) {
  InstanceGenerator a(5), b(5);
  for (int t = 0; t < 10; ++t) {
    const auto p = a.pointed_polyhedron(3, 2, true, true);
    EXPECT_EQ(p, b.pointed_polyhedron(3, 2, true, true));
    EXPECT_TRUE(is_pointed(p));
    EXPECT_TRUE(p.contains(RatVector(3)));
  }
  // Bounded requests with no extra rows still terminate.
  EXPECT_NO_THROW(a.pointed_polyhedron(2, 0, true));
  EXPECT_EQ(rank(a.map_of_rank(4, 5, 2).matrix), 2u);
}
