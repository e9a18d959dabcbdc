#include <gtest/gtest.h>

#include "polycirc/circuits.hpp"
#include "polycirc/constructions.hpp"
#include "polycirc/errors.hpp"
#include "polycirc/polyhedron.hpp"
#include "support.hpp"

using namespace polycirc;
using testing_support::lines;
using testing_support::to_polyhedron;
using testing_support::vec;

TEST(Circuits, MatchRankCharacterizationOracle) {
  oracle::Generator g(41);
  int checked = 0;
  for (int t = 0; t < 250; ++t) {
    const auto n = static_cast<std::size_t>(g.draw(2, 5));
    const auto s = g.random_system(n, static_cast<std::size_t>(g.draw(1, 8)), t % 4 == 0 ? 1 : 0);
    const auto p = to_polyhedron(s);
    if (!is_pointed(p)) continue;
    ++checked;
    EXPECT_EQ(lines(enumerate_circuits(p)), lines(oracle::circuits(s))) << "instance " << t;
  }
  EXPECT_GT(checked, 120);
}

TEST(Circuits, FastEnumerationEqualsBruteForce) {
  oracle::Generator g(42);
  for (int t = 0; t < 120; ++t) {
    const auto n = static_cast<std::size_t>(g.draw(2, 6));
    const auto p = to_polyhedron(g.random_system(n, static_cast<std::size_t>(g.draw(n, n + 4)), t % 3 == 0 ? 2 : 0));
    if (!is_pointed(p)) continue;
    EXPECT_EQ(enumerate_circuits(p), enumerate_circuits_bruteforce(p));
  }
}

TEST(Circuits, SupportMinimalityHoldsPairwise) {
  const auto p = cross_polytope(3);
  const auto c = enumerate_circuits(p);
  auto support = [&](const RatVector& g) {
    std::set<std::size_t> s;
    for (std::size_t i = 0; i < p.B.rows(); ++i)
      if (dot(p.B.row(i), g) != 0) s.insert(i);
    return s;
  };
  for (const auto& a : c)
    for (const auto& b : c) {
      if (a == b) continue;
      const auto sa = support(a), sb = support(b);
      EXPECT_FALSE(std::includes(sa.begin(), sa.end(), sb.begin(), sb.end()) && sa != sb);
    }
}

TEST(Circuits, KnownExamples) {
  EXPECT_EQ(enumerate_circuits(hypercube(3)).size(), 3u);
  EXPECT_EQ(enumerate_circuits(simplex(3)).size(), 6u);
  // The cone pi_{3,4}(R^4_+): x >= 0, x1 + x2 - x3 >= 0.
  HPolyhedron r3(3, "r3cone");
  for (std::size_t i = 0; i < 3; ++i) r3.add_lower(unit_vector(3, i), 0);
  r3.add_lower(vec({1, 1, -1}), 0);
  const auto c = enumerate_circuits(r3);
  EXPECT_EQ(c.size(), 6u);
  EXPECT_TRUE(c.contains(vec({0, 0, 1})));
  EXPECT_TRUE(c.contains(vec({1, -1, 0})));
  EXPECT_TRUE(c.contains(vec({-1, 1, 0})));
}

TEST(Circuits, NonPointedGivesLineality) {
  HPolyhedron p(3);
  p.add_inequality(vec({1, 0, 0}), 1);
  p.add_equality(vec({0, 1, 0}), 0);
  const auto c = enumerate_circuits(p);
  EXPECT_EQ(c.kind(), CircuitKind::Lineality);
  ASSERT_EQ(c.lineality_basis().size(), 1u);
  EXPECT_TRUE(parallel(c.lineality_basis()[0], vec({0, 0, 1})));
}

TEST(Circuits, BudgetExceeded) { EXPECT_THROW(enumerate_circuits(cross_polytope(5), 10), BudgetExceeded); }

TEST(CircuitSet, NormalizationAndAlgebra) {
  CircuitSet a(2), b(2);
  a.insert(RatVector{Rational(1, 2), Rational(-1, 2)});
  EXPECT_TRUE(a.contains(vec({-3, 3})));
  EXPECT_FALSE(a.insert(vec({2, -2})));
  a.insert(vec({1, 0}));
  b.insert(vec({0, 5}));
  b.insert(vec({-1, 0}));
  EXPECT_EQ(a.intersect(b).size(), 1u);
  EXPECT_EQ(a.minus(b).size(), 1u);
  EXPECT_EQ(a.unite(b).size(), 3u);
  EXPECT_TRUE(a.intersect(b).subset_of(a));
  EXPECT_THROW(a.insert(vec({0, 0})), InvalidArgument);
}

TEST(CircuitSet, ApplyMapDropsZeros) {
  CircuitSet c(3);
  c.insert(vec({1, 0, 0}));
  c.insert(vec({0, 1, 0}));
  c.insert(vec({0, 0, 1}));
  const LinearMap pi{RatMatrix{{1, 1, 0}, {0, 0, 0}}};
  const auto img = apply_map(pi, c);
  EXPECT_EQ(img.size(), 1u);
  EXPECT_TRUE(img.contains(vec({1, 0})));
}

TEST(BasicSolutions, MatchOracle) {
  oracle::Generator g(43);
  for (int t = 0; t < 120; ++t) {
    const auto n = static_cast<std::size_t>(g.draw(2, 4));
    const auto s = g.random_system(n, static_cast<std::size_t>(g.draw(n, n + 3)), t % 4 == 0 ? 1 : 0);
    const auto p = to_polyhedron(s);
    if (!is_pointed(p)) continue;
    EXPECT_EQ(basic_solutions(p).points, oracle::basic_solutions(s)) << "instance " << t;
  }
}

TEST(BasicSolutions, CubeHasOnlyItsVertices) {
  EXPECT_EQ(basic_solutions(hypercube(3)).points.size(), 8u);
  // The simplex x >= 0, x1 + x2 <= 1 has 3 basic solutions, all feasible.
  EXPECT_EQ(basic_solutions(simplex(2)).points.size(), 3u);
}

TEST(Homogenization, CircuitClassesSplitByT) {
  oracle::Generator g(44);
  for (int t = 0; t < 60; ++t) {
    const auto n = static_cast<std::size_t>(g.draw(2, 3));
    const auto s = g.random_system(n, static_cast<std::size_t>(g.draw(n, n + 3)), 0);
    const auto p = to_polyhedron(s);
    if (!is_pointed(p)) continue;
    const auto h = circuits_of_homogenization(p);
    EXPECT_EQ(lines(h.gamma0), lines(oracle::circuits(s)));
    EXPECT_EQ(h.gamma1.points, oracle::basic_solutions(s));
    EXPECT_EQ(h.all.size(), h.gamma0.size() + h.gamma1.points.size());
  }
}

TEST(EdgeDirections, KnownPolytopes) {
  const auto cube = edge_directions(hypercube(3));
  EXPECT_EQ(cube.size(), 3u);
  const auto cross = edge_directions(cross_polytope(3));
  EXPECT_EQ(cross.size(), 6u);
  EXPECT_FALSE(cross.contains(vec({1, 0, 0})));
  EXPECT_TRUE(cross.contains(vec({1, 1, 0})));
  EXPECT_TRUE(is_edge_direction(vec({1, -1, 0}), cross_polytope(3)));
  EXPECT_FALSE(is_edge_direction(vec({0, 0, 1}), cross_polytope(3)));
  const auto cone = edge_directions(orthant(3));
  EXPECT_EQ(cone.size(), 3u);
}

TEST(EdgeDirections, AreCircuitsOfMinimalDescriptions) {
  oracle::Generator g(45);
  for (int t = 0; t < 60; ++t) {
    const auto s = g.random_system(3, static_cast<std::size_t>(g.draw(4, 7)), 0);
    const auto p = to_polyhedron(s);
    if (!is_pointed(p)) continue;
    EXPECT_TRUE(edge_directions(p).subset_of(enumerate_circuits(minimize_description(p))));
  }
}
