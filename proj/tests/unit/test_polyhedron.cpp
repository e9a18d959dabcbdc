#include <gtest/gtest.h>

#include "polycirc/constructions.hpp"
#include "polycirc/errors.hpp"
#include "polycirc/polyhedron.hpp"
#include "support.hpp"

using namespace polycirc;
using testing_support::to_polyhedron;
using testing_support::to_system;
using testing_support::vec;

namespace {

std::set<RatVector> as_set(const std::vector<RatVector>& v) { return {v.begin(), v.end()}; }

// Facet count by definition: a row of a full-dimensional polytope is a facet
// iff the vertices on it affinely span a hyperplane; parallel duplicates count once.
std::size_t oracle_facets(const oracle::System& s) {
  const auto verts = oracle::vertices(s);
  std::set<std::set<oracle::Vec>> faces;
  for (std::size_t i = 0; i < s.B.size(); ++i) {
    std::set<oracle::Vec> on;
    for (const auto& v : verts)
      if (oracle::dot(s.B[i], v) == s.d[i]) on.insert(v);
    if (on.empty()) continue;
    oracle::Rows diffs;
    for (const auto& v : on) {
      oracle::Vec w(s.n);
      for (std::size_t j = 0; j < s.n; ++j) w[j] = v[j] - on.begin()->at(j);
      diffs.push_back(w);
    }
    if (oracle::rank(diffs, s.n) + 1 == s.n) faces.insert(on);
  }
  return faces.size();
}

}  // namespace

TEST(VRep, MatchesOracleOnRandomPolytopes) {
  oracle::Generator g(31);
  int polytopes = 0;
  for (int t = 0; t < 120; ++t) {
    const auto n = static_cast<std::size_t>(g.draw(2, 4));
    const auto s = g.random_system(n, n + static_cast<std::size_t>(g.draw(1, 4)), t % 5 == 0 ? 1 : 0);
    const auto p = to_polyhedron(s);
    if (!is_pointed(p)) continue;
    const auto v = vrep(p);
    EXPECT_EQ(as_set(v.vertices), oracle::vertices(s));
    polytopes += v.rays.empty();
    for (const auto& r : v.rays) {
      EXPECT_TRUE(is_zero(matvec(p.A, r)));
      for (std::size_t i = 0; i < p.B.rows(); ++i) EXPECT_LE(dot(p.B.row(i), r), 0);
    }
  }
  EXPECT_GT(polytopes, 20);
}

TEST(VRep, KnownPolytopes) {
  EXPECT_EQ(vrep(hypercube(3)).vertices.size(), 8u);
  EXPECT_EQ(vrep(simplex(4)).vertices.size(), 5u);
  EXPECT_EQ(vrep(cross_polytope(3)).vertices.size(), 6u);
  const auto cone = vrep(orthant(3));
  EXPECT_EQ(cone.vertices, std::vector<RatVector>{vec({0, 0, 0})});
  EXPECT_EQ(as_set(cone.rays), (std::set<RatVector>{vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1})}));
}

TEST(VRep, NonPointedThrows) {
  HPolyhedron p(2);
  p.add_inequality(vec({1, 0}), 1);
  EXPECT_FALSE(is_pointed(p));
  EXPECT_THROW(vrep(p), NotPointed);
  EXPECT_EQ(lineality_basis(p).size(), 1u);
}

TEST(VRep, BudgetIsEnforced) { EXPECT_THROW(vrep(cross_polytope(5), 10), BudgetExceeded); }

TEST(Dimension, ImplicitEqualitiesAreDetected) {
  HPolyhedron p(3);
  p.add_inequality(vec({1, 1, 1}), 1);
  p.add_lower(vec({1, 1, 1}), 1);  // forces x1 + x2 + x3 = 1
  for (std::size_t i = 0; i < 3; ++i) p.add_lower(unit_vector(3, i), 0);
  EXPECT_EQ(dim(p), 2u);
  const auto implicit = implicit_equalities(p);
  EXPECT_EQ(implicit, (std::vector<std::size_t>{0, 1}));
  HPolyhedron empty(1);
  empty.add_inequality(vec({1}), -1);
  empty.add_lower(vec({1}), 0);
  EXPECT_THROW(dim(empty), EmptyPolyhedron);
}

TEST(Minimize, FacetCountMatchesOracle) {
  oracle::Generator g(32);
  int checked = 0;
  for (int t = 0; t < 100; ++t) {
    const auto n = static_cast<std::size_t>(g.draw(2, 3));
    auto s = g.random_system(n, n + static_cast<std::size_t>(g.draw(2, 5)), 0);
    // A duplicated, scaled row must not survive.
    oracle::Vec dup = s.B[0];
    for (auto& x : dup) x *= 2;
    s.B.push_back(dup);
    s.d.push_back(s.d[0] * 2);
    const auto p = to_polyhedron(s);
    if (!is_pointed(p) || !vrep(p).rays.empty()) continue;
    ++checked;
    const auto m = minimize_description(p);
    EXPECT_EQ(m.B.rows(), oracle_facets(s));
    EXPECT_EQ(m.A.rows(), 0u);
    EXPECT_TRUE(same_point_set(m, p));
  }
  EXPECT_GT(checked, 30);
}

TEST(Minimize, KeepsAnIndependentEqualitySet) {
  HPolyhedron p(3);
  p.add_equality(vec({1, 1, 0}), 1);
  p.add_equality(vec({2, 2, 0}), 2);
  p.add_inequality(vec({0, 0, 1}), 1);
  p.add_lower(vec({0, 0, 1}), 1);
  p.add_lower(vec({1, 0, 0}), 0);
  p.add_lower(vec({0, 1, 0}), 0);
  const auto m = minimize_description(p);
  EXPECT_EQ(m.A.rows(), 2u);
  EXPECT_EQ(rank(m.A), 2u);
  EXPECT_EQ(m.B.rows(), 2u);
  EXPECT_TRUE(same_point_set(m, p));
  EXPECT_EQ(dim(m), 1u);
}

TEST(Project, ImageVerticesAreImagesOfVertices) {
  oracle::Generator g(33);
  for (int t = 0; t < 40; ++t) {
    const auto s = g.random_system(3, static_cast<std::size_t>(g.draw(4, 6)), 0);
    const auto p = to_polyhedron(s);
    if (!is_pointed(p) || !vrep(p).rays.empty()) continue;
    RatMatrix m(2, 3);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 3; ++j) m(i, j) = g.draw(-2, 2);
    if (rank(m) < 2) continue;
    const LinearMap pi{m};
    const auto img = project(p, pi);
    std::set<RatVector> imgs;
    for (const auto& v : vrep(p).vertices) {
      imgs.insert(pi.apply(v));
      EXPECT_TRUE(img.contains(pi.apply(v)));
    }
    for (const auto& w : vrep(img).vertices) EXPECT_TRUE(imgs.count(w)) << to_string(w);
  }
}

TEST(Project, CoordinateProjectionOfCube) {
  const LinearMap drop{RatMatrix{{1, 0, 0}, {0, 1, 0}}};
  const auto sq = minimize_description(project(hypercube(3), drop));
  EXPECT_TRUE(same_point_set(sq, hypercube(2)));
  EXPECT_EQ(sq.B.rows(), 4u);
}

TEST(Project, PreimageRoundTrip) {
  const LinearMap tau{RatMatrix{{1, 1}, {0, 1}}};
  const auto pre = preimage(hypercube(2), tau);
  EXPECT_TRUE(pre.contains(vec({0, 1})));
  EXPECT_FALSE(pre.contains(vec({1, 1})));
  EXPECT_TRUE(same_point_set(project(pre, tau), hypercube(2)));
}

TEST(Operations, CartesianProductAndMinkowskiSum) {
  const auto prod = cartesian_product(hypercube(1), simplex(2));
  EXPECT_EQ(prod.ambient_dim, 3u);
  EXPECT_EQ(vrep(prod).vertices.size(), 6u);
  const auto sum = minimize_description(minkowski_sum(hypercube(2), simplex(2)));
  // [0,1]^2 + simplex has vertices (0,0), (2,0), (0,2), (2,1), (1,2).
  EXPECT_EQ(as_set(vrep(sum).vertices),
            (std::set<RatVector>{vec({0, 0}), vec({2, 0}), vec({0, 2}), vec({2, 1}), vec({1, 2})}));
}

TEST(Operations, HomogenizationRoundTrip) {
  const auto p = cross_polytope(3);
  const auto h = homogenize(p);
  EXPECT_EQ(h.ambient_dim, 4u);
  EXPECT_EQ(h.B.rows(), p.B.rows() + 1);
  EXPECT_TRUE(same_point_set(dehomogenize(h), p));
  for (const auto& v : vrep(p).vertices) {
    RatVector lifted{1};
    lifted.insert(lifted.end(), v.begin(), v.end());
    EXPECT_TRUE(h.contains(lifted));
    EXPECT_TRUE(h.contains(scale(lifted, 5)));
  }
}

TEST(Operations, SlackFormIsAnIsomorphicCopy) {
  const auto p = simplex(3);
  const auto sf = slack_standard_form(p);
  EXPECT_EQ(sf.standard.ambient_dim, p.B.rows());
  for (const auto& v : vrep(p).vertices) EXPECT_TRUE(sf.standard.contains(sf.sigma.apply(v)));
  EXPECT_EQ(vrep(sf.standard).vertices.size(), vrep(p).vertices.size());
}

TEST(Operations, HullOfPointsAndRays) {
  const auto h = hull({vec({0, 0}), vec({1, 0}), vec({0, 1}), vec({1, 1}), vec({1, 0})}, {}, 2);
  EXPECT_TRUE(same_point_set(h, hypercube(2)));
  const auto cone = hull({vec({0, 0})}, {vec({1, 0}), vec({0, 1})}, 2);
  EXPECT_TRUE(same_point_set(cone, orthant(2)));
  EXPECT_TRUE(contained_in(hypercube(2), cone));
  EXPECT_FALSE(contained_in(cone, hypercube(2)));
}

TEST(Edges, CubeAndCone) {
  const auto c = hypercube(3);
  EXPECT_EQ(edges(c, vrep(c)).size(), 12u);
  const auto s = simplex(3);
  EXPECT_EQ(edges(s, vrep(s)).size(), 6u);
  EXPECT_EQ(face_dimension(c, vec({0, 0, 0})), 0u);
  EXPECT_EQ(face_dimension(c, RatVector{Rational(1, 2), 0, 0}), 1u);
  EXPECT_EQ(face_dimension(c, RatVector{Rational(1, 2), Rational(1, 2), Rational(1, 2)}), 3u);
}

TEST(Combinatorics, BinomialAndCombinations) {
  EXPECT_EQ(binomial(10, 3), 120u);
  EXPECT_EQ(binomial(3, 5), 0u);
  std::size_t count = 0;
  for_each_combination(6, 3, [&](const std::vector<std::size_t>&) {
    ++count;
    return true;
  });
  EXPECT_EQ(count, 20u);
  EXPECT_THROW(check_budget(30, 15, 1000, "test"), BudgetExceeded);
  EXPECT_NO_THROW(check_budget(6, 3, 20, "test"));
}

TEST(Validation, ShapeMismatchIsRejected) {
  HPolyhedron p(2);
  EXPECT_THROW(p.add_inequality(vec({1, 0, 0}), 1), InvalidArgument);
  EXPECT_EQ(to_system(hypercube(2)).B.size(), 4u);
}
