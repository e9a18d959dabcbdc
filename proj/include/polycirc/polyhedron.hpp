#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "polycirc/hpolyhedron.hpp"

namespace polycirc {

/// Default cap on the number of row subsets any enumeration may visit.
inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

struct VRep {
  std::vector<RatVector> vertices;  // sorted, pairwise distinct
  std::vector<RatVector> rays;      // sorted, primitive integer, orientation kept
};

struct Edge {
  std::size_t u;  // vertex indices into VRep::vertices, u < v
  std::size_t v;
};

/// x = particular + kernel * y parametrizes {A x = b}; the inequalities in the
/// reduced coordinates y are reduced_B y <= reduced_d.
struct KernelReduction {
  RatVector particular;
  RatMatrix kernel;  // n x k, columns = kernel basis of A
  RatMatrix reduced_B;
  RatVector reduced_d;
};

/// nullopt when A x = b is inconsistent.
std::optional<KernelReduction> reduce_to_kernel(const HPolyhedron& p);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Calls fn(subset) for every k-subset of {0..n-1} in lexicographic order.
/// fn returns false to stop early.
template <class Fn>
void for_each_combination(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    if (!fn(static_cast<const std::vector<std::size_t>&>(idx))) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Throws BudgetExceeded if C(n, k) exceeds budget.
void check_budget(std::uint64_t n, std::uint64_t k, std::uint64_t budget, const char* what);

/// Inequality rows that hold with equality on all of p (implicit equalities).
std::vector<std::size_t> implicit_equalities(const HPolyhedron& p);

/// Affine dimension. Throws EmptyPolyhedron when p is infeasible.
std::size_t dim(const HPolyhedron& p);

/// Same point set, implicit equalities promoted to equality rows, a maximal
/// independent subset of equalities, and only facet-defining inequalities.
/// Surviving rows are copied unchanged, in their original order.
HPolyhedron minimize_description(const HPolyhedron& p);

bool is_pointed(const HPolyhedron& p);
/// Basis of ker(A) intersect ker(B).
std::vector<RatVector> lineality_basis(const HPolyhedron& p);

/// Vertices by enumeration of rank-n row subsets; extreme rays from the
/// rank-(n-1) subsets. Valid for any description of a pointed polyhedron.
VRep vrep(const HPolyhedron& p, std::uint64_t budget = kDefaultBudget);

/// Dimension of the smallest face of p containing x (x must lie in p).
std::size_t face_dimension(const HPolyhedron& p, const RatVector& x);

/// Pairs of adjacent vertices: the face spanned by the midpoint has dimension 1.
std::vector<Edge> edges(const HPolyhedron& p, const VRep& v);

/// Image pi(p), computed by Fourier-Motzkin elimination on the graph system
/// {x = Pi y, y in p}. Returned minimized.
HPolyhedron project(const HPolyhedron& p, const LinearMap& pi);

/// {x : tau x in p}; the image under tau^{-1} when tau is invertible.
HPolyhedron preimage(const HPolyhedron& p, const LinearMap& tau);

HPolyhedron cartesian_product(const HPolyhedron& p1, const HPolyhedron& p2);
HPolyhedron minkowski_sum(const HPolyhedron& p1, const HPolyhedron& p2);

/// The cone {(t, x) : t >= 0, A x - b t = 0, B x - d t <= 0}. Inequality row 0 is
/// t >= 0, followed by the homogenized rows of p in order. Not minimized.
HPolyhedron homogenize(const HPolyhedron& p);

/// {x : (1, x) in h} for a polyhedron h in R^{1+n}.
HPolyhedron dehomogenize(const HPolyhedron& h);

struct SlackForm {
  HPolyhedron standard;  // {s >= 0, U s = U d + V b}
  AffineMap sigma;       // x -> d - B x
};

/// Standard-form image of p under its slack map x -> d - B x.
SlackForm slack_standard_form(const HPolyhedron& p);

/// Point-set equality via mutual implication of all rows.
bool same_point_set(const HPolyhedron& p1, const HPolyhedron& p2);
/// Every row of `outer` is implied by `inner`.
bool contained_in(const HPolyhedron& inner, const HPolyhedron& outer);

/// Convex hull of points plus conic hull of rays, as an H-polyhedron.
HPolyhedron hull(const std::vector<RatVector>& points, const std::vector<RatVector>& rays, std::size_t ambient_dim);

}  // namespace polycirc
