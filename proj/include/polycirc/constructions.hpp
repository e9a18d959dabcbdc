#pragma once

#include <cstdint>
#include <vector>

#include "polycirc/circuits.hpp"

namespace polycirc {

// --- projection matrices ---------------------------------------------------

/// The n x m counterexample matrix: rows (2,1,0,0), (0,0,2,1), (0,1,0,1) on the
/// first four columns, then 2*I_{n-3} on columns 4..n; columns n+1.. are zero.
/// Requires m > n >= 3.
LinearMap pi_matrix(std::size_t n, std::size_t m);

/// The (m-1) x m matrix with rows (a,1,0,0), (0,0,a,1), (0,a-1,0,a-1), then a*I.
/// Requires m >= 4 and a >= 2.
LinearMap pi_alpha_matrix(std::size_t m, long alpha);

/// The n x m matrix with rows (1,1,2,0,0,0), (0,0,0,1,1,2), (0,1,1,0,1,1), then
/// I_{n-3} on columns 6..n+2; remaining columns zero. Requires n >= 3, m >= n+3.
LinearMap pi_prime_matrix(std::size_t n, std::size_t m);

// --- basic polyhedra --------------------------------------------------------

HPolyhedron hypercube(std::size_t m);  // [0,1]^m
HPolyhedron simplex(std::size_t m);    // x >= 0, sum x <= 1
HPolyhedron orthant(std::size_t m);    // x >= 0
/// {x : y^T x <= 1 for all y in {-1,1}^n}; rows in binary order of the sign pattern.
HPolyhedron cross_polytope(std::size_t n);
/// cross_polytope(n) intersected with [-delta, delta]^n; delta in (1/2, 1).
HPolyhedron cropped_cross_polytope(std::size_t n, const Rational& delta);

// --- partition polytopes ----------------------------------------------------

/// Data points, cluster count and cluster sizes.
struct PartitionInstance {
  std::vector<RatVector> X;
  std::size_t k = 0;
  std::vector<long> kappa;
};

/// T(n,k,kappa) in R^{k*n}, variables y_ij row-major. Rows: the k cluster-size
/// equalities, then the n assignment equalities, then y >= 0.
HPolyhedron transportation(std::size_t n, std::size_t k, const std::vector<long>& kappa);
/// y -> (c_1, ..., c_k) with c_i = sum_j y_ij x_j; block diagonal (d*k) x (k*n).
LinearMap partition_projection(const PartitionInstance& inst);

// --- disjunctive extensions -------------------------------------------------

struct DisjunctiveFamily {
  std::vector<HPolyhedron> pieces;
};

struct BalasExtension {
  HPolyhedron Q;         // variables lambda (p), then x^(1), ..., x^(p)
  LinearMap summation;   // (lambda, x^(1), ..., x^(p)) -> sum_i x^(i)
};

/// The raw disjunctive system; never minimized. Throws InvalidArgument when
/// the family is empty or malformed.
BalasExtension balas_extension(const DisjunctiveFamily& family);

/// {v} as an H-polyhedron (x = v).
HPolyhedron singleton(const RatVector& v);

/// conv{u, v, m + eps z, m - eps z} with m = (u+v)/2 and z orthogonal to u - v.
HPolyhedron parallelogram(const RatVector& u, const RatVector& v, const RatVector& z, const Rational& eps);

struct NonInheritingExtension {
  DisjunctiveFamily family;      // pieces covering the vertices of P
  BalasExtension balas;          // extension of conv(vertices)
  std::vector<RatVector> rays;   // extreme rays of P (empty for polytopes)
  HPolyhedron Q;                 // balas.Q, times an orthant when rays exist
  LinearMap pi;                  // Q -> P
  Rational eps;                  // final parallelogram width
};

/// An extension (Q, pi) of the pointed polyhedron p with g not in pi(C(Q)).
/// Throws EdgeDirectionGiven when g is an edge direction, NotPointed, and
/// CorrespondenceViolation if the final check fails.
NonInheritingExtension non_inheriting_extension(const HPolyhedron& p, const RatVector& g);

// --- non-degenerate vertex families ------------------------------------------

struct AlphaProjection {
  long alpha = 0;
  LinearMap pi;
  std::vector<long> rejected;  // alphas tried before success
  HPolyhedron image;           // pi(Q), minimized
};

/// Smallest alpha >= 2 such that no circuit of q is mapped by Pi_alpha to a
/// multiple of e3 (including 0). q must be full-dimensional in orthant
/// position: 0 is a vertex whose tight rows are exactly -x_i <= 0 (positively
/// scaled). Verifies e3 in C(pi(q)) minus pi(C(q)) before returning.
AlphaProjection find_alpha_projection(const HPolyhedron& q, long max_alpha = 1000);

struct OrthantPosition {
  HPolyhedron Q;       // image polyhedron, tight rows at the vertex become -y_i <= 0
  AffineMap forward;   // x -> d_T - B_T x
  AffineMap backward;  // y -> B_T^{-1} (d_T - y)
};

/// Moves the non-degenerate vertex v of the full-dimensional q to the origin
/// with inner cone R^m_{>=0}. The description is minimized first; the m tight
/// rows come first in the result, the others follow in order, each scaled to a
/// primitive integer row. Throws DegenerateVertex or PreconditionViolation.
OrthantPosition transform_to_orthant_position(const HPolyhedron& q, const RatVector& v);

/// An invertible tau with sigma * tau = pi, both maps surjective R^m -> R^n.
/// Returns the identity when sigma = pi.
LinearMap tau_transfer(const LinearMap& pi, const LinearMap& sigma);

/// A simple 4-polytope in orthant position whose circuits include 2e2 - e1:
/// x >= 0, 2x1 + x2 + a x3 + b x4 <= 4, x3 + x4 <= c, with seeded a, b, c.
HPolyhedron perturbed_orthant_polytope(std::uint64_t seed);

}  // namespace polycirc
