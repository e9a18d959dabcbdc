#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "polycirc/linalg.hpp"

namespace polycirc {

/// The system {x in R^n : A x = b, B x <= d}.
///
/// Row order is significant: circuits, basic solutions and homogenizations
/// are computed with respect to the description exactly as stored. Each row
/// may carry a provenance label; the label vectors are either empty or have
/// one entry per row.
struct HPolyhedron {
  std::string name;
  std::size_t ambient_dim = 0;
  RatMatrix A;
  RatVector b;
  RatMatrix B;
  RatVector d;
  std::vector<std::string> eq_labels;
  std::vector<std::string> ineq_labels;

  HPolyhedron() = default;
  explicit HPolyhedron(std::size_t n, std::string name = {});

  std::size_t num_equalities() const { return A.rows(); }
  std::size_t num_inequalities() const { return B.rows(); }

  void add_equality(const RatVector& a, const Rational& beta, const std::string& label = {});
  void add_inequality(const RatVector& a, const Rational& beta, const std::string& label = {});
  /// a x >= beta, stored as -a x <= -beta.
  void add_lower(const RatVector& a, const Rational& beta, const std::string& label = {});

  bool has_labels() const;
  /// Exact membership test.
  bool contains(const RatVector& x) const;
  /// Throws InvalidArgument if the row/column counts are inconsistent.
  void validate() const;

  friend bool operator==(const HPolyhedron&, const HPolyhedron&) = default;
};

/// A linear map R^m -> R^n given by an n x m matrix.
struct LinearMap {
  RatMatrix matrix;

  std::size_t source_dim() const { return matrix.cols(); }
  std::size_t target_dim() const { return matrix.rows(); }
  RatVector apply(const RatVector& x) const { return matvec(matrix, x); }
  /// (this o inner)(x) = this(inner(x)).
  LinearMap compose(const LinearMap& inner) const { return {matmul(matrix, inner.matrix)}; }

  friend bool operator==(const LinearMap&, const LinearMap&) = default;
};

/// x -> offset + linear * x.
struct AffineMap {
  RatMatrix linear;
  RatVector offset;

  RatVector apply(const RatVector& x) const { return add(offset, matvec(linear, x)); }
};

}  // namespace polycirc
