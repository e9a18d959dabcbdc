#pragma once

// Seeded generators for the property suites. Draws use std::mt19937_64 with
// plain modulo reduction so sequences are identical across standard libraries.

#include <random>

#include "polycirc/hpolyhedron.hpp"

namespace polycirc {

class InstanceGenerator {
 public:
  explicit InstanceGenerator(std::uint64_t seed) : rng_(seed) {}

  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi);

  /// A pointed polytope or polyhedron in R^n with 0 in its relative interior:
  /// `extra` random rows beyond n, integer entries in [-2, 2], rhs in [1, 3].
  /// With `bounded`, rejection-samples until the result is a polytope (extra is
  /// raised to at least 1). With `with_equality`, one random equality row
  /// through 0 is added.
  HPolyhedron pointed_polyhedron(std::size_t n, std::size_t extra, bool bounded, bool with_equality = false);

  /// Random integer matrix with entries in [-2, 2] of the requested rank.
  LinearMap map_of_rank(std::size_t rows, std::size_t cols, std::size_t rank);

 private:
  std::mt19937_64 rng_;
};

}  // namespace polycirc
