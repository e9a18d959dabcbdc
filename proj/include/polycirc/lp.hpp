#pragma once

// Exact linear programming over rational data.
//
// Two-phase primal simplex on the standard form obtained by splitting free
// variables and adding slacks, with Bland's lowest-index rule for both the
// entering and the leaving variable. Every optimal answer is certified by an
// exact dual solution before it is returned.

#include <variant>

#include "polycirc/hpolyhedron.hpp"

namespace polycirc {

enum class Sense { Maximize, Minimize };

struct LPOptimal {
  Rational value;
  RatVector point;
};

/// A recession direction of the feasible set along which the objective
/// improves without bound.
struct LPUnbounded {
  RatVector ray;
};

struct LPInfeasible {};

using LPStatus = std::variant<LPOptimal, LPUnbounded, LPInfeasible>;

LPStatus lp_solve(const RatVector& objective, const HPolyhedron& sys, Sense sense);

bool is_feasible(const HPolyhedron& sys);
/// Any point of sys, or nullopt when empty.
std::optional<RatVector> feasible_point(const HPolyhedron& sys);

/// True iff a x <= beta holds on all of sys. An empty sys implies everything.
bool is_implied(const RatVector& a, const Rational& beta, const HPolyhedron& sys);

}  // namespace polycirc
