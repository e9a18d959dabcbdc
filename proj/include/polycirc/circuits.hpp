#pragma once

#include <set>
#include <string>
#include <vector>

#include "polycirc/polyhedron.hpp"

namespace polycirc {

enum class CircuitKind {
  Circuits,  // a finite set of directions
  Lineality  // non-pointed input: C = lineality space minus 0, given by a basis
};

/// Canonical, deduplicated set of directions. Each element is the primitive
/// integer representative with first nonzero entry positive.
class CircuitSet {
 public:
  CircuitSet() = default;
  explicit CircuitSet(std::size_t dim, std::string source = {});

  std::size_t dim() const { return dim_; }
  const std::string& source() const { return source_; }
  void set_source(std::string s) { source_ = std::move(s); }
  CircuitKind kind() const { return kind_; }

  /// Canonicalizes and inserts; returns true if the direction was new.
  /// Throws InvalidArgument on a zero vector or a dimension mismatch.
  bool insert(const RatVector& v);
  /// Canonicalizes first; the zero vector is never a member.
  bool contains(const RatVector& v) const;

  std::size_t size() const { return dirs_.size(); }
  bool empty() const { return dirs_.empty(); }
  const std::set<RatVector>& directions() const { return dirs_; }
  auto begin() const { return dirs_.begin(); }
  auto end() const { return dirs_.end(); }

  /// Basis of the lineality space (kind() == Lineality only).
  const std::vector<RatVector>& lineality_basis() const { return lineality_; }
  static CircuitSet lineality(std::size_t dim, std::vector<RatVector> basis, std::string source = {});

  bool subset_of(const CircuitSet& other) const;
  CircuitSet intersect(const CircuitSet& other) const;
  CircuitSet minus(const CircuitSet& other) const;
  CircuitSet unite(const CircuitSet& other) const;

  /// Equal direction sets (source tags are ignored).
  friend bool operator==(const CircuitSet& a, const CircuitSet& b) {
    return a.dim_ == b.dim_ && a.kind_ == b.kind_ && a.dirs_ == b.dirs_ && a.lineality_ == b.lineality_;
  }

 private:
  std::size_t dim_ = 0;
  std::string source_;
  CircuitKind kind_ = CircuitKind::Circuits;
  std::set<RatVector> dirs_;
  std::vector<RatVector> lineality_;
};

/// pi(C) with zero images dropped and outputs canonicalized.
CircuitSet apply_map(const LinearMap& pi, const CircuitSet& c);

/// Basic solutions: points (not directions) whose tight rows have full column rank.
struct BasicSolutionSet {
  std::size_t dim = 0;
  std::set<RatVector> points;
  friend bool operator==(const BasicSolutionSet&, const BasicSolutionSet&) = default;
};

/// Circuits of the description as stored. For non-pointed input returns a
/// Lineality set. Throws BudgetExceeded when the row subsets exceed budget.
CircuitSet enumerate_circuits(const HPolyhedron& p, std::uint64_t budget = kDefaultBudget);

/// Independent oracle: all 2^q row subsets in original coordinates, then the
/// support-minimality definition applied pairwise. Tiny instances only.
CircuitSet enumerate_circuits_bruteforce(const HPolyhedron& p, std::uint64_t budget = 1u << 20);

/// All basic solutions, feasible or not. Every returned point and a sample of
/// non-basic points are checked against the support-minimality
/// characterization; a mismatch throws CorrespondenceViolation.
BasicSolutionSet basic_solutions(const HPolyhedron& p, std::uint64_t budget = kDefaultBudget);

struct HomCircuits {
  CircuitSet all;             // C(hom(P)) in R^{1+n}
  CircuitSet gamma0;          // tails of the t = 0 class
  BasicSolutionSet gamma1;    // tails of the t != 0 class, rescaled to t = 1
};

/// Circuits of homogenize(p), split by the t coordinate and checked against
/// enumerate_circuits(p) and basic_solutions(p). Throws CorrespondenceViolation
/// on any mismatch.
HomCircuits circuits_of_homogenization(const HPolyhedron& p, std::uint64_t budget = kDefaultBudget);

/// Directions of bounded edges and extreme rays. Throws NotPointed.
CircuitSet edge_directions(const HPolyhedron& p, std::uint64_t budget = kDefaultBudget);
bool is_edge_direction(const RatVector& g, const HPolyhedron& p);

}  // namespace polycirc
