#pragma once

#include <optional>

#include "polycirc/constructions.hpp"

namespace polycirc {

enum class Verdict { AllInherited, NotAllInherited };

struct InheritanceReport {
  HPolyhedron P;            // the description whose circuits were computed
  CircuitSet P_circuits;
  CircuitSet Q_circuits;
  CircuitSet projected;     // pi(C(Q)), zeros dropped
  CircuitSet inherited;     // C(P) intersected with projected
  CircuitSet non_inherited; // C(P) minus projected
  CircuitSet edge_dirs;     // edge directions of P
  bool inherited_equals_edges = false;
  Verdict verdict = Verdict::AllInherited;
};

/// Compares C(pi(Q)) with pi(C(Q)). Without P_desc, P is the minimized
/// projection; with P_desc, P_desc is checked to equal pi(Q) as a point set
/// (ProjectionMismatch otherwise) and its minimized form is used. Q and P
/// must be pointed (NotPointed). The edge-inheritance invariants are asserted
/// and a violation throws CorrespondenceViolation.
InheritanceReport check_inheritance(const HPolyhedron& Q, const LinearMap& pi,
                                    const std::optional<HPolyhedron>& P_desc = std::nullopt,
                                    std::uint64_t budget = kDefaultBudget);

/// Plain-text rendering of the verdict and the sorted witness lists.
std::string summarize(const InheritanceReport& r);

/// C(P1 x P2) equals (C(P1) x 0) union (0 x C(P2)).
bool verify_cartesian_law(const HPolyhedron& p1, const HPolyhedron& p2);
/// C(sigma(P)) equals B * C(P) for the slack standard form.
bool verify_slack_law(const HPolyhedron& p);
/// Circuits of hom(P) split into C(P) (t = 0) and the basic solutions (t = 1).
bool verify_hom_law(const HPolyhedron& p);
/// C(Q_P) for the raw disjunctive system equals the two classes built from the
/// pieces' circuits and basic solutions.
bool verify_balas_circuits(const DisjunctiveFamily& family);
/// C(pi(Q)) equals pi(C(Q)) for pi injective on the affine hull of Q.
/// Throws NotInjectiveOnQ otherwise.
bool verify_isomorphism_law(const HPolyhedron& Q, const LinearMap& pi);
/// edge_directions(pi(Q)) is contained in pi(edge_directions(Q)).
bool verify_edge_inheritance(const HPolyhedron& Q, const LinearMap& pi);

}  // namespace polycirc
