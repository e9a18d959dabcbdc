#include "polycirc/inheritance.hpp"

#include <sstream>

#include "polycirc/errors.hpp"
#include "polycirc/lp.hpp"

namespace polycirc {

InheritanceReport check_inheritance(const HPolyhedron& Q, const LinearMap& pi, const std::optional<HPolyhedron>& P_desc,
                                    std::uint64_t budget) {
  Q.validate();
  if (pi.source_dim() != Q.ambient_dim) throw InvalidArgument("check_inheritance: map source dimension mismatch");
  if (!is_pointed(Q)) throw NotPointed("extension Q is not pointed");

  HPolyhedron image = project(Q, pi);
  InheritanceReport r;
  if (P_desc) {
    if (P_desc->ambient_dim != pi.target_dim()) throw InvalidArgument("check_inheritance: P has the wrong dimension");
    if (!same_point_set(*P_desc, image)) throw ProjectionMismatch("the supplied P differs from pi(Q)");
    r.P = minimize_description(*P_desc);
    if (r.P.name.empty()) r.P.name = P_desc->name;
  } else {
    r.P = std::move(image);
  }
  if (!is_pointed(r.P)) throw NotPointed("projection P is not pointed");

  r.Q_circuits = enumerate_circuits(Q, budget);
  r.P_circuits = enumerate_circuits(r.P, budget);
  r.projected = apply_map(pi, r.Q_circuits);
  r.inherited = r.P_circuits.intersect(r.projected);
  r.non_inherited = r.P_circuits.minus(r.projected);
  r.edge_dirs = edge_directions(r.P, budget);
  r.inherited_equals_edges = r.inherited.directions() == r.edge_dirs.directions();
  r.verdict = r.non_inherited.empty() ? Verdict::AllInherited : Verdict::NotAllInherited;

  if (!r.edge_dirs.subset_of(r.P_circuits)) throw CorrespondenceViolation("an edge direction of P is not a circuit");
  if (!r.edge_dirs.subset_of(r.inherited)) throw CorrespondenceViolation("an edge direction of P is not inherited");
  if (!r.edge_dirs.subset_of(apply_map(pi, edge_directions(Q, budget))))
    throw CorrespondenceViolation("an edge direction of P is not the image of an edge direction of Q");
  return r;
}

bool verify_cartesian_law(const HPolyhedron& p1, const HPolyhedron& p2) {
  if (!is_pointed(p1) || !is_pointed(p2)) throw NotPointed();
  const std::size_t n1 = p1.ambient_dim, n = n1 + p2.ambient_dim;
  CircuitSet expected(n);
  for (const auto& g : enumerate_circuits(p1)) {
    RatVector x(n);
    std::copy(g.begin(), g.end(), x.begin());
    expected.insert(x);
  }
  for (const auto& g : enumerate_circuits(p2)) {
    RatVector x(n);
    std::copy(g.begin(), g.end(), x.begin() + static_cast<std::ptrdiff_t>(n1));
    expected.insert(x);
  }
  return enumerate_circuits(cartesian_product(p1, p2)).directions() == expected.directions();
}

bool verify_slack_law(const HPolyhedron& p) {
  const SlackForm sf = slack_standard_form(p);
  return enumerate_circuits(sf.standard).directions() == apply_map({p.B}, enumerate_circuits(p)).directions();
}

bool verify_hom_law(const HPolyhedron& p) {
  try {
    circuits_of_homogenization(p);
    return true;
  } catch (const CorrespondenceViolation&) {
    return false;
  }
}

bool verify_balas_circuits(const DisjunctiveFamily& family) {
  for (const auto& piece : family.pieces)
    if (!is_pointed(piece)) throw NotPointed("a piece of the family is not pointed");
  const BalasExtension ext = balas_extension(family);
  const std::size_t p = family.pieces.size(), n = family.pieces[0].ambient_dim, dim = ext.Q.ambient_dim;

  std::vector<std::vector<RatVector>> basic(p);
  CircuitSet expected(dim);
  for (std::size_t i = 0; i < p; ++i) {
    for (const auto& g : enumerate_circuits(family.pieces[i])) {
      RatVector x(dim);
      std::copy(g.begin(), g.end(), x.begin() + static_cast<std::ptrdiff_t>(p + i * n));
      expected.insert(x);
    }
    const auto bs = basic_solutions(family.pieces[i]);
    basic[i].assign(bs.points.begin(), bs.points.end());
  }
  // (e_i - e_j, x_i in block i, -x_j in block j): the lambda_j = -1 block is a
  // negated basic solution.
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = i + 1; j < p; ++j)
      for (const auto& xi : basic[i])
        for (const auto& xj : basic[j]) {
          RatVector x(dim);
          x[i] = 1;
          x[j] = -1;
          for (std::size_t c = 0; c < n; ++c) {
            x[p + i * n + c] = xi[c];
            x[p + j * n + c] = -xj[c];
          }
          expected.insert(x);
        }
  return enumerate_circuits(ext.Q).directions() == expected.directions();
}

bool verify_isomorphism_law(const HPolyhedron& Q, const LinearMap& pi) {
  const HPolyhedron qm = minimize_description(Q);
  const auto directions = kernel_basis(qm.A);
  if (!directions.empty() &&
      rank(matmul(pi.matrix, RatMatrix::from_columns(directions, qm.ambient_dim))) != directions.size())
    throw NotInjectiveOnQ("pi is not injective on the affine hull of Q");
  const HPolyhedron image = project(qm, pi);
  return enumerate_circuits(image).directions() == apply_map(pi, enumerate_circuits(qm)).directions();
}

bool verify_edge_inheritance(const HPolyhedron& Q, const LinearMap& pi) {
  return edge_directions(project(Q, pi)).subset_of(apply_map(pi, edge_directions(Q)));
}

std::string summarize(const InheritanceReport& r) {
  std::ostringstream out;
  auto list = [&](const char* label, const CircuitSet& c) {
    out << label << " (" << c.size() << "):";
    for (const auto& g : c) out << " " << to_string(g);
    out << "\n";
  };
  out << "verdict: " << (r.verdict == Verdict::AllInherited ? "all circuits inherited" : "not all circuits inherited")
      << "\n";
  out << "P: dim " << r.P.ambient_dim << ", " << r.P.A.rows() << " equalities, " << r.P.B.rows() << " inequalities\n";
  list("circuits of P", r.P_circuits);
  list("inherited", r.inherited);
  list("non-inherited", r.non_inherited);
  list("edge directions", r.edge_dirs);
  out << "inherited equals edge directions: " << (r.inherited_equals_edges ? "yes" : "no") << "\n";
  return out.str();
}

}  // namespace polycirc
