#include "polycirc/hpolyhedron.hpp"

#include <algorithm>

#include "polycirc/errors.hpp"

namespace polycirc {

HPolyhedron::HPolyhedron(std::size_t n, std::string nm)
    : name(std::move(nm)), ambient_dim(n), A(0, n), B(0, n) {}

namespace {

void push_label(std::vector<std::string>& labels, std::size_t rows_before, const std::string& label) {
  if (labels.empty() && label.empty()) return;
  labels.resize(rows_before);
  labels.push_back(label);
}

}  // namespace

void HPolyhedron::add_equality(const RatVector& a, const Rational& beta, const std::string& label) {
  push_label(eq_labels, A.rows(), label);
  A.append_row(a);
  b.push_back(beta);
}

void HPolyhedron::add_inequality(const RatVector& a, const Rational& beta, const std::string& label) {
  push_label(ineq_labels, B.rows(), label);
  B.append_row(a);
  d.push_back(beta);
}

void HPolyhedron::add_lower(const RatVector& a, const Rational& beta, const std::string& label) {
  add_inequality(scale(a, -1), -beta, label);
}

bool HPolyhedron::has_labels() const { return !eq_labels.empty() || !ineq_labels.empty(); }

bool HPolyhedron::contains(const RatVector& x) const {
  if (x.size() != ambient_dim) throw InvalidArgument("contains: point dimension mismatch");
  const RatVector ax = matvec(A, x);
  for (std::size_t i = 0; i < ax.size(); ++i)
    if (ax[i] != b[i]) return false;
  const RatVector bx = matvec(B, x);
  for (std::size_t i = 0; i < bx.size(); ++i)
    if (bx[i] > d[i]) return false;
  return true;
}

void HPolyhedron::validate() const {
  if (A.cols() != ambient_dim || B.cols() != ambient_dim)
    throw InvalidArgument("column count differs from ambient dimension");
  if (A.rows() != b.size() || B.rows() != d.size()) throw InvalidArgument("right-hand side length mismatch");
  if (!eq_labels.empty() && eq_labels.size() != A.rows()) throw InvalidArgument("equality label count mismatch");
  if (!ineq_labels.empty() && ineq_labels.size() != B.rows())
    throw InvalidArgument("inequality label count mismatch");
}

}  // namespace polycirc
