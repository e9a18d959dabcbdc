#include "polycirc/lp.hpp"

#include <limits>

#include "polycirc/errors.hpp"

namespace polycirc {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Dense simplex tableau for max c^T z, T z = rhs, z >= 0.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols) : m_(rows), n_(cols), t_(rows * (cols + 1)), obj_(cols + 1), basis_(rows, kNone) {}

  Rational& at(std::size_t i, std::size_t j) { return t_[i * (n_ + 1) + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return t_[i * (n_ + 1) + j]; }
  Rational& rhs(std::size_t i) { return at(i, n_); }
  const Rational& rhs(std::size_t i) const { return at(i, n_); }
  std::size_t rows() const { return m_; }
  std::size_t cols() const { return n_; }
  std::vector<std::size_t>& basis() { return basis_; }
  const Rational& reduced_cost(std::size_t j) const { return obj_[j]; }
  Rational value() const { return -obj_[n_]; }

  void set_costs(const RatVector& cost) {
    for (std::size_t j = 0; j <= n_; ++j) obj_[j] = j < n_ ? cost[j] : Rational(0);
    for (std::size_t i = 0; i < m_; ++i) {
      const Rational& cb = cost[basis_[i]];
      if (sgn(cb) == 0) continue;
      for (std::size_t j = 0; j <= n_; ++j)
        if (sgn(at(i, j)) != 0) obj_[j] -= cb * at(i, j);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    const Rational inv = 1 / at(r, c);
    for (std::size_t j = 0; j <= n_; ++j)
      if (sgn(at(r, j)) != 0) at(r, j) *= inv;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || sgn(at(i, c)) == 0) continue;
      const Rational f = at(i, c);
      for (std::size_t j = 0; j <= n_; ++j)
        if (sgn(at(r, j)) != 0) at(i, j) -= f * at(r, j);
    }
    if (sgn(obj_[c]) != 0) {
      const Rational f = obj_[c];
      for (std::size_t j = 0; j <= n_; ++j)
        if (sgn(at(r, j)) != 0) obj_[j] -= f * at(r, j);
    }
    basis_[r] = c;
  }

  // Runs Bland's rule to optimality. Returns kNone when optimal, otherwise the
  // entering column whose ratio test found no bound.
  std::size_t optimize(const std::vector<bool>& may_enter) {
    for (;;) {
      std::size_t enter = kNone;
      for (std::size_t j = 0; j < n_; ++j) {
        if (may_enter[j] && sgn(obj_[j]) > 0) {
          enter = j;
          break;
        }
      }
      if (enter == kNone) return kNone;
      std::size_t leave = kNone;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (sgn(at(i, enter)) <= 0) continue;
        Rational ratio = rhs(i) / at(i, enter);
        if (leave == kNone || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave == kNone) return enter;
      pivot(leave, enter);
    }
  }

  RatVector solution() const {
    RatVector z(n_);
    for (std::size_t i = 0; i < m_; ++i) z[basis_[i]] = rhs(i);
    return z;
  }

 private:
  std::size_t m_, n_;
  std::vector<Rational> t_;
  std::vector<Rational> obj_;
  std::vector<std::size_t> basis_;
};

void check_dual_certificate(const HPolyhedron& sys, const RatVector& c, const RatVector& u, const RatVector& v,
                            const Rational& value) {
  for (const auto& vi : v)
    if (sgn(vi) < 0) throw CorrespondenceViolation("lp: dual multiplier for an inequality is negative");
  RatVector lhs(sys.ambient_dim);
  for (std::size_t i = 0; i < sys.A.rows(); ++i)
    for (std::size_t j = 0; j < sys.ambient_dim; ++j) lhs[j] += u[i] * sys.A(i, j);
  for (std::size_t i = 0; i < sys.B.rows(); ++i)
    for (std::size_t j = 0; j < sys.ambient_dim; ++j) lhs[j] += v[i] * sys.B(i, j);
  if (lhs != c) throw CorrespondenceViolation("lp: dual solution does not reproduce the objective");
  if (dot(u, sys.b) + dot(v, sys.d) != value) throw CorrespondenceViolation("lp: primal and dual values differ");
}

}  // namespace

LPStatus lp_solve(const RatVector& objective, const HPolyhedron& sys, Sense sense) {
  sys.validate();
  const std::size_t n = sys.ambient_dim;
  if (objective.size() != n) throw InvalidArgument("lp_solve: objective dimension mismatch");
  const std::size_t p = sys.A.rows(), q = sys.B.rows(), m = p + q;

  const RatVector c = sense == Sense::Maximize ? objective : scale(objective, -1);

  std::vector<bool> flip(m);
  std::size_t n_art = 0;
  for (std::size_t i = 0; i < m; ++i) {
    flip[i] = i < p ? sgn(sys.b[i]) < 0 : sgn(sys.d[i - p]) < 0;
    if (i < p || flip[i]) ++n_art;
  }
  const std::size_t slack0 = 2 * n, art0 = 2 * n + q, cols = art0 + n_art;
  Tableau tab(m, cols);
  std::vector<std::size_t> id_col(m);
  std::size_t next_art = art0;
  for (std::size_t i = 0; i < m; ++i) {
    const Rational sign = flip[i] ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& a = i < p ? sys.A(i, j) : sys.B(i - p, j);
      if (sgn(a) == 0) continue;
      tab.at(i, j) = sign * a;
      tab.at(i, n + j) = -sign * a;
    }
    tab.rhs(i) = sign * (i < p ? sys.b[i] : sys.d[i - p]);
    if (i >= p) tab.at(i, slack0 + (i - p)) = sign;
    if (i < p || flip[i]) {
      tab.at(i, next_art) = 1;
      tab.basis()[i] = next_art;
      id_col[i] = next_art++;
    } else {
      tab.basis()[i] = slack0 + (i - p);
      id_col[i] = slack0 + (i - p);
    }
  }

  std::vector<bool> may_enter(cols, true);
  if (n_art > 0) {
    RatVector cost(cols);
    for (std::size_t j = art0; j < cols; ++j) cost[j] = -1;
    tab.set_costs(cost);
    tab.optimize(may_enter);
    if (sgn(tab.value()) < 0) return LPInfeasible{};
    for (std::size_t i = 0; i < m; ++i) {
      if (tab.basis()[i] < art0) continue;
      for (std::size_t j = 0; j < art0; ++j) {
        if (sgn(tab.at(i, j)) != 0) {
          tab.pivot(i, j);
          break;
        }
      }
    }
    for (std::size_t j = art0; j < cols; ++j) may_enter[j] = false;
  }

  RatVector cost(cols);
  for (std::size_t j = 0; j < n; ++j) {
    cost[j] = c[j];
    cost[n + j] = -c[j];
  }
  tab.set_costs(cost);
  const std::size_t unbounded_col = tab.optimize(may_enter);

  if (unbounded_col != kNone) {
    RatVector z(cols);
    z[unbounded_col] = 1;
    for (std::size_t i = 0; i < m; ++i) z[tab.basis()[i]] = -tab.at(i, unbounded_col);
    RatVector ray(n);
    for (std::size_t j = 0; j < n; ++j) ray[j] = z[j] - z[n + j];
    if (!is_zero(matvec(sys.A, ray))) throw CorrespondenceViolation("lp: unbounded ray leaves the equality space");
    for (const auto& r : matvec(sys.B, ray))
      if (sgn(r) > 0) throw CorrespondenceViolation("lp: unbounded ray is not a recession direction");
    if (sgn(dot(c, ray)) <= 0) throw CorrespondenceViolation("lp: unbounded ray does not improve the objective");
    return LPUnbounded{canonicalize_ray(ray)};
  }

  const RatVector z = tab.solution();
  RatVector x(n);
  for (std::size_t j = 0; j < n; ++j) x[j] = z[j] - z[n + j];
  const Rational value_max = tab.value();
  if (!sys.contains(x) || dot(c, x) != value_max) throw CorrespondenceViolation("lp: optimal point check failed");

  RatVector u(p), v(q);
  for (std::size_t i = 0; i < m; ++i) {
    Rational w = -tab.reduced_cost(id_col[i]);
    if (flip[i]) w = -w;
    if (i < p)
      u[i] = std::move(w);
    else
      v[i - p] = std::move(w);
  }
  check_dual_certificate(sys, c, u, v, value_max);

  return LPOptimal{sense == Sense::Maximize ? value_max : Rational(-value_max), std::move(x)};
}

std::optional<RatVector> feasible_point(const HPolyhedron& sys) {
  const auto status = lp_solve(RatVector(sys.ambient_dim), sys, Sense::Maximize);
  if (const auto* opt = std::get_if<LPOptimal>(&status)) return opt->point;
  return std::nullopt;
}

bool is_feasible(const HPolyhedron& sys) { return feasible_point(sys).has_value(); }

bool is_implied(const RatVector& a, const Rational& beta, const HPolyhedron& sys) {
  const auto status = lp_solve(a, sys, Sense::Maximize);
  if (std::holds_alternative<LPInfeasible>(status)) return true;
  if (const auto* opt = std::get_if<LPOptimal>(&status)) return opt->value <= beta;
  return false;
}

}  // namespace polycirc
