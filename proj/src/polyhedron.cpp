#include "polycirc/polyhedron.hpp"

#include <algorithm>
#include <set>

#include "polycirc/errors.hpp"
#include "polycirc/lp.hpp"

namespace polycirc {

std::optional<KernelReduction> reduce_to_kernel(const HPolyhedron& p) {
  p.validate();
  auto x0 = solve(p.A, p.b);
  if (!x0) return std::nullopt;
  KernelReduction red;
  red.particular = std::move(*x0);
  red.kernel = RatMatrix::from_columns(kernel_basis(p.A), p.ambient_dim);
  red.reduced_B = matmul(p.B, red.kernel);
  red.reduced_d = sub(p.d, matvec(p.B, red.particular));
  return red;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::uint64_t>::max() / 2) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

void check_budget(std::uint64_t n, std::uint64_t k, std::uint64_t budget, const char* what) {
  const auto count = binomial(n, k);
  if (count > budget) {
    throw BudgetExceeded(std::string(what) + ": C(" + std::to_string(n) + "," + std::to_string(k) + ") = " +
                         std::to_string(count) + " row subsets exceed the budget of " + std::to_string(budget));
  }
}

std::vector<std::size_t> implicit_equalities(const HPolyhedron& p) {
  const auto x = feasible_point(p);
  if (!x) throw EmptyPolyhedron();
  const RatVector bx = matvec(p.B, *x);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < p.B.rows(); ++i) {
    if (bx[i] != p.d[i]) continue;
    const auto status = lp_solve(p.B.row(i), p, Sense::Minimize);
    const auto* opt = std::get_if<LPOptimal>(&status);
    if (opt && opt->value == p.d[i]) out.push_back(i);
  }
  return out;
}

std::size_t dim(const HPolyhedron& p) {
  const auto impl = implicit_equalities(p);
  RatMatrix eq = p.A;
  for (auto i : impl) eq.append_row(p.B.row(i));
  return p.ambient_dim - rank(eq);
}

namespace {

std::string label_at(const std::vector<std::string>& labels, std::size_t i) {
  return labels.empty() ? std::string{} : labels[i];
}

}  // namespace

HPolyhedron minimize_description(const HPolyhedron& p) {
  const auto impl = implicit_equalities(p);
  std::vector<bool> is_impl(p.B.rows(), false);
  for (auto i : impl) is_impl[i] = true;

  HPolyhedron out(p.ambient_dim, p.name);
  RatMatrix basis(0, p.ambient_dim);
  std::size_t r = 0;
  auto try_equality = [&](const RatVector& a, const Rational& beta, const std::string& label) {
    RatMatrix trial = basis;
    trial.append_row(a);
    const auto tr = rank(trial);
    if (tr == r) return;
    basis = std::move(trial);
    r = tr;
    out.add_equality(a, beta, label);
  };
  for (std::size_t i = 0; i < p.A.rows(); ++i) try_equality(p.A.row(i), p.b[i], label_at(p.eq_labels, i));
  for (auto i : impl) try_equality(p.B.row(i), p.d[i], label_at(p.ineq_labels, i));

  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < p.B.rows(); ++i)
    if (!is_impl[i]) kept.push_back(i);

  for (std::size_t pos = 0; pos < kept.size();) {
    HPolyhedron rest = out;
    rest.eq_labels.clear();
    rest.ineq_labels.clear();
    for (std::size_t k = 0; k < kept.size(); ++k)
      if (k != pos) rest.add_inequality(p.B.row(kept[k]), p.d[kept[k]]);
    if (is_implied(p.B.row(kept[pos]), p.d[kept[pos]], rest))
      kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(pos));
    else
      ++pos;
  }
  for (auto i : kept) out.add_inequality(p.B.row(i), p.d[i], label_at(p.ineq_labels, i));
  if (!out.has_labels()) {
    out.eq_labels.clear();
    out.ineq_labels.clear();
  }
  return out;
}

std::vector<RatVector> lineality_basis(const HPolyhedron& p) {
  RatMatrix stacked = p.A;
  for (std::size_t i = 0; i < p.B.rows(); ++i) stacked.append_row(p.B.row(i));
  return kernel_basis(stacked);
}

bool is_pointed(const HPolyhedron& p) { return lineality_basis(p).empty(); }

VRep vrep(const HPolyhedron& p, std::uint64_t budget) {
  if (!is_pointed(p)) throw NotPointed();
  const auto red = reduce_to_kernel(p);
  if (!red) throw EmptyPolyhedron();
  const std::size_t k = red->kernel.cols(), q = p.B.rows();
  const RatMatrix& bk = red->reduced_B;

  auto feasible_y = [&](const RatVector& y) {
    const RatVector by = matvec(bk, y);
    for (std::size_t i = 0; i < q; ++i)
      if (by[i] > red->reduced_d[i]) return false;
    return true;
  };
  auto lift = [&](const RatVector& y) { return add(red->particular, matvec(red->kernel, y)); };

  std::set<RatVector> vertices, rays;
  check_budget(q, k, budget, "vertex enumeration");
  for_each_combination(q, k, [&](const std::vector<std::size_t>& rows) {
    const RatMatrix m = bk.select_rows(rows);
    RatVector rhs(k);
    for (std::size_t i = 0; i < k; ++i) rhs[i] = red->reduced_d[rows[i]];
    const auto [r, pivots] = rref(m);
    if (pivots.size() < k) return true;
    const auto y = solve(m, rhs);
    if (y && feasible_y(*y)) vertices.insert(lift(*y));
    return true;
  });
  if (vertices.empty()) throw EmptyPolyhedron();

  if (k >= 1) {
    check_budget(q, k - 1, budget, "extreme ray enumeration");
    for_each_combination(q, k - 1, [&](const std::vector<std::size_t>& rows) {
      const auto ker = kernel_basis(bk.select_rows(rows));
      if (ker.size() != 1) return true;
      const RatVector by = matvec(bk, ker[0]);
      const bool nonpos = std::all_of(by.begin(), by.end(), [](const Rational& x) { return sgn(x) <= 0; });
      const bool nonneg = std::all_of(by.begin(), by.end(), [](const Rational& x) { return sgn(x) >= 0; });
      if (nonpos) rays.insert(canonicalize_ray(matvec(red->kernel, ker[0])));
      if (nonneg) rays.insert(canonicalize_ray(scale(matvec(red->kernel, ker[0]), -1)));
      return true;
    });
  }
  return VRep{{vertices.begin(), vertices.end()}, {rays.begin(), rays.end()}};
}

std::size_t face_dimension(const HPolyhedron& p, const RatVector& x) {
  RatMatrix tight = p.A;
  const RatVector bx = matvec(p.B, x);
  for (std::size_t i = 0; i < p.B.rows(); ++i)
    if (bx[i] == p.d[i]) tight.append_row(p.B.row(i));
  return p.ambient_dim - rank(tight);
}

std::vector<Edge> edges(const HPolyhedron& p, const VRep& v) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < v.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < v.vertices.size(); ++j) {
      const RatVector mid = scale(add(v.vertices[i], v.vertices[j]), Rational(1, 2));
      if (face_dimension(p, mid) == 1) out.push_back({i, j});
    }
  return out;
}

// ---------------------------------------------------------------------------
// Fourier-Motzkin elimination

namespace {

struct Row {
  RatVector a;
  Rational rhs;
  friend bool operator<(const Row& x, const Row& y) { return std::tie(x.a, x.rhs) < std::tie(y.a, y.rhs); }
};

// Scales (a, rhs) by a positive factor so that a is a primitive integer vector.
// Returns false when a = 0.
bool normalize(Row& r) {
  if (is_zero(r.a)) return false;
  const RatVector prim = primitive_integer(r.a);
  std::size_t j = 0;
  while (sgn(r.a[j]) == 0) ++j;
  const Rational factor = prim[j] / r.a[j];
  r.a = prim;
  r.rhs *= factor;
  return true;
}

class Eliminator {
 public:
  Eliminator(std::size_t nvars, std::vector<Row> eqs, std::vector<Row> ineqs)
      : nvars_(nvars), eqs_(std::move(eqs)), ineqs_(std::move(ineqs)), active_(nvars, true) {}

  void eliminate(const std::vector<std::size_t>& vars) {
    std::set<std::size_t> todo(vars.begin(), vars.end());
    substitute_equalities(todo);
    tidy();
    remove_redundant();
    while (!todo.empty()) {
      std::size_t best = *todo.begin();
      long best_cost = -1;
      for (auto v : todo) {
        long pos = 0, neg = 0;
        for (const auto& r : ineqs_) {
          pos += sgn(r.a[v]) > 0;
          neg += sgn(r.a[v]) < 0;
        }
        const long cost = pos * neg - pos - neg;
        if (best_cost == -1 || cost < best_cost) {
          best = v;
          best_cost = cost;
        }
      }
      fm_step(best);
      todo.erase(best);
      active_[best] = false;
      tidy();
      remove_redundant();
    }
  }

  const std::vector<Row>& equalities() const { return eqs_; }
  const std::vector<Row>& inequalities() const { return ineqs_; }

 private:
  void substitute_equalities(std::set<std::size_t>& todo) {
    for (;;) {
      bool progress = false;
      for (std::size_t e = 0; e < eqs_.size() && !progress; ++e) {
        const auto it = std::find_if(todo.begin(), todo.end(), [&](std::size_t v) { return sgn(eqs_[e].a[v]) != 0; });
        if (it == todo.end()) continue;
        const std::size_t v = *it;
        const Row pivot = eqs_[e];
        eqs_.erase(eqs_.begin() + static_cast<std::ptrdiff_t>(e));
        auto reduce = [&](Row& r) {
          if (sgn(r.a[v]) == 0) return;
          const Rational f = r.a[v] / pivot.a[v];
          for (std::size_t j = 0; j < nvars_; ++j) r.a[j] -= f * pivot.a[j];
          r.rhs -= f * pivot.rhs;
        };
        for (auto& r : eqs_) reduce(r);
        for (auto& r : ineqs_) reduce(r);
        todo.erase(v);
        active_[v] = false;
        progress = true;
      }
      if (!progress) break;
    }
    std::vector<Row> kept;
    for (auto& r : eqs_) {
      if (is_zero(r.a)) {
        if (sgn(r.rhs) != 0) throw EmptyPolyhedron();
        continue;
      }
      kept.push_back(std::move(r));
    }
    eqs_ = std::move(kept);
  }

  void fm_step(std::size_t v) {
    std::vector<Row> pos, neg, next;
    for (auto& r : ineqs_) {
      const int s = sgn(r.a[v]);
      if (s > 0)
        pos.push_back(std::move(r));
      else if (s < 0)
        neg.push_back(std::move(r));
      else
        next.push_back(std::move(r));
    }
    for (const auto& rp : pos)
      for (const auto& rn : neg) {
        const Rational wp = -rn.a[v], wn = rp.a[v];
        Row c{RatVector(nvars_), wp * rp.rhs + wn * rn.rhs};
        for (std::size_t j = 0; j < nvars_; ++j) c.a[j] = wp * rp.a[j] + wn * rn.a[j];
        c.a[v] = 0;
        next.push_back(std::move(c));
      }
    ineqs_ = std::move(next);
  }

  // Normalizes rows, drops trivial ones, keeps the tightest copy of parallel rows.
  void tidy() {
    std::set<Row> rows;
    for (auto& r : ineqs_) {
      if (!normalize(r)) {
        if (sgn(r.rhs) < 0) throw EmptyPolyhedron();
        continue;
      }
      rows.insert(std::move(r));
    }
    ineqs_.clear();
    for (auto it = rows.begin(); it != rows.end(); ++it) {
      if (!ineqs_.empty() && ineqs_.back().a == it->a) continue;  // set order puts the smallest rhs first
      ineqs_.push_back(*it);
    }
  }

  HPolyhedron as_polyhedron(std::size_t skip) const {
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < nvars_; ++j)
      if (active_[j]) cols.push_back(j);
    auto restrict = [&](const RatVector& a) {
      RatVector out(cols.size());
      for (std::size_t k = 0; k < cols.size(); ++k) out[k] = a[cols[k]];
      return out;
    };
    HPolyhedron p(cols.size());
    for (const auto& r : eqs_) p.add_equality(restrict(r.a), r.rhs);
    for (std::size_t i = 0; i < ineqs_.size(); ++i)
      if (i != skip) p.add_inequality(restrict(ineqs_[i].a), ineqs_[i].rhs);
    return p;
  }

  void remove_redundant() {
    for (std::size_t i = 0; i < ineqs_.size();) {
      const HPolyhedron rest = as_polyhedron(i);
      std::vector<std::size_t> cols;
      RatVector a;
      for (std::size_t j = 0; j < nvars_; ++j)
        if (active_[j]) a.push_back(ineqs_[i].a[j]);
      if (is_implied(a, ineqs_[i].rhs, rest))
        ineqs_.erase(ineqs_.begin() + static_cast<std::ptrdiff_t>(i));
      else
        ++i;
    }
  }

  std::size_t nvars_;
  std::vector<Row> eqs_;
  std::vector<Row> ineqs_;
  std::vector<bool> active_;
};

}  // namespace

HPolyhedron project(const HPolyhedron& p, const LinearMap& pi) {
  p.validate();
  if (pi.source_dim() != p.ambient_dim) throw InvalidArgument("project: map source dimension mismatch");
  if (!is_feasible(p)) throw EmptyPolyhedron();
  const std::size_t nx = pi.target_dim(), ny = p.ambient_dim, nv = nx + ny;

  std::vector<Row> eqs, ineqs;
  for (std::size_t i = 0; i < nx; ++i) {
    Row r{RatVector(nv), 0};
    r.a[i] = 1;
    for (std::size_t j = 0; j < ny; ++j) r.a[nx + j] = -pi.matrix(i, j);
    eqs.push_back(std::move(r));
  }
  for (std::size_t i = 0; i < p.A.rows(); ++i) {
    Row r{RatVector(nv), p.b[i]};
    for (std::size_t j = 0; j < ny; ++j) r.a[nx + j] = p.A(i, j);
    eqs.push_back(std::move(r));
  }
  for (std::size_t i = 0; i < p.B.rows(); ++i) {
    Row r{RatVector(nv), p.d[i]};
    for (std::size_t j = 0; j < ny; ++j) r.a[nx + j] = p.B(i, j);
    ineqs.push_back(std::move(r));
  }

  Eliminator elim(nv, std::move(eqs), std::move(ineqs));
  std::vector<std::size_t> ys(ny);
  for (std::size_t j = 0; j < ny; ++j) ys[j] = nx + j;
  elim.eliminate(ys);

  HPolyhedron out(nx, p.name.empty() ? std::string{} : "image of " + p.name);
  auto head = [&](const RatVector& a) { return RatVector(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(nx)); };
  for (const auto& r : elim.equalities()) out.add_equality(head(r.a), r.rhs);
  for (const auto& r : elim.inequalities()) out.add_inequality(head(r.a), r.rhs);
  return minimize_description(out);
}

HPolyhedron preimage(const HPolyhedron& p, const LinearMap& tau) {
  p.validate();
  if (tau.target_dim() != p.ambient_dim) throw InvalidArgument("preimage: map target dimension mismatch");
  HPolyhedron out(tau.source_dim(), p.name);
  out.A = matmul(p.A, tau.matrix);
  out.b = p.b;
  out.B = matmul(p.B, tau.matrix);
  out.d = p.d;
  out.eq_labels = p.eq_labels;
  out.ineq_labels = p.ineq_labels;
  return out;
}

HPolyhedron cartesian_product(const HPolyhedron& p1, const HPolyhedron& p2) {
  p1.validate();
  p2.validate();
  const std::size_t n1 = p1.ambient_dim, n = n1 + p2.ambient_dim;
  HPolyhedron out(n, p1.name + " x " + p2.name);
  auto pad = [&](const RatVector& a, std::size_t offset) {
    RatVector r(n);
    std::copy(a.begin(), a.end(), r.begin() + static_cast<std::ptrdiff_t>(offset));
    return r;
  };
  const bool labelled = p1.has_labels() || p2.has_labels();
  auto lbl = [&](const std::vector<std::string>& labels, std::size_t i, const char* tag) {
    return labelled ? std::string(tag) + ":" + label_at(labels, i) : std::string{};
  };
  for (std::size_t i = 0; i < p1.A.rows(); ++i) out.add_equality(pad(p1.A.row(i), 0), p1.b[i], lbl(p1.eq_labels, i, "1"));
  for (std::size_t i = 0; i < p2.A.rows(); ++i) out.add_equality(pad(p2.A.row(i), n1), p2.b[i], lbl(p2.eq_labels, i, "2"));
  for (std::size_t i = 0; i < p1.B.rows(); ++i)
    out.add_inequality(pad(p1.B.row(i), 0), p1.d[i], lbl(p1.ineq_labels, i, "1"));
  for (std::size_t i = 0; i < p2.B.rows(); ++i)
    out.add_inequality(pad(p2.B.row(i), n1), p2.d[i], lbl(p2.ineq_labels, i, "2"));
  return out;
}

HPolyhedron minkowski_sum(const HPolyhedron& p1, const HPolyhedron& p2) {
  if (p1.ambient_dim != p2.ambient_dim) throw InvalidArgument("minkowski_sum: ambient dimensions differ");
  const std::size_t n = p1.ambient_dim;
  RatMatrix sum(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    sum(i, i) = 1;
    sum(i, n + i) = 1;
  }
  HPolyhedron out = project(cartesian_product(p1, p2), LinearMap{sum});
  out.name = p1.name + " + " + p2.name;
  return out;
}

HPolyhedron homogenize(const HPolyhedron& p) {
  p.validate();
  const std::size_t n = p.ambient_dim;
  HPolyhedron h(n + 1, p.name.empty() ? std::string{} : "hom(" + p.name + ")");
  auto row = [&](const Rational& t_coef, const RatVector& a) {
    RatVector r(n + 1);
    r[0] = t_coef;
    std::copy(a.begin(), a.end(), r.begin() + 1);
    return r;
  };
  const bool labelled = p.has_labels();
  h.add_inequality(row(-1, RatVector(n)), 0, labelled ? "t>=0" : "");
  for (std::size_t i = 0; i < p.A.rows(); ++i) h.add_equality(row(-p.b[i], p.A.row(i)), 0, label_at(p.eq_labels, i));
  for (std::size_t i = 0; i < p.B.rows(); ++i)
    h.add_inequality(row(-p.d[i], p.B.row(i)), 0, label_at(p.ineq_labels, i));
  return h;
}

HPolyhedron dehomogenize(const HPolyhedron& h) {
  h.validate();
  if (h.ambient_dim == 0) throw InvalidArgument("dehomogenize: ambient dimension 0");
  HPolyhedron p(h.ambient_dim - 1, h.name);
  auto tail = [](const RatVector& r) { return RatVector(r.begin() + 1, r.end()); };
  for (std::size_t i = 0; i < h.A.rows(); ++i) p.add_equality(tail(h.A.row(i)), h.b[i] - h.A(i, 0));
  for (std::size_t i = 0; i < h.B.rows(); ++i) p.add_inequality(tail(h.B.row(i)), h.d[i] - h.B(i, 0));
  return p;
}

SlackForm slack_standard_form(const HPolyhedron& p) {
  if (!is_pointed(p)) throw NotPointed();
  const std::size_t q = p.B.rows(), np = p.A.rows();
  // Columns of [B^T A^T]; a kernel vector (u, v) gives u^T B + v^T A = 0.
  RatMatrix m(p.ambient_dim, q + np);
  for (std::size_t j = 0; j < p.ambient_dim; ++j) {
    for (std::size_t i = 0; i < q; ++i) m(j, i) = p.B(i, j);
    for (std::size_t i = 0; i < np; ++i) m(j, q + i) = p.A(i, j);
  }
  SlackForm out{HPolyhedron(q, p.name.empty() ? std::string{} : "slack(" + p.name + ")"), {}};
  for (const auto& w : kernel_basis(m)) {
    const RatVector u(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(q));
    const RatVector v(w.begin() + static_cast<std::ptrdiff_t>(q), w.end());
    out.standard.add_equality(u, dot(u, p.d) + dot(v, p.b));
  }
  for (std::size_t i = 0; i < q; ++i) out.standard.add_inequality(scale(unit_vector(q, i), -1), 0);
  out.sigma.linear = RatMatrix(q, p.ambient_dim);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < p.ambient_dim; ++j) out.sigma.linear(i, j) = -p.B(i, j);
  out.sigma.offset = p.d;
  return out;
}

bool contained_in(const HPolyhedron& inner, const HPolyhedron& outer) {
  if (inner.ambient_dim != outer.ambient_dim) throw InvalidArgument("contained_in: ambient dimensions differ");
  if (!is_feasible(inner)) return true;
  for (std::size_t i = 0; i < outer.A.rows(); ++i) {
    if (!is_implied(outer.A.row(i), outer.b[i], inner)) return false;
    if (!is_implied(scale(outer.A.row(i), -1), -outer.b[i], inner)) return false;
  }
  for (std::size_t i = 0; i < outer.B.rows(); ++i)
    if (!is_implied(outer.B.row(i), outer.d[i], inner)) return false;
  return true;
}

bool same_point_set(const HPolyhedron& p1, const HPolyhedron& p2) {
  return contained_in(p1, p2) && contained_in(p2, p1);
}

HPolyhedron hull(const std::vector<RatVector>& points, const std::vector<RatVector>& rays, std::size_t ambient_dim) {
  if (points.empty()) throw EmptyPolyhedron();
  const std::size_t np = points.size(), nr = rays.size();
  HPolyhedron lam(np + nr);
  RatVector ones(np + nr);
  for (std::size_t i = 0; i < np; ++i) ones[i] = 1;
  lam.add_equality(ones, 1);
  for (std::size_t i = 0; i < np + nr; ++i) lam.add_inequality(scale(unit_vector(np + nr, i), -1), 0);
  std::vector<RatVector> cols = points;
  cols.insert(cols.end(), rays.begin(), rays.end());
  return project(lam, LinearMap{RatMatrix::from_columns(cols, ambient_dim)});
}

}  // namespace polycirc
