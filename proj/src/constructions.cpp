#include "polycirc/constructions.hpp"

#include <random>

#include "polycirc/errors.hpp"
#include "polycirc/lp.hpp"

namespace polycirc {

LinearMap pi_matrix(std::size_t n, std::size_t m) {
  if (n < 3 || m <= n) throw InvalidArgument("pi_matrix: requires m > n >= 3");
  RatMatrix M(n, m);
  const long top[3][4] = {{2, 1, 0, 0}, {0, 0, 2, 1}, {0, 1, 0, 1}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 4; ++j) M(i, j) = top[i][j];
  for (std::size_t i = 3; i < n; ++i) M(i, i + 1) = 2;
  return {M};
}

LinearMap pi_alpha_matrix(std::size_t m, long alpha) {
  if (m < 4 || alpha < 2) throw InvalidArgument("pi_alpha_matrix: requires m >= 4 and alpha >= 2");
  RatMatrix M(m - 1, m);
  M(0, 0) = alpha;
  M(0, 1) = 1;
  M(1, 2) = alpha;
  M(1, 3) = 1;
  M(2, 1) = alpha - 1;
  M(2, 3) = alpha - 1;
  for (std::size_t i = 3; i + 1 < m; ++i) M(i, i + 1) = alpha;
  return {M};
}

LinearMap pi_prime_matrix(std::size_t n, std::size_t m) {
  if (n < 3 || m < n + 3) throw InvalidArgument("pi_prime_matrix: requires n >= 3 and m >= n + 3");
  RatMatrix M(n, m);
  const long top[3][6] = {{1, 1, 2, 0, 0, 0}, {0, 0, 0, 1, 1, 2}, {0, 1, 1, 0, 1, 1}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 6; ++j) M(i, j) = top[i][j];
  for (std::size_t i = 3; i < n; ++i) M(i, i + 3) = 1;
  return {M};
}

HPolyhedron orthant(std::size_t m) {
  HPolyhedron p(m, "orthant" + std::to_string(m));
  for (std::size_t i = 0; i < m; ++i) p.add_lower(unit_vector(m, i), 0);
  return p;
}

HPolyhedron hypercube(std::size_t m) {
  HPolyhedron p = orthant(m);
  p.name = "cube" + std::to_string(m);
  for (std::size_t i = 0; i < m; ++i) p.add_inequality(unit_vector(m, i), 1);
  return p;
}

HPolyhedron simplex(std::size_t m) {
  HPolyhedron p = orthant(m);
  p.name = "simplex" + std::to_string(m);
  p.add_inequality(RatVector(m, Rational(1)), 1);
  return p;
}

HPolyhedron cross_polytope(std::size_t n) {
  if (n == 0 || n > 20) throw InvalidArgument("cross_polytope: n must be in 1..20");
  HPolyhedron p(n, "cross" + std::to_string(n));
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    RatVector y(n);
    for (std::size_t i = 0; i < n; ++i) y[i] = (mask >> (n - 1 - i) & 1) ? -1 : 1;
    p.add_inequality(y, 1);
  }
  return p;
}

HPolyhedron cropped_cross_polytope(std::size_t n, const Rational& delta) {
  if (delta <= Rational(1, 2) || delta >= 1) throw InvalidArgument("cropped_cross_polytope: delta must lie in (1/2, 1)");
  HPolyhedron p = cross_polytope(n);
  p.name = "cropped_cross" + std::to_string(n);
  for (std::size_t i = 0; i < n; ++i) p.add_lower(unit_vector(n, i), -delta);
  for (std::size_t i = 0; i < n; ++i) p.add_inequality(unit_vector(n, i), delta);
  return p;
}

HPolyhedron transportation(std::size_t n, std::size_t k, const std::vector<long>& kappa) {
  if (n == 0 || k == 0 || kappa.size() != k) throw InvalidArgument("transportation: need k cluster sizes");
  long total = 0;
  for (long c : kappa) {
    if (c < 1) throw InvalidArgument("transportation: cluster sizes must be positive");
    total += c;
  }
  if (total != static_cast<long>(n)) throw InvalidArgument("transportation: cluster sizes must sum to n");
  const std::size_t dim = k * n;
  HPolyhedron p(dim, "T(" + std::to_string(n) + "," + std::to_string(k) + ")");
  for (std::size_t i = 0; i < k; ++i) {
    RatVector r(dim);
    for (std::size_t j = 0; j < n; ++j) r[i * n + j] = 1;
    p.add_equality(r, kappa[i]);
  }
  for (std::size_t j = 0; j < n; ++j) {
    RatVector r(dim);
    for (std::size_t i = 0; i < k; ++i) r[i * n + j] = 1;
    p.add_equality(r, 1);
  }
  for (std::size_t v = 0; v < dim; ++v) p.add_lower(unit_vector(dim, v), 0);
  return p;
}

LinearMap partition_projection(const PartitionInstance& inst) {
  if (inst.X.empty() || inst.k == 0) throw InvalidArgument("partition_projection: empty instance");
  const std::size_t n = inst.X.size(), d = inst.X[0].size(), k = inst.k;
  RatMatrix M(d * k, k * n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (inst.X[j].size() != d) throw InvalidArgument("partition_projection: points differ in dimension");
      for (std::size_t r = 0; r < d; ++r) M(i * d + r, i * n + j) = inst.X[j][r];
    }
  return {M};
}

// ---------------------------------------------------------------------------

BalasExtension balas_extension(const DisjunctiveFamily& family) {
  const std::size_t p = family.pieces.size();
  if (p == 0) throw InvalidArgument("balas_extension: empty family");
  const std::size_t n = family.pieces[0].ambient_dim, dim = p + p * n;
  for (const auto& piece : family.pieces) {
    if (piece.ambient_dim != n) throw InvalidArgument("balas_extension: pieces differ in dimension");
    if (!is_feasible(piece)) throw InvalidArgument("balas_extension: empty piece");
  }
  HPolyhedron Q(dim, "balas");
  for (std::size_t i = 0; i < p; ++i) Q.add_lower(unit_vector(dim, i), 0);
  RatVector ones(dim);
  for (std::size_t i = 0; i < p; ++i) ones[i] = 1;
  Q.add_equality(ones, 1);
  for (std::size_t i = 0; i < p; ++i) {
    const auto& piece = family.pieces[i];
    const std::size_t off = p + i * n;
    for (std::size_t r = 0; r < piece.A.rows(); ++r) {
      RatVector row(dim);
      row[i] = -piece.b[r];
      for (std::size_t j = 0; j < n; ++j) row[off + j] = piece.A(r, j);
      Q.add_equality(row, 0);
    }
    for (std::size_t r = 0; r < piece.B.rows(); ++r) {
      RatVector row(dim);
      row[i] = -piece.d[r];
      for (std::size_t j = 0; j < n; ++j) row[off + j] = piece.B(r, j);
      Q.add_inequality(row, 0);
    }
  }
  RatMatrix sum(n, dim);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < n; ++j) sum(j, p + i * n + j) = 1;
  return {std::move(Q), {sum}};
}

HPolyhedron singleton(const RatVector& v) {
  HPolyhedron p(v.size(), "point");
  for (std::size_t i = 0; i < v.size(); ++i) p.add_equality(unit_vector(v.size(), i), v[i]);
  return p;
}

HPolyhedron parallelogram(const RatVector& u, const RatVector& v, const RatVector& z, const Rational& eps) {
  const std::size_t n = u.size();
  const RatVector h = sub(u, v);
  if (is_zero(h) || is_zero(z) || sgn(dot(h, z)) != 0 || sgn(eps) <= 0)
    throw InvalidArgument("parallelogram: need u != v, z != 0 orthogonal to u - v, eps > 0");
  const RatVector mid = scale(add(u, v), Rational(1, 2));
  HPolyhedron p(n, "parallelogram");
  for (const auto& w : kernel_basis(RatMatrix::from_rows({h, z}, n))) p.add_equality(w, dot(w, mid));
  // s = <h, x - mid> / (|h|^2 / 2) and t = <z, x - mid> / (eps |z|^2); the piece is |s| + |t| <= 1.
  const RatVector hs = scale(h, 2 / dot(h, h));
  const RatVector zs = scale(z, 1 / (eps * dot(z, z)));
  for (int sh : {1, -1})
    for (int sz : {1, -1}) {
      const RatVector a = add(scale(hs, sh), scale(zs, sz));
      p.add_inequality(a, 1 + dot(a, mid));
    }
  return p;
}

namespace {

// True iff conv(s1) and conv(s2) can be strictly separated by a hyperplane
// whose normal is orthogonal to g, i.e. conv(s1) - conv(s2) misses the line R g.
bool separable_along(const std::vector<RatVector>& s1, const std::vector<RatVector>& s2, const RatVector& g) {
  const std::size_t n = g.size(), a = s1.size(), b = s2.size(), dim = a + b + 1;
  HPolyhedron sys(dim);
  for (std::size_t r = 0; r < n; ++r) {
    RatVector row(dim);
    for (std::size_t i = 0; i < a; ++i) row[i] = s1[i][r];
    for (std::size_t j = 0; j < b; ++j) row[a + j] = -s2[j][r];
    row[a + b] = -g[r];
    sys.add_equality(row, 0);
  }
  RatVector w1(dim), w2(dim);
  for (std::size_t i = 0; i < a; ++i) w1[i] = 1;
  for (std::size_t j = 0; j < b; ++j) w2[a + j] = 1;
  sys.add_equality(w1, 1);
  sys.add_equality(w2, 1);
  for (std::size_t i = 0; i < a + b; ++i) sys.add_lower(unit_vector(dim, i), 0);
  return !is_feasible(sys);
}

}  // namespace

NonInheritingExtension non_inheriting_extension(const HPolyhedron& p, const RatVector& g) {
  if (g.size() != p.ambient_dim || is_zero(g)) throw InvalidArgument("non_inheriting_extension: g must be nonzero in R^n");
  if (!is_pointed(p)) throw NotPointed();
  const std::size_t n = p.ambient_dim;
  const VRep vr = vrep(p);
  if (edge_directions(p).contains(g)) throw EdgeDirectionGiven("g is an edge direction; every extension inherits it");

  // Pairs of vertices whose difference is parallel to g, with a direction z
  // in the minimal face orthogonal to u - v.
  struct Pair {
    std::size_t u, v;
    RatVector z;
  };
  std::vector<Pair> pairs;
  std::vector<bool> paired(vr.vertices.size(), false);
  for (std::size_t i = 0; i < vr.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vr.vertices.size(); ++j) {
      const RatVector h = sub(vr.vertices[i], vr.vertices[j]);
      if (!parallel(h, g)) continue;
      const RatVector mid = scale(add(vr.vertices[i], vr.vertices[j]), Rational(1, 2));
      RatMatrix tight = p.A;
      const RatVector bx = matvec(p.B, mid);
      for (std::size_t r = 0; r < p.B.rows(); ++r)
        if (bx[r] == p.d[r]) tight.append_row(p.B.row(r));
      RatVector z;
      for (const auto& w : kernel_basis(tight)) {
        const RatVector c = sub(w, scale(h, dot(w, h) / dot(h, h)));
        if (!is_zero(c)) {
          z = primitive_integer(c);
          break;
        }
      }
      if (z.empty()) throw CorrespondenceViolation("minimal face of a non-edge pair has dimension 1");
      pairs.push_back({i, j, z});
      paired[i] = paired[j] = true;
    }

  NonInheritingExtension out;
  Rational eps = 1;
  for (int attempt = 0;; ++attempt, eps /= 2) {
    if (attempt > 64) throw CorrespondenceViolation("non_inheriting_extension: no admissible parallelogram width");
    std::vector<std::vector<RatVector>> members;
    bool ok = true;
    for (const auto& pr : pairs) {
      const RatVector& u = vr.vertices[pr.u];
      const RatVector& v = vr.vertices[pr.v];
      const RatVector mid = scale(add(u, v), Rational(1, 2));
      const RatVector a = add(mid, scale(pr.z, eps)), b = sub(mid, scale(pr.z, eps));
      if (!p.contains(a) || !p.contains(b)) {
        ok = false;
        break;
      }
      members.push_back({u, v, a, b});
    }
    if (!ok) continue;
    for (std::size_t i = 0; i < vr.vertices.size(); ++i)
      if (!paired[i]) members.push_back({vr.vertices[i]});
    for (std::size_t i = 0; i < members.size() && ok; ++i)
      for (std::size_t j = i + 1; j < members.size() && ok; ++j) ok = separable_along(members[i], members[j], g);
    if (!ok) continue;

    for (const auto& pr : pairs)
      out.family.pieces.push_back(parallelogram(vr.vertices[pr.u], vr.vertices[pr.v], pr.z, eps));
    for (std::size_t i = 0; i < vr.vertices.size(); ++i)
      if (!paired[i]) out.family.pieces.push_back(singleton(vr.vertices[i]));
    out.eps = eps;
    break;
  }

  out.balas = balas_extension(out.family);
  out.rays = vr.rays;
  if (out.rays.empty()) {
    out.Q = out.balas.Q;
    out.pi = out.balas.summation;
  } else {
    const std::size_t qd = out.balas.Q.ambient_dim, nr = out.rays.size();
    out.Q = cartesian_product(out.balas.Q, orthant(nr));
    RatMatrix M(n, qd + nr);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t j = 0; j < qd; ++j) M(r, j) = out.balas.summation.matrix(r, j);
      for (std::size_t j = 0; j < nr; ++j) M(r, qd + j) = out.rays[j][r];
    }
    out.pi = {M};
  }
  out.Q.name = "extension";

  if (apply_map(out.pi, enumerate_circuits(out.Q)).contains(g))
    throw CorrespondenceViolation("non_inheriting_extension: g is still inherited");
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// The tight rows at 0 must be positive multiples of -e_1, ..., -e_m, one each.
void require_orthant_position(const HPolyhedron& q) {
  const std::size_t m = q.ambient_dim;
  if (m < 4) throw PreconditionViolation("find_alpha_projection: dimension must be at least 4");
  if (q.A.rows() != 0) throw PreconditionViolation("find_alpha_projection: Q must be full-dimensional without equalities");
  if (!q.contains(RatVector(m))) throw PreconditionViolation("find_alpha_projection: 0 is not in Q");
  std::vector<int> hits(m, 0);
  std::size_t tight = 0;
  for (std::size_t r = 0; r < q.B.rows(); ++r) {
    if (sgn(q.d[r]) != 0) continue;
    ++tight;
    const RatVector row = q.B.row(r);
    std::size_t nz = 0, at = 0;
    for (std::size_t j = 0; j < m; ++j)
      if (sgn(row[j]) != 0) {
        ++nz;
        at = j;
      }
    if (nz != 1 || sgn(row[at]) >= 0) throw PreconditionViolation("find_alpha_projection: inner cone at 0 is not the orthant");
    ++hits[at];
  }
  if (tight != m) throw PreconditionViolation("find_alpha_projection: 0 is not a non-degenerate vertex");
  for (int h : hits)
    if (h != 1) throw PreconditionViolation("find_alpha_projection: inner cone at 0 is not the orthant");
}

bool in_line_of_e3(const RatVector& x) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (i != 2 && sgn(x[i]) != 0) return false;
  return true;
}

}  // namespace

AlphaProjection find_alpha_projection(const HPolyhedron& q, long max_alpha) {
  require_orthant_position(q);
  const std::size_t m = q.ambient_dim;
  const CircuitSet cq = enumerate_circuits(q);
  AlphaProjection out;
  for (long alpha = 2; alpha <= max_alpha; ++alpha) {
    const LinearMap pi = pi_alpha_matrix(m, alpha);
    bool hit = false;
    for (const auto& c : cq)
      if (in_line_of_e3(pi.apply(c))) {
        hit = true;
        break;
      }
    if (hit) {
      out.rejected.push_back(alpha);
      continue;
    }
    out.alpha = alpha;
    out.pi = pi;
    out.image = project(q, pi);
    const RatVector e3 = unit_vector(m - 1, 2);
    if (!enumerate_circuits(out.image).contains(e3) || apply_map(pi, cq).contains(e3))
      throw CorrespondenceViolation("find_alpha_projection: e3 witness check failed");
    return out;
  }
  throw PreconditionViolation("find_alpha_projection: no admissible alpha up to " + std::to_string(max_alpha));
}

OrthantPosition transform_to_orthant_position(const HPolyhedron& q, const RatVector& v) {
  const HPolyhedron qm = minimize_description(q);
  const std::size_t m = qm.ambient_dim;
  if (qm.A.rows() != 0) throw PreconditionViolation("transform_to_orthant_position: Q is not full-dimensional");
  if (v.size() != m || !qm.contains(v)) throw PreconditionViolation("transform_to_orthant_position: v is not in Q");
  std::vector<std::size_t> tight, rest;
  const RatVector bv = matvec(qm.B, v);
  for (std::size_t r = 0; r < qm.B.rows(); ++r) (bv[r] == qm.d[r] ? tight : rest).push_back(r);
  const RatMatrix bt = qm.B.select_rows(tight);
  if (tight.size() != m || rank(bt) != m)
    throw DegenerateVertex("v lies on " + std::to_string(tight.size()) + " facets; a non-degenerate vertex lies on " +
                           std::to_string(m));
  const RatMatrix inv = *inverse(bt);
  RatVector dt(m);
  for (std::size_t i = 0; i < m; ++i) dt[i] = qm.d[tight[i]];

  OrthantPosition out{HPolyhedron(m, q.name.empty() ? std::string{} : q.name + " at vertex"), {}, {}};
  out.forward.linear = RatMatrix(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) out.forward.linear(i, j) = -bt(i, j);
  out.forward.offset = dt;
  out.backward.linear = RatMatrix(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) out.backward.linear(i, j) = -inv(i, j);
  out.backward.offset = matvec(inv, dt);

  // B x <= d with x = B_T^{-1}(d_T - y) becomes -B B_T^{-1} y <= d - B B_T^{-1} d_T.
  auto add_row = [&](std::size_t r) {
    const RatVector brow = qm.B.row(r);
    RatVector a(m);
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) a[j] -= brow[k] * inv(k, j);
    Rational rhs = qm.d[r] + dot(a, dt);
    const RatVector prim = primitive_integer(a);
    std::size_t j = 0;
    while (sgn(a[j]) == 0) ++j;
    rhs *= prim[j] / a[j];
    out.Q.add_inequality(prim, rhs);
  };
  for (auto r : tight) add_row(r);
  for (auto r : rest) add_row(r);
  return out;
}

LinearMap tau_transfer(const LinearMap& pi, const LinearMap& sigma) {
  const std::size_t n = pi.target_dim(), m = pi.source_dim();
  if (sigma.target_dim() != n || sigma.source_dim() != m) throw InvalidArgument("tau_transfer: maps differ in shape");
  if (rank(pi.matrix) != n || rank(sigma.matrix) != n) throw InvalidArgument("tau_transfer: rank deficiency");
  if (pi == sigma) return {RatMatrix::identity(m)};

  RatMatrix R(m, n);
  for (std::size_t i = 0; i < n; ++i) {
    const RatVector col = *solve(sigma.matrix, unit_vector(n, i));
    for (std::size_t r = 0; r < m; ++r) R(r, i) = col[r];
  }
  const RatMatrix K = RatMatrix::from_columns(kernel_basis(sigma.matrix), m);
  const auto pivots = rref(pi.matrix).pivots;
  RatMatrix W(m - n, m);
  std::size_t k = 0;
  for (std::size_t j = 0, pv = 0; j < m; ++j) {
    if (pv < pivots.size() && pivots[pv] == j) {
      ++pv;
      continue;
    }
    W(k++, j) = 1;
  }
  const RatMatrix rp = matmul(R, pi.matrix), kw = matmul(K, W);
  RatMatrix tau(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) tau(i, j) = rp(i, j) + kw(i, j);
  if (!(matmul(sigma.matrix, tau) == pi.matrix) || !inverse(tau))
    throw CorrespondenceViolation("tau_transfer: construction check failed");
  return {tau};
}

HPolyhedron perturbed_orthant_polytope(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (;;) {
    const Rational a(static_cast<long>(5 + rng() % 10), 5), b(static_cast<long>(5 + rng() % 10), 5);
    const Rational c(static_cast<long>(2 + rng() % 4), 5);
    HPolyhedron q = orthant(4);
    q.name = "perturbed4_" + std::to_string(seed);
    q.add_inequality({2, 1, a, b}, 4);
    q.add_inequality({0, 0, 1, 1}, c);
    // Accept only simple polytopes (every vertex on exactly four facets).
    const VRep vr = vrep(q);
    bool simple = true;
    for (const auto& v : vr.vertices) {
      const RatVector bv = matvec(q.B, v);
      std::size_t t = 0;
      for (std::size_t r = 0; r < q.B.rows(); ++r) t += bv[r] == q.d[r];
      if (t != 4) simple = false;
    }
    if (simple) return q;
  }
}

}  // namespace polycirc
