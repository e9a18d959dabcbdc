#include "polycirc/circuits.hpp"

#include <algorithm>
#include <map>

#include "polycirc/errors.hpp"

namespace polycirc {

CircuitSet::CircuitSet(std::size_t dim, std::string source) : dim_(dim), source_(std::move(source)) {}

bool CircuitSet::insert(const RatVector& v) {
  if (v.size() != dim_) throw InvalidArgument("CircuitSet::insert: dimension mismatch");
  if (is_zero(v)) throw InvalidArgument("CircuitSet::insert: zero vector");
  return dirs_.insert(canonicalize_direction(v)).second;
}

bool CircuitSet::contains(const RatVector& v) const {
  if (v.size() != dim_ || is_zero(v)) return false;
  return dirs_.count(canonicalize_direction(v)) > 0;
}

CircuitSet CircuitSet::lineality(std::size_t dim, std::vector<RatVector> basis, std::string source) {
  CircuitSet c(dim, std::move(source));
  c.kind_ = CircuitKind::Lineality;
  c.lineality_ = std::move(basis);
  return c;
}

bool CircuitSet::subset_of(const CircuitSet& other) const {
  return std::includes(other.dirs_.begin(), other.dirs_.end(), dirs_.begin(), dirs_.end());
}

CircuitSet CircuitSet::intersect(const CircuitSet& other) const {
  CircuitSet out(dim_, source_);
  std::set_intersection(dirs_.begin(), dirs_.end(), other.dirs_.begin(), other.dirs_.end(),
                        std::inserter(out.dirs_, out.dirs_.end()));
  return out;
}

CircuitSet CircuitSet::minus(const CircuitSet& other) const {
  CircuitSet out(dim_, source_);
  std::set_difference(dirs_.begin(), dirs_.end(), other.dirs_.begin(), other.dirs_.end(),
                      std::inserter(out.dirs_, out.dirs_.end()));
  return out;
}

CircuitSet CircuitSet::unite(const CircuitSet& other) const {
  CircuitSet out(dim_, source_);
  std::set_union(dirs_.begin(), dirs_.end(), other.dirs_.begin(), other.dirs_.end(),
                 std::inserter(out.dirs_, out.dirs_.end()));
  return out;
}

CircuitSet apply_map(const LinearMap& pi, const CircuitSet& c) {
  if (pi.source_dim() != c.dim()) throw InvalidArgument("apply_map: dimension mismatch");
  CircuitSet out(pi.target_dim(), c.source().empty() ? std::string{} : "image of " + c.source());
  for (const auto& g : c) {
    const RatVector img = pi.apply(g);
    if (!is_zero(img)) out.insert(img);
  }
  return out;
}

namespace {

// Set of row indices as a bitmask.
class Support {
 public:
  explicit Support(std::size_t n = 0) : words_((n + 63) / 64, 0) {}
  static Support of(const RatVector& v) {
    Support s(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
      if (sgn(v[i]) != 0) s.words_[i / 64] |= std::uint64_t{1} << (i % 64);
    return s;
  }
  // True iff this is a proper subset of other.
  bool proper_subset_of(const Support& other) const {
    bool strict = false;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] & ~other.words_[w]) return false;
      if (words_[w] != other.words_[w]) strict = true;
    }
    return strict;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }

 private:
  std::vector<std::uint64_t> words_;
};

// Keeps the candidates whose support is minimal among all candidate supports.
std::vector<RatVector> support_minimal(const std::map<RatVector, Support>& cands) {
  std::vector<std::pair<const RatVector*, const Support*>> items;
  for (const auto& [g, s] : cands) items.push_back({&g, &s});
  std::vector<RatVector> out;
  for (const auto& [g, s] : items) {
    const std::size_t cs = s->count();
    bool minimal = true;
    for (const auto& [h, t] : items) {
      if (t->count() < cs && t->proper_subset_of(*s)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(*g);
  }
  return out;
}

std::string source_tag(const HPolyhedron& p) { return p.name.empty() ? std::string{} : "C(" + p.name + ")"; }

}  // namespace

CircuitSet enumerate_circuits(const HPolyhedron& p, std::uint64_t budget) {
  p.validate();
  const std::size_t n = p.ambient_dim;
  auto lin = lineality_basis(p);
  if (!lin.empty()) return CircuitSet::lineality(n, std::move(lin), source_tag(p));

  const auto kernel = kernel_basis(p.A);
  const std::size_t k = kernel.size(), q = p.B.rows();
  CircuitSet out(n, source_tag(p));
  if (k == 0) return out;
  const RatMatrix K = RatMatrix::from_columns(kernel, n);
  const RatMatrix bk = matmul(p.B, K);

  check_budget(q, k - 1, budget, "circuit enumeration");
  std::map<RatVector, Support> cands;
  for_each_combination(q, k - 1, [&](const std::vector<std::size_t>& rows) {
    const auto ker = kernel_basis(bk.select_rows(rows));
    if (ker.size() != 1) return true;
    const RatVector g = canonicalize_direction(matvec(K, ker[0]));
    if (!cands.count(g)) cands.emplace(g, Support::of(matvec(p.B, g)));
    return true;
  });
  for (auto& g : support_minimal(cands)) out.insert(g);
  return out;
}

CircuitSet enumerate_circuits_bruteforce(const HPolyhedron& p, std::uint64_t budget) {
  p.validate();
  const std::size_t n = p.ambient_dim, q = p.B.rows();
  RatMatrix all = p.A;
  for (std::size_t i = 0; i < q; ++i) all.append_row(p.B.row(i));
  const auto lin = kernel_basis(all);
  if (!lin.empty()) return CircuitSet::lineality(n, lin, source_tag(p));
  if (q >= 63 || (std::uint64_t{1} << q) > budget)
    throw BudgetExceeded("brute-force circuit oracle: 2^" + std::to_string(q) + " subsets exceed the budget");

  std::map<RatVector, Support> cands;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << q); ++mask) {
    RatMatrix m = p.A;
    for (std::size_t i = 0; i < q; ++i)
      if (mask >> i & 1) m.append_row(p.B.row(i));
    const auto ker = kernel_basis(m);
    if (ker.size() != 1) continue;
    const RatVector g = canonicalize_direction(ker[0]);
    if (!cands.count(g)) cands.emplace(g, Support::of(matvec(p.B, g)));
  }
  // Literal definition: g is kept iff no candidate h has supp(Bh) strictly inside supp(Bg).
  CircuitSet out(n, source_tag(p));
  for (const auto& [g, s] : cands) {
    bool minimal = true;
    for (const auto& [h, t] : cands)
      if (t.proper_subset_of(s)) minimal = false;
    if (minimal) out.insert(g);
  }
  return out;
}

BasicSolutionSet basic_solutions(const HPolyhedron& p, std::uint64_t budget) {
  if (!is_pointed(p)) throw NotPointed();
  BasicSolutionSet out{p.ambient_dim, {}};
  const auto red = reduce_to_kernel(p);
  if (!red) return out;
  const std::size_t k = red->kernel.cols(), q = p.B.rows();
  const RatMatrix& bk = red->reduced_B;

  // Basic solutions in reduced coordinates, with the support of B x - d.
  std::map<RatVector, Support> basic;
  auto slack_support = [&](const RatVector& y) { return Support::of(sub(matvec(bk, y), red->reduced_d)); };
  check_budget(q, k, budget, "basic solution enumeration");
  for_each_combination(q, k, [&](const std::vector<std::size_t>& rows) {
    const RatMatrix m = bk.select_rows(rows);
    if (rank(m) < k) return true;
    RatVector rhs(k);
    for (std::size_t i = 0; i < k; ++i) rhs[i] = red->reduced_d[rows[i]];
    const RatVector y = *solve(m, rhs);
    if (!basic.count(y)) basic.emplace(y, slack_support(y));
    return true;
  });

  auto has_smaller_support = [&](const Support& s) {
    for (const auto& [y, t] : basic)
      if (t.proper_subset_of(s)) return true;
    return false;
  };
  for (const auto& [y, s] : basic)
    if (has_smaller_support(s))
      throw CorrespondenceViolation("basic solution whose slack vector is not support-minimal");

  // Midpoints of pairs of basic solutions: basic by rank iff support-minimal.
  std::vector<const RatVector*> pts;
  for (const auto& [y, s] : basic) pts.push_back(&y);
  const std::size_t stride = std::max<std::size_t>(1, pts.size() / 16);
  for (std::size_t i = 0; i < pts.size(); i += stride)
    for (std::size_t j = i + 1; j < pts.size(); j += stride) {
      const RatVector mid = scale(add(*pts[i], *pts[j]), Rational(1, 2));
      const RatVector slack = sub(matvec(bk, mid), red->reduced_d);
      RatMatrix tight(0, k);
      for (std::size_t r = 0; r < q; ++r)
        if (sgn(slack[r]) == 0) tight.append_row(bk.row(r));
      const bool is_basic = rank(tight) == k;
      if (is_basic != !has_smaller_support(Support::of(slack)))
        throw CorrespondenceViolation("basic-solution rank test and support-minimality disagree");
    }

  for (const auto& [y, s] : basic) out.points.insert(add(red->particular, matvec(red->kernel, y)));
  return out;
}

HomCircuits circuits_of_homogenization(const HPolyhedron& p, std::uint64_t budget) {
  if (!is_pointed(p)) throw NotPointed();
  const std::size_t n = p.ambient_dim;
  HomCircuits out{enumerate_circuits(homogenize(p), budget), CircuitSet(n, source_tag(p)), {n, {}}};
  for (const auto& g : out.all) {
    RatVector tail(g.begin() + 1, g.end());
    if (sgn(g[0]) == 0)
      out.gamma0.insert(tail);
    else
      out.gamma1.points.insert(scale(tail, 1 / g[0]));
  }
  if (!(out.gamma0 == enumerate_circuits(p, budget)))
    throw CorrespondenceViolation("homogenization: t = 0 class differs from C(P)");
  if (!(out.gamma1 == basic_solutions(p, budget)))
    throw CorrespondenceViolation("homogenization: t = 1 class differs from the basic solutions");
  return out;
}

CircuitSet edge_directions(const HPolyhedron& p, std::uint64_t budget) {
  const VRep v = vrep(p, budget);
  CircuitSet out(p.ambient_dim, p.name.empty() ? std::string{} : "edges(" + p.name + ")");
  for (const auto& e : edges(p, v)) out.insert(sub(v.vertices[e.v], v.vertices[e.u]));
  for (const auto& r : v.rays) out.insert(r);
  return out;
}

bool is_edge_direction(const RatVector& g, const HPolyhedron& p) {
  if (is_zero(g)) throw InvalidArgument("is_edge_direction: zero vector");
  return edge_directions(p).contains(g);
}

}  // namespace polycirc
