#include "polycirc/reproduce.hpp"

#include <chrono>
#include <functional>
#include <map>

#include "polycirc/errors.hpp"
#include "polycirc/lp.hpp"
#include "polycirc/random_instances.hpp"

namespace polycirc {

bool ReproductionResult::pass() const {
  return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.pass; });
}

const std::vector<std::string>& experiment_ids() {
  static const std::vector<std::string> ids = {"thm1", "thm2",    "zonotope", "partpoly", "thm3",
                                               "thm5", "thm6",    "lemma17",  "laws"};
  return ids;
}

Json result_to_json(const ReproductionResult& r) {
  Json j;
  j["experiment"] = r.experiment;
  j["parameters"] = r.parameters;
  j["pass"] = r.pass() && r.aborted.empty();
  if (!r.aborted.empty()) j["aborted"] = r.aborted;
  Json claims = Json::array();
  for (const auto& c : r.claims)
    claims.push_back({{"description", c.description}, {"expected", c.expected}, {"observed", c.observed}, {"pass", c.pass}});
  j["claims"] = claims;
  j["artifacts"] = r.artifacts;
  return j;
}

namespace {

std::string str(std::size_t x) { return std::to_string(x); }
std::string str(bool b) { return b ? "true" : "false"; }

std::string dirs_str(const CircuitSet& c) {
  std::string s = "{";
  bool first = true;
  for (const auto& g : c) {
    if (!first) s += ", ";
    s += to_string(g);
    first = false;
  }
  return s + "}";
}

class Run {
 public:
  Run(ReproductionResult& r, const std::optional<std::filesystem::path>& dir) : r_(r), dir_(dir) {}

  void claim(std::string desc, std::string expected, std::string observed) {
    const bool ok = expected == observed;
    r_.claims.push_back({std::move(desc), std::move(expected), std::move(observed), ok});
  }
  void claim_true(std::string desc, bool observed) { claim(std::move(desc), "true", str(observed)); }

  void save(const std::string& file, const Json& j) {
    if (!dir_) return;
    write_json_file(*dir_ / file, j);
    r_.artifacts.push_back(file);
  }
  void save(const std::string& file, const HPolyhedron& p) { save(file, polyhedron_to_json(p)); }

 private:
  ReproductionResult& r_;
  const std::optional<std::filesystem::path>& dir_;
};

long get(const std::optional<long>& v, long fallback) { return v ? *v : fallback; }

RatVector e(std::size_t n, std::size_t i) { return unit_vector(n, i); }

std::size_t facet_count(const HPolyhedron& p) { return minimize_description(p).B.rows(); }

// --- thm1 -------------------------------------------------------------------

void thm1(Run& run, const ExperimentParams& prm, Json& params) {
  const auto n = static_cast<std::size_t>(get(prm.n, 3)), m = static_cast<std::size_t>(get(prm.m, n + 1));
  params = {{"n", n}, {"m", m}};
  const LinearMap pi = pi_matrix(n, m);
  run.save("pi.json", map_to_json(pi, "Pi_{n,m}"));

  const HPolyhedron sm = simplex(m);
  run.save("S_m.json", sm);
  const InheritanceReport rb = check_inheritance(sm, pi, std::nullopt, prm.budget);
  run.save("P.json", rb.P);
  run.save("report_bounded.json", report_to_json(rb));
  const VRep vp = vrep(rb.P, prm.budget);
  run.claim("bounded: facets of pi(S_m)", str(n + 2), str(rb.P.B.rows()));
  run.claim("bounded: vertices of pi(S_m)", str(n + 2), str(vp.vertices.size()));
  const auto opt = std::get<LPOptimal>(lp_solve(RatVector(n, Rational(1)), rb.P, Sense::Maximize));
  run.claim("bounded: max of the coordinate sum over pi(S_m)", "2", to_string(opt.value));
  run.claim_true("bounded: e3 in C(P)", rb.P_circuits.contains(e(n, 2)));
  run.claim_true("bounded: e3 not in pi(C(S_m))", !rb.projected.contains(e(n, 2)));
  run.claim("bounded: C(P) cap pi(C(S_m)) equals the edge directions", dirs_str(rb.edge_dirs), dirs_str(rb.inherited));
  run.claim("bounded: verdict", "NotAllInherited",
            rb.verdict == Verdict::AllInherited ? "AllInherited" : "NotAllInherited");

  const HPolyhedron om = orthant(m);
  const InheritanceReport rc = check_inheritance(om, pi, std::nullopt, prm.budget);
  run.save("R.json", rc.P);
  run.save("report_conic.json", report_to_json(rc));
  const VRep vr = vrep(rc.P, prm.budget);
  run.claim("conic: facets of pi(R^m_+)", str(n + 1), str(rc.P.B.rows()));
  run.claim("conic: extreme rays of pi(R^m_+)", str(n + 1), str(vr.rays.size()));
  run.claim("conic: pi(C(R^m_+)) equals the edge directions", dirs_str(rc.edge_dirs), dirs_str(rc.projected));
  run.claim_true("conic: e3 non-inherited", rc.non_inherited.contains(e(n, 2)));
  run.claim_true("conic: e1 - e2 non-inherited", rc.non_inherited.contains(sub(e(n, 0), e(n, 1))));
}

// --- zonotope -----------------------------------------------------------------

void zonotope(Run& run, const ExperimentParams& prm, Json& params) {
  const auto n = static_cast<std::size_t>(get(prm.n, 3)), m = static_cast<std::size_t>(get(prm.m, n + 1));
  params = {{"n", n}, {"m", m}};
  const LinearMap pi = pi_matrix(n, m);
  run.save("pi.json", map_to_json(pi, "Pi_{n,m}"));
  const InheritanceReport r = check_inheritance(hypercube(m), pi, std::nullopt, prm.budget);
  run.save("Z.json", r.P);
  run.save("report.json", report_to_json(r));
  run.claim("inherited circuits equal the edge directions", dirs_str(r.edge_dirs), dirs_str(r.inherited));
  run.claim_true("e3 non-inherited", r.non_inherited.contains(e(n, 2)));
  CircuitSet cols(n);
  for (std::size_t j = 0; j < m; ++j)
    if (!is_zero(pi.matrix.col(j))) cols.insert(pi.matrix.col(j));
  run.claim("edge directions are the nonzero column directions", dirs_str(cols), dirs_str(r.edge_dirs));
}

// --- thm2 -------------------------------------------------------------------

struct CroppedStats {
  std::size_t vertices = 0, hom_dirs = 0, inherited = 0;
};

CroppedStats cropped_stats(Run& run, std::size_t n, const Rational& delta, std::uint64_t budget, bool record) {
  const HPolyhedron q = cropped_cross_polytope(n, delta);
  const VRep v = vrep(q, budget);
  const HomCircuits hc = circuits_of_homogenization(q, budget);
  // hom(Q) is the image of R^V_+ under x -> sum_v x_v (1, v).
  std::vector<RatVector> cols;
  for (const auto& x : v.vertices) {
    RatVector c{Rational(1)};
    c.insert(c.end(), x.begin(), x.end());
    cols.push_back(c);
  }
  const LinearMap ext{RatMatrix::from_columns(cols, n + 1)};
  const CircuitSet projected = apply_map(ext, enumerate_circuits(orthant(v.vertices.size()), budget));
  CroppedStats s{v.vertices.size(), hc.all.size(), hc.all.intersect(projected).size()};
  if (!record) return s;

  const HPolyhedron hom = homogenize(q);
  run.save("Q.json", q);
  run.save("hom.json", hom);
  run.save("vrep.json", vrep_to_json(v));
  run.save("hom_circuits.json", circuits_to_json(hc.all));
  run.claim("|V(Q'_n)| = 4n(n-1)", str(4 * n * (n - 1)), str(v.vertices.size()));
  const BasicSolutionSet bs = basic_solutions(q, budget);
  std::size_t cube_hits = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    RatVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = (mask >> i & 1) ? -delta : delta;
    cube_hits += bs.points.count(x);
  }
  run.claim("B(Q'_n) contains {-delta, delta}^n", str(std::size_t{1} << n), str(cube_hits));
  run.claim("t = 0 class of C(hom) equals C(Q'_n)", dirs_str(enumerate_circuits(q, budget)), dirs_str(hc.gamma0));
  run.claim_true("t = 1 class of C(hom) equals B(Q'_n)", hc.gamma1 == bs);
  run.claim("directions inherited from the orthant extension", str(v.vertices.size()), str(s.inherited));
  run.claim_true("|C(hom(Q'_n))| exceeds |V(Q'_n)|", s.hom_dirs > s.vertices);
  CircuitSet rays(n + 1);
  for (const auto& c : cols) rays.insert(c);
  CircuitSet hom_rays(n + 1);
  for (const auto& r : vrep(hom, budget).rays) hom_rays.insert(r);
  run.claim("extreme rays of hom(Q'_n) are (1, v)", dirs_str(rays), dirs_str(hom_rays));
  const HPolyhedron hm = minimize_description(hom);
  run.claim_true("hom(Q'_n) keeps every row except possibly t >= 0 when minimized",
                 hm.A.rows() == 0 && hm.B.rows() + 1 >= hom.B.rows());
  return s;
}

void thm2(Run& run, const ExperimentParams& prm, Json& params) {
  const auto n = static_cast<std::size_t>(get(prm.n, 3));
  const Rational delta = prm.delta ? *prm.delta : Rational(3, 4);
  params = {{"n", n}, {"delta", to_string(delta)}};
  const CroppedStats s = cropped_stats(run, n, delta, prm.budget, true);
  if (n >= 3) {
    const CroppedStats prev = cropped_stats(run, n - 1, delta, prm.budget, false);
    run.claim_true("gap |C(hom)| - |V| grows from n-1 to n",
                   s.hom_dirs - s.vertices > prev.hom_dirs - prev.vertices);
  }
}

// --- partpoly -----------------------------------------------------------------

void partpoly(Run& run, const ExperimentParams& prm, Json& params) {
  const auto n = static_cast<std::size_t>(get(prm.n, 5));
  if (n < 5) throw InvalidArgument("partpoly: n must be at least 5");
  params = {{"n", n}, {"k", 2}, {"kappa", {1, n - 1}}};
  // X = vertices of pi_{n-2,n-1}(S_{n-1}), with the origin last.
  const VRep base = vrep(project(simplex(n - 1), pi_matrix(n - 2, n - 1)), prm.budget);
  PartitionInstance inst{{}, 2, {1, static_cast<long>(n - 1)}};
  for (const auto& v : base.vertices)
    if (!is_zero(v)) inst.X.push_back(v);
  inst.X.push_back(RatVector(n - 2));
  const HPolyhedron T = transportation(n, 2, inst.kappa);
  const LinearMap pi = partition_projection(inst);
  run.save("T.json", T);
  run.save("pi_X.json", map_to_json(pi, "pi_X"));
  const InheritanceReport r = check_inheritance(T, pi, std::nullopt, prm.budget);
  run.save("P.json", r.P);
  run.save("report.json", report_to_json(r));
  run.claim("verdict", "NotAllInherited", r.verdict == Verdict::AllInherited ? "AllInherited" : "NotAllInherited");
  run.claim("all circuits of T are edge directions", dirs_str(r.Q_circuits), dirs_str(edge_directions(T, prm.budget)));
  run.claim_true("some circuit of P(X) is not inherited", !r.non_inherited.empty());
}

// --- thm3 -------------------------------------------------------------------

void thm3(Run& run, const ExperimentParams& prm, Json& params) {
  const auto n = static_cast<std::size_t>(get(prm.n, 3)), m = static_cast<std::size_t>(get(prm.m, 5));
  params = {{"n", n}, {"m", m}, {"seed", prm.seed}};
  InstanceGenerator gen(prm.seed);
  const LinearMap pi = gen.map_of_rank(n, m, n);
  const LinearMap sigma = pi_matrix(n, m);
  const LinearMap tau = tau_transfer(pi, sigma);
  const HPolyhedron qt = preimage(simplex(m), tau);
  run.save("pi.json", map_to_json(pi, "pi"));
  run.save("tau.json", map_to_json(tau, "tau"));
  run.save("Q_tilde.json", qt);
  run.claim_true("sigma * tau = pi", matmul(sigma.matrix, tau.matrix) == pi.matrix);
  run.claim_true("tau is invertible", inverse(tau.matrix).has_value());
  const InheritanceReport r = check_inheritance(qt, pi, std::nullopt, prm.budget);
  run.save("report.json", report_to_json(r));
  run.claim_true("pi(Q~) equals sigma(S_m)", same_point_set(r.P, project(simplex(m), sigma)));
  run.claim("verdict", "NotAllInherited", r.verdict == Verdict::AllInherited ? "AllInherited" : "NotAllInherited");
  run.claim("inherited circuits equal the edge directions", dirs_str(r.edge_dirs), dirs_str(r.inherited));
}

// --- thm5 -------------------------------------------------------------------

HPolyhedron unit_square() {
  HPolyhedron p = hypercube(2);
  p.name = "square";
  return p;
}

// Non-edge circuits, or non-edge vertex differences when every circuit is an edge.
std::vector<RatVector> non_edge_targets(const HPolyhedron& p, std::uint64_t budget, std::string& kind) {
  const CircuitSet edges = edge_directions(p, budget);
  const CircuitSet extra = enumerate_circuits(p, budget).minus(edges);
  if (!extra.empty()) {
    kind = "non-edge circuit";
    return {extra.begin(), extra.end()};
  }
  kind = "non-edge vertex difference";
  const VRep v = vrep(p, budget);
  CircuitSet diffs(p.ambient_dim);
  for (std::size_t i = 0; i < v.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < v.vertices.size(); ++j) diffs.insert(sub(v.vertices[i], v.vertices[j]));
  const CircuitSet d = diffs.minus(edges);
  return {d.begin(), d.end()};
}

void thm5_case(Run& run, const std::string& name, const HPolyhedron& p, std::uint64_t budget) {
  run.save(name + "_P.json", p);
  std::string kind;
  const auto targets = non_edge_targets(p, budget, kind);
  run.claim_true(name + ": has a non-edge target direction", !targets.empty());
  std::size_t idx = 0;
  for (const auto& g : targets) {
    const std::string tag = name + " g=" + to_string(g) + " (" + kind + ")";
    const NonInheritingExtension ext = non_inheriting_extension(p, g);
    const std::string stem = name + "_" + std::to_string(idx++);
    run.save(stem + "_Q.json", ext.Q);
    run.save(stem + "_pi.json", map_to_json(ext.pi, "pi"));
    run.claim_true(tag + ": g not in pi(C(Q))", !apply_map(ext.pi, enumerate_circuits(ext.Q, budget)).contains(g));
    run.claim_true(tag + ": Balas circuit classes verified", verify_balas_circuits(ext.family));
    run.claim_true(tag + ": pi(Q) equals P", same_point_set(project(ext.Q, ext.pi), p));
  }
  const CircuitSet edges = edge_directions(p, budget);
  bool refused = false;
  try {
    non_inheriting_extension(p, *edges.begin());
  } catch (const EdgeDirectionGiven&) {
    refused = true;
  }
  run.claim_true(name + ": an edge direction is refused", refused);
}

void thm5(Run& run, const ExperimentParams& prm, Json& params) {
  params = {{"case", prm.variant.empty() ? "all" : prm.variant}};
  const std::map<std::string, std::function<HPolyhedron()>> cases = {
      {"p3", [] { auto p = project(simplex(4), pi_matrix(3, 4)); p.name = "P3"; return p; }},
      {"square", unit_square},
      {"cube3", [] { return hypercube(3); }},
      {"cone", [] { auto p = project(orthant(4), pi_matrix(3, 4)); p.name = "R3"; return p; }},
  };
  for (const char* name : {"p3", "square", "cube3", "cone"})
    if (prm.variant.empty() || prm.variant == name) thm5_case(run, name, cases.at(name)(), prm.budget);
  if (!prm.variant.empty() && !cases.count(prm.variant)) throw InvalidArgument("thm5: unknown case " + prm.variant);
}

// --- thm6 -------------------------------------------------------------------

void thm6_case(Run& run, const std::string& name, const HPolyhedron& q, std::optional<long> expected_alpha,
               std::uint64_t budget) {
  run.save(name + "_Q.json", q);
  const AlphaProjection ap = find_alpha_projection(q);
  run.save(name + "_pi_alpha.json", map_to_json(ap.pi, "Pi_alpha"));
  run.save(name + "_image.json", ap.image);
  const RatVector e3 = e(q.ambient_dim - 1, 2);
  run.claim_true(name + ": e3 in C(pi_alpha(Q))", enumerate_circuits(ap.image, budget).contains(e3));
  run.claim_true(name + ": e3 not in pi_alpha(C(Q))", !apply_map(ap.pi, enumerate_circuits(q, budget)).contains(e3));
  if (expected_alpha) run.claim(name + ": alpha", std::to_string(*expected_alpha), std::to_string(ap.alpha));
  else run.claim_true(name + ": alpha > 2 after rejecting alpha = 2", ap.alpha > 2 && ap.rejected.front() == 2);
}

void thm6(Run& run, const ExperimentParams& prm, Json& params) {
  params = {{"case", prm.variant.empty() ? "all" : prm.variant}, {"seed", prm.seed}};
  if (!prm.variant.empty() && prm.variant != "cube4" && prm.variant != "simplex4" && prm.variant != "perturbed")
    throw InvalidArgument("thm6: unknown case " + prm.variant);
  if (prm.variant.empty() || prm.variant == "cube4") {
    // Move the cube's far vertex to the origin first.
    const OrthantPosition op = transform_to_orthant_position(hypercube(4), RatVector(4, Rational(1)));
    run.claim_true("cube4: orthant position at (1,1,1,1) is again the cube", same_point_set(op.Q, hypercube(4)));
    thm6_case(run, "cube4", op.Q, 2, prm.budget);
  }
  if (prm.variant.empty() || prm.variant == "simplex4") thm6_case(run, "simplex4", simplex(4), 2, prm.budget);
  if (prm.variant.empty() || prm.variant == "perturbed") {
    const HPolyhedron q = perturbed_orthant_polytope(prm.seed);
    run.claim_true("perturbed: 2e2 - e1 is a circuit of Q", enumerate_circuits(q, prm.budget).contains({-1, 2, 0, 0}));
    thm6_case(run, "perturbed", q, std::nullopt, prm.budget);
  }
}

// --- lemma17 ------------------------------------------------------------------

void lemma17(Run& run, const ExperimentParams& prm, Json& params) {
  params = {{"n", 3}, {"m", 6}};
  const LinearMap pi = pi_prime_matrix(3, 6);
  run.save("pi_prime.json", map_to_json(pi, "Pi'_{3,6}"));
  const InheritanceReport r = check_inheritance(simplex(6), pi, std::nullopt, prm.budget);
  run.save("P.json", r.P);
  run.save("report.json", report_to_json(r));
  run.claim("verdict", "AllInherited", r.verdict == Verdict::AllInherited ? "AllInherited" : "NotAllInherited");
  run.claim("facets of P'_3", "6", str(r.P.B.rows()));
  HPolyhedron listed(3, "listed");
  for (std::size_t i = 0; i < 3; ++i) listed.add_lower(e(3, i), 0);
  listed.add_inequality(e(3, 2), 1);
  listed.add_lower({1, 1, -1}, 0);
  listed.add_inequality({1, 1, -1}, 1);
  run.claim_true("P'_3 equals {x >= 0, x3 <= 1, 0 <= x1 + x2 - x3 <= 1}", same_point_set(r.P, listed));
  run.claim_true("e3 in C(P'_3)", r.P_circuits.contains(e(3, 2)));
  run.claim_true("e3 is not an edge direction of P'_3", !r.edge_dirs.contains(e(3, 2)));
  run.claim_true("facet count 6 differs from the 7 facets of S_6", r.P.B.rows() != facet_count(simplex(6)));
}

// --- laws -------------------------------------------------------------------

struct Law {
  std::string name;
  std::function<bool(InstanceGenerator&)> check;
};

void laws(Run& run, const ExperimentParams& prm, Json& params) {
  params = {{"seed", prm.seed}, {"count", prm.count}};
  const std::vector<Law> suite = {
      {"cartesian product law",
       [](InstanceGenerator& g) {
         const auto n1 = static_cast<std::size_t>(g.uniform(1, 2)), n2 = static_cast<std::size_t>(g.uniform(1, 2));
         const auto p1 = g.pointed_polyhedron(n1, g.uniform(0, 2), g.uniform(0, 1) == 1);
         const auto p2 = g.pointed_polyhedron(n2, g.uniform(0, 2), g.uniform(0, 1) == 1);
         return verify_cartesian_law(p1, p2);
       }},
      {"slack law",
       [](InstanceGenerator& g) {
         const auto p = g.pointed_polyhedron(g.uniform(2, 3), g.uniform(0, 3), g.uniform(0, 1) == 1, g.uniform(0, 3) == 0);
         return verify_slack_law(minimize_description(p));
       }},
      {"homogenization law",
       [](InstanceGenerator& g) {
         const auto p = g.pointed_polyhedron(g.uniform(2, 3), g.uniform(0, 3), g.uniform(0, 1) == 1, g.uniform(0, 3) == 0);
         return verify_hom_law(p) && verify_hom_law(minimize_description(p));
       }},
      {"edge inheritance law",
       [](InstanceGenerator& g) {
         const auto m = static_cast<std::size_t>(g.uniform(3, 4));
         const auto q = g.pointed_polyhedron(m, g.uniform(1, 3), true);
         const auto n = static_cast<std::size_t>(g.uniform(2, static_cast<long>(m) - 1));
         return verify_edge_inheritance(q, g.map_of_rank(n, m, n));
       }},
      {"isomorphism law",
       [](InstanceGenerator& g) {
         const auto m = static_cast<std::size_t>(g.uniform(2, 3));
         const auto q = g.pointed_polyhedron(m, g.uniform(0, 2), g.uniform(0, 1) == 1);
         const auto n = m + static_cast<std::size_t>(g.uniform(0, 1));
         return verify_isomorphism_law(q, g.map_of_rank(n, m, m));
       }},
      {"dimension triviality law",
       [](InstanceGenerator& g) {
         // Either dim(Q) <= 3, or the image has dimension at most 2.
         const bool small_q = g.uniform(0, 1) == 1;
         const auto m = static_cast<std::size_t>(small_q ? 3 : 4);
         const auto q = minimize_description(g.pointed_polyhedron(m, g.uniform(1, 3), true));
         const auto n = static_cast<std::size_t>(small_q ? g.uniform(2, 3) : 2);
         const auto r = check_inheritance(q, g.map_of_rank(n, m, n));
         return r.verdict == Verdict::AllInherited;
       }},
      {"circuit oracle equivalence",
       [](InstanceGenerator& g) {
         const auto n = static_cast<std::size_t>(g.uniform(2, 6));
         const auto p = g.pointed_polyhedron(n, g.uniform(0, 3), g.uniform(0, 1) == 1, g.uniform(0, 3) == 0);
         return enumerate_circuits(p) == enumerate_circuits_bruteforce(p);
       }},
  };
  for (std::size_t s = 0; s < suite.size(); ++s) {
    InstanceGenerator gen(prm.seed * 1000 + s);
    std::size_t passed = 0;
    std::string first_failure;
    for (std::size_t i = 0; i < prm.count; ++i) {
      bool ok = false;
      try {
        ok = suite[s].check(gen);
      } catch (const Error& ex) {
        if (first_failure.empty()) first_failure = ex.what();
      }
      passed += ok;
      if (!ok && first_failure.empty()) first_failure = "instance " + std::to_string(i);
    }
    run.claim(suite[s].name + (first_failure.empty() ? "" : " (first failure: " + first_failure + ")"),
              str(prm.count) + "/" + str(prm.count), str(passed) + "/" + str(prm.count));
  }
}

}  // namespace

ReproductionResult run_experiment(const std::string& id, const ExperimentParams& params,
                                  const std::optional<std::filesystem::path>& out_dir) {
  static const std::map<std::string, void (*)(Run&, const ExperimentParams&, Json&)> table = {
      {"thm1", thm1}, {"thm2", thm2}, {"zonotope", zonotope}, {"partpoly", partpoly}, {"thm3", thm3},
      {"thm5", thm5}, {"thm6", thm6}, {"lemma17", lemma17},   {"laws", laws}};
  const auto it = table.find(id);
  if (it == table.end()) throw InvalidArgument("unknown experiment: " + id);
  ReproductionResult r;
  r.experiment = id;
  const auto start = std::chrono::steady_clock::now();
  Run run(r, out_dir);
  try {
    it->second(run, params, r.parameters);
  } catch (const BudgetExceeded& ex) {
    r.aborted = ex.what();
    if (out_dir) write_json_file(*out_dir / "result.json", result_to_json(r));
    throw;
  }
  r.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (out_dir) write_json_file(*out_dir / "result.json", result_to_json(r));
  return r;
}

}  // namespace polycirc
