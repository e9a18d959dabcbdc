// Acceptance matrix. One line per criterion; exit status is the number of
// failing criteria. Runtime limits are wall-clock per case.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "polycirc/errors.hpp"
#include "polycirc/reproduce.hpp"

using namespace polycirc;

namespace {

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;
  void fail(const std::string& why) {
    ok = false;
    notes.push_back(why);
  }
};

const Claim* find_claim(const ReproductionResult& r, const std::string& description) {
  for (const auto& c : r.claims)
    if (c.description == description) return &c;
  return nullptr;
}

// Runs one experiment under a time limit and checks selected observed values.
void run_case(Outcome& out, const std::string& label, const std::string& id, const ExperimentParams& prm,
              double limit_seconds, const std::vector<std::pair<std::string, std::string>>& pinned = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  ReproductionResult r;
  try {
    r = run_experiment(id, prm);
  } catch (const std::exception& e) {
    out.fail(label + ": " + e.what());
    return;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (r.claims.empty()) out.fail(label + ": no claims");
  for (const auto& c : r.claims)
    if (!c.pass) out.fail(label + ": " + c.description + " expected " + c.expected + " observed " + c.observed);
  for (const auto& [desc, value] : pinned) {
    const Claim* c = find_claim(r, desc);
    if (!c)
      out.fail(label + ": missing claim '" + desc + "'");
    else if (c->observed != value)
      out.fail(label + ": '" + desc + "' observed " + c->observed + ", pinned " + value);
  }
  if (secs > limit_seconds) {
    std::ostringstream s;
    s << label << ": " << secs << " s exceeds " << limit_seconds << " s";
    out.fail(s.str());
  }
  std::ostringstream s;
  s << label << " " << secs << "s";
  out.notes.push_back(s.str());
}

ExperimentParams params_nm(long n, long m) {
  ExperimentParams p;
  p.n = n;
  p.m = m;
  return p;
}

const std::vector<std::pair<long, long>> kPairs = {{3, 4}, {3, 5}, {4, 5}, {4, 6}, {5, 6}};

Outcome criterion1() {
  Outcome o;
  for (auto [n, m] : kPairs)
    run_case(o, "(" + std::to_string(n) + "," + std::to_string(m) + ")", "thm1", params_nm(n, m), 10,
             {{"bounded: facets of pi(S_m)", std::to_string(n + 2)},
              {"bounded: vertices of pi(S_m)", std::to_string(n + 2)},
              {"bounded: e3 in C(P)", "true"},
              {"bounded: e3 not in pi(C(S_m))", "true"},
              {"bounded: verdict", "NotAllInherited"}});
  return o;
}

Outcome criterion2() {
  Outcome o;
  for (auto [n, m] : kPairs)
    run_case(o, "(" + std::to_string(n) + "," + std::to_string(m) + ")", "thm1", params_nm(n, m), 10,
             {{"conic: facets of pi(R^m_+)", std::to_string(n + 1)},
              {"conic: extreme rays of pi(R^m_+)", std::to_string(n + 1)},
              {"conic: e3 non-inherited", "true"},
              {"conic: e1 - e2 non-inherited", "true"}});
  return o;
}

Outcome criterion3() {
  Outcome o;
  for (auto [n, m] : std::vector<std::pair<long, long>>{{3, 4}, {4, 6}})
    run_case(o, "(" + std::to_string(n) + "," + std::to_string(m) + ")", "zonotope", params_nm(n, m), 30,
             {{"e3 non-inherited", "true"}});
  return o;
}

Outcome criterion4() {
  Outcome o;
  for (long n : {3L, 4L}) {
    ExperimentParams p;
    p.n = n;
    p.delta = Rational(3, 4);
    run_case(o, "n=" + std::to_string(n), "thm2", p, n == 3 ? 60 : 300,
             {{"|V(Q'_n)| = 4n(n-1)", n == 3 ? "24" : "48"},
              {"B(Q'_n) contains {-delta, delta}^n", n == 3 ? "8" : "16"},
              {"t = 1 class of C(hom) equals B(Q'_n)", "true"},
              {"|C(hom(Q'_n))| exceeds |V(Q'_n)|", "true"},
              {"gap |C(hom)| - |V| grows from n-1 to n", "true"}});
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  ExperimentParams p;
  p.n = 5;
  run_case(o, "n=5", "partpoly", p, 600,
           {{"verdict", "NotAllInherited"}, {"some circuit of P(X) is not inherited", "true"}});
  return o;
}

Outcome criterion6() {
  Outcome o;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    ExperimentParams p;
    p.n = 3;
    p.m = 5;
    p.seed = seed;
    run_case(o, "seed " + std::to_string(seed), "thm3", p, 60,
             {{"sigma * tau = pi", "true"}, {"verdict", "NotAllInherited"}});
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  for (const char* c : {"p3", "square", "cube3"}) {
    ExperimentParams p;
    p.variant = c;
    run_case(o, c, "thm5", p, 120, {{std::string(c) + ": has a non-edge target direction", "true"}});
  }
  return o;
}

Outcome criterion8() {
  Outcome o;
  for (const char* c : {"cube4", "simplex4", "perturbed"}) {
    ExperimentParams p;
    p.variant = c;
    run_case(o, c, "thm6", p, 120,
             {{std::string(c) + ": e3 in C(pi_alpha(Q))", "true"},
              {std::string(c) + ": e3 not in pi_alpha(C(Q))", "true"}});
  }
  return o;
}

Outcome criterion9() {
  Outcome o;
  run_case(o, "S_6", "lemma17", ExperimentParams{}, 30,
           {{"verdict", "AllInherited"},
            {"facets of P'_3", "6"},
            {"e3 in C(P'_3)", "true"},
            {"e3 is not an edge direction of P'_3", "true"},
            {"facet count 6 differs from the 7 facets of S_6", "true"}});
  return o;
}

Outcome criterion10() {
  Outcome o;
  ExperimentParams p;
  p.count = 100;
  run_case(o, "100 per law", "laws", p, 600,
           {{"cartesian product law", "100/100"},
            {"slack law", "100/100"},
            {"homogenization law", "100/100"},
            {"edge inheritance law", "100/100"},
            {"isomorphism law", "100/100"},
            {"dimension triviality law", "100/100"},
            {"circuit oracle equivalence", "100/100"}});
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 bounded counterexample pi_{n,m}(S_m)", criterion1},
      {"2 conic counterexample pi_{n,m}(R^m_+)", criterion2},
      {"3 zonotope inherits exactly its edge directions", criterion3},
      {"4 cropped cross-polytope at desk scale", criterion4},
      {"5 partition polytope gains circuits", criterion5},
      {"6 transfer to a random non-injective map", criterion6},
      {"7 non-inheriting extension for non-edge circuits", criterion7},
      {"8 alpha projection witness", criterion8},
      {"9 positive instance (S_6, Pi'_{3,6})", criterion9},
      {"10 randomized law suites", criterion10},
  };
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    const Outcome o = fn();
    failures += !o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << name << "  [";
    for (std::size_t i = 0; i < o.notes.size(); ++i) std::cout << (i ? "; " : "") << o.notes[i];
    std::cout << "]" << std::endl;
  }
  return failures;
}
