// polycirc command-line front end.
//
// Exit codes: 0 ok / all inherited, 1 not inherited or a failed claim,
// 2 input error, 3 budget exceeded.

#include <CLI11.hpp>
#include <iostream>
#include <sstream>

#include "polycirc/errors.hpp"
#include "polycirc/reproduce.hpp"

using namespace polycirc;

namespace {

struct Options {
  std::optional<long> n, m, alpha;
  std::string delta, kappa, out, out_dir, variant;
  std::uint64_t budget = kDefaultBudget, seed = 1;
  std::size_t count = 100;
  bool minimize = false;
};

void emit(const Json& j, const std::string& out) {
  if (out.empty())
    std::cout << dump(j);
  else
    write_json_file(out, j);
}

HPolyhedron load_polyhedron(const std::string& path) { return polyhedron_from_json(read_json_file(path)); }
LinearMap load_map(const std::string& path) { return map_from_json(read_json_file(path)); }

std::size_t need(const std::optional<long>& v, const char* flag) {
  if (!v || *v < 0) throw InvalidArgument(std::string("missing or negative ") + flag);
  return static_cast<std::size_t>(*v);
}

std::vector<long> parse_list(const std::string& s) {
  std::vector<long> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      out.push_back(std::stol(item));
    } catch (const std::exception&) {
      throw ParseError("not an integer list: " + s);
    }
  }
  return out;
}

Json construct(const std::string& kind, const Options& o) {
  if (kind == "cube") return polyhedron_to_json(hypercube(need(o.m, "--m")));
  if (kind == "simplex") return polyhedron_to_json(simplex(need(o.m, "--m")));
  if (kind == "orthant") return polyhedron_to_json(orthant(need(o.m, "--m")));
  if (kind == "cross") return polyhedron_to_json(cross_polytope(need(o.n, "--n")));
  if (kind == "cropped-cross")
    return polyhedron_to_json(
        cropped_cross_polytope(need(o.n, "--n"), o.delta.empty() ? Rational(3, 4) : parse_rational(o.delta)));
  if (kind == "transportation") {
    const auto kappa = parse_list(o.kappa);
    return polyhedron_to_json(transportation(need(o.n, "--n"), kappa.size(), kappa));
  }
  if (kind == "perturbed") return polyhedron_to_json(perturbed_orthant_polytope(o.seed));
  if (kind == "pi") return map_to_json(pi_matrix(need(o.n, "--n"), need(o.m, "--m")), "Pi_{n,m}");
  if (kind == "pi-alpha") return map_to_json(pi_alpha_matrix(need(o.m, "--m"), o.alpha.value_or(2)), "Pi_alpha");
  if (kind == "pi-prime") return map_to_json(pi_prime_matrix(need(o.n, "--n"), need(o.m, "--m")), "Pi'_{n,m}");
  throw InvalidArgument("unknown construction: " + kind);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact circuits of polyhedra and their projections"};
  app.require_subcommand(1);
  Options o;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--budget", o.budget, "maximum number of row subsets per enumeration");
    sub->add_option("--out", o.out, "write JSON here instead of stdout");
  };

  std::string kind, input, map_path, p_path, experiment;

  auto* c_construct = app.add_subcommand("construct", "emit a named polyhedron or matrix as JSON");
  c_construct->add_option("kind", kind,
                          "cube | simplex | orthant | cross | cropped-cross | transportation | perturbed | pi | "
                          "pi-alpha | pi-prime")
      ->required();
  c_construct->add_option("--n", o.n);
  c_construct->add_option("--m", o.m);
  c_construct->add_option("--alpha", o.alpha);
  c_construct->add_option("--delta", o.delta, "rational p/q");
  c_construct->add_option("--kappa", o.kappa, "comma-separated cluster sizes");
  c_construct->add_option("--seed", o.seed);
  add_common(c_construct);

  auto* c_circuits = app.add_subcommand("circuits", "circuits of the description in a polyhedron file");
  c_circuits->add_option("input", input)->required();
  c_circuits->add_flag("--minimize", o.minimize, "minimize the description first");
  add_common(c_circuits);

  auto* c_basic = app.add_subcommand("basic", "basic solutions");
  c_basic->add_option("input", input)->required();
  c_basic->add_flag("--minimize", o.minimize);
  add_common(c_basic);

  auto* c_vrep = app.add_subcommand("vrep", "vertices and extreme rays");
  c_vrep->add_option("input", input)->required();
  add_common(c_vrep);

  auto* c_edges = app.add_subcommand("edges", "edge directions");
  c_edges->add_option("input", input)->required();
  add_common(c_edges);

  auto* c_project = app.add_subcommand("project", "image of a polyhedron under a linear map");
  c_project->add_option("input", input)->required();
  c_project->add_option("map", map_path)->required();
  add_common(c_project);

  auto* c_minimize = app.add_subcommand("minimize", "minimal description");
  c_minimize->add_option("input", input)->required();
  add_common(c_minimize);

  auto* c_hom = app.add_subcommand("hom", "homogenization cone");
  c_hom->add_option("input", input)->required();
  c_hom->add_flag("--minimize", o.minimize, "minimize the cone");
  add_common(c_hom);

  auto* c_check = app.add_subcommand("check", "inheritance report; exit 0 iff all circuits are inherited");
  c_check->add_option("Q", input)->required();
  c_check->add_option("map", map_path)->required();
  c_check->add_option("P", p_path, "optional description of the image");
  c_check->add_flag("--minimize", o.minimize, "minimize Q first");
  bool summary = false;
  c_check->add_flag("--summary", summary, "print a plain-text summary instead of JSON");
  add_common(c_check);

  auto* c_repro = app.add_subcommand("reproduce", "run a reproduction experiment");
  c_repro->add_option("experiment", experiment, "thm1 | thm2 | zonotope | partpoly | thm3 | thm5 | thm6 | lemma17 | laws")
      ->required();
  c_repro->add_option("--n", o.n);
  c_repro->add_option("--m", o.m);
  c_repro->add_option("--alpha", o.alpha);
  c_repro->add_option("--delta", o.delta, "rational p/q");
  c_repro->add_option("--seed", o.seed);
  c_repro->add_option("--case", o.variant, "sub-case for thm5 / thm6");
  c_repro->add_option("--count", o.count, "instances per law suite");
  c_repro->add_option("--out-dir", o.out_dir, "directory for result.json and intermediate files");
  c_repro->add_flag("--minimize", o.minimize);
  add_common(c_repro);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    auto maybe_min = [&](HPolyhedron p) { return o.minimize ? minimize_description(p) : p; };
    if (*c_construct) {
      emit(construct(kind, o), o.out);
    } else if (*c_circuits) {
      emit(circuits_to_json(enumerate_circuits(maybe_min(load_polyhedron(input)), o.budget)), o.out);
    } else if (*c_basic) {
      emit(basic_solutions_to_json(basic_solutions(maybe_min(load_polyhedron(input)), o.budget)), o.out);
    } else if (*c_vrep) {
      emit(vrep_to_json(vrep(load_polyhedron(input), o.budget)), o.out);
    } else if (*c_edges) {
      emit(circuits_to_json(edge_directions(load_polyhedron(input), o.budget)), o.out);
    } else if (*c_project) {
      emit(polyhedron_to_json(project(load_polyhedron(input), load_map(map_path))), o.out);
    } else if (*c_minimize) {
      emit(polyhedron_to_json(minimize_description(load_polyhedron(input))), o.out);
    } else if (*c_hom) {
      emit(polyhedron_to_json(maybe_min(homogenize(load_polyhedron(input)))), o.out);
    } else if (*c_check) {
      std::optional<HPolyhedron> p;
      if (!p_path.empty()) p = load_polyhedron(p_path);
      const auto r = check_inheritance(maybe_min(load_polyhedron(input)), load_map(map_path), p, o.budget);
      if (summary)
        std::cout << summarize(r);
      else
        emit(report_to_json(r), o.out);
      return r.verdict == Verdict::AllInherited ? 0 : 1;
    } else if (*c_repro) {
      ExperimentParams prm;
      prm.n = o.n;
      prm.m = o.m;
      prm.alpha = o.alpha;
      if (!o.delta.empty()) prm.delta = parse_rational(o.delta);
      prm.budget = o.budget;
      prm.seed = o.seed;
      prm.minimize = o.minimize;
      prm.variant = o.variant;
      prm.count = o.count;
      std::optional<std::filesystem::path> dir;
      if (!o.out_dir.empty()) dir = o.out_dir;
      const auto r = run_experiment(experiment, prm, dir);
      emit(result_to_json(r), o.out);
      std::cerr << experiment << ": " << (r.pass() ? "PASS" : "FAIL") << " in " << r.runtime_seconds << " s\n";
      return r.pass() ? 0 : 1;
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const CorrespondenceViolation& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
