#include "polycirc/json_io.hpp"

#include <fstream>
#include <sstream>

#include "polycirc/errors.hpp"

namespace polycirc {

Json rational_to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(mpz_class(std::to_string(j.get<long long>())));
  throw ParseError("expected a rational as a string \"p/q\" or an integer, got " + j.dump());
}

Json vector_to_json(const RatVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(rational_to_json(x));
  return a;
}

RatVector vector_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array, got " + j.dump());
  RatVector v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

Json matrix_rows_to_json(const RatMatrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(vector_to_json(m.row(i)));
  return a;
}

RatMatrix matrix_rows_from_json(const Json& j, std::size_t cols) {
  if (!j.is_array()) throw ParseError("expected an array of rows");
  std::vector<RatVector> rows;
  for (const auto& r : j) {
    rows.push_back(vector_from_json(r));
    if (rows.back().size() != cols) throw ParseError("row length differs from the column count");
  }
  return RatMatrix::from_rows(rows, cols);
}

Json polyhedron_to_json(const HPolyhedron& p) {
  Json j;
  j["name"] = p.name;
  j["dim"] = p.ambient_dim;
  j["A"] = matrix_rows_to_json(p.A);
  j["b"] = vector_to_json(p.b);
  j["B"] = matrix_rows_to_json(p.B);
  j["d"] = vector_to_json(p.d);
  if (!p.eq_labels.empty()) j["eq_labels"] = p.eq_labels;
  if (!p.ineq_labels.empty()) j["ineq_labels"] = p.ineq_labels;
  return j;
}

namespace {

std::size_t infer_dim(const Json& j) {
  if (j.contains("dim")) {
    if (!j["dim"].is_number_unsigned()) throw ParseError("\"dim\" must be a nonnegative integer");
    return j["dim"].get<std::size_t>();
  }
  for (const char* key : {"A", "B"})
    if (j.contains(key) && j[key].is_array() && !j[key].empty() && j[key][0].is_array()) return j[key][0].size();
  throw ParseError("cannot infer the ambient dimension: give \"dim\" or a nonempty A or B");
}

std::vector<std::string> labels_from_json(const Json& j, const char* key) {
  if (!j.contains(key)) return {};
  if (!j[key].is_array()) throw ParseError(std::string("\"") + key + "\" must be an array of strings");
  std::vector<std::string> out;
  for (const auto& s : j[key]) {
    if (!s.is_string()) throw ParseError(std::string("\"") + key + "\" must be an array of strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

}  // namespace

HPolyhedron polyhedron_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("polyhedron JSON must be an object");
  const std::size_t n = infer_dim(j);
  HPolyhedron p(n, j.value("name", std::string{}));
  if (j.contains("A")) p.A = matrix_rows_from_json(j["A"], n);
  if (j.contains("b")) p.b = vector_from_json(j["b"]);
  if (j.contains("B")) p.B = matrix_rows_from_json(j["B"], n);
  if (j.contains("d")) p.d = vector_from_json(j["d"]);
  p.eq_labels = labels_from_json(j, "eq_labels");
  p.ineq_labels = labels_from_json(j, "ineq_labels");
  try {
    p.validate();
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("inconsistent polyhedron: ") + e.what());
  }
  return p;
}

Json map_to_json(const LinearMap& m, const std::string& name) {
  Json j;
  j["name"] = name;
  j["rows"] = m.target_dim();
  j["cols"] = m.source_dim();
  j["matrix"] = matrix_rows_to_json(m.matrix);
  return j;
}

LinearMap map_from_json(const Json& j) {
  const Json* rows = &j;
  std::size_t cols = 0;
  if (j.is_object()) {
    if (!j.contains("matrix")) throw ParseError("map JSON needs a \"matrix\" field");
    rows = &j["matrix"];
    if (j.contains("cols")) cols = j["cols"].get<std::size_t>();
  }
  if (!rows->is_array() || rows->empty()) throw ParseError("map matrix must be a nonempty array of rows");
  if (cols == 0) {
    if (!(*rows)[0].is_array()) throw ParseError("map matrix must be an array of rows");
    cols = (*rows)[0].size();
  }
  return {matrix_rows_from_json(*rows, cols)};
}

Json circuits_to_json(const CircuitSet& c) {
  Json j;
  j["source"] = c.source();
  j["dim"] = c.dim();
  if (c.kind() == CircuitKind::Lineality) {
    j["kind"] = "lineality";
    Json basis = Json::array();
    for (const auto& v : c.lineality_basis()) basis.push_back(vector_to_json(v));
    j["basis"] = basis;
    return j;
  }
  j["kind"] = "circuits";
  j["count"] = c.size();
  Json dirs = Json::array();
  for (const auto& g : c) dirs.push_back(vector_to_json(g));
  j["directions"] = dirs;
  return j;
}

Json basic_solutions_to_json(const BasicSolutionSet& b) {
  Json j;
  j["dim"] = b.dim;
  j["count"] = b.points.size();
  Json pts = Json::array();
  for (const auto& x : b.points) pts.push_back(vector_to_json(x));
  j["points"] = pts;
  return j;
}

Json vrep_to_json(const VRep& v) {
  Json j;
  Json verts = Json::array(), rays = Json::array();
  for (const auto& x : v.vertices) verts.push_back(vector_to_json(x));
  for (const auto& r : v.rays) rays.push_back(vector_to_json(r));
  j["vertices"] = verts;
  j["rays"] = rays;
  return j;
}

Json report_to_json(const InheritanceReport& r) {
  Json j;
  j["verdict"] = r.verdict == Verdict::AllInherited ? "AllInherited" : "NotAllInherited";
  j["P"] = polyhedron_to_json(r.P);
  j["counts"] = {{"P_circuits", r.P_circuits.size()},   {"Q_circuits", r.Q_circuits.size()},
                 {"projected", r.projected.size()},     {"inherited", r.inherited.size()},
                 {"non_inherited", r.non_inherited.size()}, {"edge_dirs", r.edge_dirs.size()}};
  j["inherited_equals_edges"] = r.inherited_equals_edges;
  auto dirs = [](const CircuitSet& c) {
    Json a = Json::array();
    for (const auto& g : c) a.push_back(vector_to_json(g));
    return a;
  };
  j["non_inherited"] = dirs(r.non_inherited);
  j["inherited"] = dirs(r.inherited);
  j["edge_dirs"] = dirs(r.edge_dirs);
  j["P_circuits"] = dirs(r.P_circuits);
  j["projected"] = dirs(r.projected);
  return j;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_json_file(const std::filesystem::path& path, const Json& j) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write " + path.string());
  out << dump(j);
}

}  // namespace polycirc
