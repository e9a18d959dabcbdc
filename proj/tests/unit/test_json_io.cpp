#include <gtest/gtest.h>

#include <filesystem>

#include "polycirc/errors.hpp"
#include "polycirc/json_io.hpp"
#include "polycirc/reproduce.hpp"
#include "support.hpp"

using namespace polycirc;
using testing_support::vec;

TEST(Json, PolyhedronRoundTrip) {
  HPolyhedron p(2, "tri");
  p.add_equality(RatVector{Rational(1, 2), 1}, Rational(-3, 7));
  p.add_inequality(vec({1, 0}), 1, "a");
  p.add_lower(vec({0, 1}), 0, "b");
  const auto j = polyhedron_to_json(p);
  EXPECT_EQ(j["b"][0], "-3/7");
  EXPECT_EQ(polyhedron_from_json(j), p);
  EXPECT_EQ(polyhedron_from_json(Json::parse(dump(j))), p);
}

TEST(Json, AcceptsIntegersAndInfersDimension) {
  const auto j = Json::parse(R"({"B": [[1, 0], [0, "1/2"]], "d": [1, "3/2"]})");
  const auto p = polyhedron_from_json(j);
  EXPECT_EQ(p.ambient_dim, 2u);
  EXPECT_EQ(p.B(1, 1), Rational(1, 2));
  EXPECT_EQ(p.d[1], Rational(3, 2));
}

TEST(Json, MalformedInputRaisesParseError) {
  EXPECT_THROW(polyhedron_from_json(Json::parse(R"({"B": [[1, 0]], "d": [1, 2]})")), ParseError);
  EXPECT_THROW(polyhedron_from_json(Json::parse(R"({"B": [[1, "x"]], "d": [1]})")), ParseError);
  EXPECT_THROW(polyhedron_from_json(Json::parse(R"([1, 2])")), ParseError);
  EXPECT_THROW(map_from_json(Json::parse(R"({"matrix": [[1, 2], [3]]})")), ParseError);
  EXPECT_THROW(read_json_file("/nonexistent/file.json"), Error);
}

TEST(Json, MapRoundTripAndBareArray) {
  const auto pi = pi_matrix(3, 4);
  EXPECT_EQ(map_from_json(map_to_json(pi, "Pi")), pi);
  EXPECT_EQ(map_from_json(Json::parse("[[1, 0], [0, 1]]")).matrix, RatMatrix::identity(2));
}

TEST(Json, CircuitSetEncoding) {
  const auto j = circuits_to_json(enumerate_circuits(hypercube(2)));
  EXPECT_EQ(j["kind"], "circuits");
  EXPECT_EQ(j["count"], 2);
  EXPECT_EQ(j["directions"].size(), 2u);
  HPolyhedron line(2);
  line.add_inequality(vec({1, 0}), 1);
  const auto l = circuits_to_json(enumerate_circuits(line));
  EXPECT_EQ(l["kind"], "lineality");
  EXPECT_EQ(l["basis"].size(), 1u);
}

TEST(Json, FilesAreWrittenDeterministically) {
  const auto dir = std::filesystem::temp_directory_path() / "polycirc_json_test";
  std::filesystem::remove_all(dir);
  const auto path = dir / "sub" / "p.json";
  write_json_file(path, polyhedron_to_json(cross_polytope(3)));
  EXPECT_EQ(polyhedron_from_json(read_json_file(path)), cross_polytope(3));
  EXPECT_EQ(dump(read_json_file(path)), dump(polyhedron_to_json(cross_polytope(3))));
  std::filesystem::remove_all(dir);
}

TEST(Json, ResultEncodingExcludesRuntime) {
  ExperimentParams prm;
  prm.n = 3;
  prm.m = 4;
  auto a = run_experiment("thm1", prm);
  auto b = run_experiment("thm1", prm);
  a.runtime_seconds = 1;
  b.runtime_seconds = 2;
  EXPECT_EQ(dump(result_to_json(a)), dump(result_to_json(b)));
  EXPECT_FALSE(result_to_json(a).contains("runtime"));
  EXPECT_TRUE(result_to_json(a)["pass"].get<bool>());
}

TEST(Reproduce, UnknownExperimentIsRejected) {
  EXPECT_THROW(run_experiment("nope", ExperimentParams{}), InvalidArgument);
  EXPECT_EQ(experiment_ids().size(), 9u);
}

TEST(Reproduce, ArtifactsArePersisted) {
  const auto dir = std::filesystem::temp_directory_path() / "polycirc_repro_test";
  std::filesystem::remove_all(dir);
  const auto r = run_experiment("lemma17", ExperimentParams{}, dir);
  EXPECT_TRUE(std::filesystem::exists(dir / "result.json"));
  EXPECT_FALSE(r.artifacts.empty());
  for (const auto& a : r.artifacts) EXPECT_TRUE(std::filesystem::exists(dir / a)) << a;
  std::filesystem::remove_all(dir);
}

TEST(Reproduce, BudgetAbortWritesPartialResult) {
  const auto dir = std::filesystem::temp_directory_path() / "polycirc_budget_test";
  std::filesystem::remove_all(dir);
  ExperimentParams prm;
  prm.n = 4;
  prm.budget = 50;
  EXPECT_THROW(run_experiment("thm2", prm, dir), BudgetExceeded);
  const auto j = read_json_file(dir / "result.json");
  EXPECT_TRUE(j.contains("aborted"));
  EXPECT_FALSE(j["pass"].get<bool>());
  std::filesystem::remove_all(dir);
}
