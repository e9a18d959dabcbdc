#pragma once

// JSON encodings. Rationals are strings "p/q" (or "p"); integers are also
// accepted on input. Object keys keep a fixed order so output is byte-stable.

#include <filesystem>

#include <json.hpp>

#include "polycirc/inheritance.hpp"

namespace polycirc {

using Json = nlohmann::ordered_json;

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);
Json vector_to_json(const RatVector& v);
RatVector vector_from_json(const Json& j);
Json matrix_rows_to_json(const RatMatrix& m);
/// Rows of a matrix; `cols` is used when there are no rows.
RatMatrix matrix_rows_from_json(const Json& j, std::size_t cols);

/// {"name", "dim", "A", "b", "B", "d"} plus optional label arrays.
Json polyhedron_to_json(const HPolyhedron& p);
HPolyhedron polyhedron_from_json(const Json& j);

/// {"name", "rows", "cols", "matrix"}; a bare array of rows is also accepted.
Json map_to_json(const LinearMap& m, const std::string& name = {});
LinearMap map_from_json(const Json& j);

Json circuits_to_json(const CircuitSet& c);
Json basic_solutions_to_json(const BasicSolutionSet& b);
Json vrep_to_json(const VRep& v);
Json report_to_json(const InheritanceReport& r);

/// Reads and parses a file; throws ParseError with the path on failure.
Json read_json_file(const std::filesystem::path& path);
/// Writes with two-space indentation and a trailing newline.
void write_json_file(const std::filesystem::path& path, const Json& j);
std::string dump(const Json& j);

}  // namespace polycirc
