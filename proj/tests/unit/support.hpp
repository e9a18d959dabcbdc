#pragma once

// Conversions between the oracle's plain rows and library types.

#include "oracle.hpp"
#include "polycirc/circuits.hpp"

namespace testing_support {

inline polycirc::HPolyhedron to_polyhedron(const oracle::System& s, const std::string& name = "t") {
  polycirc::HPolyhedron p(s.n, name);
  for (std::size_t i = 0; i < s.A.size(); ++i) p.add_equality(s.A[i], s.b[i]);
  for (std::size_t i = 0; i < s.B.size(); ++i) p.add_inequality(s.B[i], s.d[i]);
  return p;
}

inline oracle::System to_system(const polycirc::HPolyhedron& p) {
  oracle::System s;
  s.n = p.ambient_dim;
  for (std::size_t i = 0; i < p.A.rows(); ++i) s.A.push_back(p.A.row(i));
  s.b = p.b;
  for (std::size_t i = 0; i < p.B.rows(); ++i) s.B.push_back(p.B.row(i));
  s.d = p.d;
  return s;
}

inline std::set<oracle::Vec> lines(const polycirc::CircuitSet& c) {
  std::set<oracle::Vec> out;
  for (const auto& g : c) out.insert(oracle::normalize_line(g));
  return out;
}

inline std::set<oracle::Vec> lines(const std::set<oracle::Vec>& c) {
  std::set<oracle::Vec> out;
  for (const auto& g : c) out.insert(oracle::normalize_line(g));
  return out;
}

inline polycirc::RatVector vec(std::initializer_list<long> v) { return polycirc::make_vector(v); }

}  // namespace testing_support
