#include "polycirc/random_instances.hpp"

#include "polycirc/errors.hpp"
#include "polycirc/lp.hpp"

namespace polycirc {

long InstanceGenerator::uniform(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(rng_() % span);
}

namespace {

bool bounded(const HPolyhedron& p) {
  for (std::size_t i = 0; i < p.ambient_dim; ++i)
    for (Sense s : {Sense::Maximize, Sense::Minimize})
      if (!std::holds_alternative<LPOptimal>(lp_solve(unit_vector(p.ambient_dim, i), p, s))) return false;
  return true;
}

}  // namespace

HPolyhedron InstanceGenerator::pointed_polyhedron(std::size_t n, std::size_t extra, bool want_bounded,
                                                  bool with_equality) {
  if (n == 0) throw InvalidArgument("pointed_polyhedron: n must be positive");
  // n rows never bound R^n.
  if (want_bounded && extra == 0) extra = 1;
  for (;;) {
    HPolyhedron p(n, "random" + std::to_string(n));
    RatMatrix stacked(0, n);
    if (with_equality) {
      RatVector a(n);
      for (auto& x : a) x = uniform(-2, 2);
      if (is_zero(a)) continue;
      p.add_equality(a, 0);
      stacked.append_row(a);
    }
    for (std::size_t r = 0; r < n + extra; ++r) {
      RatVector a(n);
      do {
        for (auto& x : a) x = uniform(-2, 2);
      } while (is_zero(a));
      p.add_inequality(a, uniform(1, 3));
      stacked.append_row(a);
    }
    if (rank(stacked) != n) continue;
    if (want_bounded && !bounded(p)) continue;
    return p;
  }
}

LinearMap InstanceGenerator::map_of_rank(std::size_t rows, std::size_t cols, std::size_t r) {
  if (r > std::min(rows, cols)) throw InvalidArgument("map_of_rank: rank too large");
  for (;;) {
    RatMatrix m(rows, cols);
    if (r == std::min(rows, cols)) {
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform(-2, 2);
    } else {
      // A product of rows x r and r x cols factors has rank at most r.
      RatMatrix left(rows, r), right(r, cols);
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < r; ++j) left(i, j) = uniform(-2, 2);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < cols; ++j) right(i, j) = uniform(-1, 1);
      m = matmul(left, right);
    }
    if (rank(m) == r) return {m};
  }
}

}  // namespace polycirc
