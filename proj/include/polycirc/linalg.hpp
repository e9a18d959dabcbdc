#pragma once

// Exact rational linear algebra.
//
// Every quantity in the library is an exact rational; there is no floating
// point anywhere in the core. Rationals are GMP mpq values, which are kept in
// lowest terms with a positive denominator by every arithmetic operation.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace polycirc {

using Rational = mpq_class;
using Integer = mpz_class;
using RatVector = std::vector<Rational>;

/// Serializes as "p/q", or "p" when q = 1.
std::string to_string(const Rational& r);
/// Parses "p", "-p", "p/q". Throws ParseError on anything else or q = 0.
Rational parse_rational(std::string_view text);

std::string to_string(const RatVector& v);

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  RatMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static RatMatrix identity(std::size_t n);
  /// Stacks the given rows; every row must have `cols` entries.
  static RatMatrix from_rows(const std::vector<RatVector>& rows, std::size_t cols);
  /// The matrix whose columns are the given vectors (each of length `rows`).
  static RatMatrix from_columns(const std::vector<RatVector>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RatVector row(std::size_t i) const;
  RatVector col(std::size_t j) const;
  void append_row(const RatVector& r);
  RatMatrix select_rows(const std::vector<std::size_t>& idx) const;
  RatMatrix transpose() const;

  friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

std::string to_string(const RatMatrix& m);

struct RrefResult {
  RatMatrix reduced;
  std::vector<std::size_t> pivots;  // increasing
};

RrefResult rref(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);

/// Basis of ker(m), one primitive integer vector per free column of rref(m).
/// Empty iff m has full column rank.
std::vector<RatVector> kernel_basis(const RatMatrix& m);

/// Some solution of m x = rhs (free coordinates set to zero), or nullopt if the
/// system is inconsistent.
std::optional<RatVector> solve(const RatMatrix& m, const RatVector& rhs);

RatMatrix matmul(const RatMatrix& a, const RatMatrix& b);
RatVector matvec(const RatMatrix& a, const RatVector& x);
/// Inverse of a square matrix, nullopt if singular.
std::optional<RatMatrix> inverse(const RatMatrix& m);

Rational dot(const RatVector& a, const RatVector& b);
RatVector add(const RatVector& a, const RatVector& b);
RatVector sub(const RatVector& a, const RatVector& b);
RatVector scale(const RatVector& a, const Rational& s);
bool is_zero(const RatVector& v);
RatVector unit_vector(std::size_t dim, std::size_t i);
RatVector make_vector(std::initializer_list<long> entries);

/// Positive multiple of v with coprime integer entries. v must be nonzero.
RatVector primitive_integer(const RatVector& v);

/// The unique primitive integer vector parallel to v whose first nonzero entry
/// is positive. Identifies v with the line it spans. Throws on v = 0.
RatVector canonicalize_direction(const RatVector& v);

/// Primitive integer positive multiple of v; keeps orientation (for rays).
RatVector canonicalize_ray(const RatVector& v);

/// True iff a and b span the same line (both nonzero).
bool parallel(const RatVector& a, const RatVector& b);

}  // namespace polycirc
