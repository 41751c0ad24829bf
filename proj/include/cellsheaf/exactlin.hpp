#pragma once

// Dense linear algebra over the rationals. Every operation is exact.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cellsheaf/errors.hpp"

namespace cellsheaf {

using Rational = mpq_class;
using Vector = std::vector<Rational>;

// Accepts "p", "-p" and "p/q"; the result is canonicalized.
Rational parse_rational(std::string_view text);
// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix column_vector(std::span<const Rational> v);
  static RationalMatrix from_columns(std::size_t rows, const std::vector<Vector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vector column(std::size_t c) const;

  RationalMatrix transpose() const;
  bool is_zero() const;

  // Copies `block` into this matrix with its top-left corner at (r0, c0).
  void set_block(std::size_t r0, std::size_t c0, const RationalMatrix& block);
  RationalMatrix block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
Vector operator*(const RationalMatrix& a, std::span<const Rational> x);
RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator*(const Rational& s, const RationalMatrix& a);

RationalMatrix hstack(const RationalMatrix& left, const RationalMatrix& right);
RationalMatrix vstack(const RationalMatrix& top, const RationalMatrix& bottom);

bool is_zero(std::span<const Rational> v);

// Reduced row echelon form. Pivots are chosen as the first nonzero entry
// scanning columns left to right, so output bases are deterministic.
struct RowEchelon {
  RationalMatrix reduced;
  std::vector<std::size_t> pivot_columns;  // one per nonzero row of `reduced`
};

// Reduces `m` in place, only pivoting in columns [0, pivot_limit). Columns
// beyond the limit are carried along (augmented right-hand sides). The row
// update for each pivot runs as an OpenMP parallel loop on large inputs.
std::vector<std::size_t> reduce_in_place(RationalMatrix& m, std::size_t pivot_limit);

RowEchelon row_reduce(const RationalMatrix& m);

namespace reference {
// Straightforward single-threaded Gauss-Jordan elimination with the same pivot
// rule. Kept as the comparison baseline for the parallel kernel.
std::vector<std::size_t> reduce_in_place(RationalMatrix& m, std::size_t pivot_limit);
RowEchelon row_reduce(const RationalMatrix& m);
std::size_t rank(const RationalMatrix& m);
}  // namespace reference

std::size_t rank(const RationalMatrix& m);

// Columns form a basis of ker m; one column per free variable, in column order.
RationalMatrix kernel_basis(const RationalMatrix& m);

struct Solution {
  Vector particular;      // free variables set to zero
  RationalMatrix kernel;  // kernel_basis(m)
};

// y with y^T m = 0 and y^T b != 0, scaled so its first nonzero entry is 1.
struct Inconsistency {
  Vector certificate;
};

using SolveResult = std::variant<Solution, Inconsistency>;

SolveResult solve(const RationalMatrix& m, std::span<const Rational> b);

// Returns x with m * x = rhs column by column, or throws ConsistencyError when
// some column of rhs is outside the column span of m. Used where consistency
// is a proven invariant.
RationalMatrix solve_exact(const RationalMatrix& m, const RationalMatrix& rhs);

// Raised by quotient_dimension; `column` is the first column of `small` that
// does not lie in the span of `big`.
class ContainmentError : public InputError {
 public:
  ContainmentError(std::size_t column, const std::string& what)
      : InputError(what), column_(column) {}
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

// dim(colspan big / colspan small). Throws ContainmentError if small is not
// contained in big.
std::size_t quotient_dimension(const RationalMatrix& big, const RationalMatrix& small);

}  // namespace cellsheaf
