#include "cellsheaf/exactlin.hpp"

#include <omp.h>

#include <algorithm>
#include <cctype>
#include <utility>

namespace cellsheaf {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

// Rows below this count are eliminated serially; thread startup dominates
// the mpq arithmetic for small systems.
constexpr std::size_t kParallelRowThreshold = 48;

void require_same_shape(const RationalMatrix& a, const RationalMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw InputError(std::string("shape mismatch in ") + op);
  }
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw InputError("not an exact rational: \"" + std::string(text) + "\"");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw InputError("zero denominator: \"" + std::string(text) + "\"");
  if (!text.empty() && text.front() == '-') n = -n;
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) throw InputError("entry count does not match matrix shape");
}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InputError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::column_vector(std::span<const Rational> v) {
  return RationalMatrix(v.size(), 1, Vector(v.begin(), v.end()));
}

RationalMatrix RationalMatrix::from_columns(std::size_t rows, const std::vector<Vector>& columns) {
  RationalMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw InputError("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Vector RationalMatrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool RationalMatrix::is_zero() const { return cellsheaf::is_zero(data_); }

void RationalMatrix::set_block(std::size_t r0, std::size_t c0, const RationalMatrix& b) {
  if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw InputError("block out of range");
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) (*this)(r0 + r, c0 + c) = b(r, c);
}

RationalMatrix RationalMatrix::block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const {
  if (r0 + rows > rows_ || c0 + cols > cols_) throw InputError("block out of range");
  RationalMatrix out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
  return out;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw InputError("shape mismatch in matrix product");
  RationalMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

Vector operator*(const RationalMatrix& a, std::span<const Rational> x) {
  if (a.cols() != x.size()) throw InputError("shape mismatch in matrix-vector product");
  Vector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) out[i] += a(i, k) * x[k];
  return out;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  require_same_shape(a, b, "sum");
  RationalMatrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) += b(r, c);
  return out;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  require_same_shape(a, b, "difference");
  RationalMatrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) -= b(r, c);
  return out;
}

RationalMatrix operator*(const Rational& s, const RationalMatrix& a) {
  RationalMatrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) *= s;
  return out;
}

RationalMatrix hstack(const RationalMatrix& left, const RationalMatrix& right) {
  if (left.rows() != right.rows()) throw InputError("row count mismatch in hstack");
  RationalMatrix out(left.rows(), left.cols() + right.cols());
  out.set_block(0, 0, left);
  out.set_block(0, left.cols(), right);
  return out;
}

RationalMatrix vstack(const RationalMatrix& top, const RationalMatrix& bottom) {
  if (top.cols() != bottom.cols()) throw InputError("column count mismatch in vstack");
  RationalMatrix out(top.rows() + bottom.rows(), top.cols());
  out.set_block(0, 0, top);
  out.set_block(top.rows(), 0, bottom);
  return out;
}

bool is_zero(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
}

std::vector<std::size_t> reduce_in_place(RationalMatrix& m, std::size_t pivot_limit) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  pivot_limit = std::min(pivot_limit, cols);
  std::vector<std::size_t> pivots;
  std::size_t next_row = 0;

  for (std::size_t col = 0; col < pivot_limit && next_row < rows; ++col) {
    std::size_t p = next_row;
    while (p < rows && m(p, col) == 0) ++p;
    if (p == rows) continue;
    if (p != next_row) {
      auto a = m.row(p);
      auto b = m.row(next_row);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    const std::size_t pr = next_row;
    {
      const Rational inv = 1 / m(pr, col);
      for (std::size_t c = col; c < cols; ++c) m(pr, c) *= inv;
    }

    // Each non-pivot row is updated independently from the (read-only) pivot row.
    const bool parallel = rows >= kParallelRowThreshold && !omp_in_parallel();
#pragma omp parallel for schedule(dynamic, 4) if (parallel)
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pr || m(r, col) == 0) continue;
      const Rational factor = m(r, col);
      for (std::size_t c = col; c < cols; ++c) {
        if (m(pr, c) != 0) m(r, c) -= factor * m(pr, c);
      }
    }
    pivots.push_back(col);
    ++next_row;
  }
  return pivots;
}

RowEchelon row_reduce(const RationalMatrix& m) {
  RowEchelon out{m, {}};
  out.pivot_columns = reduce_in_place(out.reduced, m.cols());
  return out;
}

std::size_t rank(const RationalMatrix& m) {
  RationalMatrix work = m;
  return reduce_in_place(work, work.cols()).size();
}

namespace {

RationalMatrix kernel_from_echelon(const RationalMatrix& reduced, const std::vector<std::size_t>& pivots,
                                   std::size_t cols) {
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  RationalMatrix basis(cols, cols - pivots.size());
  std::size_t out_col = 0;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    basis(free, out_col) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) basis(pivots[i], out_col) = -reduced(i, free);
    ++out_col;
  }
  return basis;
}

}  // namespace

RationalMatrix kernel_basis(const RationalMatrix& m) {
  RowEchelon e = row_reduce(m);
  return kernel_from_echelon(e.reduced, e.pivot_columns, m.cols());
}

SolveResult solve(const RationalMatrix& m, std::span<const Rational> b) {
  if (b.size() != m.rows()) throw InputError("right-hand side length does not match row count");
  const std::size_t n = m.cols();
  // [m | b | I]: the identity block records the row operations so a left
  // null vector can be read off any zero row.
  RationalMatrix aug(m.rows(), n + 1 + m.rows());
  aug.set_block(0, 0, m);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    aug(r, n) = b[r];
    aug(r, n + 1 + r) = 1;
  }
  const auto pivots = reduce_in_place(aug, n);

  for (std::size_t r = pivots.size(); r < m.rows(); ++r) {
    if (aug(r, n) != 0) {
      Vector y(m.rows());
      for (std::size_t i = 0; i < m.rows(); ++i) y[i] = aug(r, n + 1 + i);
      auto lead = std::find_if(y.begin(), y.end(), [](const Rational& q) { return q != 0; });
      const Rational scale = 1 / *lead;
      for (auto& v : y) v *= scale;
      return Inconsistency{std::move(y)};
    }
  }

  Solution sol;
  sol.particular.assign(n, Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) sol.particular[pivots[i]] = aug(i, n);
  sol.kernel = kernel_from_echelon(aug, pivots, n);
  return sol;
}

RationalMatrix solve_exact(const RationalMatrix& m, const RationalMatrix& rhs) {
  if (rhs.rows() != m.rows()) throw InputError("right-hand side row count mismatch");
  const std::size_t n = m.cols();
  RationalMatrix aug = hstack(m, rhs);
  const auto pivots = reduce_in_place(aug, n);
  for (std::size_t r = pivots.size(); r < m.rows(); ++r)
    for (std::size_t c = n; c < aug.cols(); ++c)
      if (aug(r, c) != 0) throw ConsistencyError("right-hand side column outside the column span");
  RationalMatrix x(n, rhs.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t c = 0; c < rhs.cols(); ++c) x(pivots[i], c) = aug(i, n + c);
  return x;
}

std::size_t quotient_dimension(const RationalMatrix& big, const RationalMatrix& small) {
  if (big.rows() != small.rows()) throw InputError("quotient operands live in different spaces");
  const std::size_t big_rank = rank(big);
  for (std::size_t c = 0; c < small.cols(); ++c) {
    const Vector col = small.column(c);
    if (std::holds_alternative<Inconsistency>(solve(big, col))) {
      throw ContainmentError(c, "column " + std::to_string(c) + " of the subspace is not contained in the ambient span");
    }
  }
  return big_rank - rank(small);
}

}  // namespace cellsheaf
