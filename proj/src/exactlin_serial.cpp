#include "cellsheaf/exactlin.hpp"

#include <algorithm>

namespace cellsheaf::reference {

std::vector<std::size_t> reduce_in_place(RationalMatrix& m, std::size_t pivot_limit) {
  pivot_limit = std::min(pivot_limit, m.cols());
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < pivot_limit && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));

    const Rational pivot = m(row, col);
    for (std::size_t c = 0; c < m.cols(); ++c) m(row, c) /= pivot;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row) continue;
      const Rational factor = m(r, col);
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

RowEchelon row_reduce(const RationalMatrix& m) {
  RowEchelon out{m, {}};
  out.pivot_columns = reference::reduce_in_place(out.reduced, m.cols());
  return out;
}

std::size_t rank(const RationalMatrix& m) { return reference::row_reduce(m).pivot_columns.size(); }

}  // namespace cellsheaf::reference
