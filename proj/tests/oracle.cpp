#include "oracle.hpp"

#include <utility>

namespace oracle {

std::size_t rank(Rows rows, std::size_t cols) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = rows.size();
    for (std::size_t i = r; i < rows.size(); ++i)
      if (rows[i][c] != 0) p = i;  // last nonzero, unlike the library's first
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      const mpq_class f = rows[i][c] / rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
    }
    ++r;
  }
  return r;
}

std::optional<Row> unique_solution(Rows rows, Row rhs, std::size_t cols) {
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i].push_back(rhs[i]);
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = rows.size();
    for (std::size_t i = r; i < rows.size(); ++i)
      if (rows[i][c] != 0) p = i;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      const mpq_class f = rows[i][c] / rows[r][c];
      for (std::size_t k = c; k <= cols; ++k) rows[i][k] -= f * rows[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows.size(); ++i)
    if (rows[i][cols] != 0) return std::nullopt;
  if (pivots.size() != cols) return std::nullopt;
  Row x(cols);
  for (std::size_t i = r; i-- > 0;) {
    mpq_class acc = rows[i][cols];
    for (std::size_t k = pivots[i] + 1; k < cols; ++k) acc -= rows[i][k] * x[k];
    x[pivots[i]] = acc / rows[i][pivots[i]];
  }
  return x;
}

Rows to_rows(const cellsheaf::RationalMatrix& m) {
  Rows out(m.rows(), Row(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c);
  return out;
}

Rows section_constraints(const cellsheaf::Sheaf& f, std::vector<std::size_t>& offsets) {
  const auto& x = f.base();
  offsets.assign(x.size() + 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i) offsets[i + 1] = offsets[i] + f.stalk_dim(i);
  const std::size_t cols = offsets.back();
  Rows rows;
  for (std::size_t b = 0; b < x.size(); ++b) {
    for (std::size_t a = 0; a < x.size(); ++a) {
      if (a == b || !x.face(a).is_subface_of(x.face(b))) continue;
      const auto& r = f.restriction(a, b);
      for (std::size_t i = 0; i < r.rows(); ++i) {
        Row row(cols);
        for (std::size_t j = 0; j < r.cols(); ++j) row[offsets[a] + j] = r(i, j);
        row[offsets[b] + i] -= 1;
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

std::size_t section_space_dim(const cellsheaf::Sheaf& f) {
  std::vector<std::size_t> offsets;
  Rows rows = section_constraints(f, offsets);
  return nullity(rows, offsets.back());
}

}  // namespace oracle
