#pragma once

// Brute-force linear algebra used as an independent check on the library.
// Nothing here calls into the library's elimination, coboundary or cohomology
// code; it only reads stalk dimensions and restriction matrices.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

#include "cellsheaf/sheaf.hpp"

namespace oracle {

using Row = std::vector<mpq_class>;
using Rows = std::vector<Row>;

// Forward elimination only (row echelon, no back substitution).
std::size_t rank(Rows rows, std::size_t cols);

inline std::size_t nullity(const Rows& rows, std::size_t cols) { return cols - rank(rows, cols); }

// Unique solution of rows * x = rhs, if the system is consistent with a
// trivial kernel.
std::optional<Row> unique_solution(Rows rows, Row rhs, std::size_t cols);

// Stacks F(a -> b) s(a) - s(b) = 0 for every proper inclusion a -> b over
// unknowns on every face, and returns the solution-space dimension.
std::size_t section_space_dim(const cellsheaf::Sheaf& f);

// Same constraint rows, plus the column offset of each face's unknowns.
Rows section_constraints(const cellsheaf::Sheaf& f, std::vector<std::size_t>& offsets);

Rows to_rows(const cellsheaf::RationalMatrix& m);

}  // namespace oracle
