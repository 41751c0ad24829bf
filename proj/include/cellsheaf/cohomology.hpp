#pragma once

// Cochain spaces, coboundary matrices and sheaf cohomology.

#include <cstddef>
#include <vector>

#include "cellsheaf/exactlin.hpp"
#include "cellsheaf/sheaf.hpp"

namespace cellsheaf {

struct CochainBlock {
  std::size_t face;    // index in the base complex
  std::size_t dim;     // stalk dimension
  std::size_t offset;  // first coordinate of this block
};

// C^k(X;F): direct sum of the stalks on k-faces, in canonical face order.
struct CochainSpace {
  int degree = 0;
  std::vector<CochainBlock> blocks;
  std::size_t total_dim = 0;

  static CochainSpace of(const Sheaf& f, int k);
};

// d^k : C^k -> C^{k+1}. Block (b, a) is [b:a] F(a -> b). Degrees at or above
// dim X give a matrix with zero rows.
RationalMatrix coboundary(const Sheaf& f, int k);

struct DegreeCohomology {
  int degree = 0;
  std::size_t cochain_dim = 0;
  std::size_t coboundary_rank = 0;  // rank d^k
  std::size_t dim = 0;              // dim H^k
  RationalMatrix cocycles;          // columns span ker d^k
};

struct CohomologyReport {
  std::vector<DegreeCohomology> degrees;  // 0 .. max(dim X, 0)

  // Zero for degrees outside the computed range.
  std::size_t dim(int k) const;
  std::size_t cochain_dim(int k) const;
  long long euler_characteristic() const;
  long long cochain_euler_characteristic() const;
};

// Degrees are computed independently and may run concurrently; the report is
// identical regardless of scheduling.
CohomologyReport cohomology(const Sheaf& f);

// A basis of H^0 = ker d^0 as vertex cochains.
RationalMatrix h0_basis(const Sheaf& f);

// Extends a 0-cochain to every face by restriction. Only meaningful for
// cocycles; the result then passes is_section on the whole base.
Assignment extend_vertex_cochain(const Sheaf& f, std::span<const Rational> c0);

// Flattens the vertex values of an assignment into a 0-cochain.
Vector vertex_cochain(const Sheaf& f, const Assignment& s);

// Global sections represented by the H^0 basis columns.
std::vector<Assignment> global_sections(const Sheaf& f, const CohomologyReport& report);

// Matrix of H^0(source) -> H^0(target) in the h0_basis() bases of each side.
// Throws ConsistencyError if some image fails to be a global section.
RationalMatrix induced_h0_map(const SheafMorphism& m);
RationalMatrix induced_h0_map(const SheafMorphism& m, const RationalMatrix& source_h0,
                              const RationalMatrix& target_h0);

// Applies the morphism on vertex stalks to a 0-cochain of the source.
Vector apply_on_vertices(const SheafMorphism& m, std::span<const Rational> c0);

}  // namespace cellsheaf
