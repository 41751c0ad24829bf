#include "cellsheaf/cohomology.hpp"

#include <algorithm>

namespace cellsheaf {

CochainSpace CochainSpace::of(const Sheaf& f, int k) {
  CochainSpace c;
  c.degree = k;
  const auto& x = f.base();
  const std::size_t first = x.offset(k);
  for (std::size_t i = 0; i < x.count(k); ++i) {
    const std::size_t face = first + i;
    c.blocks.push_back({face, f.stalk_dim(face), c.total_dim});
    c.total_dim += f.stalk_dim(face);
  }
  return c;
}

RationalMatrix coboundary(const Sheaf& f, int k) {
  const CochainSpace from = CochainSpace::of(f, k);
  const CochainSpace to = CochainSpace::of(f, k + 1);
  RationalMatrix d(to.total_dim, from.total_dim);
  const auto& x = f.base();
  std::vector<std::size_t> block_of(x.size(), 0);
  for (std::size_t i = 0; i < from.blocks.size(); ++i) block_of[from.blocks[i].face] = i;

  for (const auto& target : to.blocks) {
    const Face& b = x.face(target.face);
    for (std::size_t i = 0; i < b.size(); ++i) {
      const std::size_t a = x.index_of(b.without(i));
      const int sign = i % 2 == 0 ? 1 : -1;
      const CochainBlock& source = from.blocks[block_of[a]];
      const RationalMatrix& r = f.restriction(a, target.face);
      for (std::size_t row = 0; row < r.rows(); ++row)
        for (std::size_t col = 0; col < r.cols(); ++col)
          d(target.offset + row, source.offset + col) = sign * r(row, col);
    }
  }
  return d;
}

std::size_t CohomologyReport::dim(int k) const {
  if (k < 0 || k >= static_cast<int>(degrees.size())) return 0;
  return degrees[k].dim;
}

std::size_t CohomologyReport::cochain_dim(int k) const {
  if (k < 0 || k >= static_cast<int>(degrees.size())) return 0;
  return degrees[k].cochain_dim;
}

long long CohomologyReport::euler_characteristic() const {
  long long chi = 0;
  for (const auto& d : degrees) chi += (d.degree % 2 == 0 ? 1 : -1) * static_cast<long long>(d.dim);
  return chi;
}

long long CohomologyReport::cochain_euler_characteristic() const {
  long long chi = 0;
  for (const auto& d : degrees) chi += (d.degree % 2 == 0 ? 1 : -1) * static_cast<long long>(d.cochain_dim);
  return chi;
}

CohomologyReport cohomology(const Sheaf& f) {
  const int top = std::max(f.base().dimension(), 0);
  CohomologyReport report;
  report.degrees.resize(static_cast<std::size_t>(top + 1));

#pragma omp parallel for schedule(dynamic) if (top > 0)
  for (int k = 0; k <= top; ++k) {
    auto& deg = report.degrees[k];
    const RationalMatrix d = coboundary(f, k);
    const RowEchelon e = row_reduce(d);
    deg.degree = k;
    deg.cochain_dim = d.cols();
    deg.coboundary_rank = e.pivot_columns.size();
    deg.cocycles = kernel_basis(d);
  }
  for (int k = 0; k <= top; ++k) {
    const std::size_t incoming = k == 0 ? 0 : report.degrees[k - 1].coboundary_rank;
    auto& deg = report.degrees[k];
    deg.dim = deg.cochain_dim - deg.coboundary_rank - incoming;
  }
  return report;
}

RationalMatrix h0_basis(const Sheaf& f) { return kernel_basis(coboundary(f, 0)); }

Assignment extend_vertex_cochain(const Sheaf& f, std::span<const Rational> c0) {
  const auto& x = f.base();
  const CochainSpace space = CochainSpace::of(f, 0);
  if (c0.size() != space.total_dim) throw InputError("0-cochain has the wrong length");
  Assignment s;
  std::vector<Vector> vertex_values(x.count(0));
  for (std::size_t i = 0; i < space.blocks.size(); ++i) {
    const auto& blk = space.blocks[i];
    vertex_values[i].assign(c0.begin() + static_cast<long>(blk.offset),
                            c0.begin() + static_cast<long>(blk.offset + blk.dim));
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Face& face = x.face(i);
    const std::size_t v = x.index_of(Face{face[0]});
    s.values[face] = f.restriction(v, i) * std::span<const Rational>(vertex_values[v]);
  }
  return s;
}

Vector vertex_cochain(const Sheaf& f, const Assignment& s) {
  const CochainSpace space = CochainSpace::of(f, 0);
  Vector c0(space.total_dim);
  for (const auto& blk : space.blocks) {
    auto it = s.values.find(f.base().face(blk.face));
    if (it == s.values.end()) continue;
    if (it->second.size() != blk.dim) throw InputError("assignment value has the wrong length");
    std::copy(it->second.begin(), it->second.end(), c0.begin() + static_cast<long>(blk.offset));
  }
  return c0;
}

std::vector<Assignment> global_sections(const Sheaf& f, const CohomologyReport& report) {
  std::vector<Assignment> out;
  if (report.degrees.empty()) return out;
  const RationalMatrix& basis = report.degrees[0].cocycles;
  for (std::size_t c = 0; c < basis.cols(); ++c) out.push_back(extend_vertex_cochain(f, basis.column(c)));
  return out;
}

Vector apply_on_vertices(const SheafMorphism& m, std::span<const Rational> c0) {
  const CochainSpace from = CochainSpace::of(m.source(), 0);
  const CochainSpace to = CochainSpace::of(m.target(), 0);
  if (c0.size() != from.total_dim) throw InputError("0-cochain has the wrong length");
  Vector out(to.total_dim);
  for (std::size_t i = 0; i < from.blocks.size(); ++i) {
    const auto& src = from.blocks[i];
    const auto& dst = to.blocks[i];
    const Vector image = m.component(src.face) * c0.subspan(src.offset, src.dim);
    std::copy(image.begin(), image.end(), out.begin() + static_cast<long>(dst.offset));
  }
  return out;
}

RationalMatrix induced_h0_map(const SheafMorphism& m, const RationalMatrix& source_h0,
                              const RationalMatrix& target_h0) {
  const RationalMatrix d0 = coboundary(m.target(), 0);
  RationalMatrix images(target_h0.rows(), source_h0.cols());
  for (std::size_t c = 0; c < source_h0.cols(); ++c) {
    const Vector image = apply_on_vertices(m, source_h0.column(c));
    if (!is_zero(d0 * std::span<const Rational>(image))) {
      throw ConsistencyError("morphism maps a global section to a non-section");
    }
    for (std::size_t r = 0; r < image.size(); ++r) images(r, c) = image[r];
  }
  return solve_exact(target_h0, images);
}

RationalMatrix induced_h0_map(const SheafMorphism& m) {
  return induced_h0_map(m, h0_basis(m.source()), h0_basis(m.target()));
}

}  // namespace cellsheaf
