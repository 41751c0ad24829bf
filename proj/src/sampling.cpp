#include "cellsheaf/sampling.hpp"

#include <algorithm>

namespace cellsheaf {

Sheaf make_sampling_sheaf(const SimplicialComplex& x, const SimplicialComplex& y,
                          const std::map<Face, std::size_t>& dims) {
  if (!y.is_subcomplex_of(x)) throw InputError("sampling support is not a subcomplex of the base");
  std::vector<std::size_t> stalks(x.size(), 0);
  for (const auto& [face, d] : dims) {
    if (!y.contains(face)) throw InputError("sampling stalk given off the support at " + face.to_string());
    stalks[x.index_of(face)] = d;
  }
  std::map<Inclusion, RationalMatrix> r;
  for (std::size_t b = 0; b < x.size(); ++b)
    for (std::size_t a : x.subfaces(b))
      r.emplace(Inclusion{a, b}, a == b ? RationalMatrix::identity(stalks[a]) : RationalMatrix(stalks[b], stalks[a]));
  return Sheaf(x, std::move(stalks), std::move(r));
}

Sheaf make_sampling_sheaf(const SimplicialComplex& x, const SimplicialComplex& y, std::size_t v_dim) {
  std::map<Face, std::size_t> dims;
  for (const Face& f : y.faces()) dims[f] = v_dim;
  return make_sampling_sheaf(x, y, dims);
}

SamplingProblem::SamplingProblem(SimplicialComplex support, SheafMorphism sampling)
    : support_(std::move(support)), sampling_(std::move(sampling)) {
  const auto& x = data().base();
  if (!support_.is_subcomplex_of(x)) throw InputError("sampling support is not a subcomplex of the base");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (samples().stalk_dim(i) != 0 && !support_.contains(x.face(i))) {
      throw InputError("sample stalk is nonzero off the support at " + x.face(i).to_string());
    }
  }
  if (auto v = validate_morphism(sampling_); !v.valid) {
    throw InputError("sampling is not natural along " + v.failing_inclusion->first.to_string() + " -> " +
                     v.failing_inclusion->second.to_string());
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (rank(sampling_.component(i)) != samples().stalk_dim(i)) {
      throw NotSurjectiveError(x.face(i), "sampling is not surjective on the stalk at " + x.face(i).to_string());
    }
  }
}

SamplingProblem SamplingProblem::restriction(const std::shared_ptr<const Sheaf>& f, const SimplicialComplex& y) {
  RestrictedSheaf r = restrict_to_subcomplex(f, y);
  return SamplingProblem(y, std::move(r.projection));
}

AmbiguitySheaf kernel_subsheaf(const SheafMorphism& m) {
  const Sheaf& f = m.source();
  const auto& x = f.base();
  std::vector<RationalMatrix> bases;
  std::vector<std::size_t> dims;
  bases.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    bases.push_back(kernel_basis(m.component(i)));
    dims.push_back(bases.back().cols());
  }
  std::map<Inclusion, RationalMatrix> r;
  for (const auto& [inc, map] : f.restrictions()) {
    const auto [a, b] = inc;
    if (a == b) {
      r.emplace(inc, RationalMatrix::identity(dims[a]));
      continue;
    }
    try {
      r.emplace(inc, solve_exact(bases[b], map * bases[a]));
    } catch (const ConsistencyError&) {
      throw ConsistencyError("restriction " + x.face(a).to_string() + " -> " + x.face(b).to_string() +
                             " does not preserve the kernel");
    }
  }
  auto a_sheaf = std::make_shared<const Sheaf>(x, std::move(dims), std::move(r));
  SheafMorphism inclusion(a_sheaf, m.source_ptr(), std::move(bases));
  return {std::move(a_sheaf), std::move(inclusion)};
}

AmbiguitySheaf ambiguity_sheaf(const SamplingProblem& p) { return kernel_subsheaf(p.sampling()); }

AmbiguitySheaf subsheaf_vanishing_on(const std::shared_ptr<const Sheaf>& f, const SimplicialComplex& y) {
  return kernel_subsheaf(restrict_to_subcomplex(f, y).projection);
}

std::string to_string(SamplingVerdict v) {
  switch (v) {
    case SamplingVerdict::perfect: return "perfect";
    case SamplingVerdict::ambiguous: return "ambiguous";
    case SamplingVerdict::redundant: return "redundant";
    case SamplingVerdict::ambiguous_redundant: return "ambiguous+redundant";
  }
  return "unknown";
}

SamplingCertificate nyquist_check(const SamplingProblem& p) {
  const AmbiguitySheaf a = ambiguity_sheaf(p);
  const CohomologyReport rep = cohomology(*a.sheaf);

  SamplingCertificate cert;
  cert.h0_ambiguity = rep.dim(0);
  cert.h1_ambiguity = rep.dim(1);
  const bool ambiguous = cert.h0_ambiguity != 0;
  const bool redundant = cert.h1_ambiguity != 0;
  cert.verdict = ambiguous ? (redundant ? SamplingVerdict::ambiguous_redundant : SamplingVerdict::ambiguous)
                           : (redundant ? SamplingVerdict::redundant : SamplingVerdict::perfect);

  if (!rep.degrees.empty()) {
    cert.ledger.c0 = rep.degrees[0].cochain_dim;
    cert.ledger.rank_d0 = rep.degrees[0].coboundary_rank;
  }
  if (rep.degrees.size() > 1) {
    cert.ledger.c1 = rep.degrees[1].cochain_dim;
    cert.ledger.rank_d1 = rep.degrees[1].coboundary_rank;
  }

  if (ambiguous) {
    const Vector in_a = rep.degrees[0].cocycles.column(0);
    cert.ambiguity_witness = extend_vertex_cochain(p.data(), apply_on_vertices(a.inclusion, in_a));
  }

  const RationalMatrix data_h0 = h0_basis(p.data());
  const RationalMatrix sample_h0 = h0_basis(p.samples());
  cert.h0_data = data_h0.cols();
  cert.h0_samples = sample_h0.cols();
  cert.induced_h0_map = induced_h0_map(p.sampling(), data_h0, sample_h0);
  cert.induced_invertible = cert.induced_h0_map.rows() == cert.induced_h0_map.cols() &&
                            rank(cert.induced_h0_map) == cert.induced_h0_map.rows();
  return cert;
}

OversamplingResult oversampling_check(const Sheaf& f, int k) {
  if (k < 0) throw InputError("degree must be non-negative");
  const auto& x = f.base();
  OversamplingResult out;
  out.degree = k;
  const SimplicialComplex upper = k + 1 >= x.dimension() ? x : skeleton(x, k + 1);
  auto on_upper = std::make_shared<const Sheaf>(sheaf_on_subcomplex(f, upper));
  const SimplicialComplex lower = skeleton(upper, k);
  const AmbiguitySheaf vanishing = subsheaf_vanishing_on(on_upper, lower);
  out.report = cohomology(*vanishing.sheaf);
  out.holds = out.report.dim(k) == 0;
  return out;
}

ObstructionResult obstruction_check(const SamplingProblem& p) {
  ObstructionResult out;
  auto data = p.sampling().source_ptr();
  const AmbiguitySheaf fy = subsheaf_vanishing_on(data, p.support());
  const RationalMatrix fy_h0 = h0_basis(*fy.sheaf);
  out.h0_vanishing = fy_h0.cols();
  if (out.h0_vanishing == 0) return out;
  out.obstructed = true;

  const RationalMatrix data_h0 = h0_basis(p.data());
  const RationalMatrix sample_h0 = h0_basis(p.samples());
  const RationalMatrix induced = induced_h0_map(p.sampling(), data_h0, sample_h0);

  const Vector c0 = apply_on_vertices(fy.inclusion, fy_h0.column(0));
  const Vector coords = solve_exact(data_h0, RationalMatrix::column_vector(c0)).column(0);
  out.kernel_witness = coords;
  out.witness_section = extend_vertex_cochain(p.data(), c0);
  out.verified = !is_zero(coords) && is_zero(induced * std::span<const Rational>(coords));
  return out;
}

std::string to_string(Reconstruction::Kind k) {
  switch (k) {
    case Reconstruction::Kind::unique: return "unique";
    case Reconstruction::Kind::family: return "family";
    case Reconstruction::Kind::inconsistent: return "inconsistent";
  }
  return "unknown";
}

namespace {

Assignment split_by_face(const Sheaf& f, const std::vector<std::size_t>& offsets, std::span<const Rational> x) {
  Assignment s;
  const auto& base = f.base();
  for (std::size_t i = 0; i < base.size(); ++i) {
    auto part = x.subspan(offsets[i], f.stalk_dim(i));
    s.values[base.face(i)] = Vector(part.begin(), part.end());
  }
  return s;
}

}  // namespace

Reconstruction reconstruct(const SamplingProblem& p, const Assignment& sample) {
  const Sheaf& f = p.data();
  const Sheaf& s = p.samples();
  const auto& x = f.base();
  if (!is_section(s, sample)) throw InputError("sample is not a section of the sampling sheaf");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (s.stalk_dim(i) != 0 && !sample.values.contains(x.face(i))) {
      throw InputError("sample has no value on " + x.face(i).to_string());
    }
  }

  std::vector<std::size_t> offsets(x.size() + 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i) offsets[i + 1] = offsets[i] + f.stalk_dim(i);
  const std::size_t unknowns = offsets.back();

  std::size_t equations = 0;
  for (std::size_t b = 0; b < x.size(); ++b)
    if (x.face(b).dimension() > 0) equations += x.face(b).size() * f.stalk_dim(b);
  for (std::size_t i = 0; i < x.size(); ++i) equations += s.stalk_dim(i);

  RationalMatrix system(equations, unknowns);
  Vector rhs(equations);
  std::size_t row = 0;
  // Section constraints F(a -> b) x_a - x_b = 0 on codimension-1 inclusions.
  for (std::size_t b = 0; b < x.size(); ++b) {
    const Face& upper = x.face(b);
    if (upper.dimension() == 0) continue;
    for (std::size_t i = 0; i < upper.size(); ++i) {
      const std::size_t a = x.index_of(upper.without(i));
      system.set_block(row, offsets[a], f.restriction(a, b));
      for (std::size_t r = 0; r < f.stalk_dim(b); ++r) system(row + r, offsets[b] + r) -= 1;
      row += f.stalk_dim(b);
    }
  }
  // Sample constraints s_a x_a = sample(a).
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (s.stalk_dim(i) == 0) continue;
    system.set_block(row, offsets[i], p.sampling().component(i));
    const Vector& value = sample.values.at(x.face(i));
    std::copy(value.begin(), value.end(), rhs.begin() + static_cast<long>(row));
    row += s.stalk_dim(i);
  }

  Reconstruction out;
  SolveResult solved = solve(system, rhs);
  if (auto* bad = std::get_if<Inconsistency>(&solved)) {
    out.kind = Reconstruction::Kind::inconsistent;
    out.certificate = std::move(bad->certificate);
    return out;
  }
  auto& sol = std::get<Solution>(solved);
  out.section = split_by_face(f, offsets, sol.particular);
  for (std::size_t c = 0; c < sol.kernel.cols(); ++c)
    out.directions.push_back(split_by_face(f, offsets, sol.kernel.column(c)));
  out.kind = out.directions.empty() ? Reconstruction::Kind::unique : Reconstruction::Kind::family;
  return out;
}

SamplingProblem evaluation_sampling(const SimplicialComplex& x, std::size_t degree, const std::vector<VertexId>& y) {
  std::vector<Face> gens;
  for (VertexId v : y) gens.push_back(Face{v});
  const SimplicialComplex support = closed_subcomplex(x, gens);
  auto f = std::make_shared<const Sheaf>(constant_sheaf(x, degree + 1));
  auto s = std::make_shared<const Sheaf>(make_sampling_sheaf(x, support, 1));
  std::vector<RationalMatrix> comps;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!support.contains(x.face(i))) {
      comps.emplace_back(0, degree + 1);
      continue;
    }
    RationalMatrix row(1, degree + 1);
    Rational power = 1;
    for (std::size_t j = 0; j <= degree; ++j, power *= x.face(i)[0]) row(0, j) = power;
    comps.push_back(std::move(row));
  }
  return SamplingProblem(support, SheafMorphism(f, s, std::move(comps)));
}

Assignment sample_section(const SamplingProblem& p, const Assignment& section) {
  Assignment out;
  const auto& x = p.data().base();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (p.samples().stalk_dim(i) == 0) continue;
    const Vector& v = section.values.at(x.face(i));
    out.values[x.face(i)] = p.sampling().component(i) * std::span<const Rational>(v);
  }
  return out;
}

}  // namespace cellsheaf
