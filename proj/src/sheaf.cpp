#include "cellsheaf/sheaf.hpp"

#include <algorithm>

namespace cellsheaf {

namespace {

std::string shape_of(const RationalMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

Sheaf::Sheaf(SimplicialComplex base, std::vector<std::size_t> stalk_dims,
             std::map<Inclusion, RationalMatrix> restrictions)
    : base_(std::move(base)), stalk_dims_(std::move(stalk_dims)), restrictions_(std::move(restrictions)) {
  if (stalk_dims_.size() != base_.size()) throw InputError("one stalk dimension is required per face");
  for (const auto& [inc, m] : restrictions_) {
    const auto [lo, hi] = inc;
    if (lo >= base_.size() || hi >= base_.size() || !base_.face(lo).is_subface_of(base_.face(hi))) {
      throw InputError("restriction key is not a face inclusion");
    }
  }
  for (std::size_t b = 0; b < base_.size(); ++b) {
    for (std::size_t a : base_.subfaces(b)) {
      if (restrictions_.contains({a, b})) continue;
      if (a == b) {
        restrictions_.emplace(Inclusion{a, b}, RationalMatrix::identity(stalk_dims_[a]));
      } else {
        throw InputError("missing restriction " + base_.face(a).to_string() + " -> " + base_.face(b).to_string());
      }
    }
  }
}

const RationalMatrix& Sheaf::restriction(std::size_t lower, std::size_t upper) const {
  auto it = restrictions_.find({lower, upper});
  if (it == restrictions_.end()) throw InputError("not a face inclusion");
  return it->second;
}

const RationalMatrix& Sheaf::restriction(const Face& lower, const Face& upper) const {
  return restriction(base_.index_of(lower), base_.index_of(upper));
}

SheafBuilder::SheafBuilder(SimplicialComplex base) : base_(std::move(base)), dims_(base_.size(), 0) {}

SheafBuilder& SheafBuilder::stalk(const Face& f, std::size_t dim) {
  dims_[base_.index_of(f)] = dim;
  return *this;
}

SheafBuilder& SheafBuilder::restriction(const Face& lower, const Face& upper, RationalMatrix m) {
  const std::size_t a = base_.index_of(lower);
  const std::size_t b = base_.index_of(upper);
  if (!lower.is_subface_of(upper)) {
    throw InputError(lower.to_string() + " is not a face of " + upper.to_string());
  }
  given_[{a, b}] = std::move(m);
  return *this;
}

Sheaf SheafBuilder::build() const {
  std::map<Inclusion, RationalMatrix> out;
  // Shorter inclusions first so composites can be formed from stored maps.
  for (int codim = 0; codim <= base_.dimension(); ++codim) {
    for (std::size_t b = 0; b < base_.size(); ++b) {
      const Face& upper = base_.face(b);
      for (std::size_t a : base_.subfaces(b)) {
        const Face& lower = base_.face(a);
        if (upper.dimension() - lower.dimension() != codim) continue;
        if (auto it = given_.find({a, b}); it != given_.end()) {
          out.emplace(Inclusion{a, b}, it->second);
          continue;
        }
        if (codim == 0) {
          out.emplace(Inclusion{a, b}, RationalMatrix::identity(dims_[a]));
        } else if (dims_[a] == 0 || dims_[b] == 0) {
          out.emplace(Inclusion{a, b}, RationalMatrix(dims_[b], dims_[a]));
        } else if (codim == 1) {
          throw InputError("missing restriction " + lower.to_string() + " -> " + upper.to_string());
        } else {
          std::size_t mid = 0;
          for (std::size_t i = 0; i < upper.size(); ++i) {
            Face c = upper.without(i);
            if (lower.is_subface_of(c)) {
              mid = base_.index_of(c);
              break;
            }
          }
          const RationalMatrix& first = out.at({a, mid});
          const RationalMatrix& second = out.at({mid, b});
          if (first.rows() != second.cols()) {
            throw InputError("restriction shapes do not compose along " + lower.to_string() + " -> " +
                             base_.face(mid).to_string() + " -> " + upper.to_string());
          }
          out.emplace(Inclusion{a, b}, second * first);
        }
      }
    }
  }
  return Sheaf(base_, dims_, std::move(out));
}

Sheaf constant_sheaf(const SimplicialComplex& base, std::size_t n) {
  std::map<Inclusion, RationalMatrix> r;
  for (std::size_t b = 0; b < base.size(); ++b)
    for (std::size_t a : base.subfaces(b)) r.emplace(Inclusion{a, b}, RationalMatrix::identity(n));
  return Sheaf(base, std::vector<std::size_t>(base.size(), n), std::move(r));
}

Sheaf zero_sheaf(const SimplicialComplex& base) { return constant_sheaf(base, 0); }

SheafVerdict validate_sheaf(const Sheaf& f) {
  const auto& x = f.base();
  for (const auto& [inc, m] : f.restrictions()) {
    const auto [a, b] = inc;
    if (m.rows() != f.stalk_dim(b) || m.cols() != f.stalk_dim(a)) {
      return {false,
              "restriction has shape " + shape_of(m) + ", expected " + std::to_string(f.stalk_dim(b)) + "x" +
                  std::to_string(f.stalk_dim(a)),
              {x.face(a), x.face(b)}};
    }
    if (a == b && m != RationalMatrix::identity(f.stalk_dim(a))) {
      return {false, "restriction along an identity inclusion is not the identity", {x.face(a), x.face(b)}};
    }
  }
  for (std::size_t c = 0; c < x.size(); ++c) {
    for (std::size_t b : x.subfaces(c)) {
      if (b == c) continue;
      for (std::size_t a : x.subfaces(b)) {
        if (a == b) continue;
        if (f.restriction(b, c) * f.restriction(a, b) != f.restriction(a, c)) {
          return {false, "composition law fails", {x.face(a), x.face(b), x.face(c)}};
        }
      }
    }
  }
  return {};
}

bool is_section(const Sheaf& f, const Assignment& s) {
  const auto& x = f.base();
  for (const auto& [face, value] : s.values) {
    const std::size_t i = x.index_of(face);
    if (value.size() != f.stalk_dim(i)) {
      throw InputError("value on " + face.to_string() + " has length " + std::to_string(value.size()) +
                       ", stalk dimension is " + std::to_string(f.stalk_dim(i)));
    }
  }
  for (const auto& [upper, upper_value] : s.values) {
    for (const auto& [lower, lower_value] : s.values) {
      if (lower == upper || !lower.is_subface_of(upper)) continue;
      if (f.restriction(lower, upper) * std::span<const Rational>(lower_value) != upper_value) return false;
    }
  }
  return true;
}

SheafMorphism::SheafMorphism(std::shared_ptr<const Sheaf> source, std::shared_ptr<const Sheaf> target,
                             std::vector<RationalMatrix> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
  if (!(source_->base() == target_->base())) throw InputError("morphism endpoints live on different complexes");
  const auto& x = source_->base();
  if (components_.size() != x.size()) throw InputError("one morphism component is required per face");
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto& m = components_[i];
    if (m.rows() != target_->stalk_dim(i) || m.cols() != source_->stalk_dim(i)) {
      throw InputError("morphism component on " + x.face(i).to_string() + " has shape " + shape_of(m) +
                       ", expected " + std::to_string(target_->stalk_dim(i)) + "x" +
                       std::to_string(source_->stalk_dim(i)));
    }
  }
}

SheafMorphism SheafMorphism::identity(std::shared_ptr<const Sheaf> f) {
  std::vector<RationalMatrix> comps;
  for (auto d : f->stalk_dims()) comps.push_back(RationalMatrix::identity(d));
  return SheafMorphism(f, f, std::move(comps));
}

SheafMorphism SheafMorphism::zero(std::shared_ptr<const Sheaf> source, std::shared_ptr<const Sheaf> target) {
  std::vector<RationalMatrix> comps;
  for (std::size_t i = 0; i < source->base().size(); ++i)
    comps.emplace_back(target->stalk_dim(i), source->stalk_dim(i));
  return SheafMorphism(std::move(source), std::move(target), std::move(comps));
}

MorphismVerdict validate_morphism(const SheafMorphism& m) {
  const auto& x = m.source().base();
  for (std::size_t b = 0; b < x.size(); ++b) {
    for (std::size_t a : x.subfaces(b)) {
      if (a == b) continue;
      if (m.component(b) * m.source().restriction(a, b) != m.target().restriction(a, b) * m.component(a)) {
        return {false, std::pair{x.face(a), x.face(b)}};
      }
    }
  }
  return {};
}

RestrictedSheaf restrict_to_subcomplex(const std::shared_ptr<const Sheaf>& f, const SimplicialComplex& y) {
  const auto& x = f->base();
  if (!y.is_subcomplex_of(x)) throw InputError("support is not a subcomplex of the base");
  std::vector<std::size_t> dims(x.size(), 0);
  std::vector<bool> inside(x.size(), false);
  for (const Face& face : y.faces()) {
    const std::size_t i = x.index_of(face);
    inside[i] = true;
    dims[i] = f->stalk_dim(i);
  }
  std::map<Inclusion, RationalMatrix> r;
  for (const auto& [inc, m] : f->restrictions()) {
    const auto [a, b] = inc;
    r.emplace(inc, inside[a] && inside[b] ? m : RationalMatrix(dims[b], dims[a]));
  }
  auto restricted = std::make_shared<const Sheaf>(x, dims, std::move(r));

  std::vector<RationalMatrix> comps;
  for (std::size_t i = 0; i < x.size(); ++i) {
    comps.push_back(inside[i] ? RationalMatrix::identity(dims[i]) : RationalMatrix(0, f->stalk_dim(i)));
  }
  SheafMorphism projection(f, restricted, std::move(comps));
  return {std::move(restricted), std::move(projection)};
}

Sheaf sheaf_on_subcomplex(const Sheaf& f, const SimplicialComplex& z) {
  const auto& x = f.base();
  if (!z.is_subcomplex_of(x)) throw InputError("not a subcomplex of the base");
  std::vector<std::size_t> dims(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) dims[i] = f.stalk_dim(z.face(i));
  std::map<Inclusion, RationalMatrix> r;
  for (std::size_t b = 0; b < z.size(); ++b)
    for (std::size_t a : z.subfaces(b)) r.emplace(Inclusion{a, b}, f.restriction(z.face(a), z.face(b)));
  return Sheaf(z, std::move(dims), std::move(r));
}

}  // namespace cellsheaf
