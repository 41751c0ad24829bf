#pragma once

// Cellular sheaves: stalks on faces, restriction maps on face inclusions.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cellsheaf/complex.hpp"
#include "cellsheaf/exactlin.hpp"

namespace cellsheaf {

// Face indices (into the base complex) of an inclusion lower -> upper.
using Inclusion = std::pair<std::size_t, std::size_t>;

// Restrictions are stored for every inclusion of the face category, identity
// inclusions included. Shapes and the composition law are not enforced by the
// constructor; validate_sheaf() reports on them.
class Sheaf {
 public:
  Sheaf() = default;
  // Throws InputError if a key is not an inclusion of the base or an
  // inclusion has no restriction. Missing identity restrictions are filled in.
  Sheaf(SimplicialComplex base, std::vector<std::size_t> stalk_dims, std::map<Inclusion, RationalMatrix> restrictions);

  const SimplicialComplex& base() const { return base_; }
  std::size_t stalk_dim(std::size_t face) const { return stalk_dims_[face]; }
  std::size_t stalk_dim(const Face& f) const { return stalk_dims_[base_.index_of(f)]; }
  const std::vector<std::size_t>& stalk_dims() const { return stalk_dims_; }

  // F(lower -> upper). Throws InputError if lower is not a face of upper.
  const RationalMatrix& restriction(std::size_t lower, std::size_t upper) const;
  const RationalMatrix& restriction(const Face& lower, const Face& upper) const;
  const std::map<Inclusion, RationalMatrix>& restrictions() const { return restrictions_; }

 private:
  SimplicialComplex base_;
  std::vector<std::size_t> stalk_dims_;
  std::map<Inclusion, RationalMatrix> restrictions_;
};

// Assembles a Sheaf from stalk dimensions and codimension-1 restrictions.
// Restrictions for longer inclusions that are not given explicitly are
// composed through the first intermediate face in canonical order; explicit
// ones are kept as given (validate_sheaf checks they agree). Unset stalks are
// zero-dimensional, and restrictions touching a zero stalk default to empty.
class SheafBuilder {
 public:
  explicit SheafBuilder(SimplicialComplex base);

  SheafBuilder& stalk(const Face& f, std::size_t dim);
  SheafBuilder& restriction(const Face& lower, const Face& upper, RationalMatrix m);

  Sheaf build() const;

 private:
  SimplicialComplex base_;
  std::vector<std::size_t> dims_;
  std::map<Inclusion, RationalMatrix> given_;
};

// Sheaf with stalk Q^n on every face and identity restrictions.
Sheaf constant_sheaf(const SimplicialComplex& base, std::size_t n);
Sheaf zero_sheaf(const SimplicialComplex& base);

struct SheafVerdict {
  bool valid = true;
  std::string reason;
  std::vector<Face> witness;  // offending inclusion (2 faces) or chain (3 faces)
};

SheafVerdict validate_sheaf(const Sheaf& f);

// Values on a set of faces. A section is an assignment that passes is_section.
struct Assignment {
  std::map<Face, Vector> values;
};

// True iff F(a -> b) s(a) = s(b) for every inclusion inside the support.
// Throws InputError for faces outside the base or values of the wrong length.
bool is_section(const Sheaf& f, const Assignment& s);

// Natural transformation between two sheaves on the same base.
class SheafMorphism {
 public:
  // Throws InputError on base mismatch or a component of the wrong shape.
  SheafMorphism(std::shared_ptr<const Sheaf> source, std::shared_ptr<const Sheaf> target,
                std::vector<RationalMatrix> components);

  static SheafMorphism identity(std::shared_ptr<const Sheaf> f);
  static SheafMorphism zero(std::shared_ptr<const Sheaf> source, std::shared_ptr<const Sheaf> target);

  const Sheaf& source() const { return *source_; }
  const Sheaf& target() const { return *target_; }
  const std::shared_ptr<const Sheaf>& source_ptr() const { return source_; }
  const std::shared_ptr<const Sheaf>& target_ptr() const { return target_; }
  const RationalMatrix& component(std::size_t face) const { return components_[face]; }
  const std::vector<RationalMatrix>& components() const { return components_; }

 private:
  std::shared_ptr<const Sheaf> source_;
  std::shared_ptr<const Sheaf> target_;
  std::vector<RationalMatrix> components_;
};

struct MorphismVerdict {
  bool valid = true;
  std::optional<std::pair<Face, Face>> failing_inclusion;
};

MorphismVerdict validate_morphism(const SheafMorphism& f);

// F^Y together with the canonical surjection F -> F^Y.
struct RestrictedSheaf {
  std::shared_ptr<const Sheaf> sheaf;
  SheafMorphism projection;
};

// Stalks of F on Y and zero elsewhere. Throws InputError unless Y is a
// subcomplex of F's base.
RestrictedSheaf restrict_to_subcomplex(const std::shared_ptr<const Sheaf>& f, const SimplicialComplex& y);

// The same data as F, re-based on a subcomplex Z (stalks off Z are dropped).
Sheaf sheaf_on_subcomplex(const Sheaf& f, const SimplicialComplex& z);

}  // namespace cellsheaf
