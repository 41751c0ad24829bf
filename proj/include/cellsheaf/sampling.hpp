#pragma once

// Samplings of sheaves, ambiguity sheaves, and the reconstruction criteria
// built on their cohomology.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cellsheaf/cohomology.hpp"
#include "cellsheaf/complex.hpp"
#include "cellsheaf/sheaf.hpp"

namespace cellsheaf {

// Stalks of the given dimensions on faces of Y (missing faces get 0), zero
// stalks elsewhere. Restrictions are identities on identity inclusions and
// zero maps otherwise.
Sheaf make_sampling_sheaf(const SimplicialComplex& x, const SimplicialComplex& y,
                          const std::map<Face, std::size_t>& dims);
// Every face of Y gets a stalk of dimension v_dim.
Sheaf make_sampling_sheaf(const SimplicialComplex& x, const SimplicialComplex& y, std::size_t v_dim);

// Thrown when a sampling component is not onto its target stalk.
class NotSurjectiveError : public InputError {
 public:
  NotSurjectiveError(Face face, const std::string& what) : InputError(what), face_(std::move(face)) {}
  const Face& face() const { return face_; }

 private:
  Face face_;
};

// A stalkwise-surjective morphism s: F -> S with S vanishing off the support Y.
class SamplingProblem {
 public:
  // Validates naturality, the support condition and surjectivity on every
  // stalk. Throws InputError (NotSurjectiveError for surjectivity) on failure.
  SamplingProblem(SimplicialComplex support, SheafMorphism sampling);

  // The canonical surjection F -> F^Y.
  static SamplingProblem restriction(const std::shared_ptr<const Sheaf>& f, const SimplicialComplex& y);

  const SimplicialComplex& support() const { return support_; }
  const SheafMorphism& sampling() const { return sampling_; }
  const Sheaf& data() const { return sampling_.source(); }
  const Sheaf& samples() const { return sampling_.target(); }

 private:
  SimplicialComplex support_;
  SheafMorphism sampling_;
};

// Kernel subsheaf of a morphism, with its inclusion into the source. The
// stalk basis on each face is kernel_basis of the component there.
struct AmbiguitySheaf {
  std::shared_ptr<const Sheaf> sheaf;
  SheafMorphism inclusion;
};

// Throws ConsistencyError if a restriction fails to preserve kernels.
AmbiguitySheaf kernel_subsheaf(const SheafMorphism& m);
AmbiguitySheaf ambiguity_sheaf(const SamplingProblem& p);

// F_Y: sections of F that vanish on Y.
AmbiguitySheaf subsheaf_vanishing_on(const std::shared_ptr<const Sheaf>& f, const SimplicialComplex& y);

enum class SamplingVerdict { perfect, ambiguous, redundant, ambiguous_redundant };

std::string to_string(SamplingVerdict v);

struct RedundancyLedger {
  std::size_t c0 = 0;        // dim C^0(A)
  std::size_t c1 = 0;        // dim C^1(A)
  std::size_t rank_d0 = 0;   // rank d^0 on A
  std::size_t rank_d1 = 0;   // rank d^1 on A
};

struct SamplingCertificate {
  std::size_t h0_ambiguity = 0;
  std::size_t h1_ambiguity = 0;
  SamplingVerdict verdict = SamplingVerdict::perfect;
  // A nonzero global section of F that samples to zero (ambiguous only).
  std::optional<Assignment> ambiguity_witness;
  RedundancyLedger ledger;
  // H^0(F) -> H^0(S) in the h0_basis() bases, and whether it is invertible.
  RationalMatrix induced_h0_map;
  bool induced_invertible = false;
  std::size_t h0_data = 0;
  std::size_t h0_samples = 0;
};

SamplingCertificate nyquist_check(const SamplingProblem& p);

struct OversamplingResult {
  int degree = 0;
  CohomologyReport report;  // of F_{X^k} on X^{k+1}
  bool holds = false;       // dim H^k == 0
};

OversamplingResult oversampling_check(const Sheaf& f, int k);

struct ObstructionResult {
  std::size_t h0_vanishing = 0;  // dim H^0(F_Y)
  bool obstructed = false;
  // Coordinates (in h0_basis(F)) of a nonzero element of the kernel of the
  // induced H^0 map, and the section it represents.
  std::optional<Vector> kernel_witness;
  std::optional<Assignment> witness_section;
  // The witness was checked: nonzero, and mapped to zero by exact product.
  bool verified = false;
};

ObstructionResult obstruction_check(const SamplingProblem& p);

struct Reconstruction {
  enum class Kind { unique, family, inconsistent };
  Kind kind = Kind::unique;
  Assignment section;                  // the unique or a particular section
  std::vector<Assignment> directions;  // basis of the ambiguity (family only)
  Vector certificate;                  // left null vector (inconsistent only)
};

std::string to_string(Reconstruction::Kind k);

// Solves for global sections of F whose samples equal `sample`. Throws
// InputError if the sample is not a section of S or omits a nonzero stalk.
Reconstruction reconstruct(const SamplingProblem& p, const Assignment& sample);

// Constant sheaf of polynomials of degree <= `degree` in coefficient
// coordinates, sampled by evaluation at the vertex identifiers in y.
SamplingProblem evaluation_sampling(const SimplicialComplex& x, std::size_t degree, const std::vector<VertexId>& y);

// Applies the sampling to a global section of F.
Assignment sample_section(const SamplingProblem& p, const Assignment& section);

}  // namespace cellsheaf
