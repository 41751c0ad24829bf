#pragma once

// Seeded random generators for property and acceptance sweeps.

#include <memory>
#include <random>
#include <vector>

#include "cellsheaf/complex.hpp"
#include "cellsheaf/exactlin.hpp"
#include "cellsheaf/document.hpp"
#include "cellsheaf/sampling.hpp"
#include "cellsheaf/sheaf.hpp"

namespace corpus {

using Rng = std::mt19937_64;

cellsheaf::RationalMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int spread = 4);

// Random closed complex of dimension <= max_dim on up to max_vertices vertices.
cellsheaf::SimplicialComplex random_complex(Rng& rng, std::size_t max_vertices, int max_dim);

// Random simple graph; connected when requested (a random spanning tree plus
// extra edges). Isolated vertices may occur otherwise.
cellsheaf::SimplicialComplex random_graph(Rng& rng, std::size_t min_vertices, std::size_t max_vertices,
                                          bool connected);

// Valid sheaf with stalks of dimension <= 3: each stalk is V_a / U_a for
// subspaces U_a <= V_a of Q^3 that grow along face inclusions, and
// restrictions are induced by the inclusions V_a <= V_b.
cellsheaf::Sheaf random_sheaf(Rng& rng, const cellsheaf::SimplicialComplex& x);

// Random subcomplex of x made of some vertices and, on graphs, some of the
// edges between chosen vertices.
cellsheaf::SimplicialComplex random_support(Rng& rng, const cellsheaf::SimplicialComplex& x);

// Random stalkwise-surjective sampling F -> F/W supported on y: W_a grows
// along inclusions inside y and is everything off y.
cellsheaf::SamplingProblem random_quotient_sampling(Rng& rng, const std::shared_ptr<const cellsheaf::Sheaf>& f,
                                                    const cellsheaf::SimplicialComplex& y);

enum class DataSheafKind { random, pl, constant };

// Random sampling problem on a random graph, mixing random sheaves, PL
// sheaves and constant sheaves.
cellsheaf::SamplingProblem random_graph_problem(Rng& rng, DataSheafKind kind);

// Self-contained document holding p as sheaves "F" and "S", morphism "s"
// and problem "p".
cellsheaf::Document problem_document(const cellsheaf::SamplingProblem& p);

// Random element of H^0(F) as a full assignment.
cellsheaf::Assignment random_global_section(Rng& rng, const cellsheaf::Sheaf& f);

}  // namespace corpus
