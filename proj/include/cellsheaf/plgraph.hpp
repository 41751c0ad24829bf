#pragma once

// The sheaf of piecewise linear functions on a graph and the sampling
// criteria it satisfies.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cellsheaf/complex.hpp"
#include "cellsheaf/sampling.hpp"
#include "cellsheaf/sheaf.hpp"

namespace cellsheaf {

// Graph from a vertex list and an edge list; each edge is an unordered pair
// and is stored ascending.
SimplicialComplex make_graph(const std::vector<VertexId>& vertices,
                             const std::vector<std::pair<VertexId, VertexId>>& edges);

// PL sheaf with its coordinate layout. Vertex stalks are (y, m_e1, ..., m_ek)
// with edges ordered by the opposite endpoint; edge stalks are (y, m) where y
// is the value at the midpoint.
struct PLSheaf {
  std::shared_ptr<const Sheaf> sheaf;
  // incident_edges[v] lists edge face indices at vertex face v, in coordinate order.
  std::vector<std::vector<std::size_t>> incident_edges;

  // Coordinate of the slope along `edge` in the stalk at `vertex` (face indices).
  std::size_t slope_coordinate(std::size_t vertex, std::size_t edge) const;
};

// Throws InputError if g has faces of dimension 2 or more.
PLSheaf build_pl_sheaf(const SimplicialComplex& g);

// Number of edges on a shortest path; nullopt when no path exists.
using Distance = std::optional<std::size_t>;

std::string to_string(const Distance& d);

Distance edge_distance(const SimplicialComplex& g, VertexId v, VertexId w);

// All-pairs edge distances, indexed by vertex position in g.faces(0).
class EdgeDistanceTable {
 public:
  // One breadth-first search per source vertex, run in parallel.
  explicit EdgeDistanceTable(const SimplicialComplex& g);

  std::size_t size() const { return n_; }
  Distance at(std::size_t i, std::size_t j) const { return table_[i * n_ + j]; }
  // max over vertices of the distance to the nearest member of `ys`
  // (vertex positions). nullopt means unbounded.
  Distance max_distance_to(const std::vector<std::size_t>& ys) const;

 private:
  std::size_t n_ = 0;
  std::vector<Distance> table_;
};

namespace reference {
// Single-threaded all-pairs table, one BFS at a time.
std::vector<Distance> edge_distance_table(const SimplicialComplex& g);
}

// max over vertices x of min over y in Y of ed(x, y). Unbounded when Y is
// empty on a nonempty graph, or when some component misses Y.
Distance med(const SimplicialComplex& g, const std::vector<VertexId>& y);

// Closed subcomplex made of the given vertices. Throws InputError for an
// unknown vertex.
SimplicialComplex vertex_support(const SimplicialComplex& g, const std::vector<VertexId>& y);

struct UnambiguityReport {
  Distance med;
  std::size_t h0_vanishing = 0;  // dim H^0(PL_Y)
  bool med_at_most_one = false;
  bool agree = false;            // (med <= 1) == (dim H^0(PL_Y) == 0)
};

UnambiguityReport unambiguous_check(const SimplicialComplex& g, const std::vector<VertexId>& y);

struct RedundancyReport {
  std::size_t h0_ambiguity = 0;
  std::size_t h1_ambiguity = 0;
  bool applicable = false;       // formula only claimed when H^0(A) = 0
  long long formula = 0;         // 2|X^1| - sum over y not in Y of (deg y + 1)
  bool agree = false;            // applicable and formula == dim H^1(A)
  bool balance_condition = false;  // |X^0 \ Y| + sum deg = 2|X^1|
};

// Analysis of the full-stalk sampling PL -> PL^Y.
RedundancyReport redundancy_dimension(const SimplicialComplex& g, const std::vector<VertexId>& y);

struct LemmaCase {
  std::string name;
  SimplicialComplex graph;
  std::vector<VertexId> sampled;
  std::size_t expected_h0 = 0;
  std::size_t computed_h0 = 0;
  bool passed() const { return expected_h0 == computed_h0; }
};

// The three configurations of the PL vanishing lemma: a vertex surrounded by
// samples, two adjacent unsampled vertices each anchored to samples, and an
// unsampled vertex two edges away from every sample.
std::vector<LemmaCase> lemma_case_suite();

}  // namespace cellsheaf
