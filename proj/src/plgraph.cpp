#include "cellsheaf/plgraph.hpp"

#include <algorithm>
#include <deque>

#include "cellsheaf/cohomology.hpp"

namespace cellsheaf {

SimplicialComplex make_graph(const std::vector<VertexId>& vertices,
                             const std::vector<std::pair<VertexId, VertexId>>& edges) {
  std::vector<Face> gens;
  for (VertexId v : vertices) gens.push_back(Face{v});
  for (auto [u, w] : edges) {
    if (u == w) throw InputError("self-loop at vertex " + std::to_string(u));
    gens.push_back(Face{std::min(u, w), std::max(u, w)});
  }
  return build_complex(gens);
}

std::size_t PLSheaf::slope_coordinate(std::size_t vertex, std::size_t edge) const {
  const auto& edges = incident_edges[vertex];
  auto it = std::find(edges.begin(), edges.end(), edge);
  if (it == edges.end()) throw InputError("edge is not incident to the vertex");
  return 1 + static_cast<std::size_t>(it - edges.begin());
}

PLSheaf build_pl_sheaf(const SimplicialComplex& g) {
  if (!g.is_graph()) throw InputError("the PL sheaf is only defined on graphs");
  PLSheaf pl;
  const std::size_t nv = g.count(0);
  pl.incident_edges.resize(nv);
  // Edges are in lexicographic order, so for each vertex the lower-neighbour
  // edges (v as second endpoint) need sorting in with the upper ones.
  for (std::size_t e = g.offset(1); e < g.size(); ++e) {
    const Face& edge = g.face(e);
    pl.incident_edges[g.index_of(Face{edge[0]})].push_back(e);
    pl.incident_edges[g.index_of(Face{edge[1]})].push_back(e);
  }
  for (std::size_t v = 0; v < nv; ++v) {
    const VertexId id = g.face(v)[0];
    auto other = [&](std::size_t e) { return g.face(e)[0] == id ? g.face(e)[1] : g.face(e)[0]; };
    std::sort(pl.incident_edges[v].begin(), pl.incident_edges[v].end(),
              [&](std::size_t a, std::size_t b) { return other(a) < other(b); });
  }

  std::vector<std::size_t> dims(g.size(), 2);
  for (std::size_t v = 0; v < nv; ++v) dims[v] = 1 + pl.incident_edges[v].size();

  std::map<Inclusion, RationalMatrix> r;
  for (std::size_t i = 0; i < g.size(); ++i) r.emplace(Inclusion{i, i}, RationalMatrix::identity(dims[i]));
  const Rational half(1, 2);
  for (std::size_t v = 0; v < nv; ++v) {
    for (std::size_t e : pl.incident_edges[v]) {
      const std::size_t m = pl.slope_coordinate(v, e);
      RationalMatrix map(2, dims[v]);
      map(0, 0) = 1;
      map(0, m) = incidence(g.face(e), g.face(v)) * half;
      map(1, m) = 1;
      r.emplace(Inclusion{v, e}, std::move(map));
    }
  }
  pl.sheaf = std::make_shared<const Sheaf>(g, std::move(dims), std::move(r));
  return pl;
}

std::string to_string(const Distance& d) { return d ? std::to_string(*d) : std::string("inf"); }

namespace {

std::vector<std::vector<std::size_t>> adjacency(const SimplicialComplex& g) {
  std::vector<std::vector<std::size_t>> adj(g.count(0));
  for (const Face& e : g.faces(1)) {
    const std::size_t a = g.index_of(Face{e[0]});
    const std::size_t b = g.index_of(Face{e[1]});
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

// Multi-source BFS; returns distance from the nearest source per vertex.
std::vector<Distance> bfs(const std::vector<std::vector<std::size_t>>& adj, const std::vector<std::size_t>& sources) {
  std::vector<Distance> dist(adj.size());
  std::deque<std::size_t> queue;
  for (std::size_t s : sources) {
    if (!dist[s]) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t w : adj[u]) {
      if (!dist[w]) {
        dist[w] = *dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::size_t vertex_position(const SimplicialComplex& g, VertexId v) {
  auto i = g.find(Face{v});
  if (!i) throw InputError("unknown vertex " + std::to_string(v));
  return *i;
}

}  // namespace

Distance edge_distance(const SimplicialComplex& g, VertexId v, VertexId w) {
  if (!g.is_graph()) throw InputError("edge distance is only defined on graphs");
  const std::size_t a = vertex_position(g, v);
  const std::size_t b = vertex_position(g, w);
  return bfs(adjacency(g), {a})[b];
}

EdgeDistanceTable::EdgeDistanceTable(const SimplicialComplex& g) : n_(g.count(0)), table_(n_ * n_) {
  if (!g.is_graph()) throw InputError("edge distance is only defined on graphs");
  const auto adj = adjacency(g);
  const long n = static_cast<long>(n_);
#pragma omp parallel for schedule(dynamic)
  for (long s = 0; s < n; ++s) {
    const auto row = bfs(adj, {static_cast<std::size_t>(s)});
    std::copy(row.begin(), row.end(), table_.begin() + s * n);
  }
}

Distance EdgeDistanceTable::max_distance_to(const std::vector<std::size_t>& ys) const {
  if (n_ == 0) return 0;
  std::size_t worst = 0;
  for (std::size_t x = 0; x < n_; ++x) {
    Distance best;
    for (std::size_t y : ys) {
      const Distance d = at(x, y);
      if (d && (!best || *d < *best)) best = d;
    }
    if (!best) return std::nullopt;
    worst = std::max(worst, *best);
  }
  return worst;
}

namespace reference {
std::vector<Distance> edge_distance_table(const SimplicialComplex& g) {
  const auto adj = adjacency(g);
  const std::size_t n = adj.size();
  std::vector<Distance> out(n * n);
  for (std::size_t s = 0; s < n; ++s) {
    const auto row = bfs(adj, {s});
    std::copy(row.begin(), row.end(), out.begin() + static_cast<long>(s * n));
  }
  return out;
}
}  // namespace reference

Distance med(const SimplicialComplex& g, const std::vector<VertexId>& y) {
  if (!g.is_graph()) throw InputError("med is only defined on graphs");
  std::vector<std::size_t> sources;
  for (VertexId v : y) sources.push_back(vertex_position(g, v));
  const auto dist = bfs(adjacency(g), sources);
  std::size_t worst = 0;
  for (const Distance& d : dist) {
    if (!d) return std::nullopt;
    worst = std::max(worst, *d);
  }
  return worst;
}

SimplicialComplex vertex_support(const SimplicialComplex& g, const std::vector<VertexId>& y) {
  std::vector<Face> gens;
  for (VertexId v : y) {
    vertex_position(g, v);
    gens.push_back(Face{v});
  }
  return build_complex(gens);
}

UnambiguityReport unambiguous_check(const SimplicialComplex& g, const std::vector<VertexId>& y) {
  UnambiguityReport out;
  out.med = med(g, y);
  const PLSheaf pl = build_pl_sheaf(g);
  const AmbiguitySheaf vanishing = subsheaf_vanishing_on(pl.sheaf, vertex_support(g, y));
  out.h0_vanishing = h0_basis(*vanishing.sheaf).cols();
  out.med_at_most_one = out.med && *out.med <= 1;
  out.agree = out.med_at_most_one == (out.h0_vanishing == 0);
  return out;
}

RedundancyReport redundancy_dimension(const SimplicialComplex& g, const std::vector<VertexId>& y) {
  RedundancyReport out;
  const PLSheaf pl = build_pl_sheaf(g);
  const SimplicialComplex support = vertex_support(g, y);
  const SamplingCertificate cert = nyquist_check(SamplingProblem::restriction(pl.sheaf, support));
  out.h0_ambiguity = cert.h0_ambiguity;
  out.h1_ambiguity = cert.h1_ambiguity;

  const long long edges = static_cast<long long>(g.count(1));
  long long excluded = 0;
  long long excluded_degree = 0;
  for (const Face& v : g.faces(0)) {
    if (support.contains(v)) continue;
    excluded += 1;
    excluded_degree += static_cast<long long>(vertex_degree(g, v));
  }
  out.formula = 2 * edges - (excluded_degree + excluded);
  out.balance_condition = excluded + excluded_degree == 2 * edges;
  out.applicable = out.h0_ambiguity == 0;
  out.agree = out.applicable && out.formula == static_cast<long long>(out.h1_ambiguity);
  return out;
}

std::vector<LemmaCase> lemma_case_suite() {
  std::vector<LemmaCase> cases;
  auto h0 = [](const SimplicialComplex& g, const std::vector<VertexId>& y) {
    const PLSheaf pl = build_pl_sheaf(g);
    return h0_basis(*subsheaf_vanishing_on(pl.sheaf, vertex_support(g, y)).sheaf).cols();
  };
  auto add = [&](std::string name, SimplicialComplex g, std::vector<VertexId> y, std::size_t expected) {
    LemmaCase c{std::move(name), std::move(g), std::move(y), expected, 0};
    c.computed_h0 = h0(c.graph, c.sampled);
    cases.push_back(std::move(c));
  };

  // Star: centre 0 unsampled, leaves sampled.
  add("G1", make_graph({0, 1, 2, 3}, {{0, 1}, {0, 2}, {0, 3}}), {1, 2, 3}, 0);
  // Unsampled v=1, w=2 joined by an edge; each also touches two samples.
  add("G2", make_graph({0, 1, 2, 3, 4, 5}, {{0, 1}, {4, 1}, {1, 2}, {2, 3}, {2, 5}}), {0, 3, 4, 5}, 0);
  // Path whose middle vertex 2 sits two edges from both samples.
  add("G3", make_graph({0, 1, 2, 3, 4}, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}), {0, 4}, 1);
  return cases;
}

}  // namespace cellsheaf
