#include "cellsheaf/complex.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "cellsheaf/errors.hpp"

namespace cellsheaf {

Face::Face(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw InputError("faces must contain at least one vertex");
  for (std::size_t i = 1; i < vertices_.size(); ++i) {
    if (vertices_[i] == vertices_[i - 1] ||
        std::find(vertices_.begin(), vertices_.begin() + static_cast<long>(i), vertices_[i]) !=
            vertices_.begin() + static_cast<long>(i)) {
      throw InputError("duplicate vertex in face " + to_string());
    }
  }
  if (!std::is_sorted(vertices_.begin(), vertices_.end())) {
    throw InputError("face vertices must be listed in ascending order: " + to_string());
  }
}

Face::Face(std::initializer_list<VertexId> vertices) : Face(std::vector<VertexId>(vertices)) {}

Face Face::without(std::size_t i) const {
  Face f;
  f.vertices_ = vertices_;
  f.vertices_.erase(f.vertices_.begin() + static_cast<long>(i));
  return f;
}

bool Face::is_subface_of(const Face& other) const {
  return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(), vertices_.end());
}

std::string Face::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < vertices_.size(); ++i) os << (i ? "," : "") << vertices_[i];
  os << ')';
  return os.str();
}

std::strong_ordering operator<=>(const Face& a, const Face& b) {
  if (auto c = a.vertices_.size() <=> b.vertices_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.vertices_.begin(), a.vertices_.end(), b.vertices_.begin(),
                                                b.vertices_.end());
}

std::span<const Face> SimplicialComplex::faces(int k) const {
  if (k < 0 || k > dimension()) return {};
  return std::span<const Face>(faces_).subspan(dim_offsets_[k], dim_offsets_[k + 1] - dim_offsets_[k]);
}

std::size_t SimplicialComplex::offset(int k) const {
  if (k < 0) return 0;
  if (k > dimension()) return faces_.size();
  return dim_offsets_[k];
}

std::optional<std::size_t> SimplicialComplex::find(const Face& f) const {
  auto it = index_.find(f);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t SimplicialComplex::index_of(const Face& f) const {
  auto found = find(f);
  if (!found) throw InputError("face " + f.to_string() + " is not in the complex");
  return *found;
}

std::vector<std::size_t> SimplicialComplex::subfaces(std::size_t index) const {
  const Face& b = faces_[index];
  const std::size_t n = b.size();
  std::vector<std::size_t> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<VertexId> vs;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::uint64_t{1} << i)) vs.push_back(b[i]);
    out.push_back(index_.at(Face(std::move(vs))));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& other) const {
  return std::all_of(faces_.begin(), faces_.end(), [&](const Face& f) { return other.contains(f); });
}

SimplicialComplex build_complex(std::span<const Face> generators, const ComplexLimits& limits) {
  std::set<Face> closure;
  for (const Face& g : generators) {
    if (g.dimension() > limits.max_dimension) {
      throw InputError("face " + g.to_string() + " exceeds the configured maximum dimension");
    }
    const std::size_t n = g.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      std::vector<VertexId> vs;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (std::uint64_t{1} << i)) vs.push_back(g[i]);
      closure.insert(Face(std::move(vs)));
      if (closure.size() > limits.max_faces) throw InputError("complex exceeds the configured face limit");
    }
  }

  SimplicialComplex x;
  x.faces_.assign(closure.begin(), closure.end());
  int top = x.faces_.empty() ? -1 : x.faces_.back().dimension();
  x.dim_offsets_.assign(static_cast<std::size_t>(top + 2), x.faces_.size());
  for (std::size_t i = x.faces_.size(); i-- > 0;) x.dim_offsets_[x.faces_[i].dimension()] = i;
  // Dimensions with no faces cannot occur below the top one in a closed complex.
  for (std::size_t i = 0; i < x.faces_.size(); ++i) x.index_.emplace(x.faces_[i], i);
  if (x.faces_.empty()) x.dim_offsets_ = {0};
  return x;
}

SimplicialComplex build_complex(const std::vector<std::vector<VertexId>>& generators, const ComplexLimits& limits) {
  std::vector<Face> faces;
  faces.reserve(generators.size());
  for (const auto& g : generators) faces.emplace_back(g);
  return build_complex(faces, limits);
}

int incidence(const Face& b, const Face& a) {
  if (a.size() + 1 != b.size()) return 0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b.without(i) == a) return i % 2 == 0 ? 1 : -1;
  }
  return 0;
}

SimplicialComplex skeleton(const SimplicialComplex& x, int k) {
  if (k < 0) throw InputError("skeleton degree must be non-negative");
  auto low = std::span<const Face>(x.faces()).first(x.offset(k + 1));
  return build_complex(low);
}

SimplicialComplex closed_subcomplex(const SimplicialComplex& x, std::span<const Face> generators) {
  for (const Face& g : generators) {
    if (!x.contains(g)) throw InputError("generator " + g.to_string() + " is not a face of the complex");
  }
  return build_complex(generators);
}

std::size_t vertex_degree(const SimplicialComplex& x, const Face& v) {
  if (!x.is_graph()) throw InputError("vertex degree is only defined on graphs");
  if (v.dimension() != 0 || !x.contains(v)) throw InputError(v.to_string() + " is not a vertex of the graph");
  const auto edges = x.faces(1);
  return static_cast<std::size_t>(
      std::count_if(edges.begin(), edges.end(), [&](const Face& e) { return e[0] == v[0] || e[1] == v[0]; }));
}

}  // namespace cellsheaf
