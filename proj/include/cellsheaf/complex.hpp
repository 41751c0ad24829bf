#pragma once

// Finite abstract simplicial complexes with ordered faces.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cellsheaf {

using VertexId = std::uint32_t;

// A nonempty face stored as a strictly ascending vertex sequence. Unsorted
// or repeating input is rejected rather than reoriented.
class Face {
 public:
  Face() = default;
  explicit Face(std::vector<VertexId> vertices);
  Face(std::initializer_list<VertexId> vertices);

  int dimension() const { return static_cast<int>(vertices_.size()) - 1; }
  std::size_t size() const { return vertices_.size(); }
  std::span<const VertexId> vertices() const { return vertices_; }
  VertexId operator[](std::size_t i) const { return vertices_[i]; }

  // The codimension-1 face obtained by deleting the i-th vertex.
  Face without(std::size_t i) const;
  bool is_subface_of(const Face& other) const;

  std::string to_string() const;

  friend bool operator==(const Face&, const Face&) = default;
  // Canonical order: by dimension, then lexicographically.
  friend std::strong_ordering operator<=>(const Face& a, const Face& b);

 private:
  std::vector<VertexId> vertices_;
};

struct ComplexLimits {
  std::size_t max_faces = 1u << 20;
  int max_dimension = 16;
};

class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  int dimension() const { return static_cast<int>(dim_offsets_.size()) - 2; }
  std::size_t size() const { return faces_.size(); }
  bool empty() const { return faces_.empty(); }

  // All faces in canonical order; a face's position here is its index.
  const std::vector<Face>& faces() const { return faces_; }
  std::span<const Face> faces(int k) const;
  std::size_t count(int k) const { return faces(k).size(); }
  // Index of the first k-face.
  std::size_t offset(int k) const;

  const Face& face(std::size_t index) const { return faces_[index]; }
  std::optional<std::size_t> find(const Face& f) const;
  // Throws InputError if f is not a face.
  std::size_t index_of(const Face& f) const;
  bool contains(const Face& f) const { return index_.contains(f); }

  // Indices of all faces contained in face `index`, itself included.
  std::vector<std::size_t> subfaces(std::size_t index) const;

  bool is_subcomplex_of(const SimplicialComplex& other) const;
  bool is_graph() const { return dimension() <= 1; }

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) { return a.faces_ == b.faces_; }

 private:
  friend SimplicialComplex build_complex(std::span<const Face>, const ComplexLimits&);

  std::vector<Face> faces_;
  std::vector<std::size_t> dim_offsets_;  // dim_offsets_[k] = first k-face; back() = size
  std::map<Face, std::size_t> index_;
};

// Closure of the generators under taking nonempty subsets.
SimplicialComplex build_complex(std::span<const Face> generators, const ComplexLimits& limits = {});
SimplicialComplex build_complex(const std::vector<std::vector<VertexId>>& generators,
                                const ComplexLimits& limits = {});

// [b:a]: (-1)^i when a is b with its i-th vertex deleted, otherwise 0.
int incidence(const Face& b, const Face& a);

// Closed subcomplex generated by the faces of dimension <= k.
SimplicialComplex skeleton(const SimplicialComplex& x, int k);

// Smallest closed subcomplex of x containing the generators.
SimplicialComplex closed_subcomplex(const SimplicialComplex& x, std::span<const Face> generators);

// Number of edges containing vertex v. Only defined on graphs.
std::size_t vertex_degree(const SimplicialComplex& x, const Face& v);

}  // namespace cellsheaf
