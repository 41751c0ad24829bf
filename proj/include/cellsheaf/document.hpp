#pragma once

// Self-contained JSON documents carrying a complex, graphs, sheaves,
// morphisms and sampling problems.

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "cellsheaf/complex.hpp"
#include "cellsheaf/exactlin.hpp"
#include "cellsheaf/sampling.hpp"
#include "cellsheaf/sheaf.hpp"

namespace cellsheaf {

// Unreadable file, malformed JSON, schema violation, dangling reference or
// unknown name.
class DocumentError : public InputError {
 public:
  using InputError::InputError;
};

inline constexpr int kDocumentVersion = 1;

struct FaceMatrix {
  Face face;
  RationalMatrix matrix;
};

struct RestrictionEntry {
  Face from;
  Face to;
  RationalMatrix matrix;
};

struct SheafDefinition {
  enum class Kind { explicit_data, constant, pl };
  Kind kind = Kind::explicit_data;
  std::size_t dim = 0;  // constant only
  std::vector<std::pair<Face, std::size_t>> stalks;
  std::vector<RestrictionEntry> restrictions;
};

struct MorphismDefinition {
  std::string source;
  std::string target;
  std::vector<FaceMatrix> components;  // omitted faces get zero components
};

struct ProblemDefinition {
  std::string sheaf;
  std::vector<Face> support;           // generators of Y
  std::optional<std::string> morphism;  // absent: canonical F -> F^Y
};

struct GraphDefinition {
  std::vector<VertexId> vertices;
  std::vector<std::pair<VertexId, VertexId>> edges;
};

struct Document {
  int version = kDocumentVersion;
  std::vector<Face> complex;  // generators; closure is taken on load
  std::map<std::string, GraphDefinition> graphs;
  std::map<std::string, SheafDefinition> sheaves;
  std::map<std::string, MorphismDefinition> morphisms;
  std::map<std::string, ProblemDefinition> problems;
};

// Parse errors carry "line L, column C". References are checked here.
Document parse_document(std::string_view text);
Document load_document(const std::filesystem::path& path);

nlohmann::json to_json(const Document& doc);
// Canonical form: sorted keys, two-space indent, rationals as strings.
std::string serialize(const Document& doc);

// JSON conversions shared with reports.
nlohmann::json face_to_json(const Face& f);
Face face_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const nlohmann::json& j);
nlohmann::json vector_to_json(std::span<const Rational> v);
Vector vector_from_json(const nlohmann::json& j);
Rational rational_from_json(const nlohmann::json& j);
nlohmann::json assignment_to_json(const Assignment& s);
Assignment assignment_from_json(const nlohmann::json& j);

// {"version": 1, "sample": [{"face": [...], "value": [...]}, ...]}
Assignment load_sample(const std::filesystem::path& path);

// Builds library objects from a document on demand. Construction errors
// (bad shapes, missing restrictions, non-surjective samplings) surface as
// InputError; unknown names as DocumentError.
class Workspace {
 public:
  explicit Workspace(Document doc);

  const Document& document() const { return doc_; }
  const SimplicialComplex& complex() const { return complex_; }

  std::shared_ptr<const Sheaf> sheaf(const std::string& name);
  SheafMorphism morphism(const std::string& name);
  SamplingProblem problem(const std::string& name);
  SimplicialComplex graph(const std::string& name) const;

 private:
  Document doc_;
  SimplicialComplex complex_;
  std::map<std::string, std::shared_ptr<const Sheaf>> sheaves_;
};

}  // namespace cellsheaf
