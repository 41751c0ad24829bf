#include "cellsheaf/document.hpp"

#include <fstream>
#include <sstream>

#include "cellsheaf/plgraph.hpp"

namespace cellsheaf {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw DocumentError(where + ": " + what);
}

const json& member(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing \"") + key + "\"");
  return *it;
}

const json& array_member(const json& j, const char* key, const std::string& where) {
  const json& v = member(j, key, where);
  if (!v.is_array()) fail(where, std::string("\"") + key + "\" must be an array");
  return v;
}

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

template <typename Fn>
auto at(const std::string& where, Fn&& fn) {
  try {
    return fn();
  } catch (const DocumentError&) {
    throw;
  } catch (const std::exception& e) {
    fail(where, e.what());
  }
}

VertexId vertex_from_json(const json& j) {
  if (!j.is_number_unsigned()) throw InputError("vertex identifiers must be non-negative integers");
  return j.get<VertexId>();
}

}  // namespace

json face_to_json(const Face& f) {
  json a = json::array();
  for (VertexId v : f.vertices()) a.push_back(v);
  return a;
}

Face face_from_json(const json& j) {
  if (!j.is_array()) throw InputError("a face must be an array of vertex identifiers");
  std::vector<VertexId> vs;
  for (const auto& v : j) vs.push_back(vertex_from_json(v));
  return Face(std::move(vs));
}

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return parse_rational(j.dump());
  throw InputError("rationals must be strings \"p/q\" or integers, got " + j.dump());
}

json vector_to_json(std::span<const Rational> v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(to_string(q));
  return a;
}

Vector vector_from_json(const json& j) {
  if (!j.is_array()) throw InputError("a vector must be an array of rationals");
  Vector v;
  for (const auto& e : j) v.push_back(rational_from_json(e));
  return v;
}

json matrix_to_json(const RationalMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(vector_to_json(m.row(r)));
  return rows;
}

RationalMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw InputError("a matrix must be an array of rows");
  if (j.empty()) return {};
  std::vector<Rational> entries;
  const std::size_t cols = j.front().is_array() ? j.front().size() : 0;
  for (const auto& row : j) {
    Vector v = vector_from_json(row);
    if (v.size() != cols) throw InputError("ragged matrix rows");
    entries.insert(entries.end(), v.begin(), v.end());
  }
  return RationalMatrix(j.size(), cols, std::move(entries));
}

json assignment_to_json(const Assignment& s) {
  json a = json::array();
  for (const auto& [face, value] : s.values) a.push_back({{"face", face_to_json(face)}, {"value", vector_to_json(value)}});
  return a;
}

Assignment assignment_from_json(const json& j) {
  if (!j.is_array()) throw InputError("an assignment must be an array of {face, value} entries");
  Assignment s;
  for (const auto& e : j) {
    Face f = face_from_json(member(e, "face", "assignment entry"));
    if (s.values.contains(f)) throw InputError("face " + f.to_string() + " assigned twice");
    s.values[f] = vector_from_json(member(e, "value", "assignment entry"));
  }
  return s;
}

Document parse_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DocumentError("parse error at " + line_column(text, e.byte) + ": " + e.what());
  }
  if (root.is_object() && root.empty()) return Document{};
  if (!root.is_object()) fail("document", "top level must be an object");

  Document doc;
  const json& version = member(root, "version", "document");
  if (!version.is_number_integer() || version.get<int>() != kDocumentVersion) {
    fail("document", "unsupported version " + version.dump());
  }

  if (root.contains("complex")) {
    for (const auto& f : array_member(root, "complex", "document"))
      doc.complex.push_back(at("complex", [&] { return face_from_json(f); }));
  }

  if (root.contains("graphs")) {
    for (const auto& [name, g] : root["graphs"].items()) {
      const std::string where = "graph \"" + name + "\"";
      GraphDefinition def;
      for (const auto& v : array_member(g, "vertices", where)) def.vertices.push_back(at(where, [&] { return vertex_from_json(v); }));
      for (const auto& e : array_member(g, "edges", where)) {
        if (!e.is_array() || e.size() != 2) fail(where, "edges must be pairs of vertices");
        def.edges.emplace_back(at(where, [&] { return vertex_from_json(e[0]); }),
                               at(where, [&] { return vertex_from_json(e[1]); }));
      }
      doc.graphs.emplace(name, std::move(def));
    }
  }

  if (root.contains("sheaves")) {
    for (const auto& [name, s] : root["sheaves"].items()) {
      const std::string where = "sheaf \"" + name + "\"";
      SheafDefinition def;
      const std::string kind = at(where, [&] { return member(s, "kind", where).get<std::string>(); });
      if (kind == "constant") {
        def.kind = SheafDefinition::Kind::constant;
        def.dim = at(where, [&] { return member(s, "dim", where).get<std::size_t>(); });
      } else if (kind == "pl") {
        def.kind = SheafDefinition::Kind::pl;
      } else if (kind == "explicit") {
        def.kind = SheafDefinition::Kind::explicit_data;
        for (const auto& e : array_member(s, "stalks", where)) {
          def.stalks.emplace_back(at(where, [&] { return face_from_json(member(e, "face", where)); }),
                                  at(where, [&] { return member(e, "dim", where).get<std::size_t>(); }));
        }
        if (s.contains("restrictions")) {
          for (const auto& e : array_member(s, "restrictions", where)) {
            def.restrictions.push_back(at(where, [&] {
              return RestrictionEntry{face_from_json(member(e, "from", where)), face_from_json(member(e, "to", where)),
                                      matrix_from_json(member(e, "matrix", where))};
            }));
          }
        }
      } else {
        fail(where, "unknown kind \"" + kind + "\"");
      }
      doc.sheaves.emplace(name, std::move(def));
    }
  }

  if (root.contains("morphisms")) {
    for (const auto& [name, m] : root["morphisms"].items()) {
      const std::string where = "morphism \"" + name + "\"";
      MorphismDefinition def;
      def.source = at(where, [&] { return member(m, "source", where).get<std::string>(); });
      def.target = at(where, [&] { return member(m, "target", where).get<std::string>(); });
      if (m.contains("components")) {
        for (const auto& e : array_member(m, "components", where)) {
          def.components.push_back(at(where, [&] {
            return FaceMatrix{face_from_json(member(e, "face", where)), matrix_from_json(member(e, "matrix", where))};
          }));
        }
      }
      for (const std::string& ref : {def.source, def.target}) {
        if (!doc.sheaves.contains(ref)) fail(where, "refers to unknown sheaf \"" + ref + "\"");
      }
      doc.morphisms.emplace(name, std::move(def));
    }
  }

  if (root.contains("problems")) {
    for (const auto& [name, p] : root["problems"].items()) {
      const std::string where = "problem \"" + name + "\"";
      ProblemDefinition def;
      def.sheaf = at(where, [&] { return member(p, "sheaf", where).get<std::string>(); });
      for (const auto& f : array_member(p, "support", where)) def.support.push_back(at(where, [&] { return face_from_json(f); }));
      if (p.contains("morphism")) def.morphism = at(where, [&] { return p["morphism"].get<std::string>(); });
      if (!doc.sheaves.contains(def.sheaf)) fail(where, "refers to unknown sheaf \"" + def.sheaf + "\"");
      if (def.morphism) {
        auto it = doc.morphisms.find(*def.morphism);
        if (it == doc.morphisms.end()) fail(where, "refers to unknown morphism \"" + *def.morphism + "\"");
        if (it->second.source != def.sheaf) {
          fail(where, "morphism \"" + *def.morphism + "\" does not start at sheaf \"" + def.sheaf + "\"");
        }
      }
      doc.problems.emplace(name, std::move(def));
    }
  }
  return doc;
}

Document load_document(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DocumentError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

json to_json(const Document& doc) {
  json root = json::object();
  root["version"] = doc.version;
  json complex = json::array();
  for (const Face& f : doc.complex) complex.push_back(face_to_json(f));
  root["complex"] = complex;

  json graphs = json::object();
  for (const auto& [name, g] : doc.graphs) {
    json edges = json::array();
    for (auto [u, w] : g.edges) edges.push_back({u, w});
    graphs[name] = {{"vertices", g.vertices}, {"edges", edges}};
  }
  root["graphs"] = graphs;

  json sheaves = json::object();
  for (const auto& [name, s] : doc.sheaves) {
    switch (s.kind) {
      case SheafDefinition::Kind::constant: sheaves[name] = {{"kind", "constant"}, {"dim", s.dim}}; break;
      case SheafDefinition::Kind::pl: sheaves[name] = {{"kind", "pl"}}; break;
      case SheafDefinition::Kind::explicit_data: {
        json stalks = json::array();
        for (const auto& [f, d] : s.stalks) stalks.push_back({{"face", face_to_json(f)}, {"dim", d}});
        json rs = json::array();
        for (const auto& r : s.restrictions)
          rs.push_back({{"from", face_to_json(r.from)}, {"to", face_to_json(r.to)}, {"matrix", matrix_to_json(r.matrix)}});
        sheaves[name] = {{"kind", "explicit"}, {"stalks", stalks}, {"restrictions", rs}};
        break;
      }
    }
  }
  root["sheaves"] = sheaves;

  json morphisms = json::object();
  for (const auto& [name, m] : doc.morphisms) {
    json comps = json::array();
    for (const auto& c : m.components) comps.push_back({{"face", face_to_json(c.face)}, {"matrix", matrix_to_json(c.matrix)}});
    morphisms[name] = {{"source", m.source}, {"target", m.target}, {"components", comps}};
  }
  root["morphisms"] = morphisms;

  json problems = json::object();
  for (const auto& [name, p] : doc.problems) {
    json support = json::array();
    for (const Face& f : p.support) support.push_back(face_to_json(f));
    json entry = {{"sheaf", p.sheaf}, {"support", support}};
    if (p.morphism) entry["morphism"] = *p.morphism;
    problems[name] = entry;
  }
  root["problems"] = problems;
  return root;
}

std::string serialize(const Document& doc) { return to_json(doc).dump(2) + "\n"; }

Assignment load_sample(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DocumentError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DocumentError("parse error at " + line_column(text, e.byte) + ": " + e.what());
  }
  const json& version = member(root, "version", "sample");
  if (!version.is_number_integer() || version.get<int>() != kDocumentVersion) {
    fail("sample", "unsupported version " + version.dump());
  }
  return at("sample", [&] { return assignment_from_json(member(root, "sample", "sample")); });
}

Workspace::Workspace(Document doc) : doc_(std::move(doc)), complex_(build_complex(doc_.complex)) {}

namespace {

// An empty JSON matrix stands for any shape with no entries.
RationalMatrix shaped(const RationalMatrix& m, std::size_t rows, std::size_t cols) {
  if (m.rows() == 0 && m.cols() == 0 && (rows == 0 || cols == 0)) return RationalMatrix(rows, cols);
  if (m.cols() == 0 && m.rows() == rows && cols == 0) return RationalMatrix(rows, cols);
  return m;
}

}  // namespace

std::shared_ptr<const Sheaf> Workspace::sheaf(const std::string& name) {
  if (auto it = sheaves_.find(name); it != sheaves_.end()) return it->second;
  auto def_it = doc_.sheaves.find(name);
  if (def_it == doc_.sheaves.end()) throw DocumentError("unknown sheaf \"" + name + "\"");
  const SheafDefinition& def = def_it->second;

  std::shared_ptr<const Sheaf> built;
  switch (def.kind) {
    case SheafDefinition::Kind::constant: built = std::make_shared<const Sheaf>(constant_sheaf(complex_, def.dim)); break;
    case SheafDefinition::Kind::pl: built = build_pl_sheaf(complex_).sheaf; break;
    case SheafDefinition::Kind::explicit_data: {
      SheafBuilder b(complex_);
      std::map<Face, std::size_t> dims;
      for (const auto& [f, d] : def.stalks) {
        b.stalk(f, d);
        dims[f] = d;
      }
      for (const auto& r : def.restrictions) {
        b.restriction(r.from, r.to, shaped(r.matrix, dims[r.to], dims[r.from]));
      }
      built = std::make_shared<const Sheaf>(b.build());
      break;
    }
  }
  sheaves_.emplace(name, built);
  return built;
}

SheafMorphism Workspace::morphism(const std::string& name) {
  auto it = doc_.morphisms.find(name);
  if (it == doc_.morphisms.end()) throw DocumentError("unknown morphism \"" + name + "\"");
  const MorphismDefinition& def = it->second;
  auto src = sheaf(def.source);
  auto dst = sheaf(def.target);
  std::vector<RationalMatrix> comps;
  for (std::size_t i = 0; i < complex_.size(); ++i) comps.emplace_back(dst->stalk_dim(i), src->stalk_dim(i));
  for (const auto& c : def.components) {
    const std::size_t i = complex_.index_of(c.face);
    comps[i] = shaped(c.matrix, dst->stalk_dim(i), src->stalk_dim(i));
  }
  return SheafMorphism(src, dst, std::move(comps));
}

SamplingProblem Workspace::problem(const std::string& name) {
  auto it = doc_.problems.find(name);
  if (it == doc_.problems.end()) throw DocumentError("unknown problem \"" + name + "\"");
  const ProblemDefinition& def = it->second;
  const SimplicialComplex support = closed_subcomplex(complex_, def.support);
  if (def.morphism) return SamplingProblem(support, morphism(*def.morphism));
  return SamplingProblem::restriction(sheaf(def.sheaf), support);
}

SimplicialComplex Workspace::graph(const std::string& name) const {
  auto it = doc_.graphs.find(name);
  if (it == doc_.graphs.end()) throw DocumentError("unknown graph \"" + name + "\"");
  return make_graph(it->second.vertices, it->second.edges);
}

}  // namespace cellsheaf
