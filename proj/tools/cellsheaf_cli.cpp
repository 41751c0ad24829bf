// Command-line front end: validate documents, compute cohomology, certify
// samplings, reconstruct sections and analyse PL samplings on graphs.
//
// Exit codes: 0 success, 1 validation failure (or a non-perfect verdict with
// --require-perfect), 2 I/O, parse or reference failure.

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cellsheaf/cohomology.hpp"
#include "cellsheaf/document.hpp"
#include "cellsheaf/plgraph.hpp"
#include "cellsheaf/report.hpp"
#include "cellsheaf/sampling.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace cellsheaf;

namespace {

constexpr int kOk = 0;
constexpr int kValidationFailure = 1;
constexpr int kInputFailure = 2;

json envelope(json body) {
  body["version"] = kDocumentVersion;
  return body;
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

int emit_error(int code, const std::string& message) {
  emit(envelope({{"error", message}}));
  return code;
}

std::vector<fs::path> corpus_files(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw DocumentError("corpus directory not found: " + dir.string());
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  return files;
}

// Returns the report and whether every object validated.
std::pair<json, bool> validate_document(const Document& doc) {
  Workspace ws(doc);
  bool ok = true;
  json sheaves = json::object();
  for (const auto& [name, def] : doc.sheaves) {
    json entry;
    try {
      const SheafVerdict v = validate_sheaf(*ws.sheaf(name));
      entry["valid"] = v.valid;
      if (!v.valid) {
        entry["reason"] = v.reason;
        json w = json::array();
        for (const Face& f : v.witness) w.push_back(face_to_json(f));
        entry["witness"] = w;
      }
    } catch (const InputError& e) {
      entry = {{"valid", false}, {"reason", e.what()}};
    }
    ok = ok && entry["valid"].get<bool>();
    sheaves[name] = entry;
  }
  json morphisms = json::object();
  for (const auto& [name, def] : doc.morphisms) {
    json entry;
    try {
      const MorphismVerdict v = validate_morphism(ws.morphism(name));
      entry["valid"] = v.valid;
      if (!v.valid) {
        entry["reason"] = "naturality square fails";
        entry["failing_inclusion"] = {face_to_json(v.failing_inclusion->first),
                                      face_to_json(v.failing_inclusion->second)};
      }
    } catch (const InputError& e) {
      entry = {{"valid", false}, {"reason", e.what()}};
    }
    ok = ok && entry["valid"].get<bool>();
    morphisms[name] = entry;
  }
  json problems = json::object();
  for (const auto& [name, def] : doc.problems) {
    json entry;
    try {
      ws.problem(name);
      entry["valid"] = true;
    } catch (const NotSurjectiveError& e) {
      entry = {{"valid", false}, {"reason", e.what()}, {"face", face_to_json(e.face())}};
    } catch (const InputError& e) {
      entry = {{"valid", false}, {"reason", e.what()}};
    }
    ok = ok && entry["valid"].get<bool>();
    problems[name] = entry;
  }
  return {json{{"valid", ok}, {"sheaves", sheaves}, {"morphisms", morphisms}, {"problems", problems}}, ok};
}

json sample_check(Workspace& ws, const std::string& name) {
  const SamplingProblem p = ws.problem(name);
  return {{"problem", name},
          {"certificate", certificate_json(nyquist_check(p))},
          {"obstruction", obstruction_json(obstruction_check(p))}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact cellular sheaf cohomology and sampling certificates"};
  app.require_subcommand(1);
  bool json_output = true;
  app.add_flag("--json", json_output, "Emit JSON reports (default)");

  std::string doc_path;
  std::string corpus_dir;
  std::string name;
  std::string sample_path;
  bool require_perfect = false;
  std::vector<VertexId> sampled;

  auto* validate = app.add_subcommand("validate", "Validate every sheaf, morphism and problem in a document");
  validate->add_option("document", doc_path, "Document path");
  validate->add_option("--corpus", corpus_dir, "Validate every .json document in a directory");

  auto* cohom = app.add_subcommand("cohomology", "Cohomology dimensions and H^0 sections of a sheaf");
  cohom->add_option("document", doc_path)->required();
  cohom->add_option("sheaf", name)->required();

  auto* check = app.add_subcommand("sample-check", "Sampling certificate for a problem");
  check->add_option("document", doc_path);
  check->add_option("problem", name);
  check->add_option("--corpus", corpus_dir, "Check every problem of every .json document in a directory");
  check->add_flag("--require-perfect", require_perfect, "Exit 1 unless every verdict is perfect");

  auto* recon = app.add_subcommand("reconstruct", "Recover global sections from a sample");
  recon->add_option("document", doc_path)->required();
  recon->add_option("problem", name)->required();
  recon->add_option("sample", sample_path)->required();

  auto* pl = app.add_subcommand("pl-analyze", "Ambiguity and redundancy of sampling PL functions on a graph");
  pl->add_option("document", doc_path)->required();
  pl->add_option("graph", name)->required();
  pl->add_option("-Y,--sampled", sampled, "Sampled vertices, comma separated")->delimiter(',');

  CLI11_PARSE(app, argc, argv);
  (void)json_output;

  try {
    if (*validate) {
      if (!corpus_dir.empty()) {
        json docs = json::object();
        bool ok = true;
        for (const auto& file : corpus_files(corpus_dir)) {
          auto [report, valid] = validate_document(load_document(file));
          docs[file.filename().string()] = report;
          ok = ok && valid;
        }
        emit(envelope({{"valid", ok}, {"documents", docs}}));
        return ok ? kOk : kValidationFailure;
      }
      if (doc_path.empty()) return emit_error(kInputFailure, "validate needs a document or --corpus");
      auto [report, ok] = validate_document(load_document(doc_path));
      emit(envelope(report));
      return ok ? kOk : kValidationFailure;
    }

    if (*cohom) {
      Workspace ws(load_document(doc_path));
      auto f = ws.sheaf(name);
      if (auto v = validate_sheaf(*f); !v.valid) return emit_error(kValidationFailure, "sheaf is invalid: " + v.reason);
      json out = cohomology_json(*f, cohomology(*f));
      out["sheaf"] = name;
      emit(envelope(out));
      return kOk;
    }

    if (*check) {
      bool all_perfect = true;
      auto perfect = [](const json& r) { return r["certificate"]["verdict"] == "perfect"; };
      if (!corpus_dir.empty()) {
        json docs = json::object();
        for (const auto& file : corpus_files(corpus_dir)) {
          Workspace ws(load_document(file));
          json results = json::object();
          for (const auto& [pname, def] : ws.document().problems) {
            json r = sample_check(ws, pname);
            all_perfect = all_perfect && perfect(r);
            results[pname] = r;
          }
          docs[file.filename().string()] = results;
        }
        emit(envelope({{"documents", docs}}));
      } else {
        if (doc_path.empty() || name.empty()) return emit_error(kInputFailure, "sample-check needs a document and a problem");
        Workspace ws(load_document(doc_path));
        json r = sample_check(ws, name);
        all_perfect = perfect(r);
        emit(envelope(r));
      }
      return require_perfect && !all_perfect ? kValidationFailure : kOk;
    }

    if (*recon) {
      Workspace ws(load_document(doc_path));
      const SamplingProblem p = ws.problem(name);
      const Assignment sample = load_sample(sample_path);
      json out = reconstruction_json(reconstruct(p, sample));
      out["problem"] = name;
      emit(envelope(out));
      return kOk;
    }

    if (*pl) {
      Workspace ws(load_document(doc_path));
      const SimplicialComplex g = ws.graph(name);
      json out = pl_analysis_json(pl_analyze(g, sampled));
      out["graph"] = name;
      emit(envelope(out));
      return kOk;
    }
  } catch (const DocumentError& e) {
    return emit_error(kInputFailure, e.what());
  } catch (const NotSurjectiveError& e) {
    json out = envelope({{"error", e.what()}, {"face", face_to_json(e.face())}});
    emit(out);
    return kValidationFailure;
  } catch (const InputError& e) {
    return emit_error(kValidationFailure, e.what());
  }
  return kOk;
}
