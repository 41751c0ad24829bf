#include "cellsheaf/report.hpp"

#include "cellsheaf/document.hpp"

namespace cellsheaf {

using nlohmann::json;

json cohomology_json(const Sheaf& f, const CohomologyReport& report) {
  json h = json::object();
  for (const auto& d : report.degrees) h[std::to_string(d.degree)] = d.dim;
  json sections = json::array();
  for (const auto& s : global_sections(f, report)) sections.push_back(assignment_to_json(s));
  return {{"H", h}, {"sections", sections}};
}

json certificate_json(const SamplingCertificate& cert) {
  json out = {
      {"verdict", to_string(cert.verdict)},
      {"H0_A", cert.h0_ambiguity},
      {"H1_A", cert.h1_ambiguity},
      {"ledger",
       {{"C0_A", cert.ledger.c0}, {"C1_A", cert.ledger.c1}, {"rank_d0_A", cert.ledger.rank_d0},
        {"rank_d1_A", cert.ledger.rank_d1}}},
      {"H0_F", cert.h0_data},
      {"H0_S", cert.h0_samples},
      {"induced_h0_map", matrix_to_json(cert.induced_h0_map)},
      {"induced_h0_map_invertible", cert.induced_invertible},
  };
  out["ambiguity_witness"] = cert.ambiguity_witness ? assignment_to_json(*cert.ambiguity_witness) : json(nullptr);
  return out;
}

json obstruction_json(const ObstructionResult& r) {
  json out = {{"H0_F_Y", r.h0_vanishing}, {"obstructed", r.obstructed}, {"verified", r.verified}};
  out["kernel_witness"] = r.kernel_witness ? vector_to_json(*r.kernel_witness) : json(nullptr);
  out["witness_section"] = r.witness_section ? assignment_to_json(*r.witness_section) : json(nullptr);
  return out;
}

json reconstruction_json(const Reconstruction& r) {
  json out = {{"status", to_string(r.kind)}};
  switch (r.kind) {
    case Reconstruction::Kind::unique: out["section"] = assignment_to_json(r.section); break;
    case Reconstruction::Kind::family: {
      out["particular"] = assignment_to_json(r.section);
      json dirs = json::array();
      for (const auto& d : r.directions) dirs.push_back(assignment_to_json(d));
      out["directions"] = dirs;
      break;
    }
    case Reconstruction::Kind::inconsistent: out["certificate"] = vector_to_json(r.certificate); break;
  }
  return out;
}

json distance_json(const Distance& d) { return d ? json(*d) : json("inf"); }

PLAnalysis pl_analyze(const SimplicialComplex& g, const std::vector<VertexId>& y) {
  return {y, unambiguous_check(g, y), redundancy_dimension(g, y)};
}

json pl_analysis_json(const PLAnalysis& a) {
  const auto& u = a.unambiguity;
  const auto& r = a.redundancy;
  return {
      {"Y", a.sampled},
      {"med", distance_json(u.med)},
      {"h0_ply", u.h0_vanishing},
      {"h0_a", r.h0_ambiguity},
      {"h1_a", r.h1_ambiguity},
      {"unambiguous_agree", u.agree},
      {"redundancy",
       {{"applicable", r.applicable},
        {"formula", r.formula},
        {"agree", r.agree},
        {"balance_condition", r.balance_condition}}},
  };
}

}  // namespace cellsheaf
