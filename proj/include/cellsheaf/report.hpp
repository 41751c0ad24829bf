#pragma once

// JSON renderings of analysis results. Every report carries "version": 1.

#include <string>
#include <vector>

#include "json.hpp"

#include "cellsheaf/cohomology.hpp"
#include "cellsheaf/plgraph.hpp"
#include "cellsheaf/sampling.hpp"

namespace cellsheaf {

// {"H": {"0": n0, ...}, "sections": [...]}
nlohmann::json cohomology_json(const Sheaf& f, const CohomologyReport& report);

nlohmann::json certificate_json(const SamplingCertificate& cert);
nlohmann::json obstruction_json(const ObstructionResult& result);
nlohmann::json reconstruction_json(const Reconstruction& r);

nlohmann::json distance_json(const Distance& d);

struct PLAnalysis {
  std::vector<VertexId> sampled;
  UnambiguityReport unambiguity;
  RedundancyReport redundancy;
};

PLAnalysis pl_analyze(const SimplicialComplex& g, const std::vector<VertexId>& y);
nlohmann::json pl_analysis_json(const PLAnalysis& a);

}  // namespace cellsheaf
