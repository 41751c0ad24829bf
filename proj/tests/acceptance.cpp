// Acceptance sweeps. Each criterion prints one PASS/FAIL line; the process
// exits nonzero when any requested criterion fails.
//
//   acceptance            run every criterion
//   acceptance 3 7        run the listed criteria

#include <omp.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "cellsheaf/cohomology.hpp"
#include "cellsheaf/plgraph.hpp"
#include "cellsheaf/sampling.hpp"
#include "corpus.hpp"
#include "oracle.hpp"

using namespace cellsheaf;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Records the first failure message and keeps later ones out of the report.
class Findings {
 public:
  void fail(const std::string& what) {
#pragma omp critical(findings)
    {
      ++failures_;
      if (first_.empty()) first_ = what;
    }
  }
  std::size_t failures() const { return failures_; }
  Outcome outcome(const std::string& summary) const {
    if (failures_ == 0) return {true, summary};
    return {false, summary + "; " + std::to_string(failures_) + " failure(s), first: " + first_};
  }

 private:
  std::size_t failures_ = 0;
  std::string first_;
};

std::string describe(const SimplicialComplex& x) {
  std::string out = "{";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x.face(i).dimension() == 0 && x.count(1) > 0) continue;
    out += (out.size() > 1 ? " " : "") + x.face(i).to_string();
  }
  return out + "}";
}

// Shared corpus of graph sampling problems: random, PL and constant data sheaves.
const std::vector<SamplingProblem>& graph_problems() {
  static const std::vector<SamplingProblem> problems = [] {
    corpus::Rng rng(0x5a4d);
    std::vector<SamplingProblem> out;
    for (int i = 0; i < 600; ++i) out.push_back(corpus::random_graph_problem(rng, static_cast<corpus::DataSheafKind>(i % 3)));
    return out;
  }();
  return problems;
}

// Random sheaves on random complexes of dimension <= 2.
const std::vector<Sheaf>& sheaf_corpus() {
  static const std::vector<Sheaf> sheaves = [] {
    corpus::Rng rng(0xc0b0);
    std::vector<Sheaf> out;
    for (int i = 0; i < 200; ++i) out.push_back(corpus::random_sheaf(rng, corpus::random_complex(rng, 6, 2)));
    return out;
  }();
  return sheaves;
}

// Random 2-dimensional complexes carrying random sheaves.
const std::vector<Sheaf>& two_complex_corpus() {
  static const std::vector<Sheaf> sheaves = [] {
    corpus::Rng rng(0x2c2c);
    std::vector<Sheaf> out;
    while (out.size() < 60) {
      const SimplicialComplex x = corpus::random_complex(rng, 6, 2);
      if (x.dimension() == 2) out.push_back(corpus::random_sheaf(rng, x));
    }
    return out;
  }();
  return sheaves;
}

struct PLInstance {
  SimplicialComplex graph;
  std::vector<VertexId> sampled;
};

// Connected simple graphs with at most 12 vertices and random sample sets.
const std::vector<PLInstance>& pl_corpus() {
  static const std::vector<PLInstance> instances = [] {
    corpus::Rng rng(0x91a7);
    std::vector<PLInstance> out;
    for (int i = 0; i < 520; ++i) {
      PLInstance inst{corpus::random_graph(rng, 1, 12, true), {}};
      std::bernoulli_distribution pick(std::uniform_real_distribution<double>(0.05, 0.7)(rng));
      for (const Face& v : inst.graph.faces(0))
        if (pick(rng)) inst.sampled.push_back(v[0]);
      out.push_back(std::move(inst));
    }
    return out;
  }();
  return instances;
}

SimplicialComplex graph_from(const std::vector<std::pair<VertexId, VertexId>>& edges, VertexId n) {
  std::vector<VertexId> vs;
  for (VertexId v = 0; v < n; ++v) vs.push_back(v);
  return make_graph(vs, edges);
}

// Twenty named graphs: paths, cycles, stars, complete graphs, a wheel, a
// grid, the Petersen graph and a few trees.
std::vector<std::pair<std::string, SimplicialComplex>> fixture_graphs() {
  std::vector<std::pair<std::string, SimplicialComplex>> out;
  auto path = [](VertexId n) {
    std::vector<std::pair<VertexId, VertexId>> e;
    for (VertexId i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return graph_from(e, n);
  };
  auto cycle = [](VertexId n) {
    std::vector<std::pair<VertexId, VertexId>> e;
    for (VertexId i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return graph_from(e, n);
  };
  auto star = [](VertexId leaves) {
    std::vector<std::pair<VertexId, VertexId>> e;
    for (VertexId i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return graph_from(e, leaves + 1);
  };
  auto complete = [](VertexId n) {
    std::vector<std::pair<VertexId, VertexId>> e;
    for (VertexId i = 0; i < n; ++i)
      for (VertexId j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return graph_from(e, n);
  };
  for (VertexId n : {1u, 2u, 5u, 9u}) out.emplace_back("path" + std::to_string(n), path(n));
  for (VertexId n : {3u, 4u, 7u}) out.emplace_back("cycle" + std::to_string(n), cycle(n));
  for (VertexId n : {3u, 6u}) out.emplace_back("star" + std::to_string(n), star(n));
  for (VertexId n : {4u, 5u, 6u}) out.emplace_back("complete" + std::to_string(n), complete(n));
  {
    std::vector<std::pair<VertexId, VertexId>> e;
    for (VertexId i = 1; i <= 6; ++i) {
      e.emplace_back(0, i);
      e.emplace_back(i, i % 6 + 1);
    }
    out.emplace_back("wheel6", graph_from(e, 7));
  }
  {
    std::vector<std::pair<VertexId, VertexId>> e;
    for (VertexId r = 0; r < 3; ++r)
      for (VertexId c = 0; c < 3; ++c) {
        if (c < 2) e.emplace_back(3 * r + c, 3 * r + c + 1);
        if (r < 2) e.emplace_back(3 * r + c, 3 * r + c + 3);
      }
    out.emplace_back("grid3x3", graph_from(e, 9));
  }
  {
    std::vector<std::pair<VertexId, VertexId>> e;
    for (VertexId i = 0; i < 5; ++i) {
      e.emplace_back(i, (i + 1) % 5);
      e.emplace_back(i, i + 5);
      e.emplace_back(i + 5, (i + 2) % 5 + 5);
    }
    out.emplace_back("petersen", graph_from(e, 10));
  }
  out.emplace_back("binary_tree7", graph_from({{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}}, 7));
  out.emplace_back("caterpillar", graph_from({{0, 1}, {1, 2}, {2, 3}, {1, 4}, {2, 5}, {2, 6}}, 7));
  out.emplace_back("two_triangles", graph_from({{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}, 6));
  out.emplace_back("bowtie", graph_from({{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}}, 5));
  out.emplace_back("isolated_plus_edge", graph_from({{1, 2}}, 3));
  return out;
}

Outcome coboundary_nilpotence() {
  const auto& sheaves = sheaf_corpus();
  Findings findings;
  std::size_t products = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : products)
  for (std::size_t i = 0; i < sheaves.size(); ++i) {
    const Sheaf& f = sheaves[i];
    if (!validate_sheaf(f).valid) {
      findings.fail("corpus sheaf " + std::to_string(i) + " is invalid");
      continue;
    }
    for (int k = 0; k + 1 <= f.base().dimension(); ++k) {
      ++products;
      if (!(coboundary(f, k + 1) * coboundary(f, k)).is_zero())
        findings.fail("sheaf " + std::to_string(i) + " degree " + std::to_string(k));
    }
  }
  return findings.outcome(std::to_string(sheaves.size()) + " sheaves, " + std::to_string(products) + " products");
}

Outcome h0_sections_oracle() {
  const auto& sheaves = sheaf_corpus();
  Findings findings;
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < sheaves.size(); ++i) {
    const std::size_t lib = cohomology(sheaves[i]).dim(0);
    const std::size_t brute = oracle::section_space_dim(sheaves[i]);
    if (lib != brute)
      findings.fail("sheaf " + std::to_string(i) + ": cohomology " + std::to_string(lib) + " vs brute force " +
                    std::to_string(brute));
  }
  return findings.outcome(std::to_string(sheaves.size()) + " sheaves");
}

Outcome nyquist_equivalence() {
  const auto& problems = graph_problems();
  Findings findings;
  std::size_t perfect = 0;
  std::size_t refined_failures = 0;
  std::size_t reverse_failures = 0;
  std::size_t first_counterexample = problems.size();
  // Counterexamples per data sheaf kind (random, PL, constant).
  std::size_t by_kind[3] = {0, 0, 0};
#pragma omp parallel for schedule(dynamic) reduction(+ : perfect, refined_failures, reverse_failures, by_kind[:3])
  for (std::size_t i = 0; i < problems.size(); ++i) {
    const SamplingProblem& p = problems[i];
    const SamplingCertificate cert = nyquist_check(p);
    const bool vanishing = cert.h0_ambiguity == 0 && cert.h1_ambiguity == 0;
    perfect += vanishing ? 1 : 0;
    if (vanishing && !cert.induced_invertible) ++reverse_failures;

    // Exactness: the map is invertible iff H^0(A) = 0 and H^1(A) -> H^1(F)
    // is injective, i.e. dim H^1(A) + dim H^1(S) = dim H^1(F).
    const std::size_t h1f = cohomology(p.data()).dim(1);
    const std::size_t h1s = cohomology(p.samples()).dim(1);
    const bool refined = cert.h0_ambiguity == 0 && cert.h1_ambiguity + h1s == h1f;
    if (refined != cert.induced_invertible) ++refined_failures;

    if (cert.induced_invertible != vanishing) {
      ++by_kind[i % 3];
      findings.fail("problem " + std::to_string(i) + " on " + describe(p.data().base()) + ": invertible=" +
                    (cert.induced_invertible ? "yes" : "no") + ", dim H0(A)=" + std::to_string(cert.h0_ambiguity) +
                    ", dim H1(A)=" + std::to_string(cert.h1_ambiguity) + ", dim H1(F)=" + std::to_string(h1f));
#pragma omp critical(first_counterexample)
      first_counterexample = std::min(first_counterexample, i);
    }
  }
  std::cout << "  info: " << problems.size() << " problems, " << perfect << " with vanishing H0(A), H1(A)\n";
  std::cout << "  info: vanishing => invertible failures: " << reverse_failures << "\n";
  std::cout << "  info: invertible <=> [H0(A)=0 and dim H1(A)+dim H1(S)=dim H1(F)] failures: " << refined_failures
            << "\n";
  std::cout << "  info: counterexamples by data sheaf: random " << by_kind[0] << ", PL " << by_kind[1]
            << ", constant " << by_kind[2] << "\n";
  if (first_counterexample < problems.size()) {
    const std::string file = "nyquist_counterexample.json";
    std::ofstream(file) << serialize(corpus::problem_document(problems[first_counterexample]));
    std::cout << "  info: first counterexample written to " << file << "\n";
  }
  return findings.outcome(std::to_string(problems.size()) + " graph problems");
}

Outcome oversampling() {
  Findings findings;
  const auto& problems = graph_problems();
  const auto& sheaves = two_complex_corpus();
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < problems.size(); ++i)
    if (!oversampling_check(problems[i].data(), 0).holds) findings.fail("graph problem " + std::to_string(i) + ", k=0");
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < sheaves.size(); ++i)
    if (!oversampling_check(sheaves[i], 1).holds) findings.fail("2-complex " + std::to_string(i) + ", k=1");
  return findings.outcome(std::to_string(problems.size()) + " graphs at k=0, " + std::to_string(sheaves.size()) +
                          " 2-complexes at k=1");
}

Outcome obstruction() {
  const auto& problems = graph_problems();
  Findings findings;
  std::size_t obstructed = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : obstructed)
  for (std::size_t i = 0; i < problems.size(); ++i) {
    const ObstructionResult r = obstruction_check(problems[i]);
    if (r.h0_vanishing == 0) continue;
    ++obstructed;
    if (!r.obstructed || !r.verified || !r.kernel_witness || is_zero(*r.kernel_witness))
      findings.fail("problem " + std::to_string(i) + " has no verified kernel witness");
  }
  return findings.outcome(std::to_string(obstructed) + " problems with dim H0(F_Y) > 0");
}

Outcome pl_fixtures() {
  Findings findings;
  const SimplicialComplex c3 = build_complex({{0, 1}, {1, 2}, {0, 2}});
  const PLSheaf pl = build_pl_sheaf(c3);
  const CohomologyReport h = cohomology(*pl.sheaf);
  if (h.dim(0) != 3 || h.dim(1) != 0) findings.fail("PL on C3 has H = (" + std::to_string(h.dim(0)) + "," + std::to_string(h.dim(1)) + ")");

  const SamplingProblem p = SamplingProblem::restriction(pl.sheaf, build_complex({{0}}));
  const SamplingCertificate cert = nyquist_check(p);
  if (cert.verdict != SamplingVerdict::perfect || cert.h0_ambiguity != 0 || cert.h1_ambiguity != 0)
    findings.fail("(C3, Y={0}) is " + to_string(cert.verdict));

  std::vector<std::size_t> offsets;
  const oracle::Rows constraints = oracle::section_constraints(*pl.sheaf, offsets);
  const std::size_t sample_dim = pl.sheaf->stalk_dim(0);
  corpus::Rng rng(0x6c33);
  for (int trial = 0; trial < 100; ++trial) {
    const Assignment section = corpus::random_global_section(rng, *pl.sheaf);
    const Assignment sample = sample_section(p, section);
    const Reconstruction r = reconstruct(p, sample);
    if (r.kind != Reconstruction::Kind::unique || r.section.values != section.values) {
      findings.fail("round trip " + std::to_string(trial));
      continue;
    }
    oracle::Rows rows = constraints;
    oracle::Row rhs(rows.size());
    for (std::size_t i = 0; i < sample_dim; ++i) {
      oracle::Row row(offsets.back());
      row[offsets[0] + i] = 1;
      rows.push_back(std::move(row));
      rhs.push_back(sample.values.at(Face{0})[i]);
    }
    const auto brute = oracle::unique_solution(rows, rhs, offsets.back());
    if (!brute) {
      findings.fail("brute-force solver found no unique solution in round trip " + std::to_string(trial));
      continue;
    }
    for (std::size_t f = 0; f < c3.size(); ++f)
      for (std::size_t k = 0; k < pl.sheaf->stalk_dim(f); ++k)
        if (r.section.values.at(c3.face(f))[k] != (*brute)[offsets[f] + k])
          findings.fail("brute-force disagreement in round trip " + std::to_string(trial));
  }
  return findings.outcome("C3 cohomology, certificate and 100 round trips");
}

Outcome med_equivalence() {
  const auto& instances = pl_corpus();
  Findings findings;
  std::size_t near = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : near)
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const UnambiguityReport r = unambiguous_check(instances[i].graph, instances[i].sampled);
    near += r.med_at_most_one ? 1 : 0;
    if (!r.agree)
      findings.fail("graph " + describe(instances[i].graph) + ", med=" + to_string(r.med) +
                    ", dim H0(PL_Y)=" + std::to_string(r.h0_vanishing));
  }
  return findings.outcome(std::to_string(instances.size()) + " connected graphs, " + std::to_string(near) +
                          " with med <= 1");
}

Outcome redundancy_formula() {
  const auto& instances = pl_corpus();
  Findings findings;
  std::size_t applicable = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : applicable)
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const RedundancyReport r = redundancy_dimension(instances[i].graph, instances[i].sampled);
    if (!r.applicable) continue;
    ++applicable;
    if (!r.agree)
      findings.fail("graph " + describe(instances[i].graph) + ": dim H1(A)=" + std::to_string(r.h1_ambiguity) +
                    ", formula " + std::to_string(r.formula));
  }
  const auto fixtures = fixture_graphs();
  for (const auto& [name, g] : fixtures) {
    std::vector<VertexId> all;
    for (const Face& v : g.faces(0)) all.push_back(v[0]);
    const RedundancyReport r = redundancy_dimension(g, all);
    if (r.h0_ambiguity != 0 || r.h1_ambiguity != 2 * g.count(1))
      findings.fail(name + " with Y = X0: dim H1(A)=" + std::to_string(r.h1_ambiguity) + ", expected " +
                    std::to_string(2 * g.count(1)));
  }
  return findings.outcome(std::to_string(applicable) + " corpus instances with H0(A)=0, " +
                          std::to_string(fixtures.size()) + " fixture graphs with Y = X0");
}

Outcome polynomial_nyquist() {
  struct Case {
    VertexId n;
    std::size_t d;
    std::vector<VertexId> y;
  };
  std::vector<Case> cases;
  for (VertexId n = 0; n <= 8; ++n)
    for (std::size_t d = 0; d <= 4; ++d)
      for (unsigned mask = 0; mask < (1u << (n + 1)); ++mask) {
        Case c{n, d, {}};
        for (VertexId v = 0; v <= n; ++v)
          if (mask & (1u << v)) c.y.push_back(v);
        cases.push_back(std::move(c));
      }
  Findings findings;
#pragma omp parallel for schedule(dynamic, 16)
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const Case& c = cases[i];
    std::vector<VertexId> vs;
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId v = 0; v <= c.n; ++v) {
      vs.push_back(v);
      if (v < c.n) edges.emplace_back(v, v + 1);
    }
    const SamplingProblem p = evaluation_sampling(make_graph(vs, edges), c.d, c.y);
    const std::size_t h0a = cohomology(*ambiguity_sheaf(p).sheaf).dim(0);

    oracle::Rows vandermonde;
    for (VertexId y : c.y) {
      oracle::Row row(c.d + 1);
      mpq_class power = 1;
      for (std::size_t j = 0; j <= c.d; ++j, power *= y) row[j] = power;
      vandermonde.push_back(std::move(row));
    }
    const std::size_t expected = oracle::nullity(vandermonde, c.d + 1);
    const bool enough = c.y.size() >= c.d + 1;
    if (h0a != expected || (h0a == 0) != enough)
      findings.fail("n=" + std::to_string(c.n) + " d=" + std::to_string(c.d) + " |Y|=" + std::to_string(c.y.size()) +
                    ": dim H0(A)=" + std::to_string(h0a) + ", Vandermonde nullity " + std::to_string(expected));
  }
  return findings.outcome(std::to_string(cases.size()) + " (n, d, Y) cases");
}

Outcome euler_additivity() {
  const auto& problems = graph_problems();
  std::vector<SamplingProblem> higher;
  {
    corpus::Rng rng(0xe1e1);
    for (const Sheaf& f : two_complex_corpus()) {
      auto shared = std::make_shared<const Sheaf>(f);
      higher.push_back(corpus::random_quotient_sampling(rng, shared, corpus::random_support(rng, f.base())));
    }
  }
  Findings findings;
  auto check = [&](const SamplingProblem& p, const std::string& label) {
    const CohomologyReport ha = cohomology(*ambiguity_sheaf(p).sheaf);
    const CohomologyReport hf = cohomology(p.data());
    const CohomologyReport hs = cohomology(p.samples());
    if (ha.euler_characteristic() + hs.euler_characteristic() != hf.euler_characteristic())
      findings.fail(label + ": Euler characteristics do not add");
    if (p.data().base().dimension() <= 1) {
      auto d = [](const CohomologyReport& r, int k) { return static_cast<long long>(r.dim(k)); };
      if (d(ha, 0) - d(hf, 0) + d(hs, 0) - d(ha, 1) + d(hf, 1) - d(hs, 1) != 0)
        findings.fail(label + ": six-term alternating sum is nonzero");
    }
  };
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < problems.size(); ++i) check(problems[i], "graph problem " + std::to_string(i));
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < higher.size(); ++i) check(higher[i], "2-complex problem " + std::to_string(i));
  return findings.outcome(std::to_string(problems.size()) + " graph problems, " + std::to_string(higher.size()) +
                          " 2-complex problems");
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "coboundary nilpotence", coboundary_nilpotence},
      {2, "H0 equals brute-force section space", h0_sections_oracle},
      {3, "induced H0 map invertible <=> H0(A) = H1(A) = 0", nyquist_equivalence},
      {4, "oversampling vanishing", oversampling},
      {5, "obstruction witnesses", obstruction},
      {6, "PL fixtures on C3", pl_fixtures},
      {7, "med <= 1 <=> H0(PL_Y) = 0", med_equivalence},
      {8, "redundancy dimension formula", redundancy_formula},
      {9, "polynomial evaluation sampling", polynomial_nyquist},
      {10, "Euler additivity and six-term identity", euler_additivity},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> wanted;
  for (int i = 1; i < argc; ++i) {
    char* end = nullptr;
    const long id = std::strtol(argv[i], &end, 10);
    if (*end != '\0' || id < 1 || id > static_cast<long>(criteria().size())) {
      std::cerr << "unknown criterion: " << argv[i] << "\n";
      return 2;
    }
    wanted.push_back(static_cast<int>(id));
  }
  if (wanted.empty())
    for (const auto& c : criteria()) wanted.push_back(c.id);

  bool ok = true;
  for (int id : wanted) {
    const Criterion& c = criteria()[id - 1];
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    std::cout << "criterion " << c.id << " [" << c.name << "]: " << (out.pass ? "PASS" : "FAIL") << " (" << out.detail
              << ")" << std::endl;
    ok = ok && out.pass;
  }
  return ok ? 0 : 1;
}
