#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "admissible/extractor.hpp"

namespace admissible {

enum class Target {
  theorem_1_2,   // 2-connected, z in V, V\{x,y,z} nonempty, deg >= k+1 outside
  theorem_2_1,   // rooted form, z in V or absent
  theorem_1_4,   // k admissible cycles
  conjecture_1,  // min degree >= k+1 -> all even lengths mod k
  conjecture_2,  // 2-connected non-bipartite, min degree >= k+1 -> all lengths mod k
  facts          // contrapositive of the core-size bound
};

enum class GeneratorKind { exhaustive_labeled, random_gnp, corpus_file };

std::string to_string(Target t);
std::string to_string(GeneratorKind k);
Target target_from_string(const std::string& name);
GeneratorKind generator_from_string(const std::string& name);

struct Campaign {
  Target target = Target::theorem_2_1;
  GeneratorKind generator = GeneratorKind::exhaustive_labeled;
  int n_min = 1;
  int n_max = 6;
  std::vector<int> ks{1, 2};
  std::uint64_t seed = 1;
  int count = 100;          // random-gnp: graphs per order
  double p = 0.5;           // random-gnp: edge probability
  std::string corpus_path;  // corpus-file
  int jobs = 1;
  ExtractorOptions options{};

  void validate() const;  // throws std::invalid_argument
};

struct FailureWitness {
  std::string graph6;
  Vertex x = -1;  // -1 when the target has no roots
  Vertex y = -1;
  std::optional<Vertex> z;
  int k = 0;
  std::string reason;
};

struct VerificationReport {
  std::uint64_t instances_total = 0;
  std::uint64_t hypotheses_satisfied = 0;
  std::uint64_t verified = 0;
  std::uint64_t failed = 0;
  std::vector<FailureWitness> failure_witnesses;
  double wall_time_seconds = 0.0;
};

// Deterministic random-access stream of host graphs; root and k placement is
// the campaign runner's job.
struct GraphStream {
  std::uint64_t count = 0;
  std::function<Graph(std::uint64_t)> get;
};

GraphStream generate_instances(const Campaign& c);

// G(n, p) draw number `index` of the stream (seed, n). Stable across
// platforms and thread schedules.
Graph gnp_graph(std::uint64_t seed, int n, std::uint64_t index, double p);

VerificationReport run_campaign(const Campaign& c);

std::string report_to_json(const Campaign& c, const VerificationReport& r);

// Accepts a full report or a single witness object; each witness comes back
// with the target it belongs to.
std::vector<std::pair<Target, FailureWitness>> witnesses_from_json(const std::string& text);

// Pushes one witness back through the verification path. True when the
// instance verifies now, false when the failure reproduces.
bool replay_witness(Target target, const FailureWitness& w,
                    const ExtractorOptions& options = {});

}  // namespace admissible
