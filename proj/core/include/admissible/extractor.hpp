#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "admissible/cores.hpp"
#include "admissible/graph.hpp"
#include "admissible/oracle.hpp"
#include "admissible/rooted.hpp"

namespace admissible {

// Hypothesis of the statement under test does not hold for the given input.
// Deliberately distinct from ExtractionError: callers filter on it.
class HypothesisError : public std::runtime_error {
 public:
  explicit HypothesisError(const std::string& what) : std::runtime_error(what) {}
};

// Internal failure of the constructive machinery on an input whose hypothesis
// holds. Carries enough to replay the instance.
class ExtractionError : public std::runtime_error {
 public:
  ExtractionError(std::string stage, std::string graph6, Vertex x, Vertex y,
                  std::optional<Vertex> z, int k);

  std::string stage;
  std::string graph6;
  Vertex x = -1;
  Vertex y = -1;
  std::optional<Vertex> z;
  int k = 0;
};

struct CertificateCheck {
  bool ok = true;
  std::vector<std::string> problems;
};

// k paths from x to y in host, lengths strictly increasing with one uniform
// gap of 1 or 2, shortest length at least 2.
struct PathCertificate {
  Graph host{0};
  Vertex x = 0;
  Vertex y = 0;
  int k = 0;
  std::vector<OrientedPath> paths;

  CertificateCheck validate() const;
  std::string to_text() const;
  static PathCertificate from_text(const Graph& host, const std::string& text);
};

// k cycles, lengths strictly increasing with one uniform gap; a cycle is its
// vertex list without repeating the closing vertex.
struct CycleCertificate {
  Graph host{0};
  int k = 0;
  std::vector<std::vector<Vertex>> cycles;

  CertificateCheck validate() const;
  std::string to_text() const;
  static CycleCertificate from_text(const Graph& host, const std::string& text);
};

struct ExtractorOptions {
  // At or below this order the extractor answers from exhaustive enumeration.
  int oracle_threshold = 12;
  Budget budget{};
};

// Gluing step: tails[i] runs from u_i to y, heads[i][j] runs from x to u_i and
// avoids tails[i] except at u_i. Tail lengths form one semi-admissible family;
// so does each row of heads, and column j has the same vertex count in every
// row. Produces a certificate of tails.size() + heads[0].size() - 1 admissible
// (x,y)-paths, sorted by length. Violated preconditions throw
// std::invalid_argument.
PathCertificate combine_fact1(const Graph& g, Vertex x, Vertex y,
                              const std::vector<OrientedPath>& tails,
                              const std::vector<std::vector<OrientedPath>>& heads);

bool paths_hypothesis_holds(const RootedGraph& r, int k);
bool cycles_hypothesis_holds(const Graph& g, int k);

// k admissible (x,y)-paths for a rooted instance satisfying the path
// hypothesis (roots 2-connected, inner degrees >= k+1). Throws
// HypothesisError when the hypothesis fails, ExtractionError when the
// machinery cannot finish.
PathCertificate find_admissible_paths(const RootedGraph& r, int k,
                                      const ExtractorOptions& options = {});

// k admissible cycles for a connected graph of order >= 3 with at most two
// vertices of degree < k+1, k >= 2.
CycleCertificate find_admissible_cycles(const Graph& g, int k,
                                        const ExtractorOptions& options = {});

}  // namespace admissible
