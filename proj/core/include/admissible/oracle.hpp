#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>

#include "admissible/graph.hpp"

namespace admissible {

struct Core;  // cores.hpp

// Caps for the exhaustive enumerators. ADMISSIBLE_BUDGET overrides the step
// budget ("steps" or "steps:max_vertices").
struct Budget {
  int max_vertices = 16;
  std::uint64_t max_steps = 100'000'000;

  static Budget from_env();
};

class BudgetExceededError : public std::runtime_error {
 public:
  explicit BudgetExceededError(const std::string& what) : std::runtime_error(what) {}
};

// Sorted distinct lengths.
struct LengthSpectrum {
  std::vector<int> lengths;

  bool contains(int len) const;
  bool empty() const { return lengths.empty(); }
};

// Nonempty, first entry >= min_first, consecutive gaps all 1 or all 2.
bool is_admissible(std::span<const int> lengths);
bool is_semi_admissible(std::span<const int> lengths);

LengthSpectrum path_length_spectrum(const Graph& g, Vertex x, Vertex y,
                                    const Budget& budget = {});
LengthSpectrum cycle_length_spectrum(const Graph& g, const Budget& budget = {});

// Spectrum plus one witness object per length, ordered by length.
struct PathScan {
  LengthSpectrum spectrum;
  std::vector<OrientedPath> representatives;
};
struct CycleScan {
  LengthSpectrum spectrum;
  std::vector<std::vector<Vertex>> representatives;  // closing edge implicit
};

PathScan scan_paths(const Graph& g, Vertex x, Vertex y, const Budget& budget = {});
CycleScan scan_cycles(const Graph& g, const Budget& budget = {});

// Longest run start, start+gap, ... inside the spectrum with gap 1 or 2 and
// start >= min_start. Lengths are distinct, so each term is used once.
int max_admissible_run(const LengthSpectrum& spectrum, int min_start = 2);

enum class Parity { all, even };

// Parity::all  - every residue class mod k is hit by some length.
// Parity::even - every residue class of an even integer mod k is hit
//                (all classes when k is odd, the even classes when k is even).
bool residue_coverage(const LengthSpectrum& spectrum, int k, Parity parity);

// Contrapositive check: when the core is large enough that fewer than k
// admissible (x,y)-paths would contradict the bound (ell >= k, or
// ell >= k-1 with a T-neighbor of y's component), confirm via the oracle
// that k admissible paths exist. Vacuously true otherwise.
bool check_fact3(const Graph& g, Vertex x, Vertex y, const Core& core, int k,
                 const Budget& budget = {});

}  // namespace admissible
