#include "admissible/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>

#include "admissible/cores.hpp"

namespace admissible {

Budget Budget::from_env() {
  Budget b;
  if (const char* env = std::getenv("ADMISSIBLE_BUDGET")) {
    char* end = nullptr;
    unsigned long long steps = std::strtoull(env, &end, 10);
    if (end != env && steps > 0) b.max_steps = steps;
    if (end && *end == ':') {
      long mv = std::strtol(end + 1, nullptr, 10);
      if (mv >= 1 && mv <= 64) b.max_vertices = static_cast<int>(mv);
    }
  }
  return b;
}

bool LengthSpectrum::contains(int len) const {
  return std::binary_search(lengths.begin(), lengths.end(), len);
}

namespace {

bool admissible_with_floor(std::span<const int> lengths, int floor) {
  if (lengths.empty()) return false;
  if (lengths.front() < floor) return false;
  if (lengths.size() == 1) return true;
  int gap = lengths[1] - lengths[0];
  if (gap != 1 && gap != 2) return false;
  for (size_t i = 1; i + 1 < lengths.size(); ++i)
    if (lengths[i + 1] - lengths[i] != gap) return false;
  return true;
}

struct Enumerator {
  const Graph& g;
  Budget budget;
  std::uint64_t steps = 0;
  std::vector<std::uint64_t> adj;  // adjacency bitmasks

  Enumerator(const Graph& graph, const Budget& b) : g(graph), budget(b) {
    if (g.order() > budget.max_vertices)
      throw BudgetExceededError("graph order " + std::to_string(g.order()) +
                                " above enumeration cap " +
                                std::to_string(budget.max_vertices));
    if (g.order() > 64) throw BudgetExceededError("enumerator supports at most 64 vertices");
    adj.resize(static_cast<size_t>(g.order()), 0);
    for (Vertex v = 0; v < g.order(); ++v)
      for (Vertex w : g.neighbors(v)) adj[static_cast<size_t>(v)] |= 1ull << w;
  }

  void tick() {
    if (++steps > budget.max_steps)
      throw BudgetExceededError("enumeration step budget exhausted (" +
                                std::to_string(budget.max_steps) + ")");
  }
};

struct PathEnumerator : Enumerator {
  Vertex y;
  bool keep;
  std::uint64_t seen_lengths = 0;
  std::vector<Vertex> stack;
  std::vector<OrientedPath> reps;  // indexed by length

  PathEnumerator(const Graph& graph, Vertex target, const Budget& b, bool keep_paths)
      : Enumerator(graph, b), y(target), keep(keep_paths) {
    reps.resize(static_cast<size_t>(graph.order()));
  }

  void dfs(Vertex v, std::uint64_t visited) {
    tick();
    if (v == y) {
      int len = static_cast<int>(stack.size()) - 1;
      if (!(seen_lengths & (1ull << len))) {
        seen_lengths |= 1ull << len;
        if (keep) reps[static_cast<size_t>(len)] = OrientedPath{stack};
      }
      return;  // simple paths do not continue past the target
    }
    std::uint64_t cand = adj[static_cast<size_t>(v)] & ~visited;
    while (cand) {
      Vertex w = static_cast<Vertex>(std::countr_zero(cand));
      cand &= cand - 1;
      stack.push_back(w);
      dfs(w, visited | (1ull << w));
      stack.pop_back();
    }
  }
};

struct CycleEnumerator : Enumerator {
  bool keep;
  std::uint64_t seen_lengths = 0;
  std::vector<Vertex> stack;
  std::vector<std::vector<Vertex>> reps;  // indexed by length

  CycleEnumerator(const Graph& graph, const Budget& b, bool keep_cycles)
      : Enumerator(graph, b), keep(keep_cycles) {
    reps.resize(static_cast<size_t>(graph.order()) + 1);
  }

  // Paths from root using vertices > root only; a back edge to the root
  // closes a cycle. Every cycle is seen from its minimum vertex.
  void dfs(Vertex root, Vertex v, std::uint64_t visited) {
    tick();
    if (stack.size() >= 3 && (adj[static_cast<size_t>(v)] & (1ull << root))) {
      int len = static_cast<int>(stack.size());
      if (!(seen_lengths & (1ull << len))) {
        seen_lengths |= 1ull << len;
        if (keep) reps[static_cast<size_t>(len)] = stack;
      }
    }
    std::uint64_t cand = adj[static_cast<size_t>(v)] & ~visited;
    cand &= ~((1ull << (root + 1)) - 1);  // only vertices above the root
    while (cand) {
      Vertex w = static_cast<Vertex>(std::countr_zero(cand));
      cand &= cand - 1;
      stack.push_back(w);
      dfs(root, w, visited | (1ull << w));
      stack.pop_back();
    }
  }
};

std::vector<int> lengths_from_mask(std::uint64_t mask) {
  std::vector<int> out;
  for (int len = 0; len < 64; ++len)
    if (mask & (1ull << len)) out.push_back(len);
  return out;
}

}  // namespace

bool is_admissible(std::span<const int> lengths) { return admissible_with_floor(lengths, 2); }

bool is_semi_admissible(std::span<const int> lengths) { return admissible_with_floor(lengths, 1); }

PathScan scan_paths(const Graph& g, Vertex x, Vertex y, const Budget& budget) {
  g.require_vertex(x);
  g.require_vertex(y);
  if (x == y) throw std::invalid_argument("path scan endpoints must differ");
  PathEnumerator e(g, y, budget, true);
  e.stack.push_back(x);
  e.dfs(x, 1ull << x);
  PathScan out;
  out.spectrum.lengths = lengths_from_mask(e.seen_lengths);
  for (int len : out.spectrum.lengths)
    out.representatives.push_back(std::move(e.reps[static_cast<size_t>(len)]));
  return out;
}

LengthSpectrum path_length_spectrum(const Graph& g, Vertex x, Vertex y, const Budget& budget) {
  g.require_vertex(x);
  g.require_vertex(y);
  if (x == y) throw std::invalid_argument("path scan endpoints must differ");
  PathEnumerator e(g, y, budget, false);
  e.stack.push_back(x);
  e.dfs(x, 1ull << x);
  return LengthSpectrum{lengths_from_mask(e.seen_lengths)};
}

CycleScan scan_cycles(const Graph& g, const Budget& budget) {
  CycleEnumerator e(g, budget, true);
  for (Vertex root = 0; root < g.order(); ++root) {
    e.stack.assign(1, root);
    e.dfs(root, root, 1ull << root);
  }
  CycleScan out;
  out.spectrum.lengths = lengths_from_mask(e.seen_lengths);
  for (int len : out.spectrum.lengths)
    out.representatives.push_back(std::move(e.reps[static_cast<size_t>(len)]));
  return out;
}

LengthSpectrum cycle_length_spectrum(const Graph& g, const Budget& budget) {
  CycleEnumerator e(g, budget, false);
  for (Vertex root = 0; root < g.order(); ++root) {
    e.stack.assign(1, root);
    e.dfs(root, root, 1ull << root);
  }
  return LengthSpectrum{lengths_from_mask(e.seen_lengths)};
}

int max_admissible_run(const LengthSpectrum& spectrum, int min_start) {
  int best = 0;
  for (int gap = 1; gap <= 2; ++gap)
    for (int start : spectrum.lengths) {
      if (start < min_start) continue;
      int count = 0;
      int cur = start;
      while (spectrum.contains(cur)) {
        ++count;
        cur += gap;
      }
      best = std::max(best, count);
    }
  return best;
}

bool residue_coverage(const LengthSpectrum& spectrum, int k, Parity parity) {
  if (k < 1) throw std::invalid_argument("residue_coverage: k must be positive");
  std::vector<char> hit(static_cast<size_t>(k), 0);
  for (int len : spectrum.lengths) hit[static_cast<size_t>(len % k)] = 1;
  for (int r = 0; r < k; ++r) {
    bool required = parity == Parity::all || k % 2 == 1 || r % 2 == 0;
    if (required && !hit[static_cast<size_t>(r)]) return false;
  }
  return true;
}

bool check_fact3(const Graph& g, Vertex x, Vertex y, const Core& core, int k,
                 const Budget& budget) {
  if (k < 1) throw std::invalid_argument("check_fact3: k must be positive");
  require_core_for(g, core, x, y);

  std::vector<Vertex> keep;
  auto hv = core.vertices();
  for (Vertex v = 0; v < g.order(); ++v)
    if (!std::binary_search(hv.begin(), hv.end(), v)) keep.push_back(v);
  auto rest = induced(g, keep);
  Vertex y_local = rest.to_sub[static_cast<size_t>(y)];
  std::vector<Vertex> comp_local = component_of(rest.graph, y_local);
  std::vector<Vertex> comp;
  comp.reserve(comp_local.size());
  for (Vertex v : comp_local) comp.push_back(rest.to_host[static_cast<size_t>(v)]);

  auto nc = neighborhood_of_set(g, comp);
  bool touches_t = false;
  for (Vertex v : nc)
    if (std::binary_search(core.t_set.begin(), core.t_set.end(), v)) touches_t = true;

  bool triggered = core.ell >= k || (core.ell >= k - 1 && touches_t);
  if (!triggered) return true;
  return max_admissible_run(path_length_spectrum(g, x, y, budget)) >= k;
}

}  // namespace admissible
