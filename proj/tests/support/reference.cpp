#include "reference.hpp"

#include <algorithm>
#include <functional>

namespace admissible::ref {

namespace {

void path_dfs(const Graph& g, Vertex at, Vertex y, int len, std::vector<bool>& used,
              std::set<int>& out) {
  if (at == y) {
    out.insert(len);
    return;
  }
  for (Vertex w : g.neighbors(at)) {
    if (used[w]) continue;
    used[w] = true;
    path_dfs(g, w, y, len + 1, used, out);
    used[w] = false;
  }
}

// cycles through s using only vertices >= s beyond the start
void cycle_dfs(const Graph& g, Vertex s, Vertex at, int len, std::vector<bool>& used,
               std::set<int>& out) {
  for (Vertex w : g.neighbors(at)) {
    if (w == s && len >= 3) out.insert(len);
    if (w <= s || used[w]) continue;
    used[w] = true;
    cycle_dfs(g, s, w, len + 1, used, out);
    used[w] = false;
  }
}

int component_count(const Graph& g, Vertex skip) {
  const int n = g.order();
  std::vector<bool> seen(n, false);
  if (skip >= 0) seen[skip] = true;
  int parts = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (seen[v]) continue;
    ++parts;
    std::vector<Vertex> stack{v};
    seen[v] = true;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u))
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
  }
  return parts;
}

bool all_adjacent(const Graph& g, Vertex v, const std::vector<Vertex>& set) {
  for (Vertex w : set)
    if (!g.has_edge(v, w)) return false;
  return true;
}

bool is_clique(const Graph& g, const std::vector<Vertex>& set) {
  for (size_t i = 0; i < set.size(); ++i)
    for (size_t j = i + 1; j < set.size(); ++j)
      if (!g.has_edge(set[i], set[j])) return false;
  return true;
}

bool is_independent(const Graph& g, const std::vector<Vertex>& set) {
  for (size_t i = 0; i < set.size(); ++i)
    for (size_t j = i + 1; j < set.size(); ++j)
      if (g.has_edge(set[i], set[j])) return false;
  return true;
}

bool join_complete(const Graph& g, const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  for (Vertex u : a)
    if (!all_adjacent(g, u, b)) return false;
  return true;
}

std::vector<std::vector<Vertex>> subsets_of(const std::vector<Vertex>& pool) {
  std::vector<std::vector<Vertex>> out;
  const size_t n = pool.size();
  for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
    std::vector<Vertex> s;
    for (size_t i = 0; i < n; ++i)
      if (mask >> i & 1) s.push_back(pool[i]);
    out.push_back(std::move(s));
  }
  return out;
}

// preference order of the choice rule; true when a beats b
bool core_better(const Core& a, const Core& b) {
  if (a.type != b.type) return a.type < b.type;
  if (a.type == 3) {
    if (a.s_set.size() != b.s_set.size()) return a.s_set.size() > b.s_set.size();
    if (a.t_set.size() != b.t_set.size()) return a.t_set.size() > b.t_set.size();
  } else {
    if (a.t_set.size() != b.t_set.size()) return a.t_set.size() > b.t_set.size();
  }
  if (a.s_set != b.s_set) return a.s_set < b.s_set;
  return a.t_set < b.t_set;
}

}  // namespace

std::set<int> path_lengths(const Graph& g, Vertex x, Vertex y) {
  std::set<int> out;
  if (!g.has_vertex(x) || !g.has_vertex(y) || x == y) return out;
  std::vector<bool> used(g.order(), false);
  used[x] = true;
  path_dfs(g, x, y, 0, used, out);
  return out;
}

std::set<int> cycle_lengths(const Graph& g) {
  std::set<int> out;
  std::vector<bool> used(g.order(), false);
  for (Vertex s = 0; s < g.order(); ++s) {
    used[s] = true;
    cycle_dfs(g, s, s, 1, used, out);
    used[s] = false;
  }
  return out;
}

bool connected(const Graph& g) {
  if (g.order() == 0) return false;
  return component_count(g, -1) == 1;
}

std::vector<Vertex> cut_vertices(const Graph& g) {
  std::vector<Vertex> out;
  const int base = component_count(g, -1);
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.order() > 1 && component_count(g, v) > base) out.push_back(v);
  return out;
}

bool two_connected(const Graph& g) {
  return g.order() >= 3 && connected(g) && cut_vertices(g).empty();
}

bool bipartite(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(n, -1);
  for (Vertex s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::vector<Vertex> stack{s};
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u)) {
        if (color[w] == -1) {
          color[w] = 1 - color[u];
          stack.push_back(w);
        } else if (color[w] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool core_valid(const Graph& g, const Core& core, Vertex x, Vertex y) {
  if (core.x != x) return false;
  for (Vertex v : core.vertices())
    if (v == y || !g.has_vertex(v)) return false;
  const auto& s = core.s_set;
  const auto& t = core.t_set;
  for (Vertex v : s)
    if (v == x) return false;
  for (Vertex v : t)
    if (v == x) return false;
  std::vector<Vertex> both(s);
  both.insert(both.end(), t.begin(), t.end());
  std::sort(both.begin(), both.end());
  if (std::adjacent_find(both.begin(), both.end()) != both.end()) return false;

  switch (core.type) {
    case 1:
      return s.empty() && static_cast<int>(t.size()) == core.ell + 1 && core.ell >= 1 &&
             is_clique(g, t) && all_adjacent(g, x, t);
    case 2:
      return s.size() == 2 && static_cast<int>(t.size()) == core.ell && core.ell >= 2 &&
             is_independent(g, s) && is_clique(g, t) && all_adjacent(g, x, s) &&
             join_complete(g, s, t);
    case 3:
      return static_cast<int>(s.size()) == core.ell && core.ell >= 0 &&
             static_cast<int>(t.size()) >= std::max(core.ell + 1, 2) &&
             is_independent(g, s) && is_independent(g, t) && all_adjacent(g, x, t) &&
             join_complete(g, s, t);
    default:
      return false;
  }
}

std::optional<Core> best_core(const Graph& g, Vertex x, Vertex y) {
  std::vector<Vertex> pool;
  for (Vertex v = 0; v < g.order(); ++v)
    if (v != x && v != y) pool.push_back(v);
  auto subsets = subsets_of(pool);

  std::optional<Core> best;
  auto offer = [&](Core c) {
    if (!core_valid(g, c, x, y)) return;
    if (!best || core_better(c, *best)) best = std::move(c);
  };

  for (const auto& t : subsets) {
    if (t.size() < 2) continue;
    offer(Core{1, static_cast<int>(t.size()) - 1, x, {}, t, false, std::nullopt});
  }
  for (const auto& s : subsets) {
    if (s.size() != 2) continue;
    for (const auto& t : subsets) {
      if (t.size() < 2) continue;
      offer(Core{2, static_cast<int>(t.size()), x, s, t, false, std::nullopt});
    }
  }
  for (const auto& s : subsets)
    for (const auto& t : subsets) {
      if (t.size() < 2) continue;
      offer(Core{3, static_cast<int>(s.size()), x, s, t, false, std::nullopt});
    }
  return best;
}

Graph labeled_graph(int n, std::uint64_t mask) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  int bit = 0;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j, ++bit)
      if (mask >> bit & 1) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

}  // namespace admissible::ref
