#include "admissible/cores.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace admissible {

namespace {

using Mask = std::uint64_t;

int popcount(Mask m) { return std::popcount(m); }

struct MaskGraph {
  int n = 0;
  std::vector<Mask> adj;

  explicit MaskGraph(const Graph& g) : n(g.order()), adj(static_cast<size_t>(g.order()), 0) {
    if (g.order() > 64)
      throw std::invalid_argument("core search supports at most 64 vertices");
    for (Vertex v = 0; v < g.order(); ++v)
      for (Vertex w : g.neighbors(v)) adj[static_cast<size_t>(v)] |= Mask{1} << w;
  }

  // Complement adjacency restricted to the graph's vertex range.
  std::vector<Mask> complement() const {
    Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
    std::vector<Mask> out(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v)
      out[static_cast<size_t>(v)] = all & ~adj[static_cast<size_t>(v)] & ~(Mask{1} << v);
    return out;
  }
};

// Largest clique size inside cand; least-vertex branching with a popcount
// bound.
int clique_max_size_go(const std::vector<Mask>& adj, Mask cand, int size, int best) {
  while (cand) {
    if (size + popcount(cand) <= best) return best;
    int v = std::countr_zero(cand);
    cand &= cand - 1;
    best = std::max(best,
                    clique_max_size_go(adj, cand & adj[static_cast<size_t>(v)], size + 1, best));
  }
  return std::max(best, size);
}

int clique_max_size(const std::vector<Mask>& adj, Mask cand) {
  return clique_max_size_go(adj, cand, 0, 0);
}

// First clique of exactly the wanted size in ascending-sequence order; the
// first hit is the lexicographically smallest one.
bool clique_lex_first_go(const std::vector<Mask>& adj, Mask cand, int want,
                         std::vector<Vertex>& out) {
  if (static_cast<int>(out.size()) == want) return true;
  if (static_cast<int>(out.size()) + popcount(cand) < want) return false;
  Mask rest = cand;
  while (rest) {
    int v = std::countr_zero(rest);
    rest &= rest - 1;
    out.push_back(v);
    if (clique_lex_first_go(adj, rest & adj[static_cast<size_t>(v)], want, out)) return true;
    out.pop_back();
  }
  return false;
}

std::vector<Vertex> clique_lex_first(const std::vector<Mask>& adj, Mask cand, int want) {
  std::vector<Vertex> out;
  clique_lex_first_go(adj, cand, want, out);
  return out;
}

std::vector<Vertex> mask_to_vec(Mask m) {
  std::vector<Vertex> out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

// Search for the type-3 layer pair: S independent, T independent inside
// W(S) = N(x) \ {y} cut to the common neighborhood of S, |T| >= |S| + 1.
struct Type3Search {
  const MaskGraph& mg;
  std::vector<Mask> comp;  // complement adjacency, for independent sets
  Mask w0;
  Mask pool;

  Type3Search(const MaskGraph& graph, Mask w0_mask, Mask pool_mask)
      : mg(graph), comp(graph.complement()), w0(w0_mask), pool(pool_mask) {}

  int alpha(Mask cand) const { return clique_max_size(comp, cand); }

  int best_l = -1;

  void size_pass(Mask cand, Mask w, int size) {
    best_l = std::max(best_l, size);
    while (cand) {
      int v = std::countr_zero(cand);
      cand &= cand - 1;
      Mask w2 = w & mg.adj[static_cast<size_t>(v)];
      if (popcount(w2) < size + 2) continue;
      if (alpha(w2) < size + 2) continue;
      size_pass(cand & ~mg.adj[static_cast<size_t>(v)], w2, size + 1);
    }
  }

  int best_t = -1;
  std::vector<Vertex> best_s;

  void collect_pass(Mask cand, Mask w, std::vector<Vertex>& s, int want) {
    if (static_cast<int>(s.size()) == want) {
      int a = alpha(w);
      if (a >= std::max(want + 1, 2) && a > best_t) {
        best_t = a;
        best_s = s;  // ascending enumeration: first S at each alpha is lex min
      }
      return;
    }
    while (cand) {
      if (static_cast<int>(s.size()) + popcount(cand) < want) return;
      int v = std::countr_zero(cand);
      cand &= cand - 1;
      Mask w2 = w & mg.adj[static_cast<size_t>(v)];
      if (popcount(w2) < want + 1 || alpha(w2) < want + 1) continue;
      s.push_back(v);
      collect_pass(cand & ~mg.adj[static_cast<size_t>(v)], w2, s, want);
      s.pop_back();
    }
  }
};

}  // namespace

std::vector<Vertex> Core::vertices() const {
  std::vector<Vertex> out;
  out.push_back(x);
  out.insert(out.end(), s_set.begin(), s_set.end());
  out.insert(out.end(), t_set.begin(), t_set.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool core_invariants_ok(const Graph& g, const Core& core) {
  if (!g.has_vertex(core.x)) return false;
  auto sorted_unique = [](const std::vector<Vertex>& v) {
    return std::is_sorted(v.begin(), v.end()) &&
           std::adjacent_find(v.begin(), v.end()) == v.end();
  };
  if (!sorted_unique(core.s_set) || !sorted_unique(core.t_set)) return false;
  for (Vertex v : core.s_set)
    if (!g.has_vertex(v) || v == core.x) return false;
  for (Vertex v : core.t_set) {
    if (!g.has_vertex(v) || v == core.x) return false;
    if (std::binary_search(core.s_set.begin(), core.s_set.end(), v)) return false;
  }
  if (core.flat && core.type != 3) return false;

  auto clique = [&](const std::vector<Vertex>& set) {
    for (size_t i = 0; i < set.size(); ++i)
      for (size_t j = i + 1; j < set.size(); ++j)
        if (!g.has_edge(set[i], set[j])) return false;
    return true;
  };
  auto independent = [&](const std::vector<Vertex>& set) {
    for (size_t i = 0; i < set.size(); ++i)
      for (size_t j = i + 1; j < set.size(); ++j)
        if (g.has_edge(set[i], set[j])) return false;
    return true;
  };
  auto joined = [&](Vertex v, const std::vector<Vertex>& set) {
    for (Vertex w : set)
      if (!g.has_edge(v, w)) return false;
    return true;
  };
  auto joined_all = [&](const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    for (Vertex v : a)
      if (!joined(v, b)) return false;
    return true;
  };

  switch (core.type) {
    case 1:
      return core.ell >= 1 && core.s_set.empty() &&
             static_cast<int>(core.t_set.size()) == core.ell + 1 && clique(core.t_set) &&
             joined(core.x, core.t_set);
    case 2:
      return core.ell >= 2 && core.s_set.size() == 2 && independent(core.s_set) &&
             static_cast<int>(core.t_set.size()) == core.ell && clique(core.t_set) &&
             joined(core.x, core.s_set) && joined_all(core.s_set, core.t_set);
    case 3:
      return core.ell == static_cast<int>(core.s_set.size()) &&
             static_cast<int>(core.t_set.size()) >= std::max(core.ell + 1, 2) &&
             independent(core.s_set) && independent(core.t_set) &&
             joined(core.x, core.t_set) && joined_all(core.t_set, core.s_set);
    default:
      return false;
  }
}

void require_core_for(const Graph& g, const Core& core, Vertex x, Vertex y) {
  g.require_vertex(x);
  g.require_vertex(y);
  if (x == y) throw std::invalid_argument("core roots x and y must differ");
  if (core.x != x) throw std::invalid_argument("core apex does not match x");
  if (!core_invariants_ok(g, core)) throw std::invalid_argument("core invariants violated");
  auto hv = core.vertices();
  if (std::binary_search(hv.begin(), hv.end(), y))
    throw std::invalid_argument("core must avoid y");
}

std::optional<Core> find_core(const Graph& g, Vertex x, Vertex y) {
  g.require_vertex(x);
  g.require_vertex(y);
  if (x == y) throw std::invalid_argument("find_core roots must differ");
  MaskGraph mg(g);

  Mask w0 = mg.adj[static_cast<size_t>(x)] & ~(Mask{1} << y);

  // Type 1: largest clique in N(x) \ {y}, at least an edge.
  {
    int m = clique_max_size(mg.adj, w0);
    if (m >= 2) {
      Core core;
      core.type = 1;
      core.ell = m - 1;
      core.x = x;
      core.t_set = clique_lex_first(mg.adj, w0, m);
      return core;
    }
  }

  // Type 2: nonadjacent pair in N(x) \ {y} plus the largest clique in its
  // common neighborhood (excluding x and y).
  {
    auto w0_vec = mask_to_vec(w0);
    int best = 1;
    std::pair<Vertex, Vertex> best_pair{-1, -1};
    Mask best_u = 0;
    for (size_t i = 0; i < w0_vec.size(); ++i)
      for (size_t j = i + 1; j < w0_vec.size(); ++j) {
        Vertex s1 = w0_vec[i], s2 = w0_vec[j];
        if (g.has_edge(s1, s2)) continue;
        Mask u = mg.adj[static_cast<size_t>(s1)] & mg.adj[static_cast<size_t>(s2)] &
                 ~(Mask{1} << x) & ~(Mask{1} << y);
        int m = clique_max_size(mg.adj, u);
        if (m > best) {  // pairs scanned in lex order, so first max wins ties
          best = m;
          best_pair = {s1, s2};
          best_u = u;
        }
      }
    if (best >= 2) {
      Core core;
      core.type = 2;
      core.ell = best;
      core.x = x;
      core.s_set = {best_pair.first, best_pair.second};
      core.t_set = clique_lex_first(mg.adj, best_u, best);
      return core;
    }
  }

  // Type 3: independent layers.
  {
    Mask all = g.order() == 64 ? ~Mask{0} : (Mask{1} << g.order()) - 1;
    Mask pool = all & ~(Mask{1} << x) & ~(Mask{1} << y);
    Type3Search search(mg, w0, pool);
    if (search.alpha(w0) >= 2) {
      search.size_pass(pool, w0, 0);
      std::vector<Vertex> s;
      search.collect_pass(pool, w0, s, search.best_l);
      Core core;
      core.type = 3;
      core.ell = search.best_l;
      core.x = x;
      core.s_set = search.best_s;
      Mask w = w0;
      for (Vertex v : core.s_set) w &= mg.adj[static_cast<size_t>(v)];
      core.t_set = clique_lex_first(search.comp, w, search.best_t);
      return core;
    }
  }

  return std::nullopt;
}

Core apply_condition_t(const Graph& g, const Core& core, Vertex y, std::optional<Vertex> z) {
  if (core.type != 3) throw std::invalid_argument("condition (T) applies to type-3 cores only");
  require_core_for(g, core, core.x, y);
  if (z) g.require_vertex(*z);
  if (core.flat) return core;

  if (static_cast<int>(core.t_set.size()) < 3) return core;

  // N(x) and N(y) must both be exactly T.
  auto equals_t = [&](Vertex v) {
    const auto& nb = g.neighbors(v);
    return nb == core.t_set;
  };
  if (!equals_t(core.x) || !equals_t(y)) return core;

  auto hv = core.vertices();
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!std::binary_search(hv.begin(), hv.end(), v)) keep.push_back(v);
  auto rest = induced(g, keep);

  Vertex y_local = rest.to_sub[static_cast<size_t>(y)];
  auto comps_local = components(rest.graph);

  // y must be alone in its component.
  for (const auto& comp : comps_local)
    if (std::binary_search(comp.begin(), comp.end(), y_local) && comp.size() != 1) return core;

  std::optional<Vertex> t0;
  for (const auto& comp : comps_local) {
    if (comp.size() == 1 && comp[0] == y_local) continue;
    std::vector<Vertex> host;
    host.reserve(comp.size());
    for (Vertex v : comp) host.push_back(rest.to_host[static_cast<size_t>(v)]);
    bool nonspared = false;
    for (Vertex v : host)
      if (!z || v != *z) nonspared = true;
    if (!nonspared) continue;
    auto nb = neighborhood_of_set(g, host);
    for (Vertex v : nb)
      if (std::binary_search(core.t_set.begin(), core.t_set.end(), v)) {
        t0 = v;  // components scanned by smallest vertex; first hit is minimal in it
        break;
      }
    if (t0) break;
  }
  if (!t0) return core;

  Core out = core;
  out.flat = true;
  out.t0 = t0;
  out.t_set.erase(std::find(out.t_set.begin(), out.t_set.end(), *t0));
  if (static_cast<int>(core.t_set.size()) == static_cast<int>(core.s_set.size()) + 1) {
    out.s_set.erase(out.s_set.begin());  // drop the smallest S-vertex
    out.ell -= 1;
  }
  return out;
}

std::vector<OrientedPath> paths_x_to_s(const Core& core, Vertex s,
                                       std::optional<Vertex> forbidden_t) {
  if (core.type == 1) throw std::invalid_argument("type-1 cores have no S side");
  if (!std::binary_search(core.s_set.begin(), core.s_set.end(), s))
    throw std::invalid_argument("s is not in the core's S");

  std::vector<OrientedPath> out;
  if (core.type == 2) {
    if (forbidden_t) throw std::invalid_argument("forbidden T-vertex applies to type 3 only");
    Vertex s_other = core.s_set[0] == s ? core.s_set[1] : core.s_set[0];
    for (int j = 1; j <= core.ell; ++j) {
      OrientedPath p;
      p.vertices.push_back(core.x);
      p.vertices.push_back(s_other);
      for (int i = 0; i < j; ++i) p.vertices.push_back(core.t_set[static_cast<size_t>(i)]);
      p.vertices.push_back(s);
      out.push_back(std::move(p));  // length j + 2
    }
    return out;
  }

  // type 3
  if (!forbidden_t)
    throw std::invalid_argument("type-3 S-paths need the forbidden T-vertex");
  if (!std::binary_search(core.t_set.begin(), core.t_set.end(), *forbidden_t))
    throw std::invalid_argument("forbidden vertex is not in T");
  std::vector<Vertex> ts;
  for (Vertex t : core.t_set)
    if (t != *forbidden_t) ts.push_back(t);
  std::vector<Vertex> ss;
  for (Vertex v : core.s_set)
    if (v != s) ss.push_back(v);
  for (int j = 1; j <= core.ell; ++j) {
    OrientedPath p;
    p.vertices.push_back(core.x);
    for (int i = 0; i < j; ++i) {
      p.vertices.push_back(ts[static_cast<size_t>(i)]);
      if (i + 1 < j) p.vertices.push_back(ss[static_cast<size_t>(i)]);
    }
    p.vertices.push_back(s);
    out.push_back(std::move(p));  // length 2 * j
  }
  return out;
}

SemiAdmissibleFamily paths_x_to_t(const Core& core, Vertex t,
                                  std::optional<Vertex> forbidden_t) {
  if (!std::binary_search(core.t_set.begin(), core.t_set.end(), t))
    throw std::invalid_argument("t is not in the core's T");
  if (forbidden_t) {
    if (core.type != 3)
      throw std::invalid_argument("forbidden T-vertex applies to type 3 only");
    if (*forbidden_t == t) throw std::invalid_argument("forbidden vertex equals t");
    if (!std::binary_search(core.t_set.begin(), core.t_set.end(), *forbidden_t))
      throw std::invalid_argument("forbidden vertex is not in T");
    if (static_cast<int>(core.t_set.size()) < core.ell + 2)
      throw std::invalid_argument("avoiding a T-vertex needs |T| >= ell + 2");
  }

  std::vector<Vertex> ts;
  for (Vertex v : core.t_set)
    if (v != t && (!forbidden_t || v != *forbidden_t)) ts.push_back(v);

  SemiAdmissibleFamily fam;
  fam.shared_source = core.x;

  if (core.type == 1) {
    for (int j = 1; j <= core.ell + 1; ++j) {
      OrientedPath p;
      p.vertices.push_back(core.x);
      for (int i = 0; i < j - 1; ++i) p.vertices.push_back(ts[static_cast<size_t>(i)]);
      p.vertices.push_back(t);
      fam.paths.push_back(std::move(p));  // length j
    }
  } else if (core.type == 2) {
    Vertex s1 = core.s_set[0], s2 = core.s_set[1];
    for (int len = 2; len <= core.ell + 1; ++len) {
      OrientedPath p;
      p.vertices.push_back(core.x);
      p.vertices.push_back(s1);
      for (int i = 0; i < len - 2; ++i) p.vertices.push_back(ts[static_cast<size_t>(i)]);
      p.vertices.push_back(t);
      fam.paths.push_back(std::move(p));
    }
    OrientedPath longest;  // all of T \ {t}, then the second S-vertex
    longest.vertices.push_back(core.x);
    longest.vertices.push_back(s1);
    for (Vertex v : ts) longest.vertices.push_back(v);
    longest.vertices.push_back(s2);
    longest.vertices.push_back(t);
    fam.paths.push_back(std::move(longest));  // length ell + 2
  } else if (core.type == 3) {
    for (int j = 0; j <= core.ell; ++j) {
      OrientedPath p;
      p.vertices.push_back(core.x);
      for (int i = 0; i < j; ++i) {
        p.vertices.push_back(ts[static_cast<size_t>(i)]);
        p.vertices.push_back(core.s_set[static_cast<size_t>(i)]);
      }
      p.vertices.push_back(t);
      fam.paths.push_back(std::move(p));  // length 2 * j + 1
    }
  } else {
    throw std::invalid_argument("unknown core type");
  }

  fam.targets.assign(fam.paths.size(), t);
  return fam;
}

}  // namespace admissible
