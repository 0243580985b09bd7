#include "admissible/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <unordered_set>

namespace admissible {

Graph::Graph(int n) {
  if (n < 0) throw std::invalid_argument("graph order must be nonnegative");
  adj_.resize(static_cast<size_t>(n));
}

Graph Graph::from_edges(int n, std::span<const std::pair<Vertex, Vertex>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    g.require_vertex(u);
    g.require_vertex(v);
    if (u == v) throw std::invalid_argument("self loop rejected");
    g.adj_[static_cast<size_t>(u)].push_back(v);
    g.adj_[static_cast<size_t>(v)].push_back(u);
  }
  int m = 0;
  for (auto& nb : g.adj_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    m += static_cast<int>(nb.size());
  }
  g.edge_count_ = m / 2;
  return g;
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  return from_edges(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size()));
}

void Graph::require_vertex(Vertex v) const {
  if (!has_vertex(v)) throw std::out_of_range("vertex index out of range");
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
  require_vertex(v);
  return adj_[static_cast<size_t>(v)];
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  require_vertex(u);
  require_vertex(v);
  const auto& nb = adj_[static_cast<size_t>(u)];
  return std::binary_search(nb.begin(), nb.end(), v);
}

Graph Graph::with_edge(Vertex u, Vertex v) const {
  require_vertex(u);
  require_vertex(v);
  if (u == v) throw std::invalid_argument("self loop rejected");
  if (has_edge(u, v)) return *this;
  Graph g = *this;
  auto& nu = g.adj_[static_cast<size_t>(u)];
  nu.insert(std::lower_bound(nu.begin(), nu.end(), v), v);
  auto& nv = g.adj_[static_cast<size_t>(v)];
  nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
  g.edge_count_ += 1;
  return g;
}

Graph Graph::without_edge(Vertex u, Vertex v) const {
  if (!has_edge(u, v)) return *this;
  Graph g = *this;
  auto& nu = g.adj_[static_cast<size_t>(u)];
  nu.erase(std::lower_bound(nu.begin(), nu.end(), v));
  auto& nv = g.adj_[static_cast<size_t>(v)];
  nv.erase(std::lower_bound(nv.begin(), nv.end(), u));
  g.edge_count_ -= 1;
  return g;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(static_cast<size_t>(edge_count_));
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : adj_[static_cast<size_t>(u)])
      if (u < v) out.emplace_back(u, v);
  return out;
}

OrientedPath OrientedPath::reversed() const {
  OrientedPath p = *this;
  std::reverse(p.vertices.begin(), p.vertices.end());
  return p;
}

bool OrientedPath::valid_in(const Graph& g) const {
  if (vertices.empty()) return false;
  std::unordered_set<Vertex> seen;
  for (Vertex v : vertices) {
    if (!g.has_vertex(v)) return false;
    if (!seen.insert(v).second) return false;
  }
  for (size_t i = 0; i + 1 < vertices.size(); ++i)
    if (!g.has_edge(vertices[i], vertices[i + 1])) return false;
  return true;
}

bool BlockDecomposition::is_cut_vertex(Vertex v) const {
  return std::binary_search(cut_vertices.begin(), cut_vertices.end(), v);
}

std::vector<int> BlockDecomposition::end_blocks() const {
  std::vector<int> out;
  for (int b = 0; b < static_cast<int>(blocks.size()); ++b)
    if (is_end_block(b)) out.push_back(b);
  return out;
}

int BlockDecomposition::block_containing(Vertex v) const {
  for (int b = 0; b < static_cast<int>(blocks.size()); ++b)
    if (std::binary_search(blocks[b].begin(), blocks[b].end(), v)) return b;
  return -1;
}

int degree(const Graph& g, Vertex v) {
  return static_cast<int>(g.neighbors(v).size());
}

std::vector<Vertex> neighborhood_of_set(const Graph& g, std::span<const Vertex> s) {
  std::vector<char> in_s(static_cast<size_t>(g.order()), 0);
  for (Vertex v : s) {
    g.require_vertex(v);
    in_s[static_cast<size_t>(v)] = 1;
  }
  std::vector<char> hit(static_cast<size_t>(g.order()), 0);
  for (Vertex v : s)
    for (Vertex w : g.neighbors(v))
      if (!in_s[static_cast<size_t>(w)]) hit[static_cast<size_t>(w)] = 1;
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (hit[static_cast<size_t>(v)]) out.push_back(v);
  return out;
}

namespace {

// Iterative lowpoint DFS collecting biconnected components off an edge stack.
struct BlockBuilder {
  const Graph& g;
  std::vector<int> disc, low;
  std::vector<std::pair<Vertex, Vertex>> edge_stack;
  std::vector<std::vector<Vertex>> blocks;
  std::vector<char> cut;
  int timer = 0;

  explicit BlockBuilder(const Graph& graph)
      : g(graph),
        disc(static_cast<size_t>(graph.order()), -1),
        low(static_cast<size_t>(graph.order()), 0),
        cut(static_cast<size_t>(graph.order()), 0) {}

  void pop_block(Vertex u, Vertex w) {
    std::vector<Vertex> verts;
    std::pair<Vertex, Vertex> e;
    do {
      e = edge_stack.back();
      edge_stack.pop_back();
      verts.push_back(e.first);
      verts.push_back(e.second);
    } while (e != std::make_pair(u, w));
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    blocks.push_back(std::move(verts));
  }

  void run(Vertex root) {
    struct Frame {
      Vertex v;
      Vertex parent;
      size_t next;
    };
    std::vector<Frame> stack;
    disc[static_cast<size_t>(root)] = low[static_cast<size_t>(root)] = timer++;
    stack.push_back({root, -1, 0});
    int root_children = 0;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& nb = g.neighbors(f.v);
      if (f.next < nb.size()) {
        Vertex w = nb[f.next++];
        if (disc[static_cast<size_t>(w)] == -1) {
          if (f.v == root) ++root_children;
          edge_stack.emplace_back(f.v, w);
          disc[static_cast<size_t>(w)] = low[static_cast<size_t>(w)] = timer++;
          stack.push_back({w, f.v, 0});
        } else if (w != f.parent && disc[static_cast<size_t>(w)] < disc[static_cast<size_t>(f.v)]) {
          edge_stack.emplace_back(f.v, w);
          low[static_cast<size_t>(f.v)] =
              std::min(low[static_cast<size_t>(f.v)], disc[static_cast<size_t>(w)]);
        }
      } else {
        Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          Vertex u = stack.back().v;
          low[static_cast<size_t>(u)] =
              std::min(low[static_cast<size_t>(u)], low[static_cast<size_t>(done.v)]);
          if (low[static_cast<size_t>(done.v)] >= disc[static_cast<size_t>(u)]) {
            if (u != root) cut[static_cast<size_t>(u)] = 1;
            pop_block(u, done.v);
          }
        }
      }
    }
    if (root_children >= 2) cut[static_cast<size_t>(root)] = 1;
  }
};

}  // namespace

BlockDecomposition blocks(const Graph& g) {
  BlockBuilder b(g);
  for (Vertex v = 0; v < g.order(); ++v)
    if (b.disc[static_cast<size_t>(v)] == -1) {
      b.run(v);
      if (g.neighbors(v).empty()) b.blocks.push_back({v});  // isolated vertex
    }

  BlockDecomposition out;
  out.blocks = std::move(b.blocks);
  std::sort(out.blocks.begin(), out.blocks.end());
  for (Vertex v = 0; v < g.order(); ++v)
    if (b.cut[static_cast<size_t>(v)]) out.cut_vertices.push_back(v);

  out.block_cuts.resize(out.blocks.size());
  out.blocks_of_cut.resize(out.cut_vertices.size());
  for (int i = 0; i < static_cast<int>(out.blocks.size()); ++i)
    for (int c = 0; c < static_cast<int>(out.cut_vertices.size()); ++c)
      if (std::binary_search(out.blocks[i].begin(), out.blocks[i].end(), out.cut_vertices[c])) {
        out.block_cuts[i].push_back(out.cut_vertices[c]);
        out.blocks_of_cut[c].push_back(i);
      }
  return out;
}

ContractionResult contract_set(const Graph& g, std::span<const Vertex> s) {
  if (s.empty()) throw std::invalid_argument("contract_set: empty set");
  std::vector<char> in_s(static_cast<size_t>(g.order()), 0);
  int s_count = 0;
  for (Vertex v : s) {
    g.require_vertex(v);
    if (!in_s[static_cast<size_t>(v)]) {
      in_s[static_cast<size_t>(v)] = 1;
      ++s_count;
    }
  }
  if (s_count == g.order()) throw std::invalid_argument("contract_set: set covers the whole graph");

  ContractionResult res;
  res.vertex_map.assign(static_cast<size_t>(g.order()), -1);
  int next = 0;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!in_s[static_cast<size_t>(v)]) res.vertex_map[static_cast<size_t>(v)] = next++;
  res.merged = next;
  for (Vertex v = 0; v < g.order(); ++v)
    if (in_s[static_cast<size_t>(v)]) res.vertex_map[static_cast<size_t>(v)] = res.merged;

  std::vector<std::pair<Vertex, Vertex>> edges;
  for (auto [u, v] : g.edges()) {
    Vertex a = res.vertex_map[static_cast<size_t>(u)];
    Vertex b = res.vertex_map[static_cast<size_t>(v)];
    if (a != b) edges.emplace_back(a, b);
  }
  res.graph = Graph::from_edges(next + 1, edges);
  return res;
}

Graph build_join(const std::vector<std::vector<Vertex>>& parts,
                 const std::vector<PartKind>& kinds) {
  if (parts.size() != kinds.size())
    throw std::invalid_argument("build_join: parts and kinds must align");
  std::vector<std::vector<Vertex>> live = parts;
  while (!live.empty() && live.back().empty()) live.pop_back();
  Vertex max_v = -1;
  std::unordered_set<Vertex> seen;
  for (const auto& part : live) {
    if (part.empty()) throw std::invalid_argument("build_join: only a trailing part may be empty");
    for (Vertex v : part) {
      if (v < 0) throw std::out_of_range("build_join: negative vertex");
      if (!seen.insert(v).second) throw std::invalid_argument("build_join: parts overlap");
      max_v = std::max(max_v, v);
    }
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (size_t i = 0; i < live.size(); ++i) {
    if (kinds[i] == PartKind::clique)
      for (size_t a = 0; a < live[i].size(); ++a)
        for (size_t b = a + 1; b < live[i].size(); ++b)
          edges.emplace_back(live[i][a], live[i][b]);
    if (i + 1 < live.size())
      for (Vertex u : live[i])
        for (Vertex v : live[i + 1]) edges.emplace_back(u, v);
  }
  return Graph::from_edges(max_v + 1, edges);
}

std::optional<int> distance(const Graph& g, Vertex u, Vertex v) {
  g.require_vertex(u);
  g.require_vertex(v);
  if (u == v) return 0;
  std::vector<int> dist(static_cast<size_t>(g.order()), -1);
  std::queue<Vertex> q;
  dist[static_cast<size_t>(u)] = 0;
  q.push(u);
  while (!q.empty()) {
    Vertex w = q.front();
    q.pop();
    for (Vertex t : g.neighbors(w))
      if (dist[static_cast<size_t>(t)] == -1) {
        dist[static_cast<size_t>(t)] = dist[static_cast<size_t>(w)] + 1;
        if (t == v) return dist[static_cast<size_t>(t)];
        q.push(t);
      }
  }
  return std::nullopt;
}

InducedSubgraph induced(const Graph& g, std::span<const Vertex> s) {
  InducedSubgraph res;
  res.to_sub.assign(static_cast<size_t>(g.order()), -1);
  for (Vertex v : s) {
    g.require_vertex(v);
    if (res.to_sub[static_cast<size_t>(v)] != -1) continue;
    res.to_sub[static_cast<size_t>(v)] = 0;  // mark, number below
  }
  for (Vertex v = 0; v < g.order(); ++v)
    if (res.to_sub[static_cast<size_t>(v)] != -1) {
      res.to_sub[static_cast<size_t>(v)] = static_cast<int>(res.to_host.size());
      res.to_host.push_back(v);
    }
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (size_t i = 0; i < res.to_host.size(); ++i)
    for (Vertex w : g.neighbors(res.to_host[i])) {
      Vertex j = res.to_sub[static_cast<size_t>(w)];
      if (j > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), j);
    }
  res.graph = Graph::from_edges(static_cast<int>(res.to_host.size()), edges);
  return res;
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  return static_cast<int>(component_of(g, 0).size()) == g.order();
}

bool is_two_connected(const Graph& g) {
  if (g.order() < 3) return false;
  if (!is_connected(g)) return false;
  return blocks(g).cut_vertices.empty();
}

bool is_bipartite(const Graph& g) {
  std::vector<int> color(static_cast<size_t>(g.order()), -1);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (color[static_cast<size_t>(s)] != -1) continue;
    color[static_cast<size_t>(s)] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (color[static_cast<size_t>(w)] == -1) {
          color[static_cast<size_t>(w)] = 1 - color[static_cast<size_t>(v)];
          stack.push_back(w);
        } else if (color[static_cast<size_t>(w)] == color[static_cast<size_t>(v)]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<Vertex> component_of(const Graph& g, Vertex v) {
  g.require_vertex(v);
  std::vector<char> seen(static_cast<size_t>(g.order()), 0);
  std::vector<Vertex> stack{v}, out;
  seen[static_cast<size_t>(v)] = 1;
  while (!stack.empty()) {
    Vertex w = stack.back();
    stack.pop_back();
    out.push_back(w);
    for (Vertex t : g.neighbors(w))
      if (!seen[static_cast<size_t>(t)]) {
        seen[static_cast<size_t>(t)] = 1;
        stack.push_back(t);
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
  std::vector<char> seen(static_cast<size_t>(g.order()), 0);
  std::vector<std::vector<Vertex>> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (seen[static_cast<size_t>(v)]) continue;
    auto comp = component_of(g, v);
    for (Vertex w : comp) seen[static_cast<size_t>(w)] = 1;
    out.push_back(std::move(comp));
  }
  return out;
}

std::optional<OrientedPath> shortest_path_within(const Graph& g, Vertex u, Vertex v,
                                                 std::span<const Vertex> allowed) {
  g.require_vertex(u);
  g.require_vertex(v);
  std::vector<char> ok(static_cast<size_t>(g.order()), 0);
  for (Vertex w : allowed) {
    g.require_vertex(w);
    ok[static_cast<size_t>(w)] = 1;
  }
  if (!ok[static_cast<size_t>(u)] || !ok[static_cast<size_t>(v)]) return std::nullopt;
  if (u == v) return OrientedPath{{u}};
  std::vector<Vertex> prev(static_cast<size_t>(g.order()), -2);
  std::queue<Vertex> q;
  prev[static_cast<size_t>(u)] = -1;
  q.push(u);
  while (!q.empty()) {
    Vertex w = q.front();
    q.pop();
    for (Vertex t : g.neighbors(w)) {
      if (!ok[static_cast<size_t>(t)] || prev[static_cast<size_t>(t)] != -2) continue;
      prev[static_cast<size_t>(t)] = w;
      if (t == v) {
        OrientedPath p;
        for (Vertex cur = v; cur != -1; cur = prev[static_cast<size_t>(cur)])
          p.vertices.push_back(cur);
        std::reverse(p.vertices.begin(), p.vertices.end());
        return p;
      }
      q.push(t);
    }
  }
  return std::nullopt;
}

}  // namespace admissible
