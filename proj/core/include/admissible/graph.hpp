#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace admissible {

using Vertex = int;

// Simple undirected graph on vertices 0..n-1. No loops, no parallel edges.
// Immutable after construction; operations that change the graph return a
// new one.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  // Builds from an edge list. Throws std::invalid_argument on loops and
  // std::out_of_range on endpoints outside 0..n-1. Duplicate edges collapse.
  static Graph from_edges(int n, std::span<const std::pair<Vertex, Vertex>> edges);
  static Graph from_edges(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges);

  int order() const { return static_cast<int>(adj_.size()); }
  int size() const { return edge_count_; }

  bool has_vertex(Vertex v) const { return v >= 0 && v < order(); }
  void require_vertex(Vertex v) const;

  const std::vector<Vertex>& neighbors(Vertex v) const;
  bool has_edge(Vertex u, Vertex v) const;

  Graph with_edge(Vertex u, Vertex v) const;
  Graph without_edge(Vertex u, Vertex v) const;

  std::vector<std::pair<Vertex, Vertex>> edges() const;

  bool operator==(const Graph& other) const { return adj_ == other.adj_; }

 private:
  std::vector<std::vector<Vertex>> adj_;  // each list sorted ascending
  int edge_count_ = 0;
};

// One path, traversal order given by the vertex list. length() counts edges.
struct OrientedPath {
  std::vector<Vertex> vertices;

  int length() const { return static_cast<int>(vertices.size()) - 1; }
  Vertex source() const { return vertices.front(); }
  Vertex target() const { return vertices.back(); }
  OrientedPath reversed() const;
  // Simple path with every consecutive pair an edge of g.
  bool valid_in(const Graph& g) const;
};

// Blocks (maximal 2-connected pieces, bridges, isolated vertices) plus the
// cut vertices and the block/cut-vertex incidence that forms the block tree.
struct BlockDecomposition {
  std::vector<std::vector<Vertex>> blocks;     // each sorted; sorted between blocks
  std::vector<Vertex> cut_vertices;            // sorted
  std::vector<std::vector<Vertex>> block_cuts; // per block: its cut vertices
  std::vector<std::vector<int>> blocks_of_cut; // per cut vertex: block indices

  bool is_cut_vertex(Vertex v) const;
  bool is_end_block(int b) const { return block_cuts[b].size() <= 1; }
  std::vector<int> end_blocks() const;
  // Index of one block containing v (the one with smallest index).
  int block_containing(Vertex v) const;
};

struct ContractionResult {
  Graph graph;
  Vertex merged;                  // index of the contracted vertex (last)
  std::vector<Vertex> vertex_map; // old index -> new index; members of s map to merged
};

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_sub;  // host index -> sub index, -1 if dropped
  std::vector<Vertex> to_host; // sub index -> host index
};

enum class PartKind { independent, clique };

int degree(const Graph& g, Vertex v);

// N(S) \ S for a vertex set S.
std::vector<Vertex> neighborhood_of_set(const Graph& g, std::span<const Vertex> s);

BlockDecomposition blocks(const Graph& g);

// Identifies s to one new vertex adjacent to N(s) \ s. Throws when s is
// empty or s covers all of V(G).
ContractionResult contract_set(const Graph& g, std::span<const Vertex> s);

// Graph on 0..max_index whose edges are: inside part i, all pairs when
// kinds[i] == clique; between part i and part i+1, all pairs. Parts must be
// pairwise disjoint. A trailing empty part is permitted and ignored.
Graph build_join(const std::vector<std::vector<Vertex>>& parts,
                 const std::vector<PartKind>& kinds);

std::optional<int> distance(const Graph& g, Vertex u, Vertex v);

InducedSubgraph induced(const Graph& g, std::span<const Vertex> s);

bool is_connected(const Graph& g);
bool is_two_connected(const Graph& g);
bool is_bipartite(const Graph& g);

// Vertex set of the connected component containing v.
std::vector<Vertex> component_of(const Graph& g, Vertex v);
std::vector<std::vector<Vertex>> components(const Graph& g);

// Shortest path from u to v inside the allowed set (both endpoints must be
// allowed). Empty result when none exists.
std::optional<OrientedPath> shortest_path_within(const Graph& g, Vertex u, Vertex v,
                                                 std::span<const Vertex> allowed);

}  // namespace admissible
