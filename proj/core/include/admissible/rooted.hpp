#pragma once

#include <optional>

#include "admissible/graph.hpp"

namespace admissible {

// Graph with two distinguished roots x, y and an optional spared vertex z.
// z may coincide with x or y; absent z models "no spared vertex".
struct RootedGraph {
  Graph g;
  Vertex x = 0;
  Vertex y = 1;
  std::optional<Vertex> z;

  void validate() const;  // throws std::invalid_argument / std::out_of_range
};

// True when g is connected with at least 3 vertices, has at most two
// end-blocks, and every end-block contains x or y as a non-cut vertex.
// Equivalent to: g plus the edge xy is 2-connected.
bool is_two_connected_rooted(const Graph& g, Vertex x, Vertex y);
bool is_two_connected_rooted(const RootedGraph& r);
// Variant for callers that already hold the block decomposition of a graph
// known to be connected.
bool is_two_connected_rooted(const Graph& g, const BlockDecomposition& bd, Vertex x, Vertex y);

// Minimum degree over V(g) \ {x, y, z}; nullopt means that set is empty
// (minimum over nothing, conventionally unbounded below).
std::optional<int> delta(const Graph& g, Vertex x, Vertex y, std::optional<Vertex> z);
std::optional<int> delta(const RootedGraph& r);

// Two-vertex end-block {v, b} hanging off cut vertex b. b_prime is the
// second neighbor of b when deg(b) == 2, otherwise b itself.
struct VEndBlock {
  Vertex v;
  Vertex b;
  Vertex b_prime;
};

std::optional<VEndBlock> v_end_block(const Graph& g, Vertex v);

enum class FeasibleCase {
  whole,        // block has no cut vertex: the graph itself is 2-connected
  end_with_y,   // one cut vertex b', y inside the block
  end_without_y,// one cut vertex b', y outside
  internal      // two cut vertices
};

struct FeasibleBlock {
  std::vector<Vertex> vertices;  // sorted
  Vertex b;
  std::optional<Vertex> z_prime;
  FeasibleCase kind;
};

// Blocks B of the connected graph c with at most two vertices in
// cuts(c) | {y, z} and at least one vertex outside it, each tagged with its
// role assignment (b, z') for the recursion that peels it off. z', when
// present, lies in the block.
std::vector<FeasibleBlock> feasible_blocks(const Graph& c, Vertex y, std::optional<Vertex> z);

}  // namespace admissible
