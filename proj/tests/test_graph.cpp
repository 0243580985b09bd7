#include <doctest.h>

#include <algorithm>
#include <set>

#include "admissible/graph.hpp"
#include "support/reference.hpp"

using namespace admissible;

namespace {

Graph k4() { return ref::labeled_graph(4, 0b111111); }

Graph path_graph(int n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

Graph triangle_chain() {
  // triangles {0,1,2} and {2,3,4} sharing the cut vertex 2
  return Graph::from_edges(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
}

}  // namespace

TEST_CASE("construction and edges") {
  Graph g = Graph::from_edges(4, {{0, 1}, {1, 0}, {2, 3}});
  CHECK(g.order() == 4);
  CHECK(g.size() == 2);  // duplicate collapsed
  CHECK(g.has_edge(1, 0));
  CHECK(!g.has_edge(0, 2));
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(2, {{0, 5}}), std::out_of_range);

  auto edges = k4().edges();
  CHECK(edges.size() == 6);
  CHECK(std::is_sorted(edges.begin(), edges.end()));
}

TEST_CASE("neighbors stay sorted, with_edge and without_edge are persistent") {
  Graph g = Graph::from_edges(5, {{3, 1}, {3, 4}, {3, 0}});
  CHECK(g.neighbors(3) == std::vector<Vertex>{0, 1, 4});
  Graph h = g.with_edge(2, 3);
  CHECK(!g.has_edge(2, 3));
  CHECK(h.neighbors(3) == std::vector<Vertex>{0, 1, 2, 4});
  Graph i = h.without_edge(3, 0);
  CHECK(h.has_edge(0, 3));
  CHECK(!i.has_edge(0, 3));
}

TEST_CASE("oriented path validity") {
  Graph g = path_graph(4);
  OrientedPath p{{0, 1, 2, 3}};
  CHECK(p.valid_in(g));
  CHECK(p.length() == 3);
  CHECK(p.reversed().vertices == std::vector<Vertex>{3, 2, 1, 0});
  CHECK(!OrientedPath{{0, 2}}.valid_in(g));       // not an edge
  CHECK(!OrientedPath{{0, 1, 0}}.valid_in(g));    // repeated vertex
  CHECK(!OrientedPath{{0, 1, 9}}.valid_in(g));    // out of range, no throw
  CHECK(!OrientedPath{{}}.valid_in(g));
}

TEST_CASE("blocks on fixtures") {
  auto bd = blocks(triangle_chain());
  REQUIRE(bd.blocks.size() == 2);
  CHECK(bd.blocks[0] == std::vector<Vertex>{0, 1, 2});
  CHECK(bd.blocks[1] == std::vector<Vertex>{2, 3, 4});
  CHECK(bd.cut_vertices == std::vector<Vertex>{2});
  CHECK(bd.is_cut_vertex(2));
  CHECK(!bd.is_cut_vertex(0));
  CHECK(bd.block_cuts[0] == std::vector<Vertex>{2});
  CHECK(bd.blocks_of_cut[0] == std::vector<int>{0, 1});
  CHECK(bd.end_blocks() == std::vector<int>{0, 1});

  auto kd = blocks(k4());
  CHECK(kd.blocks.size() == 1);
  CHECK(kd.cut_vertices.empty());

  auto pd = blocks(path_graph(4));  // three bridge blocks
  CHECK(pd.blocks.size() == 3);
  CHECK(pd.cut_vertices == std::vector<Vertex>{1, 2});

  Graph lone(1);
  auto ld = blocks(lone);
  CHECK(ld.blocks.size() == 1);
  CHECK(ld.blocks[0] == std::vector<Vertex>{0});
}

TEST_CASE("cut vertices, connectivity, bipartiteness agree with brute force up to n = 6") {
  for (int n = 1; n <= 6; ++n) {
    const int bits = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (1ULL << bits); ++mask) {
      Graph g = ref::labeled_graph(n, mask);
      CAPTURE(n);
      CAPTURE(mask);
      REQUIRE(blocks(g).cut_vertices == ref::cut_vertices(g));
      REQUIRE(is_connected(g) == ref::connected(g));
      REQUIRE(is_two_connected(g) == ref::two_connected(g));
      REQUIRE(is_bipartite(g) == ref::bipartite(g));
    }
  }
}

TEST_CASE("block decomposition invariants on all graphs n = 5") {
  for (std::uint64_t mask = 0; mask < (1ULL << 10); ++mask) {
    Graph g = ref::labeled_graph(5, mask);
    auto bd = blocks(g);
    // every edge lies in exactly one block
    for (auto [u, v] : g.edges()) {
      int hits = 0;
      for (const auto& b : bd.blocks)
        if (std::binary_search(b.begin(), b.end(), u) &&
            std::binary_search(b.begin(), b.end(), v))
          ++hits;
      REQUIRE(hits == 1);
    }
    // block_cuts matches cut_vertices membership
    for (size_t bi = 0; bi < bd.blocks.size(); ++bi)
      for (Vertex v : bd.blocks[bi]) {
        bool in_cuts = std::binary_search(bd.cut_vertices.begin(), bd.cut_vertices.end(), v);
        bool listed = std::find(bd.block_cuts[bi].begin(), bd.block_cuts[bi].end(), v) !=
                      bd.block_cuts[bi].end();
        REQUIRE(in_cuts == listed);
      }
  }
}

TEST_CASE("contract_set") {
  Graph g = triangle_chain();
  auto res = contract_set(g, std::vector<Vertex>{0, 1, 2});
  CHECK(res.graph.order() == 3);
  CHECK(res.merged == 2);  // contracted vertex comes last
  CHECK(res.vertex_map[0] == res.merged);
  CHECK(res.vertex_map[1] == res.merged);
  CHECK(res.vertex_map[3] == 0);
  CHECK(res.vertex_map[4] == 1);
  CHECK(res.graph.has_edge(res.merged, 0));
  CHECK(res.graph.has_edge(res.merged, 1));
  CHECK(res.graph.has_edge(0, 1));
  CHECK_THROWS_AS(contract_set(g, std::vector<Vertex>{}), std::invalid_argument);
  CHECK_THROWS_AS(contract_set(g, std::vector<Vertex>{0, 1, 2, 3, 4}), std::invalid_argument);
}

TEST_CASE("neighborhood_of_set and induced") {
  Graph g = triangle_chain();
  CHECK(neighborhood_of_set(g, std::vector<Vertex>{0, 1}) == std::vector<Vertex>{2});
  CHECK(neighborhood_of_set(g, std::vector<Vertex>{2}) == std::vector<Vertex>{0, 1, 3, 4});

  auto sub = induced(g, std::vector<Vertex>{2, 3, 4});
  CHECK(sub.graph.order() == 3);
  CHECK(sub.graph.size() == 3);
  CHECK(sub.to_host == std::vector<Vertex>{2, 3, 4});
  CHECK(sub.to_sub[3] == 1);
}

TEST_CASE("build_join makes layered graphs") {
  // x | T clique | S independent, consecutive layers fully joined
  Graph g = build_join({{0}, {1, 2}, {3, 4}},
                       {PartKind::independent, PartKind::clique, PartKind::independent});
  CHECK(g.order() == 5);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(0, 2));
  CHECK(g.has_edge(1, 2));   // clique layer
  CHECK(g.has_edge(1, 3));
  CHECK(g.has_edge(2, 4));
  CHECK(!g.has_edge(0, 3));  // non-consecutive layers untouched
  CHECK(!g.has_edge(3, 4));  // independent layer
}

TEST_CASE("distance and shortest_path_within") {
  Graph g = path_graph(5);
  CHECK(distance(g, 0, 4) == 4);
  CHECK(distance(g, 2, 2) == 0);
  CHECK(!distance(Graph(3), 0, 2).has_value());

  auto p = shortest_path_within(g, 0, 2, std::vector<Vertex>{0, 1, 2});
  REQUIRE(p.has_value());
  CHECK(p->vertices == std::vector<Vertex>{0, 1, 2});
  CHECK(!shortest_path_within(g, 0, 2, std::vector<Vertex>{0, 2}).has_value());
  auto self = shortest_path_within(g, 3, 3, std::vector<Vertex>{3});
  REQUIRE(self.has_value());
  CHECK(self->vertices == std::vector<Vertex>{3});
}

TEST_CASE("components") {
  Graph g = Graph::from_edges(5, {{0, 1}, {2, 3}});
  auto comps = components(g);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == std::vector<Vertex>{0, 1});
  CHECK(comps[1] == std::vector<Vertex>{2, 3});
  CHECK(comps[2] == std::vector<Vertex>{4});
  CHECK(component_of(g, 3) == std::vector<Vertex>{2, 3});
}
