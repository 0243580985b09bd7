#include <doctest.h>

#include <algorithm>

#include "admissible/cores.hpp"
#include "admissible/graph.hpp"
#include "support/reference.hpp"

using namespace admissible;

namespace {

bool same_core(const Core& a, const Core& b) {
  return a.type == b.type && a.ell == b.ell && a.x == b.x && a.s_set == b.s_set &&
         a.t_set == b.t_set;
}

void check_family(const Graph& host, const std::vector<OrientedPath>& paths, Vertex from,
                  Vertex to, const std::vector<int>& lengths) {
  REQUIRE(paths.size() == lengths.size());
  for (size_t i = 0; i < paths.size(); ++i) {
    CAPTURE(i);
    REQUIRE(paths[i].valid_in(host));
    REQUIRE(paths[i].source() == from);
    REQUIRE(paths[i].target() == to);
    REQUIRE(paths[i].length() == lengths[i]);
  }
}

}  // namespace

TEST_CASE("find_core fixtures") {
  Graph k4 = ref::labeled_graph(4, 0b111111);
  auto c = find_core(k4, 0, 3);
  REQUIRE(c.has_value());
  CHECK(c->type == 1);
  CHECK(c->ell == 1);
  CHECK(c->t_set == std::vector<Vertex>{1, 2});
  CHECK_NOTHROW(require_core_for(k4, *c, 0, 3));

  Graph petersen = Graph::from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                                          {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                                          {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
  auto p = find_core(petersen, 0, 7);
  REQUIRE(p.has_value());
  CHECK(p->type == 3);
  CHECK(p->ell == 0);
  CHECK(p->s_set.empty());
  CHECK(p->t_set == std::vector<Vertex>{1, 4, 5});

  // too small to host any core
  Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
  CHECK(!find_core(p3, 0, 2).has_value());
}

TEST_CASE("find_core matches the brute-force choice rule, n <= 5 exhaustive") {
  for (int n = 3; n <= 5; ++n) {
    const int bits = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (1ULL << bits); ++mask) {
      Graph g = ref::labeled_graph(n, mask);
      for (Vertex x = 0; x < n; ++x)
        for (Vertex y = 0; y < n; ++y) {
          if (x == y) continue;
          auto got = find_core(g, x, y);
          auto want = ref::best_core(g, x, y);
          CAPTURE(n);
          CAPTURE(mask);
          CAPTURE(x);
          CAPTURE(y);
          REQUIRE(got.has_value() == want.has_value());
          if (got) {
            REQUIRE(same_core(*got, *want));
            REQUIRE(ref::core_valid(g, *got, x, y));
            CHECK_NOTHROW(require_core_for(g, *got, x, y));
          }
        }
    }
  }
}

TEST_CASE("find_core matches the brute-force choice rule, n = 6 sampled") {
  for (std::uint64_t i = 0; i < 3000; ++i) {
    std::uint64_t mask = (i * 0x9e3779b97f4a7c15ULL + 13) & ((1ULL << 15) - 1);
    Graph g = ref::labeled_graph(6, mask);
    for (Vertex x = 0; x < 6; ++x)
      for (Vertex y = 0; y < 6; ++y) {
        if (x == y) continue;
        auto got = find_core(g, x, y);
        auto want = ref::best_core(g, x, y);
        REQUIRE(got.has_value() == want.has_value());
        if (got) REQUIRE(same_core(*got, *want));
      }
  }
}

TEST_CASE("core invariants reject malformed cores") {
  Graph k4 = ref::labeled_graph(4, 0b111111);
  Core good{1, 1, 0, {}, {1, 2}, false, std::nullopt};
  CHECK(core_invariants_ok(k4, good));

  Core unsorted = good;
  unsorted.t_set = {2, 1};
  CHECK(!core_invariants_ok(k4, unsorted));

  Core wrong_size = good;
  wrong_size.ell = 2;
  CHECK(!core_invariants_ok(k4, wrong_size));

  Core flat_type1 = good;
  flat_type1.flat = true;
  CHECK(!core_invariants_ok(k4, flat_type1));

  // type 2 where S fails independence
  Core t2{2, 2, 0, {1, 2}, {3}, false, std::nullopt};
  CHECK(!core_invariants_ok(k4, t2));  // wrong sizes and S adjacent

  CHECK_THROWS_AS(require_core_for(k4, good, 1, 3), std::invalid_argument);  // apex mismatch
  CHECK_THROWS_AS(require_core_for(k4, good, 0, 2), std::invalid_argument);  // y inside H
}

TEST_CASE("condition (T) modification, case (M1)") {
  // x=0, T={1,2,3} = N(x) = N(y), S={4,5}, y=6 alone, component {7} hangs on 1
  Graph g = Graph::from_edges(8, {{0, 1}, {0, 2}, {0, 3},
                                  {1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 4}, {3, 5},
                                  {6, 1}, {6, 2}, {6, 3},
                                  {7, 1}});
  Core core{3, 2, 0, {4, 5}, {1, 2, 3}, false, std::nullopt};
  REQUIRE(core_invariants_ok(g, core));

  Core flat = apply_condition_t(g, core, 6, std::nullopt);
  CHECK(flat.flat);
  CHECK(flat.t0 == 1);
  CHECK(flat.ell == 1);
  CHECK(flat.s_set == std::vector<Vertex>{5});
  CHECK(flat.t_set == std::vector<Vertex>{2, 3});
  CHECK(core_invariants_ok(g, flat));

  // z exempts the hanging component: rule no longer applies
  Core untouched = apply_condition_t(g, core, 6, 7);
  CHECK(!untouched.flat);
  CHECK(same_core(untouched, core));

  // flat input comes back unchanged
  Core again = apply_condition_t(g, flat, 6, std::nullopt);
  CHECK(same_core(again, flat));
  CHECK(again.flat);
}

TEST_CASE("condition (T) modification, case (M2)") {
  // |T| = |S| + 2: only t0 is dropped
  Graph g = Graph::from_edges(7, {{0, 1}, {0, 2}, {0, 3},
                                  {1, 4}, {2, 4}, {3, 4},
                                  {5, 1}, {5, 2}, {5, 3},
                                  {6, 1}});
  Core core{3, 1, 0, {4}, {1, 2, 3}, false, std::nullopt};
  REQUIRE(core_invariants_ok(g, core));

  Core flat = apply_condition_t(g, core, 5, std::nullopt);
  CHECK(flat.flat);
  CHECK(flat.t0 == 1);
  CHECK(flat.ell == 1);
  CHECK(flat.s_set == std::vector<Vertex>{4});
  CHECK(flat.t_set == std::vector<Vertex>{2, 3});
  CHECK(core_invariants_ok(g, flat));
}

TEST_CASE("condition (T) does not fire without its premises") {
  // N(x) != T: extra neighbor 7 of x
  Graph g = Graph::from_edges(8, {{0, 1}, {0, 2}, {0, 3}, {0, 7},
                                  {1, 4}, {2, 4}, {3, 4},
                                  {5, 1}, {5, 2}, {5, 3},
                                  {6, 1}});
  Core core{3, 1, 0, {4}, {1, 2, 3}, false, std::nullopt};
  Core out = apply_condition_t(g, core, 5, std::nullopt);
  CHECK(!out.flat);
  CHECK(same_core(out, core));

  // wrong type throws
  Graph k4 = ref::labeled_graph(4, 0b111111);
  Core t1{1, 1, 0, {}, {1, 2}, false, std::nullopt};
  CHECK_THROWS_AS(apply_condition_t(k4, t1, 3, std::nullopt), std::invalid_argument);
}

TEST_CASE("closed-form families, type 1") {
  Graph host = build_join({{0}, {1, 2, 3}}, {PartKind::independent, PartKind::clique});
  Core core{1, 2, 0, {}, {1, 2, 3}, false, std::nullopt};
  REQUIRE(core_invariants_ok(host, core));

  auto fam = paths_x_to_t(core, 3);
  check_family(host, fam.paths, 0, 3, {1, 2, 3});
  CHECK(fam.shared_source == 0);
  CHECK(fam.targets == std::vector<Vertex>(3, 3));

  CHECK_THROWS_AS(paths_x_to_s(core, 1), std::invalid_argument);
  CHECK_THROWS_AS(paths_x_to_t(core, 3, 1), std::invalid_argument);  // forbidden needs type 3
}

TEST_CASE("closed-form families, type 2") {
  Graph host = build_join({{0}, {1, 2}, {3, 4, 5}},
                          {PartKind::independent, PartKind::independent, PartKind::clique});
  Core core{2, 3, 0, {1, 2}, {3, 4, 5}, false, std::nullopt};
  REQUIRE(core_invariants_ok(host, core));

  auto to_s = paths_x_to_s(core, 2);
  check_family(host, to_s, 0, 2, {3, 4, 5});

  auto to_t = paths_x_to_t(core, 5);
  check_family(host, to_t.paths, 0, 5, {2, 3, 4, 5});

  CHECK_THROWS_AS(paths_x_to_s(core, 2, 3), std::invalid_argument);  // forbidden on type 2
  CHECK_THROWS_AS(paths_x_to_s(core, 3), std::invalid_argument);     // s not in S
  CHECK_THROWS_AS(paths_x_to_t(core, 1), std::invalid_argument);     // t not in T
}

TEST_CASE("closed-form families, type 3") {
  Graph host = build_join({{0}, {1, 2, 3}, {4, 5}},
                          {PartKind::independent, PartKind::independent, PartKind::independent});
  Core core{3, 2, 0, {4, 5}, {1, 2, 3}, false, std::nullopt};
  REQUIRE(core_invariants_ok(host, core));

  auto to_s = paths_x_to_s(core, 5, 1);
  check_family(host, to_s, 0, 5, {2, 4});
  for (const auto& p : to_s)
    CHECK(std::find(p.vertices.begin(), p.vertices.end(), 1) == p.vertices.end());

  CHECK_THROWS_AS(paths_x_to_s(core, 5), std::invalid_argument);  // type 3 requires forbidden

  auto to_t = paths_x_to_t(core, 3);
  check_family(host, to_t.paths, 0, 3, {1, 3, 5});

  // forbidden T-vertex needs |T| >= ell + 2
  CHECK_THROWS_AS(paths_x_to_t(core, 3, 2), std::invalid_argument);

  Graph bigger = build_join({{0}, {1, 2, 3, 4}, {5, 6}},
                            {PartKind::independent, PartKind::independent,
                             PartKind::independent});
  Core wide{3, 2, 0, {5, 6}, {1, 2, 3, 4}, false, std::nullopt};
  auto avoid = paths_x_to_t(wide, 4, 1);
  check_family(bigger, avoid.paths, 0, 4, {1, 3, 5});
  for (const auto& p : avoid.paths)
    CHECK(std::find(p.vertices.begin(), p.vertices.end(), 1) == p.vertices.end());
  CHECK_THROWS_AS(paths_x_to_t(wide, 1, 1), std::invalid_argument);  // forbidden == target
}

TEST_CASE("ell = 0 type 3 core has the single edge path") {
  Graph host = build_join({{0}, {1, 2}}, {PartKind::independent, PartKind::independent});
  Core core{3, 0, 0, {}, {1, 2}, false, std::nullopt};
  REQUIRE(core_invariants_ok(host, core));
  auto fam = paths_x_to_t(core, 2);
  check_family(host, fam.paths, 0, 2, {1});
}
