#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "admissible/graph_io.hpp"
#include "admissible/harness.hpp"
#include "admissible/oracle.hpp"
#include "support/reference.hpp"

using namespace admissible;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name, const std::string& content)
      : path("harness_test_" + name) {
    std::ofstream out(path);
    out << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

std::string g6(const Graph& g) { return graph6_encode(g); }

}  // namespace

TEST_CASE("name round trips") {
  for (Target t : {Target::theorem_1_2, Target::theorem_2_1, Target::theorem_1_4,
                   Target::conjecture_1, Target::conjecture_2, Target::facts})
    CHECK(target_from_string(to_string(t)) == t);
  for (GeneratorKind k : {GeneratorKind::exhaustive_labeled, GeneratorKind::random_gnp,
                          GeneratorKind::corpus_file})
    CHECK(generator_from_string(to_string(k)) == k);
  CHECK_THROWS_AS(target_from_string("theorem-9.9"), std::invalid_argument);
  CHECK_THROWS_AS(generator_from_string("psychic"), std::invalid_argument);
}

TEST_CASE("campaign validation") {
  Campaign c;
  CHECK_NOTHROW(c.validate());
  c.n_min = 0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c.n_min = 3;
  c.n_max = 2;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c.n_max = 12;  // exhaustive cap
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = Campaign{};
  c.ks = {};
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = Campaign{};
  c.ks = {0};
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = Campaign{};
  c.generator = GeneratorKind::corpus_file;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);  // missing path
  c = Campaign{};
  c.generator = GeneratorKind::random_gnp;
  c.p = 1.5;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
}

TEST_CASE("exhaustive stream counts and order") {
  Campaign c;
  c.n_min = 3;
  c.n_max = 4;
  auto s = generate_instances(c);
  CHECK(s.count == 8 + 64);
  CHECK(s.get(0).order() == 3);
  CHECK(s.get(0).size() == 0);
  CHECK(s.get(7).size() == 3);          // full triangle, last mask of n=3
  CHECK(s.get(8).order() == 4);         // first n=4 graph
  CHECK(s.get(8 + 63).size() == 6);     // K4
  CHECK_THROWS_AS(s.get(72), std::out_of_range);

  // bit order matches the documented pair order
  Graph first_edge = s.get(1);          // mask 1 on n=3: pair (0,1)
  CHECK(first_edge.has_edge(0, 1));
  CHECK(first_edge.size() == 1);
}

TEST_CASE("gnp stream is deterministic and respects the endpoints") {
  Graph a = gnp_graph(42, 8, 3, 0.5);
  Graph b = gnp_graph(42, 8, 3, 0.5);
  CHECK(a == b);
  Graph c = gnp_graph(43, 8, 3, 0.5);
  CHECK(!(a == c));  // overwhelmingly likely, fixed by the chosen seeds
  CHECK(gnp_graph(1, 6, 0, 0.0).size() == 0);
  CHECK(gnp_graph(1, 6, 0, 1.0).size() == 15);

  Campaign cc;
  cc.generator = GeneratorKind::random_gnp;
  cc.n_min = 4;
  cc.n_max = 6;
  cc.count = 10;
  cc.seed = 7;
  auto s = generate_instances(cc);
  CHECK(s.count == 30);
  CHECK(s.get(0).order() == 4);
  CHECK(s.get(10).order() == 5);
  CHECK(s.get(29).order() == 6);
}

TEST_CASE("corpus stream reports the offending line") {
  TempFile f("corpus.g6", "# comment\nC~\n\nCN\nnot-a-graph\n");
  Campaign c;
  c.generator = GeneratorKind::corpus_file;
  c.corpus_path = f.path;
  auto s = generate_instances(c);
  CHECK(s.count == 3);
  CHECK(s.get(0).order() == 4);
  CHECK(s.get(0).size() == 6);  // C~ is K4
  try {
    s.get(2);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 5);
  }

  Campaign missing;
  missing.generator = GeneratorKind::corpus_file;
  missing.corpus_path = "nonexistent_corpus_file.g6";
  CHECK_THROWS_AS(generate_instances(missing), std::runtime_error);
}

TEST_CASE("run_campaign on the documented examples") {
  // theorem-2.1 exhaustively to n=4: zero failures
  Campaign c;
  c.target = Target::theorem_2_1;
  c.n_min = 1;
  c.n_max = 4;
  c.ks = {1, 2};
  auto r = run_campaign(c);
  CHECK(r.failed == 0);
  CHECK(r.verified == r.hypotheses_satisfied);
  CHECK(r.verified > 0);
  // 1 + 2*12 + 8*48 + 64*120 tuples by straight multiplication
  CHECK(r.instances_total == 0 + 24 + 384 + 7680);

  // conjecture-2 over a K5 corpus at k=3: one verified instance
  TempFile k5("k5.g6", g6(ref::labeled_graph(5, 0b1111111111)) + "\n");
  Campaign c2;
  c2.target = Target::conjecture_2;
  c2.generator = GeneratorKind::corpus_file;
  c2.corpus_path = k5.path;
  c2.ks = {3};
  auto r2 = run_campaign(c2);
  CHECK(r2.instances_total == 1);
  CHECK(r2.hypotheses_satisfied == 1);
  CHECK(r2.verified == 1);
  CHECK(r2.failed == 0);

  // theorem-1.4 on C5 at k=2: hypothesis filter rejects it
  Graph c5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  TempFile c5f("c5.g6", g6(c5) + "\n");
  Campaign c3;
  c3.target = Target::theorem_1_4;
  c3.generator = GeneratorKind::corpus_file;
  c3.corpus_path = c5f.path;
  c3.ks = {2};
  auto r3 = run_campaign(c3);
  CHECK(r3.instances_total == 1);
  CHECK(r3.hypotheses_satisfied == 0);
  CHECK(r3.verified == 0);
  CHECK(r3.failed == 0);
}

TEST_CASE("conjecture-1 does not require connectivity") {
  // two disjoint K4s: min degree 3, so k=2 applies; cycles {3,4} hit both
  // residues mod 2 ({0,1} via 4 and 3)
  Graph two = Graph::from_edges(8, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                                    {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7}});
  TempFile f("twok4.g6", g6(two) + "\n");
  Campaign c;
  c.target = Target::conjecture_1;
  c.generator = GeneratorKind::corpus_file;
  c.corpus_path = f.path;
  c.ks = {2};
  auto r = run_campaign(c);
  CHECK(r.hypotheses_satisfied == 1);
  CHECK(r.verified == 1);

  // conjecture-2 on the same graph: hypothesis excludes it (not 2-connected)
  c.target = Target::conjecture_2;
  auto r2 = run_campaign(c);
  CHECK(r2.hypotheses_satisfied == 0);
}

TEST_CASE("parallel and serial runs tally identically") {
  Campaign c;
  c.target = Target::theorem_2_1;
  c.n_min = 1;
  c.n_max = 5;
  c.ks = {1, 2};
  c.jobs = 1;
  auto serial = run_campaign(c);
  c.jobs = 3;
  auto parallel = run_campaign(c);
  CHECK(serial.instances_total == parallel.instances_total);
  CHECK(serial.hypotheses_satisfied == parallel.hypotheses_satisfied);
  CHECK(serial.verified == parallel.verified);
  CHECK(serial.failed == parallel.failed);
  CHECK(serial.failure_witnesses.size() == parallel.failure_witnesses.size());
}

TEST_CASE("failure witnesses survive JSON and replay") {
  // starve the spectrum budget so a true instance fails verification
  TempFile k4("k4.g6", "C~\n");
  Campaign c;
  c.target = Target::conjecture_1;
  c.generator = GeneratorKind::corpus_file;
  c.corpus_path = k4.path;
  c.ks = {2};
  c.options.budget.max_steps = 1;
  auto r = run_campaign(c);
  REQUIRE(r.failed == 1);
  REQUIRE(r.failure_witnesses.size() == 1);
  CHECK(r.verified + r.failed == r.hypotheses_satisfied);
  const auto& w = r.failure_witnesses[0];
  CHECK(w.graph6 == "C~");
  CHECK(w.k == 2);
  CHECK(w.reason.find("budget") != std::string::npos);

  // report -> JSON -> witnesses
  std::string text = report_to_json(c, r);
  auto parsed = witnesses_from_json(text);
  REQUIRE(parsed.size() == 1);
  CHECK(parsed[0].first == Target::conjecture_1);
  CHECK(parsed[0].second.graph6 == "C~");
  CHECK(parsed[0].second.k == 2);
  CHECK(!parsed[0].second.z.has_value());

  // same tiny budget: the failure reproduces; default budget: it verifies
  ExtractorOptions starved;
  starved.budget.max_steps = 1;
  CHECK(!replay_witness(Target::conjecture_1, w, starved));
  CHECK(replay_witness(Target::conjecture_1, w));

  // single-witness JSON objects parse too
  auto single = witnesses_from_json(
      R"({"graph6":"C~","x":-1,"y":-1,"z":null,"k":2,"reason":"","target":"conjecture-1"})");
  REQUIRE(single.size() == 1);
  CHECK(single[0].first == Target::conjecture_1);
  CHECK_THROWS_AS(witnesses_from_json(R"({"graph6":"C~","k":2})"), std::invalid_argument);
  CHECK_THROWS_AS(witnesses_from_json("not json at all"), std::invalid_argument);
}

TEST_CASE("replay treats a gone hypothesis as verified") {
  // C5 never satisfies theorem-1.4 at k=2, so a fabricated witness verifies
  FailureWitness w;
  w.graph6 = g6(Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}));
  w.k = 2;
  CHECK(replay_witness(Target::theorem_1_4, w));

  // malformed roots are reported as errors, not verdicts
  FailureWitness bad;
  bad.graph6 = "C~";
  bad.x = 0;
  bad.y = 9;
  bad.k = 1;
  CHECK_THROWS_AS(replay_witness(Target::theorem_2_1, bad), std::invalid_argument);
  FailureWitness noz;
  noz.graph6 = "C~";
  noz.x = 0;
  noz.y = 1;
  noz.k = 1;
  CHECK_THROWS_AS(replay_witness(Target::theorem_1_2, noz), std::invalid_argument);
}

TEST_CASE("report JSON carries the campaign echo") {
  Campaign c;
  c.target = Target::facts;
  c.n_min = 3;
  c.n_max = 4;
  c.ks = {1, 2};
  auto r = run_campaign(c);
  CHECK(r.failed == 0);
  std::string text = report_to_json(c, r);
  CHECK(text.find("\"target\": \"facts\"") != std::string::npos);
  CHECK(text.find("\"generator\": \"exhaustive-labeled\"") != std::string::npos);
  CHECK(text.find("\"instances_total\"") != std::string::npos);
  CHECK(text.find("\"wall_time_seconds\"") != std::string::npos);
}

TEST_CASE("facts and theorem-1.2 campaigns agree with direct recomputation") {
  Campaign c;
  c.target = Target::theorem_1_2;
  c.n_min = 1;
  c.n_max = 4;
  c.ks = {1, 2};
  auto r = run_campaign(c);
  CHECK(r.failed == 0);
  // n=4: 4*3*4 (x,y,z) placements * 2 ks; n=3: 3*2*3*2; n=2: 2*1*2*2; n=1: 0
  CHECK(r.instances_total == 64ULL * 96 + 8 * 36 + 2 * 8);

  std::uint64_t sat = 0;
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    Graph g = ref::labeled_graph(4, mask);
    if (!ref::two_connected(g)) continue;
    for (Vertex x = 0; x < 4; ++x)
      for (Vertex y = 0; y < 4; ++y)
        for (Vertex z = 0; z < 4 && x != y; ++z)
          for (int k : {1, 2}) {
            auto d = delta(g, x, y, z);
            if (d && *d >= k + 1) ++sat;
          }
  }
  for (std::uint64_t mask = 0; mask < 8; ++mask) {
    Graph g = ref::labeled_graph(3, mask);
    if (!ref::two_connected(g)) continue;
    for (Vertex x = 0; x < 3; ++x)
      for (Vertex y = 0; y < 3; ++y)
        for (Vertex z = 0; z < 3 && x != y; ++z)
          for (int k : {1, 2}) {
            auto d = delta(g, x, y, z);
            if (d && *d >= k + 1) ++sat;
          }
  }
  CHECK(r.hypotheses_satisfied == sat);
}
