#include "admissible/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <climits>
#include <cmath>
#include <exception>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include <json.hpp>

#include "admissible/cores.hpp"
#include "admissible/graph_io.hpp"
#include "admissible/oracle.hpp"
#include "admissible/rooted.hpp"

namespace admissible {

namespace {

using nlohmann::json;

constexpr std::uint64_t kChunk = 256;  // graphs claimed per worker grab

std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

struct Tally {
  std::uint64_t instances_total = 0;
  std::uint64_t hypotheses_satisfied = 0;
  std::uint64_t verified = 0;
  std::uint64_t failed = 0;
  std::vector<FailureWitness> witnesses;

  void absorb(Tally&& other) {
    instances_total += other.instances_total;
    hypotheses_satisfied += other.hypotheses_satisfied;
    verified += other.verified;
    failed += other.failed;
    witnesses.insert(witnesses.end(),
                     std::make_move_iterator(other.witnesses.begin()),
                     std::make_move_iterator(other.witnesses.end()));
  }
};

std::vector<int> cert_lengths(const PathCertificate& cert) {
  std::vector<int> lens;
  lens.reserve(cert.paths.size());
  for (const auto& p : cert.paths) lens.push_back(p.length());
  return lens;
}

std::vector<int> cert_lengths(const CycleCertificate& cert) {
  std::vector<int> lens;
  lens.reserve(cert.cycles.size());
  for (const auto& c : cert.cycles) lens.push_back(static_cast<int>(c.size()));
  return lens;
}

// Attempts one path extraction and reduces the outcome to ok/reason.
bool try_paths(const Graph& g, Vertex x, Vertex y, std::optional<Vertex> z, int k,
               const ExtractorOptions& opt, std::optional<PathCertificate>* out,
               std::string* reason) {
  try {
    PathCertificate cert = find_admissible_paths(RootedGraph{g, x, y, z}, k, opt);
    CertificateCheck chk = cert.validate();
    if (!chk.ok || cert.k != k || cert.x != x || cert.y != y) {
      *reason = "certificate-rejected";
      if (!chk.problems.empty()) *reason += ": " + chk.problems.front();
      return false;
    }
    if (out) *out = std::move(cert);
    return true;
  } catch (const ExtractionError& e) {
    *reason = e.what();
  } catch (const HypothesisError& e) {
    *reason = std::string("hypothesis-mismatch: ") + e.what();
  } catch (const BudgetExceededError& e) {
    *reason = std::string("budget-exceeded: ") + e.what();
  }
  return false;
}

bool try_cycles(const Graph& g, int k, const ExtractorOptions& opt,
                std::optional<CycleCertificate>* out, std::string* reason) {
  try {
    CycleCertificate cert = find_admissible_cycles(g, k, opt);
    CertificateCheck chk = cert.validate();
    if (!chk.ok || cert.k != k) {
      *reason = "certificate-rejected";
      if (!chk.problems.empty()) *reason += ": " + chk.problems.front();
      return false;
    }
    if (out) *out = std::move(cert);
    return true;
  } catch (const ExtractionError& e) {
    *reason = e.what();
  } catch (const HypothesisError& e) {
    *reason = std::string("hypothesis-mismatch: ") + e.what();
  } catch (const BudgetExceededError& e) {
    *reason = std::string("budget-exceeded: ") + e.what();
  }
  return false;
}

// theorem-1.2 and theorem-2.1 share the tuple walk; they differ in the
// connectivity side of the hypothesis and in whether z may be absent.
void process_paths_target(const Campaign& c, const Graph& g, Tally& t, bool rooted_form) {
  const int n = g.order();
  const std::uint64_t zs = rooted_form ? static_cast<std::uint64_t>(n) + 1
                                       : static_cast<std::uint64_t>(n);
  if (n >= 2)
    t.instances_total += static_cast<std::uint64_t>(n) * (n - 1) * zs * c.ks.size();
  if (n < 3) return;

  // Hypothesis implies these, so skipping is pruning, not counting.
  if (!is_connected(g)) return;
  BlockDecomposition bd;
  if (rooted_form) {
    bd = blocks(g);
  } else if (!is_two_connected(g)) {
    return;
  }

  std::vector<std::optional<Vertex>> zchoices;
  if (rooted_form) zchoices.emplace_back(std::nullopt);
  for (Vertex z = 0; z < n; ++z) zchoices.emplace_back(z);

  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = 0; y < n; ++y) {
      if (x == y) continue;
      if (rooted_form && !is_two_connected_rooted(g, bd, x, y)) continue;

      // degrees outside {x, y}, ascending; min over V \ {x,y,z} is then the
      // first entry whose vertex differs from z
      std::vector<std::pair<int, Vertex>> degs;
      degs.reserve(n - 2);
      for (Vertex v = 0; v < n; ++v)
        if (v != x && v != y) degs.emplace_back(degree(g, v), v);
      std::sort(degs.begin(), degs.end());
      auto delta_for = [&](std::optional<Vertex> z) -> std::optional<int> {
        for (const auto& [d, v] : degs)
          if (!z || v != *z) return d;
        return std::nullopt;
      };

      std::vector<std::pair<std::optional<Vertex>, int>> sat;
      int kmax = 0;
      std::optional<Vertex> z_at_kmax;
      for (const auto& z : zchoices) {
        std::optional<int> dmin = delta_for(z);
        for (int k : c.ks) {
          if (!dmin || *dmin < k + 1) continue;
          ++t.hypotheses_satisfied;
          sat.emplace_back(z, k);
          if (k > kmax) {
            kmax = k;
            z_at_kmax = z;
          }
        }
      }
      if (sat.empty()) continue;

      // One extraction at the largest satisfied k covers every smaller k of
      // the same pair: a prefix of a validated certificate is a certificate.
      std::optional<PathCertificate> cert;
      std::string reason;
      if (try_paths(g, x, y, z_at_kmax, kmax, c.options, &cert, &reason)) {
        std::vector<int> lens = cert_lengths(*cert);
        bool prefixes_ok = true;
        for (const auto& [z, k] : sat) {
          std::vector<int> prefix(lens.begin(), lens.begin() + k);
          if (!is_admissible(prefix)) {
            prefixes_ok = false;
            break;
          }
        }
        if (prefixes_ok) {
          t.verified += sat.size();
          continue;
        }
        reason = "prefix-not-admissible";
      }

      // Shared extraction failed; fall back to honest per-tuple attempts.
      for (const auto& [z, k] : sat) {
        std::string why = reason;
        if (try_paths(g, x, y, z, k, c.options, nullptr, &why)) {
          ++t.verified;
        } else {
          ++t.failed;
          t.witnesses.push_back(FailureWitness{graph6_encode(g), x, y, z, k, why});
        }
      }
    }
  }
}

void process_cycles_target(const Campaign& c, const Graph& g, Tally& t) {
  const int n = g.order();
  t.instances_total += c.ks.size();
  if (n < 3 || !is_connected(g)) return;

  std::vector<int> degs(n);
  for (Vertex v = 0; v < n; ++v) degs[v] = degree(g, v);
  std::sort(degs.begin(), degs.end());

  std::vector<int> sat;
  int kmax = 0;
  for (int k : c.ks) {
    auto below = std::lower_bound(degs.begin(), degs.end(), k + 1) - degs.begin();
    if (k < 2 || below > 2) continue;
    ++t.hypotheses_satisfied;
    sat.push_back(k);
    kmax = std::max(kmax, k);
  }
  if (sat.empty()) return;

  std::optional<CycleCertificate> cert;
  std::string reason;
  if (try_cycles(g, kmax, c.options, &cert, &reason)) {
    std::vector<int> lens = cert_lengths(*cert);
    bool prefixes_ok = true;
    for (int k : sat) {
      std::vector<int> prefix(lens.begin(), lens.begin() + k);
      if (!is_admissible(prefix)) {
        prefixes_ok = false;
        break;
      }
    }
    if (prefixes_ok) {
      t.verified += sat.size();
      return;
    }
    reason = "prefix-not-admissible";
  }

  for (int k : sat) {
    std::string why = reason;
    if (try_cycles(g, k, c.options, nullptr, &why)) {
      ++t.verified;
    } else {
      ++t.failed;
      t.witnesses.push_back(FailureWitness{graph6_encode(g), -1, -1, std::nullopt, k, why});
    }
  }
}

std::string missing_residue_note(const LengthSpectrum& spec, int k, Parity parity) {
  for (int r = 0; r < k; ++r) {
    bool required = parity == Parity::all || k % 2 == 1 || r % 2 == 0;
    if (!required) continue;
    bool present = false;
    for (int len : spec.lengths)
      if (len % k == r) {
        present = true;
        break;
      }
    if (!present)
      return "no cycle length congruent to " + std::to_string(r) + " mod " + std::to_string(k);
  }
  return "residue coverage failed";
}

void process_conjecture(const Campaign& c, const Graph& g, Tally& t, Parity parity,
                        bool need_2conn_nonbipartite) {
  t.instances_total += c.ks.size();
  const int n = g.order();
  int mindeg = INT_MAX;
  for (Vertex v = 0; v < n; ++v) mindeg = std::min(mindeg, degree(g, v));
  if (n == 0) mindeg = -1;

  // conjecture-1 has no connectivity hypothesis: disconnected graphs with
  // large minimum degree are instances and must not be pruned.
  bool base = true;
  if (need_2conn_nonbipartite) base = is_two_connected(g) && !is_bipartite(g);

  std::vector<int> sat;
  for (int k : c.ks) {
    if (!base || mindeg < k + 1) continue;
    ++t.hypotheses_satisfied;
    sat.push_back(k);
  }
  if (sat.empty()) return;

  LengthSpectrum spec;
  bool have_spec = false;
  std::string err;
  try {
    spec = cycle_length_spectrum(g, c.options.budget);
    have_spec = true;
  } catch (const BudgetExceededError& e) {
    err = std::string("budget-exceeded: ") + e.what();
  }

  for (int k : sat) {
    if (have_spec && residue_coverage(spec, k, parity)) {
      ++t.verified;
    } else {
      ++t.failed;
      std::string why = have_spec ? missing_residue_note(spec, k, parity) : err;
      t.witnesses.push_back(FailureWitness{graph6_encode(g), -1, -1, std::nullopt, k, why});
    }
  }
}

void process_facts(const Campaign& c, const Graph& g, Tally& t) {
  const int n = g.order();
  if (n >= 2)
    t.instances_total += static_cast<std::uint64_t>(n) * (n - 1) * c.ks.size();
  if (n < 3 || !is_connected(g)) return;
  BlockDecomposition bd = blocks(g);

  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = 0; y < n; ++y) {
      if (x == y) continue;
      if (!is_two_connected_rooted(g, bd, x, y)) continue;
      std::optional<Core> core = find_core(g, x, y);
      if (!core) continue;
      for (int k : c.ks) {
        ++t.hypotheses_satisfied;
        bool ok = false;
        std::string why;
        try {
          ok = check_fact3(g, x, y, *core, k, c.options.budget);
          if (!ok) why = "core size bound contradicted";
        } catch (const BudgetExceededError& e) {
          why = std::string("budget-exceeded: ") + e.what();
        }
        if (ok) {
          ++t.verified;
        } else {
          ++t.failed;
          t.witnesses.push_back(
              FailureWitness{graph6_encode(g), x, y, std::nullopt, k, why});
        }
      }
    }
  }
}

void process_graph(const Campaign& c, const Graph& g, Tally& t) {
  switch (c.target) {
    case Target::theorem_1_2:
      process_paths_target(c, g, t, false);
      break;
    case Target::theorem_2_1:
      process_paths_target(c, g, t, true);
      break;
    case Target::theorem_1_4:
      process_cycles_target(c, g, t);
      break;
    case Target::conjecture_1:
      process_conjecture(c, g, t, Parity::even, false);
      break;
    case Target::conjecture_2:
      process_conjecture(c, g, t, Parity::all, true);
      break;
    case Target::facts:
      process_facts(c, g, t);
      break;
  }
}

bool witness_less(const FailureWitness& a, const FailureWitness& b) {
  auto zkey = [](const FailureWitness& w) { return w.z ? *w.z : -1; };
  return std::tie(a.graph6, a.x, a.y) < std::tie(b.graph6, b.x, b.y) ||
         (std::tie(a.graph6, a.x, a.y) == std::tie(b.graph6, b.x, b.y) &&
          std::make_tuple(zkey(a), a.k, a.reason) < std::make_tuple(zkey(b), b.k, b.reason));
}

json witness_to_json(const FailureWitness& w, Target target) {
  json j;
  j["graph6"] = w.graph6;
  j["x"] = w.x;
  j["y"] = w.y;
  if (w.z)
    j["z"] = *w.z;
  else
    j["z"] = nullptr;
  j["k"] = w.k;
  j["reason"] = w.reason;
  j["target"] = to_string(target);
  return j;
}

FailureWitness witness_from_json_obj(const json& j) {
  FailureWitness w;
  if (!j.is_object() || !j.contains("graph6") || !j["graph6"].is_string())
    throw std::invalid_argument("witness JSON: object with a graph6 string expected");
  w.graph6 = j["graph6"].get<std::string>();
  w.x = j.value("x", -1);
  w.y = j.value("y", -1);
  if (j.contains("z") && !j["z"].is_null()) w.z = j["z"].get<Vertex>();
  if (!j.contains("k") || !j["k"].is_number_integer())
    throw std::invalid_argument("witness JSON: integer k expected");
  w.k = j["k"].get<int>();
  w.reason = j.value("reason", std::string{});
  return w;
}

}  // namespace

std::string to_string(Target t) {
  switch (t) {
    case Target::theorem_1_2: return "theorem-1.2";
    case Target::theorem_2_1: return "theorem-2.1";
    case Target::theorem_1_4: return "theorem-1.4";
    case Target::conjecture_1: return "conjecture-1";
    case Target::conjecture_2: return "conjecture-2";
    case Target::facts: return "facts";
  }
  throw std::invalid_argument("unknown target");
}

std::string to_string(GeneratorKind k) {
  switch (k) {
    case GeneratorKind::exhaustive_labeled: return "exhaustive-labeled";
    case GeneratorKind::random_gnp: return "random-gnp";
    case GeneratorKind::corpus_file: return "corpus-file";
  }
  throw std::invalid_argument("unknown generator");
}

Target target_from_string(const std::string& name) {
  if (name == "theorem-1.2") return Target::theorem_1_2;
  if (name == "theorem-2.1") return Target::theorem_2_1;
  if (name == "theorem-1.4") return Target::theorem_1_4;
  if (name == "conjecture-1") return Target::conjecture_1;
  if (name == "conjecture-2") return Target::conjecture_2;
  if (name == "facts") return Target::facts;
  throw std::invalid_argument("unknown target: " + name);
}

GeneratorKind generator_from_string(const std::string& name) {
  if (name == "exhaustive-labeled") return GeneratorKind::exhaustive_labeled;
  if (name == "random-gnp") return GeneratorKind::random_gnp;
  if (name == "corpus-file") return GeneratorKind::corpus_file;
  throw std::invalid_argument("unknown generator: " + name);
}

void Campaign::validate() const {
  if (n_min < 1) throw std::invalid_argument("campaign: n_min must be >= 1");
  if (n_max < n_min) throw std::invalid_argument("campaign: n_max < n_min");
  if (ks.empty()) throw std::invalid_argument("campaign: empty k list");
  for (int k : ks)
    if (k < 1) throw std::invalid_argument("campaign: k must be >= 1");
  if (generator == GeneratorKind::exhaustive_labeled && n_max > 11)
    throw std::invalid_argument("campaign: exhaustive enumeration capped at n = 11");
  if (generator == GeneratorKind::random_gnp) {
    if (count < 0) throw std::invalid_argument("campaign: negative sample count");
    if (!(p >= 0.0) || !(p <= 1.0))
      throw std::invalid_argument("campaign: p must lie in [0, 1]");
  }
  if (generator == GeneratorKind::corpus_file && corpus_path.empty())
    throw std::invalid_argument("campaign: corpus generator needs a corpus path");
  if (jobs < 0) throw std::invalid_argument("campaign: negative jobs");
  if (options.oracle_threshold < 0)
    throw std::invalid_argument("campaign: negative oracle threshold");
}

Graph gnp_graph(std::uint64_t seed, int n, std::uint64_t index, double p) {
  if (n < 0) throw std::invalid_argument("gnp_graph: negative order");
  std::uint64_t key = mix64(mix64(mix64(seed) ^ static_cast<std::uint64_t>(n)) ^ index);
  std::mt19937_64 rng(key);
  std::vector<std::pair<Vertex, Vertex>> edges;
  // 53-bit threshold compare instead of a float distribution: the standard
  // pins mt19937_64 output exactly, so the stream is platform-stable.
  const bool always = p >= 1.0;
  const bool never = p <= 0.0;
  const auto threshold =
      static_cast<std::uint64_t>(p * static_cast<double>(1ULL << 53));
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) {
      std::uint64_t draw = rng() >> 11;
      bool take = always || (!never && draw < threshold);
      if (take) edges.emplace_back(i, j);
    }
  return Graph::from_edges(n, edges);
}

GraphStream generate_instances(const Campaign& c) {
  c.validate();
  GraphStream stream;
  switch (c.generator) {
    case GeneratorKind::exhaustive_labeled: {
      // segment list: [begin, begin + 2^C(n,2)) of the stream belongs to n
      struct Segment {
        std::uint64_t begin;
        int n;
      };
      auto segments = std::make_shared<std::vector<Segment>>();
      std::uint64_t total = 0;
      for (int n = c.n_min; n <= c.n_max; ++n) {
        segments->push_back({total, n});
        total += 1ULL << (static_cast<std::uint64_t>(n) * (n - 1) / 2);
      }
      stream.count = total;
      stream.get = [segments, total](std::uint64_t idx) {
        if (idx >= total) throw std::out_of_range("graph stream index");
        auto it = std::upper_bound(
            segments->begin(), segments->end(), idx,
            [](std::uint64_t v, const Segment& s) { return v < s.begin; });
        const Segment& seg = *std::prev(it);
        std::uint64_t mask = idx - seg.begin;
        std::vector<std::pair<Vertex, Vertex>> edges;
        int bit = 0;
        for (Vertex i = 0; i < seg.n; ++i)
          for (Vertex j = i + 1; j < seg.n; ++j, ++bit)
            if (mask >> bit & 1) edges.emplace_back(i, j);
        return Graph::from_edges(seg.n, edges);
      };
      break;
    }
    case GeneratorKind::random_gnp: {
      const std::uint64_t per = static_cast<std::uint64_t>(c.count);
      const int n_min = c.n_min;
      const std::uint64_t seed = c.seed;
      const double p = c.p;
      stream.count = per * (c.n_max - c.n_min + 1);
      stream.get = [per, n_min, seed, p](std::uint64_t idx) {
        int n = n_min + static_cast<int>(idx / per);
        return gnp_graph(seed, n, idx % per, p);
      };
      break;
    }
    case GeneratorKind::corpus_file: {
      std::ifstream in(c.corpus_path);
      if (!in) throw std::runtime_error("cannot open corpus: " + c.corpus_path);
      auto lines = std::make_shared<std::vector<std::pair<int, std::string>>>();
      std::string line;
      int line_no = 0;
      while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        lines->emplace_back(line_no, line);
      }
      stream.count = lines->size();
      stream.get = [lines](std::uint64_t idx) {
        const auto& [no, text] = lines->at(idx);
        try {
          return graph6_decode(text);
        } catch (const ParseError& e) {
          throw ParseError(no, e.what());
        }
      };
      break;
    }
  }
  return stream;
}

VerificationReport run_campaign(const Campaign& c) {
  c.validate();
  const auto started = std::chrono::steady_clock::now();
  GraphStream stream = generate_instances(c);

  unsigned jobs = c.jobs == 0
                      ? std::max(1u, std::thread::hardware_concurrency())
                      : static_cast<unsigned>(c.jobs);
  Tally total;
  if (jobs <= 1 || stream.count <= kChunk) {
    for (std::uint64_t i = 0; i < stream.count; ++i) process_graph(c, stream.get(i), total);
  } else {
    const std::uint64_t nchunks = (stream.count + kChunk - 1) / kChunk;
    std::atomic<std::uint64_t> next{0};
    std::vector<Tally> parts(jobs);
    std::vector<std::exception_ptr> errors(jobs);
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (unsigned w = 0; w < jobs; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (;;) {
            std::uint64_t chunk = next.fetch_add(1, std::memory_order_relaxed);
            if (chunk >= nchunks) break;
            std::uint64_t lo = chunk * kChunk;
            std::uint64_t hi = std::min(stream.count, lo + kChunk);
            for (std::uint64_t i = lo; i < hi; ++i) process_graph(c, stream.get(i), parts[w]);
          }
        } catch (...) {
          errors[w] = std::current_exception();
          next.store(nchunks);  // drain the queue so peers stop soon
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
    for (auto& part : parts) total.absorb(std::move(part));
  }

  // Canonical order: identical tallies regardless of the worker schedule.
  std::sort(total.witnesses.begin(), total.witnesses.end(), witness_less);

  VerificationReport report;
  report.instances_total = total.instances_total;
  report.hypotheses_satisfied = total.hypotheses_satisfied;
  report.verified = total.verified;
  report.failed = total.failed;
  report.failure_witnesses = std::move(total.witnesses);
  report.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

std::string report_to_json(const Campaign& c, const VerificationReport& r) {
  json campaign;
  campaign["target"] = to_string(c.target);
  campaign["generator"] = to_string(c.generator);
  campaign["n_min"] = c.n_min;
  campaign["n_max"] = c.n_max;
  campaign["ks"] = c.ks;
  campaign["seed"] = c.seed;
  campaign["count"] = c.count;
  campaign["p"] = c.p;
  campaign["corpus_path"] = c.corpus_path;
  campaign["jobs"] = c.jobs;
  campaign["oracle_threshold"] = c.options.oracle_threshold;
  campaign["budget"] = {{"max_steps", c.options.budget.max_steps},
                        {"max_vertices", c.options.budget.max_vertices}};

  json j;
  j["campaign"] = campaign;
  j["instances_total"] = r.instances_total;
  j["hypotheses_satisfied"] = r.hypotheses_satisfied;
  j["verified"] = r.verified;
  j["failed"] = r.failed;
  j["wall_time_seconds"] = r.wall_time_seconds;
  j["failure_witnesses"] = json::array();
  for (const auto& w : r.failure_witnesses)
    j["failure_witnesses"].push_back(witness_to_json(w, c.target));
  return j.dump(2) + "\n";
}

std::vector<std::pair<Target, FailureWitness>> witnesses_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("witness JSON: ") + e.what());
  }

  auto entry = [](const json& v,
                  std::optional<Target> fallback) -> std::pair<Target, FailureWitness> {
    FailureWitness w = witness_from_json_obj(v);
    std::optional<Target> target = fallback;
    if (v.contains("target") && v["target"].is_string())
      target = target_from_string(v["target"].get<std::string>());
    if (!target)
      throw std::invalid_argument("witness JSON: no target on the witness or the report");
    return {*target, std::move(w)};
  };

  std::vector<std::pair<Target, FailureWitness>> out;
  if (j.is_object() && j.contains("failure_witnesses")) {
    std::optional<Target> fallback;
    if (j.contains("campaign") && j["campaign"].is_object() &&
        j["campaign"].contains("target") && j["campaign"]["target"].is_string())
      fallback = target_from_string(j["campaign"]["target"].get<std::string>());
    for (const auto& v : j["failure_witnesses"]) out.push_back(entry(v, fallback));
  } else if (j.is_array()) {
    for (const auto& v : j) out.push_back(entry(v, std::nullopt));
  } else if (j.is_object()) {
    out.push_back(entry(j, std::nullopt));
  } else {
    throw std::invalid_argument("witness JSON: expected a report, a witness or an array");
  }
  return out;
}

bool replay_witness(Target target, const FailureWitness& w, const ExtractorOptions& options) {
  Graph g = graph6_decode(w.graph6);
  const int n = g.order();
  const int k = w.k;
  if (k < 1) throw std::invalid_argument("replay: k must be >= 1");

  auto need_roots = [&] {
    if (!g.has_vertex(w.x) || !g.has_vertex(w.y) || w.x == w.y)
      throw std::invalid_argument("replay: witness roots invalid for its graph");
    if (w.z && !g.has_vertex(*w.z))
      throw std::invalid_argument("replay: witness z invalid for its graph");
  };

  switch (target) {
    case Target::theorem_1_2: {
      need_roots();
      if (!w.z) throw std::invalid_argument("replay: theorem-1.2 witness needs z");
      std::optional<int> dmin = delta(g, w.x, w.y, w.z);
      bool sat = is_two_connected(g) && dmin && *dmin >= k + 1;
      if (!sat) return true;  // hypothesis gone, nothing to refute
      std::string why;
      return try_paths(g, w.x, w.y, w.z, k, options, nullptr, &why);
    }
    case Target::theorem_2_1: {
      need_roots();
      std::optional<int> dmin = delta(g, w.x, w.y, w.z);
      bool sat = is_two_connected_rooted(g, w.x, w.y) && dmin && *dmin >= k + 1;
      if (!sat) return true;
      std::string why;
      return try_paths(g, w.x, w.y, w.z, k, options, nullptr, &why);
    }
    case Target::theorem_1_4: {
      std::vector<int> degs(n);
      for (Vertex v = 0; v < n; ++v) degs[v] = degree(g, v);
      std::sort(degs.begin(), degs.end());
      auto below = std::lower_bound(degs.begin(), degs.end(), k + 1) - degs.begin();
      bool sat = k >= 2 && n >= 3 && is_connected(g) && below <= 2;
      if (!sat) return true;
      std::string why;
      return try_cycles(g, k, options, nullptr, &why);
    }
    case Target::conjecture_1:
    case Target::conjecture_2: {
      int mindeg = INT_MAX;
      for (Vertex v = 0; v < n; ++v) mindeg = std::min(mindeg, degree(g, v));
      if (n == 0) mindeg = -1;
      bool base = target == Target::conjecture_1
                      ? true
                      : is_two_connected(g) && !is_bipartite(g);
      if (!base || mindeg < k + 1) return true;
      try {
        LengthSpectrum spec = cycle_length_spectrum(g, options.budget);
        Parity parity = target == Target::conjecture_1 ? Parity::even : Parity::all;
        return residue_coverage(spec, k, parity);
      } catch (const BudgetExceededError&) {
        return false;
      }
    }
    case Target::facts: {
      need_roots();
      if (!is_two_connected_rooted(g, w.x, w.y)) return true;
      std::optional<Core> core = find_core(g, w.x, w.y);
      if (!core) return true;
      try {
        return check_fact3(g, w.x, w.y, *core, k, options.budget);
      } catch (const BudgetExceededError&) {
        return false;
      }
    }
  }
  throw std::invalid_argument("replay: unknown target");
}

}  // namespace admissible
