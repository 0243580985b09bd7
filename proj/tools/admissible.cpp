// Command line surface: verification campaigns, single-instance certificates,
// witness replay and raw spectra.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <sys/stat.h>

#include <CLI11.hpp>

#include "admissible/extractor.hpp"
#include "admissible/graph_io.hpp"
#include "admissible/harness.hpp"
#include "admissible/oracle.hpp"
#include "admissible/rooted.hpp"

namespace {

using namespace admissible;

GraphFormat parse_format(const std::string& name) {
  if (name == "edgelist") return GraphFormat::edge_list;
  if (name == "graph6") return GraphFormat::graph6;
  throw std::invalid_argument("unknown format: " + name + " (edgelist or graph6)");
}

bool file_exists(const std::string& path) {
  struct stat st{};
  return ::stat(path.c_str(), &st) == 0 && S_ISREG(st.st_mode);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

int cmd_verify(const Campaign& campaign, const std::string& out_path) {
  VerificationReport report = run_campaign(campaign);

  std::printf("target                %s\n", to_string(campaign.target).c_str());
  std::printf("generator             %s  n %d..%d  k %s\n",
              to_string(campaign.generator).c_str(), campaign.n_min, campaign.n_max,
              join_ints(campaign.ks).c_str());
  std::printf("instances_total       %llu\n",
              static_cast<unsigned long long>(report.instances_total));
  std::printf("hypotheses_satisfied  %llu\n",
              static_cast<unsigned long long>(report.hypotheses_satisfied));
  std::printf("verified              %llu\n",
              static_cast<unsigned long long>(report.verified));
  std::printf("failed                %llu\n", static_cast<unsigned long long>(report.failed));
  std::printf("wall_time_seconds     %.3f\n", report.wall_time_seconds);

  size_t shown = 0;
  for (const auto& w : report.failure_witnesses) {
    if (shown++ == 10) {
      std::fprintf(stderr, "... %zu more witnesses\n",
                   report.failure_witnesses.size() - 10);
      break;
    }
    std::fprintf(stderr, "witness: graph6=%s x=%d y=%d z=%s k=%d  %s\n", w.graph6.c_str(),
                 w.x, w.y, w.z ? std::to_string(*w.z).c_str() : "-", w.k, w.reason.c_str());
  }

  std::string text = report_to_json(campaign, report);
  if (out_path == "-") {
    std::fputs(text.c_str(), stdout);
  } else if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << text;
  }
  return report.failed == 0 ? 0 : 1;
}

int cmd_certify(const std::string& path, const std::string& format, Vertex x, Vertex y,
                std::optional<Vertex> z, int k, const ExtractorOptions& options) {
  Graph g = read_graph_file(path, parse_format(format));
  try {
    PathCertificate cert = find_admissible_paths(RootedGraph{g, x, y, z}, k, options);
    std::fputs(cert.to_text().c_str(), stdout);
    return 0;
  } catch (const HypothesisError& e) {
    std::fprintf(stderr, "hypothesis not satisfied: %s\n", e.what());
    return 1;
  } catch (const ExtractionError& e) {
    std::fprintf(stderr, "extraction failed: %s\n", e.what());
    return 1;
  }
}

int cmd_replay(const std::string& witness_arg, const ExtractorOptions& options) {
  std::string text = file_exists(witness_arg) ? slurp(witness_arg) : witness_arg;
  auto witnesses = witnesses_from_json(text);
  if (witnesses.empty()) {
    std::printf("no witnesses\n");
    return 0;
  }
  int reproduced = 0;
  for (const auto& [target, w] : witnesses) {
    bool ok = replay_witness(target, w, options);
    std::printf("%s  %s x=%d y=%d z=%s k=%d: %s\n", to_string(target).c_str(),
                w.graph6.c_str(), w.x, w.y, w.z ? std::to_string(*w.z).c_str() : "-", w.k,
                ok ? "verifies" : "failure reproduced");
    if (!ok) ++reproduced;
  }
  return reproduced == 0 ? 0 : 1;
}

int cmd_spectrum(const std::string& path, const std::string& format, bool cycles, bool paths,
                 Vertex x, Vertex y, const Budget& budget) {
  Graph g = read_graph_file(path, parse_format(format));
  LengthSpectrum spec;
  if (cycles == paths)
    throw std::invalid_argument("choose exactly one of --cycles / --paths");
  if (cycles) {
    spec = cycle_length_spectrum(g, budget);
  } else {
    g.require_vertex(x);
    g.require_vertex(y);
    if (x == y) throw std::invalid_argument("--x and --y must differ");
    spec = path_length_spectrum(g, x, y, budget);
  }
  std::string line;
  for (size_t i = 0; i < spec.lengths.size(); ++i) {
    if (i) line += " ";
    line += std::to_string(spec.lengths[i]);
  }
  std::printf("%s\n", line.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k admissible paths and cycles: certificates and verification campaigns"};
  app.require_subcommand(1);

  ExtractorOptions options;
  options.budget = Budget::from_env();

  // verify
  auto* verify = app.add_subcommand("verify", "run a verification campaign");
  Campaign campaign;
  campaign.options = options;
  std::string target_name, generator_name = "exhaustive-labeled", out_path;
  verify->add_option("--target", target_name,
                     "theorem-1.2|theorem-2.1|theorem-1.4|conjecture-1|conjecture-2|facts")
      ->required();
  verify->add_option("--n-min", campaign.n_min, "smallest order")->capture_default_str();
  verify->add_option("--n-max", campaign.n_max, "largest order")->capture_default_str();
  verify->add_option("--k", campaign.ks, "k values, comma separated")
      ->delimiter(',')
      ->capture_default_str();
  verify->add_option("--generator", generator_name,
                     "exhaustive-labeled|random-gnp|corpus-file")
      ->capture_default_str();
  verify->add_option("--seed", campaign.seed, "random-gnp stream seed")->capture_default_str();
  verify->add_option("--count", campaign.count, "random-gnp: graphs per order")
      ->capture_default_str();
  verify->add_option("--p", campaign.p, "random-gnp: edge probability")->capture_default_str();
  verify->add_option("--corpus", campaign.corpus_path, "corpus-file: graph6 lines");
  verify->add_option("--jobs", campaign.jobs, "worker threads, 0 = all cores")
      ->capture_default_str();
  verify->add_option("--threshold", campaign.options.oracle_threshold,
                     "order at and below which the oracle answers directly")
      ->capture_default_str();
  verify->add_option("--out", out_path, "write the JSON report here ('-' for stdout)");

  // certify
  auto* certify = app.add_subcommand("certify", "produce one path certificate");
  std::string cert_graph, cert_format = "edgelist";
  int cert_x = 0, cert_y = 1, cert_z = -1, cert_k = 1;
  certify->add_option("--graph", cert_graph, "graph file")->required();
  certify->add_option("--format", cert_format, "edgelist|graph6")->capture_default_str();
  certify->add_option("--x", cert_x, "source root")->required();
  certify->add_option("--y", cert_y, "sink root")->required();
  auto* zopt = certify->add_option("--z", cert_z, "spared vertex");
  certify->add_option("--k", cert_k, "number of paths")->required();
  certify->add_option("--threshold", options.oracle_threshold,
                      "order at and below which the oracle answers directly")
      ->capture_default_str();

  // replay
  auto* replay = app.add_subcommand("replay", "re-run failure witnesses");
  std::string witness_arg;
  replay->add_option("--witness", witness_arg, "witness/report JSON (file or literal)")
      ->required();

  // spectrum
  auto* spectrum = app.add_subcommand("spectrum", "print a length spectrum");
  std::string spec_graph, spec_format = "edgelist";
  bool spec_cycles = false, spec_paths = false;
  int spec_x = 0, spec_y = 1;
  spectrum->add_option("--graph", spec_graph, "graph file")->required();
  spectrum->add_option("--format", spec_format, "edgelist|graph6")->capture_default_str();
  spectrum->add_flag("--cycles", spec_cycles, "cycle lengths");
  spectrum->add_flag("--paths", spec_paths, "path lengths between --x and --y");
  spectrum->add_option("--x", spec_x, "path source");
  spectrum->add_option("--y", spec_y, "path target");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(verify)) {
      campaign.target = target_from_string(target_name);
      campaign.generator = generator_from_string(generator_name);
      return cmd_verify(campaign, out_path);
    }
    if (app.got_subcommand(certify)) {
      std::optional<Vertex> z;
      if (zopt->count() > 0) z = cert_z;
      return cmd_certify(cert_graph, cert_format, cert_x, cert_y, z, cert_k, options);
    }
    if (app.got_subcommand(replay)) return cmd_replay(witness_arg, options);
    if (app.got_subcommand(spectrum))
      return cmd_spectrum(spec_graph, spec_format, spec_cycles, spec_paths, spec_x, spec_y,
                          options.budget);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
