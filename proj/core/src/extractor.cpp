#include "admissible/extractor.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

#include "admissible/graph_io.hpp"

namespace admissible {

namespace {

std::string describe(const std::string& stage, const std::string& graph6, Vertex x, Vertex y,
                     std::optional<Vertex> z, int k) {
  std::ostringstream os;
  os << "extraction failed at " << stage << " on " << graph6 << " x=" << x << " y=" << y
     << " z=" << (z ? std::to_string(*z) : "-") << " k=" << k;
  return os.str();
}

}  // namespace

ExtractionError::ExtractionError(std::string stage_in, std::string graph6_in, Vertex x_in,
                                 Vertex y_in, std::optional<Vertex> z_in, int k_in)
    : std::runtime_error(describe(stage_in, graph6_in, x_in, y_in, z_in, k_in)),
      stage(std::move(stage_in)),
      graph6(std::move(graph6_in)),
      x(x_in),
      y(y_in),
      z(z_in),
      k(k_in) {}

namespace {

[[noreturn]] void fail(const Graph& g, Vertex x, Vertex y, std::optional<Vertex> z, int k,
                       const char* stage) {
  throw ExtractionError(stage, graph6_encode(g), x, y, z, k);
}

std::vector<int> path_lengths(const std::vector<OrientedPath>& ps) {
  std::vector<int> out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.push_back(p.length());
  return out;
}

// a ends where b starts.
OrientedPath concat(const OrientedPath& a, const OrientedPath& b) {
  OrientedPath out = a;
  out.vertices.insert(out.vertices.end(), b.vertices.begin() + 1, b.vertices.end());
  return out;
}

OrientedPath lift(const OrientedPath& p, const std::vector<Vertex>& to_host) {
  OrientedPath out;
  out.vertices.reserve(p.vertices.size());
  for (Vertex v : p.vertices) out.vertices.push_back(to_host[static_cast<size_t>(v)]);
  return out;
}

std::vector<Vertex> all_vertices(const Graph& g) {
  std::vector<Vertex> out(static_cast<size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) out[static_cast<size_t>(v)] = v;
  return out;
}

std::vector<Vertex> intersect_sorted(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<Vertex> subtract_sorted(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::vector<Vertex> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Smallest-start run of k lengths with gap 1 (preferred) or 2 inside a sorted
// spectrum.
std::optional<std::vector<int>> pick_run(const std::vector<int>& lengths, int k, int min_start) {
  for (int gap : {1, 2})
    for (int start : lengths) {
      if (start < min_start) continue;
      bool ok = true;
      for (int m = 0; m < k && ok; ++m)
        ok = std::binary_search(lengths.begin(), lengths.end(), start + m * gap);
      if (ok) {
        std::vector<int> run(static_cast<size_t>(k));
        for (int m = 0; m < k; ++m) run[static_cast<size_t>(m)] = start + m * gap;
        return run;
      }
    }
  return std::nullopt;
}

bool rooted_hypothesis(const Graph& g, Vertex x, Vertex y, std::optional<Vertex> z, int k) {
  if (!is_two_connected_rooted(g, x, y)) return false;
  auto d = delta(g, x, y, z);
  return d && *d >= k + 1;
}

// Block indices along the block-tree path between the blocks holding `from`
// and `to`; both are expected to be non-cut, so their block is unique.
std::optional<std::vector<int>> block_chain(const BlockDecomposition& bd, Vertex from, Vertex to) {
  int start = bd.block_containing(from);
  int goal = bd.block_containing(to);
  if (start < 0 || goal < 0) return std::nullopt;
  size_t nb = bd.blocks.size();
  std::vector<int> prev(nb, -2);
  std::vector<int> queue{start};
  prev[static_cast<size_t>(start)] = -1;
  for (size_t head = 0; head < queue.size(); ++head) {
    int b = queue[head];
    if (b == goal) break;
    for (Vertex c : bd.block_cuts[static_cast<size_t>(b)]) {
      auto it = std::lower_bound(bd.cut_vertices.begin(), bd.cut_vertices.end(), c);
      int ci = static_cast<int>(it - bd.cut_vertices.begin());
      for (int nbk : bd.blocks_of_cut[static_cast<size_t>(ci)])
        if (prev[static_cast<size_t>(nbk)] == -2) {
          prev[static_cast<size_t>(nbk)] = b;
          queue.push_back(nbk);
        }
    }
  }
  if (prev[static_cast<size_t>(goal)] == -2) return std::nullopt;
  std::vector<int> chain;
  for (int b = goal; b != -1; b = prev[static_cast<size_t>(b)]) chain.push_back(b);
  std::reverse(chain.begin(), chain.end());
  return chain;
}

// The one vertex two consecutive chain blocks share.
std::optional<Vertex> shared_cut(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  auto common = intersect_sorted(a, b);
  if (common.size() != 1) return std::nullopt;
  return common[0];
}

struct Ctx {
  ExtractorOptions opt;
  int depth_cap = 0;
};

std::vector<OrientedPath> extract_paths(const Graph& g, Vertex x, Vertex y,
                                        std::optional<Vertex> z, int k, Ctx& ctx, int depth);

// Recurse on g minus {a, o} with roots (p, q) and wrap each path as a-P-o.
std::optional<std::vector<OrientedPath>> sandwich_route(const Graph& g, Vertex a, Vertex o,
                                                        Vertex p, Vertex q,
                                                        std::optional<Vertex> z, int k, Ctx& ctx,
                                                        int depth) {
  if (!g.has_edge(a, p) || !g.has_edge(q, o)) return std::nullopt;
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.order(); ++v)
    if (v != a && v != o) keep.push_back(v);
  auto sub = induced(g, keep);
  Vertex p2 = sub.to_sub[static_cast<size_t>(p)];
  Vertex q2 = sub.to_sub[static_cast<size_t>(q)];
  std::optional<Vertex> z2;
  if (z && *z != a && *z != o) z2 = sub.to_sub[static_cast<size_t>(*z)];
  if (!rooted_hypothesis(sub.graph, p2, q2, z2, k)) return std::nullopt;
  std::vector<OrientedPath> out;
  for (const auto& p_sub : extract_paths(sub.graph, p2, q2, z2, k, ctx, depth + 1)) {
    OrientedPath full;
    full.vertices.push_back(a);
    auto host = lift(p_sub, sub.to_host);
    full.vertices.insert(full.vertices.end(), host.vertices.begin(), host.vertices.end());
    full.vertices.push_back(o);
    out.push_back(std::move(full));
  }
  return out;
}

struct Contracted {
  Graph graph;
  Vertex star = -1;
  Vertex bb_local = -1;
  std::optional<Vertex> z_local;
  std::vector<Vertex> to_host_pre;   // pre-contraction local -> host
  std::vector<Vertex> pre_of_post;   // post index -> pre index, star -> -1
};

// Induce g on block | attach and identify the attach set to one vertex.
std::optional<Contracted> contract_attach(const Graph& g, const std::vector<Vertex>& block,
                                          Vertex bb, std::optional<Vertex> zz,
                                          const std::vector<Vertex>& attach) {
  std::vector<Vertex> region = block;
  region.insert(region.end(), attach.begin(), attach.end());
  std::sort(region.begin(), region.end());
  region.erase(std::unique(region.begin(), region.end()), region.end());
  auto sub = induced(g, region);

  std::vector<Vertex> attach_local;
  for (Vertex t : attach) attach_local.push_back(sub.to_sub[static_cast<size_t>(t)]);
  ContractionResult cr;
  try {
    cr = contract_set(sub.graph, attach_local);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }

  Contracted out;
  out.graph = cr.graph;
  out.star = cr.merged;
  out.bb_local = cr.vertex_map[static_cast<size_t>(sub.to_sub[static_cast<size_t>(bb)])];
  if (zz && sub.to_sub[static_cast<size_t>(*zz)] >= 0) {
    Vertex zl = cr.vertex_map[static_cast<size_t>(sub.to_sub[static_cast<size_t>(*zz)])];
    if (zl != cr.merged) out.z_local = zl;
  }
  out.to_host_pre = sub.to_host;
  out.pre_of_post.assign(static_cast<size_t>(cr.graph.order()), -1);
  for (Vertex v = 0; v < sub.graph.order(); ++v) {
    Vertex post = cr.vertex_map[static_cast<size_t>(v)];
    if (post != cr.merged) out.pre_of_post[static_cast<size_t>(post)] = v;
  }
  return out;
}

// Replace the leading merged vertex of a contracted-instance path by a real
// attach vertex adjacent (in g) to the second path vertex and map the rest
// back to host ids.
std::optional<OrientedPath> expand_star_path(const Graph& g, const Contracted& ct,
                                             const std::vector<Vertex>& attach,
                                             const OrientedPath& p) {
  if (p.vertices.size() < 2 || p.vertices.front() != ct.star) return std::nullopt;
  Vertex w_pre = ct.pre_of_post[static_cast<size_t>(p.vertices[1])];
  if (w_pre < 0) return std::nullopt;
  Vertex w_host = ct.to_host_pre[static_cast<size_t>(w_pre)];
  Vertex real = -1;
  for (Vertex t : attach)
    if (g.has_edge(t, w_host)) {
      real = t;
      break;
    }
  if (real < 0) return std::nullopt;
  OrientedPath out;
  out.vertices.push_back(real);
  for (size_t i = 1; i < p.vertices.size(); ++i) {
    Vertex pre = ct.pre_of_post[static_cast<size_t>(p.vertices[i])];
    if (pre < 0) return std::nullopt;  // star may appear only in front
    out.vertices.push_back(ct.to_host_pre[static_cast<size_t>(pre)]);
  }
  return out;
}

// Paths from the given apex a to the other root o built around a core at a.
std::optional<std::vector<OrientedPath>> core_route(const Graph& g, Vertex a, Vertex o,
                                                    std::optional<Vertex> z, int k, Ctx& ctx,
                                                    int depth) {
  auto found = find_core(g, a, o);
  if (!found) return std::nullopt;
  Core core = *found;
  if (core.type == 3) core = apply_condition_t(g, core, o, z);
  int ell = core.ell;

  auto hv = core.vertices();
  auto keep = subtract_sorted(all_vertices(g), hv);
  auto rest = induced(g, keep);
  auto comp_local = component_of(rest.graph, rest.to_sub[static_cast<size_t>(o)]);
  std::vector<Vertex> comp;
  comp.reserve(comp_local.size());
  for (Vertex v : comp_local) comp.push_back(rest.to_host[static_cast<size_t>(v)]);

  auto comp_nbhd = neighborhood_of_set(g, comp);
  auto w_t = intersect_sorted(comp_nbhd, core.t_set);
  auto w_s = intersect_sorted(comp_nbhd, core.s_set);

  auto exit_to_o = [&](Vertex door, const std::vector<Vertex>& inside) {
    std::vector<Vertex> allowed = inside;
    allowed.push_back(door);
    std::sort(allowed.begin(), allowed.end());
    allowed.erase(std::unique(allowed.begin(), allowed.end()), allowed.end());
    return shortest_path_within(g, door, o, allowed);
  };

  // Enough T-paths: route each through the component to o.
  if (!w_t.empty() && ell + 1 >= k) {
    Vertex t = w_t[0];
    auto fam = paths_x_to_t(core, t);
    auto bridge = exit_to_o(t, comp);
    if (bridge) {
      std::vector<OrientedPath> out;
      for (size_t i = fam.paths.size() - static_cast<size_t>(k); i < fam.paths.size(); ++i)
        out.push_back(concat(fam.paths[i], *bridge));
      return out;
    }
  }

  // Enough S-paths.
  if (!w_s.empty() && ell >= k && core.type != 1) {
    Vertex s = w_s[0];
    std::optional<Vertex> forbid;
    if (core.type == 3) forbid = core.t_set.front();
    auto ps = paths_x_to_s(core, s, forbid);
    auto bridge = exit_to_o(s, comp);
    if (bridge) {
      std::vector<OrientedPath> out;
      for (size_t i = ps.size() - static_cast<size_t>(k); i < ps.size(); ++i)
        out.push_back(concat(ps[i], *bridge));
      return out;
    }
  }

  const auto& na = g.neighbors(a);
  const auto& no = g.neighbors(o);

  if (comp.size() == 1 && comp[0] == o) {
    // o sees only the core.
    if (core.type == 1 && na == core.t_set && no == core.t_set && ell + 1 >= k) {
      std::vector<OrientedPath> out;
      for (int len = ell + 3 - k; len <= ell + 2; ++len) {
        OrientedPath p;
        p.vertices.push_back(a);
        for (int i = 0; i < len - 1; ++i) p.vertices.push_back(core.t_set[static_cast<size_t>(i)]);
        p.vertices.push_back(o);
        out.push_back(std::move(p));
      }
      return out;
    }
    if (core.type == 2 && na == core.s_set && no == core.s_set)
      return sandwich_route(g, a, o, core.s_set[0], core.s_set[1], z, k, ctx, depth);
    if (core.type == 3 && na == core.t_set && no == core.t_set && core.t_set.size() == 2)
      return sandwich_route(g, a, o, core.t_set[0], core.t_set[1], z, k, ctx, depth);
    return std::nullopt;
  }

  // The component is bigger than {o}: peel a feasible block of it.
  auto comp_sub = induced(g, comp);
  std::optional<Vertex> z_in_comp;
  if (z && comp_sub.to_sub[static_cast<size_t>(*z)] >= 0)
    z_in_comp = comp_sub.to_sub[static_cast<size_t>(*z)];
  auto fbs = feasible_blocks(comp_sub.graph, comp_sub.to_sub[static_cast<size_t>(o)], z_in_comp);

  for (const auto& fb : fbs) {
    std::vector<Vertex> block;
    block.reserve(fb.vertices.size());
    for (Vertex v : fb.vertices) block.push_back(comp_sub.to_host[static_cast<size_t>(v)]);
    Vertex bb = comp_sub.to_host[static_cast<size_t>(fb.b)];
    std::optional<Vertex> zz;
    if (fb.z_prime) zz = comp_sub.to_host[static_cast<size_t>(*fb.z_prime)];

    std::vector<Vertex> block_minus;
    for (Vertex v : block)
      if (v != bb) block_minus.push_back(v);
    auto outer_nbhd = neighborhood_of_set(g, block_minus);
    auto exit_region = subtract_sorted(comp, block);
    auto bridge = exit_to_o(bb, exit_region);
    if (!bridge) continue;

    auto assemble = [&](const Contracted& ct, const std::vector<Vertex>& attach, int child_k,
                        auto&& head_family) -> std::optional<std::vector<OrientedPath>> {
      if (!rooted_hypothesis(ct.graph, ct.star, ct.bb_local, ct.z_local, child_k))
        return std::nullopt;
      std::vector<OrientedPath> child;
      try {
        child = extract_paths(ct.graph, ct.star, ct.bb_local, ct.z_local, child_k, ctx, depth + 1);
      } catch (const ExtractionError&) {
        return std::nullopt;
      }
      std::vector<OrientedPath> tails;
      std::vector<std::vector<OrientedPath>> heads;
      for (const auto& cp : child) {
        auto real = expand_star_path(g, ct, attach, cp);
        if (!real) return std::nullopt;
        tails.push_back(concat(*real, *bridge));
        heads.push_back(head_family(real->vertices.front()));
      }
      try {
        return combine_fact1(g, a, o, tails, heads).paths;
      } catch (const std::exception&) {
        return std::nullopt;
      }
    };

    // Identify the block's T-attachments and recurse with k - ell.
    auto attach_t = intersect_sorted(outer_nbhd, core.t_set);
    if (!attach_t.empty() && k - ell >= 1) {
      auto ct = contract_attach(g, block, bb, zz, attach_t);
      if (ct) {
        auto got = assemble(*ct, attach_t, k - ell, [&](Vertex t) {
          return paths_x_to_t(core, t).paths;
        });
        if (got) return got;
      }
    }

    // Same through S.
    auto attach_s = intersect_sorted(outer_nbhd, core.s_set);
    if (!attach_s.empty()) {
      if (core.type == 2) {
        auto ct = contract_attach(g, block, bb, zz, attach_s);
        if (ct) {
          auto got = assemble(*ct, attach_s, k - 1, [&](Vertex s) {
            auto ps = paths_x_to_s(core, s);
            ps.resize(2);
            return ps;
          });
          if (got) return got;
        }
      }
      if (core.type == 3 && ell >= 1 && k - ell + 1 >= 1) {
        auto ct = contract_attach(g, block, bb, zz, attach_s);
        if (ct) {
          auto got = assemble(*ct, attach_s, k - ell + 1, [&](Vertex s) {
            return paths_x_to_s(core, s, core.t_set.front());
          });
          if (got) return got;
        }
      }
    }

    // The apex reaches into the block directly.
    if (std::binary_search(outer_nbhd.begin(), outer_nbhd.end(), a)) {
      std::vector<Vertex> region = block;
      region.push_back(a);
      std::sort(region.begin(), region.end());
      auto sub = induced(g, region);
      Vertex a2 = sub.to_sub[static_cast<size_t>(a)];
      Vertex bb2 = sub.to_sub[static_cast<size_t>(bb)];
      std::optional<Vertex> z2;
      if (zz && sub.to_sub[static_cast<size_t>(*zz)] >= 0)
        z2 = sub.to_sub[static_cast<size_t>(*zz)];
      if (rooted_hypothesis(sub.graph, a2, bb2, z2, k)) {
        std::vector<OrientedPath> out;
        bool good = true;
        try {
          for (const auto& cp : extract_paths(sub.graph, a2, bb2, z2, k, ctx, depth + 1))
            out.push_back(concat(lift(cp, sub.to_host), *bridge));
        } catch (const ExtractionError&) {
          good = false;
        }
        if (good) return out;
      }
    }
  }

  return std::nullopt;
}

std::vector<OrientedPath> extract_paths(const Graph& g, Vertex x, Vertex y,
                                        std::optional<Vertex> z, int k, Ctx& ctx, int depth) {
  if (depth > ctx.depth_cap) fail(g, x, y, z, k, "depth-cap");

  // One path is a shortest path, around the root edge when present.
  if (k == 1) {
    const Graph* host = &g;
    Graph cut{0};
    if (g.has_edge(x, y)) {
      cut = g.without_edge(x, y);
      host = &cut;
    }
    auto p = shortest_path_within(*host, x, y, all_vertices(*host));
    if (!p) fail(g, x, y, z, k, "k1-disconnected");
    return {*p};
  }

  if (g.order() <= ctx.opt.oracle_threshold) {
    auto scan = scan_paths(g, x, y, ctx.opt.budget);
    auto run = pick_run(scan.spectrum.lengths, k, 2);
    if (!run) fail(g, x, y, z, k, "oracle-exhausted");
    std::vector<OrientedPath> out;
    for (int len : *run) {
      auto it = std::lower_bound(scan.spectrum.lengths.begin(), scan.spectrum.lengths.end(), len);
      out.push_back(scan.representatives[static_cast<size_t>(
          it - scan.spectrum.lengths.begin())]);
    }
    return out;
  }

  // Split at a cut vertex: recurse into one side, cross the other by a fixed
  // path. Misses fall through to the core routes, which tolerate cut
  // vertices.
  auto bd = blocks(g);
  if (!bd.cut_vertices.empty()) {
    auto cut_split = [&]() -> std::optional<std::vector<OrientedPath>> {
      auto chain = block_chain(bd, x, y);
      if (!chain) return std::nullopt;
      std::vector<Vertex> covered;
      for (int b : *chain)
        covered.insert(covered.end(), bd.blocks[static_cast<size_t>(b)].begin(),
                       bd.blocks[static_cast<size_t>(b)].end());
      std::sort(covered.begin(), covered.end());
      covered.erase(std::unique(covered.begin(), covered.end()), covered.end());
      if (static_cast<int>(covered.size()) != g.order()) return std::nullopt;

      for (size_t i = 0; i + 1 < chain->size(); ++i) {
        auto c = shared_cut(bd.blocks[static_cast<size_t>((*chain)[i])],
                            bd.blocks[static_cast<size_t>((*chain)[i + 1])]);
        if (!c) return std::nullopt;
        std::vector<Vertex> near;
        for (size_t j = 0; j <= i; ++j)
          near.insert(near.end(), bd.blocks[static_cast<size_t>((*chain)[j])].begin(),
                      bd.blocks[static_cast<size_t>((*chain)[j])].end());
        std::sort(near.begin(), near.end());
        near.erase(std::unique(near.begin(), near.end()), near.end());
        auto far = subtract_sorted(covered, near);
        far.push_back(*c);
        std::sort(far.begin(), far.end());

        auto try_side = [&](const std::vector<Vertex>& side, Vertex from, Vertex to,
                            const std::vector<Vertex>& other, Vertex ofrom, Vertex oto,
                            bool append) -> std::optional<std::vector<OrientedPath>> {
          auto sub = induced(g, side);
          Vertex f2 = sub.to_sub[static_cast<size_t>(from)];
          Vertex t2 = sub.to_sub[static_cast<size_t>(to)];
          std::optional<Vertex> z2;
          if (z && sub.to_sub[static_cast<size_t>(*z)] >= 0)
            z2 = sub.to_sub[static_cast<size_t>(*z)];
          if (!rooted_hypothesis(sub.graph, f2, t2, z2, k)) return std::nullopt;
          auto crossing = shortest_path_within(g, ofrom, oto, other);
          if (!crossing) return std::nullopt;
          std::vector<OrientedPath> out;
          try {
            for (const auto& cp : extract_paths(sub.graph, f2, t2, z2, k, ctx, depth + 1)) {
              auto host = lift(cp, sub.to_host);
              out.push_back(append ? concat(host, *crossing) : concat(*crossing, host));
            }
          } catch (const ExtractionError&) {
            return std::nullopt;
          }
          return out;
        };

        if (auto got = try_side(near, x, *c, far, *c, y, true)) return got;
        if (auto got = try_side(far, *c, y, near, x, *c, false)) return got;
      }
      return std::nullopt;
    };
    if (auto got = cut_split()) return *got;
  } else {
    // 2-connected; strip edges among the roots. Misses again fall through.
    if (g.has_edge(x, y)) {
      Graph g2 = g.without_edge(x, y);
      if (rooted_hypothesis(g2, x, y, z, k)) {
        try {
          return extract_paths(g2, x, y, z, k, ctx, depth + 1);
        } catch (const ExtractionError&) {
        }
      }
    }
    if (z && *z != x && *z != y) {
      for (Vertex r : {x, y}) {
        if (!g.has_edge(r, *z)) continue;
        Graph g2 = g.without_edge(r, *z);
        if (rooted_hypothesis(g2, x, y, z, k)) {
          try {
            return extract_paths(g2, x, y, z, k, ctx, depth + 1);
          } catch (const ExtractionError&) {
            continue;
          }
        }

        // The deletion split g2 into a chain from r to z; keep the prefix up
        // to the first block holding the other root.
        auto bd2 = blocks(g2);
        auto chain = block_chain(bd2, r, *z);
        if (!chain) continue;
        Vertex other = r == x ? y : x;
        size_t p = chain->size();
        for (size_t i = 0; i < chain->size(); ++i) {
          const auto& blk = bd2.blocks[static_cast<size_t>((*chain)[i])];
          if (std::binary_search(blk.begin(), blk.end(), other)) {
            p = i;
            break;
          }
        }
        if (p + 1 >= chain->size()) continue;
        auto zp = shared_cut(bd2.blocks[static_cast<size_t>((*chain)[p])],
                             bd2.blocks[static_cast<size_t>((*chain)[p + 1])]);
        if (!zp) continue;
        std::vector<Vertex> prefix;
        for (size_t i = 0; i <= p; ++i)
          prefix.insert(prefix.end(), bd2.blocks[static_cast<size_t>((*chain)[i])].begin(),
                        bd2.blocks[static_cast<size_t>((*chain)[i])].end());
        std::sort(prefix.begin(), prefix.end());
        prefix.erase(std::unique(prefix.begin(), prefix.end()), prefix.end());
        auto sub = induced(g2, prefix);
        Vertex x2 = sub.to_sub[static_cast<size_t>(x)];
        Vertex y2 = sub.to_sub[static_cast<size_t>(y)];
        Vertex z2 = sub.to_sub[static_cast<size_t>(*zp)];
        if (!rooted_hypothesis(sub.graph, x2, y2, z2, k)) continue;
        try {
          std::vector<OrientedPath> out;
          for (const auto& cp : extract_paths(sub.graph, x2, y2, z2, k, ctx, depth + 1))
            out.push_back(lift(cp, sub.to_host));
          return out;
        } catch (const ExtractionError&) {
          continue;
        }
      }
    }
  }

  for (auto [a, o] : {std::pair<Vertex, Vertex>{x, y}, std::pair<Vertex, Vertex>{y, x}}) {
    auto got = core_route(g, a, o, z, k, ctx, depth);
    if (!got) continue;
    if (a == x) return *got;
    std::vector<OrientedPath> out;
    for (const auto& p : *got) out.push_back(p.reversed());
    return out;
  }
  fail(g, x, y, z, k, "no-route");
}

CertificateCheck check_paths(const Graph& host, Vertex x, Vertex y, int k,
                             const std::vector<OrientedPath>& paths) {
  CertificateCheck c;
  auto bad = [&](std::string msg) {
    c.ok = false;
    c.problems.push_back(std::move(msg));
  };
  if (!host.has_vertex(x) || !host.has_vertex(y) || x == y) bad("bad roots");
  if (static_cast<int>(paths.size()) != k) bad("path count differs from k");
  for (size_t i = 0; i < paths.size(); ++i) {
    const auto& p = paths[i];
    std::string tag = "path " + std::to_string(i);
    if (p.vertices.empty()) {
      bad(tag + " empty");
      continue;
    }
    if (!p.valid_in(host)) bad(tag + " is not a simple path of the host");
    if (p.source() != x || p.target() != y) bad(tag + " endpoints differ from the roots");
  }
  if (c.ok && !is_admissible(path_lengths(paths)))
    bad("lengths are not an admissible sequence");
  return c;
}

CertificateCheck check_cycles(const Graph& host, int k,
                              const std::vector<std::vector<Vertex>>& cycles) {
  CertificateCheck c;
  auto bad = [&](std::string msg) {
    c.ok = false;
    c.problems.push_back(std::move(msg));
  };
  if (static_cast<int>(cycles.size()) != k) bad("cycle count differs from k");
  std::vector<int> lengths;
  for (size_t i = 0; i < cycles.size(); ++i) {
    const auto& cyc = cycles[i];
    std::string tag = "cycle " + std::to_string(i);
    lengths.push_back(static_cast<int>(cyc.size()));
    if (cyc.size() < 3) {
      bad(tag + " has fewer than 3 vertices");
      continue;
    }
    auto sorted = cyc;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      bad(tag + " repeats a vertex");
    bool edges_ok = true;
    for (size_t j = 0; j < cyc.size(); ++j) {
      Vertex u = cyc[j];
      Vertex v = cyc[(j + 1) % cyc.size()];
      if (!host.has_vertex(u) || !host.has_vertex(v) || !host.has_edge(u, v)) edges_ok = false;
    }
    if (!edges_ok) bad(tag + " uses a non-edge");
  }
  if (c.ok && !is_admissible(lengths)) bad("lengths are not an admissible sequence");
  return c;
}

std::vector<std::vector<Vertex>> parse_vertex_lines(std::istream& in, int count,
                                                    const char* what) {
  std::vector<std::vector<Vertex>> rows;
  std::string line;
  while (static_cast<int>(rows.size()) < count && std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<Vertex> row;
    Vertex v;
    while (ls >> v) row.push_back(v);
    if (!ls.eof()) throw std::invalid_argument(std::string(what) + ": bad vertex line");
    if (row.empty()) continue;
    rows.push_back(std::move(row));
  }
  if (static_cast<int>(rows.size()) != count)
    throw std::invalid_argument(std::string(what) + ": missing rows");
  return rows;
}

}  // namespace

CertificateCheck PathCertificate::validate() const { return check_paths(host, x, y, k, paths); }

std::string PathCertificate::to_text() const {
  std::ostringstream os;
  os << k << ' ' << x << ' ' << y << '\n';
  for (const auto& p : paths) {
    for (size_t i = 0; i < p.vertices.size(); ++i) os << (i ? " " : "") << p.vertices[i];
    os << '\n';
  }
  return os.str();
}

PathCertificate PathCertificate::from_text(const Graph& host, const std::string& text) {
  std::istringstream in(text);
  PathCertificate cert;
  cert.host = host;
  std::string header;
  if (!std::getline(in, header)) throw std::invalid_argument("path certificate: empty input");
  std::istringstream hs(header);
  if (!(hs >> cert.k >> cert.x >> cert.y))
    throw std::invalid_argument("path certificate: bad header");
  for (auto& row : parse_vertex_lines(in, cert.k, "path certificate"))
    cert.paths.push_back(OrientedPath{std::move(row)});
  return cert;
}

CertificateCheck CycleCertificate::validate() const { return check_cycles(host, k, cycles); }

std::string CycleCertificate::to_text() const {
  std::ostringstream os;
  os << k << '\n';
  for (const auto& cyc : cycles) {
    for (size_t i = 0; i < cyc.size(); ++i) os << (i ? " " : "") << cyc[i];
    os << '\n';
  }
  return os.str();
}

CycleCertificate CycleCertificate::from_text(const Graph& host, const std::string& text) {
  std::istringstream in(text);
  CycleCertificate cert;
  cert.host = host;
  std::string header;
  if (!std::getline(in, header)) throw std::invalid_argument("cycle certificate: empty input");
  std::istringstream hs(header);
  if (!(hs >> cert.k)) throw std::invalid_argument("cycle certificate: bad header");
  cert.cycles = parse_vertex_lines(in, cert.k, "cycle certificate");
  return cert;
}

PathCertificate combine_fact1(const Graph& g, Vertex x, Vertex y,
                              const std::vector<OrientedPath>& tails,
                              const std::vector<std::vector<OrientedPath>>& heads) {
  size_t s = tails.size();
  if (s == 0) throw std::invalid_argument("combine_fact1: no tails");
  if (heads.size() != s) throw std::invalid_argument("combine_fact1: one head row per tail");
  size_t t = heads[0].size();
  if (t == 0) throw std::invalid_argument("combine_fact1: empty head row");
  for (const auto& row : heads)
    if (row.size() != t) throw std::invalid_argument("combine_fact1: ragged head rows");

  for (size_t i = 0; i < s; ++i) {
    if (!tails[i].valid_in(g)) throw std::invalid_argument("combine_fact1: invalid tail");
    if (tails[i].target() != y) throw std::invalid_argument("combine_fact1: tail must end at y");
  }
  if (!is_semi_admissible(path_lengths(tails)))
    throw std::invalid_argument("combine_fact1: tails are not semi-admissible");

  for (size_t i = 0; i < s; ++i) {
    Vertex u = tails[i].source();
    std::vector<char> on_tail(static_cast<size_t>(g.order()), 0);
    for (Vertex v : tails[i].vertices) on_tail[static_cast<size_t>(v)] = 1;
    std::vector<int> row_lengths;
    for (size_t j = 0; j < t; ++j) {
      const auto& h = heads[i][j];
      if (!h.valid_in(g)) throw std::invalid_argument("combine_fact1: invalid head");
      if (h.source() != x) throw std::invalid_argument("combine_fact1: head must start at x");
      if (h.target() != u)
        throw std::invalid_argument("combine_fact1: head must end at its tail's start");
      for (Vertex v : h.vertices)
        if (on_tail[static_cast<size_t>(v)] && v != u)
          throw std::invalid_argument("combine_fact1: head touches its tail");
      row_lengths.push_back(h.length());
      if (heads[i][j].vertices.size() != heads[0][j].vertices.size())
        throw std::invalid_argument("combine_fact1: column order mismatch");
    }
    if (!is_semi_admissible(row_lengths))
      throw std::invalid_argument("combine_fact1: head row is not semi-admissible");
  }

  // All joint lengths, each kept with its first witness.
  std::map<int, std::pair<size_t, size_t>> options;
  for (size_t i = 0; i < s; ++i)
    for (size_t j = 0; j < t; ++j)
      options.emplace(tails[i].length() + heads[i][j].length(), std::make_pair(i, j));

  size_t want = s + t - 1;
  std::vector<int> schedule;
  for (int gap : {1, 2}) {
    for (const auto& [start, w] : options) {
      (void)w;
      if (start < 2) continue;
      bool ok = true;
      for (size_t m = 0; m < want && ok; ++m)
        ok = options.count(start + static_cast<int>(m) * gap) > 0;
      if (ok) {
        for (size_t m = 0; m < want; ++m) schedule.push_back(start + static_cast<int>(m) * gap);
        break;
      }
    }
    if (!schedule.empty()) break;
  }
  if (schedule.empty()) throw std::logic_error("combine_fact1: no admissible schedule");

  PathCertificate cert;
  cert.host = g;
  cert.x = x;
  cert.y = y;
  cert.k = static_cast<int>(want);
  for (int len : schedule) {
    auto [i, j] = options.at(len);
    OrientedPath joined = concat(heads[i][j], tails[i]);
    if (!joined.valid_in(g)) throw std::invalid_argument("combine_fact1: non-simple concatenation");
    cert.paths.push_back(std::move(joined));
  }
  return cert;
}

bool paths_hypothesis_holds(const RootedGraph& r, int k) {
  r.validate();
  if (k < 1) return false;
  return rooted_hypothesis(r.g, r.x, r.y, r.z, k);
}

bool cycles_hypothesis_holds(const Graph& g, int k) {
  if (k < 2) return false;
  if (g.order() < 3 || !is_connected(g)) return false;
  int deficient = 0;
  for (Vertex v = 0; v < g.order(); ++v)
    if (degree(g, v) < k + 1) ++deficient;
  return deficient <= 2;
}

PathCertificate find_admissible_paths(const RootedGraph& r, int k,
                                      const ExtractorOptions& options) {
  r.validate();
  if (k < 1) throw HypothesisError("k must be at least 1");
  if (!is_two_connected_rooted(r)) throw HypothesisError("roots are not 2-connected");
  auto d = delta(r);
  if (!d || *d < k + 1)
    throw HypothesisError("minimum degree away from the roots is below k+1");

  Ctx ctx{options, r.g.order() + r.g.size() + 8};
  if (ctx.opt.budget.max_vertices < ctx.opt.oracle_threshold)
    ctx.opt.budget.max_vertices = ctx.opt.oracle_threshold;
  auto paths = extract_paths(r.g, r.x, r.y, r.z, k, ctx, 0);
  std::stable_sort(paths.begin(), paths.end(),
                   [](const OrientedPath& a, const OrientedPath& b) {
                     return a.length() < b.length();
                   });
  PathCertificate cert;
  cert.host = r.g;
  cert.x = r.x;
  cert.y = r.y;
  cert.k = k;
  cert.paths = std::move(paths);
  if (!cert.validate().ok) fail(r.g, r.x, r.y, r.z, k, "invalid-certificate");
  return cert;
}

CycleCertificate find_admissible_cycles(const Graph& g, int k, const ExtractorOptions& options) {
  if (k < 2) throw HypothesisError("k must be at least 2");
  if (g.order() < 3) throw HypothesisError("need at least 3 vertices");
  if (!is_connected(g)) throw HypothesisError("graph must be connected");
  {
    int deficient = 0;
    for (Vertex v = 0; v < g.order(); ++v)
      if (degree(g, v) < k + 1) ++deficient;
    if (deficient > 2) throw HypothesisError("more than two vertices of degree below k+1");
  }

  Ctx ctx{options, g.order() + g.size() + 8};
  if (ctx.opt.budget.max_vertices < ctx.opt.oracle_threshold)
    ctx.opt.budget.max_vertices = ctx.opt.oracle_threshold;

  CycleCertificate cert;
  cert.host = g;
  cert.k = k;

  if (g.order() <= ctx.opt.oracle_threshold) {
    auto scan = scan_cycles(g, ctx.opt.budget);
    auto run = pick_run(scan.spectrum.lengths, k, 3);
    if (!run) fail(g, -1, -1, std::nullopt, k, "oracle-exhausted");
    for (int len : *run) {
      auto it = std::lower_bound(scan.spectrum.lengths.begin(), scan.spectrum.lengths.end(), len);
      cert.cycles.push_back(
          scan.representatives[static_cast<size_t>(it - scan.spectrum.lengths.begin())]);
    }
  } else {
    std::vector<Vertex> by_degree = all_vertices(g);
    std::stable_sort(by_degree.begin(), by_degree.end(), [&](Vertex u, Vertex v) {
      return degree(g, u) < degree(g, v);
    });
    Vertex low1 = by_degree[0];
    Vertex low2 = by_degree[1];

    auto close_up = [&](const std::vector<OrientedPath>& paths) {
      for (const auto& p : paths) cert.cycles.push_back(p.vertices);
    };

    if (is_two_connected(g)) {
      Vertex yv = g.neighbors(low1).front();
      if (!rooted_hypothesis(g, low1, yv, low2, k)) fail(g, low1, yv, low2, k, "cycles-roots");
      close_up(extract_paths(g, low1, yv, low2, k, ctx, 0));
    } else {
      auto bd = blocks(g);
      bool done = false;

      for (size_t b = 0; b < bd.blocks.size() && !done; ++b) {
        if (!bd.is_end_block(static_cast<int>(b))) continue;
        const auto& blk = bd.blocks[b];
        if (blk.size() < 3) continue;
        Vertex cut = bd.block_cuts[b].front();
        std::vector<Vertex> interior;
        for (Vertex v : blk)
          if (v != cut) interior.push_back(v);
        std::vector<Vertex> low_inside;
        for (Vertex v : interior)
          if (v == low1 || v == low2) low_inside.push_back(v);
        if (low_inside.size() > 1) continue;
        Vertex xv = low_inside.empty() ? interior.front() : low_inside.front();

        auto sub = induced(g, blk);
        Vertex x2 = sub.to_sub[static_cast<size_t>(xv)];
        Vertex y2 = sub.graph.neighbors(x2).front();
        Vertex z2 = sub.to_sub[static_cast<size_t>(cut)];
        if (!rooted_hypothesis(sub.graph, x2, y2, z2, k)) continue;
        for (const auto& p : extract_paths(sub.graph, x2, y2, z2, k, ctx, 0))
          cert.cycles.push_back(lift(p, sub.to_host).vertices);
        done = true;
      }

      for (size_t b = 0; b < bd.blocks.size() && !done; ++b) {
        const auto& blk = bd.blocks[b];
        if (blk.size() < 3 || bd.block_cuts[b].size() != 2) continue;
        Vertex b1 = bd.block_cuts[b][0];
        Vertex b2 = bd.block_cuts[b][1];
        auto sub = induced(g, blk);
        Vertex x2 = sub.to_sub[static_cast<size_t>(b1)];
        Vertex y2 = sub.graph.neighbors(x2).front();
        Vertex z2 = sub.to_sub[static_cast<size_t>(b2)];
        if (!rooted_hypothesis(sub.graph, x2, y2, z2, k)) continue;
        for (const auto& p : extract_paths(sub.graph, x2, y2, z2, k, ctx, 0))
          cert.cycles.push_back(lift(p, sub.to_host).vertices);
        done = true;
      }

      if (!done) fail(g, -1, -1, std::nullopt, k, "cycles-no-route");
    }
  }

  std::stable_sort(cert.cycles.begin(), cert.cycles.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  if (!cert.validate().ok) fail(g, -1, -1, std::nullopt, k, "invalid-certificate");
  return cert;
}

}  // namespace admissible
