#include "admissible/rooted.hpp"

#include <algorithm>
#include <stdexcept>

namespace admissible {

void RootedGraph::validate() const {
  g.require_vertex(x);
  g.require_vertex(y);
  if (x == y) throw std::invalid_argument("roots x and y must differ");
  if (z) g.require_vertex(*z);
}

bool is_two_connected_rooted(const Graph& g, Vertex x, Vertex y) {
  g.require_vertex(x);
  g.require_vertex(y);
  if (x == y) throw std::invalid_argument("roots x and y must differ");
  if (g.order() < 3) return false;
  if (!is_connected(g)) return false;
  return is_two_connected_rooted(g, blocks(g), x, y);
}

bool is_two_connected_rooted(const Graph& g, const BlockDecomposition& bd, Vertex x, Vertex y) {
  if (g.order() < 3) return false;
  auto ends = bd.end_blocks();
  if (ends.size() > 2) return false;
  for (int b : ends) {
    const auto& verts = bd.blocks[static_cast<size_t>(b)];
    bool x_in = std::binary_search(verts.begin(), verts.end(), x) && !bd.is_cut_vertex(x);
    bool y_in = std::binary_search(verts.begin(), verts.end(), y) && !bd.is_cut_vertex(y);
    if (!x_in && !y_in) return false;
  }
  return true;
}

bool is_two_connected_rooted(const RootedGraph& r) {
  r.validate();
  return is_two_connected_rooted(r.g, r.x, r.y);
}

std::optional<int> delta(const Graph& g, Vertex x, Vertex y, std::optional<Vertex> z) {
  g.require_vertex(x);
  g.require_vertex(y);
  if (z) g.require_vertex(*z);
  std::optional<int> best;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (v == x || v == y || (z && v == *z)) continue;
    int d = degree(g, v);
    if (!best || d < *best) best = d;
  }
  return best;
}

std::optional<int> delta(const RootedGraph& r) {
  r.validate();
  return delta(r.g, r.x, r.y, r.z);
}

std::optional<VEndBlock> v_end_block(const Graph& g, Vertex v) {
  g.require_vertex(v);
  if (g.order() < 3) return std::nullopt;
  if (degree(g, v) != 1) return std::nullopt;
  Vertex b = g.neighbors(v)[0];
  // With deg(v) = 1 and a third vertex reachable, b separates v from it.
  if (degree(g, b) < 2) return std::nullopt;
  Vertex b_prime = b;
  if (degree(g, b) == 2) {
    for (Vertex w : g.neighbors(b))
      if (w != v) b_prime = w;
  }
  return VEndBlock{v, b, b_prime};
}

std::vector<FeasibleBlock> feasible_blocks(const Graph& c, Vertex y, std::optional<Vertex> z) {
  c.require_vertex(y);
  if (z) c.require_vertex(*z);
  if (!is_connected(c)) throw std::invalid_argument("feasible_blocks: graph must be connected");

  BlockDecomposition bd = blocks(c);
  std::vector<FeasibleBlock> out;
  for (size_t bi = 0; bi < bd.blocks.size(); ++bi) {
    const auto& verts = bd.blocks[bi];
    const auto& cuts = bd.block_cuts[bi];
    // Condition: at most two block vertices inside cuts(c) | {y, z}, and at
    // least one block vertex outside that set.
    int special = 0;
    int plain = 0;
    for (Vertex v : verts) {
      if (bd.is_cut_vertex(v) || v == y || (z && v == *z))
        ++special;
      else
        ++plain;
    }
    if (special > 2 || plain == 0) continue;

    FeasibleBlock fb;
    fb.vertices = verts;
    if (cuts.empty()) {
      fb.kind = FeasibleCase::whole;
      fb.b = y;
      fb.z_prime = z;
    } else if (cuts.size() == 1) {
      Vertex bp = cuts[0];
      bool y_inside = std::binary_search(verts.begin(), verts.end(), y) && y != bp;
      if (y_inside) {
        fb.kind = FeasibleCase::end_with_y;
        fb.b = y;
        fb.z_prime = bp;
      } else {
        fb.kind = FeasibleCase::end_without_y;
        fb.b = bp;
        if (z && std::binary_search(verts.begin(), verts.end(), *z)) fb.z_prime = z;
      }
    } else if (cuts.size() == 2) {
      // b is the cut vertex still reaching y after the block interior is
      // removed; the other one becomes z'.
      std::vector<Vertex> keep;
      for (Vertex v = 0; v < c.order(); ++v) {
        bool interior = std::binary_search(verts.begin(), verts.end(), v) &&
                        !std::binary_search(cuts.begin(), cuts.end(), v);
        if (!interior) keep.push_back(v);
      }
      auto sub = induced(c, keep);
      Vertex chosen = -1;
      for (Vertex cand : cuts) {
        Vertex cl = sub.to_sub[static_cast<size_t>(cand)];
        Vertex yl = sub.to_sub[static_cast<size_t>(y)];
        if (cl >= 0 && yl >= 0 && distance(sub.graph, cl, yl)) {
          chosen = cand;
          break;
        }
      }
      if (chosen == -1) continue;  // cannot place roles; not usable
      fb.kind = FeasibleCase::internal;
      fb.b = chosen;
      fb.z_prime = (chosen == cuts[0]) ? cuts[1] : cuts[0];
    } else {
      continue;  // three or more cut vertices can never pass the count test
    }
    out.push_back(std::move(fb));
  }
  return out;
}

}  // namespace admissible
