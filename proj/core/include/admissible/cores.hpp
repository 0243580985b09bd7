#pragma once

#include <optional>

#include "admissible/graph.hpp"

namespace admissible {

// Local structure H = x ∨ ... ∨ ... used to pump out short paths from x.
//   type 1: H = x ∨ T,      ell >= 1, S empty, T a clique of order ell + 1
//   type 2: H = x ∨ S ∨ T,  ell >= 2, S independent of order 2, T a clique
//           of order ell (x joined to S, S joined to T)
//   type 3: H = x ∨ T ∨ S,  ell >= 0, S and T independent, |S| = ell,
//           |T| >= max(ell + 1, 2) (x joined to T, T joined to S)
// "Joined" edges must exist in the host graph; extra host edges are fine,
// but cliques and independent sets are exact properties of the host.
struct Core {
  int type = 0;  // 1, 2 or 3
  int ell = 0;
  Vertex x = -1;
  std::vector<Vertex> s_set;  // sorted
  std::vector<Vertex> t_set;  // sorted
  bool flat = false;          // type 3 after the detachment modification
  std::optional<Vertex> t0;   // T-vertex removed by that modification

  std::vector<Vertex> vertices() const;  // {x} | S | T, sorted
};

// Structural invariants of the core inside g (clique/independence/joins and
// the size constraints for its type).
bool core_invariants_ok(const Graph& g, const Core& core);
// Same plus "core is with respect to (x, y)": apex matches and y avoids H.
void require_core_for(const Graph& g, const Core& core, Vertex x, Vertex y);

// Best core with respect to (x, y): smallest type number first; then
// largest T (types 1-2) or largest S then largest T (type 3); ties broken
// by lexicographically smallest S then T. nullopt when no core exists.
std::optional<Core> find_core(const Graph& g, Vertex x, Vertex y);

// Detachment rule for a type-3 core: when T is y's entire neighborhood and
// x's entire neighborhood, y is alone in its component, |T| >= 3, and some
// other component hangs onto T, one T-vertex (and one S-vertex when
// |T| = |S| + 1) is dropped so that the hanging component joins y's side.
// Returns the input untouched when the rule does not apply. Throws
// std::invalid_argument unless the input is a valid type-3 core avoiding y.
Core apply_condition_t(const Graph& g, const Core& core, Vertex y, std::optional<Vertex> z);

// Exact-length path families inside H (closed forms):
//   paths_x_to_s: type 2 -> ell paths of lengths 3..ell+2;
//                 type 3 -> ell paths of lengths 2,4,..,2*ell avoiding the
//                 required forbidden T-vertex.
//   paths_x_to_t: type 1 -> lengths 1..ell+1; type 2 -> lengths 2..ell+2;
//                 type 3 -> lengths 1,3,..,2*ell+1, optionally avoiding a
//                 forbidden T-vertex when |T| >= ell+2.
std::vector<OrientedPath> paths_x_to_s(const Core& core, Vertex s,
                                       std::optional<Vertex> forbidden_t = std::nullopt);

struct SemiAdmissibleFamily {
  std::vector<OrientedPath> paths;  // lengths ascending, uniform gap, first >= 1
  Vertex shared_source = -1;
  std::vector<Vertex> targets;
};

SemiAdmissibleFamily paths_x_to_t(const Core& core, Vertex t,
                                  std::optional<Vertex> forbidden_t = std::nullopt);

}  // namespace admissible
