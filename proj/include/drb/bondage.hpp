#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "drb/graph.hpp"
#include "drb/solver.hpp"

namespace drb {

/// Exact bondage outcome: the witness is the first edge subset, in size-then-
/// lexicographic order, whose removal strictly increases gamma_dR; no smaller
/// subset works.
struct BondageResult {
  int value = 0;
  EdgeSet witness;
  int base_gamma = 0;
  std::uint64_t subsets_tested = 0;
};

struct BondageOptions {
  int threads = 1;
  std::optional<std::chrono::milliseconds> budget;
  std::optional<int> max_subset_size;
};

BondageResult bondage_exact(const Graph& g, const BondageOptions& opt = {});
/// Budgeted variant: nullopt when the budget expires first.
std::optional<BondageResult> bondage_exact_budgeted(const Graph& g,
                                                    const BondageOptions& opt);

struct BoundEntry {
  std::string name;
  bool applicable = false;
  std::optional<int> value;
  std::string parameters;  // argmin vertices / degrees used, deterministic
  std::optional<EdgeSet> certificate;
};

struct BoundReport {
  std::vector<BoundEntry> entries;
  std::optional<int> best() const;  // min over applicable values
  const BoundEntry* find(const std::string& name) const;
};

/// Evaluates the upper-bound catalog with per-entry applicability:
///   path_degree_sum      min over induced 2-paths xyz of
///                        deg x + deg y + deg z - 3 - |N(x) ∩ N(y)|
///   triangle_degree_sum  the same construction when xz is an edge; the kept
///                        edge yz then lies inside N(x) ∩ N(y), so the set
///                        has size deg x + deg y + deg z - 4 - |N(x)∩N(y)∖{z}|
///   support_vertex       2, when some support vertex of degree >= 3 has all
///                        neighbors but at most one leaves
///   tree                 2, for trees on >= 3 vertices
///   edge_degree_sum      min over edges uv of deg u + deg v - 1 - |N(u)∩N(v)|
///   min_plus_twice_max_degree   delta + 2*Delta - 3 (connected, n >= 3)
///   max_plus_min_degree  Delta + delta - 1 (connected)
///   two_path_degree_sum  min over 2-paths uwv of deg u + deg v - 1
///   planar_girth4 / planar_girth6   Delta+2 / Delta+1 under the planar tag
///   planar_no_degree5    7 under the planar tag without degree-5 vertices
///   planar               8 under the planar tag
BoundReport bound_catalog(const Graph& g);

/// Deletion set from a 2-path xyz: all edges incident to x, y, z except yz
/// and the edges from y into N(x) ∩ N(y). Removal strictly increases
/// gamma_dR (x ends isolated, z a leaf hanging off y).
EdgeSet path_deletion_set(const Graph& g, int x, int y, int z);
/// Deletion set for an edge uv: all edges at u, plus the edges at v that do
/// not come from N(u) ∩ N(v); size deg(u)+deg(v)-1-|N(u)∩N(v)|.
EdgeSet edge_deletion_set(const Graph& g, int u, int v);
/// Deletion set for a 2-path uwv (u != v): all edges at u plus all edges at
/// v except vw; size at most deg(u)+deg(v)-1.
EdgeSet two_path_deletion_set(const Graph& g, int u, int w, int v);

/// Closed-form gamma_dR for families with published formulas (paths, cycles,
/// complete, empty, wheels, stars, complete multipartite, and the join
/// families the small-gamma classification settles). Throws InputError for
/// families without one.
int closed_form_gamma(const FamilySpec& spec);

/// Closed-form b_dR where a published formula exists (paths n>=2, cycles,
/// complete n>=2, wheels with W_4 routed to the complete-graph rule, stars,
/// complete multipartite). Throws InputError otherwise.
int closed_form_bondage(const FamilySpec& spec);

}  // namespace drb
