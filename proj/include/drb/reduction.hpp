#pragma once

#include <array>
#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "drb/drdf.hpp"
#include "drb/graph.hpp"

namespace drb {

/// 3-CNF instance: every clause holds exactly three distinct literals.
/// Literals are 1-based signed variable indices, sorted ascending per clause.
struct CnfFormula {
  int num_vars = 0;
  std::vector<std::array<int, 3>> clauses;
};

CnfFormula parse_dimacs_cnf(const std::string& text);
std::string to_dimacs_cnf(const CnfFormula& f);

/// Bipartite hardness-reduction graph built from a 3-CNF instance.
///
/// Vertex layout: each variable i (0-based) owns the 8-vertex block
/// 8i..8i+7 in the order (pos literal, neg literal, w, v, v', x, y, z);
/// clause vertices follow, then the 9 hub vertices l1..l9 (an 8-cycle with
/// l9 joined to l1 and l5; l2 and l4 joined to every clause vertex).
/// Order 8n+m+9, size 12n+5m+10.
struct ReductionGraph {
  Graph graph;
  CnfFormula source;
  int num_vars = 0;
  int num_clauses = 0;

  int pos_literal(int i) const { return 8 * i; }
  int neg_literal(int i) const { return 8 * i + 1; }
  int w(int i) const { return 8 * i + 2; }
  int v(int i) const { return 8 * i + 3; }
  int vprime(int i) const { return 8 * i + 4; }
  int x(int i) const { return 8 * i + 5; }
  int y(int i) const { return 8 * i + 6; }
  int z(int i) const { return 8 * i + 7; }
  int clause_vertex(int j) const { return 8 * num_vars + j; }
  int hub(int k) const { return 8 * num_vars + num_clauses + (k - 1); }  // k in 1..9

  // 1-based display names: u_1, ubar_1, w_1, v_1, vprime_1, x_1, y_1, z_1,
  // c_1, l_1, ...
  std::string role_name(int vertex) const;
};

ReductionGraph build_reduction(const CnfFormula& formula);

/// Lexicographically least satisfying assignment (variable 1 most
/// significant, false < true), or nullopt. Guard: at most 20 variables.
std::optional<std::vector<bool>> sat_bruteforce(const CnfFormula& formula);

/// The weight-(6n+8) labeling induced by a satisfying assignment: the true
/// literal vertex and its opposite-side partner get 3 per variable, the odd
/// hub cycle positions get 2. Throws InputError if t does not satisfy the
/// formula.
Labeling certificate_from_assignment(const CnfFormula& formula, const std::vector<bool>& t);

/// A valid DRDF of the reduction graph minus one edge, of weight 6n+9,
/// chosen by a fixed case table (hub pattern {l2,l5,l8} or {l1,l4,l6},
/// per-variable pattern from the true-side, false-side, or x/z vertices).
/// Falls back to trying every pattern pair if no table row applies.
struct DeletionCertificate {
  Labeling labeling;
  std::string rule;         // which table row produced the pattern
  std::string hub_pattern;  // "l2_l5_l8" or "l1_l4_l6"
  std::string block_pattern;  // "pos_vprime", "neg_v", or "x_z"
  bool fallback_used = false;
};

DeletionCertificate deletion_certificate(const ReductionGraph& r, int eu, int ev);

struct ReductionCheckOptions {
  int threads = 1;
  std::optional<std::chrono::milliseconds> budget;
};

/// Desk-scale verification of the reduction's guarantees on one instance:
/// structure counts and bipartiteness, the 6n+8 weight lower bound, the
/// tightness-iff-satisfiable equivalence, per-edge deletion certificates of
/// weight 6n+9, and the bondage-number-one consequence for satisfiable
/// instances. Exact gamma runs only under the size guard (n <= 3, m <= 8);
/// beyond it the report carries certificates only.
struct ReductionReport {
  int num_vars = 0;
  int num_clauses = 0;
  int vertices = 0;
  int edges = 0;
  bool counts_match = false;
  bool bipartite = false;

  bool exact_attempted = false;
  bool exact_verified = false;  // gamma computed (or bounded) within budget
  std::optional<int> gamma;
  bool satisfiable = false;
  std::optional<bool> lower_bound_holds;           // gamma >= 6n+8
  std::optional<bool> tight_iff_satisfiable;       // gamma == 6n+8 <=> SAT
  std::optional<bool> witness_structure_holds;     // block weights, hub labels
  std::optional<bool> assignment_certificate_ok;   // valid, weight 6n+8
  std::optional<bool> bondage_one_confirmed;       // gamma(G - l1l2) > gamma
  bool deletion_certificates_ok = false;           // all edges, weight <= 6n+9
  int deletion_fallbacks = 0;
  std::string note;
};

ReductionReport verify_reduction(const CnfFormula& formula,
                                 const ReductionCheckOptions& opt = {});

}  // namespace drb
