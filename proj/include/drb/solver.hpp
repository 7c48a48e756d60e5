#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include "drb/drdf.hpp"
#include "drb/graph.hpp"

namespace drb {

enum class GammaMethod { oracle, branch_and_bound, closed_form };

std::string method_name(GammaMethod m);

/// Exact gamma_dR outcome. The witness is a valid DRDF of the stated weight;
/// for gamma_exact and the {0,2,3} oracle it is 1-free and lexicographically
/// least among minimum-weight labelings over the searched alphabet.
struct GammaResult {
  int value = 0;
  Labeling witness;
  GammaMethod method = GammaMethod::branch_and_bound;
  std::uint64_t nodes_explored = 0;
};

enum class Alphabet { zero_two_three, zero_one_two_three };

/// Full enumeration over the given alphabet. Guards: n <= 13 for {0,2,3},
/// n <= 10 for {0,1,2,3}.
GammaResult gamma_bruteforce(const Graph& g, Alphabet alphabet = Alphabet::zero_two_three);

/// Branch-and-bound exact solver; decomposes over connected components.
/// Deterministic value and witness (see GammaResult).
GammaResult gamma_exact(const Graph& g);
/// Same, giving up (nullopt) when the budget expires.
std::optional<GammaResult> gamma_exact_budgeted(const Graph& g,
                                                std::chrono::milliseconds budget);

struct ProveResult {
  bool proven = false;     // every DRDF has weight >= bound
  bool timed_out = false;  // budget expired before either outcome
  std::uint64_t nodes = 0;
};

/// Decides whether gamma_dR(G) >= bound without computing the exact value.
/// The proven/refuted outcome is independent of the thread count.
ProveResult prove_gamma_at_least(const Graph& g, int bound, int threads = 1,
                                 std::optional<std::chrono::milliseconds> budget = {});

/// Theorem 1.1 classifier: 3 iff a dominating vertex exists, 4 iff the graph
/// is a join of two isolated vertices with a graph of smaller max degree,
/// 5 iff max degree is n-2 without the join form; nullopt otherwise.
/// Requires a connected graph on at least 3 vertices.
std::optional<int> classify_small_gamma(const Graph& g);

}  // namespace drb
