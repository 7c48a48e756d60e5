#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace drb {

// Input violating a documented precondition (bad file, bad parameters).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Request exceeding a resource guard (size caps, budgets).
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr int kMaxVertices = 64;

inline int pop_lsb(std::uint64_t& m) {
  int v = std::countr_zero(m);
  m &= m - 1;
  return v;
}

/// Undirected simple graph on at most 64 vertices; adjacency is one bitset
/// word per vertex. Vertex ids are 0..n-1.
struct Graph {
  int n = 0;
  std::vector<std::uint64_t> adj;
  // Set only by generators whose output is planar by construction
  // (path, cycle, star, wheel, grid, tree); never inferred.
  std::optional<bool> planar_tag;

  Graph() = default;
  explicit Graph(int order);

  std::uint64_t neighbors(int v) const { return adj[v]; }
  bool has_edge(int u, int v) const { return (adj[u] >> v) & 1u; }
  void add_edge(int u, int v);
  int degree(int v) const { return std::popcount(adj[v]); }
  int max_degree() const;
  int min_degree() const;
  int edge_count() const;
  std::uint64_t vertex_mask() const;
  std::vector<std::pair<int, int>> edge_list() const;  // sorted, u < v

  // Structural equality; planar_tag is generator metadata, not compared.
  bool operator==(const Graph& other) const {
    return n == other.n && adj == other.adj;
  }
};

/// Set of unordered vertex pairs, kept normalized (u < v, sorted, unique).
struct EdgeSet {
  std::vector<std::pair<int, int>> edges;

  EdgeSet() = default;
  EdgeSet(std::initializer_list<std::pair<int, int>> list);
  static EdgeSet from_pairs(const std::vector<std::pair<int, int>>& pairs);

  void insert(int u, int v);
  bool contains(int u, int v) const;
  std::size_t size() const { return edges.size(); }
  bool operator==(const EdgeSet& other) const { return edges == other.edges; }
};

enum class FamilyKind {
  path,
  cycle,
  complete,
  empty,
  wheel,
  star,
  complete_multipartite,
  join,
  grid,
  tree_from_pruefer,
};

/// Symbolic description of a named graph family instance.
///   path:n  cycle:n  complete:n  empty:n  wheel:n  star:m (= K_{1,m})
///   complete_multipartite:n1,n2,...  (part sizes ascending)
///   join:a,b (= complement-of-K_a joined with C_b)   grid:rows,cols
///   tree_from_pruefer:s0,s1,...  (order = length + 2)
struct FamilySpec {
  FamilyKind kind = FamilyKind::path;
  std::vector<int> params;

  static FamilySpec parse(const std::string& text);
  std::string to_string() const;
};

Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& pairs);

Graph parse_graph6(const std::string& text);
std::string to_graph6(const Graph& g);

// Plain edge-list text: first line "n m", then m lines "u v", 0-based.
Graph parse_edge_list_text(const std::string& text);
std::string to_edge_list_text(const Graph& g);

Graph generate(const FamilySpec& spec);
Graph join_graphs(const Graph& a, const Graph& b);

Graph remove_edges(const Graph& g, const EdgeSet& s);

// nullopt means infinite girth (forest).
std::optional<int> girth(const Graph& g);

bool is_bipartite(const Graph& g);
// Two-coloring with colors 0/1, component roots colored 0; nullopt if odd cycle.
std::optional<std::vector<int>> bipartition(const Graph& g);
bool is_connected(const Graph& g);
// Components ordered by least vertex id; vertices ascending inside each.
std::vector<std::vector<int>> components(const Graph& g);

// Lexicographic index of pair (u,v), u < v, in the order
// (0,1),(0,2),...,(0,n-1),(1,2),...; used by the mask enumerators.
std::vector<std::pair<int, int>> all_vertex_pairs(int n);

/// Streams every labeled connected simple graph on n vertices exactly once,
/// in ascending edge-mask order. n <= 7.
void enumerate_labeled_connected(int n, const std::function<void(const Graph&)>& fn);
// Range split for parallel consumption: masks in [lo, hi).
void enumerate_labeled_connected_range(int n, std::uint64_t lo, std::uint64_t hi,
                                       const std::function<void(const Graph&)>& fn);
std::uint64_t graph_mask_count(int n);  // 2^C(n,2)

/// Streams all n^(n-2) labeled trees on n vertices via Pruefer decoding,
/// ascending sequence order. 2 <= n <= 9.
void enumerate_trees(int n, const std::function<void(const Graph&)>& fn);
void enumerate_trees_range(int n, std::uint64_t lo, std::uint64_t hi,
                           const std::function<void(const Graph&)>& fn);
std::uint64_t tree_count(int n);  // n^(n-2)

Graph pruefer_decode(const std::vector<int>& seq);

}  // namespace drb
