#include "drb/graph.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>

namespace drb {

Graph::Graph(int order) : n(order), adj(order, 0) {
  if (order < 0 || order > kMaxVertices)
    throw InputError("graph order must be in 0..64, got " + std::to_string(order));
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || u >= n || v < 0 || v >= n)
    throw InputError("vertex out of range: (" + std::to_string(u) + "," +
                     std::to_string(v) + ") with n=" + std::to_string(n));
  if (u == v)
    throw InputError("self-loop rejected at vertex " + std::to_string(u));
  adj[u] |= 1ull << v;
  adj[v] |= 1ull << u;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n; ++v) d = std::max(d, degree(v));
  return d;
}

int Graph::min_degree() const {
  if (n == 0) return 0;
  int d = kMaxVertices;
  for (int v = 0; v < n; ++v) d = std::min(d, degree(v));
  return d;
}

int Graph::edge_count() const {
  int total = 0;
  for (int v = 0; v < n; ++v) total += degree(v);
  return total / 2;
}

std::uint64_t Graph::vertex_mask() const {
  return n == 64 ? ~0ull : (1ull << n) - 1;
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n; ++u)
    for (std::uint64_t m = adj[u] & ~((u == 63 ? 0ull : (1ull << (u + 1))) - 1); m;)
      out.emplace_back(u, pop_lsb(m));
  return out;
}

EdgeSet::EdgeSet(std::initializer_list<std::pair<int, int>> list) {
  for (auto [u, v] : list) insert(u, v);
}

EdgeSet EdgeSet::from_pairs(const std::vector<std::pair<int, int>>& pairs) {
  EdgeSet s;
  for (auto [u, v] : pairs) s.insert(u, v);
  return s;
}

void EdgeSet::insert(int u, int v) {
  if (u == v) throw InputError("edge set cannot contain a self-loop");
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(u, v));
  if (it == edges.end() || *it != std::make_pair(u, v)) edges.insert(it, {u, v});
}

bool EdgeSet::contains(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& pairs) {
  Graph g(n);
  for (auto [u, v] : pairs) g.add_edge(u, v);  // duplicates collapse in the bitset
  return g;
}

// ---------------------------------------------------------------------------
// graph6 (standard bit packing, single-byte order header, n <= 62)

namespace {
constexpr char kG6Lo = 63;
constexpr char kG6Hi = 126;
}  // namespace

Graph parse_graph6(const std::string& text) {
  std::size_t pos = 0;
  const std::string opt_header = ">>graph6<<";
  if (text.rfind(opt_header, 0) == 0) pos = opt_header.size();
  if (pos >= text.size())
    throw InputError("graph6: empty input at byte " + std::to_string(pos));
  unsigned char c = text[pos];
  if (c == 126)
    throw InputError("graph6: multi-byte order (n > 62) unsupported at byte " +
                     std::to_string(pos));
  if (c < kG6Lo || c > kG6Hi)
    throw InputError("graph6: malformed header byte at offset " + std::to_string(pos));
  int n = c - kG6Lo;
  ++pos;

  int bits = n * (n - 1) / 2;
  int data_chars = (bits + 5) / 6;
  Graph g(n);
  int k = 0;    // bit cursor over the upper triangle
  int row = 0;  // pair order: (0,1),(0,2),(1,2),(0,3),...
  int col = 1;
  for (int ci = 0; ci < data_chars; ++ci, ++pos) {
    if (pos >= text.size())
      throw InputError("graph6: truncated, expected data byte at offset " +
                       std::to_string(pos));
    unsigned char d = text[pos];
    if (d < kG6Lo || d > kG6Hi)
      throw InputError("graph6: malformed data byte at offset " + std::to_string(pos));
    int val = d - kG6Lo;
    for (int b = 5; b >= 0; --b, ++k) {
      int bit = (val >> b) & 1;
      if (k < bits) {
        if (bit) g.add_edge(row, col);
        if (++row == col) {
          row = 0;
          ++col;
        }
      } else if (bit) {
        throw InputError("graph6: nonzero padding bit at offset " + std::to_string(pos));
      }
    }
  }
  while (pos < text.size()) {
    if (text[pos] != '\n' && text[pos] != '\r' && text[pos] != ' ')
      throw InputError("graph6: trailing data at offset " + std::to_string(pos));
    ++pos;
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  if (g.n > 62)
    throw InputError("graph6: order " + std::to_string(g.n) + " > 62 unsupported");
  std::string out;
  out.push_back(static_cast<char>(g.n + kG6Lo));
  int bits = g.n * (g.n - 1) / 2;
  int val = 0, nb = 0;
  for (int col = 1; col < g.n; ++col) {
    for (int row = 0; row < col; ++row) {
      val = (val << 1) | (g.has_edge(row, col) ? 1 : 0);
      if (++nb == 6) {
        out.push_back(static_cast<char>(val + kG6Lo));
        val = 0;
        nb = 0;
      }
    }
  }
  if (bits % 6 != 0) {
    val <<= 6 - bits % 6;
    out.push_back(static_cast<char>(val + kG6Lo));
  }
  return out;
}

// ---------------------------------------------------------------------------
// plain edge-list text

Graph parse_edge_list_text(const std::string& text) {
  std::istringstream in(text);
  long long n = -1, m = -1;
  if (!(in >> n >> m)) throw InputError("edge list: missing 'n m' header");
  if (n < 0 || n > kMaxVertices)
    throw InputError("edge list: order " + std::to_string(n) + " out of range 0..64");
  if (m < 0) throw InputError("edge list: negative edge count");
  Graph g(static_cast<int>(n));
  for (long long i = 0; i < m; ++i) {
    long long u, v;
    if (!(in >> u >> v))
      throw InputError("edge list: expected edge " + std::to_string(i) + " of " +
                       std::to_string(m));
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  long long extra;
  if (in >> extra) throw InputError("edge list: trailing data after last edge");
  return g;
}

std::string to_edge_list_text(const Graph& g) {
  std::ostringstream out;
  auto edges = g.edge_list();
  out << g.n << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// generators

namespace {

Graph make_path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  g.planar_tag = true;
  return g;
}

Graph make_cycle(int n) {
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  g.planar_tag = true;
  return g;
}

Graph make_complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

}  // namespace

Graph join_graphs(const Graph& a, const Graph& b) {
  if (a.n + b.n > kMaxVertices) throw InputError("join: combined order exceeds 64");
  Graph g(a.n + b.n);
  for (auto [u, v] : a.edge_list()) g.add_edge(u, v);
  for (auto [u, v] : b.edge_list()) g.add_edge(a.n + u, a.n + v);
  for (int u = 0; u < a.n; ++u)
    for (int v = 0; v < b.n; ++v) g.add_edge(u, a.n + v);
  return g;
}

Graph generate(const FamilySpec& spec) {
  const auto& p = spec.params;
  auto need = [&](bool ok, const std::string& msg) {
    if (!ok) throw InputError("family " + spec.to_string() + ": " + msg);
  };
  switch (spec.kind) {
    case FamilyKind::path:
      need(p.size() == 1 && p[0] >= 1 && p[0] <= kMaxVertices, "order must be 1..64");
      return make_path(p[0]);
    case FamilyKind::cycle:
      need(p.size() == 1 && p[0] >= 3 && p[0] <= kMaxVertices, "order must be 3..64");
      return make_cycle(p[0]);
    case FamilyKind::complete:
      need(p.size() == 1 && p[0] >= 1 && p[0] <= kMaxVertices, "order must be 1..64");
      return make_complete(p[0]);
    case FamilyKind::empty:
      need(p.size() == 1 && p[0] >= 0 && p[0] <= kMaxVertices, "order must be 0..64");
      return Graph(p[0]);
    case FamilyKind::wheel: {
      // W_n = K_1 joined with C_{n-1}; hub is vertex 0, rim 1..n-1 in cycle order.
      need(p.size() == 1 && p[0] >= 4 && p[0] <= kMaxVertices, "order must be 4..64");
      int n = p[0];
      Graph g(n);
      for (int v = 1; v < n; ++v) {
        g.add_edge(0, v);
        g.add_edge(v, v == n - 1 ? 1 : v + 1);
      }
      g.planar_tag = true;
      return g;
    }
    case FamilyKind::star: {
      // K_{1,m}: hub 0, leaves 1..m.
      need(p.size() == 1 && p[0] >= 1 && p[0] + 1 <= kMaxVertices, "leaf count must be 1..63");
      int m = p[0];
      Graph g(m + 1);
      for (int v = 1; v <= m; ++v) g.add_edge(0, v);
      g.planar_tag = true;
      return g;
    }
    case FamilyKind::complete_multipartite: {
      need(!p.empty(), "at least one part required");
      int total = 0;
      for (std::size_t i = 0; i < p.size(); ++i) {
        need(p[i] >= 1, "part sizes must be >= 1");
        if (i > 0) need(p[i - 1] <= p[i], "part sizes must be ascending");
        total += p[i];
      }
      need(total <= kMaxVertices, "total order exceeds 64");
      Graph g(total);
      // parts occupy consecutive id ranges, ascending order
      std::vector<int> start(p.size() + 1, 0);
      for (std::size_t i = 0; i < p.size(); ++i) start[i + 1] = start[i] + p[i];
      for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
          for (int u = start[i]; u < start[i + 1]; ++u)
            for (int v = start[j]; v < start[j + 1]; ++v) g.add_edge(u, v);
      return g;
    }
    case FamilyKind::join: {
      need(p.size() == 2 && p[0] >= 1 && p[1] >= 3, "join:a,b needs a >= 1, b >= 3");
      need(p[0] + p[1] <= kMaxVertices, "total order exceeds 64");
      return join_graphs(Graph(p[0]), make_cycle(p[1]));
    }
    case FamilyKind::grid: {
      need(p.size() == 2 && p[0] >= 1 && p[1] >= 1, "grid:rows,cols needs both >= 1");
      int r = p[0], c = p[1];
      need(r * c <= kMaxVertices, "total order exceeds 64");
      Graph g(r * c);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) {
          if (j + 1 < c) g.add_edge(i * c + j, i * c + j + 1);
          if (i + 1 < r) g.add_edge(i * c + j, (i + 1) * c + j);
        }
      g.planar_tag = true;
      return g;
    }
    case FamilyKind::tree_from_pruefer:
      return pruefer_decode(p);
  }
  throw InputError("unknown family kind");
}

Graph pruefer_decode(const std::vector<int>& seq) {
  int n = static_cast<int>(seq.size()) + 2;
  if (n > kMaxVertices) throw InputError("pruefer: order exceeds 64");
  for (int s : seq)
    if (s < 0 || s >= n)
      throw InputError("pruefer: sequence value " + std::to_string(s) +
                       " out of range 0.." + std::to_string(n - 1));
  Graph g(n);
  std::vector<int> deg(n, 1);
  for (int s : seq) ++deg[s];
  for (int s : seq) {
    int leaf = 0;
    while (deg[leaf] != 1) ++leaf;
    g.add_edge(leaf, s);
    deg[leaf] = 0;
    --deg[s];
  }
  int a = -1, b = -1;
  for (int v = 0; v < n; ++v)
    if (deg[v] == 1) (a < 0 ? a : b) = v;
  g.add_edge(a, b);
  g.planar_tag = true;
  return g;
}

Graph remove_edges(const Graph& g, const EdgeSet& s) {
  Graph out = g;
  for (auto [u, v] : s.edges) {
    if (u < 0 || v >= g.n || !g.has_edge(u, v))
      throw InputError("remove_edges: (" + std::to_string(u) + "," +
                       std::to_string(v) + ") is not an edge");
    out.adj[u] &= ~(1ull << v);
    out.adj[v] &= ~(1ull << u);
  }
  return out;  // planar_tag carries over: spanning subgraphs stay planar
}

// ---------------------------------------------------------------------------
// traversals

std::optional<int> girth(const Graph& g) {
  int best = kMaxVertices + 1;
  std::vector<int> dist(g.n), parent(g.n);
  std::vector<int> queue(g.n);
  for (int root = 0; root < g.n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    parent[root] = -1;
    int head = 0, tail = 0;
    queue[tail++] = root;
    while (head < tail) {
      int x = queue[head++];
      for (std::uint64_t m = g.adj[x]; m;) {
        int y = pop_lsb(m);
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue[tail++] = y;
        } else if (y != parent[x]) {
          best = std::min(best, dist[x] + dist[y] + 1);
        }
      }
    }
  }
  if (best > kMaxVertices) return std::nullopt;
  return best;
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
  std::vector<int> color(g.n, -1);
  std::vector<int> queue(g.n);
  for (int root = 0; root < g.n; ++root) {
    if (color[root] >= 0) continue;
    color[root] = 0;
    int head = 0, tail = 0;
    queue[tail++] = root;
    while (head < tail) {
      int x = queue[head++];
      for (std::uint64_t m = g.adj[x]; m;) {
        int y = pop_lsb(m);
        if (color[y] < 0) {
          color[y] = 1 - color[x];
          queue[tail++] = y;
        } else if (color[y] == color[x]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

namespace {

std::uint64_t component_mask(const Graph& g, int root) {
  std::uint64_t seen = 1ull << root;
  std::uint64_t frontier = seen;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t m = frontier; m;) next |= g.adj[pop_lsb(m)];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen;
}

}  // namespace

bool is_connected(const Graph& g) {
  if (g.n <= 1) return true;
  return component_mask(g, 0) == g.vertex_mask();
}

std::vector<std::vector<int>> components(const Graph& g) {
  std::vector<std::vector<int>> out;
  std::uint64_t remaining = g.vertex_mask();
  while (remaining) {
    int root = std::countr_zero(remaining);
    std::uint64_t comp = component_mask(g, root);
    std::vector<int> verts;
    for (std::uint64_t m = comp; m;) verts.push_back(pop_lsb(m));
    out.push_back(std::move(verts));
    remaining &= ~comp;
  }
  return out;
}

// ---------------------------------------------------------------------------
// enumerators

std::vector<std::pair<int, int>> all_vertex_pairs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) pairs.emplace_back(u, v);
  return pairs;
}

std::uint64_t graph_mask_count(int n) {
  return 1ull << (n * (n - 1) / 2);
}

void enumerate_labeled_connected_range(int n, std::uint64_t lo, std::uint64_t hi,
                                       const std::function<void(const Graph&)>& fn) {
  if (n < 1 || n > 7)
    throw GuardError("enumerate_labeled_connected: n must be 1..7, got " +
                     std::to_string(n));
  auto pairs = all_vertex_pairs(n);
  for (std::uint64_t mask = lo; mask < hi; ++mask) {
    Graph g(n);
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if ((mask >> k) & 1) g.add_edge(pairs[k].first, pairs[k].second);
    if (is_connected(g)) fn(g);
  }
}

void enumerate_labeled_connected(int n, const std::function<void(const Graph&)>& fn) {
  enumerate_labeled_connected_range(n, 0, graph_mask_count(n), fn);
}

std::uint64_t tree_count(int n) {
  std::uint64_t total = 1;
  for (int i = 0; i < n - 2; ++i) total *= static_cast<std::uint64_t>(n);
  return total;
}

void enumerate_trees_range(int n, std::uint64_t lo, std::uint64_t hi,
                           const std::function<void(const Graph&)>& fn) {
  if (n < 2 || n > 9)
    throw GuardError("enumerate_trees: n must be 2..9, got " + std::to_string(n));
  int len = n - 2;
  std::vector<int> seq(len, 0);
  for (std::uint64_t idx = lo; idx < hi; ++idx) {
    std::uint64_t x = idx;
    for (int j = len - 1; j >= 0; --j) {
      seq[j] = static_cast<int>(x % n);
      x /= n;
    }
    fn(pruefer_decode(seq));
  }
}

void enumerate_trees(int n, const std::function<void(const Graph&)>& fn) {
  enumerate_trees_range(n, 0, tree_count(n), fn);
}

// ---------------------------------------------------------------------------
// family spec parsing

namespace {

const std::pair<const char*, FamilyKind> kKindNames[] = {
    {"path", FamilyKind::path},
    {"cycle", FamilyKind::cycle},
    {"complete", FamilyKind::complete},
    {"empty", FamilyKind::empty},
    {"wheel", FamilyKind::wheel},
    {"star", FamilyKind::star},
    {"complete_multipartite", FamilyKind::complete_multipartite},
    {"multipartite", FamilyKind::complete_multipartite},
    {"join", FamilyKind::join},
    {"grid", FamilyKind::grid},
    {"tree_from_pruefer", FamilyKind::tree_from_pruefer},
};

}  // namespace

FamilySpec FamilySpec::parse(const std::string& text) {
  auto colon = text.find(':');
  std::string name = text.substr(0, colon);
  FamilySpec spec;
  bool found = false;
  for (auto& [k, v] : kKindNames)
    if (name == k) {
      spec.kind = v;
      found = true;
      break;
    }
  if (!found) throw InputError("unknown family kind '" + name + "'");
  if (colon != std::string::npos) {
    std::string rest = text.substr(colon + 1);
    std::istringstream in(rest);
    std::string tok;
    while (std::getline(in, tok, ',')) {
      try {
        spec.params.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        throw InputError("family '" + text + "': bad parameter '" + tok + "'");
      }
    }
  }
  return spec;
}

std::string FamilySpec::to_string() const {
  std::string name;
  for (auto& [k, v] : kKindNames)
    if (v == kind) {
      name = k;
      break;
    }
  std::string out = name;
  for (std::size_t i = 0; i < params.size(); ++i)
    out += (i == 0 ? ":" : ",") + std::to_string(params[i]);
  return out;
}

}  // namespace drb
