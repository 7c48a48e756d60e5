#include "drb/solver.hpp"
#include <cstdio>

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <thread>
#include <vector>

namespace drb {

std::string method_name(GammaMethod m) {
  switch (m) {
    case GammaMethod::oracle: return "oracle";
    case GammaMethod::branch_and_bound: return "branch_and_bound";
    case GammaMethod::closed_form: return "closed_form";
  }
  return "?";
}

namespace {

struct TimeoutSignal {};

struct Ctx {
  int n = 0;
  std::array<std::uint64_t, kMaxVertices> adj{};
  std::array<int, kMaxVertices> deg{};
  std::uint64_t all = 0;
  std::uint64_t nodes = 0;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  const std::atomic<bool>* stop = nullptr;  // cooperative early exit (capped search)

  explicit Ctx(const Graph& g) : n(g.n), all(g.vertex_mask()) {
    for (int v = 0; v < g.n; ++v) {
      adj[v] = g.adj[v];
      deg[v] = std::popcount(g.adj[v]);
    }
  }

  void tick() {
    if ((++nodes & 8191) == 0) {
      if (deadline && std::chrono::steady_clock::now() > *deadline) throw TimeoutSignal{};
      if (stop && stop->load(std::memory_order_relaxed)) throw TimeoutSignal{};
      if ((nodes & ((1ull << 26) - 1)) == 0)
        std::fprintf(stderr, "gamma search: %llu nodes explored\n",
                     static_cast<unsigned long long>(nodes));
    }
  }
};

// Partial labeling state. A vertex is "secured" when it is labeled >=2 or is
// rescued by decided neighbors (a 3-neighbor or two 2-neighbors); undecided
// secured vertices default to 0 at a leaf.
struct Node {
  std::uint64_t decided = 0, mask2 = 0, mask3 = 0, rescued = 0;
  int weight = 0;
  std::array<std::uint8_t, kMaxVertices> twos{};
};

inline void assign(const Ctx& c, Node& s, int v, int label) {
  std::uint64_t bit = 1ull << v;
  s.decided |= bit;
  if (label == 2) {
    s.mask2 |= bit;
    s.weight += 2;
    for (std::uint64_t m = c.adj[v]; m;) {
      int u = pop_lsb(m);
      if (s.twos[u] < 2 && ++s.twos[u] == 2) s.rescued |= 1ull << u;
    }
  } else if (label == 3) {
    s.mask3 |= bit;
    s.weight += 3;
    s.rescued |= c.adj[v];
  }
}

inline std::uint64_t secured_mask(const Node& s) {
  return s.rescued | s.mask2 | s.mask3;
}

// Forces labels required by every valid completion: a committed zero with no
// decided rescue and a single undecided neighbor needs that neighbor at 3
// (unless it already has one 2-neighbor, in which case 2 or 3 both work).
// Returns false when some committed zero can no longer be rescued.
inline bool propagate(const Ctx& c, Node& s) {
  for (;;) {
    std::uint64_t zeros = (s.decided & ~s.mask2 & ~s.mask3) & ~secured_mask(s);
    bool changed = false;
    for (std::uint64_t m = zeros; m;) {
      int v = pop_lsb(m);
      if ((s.rescued >> v) & 1) continue;  // rescued by an assignment this pass
      std::uint64_t free = c.adj[v] & ~s.decided;
      if (!free) return false;
      if ((free & (free - 1)) == 0 && s.twos[v] == 0) {
        assign(c, s, std::countr_zero(free), 3);
        changed = true;
      }
    }
    if (!changed) return true;
  }
}

// Admissible lower bound: current weight plus the larger of
//  - a greedy packing of disjoint rescue sets ({v} and v's undecided
//    neighborhood), costed 2 per set, 3 for a committed zero with no decided
//    2-neighbor, and
//  - 2 * ceil(U / (max remaining degree + 1)) over vertices with no decided
//    >=2 neighbor.
inline int lower_bound(const Ctx& c, const Node& s) {
  std::uint64_t unsecured = c.all & ~secured_mask(s);
  std::uint64_t undecided = c.all & ~s.decided;
  std::uint64_t used = 0;
  int extra = 0;
  int fresh = 0;
  for (std::uint64_t m = unsecured; m;) {
    int v = pop_lsb(m);
    std::uint64_t self = undecided & (1ull << v);
    std::uint64_t rs = (c.adj[v] & undecided) | self;
    if (s.twos[v] == 0 && (c.adj[v] & (s.mask2 | s.mask3)) == 0) ++fresh;
    if (rs && (rs & used) == 0) {
      used |= rs;
      extra += self ? 2 : (s.twos[v] ? 2 : 3);
    }
  }
  int lb = s.weight + extra;
  if (fresh) {
    int drem = 0;
    for (std::uint64_t m = undecided; m;) drem = std::max(drem, c.deg[pop_lsb(m)]);
    lb = std::max(lb, s.weight + 2 * ((fresh + drem) / (drem + 1)));
  }
  return lb;
}

// Branch target: least-id unsecured vertex; if it is a committed zero the
// branch moves to its least-id undecided neighbor (the rescuer proxy).
inline int branch_target(const Ctx& c, const Node& s, std::uint64_t unsecured) {
  int b = std::countr_zero(unsecured);
  if ((s.decided >> b) & 1) return std::countr_zero(c.adj[b] & ~s.decided);
  return b;
}

// Minimization pass; labels tried in order 3, 2, 0. `best` must start at an
// achievable weight (the all-2 labeling), so pruning at lb >= best is safe.
void search_min(Ctx& c, const Node& s, int& best) {
  c.tick();
  Node cur = s;
  if (!propagate(c, cur)) return;
  if (lower_bound(c, cur) >= best) return;
  std::uint64_t unsecured = c.all & ~secured_mask(cur);
  if (!unsecured) {
    best = cur.weight;
    return;
  }
  int t = branch_target(c, cur, unsecured);
  {
    Node ch = cur;
    assign(c, ch, t, 3);
    search_min(c, ch, best);
  }
  {
    Node ch = cur;
    assign(c, ch, t, 2);
    search_min(c, ch, best);
  }
  if (((cur.rescued >> t) & 1) || (c.adj[t] & ~cur.decided & ~(1ull << t))) {
    Node ch = cur;
    assign(c, ch, t, 0);
    search_min(c, ch, best);
  }
}

// Capped feasibility: true iff some valid labeling of weight <= cap extends s.
bool search_cap(Ctx& c, const Node& s, int cap) {
  c.tick();
  Node cur = s;
  if (!propagate(c, cur)) return false;
  if (lower_bound(c, cur) > cap) return false;
  std::uint64_t unsecured = c.all & ~secured_mask(cur);
  if (!unsecured) return true;
  int t = branch_target(c, cur, unsecured);
  {
    Node ch = cur;
    assign(c, ch, t, 3);
    if (search_cap(c, ch, cap)) return true;
  }
  {
    Node ch = cur;
    assign(c, ch, t, 2);
    if (search_cap(c, ch, cap)) return true;
  }
  if (((cur.rescued >> t) & 1) || (c.adj[t] & ~cur.decided & ~(1ull << t))) {
    Node ch = cur;
    assign(c, ch, t, 0);
    if (search_cap(c, ch, cap)) return true;
  }
  return false;
}

// Lexicographic witness reconstruction: vertices in id order, labels tried
// ascending (0, 2, 3), pruning at lb > cap. With an admissible bound the
// first leaf reached is the lexicographically least labeling of weight <= cap.
bool search_lex(Ctx& c, const Node& s, int cap, int next, Labeling& out) {
  c.tick();
  Node cur = s;
  if (!propagate(c, cur)) return false;
  if (lower_bound(c, cur) > cap) return false;
  while (next < c.n && ((cur.decided >> next) & 1)) ++next;
  if (next == c.n) {
    if (c.all & ~secured_mask(cur)) return false;
    out = Labeling(c.n, 0);
    for (int v = 0; v < c.n; ++v)
      out[v] = ((cur.mask3 >> v) & 1) ? 3 : (((cur.mask2 >> v) & 1) ? 2 : 0);
    return true;
  }
  if (((cur.rescued >> next) & 1) || (c.adj[next] & ~cur.decided & ~(1ull << next))) {
    Node ch = cur;
    assign(c, ch, next, 0);
    if (search_lex(c, ch, cap, next + 1, out)) return true;
  }
  {
    Node ch = cur;
    assign(c, ch, next, 2);
    if (search_lex(c, ch, cap, next + 1, out)) return true;
  }
  {
    Node ch = cur;
    assign(c, ch, next, 3);
    if (search_lex(c, ch, cap, next + 1, out)) return true;
  }
  return false;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& verts) {
  Graph sub(static_cast<int>(verts.size()));
  for (std::size_t a = 0; a < verts.size(); ++a)
    for (std::size_t b = a + 1; b < verts.size(); ++b)
      if (g.has_edge(verts[a], verts[b])) sub.add_edge(static_cast<int>(a), static_cast<int>(b));
  return sub;
}

// Exact value + lex-least witness for one connected piece (or any graph when
// decomposition is not wanted).
GammaResult solve_piece(const Graph& g,
                        std::optional<std::chrono::steady_clock::time_point> deadline) {
  GammaResult res;
  if (g.n == 0) return res;
  Ctx c(g);
  c.deadline = deadline;
  int best = 2 * g.n;  // the all-2 labeling is always valid
  search_min(c, Node{}, best);
  res.value = best;
  Labeling witness;
  bool ok = search_lex(c, Node{}, best, 0, witness);
  if (!ok) throw std::logic_error("witness reconstruction failed");
  res.witness = witness;
  res.nodes_explored = c.nodes;
  return res;
}

}  // namespace

GammaResult gamma_bruteforce(const Graph& g, Alphabet alphabet) {
  bool with_one = alphabet == Alphabet::zero_one_two_three;
  int limit = with_one ? 10 : 13;
  if (g.n > limit)
    throw GuardError("gamma_bruteforce: n=" + std::to_string(g.n) + " exceeds guard " +
                     std::to_string(limit) + " for this alphabet");
  GammaResult res;
  res.method = GammaMethod::oracle;
  if (g.n == 0) return res;

  const std::uint8_t digits023[] = {0, 2, 3};
  const std::uint8_t digits0123[] = {0, 1, 2, 3};
  const std::uint8_t* digits = with_one ? digits0123 : digits023;
  int radix = with_one ? 4 : 3;

  std::vector<int> idx(g.n, 0);
  Labeling f(g.n, 0);
  int best = 2 * g.n + 1;
  for (;;) {
    ++res.nodes_explored;
    std::uint64_t mask2 = 0, mask3 = 0, mask1 = 0;
    int w = 0;
    for (int v = 0; v < g.n; ++v) {
      w += f[v];
      if (f[v] == 1) mask1 |= 1ull << v;
      if (f[v] == 2) mask2 |= 1ull << v;
      if (f[v] == 3) mask3 |= 1ull << v;
    }
    if (w < best) {
      bool valid = true;
      for (int v = 0; v < g.n && valid; ++v) {
        if (f[v] == 0)
          valid = (g.adj[v] & mask3) || std::popcount(g.adj[v] & mask2) >= 2;
        else if (f[v] == 1)
          valid = (g.adj[v] & (mask2 | mask3)) != 0;
      }
      if (valid) {
        best = w;
        res.witness = f;
      }
    }
    int pos = g.n - 1;
    while (pos >= 0 && idx[pos] == radix - 1) {
      idx[pos] = 0;
      f[pos] = digits[0];
      --pos;
    }
    if (pos < 0) break;
    ++idx[pos];
    f[pos] = digits[idx[pos]];
  }
  res.value = best;
  return res;
}

namespace {

GammaResult gamma_exact_inner(const Graph& g,
                              std::optional<std::chrono::steady_clock::time_point> deadline) {
  GammaResult res;
  res.method = GammaMethod::branch_and_bound;
  res.witness = Labeling(g.n, 0);
  for (const auto& comp : components(g)) {
    Graph sub = induced_subgraph(g, comp);
    GammaResult piece = solve_piece(sub, deadline);
    res.value += piece.value;
    res.nodes_explored += piece.nodes_explored;
    for (std::size_t i = 0; i < comp.size(); ++i) res.witness[comp[i]] = piece.witness[i];
  }
  return res;
}

}  // namespace

GammaResult gamma_exact(const Graph& g) { return gamma_exact_inner(g, std::nullopt); }

std::optional<GammaResult> gamma_exact_budgeted(const Graph& g,
                                                std::chrono::milliseconds budget) {
  try {
    return gamma_exact_inner(g, std::chrono::steady_clock::now() + budget);
  } catch (const TimeoutSignal&) {
    return std::nullopt;
  }
}

ProveResult prove_gamma_at_least(const Graph& g, int bound, int threads,
                                 std::optional<std::chrono::milliseconds> budget) {
  ProveResult out;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  if (budget) deadline = std::chrono::steady_clock::now() + *budget;

  auto comps = components(g);
  try {
    if (comps.size() > 1) {
      // gamma decomposes over components; exact per-piece values settle the
      // threshold without a product-space search.
      int total = 0;
      int rest = g.n;
      for (const auto& comp : comps) {
        Graph sub = induced_subgraph(g, comp);
        rest -= sub.n;
        GammaResult piece = solve_piece(sub, deadline);
        out.nodes += piece.nodes_explored;
        total += piece.value;
        if (total >= bound) break;            // already proven
        if (total + 2 * rest < bound) break;  // unreachable even at the 2n cap
      }
      out.proven = total >= bound;
      return out;
    }

    Ctx c(g);
    c.deadline = deadline;
    if (threads <= 1 || g.n < 16) {
      bool found = search_cap(c, Node{}, bound - 1);
      out.proven = !found;
      out.nodes = c.nodes;
      return out;
    }

    // Deterministic outcome under parallelism: expand a fixed frontier, let
    // workers exhaust disjoint subtrees under the fixed cap, stop early once
    // any refuting leaf is seen.
    std::vector<Node> frontier{Node{}};
    std::uint64_t expand_nodes = 0;
    while (frontier.size() < static_cast<std::size_t>(threads) * 8) {
      std::vector<Node> next;
      bool grew = false;
      for (const Node& s : frontier) {
        ++expand_nodes;
        Node cur = s;
        if (!propagate(c, cur)) continue;
        if (lower_bound(c, cur) > bound - 1) continue;
        std::uint64_t unsecured = c.all & ~secured_mask(cur);
        if (!unsecured) {
          out.proven = false;
          out.nodes = expand_nodes;
          return out;
        }
        int t = branch_target(c, cur, unsecured);
        for (int label : {3, 2, 0}) {
          if (label == 0 && !(((cur.rescued >> t) & 1) ||
                              (c.adj[t] & ~cur.decided & ~(1ull << t))))
            continue;
          Node ch = cur;
          assign(c, ch, t, label);
          next.push_back(ch);
          grew = true;
        }
      }
      if (!grew) {
        out.proven = true;
        out.nodes = expand_nodes;
        return out;
      }
      frontier = std::move(next);
      if (frontier.size() > 4096) break;
    }

    std::atomic<bool> found{false};
    std::atomic<bool> timed{false};
    std::atomic<std::uint64_t> nodes_total{expand_nodes};
    std::atomic<std::size_t> cursor{0};
    auto worker = [&]() {
      Ctx local(g);
      local.deadline = deadline;
      local.stop = &found;
      try {
        for (;;) {
          std::size_t i = cursor.fetch_add(1);
          if (i >= frontier.size()) break;
          if (found.load(std::memory_order_relaxed)) break;
          if (search_cap(local, frontier[i], bound - 1)) {
            found.store(true, std::memory_order_relaxed);
            break;
          }
        }
      } catch (const TimeoutSignal&) {
        if (!found.load(std::memory_order_relaxed)) timed.store(true);
      }
      nodes_total.fetch_add(local.nodes);
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    out.nodes = nodes_total.load();
    if (found.load()) {
      out.proven = false;
    } else if (timed.load()) {
      out.timed_out = true;
    } else {
      out.proven = true;
    }
    return out;
  } catch (const TimeoutSignal&) {
    out.timed_out = true;
    return out;
  }
}

std::optional<int> classify_small_gamma(const Graph& g) {
  if (g.n < 3) throw InputError("classify_small_gamma: order must be >= 3");
  if (!is_connected(g)) throw InputError("classify_small_gamma: graph must be connected");
  if (g.max_degree() == g.n - 1) return 3;
  // joined pair: two nonadjacent vertices each adjacent to all others
  for (int u = 0; u < g.n; ++u) {
    if (g.degree(u) != g.n - 2) continue;
    int v = std::countr_zero(~(g.adj[u] | (1ull << u)) & g.vertex_mask());
    // v is the unique non-neighbor of u
    if (v > u && g.degree(v) == g.n - 2 && !g.has_edge(u, v)) return 4;
  }
  if (g.max_degree() == g.n - 2) return 5;
  return std::nullopt;
}

}  // namespace drb
