#include "drb/drdf.hpp"

#include <bit>
#include <sstream>

namespace drb {

bool is_valid_drdf(const Graph& g, const Labeling& f) {
  if (f.size() != g.n)
    throw InputError("labeling length " + std::to_string(f.size()) +
                     " does not match graph order " + std::to_string(g.n));
  std::uint64_t mask2 = 0, mask3 = 0;
  for (int v = 0; v < g.n; ++v) {
    if (f[v] > 3) throw InputError("label out of range at vertex " + std::to_string(v));
    if (f[v] == 2) mask2 |= 1ull << v;
    if (f[v] == 3) mask3 |= 1ull << v;
  }
  for (int v = 0; v < g.n; ++v) {
    if (f[v] == 0) {
      if ((g.adj[v] & mask3) == 0 && std::popcount(g.adj[v] & mask2) < 2) return false;
    } else if (f[v] == 1) {
      if ((g.adj[v] & (mask2 | mask3)) == 0) return false;
    }
  }
  return true;
}

int weight(const Labeling& f) {
  int total = 0;
  for (int v = 0; v < f.size(); ++v) total += f[v];
  return total;
}

Labeling normalize_no_ones(const Graph& g, const Labeling& f) {
  if (!is_valid_drdf(g, f)) throw InputError("normalize_no_ones: input labeling invalid");
  Labeling out = f;
  for (int v = 0; v < g.n; ++v) {
    if (out[v] != 1) continue;
    bool has_three = false;
    int least_big = -1;
    for (std::uint64_t m = g.adj[v]; m;) {
      int u = pop_lsb(m);
      if (out[u] == 3) has_three = true;
      if (out[u] >= 2 && least_big < 0) least_big = u;
    }
    if (has_three) {
      out[v] = 0;
      continue;
    }
    // A 1-vertex keeps a >=2 neighbor throughout: labels only move 1->0, 2->3.
    out[least_big] = 3;
    out[v] = 0;
    for (std::uint64_t m = g.adj[least_big]; m;) {
      int u = pop_lsb(m);
      if (out[u] == 1) out[u] = 0;
    }
  }
  return out;
}

std::string labeling_to_string(const Labeling& f) {
  std::string out;
  for (int v = 0; v < f.size(); ++v) {
    if (v) out += ',';
    out += static_cast<char>('0' + f[v]);
  }
  return out;
}

Labeling labeling_from_string(const std::string& text) {
  Labeling f;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.size() != 1 || tok[0] < '0' || tok[0] > '3')
      throw InputError("labeling: bad token '" + tok + "' (expected digit 0..3)");
    f.values.push_back(tok[0] - '0');
  }
  return f;
}

}  // namespace drb
