#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "drb/graph.hpp"

namespace drb {

/// Vertex labeling into {0,1,2,3}; length matches the graph order.
struct Labeling {
  std::vector<std::uint8_t> values;

  Labeling() = default;
  explicit Labeling(int n, std::uint8_t fill = 0) : values(n, fill) {}

  std::uint8_t& operator[](int v) { return values[v]; }
  std::uint8_t operator[](int v) const { return values[v]; }
  int size() const { return static_cast<int>(values.size()); }
  bool operator==(const Labeling& other) const { return values == other.values; }
};

/// A labeling is a double Roman dominating function iff every 0-vertex has
/// two 2-neighbors or a 3-neighbor, and every 1-vertex has a neighbor
/// labeled at least 2.
bool is_valid_drdf(const Graph& g, const Labeling& f);

int weight(const Labeling& f);

/// Rewrites a valid labeling into an equal-or-lighter valid labeling using
/// only labels {0,2,3}. 1-vertices are processed in ascending id: one with a
/// 3-neighbor drops to 0; otherwise its least-id neighbor labeled >=2 is
/// raised to 3 and that neighbor's 1-neighbors all drop to 0.
Labeling normalize_no_ones(const Graph& g, const Labeling& f);

// Text form: comma-separated digits in vertex order, e.g. "0,3,0".
std::string labeling_to_string(const Labeling& f);
Labeling labeling_from_string(const std::string& text);

}  // namespace drb
