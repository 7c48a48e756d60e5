#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "drb/drdf.hpp"
#include "drb/solver.hpp"

using namespace drb;

namespace {

Labeling lab(std::initializer_list<int> vals) {
  Labeling f;
  for (int v : vals) f.values.push_back(static_cast<std::uint8_t>(v));
  return f;
}

// Exhaustive minimum over an alphabet, independent of the solver path.
int min_weight_over(const Graph& g, const std::vector<int>& digits) {
  int best = 3 * g.n + 1;
  std::vector<int> idx(g.n, 0);
  for (;;) {
    Labeling f(g.n, 0);
    for (int v = 0; v < g.n; ++v) f[v] = static_cast<std::uint8_t>(digits[idx[v]]);
    if (is_valid_drdf(g, f)) best = std::min(best, weight(f));
    int pos = g.n - 1;
    while (pos >= 0 && idx[pos] + 1 == static_cast<int>(digits.size())) idx[pos--] = 0;
    if (pos < 0) break;
    ++idx[pos];
  }
  return best;
}

}  // namespace

TEST_CASE("validity on the 3-path") {
  Graph p3 = generate(FamilySpec::parse("path:3"));
  CHECK(is_valid_drdf(p3, lab({0, 3, 0})));
  CHECK_FALSE(is_valid_drdf(p3, lab({0, 2, 0})));  // a 0 needs two 2s or a 3
  CHECK(is_valid_drdf(p3, lab({1, 2, 1})));
  CHECK_THROWS_AS(is_valid_drdf(p3, lab({0, 3})), InputError);
}

TEST_CASE("a lone 2-neighbor does not rescue a 0 even next to a 3") {
  // 0-vertex with one 3-neighbor and one 2-neighbor is fine; with only the
  // 2-neighbor it is not.
  Graph p3 = generate(FamilySpec::parse("path:3"));
  CHECK(is_valid_drdf(p3, lab({2, 0, 3})));
  CHECK_FALSE(is_valid_drdf(p3, lab({2, 0, 0})));
}

TEST_CASE("weight sums labels") {
  CHECK(weight(lab({0, 3, 0})) == 3);
  CHECK(weight(lab({0, 0, 0, 0})) == 0);
  CHECK(weight(lab({2, 2, 2, 2})) == 8);
}

TEST_CASE("normalize_no_ones is the identity without 1s") {
  Graph p3 = generate(FamilySpec::parse("path:3"));
  CHECK(normalize_no_ones(p3, lab({0, 3, 0})) == lab({0, 3, 0}));
}

TEST_CASE("normalize_no_ones absorbs 1s next to a 3") {
  Graph p3 = generate(FamilySpec::parse("path:3"));
  Labeling out = normalize_no_ones(p3, lab({1, 3, 1}));
  CHECK(is_valid_drdf(p3, out));
  CHECK(weight(out) <= 5);
  CHECK(out == lab({0, 3, 0}));
}

TEST_CASE("normalize_no_ones raises a 2 when no 3 is adjacent") {
  Graph p3 = generate(FamilySpec::parse("path:3"));
  Labeling out = normalize_no_ones(p3, lab({1, 2, 1}));
  CHECK(is_valid_drdf(p3, out));
  CHECK(weight(out) <= 4);
  CHECK(out == lab({0, 3, 0}));
  // a weight-3 valid labeling over {0,2,3} exists, so the rewrite is tight here
  CHECK(min_weight_over(p3, {0, 2, 3}) == 3);
}

TEST_CASE("normalize_no_ones rejects invalid input") {
  Graph p3 = generate(FamilySpec::parse("path:3"));
  CHECK_THROWS_AS(normalize_no_ones(p3, lab({1, 0, 0})), InputError);
}

TEST_CASE("normalization property: valid, 1-free, never heavier") {
  // exhaustive over {0,1,2,3}^n for n <= 4
  for (int n = 2; n <= 4; ++n) {
    enumerate_labeled_connected(n, [&](const Graph& g) {
      std::vector<int> idx(n, 0);
      for (;;) {
        Labeling f(n, 0);
        for (int v = 0; v < n; ++v) f[v] = static_cast<std::uint8_t>(idx[v]);
        if (is_valid_drdf(g, f)) {
          Labeling out = normalize_no_ones(g, f);
          CHECK(is_valid_drdf(g, out));
          CHECK(weight(out) <= weight(f));
          for (int v = 0; v < n; ++v) CHECK(out[v] != 1);
        }
        int pos = n - 1;
        while (pos >= 0 && idx[pos] == 3) idx[pos--] = 0;
        if (pos < 0) break;
        ++idx[pos];
      }
    });
  }
}

TEST_CASE("normalization property: random sample at n = 5, 6") {
  std::mt19937 rng(20240831);
  for (int n : {5, 6}) {
    Graph g;
    // random connected graph by rejection
    std::uniform_int_distribution<std::uint64_t> mask_dist(0, graph_mask_count(n) - 1);
    auto pairs = all_vertex_pairs(n);
    for (int trial = 0; trial < 200; ++trial) {
      std::uint64_t mask = mask_dist(rng);
      g = Graph(n);
      for (std::size_t k = 0; k < pairs.size(); ++k)
        if ((mask >> k) & 1) g.add_edge(pairs[k].first, pairs[k].second);
      if (!is_connected(g)) continue;
      std::uniform_int_distribution<int> label_dist(0, 3);
      for (int s = 0; s < 50; ++s) {
        Labeling f(n, 0);
        for (int v = 0; v < n; ++v) f[v] = static_cast<std::uint8_t>(label_dist(rng));
        if (!is_valid_drdf(g, f)) continue;
        Labeling out = normalize_no_ones(g, f);
        CHECK(is_valid_drdf(g, out));
        CHECK(weight(out) <= weight(f));
        for (int v = 0; v < n; ++v) CHECK(out[v] != 1);
      }
    }
  }
}

TEST_CASE("dropping the 1s never changes the optimum on small graphs") {
  for (int n = 1; n <= 4; ++n) {
    enumerate_labeled_connected(n, [&](const Graph& g) {
      CHECK(min_weight_over(g, {0, 2, 3}) == min_weight_over(g, {0, 1, 2, 3}));
    });
  }
}

TEST_CASE("validity is monotone under raising one label") {
  std::mt19937 rng(7);
  enumerate_labeled_connected(4, [&](const Graph& g) {
    std::uniform_int_distribution<int> label_dist(0, 3);
    for (int s = 0; s < 10; ++s) {
      Labeling f(4, 0);
      for (int v = 0; v < 4; ++v) f[v] = static_cast<std::uint8_t>(label_dist(rng));
      if (!is_valid_drdf(g, f)) continue;
      for (int v = 0; v < 4; ++v) {
        if (f[v] == 3) continue;
        Labeling up = f;
        ++up[v];
        CHECK(is_valid_drdf(g, up));
      }
    }
  });
}

TEST_CASE("labeling text form") {
  CHECK(labeling_to_string(lab({0, 3, 0})) == "0,3,0");
  CHECK(labeling_from_string("0,3,0") == lab({0, 3, 0}));
  CHECK_THROWS_AS(labeling_from_string("0,4,0"), InputError);
  CHECK_THROWS_AS(labeling_from_string("0,,1"), InputError);
}
