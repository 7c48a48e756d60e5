#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "drb/bondage.hpp"

using namespace drb;

namespace {

Graph fam(const char* s) { return generate(FamilySpec::parse(s)); }

// Independent check that removing a given set strictly increases gamma.
bool strictly_increases(const Graph& g, const EdgeSet& s) {
  return gamma_exact(remove_edges(g, s)).value > gamma_exact(g).value;
}

}  // namespace

TEST_CASE("bondage on named graphs") {
  CHECK(bondage_exact(fam("path:5")).value == 1);
  CHECK(bondage_exact(fam("cycle:6")).value == 2);
  CHECK(bondage_exact(fam("cycle:8")).value == 1);
  CHECK(bondage_exact(fam("complete:4")).value == 2);
}

TEST_CASE("bondage of the 3,3 complete bipartite graph") {
  BondageResult res = bondage_exact(fam("complete_multipartite:3,3"));
  CHECK(res.value == 4);
  CHECK(res.base_gamma == 6);
  CHECK(res.witness.size() == 4);
  CHECK(strictly_increases(fam("complete_multipartite:3,3"), res.witness));
}

TEST_CASE("bondage witness removal increases gamma and is size-minimal") {
  for (const char* s : {"path:6", "cycle:9", "wheel:5", "complete:5", "grid:2,3"}) {
    Graph g = fam(s);
    BondageResult res = bondage_exact(g);
    CHECK(static_cast<int>(res.witness.size()) == res.value);
    CHECK(strictly_increases(g, res.witness));
  }
}

TEST_CASE("bondage rejects edgeless graphs") {
  CHECK_THROWS_AS(bondage_exact(fam("empty:3")), InputError);
}

TEST_CASE("bondage is thread-count invariant") {
  Graph g = fam("complete_multipartite:3,3");
  BondageOptions one, four;
  one.threads = 1;
  four.threads = 4;
  BondageResult a = bondage_exact(g, one);
  BondageResult b = bondage_exact(g, four);
  CHECK(a.value == b.value);
  CHECK(a.witness == b.witness);
  CHECK(a.subsets_tested == b.subsets_tested);
}

TEST_CASE("catalog formulas on the star") {
  Graph star = fam("star:3");
  BoundReport rep = bound_catalog(star);
  const BoundEntry* open = rep.find("path_degree_sum");
  REQUIRE(open != nullptr);
  CHECK(open->applicable);
  CHECK(open->value == 2);  // leaf-hub-leaf: 1+3+1-3-0
  const BoundEntry* sup = rep.find("support_vertex");
  CHECK(sup->applicable);
  CHECK(sup->value == 2);
}

TEST_CASE("catalog formulas on cycles") {
  BoundReport rep = bound_catalog(fam("cycle:8"));
  CHECK(rep.find("max_plus_min_degree")->value == 3);
  CHECK(rep.find("edge_degree_sum")->value == 3);
  CHECK(rep.find("two_path_degree_sum")->value == 3);
  // generator-tagged planar, girth 8
  CHECK(rep.find("planar_girth4")->applicable);
  CHECK(rep.find("planar_girth4")->value == 4);
  CHECK(rep.find("planar_girth6")->applicable);
  CHECK(rep.find("planar_girth6")->value == 3);
  CHECK(rep.find("planar")->value == 8);
}

TEST_CASE("triangle variant of the path bound on the 4-clique") {
  // All pairs in K_4 share two neighbors; the kept edges at the middle
  // vertex make the construction size 4, and removal must still lift gamma.
  BoundReport rep = bound_catalog(fam("complete:4"));
  const BoundEntry* tri = rep.find("triangle_degree_sum");
  REQUIRE(tri != nullptr);
  CHECK(tri->applicable);
  CHECK(tri->value == 4);
  REQUIRE(tri->certificate.has_value());
  CHECK(tri->certificate->size() == 4);
  CHECK(strictly_increases(fam("complete:4"), *tri->certificate));
}

TEST_CASE("no applicable planar entries without the generator tag") {
  Graph g = from_edge_list(3, {{0, 1}, {1, 2}});  // structurally planar, untagged
  BoundReport rep = bound_catalog(g);
  CHECK_FALSE(rep.find("planar")->applicable);
  CHECK_FALSE(rep.find("planar_girth4")->applicable);
  CHECK_FALSE(rep.find("planar_no_degree5")->applicable);
}

TEST_CASE("path deletion set on the 3-path removes only the far edge") {
  Graph p3 = fam("path:3");
  EdgeSet u = path_deletion_set(p3, 0, 1, 2);
  CHECK(u == EdgeSet{{0, 1}});
  CHECK(gamma_exact(remove_edges(p3, u)).value == 5);  // isolated vertex plus an edge
}

TEST_CASE("path deletion set on the star keeps one spoke") {
  Graph star = fam("star:3");
  EdgeSet u = path_deletion_set(star, 1, 0, 2);
  CHECK(u == EdgeSet{{0, 1}, {0, 3}});
  CHECK(gamma_exact(remove_edges(star, u)).value == 7);
}

TEST_CASE("path deletion set on the triangle") {
  Graph k3 = fam("complete:3");
  EdgeSet u = path_deletion_set(k3, 0, 1, 2);
  CHECK(u == EdgeSet{{0, 1}, {0, 2}});
  CHECK(gamma_exact(remove_edges(k3, u)).value == 5);
  CHECK_THROWS_AS(path_deletion_set(k3, 0, 1, 0), InputError);
}

TEST_CASE("edge deletion set sizes match the degree formula") {
  Graph k2 = fam("path:2");
  EdgeSet u = edge_deletion_set(k2, 0, 1);
  CHECK(u == EdgeSet{{0, 1}});
  CHECK(gamma_exact(remove_edges(k2, u)).value == 4);

  Graph p3 = fam("path:3");
  CHECK(edge_deletion_set(p3, 1, 0).size() == 2);  // center-leaf: 2+1-1-0

  Graph c4 = fam("cycle:4");
  CHECK(edge_deletion_set(c4, 0, 1).size() == 3);  // 2+2-1-0
  CHECK_THROWS_AS(edge_deletion_set(c4, 0, 2), InputError);
}

TEST_CASE("two-path deletion set sizes") {
  Graph p3 = fam("path:3");
  CHECK(two_path_deletion_set(p3, 0, 1, 2) == EdgeSet{{0, 1}});  // 1+1-1

  Graph c4 = fam("cycle:4");
  CHECK(two_path_deletion_set(c4, 0, 1, 2).size() == 3);  // 2+2-1

  Graph star = fam("star:3");
  CHECK(two_path_deletion_set(star, 1, 0, 2).size() == 1);
}

TEST_CASE("every deletion-set construction lifts gamma on small graphs") {
  for (int n = 3; n <= 4; ++n) {
    enumerate_labeled_connected(n, [&](const Graph& g) {
      int base = gamma_exact(g).value;
      auto lifted = [&](const EdgeSet& s) {
        return gamma_exact(remove_edges(g, s)).value > base;
      };
      for (int y = 0; y < n; ++y)
        for (std::uint64_t mx = g.adj[y]; mx;) {
          int x = pop_lsb(mx);
          for (std::uint64_t mz = g.adj[y]; mz;) {
            int z = pop_lsb(mz);
            if (z == x) continue;
            REQUIRE(lifted(path_deletion_set(g, x, y, z)));
            REQUIRE(lifted(two_path_deletion_set(g, x, y, z)));
          }
        }
      for (auto [u, v] : g.edge_list()) {
        REQUIRE(lifted(edge_deletion_set(g, u, v)));
        REQUIRE(lifted(edge_deletion_set(g, v, u)));
      }
    });
  }
}

TEST_CASE("bondage never exceeds an applicable catalog bound (small sweep)") {
  for (int n = 3; n <= 4; ++n) {
    enumerate_labeled_connected(n, [&](const Graph& g) {
      if (g.edge_count() == 0) return;
      int b = bondage_exact(g).value;
      for (const auto& e : bound_catalog(g).entries)
        if (e.applicable) REQUIRE(b <= *e.value);
    });
  }
}

TEST_CASE("dominating-vertex rule on small graphs") {
  for (int n = 3; n <= 5; ++n) {
    enumerate_labeled_connected(n, [&](const Graph& g) {
      int k = 0;
      for (int v = 0; v < n; ++v)
        if (g.degree(v) == n - 1) ++k;
      if (k >= 1) REQUIRE(bondage_exact(g).value == (k + 1) / 2);
    });
  }
}

TEST_CASE("closed-form gamma values") {
  CHECK(closed_form_gamma(FamilySpec::parse("path:7")) == 8);
  CHECK(closed_form_gamma(FamilySpec::parse("path:9")) == 9);
  CHECK(closed_form_gamma(FamilySpec::parse("cycle:12")) == 12);
  CHECK(closed_form_gamma(FamilySpec::parse("complete_multipartite:2,5")) == 4);
  CHECK(closed_form_gamma(FamilySpec::parse("wheel:9")) == 3);
  CHECK(closed_form_gamma(FamilySpec::parse("empty:4")) == 8);
  CHECK(closed_form_gamma(FamilySpec::parse("complete:1")) == 2);
  CHECK(closed_form_gamma(FamilySpec::parse("join:2,5")) == 4);
  CHECK_THROWS_AS(closed_form_gamma(FamilySpec::parse("grid:3,3")), InputError);
}

TEST_CASE("closed-form bondage values") {
  CHECK(closed_form_bondage(FamilySpec::parse("cycle:9")) == 2);
  CHECK(closed_form_bondage(FamilySpec::parse("complete:7")) == 4);
  CHECK(closed_form_bondage(FamilySpec::parse("complete_multipartite:2,2,4")) == 1);
  CHECK(closed_form_bondage(FamilySpec::parse("wheel:4")) == 2);  // equals the 4-clique
  CHECK(closed_form_bondage(FamilySpec::parse("wheel:6")) == 1);
  CHECK(closed_form_bondage(FamilySpec::parse("star:4")) == 1);
  CHECK(closed_form_bondage(FamilySpec::parse("complete_multipartite:3,4")) == 3);
  CHECK_THROWS_AS(closed_form_bondage(FamilySpec::parse("path:1")), InputError);
  CHECK_THROWS_AS(closed_form_bondage(FamilySpec::parse("grid:2,2")), InputError);
}

TEST_CASE("closed forms agree with the exact solvers on spot instances") {
  for (const char* s : {"path:5", "path:6", "cycle:7", "complete:5", "wheel:6",
                        "complete_multipartite:1,2", "complete_multipartite:2,3",
                        "complete_multipartite:2,2,3", "complete_multipartite:1,1,3"}) {
    FamilySpec spec = FamilySpec::parse(s);
    Graph g = generate(spec);
    CHECK(closed_form_gamma(spec) == gamma_exact(g).value);
    CHECK(closed_form_bondage(spec) == bondage_exact(g).value);
  }
}

TEST_CASE("closed-form gamma agrees with the solver on join families") {
  for (const char* s : {"join:1,4", "join:2,3", "join:2,4", "join:2,6", "join:3,3", "join:3,4"}) {
    FamilySpec spec = FamilySpec::parse(s);
    CHECK(closed_form_gamma(spec) == gamma_exact(generate(spec)).value);
  }
}

TEST_CASE("multipartite otherwise-case formula is confirmed by search on 3,4") {
  // The published case analysis leaves this branch lightly justified; check
  // it against the subset search where that is feasible.
  FamilySpec spec = FamilySpec::parse("complete_multipartite:3,4");
  CHECK(closed_form_bondage(spec) == 3);
  CHECK(bondage_exact(generate(spec)).value == 3);
}

TEST_CASE("tree bound holds with the certificate construction on small trees") {
  for (int n = 3; n <= 6; ++n) {
    enumerate_trees(n, [&](const Graph& g) {
      BoundReport rep = bound_catalog(g);
      const BoundEntry* tree = rep.find("tree");
      REQUIRE(tree->applicable);
      REQUIRE(tree->value == 2);
      REQUIRE(tree->certificate.has_value());
      REQUIRE(strictly_increases(g, *tree->certificate));
      REQUIRE(bondage_exact(g).value <= 2);
    });
  }
}

TEST_CASE("budgeted bondage can time out") {
  BondageOptions opt;
  opt.budget = std::chrono::milliseconds(0);
  CHECK_FALSE(bondage_exact_budgeted(fam("complete_multipartite:3,3"), opt).has_value());
}
