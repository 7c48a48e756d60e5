#include "drb/report.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <thread>

namespace drb {

json graph_summary(const Graph& g) {
  json j;
  j["n"] = g.n;
  j["edges"] = g.edge_count();
  if (g.n <= 62) j["graph6"] = to_graph6(g);
  if (g.planar_tag) j["planar_tag"] = *g.planar_tag;
  return j;
}

json edges_json(const EdgeSet& s) {
  json arr = json::array();
  for (auto [u, v] : s.edges) arr.push_back(json::array({u, v}));
  return arr;
}

json bound_report_json(const BoundReport& rep) {
  json arr = json::array();
  for (const auto& e : rep.entries) {
    json j;
    j["name"] = e.name;
    j["applicable"] = e.applicable;
    if (e.value) j["value"] = *e.value;
    if (!e.parameters.empty()) j["parameters"] = e.parameters;
    if (e.certificate) j["certificate"] = edges_json(*e.certificate);
    arr.push_back(std::move(j));
  }
  return arr;
}

json reduction_report_json(const ReductionReport& rep) {
  json j;
  j["num_vars"] = rep.num_vars;
  j["num_clauses"] = rep.num_clauses;
  j["vertices"] = rep.vertices;
  j["edges"] = rep.edges;
  j["counts_match"] = rep.counts_match;
  j["bipartite"] = rep.bipartite;
  j["satisfiable"] = rep.satisfiable;
  j["deletion_certificates_ok"] = rep.deletion_certificates_ok;
  j["deletion_fallbacks"] = rep.deletion_fallbacks;
  j["exact_attempted"] = rep.exact_attempted;
  j["exact_verified"] = rep.exact_verified;
  if (rep.gamma) j["gamma"] = *rep.gamma;
  auto put = [&](const char* key, const std::optional<bool>& v) {
    if (v) j[key] = *v;
  };
  put("lower_bound_holds", rep.lower_bound_holds);
  put("tight_iff_satisfiable", rep.tight_iff_satisfiable);
  put("witness_structure_holds", rep.witness_structure_holds);
  put("assignment_certificate_ok", rep.assignment_certificate_ok);
  put("bondage_one_confirmed", rep.bondage_one_confirmed);
  if (!rep.note.empty()) j["note"] = rep.note;
  return j;
}

json run_report(const std::string& command, json input, json result, double elapsed_ms) {
  json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["command"] = command;
  j["input"] = std::move(input);
  j["result"] = std::move(result);
  j["timing"] = json{{"ms", elapsed_ms}};
  return j;
}

namespace checks {

namespace {

struct SweepAcc {
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  std::uint64_t tallies[2] = {0, 0};
  std::vector<std::string> examples;

  void fail(const std::string& what) {
    ++failures;
    if (examples.size() < 5) examples.push_back(what);
  }
};

void merge_into(SweepAcc& a, const SweepAcc& b) {
  a.checked += b.checked;
  a.failures += b.failures;
  a.tallies[0] += b.tallies[0];
  a.tallies[1] += b.tallies[1];
  for (const auto& e : b.examples)
    if (a.examples.size() < 5) a.examples.push_back(e);
}

// Fixed chunk grid so the merged result is identical for every thread count.
template <typename Fn>
SweepAcc chunked_sweep(std::uint64_t total, int threads, Fn fn) {
  if (total == 0) return {};
  int nchunks = static_cast<int>(std::min<std::uint64_t>(64, total));
  std::uint64_t chunk = (total + nchunks - 1) / nchunks;
  std::vector<SweepAcc> accs(nchunks);
  std::atomic<int> next{0};
  auto worker = [&]() {
    for (;;) {
      int i = next.fetch_add(1);
      if (i >= nchunks) return;
      std::uint64_t lo = static_cast<std::uint64_t>(i) * chunk;
      std::uint64_t hi = std::min(total, lo + chunk);
      if (lo < hi) fn(lo, hi, accs[i]);
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  SweepAcc out;
  for (const auto& a : accs) merge_into(out, a);
  return out;
}

json sweep_json(const SweepAcc& acc) {
  json j;
  j["checked"] = acc.checked;
  j["failures"] = acc.failures;
  if (!acc.examples.empty()) j["examples"] = acc.examples;
  return j;
}

bool deletion_increases(const Graph& g, const EdgeSet& s, int base) {
  return prove_gamma_at_least(remove_edges(g, s), base + 1).proven;
}

}  // namespace

json gamma_family_tables() {
  json out;
  out["name"] = "gamma_family_tables";
  json paths = json::array(), cycles = json::array();
  bool pass = true;
  for (int n = 1; n <= 15; ++n) {
    FamilySpec spec = FamilySpec::parse("path:" + std::to_string(n));
    int expected = closed_form_gamma(spec);
    int got = gamma_exact(generate(spec)).value;
    pass = pass && got == expected;
    paths.push_back(json{{"n", n}, {"gamma", got}, {"formula", expected}});
  }
  for (int n = 3; n <= 14; ++n) {
    FamilySpec spec = FamilySpec::parse("cycle:" + std::to_string(n));
    int expected = closed_form_gamma(spec);
    int got = gamma_exact(generate(spec)).value;
    pass = pass && got == expected;
    cycles.push_back(json{{"n", n}, {"gamma", got}, {"formula", expected}});
  }
  out["paths"] = std::move(paths);
  out["cycles"] = std::move(cycles);
  out["pass"] = pass;
  return out;
}

json bondage_family_tables(int threads) {
  json out;
  out["name"] = "bondage_family_tables";
  bool pass = true;
  json table = json::array();
  auto row = [&](const std::string& spec_text) {
    FamilySpec spec = FamilySpec::parse(spec_text);
    int expected = closed_form_bondage(spec);
    BondageOptions opt;
    opt.threads = threads;
    BondageResult res = bondage_exact(generate(spec), opt);
    pass = pass && res.value == expected;
    table.push_back(json{{"family", spec_text},
                         {"bondage", res.value},
                         {"formula", expected},
                         {"witness", edges_json(res.witness)},
                         {"subsets_tested", res.subsets_tested}});
  };
  for (int n = 2; n <= 12; ++n) row("path:" + std::to_string(n));
  for (int n = 3; n <= 12; ++n) row("cycle:" + std::to_string(n));
  for (int n = 3; n <= 7; ++n) row("complete:" + std::to_string(n));
  for (int n = 5; n <= 8; ++n) row("wheel:" + std::to_string(n));
  out["table"] = std::move(table);
  out["pass"] = pass;
  return out;
}

json multipartite_values(int threads) {
  json out;
  out["name"] = "multipartite_values";
  bool pass = true;
  json gammas = json::array(), bondages = json::array();
  for (const char* s : {"complete_multipartite:1,4", "complete_multipartite:2,3",
                        "complete_multipartite:2,2,3", "complete_multipartite:3,3"}) {
    FamilySpec spec = FamilySpec::parse(s);
    int expected = closed_form_gamma(spec);
    int got = gamma_exact(generate(spec)).value;
    pass = pass && got == expected;
    gammas.push_back(json{{"family", s}, {"gamma", got}, {"formula", expected}});
  }
  for (const char* s : {"complete_multipartite:1,1,3", "complete_multipartite:2,3",
                        "complete_multipartite:3,3"}) {
    FamilySpec spec = FamilySpec::parse(s);
    int expected = closed_form_bondage(spec);
    BondageOptions opt;
    opt.threads = threads;
    BondageResult res = bondage_exact(generate(spec), opt);
    pass = pass && res.value == expected;
    bondages.push_back(json{{"family", s},
                            {"bondage", res.value},
                            {"formula", expected},
                            {"witness", edges_json(res.witness)}});
  }
  out["gamma"] = std::move(gammas);
  out["bondage"] = std::move(bondages);
  out["pass"] = pass;
  return out;
}

json multipartite_stretch(int threads, std::chrono::milliseconds budget) {
  json out;
  out["name"] = "multipartite_stretch";
  FamilySpec spec = FamilySpec::parse("complete_multipartite:3,3,3");
  BondageOptions opt;
  opt.threads = threads;
  opt.budget = budget;
  auto res = bondage_exact_budgeted(generate(spec), opt);
  if (!res) {
    out["timed_out"] = true;
    out["pass"] = true;  // non-blocking: an honest timeout is acceptable
    return out;
  }
  out["timed_out"] = false;
  out["bondage"] = res->value;
  out["formula"] = 7;
  out["subsets_tested"] = res->subsets_tested;
  out["pass"] = res->value == 7;
  return out;
}

json multipartite_otherwise_audit(int threads) {
  // The catch-all branch of the multipartite bondage formula rests on a
  // sketched argument; confirm it by subset search where that is feasible
  // and report disagreement rather than assuming it.
  json out;
  out["name"] = "multipartite_otherwise_audit";
  bool pass = true;
  json table = json::array();
  for (const char* s : {"complete_multipartite:3,4", "complete_multipartite:3,3,4"}) {
    FamilySpec spec = FamilySpec::parse(s);
    int formula = closed_form_bondage(spec);
    BondageOptions opt;
    opt.threads = threads;
    BondageResult res = bondage_exact(generate(spec), opt);
    pass = pass && res.value == formula;
    table.push_back(json{{"family", s},
                         {"bondage", res.value},
                         {"formula", formula},
                         {"agree", res.value == formula}});
  }
  out["table"] = std::move(table);
  out["pass"] = pass;
  return out;
}

json noones_equivalence(int max_n, int threads) {
  json out;
  out["name"] = "noones_equivalence";
  json per_n = json::array();
  bool pass = true;
  for (int n = 1; n <= max_n; ++n) {
    SweepAcc acc = chunked_sweep(graph_mask_count(n), threads, [&](std::uint64_t lo,
                                                                   std::uint64_t hi,
                                                                   SweepAcc& a) {
      enumerate_labeled_connected_range(n, lo, hi, [&](const Graph& g) {
        ++a.checked;
        GammaResult narrow = gamma_bruteforce(g, Alphabet::zero_two_three);
        GammaResult wide = gamma_bruteforce(g, Alphabet::zero_one_two_three);
        GammaResult exact = gamma_exact(g);
        bool ok = narrow.value == wide.value && exact.value == narrow.value &&
                  exact.witness == narrow.witness;
        if (!ok) a.fail(to_graph6(g));
      });
    });
    pass = pass && acc.failures == 0;
    json j = sweep_json(acc);
    j["n"] = n;
    per_n.push_back(std::move(j));
  }
  out["per_n"] = std::move(per_n);
  out["pass"] = pass;
  return out;
}

json classifier_agreement(int max_n, int threads) {
  json out;
  out["name"] = "classifier_agreement";
  json per_n = json::array();
  bool pass = true;
  for (int n = 3; n <= max_n; ++n) {
    SweepAcc acc = chunked_sweep(graph_mask_count(n), threads, [&](std::uint64_t lo,
                                                                   std::uint64_t hi,
                                                                   SweepAcc& a) {
      enumerate_labeled_connected_range(n, lo, hi, [&](const Graph& g) {
        ++a.checked;
        auto cls = classify_small_gamma(g);
        int value = gamma_exact(g).value;
        bool ok = cls ? *cls == value : value >= 6;
        if (!ok) a.fail(to_graph6(g));
      });
    });
    pass = pass && acc.failures == 0;
    json j = sweep_json(acc);
    j["n"] = n;
    per_n.push_back(std::move(j));
  }
  out["per_n"] = std::move(per_n);
  out["pass"] = pass;
  return out;
}

json bound_audit(int max_n, int cert_max_n, int threads) {
  json out;
  out["name"] = "bound_audit";
  json per_n = json::array();
  bool pass = true;
  for (int n = 3; n <= max_n; ++n) {
    SweepAcc acc = chunked_sweep(graph_mask_count(n), threads, [&](std::uint64_t lo,
                                                                   std::uint64_t hi,
                                                                   SweepAcc& a) {
      enumerate_labeled_connected_range(n, lo, hi, [&](const Graph& g) {
        if (g.edge_count() == 0) return;
        ++a.checked;
        int base = gamma_exact(g).value;
        BondageResult res = bondage_exact(g);
        BoundReport rep = bound_catalog(g);
        for (const auto& e : rep.entries) {
          if (!e.applicable) continue;
          if (res.value > *e.value) a.fail("bound:" + e.name + " " + to_graph6(g));
          if (e.certificate && !deletion_increases(g, *e.certificate, base))
            a.fail("certificate:" + e.name + " " + to_graph6(g));
        }
        if (g.n > cert_max_n) return;
        // exhaustive positions for the three deletion-set constructions
        for (int y = 0; y < g.n; ++y)
          for (std::uint64_t mx = g.adj[y]; mx;) {
            int x = pop_lsb(mx);
            for (std::uint64_t mz = g.adj[y]; mz;) {
              int z = pop_lsb(mz);
              if (z == x) continue;
              ++a.tallies[0];
              if (!deletion_increases(g, path_deletion_set(g, x, y, z), base))
                a.fail("path_deletion_set " + to_graph6(g));
              if (!deletion_increases(g, two_path_deletion_set(g, x, y, z), base))
                a.fail("two_path_deletion_set " + to_graph6(g));
            }
          }
        for (auto [u, v] : g.edge_list()) {
          ++a.tallies[0];
          if (!deletion_increases(g, edge_deletion_set(g, u, v), base) ||
              !deletion_increases(g, edge_deletion_set(g, v, u), base))
            a.fail("edge_deletion_set " + to_graph6(g));
        }
      });
    });
    pass = pass && acc.failures == 0;
    json j = sweep_json(acc);
    j["n"] = n;
    j["certificate_positions"] = acc.tallies[0];
    per_n.push_back(std::move(j));
  }
  out["per_n"] = std::move(per_n);
  out["pass"] = pass;
  return out;
}

json tree_census(int max_n, int threads) {
  json out;
  out["name"] = "tree_census";
  json per_n = json::array();
  bool pass = true;
  for (int n = 3; n <= max_n; ++n) {
    SweepAcc acc = chunked_sweep(tree_count(n), threads, [&](std::uint64_t lo,
                                                             std::uint64_t hi,
                                                             SweepAcc& a) {
      enumerate_trees_range(n, lo, hi, [&](const Graph& g) {
        ++a.checked;
        BondageResult res = bondage_exact(g);
        if (res.value == 1)
          ++a.tallies[0];
        else if (res.value == 2)
          ++a.tallies[1];
        else
          a.fail(to_graph6(g));
      });
    });
    pass = pass && acc.failures == 0;
    json j = sweep_json(acc);
    j["n"] = n;
    j["bondage_1"] = acc.tallies[0];
    j["bondage_2"] = acc.tallies[1];
    per_n.push_back(std::move(j));
  }
  out["per_n"] = std::move(per_n);
  out["pass"] = pass;
  return out;
}

namespace {

CnfFormula tiny_satisfiable() {
  CnfFormula f;
  f.num_vars = 2;
  f.clauses.push_back({-1, 1, 2});
  return f;
}

CnfFormula figure_instance() {
  return parse_dimacs_cnf("p cnf 4 3\n1 -2 4 0\n-1 -2 4 0\n2 3 -4 0\n");
}

CnfFormula unsat_instance() {
  CnfFormula f;
  f.num_vars = 3;
  for (int s = 0; s < 8; ++s) {
    std::array<int, 3> c;
    for (int i = 0; i < 3; ++i) c[i] = ((s >> i) & 1) ? (i + 1) : -(i + 1);
    std::sort(c.begin(), c.end());
    f.clauses.push_back(c);
  }
  return f;
}

}  // namespace

json reduction_satisfiable(int threads) {
  json out;
  out["name"] = "reduction_satisfiable";
  CnfFormula f = tiny_satisfiable();
  ReductionGraph r = build_reduction(f);
  const int n = r.num_vars;
  bool pass = r.graph.n == 26 && r.graph.edge_count() == 39;

  GammaResult base = gamma_exact(r.graph);
  out["gamma"] = base.value;
  out["gamma_expected"] = 6 * n + 8;
  pass = pass && base.value == 6 * n + 8;

  auto assignment = sat_bruteforce(f);
  pass = pass && assignment.has_value();
  if (assignment) {
    Labeling cert = certificate_from_assignment(f, *assignment);
    bool cert_ok = is_valid_drdf(r.graph, cert) && weight(cert) == 6 * n + 8;
    out["assignment_certificate_ok"] = cert_ok;
    pass = pass && cert_ok;
  }

  Graph cut = remove_edges(r.graph, EdgeSet{{r.hub(1), r.hub(2)}});
  GammaResult lifted = gamma_exact(cut);
  out["gamma_after_hub_cut"] = lifted.value;
  out["gamma_after_expected"] = 6 * n + 9;
  pass = pass && lifted.value == 6 * n + 9;
  out["bondage_one"] = lifted.value > base.value;

  ReductionCheckOptions opt;
  opt.threads = threads;
  out["report"] = reduction_report_json(verify_reduction(f, opt));
  out["pass"] = pass && lifted.value > base.value;
  return out;
}

json reduction_certificates(int threads) {
  json out;
  out["name"] = "reduction_certificates";
  CnfFormula f = figure_instance();
  ReductionGraph r = build_reduction(f);
  const int n = r.num_vars;
  bool pass = r.graph.n == 44 && r.graph.edge_count() == 73 && is_bipartite(r.graph);
  out["vertices"] = r.graph.n;
  out["edges"] = r.graph.edge_count();
  out["bipartite"] = is_bipartite(r.graph);

  auto edge_list = r.graph.edge_list();
  SweepAcc acc = chunked_sweep(edge_list.size(), threads, [&](std::uint64_t lo,
                                                              std::uint64_t hi,
                                                              SweepAcc& a) {
    for (std::uint64_t k = lo; k < hi; ++k) {
      auto [u, v] = edge_list[k];
      ++a.checked;
      DeletionCertificate cert = deletion_certificate(r, u, v);
      Graph cut = remove_edges(r.graph, EdgeSet{{u, v}});
      if (cert.fallback_used) ++a.tallies[0];
      if (!is_valid_drdf(cut, cert.labeling) || weight(cert.labeling) > 6 * n + 9)
        a.fail(r.role_name(u) + "-" + r.role_name(v));
    }
  });
  out["edges_checked"] = acc.checked;
  out["weight_cap"] = 6 * n + 9;
  out["fallbacks"] = acc.tallies[0];
  out["failures"] = acc.failures;
  if (!acc.examples.empty()) out["examples"] = acc.examples;
  out["pass"] = pass && acc.failures == 0;
  return out;
}

json reduction_unsatisfiable(int threads, std::chrono::milliseconds budget) {
  json out;
  out["name"] = "reduction_unsatisfiable";
  CnfFormula f = unsat_instance();
  ReductionGraph r = build_reduction(f);
  const int n = r.num_vars;
  out["vertices"] = r.graph.n;
  out["satisfiable"] = sat_bruteforce(f).has_value();
  ProveResult res = prove_gamma_at_least(r.graph, 6 * n + 9, threads, budget);
  out["bound"] = 6 * n + 9;
  out["proven"] = res.proven;
  out["timed_out"] = res.timed_out;
  out["nodes"] = res.nodes;
  if (res.timed_out) out["note"] = "budget expired; lower bound not exactly verified";
  // non-blocking: either a proof or an honest timeout report passes
  out["pass"] = res.proven || res.timed_out;
  return out;
}

json graph6_roundtrip(int max_n, int threads) {
  json out;
  out["name"] = "graph6_roundtrip";
  bool pass = true;
  json per_n = json::array();
  for (int n = 1; n <= std::min(max_n, 7); ++n) {
    SweepAcc acc = chunked_sweep(graph_mask_count(n), threads, [&](std::uint64_t lo,
                                                                   std::uint64_t hi,
                                                                   SweepAcc& a) {
      enumerate_labeled_connected_range(n, lo, hi, [&](const Graph& g) {
        ++a.checked;
        if (!(parse_graph6(to_graph6(g)) == g)) a.fail(to_graph6(g));
      });
    });
    pass = pass && acc.failures == 0;
    json j = sweep_json(acc);
    j["n"] = n;
    per_n.push_back(std::move(j));
  }
  out["per_n"] = std::move(per_n);
  out["pass"] = pass;
  return out;
}

json normalization_properties(int max_n, int threads) {
  json out;
  out["name"] = "normalization_properties";
  bool pass = true;
  json per_n = json::array();
  for (int n = 2; n <= max_n; ++n) {
    bool exhaustive = n <= 4;
    SweepAcc acc = chunked_sweep(graph_mask_count(n), threads, [&](std::uint64_t lo,
                                                                   std::uint64_t hi,
                                                                   SweepAcc& a) {
      enumerate_labeled_connected_range(n, lo, hi, [&](const Graph& g) {
        ++a.checked;
        auto try_labeling = [&](const Labeling& f) {
          if (!is_valid_drdf(g, f)) return;
          ++a.tallies[0];
          Labeling norm = normalize_no_ones(g, f);
          bool ok = is_valid_drdf(g, norm) && weight(norm) <= weight(f);
          for (int v = 0; v < n; ++v) ok = ok && norm[v] != 1;
          if (!ok) a.fail(to_graph6(g) + " f=" + labeling_to_string(f));
          // raising any one label keeps validity
          for (int v = 0; v < n; ++v) {
            if (f[v] == 3) continue;
            Labeling up = f;
            ++up[v];
            if (!is_valid_drdf(g, up)) a.fail("raise " + to_graph6(g));
          }
        };
        if (exhaustive) {
          std::vector<int> idx(n, 0);
          for (;;) {
            Labeling f(n, 0);
            for (int v = 0; v < n; ++v) f[v] = static_cast<std::uint8_t>(idx[v]);
            try_labeling(f);
            int pos = n - 1;
            while (pos >= 0 && idx[pos] == 3) idx[pos--] = 0;
            if (pos < 0) break;
            ++idx[pos];
          }
        } else {
          // per-graph deterministic seed keeps the sweep thread-independent
          std::uint64_t seed = 0;
          for (int v = 0; v < n; ++v) seed = seed * 1099511628211ull + g.adj[v];
          std::mt19937_64 rng(seed);
          std::uniform_int_distribution<int> label(0, 3);
          for (int s = 0; s < 20; ++s) {
            Labeling f(n, 0);
            for (int v = 0; v < n; ++v) f[v] = static_cast<std::uint8_t>(label(rng));
            try_labeling(f);
          }
        }
      });
    });
    pass = pass && acc.failures == 0;
    json j = sweep_json(acc);
    j["n"] = n;
    j["valid_labelings"] = acc.tallies[0];
    j["mode"] = exhaustive ? "exhaustive" : "sampled";
    per_n.push_back(std::move(j));
  }
  out["per_n"] = std::move(per_n);
  out["pass"] = pass;
  return out;
}

json deletion_monotonicity(int max_n, int threads) {
  json out;
  out["name"] = "deletion_monotonicity";
  bool pass = true;
  json per_n = json::array();
  for (int n = 2; n <= max_n; ++n) {
    SweepAcc acc = chunked_sweep(graph_mask_count(n), threads, [&](std::uint64_t lo,
                                                                   std::uint64_t hi,
                                                                   SweepAcc& a) {
      enumerate_labeled_connected_range(n, lo, hi, [&](const Graph& g) {
        ++a.checked;
        int base = gamma_exact(g).value;
        for (auto [u, v] : g.edge_list()) {
          Graph cut = remove_edges(g, EdgeSet{{u, v}});
          if (!prove_gamma_at_least(cut, base).proven) a.fail(to_graph6(g));
        }
      });
    });
    pass = pass && acc.failures == 0;
    json j = sweep_json(acc);
    j["n"] = n;
    per_n.push_back(std::move(j));
  }
  out["per_n"] = std::move(per_n);
  out["pass"] = pass;
  return out;
}

json dominating_vertex_rule(int max_n, int threads) {
  json out;
  out["name"] = "dominating_vertex_rule";
  bool pass = true;
  json per_n = json::array();
  for (int n = 3; n <= max_n; ++n) {
    SweepAcc acc = chunked_sweep(graph_mask_count(n), threads, [&](std::uint64_t lo,
                                                                   std::uint64_t hi,
                                                                   SweepAcc& a) {
      enumerate_labeled_connected_range(n, lo, hi, [&](const Graph& g) {
        int k = 0;
        for (int v = 0; v < n; ++v)
          if (g.degree(v) == n - 1) ++k;
        if (k < 1) return;
        ++a.checked;
        if (bondage_exact(g).value != (k + 1) / 2) a.fail(to_graph6(g));
      });
    });
    pass = pass && acc.failures == 0;
    json j = sweep_json(acc);
    j["n"] = n;
    per_n.push_back(std::move(j));
  }
  out["per_n"] = std::move(per_n);
  out["pass"] = pass;
  return out;
}

json planar_family_audit(int threads) {
  json out;
  out["name"] = "planar_family_audit";
  bool pass = true;
  json table = json::array();
  std::vector<std::string> specs;
  for (int n = 4; n <= 10; ++n) specs.push_back("cycle:" + std::to_string(n));
  for (int n = 4; n <= 8; ++n) specs.push_back("path:" + std::to_string(n));
  for (int n = 5; n <= 8; ++n) specs.push_back("wheel:" + std::to_string(n));
  for (int m = 3; m <= 6; ++m) specs.push_back("star:" + std::to_string(m));
  specs.insert(specs.end(), {"grid:2,3", "grid:2,4", "grid:3,3",
                             "tree_from_pruefer:0,0,1,1", "tree_from_pruefer:2,2,2"});
  for (const auto& s : specs) {
    Graph g = generate(FamilySpec::parse(s));
    BondageOptions opt;
    opt.threads = threads;
    BondageResult res = bondage_exact(g, opt);
    json caps = json::array();
    for (const auto& e : bound_catalog(g).entries) {
      if (!e.applicable) continue;
      if (e.name.rfind("planar", 0) != 0) continue;
      caps.push_back(json{{"bound", e.name}, {"value", *e.value}});
      pass = pass && res.value <= *e.value;
    }
    table.push_back(json{{"family", s}, {"bondage", res.value}, {"planar_bounds", caps}});
  }
  out["table"] = std::move(table);
  out["pass"] = pass;
  return out;
}

}  // namespace checks

}  // namespace drb
