#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "drb/report.hpp"

using namespace drb;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct GraphInput {
  std::string g6_file, edges_file, family, g6_string;

  void attach(CLI::App* cmd) {
    cmd->add_option("--g6", g6_file, "graph6 file (first line)");
    cmd->add_option("--edges", edges_file, "edge-list file: 'n m' then 'u v' lines");
    cmd->add_option("--family", family, "family spec, e.g. path:9 or complete_multipartite:3,3");
    cmd->add_option("--g6-string", g6_string, "graph6 literal");
  }

  std::pair<Graph, json> load() const {
    int sources = !g6_file.empty() + !edges_file.empty() + !family.empty() + !g6_string.empty();
    if (sources != 1)
      throw InputError("exactly one of --g6, --edges, --family, --g6-string is required");
    json input;
    Graph g;
    if (!g6_file.empty()) {
      std::string text = slurp(g6_file);
      auto nl = text.find('\n');
      g = parse_graph6(text.substr(0, nl));
      input["g6_file"] = g6_file;
    } else if (!edges_file.empty()) {
      g = parse_edge_list_text(slurp(edges_file));
      input["edges_file"] = edges_file;
    } else if (!g6_string.empty()) {
      g = parse_graph6(g6_string);
    } else {
      g = generate(FamilySpec::parse(family));
      input["family"] = family;
    }
    input["graph"] = graph_summary(g);
    return {std::move(g), std::move(input)};
  }
};

void emit(const json& report, const std::string& json_path, const std::string& human) {
  std::cout << report.dump(2) << '\n';
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) throw InputError("cannot write file: " + json_path);
    out << report.dump(2) << '\n';
  }
  if (!human.empty()) std::cerr << human << '\n';
}

std::optional<std::chrono::milliseconds> budget_of(double seconds) {
  if (seconds <= 0) return std::nullopt;
  return std::chrono::milliseconds(static_cast<long long>(seconds * 1000));
}

int run(int argc, char** argv) {
  CLI::App app{"exact double Roman domination and bondage toolkit"};
  app.require_subcommand(1);

  int threads = 1;
  double budget_s = 0;
  std::string json_path;
  app.add_option("--threads", threads, "worker threads for parallel phases")
      ->capture_default_str();
  app.add_option("--budget", budget_s, "wall-clock budget in seconds (0 = none)");
  app.add_option("--json", json_path, "also write the JSON report to this path");

  auto* gamma_cmd = app.add_subcommand("gamma", "exact gamma_dR of a graph");
  gamma_cmd->fallthrough();
  GraphInput gamma_in;
  gamma_in.attach(gamma_cmd);
  bool oracle = false;
  std::string alphabet = "023";
  gamma_cmd->add_flag("--oracle", oracle, "force the brute-force oracle");
  gamma_cmd->add_option("--alphabet", alphabet, "oracle alphabet: 023 or 0123");

  auto* bondage_cmd = app.add_subcommand("bondage", "exact b_dR of a graph");
  bondage_cmd->fallthrough();
  GraphInput bondage_in;
  bondage_in.attach(bondage_cmd);
  int max_size = 0;
  std::string cert_path;
  bondage_cmd->add_option("--max-size", max_size, "cap the searched subset size (0 = catalog cap)");
  bondage_cmd->add_option("--certificate", cert_path, "write the witness certificate JSON here");

  auto* bounds_cmd = app.add_subcommand("bounds", "evaluate the upper-bound catalog");
  bounds_cmd->fallthrough();
  GraphInput bounds_in;
  bounds_in.attach(bounds_cmd);

  auto* reduce_cmd = app.add_subcommand("reduce", "build the hardness-reduction graph from 3-CNF");
  reduce_cmd->fallthrough();
  std::string cnf_path;
  bool emit_g6 = false, verify = false;
  reduce_cmd->add_option("--cnf", cnf_path, "DIMACS CNF input file")->required();
  reduce_cmd->add_flag("--emit-g6", emit_g6, "include the graph6 encoding");
  reduce_cmd->add_flag("--verify", verify, "run the desk-scale claim checks");

  auto* verify_cmd = app.add_subcommand("verify-paper", "run the cross-module invariant suites");
  verify_cmd->fallthrough();
  int max_n = 5, trees_n = 7;
  bool families = false, enumerate_flag = false, trees_flag = false;
  verify_cmd->add_option("--max-n", max_n, "enumeration sweep order cap")->capture_default_str();
  verify_cmd->add_option("--trees", trees_n, "tree census order cap")->capture_default_str();
  verify_cmd->add_flag("--families", families, "closed-form family tables only");
  verify_cmd->add_flag("--enumerate", enumerate_flag, "enumeration sweeps only");
  verify_cmd->add_flag("--trees-only", trees_flag, "tree census only");

  CLI11_PARSE(app, argc, argv);
  auto budget = budget_of(budget_s);
  auto start = Clock::now();

  if (gamma_cmd->parsed()) {
    auto [g, input] = gamma_in.load();
    json result;
    GammaResult res;
    if (oracle) {
      Alphabet alpha;
      if (alphabet == "023")
        alpha = Alphabet::zero_two_three;
      else if (alphabet == "0123")
        alpha = Alphabet::zero_one_two_three;
      else
        throw InputError("--alphabet must be 023 or 0123");
      res = gamma_bruteforce(g, alpha);
      result["alphabet"] = alphabet;
    } else if (budget) {
      auto out = gamma_exact_budgeted(g, *budget);
      if (!out) throw GuardError("gamma budget exceeded");
      res = *out;
    } else {
      res = gamma_exact(g);
    }
    result["gamma"] = res.value;
    result["witness"] = labeling_to_string(res.witness);
    result["method"] = method_name(res.method);
    result["nodes_explored"] = res.nodes_explored;
    emit(run_report("gamma", input, result, ms_since(start)), json_path,
         "gamma_dR = " + std::to_string(res.value) + " (" + method_name(res.method) + ")");
    return 0;
  }

  if (bondage_cmd->parsed()) {
    auto [g, input] = bondage_in.load();
    BondageOptions opt;
    opt.threads = threads;
    opt.budget = budget;
    if (max_size > 0) opt.max_subset_size = max_size;
    auto res = bondage_exact_budgeted(g, opt);
    if (!res) throw GuardError("bondage budget exceeded");
    json result;
    result["bondage"] = res->value;
    result["base_gamma"] = res->base_gamma;
    result["witness"] = edges_json(res->witness);
    result["subsets_tested"] = res->subsets_tested;
    result["bounds"] = bound_report_json(bound_catalog(g));
    json report = run_report("bondage", input, result, ms_since(start));
    emit(report, json_path, "b_dR = " + std::to_string(res->value));
    if (!cert_path.empty()) {
      json cert;
      cert["graph"] = to_graph6(g);
      cert["removed_edges"] = edges_json(res->witness);
      cert["gamma_before"] = res->base_gamma;
      cert["gamma_after"] = gamma_exact(remove_edges(g, res->witness)).value;
      std::ofstream out(cert_path);
      if (!out) throw InputError("cannot write file: " + cert_path);
      out << cert.dump(2) << '\n';
    }
    return 0;
  }

  if (bounds_cmd->parsed()) {
    auto [g, input] = bounds_in.load();
    BoundReport rep = bound_catalog(g);
    json result;
    result["bounds"] = bound_report_json(rep);
    if (auto best = rep.best()) result["best"] = *best;
    std::ostringstream table;
    for (const auto& e : rep.entries) {
      table << "  " << e.name;
      for (std::size_t pad = e.name.size(); pad < 28; ++pad) table << ' ';
      if (e.applicable)
        table << *e.value << (e.certificate ? "  (certificate size " +
                                                  std::to_string(e.certificate->size()) + ")"
                                            : "");
      else
        table << "-";
      table << '\n';
    }
    if (auto best = rep.best()) table << "  best applicable bound: " << *best;
    emit(run_report("bounds", input, result, ms_since(start)), json_path, table.str());
    return 0;
  }

  if (reduce_cmd->parsed()) {
    CnfFormula f = parse_dimacs_cnf(slurp(cnf_path));
    ReductionGraph r = build_reduction(f);
    json input;
    input["cnf_file"] = cnf_path;
    input["num_vars"] = f.num_vars;
    input["num_clauses"] = f.clauses.size();
    json result;
    result["graph"] = graph_summary(r.graph);
    if (emit_g6) result["graph6"] = to_graph6(r.graph);
    json roles;
    for (int v = 0; v < r.graph.n; ++v) roles[r.role_name(v)] = v;
    result["roles"] = std::move(roles);
    int rc = 0;
    if (verify) {
      ReductionCheckOptions opt;
      opt.threads = threads;
      opt.budget = budget;
      ReductionReport rep = verify_reduction(f, opt);
      result["verify"] = reduction_report_json(rep);
      bool ok = rep.counts_match && rep.bipartite && rep.deletion_certificates_ok;
      if (rep.exact_verified)
        ok = ok && rep.lower_bound_holds.value_or(false) &&
             rep.tight_iff_satisfiable.value_or(false);
      if (!ok) rc = 1;
    }
    emit(run_report("reduce", input, result, ms_since(start)), json_path,
         "reduction graph: " + std::to_string(r.graph.n) + " vertices, " +
             std::to_string(r.graph.edge_count()) + " edges");
    return rc;
  }

  // verify-paper
  bool all = !families && !enumerate_flag && !trees_flag;
  json chks = json::array();
  if (families || all) {
    chks.push_back(checks::gamma_family_tables());
    chks.push_back(checks::bondage_family_tables(threads));
    chks.push_back(checks::multipartite_values(threads));
    chks.push_back(checks::multipartite_otherwise_audit(threads));
    chks.push_back(checks::planar_family_audit(threads));
  }
  if (enumerate_flag || all) {
    chks.push_back(checks::graph6_roundtrip(std::min(max_n + 1, 7), threads));
    chks.push_back(checks::normalization_properties(max_n, threads));
    chks.push_back(checks::noones_equivalence(std::min(max_n, 6), threads));
    chks.push_back(checks::classifier_agreement(std::min(max_n, 6), threads));
    chks.push_back(checks::bound_audit(std::min(max_n, 6), std::min(max_n, 5), threads));
    chks.push_back(checks::deletion_monotonicity(std::min(max_n, 6), threads));
    chks.push_back(checks::dominating_vertex_rule(std::min(max_n, 6), threads));
  }
  if (trees_flag || all) {
    chks.push_back(checks::tree_census(std::min(trees_n, 9), threads));
  }
  if (all) {
    chks.push_back(checks::reduction_satisfiable(threads));
    chks.push_back(checks::reduction_certificates(threads));
  }
  bool pass = true;
  for (const auto& c : chks) {
    pass = pass && c.at("pass").get<bool>();
    std::cerr << (c.at("pass").get<bool>() ? "[pass] " : "[FAIL] ")
              << c.at("name").get<std::string>() << '\n';
  }
  json result;
  result["checks"] = std::move(chks);
  result["pass"] = pass;
  emit(run_report("verify-paper", json::object(), result, ms_since(start)), json_path,
       pass ? "all checks passed" : "CHECK FAILURES");
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const GuardError& e) {
    std::cerr << "resource guard: " << e.what() << '\n';
    return 3;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.get_name() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
