#include "connfn/cli.hpp"

#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "connfn/json_io.hpp"

namespace connfn {

namespace {

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return json::parse(in);
}

mask_t parse_set_spec(const std::string& spec, const GroundSet& ground) {
  if (spec.empty() || spec == "{}") return 0;
  if (spec.rfind("0x", 0) == 0 || spec.rfind("0X", 0) == 0 ||
      spec.rfind("0b", 0) == 0 || spec.rfind("0B", 0) == 0) {
    return subset_from_json(json(spec), ground);
  }
  json arr = json::array();
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) arr.push_back(item);
  return subset_from_json(arr, ground);
}

ValidationReport validate_table(const SetFunctionTable& t) {
  // The two validators agree (tested); the local one keeps big tables fast.
  return t.ground.size <= 13 ? validate_connectivity(t)
                             : validate_connectivity_local(t);
}

json report_to_json(const ValidationReport& rep, const GroundSet& ground) {
  json j;
  j["valid"] = rep.valid();
  json violations = json::array();
  for (const AxiomViolation& v : rep.violations) {
    json entry;
    entry["axiom"] = axiom_name(v.axiom);
    entry["set"] = subset_to_json(v.x, ground);
    entry["other_set"] = subset_to_json(v.y, ground);
    entry["lhs"] = v.lhs;
    entry["rhs"] = v.rhs;
    violations.push_back(std::move(entry));
  }
  j["violations"] = std::move(violations);
  return j;
}

std::vector<tword_t> parse_words(const std::string& spec, int n) {
  std::vector<tword_t> words;
  if (spec.empty()) return words;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) words.push_back(word_from_string(item, n));
  return words;
}

json independent_set_to_json(const IndependentSet& I) {
  json arr = json::array();
  for (tword_t w : I.words) arr.push_back(word_to_string(w, I.n));
  return arr;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"connectivity-function toolkit"};
  app.require_subcommand(1);

  std::string table_path, graph_path, queries_path, set_spec, independent_spec;
  bool full = false, skip_validate = false;
  int spike_n = 0, path_m = 0, adversary_m = 0, random_queries = 0;
  unsigned long long seed = 1;

  auto* validate_cmd = app.add_subcommand("validate", "check the connectivity axioms");
  validate_cmd->add_option("--table", table_path, "set-function table JSON")->required();

  auto* conn_cmd = app.add_subcommand("graph-conn", "connectivity values of a graph");
  conn_cmd->add_option("--graph", graph_path, "graph JSON")->required();
  auto* set_opt = conn_cmd->add_option("--set", set_spec, "edge subset (labels or 0x/0b mask)");
  conn_cmd->add_flag("--full", full, "emit the full 2^n table");

  auto* rec_cmd = app.add_subcommand("recognize-graphic",
                                     "decide whether a table is graphic");
  rec_cmd->add_option("--table", table_path, "set-function table JSON")->required();
  rec_cmd->add_flag("--skip-validate", skip_validate,
                    "trust the connectivity-function promise");

  auto* adj_cmd = app.add_subcommand("adjacency", "derived edge adjacencies");
  adj_cmd->add_option("--table", table_path, "set-function table JSON")->required();

  auto* spike_cmd = app.add_subcommand("spike", "spike matroid calculators");
  spike_cmd->require_subcommand(1);
  auto* spike_rank_cmd = spike_cmd->add_subcommand("rank", "rank of a subset");
  auto* spike_mu_cmd = spike_cmd->add_subcommand("mu", "connectivity of a subset");
  auto* spike_circ_cmd = spike_cmd->add_subcommand("circuits", "list all circuits");
  for (auto* sub : {spike_rank_cmd, spike_mu_cmd, spike_circ_cmd}) {
    sub->add_option("--n", spike_n, "number of legs (>= 3)")->required();
    sub->add_option("--independent", independent_spec,
                    "independent transversal words, comma separated");
  }
  spike_rank_cmd->add_option("--set", set_spec, "subset of E_n")->required();
  spike_mu_cmd->add_option("--set", set_spec, "subset of E_n")->required();

  auto* spiky_cmd = app.add_subcommand("spiky-decide",
                                       "matroidality of a spiky function");
  spiky_cmd->add_option("--table", table_path, "spiky table JSON")->required();

  auto* path_cmd = app.add_subcommand("buffered-path", "build a buffered path");
  path_cmd->add_option("--m", path_m, "half dimension (>= 1)")->required();

  auto* adv_cmd = app.add_subcommand("adversary", "query-complexity adversaries");
  adv_cmd->require_subcommand(1);
  auto* adv_mat = adv_cmd->add_subcommand("matroidal", "fool a matroidality recognizer");
  auto* adv_non = adv_cmd->add_subcommand("nonmatroidal",
                                          "fool a non-matroidality recognizer");
  for (auto* sub : {adv_mat, adv_non}) {
    sub->add_option("--m", adversary_m, "half dimension (>= 1)")->required();
    sub->add_option("--queries", queries_path, "queries JSON file");
    sub->add_option("--random-queries", random_queries,
                    "sample this many random query subsets instead");
    sub->add_option("--seed", seed, "seed for random query sampling");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << e.what() << "\n";
    return 1;
  }

  try {
    json result;

    if (validate_cmd->parsed()) {
      SetFunctionTable t = table_from_json(load_json(table_path));
      result = report_to_json(validate_table(t), t.ground);
    } else if (conn_cmd->parsed()) {
      Multigraph g = graph_from_json(load_json(graph_path));
      if (full) {
        result = table_to_json(g.gamma_table());
      } else if (set_opt->count() > 0) {
        mask_t x = parse_set_spec(set_spec, g.ground);
        result["set"] = subset_to_json(x, g.ground);
        result["gamma"] = g.gamma(x);
      } else {
        throw std::invalid_argument("graph-conn needs --set or --full");
      }
    } else if (rec_cmd->parsed()) {
      SetFunctionTable t = table_from_json(load_json(table_path));
      if (!skip_validate) {
        ValidationReport rep = validate_table(t);
        if (!rep.valid()) {
          err << "table is not a connectivity function (axiom: "
              << axiom_name(rep.violations.front().axiom)
              << "); re-run with --skip-validate to force\n";
          return 1;
        }
      }
      CountedOracle oracle(std::move(t));
      result = verdict_to_json(recognize_graphic(oracle));
    } else if (adj_cmd->parsed()) {
      SetFunctionTable t = table_from_json(load_json(table_path));
      GroundSet ground = t.ground;
      CountedOracle oracle(std::move(t));
      AdjacencyStructure a = build_adjacency_structure(oracle);
      result["n"] = ground.size;
      if (!ground.labels.empty()) result["labels"] = ground.labels;
      json singles = json::array();
      for (int e = 0; e < ground.size; ++e) {
        json entry;
        entry["element"] = ground.label(e);
        entry["value"] = a.singleton_value[e];
        singles.push_back(std::move(entry));
      }
      result["singletons"] = std::move(singles);
      json pairs = json::array();
      for (int e = 0; e < ground.size; ++e) {
        for (int f = e + 1; f < ground.size; ++f) {
          if (a.adjacent(e, f)) {
            pairs.push_back(json::array({ground.label(e), ground.label(f)}));
          }
        }
      }
      result["adjacent_pairs"] = std::move(pairs);
      json comps = json::array();
      for (mask_t c : split_components(a)) comps.push_back(subset_to_json(c, ground));
      result["components"] = std::move(comps);
      result["queries"] = oracle.distinct_count();
    } else if (spike_cmd->parsed()) {
      SpikeGround sg = make_spike_ground(spike_n);
      IndependentSet I = make_independent_set(spike_n, parse_words(independent_spec, spike_n));
      if (spike_circ_cmd->parsed()) {
        CircuitFamily fam = spike_circuits(I);
        result["n"] = spike_n;
        result["count"] = fam.circuits.size();
        json circuits = json::array();
        for (mask_t c : fam.circuits) circuits.push_back(subset_to_json(c, sg.ground));
        result["circuits"] = std::move(circuits);
      } else {
        mask_t x = parse_set_spec(set_spec, sg.ground);
        result["n"] = spike_n;
        result["set"] = subset_to_json(x, sg.ground);
        if (spike_rank_cmd->parsed()) {
          result["rank"] = spike_rank(I, x);
        } else {
          result["mu"] = spike_mu(I, x);
        }
      }
    } else if (spiky_cmd->parsed()) {
      SpikyTable t = spiky_from_json(load_json(table_path));
      if (!is_spiky(t)) {
        err << "table is not spiky (symmetry, range or adjacency clause)\n";
        return 1;
      }
      MatroidalVerdict v = decide_matroidal(t);
      result["n"] = t.n;
      result["matroidal"] = v.matroidal;
      if (v.witness_independent) {
        result["independent_set"] = independent_set_to_json(*v.witness_independent);
      }
      if (v.witness_transversal) {
        result["witness_transversal"] = word_to_string(*v.witness_transversal, t.n);
      }
    } else if (path_cmd->parsed()) {
      result = buffered_path_to_json(build_buffered_path(path_m));
    } else if (adv_cmd->parsed()) {
      const int n = 2 * adversary_m;
      std::vector<mask_t> queries;
      if (random_queries > 0) {
        std::mt19937_64 rng(seed);
        const mask_t full_mask = (mask_t{1} << (2 * n)) - 1;
        for (int i = 0; i < random_queries; ++i) {
          if (rng() % 2 == 0) {
            queries.push_back(mask_from_word(
                static_cast<tword_t>(rng() & ((tword_t{1} << n) - 1)), n));
          } else {
            queries.push_back(rng() & full_mask);
          }
        }
      } else if (!queries_path.empty()) {
        json qj = load_json(queries_path);
        GroundSet ground(2 * n);
        if (qj.contains("labels")) {
          std::vector<std::string> labels;
          for (const auto& l : qj.at("labels")) labels.push_back(l.get<std::string>());
          ground = GroundSet(2 * n, std::move(labels));
        } else {
          std::vector<std::string> labels;
          for (int i = 1; i <= n; ++i) {
            labels.push_back("x" + std::to_string(i));
            labels.push_back("y" + std::to_string(i));
          }
          ground = GroundSet(2 * n, std::move(labels));
        }
        for (const auto& q : qj.at("queries")) {
          queries.push_back(subset_from_json(q, ground));
        }
      }
      AdversaryTranscript tr = adv_mat->parsed()
                                   ? adversary_matroidal(adversary_m, queries)
                                   : adversary_nonmatroidal(adversary_m, queries);
      result = transcript_to_json(tr);
    }

    out << result.dump(2) << "\n";
    return 0;
  } catch (const capacity_error& e) {
    err << "capacity exceeded: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace connfn
