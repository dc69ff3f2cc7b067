// Command-line front end.
//
// Subcommands: solve, apportion, axioms, gen, transform. Reports are JSON
// on stdout; diagnostics go to stderr. Exit codes: 0 success (a property
// holds, a committee was found), 1 infeasible or property violated, 2 usage
// or input errors, including exhausted search budgets.
#pragma once

#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mapr/axioms.hpp"
#include "mapr/buckets.hpp"
#include "mapr/generators.hpp"
#include "mapr/io.hpp"
#include "mapr/local_search.hpp"
#include "mapr/solvers.hpp"
#include "mapr/transform.hpp"

namespace mapr::cli {

namespace detail {

inline const std::map<std::string, LossKind>& loss_names() {
  static const std::map<std::string, LossKind> names = {
      {"l1", LossKind::L1}, {"l1max", LossKind::L1Max}, {"lmax", LossKind::LMax}};
  return names;
}

inline const std::map<std::string, QuotaKind>& quota_names() {
  static const std::map<std::string, QuotaKind> names = {
      {"hare", QuotaKind::Hare},
      {"droop", QuotaKind::Droop},
      {"hb", QuotaKind::HagenbachBischoff},
      {"imperiali", QuotaKind::Imperiali}};
  return names;
}

inline std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(current);
  return parts;
}

inline int parse_int(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    int value = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw DomainError("expected an integer for " + what + ", got '" + text + "'");
  }
}

struct SolveArgs {
  std::string file;
  std::string loss = "l1";
  std::string algo;
  int radius = 1;
  std::uint64_t seed = 0;
  bool all = false;
};

struct AxiomArgs {
  std::string file;
  std::string check;
  std::string loss = "l1";
  std::string reduced_file;
  std::string attribute;
  std::string value;
  int k2 = 0;
  bool fractions = false;
};

struct GenArgs {
  std::string kind;
  int universe = 0;
  std::string sets;
  int vertices = 0;
  std::string edges;
  std::string domains;
  int m = 0;
  int k = 0;
  std::uint64_t seed = 0;
  bool ensure_fs = false;
  bool natural = false;
  bool plant_perfect = false;
};

inline int run_solve(const SolveArgs& args, std::ostream& out) {
  Instance inst = load_instance(args.file);
  LossKind kind = loss_names().at(args.loss);
  SolveReport report;
  std::optional<LossKind> reported_kind = kind;

  if (args.algo == "brute") {
    report = brute_force(inst, kind, args.all);
  } else if (args.algo == "fs") {
    report = solve_full_supply(inst, kind);
  } else if (args.algo == "local") {
    LocalSearchOptions options;
    options.radius = args.radius;
    options.seed = args.seed;
    report = local_search(inst, kind, options);
  } else if (args.algo == "buckets") {
    report = solve_buckets_optimal(inst, kind);
  } else {
    report = perfect_committee(inst);
    reported_kind.reset();
  }

  out << solve_report_json(inst, reported_kind, report).dump(2) << "\n";
  return report.feasible ? 0 : 1;
}

inline int run_axioms(const AxiomArgs& args, std::ostream& out) {
  Instance inst = load_instance(args.file);
  LossKind kind = loss_names().at(args.loss);

  Json root = Json::object();
  root["schema_version"] = 1;
  root["command"] = "axioms";
  root["check"] = args.check;
  root["loss_kind"] = to_string(kind);
  bool holds = true;

  if (args.check == "nonreversal" || args.check == "quota") {
    SolveReport optima = brute_force(inst, kind, true);
    if (optima.optima_truncated) throw ResourceError("optimum enumeration truncated");
    Json violations = Json::array();
    for (const Committee& c : optima.committees) {
      RepresentationVector rep = representation_vector(inst.db, c);
      if (args.check == "nonreversal") {
        for (const auto& v : check_non_reversal(inst.target, rep))
          violations.push_back(
              {{"committee", mapr::detail::committee_names(inst, c)},
               {"attribute", inst.db.schema.attributes[v.attribute].name},
               {"preferred", inst.db.schema.attributes[v.attribute].values[v.value_preferred]},
               {"overtaking",
                inst.db.schema.attributes[v.attribute].values[v.value_overtaking]}});
      } else {
        for (const auto& v : check_quota(inst.target, rep))
          violations.push_back({{"committee", mapr::detail::committee_names(inst, c)},
                                {"attribute", inst.db.schema.attributes[v.attribute].name},
                                {"value", inst.db.schema.attributes[v.attribute].values[v.value]},
                                {"seats", v.seats},
                                {"lower", v.lower.str()},
                                {"upper", v.upper.str()}});
      }
    }
    holds = violations.empty();
    root["optima_checked"] = optima.committees.size();
    root["holds"] = holds;
    root["violations"] = violations;
  } else if (args.check == "popmono") {
    if (args.reduced_file.empty() || args.attribute.empty() || args.value.empty())
      throw ParameterError("popmono needs --reduced, --attribute and --value");
    Instance reduced = load_instance(args.reduced_file);
    std::size_t attr = inst.db.schema.attribute_index(args.attribute);
    std::size_t value = inst.db.schema.value_index(attr, args.value);
    PopulationMonotonicityResult result =
        population_monotonicity_probe(inst, reduced.target, attr, value, kind);
    holds = result.holds;
    root["attribute"] = args.attribute;
    root["value"] = args.value;
    root["holds"] = holds;
    root["floor_share"] = to_string(result.floor_share);
    if (result.witness) {
      root["witness"] = mapr::detail::committee_names(inst, *result.witness);
      root["witness_share"] = to_string(result.witness_share);
    } else {
      root["witness"] = nullptr;
    }
  } else if (args.check == "housemono") {
    if (args.k2 == 0) throw ParameterError("housemono needs --k2");
    HouseMonotonicityResult result =
        house_monotonicity_probe(inst, args.k2, kind, args.fractions);
    holds = result.holds;
    root["k"] = result.k_small;
    root["k2"] = result.k_large;
    root["fractions"] = args.fractions;
    root["holds"] = holds;
    root["witness"] =
        result.witness ? mapr::detail::committee_names(inst, *result.witness) : Json(nullptr);
  } else {
    throw ParameterError("unknown check '" + args.check + "'");
  }

  out << root.dump(2) << "\n";
  return holds ? 0 : 1;
}

inline int run_gen(const GenArgs& args, std::ostream& out) {
  Instance inst;
  if (args.kind == "x3c") {
    std::vector<std::array<int, 3>> sets;
    for (const std::string& part : split(args.sets, ';')) {
      std::vector<std::string> elems = split(part, ',');
      if (elems.size() != 3) throw DomainError("each set needs exactly 3 elements: '" + part + "'");
      sets.push_back({parse_int(elems[0], "a set element"), parse_int(elems[1], "a set element"),
                      parse_int(elems[2], "a set element")});
    }
    inst = from_x3c(args.universe, sets);
  } else if (args.kind == "perfectcode") {
    std::vector<std::pair<int, int>> edges;
    if (!args.edges.empty())
      for (const std::string& part : split(args.edges, ',')) {
        std::vector<std::string> ends = split(part, '-');
        if (ends.size() != 2) throw DomainError("each edge must be 'u-v': '" + part + "'");
        edges.emplace_back(parse_int(ends[0], "an edge endpoint"),
                           parse_int(ends[1], "an edge endpoint"));
      }
    inst = from_perfect_code(args.vertices, edges, args.k);
  } else if (args.kind == "random") {
    std::vector<int> domains;
    for (const std::string& part : split(args.domains, ','))
      domains.push_back(parse_int(part, "a domain size"));
    RandomOptions options;
    options.ensure_fs = args.ensure_fs;
    options.natural_targets = args.natural;
    options.plant_perfect = args.plant_perfect;
    inst = random_instance(domains, args.m, args.k, args.seed, options);
  } else if (args.kind.rfind("paper:", 0) == 0) {
    inst = catalog_instance(args.kind.substr(6));
  } else {
    throw ParameterError("unknown generator '" + args.kind + "'");
  }
  out << serialize_instance(inst);
  return 0;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  CLI::App app{"Committee selection under per-attribute target distributions"};
  app.require_subcommand(1);

  detail::SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand("solve", "Find a committee for an instance file");
  solve->add_option("file", solve_args.file, "instance file")->required();
  solve->add_option("--loss", solve_args.loss, "loss measure")
      ->check(CLI::IsMember({"l1", "l1max", "lmax"}));
  solve->add_option("--algo", solve_args.algo, "solver")
      ->required()
      ->check(CLI::IsMember({"brute", "fs", "local", "buckets", "perfect"}));
  solve->add_option("--l", solve_args.radius, "local search swap radius");
  solve->add_option("--seed", solve_args.seed, "seed for the local search start");
  solve->add_flag("--all", solve_args.all, "list every optimal committee (brute only)");

  std::string ap_weights, ap_quota = "hare";
  int ap_k = 0;
  CLI::App* apportion = app.add_subcommand("apportion", "Largest-remainder seat apportionment");
  apportion->add_option("--weights", ap_weights, "comma-separated vote weights")->required();
  apportion->add_option("--k", ap_k, "house size")->required();
  apportion->add_option("--quota", ap_quota, "quota kind")
      ->check(CLI::IsMember({"hare", "droop", "hb", "imperiali"}));

  detail::AxiomArgs axiom_args;
  CLI::App* axioms = app.add_subcommand("axioms", "Check fairness properties of the optima");
  axioms->add_option("file", axiom_args.file, "instance file")->required();
  axioms->add_option("--check", axiom_args.check, "property")
      ->required()
      ->check(CLI::IsMember({"nonreversal", "quota", "popmono", "housemono"}));
  axioms->add_option("--loss", axiom_args.loss, "loss measure")
      ->check(CLI::IsMember({"l1", "l1max", "lmax"}));
  axioms->add_option("--reduced", axiom_args.reduced_file,
                     "instance file carrying the reduced target (popmono)");
  axioms->add_option("--attribute", axiom_args.attribute, "probed attribute (popmono)");
  axioms->add_option("--value", axiom_args.value, "probed value label (popmono)");
  axioms->add_option("--k2", axiom_args.k2, "larger house size (housemono)");
  axioms->add_flag("--fractions", axiom_args.fractions,
                   "compare shares instead of seat counts (housemono)");

  detail::GenArgs gen_args;
  CLI::App* gen = app.add_subcommand("gen", "Generate an instance file");
  gen->add_option("kind", gen_args.kind, "x3c | perfectcode | random | paper:<name>")->required();
  gen->add_option("--universe", gen_args.universe, "universe size (x3c)");
  gen->add_option("--sets", gen_args.sets, "semicolon-separated 3-sets, e.g. 1,2,3;4,5,6 (x3c)");
  gen->add_option("--vertices", gen_args.vertices, "vertex count (perfectcode)");
  gen->add_option("--edges", gen_args.edges, "comma-separated edges u-v (perfectcode)");
  gen->add_option("--domains", gen_args.domains, "comma-separated domain sizes (random)");
  gen->add_option("--m", gen_args.m, "database size (random)");
  gen->add_option("--k", gen_args.k, "committee size (random, perfectcode)");
  gen->add_option("--seed", gen_args.seed, "random seed");
  gen->add_flag("--ensure-fs", gen_args.ensure_fs, "guarantee full supply (random)");
  gen->add_flag("--natural", gen_args.natural, "draw a natural target (random)");
  gen->add_flag("--plant-perfect", gen_args.plant_perfect,
                "read the target off a hidden committee (random)");

  std::string transform_file;
  CLI::App* transform_cmd =
      app.add_subcommand("transform", "Rewrite an instance over binary indicator attributes");
  transform_cmd->add_option("file", transform_file, "instance file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*solve) return detail::run_solve(solve_args, out);
    if (*apportion) {
      std::vector<Rat> weights;
      for (const std::string& part : detail::split(ap_weights, ','))
        weights.push_back(rat_from_string(part));
      ApportionmentResult result =
          largest_remainder(weights, ap_k, detail::quota_names().at(ap_quota));
      out << apportion_report_json(weights, ap_k, detail::quota_names().at(ap_quota), result)
                 .dump(2)
          << "\n";
      return 0;
    }
    if (*axioms) return detail::run_axioms(axiom_args, out);
    if (*gen) return detail::run_gen(gen_args, out);
    if (*transform_cmd) {
      Instance inst = load_instance(transform_file);
      out << serialize_instance(to_binary(inst).instance);
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace mapr::cli
