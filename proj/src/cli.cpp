#include "tourlab/cli.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "text.hpp"
#include "tourlab/bench.hpp"
#include "tourlab/errors.hpp"
#include "tourlab/oracle.hpp"
#include "tourlab/report.hpp"
#include "tourlab/tsplib_io.hpp"

namespace tourlab {

namespace {

struct Options {
  std::string instance;
  std::string metric = "euclidean";
  std::string algorithm = "ga";
  std::string variant = "baseline";
  std::size_t population = 200;
  std::size_t generations = 30;
  std::optional<std::size_t> stall;
  double mutation_rate = 0.0;
  bool elitism = false;
  std::string selection = "shifted-roulette";
  std::size_t restarts = 0;
  std::size_t max_steps = HcConfig::kDefaultMaxSteps;
  std::string allowance = "replenishing";
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  std::size_t parallelism = 1;
  std::string out;
  std::string format = "csv";
  bool no_timing = false;
  std::string method = "held-karp";

  // compare overrides
  std::string variant_a = "baseline";
  std::string variant_b = "modified";
  std::optional<std::size_t> population_a, population_b, restarts_a, restarts_b;
};

double parse_weight(const std::string& text) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ConfigError("bad metric weight '" + text + "'");
  }
  return value;
}

bool is_modified(const std::string& variant) {
  if (variant == "baseline") return false;
  if (variant == "modified") return true;
  throw ConfigError("variant must be 'baseline' or 'modified', got '" + variant + "'");
}

SolverConfig make_solver(const Options& o, const std::string& variant,
                         std::optional<std::size_t> population,
                         std::optional<std::size_t> restarts) {
  const bool modified = is_modified(variant);
  if (o.algorithm == "ga") {
    GaConfig ga;
    ga.population_size = population.value_or(o.population);
    ga.max_generations = o.generations;
    ga.max_stall_generations = o.stall;
    ga.mutation_rate = o.mutation_rate;
    ga.elitism = o.elitism;
    if (o.selection == "shifted-roulette") {
      ga.selection = SelectionScheme::ShiftedRoulette;
    } else if (o.selection == "length-proportional") {
      ga.selection = SelectionScheme::LengthProportional;
    } else {
      throw ConfigError("selection must be 'shifted-roulette' or 'length-proportional'");
    }
    ga.crossover_variant =
        modified ? CrossoverVariant::ReversalInvariant : CrossoverVariant::Baseline;
    ga.seed = o.seed;
    return ga;
  }
  if (o.algorithm == "hc") {
    HcConfig hc;
    hc.restarts = restarts.value_or(o.restarts);
    hc.variant = modified ? HcVariant::Modified : HcVariant::Baseline;
    hc.max_steps_per_run = o.max_steps;
    if (o.allowance == "replenishing") {
      hc.allowance = DownhillAllowance::Replenishing;
    } else if (o.allowance == "once") {
      hc.allowance = DownhillAllowance::OncePerRun;
    } else {
      throw ConfigError("allowance must be 'replenishing' or 'once'");
    }
    hc.seed = o.seed;
    return hc;
  }
  throw ConfigError("algorithm must be 'ga' or 'hc', got '" + o.algorithm + "'");
}

void add_instance_options(CLI::App& cmd, Options& o) {
  cmd.add_option("--instance", o.instance, "TSPLIB or coordinate-list file ('-' for stdin)")
      ->required();
  cmd.add_option("--metric", o.metric,
                 "euclidean | manhattan | wmanhattan:wx,wy | wchebyshev:wx,wy");
  cmd.add_option("--format", o.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  cmd.add_option("--out", o.out, "write output to this file instead of stdout");
}

void add_solver_options(CLI::App& cmd, Options& o) {
  cmd.add_option("--algorithm", o.algorithm, "ga | hc");
  cmd.add_option("--variant", o.variant, "baseline | modified");
  cmd.add_option("--population", o.population, "GA population size");
  cmd.add_option("--generations", o.generations, "GA maximum generations");
  cmd.add_option("--stall", o.stall, "GA generations without improvement before stopping");
  cmd.add_option("--mutation-rate", o.mutation_rate, "GA mutation probability");
  cmd.add_flag("--elitism", o.elitism, "GA: keep the incumbent best");
  cmd.add_option("--selection", o.selection,
                 "GA parent selection: shifted-roulette | length-proportional");
  cmd.add_option("--restarts", o.restarts, "HC restarts beyond the first run");
  cmd.add_option("--max-steps", o.max_steps, "HC step cap per run");
  cmd.add_option("--allowance", o.allowance, "HC downhill allowance: replenishing | once");
  cmd.add_option("--seed", o.seed, "seed (experiment seed for bench/compare)");
}

void add_experiment_options(CLI::App& cmd, Options& o) {
  cmd.add_option("--trials", o.trials, "number of trials");
  cmd.add_option("--parallelism", o.parallelism, "worker threads");
  cmd.add_flag("--no-timing", o.no_timing, "write timings as 0 for byte-identical output");
}

void emit_solve(std::ostream& out, const Options& o, const Instance& instance,
                const SolverConfig& solver, const RunResult& r) {
  if (o.format == "json") {
    nlohmann::ordered_json doc{{"instance", instance.name()},
                               {"solver", describe(solver)},
                               {"seed", o.seed},
                               {"tour_length", r.best_length},
                               {"tour", std::vector<City>(r.best_tour.begin(), r.best_tour.end())},
                               {"iterations", r.iterations},
                               {"fitness_evaluations", r.fitness_evaluations},
                               {"runs", r.runs},
                               {"early_outs", r.early_outs},
                               {"wall_time_ms", o.no_timing ? 0.0 : r.wall_time_ms}};
    out << doc.dump(2) << '\n';
    return;
  }
  out << "instance," << instance.name() << '\n';
  out << "solver," << describe(solver) << '\n';
  out << "tour_length," << format_real(r.best_length) << '\n';
  out << "tour,";
  for (std::size_t i = 0; i < r.best_tour.size(); ++i) out << (i ? " " : "") << r.best_tour[i];
  out << '\n';
  out << "iterations," << r.iterations << '\n';
  out << "fitness_evaluations," << r.fitness_evaluations << '\n';
  out << "runs," << r.runs << '\n';
  out << "early_outs," << r.early_outs << '\n';
  out << "wall_time_ms," << format_real(o.no_timing ? 0.0 : r.wall_time_ms) << '\n';
}

void emit_oracle(std::ostream& out, const Options& o, const Instance& instance,
                 const ExactResult& r) {
  if (o.format == "json") {
    nlohmann::ordered_json doc{
        {"instance", instance.name()},
        {"method", o.method},
        {"optimal_length", r.optimal_length},
        {"optimal_tour", std::vector<City>(r.optimal_tour.begin(), r.optimal_tour.end())},
        {"nodes_expanded", r.nodes_expanded}};
    out << doc.dump(2) << '\n';
    return;
  }
  out << "instance," << instance.name() << '\n';
  out << "method," << o.method << '\n';
  out << "optimal_length," << format_real(r.optimal_length) << '\n';
  out << "optimal_tour,";
  for (std::size_t i = 0; i < r.optimal_tour.size(); ++i) {
    out << (i ? " " : "") << r.optimal_tour[i];
  }
  out << '\n';
  out << "nodes_expanded," << r.nodes_expanded << '\n';
}

int with_output(const Options& o, std::ostream& out, const std::function<void(std::ostream&)>& body) {
  if (o.out.empty()) {
    body(out);
    return kExitOk;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw ConfigError("cannot write " + o.out);
  body(file);
  return kExitOk;
}

}  // namespace

Metric parse_metric(const std::string& spec) {
  if (spec == "euclidean") return Metric::euclidean();
  if (spec == "manhattan") return Metric::manhattan();
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  if (colon != std::string::npos && (kind == "wmanhattan" || kind == "wchebyshev")) {
    const std::string weights = spec.substr(colon + 1);
    const auto comma = weights.find(',');
    if (comma == std::string::npos) throw ConfigError("metric '" + spec + "' needs wx,wy");
    const double wx = parse_weight(weights.substr(0, comma));
    const double wy = parse_weight(weights.substr(comma + 1));
    try {
      return kind == "wmanhattan" ? Metric::weighted_manhattan(wx, wy)
                                  : Metric::weighted_chebyshev(wx, wy);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }
  throw ConfigError("unknown metric '" + spec + "'");
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"TSP metaheuristics: genetic algorithm and hill climbing with benchmarks",
               "tourlab"};
  app.require_subcommand(1);
  Options o;

  auto* solve = app.add_subcommand("solve", "run one solver once and print the tour");
  add_instance_options(*solve, o);
  add_solver_options(*solve, o);
  solve->add_flag("--no-timing", o.no_timing, "write timings as 0");

  auto* bench = app.add_subcommand("bench", "run one solver over many trials");
  add_instance_options(*bench, o);
  add_solver_options(*bench, o);
  add_experiment_options(*bench, o);

  auto* cmp = app.add_subcommand("compare", "run two solver arms over many trials");
  add_instance_options(*cmp, o);
  add_solver_options(*cmp, o);
  add_experiment_options(*cmp, o);
  cmp->add_option("--variant-a", o.variant_a, "variant of arm a (default baseline)");
  cmp->add_option("--variant-b", o.variant_b, "variant of arm b (default modified)");
  cmp->add_option("--population-a", o.population_a, "GA population of arm a");
  cmp->add_option("--population-b", o.population_b, "GA population of arm b");
  cmp->add_option("--restarts-a", o.restarts_a, "HC restarts of arm a");
  cmp->add_option("--restarts-b", o.restarts_b, "HC restarts of arm b");

  auto* oracle = app.add_subcommand("oracle", "solve a small instance exactly");
  add_instance_options(*oracle, o);
  oracle->add_option("--method", o.method, "held-karp | brute-force")
      ->check(CLI::IsMember({"held-karp", "brute-force"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfigError;
  }

  try {
    const Metric metric = parse_metric(o.metric);
    if (solve->parsed() || bench->parsed()) validate(make_solver(o, o.variant, {}, {}));
    if (cmp->parsed()) {
      validate(make_solver(o, o.variant_a, o.population_a, o.restarts_a));
      validate(make_solver(o, o.variant_b, o.population_b, o.restarts_b));
    }
    const Instance instance = load_instance(o.instance, metric);
    const ReportOptions report{!o.no_timing};

    if (solve->parsed()) {
      const SolverConfig solver = make_solver(o, o.variant, {}, {});
      const RunResult result = run_solver(instance, solver);
      return with_output(o, out, [&](std::ostream& s) { emit_solve(s, o, instance, solver, result); });
    }
    if (bench->parsed()) {
      const ExperimentStats stats = run_experiment(instance, make_solver(o, o.variant, {}, {}),
                                                   o.trials, o.seed, o.parallelism);
      return with_output(o, out, [&](std::ostream& s) {
        if (o.format == "json") {
          write_json(s, stats, report);
        } else {
          write_csv(s, stats, report);
        }
      });
    }
    if (cmp->parsed()) {
      const Comparison result =
          compare(instance, make_solver(o, o.variant_a, o.population_a, o.restarts_a),
                  make_solver(o, o.variant_b, o.population_b, o.restarts_b), o.trials, o.seed,
                  o.parallelism);
      return with_output(o, out, [&](std::ostream& s) {
        if (o.format == "json") {
          write_json(s, result, report);
        } else {
          write_csv(s, result, report);
        }
      });
    }
    const ExactResult exact =
        o.method == "brute-force" ? brute_force(instance) : held_karp(instance);
    return with_output(o, out, [&](std::ostream& s) { emit_oracle(s, o, instance, exact); });
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const SizeError& e) {
    err << "configuration error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitParseError;
  } catch (const RunAborted& e) {
    err << "run aborted: " << e.what() << " (best length " << format_real(e.best_length())
        << ")\n";
    return kExitRunAborted;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << '\n';
    return kExitParseError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"tourlab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace tourlab
