#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "hslin/approx.hpp"
#include "hslin/dictatorship.hpp"
#include "hslin/repcheck.hpp"
#include "report.hpp"

namespace {

using namespace hslin;
using cli::json;

constexpr int kDomainError = 1;
constexpr int kUsageError = 2;

struct Common {
  std::string report = "text";
  bool labels = false;
};

void add_report(CLI::App* cmd, Common& c) {
  cmd->add_option("--report", c.report, "Output format")->check(CLI::IsMember({"text", "json"}));
}

void print_labels(const FiniteGroup& g) {
  for (Element a = 0; a < g.order(); ++a) std::cout << a << ' ' << g.label(a) << '\n';
}

void emit(const Common& c, const json& j, const std::string& text) {
  if (c.report == "json")
    std::cout << j.dump(2) << '\n';
  else
    std::cout << text;
}

struct GroupArgs {
  std::string group;
  std::vector<Element> s;
};

void add_group_args(CLI::App* cmd, GroupArgs& a, bool with_s = true) {
  cmd->add_option("--group", a.group, "Group: Zn, Dn, Sn, Q8, products like Z4xZ4, or file:path")->required();
  if (with_s) cmd->add_option("--S", a.s, "Satisfying set as element IDs")->required()->delimiter(',');
}

int run_hs(const GroupArgs& a, const Common& c) {
  const FiniteGroup g = make_group(a.group);
  if (c.labels) print_labels(g);
  const HsResult hs = compute_HS(g, a.s);
  const QuotientGroup q = quotient(g, hs.subgroup);
  emit(c, cli::hs_json(g, a.s, hs, q), cli::hs_text(g, hs, q));
  return 0;
}

int run_solve(const std::string& path, const std::string& mode, std::uint64_t seed, const Common& c) {
  const Instance inst = read_instance_file(path);
  const SolveReport r = solve_pipeline(inst, seed, parse_mode(mode));
  emit(c, cli::solve_json(r), cli::solve_text(r));
  return 0;
}

int run_brute(const std::string& path, const Common& c) {
  const SolveReport r = brute_force(read_instance_file(path));
  emit(c, cli::solve_json(r), cli::solve_text(r));
  return 0;
}

int run_baseline(const std::string& path, std::uint64_t seed, bool derand, const Common& c) {
  const SolveReport r = baseline_random(read_instance_file(path), seed, derand);
  emit(c, cli::solve_json(r), cli::solve_text(r));
  return 0;
}

struct GenerateArgs {
  GroupArgs group;
  std::size_t k = 3, n = 10, m = 20;
  double noise = 0.0;
  std::uint64_t seed = 1;
  std::string out;
  bool planted = false;
};

int run_generate(const GenerateArgs& a, const Common& c) {
  auto g = std::make_shared<const FiniteGroup>(make_group(a.group.group));
  if (c.labels) print_labels(*g);
  const PlantedInstance p = generate_noisy(g, a.group.group, a.group.s, a.k, a.n, a.m, a.noise, a.seed);
  std::string text = serialize(p.instance);
  if (a.planted) {
    std::string line = "# planted";
    for (Element x : p.planted) line += ' ' + std::to_string(x);
    text = line + '\n' + text;
  }
  if (a.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(a.out);
    if (!f) throw Error(Errc::ParameterError, "cannot write '" + a.out + "'");
    f << text;
  }
  return 0;
}

struct SimulateArgs {
  GroupArgs group;
  std::size_t n = 1, samples = 10000, dictator = 0;
  std::string strategy = "dictator";
  std::uint64_t seed = 1;
  double noise = 0.0;
};

int run_simulate(const SimulateArgs& a, const Common& c) {
  TestConfig cfg;
  cfg.group = std::make_shared<const FiniteGroup>(make_group(a.group.group));
  if (c.labels) print_labels(*cfg.group);
  cfg.satisfying = a.group.s;
  cfg.n = a.n;
  cfg.samples = a.samples;
  cfg.seed = a.seed;
  cfg.noise = a.noise;
  const StrategyKind kind = parse_strategy(a.strategy);
  if (kind == StrategyKind::Table) throw Error(Errc::ParameterError, "table strategies are library-only");
  cfg.strategy = kind == StrategyKind::Dictator ? Strategy::make_dictator(a.dictator)
                 : kind == StrategyKind::QuotientLift ? Strategy::quotient_lift()
                                                       : Strategy::uniform_random();
  const TestEstimate e = run_test(cfg);
  // Always JSON; the text form is the same object on one line.
  const json j = cli::estimate_json(e, kind);
  std::cout << (c.report == "json" ? j.dump(2) : j.dump()) << '\n';
  return 0;
}

int run_check_reps(const GroupArgs& a, const Common& c) {
  const FiniteGroup g = make_group(a.group);
  if (c.labels) print_labels(g);
  const HsResult hs = compute_HS(g, a.s);
  json out;
  out["epsilon"] = cli::gap_json(check_epsilon_gap(g, a.s, hs));
  bool holds = out["epsilon"]["holds"];
  if (const auto* entry = find_catalog_entry(g.name())) {
    out["catalog"] = cli::validation_json(validate_catalog_entry(*entry, g));
    out["operator_norm"] = cli::gap_json(check_operator_norm_gap(*entry, g, a.s, hs));
    holds = holds && out["catalog"]["ok"].get<bool>() && out["operator_norm"]["holds"].get<bool>();
  }
  out["holds"] = holds;
  std::cout << (c.report == "json" ? out.dump(2) : out.dump()) << '\n';
  return 0;
}

struct BenchArgs {
  std::string corpus, out;
  std::vector<std::string> modes{"derand", "rand", "baseline"};
  std::uint64_t seed = 1;
};

int run_bench(const BenchArgs& a) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(a.corpus)) throw Error(Errc::ParameterError, "'" + a.corpus + "' is not a directory");
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(a.corpus))
    if (e.is_regular_file() && e.path().extension() == ".inst") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<SolveMode> modes;
  for (const auto& m : a.modes) modes.push_back(parse_mode(m));

  std::ofstream file;
  if (!a.out.empty()) {
    file.open(a.out);
    if (!file) throw Error(Errc::ParameterError, "cannot write '" + a.out + "'");
  }
  std::ostream& out = a.out.empty() ? std::cout : file;
  out << "instance,mode,value_num,value_den,guar_num,guar_den,time_ms,seed\n";
  for (const auto& path : files) {
    const Instance inst = read_instance_file(path.string());
    for (SolveMode mode : modes) {
      const auto start = std::chrono::steady_clock::now();
      const SolveReport r = solve_pipeline(inst, a.seed, mode);
      const double ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      out << path.filename().string() << ',' << mode_name(r.mode) << ',' << r.value.numerator() << ','
          << r.value.denominator() << ',' << r.guarantee.numerator() << ',' << r.guarantee.denominator() << ','
          << ms << ',' << a.seed << '\n';
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Approximation algorithms for linear equations over finite groups"};
  app.require_subcommand(1);
  Common common;

  GroupArgs hs_args;
  auto* hs = app.add_subcommand("hs", "Compute H_S, the quotient and the ratio |S|/|H_S|");
  add_group_args(hs, hs_args);
  add_report(hs, common);
  hs->add_flag("--labels", common.labels, "Print the element label map first");

  std::string instance, mode = "derand";
  std::uint64_t seed = 1;
  auto* solve = app.add_subcommand("solve", "Run the approximation pipeline on an instance file");
  solve->add_option("--instance", instance, "Instance file")->required();
  solve->add_option("--mode", mode, "derand | rand | baseline | brute");
  solve->add_option("--seed", seed, "Random seed");
  add_report(solve, common);

  auto* brute = app.add_subcommand("brute", "Exact optimum by enumeration");
  brute->add_option("--instance", instance, "Instance file")->required();
  add_report(brute, common);

  bool derand = false;
  auto* baseline = app.add_subcommand("baseline", "Uniformly random assignment");
  baseline->add_option("--instance", instance, "Instance file")->required();
  baseline->add_option("--seed", seed, "Random seed");
  baseline->add_flag("--derandomize", derand, "Use conditional expectations instead of sampling");
  add_report(baseline, common);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Write a planted satisfiable instance");
  add_group_args(generate, gen.group);
  generate->add_option("--k", gen.k, "Literals per constraint");
  generate->add_option("--n", gen.n, "Variables");
  generate->add_option("--m", gen.m, "Constraints");
  generate->add_option("--noise", gen.noise, "Fraction of constraints with resampled shifts");
  generate->add_option("--seed", gen.seed, "Random seed");
  generate->add_option("--out", gen.out, "Output file (default stdout)");
  generate->add_flag("--planted", gen.planted, "Record the planted assignment as a comment");
  generate->add_flag("--labels", common.labels, "Print the element label map first");

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Monte-Carlo dictatorship test");
  add_group_args(simulate, sim.group);
  simulate->add_option("--n", sim.n, "Coordinates");
  simulate->add_option("--strategy", sim.strategy, "dictator | quotient-lift | uniform-random");
  simulate->add_option("--dictator", sim.dictator, "Coordinate for the dictator strategy");
  simulate->add_option("--samples", sim.samples, "Trials");
  simulate->add_option("--seed", sim.seed, "Random seed");
  simulate->add_option("--noise", sim.noise, "Per-coordinate resampling probability (default 0)");
  simulate->add_flag("--labels", common.labels, "Print the element label map first");
  add_report(simulate, common);

  GroupArgs reps_args;
  auto* check_reps = app.add_subcommand("check-reps", "Character and operator-norm gap reports");
  add_group_args(check_reps, reps_args);
  check_reps->add_flag("--labels", common.labels, "Print the element label map first");
  add_report(check_reps, common);

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Solve every .inst file in a directory and write CSV");
  bench->add_option("--corpus", bench_args.corpus, "Directory of instance files")->required();
  bench->add_option("--out", bench_args.out, "CSV file (default stdout)");
  bench->add_option("--modes", bench_args.modes, "Modes to run")->delimiter(',');
  bench->add_option("--seed", bench_args.seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*hs) return run_hs(hs_args, common);
    if (*solve) return run_solve(instance, mode, seed, common);
    if (*brute) return run_brute(instance, common);
    if (*baseline) return run_baseline(instance, seed, derand, common);
    if (*generate) return run_generate(gen, common);
    if (*simulate) return run_simulate(sim, common);
    if (*check_reps) return run_check_reps(reps_args, common);
    if (*bench) return run_bench(bench_args);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return kUsageError;
}
