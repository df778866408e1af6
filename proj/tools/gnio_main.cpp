#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gnio/datagen.hpp"
#include "gnio/generic_solver.hpp"
#include "gnio/grid_oracle.hpp"
#include "gnio/io.hpp"
#include "gnio/pwl.hpp"
#include "gnio/pwq.hpp"

namespace {

using namespace gnio;

// Exit codes: 0 success, 1 failed check comparison, 2 validation/usage
// failure, 3 I/O failure.
int exit_code_for(const GnioError& e) {
  return e.code() == ErrorCode::IoFailure ? 3 : 2;
}

LossKind parse_loss(const std::string& s) {
  return s == "l1" ? LossKind::Abs : LossKind::Square;
}

Solution run_engine(const GnioInstance& instance) {
  return instance.loss == LossKind::Abs ? solve_l1(instance) : solve_l2(instance);
}

WeightScheme default_scheme(LossKind loss) {
  return loss == LossKind::Abs ? WeightScheme::FixedL1 : WeightScheme::FixedL2;
}

std::vector<PatternName> parse_pattern_list(const std::string& arg) {
  std::vector<PatternName> out;
  if (arg == "all") {
    out.assign(std::begin(kAllPatterns), std::end(kAllPatterns));
    return out;
  }
  std::size_t pos = 0;
  while (pos <= arg.size()) {
    const std::size_t comma = arg.find(',', pos);
    const std::string tok =
        arg.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (!tok.empty()) out.push_back(pattern_from_string(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.empty()) throw GnioError(ErrorCode::IoFailure, "empty pattern list");
  return out;
}

std::vector<std::size_t> parse_sizes(const std::string& arg) {
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  while (pos <= arg.size()) {
    const std::size_t comma = arg.find(',', pos);
    const std::string tok =
        arg.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (!tok.empty()) {
      char* end = nullptr;
      const double v = std::strtod(tok.c_str(), &end);
      if (end == tok.c_str() || *end != '\0' || !(v >= 1.0))
        throw GnioError(ErrorCode::IoFailure, "bad size '" + tok + "'");
      out.push_back(static_cast<std::size_t>(v + 0.5));
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.empty()) throw GnioError(ErrorCode::IoFailure, "empty size list");
  return out;
}

struct SolveArgs {
  std::string loss;
  std::string in_path;
  std::string pattern;
  std::string params_path;
  std::string out_path;
  std::uint64_t seed = 0;
};

int run_solve(const SolveArgs& args) {
  const LossKind loss = parse_loss(args.loss);
  const CsvData data = read_y_csv(args.in_path);
  GnioInstance instance;
  instance.y = data.y;
  instance.loss = loss;
  if (data.has_w) {
    instance.w = data.w;
  } else {
    instance.w.assign(data.y.size(), loss == LossKind::Abs ? 1.0 : 0.5);
  }
  if (!args.params_path.empty()) {
    auto [lambda, mu] = read_params_json(args.params_path);
    instance.lambda = std::move(lambda);
    instance.mu = std::move(mu);
  } else {
    PatternSpec spec{pattern_from_string(args.pattern), instance.n(), args.seed};
    auto [lambda, mu] = gen_params(spec);
    instance.lambda = std::move(lambda);
    instance.mu = std::move(mu);
  }
  validate_instance(instance);

  const Solution sol = run_engine(instance);
  if (!args.out_path.empty()) write_x_csv(args.out_path, sol.x);

  RunReport report;
  report.instance_id = args.in_path;
  report.n = instance.n();
  report.loss = args.loss;
  report.pattern = args.params_path.empty() ? args.pattern : "file";
  report.objective = sol.objective;
  report.runtime_seconds = sol.stats.runtime_seconds;
  report.stats = sol.stats;
  report.x_output_path = args.out_path;
  std::cout << format_report(report) << "\n";
  return 0;
}

struct GenArgs {
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::string pattern;
  std::string weights = "fixed_l1";
  std::string out_dir = ".";
};

int run_gen(const GenArgs& args) {
  const PatternSpec spec{pattern_from_string(args.pattern), args.n, args.seed};
  const WeightScheme scheme = weight_scheme_from_string(args.weights);
  auto [lambda, mu] = gen_params(spec);  // throws before any file is written
  auto [y, w] = gen_data(args.n, args.seed, scheme);

  const std::string y_path = args.out_dir + "/y.csv";
  std::ofstream out(y_path);
  if (!out) throw GnioError(ErrorCode::IoFailure, "cannot write " + y_path);
  for (std::size_t i = 0; i < y.size(); ++i)
    out << format_number(y[i]) << ',' << format_number(w[i]) << '\n';
  if (!out) throw GnioError(ErrorCode::IoFailure, "write failed for " + y_path);
  write_params_json(args.out_dir + "/params.json", lambda, mu);
  std::cout << "wrote " << y_path << " and " << args.out_dir << "/params.json\n";
  return 0;
}

struct BenchArgs {
  std::string loss;
  std::string sizes;
  std::string patterns = "all";
  std::size_t reps = 10;
  std::uint64_t seed = 1;
  std::string out_path;
};

int run_bench(const BenchArgs& args) {
  const LossKind loss = parse_loss(args.loss);
  const std::vector<std::size_t> sizes = parse_sizes(args.sizes);
  const std::vector<PatternName> patterns = parse_pattern_list(args.patterns);

  std::ostringstream table;
  table << "n,pattern,loss,mean_runtime,stddev,deleted_breakpoints\n";
  for (std::size_t n : sizes) {
    for (PatternName p : patterns) {
      double sum = 0.0, sumsq = 0.0, deleted = 0.0;
      for (std::size_t rep = 0; rep < args.reps; ++rep) {
        const GnioInstance instance = gen_instance(
            {p, n, args.seed + rep}, default_scheme(loss), loss);
        const Solution sol = run_engine(instance);
        sum += sol.stats.runtime_seconds;
        sumsq += sol.stats.runtime_seconds * sol.stats.runtime_seconds;
        deleted += static_cast<double>(sol.stats.breakpoints_deleted);
      }
      const double reps = static_cast<double>(args.reps);
      const double mean = sum / reps;
      const double var = std::max(0.0, sumsq / reps - mean * mean);
      table << n << ',' << pattern_name(p) << ',' << args.loss << ','
            << format_number(mean) << ',' << format_number(std::sqrt(var)) << ','
            << format_number(deleted / reps) << '\n';
    }
  }
  if (args.out_path.empty()) {
    std::cout << table.str();
  } else {
    std::ofstream out(args.out_path);
    if (!out) throw GnioError(ErrorCode::IoFailure, "cannot write " + args.out_path);
    out << table.str();
    if (!out)
      throw GnioError(ErrorCode::IoFailure, "write failed for " + args.out_path);
  }
  return 0;
}

struct CheckArgs {
  std::string loss;
  std::size_t n = 10;
  std::size_t seeds = 20;
  std::string pattern = "all";
  std::string weights;
  double step = 1e-3;
  double eps = 1e-5;
  bool corrupt = false;
};

int run_check(const CheckArgs& args) {
  const LossKind loss = parse_loss(args.loss);
  const WeightScheme scheme = args.weights.empty()
                                  ? default_scheme(loss)
                                  : weight_scheme_from_string(args.weights);
  const std::vector<PatternName> patterns = parse_pattern_list(args.pattern);

  std::size_t checks = 0, failures = 0;
  double worst_gap = -1e300;
  double worst_bound = 0.0;
  std::string worst_label;
  for (PatternName p : patterns) {
    for (std::size_t s = 1; s <= args.seeds; ++s) {
      const GnioInstance instance = gen_instance({p, args.n, s}, scheme, loss);
      Solution sol = run_engine(instance);
      if (args.corrupt) {  // regression-harness fixture: break the solution
        sol.x[0] += 0.1;
        sol.objective = objective_value(instance, sol.x);
      }
      const GridSpec grid = default_grid(instance, args.step);
      const Solution ref = grid_solve(instance, grid);
      const double bound = 5.0 * args.step * slope_bound(instance, grid);
      const double gap = sol.objective - ref.objective;
      const bool gap_ok = gap <= bound;
      const bool cert_ok = perturbation_certificate(instance, sol.x, args.eps);
      ++checks;
      if (!gap_ok || !cert_ok) ++failures;
      if (gap - bound > worst_gap - worst_bound) {
        worst_gap = gap;
        worst_bound = bound;
        worst_label = std::string(pattern_name(p)) + "/seed" + std::to_string(s);
      }
    }
  }
  std::cout << "checks=" << checks << " failures=" << failures
            << " worst_gap=" << format_number(worst_gap)
            << " worst_bound=" << format_number(worst_bound)
            << " worst_case=" << worst_label << "\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chain solver for generalized nearly isotonic problems"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand("solve", "solve an instance from files");
  solve->add_option("--loss", solve_args.loss, "loss family")
      ->required()
      ->check(CLI::IsMember({"l1", "l2"}));
  solve->add_option("--in", solve_args.in_path, "input y CSV")->required();
  CLI::Option* pat =
      solve->add_option("--pattern", solve_args.pattern, "penalty pattern name");
  CLI::Option* par =
      solve->add_option("--params", solve_args.params_path, "penalty JSON file");
  pat->excludes(par);
  par->excludes(pat);
  solve->add_option("--seed", solve_args.seed, "seed for random patterns");
  solve->add_option("--out", solve_args.out_path, "write x as CSV here");

  GenArgs gen_args;
  CLI::App* gen = app.add_subcommand("gen", "generate an instance");
  gen->add_option("--n", gen_args.n, "number of points")->required();
  gen->add_option("--seed", gen_args.seed, "seed")->required();
  gen->add_option("--pattern", gen_args.pattern, "penalty pattern name")->required();
  gen->add_option("--weights", gen_args.weights,
                  "weight scheme (fixed_l1, fixed_l2, uniform, gaussian)");
  gen->add_option("--out-dir", gen_args.out_dir, "output directory");

  BenchArgs bench_args;
  CLI::App* bench = app.add_subcommand("bench", "runtime scaling table");
  bench->add_option("--loss", bench_args.loss, "loss family")
      ->required()
      ->check(CLI::IsMember({"l1", "l2"}));
  bench->add_option("--sizes", bench_args.sizes, "comma list of n, e.g. 1e4,1e5")
      ->required();
  bench->add_option("--patterns", bench_args.patterns,
                    "comma list of patterns, or 'all'");
  bench->add_option("--reps", bench_args.reps, "repetitions per cell");
  bench->add_option("--seed", bench_args.seed, "base seed");
  bench->add_option("--out", bench_args.out_path, "write CSV here (default stdout)");

  CheckArgs check_args;
  CLI::App* check = app.add_subcommand("check", "oracle cross-checks");
  check->add_option("--loss", check_args.loss, "loss family")
      ->required()
      ->check(CLI::IsMember({"l1", "l2"}));
  check->add_option("--n", check_args.n, "instance size (grid oracle scale)")
      ->check(CLI::Range(std::size_t{1}, std::size_t{64}));
  check->add_option("--seeds", check_args.seeds, "seeds per pattern");
  check->add_option("--pattern", check_args.pattern,
                    "pattern name, comma list, or 'all'");
  check->add_option("--weights", check_args.weights, "weight scheme override");
  check->add_option("--step", check_args.step, "grid step");
  check->add_option("--eps", check_args.eps, "certificate perturbation");
  check->add_flag("--corrupt-engine", check_args.corrupt)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (solve->parsed()) {
      if (solve_args.pattern.empty() == solve_args.params_path.empty()) {
        std::cerr << "solve needs exactly one of --pattern or --params\n";
        return 2;
      }
      return run_solve(solve_args);
    }
    if (gen->parsed()) return run_gen(gen_args);
    if (bench->parsed()) return run_bench(bench_args);
    if (check->parsed()) return run_check(check_args);
  } catch (const GnioError& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 2;
}
