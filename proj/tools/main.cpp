// Command-line front end: every verification workflow as a subcommand with
// machine-readable JSON on stdout. Exit codes: 0 all checks passed, 1 a
// mathematical check failed, 2 usage or input error.

#include <cmath>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "parityq/algorithm.hpp"
#include "parityq/bound.hpp"
#include "parityq/iterate.hpp"
#include "parityq/optimal.hpp"
#include "parityq/oracle.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

void emit(const ordered_json& doc, bool text_mode) {
  if (!text_mode) {
    std::cout << doc.dump() << "\n";
    return;
  }
  std::cout << std::setprecision(17);
  for (const auto& [key, value] : doc.items()) {
    if (value.is_number_float()) {
      std::cout << key << " = " << value.get<double>() << "\n";
    } else {
      std::cout << key << " = " << value.dump() << "\n";
    }
  }
}

struct ParityOpts {
  std::string f_text;
};

int run_parity(const ParityOpts& opts, bool text_mode) {
  const parityq::SignFunction f =
      parityq::decode(opts.f_text, opts.f_text.size());
  ordered_json doc;
  doc["n"] = f.n();
  doc["f"] = opts.f_text;
  doc["parity"] = parityq::parity(f);
  emit(doc, text_mode);
  return kExitOk;
}

struct OptimalOpts {
  std::size_t n = 0;
  double tol = parityq::kStructuralTol;
};

int run_optimal(const OptimalOpts& opts, bool text_mode) {
  const parityq::ExactnessReport report =
      parityq::verify_exactness(opts.n, opts.tol);
  ordered_json doc;
  doc["n"] = report.n;
  doc["k"] = report.queries;
  doc["all_correct"] = report.all_correct;
  doc["worst_deviation"] = report.worst_deviation;
  emit(doc, text_mode);
  return report.all_correct ? kExitOk : kExitCheckFailed;
}

struct BoundOpts {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  std::optional<std::size_t> work_dim;
  std::optional<std::size_t> proj_rank;
  double tol = parityq::kSweepTol;
};

int run_bound(const BoundOpts& opts, bool text_mode) {
  parityq::SweepOptions sweep;
  sweep.work_dim = opts.work_dim;
  sweep.projector_rank = opts.proj_rank;
  const parityq::SweepReport report = parityq::impossibility_sweep(
      opts.n, opts.k, opts.trials, opts.seed, sweep);
  ordered_json doc;
  doc["max_abs_correlation"] = report.max_abs_correlation;
  doc["max_class_sum_gap"] = report.max_class_sum_gap;
  doc["any_successful"] = report.any_successful;
  emit(doc, text_mode);
  const bool ok = report.max_abs_correlation <= opts.tol &&
                  report.max_class_sum_gap <= opts.tol &&
                  !report.any_successful;
  return ok ? kExitOk : kExitCheckFailed;
}

struct FourierOpts {
  std::size_t n = 0;
  std::string algo;
  std::optional<std::size_t> k;
  std::uint64_t seed = 0;
  std::size_t work_dim = 1;
  std::optional<std::size_t> proj_rank;
  double tol = parityq::kSweepTol;
};

int run_fourier(const FourierOpts& opts, bool text_mode) {
  parityq::QueryAlgorithm alg;
  if (opts.algo == "optimal") {
    alg = parityq::build_optimal(opts.n);
  } else {
    if (!opts.k.has_value()) {
      throw std::invalid_argument("fourier: --algo random requires --k");
    }
    parityq::Rng rng(opts.seed);
    const parityq::OracleDims dims{opts.n, opts.work_dim};
    const std::size_t rank =
        opts.proj_rank.value_or(rng.below(dims.dim() + 1));
    alg = parityq::random_algorithm(dims, *opts.k, rank, rng);
  }

  const parityq::FourierTable table = parityq::fourier_coefficients(alg);
  ordered_json coeffs = ordered_json::array();
  for (std::uint32_t mask = 0; mask < table.coeffs.size(); ++mask) {
    if (std::abs(table.coeffs[mask]) > 1e-12) {
      coeffs.push_back({{"mask", mask}, {"value", table.coeffs[mask]}});
    }
  }
  ordered_json doc;
  doc["coeffs"] = std::move(coeffs);
  doc["max_degree_present"] = parityq::max_degree_present(table, opts.tol);
  doc["parity_coefficient"] = table.coeffs.back();
  if (text_mode) {
    std::cout << std::setprecision(17);
    for (const auto& entry : doc["coeffs"]) {
      std::cout << "c[" << entry["mask"].get<std::uint32_t>()
                << "] = " << entry["value"].get<double>() << "\n";
    }
    std::cout << "max_degree_present = " << doc["max_degree_present"] << "\n";
    std::cout << "parity_coefficient = "
              << doc["parity_coefficient"].get<double>() << "\n";
  } else {
    emit(doc, false);
  }
  const bool ok = parityq::degree_check(table, alg.queries(), opts.tol);
  return ok ? kExitOk : kExitCheckFailed;
}

struct IterateOpts {
  std::string f_text;
};

int run_iterate(const IterateOpts& opts, bool text_mode) {
  const parityq::SignFunction f =
      parityq::decode(opts.f_text, opts.f_text.size());
  const parityq::ReductionReport report = parityq::reduction_demo(f);
  const std::vector<parityq::LiftedPoint> trace = parityq::iteration_trace(f);

  ordered_json trace_json = ordered_json::array();
  for (const parityq::LiftedPoint& p : trace) {
    trace_json.push_back({p.x, p.r});
  }
  ordered_json doc;
  doc["trace"] = std::move(trace_json);
  doc["parity_via_iteration"] = report.parity_via_iteration;
  doc["parity_direct"] = report.parity_direct;
  doc["agree"] = report.agree;
  if (text_mode) {
    std::cout << "trace =";
    for (const parityq::LiftedPoint& p : trace) {
      std::cout << " (" << p.x << "," << (p.r > 0 ? "+1" : "-1") << ")";
    }
    std::cout << "\nparity_via_iteration = " << report.parity_via_iteration
              << "\nparity_direct = " << report.parity_direct
              << "\nagree = " << (report.agree ? "true" : "false") << "\n";
  } else {
    emit(doc, false);
  }
  return report.agree ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "parityq: simulate query algorithms for the parity of a +-1 function,\n"
      "build the exact n/2-query algorithms, and verify by brute force the\n"
      "identities that rule out anything faster."};
  app.require_subcommand(1);
  app.fallthrough();

  std::string output = "json";
  app.add_option("--output", output, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  int threads = 1;
  app.add_option("--threads", threads,
                 "Worker-thread hint; the current build runs sweeps serially")
      ->check(CLI::PositiveNumber);

  ParityOpts parity_opts;
  CLI::App* parity_cmd =
      app.add_subcommand("parity", "Parity of a function given as +- text");
  parity_cmd->add_option("--f", parity_opts.f_text, "Function text, e.g. \"+-+\"")
      ->required();

  OptimalOpts optimal_opts;
  CLI::App* optimal_cmd = app.add_subcommand(
      "optimal", "Build the exact optimal algorithm and sweep all functions");
  optimal_cmd->add_option("--n", optimal_opts.n, "Domain size")
      ->required()
      ->check(CLI::Range(2, 24));
  optimal_cmd->add_option("--tol", optimal_opts.tol, "Exactness tolerance")
      ->capture_default_str();

  BoundOpts bound_opts;
  CLI::App* bound_cmd = app.add_subcommand(
      "bound", "Random-algorithm sweep of the below-n/2 impossibility checks");
  bound_cmd->add_option("--n", bound_opts.n, "Domain size")
      ->required()
      ->check(CLI::Range(1, 24));
  bound_cmd->add_option("--k", bound_opts.k, "Oracle applications per trial")
      ->required();
  bound_cmd->add_option("--trials", bound_opts.trials, "Number of trials")
      ->capture_default_str();
  bound_cmd->add_option("--seed", bound_opts.seed, "Base seed")
      ->capture_default_str();
  bound_cmd->add_option("--w", bound_opts.work_dim,
                        "Fix the work dimension (default: alternate 1 and 2)");
  bound_cmd->add_option("--proj-rank", bound_opts.proj_rank,
                        "Fix the projector rank (default: random per trial)");
  bound_cmd->add_option("--tol", bound_opts.tol, "Sweep tolerance")
      ->capture_default_str();

  FourierOpts fourier_opts;
  CLI::App* fourier_cmd = app.add_subcommand(
      "fourier", "Multilinear coefficients of the acceptance probability");
  fourier_cmd->add_option("--n", fourier_opts.n, "Domain size")
      ->required()
      ->check(CLI::Range(1, 24));
  fourier_cmd->add_option("--algo", fourier_opts.algo, "Algorithm to analyze")
      ->required()
      ->check(CLI::IsMember({"optimal", "random"}));
  fourier_cmd->add_option("--k", fourier_opts.k,
                          "Oracle applications (random algo only)");
  fourier_cmd->add_option("--seed", fourier_opts.seed, "Seed (random algo)")
      ->capture_default_str();
  fourier_cmd->add_option("--w", fourier_opts.work_dim,
                          "Work dimension (random algo)")
      ->capture_default_str();
  fourier_cmd->add_option("--proj-rank", fourier_opts.proj_rank,
                          "Projector rank (random algo; default random)");
  fourier_cmd->add_option("--tol", fourier_opts.tol,
                          "Degree / presence tolerance")
      ->capture_default_str();

  IterateOpts iterate_opts;
  CLI::App* iterate_cmd = app.add_subcommand(
      "iterate", "Parity via the n-th iterate of the lifted permutation");
  iterate_cmd
      ->add_option("--f", iterate_opts.f_text, "Function text, e.g. \"+-+\"")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const bool text_mode = output == "text";
  try {
    if (*parity_cmd) return run_parity(parity_opts, text_mode);
    if (*optimal_cmd) return run_optimal(optimal_opts, text_mode);
    if (*bound_cmd) return run_bound(bound_opts, text_mode);
    if (*fourier_cmd) return run_fourier(fourier_opts, text_mode);
    if (*iterate_cmd) return run_iterate(iterate_opts, text_mode);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}
