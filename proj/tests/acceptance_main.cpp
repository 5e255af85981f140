// Acceptance suite: one pass/fail line per criterion, exit 0 only if all
// pass. The first argument must point at the CLI binary (used by the
// determinism criterion).

#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "parityq/algorithm.hpp"
#include "parityq/bound.hpp"
#include "parityq/iterate.hpp"
#include "parityq/optimal.hpp"
#include "parityq/oracle.hpp"

namespace {

using namespace parityq;

class Harness {
 public:
  void criterion(int number, const std::string& label, bool pass,
                 const std::string& detail) {
    std::printf("[%s] criterion %2d: %s (%s)\n", pass ? "PASS" : "FAIL",
                number, label.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures_;
  }

  int failures() const { return failures_; }

 private:
  int failures_ = 0;
};

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

std::string format(double value) {
  std::ostringstream os;
  os.precision(3);
  os << value;
  return os.str();
}

// --- criteria 1 and 2: the exact algorithms classify every function -------

void check_exactness(Harness& harness, int number, bool even) {
  Stopwatch watch;
  const std::vector<std::size_t> sizes =
      even ? std::vector<std::size_t>{2, 4, 6, 8, 10}
           : std::vector<std::size_t>{3, 5, 7, 9};
  bool pass = true;
  double worst = 0.0;
  for (std::size_t n : sizes) {
    const ExactnessReport report = verify_exactness(n, 1e-10);
    const std::size_t expected_k = even ? n / 2 : (n + 1) / 2;
    pass = pass && report.all_correct && report.queries == expected_k;
    worst = std::max(worst, report.worst_deviation);
  }
  harness.criterion(
      number,
      even ? "exact classification, even n in {2..10}, n/2 queries"
           : "exact classification, odd n in {3..9}, (n+1)/2 queries",
      pass,
      "worst deviation " + format(worst) + ", " + format(watch.seconds()) +
          " s");
}

// --- criteria 3-5: the below-threshold sweep -------------------------------

void check_sweep(Harness& harness) {
  Stopwatch watch;
  constexpr std::uint64_t kBaseSeed = 1905;
  constexpr std::size_t kTrials = 100;

  bool correlation_ok = true;
  bool class_sums_ok = true;
  bool degree_ok = true;
  double worst_correlation = 0.0;
  double worst_gap = 0.0;
  double worst_high_degree = 0.0;

  for (std::size_t n = 3; n <= 10; ++n) {
    const std::size_t k = (n + 1) / 2 - 1;  // largest k with 2k < n
    for (std::size_t t = 0; t < kTrials; ++t) {
      Rng rng(Rng::derive(kBaseSeed + n, t));
      const OracleDims dims{n, 1 + (t % 2)};
      const std::size_t rank = rng.below(dims.dim() + 1);
      const QueryAlgorithm alg = random_algorithm(dims, k, rank, rng);

      const std::vector<double> profile = acceptance_profile(alg);
      double correlation = 0.0;
      double sum_even = 0.0;
      double sum_odd = 0.0;
      for (std::uint32_t mask = 0; mask < profile.size(); ++mask) {
        if (std::popcount(mask) % 2 == 0) {
          sum_even += profile[mask];
          correlation += profile[mask];
        } else {
          sum_odd += profile[mask];
          correlation -= profile[mask];
        }
      }
      worst_correlation = std::max(worst_correlation, std::abs(correlation));
      if (std::abs(correlation) > 1e-9) correlation_ok = false;

      const double gap = std::abs(sum_even - sum_odd);
      worst_gap = std::max(worst_gap, gap);
      if (gap > 1e-9 || success_from_profile(n, profile).successful) {
        class_sums_ok = false;
      }

      const FourierTable table = fourier_from_profile(n, profile);
      for (std::uint32_t s = 0; s < table.coeffs.size(); ++s) {
        if (static_cast<std::size_t>(std::popcount(s)) > 2 * k) {
          worst_high_degree =
              std::max(worst_high_degree, std::abs(table.coeffs[s]));
        }
      }
      if (!degree_check(table, k, 1e-9)) degree_ok = false;
    }
  }

  const std::string timing = format(watch.seconds()) + " s";
  harness.criterion(3,
                    "parity correlation vanishes for 100 random algorithms "
                    "per n in {3..10}, k = ceil(n/2)-1",
                    correlation_ok,
                    "worst |correlation| " + format(worst_correlation) + ", " +
                        timing);
  harness.criterion(4,
                    "parity-class sums agree and no sweep algorithm passes "
                    "the margin test",
                    class_sums_ok, "worst class gap " + format(worst_gap));
  harness.criterion(
      5, "all multilinear coefficients beyond degree 2k vanish",
      degree_ok, "worst high-degree coefficient " + format(worst_high_degree));
}

// --- criterion 6: the optimal algorithm's two-spike coefficient table ------

void check_optimal_signature(Harness& harness) {
  bool pass = true;
  double worst = 0.0;
  for (std::size_t n : {2, 4, 6, 8}) {
    const FourierTable table = fourier_coefficients(build_even_optimal(n));
    for (std::uint32_t s = 0; s < table.coeffs.size(); ++s) {
      const bool spike = s == 0 || s == table.coeffs.size() - 1;
      const double target = spike ? 0.5 : 0.0;
      const double deviation = std::abs(table.coeffs[s] - target);
      worst = std::max(worst, deviation);
      if (deviation > 1e-10) pass = false;
    }
  }
  harness.criterion(6,
                    "optimal-algorithm coefficients: empty and full set at "
                    "0.5, nothing else",
                    pass, "worst deviation " + format(worst));
}

// --- criterion 7: the two oracle forms are conjugate ------------------------

void check_oracle_equivalence(Harness& harness) {
  bool pass = true;
  double worst = 0.0;
  for (std::size_t w : {1, 2}) {
    for (std::size_t n = 1; n <= 4; ++n) {
      const OracleDims dims{n, w};
      const Matrix b = basis_change(dims);
      for (const SignFunction& f : enumerate_functions(n)) {
        const Matrix conjugated =
            multiply(b, multiply(oracle_computational(f, dims), b));
        const double deviation =
            max_abs_diff(conjugated, oracle_phase(f, dims));
        worst = std::max(worst, deviation);
        if (deviation > 1e-12) pass = false;
      }
    }
  }
  harness.criterion(7,
                    "basis change maps the permutation oracle onto the "
                    "diagonal oracle, exhaustively for n <= 4, w in {1,2}",
                    pass, "worst entry deviation " + format(worst));
}

// --- criterion 8: two points, one query -------------------------------------

void check_two_point(Harness& harness) {
  const QueryAlgorithm alg = build_even_optimal(2);
  bool pass = alg.queries() == 1;
  double worst = 0.0;
  for (const SignFunction& f : enumerate_functions(2)) {
    const double expected = parity(f) > 0 ? 1.0 : 0.0;
    const double deviation =
        std::abs(acceptance_probability(alg, f) - expected);
    worst = std::max(worst, deviation);
    if (deviation > 1e-12) pass = false;
  }
  harness.criterion(
      8, "n=2: one oracle call classifies all four functions exactly", pass,
      "worst deviation " + format(worst));
}

// --- criterion 9: parity via the n-th iterate -------------------------------

void check_iteration(Harness& harness) {
  Stopwatch watch;
  bool pass = true;
  double worst = 0.0;
  for (std::size_t n = 1; n <= 10; ++n) {
    for (const SignFunction& f : enumerate_functions(n)) {
      const LiftedFunction g = lift(f);
      const LiftedPoint end = classical_iterate(g, {1, +1}, n);
      if (!(end == LiftedPoint{1, parity(f)})) pass = false;

      const Matrix u = permutation_oracle(g);
      Vector state(2 * n);
      state[point_index(n, {1, +1})] = 1.0;
      for (std::size_t step = 0; step < n; ++step) state = apply(u, state);
      const std::size_t target = point_index(n, {1, parity(f)});
      for (std::size_t i = 0; i < state.size(); ++i) {
        const double expected = i == target ? 1.0 : 0.0;
        const double deviation = std::abs(state[i] - expected);
        worst = std::max(worst, deviation);
        if (deviation > 1e-12) pass = false;
      }
    }
  }
  harness.criterion(9,
                    "n-th iterate from (1,+1) reaches (1, parity), classical "
                    "and matrix paths, all f with n <= 10",
                    pass,
                    "worst amplitude deviation " + format(worst) + ", " +
                        format(watch.seconds()) + " s");
}

// --- criterion 10: CLI byte determinism --------------------------------------

struct CliCapture {
  int status = -1;
  std::string out;
};

CliCapture capture(const std::string& bin, const std::string& args) {
  const std::string cmd = bin + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  CliCapture result;
  if (pipe == nullptr) return result;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) {
    result.out.append(buf, got);
  }
  const int rc = pclose(pipe);
  result.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return result;
}

void check_cli_determinism(Harness& harness, const std::string& bin) {
  const std::vector<std::string> invocations = {
      "parity --f \"+-+-\"",
      "optimal --n 6",
      "bound --n 5 --k 2 --trials 10 --seed 42",
      "fourier --n 5 --algo random --k 2 --seed 1",
      "iterate --f \"+-+\"",
  };
  bool pass = true;
  for (const std::string& args : invocations) {
    const CliCapture first = capture(bin, args);
    const CliCapture second = capture(bin, args);
    if (first.status != second.status || first.out != second.out ||
        first.status < 0 || first.out.empty()) {
      pass = false;
    }
  }
  harness.criterion(10,
                    "repeated CLI invocations with identical flags and seeds "
                    "produce byte-identical JSON",
                    pass, std::to_string(invocations.size()) + " invocations");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance_tests <path-to-parityq-cli>\n";
    return 2;
  }

  Harness harness;
  check_exactness(harness, 1, /*even=*/true);
  check_exactness(harness, 2, /*even=*/false);
  check_sweep(harness);
  check_optimal_signature(harness);
  check_oracle_equivalence(harness);
  check_two_point(harness);
  check_iteration(harness);
  check_cli_determinism(harness, argv[1]);

  if (harness.failures() == 0) {
    std::printf("all 10 criteria passed\n");
    return 0;
  }
  std::printf("%d criteria failed\n", harness.failures());
  return 1;
}
