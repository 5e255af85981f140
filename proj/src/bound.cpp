#include "parityq/bound.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace parityq {

namespace {

bool is_power_of_two(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

}  // namespace

double evaluate(const FourierTable& table, std::uint32_t function_mask) {
  double acc = 0.0;
  for (std::uint32_t s = 0; s < table.coeffs.size(); ++s) {
    const int sign = (std::popcount(s & function_mask) % 2 == 0) ? +1 : -1;
    acc += sign * table.coeffs[s];
  }
  return acc;
}

int max_degree_present(const FourierTable& table, double tol) {
  int best = -1;
  for (std::uint32_t s = 0; s < table.coeffs.size(); ++s) {
    if (std::abs(table.coeffs[s]) > tol) {
      best = std::max(best, std::popcount(s));
    }
  }
  return best;
}

void walsh_hadamard_inplace(std::vector<double>& values) {
  if (!is_power_of_two(values.size())) {
    throw std::invalid_argument("walsh_hadamard_inplace: size " +
                                std::to_string(values.size()) +
                                " is not a power of two");
  }
  for (std::size_t len = 1; len < values.size(); len <<= 1) {
    for (std::size_t block = 0; block < values.size(); block += len << 1) {
      for (std::size_t i = block; i < block + len; ++i) {
        const double a = values[i];
        const double b = values[i + len];
        values[i] = a + b;
        values[i + len] = a - b;
      }
    }
  }
}

std::vector<double> walsh_transform_naive(const std::vector<double>& values) {
  if (!is_power_of_two(values.size())) {
    throw std::invalid_argument("walsh_transform_naive: size " +
                                std::to_string(values.size()) +
                                " is not a power of two");
  }
  std::vector<double> out(values.size());
  for (std::uint32_t s = 0; s < values.size(); ++s) {
    double acc = 0.0;
    for (std::uint32_t m = 0; m < values.size(); ++m) {
      acc += (std::popcount(s & m) % 2 == 0) ? values[m] : -values[m];
    }
    out[s] = acc;
  }
  return out;
}

FourierTable fourier_from_profile(std::size_t n, std::vector<double> profile) {
  if (profile.size() != (std::size_t{1} << n)) {
    throw std::invalid_argument("fourier_from_profile: profile has " +
                                std::to_string(profile.size()) +
                                " entries, expected 2^" + std::to_string(n));
  }
  walsh_hadamard_inplace(profile);
  const double scale = 1.0 / static_cast<double>(std::size_t{1} << n);
  for (double& c : profile) c *= scale;
  return FourierTable{n, std::move(profile)};
}

FourierTable fourier_coefficients(const QueryAlgorithm& alg) {
  return fourier_from_profile(alg.dims.n, acceptance_profile(alg));
}

bool degree_check(const FourierTable& table, std::size_t queries, double tol) {
  for (std::uint32_t s = 0; s < table.coeffs.size(); ++s) {
    if (static_cast<std::size_t>(std::popcount(s)) > 2 * queries &&
        std::abs(table.coeffs[s]) > tol) {
      return false;
    }
  }
  return true;
}

namespace {

CorrelationReport correlation_from_profile(std::size_t n, std::size_t queries,
                                           const std::vector<double>& profile) {
  CorrelationReport report;
  report.n = n;
  report.queries = queries;
  // Fixed mask-order reduction keeps the floating-point result reproducible.
  for (std::uint32_t mask = 0; mask < profile.size(); ++mask) {
    const bool even = (std::popcount(mask) % 2) == 0;
    if (even) {
      report.sum_even += profile[mask];
      report.correlation += profile[mask];
    } else {
      report.sum_odd += profile[mask];
      report.correlation -= profile[mask];
    }
  }
  const FourierTable table = fourier_from_profile(n, profile);
  report.max_degree_present = parityq::max_degree_present(table, kSweepTol);
  return report;
}

}  // namespace

CorrelationReport parity_correlation(const QueryAlgorithm& alg) {
  return correlation_from_profile(alg.dims.n, alg.queries(),
                                  acceptance_profile(alg));
}

SweepReport impossibility_sweep(std::size_t n, std::size_t queries,
                                std::size_t trials, std::uint64_t seed,
                                const SweepOptions& options) {
  if (2 * queries >= n) {
    throw std::invalid_argument(
        "impossibility_sweep: requires 2k < n, got k=" +
        std::to_string(queries) + ", n=" + std::to_string(n) +
        "; at or above n/2 oracle calls the vanishing identity does not "
        "apply");
  }
  if (n > kEnumerationCap) {
    throw std::invalid_argument("impossibility_sweep: n=" + std::to_string(n) +
                                " exceeds enumeration cap " +
                                std::to_string(kEnumerationCap));
  }

  SweepReport report;
  report.n = n;
  report.queries = queries;
  report.trials = trials;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(Rng::derive(seed, t));
    const std::size_t w = options.work_dim.value_or(1 + (t % 2));
    const OracleDims dims{n, w};
    const std::size_t rank =
        options.projector_rank.value_or(rng.below(dims.dim() + 1));
    const QueryAlgorithm alg = random_algorithm(dims, queries, rank, rng);

    const std::vector<double> profile = acceptance_profile(alg);
    const CorrelationReport corr =
        correlation_from_profile(n, queries, profile);
    const SuccessReport success = success_from_profile(n, profile);

    report.max_abs_correlation =
        std::max(report.max_abs_correlation, std::abs(corr.correlation));
    report.max_class_sum_gap = std::max(
        report.max_class_sum_gap, std::abs(corr.sum_even - corr.sum_odd));
    report.any_successful = report.any_successful || success.successful;
  }
  return report;
}

}  // namespace parityq
