#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "parityq/algorithm.hpp"

namespace parityq {

/// Multilinear coefficients of the acceptance probability:
/// p(f) = sum_S coeffs[S] * prod_{x in S} f(x), with the subset S of {1..n}
/// encoded as a bitmask (bit x-1 set <=> x in S).
struct FourierTable {
  std::size_t n = 0;
  std::vector<double> coeffs;  // indexed by subset mask, size 2^n
};

/// p(f) reconstructed from the table for the function with the given mask.
double evaluate(const FourierTable& table, std::uint32_t function_mask);

/// Largest |S| whose coefficient exceeds tol in magnitude; -1 if none does.
int max_degree_present(const FourierTable& table, double tol);

/// In-place unnormalized Walsh-Hadamard butterfly:
/// out[S] = sum_m in[m] * (-1)^popcount(S & m). Size must be a power of two.
void walsh_hadamard_inplace(std::vector<double>& values);

/// Direct O(4^n) evaluation of the same transform; the cross-check for the
/// butterfly and deliberately independent of it.
std::vector<double> walsh_transform_naive(const std::vector<double>& values);

/// Character transform of the acceptance profile: coeffs[S] =
/// 2^-n sum_f p(f) prod_{x in S} f(x). Exhausts all 2^n functions.
FourierTable fourier_coefficients(const QueryAlgorithm& alg);

/// Same transform applied to an existing profile.
FourierTable fourier_from_profile(std::size_t n, std::vector<double> profile);

/// True iff every coefficient on a subset larger than 2*queries is <= tol in
/// magnitude. An algorithm with k oracle calls can only populate degrees up
/// to 2k, so this must hold for any faithfully simulated algorithm.
bool degree_check(const FourierTable& table, std::size_t queries, double tol);

struct CorrelationReport {
  std::size_t n = 0;
  std::size_t queries = 0;
  double correlation = 0.0;  // sum_f p(f) par(f), unnormalized
  double sum_even = 0.0;     // sum of p(f) over par(f) = +1
  double sum_odd = 0.0;      // sum of p(f) over par(f) = -1
  int max_degree_present = -1;
};

/// Exhaustive sum over all 2^n functions in mask order. When 2k < n the
/// correlation vanishes and the two class sums agree.
CorrelationReport parity_correlation(const QueryAlgorithm& alg);

struct SweepOptions {
  /// Fixed work dimension; by default trials alternate between 1 and 2.
  std::optional<std::size_t> work_dim;
  /// Fixed projector rank; by default drawn per trial from [0, dim].
  std::optional<std::size_t> projector_rank;
};

struct SweepReport {
  std::size_t n = 0;
  std::size_t queries = 0;
  std::size_t trials = 0;
  double max_abs_correlation = 0.0;  // largest |correlation| over trials
  double max_class_sum_gap = 0.0;    // largest |sum_even - sum_odd|
  bool any_successful = false;       // did any trial clear the margin test
};

/// Stress-tests the below-threshold regime: `trials` random algorithms with
/// 2*queries < n, each checked for vanishing parity correlation, equal class
/// sums, and failure of the success margin. Trial t draws from the
/// independent stream Rng(Rng::derive(seed, t)), so reports are reproducible
/// and trials could run in any order. Throws if 2*queries >= n, where the
/// vanishing identity does not apply.
SweepReport impossibility_sweep(std::size_t n, std::size_t queries,
                                std::size_t trials, std::uint64_t seed,
                                const SweepOptions& options = {});

}  // namespace parityq
