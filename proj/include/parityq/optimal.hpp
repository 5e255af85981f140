#pragma once

#include "parityq/algorithm.hpp"

namespace parityq {

/// The exact parity algorithm for even n, using n/2 oracle applications.
/// Starts from the uniform superposition of the |x, anti> states, interleaves
/// the two-cycle shift (x -> x+1 within each half of 1..n) between oracle
/// calls, and measures the projector onto the initial state. The acceptance
/// probability is exactly (1 + parity)/2 for every f.
/// Throws on odd n, pointing at build_odd_optimal.
QueryAlgorithm build_even_optimal(std::size_t n);

/// Exact parity for odd n with (n+1)/2 oracle applications. The n-point
/// problem is padded with one virtual point of fixed oracle eigenvalue +1,
/// carried by the |1, sym> state, and the even-n construction runs on the
/// n+1 virtual points. Padding with +1 leaves the parity unchanged.
/// Throws on even n.
QueryAlgorithm build_odd_optimal(std::size_t n);

/// Dispatches on the parity of n. Requires n >= 2.
QueryAlgorithm build_optimal(std::size_t n);

struct ExactnessReport {
  std::size_t n = 0;
  std::size_t queries = 0;
  bool all_correct = false;      // every p(f) within tol of (1 + par(f))/2
  double worst_deviation = 0.0;  // max |p(f) - (1 + par(f))/2| over all f
};

/// Sweeps all 2^n functions through the appropriate optimal algorithm.
ExactnessReport verify_exactness(std::size_t n, double tol = kStructuralTol);

}  // namespace parityq
