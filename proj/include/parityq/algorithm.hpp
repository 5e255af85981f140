#pragma once

#include <vector>

#include "parityq/numerics.hpp"
#include "parityq/oracle.hpp"

namespace parityq {

/// A fixed k-query algorithm: the state V_k U_f V_{k-1} U_f ... V_1 U_f |psi0>
/// is prepared and the projector is measured once at the end. The V_i are
/// independent of f; only the oracle applications depend on it.
struct QueryAlgorithm {
  OracleDims dims;
  Vector initial_state;           // unit norm, dimension dims.dim()
  std::vector<Matrix> unitaries;  // V_1..V_k
  Matrix projector;               // Hermitian idempotent, same dimension

  std::size_t queries() const { return unitaries.size(); }
};

/// Throws std::invalid_argument if any structural invariant fails:
/// normalized initial state, unitary V_i, Hermitian idempotent projector,
/// consistent dimensions.
void validate_algorithm(const QueryAlgorithm& alg, double tol = kStructuralTol);

/// The final state for oracle function f. Norm is preserved.
Vector run(const QueryAlgorithm& alg, const SignFunction& f);

/// <psi_f| P |psi_f>, clamped into [0,1]. Throws std::runtime_error if the
/// value strays from a probability by more than round-off allows (imaginary
/// part above 1e-10, or outside [0,1] by more than 1e-9): that indicates a
/// broken projector, not round-off.
double acceptance_probability(const QueryAlgorithm& alg, const SignFunction& f);

/// Acceptance probability of every function of dims.n points, indexed by
/// function mask. The workhorse behind all exhaustive sweeps.
std::vector<double> acceptance_profile(const QueryAlgorithm& alg);

/// Margin report over the two parity classes.
struct SuccessReport {
  double min_prob_even = 0.0;  // min p(f) over par(f) = +1
  double max_prob_odd = 0.0;   // max p(f) over par(f) = -1
  double epsilon_star = 0.0;   // min(min_prob_even - 1/2, 1/2 - max_prob_odd)
  bool successful = false;     // epsilon_star > 0
};

/// Sweeps all 2^n functions. The algorithm succeeds iff both parity classes
/// clear 1/2 strictly from opposite sides; epsilon_star is the best margin.
SuccessReport evaluate_success(const QueryAlgorithm& alg);

/// Same report computed from an existing acceptance profile.
SuccessReport success_from_profile(std::size_t n,
                                   const std::vector<double>& profile);

/// Haar-random initial state and V_i, random projector of the given rank.
/// Pure function of (dims, queries, projector_rank, rng state).
QueryAlgorithm random_algorithm(const OracleDims& dims, std::size_t queries,
                                std::size_t projector_rank, Rng& rng);

}  // namespace parityq
