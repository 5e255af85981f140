#include "parityq/algorithm.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace parityq {

namespace {

// Entrywise multiplication by the diagonal oracle. Matches the dense
// oracle_phase matrix product exactly: the eigenvalues are +-1, so the only
// operations are sign flips.
void apply_phase_oracle_inplace(const SignFunction& f, const OracleDims& dims,
                                Vector& state) {
  for (std::size_t w = 1; w <= dims.work_dim; ++w) {
    for (std::size_t x = 1; x <= dims.n; ++x) {
      if (f.value(x) < 0) {
        Complex& amp = state[basis_index(dims, x, BasisTag::anti, w)];
        amp = -amp;
      }
    }
  }
}

}  // namespace

void validate_algorithm(const QueryAlgorithm& alg, double tol) {
  const std::size_t dim = alg.dims.dim();
  if (dim == 0) {
    throw std::invalid_argument("validate_algorithm: empty dimensions");
  }
  if (alg.initial_state.size() != dim) {
    throw std::invalid_argument("validate_algorithm: initial state has dim " +
                                std::to_string(alg.initial_state.size()) +
                                " but dims give " + std::to_string(dim));
  }
  if (std::abs(norm(alg.initial_state) - 1.0) > tol) {
    throw std::invalid_argument(
        "validate_algorithm: initial state is not normalized");
  }
  for (std::size_t i = 0; i < alg.unitaries.size(); ++i) {
    const Matrix& v = alg.unitaries[i];
    if (v.rows() != dim || v.cols() != dim) {
      throw std::invalid_argument("validate_algorithm: V_" +
                                  std::to_string(i + 1) + " is " +
                                  std::to_string(v.rows()) + "x" +
                                  std::to_string(v.cols()) + ", expected " +
                                  std::to_string(dim) + "x" +
                                  std::to_string(dim));
    }
    if (!is_unitary(v, tol)) {
      throw std::invalid_argument("validate_algorithm: V_" +
                                  std::to_string(i + 1) + " is not unitary");
    }
  }
  const Matrix& p = alg.projector;
  if (p.rows() != dim || p.cols() != dim) {
    throw std::invalid_argument("validate_algorithm: projector is " +
                                std::to_string(p.rows()) + "x" +
                                std::to_string(p.cols()) + ", expected " +
                                std::to_string(dim) + "x" +
                                std::to_string(dim));
  }
  if (max_abs_diff(p, adjoint(p)) > tol) {
    throw std::invalid_argument("validate_algorithm: projector not Hermitian");
  }
  if (max_abs_diff(multiply(p, p), p) > tol) {
    throw std::invalid_argument("validate_algorithm: projector not idempotent");
  }
}

Vector run(const QueryAlgorithm& alg, const SignFunction& f) {
  if (f.n() != alg.dims.n) {
    throw std::invalid_argument("run: function has n=" + std::to_string(f.n()) +
                                " but algorithm has n=" +
                                std::to_string(alg.dims.n));
  }
  Vector state = alg.initial_state;
  if (state.size() != alg.dims.dim()) {
    throw std::invalid_argument("run: initial state has dim " +
                                std::to_string(state.size()) +
                                " but dims give " +
                                std::to_string(alg.dims.dim()));
  }
  for (const Matrix& v : alg.unitaries) {
    apply_phase_oracle_inplace(f, alg.dims, state);
    state = apply(v, state);
  }
  return state;
}

double acceptance_probability(const QueryAlgorithm& alg,
                              const SignFunction& f) {
  const Vector psi = run(alg, f);
  const Complex value = inner(psi, apply(alg.projector, psi));
  if (std::abs(value.imag()) > 1e-10) {
    throw std::runtime_error(
        "acceptance_probability: <psi|P|psi> has imaginary part " +
        std::to_string(value.imag()) + "; projector is not Hermitian");
  }
  const double p = value.real();
  if (p < -kSweepTol || p > 1.0 + kSweepTol) {
    throw std::runtime_error("acceptance_probability: value " +
                             std::to_string(p) +
                             " outside [0,1] beyond round-off");
  }
  return std::min(1.0, std::max(0.0, p));
}

std::vector<double> acceptance_profile(const QueryAlgorithm& alg) {
  const std::size_t n = alg.dims.n;
  if (n > kEnumerationCap) {
    throw std::invalid_argument("acceptance_profile: n=" + std::to_string(n) +
                                " exceeds enumeration cap " +
                                std::to_string(kEnumerationCap));
  }
  std::vector<double> profile(std::size_t{1} << n);
  for (std::uint32_t mask = 0; mask < profile.size(); ++mask) {
    profile[mask] =
        acceptance_probability(alg, sign_function_from_mask(n, mask));
  }
  return profile;
}

SuccessReport success_from_profile(std::size_t n,
                                   const std::vector<double>& profile) {
  if (profile.size() != (std::size_t{1} << n)) {
    throw std::invalid_argument("success_from_profile: profile has " +
                                std::to_string(profile.size()) +
                                " entries, expected 2^" + std::to_string(n));
  }
  SuccessReport report;
  report.min_prob_even = 2.0;
  report.max_prob_odd = -1.0;
  for (std::uint32_t mask = 0; mask < profile.size(); ++mask) {
    const bool even = (std::popcount(mask) % 2) == 0;
    if (even) {
      report.min_prob_even = std::min(report.min_prob_even, profile[mask]);
    } else {
      report.max_prob_odd = std::max(report.max_prob_odd, profile[mask]);
    }
  }
  report.epsilon_star =
      std::min(report.min_prob_even - 0.5, 0.5 - report.max_prob_odd);
  report.successful = report.epsilon_star > 0.0;
  return report;
}

SuccessReport evaluate_success(const QueryAlgorithm& alg) {
  return success_from_profile(alg.dims.n, acceptance_profile(alg));
}

QueryAlgorithm random_algorithm(const OracleDims& dims, std::size_t queries,
                                std::size_t projector_rank, Rng& rng) {
  QueryAlgorithm alg;
  alg.dims = dims;
  const std::size_t dim = dims.dim();
  // Draw order is part of the determinism contract: state, V_1..V_k, projector.
  alg.initial_state = random_state(dim, rng);
  alg.unitaries.reserve(queries);
  for (std::size_t i = 0; i < queries; ++i) {
    alg.unitaries.push_back(haar_unitary(dim, rng));
  }
  alg.projector = random_projector(dim, projector_rank, rng);
  return alg;
}

}  // namespace parityq
