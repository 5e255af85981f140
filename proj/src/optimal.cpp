#include "parityq/optimal.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace parityq {

namespace {

// Shared skeleton for both constructions. `points` lists, in virtual order,
// the basis slots carrying the m points of the padded problem (m even). The
// initial state is uniform over them; V cycles each half 1..m/2 and
// m/2+1..m and fixes every other basis state; V_m/2 is the identity; the
// projector is the rank-one projector onto the initial state.
QueryAlgorithm build_cyclic(const OracleDims& dims,
                            const std::vector<std::size_t>& points) {
  const std::size_t m = points.size();
  const std::size_t dim = dims.dim();
  const std::size_t half = m / 2;

  QueryAlgorithm alg;
  alg.dims = dims;

  alg.initial_state.assign(dim, 0.0);
  const double amp = 1.0 / std::sqrt(static_cast<double>(m));
  for (std::size_t slot : points) alg.initial_state[slot] = amp;

  Matrix shift = Matrix::identity(dim);
  for (std::size_t j = 0; j < m; ++j) {
    const std::size_t next = (j < half) ? (j + 1) % half
                                        : half + (j + 1 - half) % half;
    shift(points[j], points[j]) = 0.0;
    shift(points[next], points[j]) = 1.0;
  }

  const std::size_t k = half;
  alg.unitaries.assign(k, shift);
  if (!alg.unitaries.empty()) alg.unitaries.back() = Matrix::identity(dim);

  alg.projector = outer(alg.initial_state, alg.initial_state);
  return alg;
}

}  // namespace

QueryAlgorithm build_even_optimal(std::size_t n) {
  if (n < 2 || n % 2 != 0) {
    throw std::invalid_argument("build_even_optimal: n=" + std::to_string(n) +
                                " must be even and >= 2; for odd n use "
                                "build_odd_optimal");
  }
  const OracleDims dims{n, 1};
  std::vector<std::size_t> points;
  points.reserve(n);
  for (std::size_t x = 1; x <= n; ++x) {
    points.push_back(basis_index(dims, x, BasisTag::anti));
  }
  return build_cyclic(dims, points);
}

QueryAlgorithm build_odd_optimal(std::size_t n) {
  if (n < 3 || n % 2 != 1) {
    throw std::invalid_argument("build_odd_optimal: n=" + std::to_string(n) +
                                " must be odd and >= 3; for even n use "
                                "build_even_optimal");
  }
  const OracleDims dims{n, 1};
  std::vector<std::size_t> points;
  points.reserve(n + 1);
  for (std::size_t x = 1; x <= n; ++x) {
    points.push_back(basis_index(dims, x, BasisTag::anti));
  }
  // The virtual (n+1)-th point: |1, sym> has oracle eigenvalue +1 for every f.
  points.push_back(basis_index(dims, 1, BasisTag::sym));
  return build_cyclic(dims, points);
}

QueryAlgorithm build_optimal(std::size_t n) {
  if (n < 2) {
    throw std::invalid_argument("build_optimal: n=" + std::to_string(n) +
                                " must be >= 2");
  }
  return (n % 2 == 0) ? build_even_optimal(n) : build_odd_optimal(n);
}

ExactnessReport verify_exactness(std::size_t n, double tol) {
  const QueryAlgorithm alg = build_optimal(n);
  const std::vector<double> profile = acceptance_profile(alg);

  ExactnessReport report;
  report.n = n;
  report.queries = alg.queries();
  for (std::uint32_t mask = 0; mask < profile.size(); ++mask) {
    const int par = parity(sign_function_from_mask(n, mask));
    const double indicator = par > 0 ? 1.0 : 0.0;
    report.worst_deviation =
        std::max(report.worst_deviation, std::abs(profile[mask] - indicator));
  }
  report.all_correct = report.worst_deviation <= tol;
  return report;
}

}  // namespace parityq
