#include "parityq/optimal.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace parityq;

namespace {

// Independent check that an algorithm classifies parity exactly.
void check_exact_classifier(const QueryAlgorithm& alg, std::size_t n,
                            double tol) {
  for (const SignFunction& f : enumerate_functions(n)) {
    const double expected = parity(f) > 0 ? 1.0 : 0.0;
    CHECK(std::abs(acceptance_probability(alg, f) - expected) <= tol);
  }
}

}  // namespace

TEST_CASE("build_even_optimal: n=2 is the single-query algorithm") {
  const QueryAlgorithm alg = build_even_optimal(2);
  CHECK(alg.queries() == 1);
  CHECK(max_abs_diff(alg.unitaries[0], Matrix::identity(4)) == 0.0);
  check_exact_classifier(alg, 2, 1e-12);
}

TEST_CASE("build_even_optimal: rejects odd n and points at the odd builder") {
  CHECK_THROWS_WITH_AS(build_even_optimal(5),
                       "build_even_optimal: n=5 must be even and >= 2; for "
                       "odd n use build_odd_optimal",
                       std::invalid_argument);
  CHECK_THROWS_AS(build_even_optimal(0), std::invalid_argument);
}

TEST_CASE("build_even_optimal: n=4 separates the parities exactly") {
  const QueryAlgorithm alg = build_even_optimal(4);
  CHECK(alg.queries() == 2);
  check_exact_classifier(alg, 4, 1e-10);

  const SuccessReport report = evaluate_success(alg);
  CHECK(report.successful);
  CHECK(report.epsilon_star == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("build_even_optimal: structural invariants") {
  for (std::size_t n : {4, 6, 8}) {
    const QueryAlgorithm alg = build_even_optimal(n);
    CHECK(alg.queries() == n / 2);
    validate_algorithm(alg);

    // The interleaved shift is a permutation whose (n/2)-th power is the
    // identity: each half of the anti states is one cycle of length n/2.
    const Matrix& shift = alg.unitaries[0];
    for (std::size_t r = 0; r < shift.rows(); ++r) {
      for (std::size_t c = 0; c < shift.cols(); ++c) {
        const double entry = shift(r, c).real();
        CHECK(shift(r, c).imag() == 0.0);
        CHECK((entry == 0.0 || entry == 1.0));
      }
    }
    Matrix power = Matrix::identity(alg.dims.dim());
    for (std::size_t i = 0; i < n / 2; ++i) power = multiply(shift, power);
    CHECK(max_abs_diff(power, Matrix::identity(alg.dims.dim())) == 0.0);
  }
}

TEST_CASE("build_odd_optimal: n=3 with two queries") {
  const QueryAlgorithm alg = build_odd_optimal(3);
  CHECK(alg.queries() == 2);
  validate_algorithm(alg);
  check_exact_classifier(alg, 3, 1e-10);
}

TEST_CASE("build_odd_optimal: n=5 with three queries") {
  const QueryAlgorithm alg = build_odd_optimal(5);
  CHECK(alg.queries() == 3);
  check_exact_classifier(alg, 5, 1e-10);
}

TEST_CASE("build_odd_optimal: rejects even n") {
  CHECK_THROWS_AS(build_odd_optimal(4), std::invalid_argument);
  CHECK_THROWS_AS(build_odd_optimal(1), std::invalid_argument);
}

TEST_CASE("verify_exactness") {
  const ExactnessReport two = verify_exactness(2);
  CHECK(two.all_correct);
  CHECK(two.queries == 1);

  const ExactnessReport seven = verify_exactness(7);
  CHECK(seven.all_correct);
  CHECK(seven.queries == 4);

  const ExactnessReport eight = verify_exactness(8);
  CHECK(eight.all_correct);
  CHECK(eight.queries == 4);
  CHECK(eight.worst_deviation <= 1e-10);
}

TEST_CASE("build_optimal dispatches on the parity of n") {
  CHECK(build_optimal(6).queries() == 3);
  CHECK(build_optimal(7).queries() == 4);
  CHECK_THROWS_AS(build_optimal(1), std::invalid_argument);
}
