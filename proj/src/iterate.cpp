#include "parityq/iterate.hpp"

#include <stdexcept>
#include <string>

namespace parityq {

namespace {

void check_point(const LiftedFunction& g, const LiftedPoint& p,
                 const char* who) {
  if (p.x < 1 || p.x > g.n() || (p.r != +1 && p.r != -1)) {
    throw std::invalid_argument(std::string(who) + ": point (x=" +
                                std::to_string(p.x) + ", r=" +
                                std::to_string(p.r) +
                                ") outside the lifted domain of size 2*" +
                                std::to_string(g.n()));
  }
}

}  // namespace

LiftedFunction lift(SignFunction f) {
  if (f.n() == 0) {
    throw std::invalid_argument("lift: function must have n >= 1");
  }
  return LiftedFunction{std::move(f)};
}

LiftedPoint classical_iterate(const LiftedFunction& g, LiftedPoint start,
                              std::size_t steps) {
  check_point(g, start, "classical_iterate");
  LiftedPoint p = start;
  for (std::size_t i = 0; i < steps; ++i) p = g(p);
  return p;
}

std::size_t point_index(std::size_t n, const LiftedPoint& p) {
  if (p.x < 1 || p.x > n || (p.r != +1 && p.r != -1)) {
    throw std::invalid_argument("point_index: point (x=" + std::to_string(p.x) +
                                ", r=" + std::to_string(p.r) +
                                ") outside the lifted domain of size 2*" +
                                std::to_string(n));
  }
  return 2 * (p.x - 1) + (p.r == +1 ? 0 : 1);
}

Matrix permutation_oracle(const LiftedFunction& g) {
  const std::size_t n = g.n();
  Matrix m(2 * n, 2 * n);
  for (std::size_t x = 1; x <= n; ++x) {
    for (int r : {+1, -1}) {
      const LiftedPoint from{x, r};
      m(point_index(n, g(from)), point_index(n, from)) = 1.0;
    }
  }
  return m;
}

std::vector<LiftedPoint> iteration_trace(const SignFunction& f) {
  const LiftedFunction g = lift(f);
  std::vector<LiftedPoint> trace;
  trace.reserve(g.n() + 1);
  trace.push_back({1, +1});
  for (std::size_t i = 0; i < g.n(); ++i) trace.push_back(g(trace.back()));
  return trace;
}

ReductionReport reduction_demo(const SignFunction& f) {
  if (f.n() > kEnumerationCap) {
    throw std::invalid_argument("reduction_demo: n=" + std::to_string(f.n()) +
                                " exceeds enumeration cap " +
                                std::to_string(kEnumerationCap));
  }
  const LiftedFunction g = lift(f);
  const LiftedPoint end = classical_iterate(g, {1, +1}, g.n());

  ReductionReport report;
  report.parity_via_iteration = end.r;
  report.parity_direct = parity(f);
  report.agree = end.x == 1 && report.parity_via_iteration == report.parity_direct;
  return report;
}

}  // namespace parityq
