#pragma once

#include <vector>

#include "parityq/numerics.hpp"
#include "parityq/oracle.hpp"

namespace parityq {

/// A point (x, r) of the lifted domain: x in 1..n, r in {-1, +1}.
struct LiftedPoint {
  std::size_t x = 1;
  int r = +1;

  bool operator==(const LiftedPoint&) const = default;
};

/// The permutation g(x, r) = (x+1, r*f(x)) on the 2n lifted points, with
/// n+1 wrapping to 1. Its n-th iterate from (1, +1) lands on (1, par(f)),
/// which is what makes fast iterate-evaluation as hard as parity.
struct LiftedFunction {
  SignFunction f;

  std::size_t n() const { return f.n(); }
  LiftedPoint operator()(const LiftedPoint& p) const {
    return {p.x % n() + 1, p.r * f.value(p.x)};
  }
};

LiftedFunction lift(SignFunction f);

/// steps-fold composition of g; steps = 0 returns start. Throws if start is
/// outside the domain.
LiftedPoint classical_iterate(const LiftedFunction& g, LiftedPoint start,
                              std::size_t steps);

/// Linearization of the lifted domain: 2*(x-1) + (0 for r=+1, 1 for r=-1).
std::size_t point_index(std::size_t n, const LiftedPoint& p);

/// The 2n x 2n permutation matrix U with U|x,r> = |g(x,r)>.
Matrix permutation_oracle(const LiftedFunction& g);

/// The walk (1,+1), g(1,+1), ..., g^[n](1,+1): n+1 points.
std::vector<LiftedPoint> iteration_trace(const SignFunction& f);

struct ReductionReport {
  int parity_via_iteration = 0;  // final r of the n-step walk from (1, +1)
  int parity_direct = 0;         // product of the function values
  bool agree = false;
};

/// Computes the parity both ways; agree is always true.
ReductionReport reduction_demo(const SignFunction& f);

}  // namespace parityq
