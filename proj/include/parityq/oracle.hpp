#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "parityq/numerics.hpp"

namespace parityq {

/// Hard cap on exhaustive sweeps over all 2^n sign functions.
inline constexpr std::size_t kEnumerationCap = 24;

/// A function {1..n} -> {-1,+1}, the object whose parity is sought.
struct SignFunction {
  std::vector<std::int8_t> values;  // entry x-1 holds f(x), each -1 or +1

  std::size_t n() const { return values.size(); }
  int value(std::size_t x) const { return values[x - 1]; }  // x is 1-based
};

/// Function for bitmask `mask`: bit (x-1) set  <=>  f(x) = -1.
SignFunction sign_function_from_mask(std::size_t n, std::uint32_t mask);
std::uint32_t mask_of(const SignFunction& f);

/// Product of all n values; -1 iff the number of -1 entries is odd.
int parity(const SignFunction& f);

/// Oracle-qubit basis tag: `sym` states pick up eigenvalue +1 under the
/// oracle, `anti` states pick up f(x). In the computational labeling the
/// same two slots hold r = +1 and r = -1.
enum class BasisTag : int { sym = 0, anti = 1 };

/// Shape of the Hilbert space with basis |x, q, w>: x in 1..n,
/// q in {sym, anti}, w in 1..work_dim. Total dimension 2*n*work_dim.
struct OracleDims {
  std::size_t n = 0;
  std::size_t work_dim = 1;

  std::size_t dim() const { return 2 * n * work_dim; }
};

/// Fixed linearization: index = ((w-1)*n + (x-1))*2 + tag.
std::size_t basis_index(const OracleDims& dims, std::size_t x, BasisTag q,
                        std::size_t w = 1);
/// Same slot addressed with the computational label r in {+1,-1}.
std::size_t basis_index_r(const OracleDims& dims, std::size_t x, int r,
                          std::size_t w = 1);

/// Permutation oracle in the computational labeling:
/// |x, r, w> -> |x, r*f(x), w>, identity on w.
Matrix oracle_computational(const SignFunction& f, const OracleDims& dims);

/// Diagonal oracle: eigenvalue f(x) on |x, anti, w>, +1 on |x, sym, w>.
Matrix oracle_phase(const SignFunction& f, const OracleDims& dims);

/// Unitary involution mapping the computational labels to sym/anti:
/// 1/sqrt(2) * [[1, 1], [1, -1]] on each qubit block, identity on x and w.
/// Conjugating oracle_computational by it gives oracle_phase.
Matrix basis_change(const OracleDims& dims);

/// All 2^n functions in ascending mask order. Throws above kEnumerationCap.
std::vector<SignFunction> enumerate_functions(std::size_t n);

/// Text form "+-+...": one character per point, x = 1 leftmost.
std::string encode(const SignFunction& f);
/// Inverse of encode. Throws std::invalid_argument with the 1-based position
/// of the first bad character, or on a length mismatch.
SignFunction decode(const std::string& text, std::size_t n);

}  // namespace parityq
