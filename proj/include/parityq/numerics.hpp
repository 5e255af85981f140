#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace parityq {

using Complex = std::complex<double>;
using Vector = std::vector<Complex>;

/// Default tolerance for structural checks (unitarity, idempotence, exactness).
inline constexpr double kStructuralTol = 1e-10;
/// Default tolerance for accumulated sums over function sweeps.
inline constexpr double kSweepTol = 1e-9;

/// Seeded deterministic generator: the same seed always reproduces the same
/// draw sequence. Not copyable, so a draw stream cannot fork silently; use
/// derive() to split independent per-trial streams from one seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  Rng(const Rng&) = delete;
  Rng& operator=(const Rng&) = delete;
  Rng(Rng&&) = default;
  Rng& operator=(Rng&&) = default;

  std::uint64_t seed() const { return seed_; }

  /// Standard normal draw.
  double normal() { return normal_(engine_); }

  /// Complex draw with independent standard-normal real and imaginary parts.
  Complex complex_normal() {
    const double re = normal();
    const double im = normal();
    return {re, im};
  }

  /// Uniform integer in [0, bound); bound must be >= 1.
  std::uint64_t below(std::uint64_t bound);

  /// Seed for an independent substream (splitmix64 of seed and stream index).
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

/// Dense row-major complex matrix. Dimensions in this project stay tiny
/// (<= ~64), so storage is always dense and algorithms are the direct ones.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t dim);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

/// m * v. Throws std::invalid_argument naming both dimensions on mismatch.
Vector apply(const Matrix& m, const Vector& v);

/// Non-const lvalue overload: keeps unqualified calls from drifting to
/// std::apply through argument-dependent lookup on std::vector.
inline Vector apply(const Matrix& m, Vector& v) {
  return apply(m, static_cast<const Vector&>(v));
}

/// a * b. Throws std::invalid_argument on inner-dimension mismatch.
Matrix multiply(const Matrix& a, const Matrix& b);

/// Conjugate transpose.
Matrix adjoint(const Matrix& m);

/// Rank-one matrix |u><v|.
Matrix outer(const Vector& u, const Vector& v);

/// <u|v>, conjugate-linear in the first argument.
Complex inner(const Vector& u, const Vector& v);

double norm(const Vector& v);
Vector normalized(Vector v);

double max_abs(const Matrix& m);
double max_abs_diff(const Matrix& a, const Matrix& b);
double max_abs_diff(const Vector& a, const Vector& b);
Complex trace(const Matrix& m);

/// True iff max-abs entry of (m^dagger m - I) is <= tol. Throws on non-square input.
bool is_unitary(const Matrix& m, double tol);

/// Haar-distributed random unitary. Sampled as the Q factor of a complex
/// standard-Gaussian matrix; Gram-Schmidt with positive normalizers yields
/// the QR factorization whose R diagonal is real positive, which is the
/// phase convention that makes Q exactly Haar.
Matrix haar_unitary(std::size_t dim, Rng& rng);

/// Hermitian idempotent of the given rank: U D U^dagger with D a 0/1 diagonal
/// and U Haar-random. Throws std::invalid_argument if rank > dim.
Matrix random_projector(std::size_t dim, std::size_t rank, Rng& rng);

/// Unit-norm vector with Haar-uniform direction.
Vector random_state(std::size_t dim, Rng& rng);

}  // namespace parityq
