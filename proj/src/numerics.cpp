#include "parityq/numerics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace parityq {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) {
    throw std::invalid_argument("Rng::below: bound must be >= 1");
  }
  std::uniform_int_distribution<std::uint64_t> dist(0, bound - 1);
  return dist(engine_);
}

std::uint64_t Rng::derive(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 finalizer over the combined value
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Matrix Matrix::identity(std::size_t dim) {
  Matrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

Vector apply(const Matrix& m, const Vector& v) {
  if (m.cols() != v.size()) {
    throw std::invalid_argument("apply: matrix is " + std::to_string(m.rows()) +
                                "x" + std::to_string(m.cols()) +
                                " but vector has dim " +
                                std::to_string(v.size()));
  }
  Vector out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Complex acc = 0.0;
    for (std::size_t c = 0; c < m.cols(); ++c) acc += m(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument(
        "multiply: left matrix is " + std::to_string(a.rows()) + "x" +
        std::to_string(a.cols()) + " but right matrix is " +
        std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  Matrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex ark = a(r, k);
      if (ark == Complex{0.0, 0.0}) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) += ark * b(k, c);
    }
  }
  return out;
}

Matrix adjoint(const Matrix& m) {
  Matrix out(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      out(c, r) = std::conj(m(r, c));
  return out;
}

Matrix outer(const Vector& u, const Vector& v) {
  Matrix out(u.size(), v.size());
  for (std::size_t r = 0; r < u.size(); ++r)
    for (std::size_t c = 0; c < v.size(); ++c)
      out(r, c) = u[r] * std::conj(v[c]);
  return out;
}

Complex inner(const Vector& u, const Vector& v) {
  if (u.size() != v.size()) {
    throw std::invalid_argument("inner: vectors have dims " +
                                std::to_string(u.size()) + " and " +
                                std::to_string(v.size()));
  }
  Complex acc = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) acc += std::conj(u[i]) * v[i];
  return acc;
}

double norm(const Vector& v) {
  double acc = 0.0;
  for (const Complex& c : v) acc += std::norm(c);
  return std::sqrt(acc);
}

Vector normalized(Vector v) {
  const double n = norm(v);
  if (n == 0.0) {
    throw std::invalid_argument("normalized: zero vector");
  }
  for (Complex& c : v) c /= n;
  return v;
}

double max_abs(const Matrix& m) {
  double best = 0.0;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      best = std::max(best, std::abs(m(r, c)));
  return best;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("max_abs_diff: shapes " +
                                std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " vs " +
                                std::to_string(b.rows()) + "x" +
                                std::to_string(b.cols()));
  }
  double best = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      best = std::max(best, std::abs(a(r, c) - b(r, c)));
  return best;
}

double max_abs_diff(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("max_abs_diff: dims " +
                                std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()));
  }
  double best = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    best = std::max(best, std::abs(a[i] - b[i]));
  return best;
}

Complex trace(const Matrix& m) {
  Complex acc = 0.0;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) acc += m(i, i);
  return acc;
}

bool is_unitary(const Matrix& m, double tol) {
  if (!m.square()) {
    throw std::invalid_argument("is_unitary: matrix is " +
                                std::to_string(m.rows()) + "x" +
                                std::to_string(m.cols()) + ", not square");
  }
  const Matrix gram = multiply(adjoint(m), m);
  double worst = 0.0;
  for (std::size_t r = 0; r < gram.rows(); ++r) {
    for (std::size_t c = 0; c < gram.cols(); ++c) {
      const Complex expect = (r == c) ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
      worst = std::max(worst, std::abs(gram(r, c) - expect));
    }
  }
  return worst <= tol;
}

Matrix haar_unitary(std::size_t dim, Rng& rng) {
  if (dim == 0) {
    throw std::invalid_argument("haar_unitary: dim must be >= 1");
  }
  Matrix g(dim, dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) g(r, c) = rng.complex_normal();

  // Column-wise modified Gram-Schmidt with one re-orthogonalization pass;
  // at these dimensions that keeps orthogonality at machine precision.
  Matrix q(dim, dim);
  std::vector<Complex> col(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t r = 0; r < dim; ++r) col[r] = g(r, j);
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t i = 0; i < j; ++i) {
        Complex proj = 0.0;
        for (std::size_t r = 0; r < dim; ++r) proj += std::conj(q(r, i)) * col[r];
        for (std::size_t r = 0; r < dim; ++r) col[r] -= proj * q(r, i);
      }
    }
    double nrm = 0.0;
    for (std::size_t r = 0; r < dim; ++r) nrm += std::norm(col[r]);
    nrm = std::sqrt(nrm);
    for (std::size_t r = 0; r < dim; ++r) q(r, j) = col[r] / nrm;
  }
  return q;
}

Matrix random_projector(std::size_t dim, std::size_t rank, Rng& rng) {
  if (rank > dim) {
    throw std::invalid_argument("random_projector: rank " +
                                std::to_string(rank) + " out of range [0, " +
                                std::to_string(dim) + "]");
  }
  if (rank == 0) return Matrix(dim, dim);
  const Matrix u = haar_unitary(dim, rng);
  // P = U D U^dagger with D = diag(1 x rank, 0 otherwise)
  Matrix p(dim, dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) {
      Complex acc = 0.0;
      for (std::size_t l = 0; l < rank; ++l) acc += u(r, l) * std::conj(u(c, l));
      p(r, c) = acc;
    }
  return p;
}

Vector random_state(std::size_t dim, Rng& rng) {
  if (dim == 0) {
    throw std::invalid_argument("random_state: dim must be >= 1");
  }
  Vector v(dim);
  double nrm = 0.0;
  do {
    for (Complex& c : v) c = rng.complex_normal();
    nrm = norm(v);
  } while (nrm == 0.0);
  for (Complex& c : v) c /= nrm;
  return v;
}

}  // namespace parityq
