#include "parityq/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace parityq {

namespace {

void check_dims_match(const SignFunction& f, const OracleDims& dims,
                      const char* who) {
  if (f.n() != dims.n) {
    throw std::invalid_argument(std::string(who) + ": function has n=" +
                                std::to_string(f.n()) + " but dims have n=" +
                                std::to_string(dims.n));
  }
  if (dims.n == 0 || dims.work_dim == 0) {
    throw std::invalid_argument(std::string(who) +
                                ": n and work_dim must be >= 1");
  }
}

}  // namespace

SignFunction sign_function_from_mask(std::size_t n, std::uint32_t mask) {
  SignFunction f;
  f.values.resize(n);
  for (std::size_t x = 1; x <= n; ++x) {
    f.values[x - 1] = (mask >> (x - 1)) & 1u ? -1 : +1;
  }
  return f;
}

std::uint32_t mask_of(const SignFunction& f) {
  std::uint32_t mask = 0;
  for (std::size_t x = 1; x <= f.n(); ++x) {
    if (f.value(x) < 0) mask |= (1u << (x - 1));
  }
  return mask;
}

int parity(const SignFunction& f) {
  int p = 1;
  for (std::int8_t v : f.values) p *= v;
  return p;
}

std::size_t basis_index(const OracleDims& dims, std::size_t x, BasisTag q,
                        std::size_t w) {
  return ((w - 1) * dims.n + (x - 1)) * 2 + static_cast<std::size_t>(q);
}

std::size_t basis_index_r(const OracleDims& dims, std::size_t x, int r,
                          std::size_t w) {
  return basis_index(dims, x, r == +1 ? BasisTag::sym : BasisTag::anti, w);
}

Matrix oracle_computational(const SignFunction& f, const OracleDims& dims) {
  check_dims_match(f, dims, "oracle_computational");
  Matrix m(dims.dim(), dims.dim());
  for (std::size_t w = 1; w <= dims.work_dim; ++w) {
    for (std::size_t x = 1; x <= dims.n; ++x) {
      for (int r : {+1, -1}) {
        const std::size_t from = basis_index_r(dims, x, r, w);
        const std::size_t to = basis_index_r(dims, x, r * f.value(x), w);
        m(to, from) = 1.0;
      }
    }
  }
  return m;
}

Matrix oracle_phase(const SignFunction& f, const OracleDims& dims) {
  check_dims_match(f, dims, "oracle_phase");
  Matrix m(dims.dim(), dims.dim());
  for (std::size_t w = 1; w <= dims.work_dim; ++w) {
    for (std::size_t x = 1; x <= dims.n; ++x) {
      m(basis_index(dims, x, BasisTag::sym, w),
        basis_index(dims, x, BasisTag::sym, w)) = 1.0;
      m(basis_index(dims, x, BasisTag::anti, w),
        basis_index(dims, x, BasisTag::anti, w)) = f.value(x);
    }
  }
  return m;
}

Matrix basis_change(const OracleDims& dims) {
  const double h = 1.0 / std::sqrt(2.0);
  Matrix m(dims.dim(), dims.dim());
  for (std::size_t w = 1; w <= dims.work_dim; ++w) {
    for (std::size_t x = 1; x <= dims.n; ++x) {
      const std::size_t i0 = basis_index(dims, x, BasisTag::sym, w);
      const std::size_t i1 = basis_index(dims, x, BasisTag::anti, w);
      m(i0, i0) = h;
      m(i0, i1) = h;
      m(i1, i0) = h;
      m(i1, i1) = -h;
    }
  }
  return m;
}

std::vector<SignFunction> enumerate_functions(std::size_t n) {
  if (n == 0 || n > kEnumerationCap) {
    throw std::invalid_argument("enumerate_functions: n=" + std::to_string(n) +
                                " outside [1, " +
                                std::to_string(kEnumerationCap) + "]");
  }
  std::vector<SignFunction> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    out.push_back(sign_function_from_mask(n, mask));
  }
  return out;
}

std::string encode(const SignFunction& f) {
  std::string s;
  s.reserve(f.n());
  for (std::int8_t v : f.values) s.push_back(v > 0 ? '+' : '-');
  return s;
}

SignFunction decode(const std::string& text, std::size_t n) {
  if (text.size() != n) {
    throw std::invalid_argument("decode: expected length " + std::to_string(n) +
                                " but got " + std::to_string(text.size()));
  }
  if (n == 0) {
    throw std::invalid_argument("decode: n must be >= 1");
  }
  SignFunction f;
  f.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (text[i] == '+') {
      f.values[i] = +1;
    } else if (text[i] == '-') {
      f.values[i] = -1;
    } else {
      throw std::invalid_argument(std::string("decode: invalid character '") +
                                  text[i] + "' at position " +
                                  std::to_string(i + 1));
    }
  }
  return f;
}

}  // namespace parityq
