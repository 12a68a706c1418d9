#include "swrbd/exact.hpp"

namespace swrbd {

BigRat make_rat(BigInt num, BigInt den) {
  if (den == 0) throw ValidationError("rational with zero denominator");
  BigRat r(std::move(num), std::move(den));
  r.canonicalize();
  return r;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix::RatMatrix(const IntMatrix& m) : RatMatrix(m.rows(), m.cols()) {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = BigRat(m(i, j));
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

namespace {

void require_square(const IntMatrix& m, const char* op) {
  if (m.rows() != m.cols())
    throw DimensionError(std::string(op) + ": matrix is " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + ", expected square");
}

// Finds a row r >= k with a(r,k) != 0 and swaps it up. Returns false when the
// column is zero from row k down.
bool pivot_rows(IntMatrix& a, std::size_t k, int& sign) {
  std::size_t n = a.rows();
  std::size_t r = k;
  while (r < n && a(r, k) == 0) ++r;
  if (r == n) return false;
  if (r != k) {
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(k, j), a(r, j));
    sign = -sign;
  }
  return true;
}

}  // namespace

BigInt determinant(const IntMatrix& m) {
  require_square(m, "determinant");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  BigInt prev = 1;
  BigInt t, u;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (!pivot_rows(a, k, sign)) return 0;
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Bareiss step: every division here is exact.
        t = a(i, j) * a(k, k);
        u = a(i, k) * a(k, j);
        t -= u;
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = t;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  BigInt det = a(n - 1, n - 1);
  if (sign < 0) det = -det;
  return det;
}

RatVector solve(const IntMatrix& m, const IntVector& rhs) {
  require_square(m, "solve");
  const std::size_t n = m.rows();
  if (rhs.size() != n)
    throw DimensionError("solve: rhs has length " + std::to_string(rhs.size()) + ", expected " +
                         std::to_string(n));
  // Fraction-free forward elimination on [m | rhs], rational back substitution.
  IntMatrix a(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j);
    a(i, n) = rhs[i];
  }
  BigInt prev = 1;
  BigInt t, u;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (!pivot_rows(a, k, sign)) throw SingularMatrixError("solve: singular matrix");
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j <= n; ++j) {
        t = a(i, j) * a(k, k);
        u = a(i, k) * a(k, j);
        t -= u;
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = t;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  if (n > 0 && a(n - 1, n - 1) == 0) throw SingularMatrixError("solve: singular matrix");

  RatVector x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    BigRat sum(a(ii, n));
    for (std::size_t j = ii + 1; j < n; ++j) sum -= BigRat(a(ii, j)) * x[j];
    x[ii] = sum / BigRat(a(ii, ii));
  }
  return x;
}

RatMatrix invert(const IntMatrix& m) {
  require_square(m, "invert");
  const std::size_t n = m.rows();
  // Gauss-Jordan on [m | I] over the rationals.
  RatMatrix a(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = BigRat(m(i, j));
    a(i, n + i) = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t r = k;
    while (r < n && a(r, k) == 0) ++r;
    if (r == n) throw SingularMatrixError("invert: singular matrix");
    if (r != k)
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(a(k, j), a(r, j));
    BigRat pivot = a(k, k);
    for (std::size_t j = k; j < 2 * n; ++j) a(k, j) /= pivot;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      BigRat f = a(i, k);
      for (std::size_t j = k; j < 2 * n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = a(i, n + j);
  return inv;
}

IntVector mat_vec(const IntMatrix& m, const IntVector& v) {
  if (v.size() != m.cols())
    throw DimensionError("mat_vec: vector has length " + std::to_string(v.size()) +
                         ", expected " + std::to_string(m.cols()));
  IntVector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    BigInt acc = 0;
    for (std::size_t j = 0; j < m.cols(); ++j)
      mpz_addmul(acc.get_mpz_t(), m(i, j).get_mpz_t(), v[j].get_mpz_t());
    out[i] = acc;
  }
  return out;
}

RatVector mat_vec(const RatMatrix& m, const RatVector& v) {
  if (v.size() != m.cols())
    throw DimensionError("mat_vec: vector has length " + std::to_string(v.size()) +
                         ", expected " + std::to_string(m.cols()));
  RatVector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    BigRat acc = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) acc += m(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("mat_mul: inner dimensions differ");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        mpz_addmul(c(i, j).get_mpz_t(), a(i, k).get_mpz_t(), b(k, j).get_mpz_t());
    }
  return c;
}

BigInt dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
  BigInt acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    mpz_addmul(acc.get_mpz_t(), a[i].get_mpz_t(), b[i].get_mpz_t());
  return acc;
}

}  // namespace swrbd
