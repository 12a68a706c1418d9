#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace swrbd {

// Exact scalars. Everything in this project is an integer or a reduced
// fraction; no floating point is used in any computation.
using BigInt = mpz_class;
using BigRat = mpq_class;

using IntVector = std::vector<BigInt>;
using RatVector = std::vector<BigRat>;

struct DimensionError : std::invalid_argument {
  explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

struct SingularMatrixError : std::runtime_error {
  explicit SingularMatrixError(const std::string& what) : std::runtime_error(what) {}
};

// Domain-level validation failure (bad form, bad chain, bad config, ...).
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Reduced fraction with positive denominator.
BigRat make_rat(BigInt num, BigInt den);

/// Dense row-major integer matrix. Dimensions are fixed at construction.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const IntMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<BigInt> data_;
};

/// Dense row-major rational matrix.
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  explicit RatMatrix(const IntMatrix& m);

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigRat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigRat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const RatMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<BigRat> data_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
BigInt determinant(const IntMatrix& m);

/// Exact rational solution of m,x = rhs for square invertible m.
RatVector solve(const IntMatrix& m, const IntVector& rhs);

/// Exact inverse of a square invertible integer matrix.
RatMatrix invert(const IntMatrix& m);

IntVector mat_vec(const IntMatrix& m, const IntVector& v);
RatVector mat_vec(const RatMatrix& m, const RatVector& v);
IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);

BigInt dot(const IntVector& a, const IntVector& b);

}  // namespace swrbd
