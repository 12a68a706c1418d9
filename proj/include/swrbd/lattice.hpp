#pragma once

#include <utility>

#include "swrbd/exact.hpp"

namespace swrbd {

// Coefficient vector in the Poincare-dual basis of an intersection form.
using ClassVector = IntVector;
// Rational-coefficient variant, used for candidates before the integrality test.
using RationalClass = RatVector;

/// Symmetric nondegenerate integer pairing on H^2(X;Z), with its signature
/// computed exactly at construction (rational congruence diagonalization;
/// no floating point).
class IntersectionForm {
 public:
  explicit IntersectionForm(IntMatrix gram);

  std::size_t rank() const { return gram_.rows(); }
  const IntMatrix& gram() const { return gram_; }
  int b_plus() const { return b_plus_; }
  int b_minus() const { return b_minus_; }
  int signature() const { return b_plus_ - b_minus_; }

  bool operator==(const IntersectionForm& other) const { return gram_ == other.gram_; }

 private:
  IntMatrix gram_;
  int b_plus_ = 0;
  int b_minus_ = 0;
};

/// An embedded sphere class of negative self-intersection -p.
struct SphereClass {
  SphereClass(const IntersectionForm& form, ClassVector cls);

  ClassVector cls;
  long p;  // p = -(cls . cls) > 0

  bool operator==(const SphereClass& other) const { return cls == other.cls; }
};

/// v^T . gram . w
BigInt pairing(const IntersectionForm& form, const ClassVector& v, const ClassVector& w);
BigRat pairing(const IntersectionForm& form, const RationalClass& v, const ClassVector& w);

BigInt square(const IntersectionForm& form, const ClassVector& v);

/// True iff pairing(v, b) = pairing(b, b) mod 2 for every basis vector b.
bool is_characteristic(const IntersectionForm& form, const ClassVector& v);

/// 2*chi + 3*sigma of the closed simply-connected 4-manifold carrying the
/// form: 2*(2 + rank) + 3*(b_plus - b_minus).
BigInt derived_bound(const IntersectionForm& form);

/// Matrix whose row i is (gram . classes[i])^T, so that multiplying a class k
/// gives the evaluation vector (<k, classes[i]>)_i.
IntMatrix evaluation_matrix(const IntersectionForm& form, const std::vector<ClassVector>& classes);

}  // namespace swrbd
