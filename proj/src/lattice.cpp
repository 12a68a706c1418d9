#include "swrbd/lattice.hpp"

namespace swrbd {

namespace {

// Exact signature of a symmetric rational matrix by congruence
// diagonalization (Schur complements with symmetric pivot repair).
// Throws on a degenerate form.
std::pair<int, int> exact_signature(const IntMatrix& gram) {
  const std::size_t n = gram.rows();
  RatMatrix a(gram);
  int plus = 0, minus = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      // Congruence by adding (or subtracting) another row/column makes the
      // diagonal entry nonzero: one of a(k,k) +- 2a(k,j) + a(j,j) is nonzero
      // whenever a(k,j) != 0.
      std::size_t j = k + 1;
      while (j < n && a(k, j) == 0) ++j;
      if (j == n) throw ValidationError("intersection form is degenerate");
      const BigRat with_plus = 2 * a(k, j) + a(j, j);
      const int sgn = (with_plus != 0) ? 1 : -1;
      for (std::size_t l = k; l < n; ++l) a(k, l) += sgn * a(j, l);
      for (std::size_t l = k; l < n; ++l) a(l, k) += sgn * a(l, j);
    }
    const BigRat pivot = a(k, k);
    if (pivot > 0)
      ++plus;
    else
      ++minus;
    // Schur complement of the pivot; stays symmetric.
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      const BigRat f = a(i, k) / pivot;
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
      a(i, k) = 0;
    }
    for (std::size_t j = k + 1; j < n; ++j) a(k, j) = 0;
  }
  return {plus, minus};
}

}  // namespace

IntersectionForm::IntersectionForm(IntMatrix gram) : gram_(std::move(gram)) {
  if (gram_.rows() != gram_.cols())
    throw DimensionError("intersection form: gram matrix must be square");
  for (std::size_t i = 0; i < gram_.rows(); ++i)
    for (std::size_t j = i + 1; j < gram_.cols(); ++j)
      if (gram_(i, j) != gram_(j, i))
        throw ValidationError("intersection form: gram matrix is not symmetric at (" +
                              std::to_string(i) + "," + std::to_string(j) + ")");
  auto [plus, minus] = exact_signature(gram_);
  b_plus_ = plus;
  b_minus_ = minus;
}

SphereClass::SphereClass(const IntersectionForm& form, ClassVector cls_in)
    : cls(std::move(cls_in)) {
  BigInt sq = square(form, cls);
  if (sq >= 0)
    throw ValidationError("sphere class must have negative self-intersection, got " +
                          sq.get_str());
  BigInt minus_sq = -sq;
  if (!minus_sq.fits_slong_p())
    throw ValidationError("sphere self-intersection out of supported range");
  p = minus_sq.get_si();
}

BigInt pairing(const IntersectionForm& form, const ClassVector& v, const ClassVector& w) {
  const std::size_t n = form.rank();
  if (v.size() != n || w.size() != n)
    throw DimensionError("pairing: class length does not match form rank " + std::to_string(n));
  const IntMatrix& g = form.gram();
  BigInt acc = 0;
  BigInt row;
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i] == 0) continue;
    row = 0;
    for (std::size_t j = 0; j < n; ++j)
      mpz_addmul(row.get_mpz_t(), g(i, j).get_mpz_t(), w[j].get_mpz_t());
    mpz_addmul(acc.get_mpz_t(), v[i].get_mpz_t(), row.get_mpz_t());
  }
  return acc;
}

BigRat pairing(const IntersectionForm& form, const RationalClass& v, const ClassVector& w) {
  const std::size_t n = form.rank();
  if (v.size() != n || w.size() != n)
    throw DimensionError("pairing: class length does not match form rank " + std::to_string(n));
  const IntMatrix& g = form.gram();
  BigRat acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i] == 0) continue;
    BigInt row = 0;
    for (std::size_t j = 0; j < n; ++j)
      mpz_addmul(row.get_mpz_t(), g(i, j).get_mpz_t(), w[j].get_mpz_t());
    acc += v[i] * BigRat(row);
  }
  return acc;
}

BigInt square(const IntersectionForm& form, const ClassVector& v) {
  return pairing(form, v, v);
}

bool is_characteristic(const IntersectionForm& form, const ClassVector& v) {
  const std::size_t n = form.rank();
  if (v.size() != n)
    throw DimensionError("is_characteristic: class length does not match form rank");
  IntVector gv = mat_vec(form.gram(), v);
  BigInt t;
  for (std::size_t j = 0; j < n; ++j) {
    t = gv[j] - form.gram()(j, j);
    if (mpz_odd_p(t.get_mpz_t())) return false;
  }
  return true;
}

BigInt derived_bound(const IntersectionForm& form) {
  return BigInt(2 * (2 + static_cast<long>(form.rank())) + 3 * (form.b_plus() - form.b_minus()));
}

IntMatrix evaluation_matrix(const IntersectionForm& form,
                            const std::vector<ClassVector>& classes) {
  const std::size_t n = form.rank();
  if (classes.size() != n)
    throw DimensionError("evaluation_matrix: expected " + std::to_string(n) + " classes, got " +
                         std::to_string(classes.size()));
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    IntVector gc = mat_vec(form.gram(), classes[i]);
    for (std::size_t j = 0; j < n; ++j) m(i, j) = gc[j];
  }
  return m;
}

}  // namespace swrbd
