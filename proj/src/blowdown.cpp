#include "swrbd/blowdown.hpp"

#include <algorithm>

namespace swrbd {

namespace {

// Quadratic form e_listed^T inv e_listed, with e given in chain order.
BigRat chain_inverse_form(const RatMatrix& inv, const std::vector<std::size_t>& order,
                          const ExtensionTuple& e) {
  const std::size_t n = inv.rows();
  RatVector e_listed(n, BigRat(0));
  for (std::size_t j = 0; j < n; ++j) e_listed[order[j]] = BigRat(e[j]);
  RatVector x = mat_vec(inv, e_listed);
  BigRat acc = 0;
  for (std::size_t i = 0; i < n; ++i) acc += e_listed[i] * x[i];
  return acc;
}

}  // namespace

BlowdownChain::BlowdownChain(const IntersectionForm& ambient, std::vector<ClassVector> classes,
                             std::vector<ExtensionTuple> extension_tuples)
    : classes_(std::move(classes)), extension_tuples_(std::move(extension_tuples)) {
  if (classes_.empty()) throw ValidationError("blow-down chain: no chain classes given");
  const std::size_t count = classes_.size();
  p_ = static_cast<long>(count) - 1;

  chain_gram_ = IntMatrix(count, count);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = i; j < count; ++j) {
      BigInt v = pairing(ambient, classes_[i], classes_[j]);
      chain_gram_(i, j) = v;
      chain_gram_(j, i) = v;
    }

  // Squares: exactly one -4-p, the rest -2.
  const BigInt heavy_square = -4 - p_;
  std::size_t heavy = count;
  for (std::size_t i = 0; i < count; ++i) {
    const BigInt& d = chain_gram_(i, i);
    if (d == heavy_square && heavy == count) {
      heavy = i;
    } else if (p_ > 0 && d == -2) {
      // ok (for p = 0 the single sphere is the heavy one, square -4)
    } else {
      throw ValidationError("blow-down chain: class R" + std::to_string(i) +
                            " has square " + d.get_str() + ", expected " +
                            heavy_square.get_str() + " (once) or -2");
    }
  }
  if (heavy == count)
    throw ValidationError("blow-down chain: no class of square " + heavy_square.get_str());

  // Adjacency: off-diagonal entries in {0,1}, forming a path with the heavy
  // sphere at one end.
  std::vector<std::vector<std::size_t>> adj(count);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = i + 1; j < count; ++j) {
      const BigInt& v = chain_gram_(i, j);
      if (v == 0) continue;
      if (v != 1)
        throw ValidationError("blow-down chain: R" + std::to_string(i) + ".R" +
                              std::to_string(j) + " = " + v.get_str() + ", expected 0 or 1");
      adj[i].push_back(j);
      adj[j].push_back(i);
    }
  if (p_ > 0 && adj[heavy].size() != 1)
    throw ValidationError("blow-down chain: heavy sphere is not an end of the chain");
  chain_order_.clear();
  chain_order_.push_back(heavy);
  std::size_t prev = count, cur = heavy;
  while (chain_order_.size() < count) {
    std::size_t next = count;
    for (std::size_t nb : adj[cur]) {
      if (nb == prev) continue;
      if (next != count)
        throw ValidationError("blow-down chain: configuration is not a linear chain");
      next = nb;
    }
    if (next == count)
      throw ValidationError("blow-down chain: configuration is not connected");
    chain_order_.push_back(next);
    prev = cur;
    cur = next;
  }

  // Negative definite.
  if (determinant(chain_gram_) == 0)
    throw ValidationError("blow-down chain: gram matrix is degenerate");
  IntersectionForm chain_form(chain_gram_);
  if (chain_form.b_plus() != 0)
    throw ValidationError("blow-down chain: gram matrix is not negative definite");

  chain_gram_inv_ = invert(chain_gram_);

  // Extension tuples: length, characteristic parity against the chain
  // squares, and the extension checksum.
  const BigRat expected(-(p_ + 1));
  for (std::size_t t = 0; t < extension_tuples_.size(); ++t) {
    const ExtensionTuple& e = extension_tuples_[t];
    if (e.size() != count)
      throw DimensionError("extension tuple " + std::to_string(t) + " has length " +
                           std::to_string(e.size()) + ", expected " + std::to_string(count));
    for (std::size_t j = 0; j < count; ++j) {
      BigInt diff = e[j] - chain_gram_(chain_order_[j], chain_order_[j]);
      if (mpz_odd_p(diff.get_mpz_t()))
        throw ValidationError("extension tuple " + std::to_string(t) + " entry " +
                              std::to_string(j) + " fails the characteristic parity");
    }
    BigRat k0 = chain_inverse_form(chain_gram_inv_, chain_order_, e);
    if (k0 != expected)
      throw ValidationError("extension tuple " + std::to_string(t) +
                            " fails the checksum: K0^2 = " + k0.get_str() + ", expected " +
                            expected.get_str());
  }
}

BigRat k0_square(const BlowdownChain& chain, const ExtensionTuple& e) {
  if (e.size() != chain.classes().size())
    throw DimensionError("k0_square: tuple has length " + std::to_string(e.size()) +
                         ", expected " + std::to_string(chain.classes().size()));
  return chain_inverse_form(chain.chain_gram_inverse(), chain.chain_order(), e);
}

ExtensionTuple chain_evaluations(const BlowdownChain& chain, const IntersectionForm& form,
                                 const ClassVector& v) {
  ExtensionTuple e(chain.classes().size());
  for (std::size_t j = 0; j < e.size(); ++j)
    e[j] = pairing(form, v, chain.classes()[chain.chain_order()[j]]);
  return e;
}

BigRat blown_down_square(const BlowdownChain& chain, const IntersectionForm& form,
                         const ClassVector& v) {
  ExtensionTuple e = chain_evaluations(chain, form, v);
  return BigRat(square(form, v)) - k0_square(chain, e);
}

BigInt blown_down_bound(const BlowdownChain& chain, const IntersectionForm& form) {
  return derived_bound(form) + (chain.p() + 1);
}

BigRat formal_dimension(const BlowdownChain& chain, const IntersectionForm& form,
                        const ClassVector& v) {
  BigRat num = blown_down_square(chain, form, v) - BigRat(blown_down_bound(chain, form));
  return num / 4;
}

}  // namespace swrbd
