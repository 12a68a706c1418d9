#pragma once

#include "swrbd/lattice.hpp"

namespace swrbd {

// Evaluations of a characteristic vector on the chain spheres, ordered along
// the chain starting from the heavy (-4-p) sphere.
using ExtensionTuple = IntVector;

/// The rational blow-down configuration C_p: a linear chain of p+1 spheres
/// with squares (-4-p, -2, ..., -2), together with the admissible extension
/// tuples of characteristic vectors over the configuration.
///
/// Chain classes are stored in the order they were supplied. The chain
/// adjacency need not follow that order; chain_order() maps positions along
/// the chain (heavy sphere first) to supplied indices, and extension tuple
/// entries follow the chain order. Every stored tuple e satisfies the
/// extension checksum e^T (chain gram)^{-1} e = -(p+1); the chain lattice is
/// negative definite, so this square is negative.
class BlowdownChain {
 public:
  BlowdownChain(const IntersectionForm& ambient, std::vector<ClassVector> classes,
                std::vector<ExtensionTuple> extension_tuples);

  long p() const { return p_; }
  const std::vector<ClassVector>& classes() const { return classes_; }
  const IntMatrix& chain_gram() const { return chain_gram_; }
  const std::vector<ExtensionTuple>& extension_tuples() const { return extension_tuples_; }
  /// chain_order()[j] = supplied index of the j-th sphere along the chain.
  const std::vector<std::size_t>& chain_order() const { return chain_order_; }
  const RatMatrix& chain_gram_inverse() const { return chain_gram_inv_; }

  bool operator==(const BlowdownChain& other) const {
    return classes_ == other.classes_ && extension_tuples_ == other.extension_tuples_;
  }

 private:
  long p_ = 0;
  std::vector<ClassVector> classes_;
  IntMatrix chain_gram_;
  RatMatrix chain_gram_inv_;
  std::vector<std::size_t> chain_order_;
  std::vector<ExtensionTuple> extension_tuples_;
};

/// e^T (chain gram)^{-1} e for a tuple of chain evaluations (chain order).
BigRat k0_square(const BlowdownChain& chain, const ExtensionTuple& e);

/// Evaluations <v, R_j> along the chain (heavy sphere first).
ExtensionTuple chain_evaluations(const BlowdownChain& chain, const IntersectionForm& form,
                                 const ClassVector& v);

/// Self-intersection of the class induced by v in the blown-down manifold:
/// square(v) minus the square of its chain component.
BigRat blown_down_square(const BlowdownChain& chain, const IntersectionForm& form,
                         const ClassVector& v);

/// 2*chi + 3*sigma of the blown-down manifold: derived_bound(form) + p + 1.
BigInt blown_down_bound(const BlowdownChain& chain, const IntersectionForm& form);

/// (blown_down_square(v) - blown_down_bound) / 4.
BigRat formal_dimension(const BlowdownChain& chain, const IntersectionForm& form,
                        const ClassVector& v);

}  // namespace swrbd
