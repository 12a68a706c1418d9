#pragma once

#include <cstdint>
#include <string>

#include "swrbd/blowdown.hpp"

namespace swrbd {

/// One complete enumeration instance: the ambient form, the blow-down chain,
/// the adjunctive sphere set, and the chamber vectors H and H'. All cross
/// invariants (orthogonality, positivity, basis invertibility) are checked at
/// construction; a constructed config is always valid.
class SearchConfig {
 public:
  SearchConfig(std::string label, IntMatrix gram, std::vector<ClassVector> chain_classes,
               std::vector<ExtensionTuple> extension_tuples, std::vector<ClassVector> spheres,
               ClassVector h, ClassVector h_prime);

  const std::string& label() const { return label_; }
  const IntersectionForm& form() const { return form_; }
  const BlowdownChain& chain() const { return chain_; }
  const std::vector<SphereClass>& spheres() const { return spheres_; }
  const ClassVector& H() const { return h_; }
  const ClassVector& Hprime() const { return h_prime_; }

  /// Rows: chain classes (supplied order), then spheres.
  const IntMatrix& basis_evaluation_matrix() const { return eval_matrix_; }
  const BigInt& basis_determinant() const { return eval_det_; }

  bool operator==(const SearchConfig& other) const;

 private:
  std::string label_;
  IntersectionForm form_;
  BlowdownChain chain_;
  std::vector<SphereClass> spheres_;
  ClassVector h_;
  ClassVector h_prime_;
  IntMatrix eval_matrix_;
  BigInt eval_det_;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// The full config invariant checklist (re-run on an already validated config;
/// used by the `verify` command to print one line per check).
std::vector<CheckResult> check_config(const SearchConfig& config);

/// Counts after each filter stage plus the surviving basic classes.
struct StageReport {
  std::uint64_t count_candidates = 0;     // full tuple x adjunctive grid
  std::uint64_t count_characteristic = 0; // integral and characteristic
  std::uint64_t count_dimension = 0;      // ambient square >= 2*chi + 3*sigma
  std::uint64_t count_basic = 0;          // opposite strict signs against H, H'
  std::vector<ClassVector> basic_classes; // sorted lexicographically
  std::uint64_t zero_pairing_diagnostics = 0; // sign-stage entrants with a zero pairing
  bool lemma_verified = false;
  bool minimal = false;

  bool operator==(const StageReport& other) const = default;
};

/// Admissible evaluations on a sphere of square -p: {-p, -p+2, ..., p}.
std::vector<BigInt> adjunctive_range(const SphereClass& s);

/// The unique rational class with the given chain evaluations (chain order)
/// and sphere evaluations.
RationalClass solve_candidate(const SearchConfig& config, const ExtensionTuple& tuple,
                              const IntVector& sphere_evals);

/// Runs the staged filter over every extension tuple and every adjunctive
/// evaluation grid point. Output is identical for any worker count.
StageReport run_pipeline(const SearchConfig& config, unsigned threads = 1);

/// True iff every surviving basic class has formal dimension zero; stores the
/// verdict in the report.
bool verify_lemma_hypothesis(const SearchConfig& config, StageReport& report);

/// True iff no pair of distinct basic classes differs by a class of
/// blown-down square -4 (the blow-up pairing obstruction). Requires
/// report.lemma_verified; stores the verdict in the report.
bool check_minimality(const SearchConfig& config, StageReport& report);

}  // namespace swrbd
