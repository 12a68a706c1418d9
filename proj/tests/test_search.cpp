#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "swrbd/presets.hpp"
#include "synthetic.hpp"

using namespace swrbd;
using swrbd_test::synthetic_config;

namespace {

ClassVector canonical_class(std::size_t rank) {
  ClassVector k(rank, BigInt(1));
  k[0] = -2;
  k[1] = -2;
  return k;
}

ClassVector negate(const ClassVector& v) {
  ClassVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

}  // namespace

TEST_CASE("adjunctive ranges") {
  IntersectionForm form(swrbd_test::synthetic_gram());
  SphereClass p2(form, ClassVector{BigInt(0), BigInt(0), BigInt(1), BigInt(-1)});
  CHECK(adjunctive_range(p2) == std::vector<BigInt>{BigInt(-2), BigInt(0), BigInt(2)});
  SphereClass p1(form, ClassVector{BigInt(0), BigInt(1), BigInt(-1), BigInt(0)});
  CHECK(adjunctive_range(p1) == std::vector<BigInt>{BigInt(-1), BigInt(1)});

  SearchConfig p = load_preset("park-p");
  CHECK(adjunctive_range(p.spheres()[6]).size() == 10);  // S7, square -9
}

TEST_CASE("solve_candidate recovers the canonical class of park-p") {
  SearchConfig p = load_preset("park-p");
  ClassVector k = canonical_class(14);

  // oracle first: the canonical class evaluates on the spheres by direct
  // pairing as (0, 0, 0, 0, 0, -1, -1, 0)
  IntVector s_evals;
  for (const SphereClass& s : p.spheres()) s_evals.push_back(pairing(p.form(), k, s.cls));
  CHECK(s_evals == IntVector{BigInt(0), BigInt(0), BigInt(0), BigInt(0), BigInt(0),
                             BigInt(-1), BigInt(-1), BigInt(0)});

  ExtensionTuple e{BigInt(7), BigInt(0), BigInt(0), BigInt(0), BigInt(0), BigInt(0)};
  CHECK(chain_evaluations(p.chain(), p.form(), k) == e);

  RationalClass x = solve_candidate(p, e, s_evals);
  REQUIRE(x.size() == 14);
  for (std::size_t i = 0; i < 14; ++i) CHECK(x[i] == BigRat(k[i]));

  // re-pair the output against every basis class
  for (std::size_t j = 0; j < 6; ++j)
    CHECK(pairing(p.form(), x, p.chain().classes()[p.chain().chain_order()[j]]) == BigRat(e[j]));
  for (std::size_t s = 0; s < 8; ++s)
    CHECK(pairing(p.form(), x, p.spheres()[s].cls) == BigRat(s_evals[s]));
}

TEST_CASE("solve_candidate recovers the canonical class of park-q") {
  SearchConfig q = load_preset("park-q");
  ClassVector k = canonical_class(13);

  IntVector s_evals;
  for (const SphereClass& s : q.spheres()) s_evals.push_back(pairing(q.form(), k, s.cls));
  CHECK(s_evals == IntVector{BigInt(0), BigInt(0), BigInt(0), BigInt(0), BigInt(0),
                             BigInt(0), BigInt(0), BigInt(1), BigInt(1)});

  ExtensionTuple e{BigInt(5), BigInt(0), BigInt(0), BigInt(0)};
  CHECK(chain_evaluations(q.chain(), q.form(), k) == e);

  RationalClass x = solve_candidate(q, e, s_evals);
  for (std::size_t i = 0; i < 13; ++i) CHECK(x[i] == BigRat(k[i]));
}

TEST_CASE("solve_candidate is linear: zero evaluations give the zero class") {
  SearchConfig synth = synthetic_config();
  RationalClass x = solve_candidate(synth, ExtensionTuple{BigInt(0)},
                                    IntVector{BigInt(0), BigInt(0), BigInt(0)});
  for (const BigRat& c : x) CHECK(c == 0);
}

TEST_CASE("pipeline with no extension tuples returns all-zero counts") {
  SearchConfig empty = synthetic_config(/*with_tuples=*/false);
  StageReport rep = run_pipeline(empty);
  CHECK(rep.count_candidates == 0);
  CHECK(rep.count_characteristic == 0);
  CHECK(rep.count_dimension == 0);
  CHECK(rep.count_basic == 0);
  CHECK(rep.basic_classes.empty());
}

TEST_CASE("pipeline equals the brute-force oracle on the synthetic instance") {
  SearchConfig synth = synthetic_config();
  StageReport rep = run_pipeline(synth);

  // stage 1 is the full grid: 2 tuples x 3 * 2 * 5 grid points
  CHECK(rep.count_candidates == 60);

  long radius = swrbd_test::oracle_box_radius(synth);
  swrbd_test::BruteForceResult oracle = swrbd_test::brute_force_enumerate(synth, radius);

  CHECK(rep.count_characteristic == oracle.characteristic);
  CHECK(rep.count_dimension == oracle.dimension);
  CHECK(rep.count_basic == oracle.basic);
  CHECK(rep.zero_pairing_diagnostics == oracle.zero_pairing);
  CHECK(rep.basic_classes == oracle.basic_classes);

  // frozen oracle values: every sign-stage branch is populated
  CHECK(oracle.characteristic == 12);
  CHECK(oracle.dimension == 4);
  CHECK(oracle.basic == 2);
  CHECK(oracle.zero_pairing == 2);
  ClassVector survivor{BigInt(2), BigInt(2), BigInt(-1), BigInt(-1)};
  REQUIRE(oracle.basic_classes.size() == 2);
  CHECK(oracle.basic_classes[0] == negate(survivor));
  CHECK(oracle.basic_classes[1] == survivor);
}

TEST_CASE("pipeline report is invariant under the worker count") {
  SearchConfig synth = synthetic_config();
  StageReport one = run_pipeline(synth, 1);
  for (unsigned threads : {2u, 3u, 5u}) {
    StageReport many = run_pipeline(synth, threads);
    CHECK(one == many);
  }
}

TEST_CASE("park-q pipeline: counts, classes, symmetry, determinism") {
  SearchConfig q = load_preset("park-q");
  StageReport rep = run_pipeline(q, 2);
  CHECK(rep.count_candidates == 437400);
  CHECK(rep.count_characteristic == 17496);
  CHECK(rep.count_dimension == 3754);
  CHECK(rep.count_basic == 2);
  CHECK(rep.zero_pairing_diagnostics == 0);  // measured; no sign-stage entrant kills H or H'

  ClassVector k = canonical_class(13);
  REQUIRE(rep.basic_classes.size() == 2);
  CHECK(rep.basic_classes[0] == k);
  CHECK(rep.basic_classes[1] == negate(k));

  StageReport again = run_pipeline(q, 1);
  CHECK(again == rep);
}

TEST_CASE("park-p pipeline: counts and classes") {
  SearchConfig p = load_preset("park-p");
  StageReport rep = run_pipeline(p, 2);
  CHECK(rep.count_candidates == 612360);
  CHECK(rep.count_characteristic == 12498);
  CHECK(rep.count_dimension == 8960);
  CHECK(rep.count_basic == 2);
  CHECK(rep.zero_pairing_diagnostics == 0);  // measured

  ClassVector k = canonical_class(14);
  REQUIRE(rep.basic_classes.size() == 2);
  CHECK(rep.basic_classes[0] == k);
  CHECK(rep.basic_classes[1] == negate(k));
}

TEST_CASE("surviving candidates are distinct integer vectors") {
  SearchConfig synth = synthetic_config();
  StageReport rep = run_pipeline(synth);
  for (std::size_t i = 1; i < rep.basic_classes.size(); ++i)
    CHECK(rep.basic_classes[i - 1] != rep.basic_classes[i]);
}

TEST_CASE("lemma hypothesis check") {
  SearchConfig q = load_preset("park-q");
  StageReport rep = run_pipeline(q, 2);
  CHECK(verify_lemma_hypothesis(q, rep));
  CHECK(rep.lemma_verified);

  // synthetic report containing a positive-dimensional class: K + 2H has the
  // admissible tuple (5,0,0,0) but dimension far above zero
  ClassVector big(13);
  for (std::size_t i = 0; i < 13; ++i) big[i] = canonical_class(13)[i] + 2 * q.H()[i];
  StageReport fake = rep;
  fake.basic_classes.push_back(big);
  CHECK_FALSE(verify_lemma_hypothesis(q, fake));
  CHECK_FALSE(fake.lemma_verified);
}

TEST_CASE("minimality check") {
  SearchConfig q = load_preset("park-q");
  StageReport rep = run_pipeline(q, 2);
  verify_lemma_hypothesis(q, rep);
  CHECK(check_minimality(q, rep));
  CHECK(rep.minimal);

  // blown_down_square(K - (-K)) = blown_down_square(2K) = 4 for park-q
  ClassVector two_k(13);
  for (std::size_t i = 0; i < 13; ++i) two_k[i] = 2 * canonical_class(13)[i];
  CHECK(blown_down_square(q.chain(), q.form(), two_k) == 4);

  // refuses to run without the lemma hypothesis
  StageReport unverified = rep;
  unverified.lemma_verified = false;
  CHECK_THROWS_AS(check_minimality(q, unverified), ValidationError);

  // constructed witness: classes differing by a blown-down square -4 class
  SearchConfig synth = synthetic_config();
  ClassVector diff{BigInt(0), BigInt(0), BigInt(2), BigInt(2)};
  CHECK(blown_down_square(synth.chain(), synth.form(), diff) == -4);
  StageReport fake;
  fake.lemma_verified = true;
  fake.basic_classes.push_back(diff);
  fake.basic_classes.push_back(ClassVector(4, BigInt(0)));
  CHECK_FALSE(check_minimality(synth, fake));
  CHECK_FALSE(fake.minimal);
}

TEST_CASE("config validation rejects broken cross-invariants") {
  // sphere not orthogonal to the chain
  std::vector<ClassVector> chain{{BigInt(1), BigInt(-1), BigInt(-1), BigInt(-1)}};
  std::vector<ExtensionTuple> tuples{{BigInt(2)}, {BigInt(-2)}};
  std::vector<ClassVector> bad_spheres{
      {BigInt(0), BigInt(0), BigInt(1), BigInt(0)},  // E1 pairs with R0
      {BigInt(0), BigInt(1), BigInt(-1), BigInt(0)},
      {BigInt(1), BigInt(-1), BigInt(1), BigInt(1)},
  };
  CHECK_THROWS_WITH_AS(
      SearchConfig("bad", swrbd_test::synthetic_gram(), chain, tuples, bad_spheres,
                   ClassVector{BigInt(1), BigInt(1), BigInt(0), BigInt(0)},
                   ClassVector{BigInt(2), BigInt(1), BigInt(0), BigInt(0)}),
      doctest::Contains("not orthogonal"), ValidationError);

  // arity failure: rank 4 but only chain + 2 spheres
  std::vector<ClassVector> two_spheres{
      {BigInt(0), BigInt(0), BigInt(1), BigInt(-1)},
      {BigInt(0), BigInt(1), BigInt(-1), BigInt(0)},
  };
  CHECK_THROWS_AS(
      SearchConfig("bad", swrbd_test::synthetic_gram(), chain, tuples, two_spheres,
                   ClassVector{BigInt(1), BigInt(1), BigInt(0), BigInt(0)},
                   ClassVector{BigInt(2), BigInt(1), BigInt(0), BigInt(0)}),
      ValidationError);

  // H with zero square
  std::vector<ClassVector> spheres{
      {BigInt(0), BigInt(0), BigInt(1), BigInt(-1)},
      {BigInt(0), BigInt(1), BigInt(-1), BigInt(0)},
      {BigInt(1), BigInt(-1), BigInt(1), BigInt(1)},
  };
  CHECK_THROWS_WITH_AS(
      SearchConfig("bad", swrbd_test::synthetic_gram(), chain, tuples, spheres,
                   ClassVector{BigInt(0), BigInt(0), BigInt(1), BigInt(-1)},
                   ClassVector{BigInt(2), BigInt(1), BigInt(0), BigInt(0)}),
      doctest::Contains("positive square"), ValidationError);
}

TEST_CASE("check_config reports every invariant as passing on valid configs") {
  for (const std::string& label : preset_labels()) {
    SearchConfig cfg = load_preset(label);
    for (const CheckResult& check : check_config(cfg)) {
      CAPTURE(check.name);
      CHECK(check.passed);
    }
  }
}
