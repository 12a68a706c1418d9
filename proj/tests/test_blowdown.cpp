#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "swrbd/presets.hpp"
#include "synthetic.hpp"

using namespace swrbd;

namespace {

ClassVector canonical_class(std::size_t rank) {
  ClassVector k(rank, BigInt(1));
  k[0] = -2;
  k[1] = -2;
  return k;
}

ExtensionTuple tuple_of(std::initializer_list<long> vals) {
  ExtensionTuple t;
  for (long v : vals) t.emplace_back(v);
  return t;
}

}  // namespace

TEST_CASE("every preset extension tuple satisfies K0^2 = -(p+1)") {
  SearchConfig p = load_preset("park-p");
  CHECK(p.chain().extension_tuples().size() == 7);
  for (const ExtensionTuple& e : p.chain().extension_tuples())
    CHECK(k0_square(p.chain(), e) == BigRat(-6));

  SearchConfig q = load_preset("park-q");
  CHECK(q.chain().extension_tuples().size() == 5);
  for (const ExtensionTuple& e : q.chain().extension_tuples())
    CHECK(k0_square(q.chain(), e) == BigRat(-4));
}

TEST_CASE("k0_square fixed values and the exact-solve oracle") {
  SearchConfig p = load_preset("park-p");
  CHECK(k0_square(p.chain(), tuple_of({7, 0, 0, 0, 0, 0})) == BigRat(-6));
  CHECK(k0_square(p.chain(), tuple_of({0, 0, 0, 0, 0, 0})) == 0);

  SearchConfig q = load_preset("park-q");
  CHECK(k0_square(q.chain(), tuple_of({5, 0, 0, 0})) == BigRat(-4));

  // oracle: k0_square via an independent rational solve against the chain
  // gram, for every preset tuple
  for (const SearchConfig& cfg : {p, q}) {
    const BlowdownChain& chain = cfg.chain();
    const std::size_t len = chain.classes().size();
    for (const ExtensionTuple& e : chain.extension_tuples()) {
      IntVector e_listed(len, BigInt(0));
      for (std::size_t j = 0; j < len; ++j) e_listed[chain.chain_order()[j]] = e[j];
      RatVector x = solve(chain.chain_gram(), e_listed);
      BigRat acc = 0;
      for (std::size_t i = 0; i < len; ++i) acc += BigRat(e_listed[i]) * x[i];
      CHECK(acc == k0_square(chain, e));
    }
  }

  CHECK_THROWS_AS(k0_square(p.chain(), tuple_of({7, 0})), DimensionError);
}

TEST_CASE("blown-down squares") {
  SearchConfig p = load_preset("park-p");
  CHECK(blown_down_square(p.chain(), p.form(), canonical_class(14)) == 2);

  SearchConfig q = load_preset("park-q");
  CHECK(blown_down_square(q.chain(), q.form(), canonical_class(13)) == 1);

  // orthogonal to the chain: the square is unchanged
  CHECK(blown_down_square(p.chain(), p.form(), p.H()) == BigRat(square(p.form(), p.H())));
  CHECK(blown_down_square(p.chain(), p.form(), p.spheres()[0].cls) == -2);
}

TEST_CASE("blown-down square equals ambient square plus p+1 on admissible tuples") {
  for (const std::string& label : preset_labels()) {
    CAPTURE(label);
    SearchConfig cfg = load_preset(label);
    ClassVector k = canonical_class(cfg.form().rank());
    for (const ClassVector& v : {k, [&] {
           ClassVector neg(k.size());
           for (std::size_t i = 0; i < k.size(); ++i) neg[i] = -k[i];
           return neg;
         }()}) {
      ExtensionTuple evals = chain_evaluations(cfg.chain(), cfg.form(), v);
      bool admissible = false;
      for (const ExtensionTuple& t : cfg.chain().extension_tuples())
        if (t == evals) admissible = true;
      REQUIRE(admissible);
      CHECK(blown_down_square(cfg.chain(), cfg.form(), v) ==
            BigRat(square(cfg.form(), v) + cfg.chain().p() + 1));
    }
  }
}

TEST_CASE("blown-down dimension bounds") {
  SearchConfig p = load_preset("park-p");
  CHECK(blown_down_bound(p.chain(), p.form()) == 2);  // = -4 + 6

  SearchConfig q = load_preset("park-q");
  CHECK(blown_down_bound(q.chain(), q.form()) == 1);  // = -3 + 4

  // p = 0 chain: bound rises by exactly one
  SearchConfig synth = swrbd_test::synthetic_config();
  CHECK(blown_down_bound(synth.chain(), synth.form()) ==
        derived_bound(synth.form()) + 1);
}

TEST_CASE("formal dimensions") {
  SearchConfig p = load_preset("park-p");
  ClassVector k = canonical_class(14);
  CHECK(formal_dimension(p.chain(), p.form(), k) == 0);

  SearchConfig q = load_preset("park-q");
  CHECK(formal_dimension(q.chain(), q.form(), canonical_class(13)) == 0);

  // linearity in the ambient square: v = K + 2H has the same chain
  // evaluations, and dimension (square(v) + 4) / 4
  ClassVector v(14);
  for (std::size_t i = 0; i < 14; ++i) v[i] = k[i] + 2 * p.H()[i];
  CHECK(chain_evaluations(p.chain(), p.form(), v) ==
        chain_evaluations(p.chain(), p.form(), k));
  BigRat expected = BigRat(square(p.form(), v) + 4) / 4;
  CHECK(formal_dimension(p.chain(), p.form(), v) == expected);
  CHECK(expected == 784);  // (3132 + 4) / 4
}

TEST_CASE("chain construction rejects malformed data") {
  IntMatrix gram = swrbd_test::synthetic_gram();
  IntersectionForm form(gram);

  // square -5 instead of -4 for a single-sphere chain
  std::vector<ClassVector> bad_square{{BigInt(1), BigInt(-2), BigInt(-1), BigInt(0)}};
  CHECK_THROWS_AS(BlowdownChain(form, bad_square, {}), ValidationError);

  // two spheres that are not orthogonal and not a chain: E1-E2 pairs with E2
  std::vector<ClassVector> bad_pairing{
      {BigInt(1), BigInt(-1), BigInt(-1), BigInt(-1)},  // square -4... but p=1 wants -5
      {BigInt(0), BigInt(0), BigInt(0), BigInt(1)},
  };
  CHECK_THROWS_AS(BlowdownChain(form, bad_pairing, {}), ValidationError);

  // valid p=0 chain, tuple failing parity (odd)
  std::vector<ClassVector> chain{{BigInt(1), BigInt(-1), BigInt(-1), BigInt(-1)}};
  CHECK_THROWS_AS(BlowdownChain(form, chain, {tuple_of({1})}), ValidationError);
  // parity fine but checksum wrong: 4^2 / -4 = -4 != -1
  CHECK_THROWS_AS(BlowdownChain(form, chain, {tuple_of({4})}), ValidationError);
  // the admissible tuples pass
  BlowdownChain ok(form, chain, {tuple_of({2}), tuple_of({-2})});
  CHECK(ok.p() == 0);
  CHECK(k0_square(ok, tuple_of({2})) == -1);
}

TEST_CASE("chain construction rejects a heavy sphere in the middle") {
  // rank-5 negative definite lattice, path E1-E2, E2-..., heavy -6 vertex
  // placed mid-chain: diag(-2, -6, -2) with adjacency 1-2, 2-3 cannot occur
  // as chain data for p = 2.
  IntMatrix g(3, 3);
  g(0, 0) = -2;
  g(1, 1) = -6;
  g(2, 2) = -2;
  g(0, 1) = g(1, 0) = 1;
  g(1, 2) = g(2, 1) = 1;
  IntersectionForm form(g);
  std::vector<ClassVector> classes{{BigInt(1), BigInt(0), BigInt(0)},
                                   {BigInt(0), BigInt(1), BigInt(0)},
                                   {BigInt(0), BigInt(0), BigInt(1)}};
  CHECK_THROWS_AS(BlowdownChain(form, classes, {}), ValidationError);
}

TEST_CASE("negation of a preset tuple is not automatically admissible") {
  SearchConfig p = load_preset("park-p");
  // (-1, 0, -2, 0, 0, 0) is a tuple; (1, 0, 2, 0, 0, 0) is not in the list
  ExtensionTuple neg = tuple_of({1, 0, 2, 0, 0, 0});
  bool found = false;
  for (const ExtensionTuple& t : p.chain().extension_tuples())
    if (t == neg) found = true;
  CHECK_FALSE(found);
  // it still satisfies the checksum (negation preserves the quadratic form)
  CHECK(k0_square(p.chain(), neg) == BigRat(-6));
}
