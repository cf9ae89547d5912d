#include "gbs/css/css.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace gbs;
using gbs::testing::Rng;

namespace {

const IntMatrix C1 = int_matrix({{0, 1}, {-2, -3}});
const IntMatrix C2 = int_matrix({{1, 1}, {-1, 1}});
const IntMatrix C3 = int_matrix({{1, 2}, {2, 2}});
const IntMatrix C4 = int_matrix({{0, 1, 1}, {0, 0, 1}, {5, 0, 1}});
const IntMatrix C5 = int_matrix({{1, 2, 1}, {2, 2, 1}, {0, 0, 1}});

void check_chain(const AscendingHNN& h, const InvariantChain& chain) {
  const Index n = h.n();
  REQUIRE(chain.lattices.size() == chain.length() + 1);
  CHECK(chain.lattices.front().is_zero());
  CHECK(chain.lattices.back() == Lattice::standard(n));
  IntPolynomial product = IntPolynomial::constant(1);
  for (std::size_t i = 1; i < chain.lattices.size(); ++i) {
    const Lattice& a = chain.lattices[i];
    const ChainStep& s = chain.steps[i - 1];
    CHECK(is_saturated(a));
    CHECK(a.contains(image(h.phi, a)));
    CHECK(a.contains(chain.lattices[i - 1]));
    CHECK(a.rank() - chain.lattices[i - 1].rank() == s.degree);
    CHECK(s.factor.degree() == s.degree);
    CHECK(charpoly(s.induced) == s.factor);
    CHECK(factor_over_Q(s.factor).count_with_multiplicity() == 1);
    product *= s.factor;
  }
  CHECK(product == charpoly(h.phi));
}

void check_witnesses(const AscendingHNN& h, const CssVerdict& v) {
  if (v.eigen) {
    CHECK(h.phi * v.eigen->a == v.eigen->lambda * v.eigen->a);
    CHECK(mp::abs(v.eigen->lambda) > 1);
    CHECK(content(v.eigen->a) == 1);
  }
  if (v.css) {
    CHECK(v.nonseparable.empty());
    CHECK_FALSE(v.eigen.has_value());
    return;
  }
  REQUIRE(v.chain.has_value());
  CHECK_FALSE(v.nonseparable.empty());
  for (const auto& w : v.nonseparable) {
    const Lattice& ai = v.chain->lattices[w.i];
    const Lattice& prev = v.chain->lattices[w.i - 1];
    CHECK(ai.contains(w.a));
    CHECK_FALSE(prev.contains(w.a));
    CHECK(w.pa == w.p * w.a);
    CHECK(degeneracy_of(w.factor).degenerate_at(w.p));
  }
}

}  // namespace

TEST_CASE("css golden values") {
  const CssVerdict c1 = css_decide(AscendingHNN(C1));
  CHECK_FALSE(c1.css);
  REQUIRE(c1.eigen.has_value());
  CHECK(c1.eigen->lambda == -2);
  CHECK(c1.eigen->a == int_vector({1, -2}));
  CHECK(css_decide(AscendingHNN(C3)).css);
  CHECK(css_decide(AscendingHNN(C5)).css);
  CHECK(css_decide(AscendingHNN(C4)).css);
  const CssVerdict c2 = css_decide(AscendingHNN(C2));
  CHECK_FALSE(c2.css);
  CHECK_FALSE(c2.eigen.has_value());
  REQUIRE(c2.failing.size() == 1);
  CHECK(c2.failing[0].witness_prime == 2);
}

TEST_CASE("invariant chain golden values") {
  const InvariantChain c5 = invariant_chain(AscendingHNN(C5));
  REQUIRE(c5.length() == 2);
  CHECK(c5.steps[0].factor == IntPolynomial{-1, 1});
  CHECK(c5.steps[1].factor == IntPolynomial{-2, -3, 1});
  CHECK(c5.lattices[1] == Lattice::from_generators(int_matrix({{1}, {2}, {-4}})));
  const InvariantChain c4 = invariant_chain(AscendingHNN(C4));
  CHECK(c4.length() == 1);
  CHECK(c4.lattices[1] == Lattice::standard(3));
  const InvariantChain scalar = invariant_chain(AscendingHNN(int_matrix({{2}})));
  REQUIRE(scalar.length() == 1);
  CHECK(scalar.steps[0].factor == IntPolynomial{-2, 1});
}

TEST_CASE("n = 2 shortcut golden values") {
  CHECK_FALSE(n2_shortcut(AscendingHNN(C2)));
  CHECK(n2_shortcut(AscendingHNN(C3)));
  CHECK(n2_shortcut(AscendingHNN(identity(2))));
  CHECK_THROWS(n2_shortcut(AscendingHNN(C4)));
}

TEST_CASE("non-separable witness golden values") {
  const AscendingHNN h2(C2);
  const InvariantChain chain2 = invariant_chain(h2);
  const NonSeparableWitness w2 = nonseparable_witness(h2, chain2, 1, 2);
  CHECK(w2.a == int_vector({1, 0}));
  CHECK(w2.pa == int_vector({2, 0}));

  const AscendingHNN h1(C1);
  const InvariantChain chain1 = invariant_chain(h1);
  std::size_t step = 0;
  for (std::size_t i = 0; i < chain1.length(); ++i)
    if (chain1.steps[i].factor == IntPolynomial{2, 1}) step = i + 1;
  REQUIRE(step != 0);
  const NonSeparableWitness w1 = nonseparable_witness(h1, chain1, step, 2);
  CHECK(w1.a == int_vector({1, -2}));
  CHECK(w1.pa == int_vector({2, -4}));

  const AscendingHNN h3(C3);
  CHECK_THROWS_AS(nonseparable_witness(h3, invariant_chain(h3), 1, 3), NotDegenerate);
}

TEST_CASE("singular or non-square phi is rejected") {
  CHECK_THROWS(AscendingHNN(int_matrix({{1, 2}, {2, 4}})));
  CHECK_THROWS(AscendingHNN(IntMatrix(int_matrix({{1, 2}}))));
}

TEST_CASE("chain and verdict properties on random matrices") {
  Rng rng(51);
  for (int trial = 0; trial < 200; ++trial) {
    const Index n = gbs::testing::uniform(rng, 1, 3);
    const AscendingHNN h(gbs::testing::random_nonsingular(rng, n, -4, 4));
    CAPTURE(to_string(h.phi));
    check_chain(h, invariant_chain(h));
    const CssVerdict v = css_decide(h);
    check_witnesses(h, v);
    CHECK(v.factorization.expand() == v.charpoly);
    if (h.d == 1) CHECK(v.css);
    for (const auto& r : integer_roots(v.charpoly))
      if (mp::abs(r) > 1) CHECK_FALSE(v.css);
    bool recomputed = true;
    for (const auto& f : v.factorization.factors) {
      Integer g = 0;
      for (int k = 0; k < f.poly.degree(); ++k) g = gcd(g, f.poly.coefficient(static_cast<std::size_t>(k)));
      if (g != 1) recomputed = false;
    }
    CHECK(v.css == recomputed);
  }
}

TEST_CASE("css agrees with the n = 2 shortcut") {
  Rng rng(52);
  for (int trial = 0; trial < 1000; ++trial) {
    const AscendingHNN h(gbs::testing::random_nonsingular(rng, 2, -9, 9));
    CAPTURE(to_string(h.phi));
    CHECK(css_decide(h).css == n2_shortcut(h));
  }
}
