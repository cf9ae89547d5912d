// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria (capped at 1).

#include "gbs/exact/normal_form.hpp"
#include "gbs/pipeline/pipeline.hpp"
#include "gbs/quotient/quotient.hpp"
#include "support.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace gbs;
using gbs::testing::Rng;
using gbs::testing::uniform;

namespace {

constexpr double kGoldenSeconds = 1.0;  // per analysis
constexpr int kExactTrials = 1000;
constexpr int kFactorTrials = 500;
constexpr int kChainTrials = 200;
constexpr int kOracleInstances = 100;
constexpr int kOraclePairs = 20;
constexpr long kOracleBudget = 50;

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct Timed {
  Report report;
  double seconds;
};

Timed analyze_corpus(const std::string& name) {
  const GraphOfGroups g = gbs::testing::load_corpus(name);
  const auto start = std::chrono::steady_clock::now();
  Report r = analyze(g);
  return {std::move(r), seconds_since(start)};
}

void require_verdicts(Outcome& o, const Timed& t, Verdict rf, Verdict subsep, Verdict css) {
  o.require(t.report.residually_finite.verdict == rf, "residual finiteness verdict");
  o.require(t.report.subgroup_separable.verdict == subsep, "subgroup separability verdict");
  o.require(t.report.cyclic_subgroup_separable.verdict == css, "cyclic subgroup separability verdict");
  o.require(t.seconds < kGoldenSeconds, "analysis took " + std::to_string(t.seconds) + " s");
}

std::vector<std::string> factor_texts(const Factorization& f) {
  std::vector<std::string> out;
  for (const auto& x : f.factors) out.push_back(x.poly.to_string() + (x.multiplicity > 1 ? "^m" : ""));
  return out;
}

Outcome criterion_1() {
  Outcome o;
  const Timed t = analyze_corpus("g1");
  require_verdicts(o, t, Verdict::yes, Verdict::no, Verdict::no);
  const auto& css = t.report.css;
  o.require(css && css->eigen && css->eigen->lambda == -2, "eigen witness lambda");
  o.require(css && css->eigen && css->eigen->a == int_vector({1, -2}), "eigen witness vector");
  return o;
}

Outcome criterion_2() {
  Outcome o;
  const Timed t = analyze_corpus("g2");
  require_verdicts(o, t, Verdict::yes, Verdict::no, Verdict::no);
  const auto& css = t.report.css;
  o.require(css && css->failing.size() == 1 && css->failing[0].factor == IntPolynomial{2, -2, 1} &&
                css->failing[0].primes == std::vector<Integer>{2},
            "degenerate prime 2 on x^2 - 2x + 2");
  const AscendingHNN h(t.report.classification.phi);
  o.require(h.phi.trace() == 2 && h.d == 2, "trace and determinant");
  o.require(!n2_shortcut(h), "shortcut agrees");
  return o;
}

Outcome criterion_3() {
  Outcome o;
  const Timed t = analyze_corpus("g3");
  require_verdicts(o, t, Verdict::yes, Verdict::no, Verdict::yes);
  const AscendingHNN h(t.report.classification.phi);
  o.require(h.phi.trace() == 3 && h.d == 2 && gcd(Integer(h.phi.trace()), h.d) == 1, "trace coprime to d");
  o.require(n2_shortcut(h), "shortcut agrees");
  return o;
}

Outcome criterion_4() {
  Outcome o;
  const Timed t = analyze_corpus("g4");
  require_verdicts(o, t, Verdict::yes, Verdict::no, Verdict::yes);
  const auto& css = t.report.css;
  o.require(css && css->charpoly.to_string() == "x^3 - x^2 - 5x - 5", "characteristic polynomial");
  o.require(css && factor_texts(css->factorization) == std::vector<std::string>{"x^3 - x^2 - 5x - 5"},
            "reported irreducible");
  return o;
}

Outcome criterion_5() {
  Outcome o;
  const Timed t = analyze_corpus("g5");
  require_verdicts(o, t, Verdict::yes, Verdict::no, Verdict::yes);
  const auto& css = t.report.css;
  o.require(css && factor_texts(css->factorization) == std::vector<std::string>{"x - 1", "x^2 - 3x - 2"},
            "factorization");
  return o;
}

Outcome criterion_rank_one() {
  Outcome o;
  const Timed loop13 = analyze_corpus("bs_1_3");
  o.require(loop13.report.classification.kind == Classification::Kind::ascending_hnn, "loop(1,3) ascending");
  o.require(loop13.report.residually_finite.verdict == Verdict::yes, "loop(1,3) residually finite");
  const Timed loop23 = analyze_corpus("bs_2_3");
  o.require(loop23.report.residually_finite.verdict == Verdict::no, "loop(2,3) not residually finite");
  const Timed loop22 = analyze_corpus("bs_2_2");
  o.require(loop22.report.residually_finite.verdict == Verdict::yes, "loop(2,2) residually finite");
  o.require(loop22.report.subgroup_separable.verdict == Verdict::yes, "loop(2,2) subgroup separable");
  for (const Timed* t : {&loop13, &loop23, &loop22}) o.require(t->seconds < kGoldenSeconds, "time");
  for (long q = 2; q <= 9; ++q) {
    const GraphOfGroups g{1, {"v"}, {Edge{"t", "v", "v", int_matrix({{1}}), int_matrix({{q}})}}};
    o.require(analyze(g).residually_finite.verdict == Verdict::yes, "loop(1,q) residually finite");
  }
  return o;
}

Outcome criterion_6() {
  Outcome o;
  Rng rng(0xacce6);
  for (int trial = 0; trial < kExactTrials && o.pass; ++trial) {
    const Index n = uniform(rng, 1, 4);
    const IntMatrix m = gbs::testing::random_matrix(rng, n, n, -9, 9);
    const std::string tag = " for " + to_string(m);
    o.require(evaluate(charpoly(m), m).isZero(), "Cayley-Hamilton" + tag);
    const SmithForm s = snf(m);
    o.require(s.S == s.U * m * s.V && is_unimodular(s.U) && is_unimodular(s.V), "SNF transforms" + tag);
    Integer prod = 1;
    for (std::size_t k = 0; k < s.diagonal.size(); ++k) {
      prod *= s.diagonal[k];
      if (k + 1 < s.diagonal.size() && s.diagonal[k] != 0)
        o.require(s.diagonal[k + 1] % s.diagonal[k] == 0, "SNF divisibility" + tag);
    }
    o.require(prod == mp::abs(determinant(m)), "SNF product" + tag);
    const HermiteForm h = hnf(m);
    o.require(h.H == m * h.U && hnf(h.H).H == h.H, "HNF idempotence" + tag);
    o.require(hnf(m * gbs::testing::random_unimodular(rng, n)).H == h.H, "HNF canonicality" + tag);
    if (determinant(m) != 0) {
      const Lattice l1 = Lattice::from_generators(m);
      const Lattice l2 = Lattice::from_generators(IntMatrix(l1.basis() * gbs::testing::random_nonsingular(rng, n, -3, 3)));
      const Lattice l3 = Lattice::from_generators(IntMatrix(l2.basis() * gbs::testing::random_nonsingular(rng, n, -3, 3)));
      o.require(*index(l3, l1) == *index(l3, l2) * *index(l2, l1), "index multiplicativity" + tag);
      o.require(*index(l1, Lattice::standard(n)) == mp::abs(determinant(m)), "index equals |det|" + tag);
    }
  }
  return o;
}

Outcome criterion_7() {
  Outcome o;
  Rng rng(0xacce7);
  for (int trial = 0; trial < kFactorTrials && o.pass; ++trial) {
    IntPolynomial f = IntPolynomial::constant(1);
    const int target = static_cast<int>(uniform(rng, 1, 4));
    while (f.degree() < target) {
      const int deg = static_cast<int>(uniform(rng, 1, target - std::max(f.degree(), 0)));
      f *= gbs::testing::random_monic(rng, deg, -5, 5);
    }
    const std::string tag = " for " + f.to_string();
    const Factorization fact = factor_over_Q(f);
    o.require(fact.expand() == f, "reconstruction" + tag);
    std::vector<IntPolynomial> flat;
    for (const auto& x : fact.factors) {
      o.require(gbs::testing::brute_force_irreducible(x.poly), "irreducibility claim" + tag);
      for (unsigned k = 0; k < x.multiplicity; ++k) flat.push_back(x.poly);
    }
    std::sort(flat.begin(), flat.end(), canonical_less);
    o.require(flat == gbs::testing::brute_force_factor(f), "factor multiset" + tag);
  }
  return o;
}

Outcome criterion_8() {
  Outcome o;
  Rng rng(0xacce8);
  for (int trial = 0; trial < kChainTrials && o.pass; ++trial) {
    const Index n = uniform(rng, 1, 3);
    const AscendingHNN h(gbs::testing::random_nonsingular(rng, n, -9, 9));
    const std::string tag = " for " + to_string(h.phi);
    const InvariantChain chain = invariant_chain(h);
    IntPolynomial product = IntPolynomial::constant(1);
    o.require(chain.lattices.front().is_zero() && chain.lattices.back() == Lattice::standard(n), "chain ends" + tag);
    for (std::size_t i = 1; i < chain.lattices.size(); ++i) {
      const Lattice& a = chain.lattices[i];
      o.require(a.contains(image(h.phi, a)), "phi-invariance" + tag);
      o.require(is_saturated(a), "saturation" + tag);
      o.require(a.contains(chain.lattices[i - 1]), "nesting" + tag);
      o.require(factor_over_Q(chain.steps[i - 1].factor).count_with_multiplicity() == 1, "irreducible step" + tag);
      product *= chain.steps[i - 1].factor;
    }
    o.require(product == charpoly(h.phi), "product of factors" + tag);
  }
  return o;
}

std::vector<FiniteQuotientSpec> collected_specs;

Outcome criterion_9() {
  Outcome o;
  Rng rng(0xacce9);
  int instances = 0, no_cases = 0, yes_pairs = 0;
  while (instances < kOracleInstances && o.pass) {
    const Index n = uniform(rng, 2, 3);
    const IntMatrix phi = gbs::testing::random_matrix(rng, n, n, -4, 4);
    if (determinant(phi) == 0) continue;
    ++instances;
    const AscendingHNN h(phi);
    const std::string tag = " for " + to_string(phi);
    const CssVerdict v = css_decide(h);
    const InvariantChain chain = v.chain ? *v.chain : invariant_chain(h);
    if (!v.css) {
      ++no_cases;
      for (const auto& w : v.nonseparable)
        o.require(!separate_in_A(h, chain, w.pa, w.a, kOracleBudget).has_value(),
                  "separated p a from a with p = " + to_string(w.p) + tag);
      if (v.eigen)
        o.require(!separate_in_A(h, chain, IntVector(v.eigen->lambda * v.eigen->a), v.eigen->a, kOracleBudget),
                  "separated lambda a from a" + tag);
      continue;
    }
    for (int k = 0; k < kOraclePairs; ++k) {
      IntVector a(n);
      do {
        for (Index c = 0; c < n; ++c) a(c) = uniform(rng, -3, 3);
      } while (a.isZero());
      long x = uniform(rng, 2, 9), y = uniform(rng, 1, 30);
      if (y % x == 0) ++y;
      const auto spec = separate_in_A(h, chain, IntVector(x * a), IntVector(y * a), kOracleBudget);
      o.require(spec.has_value(), "no separation of " + std::to_string(x) + "a from " + std::to_string(y) + "a, a = " +
                                      to_string(a) + tag);
      if (spec) {
        o.require(!in_cyclic_plus(IntVector(x * a), IntVector(y * a), spec->K), "certificate" + tag);
        collected_specs.push_back(*spec);
        ++yes_pairs;
      }
    }
  }
  if (o.pass)
    o.detail = std::to_string(instances) + " instances, " + std::to_string(no_cases) + " non-CSS, " +
               std::to_string(yes_pairs) + " separated pairs";
  return o;
}

Outcome criterion_10() {
  Outcome o;
  int graphs = 0, unknown = 0;
  for (const auto& name : gbs::testing::corpus_files()) {
    const GraphOfGroups g = gbs::testing::load_corpus(name);
    ++graphs;
    const std::vector<Rational> ratios = cycle_ratios(g);
    const ZnByFree z = virtually_Zn_by_free(g, {});
    o.require(ratios.size() == z.image.generators.size(), "cycle count for " + name);
    for (std::size_t k = 0; k < ratios.size() && k < z.image.generators.size(); ++k)
      o.require(mp::abs(z.image.generators[k].determinant()) == ratios[k], "holonomy determinant for " + name);
    const ConjugacyResult& c = z.conjugacy;
    if (c.status == Verdict::yes) {
      const RatMatrix b_inv = c.conjugator.inverse();
      for (const auto& gen : z.image.generators) {
        const RatMatrix conj = b_inv * gen * c.conjugator;
        o.require(conj.is_integral() && is_unimodular(conj.num()), "conjugated generator for " + name);
      }
    } else if (c.status == Verdict::no) {
      const RatMatrix w = evaluate_word(z.image.generators, c.certificate);
      o.require(w == c.certificate_matrix && integrality_defect(w).has_value(), "defect certificate for " + name);
    } else {
      ++unknown;
    }
  }
  o.require(unknown == 0, std::to_string(unknown) + " unknown verdicts");
  if (o.pass) o.detail = std::to_string(graphs) + " corpus graphs, unknown rate 0";
  return o;
}

Outcome criterion_11() {
  Outcome o;
  const IntMatrix c2 = int_matrix({{1, 1}, {-1, 1}});
  const FiniteQuotientSpec spec = coprime_quotient(c2, 3);
  o.require(spec.r == 8, "C2 mod 3 order " + to_string(spec.r));
  collected_specs.push_back(spec);
  for (const auto& phi : {int_matrix({{0, 1}, {-2, -3}}), c2, int_matrix({{1, 2}, {2, 2}}),
                          int_matrix({{0, 1, 1}, {0, 0, 1}, {5, 0, 1}}), int_matrix({{1, 2, 1}, {2, 2, 1}, {0, 0, 1}})}) {
    const AscendingHNN h(phi);
    const InvariantChain chain = invariant_chain(h);
    for (long m = 1; m <= 30; ++m)
      if (gcd(Integer(m), h.d) == 1) collected_specs.push_back(coprime_quotient(phi, m));
    for (long p : {2L, 3L, 5L})
      for (unsigned e = 1; e <= 3; ++e)
        for (std::size_t i = 0; i < chain.length(); ++i)
          if (auto s = make_quotient(phi, k_subgroup(phi, chain, p, e, i))) collected_specs.push_back(*s);
  }
  for (const auto& s : collected_specs) {
    try {
      check_spec(s);
    } catch (const std::exception& e) {
      o.require(false, std::string("spec ") + s.origin + ": " + e.what());
    }
    const Index n = s.phi.rows();
    IntMatrix phi_r = identity(n);
    for (Integer k = 0; k < s.r; ++k) phi_r = phi_r * s.phi;
    o.require(s.K.contains(image(s.phi, s.K)), "phi(K) in K for " + s.origin);
    for (Index k = 0; k < n; ++k) {
      const IntVector a = identity(n).col(k);
      o.require(s.K.contains(IntVector(a - phi_r * a)), "a - phi^r(a) in K for " + s.origin);
    }
  }
  if (o.pass) o.detail = std::to_string(collected_specs.size()) + " quotient specs checked";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1  C1 verdicts and eigen witness", criterion_1},
      {"2  C2 degenerate at 2, shortcut agrees", criterion_2},
      {"3  C3 cyclic subgroup separable", criterion_3},
      {"4  C4 irreducible char poly", criterion_4},
      {"5  C5 factorization", criterion_5},
      {"R  rank-1 loops", criterion_rank_one},
      {"6  exact kernel suite", criterion_6},
      {"7  factorization oracle", criterion_7},
      {"8  invariant chain suite", criterion_8},
      {"9  oracle and criterion agreement", criterion_9},
      {"10 modular suite", criterion_10},
      {"11 quotient suite", criterion_11},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::ostringstream line;
    line << (o.pass ? "PASS " : "FAIL ") << std::left << std::setw(42) << name << std::fixed << std::setprecision(3)
         << seconds_since(start) << " s";
    if (!o.detail.empty()) line << "  " << o.detail;
    std::cout << line.str() << std::endl;
    if (!o.pass) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
