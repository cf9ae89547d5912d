#include "gbs/pipeline/pipeline.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace gbs;

namespace {

Report run(const std::string& name) { return analyze(gbs::testing::load_corpus(name)); }

void check_verdicts(const Report& r, Verdict rf, Verdict subsep, Verdict css) {
  CHECK(r.residually_finite.verdict == rf);
  CHECK(r.subgroup_separable.verdict == subsep);
  CHECK(r.cyclic_subgroup_separable.verdict == css);
}

}  // namespace

TEST_CASE("golden verdicts") {
  const Report g1 = run("g1");
  check_verdicts(g1, Verdict::yes, Verdict::no, Verdict::no);
  CHECK(g1.cyclic_subgroup_separable.reason == "factor_congruent_to_monomial_mod_p");
  CHECK(g1.subgroup_separable.reason == "strictly_ascending_hnn_extension");
  check_verdicts(run("g2"), Verdict::yes, Verdict::no, Verdict::no);
  check_verdicts(run("g3"), Verdict::yes, Verdict::no, Verdict::yes);
  check_verdicts(run("g4"), Verdict::yes, Verdict::no, Verdict::yes);
  check_verdicts(run("g5"), Verdict::yes, Verdict::no, Verdict::yes);
  check_verdicts(run("bs_1_3"), Verdict::yes, Verdict::no, Verdict::no);
  check_verdicts(run("bs_2_3"), Verdict::no, Verdict::no, Verdict::no);
  check_verdicts(run("bs_2_2"), Verdict::yes, Verdict::yes, Verdict::yes);
  check_verdicts(run("free_abelian"), Verdict::yes, Verdict::yes, Verdict::yes);
}

TEST_CASE("automorphism loops are separable in every sense") {
  const GraphOfGroups g{2, {"v"}, {Edge{"t", "v", "v", identity(2), int_matrix({{2, 1}, {1, 1}})}}};
  const Report r = analyze(g);
  check_verdicts(r, Verdict::yes, Verdict::yes, Verdict::yes);
  CHECK(r.subgroup_separable.reason == "hnn_extension_by_automorphism");
}

TEST_CASE("corpus reports are consistent") {
  for (const auto& name : gbs::testing::corpus_files()) {
    CAPTURE(name);
    const Report r = run(name);
    CHECK(implications_hold(r));
    for (const Decision* d : {&r.residually_finite, &r.subgroup_separable, &r.cyclic_subgroup_separable}) {
      CHECK(d->verdict != Verdict::unknown);
      if (d->verdict == Verdict::no) CHECK_FALSE(d->reason.empty());
    }
    if (r.classification.kind == Classification::Kind::ascending_hnn) {
      REQUIRE(r.css.has_value());
      CHECK(r.css->factorization.expand() == charpoly(r.classification.phi));
      CHECK(r.css->charpoly == charpoly(r.classification.phi));
      if (r.classification.d == 1) check_verdicts(r, Verdict::yes, Verdict::yes, Verdict::yes);
    }
    if (r.classification.kind == Classification::Kind::general) CHECK(r.modular.has_value());
  }
}

TEST_CASE("invalid input is rejected") {
  const GraphOfGroups bad{2, {"v"}, {Edge{"t", "v", "v", int_matrix({{1, 0}, {0, 0}}), identity(2)}}};
  CHECK_THROWS_AS(analyze(bad), std::invalid_argument);
}

TEST_CASE("exhausted caps give unknown everywhere") {
  AnalysisCaps caps;
  caps.conjugacy.saturation_steps = 0;
  const Report r = analyze(gbs::testing::load_corpus("shear_loop"), caps);
  check_verdicts(r, Verdict::unknown, Verdict::unknown, Verdict::unknown);
  CHECK(r.residually_finite.reason == "modular_test_caps_exhausted");
  CHECK(implications_hold(r));
}
