#include "gbs/pipeline/pipeline.hpp"

#include <chrono>
#include <stdexcept>

namespace gbs {

namespace {

// a => b, where unknown on either side cannot refute the implication.
bool implies(Verdict a, Verdict b) { return !(a == Verdict::yes && b == Verdict::no); }

}  // namespace

bool implications_hold(const Report& r) {
  return implies(r.subgroup_separable.verdict, r.cyclic_subgroup_separable.verdict) &&
         implies(r.cyclic_subgroup_separable.verdict, r.residually_finite.verdict);
}

Report analyze(const GraphOfGroups& g, const AnalysisCaps& caps) {
  const auto start = std::chrono::steady_clock::now();
  Report r;
  r.caps = caps;
  r.input = g;
  const Reduction red = reduce(g);
  r.reduced = red.graph;
  r.classification = classify_reduced(red);
  r.cycle_ratios = cycle_ratios(g);

  switch (r.classification.kind) {
    case Classification::Kind::free_abelian:
      r.residually_finite = {Verdict::yes, "free_abelian_group"};
      r.subgroup_separable = {Verdict::yes, "free_abelian_group"};
      r.cyclic_subgroup_separable = {Verdict::yes, "free_abelian_group"};
      break;
    case Classification::Kind::ascending_hnn: {
      const AscendingHNN h(r.classification.phi);
      r.residually_finite = {Verdict::yes, "ascending_hnn_extension"};
      r.subgroup_separable = h.d == 1 ? Decision{Verdict::yes, "hnn_extension_by_automorphism"}
                                      : Decision{Verdict::no, "strictly_ascending_hnn_extension"};
      r.css = css_decide(h);
      r.cyclic_subgroup_separable = r.css->css ? Decision{Verdict::yes, "no_factor_congruent_to_monomial"}
                                               : Decision{Verdict::no, "factor_congruent_to_monomial_mod_p"};
      break;
    }
    case Classification::Kind::general: {
      r.modular = virtually_Zn_by_free(r.reduced, caps.conjugacy);
      std::string reason;
      switch (r.modular->status) {
        case Verdict::yes:
          reason = "virtually_Zn_by_free";
          break;
        case Verdict::no:
          reason = "modular_image_not_conjugate_into_GLnZ";
          break;
        case Verdict::unknown:
          reason = "modular_test_caps_exhausted";
          break;
      }
      r.residually_finite = r.subgroup_separable = r.cyclic_subgroup_separable = {r.modular->status, reason};
      break;
    }
  }
  if (!implications_hold(r)) throw std::logic_error("analyze: verdicts violate the implication chain");
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace gbs
