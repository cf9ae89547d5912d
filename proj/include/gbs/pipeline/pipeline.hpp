#pragma once

#include "gbs/css/css.hpp"
#include "gbs/gog/graph.hpp"
#include "gbs/modular/modular.hpp"
#include "gbs/verdict.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gbs {

struct AnalysisCaps {
  ConjugacyCaps conjugacy;
  long budget = 50;
};

struct Decision {
  Verdict verdict = Verdict::unknown;
  std::string reason;
};

struct Report {
  GraphOfGroups input;
  GraphOfGroups reduced;
  Classification classification;
  std::vector<Rational> cycle_ratios;  // of the input graph

  Decision residually_finite;
  Decision subgroup_separable;
  Decision cyclic_subgroup_separable;

  std::optional<CssVerdict> css;      // ascending_hnn
  std::optional<ZnByFree> modular;   // general
  AnalysisCaps caps;
  double seconds = 0;
};

/// Throws std::invalid_argument for invalid graphs.
Report analyze(const GraphOfGroups& g, const AnalysisCaps& caps = {});

/// subgroup separable => cyclic subgroup separable => residually finite,
/// with unknown absorbing.
bool implications_hold(const Report& r);

}  // namespace gbs
