#include "gbs/cli/report_io.hpp"

#include <limits>
#include <sstream>

namespace gbs {

using nlohmann::json;

json to_json(const Integer& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return v.convert_to<long long>();
  return to_string(v);
}

json to_json(const Rational& v) {
  if (denominator(v) == 1) return to_json(numerator(v));
  return to_string(v);
}

json to_json(const IntVector& v) {
  json a = json::array();
  for (Index k = 0; k < v.size(); ++k) a.push_back(to_json(v(k)));
  return a;
}

json to_json(const IntMatrix& m) {
  json rows = json::array();
  for (Index r = 0; r < m.rows(); ++r) rows.push_back(to_json(IntVector(m.row(r).transpose())));
  return rows;
}

json to_json(const IntPolynomial& f) {
  json c = json::array();
  for (const auto& v : f.coefficients()) c.push_back(to_json(v));
  return c;
}

json to_json(const GraphOfGroups& g) {
  json edges = json::array();
  for (const auto& e : g.edges)
    edges.push_back({{"id", e.id},
                     {"from", e.from},
                     {"to", e.to},
                     {"incl_from", to_json(e.incl_from)},
                     {"incl_to", to_json(e.incl_to)},
                     {"labels", {to_json(e.label_from()), to_json(e.label_to())}}});
  return {{"rank", g.rank}, {"vertices", g.vertices}, {"edges", edges}};
}

json to_json(const FactorDegeneracy& f, unsigned multiplicity) {
  json primes = json::array();
  for (const auto& p : f.primes) primes.push_back(to_json(p));
  return {{"factor", to_json(f.factor)},
          {"text", f.factor.to_string()},
          {"multiplicity", multiplicity},
          {"degeneracy_gcd", to_json(f.gcd)},
          {"degenerate_primes", f.every_prime() ? json("all") : primes},
          {"degenerate", f.degenerate()}};
}

namespace {

json lattice_json(const Lattice& l) {
  json cols = json::array();
  for (Index k = 0; k < l.rank(); ++k) cols.push_back(to_json(IntVector(l.basis().col(k))));
  return cols;
}

json decision_json(const Decision& d) { return {{"verdict", to_string(d.verdict)}, {"reason", d.reason}}; }

json classification_json(const Classification& c) {
  json out = {{"kind", to_string(c.kind)}};
  if (c.kind == Classification::Kind::ascending_hnn) {
    out["phi"] = to_json(c.phi);
    out["d"] = to_json(c.d);
    out["loop"] = c.loop_id;
    out["flipped"] = c.flipped;
  }
  json log = json::array();
  for (const auto& s : c.collapse_log)
    log.push_back({{"edge", s.edge_id}, {"removed", s.removed}, {"kept", s.kept}, {"transform", to_json(s.transform)}});
  out["collapses"] = log;
  return out;
}

json css_json(const CssVerdict& v) {
  json factors = json::array();
  for (std::size_t k = 0; k < v.factorization.factors.size(); ++k)
    factors.push_back(to_json(v.degeneracy.per_factor[k], v.factorization.factors[k].multiplicity));
  json out = {{"char_poly", {{"coefficients", to_json(v.charpoly)}, {"text", v.charpoly.to_string()}}},
              {"factorization", factors}};
  json witnesses = json::object();
  if (v.eigen)
    witnesses["eigen"] = {{"lambda", to_json(v.eigen->lambda)},
                          {"a", to_json(v.eigen->a)},
                          {"subgroup_generator", to_json(IntVector(v.eigen->lambda * v.eigen->a))},
                          {"claim", "<lambda a> is not separable from a; <a, t> is BS(1, lambda)"}};
  json ns = json::array();
  for (const auto& w : v.nonseparable)
    ns.push_back({{"i", w.i},
                  {"factor", w.factor.to_string()},
                  {"p", to_json(w.p)},
                  {"a", to_json(w.a)},
                  {"subgroup_generator", to_json(w.pa)},
                  {"claim", "no a in A_i - A_{i-1} has <p a> separable"}});
  if (!ns.empty()) witnesses["nonseparable"] = ns;
  if (v.chain) {
    json chain = json::array();
    for (std::size_t i = 1; i < v.chain->lattices.size(); ++i)
      chain.push_back({{"basis", lattice_json(v.chain->lattices[i])},
                       {"factor", v.chain->steps[i - 1].factor.to_string()},
                       {"induced", to_json(v.chain->steps[i - 1].induced)}});
    out["invariant_chain"] = chain;
  }
  out["witnesses"] = witnesses;
  return out;
}

json rat_matrix_json(const RatMatrix& m) { return {{"num", to_json(m.num())}, {"den", to_json(m.den())}}; }

json modular_json(const ZnByFree& z) {
  json gens = json::array();
  for (std::size_t k = 0; k < z.image.generators.size(); ++k)
    gens.push_back({{"edge", z.image.generator_edges[k]},
                    {"matrix", rat_matrix_json(z.image.generators[k])},
                    {"det", to_json(z.image.generators[k].determinant())}});
  json out = {{"base_vertex", z.image.base_vertex}, {"generators", gens}, {"status", to_string(z.status)}};
  const ConjugacyResult& c = z.conjugacy;
  out["words_checked"] = c.words_checked;
  out["saturation_steps"] = c.saturation_steps_used;
  json trace = json::array();
  for (const auto& v : c.index_trace) trace.push_back(to_json(v));
  out["index_trace"] = trace;
  if (z.status == Verdict::yes) {
    out["conjugator"] = rat_matrix_json(c.conjugator);
    json conj = json::array();
    for (const auto& m : c.conjugated) conj.push_back(to_json(m));
    out["conjugated_generators"] = conj;
    if (z.normal_lattice) out["normal_lattice"] = lattice_json(*z.normal_lattice);
  } else if (z.status == Verdict::no) {
    out["certificate"] = {{"word", word_to_string(c.certificate)},
                          {"matrix", rat_matrix_json(c.certificate_matrix)},
                          {"defect", c.defect}};
  } else {
    out["unknown_reason"] = c.unknown_reason;
  }
  return out;
}

}  // namespace

json report_json(const Report& r, bool timing) {
  json ratios = json::array();
  for (const auto& q : r.cycle_ratios) ratios.push_back(to_json(q));
  json out = {{"input", to_json(r.input)},
              {"reduced_graph", to_json(r.reduced)},
              {"classification", classification_json(r.classification)},
              {"cycle_ratios", ratios},
              {"residually_finite", decision_json(r.residually_finite)},
              {"subgroup_separable", decision_json(r.subgroup_separable)},
              {"cyclic_subgroup_separable", decision_json(r.cyclic_subgroup_separable)},
              {"summary",
               {{"rf", to_string(r.residually_finite.verdict)},
                {"subsep", to_string(r.subgroup_separable.verdict)},
                {"css", to_string(r.cyclic_subgroup_separable.verdict)}}},
              {"caps",
               {{"budget", r.caps.budget},
                {"cap_words", r.caps.conjugacy.word_length},
                {"cap_saturation", r.caps.conjugacy.saturation_steps},
                {"max_index", to_json(r.caps.conjugacy.max_index)}}}};
  if (r.css) out["ascending"] = css_json(*r.css);
  if (r.modular) out["modular"] = modular_json(*r.modular);
  if (timing) out["timing_seconds"] = r.seconds;
  return out;
}

std::string report_text(const Report& r, bool timing) {
  std::ostringstream s;
  s << "classification: " << to_string(r.classification.kind) << "\n";
  if (!r.classification.collapse_log.empty()) {
    s << "collapsed edges:";
    for (const auto& c : r.classification.collapse_log) s << " " << c.edge_id;
    s << "\n";
  }
  if (r.classification.kind == Classification::Kind::ascending_hnn)
    s << "phi: " << to_string(r.classification.phi) << "  d = " << r.classification.d << "\n";
  s << "residually_finite: " << to_string(r.residually_finite.verdict) << " (" << r.residually_finite.reason << ")\n";
  s << "subgroup_separable: " << to_string(r.subgroup_separable.verdict) << " (" << r.subgroup_separable.reason
    << ")\n";
  s << "cyclic_subgroup_separable: " << to_string(r.cyclic_subgroup_separable.verdict) << " ("
    << r.cyclic_subgroup_separable.reason << ")\n";
  if (r.css) {
    s << "char_poly: " << r.css->charpoly.to_string() << "\n";
    s << "factors:\n";
    for (std::size_t k = 0; k < r.css->factorization.factors.size(); ++k) {
      const auto& f = r.css->factorization.factors[k];
      const auto& dg = r.css->degeneracy.per_factor[k];
      s << "  " << f.poly.to_string();
      if (f.multiplicity > 1) s << "  (multiplicity " << f.multiplicity << ")";
      s << "  gcd " << dg.gcd;
      if (dg.degenerate()) {
        s << "  degenerate at ";
        if (dg.every_prime()) {
          s << "every prime";
        } else {
          for (std::size_t i = 0; i < dg.primes.size(); ++i) s << (i ? ", " : "") << dg.primes[i];
        }
      }
      s << "\n";
    }
    if (r.css->eigen)
      s << "eigen witness: lambda = " << r.css->eigen->lambda << ", a = " << to_string(r.css->eigen->a)
        << "; <lambda a> is not separable from a\n";
    for (const auto& w : r.css->nonseparable)
      s << "non-separable witness: i = " << w.i << ", p = " << w.p << ", a = " << to_string(w.a) << ", <"
        << to_string(w.pa) << "> is not separable\n";
  }
  if (r.modular) {
    const auto& z = *r.modular;
    s << "modular generators: " << z.image.generators.size() << " (base vertex " << z.image.base_vertex << ")\n";
    if (z.status == Verdict::yes) {
      s << "conjugator: " << to_string(z.conjugacy.conjugator.num()) << " / " << z.conjugacy.conjugator.den() << "\n";
      if (z.normal_lattice) s << "normal lattice basis: " << to_string(z.normal_lattice->basis()) << "\n";
    } else if (z.status == Verdict::no) {
      s << "certificate: " << word_to_string(z.conjugacy.certificate) << ": " << z.conjugacy.defect << "\n";
    } else {
      s << "inconclusive: " << z.conjugacy.unknown_reason << "\n";
    }
  }
  if (!r.cycle_ratios.empty()) {
    s << "cycle ratios:";
    for (const auto& q : r.cycle_ratios) s << " " << to_string(q);
    s << "\n";
  }
  if (timing) s << "time: " << r.seconds << " s\n";
  return s.str();
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace gbs
