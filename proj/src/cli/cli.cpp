#include "gbs/cli/cli.hpp"

#include "gbs/cli/document.hpp"
#include "gbs/cli/report_io.hpp"
#include "gbs/quotient/quotient.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>

namespace gbs {

using nlohmann::json;

namespace {

struct AnalyzeOptions {
  std::string file;
  bool json_out = false;
  bool text_out = false;
  int cap_words = 6;
  int cap_saturation = 64;
  long budget = 50;
  std::string max_index = "1000000000";
  bool strict = false;
  bool timing = false;
};

struct FactorOptions {
  std::string poly;
  bool json_out = false;
};

struct SeparateOptions {
  std::string file;
  std::string g1, g2;
  long budget = 50;
  bool json_out = false;
};

int cmd_analyze(const AnalyzeOptions& o, std::ostream& out) {
  const InputDocument doc = read_document(o.file);
  AnalysisCaps caps;
  caps.budget = o.budget;
  caps.conjugacy.word_length = o.cap_words;
  caps.conjugacy.saturation_steps = o.cap_saturation;
  caps.conjugacy.max_index = Integer(o.max_index);
  const Report r = analyze(doc.graph, caps);
  if (o.json_out)
    out << dump(report_json(r, o.timing));
  else
    out << report_text(r, o.timing);
  const bool unknown = r.residually_finite.verdict == Verdict::unknown ||
                       r.subgroup_separable.verdict == Verdict::unknown ||
                       r.cyclic_subgroup_separable.verdict == Verdict::unknown;
  return o.strict && unknown ? exit_unknown : exit_ok;
}

int cmd_factor(const FactorOptions& o, std::ostream& out) {
  const IntPolynomial f = parse_polynomial(o.poly);
  const Factorization fact = factor_over_Q(f);
  const DegeneracyResult dg = degeneracy_test(fact);
  if (o.json_out) {
    json factors = json::array();
    for (std::size_t k = 0; k < fact.factors.size(); ++k)
      factors.push_back(to_json(dg.per_factor[k], fact.factors[k].multiplicity));
    out << dump({{"polynomial", to_json(f)},
                 {"text", f.to_string()},
                 {"irreducible", fact.factors.size() == 1 && fact.factors[0].multiplicity == 1},
                 {"factors", factors},
                 {"no_degenerate_factor", dg.condition_holds()}});
    return exit_ok;
  }
  out << "polynomial: " << f.to_string() << "\n";
  if (fact.count_with_multiplicity() == 1) out << "irreducible over Q\n";
  for (std::size_t k = 0; k < fact.factors.size(); ++k) {
    const auto& d = dg.per_factor[k];
    out << "factor: " << fact.factors[k].poly.to_string();
    if (fact.factors[k].multiplicity > 1) out << "  (multiplicity " << fact.factors[k].multiplicity << ")";
    out << "  gcd " << d.gcd;
    if (d.every_prime()) {
      out << "  degenerate at every prime";
    } else if (d.degenerate()) {
      out << "  degenerate primes {";
      for (std::size_t i = 0; i < d.primes.size(); ++i) out << (i ? ", " : "") << d.primes[i];
      out << "}";
    }
    out << "\n";
  }
  out << "no_degenerate_factor: " << (dg.condition_holds() ? "yes" : "no") << "\n";
  return exit_ok;
}

int cmd_separate(const SeparateOptions& o, std::ostream& out) {
  const InputDocument doc = read_document(o.file);
  const Classification c = classify_reduced(reduce(doc.graph));
  if (c.kind != Classification::Kind::ascending_hnn)
    throw DocumentError({o.file + ": separate needs an ascending HNN extension, got " + to_string(c.kind)});
  const IntVector g1 = parse_vector(o.g1), g2 = parse_vector(o.g2);
  if (g1.size() != doc.graph.rank || g2.size() != doc.graph.rank)
    throw DocumentError({"--g1/--g2 must have " + std::to_string(doc.graph.rank) + " entries"});
  const AscendingHNN h(c.phi);
  const InvariantChain chain = invariant_chain(h);
  const auto spec = separate_in_A(h, chain, g1, g2, o.budget);
  if (o.json_out) {
    json j = {{"g1", to_json(g1)}, {"g2", to_json(g2)}, {"budget", o.budget}};
    if (spec) {
      json basis = json::array();
      for (Index k = 0; k < spec->K.rank(); ++k) basis.push_back(to_json(IntVector(spec->K.basis().col(k))));
      j["result"] = "separated";
      j["K"] = basis;
      j["family_member"] = spec->origin;
      j["r"] = to_json(spec->r);
      j["index"] = to_json(spec->structure.size());
      j["verified"] = !in_cyclic_plus(g1, g2, spec->K);
    } else {
      j["result"] = "none";
    }
    out << dump(j);
    return exit_ok;
  }
  if (!spec) {
    out << "none (budget " << o.budget << ")\n";
    return exit_ok;
  }
  out << "K basis: ";
  for (Index k = 0; k < spec->K.rank(); ++k) out << (k ? " " : "") << to_string(IntVector(spec->K.basis().col(k)));
  out << "\nfamily member: " << spec->origin << "\n";
  out << "r = " << spec->r << "\n";
  out << "index of K: " << spec->structure.size() << "\n";
  out << "verified: " << to_string(g2) << " not in <" << to_string(g1) << "> + K: "
      << (in_cyclic_plus(g1, g2, spec->K) ? "no" : "yes") << "\n";
  return exit_ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decision procedures for rank-n generalized Baumslag-Solitar groups", "gbs"};
  app.require_subcommand(1);

  AnalyzeOptions ao;
  auto* analyze_cmd = app.add_subcommand("analyze", "Residual finiteness and separability report for a graph");
  analyze_cmd->add_option("file", ao.file, "Input JSON document")->required();
  auto* json_flag = analyze_cmd->add_flag("--json", ao.json_out, "JSON output");
  auto* text_flag = analyze_cmd->add_flag("--text", ao.text_out, "Human-readable output (default)");
  json_flag->excludes(text_flag);
  analyze_cmd->add_option("--cap-words", ao.cap_words, "Maximum word length in the modular search")
      ->check(CLI::NonNegativeNumber);
  analyze_cmd->add_option("--cap-saturation", ao.cap_saturation, "Maximum lattice saturation steps")
      ->check(CLI::NonNegativeNumber);
  analyze_cmd->add_option("--budget", ao.budget, "Separation search budget")->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--max-index", ao.max_index, "Maximum invariant lattice index");
  analyze_cmd->add_flag("--strict", ao.strict, "Exit 1 when any verdict is unknown");
  analyze_cmd->add_flag("--timing", ao.timing, "Include wall-clock time (breaks byte-identical output)");

  FactorOptions fo;
  auto* factor_cmd = app.add_subcommand("factor", "Factor a monic integer polynomial over Q");
  factor_cmd->add_option("poly", fo.poly, "Ascending coefficients, e.g. [-5,-5,-1,1]")->required();
  factor_cmd->add_flag("--json", fo.json_out, "JSON output");

  SeparateOptions so;
  auto* separate_cmd = app.add_subcommand("separate", "Search for a finite quotient separating <g1> from g2 in A");
  separate_cmd->add_option("file", so.file, "Input JSON document (ascending HNN extension)")->required();
  separate_cmd->add_option("--g1", so.g1, "Generator of the cyclic subgroup, e.g. [2,0]")->required();
  separate_cmd->add_option("--g2", so.g2, "Element to separate, e.g. [1,0]")->required();
  separate_cmd->add_option("--budget", so.budget, "Search budget")->check(CLI::PositiveNumber);
  separate_cmd->add_flag("--json", so.json_out, "JSON output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "gbs: " << e.what() << "\n";
    if (analyze_cmd->parsed()) err << analyze_cmd->help();
    return exit_input_error;
  }

  try {
    if (analyze_cmd->parsed()) {
      if (!std::all_of(ao.max_index.begin(), ao.max_index.end(), ::isdigit) || ao.max_index.empty())
        throw DocumentError({"--max-index must be a positive integer"});
      return cmd_analyze(ao, out);
    }
    if (factor_cmd->parsed()) return cmd_factor(fo, out);
    if (separate_cmd->parsed()) return cmd_separate(so, out);
  } catch (const DocumentError& e) {
    for (const auto& m : e.messages()) err << "gbs: " << m << "\n";
    return exit_input_error;
  } catch (const UnsupportedDegree& e) {
    err << "gbs: unsupported: " << e.what() << "\n";
    return exit_input_error;
  } catch (const NotSeparationInstance& e) {
    err << "gbs: not a separation instance: " << e.what() << "\n";
    return exit_not_separation_instance;
  } catch (const std::invalid_argument& e) {
    err << "gbs: " << e.what() << "\n";
    return exit_input_error;
  }
  return exit_input_error;
}

}  // namespace gbs
