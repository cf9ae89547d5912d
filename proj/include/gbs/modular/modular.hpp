#pragma once

#include "gbs/exact/lattice.hpp"
#include "gbs/exact/rat_matrix.hpp"
#include "gbs/gog/graph.hpp"
#include "gbs/verdict.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gbs {

/// Image of the modular homomorphism, with vertex groups identified with the
/// base vertex group along the spanning tree.
struct ModularImage {
  std::string base_vertex;
  std::vector<RatMatrix> generators;        // one per non-tree edge
  std::vector<std::string> generator_edges;  // edge id of each generator
  std::vector<RatMatrix> transport;          // per vertex index: base -> vertex
};

/// Transport across e from iota to tau is incl_to * incl_from^{-1}; the
/// generator of a non-tree edge u -> w is T_w^{-1} M_e T_u.
ModularImage modular_generators(const GraphOfGroups& g);

struct ConjugacyCaps {
  int word_length = 6;
  int saturation_steps = 64;
  Integer max_index = Integer(1000000000);
};

/// Letter +k is generator k (1-based), -k its inverse.
using Word = std::vector<int>;
std::string word_to_string(const Word& w);
RatMatrix evaluate_word(const std::vector<RatMatrix>& gens, const Word& w);

/// Why a matrix cannot lie in a conjugate of GL(n,Z); empty if it might.
std::optional<std::string> integrality_defect(const RatMatrix& m);

struct ConjugacyResult {
  Verdict status = Verdict::unknown;

  // yes: B^{-1} g B is integral and unimodular for every generator g, and
  // lattice = B Z^n is invariant under the generators and their inverses.
  RatMatrix conjugator;
  std::vector<IntMatrix> conjugated;
  Lattice lattice_numerator;  // den * (B Z^n)
  Integer lattice_denominator = 1;

  // no
  Word certificate;
  RatMatrix certificate_matrix;
  std::string defect;

  // diagnostics
  long words_checked = 0;
  int saturation_steps_used = 0;
  std::vector<Integer> index_trace;  // [L_k : Z^n]
  std::string unknown_reason;
};

ConjugacyResult conjugate_into_GLnZ(const std::vector<RatMatrix>& gens, Index n, const ConjugacyCaps& caps);

struct ZnByFree {
  Verdict status = Verdict::unknown;
  ModularImage image;
  ConjugacyResult conjugacy;
  /// yes only: integral lattice in base coordinates, invariant under the
  /// modular image and contained in every transported edge and vertex group.
  std::optional<Lattice> normal_lattice;
  Integer rescaling = 1;
};

ZnByFree virtually_Zn_by_free(const GraphOfGroups& g, const ConjugacyCaps& caps);

}  // namespace gbs
