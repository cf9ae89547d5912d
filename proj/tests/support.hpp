#pragma once

// Seeded generators and independent reference implementations used by the
// unit tests and the acceptance runner. Nothing here calls into the code it
// is meant to check.

#include "gbs/exact/integer.hpp"
#include "gbs/exact/polynomial.hpp"
#include "gbs/gog/graph.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace gbs::testing {

using Rng = std::mt19937_64;

long uniform(Rng& rng, long lo, long hi);
IntMatrix random_matrix(Rng& rng, Index rows, Index cols, long lo, long hi);
IntMatrix random_nonsingular(Rng& rng, Index n, long lo, long hi);
/// Product of random elementary operations; determinant +-1.
IntMatrix random_unimodular(Rng& rng, Index n, int steps = 8);
IntPolynomial random_monic(Rng& rng, int degree, long lo, long hi);

/// det(xI - M) by Laplace expansion over Z[x].
IntPolynomial cofactor_charpoly(const IntMatrix& m);
/// Laplace expansion determinant.
Integer cofactor_determinant(const IntMatrix& m);

/// Least r >= 1 with M^r = I mod m by plain iteration in 64-bit arithmetic;
/// 0 if not reached within cap.
long naive_mod_order(const IntMatrix& m, long modulus, long cap);

/// Monic factors of f found by exhaustive search within the Landau-Mignotte
/// bound, smallest degree first; degree <= 4 only.
std::vector<IntPolynomial> brute_force_factor(const IntPolynomial& f);
/// True when no monic factor of degree 1..deg/2 exists within the bound.
bool brute_force_irreducible(const IntPolynomial& f);

/// Orientation and vertex-name independent fingerprint of a labeled graph.
std::string canonical_hash(const GraphOfGroups& g);

std::string corpus_dir();
std::vector<std::string> corpus_files();
GraphOfGroups load_corpus(const std::string& name);

}  // namespace gbs::testing
