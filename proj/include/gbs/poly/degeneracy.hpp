#pragma once

#include "gbs/poly/factor.hpp"

#include <vector>

namespace gbs {

/// f is congruent to x^deg modulo p exactly for the primes p dividing the gcd
/// of its non-leading coefficients. A gcd of 0 (f = x^k) means every prime.
struct FactorDegeneracy {
  IntPolynomial factor;
  Integer gcd = 0;
  std::vector<Integer> primes;  // empty when gcd is 0 or 1

  bool every_prime() const { return gcd == 0; }
  bool degenerate() const { return gcd != 1; }
  bool degenerate_at(const Integer& p) const;
};

struct DegeneracyResult {
  std::vector<FactorDegeneracy> per_factor;

  /// True when no factor is degenerate at any prime.
  bool condition_holds() const;
};

FactorDegeneracy degeneracy_of(const IntPolynomial& f);
DegeneracyResult degeneracy_test(const Factorization& fact);

}  // namespace gbs
