#include "gbs/poly/degeneracy.hpp"

namespace gbs {

bool FactorDegeneracy::degenerate_at(const Integer& p) const {
  return gcd == 0 || mod_floor(gcd, p) == 0;
}

bool DegeneracyResult::condition_holds() const {
  for (const auto& f : per_factor)
    if (f.degenerate()) return false;
  return true;
}

FactorDegeneracy degeneracy_of(const IntPolynomial& f) {
  FactorDegeneracy out;
  out.factor = f;
  for (int k = 0; k < f.degree(); ++k) out.gcd = gcd(out.gcd, f.coefficient(static_cast<std::size_t>(k)));
  if (out.gcd > 1) out.primes = prime_divisors(out.gcd);
  return out;
}

DegeneracyResult degeneracy_test(const Factorization& fact) {
  DegeneracyResult out;
  for (const auto& f : fact.factors) out.per_factor.push_back(degeneracy_of(f.poly));
  return out;
}

}  // namespace gbs
