#pragma once

// Dense polynomial arithmetic over F_p for word-sized odd primes p < 2^31.
// Used only to seed Hensel lifting.

#include "gbs/exact/polynomial.hpp"

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace gbs::modp {

using Coeff = std::int64_t;
using Poly = std::vector<Coeff>;  // ascending, no trailing zeros

Poly reduce(const IntPolynomial& f, Coeff p);
IntPolynomial lift(const Poly& f);

int degree(const Poly& f);
Poly add(const Poly& a, const Poly& b, Coeff p);
Poly sub(const Poly& a, const Poly& b, Coeff p);
Poly mul(const Poly& a, const Poly& b, Coeff p);
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, Coeff p);
Poly monic(const Poly& a, Coeff p);
Poly gcd(Poly a, Poly b, Coeff p);
Poly derivative(const Poly& a, Coeff p);
Poly powmod(const Poly& base, const Integer& e, const Poly& modulus, Coeff p);

struct Bezout {
  Poly g, s, t;  // s*a + t*b = g, g monic
};
Bezout extended_gcd(const Poly& a, const Poly& b, Coeff p);

/// Monic irreducible factors of a monic squarefree f (deterministic order).
std::vector<Poly> factor_squarefree(const Poly& f, Coeff p, std::mt19937_64& rng);

}  // namespace gbs::modp
