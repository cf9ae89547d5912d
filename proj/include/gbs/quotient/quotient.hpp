#pragma once

#include "gbs/css/css.hpp"
#include "gbs/exact/lattice.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gbs {

/// Data of the finite-index normal subgroup <K, t^r> of an ascending HNN
/// extension: phi(K) in K and a - phi^r(a) in K for all a, r least.
struct FiniteQuotientSpec {
  IntMatrix phi;
  Lattice K;
  Integer r;
  QuotientStructure structure;
  std::string origin;  // family member that produced K, e.g. "5A" or "K(2^3,1)"
};

class NotInvariant : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// a + phi^i(a) + ... + phi^{(m-1)i}(a)
IntVector twisted_power_sum(const IntMatrix& phi, const IntVector& a, unsigned long i, unsigned long m);

/// nullopt when phi induces a non-bijective map on Z^n / K; throws
/// NotInvariant when phi(K) is not contained in K.
std::optional<FiniteQuotientSpec> make_quotient(const IntMatrix& phi, const Lattice& K);

/// K = mA. Requires gcd(m, d) = 1.
FiniteQuotientSpec coprime_quotient(const IntMatrix& phi, const Integer& m);

/// K_{p^m,i} = {a : phi^j(a) in A_i + p^m A for some j >= 0}, 0 <= i < l.
Lattice k_subgroup(const IntMatrix& phi, const InvariantChain& chain, const Integer& p, unsigned m, std::size_t i);

/// Order of a + K in Z^n / K.
Integer element_order(const FiniteQuotientSpec& spec, const IntVector& a);

/// Throws unless phi(K) lies in K, a - phi^r(a) lies in K for every a, and r is least.
void check_spec(const FiniteQuotientSpec& spec);

/// g2 in <g1> + K
bool in_cyclic_plus(const IntVector& g1, const IntVector& g2, const Lattice& K);

class NotSeparationInstance : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Largest m with p^m <= budget^2.
unsigned k_family_depth(long p, long budget);

/// First K in the search family with g2 not in <g1> + K: mA (gcd(m, d) = 1,
/// m <= budget), then K_{p^m,i} (p <= budget, m <= k_family_depth), then
/// intersections of two members whose indices share a prime. Throws
/// NotSeparationInstance when g2 lies in <g1>.
std::optional<FiniteQuotientSpec> separate_in_A(const AscendingHNN& h, const InvariantChain& chain,
                                                const IntVector& g1, const IntVector& g2, long budget);

}  // namespace gbs
