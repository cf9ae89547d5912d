#pragma once

#include "gbs/exact/polynomial.hpp"

#include <stdexcept>
#include <vector>

namespace gbs {

inline constexpr int kMaxFactorDegree = 12;

class UnsupportedDegree : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct Factor {
  IntPolynomial poly;  // monic, irreducible over Q
  unsigned multiplicity = 1;
};

/// Irreducible factors ordered by degree, then by coefficient list.
struct Factorization {
  std::vector<Factor> factors;

  IntPolynomial expand() const;
  std::size_t count_with_multiplicity() const;
};

/// Integer roots of a monic polynomial, with multiplicity, ascending.
std::vector<Integer> integer_roots(const IntPolynomial& f);

/// Complete factorization of a monic integer polynomial of degree <= 12 into
/// monic irreducibles: rational roots first, then Zassenhaus (modular
/// factorization, Hensel lifting, subset recombination) on the squarefree
/// parts of the remainder.
Factorization factor_over_Q(const IntPolynomial& f);

}  // namespace gbs
