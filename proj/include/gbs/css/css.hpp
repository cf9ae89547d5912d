#pragma once

#include "gbs/exact/lattice.hpp"
#include "gbs/exact/polynomial.hpp"
#include "gbs/poly/degeneracy.hpp"
#include "gbs/poly/factor.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace gbs {

/// G = <A, t | t a t^-1 = phi(a)> with A = Z^n and phi injective.
struct AscendingHNN {
  IntMatrix phi;
  Integer d = 0;  // |det phi|

  explicit AscendingHNN(IntMatrix phi);
  Index n() const { return phi.rows(); }
};

struct ChainStep {
  IntPolynomial factor;  // char poly of phi on A_i / A_{i-1}
  int degree = 0;
  IntMatrix induced;     // in the basis of A_i / A_{i-1} chosen by the construction
};

/// {0} = A_0 < A_1 < ... < A_l = Z^n, each saturated and phi-invariant with
/// irreducible factor on every step.
struct InvariantChain {
  std::vector<Lattice> lattices;  // l + 1 entries
  std::vector<ChainStep> steps;   // steps[i - 1] describes A_i / A_{i-1}

  std::size_t length() const { return steps.size(); }
};

InvariantChain invariant_chain(const AscendingHNN& h);

struct EigenWitness {
  Integer lambda;
  IntVector a;  // primitive, phi a = lambda a; <lambda a> is not separable from a
};

struct NonSeparableWitness {
  std::size_t i = 0;  // 1-based chain index
  IntPolynomial factor;
  Integer p;
  IntVector a;  // a in A_i \ A_{i-1}
  IntVector pa;
};

struct FailingFactor {
  IntPolynomial factor;
  Integer gcd;
  std::vector<Integer> primes;  // empty means every prime
  Integer witness_prime;        // least degenerate prime
};

struct CssVerdict {
  bool css = false;
  IntPolynomial charpoly;
  Factorization factorization;
  DegeneracyResult degeneracy;
  std::vector<FailingFactor> failing;
  std::optional<EigenWitness> eigen;
  std::vector<NonSeparableWitness> nonseparable;
  std::optional<InvariantChain> chain;  // present when css is false
};

CssVerdict css_decide(const AscendingHNN& h);

/// Integer eigenvalue with |lambda| > 1 of least (|lambda|, lambda), if any.
std::optional<EigenWitness> eigen_witness(const AscendingHNN& h);

/// Rank-2 criterion: no integer eigenvalue of modulus > 1 and tr coprime to d.
bool n2_shortcut(const AscendingHNN& h);

class NotDegenerate : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// a is the first HNF basis vector of saturate(ker f_i(phi) meet A_i) outside
/// A_{i-1}, falling back to the first HNF basis vector of A_i outside A_{i-1}.
NonSeparableWitness nonseparable_witness(const AscendingHNN& h, const InvariantChain& chain, std::size_t i,
                                         const Integer& p);

}  // namespace gbs
