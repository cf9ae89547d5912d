#include "gbs/css/css.hpp"

#include "gbs/exact/normal_form.hpp"
#include "gbs/exact/rat_matrix.hpp"

#include <stdexcept>

namespace gbs {

AscendingHNN::AscendingHNN(IntMatrix m) : phi(std::move(m)) {
  if (phi.rows() != phi.cols() || phi.rows() == 0) throw std::invalid_argument("AscendingHNN: phi must be square");
  d = mp::abs(determinant(phi));
  if (d == 0) throw std::invalid_argument("AscendingHNN: phi is singular");
}

namespace {

// Unimodular P whose first rank(l) columns are a basis of the saturated l.
IntMatrix extend_to_basis(const Lattice& l) {
  const Index n = l.ambient_rank();
  if (l.is_zero()) return identity(n);
  const SmithForm s = snf(l.basis());
  for (Index k = 0; k < l.rank(); ++k)
    if (s.diagonal[static_cast<std::size_t>(k)] != 1) throw std::logic_error("extend_to_basis: lattice not saturated");
  return unimodular_inverse(s.U);
}

Integer least_prime(const FactorDegeneracy& f) { return f.every_prime() ? Integer(2) : f.primes.front(); }

}  // namespace

InvariantChain invariant_chain(const AscendingHNN& h) {
  const Index n = h.n();
  InvariantChain chain;
  Lattice current = Lattice::zero(n);
  chain.lattices.push_back(current);
  while (current.rank() < n) {
    const Index r = current.rank(), q = n - r;
    const IntMatrix p = extend_to_basis(current);
    const IntMatrix p_inv = unimodular_inverse(p);
    const IntMatrix block = (p_inv * h.phi * p).bottomRightCorner(q, q);

    const IntPolynomial f = factor_over_Q(charpoly(block)).factors.front().poly;
    const Lattice kernel = integer_kernel(evaluate(f, block));
    if (kernel.is_zero()) throw std::logic_error("invariant_chain: empty kernel for a factor");
    IntVector w = kernel.basis().col(0);

    IntMatrix lifted(n, f.degree());
    for (int k = 0; k < f.degree(); ++k) {
      IntVector full = IntVector::Zero(n);
      full.tail(q) = w;
      lifted.col(k) = p * full;
      w = block * w;
    }
    const Lattice next = saturate(sum(current, Lattice::from_generators(lifted)));
    if (next.rank() != r + f.degree()) throw std::logic_error("invariant_chain: cyclic span has wrong rank");
    if (!next.contains(image(h.phi, next))) throw std::logic_error("invariant_chain: lattice not invariant");

    // Induced map on next / current in the quotient coordinates.
    const Lattice sub = Lattice::from_generators(IntMatrix((p_inv * next.basis()).bottomRows(q)));
    const RatMatrix wb(sub.basis());
    const RatMatrix wt(IntMatrix(sub.basis().transpose()));
    const RatMatrix x = (wt * wb).inverse() * wt * RatMatrix(block) * wb;
    if (!x.is_integral() || !(charpoly(x.num()) == f))
      throw std::logic_error("invariant_chain: induced block does not match its factor");

    chain.steps.push_back({f, f.degree(), x.num()});
    chain.lattices.push_back(next);
    current = next;
  }
  return chain;
}

std::optional<EigenWitness> eigen_witness(const AscendingHNN& h) {
  std::optional<Integer> best;
  for (const Integer& root : integer_roots(charpoly(h.phi))) {
    if (mp::abs(root) <= 1) continue;
    if (!best || mp::abs(root) < mp::abs(*best) || (mp::abs(root) == mp::abs(*best) && root < *best)) best = root;
  }
  if (!best) return std::nullopt;
  const IntMatrix shifted = h.phi - *best * identity(h.n());
  const Lattice kernel = integer_kernel(shifted);
  EigenWitness w{*best, kernel.basis().col(0)};
  if (h.phi * w.a != *best * w.a || content(w.a) != 1) throw std::logic_error("eigen_witness: verification failed");
  return w;
}

bool n2_shortcut(const AscendingHNN& h) {
  if (h.n() != 2) throw std::invalid_argument("n2_shortcut: rank must be 2");
  for (const Integer& root : integer_roots(charpoly(h.phi)))
    if (mp::abs(root) > 1) return false;
  return gcd(h.phi(0, 0) + h.phi(1, 1), h.d) == 1;
}

NonSeparableWitness nonseparable_witness(const AscendingHNN& h, const InvariantChain& chain, std::size_t i,
                                         const Integer& p) {
  if (i < 1 || i > chain.length()) throw std::invalid_argument("nonseparable_witness: chain index out of range");
  const IntPolynomial& f = chain.steps[i - 1].factor;
  if (!degeneracy_of(f).degenerate_at(p))
    throw NotDegenerate("nonseparable_witness: " + f.to_string() + " is not congruent to x^" +
                        std::to_string(f.degree()) + " modulo " + to_string(p));
  const Lattice& ai = chain.lattices[i];
  const Lattice& below = chain.lattices[i - 1];
  const Lattice eigenspace = saturate(intersect(integer_kernel(evaluate(f, h.phi)), ai));
  std::optional<IntVector> a;
  for (const Lattice* l : {&eigenspace, &ai}) {
    for (Index k = 0; k < l->rank() && !a; ++k)
      if (!below.contains(IntVector(l->basis().col(k)))) a = l->basis().col(k);
    if (a) break;
  }
  if (!a) throw std::logic_error("nonseparable_witness: A_i equals A_{i-1}");
  return NonSeparableWitness{i, f, p, *a, IntVector(p * *a)};
}

CssVerdict css_decide(const AscendingHNN& h) {
  CssVerdict v;
  v.charpoly = charpoly(h.phi);
  v.factorization = factor_over_Q(v.charpoly);
  v.degeneracy = degeneracy_test(v.factorization);
  for (const auto& f : v.degeneracy.per_factor)
    if (f.degenerate()) v.failing.push_back({f.factor, f.gcd, f.primes, least_prime(f)});
  v.css = v.failing.empty();
  if (v.css) return v;

  v.eigen = eigen_witness(h);
  v.chain = invariant_chain(h);
  for (const auto& fail : v.failing) {
    for (std::size_t i = 1; i <= v.chain->length(); ++i) {
      if (!(v.chain->steps[i - 1].factor == fail.factor)) continue;
      v.nonseparable.push_back(nonseparable_witness(h, *v.chain, i, fail.witness_prime));
      break;
    }
  }
  return v;
}

}  // namespace gbs
