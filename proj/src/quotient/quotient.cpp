#include "gbs/quotient/quotient.hpp"

#include <set>

namespace gbs {

IntVector twisted_power_sum(const IntMatrix& phi, const IntVector& a, unsigned long i, unsigned long m) {
  IntMatrix step = identity(phi.rows());
  for (unsigned long k = 0; k < i; ++k) step = step * phi;
  IntVector term = a;
  IntVector total = IntVector::Zero(a.size());
  for (unsigned long k = 0; k < m; ++k) {
    total += term;
    term = step * term;
  }
  return total;
}

void check_spec(const FiniteQuotientSpec& s) {
  const Index n = s.phi.rows();
  if (!s.K.is_full_rank()) throw std::logic_error("quotient spec: K is not of finite index");
  if (!s.K.contains(image(s.phi, s.K))) throw std::logic_error("quotient spec: phi(K) not contained in K");
  const IntMatrix power = power_mod(s.phi, s.r, s.K);
  for (Index k = 0; k < n; ++k) {
    IntVector e = IntVector::Zero(n);
    e(k) = 1;
    if (!s.K.contains(IntVector(e - power.col(k)))) throw std::logic_error("quotient spec: a - phi^r(a) not in K");
  }
  for (const Integer& q : prime_divisors(s.r))
    if (acts_as_identity(power_mod(s.phi, s.r / q, s.K), s.K)) throw std::logic_error("quotient spec: r not least");
}

std::optional<FiniteQuotientSpec> make_quotient(const IntMatrix& phi, const Lattice& K) {
  if (!K.is_full_rank()) throw std::invalid_argument("make_quotient: K must have finite index");
  if (!K.contains(image(phi, K))) throw NotInvariant("make_quotient: phi(K) is not contained in K");
  if (!(preimage(phi, K) == K)) return std::nullopt;
  FiniteQuotientSpec s{phi, K, automorphism_order(phi, K), quotient_structure(K), ""};
  check_spec(s);
  return s;
}

FiniteQuotientSpec coprime_quotient(const IntMatrix& phi, const Integer& m) {
  if (m < 1) throw std::invalid_argument("coprime_quotient: m must be positive");
  const Integer d = mp::abs(determinant(phi));
  if (gcd(m, d) != 1)
    throw std::invalid_argument("coprime_quotient: gcd(" + to_string(m) + ", " + to_string(d) + ") is not 1");
  auto s = make_quotient(phi, Lattice::scaled_standard(phi.rows(), m));
  if (!s) throw std::logic_error("coprime_quotient: induced map not bijective");
  s->origin = to_string(m) + "A";
  return *s;
}

Lattice k_subgroup(const IntMatrix& phi, const InvariantChain& chain, const Integer& p, unsigned m, std::size_t i) {
  if (i >= chain.length()) throw std::invalid_argument("k_subgroup: need 0 <= i < l");
  Lattice current = sum(chain.lattices[i], Lattice::scaled_standard(phi.rows(), pow(p, m)));
  for (;;) {
    Lattice next = preimage(phi, current);
    if (next == current) return current;
    current = std::move(next);
  }
}

Integer element_order(const FiniteQuotientSpec& spec, const IntVector& a) { return spec.structure.order(a); }

bool in_cyclic_plus(const IntVector& g1, const IntVector& g2, const Lattice& K) {
  IntMatrix gens(K.ambient_rank(), K.rank() + 1);
  gens.leftCols(K.rank()) = K.basis();
  gens.col(K.rank()) = g1;
  return Lattice::from_generators(gens).contains(g2);
}

unsigned k_family_depth(long p, long budget) {
  const Integer limit = Integer(budget) * budget;
  unsigned m = 0;
  Integer power = p;
  while (power <= limit) {
    ++m;
    power *= p;
  }
  return m;
}

namespace {

struct Member {
  Lattice K;
  std::string origin;
  Integer index;
};

}  // namespace

std::optional<FiniteQuotientSpec> separate_in_A(const AscendingHNN& h, const InvariantChain& chain,
                                                const IntVector& g1, const IntVector& g2, long budget) {
  const Index n = h.n();
  if (g1.size() != n || g2.size() != n) throw std::invalid_argument("separate_in_A: vector length mismatch");
  if (Lattice::from_generators(IntMatrix(g1)).contains(g2))
    throw NotSeparationInstance("separate_in_A: " + to_string(g2) + " lies in <" + to_string(g1) + ">");

  std::vector<Member> members;
  std::set<std::string> seen;
  auto finish = [&](const Member& m) {
    auto s = make_quotient(h.phi, m.K);
    if (!s) throw std::logic_error("separate_in_A: family member without a quotient");
    s->origin = m.origin;
    return s;
  };
  auto consider = [&](Lattice K, std::string origin) -> bool {
    if (!seen.insert(to_string(K.basis())).second) return false;
    const Integer idx = *index(K, Lattice::standard(n));
    members.push_back({std::move(K), std::move(origin), idx});
    return !in_cyclic_plus(g1, g2, members.back().K);
  };

  for (long m = 1; m <= budget; ++m) {
    if (gcd(Integer(m), h.d) != 1) continue;
    if (consider(Lattice::scaled_standard(n, m), std::to_string(m) + "A")) return finish(members.back());
  }
  for (long p : primes_up_to(budget)) {
    const unsigned depth = k_family_depth(p, budget);
    for (unsigned m = 1; m <= depth; ++m)
      for (std::size_t i = 0; i < chain.length(); ++i)
        if (consider(k_subgroup(h.phi, chain, Integer(p), m, i),
                     "K(" + std::to_string(p) + "^" + std::to_string(m) + "," + std::to_string(i) + ")"))
          return finish(members.back());
  }
  const std::size_t base = members.size();
  for (std::size_t x = 0; x < base; ++x)
    for (std::size_t y = x + 1; y < base; ++y) {
      // Coprime indices: A/(K1 meet K2) splits and nothing new is separated.
      if (gcd(members[x].index, members[y].index) == 1) continue;
      if (consider(intersect(members[x].K, members[y].K), members[x].origin + " meet " + members[y].origin))
        return finish(members.back());
    }
  return std::nullopt;
}

}  // namespace gbs
