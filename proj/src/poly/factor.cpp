#include "gbs/poly/factor.hpp"

#include "poly/modp.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace gbs {

namespace {

using RatPoly = std::vector<Rational>;

void trim(RatPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

RatPoly to_rat(const IntPolynomial& f) {
  RatPoly r;
  for (const auto& c : f.coefficients()) r.emplace_back(c);
  return r;
}

IntPolynomial to_int_monic(RatPoly f) {
  trim(f);
  const Rational lead = f.back();
  std::vector<Integer> c;
  for (auto& v : f) {
    const Rational q = v / lead;
    if (denominator(q) != 1) throw std::logic_error("factor: monic factor with non-integral coefficient");
    c.push_back(numerator(q));
  }
  return IntPolynomial(std::move(c));
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, RatPoly b) {
  trim(b);
  RatPoly rem = a;
  trim(rem);
  if (rem.size() < b.size()) return {{}, rem};
  RatPoly quot(rem.size() - b.size() + 1, Rational(0));
  for (std::size_t k = rem.size(); k-- >= b.size();) {
    const Rational c = rem[k] / b.back();
    quot[k - (b.size() - 1)] = c;
    for (std::size_t j = 0; j < b.size(); ++j) rem[k - (b.size() - 1) + j] -= c * b[j];
    if (k == b.size() - 1) break;
  }
  trim(quot);
  trim(rem);
  return {quot, rem};
}

RatPoly gcd(RatPoly a, RatPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    RatPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  const Rational lead = a.back();
  for (auto& v : a) v /= lead;
  return a;
}

RatPoly derivative(const RatPoly& f) {
  RatPoly d;
  for (std::size_t k = 1; k < f.size(); ++k) d.push_back(f[k] * Integer(k));
  trim(d);
  return d;
}

RatPoly sub(const RatPoly& a, const RatPoly& b) {
  RatPoly r(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

// Yun's squarefree decomposition over Q; entry i has multiplicity i + 1.
std::vector<IntPolynomial> squarefree_parts(const IntPolynomial& f) {
  std::vector<IntPolynomial> parts;
  const RatPoly fr = to_rat(f);
  const RatPoly fd = derivative(fr);
  RatPoly a = gcd(fr, fd);
  RatPoly b = divmod(fr, a).first;
  RatPoly c = divmod(fd, a).first;
  RatPoly d = sub(c, derivative(b));
  while (b.size() > 1) {
    RatPoly ai = gcd(b, d);
    parts.push_back(to_int_monic(ai));
    b = divmod(b, ai).first;
    c = divmod(d, ai).first;
    d = sub(c, derivative(b));
  }
  return parts;
}

IntPolynomial mod_reduce(const IntPolynomial& f, const Integer& m) {
  std::vector<Integer> c;
  for (const auto& v : f.coefficients()) c.push_back(mod_floor(v, m));
  return IntPolynomial(std::move(c));
}

IntPolynomial symmetric(const IntPolynomial& f, const Integer& m) {
  std::vector<Integer> c;
  const Integer half = m / 2;
  for (const auto& v : f.coefficients()) {
    Integer r = mod_floor(v, m);
    if (r > half) r -= m;
    c.push_back(r);
  }
  return IntPolynomial(std::move(c));
}

struct LiftedPair {
  IntPolynomial g, h;
};

// Quadratic Hensel lifting of f = g h (mod p) to a modulus >= target.
LiftedPair hensel_lift(const IntPolynomial& f, const modp::Poly& g0, const modp::Poly& h0, modp::Coeff p,
                       const Integer& target) {
  const modp::Bezout bz = modp::extended_gcd(g0, h0, p);
  IntPolynomial g = modp::lift(g0), h = modp::lift(h0);
  IntPolynomial s = modp::lift(bz.s), t = modp::lift(bz.t);
  Integer m = p;
  const IntPolynomial one = IntPolynomial::constant(1);
  while (m < target) {
    m *= m;
    const IntPolynomial e = mod_reduce(f - g * h, m);
    auto [q, r] = divmod_monic(mod_reduce(s * e, m), h);
    q = mod_reduce(q, m);
    r = mod_reduce(r, m);
    const IntPolynomial g2 = mod_reduce(g + t * e + q * g, m);
    const IntPolynomial h2 = mod_reduce(h + r, m);
    const IntPolynomial b = mod_reduce(s * g2 + t * h2 - one, m);
    auto [c, d] = divmod_monic(mod_reduce(s * b, m), h2);
    s = mod_reduce(s - d, m);
    t = mod_reduce(t - t * b - c * g2, m);
    g = g2;
    h = h2;
  }
  return {g, h};
}

std::vector<IntPolynomial> lift_all(const IntPolynomial& f, const std::vector<modp::Poly>& factors, modp::Coeff p,
                                    const Integer& target) {
  if (factors.size() == 1) return {f};
  modp::Poly rest{1};
  for (std::size_t i = 1; i < factors.size(); ++i) rest = modp::mul(rest, factors[i], p);
  LiftedPair pair = hensel_lift(f, factors[0], rest, p, target);
  std::vector<IntPolynomial> out{pair.g};
  const std::vector<modp::Poly> tail(factors.begin() + 1, factors.end());
  for (auto& piece : lift_all(pair.h, tail, p, target)) out.push_back(std::move(piece));
  return out;
}

Integer isqrt_ceil(const Integer& v) {
  Integer r;
  mpz_sqrt(r.backend().data(), v.backend().data());
  if (r * r < v) r += 1;
  return r;
}

// Every monic factor of h has coefficients bounded by 2^deg * ||h||_2.
Integer coefficient_bound(const IntPolynomial& h) {
  Integer sq = 0;
  for (const auto& c : h.coefficients()) sq += c * c;
  return pow(Integer(2), static_cast<unsigned long>(h.degree())) * isqrt_ceil(sq);
}

// Irreducible factors of a monic squarefree integer polynomial without
// rational roots.
std::vector<IntPolynomial> zassenhaus(const IntPolynomial& h) {
  if (h.degree() <= 3) return {h};
  std::mt19937_64 rng(0x5eed5eedULL + static_cast<unsigned>(h.degree()));
  modp::Coeff best_p = 0;
  std::vector<modp::Poly> best;
  int good_primes = 0;
  for (long p : primes_up_to(20000)) {
    if (p == 2) continue;
    const modp::Poly hp = modp::reduce(h, p);
    if (modp::degree(modp::gcd(hp, modp::derivative(hp, p), p)) != 0) continue;
    std::vector<modp::Poly> fs = modp::factor_squarefree(hp, p, rng);
    if (best_p == 0 || fs.size() < best.size()) {
      best_p = p;
      best = std::move(fs);
    }
    if (++good_primes == 5 || best.size() == 1) break;
  }
  if (best_p == 0) throw std::logic_error("zassenhaus: no admissible prime");
  if (best.size() == 1) return {h};

  const Integer target = 2 * coefficient_bound(h) + 1;
  std::vector<IntPolynomial> lifted = lift_all(h, best, best_p, target);
  Integer modulus = best_p;
  while (modulus < target) modulus *= modulus;

  std::vector<IntPolynomial> found;
  IntPolynomial rest = h;
  std::size_t subset_size = 1;
  while (2 * subset_size <= lifted.size()) {
    bool hit = false;
    std::vector<bool> pick(lifted.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(subset_size), true);
    do {
      IntPolynomial candidate = IntPolynomial::constant(1);
      for (std::size_t i = 0; i < lifted.size(); ++i)
        if (pick[i]) candidate = mod_reduce(candidate * lifted[i], modulus);
      candidate = symmetric(candidate, modulus);
      if (!candidate.is_monic()) continue;
      auto [q, r] = divmod_monic(rest, candidate);
      if (!r.is_zero()) continue;
      found.push_back(candidate);
      rest = q;
      std::vector<IntPolynomial> remaining;
      for (std::size_t i = 0; i < lifted.size(); ++i)
        if (!pick[i]) remaining.push_back(lifted[i]);
      lifted = std::move(remaining);
      hit = true;
      break;
    } while (std::prev_permutation(pick.begin(), pick.end()));
    if (!hit) ++subset_size;
  }
  if (rest.degree() > 0) found.push_back(rest);
  return found;
}

}  // namespace

IntPolynomial Factorization::expand() const {
  IntPolynomial out = IntPolynomial::constant(1);
  for (const auto& f : factors)
    for (unsigned k = 0; k < f.multiplicity; ++k) out *= f.poly;
  return out;
}

std::size_t Factorization::count_with_multiplicity() const {
  std::size_t n = 0;
  for (const auto& f : factors) n += f.multiplicity;
  return n;
}

std::vector<Integer> integer_roots(const IntPolynomial& input) {
  if (input.is_zero()) throw std::invalid_argument("integer_roots: zero polynomial");
  if (!input.is_monic()) throw std::invalid_argument("integer_roots: polynomial not monic");
  std::vector<Integer> roots;
  IntPolynomial f = input;
  while (f.degree() > 0 && f.coefficient(0) == 0) {
    roots.emplace_back(0);
    f = divmod_monic(f, IntPolynomial::linear(0)).first;
  }
  if (f.degree() > 0) {
    for (const Integer& d : divisors(f.coefficient(0))) {
      for (const Integer& candidate : {Integer(-d), d}) {
        while (f.degree() > 0 && f(candidate) == 0) {
          roots.push_back(candidate);
          f = divmod_monic(f, IntPolynomial::linear(candidate)).first;
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

Factorization factor_over_Q(const IntPolynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("factor_over_Q: zero polynomial");
  if (!f.is_monic()) throw std::invalid_argument("factor_over_Q: polynomial not monic");
  if (f.degree() > kMaxFactorDegree)
    throw UnsupportedDegree("factor_over_Q: degree " + std::to_string(f.degree()) + " exceeds supported maximum " +
                            std::to_string(kMaxFactorDegree));

  std::map<Integer, unsigned> root_counts;
  IntPolynomial rest = f;
  for (const Integer& r : integer_roots(f)) {
    ++root_counts[r];
    rest = divmod_monic(rest, IntPolynomial::linear(r)).first;
  }

  Factorization out;
  for (const auto& [r, k] : root_counts) out.factors.push_back({IntPolynomial::linear(r), k});
  if (rest.degree() > 0) {
    const std::vector<IntPolynomial> parts = squarefree_parts(rest);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i].degree() <= 0) continue;
      for (auto& irreducible : zassenhaus(parts[i]))
        out.factors.push_back({std::move(irreducible), static_cast<unsigned>(i + 1)});
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const Factor& a, const Factor& b) { return canonical_less(a.poly, b.poly); });
  if (!(out.expand() == f)) throw std::logic_error("factor_over_Q: reconstruction mismatch");
  return out;
}

}  // namespace gbs
