#include "poly/modp.hpp"

#include <algorithm>
#include <stdexcept>

namespace gbs::modp {

namespace {

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Coeff norm(Coeff v, Coeff p) {
  v %= p;
  return v < 0 ? v + p : v;
}

Coeff inverse(Coeff a, Coeff p) {
  Coeff t = 0, new_t = 1, r = p, new_r = norm(a, p);
  while (new_r != 0) {
    const Coeff q = r / new_r;
    t = t - q * new_t;
    std::swap(t, new_t);
    r = r - q * new_r;
    std::swap(r, new_r);
  }
  if (r != 1) throw std::domain_error("modp inverse: not invertible");
  return norm(t, p);
}

Poly scale(const Poly& a, Coeff c, Coeff p) {
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c % p;
  trim(r);
  return r;
}

void equal_degree_split(const Poly& f, int d, Coeff p, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (degree(f) == d) {
    out.push_back(f);
    return;
  }
  const Integer exponent = (pow(Integer(p), static_cast<unsigned long>(d)) - 1) / 2;
  std::uniform_int_distribution<Coeff> dist(0, p - 1);
  for (;;) {
    Poly a(static_cast<std::size_t>(degree(f)));
    for (auto& c : a) c = dist(rng);
    trim(a);
    if (degree(a) < 1) continue;
    Poly b = sub(powmod(a, exponent, f, p), Poly{1}, p);
    Poly g = gcd(b, f, p);
    if (degree(g) > 0 && degree(g) < degree(f)) {
      equal_degree_split(g, d, p, rng, out);
      equal_degree_split(divmod(f, g, p).first, d, p, rng, out);
      return;
    }
  }
}

}  // namespace

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly reduce(const IntPolynomial& f, Coeff p) {
  Poly r;
  for (const auto& c : f.coefficients()) r.push_back(mod_floor(c, Integer(p)).convert_to<Coeff>());
  trim(r);
  return r;
}

IntPolynomial lift(const Poly& f) {
  std::vector<Integer> c;
  for (Coeff v : f) c.emplace_back(v);
  return IntPolynomial(std::move(c));
}

Poly add(const Poly& a, const Poly& b, Coeff p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % p;
  trim(r);
  return r;
}

Poly sub(const Poly& a, const Poly& b, Coeff p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = norm(r[i] - b[i], p);
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b, Coeff p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  trim(r);
  return r;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, Coeff p) {
  if (b.empty()) throw std::domain_error("modp divmod: division by zero");
  Poly rem = a;
  const int db = degree(b);
  if (degree(a) < db) return {{}, rem};
  const Coeff lead_inv = inverse(b.back(), p);
  Poly quot(static_cast<std::size_t>(degree(a) - db + 1), 0);
  for (int k = degree(a); k >= db; --k) {
    const Coeff c = rem[static_cast<std::size_t>(k)] * lead_inv % p;
    if (c == 0) continue;
    quot[static_cast<std::size_t>(k - db)] = c;
    for (int j = 0; j <= db; ++j) {
      auto& slot = rem[static_cast<std::size_t>(k - db + j)];
      slot = norm(slot - c * b[static_cast<std::size_t>(j)], p);
    }
  }
  trim(quot);
  trim(rem);
  return {quot, rem};
}

Poly monic(const Poly& a, Coeff p) {
  if (a.empty()) return a;
  return scale(a, inverse(a.back(), p), p);
}

Poly gcd(Poly a, Poly b, Coeff p) {
  while (!b.empty()) {
    Poly r = divmod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

Poly derivative(const Poly& a, Coeff p) {
  if (a.size() <= 1) return {};
  Poly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<Coeff>(i % static_cast<std::size_t>(p)) % p;
  trim(r);
  return r;
}

Poly powmod(const Poly& base, const Integer& e, const Poly& modulus, Coeff p) {
  Poly result{1};
  Poly b = divmod(base, modulus, p).second;
  const std::size_t bits = e == 0 ? 0 : mpz_sizeinbase(e.backend().data(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = divmod(mul(result, result, p), modulus, p).second;
    if (mpz_tstbit(e.backend().data(), i)) result = divmod(mul(result, b, p), modulus, p).second;
  }
  return divmod(result, modulus, p).second;
}

Bezout extended_gcd(const Poly& a, const Poly& b, Coeff p) {
  Poly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, p);
    Poly s2 = sub(s0, mul(q, s1, p), p);
    Poly t2 = sub(t0, mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const Coeff inv = inverse(r0.back(), p);
  return Bezout{scale(r0, inv, p), scale(s0, inv, p), scale(t0, inv, p)};
}

std::vector<Poly> factor_squarefree(const Poly& input, Coeff p, std::mt19937_64& rng) {
  std::vector<Poly> out;
  Poly f = monic(input, p);
  const Poly x{0, 1};
  Poly h = x;
  for (int d = 1; degree(f) >= 2 * d; ++d) {
    h = powmod(h, Integer(p), f, p);
    Poly g = gcd(sub(h, x, p), f, p);
    if (degree(g) > 0) {
      equal_degree_split(g, d, p, rng, out);
      f = divmod(f, g, p).first;
      h = divmod(h, f, p).second;
    }
  }
  if (degree(f) > 0) out.push_back(f);
  std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

}  // namespace gbs::modp
