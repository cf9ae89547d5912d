#include "gbs/exact/integer.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace gbs {

IntMatrix int_matrix(std::initializer_list<std::initializer_list<long>> rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = r == 0 ? 0 : static_cast<Index>(rows.begin()->size());
  IntMatrix m(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Index>(row.size()) != c) throw std::invalid_argument("int_matrix: ragged rows");
    Index j = 0;
    for (long v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

IntVector int_vector(std::initializer_list<long> entries) {
  IntVector v(static_cast<Index>(entries.size()));
  Index i = 0;
  for (long e : entries) v(i++) = e;
  return v;
}

IntMatrix identity(Index n) {
  IntMatrix m = IntMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Integer floor_div(const Integer& a, const Integer& b) {
  if (b == 0) throw std::domain_error("floor_div: division by zero");
  Integer q;
  mpz_fdiv_q(q.backend().data(), a.backend().data(), b.backend().data());
  return q;
}

Integer mod_floor(const Integer& a, const Integer& b) {
  if (b == 0) throw std::domain_error("mod_floor: modulus zero");
  Integer r;
  mpz_mod(r.backend().data(), a.backend().data(), b.backend().data());
  return r;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.backend().data(), a.backend().data(), b.backend().data());
  return g;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.backend().data(), a.backend().data(), b.backend().data());
  return l;
}

ExtendedGcd extended_gcd(const Integer& a, const Integer& b) {
  ExtendedGcd r;
  mpz_gcdext(r.g.backend().data(), r.s.backend().data(), r.t.backend().data(), a.backend().data(),
             b.backend().data());
  return r;
}

Integer content(const IntVector& v) {
  Integer g = 0;
  for (Index i = 0; i < v.size(); ++i) g = gcd(g, v(i));
  return g;
}

Integer content(const IntMatrix& m) {
  Integer g = 0;
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) g = gcd(g, m(i, j));
  return g;
}

bool is_probable_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.backend().data(), 30) > 0;
}

namespace {

Integer pollard_rho(const Integer& n) {
  if (mod_floor(n, 2) == 0) return 2;
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  for (;;) {
    Integer c = Integer(rng() % 1000003) + 1;
    Integer x = Integer(rng() % 1000003) + 2;
    Integer y = x;
    Integer d = 1;
    auto step = [&](const Integer& v) { return mod_floor(v * v + c, n); };
    while (d == 1) {
      x = step(x);
      y = step(step(y));
      d = gcd(mp::abs(x - y), n);
    }
    if (d != n) return d;
  }
}

void factor_into(Integer n, std::map<Integer, unsigned>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    ++out[n];
    return;
  }
  Integer d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& value) {
  if (value == 0) throw std::domain_error("factor_integer: zero");
  Integer n = mp::abs(value);
  std::map<Integer, unsigned> found;
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
    while (mod_floor(n, p) == 0) {
      ++found[Integer(p)];
      n /= p;
    }
  }
  for (long p = 17; p < 5000 && Integer(p) * p <= n; p += 2) {
    while (mod_floor(n, p) == 0) {
      ++found[Integer(p)];
      n /= p;
    }
  }
  factor_into(n, found);
  return {found.begin(), found.end()};
}

std::vector<Integer> prime_divisors(const Integer& n) {
  std::vector<Integer> out;
  for (const auto& [p, e] : factor_integer(n)) out.push_back(p);
  return out;
}

std::vector<Integer> divisors(const Integer& n) {
  std::vector<Integer> out{1};
  for (const auto& [p, e] : factor_integer(n)) {
    const std::size_t existing = out.size();
    Integer power = 1;
    for (unsigned k = 1; k <= e; ++k) {
      power *= p;
      for (std::size_t i = 0; i < existing; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<long> primes_up_to(long bound) {
  std::vector<long> primes;
  if (bound < 2) return primes;
  std::vector<bool> composite(static_cast<std::size_t>(bound + 1), false);
  for (long i = 2; i <= bound; ++i) {
    if (composite[static_cast<std::size_t>(i)]) continue;
    primes.push_back(i);
    for (long j = i * i; j <= bound; j += i) composite[static_cast<std::size_t>(j)] = true;
  }
  return primes;
}

Integer pow(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.backend().data(), base.backend().data(), exponent);
  return r;
}

std::string to_string(const Integer& v) { return v.str(); }

std::string to_string(const Rational& v) { return v.str(); }

std::string to_string(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (Index i = 0; i < v.size(); ++i) os << (i ? "," : "") << v(i);
  os << ')';
  return os.str();
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (Index i = 0; i < m.rows(); ++i) {
    os << (i ? "," : "") << '[';
    for (Index j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

RationalMatrix to_rational(const IntMatrix& m) {
  RationalMatrix r(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

}  // namespace gbs
