#include "gbs/exact/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gbs {

IntPolynomial::IntPolynomial(std::vector<Integer> ascending) : coeffs_(std::move(ascending)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> ascending) {
  for (long c : ascending) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::constant(const Integer& c) { return IntPolynomial(std::vector<Integer>{c}); }

IntPolynomial IntPolynomial::monomial(const Integer& c, std::size_t degree) {
  std::vector<Integer> v(degree + 1, Integer(0));
  v[degree] = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::linear(const Integer& root) {
  return IntPolynomial(std::vector<Integer>{-root, Integer(1)});
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPolynomial::operator()(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Integer(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Integer(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Integer> out(coeffs_.size() + o.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

IntPolynomial operator-(const IntPolynomial& a) {
  IntPolynomial r = a;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Integer& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const Integer mag = mp::abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || k == 0) os << mag;
    if (k >= 1) os << 'x';
    if (k >= 2) os << '^' << k;
    first = false;
  }
  return os.str();
}

bool canonical_less(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.coefficients().begin(), a.coefficients().end(),
                                      b.coefficients().begin(), b.coefficients().end());
}

IntPolynomial derivative(const IntPolynomial& f) {
  if (f.degree() <= 0) return {};
  std::vector<Integer> d(static_cast<std::size_t>(f.degree()));
  for (int k = 1; k <= f.degree(); ++k) d[static_cast<std::size_t>(k - 1)] = f.coefficient(k) * k;
  return IntPolynomial(std::move(d));
}

Integer content(const IntPolynomial& f) {
  Integer g = 0;
  for (const auto& c : f.coefficients()) g = gcd(g, c);
  return g;
}

std::pair<IntPolynomial, IntPolynomial> divmod_monic(const IntPolynomial& a, const IntPolynomial& b) {
  if (!b.is_monic()) throw std::invalid_argument("divmod_monic: divisor not monic");
  std::vector<Integer> rem = a.coefficients();
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) return {IntPolynomial{}, a};
  std::vector<Integer> quot(static_cast<std::size_t>(da - db + 1), Integer(0));
  for (int k = da; k >= db; --k) {
    const Integer q = rem[static_cast<std::size_t>(k)];
    if (q == 0) continue;
    quot[static_cast<std::size_t>(k - db)] = q;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= q * b.coefficient(j);
  }
  return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

IntMatrix evaluate(const IntPolynomial& f, const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("evaluate: matrix not square");
  const Index n = m.rows();
  IntMatrix acc = IntMatrix::Zero(n, n);
  const auto& c = f.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = (m * acc).eval();
    for (Index i = 0; i < n; ++i) acc(i, i) += *it;
  }
  return acc;
}

IntPolynomial charpoly(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("charpoly: matrix not square");
  return IntPolynomial(faddeev_leverrier<Integer>(m));
}

}  // namespace gbs
