#include "gbs/exact/rat_matrix.hpp"

#include "gbs/exact/polynomial.hpp"

#include <stdexcept>

namespace gbs {

RatMatrix::RatMatrix(IntMatrix num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw std::domain_error("RatMatrix: zero denominator");
  normalize();
}

void RatMatrix::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    num_ = -num_;
  }
  const Integer g = gcd(content(num_), den_);
  if (g > 1) {
    for (Index i = 0; i < num_.rows(); ++i)
      for (Index j = 0; j < num_.cols(); ++j) num_(i, j) /= g;
    den_ /= g;
  }
}

RatMatrix RatMatrix::from_rational(const RationalMatrix& m) {
  Integer den = 1;
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) den = lcm(den, denominator(m(i, j)));
  IntMatrix num(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) num(i, j) = numerator(m(i, j)) * (den / denominator(m(i, j)));
  return RatMatrix(std::move(num), den);
}

RatMatrix RatMatrix::identity(Index n) { return RatMatrix(gbs::identity(n), 1); }

RationalMatrix RatMatrix::to_rational() const {
  RationalMatrix r(num_.rows(), num_.cols());
  for (Index i = 0; i < num_.rows(); ++i)
    for (Index j = 0; j < num_.cols(); ++j) r(i, j) = Rational(num_(i, j), den_);
  return r;
}

Rational RatMatrix::determinant() const {
  if (rows() != cols()) throw std::invalid_argument("RatMatrix::determinant: not square");
  return Rational(gbs::determinant(num_), pow(den_, static_cast<unsigned long>(rows())));
}

RatMatrix RatMatrix::inverse() const {
  if (rows() != cols()) throw std::invalid_argument("RatMatrix::inverse: not square");
  const Index n = rows();
  // Gauss-Jordan over Q.
  RationalMatrix a = to_rational();
  RationalMatrix inv = gbs::to_rational(gbs::identity(n));
  for (Index c = 0; c < n; ++c) {
    Index p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) throw std::domain_error("RatMatrix::inverse: singular matrix");
    a.row(c).swap(a.row(p));
    inv.row(c).swap(inv.row(p));
    const Rational piv = a(c, c);
    a.row(c) /= piv;
    inv.row(c) /= piv;
    for (Index r = 0; r < n; ++r) {
      if (r == c || a(r, c) == 0) continue;
      const Rational f = a(r, c);
      a.row(r) -= f * a.row(c);
      inv.row(r) -= f * inv.row(c);
    }
  }
  return from_rational(inv);
}

std::vector<Rational> RatMatrix::charpoly() const {
  if (rows() != cols()) throw std::invalid_argument("RatMatrix::charpoly: not square");
  const std::vector<Integer> c = faddeev_leverrier<Integer>(num_);
  const Index n = rows();
  std::vector<Rational> out(c.size());
  for (Index k = 0; k <= n; ++k)
    out[static_cast<std::size_t>(k)] =
        Rational(c[static_cast<std::size_t>(k)], pow(den_, static_cast<unsigned long>(n - k)));
  return out;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("RatMatrix product: dimension mismatch");
  return RatMatrix(a.num_ * b.num_, a.den_ * b.den_);
}

bool is_unimodular(const IntMatrix& m) { return m.rows() == m.cols() && mp::abs(determinant(m)) == 1; }

IntMatrix unimodular_inverse(const IntMatrix& m) {
  if (!is_unimodular(m)) throw std::invalid_argument("unimodular_inverse: determinant is not +-1");
  return RatMatrix(m).inverse().num();
}

}  // namespace gbs
