#pragma once

#include "gbs/exact/integer.hpp"

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace gbs {

/// Dense univariate polynomial over Z, coefficients in ascending degree.
/// The zero polynomial has an empty coefficient list and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> ascending);
  IntPolynomial(std::initializer_list<long> ascending);

  static IntPolynomial constant(const Integer& c);
  static IntPolynomial monomial(const Integer& c, std::size_t degree);
  /// x - root
  static IntPolynomial linear(const Integer& root);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  const Integer& leading() const { return coeffs_.back(); }
  Integer coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Integer(0); }
  const std::vector<Integer>& coefficients() const { return coeffs_; }

  Integer operator()(const Integer& x) const;

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  IntPolynomial& operator*=(const IntPolynomial& o);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
  friend IntPolynomial operator-(const IntPolynomial& a);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

  /// "x^3 - x^2 - 5x - 5"
  std::string to_string() const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// Degree first, then ascending coefficient lists lexicographically.
bool canonical_less(const IntPolynomial& a, const IntPolynomial& b);

IntPolynomial derivative(const IntPolynomial& f);
Integer content(const IntPolynomial& f);

/// Quotient and remainder by a monic divisor; exact over Z.
std::pair<IntPolynomial, IntPolynomial> divmod_monic(const IntPolynomial& a, const IntPolynomial& b);

/// f(M) by Horner's rule.
IntMatrix evaluate(const IntPolynomial& f, const IntMatrix& m);

/// Characteristic polynomial det(xI - M), monic of degree n, by the
/// fraction-free Faddeev-LeVerrier recurrence.
IntPolynomial charpoly(const IntMatrix& m);

/// Ascending coefficients of det(xI - M) for any exact scalar type in which
/// division by small integers is exact on the values that arise.
template <class Scalar>
std::vector<Scalar> faddeev_leverrier(const Matrix<Scalar>& a) {
  const Index n = a.rows();
  std::vector<Scalar> c(static_cast<std::size_t>(n + 1), Scalar(0));
  c[static_cast<std::size_t>(n)] = Scalar(1);
  Matrix<Scalar> m = Matrix<Scalar>::Zero(n, n);
  for (Index k = 1; k <= n; ++k) {
    Matrix<Scalar> next = a * m;
    for (Index i = 0; i < n; ++i) next(i, i) += c[static_cast<std::size_t>(n - k + 1)];
    m = std::move(next);
    const Matrix<Scalar> am = a * m;
    Scalar trace(0);
    for (Index i = 0; i < n; ++i) trace += am(i, i);
    c[static_cast<std::size_t>(n - k)] = -trace / Scalar(k);
  }
  return c;
}

}  // namespace gbs
