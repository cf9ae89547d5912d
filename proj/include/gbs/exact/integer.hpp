#pragma once

// Arbitrary-precision scalars and the dense matrix aliases used everywhere.
// Integer and Rational are GMP-backed with expression templates disabled so
// that they behave as plain value types inside Eigen expressions.

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Core>

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace gbs {

namespace mp = boost::multiprecision;

using Integer = mp::number<mp::gmp_int, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;

using Index = Eigen::Index;

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Integer>;
using IntVector = Vector<Integer>;
using RationalMatrix = Matrix<Rational>;
using RationalVector = Vector<Rational>;

/// Builds an integer matrix from row-major literals.
IntMatrix int_matrix(std::initializer_list<std::initializer_list<long>> rows);
IntVector int_vector(std::initializer_list<long> entries);
IntMatrix identity(Index n);

Integer floor_div(const Integer& a, const Integer& b);
/// Representative of a mod b in [0, |b|).
Integer mod_floor(const Integer& a, const Integer& b);
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

struct ExtendedGcd {
  Integer g, s, t;  // g = s*a + t*b, g >= 0
};
ExtendedGcd extended_gcd(const Integer& a, const Integer& b);

/// gcd of the entries; zero for the zero vector.
Integer content(const IntVector& v);
Integer content(const IntMatrix& m);

bool is_probable_prime(const Integer& n);

/// Prime factorization of |n| (n != 0), primes ascending.
std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& n);
std::vector<Integer> prime_divisors(const Integer& n);
/// All positive divisors of |n|, ascending.
std::vector<Integer> divisors(const Integer& n);

std::vector<long> primes_up_to(long bound);

Integer pow(const Integer& base, unsigned long exponent);

std::string to_string(const Integer& v);
std::string to_string(const Rational& v);
std::string to_string(const IntVector& v);
std::string to_string(const IntMatrix& m);

RationalMatrix to_rational(const IntMatrix& m);

/// Fraction-free (Bareiss) determinant; exact over any integral domain scalar.
template <class Scalar>
Scalar bareiss_determinant(Matrix<Scalar> a) {
  const Index n = a.rows();
  if (n == 0) return Scalar(1);
  Scalar sign(1);
  Scalar previous(1);
  for (Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Index swap_row = -1;
      for (Index i = k + 1; i < n; ++i) {
        if (a(i, k) != 0) {
          swap_row = i;
          break;
        }
      }
      if (swap_row < 0) return Scalar(0);
      a.row(k).swap(a.row(swap_row));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / previous;
      }
    }
    previous = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

inline Integer determinant(const IntMatrix& m) { return bareiss_determinant<Integer>(m); }

}  // namespace gbs
