#pragma once

#include "gbs/exact/integer.hpp"

#include <vector>

namespace gbs {

/// Rational matrix num / den in lowest terms: den >= 1 and
/// gcd(den, content(num)) = 1.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(IntMatrix num, Integer den);
  explicit RatMatrix(const IntMatrix& integral) : RatMatrix(integral, 1) {}
  static RatMatrix from_rational(const RationalMatrix& m);
  static RatMatrix identity(Index n);

  const IntMatrix& num() const { return num_; }
  const Integer& den() const { return den_; }
  Index rows() const { return num_.rows(); }
  Index cols() const { return num_.cols(); }

  bool is_integral() const { return den_ == 1; }
  RationalMatrix to_rational() const;
  Rational determinant() const;
  RatMatrix inverse() const;
  /// Ascending coefficients of det(xI - M).
  std::vector<Rational> charpoly() const;

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.den_ == b.den_ && a.num_ == b.num_;
  }

 private:
  void normalize();
  IntMatrix num_;
  Integer den_ = 1;
};

bool is_unimodular(const IntMatrix& m);
/// Inverse of a matrix with determinant +-1.
IntMatrix unimodular_inverse(const IntMatrix& m);

}  // namespace gbs
