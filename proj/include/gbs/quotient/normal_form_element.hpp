#pragma once

#include "gbs/quotient/quotient.hpp"

#include <optional>
#include <string>

namespace gbs {

/// t^{-i} a t^{j} in G = A *_phi, kept reduced: never i, j > 0 with a in phi(A).
class NormalFormElement {
 public:
  NormalFormElement(const IntMatrix& phi, unsigned long i, IntVector a, unsigned long j);
  static NormalFormElement identity(const IntMatrix& phi);
  static NormalFormElement stable_letter(const IntMatrix& phi);
  static NormalFormElement of(const IntMatrix& phi, const IntVector& a) { return NormalFormElement(phi, 0, a, 0); }

  unsigned long i() const { return i_; }
  const IntVector& a() const { return a_; }
  unsigned long j() const { return j_; }
  const IntMatrix& phi() const { return phi_; }
  long exponent_sum() const { return static_cast<long>(j_) - static_cast<long>(i_); }
  bool is_identity() const { return i_ == 0 && j_ == 0 && a_.isZero(); }
  bool conjugate_into_A() const { return i_ == j_; }

  NormalFormElement inverse() const;
  NormalFormElement pow(long k) const;
  /// t^k x t^{-k}; k may be negative.
  NormalFormElement conjugate_by_t(long k) const;

  friend NormalFormElement operator*(const NormalFormElement& x, const NormalFormElement& y);
  friend bool operator==(const NormalFormElement& x, const NormalFormElement& y) {
    return x.i_ == y.i_ && x.j_ == y.j_ && x.a_ == y.a_;
  }

  std::string to_string() const;

 private:
  void normalize();
  IntMatrix phi_;
  unsigned long i_ = 0;
  IntVector a_;
  unsigned long j_ = 0;
};

/// Exact test of y in <x>.
bool in_cyclic(const NormalFormElement& x, const NormalFormElement& y);

/// <x1> N is disjoint from x2 for the normal subgroup N = <K, t^exponent>.
struct SeparationCertificate {
  FiniteQuotientSpec spec;
  Integer exponent;    // multiple of spec.r
  std::string method;  // which construction produced it
};

/// Exact check in the finite quotient (A/K) x| Z/exponent.
bool separates(const SeparationCertificate& c, const NormalFormElement& x1, const NormalFormElement& x2);

std::optional<SeparationCertificate> separate_cyclic(const AscendingHNN& h, const InvariantChain& chain,
                                                     const NormalFormElement& x1, const NormalFormElement& x2,
                                                     long budget);

}  // namespace gbs
