#include "gbs/quotient/normal_form_element.hpp"

#include "gbs/exact/rat_matrix.hpp"

#include <numeric>

namespace gbs {

namespace {

IntMatrix matrix_power(const IntMatrix& m, unsigned long k) {
  IntMatrix out = identity(m.rows());
  for (unsigned long s = 0; s < k; ++s) out = out * m;
  return out;
}

// phi^{-1} a when a lies in phi(A).
std::optional<IntVector> pull_back(const IntMatrix& phi, const IntVector& a) {
  const RatMatrix inv = RatMatrix(phi).inverse();
  IntVector v = inv.num() * a;
  for (Index k = 0; k < v.size(); ++k) {
    if (mp::abs(v(k)) % inv.den() != 0) return std::nullopt;
    v(k) /= inv.den();
  }
  return v;
}

}  // namespace

NormalFormElement::NormalFormElement(const IntMatrix& phi, unsigned long i, IntVector a, unsigned long j)
    : phi_(phi), i_(i), a_(std::move(a)), j_(j) {
  if (a_.size() != phi_.rows()) throw std::invalid_argument("NormalFormElement: vector length mismatch");
  normalize();
}

NormalFormElement NormalFormElement::identity(const IntMatrix& phi) {
  return NormalFormElement(phi, 0, IntVector::Zero(phi.rows()), 0);
}

NormalFormElement NormalFormElement::stable_letter(const IntMatrix& phi) {
  return NormalFormElement(phi, 0, IntVector::Zero(phi.rows()), 1);
}

void NormalFormElement::normalize() {
  while (i_ > 0 && j_ > 0) {
    auto pre = pull_back(phi_, a_);
    if (!pre) break;
    a_ = std::move(*pre);
    --i_;
    --j_;
  }
}

NormalFormElement operator*(const NormalFormElement& x, const NormalFormElement& y) {
  // t^-i1 a1 t^j1 t^-i2 a2 t^j2
  if (x.j_ >= y.i_) {
    const unsigned long k = x.j_ - y.i_;
    return NormalFormElement(x.phi_, x.i_, x.a_ + matrix_power(x.phi_, k) * y.a_, k + y.j_);
  }
  const unsigned long k = y.i_ - x.j_;
  return NormalFormElement(x.phi_, x.i_ + k, matrix_power(x.phi_, k) * x.a_ + y.a_, y.j_);
}

NormalFormElement NormalFormElement::inverse() const { return NormalFormElement(phi_, j_, -a_, i_); }

NormalFormElement NormalFormElement::pow(long k) const {
  NormalFormElement base = k < 0 ? inverse() : *this;
  unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
  NormalFormElement out = identity(phi_);
  while (e > 0) {
    if (e & 1UL) out = out * base;
    base = base * base;
    e >>= 1;
  }
  return out;
}

NormalFormElement NormalFormElement::conjugate_by_t(long k) const {
  const IntVector zero = IntVector::Zero(phi_.rows());
  const unsigned long m = static_cast<unsigned long>(k < 0 ? -k : k);
  const NormalFormElement forward(phi_, 0, zero, m), backward(phi_, m, zero, 0);
  return k >= 0 ? forward * *this * backward : backward * *this * forward;
}

std::string NormalFormElement::to_string() const {
  return "t^-" + std::to_string(i_) + " " + gbs::to_string(a_) + " t^" + std::to_string(j_);
}

bool in_cyclic(const NormalFormElement& x, const NormalFormElement& y) {
  if (x.is_identity()) return y.is_identity();
  const long ex = x.exponent_sum(), ey = y.exponent_sum();
  if (ex != 0) return ey % ex == 0 && x.pow(ey / ex) == y;
  if (ey != 0) return false;
  const long i = static_cast<long>(x.i());
  const NormalFormElement yc = y.conjugate_by_t(i);
  if (yc.i() != 0 || yc.j() != 0) return false;
  return Lattice::from_generators(IntMatrix(x.a())).contains(yc.a());
}

namespace {

// (u, e) = u t^e in (A/K) x| Z/s with r | s.
struct QuotientElement {
  IntVector u;
  Integer e;
};

class SemidirectQuotient {
 public:
  SemidirectQuotient(const FiniteQuotientSpec& spec, const Integer& s) : spec_(spec), s_(s) {}

  IntMatrix phi_power(const Integer& k) const { return power_mod(spec_.phi, mod_floor(k, spec_.r), spec_.K); }

  QuotientElement image(const NormalFormElement& x) const {
    return {spec_.K.residue(phi_power(-Integer(x.i())) * x.a()), mod_floor(Integer(x.exponent_sum()), s_)};
  }

  QuotientElement mul(const QuotientElement& x, const QuotientElement& y) const {
    return {spec_.K.residue(x.u + phi_power(x.e) * y.u), mod_floor(x.e + y.e, s_)};
  }

  QuotientElement pow(QuotientElement base, Integer k) const {
    QuotientElement out{IntVector::Zero(base.u.size()), 0};
    while (k > 0) {
      if (mpz_odd_p(k.backend().data())) out = mul(out, base);
      base = mul(base, base);
      k /= 2;
    }
    return out;
  }

  // y in <x>
  bool contains(const QuotientElement& x, const QuotientElement& y) const {
    const Integer g = gcd(x.e, s_);
    if (mod_floor(y.e, g) != 0) return false;
    const Integer period = s_ / g;
    Integer k0 = 0;
    if (period > 1) {
      const ExtendedGcd eg = extended_gcd(x.e / g, period);
      k0 = mod_floor((y.e / g) * eg.s, period);
    }
    const QuotientElement head = pow(x, k0);
    const IntVector w = pow(x, period).u;
    const IntVector rest = phi_power(-(k0 * x.e)) * IntVector(y.u - head.u);
    return in_cyclic_plus(w, rest, spec_.K);
  }

 private:
  const FiniteQuotientSpec& spec_;
  Integer s_;
};

std::optional<SeparationCertificate> verified(const SeparationCertificate& c, const NormalFormElement& x1,
                                              const NormalFormElement& x2) {
  if (separates(c, x1, x2)) return c;
  return std::nullopt;
}

FiniteQuotientSpec whole_A(const IntMatrix& phi) {
  auto s = make_quotient(phi, Lattice::standard(phi.rows()));
  s->origin = "A";
  return *s;
}

// Normal subgroup meeting <a t^e> A only in K and missing the nonzero target.
std::optional<SeparationCertificate> hyperbolic_quotient(const AscendingHNN& h, const IntVector& a, unsigned long e,
                                                         const IntVector& target, const NormalFormElement& x1,
                                                         const NormalFormElement& x2, long budget) {
  const Integer c = content(target);
  for (long m = 2; m <= budget; ++m) {
    if (gcd(Integer(m), h.d) != 1 || mod_floor(c, Integer(m)) == 0) continue;
    const FiniteQuotientSpec spec = coprime_quotient(h.phi, m);
    const Integer l = spec.r;
    const IntVector al = twisted_power_sum(h.phi, a, e, l.convert_to<unsigned long>());
    const Integer q = element_order(spec, al);
    SeparationCertificate cert{spec, Integer(e) * l * q * spec.r, "power sum construction over " + spec.origin};
    if (auto ok = verified(cert, x1, x2)) return ok;
  }
  return std::nullopt;
}

}  // namespace

bool separates(const SeparationCertificate& c, const NormalFormElement& x1, const NormalFormElement& x2) {
  if (c.exponent < 1 || mod_floor(c.exponent, c.spec.r) != 0) return false;
  const SemidirectQuotient q(c.spec, c.exponent);
  return !q.contains(q.image(x1), q.image(x2));
}

std::optional<SeparationCertificate> separate_cyclic(const AscendingHNN& h, const InvariantChain& chain,
                                                     const NormalFormElement& x1, const NormalFormElement& x2,
                                                     long budget) {
  if (in_cyclic(x1, x2))
    throw NotSeparationInstance("separate_cyclic: " + x2.to_string() + " lies in <" + x1.to_string() + ">");

  if (x1.conjugate_into_A()) {
    const long i1 = static_cast<long>(x1.i());
    const IntVector a1 = x1.conjugate_by_t(i1).a();
    const NormalFormElement y = x2.conjugate_by_t(i1);
    const long shift = static_cast<long>(y.i());
    const NormalFormElement z = y.conjugate_by_t(shift);
    if (z.exponent_sum() != 0) {
      const long s = std::labs(z.exponent_sum()) + 1;
      return verified({whole_A(h.phi), Integer(s), "t-exponent modulo " + std::to_string(s)}, x1, x2);
    }
    const IntVector g1 = NormalFormElement::of(h.phi, a1).conjugate_by_t(shift).a();
    auto spec = separate_in_A(h, chain, g1, z.a(), budget);
    if (!spec) return std::nullopt;
    return verified({*spec, spec->r, "separation inside A by " + spec->origin}, x1, x2);
  }

  NormalFormElement g = x1.exponent_sum() > 0 ? x1 : x1.inverse();
  const long i = static_cast<long>(g.i());
  g = g.conjugate_by_t(i);
  NormalFormElement y = x2.conjugate_by_t(i);
  if (y.exponent_sum() < 0) y = y.inverse();
  const long shift = static_cast<long>(y.i());
  g = g.conjugate_by_t(shift);
  y = y.conjugate_by_t(shift);
  const unsigned long e = g.j();
  const unsigned long k = y.j();
  if (k % e != 0)
    return verified({whole_A(h.phi), Integer(e), "t-exponent modulo " + std::to_string(e)}, x1, x2);
  const IntVector target = IntVector(y.a() - twisted_power_sum(h.phi, g.a(), e, k / e));
  return hyperbolic_quotient(h, g.a(), e, target, x1, x2, budget);
}

}  // namespace gbs
