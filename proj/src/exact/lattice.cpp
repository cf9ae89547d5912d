#include "gbs/exact/lattice.hpp"

#include "gbs/exact/normal_form.hpp"

#include <map>
#include <stdexcept>

namespace gbs {

Lattice Lattice::from_generators(const IntMatrix& generators) {
  Lattice l;
  l.ambient_rank_ = generators.rows();
  if (generators.cols() == 0) {
    l.basis_ = IntMatrix(generators.rows(), 0);
    return l;
  }
  HermiteForm f = hnf(generators);
  l.basis_ = f.H.leftCols(f.rank);
  l.pivot_rows_ = std::move(f.pivot_rows);
  return l;
}

Lattice Lattice::zero(Index ambient_rank) { return from_generators(IntMatrix(ambient_rank, 0)); }

Lattice Lattice::scaled_standard(Index ambient_rank, const Integer& m) {
  if (m == 0) return zero(ambient_rank);
  return from_generators(identity(ambient_rank) * Integer(mp::abs(m)));
}

bool Lattice::contains(const IntVector& v) const {
  if (v.size() != ambient_rank_) throw std::invalid_argument("Lattice::contains: dimension mismatch");
  IntVector w = v;
  for (Index j = 0; j < rank(); ++j) {
    const Index p = pivot_rows_[static_cast<std::size_t>(j)];
    for (Index i = (j == 0 ? 0 : pivot_rows_[static_cast<std::size_t>(j - 1)] + 1); i < p; ++i)
      if (w(i) != 0) return false;
    if (mod_floor(w(p), basis_(p, j)) != 0) return false;
    const Integer q = w(p) / basis_(p, j);
    if (q != 0) w -= q * basis_.col(j);
  }
  return w.isZero();
}

bool Lattice::contains(const Lattice& other) const {
  if (other.ambient_rank_ != ambient_rank_) throw std::invalid_argument("Lattice::contains: dimension mismatch");
  for (Index j = 0; j < other.rank(); ++j)
    if (!contains(IntVector(other.basis_.col(j)))) return false;
  return true;
}

IntVector Lattice::residue(const IntVector& v) const {
  if (!is_full_rank()) throw std::domain_error("Lattice::residue: lattice not full rank");
  IntVector w = v;
  for (Index j = 0; j < rank(); ++j) {
    const Integer q = floor_div(w(j), basis_(j, j));
    if (q != 0) w -= q * basis_.col(j);
  }
  return w;
}

Lattice Lattice::scaled(const Integer& m) const {
  if (m == 0) return zero(ambient_rank_);
  return from_generators(basis_ * m);
}

Lattice sum(const Lattice& a, const Lattice& b) {
  if (a.ambient_rank() != b.ambient_rank()) throw std::invalid_argument("sum: dimension mismatch");
  IntMatrix g(a.ambient_rank(), a.rank() + b.rank());
  g << a.basis(), b.basis();
  return Lattice::from_generators(g);
}

Lattice integer_kernel(const IntMatrix& m) { return Lattice::from_generators(integer_kernel_basis(m)); }

Lattice intersect(const Lattice& a, const Lattice& b) {
  if (a.ambient_rank() != b.ambient_rank()) throw std::invalid_argument("intersect: dimension mismatch");
  if (a.is_zero() || b.is_zero()) return Lattice::zero(a.ambient_rank());
  IntMatrix m(a.ambient_rank(), a.rank() + b.rank());
  m << a.basis(), -b.basis();
  const IntMatrix k = integer_kernel_basis(m);
  return Lattice::from_generators(a.basis() * k.topRows(a.rank()));
}

std::optional<Integer> index(const Lattice& sub, const Lattice& sup) {
  if (sub.ambient_rank() != sup.ambient_rank()) throw std::invalid_argument("index: dimension mismatch");
  if (!sup.contains(sub)) throw std::invalid_argument("index: lattices are not nested");
  if (sub.rank() != sup.rank()) return std::nullopt;
  Integer idx = 1;
  for (Index j = 0; j < sub.rank(); ++j) {
    const Index p = sub.pivot_rows()[static_cast<std::size_t>(j)];
    idx *= sub.basis()(p, j) / sup.basis()(p, j);
  }
  return idx;
}

Lattice saturate(const Lattice& l) {
  if (l.is_zero() || l.is_full_rank()) {
    return l.is_zero() ? l : Lattice::standard(l.ambient_rank());
  }
  const IntMatrix annihilator = integer_kernel_basis(l.basis().transpose());
  return integer_kernel(annihilator.transpose());
}

bool is_saturated(const Lattice& l) { return saturate(l) == l; }

Lattice image(const IntMatrix& m, const Lattice& l) {
  if (m.cols() != l.ambient_rank()) throw std::invalid_argument("image: dimension mismatch");
  return Lattice::from_generators(m * l.basis());
}

Lattice preimage(const IntMatrix& m, const Lattice& l) {
  if (m.rows() != l.ambient_rank()) throw std::invalid_argument("preimage: dimension mismatch");
  if (l.is_zero()) return integer_kernel(m);
  IntMatrix joint(m.rows(), m.cols() + l.rank());
  joint << m, -l.basis();
  const IntMatrix k = integer_kernel_basis(joint);
  return Lattice::from_generators(k.topRows(m.cols()));
}

Integer QuotientStructure::order(const IntVector& v) const {
  const IntVector w = coordinates * v;
  Integer ord = 1;
  for (std::size_t i = 0; i < invariants.size(); ++i) {
    const Integer& d = invariants[i];
    ord = lcm(ord, d / gcd(d, w(static_cast<Index>(i))));
  }
  return ord;
}

Integer QuotientStructure::size() const {
  Integer s = 1;
  for (const auto& d : invariants) s *= d;
  return s;
}

QuotientStructure quotient_structure(const Lattice& k) {
  if (!k.is_full_rank()) throw std::domain_error("quotient_structure: lattice not full rank (infinite quotient)");
  const SmithForm f = snf(k.basis());
  return QuotientStructure{f.diagonal, f.U};
}

IntMatrix reduce_columns(const IntMatrix& m, const Lattice& k) {
  IntMatrix r(m.rows(), m.cols());
  for (Index j = 0; j < m.cols(); ++j) r.col(j) = k.residue(IntVector(m.col(j)));
  return r;
}

IntMatrix power_mod(const IntMatrix& m, const Integer& e, const Lattice& k) {
  if (e < 0) throw std::invalid_argument("power_mod: negative exponent");
  IntMatrix result = reduce_columns(identity(m.rows()), k);
  IntMatrix base = reduce_columns(m, k);
  Integer left = e;
  while (left > 0) {
    if (mod_floor(left, 2) == 1) result = reduce_columns(result * base, k);
    left /= 2;
    if (left > 0) base = reduce_columns(base * base, k);
  }
  return result;
}

bool acts_as_identity(const IntMatrix& m, const Lattice& k) {
  const IntMatrix id = identity(m.rows());
  for (Index j = 0; j < m.cols(); ++j)
    if (!k.contains(IntVector(m.col(j) - id.col(j)))) return false;
  return true;
}

Integer automorphism_order(const IntMatrix& m, const Lattice& k) {
  const Index n = m.rows();
  if (!k.is_full_rank()) throw std::domain_error("automorphism_order: lattice not full rank");
  if (!k.contains(image(m, k))) throw std::domain_error("automorphism_order: lattice not invariant");
  if (!(preimage(m, k) == k)) throw std::domain_error("automorphism_order: induced map not bijective");
  const Integer size = *index(k, Lattice::standard(n));
  if (size == 1) return 1;

  // A multiple of the order: for each p-part of exponent p^e and rank <= n,
  // the automorphism group order divides p^(e + n(n-1)/2) * prod_j (p^j - 1).
  std::map<Integer, unsigned> multiple;
  for (const auto& [p, e] : factor_integer(size)) {
    const unsigned pe = e + static_cast<unsigned>(n * (n - 1) / 2);
    multiple[p] = std::max(multiple[p], pe);
    for (Index j = 1; j <= n; ++j) {
      const Integer q = pow(p, static_cast<unsigned long>(j)) - 1;
      if (q <= 1) continue;
      for (const auto& [prime, f] : factor_integer(q)) multiple[prime] = std::max(multiple[prime], f);
    }
  }
  Integer r = 1;
  for (const auto& [p, e] : multiple) r *= pow(p, e);
  for (const auto& [p, e] : multiple) {
    for (unsigned i = 0; i < e; ++i) {
      const Integer candidate = r / p;
      if (acts_as_identity(power_mod(m, candidate, k), k)) {
        r = candidate;
      } else {
        break;
      }
    }
  }
  return r;
}

ModOrder mod_m_order(const IntMatrix& matrix, const Integer& m, const Integer& cap) {
  if (matrix.rows() != matrix.cols()) throw std::invalid_argument("mod_m_order: matrix not square");
  if (m < 1) throw std::invalid_argument("mod_m_order: modulus must be positive");
  ModOrder out;
  if (gcd(determinant(matrix), m) != 1) {
    out.status = ModOrder::Status::not_invertible;
    return out;
  }
  const Integer r = automorphism_order(matrix, Lattice::scaled_standard(matrix.rows(), m));
  if (r > cap) {
    out.status = ModOrder::Status::cap_exceeded;
    return out;
  }
  out.status = ModOrder::Status::found;
  out.order = r;
  return out;
}

}  // namespace gbs
