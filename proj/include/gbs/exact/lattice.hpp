#pragma once

#include "gbs/exact/integer.hpp"

#include <optional>
#include <vector>

namespace gbs {

/// A subgroup of Z^r, stored as a column HNF basis. The zero lattice has an
/// empty basis and keeps its ambient rank. Two lattices are equal iff their
/// stored bases are identical.
class Lattice {
 public:
  Lattice() = default;

  /// Lattice spanned by the columns of `generators` (any number of columns).
  static Lattice from_generators(const IntMatrix& generators);
  static Lattice zero(Index ambient_rank);
  /// m * Z^r
  static Lattice scaled_standard(Index ambient_rank, const Integer& m);
  static Lattice standard(Index ambient_rank) { return scaled_standard(ambient_rank, 1); }

  Index ambient_rank() const { return ambient_rank_; }
  Index rank() const { return basis_.cols(); }
  bool is_full_rank() const { return rank() == ambient_rank_; }
  bool is_zero() const { return rank() == 0; }
  const IntMatrix& basis() const { return basis_; }
  const std::vector<Index>& pivot_rows() const { return pivot_rows_; }

  bool contains(const IntVector& v) const;
  bool contains(const Lattice& other) const;

  /// Canonical representative of v + L; requires a full-rank lattice.
  IntVector residue(const IntVector& v) const;

  Lattice scaled(const Integer& m) const;

  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.ambient_rank_ == b.ambient_rank_ && a.basis_ == b.basis_;
  }

 private:
  Index ambient_rank_ = 0;
  IntMatrix basis_;
  std::vector<Index> pivot_rows_;
};

Lattice sum(const Lattice& a, const Lattice& b);
Lattice intersect(const Lattice& a, const Lattice& b);
/// |sup : sub|; nullopt when the index is infinite. Throws if sub is not
/// contained in sup.
std::optional<Integer> index(const Lattice& sub, const Lattice& sup);
/// (Q-span of L) intersected with Z^r.
Lattice saturate(const Lattice& l);
bool is_saturated(const Lattice& l);
/// M L
Lattice image(const IntMatrix& m, const Lattice& l);
/// {v : M v in L}
Lattice preimage(const IntMatrix& m, const Lattice& l);
/// {v : M v = 0}
Lattice integer_kernel(const IntMatrix& m);

/// Invariant factors of Z^n / K for full-rank K together with the coordinate
/// map v -> (U v)_i mod d_i realising Z^n / K = sum Z/d_i.
struct QuotientStructure {
  std::vector<Integer> invariants;
  IntMatrix coordinates;

  Integer order(const IntVector& v) const;
  Integer size() const;
};

QuotientStructure quotient_structure(const Lattice& k);

/// M mod K column-by-column, for a full-rank K with M K contained in K.
IntMatrix reduce_columns(const IntMatrix& m, const Lattice& k);
/// M^e acting on Z^n / K, with columns reduced.
IntMatrix power_mod(const IntMatrix& m, const Integer& e, const Lattice& k);
bool acts_as_identity(const IntMatrix& m, const Lattice& k);

/// Least r >= 1 with M^r acting trivially on Z^n / K. Requires K full rank,
/// M K contained in K and the induced map bijective (checked).
Integer automorphism_order(const IntMatrix& m, const Lattice& k);

struct ModOrder {
  enum class Status { found, not_invertible, cap_exceeded };
  Status status = Status::not_invertible;
  Integer order = 0;
};

/// Least r >= 1 with M^r = I (mod m).
ModOrder mod_m_order(const IntMatrix& matrix, const Integer& m, const Integer& cap);

}  // namespace gbs
