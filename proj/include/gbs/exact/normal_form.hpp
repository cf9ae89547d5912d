#pragma once

#include "gbs/exact/integer.hpp"

#include <vector>

namespace gbs {

/// Column Hermite normal form H = M * U.
///
/// H is lower-left echelon: column j has its pivot (positive) in row
/// pivot_rows[j], zeros above it, and every entry of a pivot row left of the
/// pivot lies in [0, pivot). Columns rank..cols-1 of H are zero and the
/// corresponding columns of U span the integer kernel of M.
struct HermiteForm {
  IntMatrix H;
  IntMatrix U;
  Index rank = 0;
  std::vector<Index> pivot_rows;
};

HermiteForm hnf(const IntMatrix& m);

/// Smith normal form S = U * M * V with d_1 | d_2 | ... on the diagonal.
struct SmithForm {
  IntMatrix S;
  IntMatrix U;
  IntMatrix V;
  std::vector<Integer> diagonal;  // min(rows, cols) entries, trailing zeros allowed
};

SmithForm snf(const IntMatrix& m);

/// Basis of the integer kernel {v : M v = 0} (columns); empty if injective.
IntMatrix integer_kernel_basis(const IntMatrix& m);

}  // namespace gbs
