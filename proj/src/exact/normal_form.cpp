#include "gbs/exact/normal_form.hpp"

#include <algorithm>

namespace gbs {

namespace {

// Columns (c, k) <- (s c + t k, u c + v k).
void combine_columns(IntMatrix& m, Index c, Index k, const Integer& s, const Integer& t, const Integer& u,
                     const Integer& v) {
  for (Index i = 0; i < m.rows(); ++i) {
    const Integer x = m(i, c);
    const Integer y = m(i, k);
    m(i, c) = s * x + t * y;
    m(i, k) = u * x + v * y;
  }
}

void combine_rows(IntMatrix& m, Index r, Index k, const Integer& s, const Integer& t, const Integer& u,
                  const Integer& v) {
  for (Index j = 0; j < m.cols(); ++j) {
    const Integer x = m(r, j);
    const Integer y = m(k, j);
    m(r, j) = s * x + t * y;
    m(k, j) = u * x + v * y;
  }
}

struct Step {
  Integer s, t, u, v;
};

// Unimodular [[s, t], [u, v]] sending (a, b) to (g, 0). When a already
// divides b the first position is left untouched, so repeated elimination
// passes terminate.
Step eliminate(const Integer& a, const Integer& b) {
  if (a != 0 && b % a == 0) return {1, 0, -(b / a), 1};
  const ExtendedGcd e = extended_gcd(a, b);
  return {e.s, e.t, -(b / e.g), a / e.g};
}

}  // namespace

HermiteForm hnf(const IntMatrix& m) {
  HermiteForm out;
  out.H = m;
  out.U = identity(m.cols());
  IntMatrix& h = out.H;
  IntMatrix& u = out.U;
  const Index cols = m.cols();
  Index c = 0;
  for (Index row = 0; row < m.rows() && c < cols; ++row) {
    for (Index k = c + 1; k < cols; ++k) {
      if (h(row, k) == 0) continue;
      const Step e = eliminate(h(row, c), h(row, k));
      combine_columns(h, c, k, e.s, e.t, e.u, e.v);
      combine_columns(u, c, k, e.s, e.t, e.u, e.v);
    }
    if (h(row, c) == 0) continue;
    if (h(row, c) < 0) {
      h.col(c) = -h.col(c);
      u.col(c) = -u.col(c);
    }
    const Integer pivot = h(row, c);
    for (Index k = 0; k < c; ++k) {
      const Integer q = floor_div(h(row, k), pivot);
      if (q == 0) continue;
      h.col(k) -= q * h.col(c);
      u.col(k) -= q * u.col(c);
    }
    out.pivot_rows.push_back(row);
    ++c;
  }
  out.rank = c;
  return out;
}

IntMatrix integer_kernel_basis(const IntMatrix& m) {
  const HermiteForm f = hnf(m);
  return f.U.rightCols(m.cols() - f.rank);
}

SmithForm snf(const IntMatrix& m) {
  SmithForm out;
  out.S = m;
  out.U = identity(m.rows());
  out.V = identity(m.cols());
  IntMatrix& s = out.S;
  const Index rows = m.rows();
  const Index cols = m.cols();
  const Index diag = std::min(rows, cols);

  for (Index t = 0; t < diag; ++t) {
    // Bring a nonzero entry of least magnitude to (t, t).
    Index pr = -1, pc = -1;
    for (Index i = t; i < rows; ++i)
      for (Index j = t; j < cols; ++j)
        if (s(i, j) != 0 && (pr < 0 || mp::abs(s(i, j)) < mp::abs(s(pr, pc)))) {
          pr = i;
          pc = j;
        }
    if (pr < 0) break;
    s.row(t).swap(s.row(pr));
    out.U.row(t).swap(out.U.row(pr));
    s.col(t).swap(s.col(pc));
    out.V.col(t).swap(out.V.col(pc));

    for (;;) {
      bool clean = true;
      for (Index i = t + 1; i < rows; ++i) {
        if (s(i, t) == 0) continue;
        const Step e = eliminate(s(t, t), s(i, t));
        combine_rows(s, t, i, e.s, e.t, e.u, e.v);
        combine_rows(out.U, t, i, e.s, e.t, e.u, e.v);
      }
      for (Index j = t + 1; j < cols; ++j) {
        if (s(t, j) == 0) continue;
        const Step e = eliminate(s(t, t), s(t, j));
        combine_columns(s, t, j, e.s, e.t, e.u, e.v);
        combine_columns(out.V, t, j, e.s, e.t, e.u, e.v);
      }
      for (Index i = t + 1; i < rows; ++i)
        if (s(i, t) != 0) clean = false;
      if (!clean) continue;
      // Enforce divisibility of the remaining block by the pivot.
      Index bad_row = -1;
      for (Index i = t + 1; i < rows && bad_row < 0; ++i)
        for (Index j = t + 1; j < cols; ++j)
          if (mod_floor(s(i, j), s(t, t)) != 0) {
            bad_row = i;
            break;
          }
      if (bad_row < 0) break;
      s.row(t) += s.row(bad_row);
      out.U.row(t) += out.U.row(bad_row);
    }
    if (s(t, t) < 0) {
      s.row(t) = -s.row(t);
      out.U.row(t) = -out.U.row(t);
    }
  }
  for (Index t = 0; t < diag; ++t) out.diagonal.push_back(s(t, t));
  return out;
}

}  // namespace gbs
