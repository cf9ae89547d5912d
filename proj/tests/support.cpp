#include "support.hpp"

#include "gbs/cli/document.hpp"
#include "gbs/exact/normal_form.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <functional>
#include <numeric>
#include <sstream>

namespace gbs::testing {

namespace {

using SmallPoly = std::vector<long>;  // ascending

int small_degree(const SmallPoly& f) { return static_cast<int>(f.size()) - 1; }

// Exact division by a monic divisor in 64-bit arithmetic; false if it leaves
// a remainder.
bool divides(const SmallPoly& d, const SmallPoly& f, SmallPoly& quotient) {
  SmallPoly rem = f;
  const int dd = small_degree(d), df = small_degree(f);
  if (df < dd) return false;
  quotient.assign(static_cast<std::size_t>(df - dd + 1), 0);
  for (int k = df; k >= dd; --k) {
    const long c = rem[static_cast<std::size_t>(k)];
    quotient[static_cast<std::size_t>(k - dd)] = c;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k - dd + j)] -= c * d[static_cast<std::size_t>(j)];
  }
  return std::all_of(rem.begin(), rem.end(), [](long v) { return v == 0; });
}

std::vector<long> signed_divisors(long n) {
  std::vector<long> out;
  n = std::labs(n);
  for (long k = 1; k <= n; ++k)
    if (n % k == 0) {
      out.push_back(k);
      out.push_back(-k);
    }
  return out;
}

long mignotte(const SmallPoly& f, int k) {
  double sq = 0;
  for (long c : f) sq += static_cast<double>(c) * static_cast<double>(c);
  return (1L << k) * static_cast<long>(std::ceil(std::sqrt(sq)));
}

// Smallest-degree monic factor of degree 1 or 2, if any.
bool find_small_factor(const SmallPoly& f, SmallPoly& factor, SmallPoly& quotient) {
  const int n = small_degree(f);
  if (n < 2) return false;
  if (f[0] == 0) {
    factor = {0, 1};
    return divides(factor, f, quotient);
  }
  for (long r : signed_divisors(f[0])) {
    factor = {-r, 1};
    if (divides(factor, f, quotient)) return true;
  }
  if (n < 4) return false;
  const long bound = mignotte(f, 2);
  for (long c : signed_divisors(f[0]))
    for (long b = -bound; b <= bound; ++b) {
      factor = {c, b, 1};
      if (divides(factor, f, quotient)) return true;
    }
  return false;
}

SmallPoly to_small(const IntPolynomial& f) {
  SmallPoly out;
  for (const auto& c : f.coefficients()) out.push_back(c.convert_to<long>());
  return out;
}

IntPolynomial from_small(const SmallPoly& f) {
  std::vector<Integer> c(f.begin(), f.end());
  return IntPolynomial(std::move(c));
}

std::string snf_label(const IntMatrix& m) {
  std::string s;
  for (const auto& d : snf(m).diagonal) s += to_string(d) + ",";
  return s;
}

}  // namespace

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

IntMatrix random_matrix(Rng& rng, Index rows, Index cols, long lo, long hi) {
  IntMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = uniform(rng, lo, hi);
  return m;
}

IntMatrix random_nonsingular(Rng& rng, Index n, long lo, long hi) {
  for (;;) {
    IntMatrix m = random_matrix(rng, n, n, lo, hi);
    if (cofactor_determinant(m) != 0) return m;
  }
}

IntMatrix random_unimodular(Rng& rng, Index n, int steps) {
  IntMatrix u = identity(n);
  if (n < 2) return uniform(rng, 0, 1) ? u : IntMatrix(-u);
  for (int s = 0; s < steps; ++s) {
    const Index i = uniform(rng, 0, n - 1);
    Index j = uniform(rng, 0, n - 2);
    if (j >= i) ++j;
    const long c = uniform(rng, -2, 2);
    u.row(i) += Integer(c) * u.row(j);
    if (uniform(rng, 0, 3) == 0) u.row(i).swap(u.row(j));
  }
  return u;
}

IntPolynomial random_monic(Rng& rng, int degree, long lo, long hi) {
  std::vector<Integer> c;
  for (int k = 0; k < degree; ++k) c.emplace_back(uniform(rng, lo, hi));
  c.emplace_back(1);
  return IntPolynomial(std::move(c));
}

Integer cofactor_determinant(const IntMatrix& m) {
  const Index n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Integer total = 0;
  for (Index j = 0; j < n; ++j) {
    IntMatrix minor(n - 1, n - 1);
    for (Index r = 1; r < n; ++r)
      for (Index c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    const Integer term = m(0, j) * cofactor_determinant(minor);
    total += (j % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

IntPolynomial cofactor_charpoly(const IntMatrix& m) {
  const std::size_t n = static_cast<std::size_t>(m.rows());
  std::vector<std::vector<IntPolynomial>> a(n, std::vector<IntPolynomial>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      a[i][j] = IntPolynomial::constant(-m(static_cast<Index>(i), static_cast<Index>(j)));
      if (i == j) a[i][j] += IntPolynomial::monomial(1, 1);
    }
  std::function<IntPolynomial(const std::vector<std::vector<IntPolynomial>>&)> det =
      [&](const std::vector<std::vector<IntPolynomial>>& b) -> IntPolynomial {
    const std::size_t k = b.size();
    if (k == 0) return IntPolynomial::constant(1);
    if (k == 1) return b[0][0];
    IntPolynomial total;
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<std::vector<IntPolynomial>> minor;
      for (std::size_t r = 1; r < k; ++r) {
        std::vector<IntPolynomial> row;
        for (std::size_t c = 0; c < k; ++c)
          if (c != j) row.push_back(b[r][c]);
        minor.push_back(std::move(row));
      }
      const IntPolynomial term = b[0][j] * det(minor);
      total = (j % 2 == 0) ? total + term : total - term;
    }
    return total;
  };
  return det(a);
}

long naive_mod_order(const IntMatrix& m, long modulus, long cap) {
  const Index n = m.rows();
  std::vector<long> base(static_cast<std::size_t>(n * n)), cur;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      long v = (m(i, j) % modulus).convert_to<long>();
      base[static_cast<std::size_t>(i * n + j)] = v < 0 ? v + modulus : v;
    }
  cur = base;
  for (long r = 1; r <= cap; ++r) {
    bool is_identity = true;
    for (Index i = 0; i < n && is_identity; ++i)
      for (Index j = 0; j < n; ++j)
        if (cur[static_cast<std::size_t>(i * n + j)] != (i == j ? 1 % modulus : 0)) {
          is_identity = false;
          break;
        }
    if (is_identity) return r;
    std::vector<long> next(cur.size(), 0);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) {
        long s = 0;
        for (Index k = 0; k < n; ++k)
          s = (s + cur[static_cast<std::size_t>(i * n + k)] * base[static_cast<std::size_t>(k * n + j)]) % modulus;
        next[static_cast<std::size_t>(i * n + j)] = s;
      }
    cur = std::move(next);
  }
  return 0;
}

std::vector<IntPolynomial> brute_force_factor(const IntPolynomial& f) {
  if (f.degree() > 4) throw std::invalid_argument("brute_force_factor: degree above 4");
  std::vector<IntPolynomial> out;
  SmallPoly rest = to_small(f), factor, quotient;
  while (find_small_factor(rest, factor, quotient)) {
    out.push_back(from_small(factor));
    rest = quotient;
  }
  if (small_degree(rest) > 0) out.push_back(from_small(rest));
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

bool brute_force_irreducible(const IntPolynomial& f) {
  if (f.degree() <= 1) return f.degree() == 1;
  SmallPoly factor, quotient;
  return !find_small_factor(to_small(f), factor, quotient);
}

std::string canonical_hash(const GraphOfGroups& g) {
  const std::size_t v = g.vertices.size();
  std::vector<std::size_t> perm(v);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  bool first = true;
  do {
    std::vector<std::string> edges;
    for (const auto& e : g.edges) {
      const std::string a = std::to_string(perm[*g.vertex_index(e.from)]) + ":" + snf_label(e.incl_from);
      const std::string b = std::to_string(perm[*g.vertex_index(e.to)]) + ":" + snf_label(e.incl_to);
      edges.push_back(std::min(a, b) + "|" + std::max(a, b));
    }
    std::sort(edges.begin(), edges.end());
    std::ostringstream s;
    s << "rank " << g.rank << " vertices " << v;
    for (const auto& e : edges) s << " [" << e << "]";
    if (first || s.str() < best) best = s.str();
    first = false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::string corpus_dir() { return GBS_CORPUS_DIR; }

std::vector<std::string> corpus_files() {
  std::vector<std::string> out;
  for (const auto& entry : std::filesystem::directory_iterator(corpus_dir()))
    if (entry.path().extension() == ".json") out.push_back(entry.path().stem().string());
  std::sort(out.begin(), out.end());
  return out;
}

GraphOfGroups load_corpus(const std::string& name) {
  return read_document(corpus_dir() + "/" + name + ".json").graph;
}

}  // namespace gbs::testing
