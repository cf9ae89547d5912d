#include "gbs/modular/modular.hpp"

#include <functional>
#include <stdexcept>

namespace gbs {

namespace {

RatMatrix transport_across(const Edge& e) { return RatMatrix(e.incl_to) * RatMatrix(e.incl_from).inverse(); }

// H / den with den minimal.
struct RatLattice {
  Lattice num;
  Integer den = 1;

  void normalize() {
    const Integer g = gcd(content(num.basis()), den);
    if (g > 1) {
      IntMatrix b = num.basis();
      for (Index i = 0; i < b.rows(); ++i)
        for (Index j = 0; j < b.cols(); ++j) b(i, j) /= g;
      num = Lattice::from_generators(b);
      den /= g;
    }
  }

  friend bool operator==(const RatLattice& a, const RatLattice& b) { return a.den == b.den && a.num == b.num; }
};

RatLattice make(const IntMatrix& gens, const Integer& den) {
  RatLattice l{Lattice::from_generators(gens), den};
  l.normalize();
  return l;
}

RatLattice apply(const RatMatrix& g, const RatLattice& l) {
  return make(g.num() * l.num.basis(), g.den() * l.den);
}

RatLattice join(const std::vector<RatLattice>& parts, Index n) {
  Integer den = 1;
  for (const auto& p : parts) den = lcm(den, p.den);
  std::vector<IntMatrix> blocks;
  Index cols = 0;
  for (const auto& p : parts) {
    IntMatrix b = p.num.basis() * Integer(den / p.den);
    cols += b.cols();
    blocks.push_back(std::move(b));
  }
  IntMatrix all(n, cols);
  Index at = 0;
  for (const auto& b : blocks) {
    all.middleCols(at, b.cols()) = b;
    at += b.cols();
  }
  return make(all, den);
}

RatLattice meet(const std::vector<RatLattice>& parts, Index n) {
  Integer den = 1;
  for (const auto& p : parts) den = lcm(den, p.den);
  Lattice acc = Lattice::standard(n).scaled(den);
  for (const auto& p : parts) acc = intersect(acc, p.num.scaled(den / p.den));
  RatLattice out{acc, den};
  out.normalize();
  return out;
}

// [L : Z^n] for a full-rank L containing Z^n.
Integer index_over_standard(const RatLattice& l) {
  const Index n = l.num.ambient_rank();
  return pow(l.den, static_cast<unsigned long>(n)) / mp::abs(determinant(l.num.basis()));
}

bool invariant(const std::vector<RatMatrix>& gens, const std::vector<RatMatrix>& inverses, const RatLattice& l,
               Index n) {
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!(join({l, apply(gens[i], l)}, n) == l)) return false;
    if (!(join({l, apply(inverses[i], l)}, n) == l)) return false;
  }
  return true;
}

// Least m >= 1 with m * X contained in Y, for integer lattices, Y full rank.
Integer containment_multiplier(const Lattice& x, const Lattice& y) {
  const Lattice s = sum(x, y);
  const RatMatrix s_inv = RatMatrix(s.basis()).inverse();
  const RatMatrix coords = s_inv * RatMatrix(y.basis());
  if (!coords.is_integral()) throw std::logic_error("containment_multiplier: non-integral coordinates");
  const QuotientStructure q = quotient_structure(Lattice::from_generators(coords.num()));
  Integer m = 1;
  const RatMatrix xs = s_inv * RatMatrix(x.basis());
  for (Index j = 0; j < xs.cols(); ++j) m = lcm(m, q.order(xs.num().col(j)));
  return m;
}

}  // namespace

ModularImage modular_generators(const GraphOfGroups& g) {
  require_valid(g);
  const Index n = g.rank;
  const SpanningTree tree = spanning_tree(g);
  ModularImage out;
  out.base_vertex = g.vertices[tree.root];
  out.transport.assign(g.vertices.size(), RatMatrix::identity(n));
  for (std::size_t v : tree.order) {
    if (!tree.parent_edge[v]) continue;
    const Edge& e = g.edges[*tree.parent_edge[v]];
    const std::size_t from = *g.vertex_index(e.from), to = *g.vertex_index(e.to);
    const RatMatrix m = transport_across(e);
    out.transport[v] = to == v ? m * out.transport[from] : m.inverse() * out.transport[to];
  }
  for (std::size_t k : tree.non_tree_edges) {
    const Edge& e = g.edges[k];
    const std::size_t u = *g.vertex_index(e.from), w = *g.vertex_index(e.to);
    out.generators.push_back(out.transport[w].inverse() * transport_across(e) * out.transport[u]);
    out.generator_edges.push_back(e.id);
  }
  return out;
}

std::string word_to_string(const Word& w) {
  std::string s;
  for (int letter : w) {
    if (!s.empty()) s += " ";
    s += "g" + std::to_string(letter > 0 ? letter : -letter);
    if (letter < 0) s += "^-1";
  }
  return s.empty() ? "1" : s;
}

RatMatrix evaluate_word(const std::vector<RatMatrix>& gens, const Word& w) {
  if (gens.empty()) throw std::invalid_argument("evaluate_word: no generators");
  RatMatrix acc = RatMatrix::identity(gens.front().rows());
  for (int letter : w) {
    const RatMatrix& g = gens.at(static_cast<std::size_t>((letter > 0 ? letter : -letter) - 1));
    acc = acc * (letter > 0 ? g : g.inverse());
  }
  return acc;
}

std::optional<std::string> integrality_defect(const RatMatrix& m) {
  const Rational det = m.determinant();
  if (mp::abs(det) != 1) return "determinant " + to_string(det) + " is not +-1";
  const std::vector<Rational> c = m.charpoly();
  for (std::size_t k = 0; k < c.size(); ++k)
    if (denominator(c[k]) != 1)
      return "characteristic polynomial coefficient of x^" + std::to_string(k) + " is " + to_string(c[k]);
  return std::nullopt;
}

ConjugacyResult conjugate_into_GLnZ(const std::vector<RatMatrix>& gens, Index n, const ConjugacyCaps& caps) {
  ConjugacyResult out;
  for (const auto& g : gens) {
    if (g.rows() != n || g.cols() != n) throw std::invalid_argument("conjugate_into_GLnZ: generator shape mismatch");
    if (g.determinant() == 0) throw std::invalid_argument("conjugate_into_GLnZ: singular generator");
  }
  std::vector<RatMatrix> inverses;
  for (const auto& g : gens) inverses.push_back(g.inverse());

  // Words in length order; letters ordered g1, g1^-1, g2, ...; freely reduced.
  const int k = static_cast<int>(gens.size());
  std::vector<int> letters;
  for (int i = 1; i <= k; ++i) {
    letters.push_back(i);
    letters.push_back(-i);
  }
  for (int len = 1; k > 0 && len <= caps.word_length; ++len) {
    Word word;
    std::vector<RatMatrix> prefix{RatMatrix::identity(n)};
    std::vector<std::size_t> choice;
    std::function<bool()> search = [&]() -> bool {
      if (static_cast<int>(word.size()) == len) {
        ++out.words_checked;
        if (auto defect = integrality_defect(prefix.back())) {
          out.status = Verdict::no;
          out.certificate = word;
          out.certificate_matrix = prefix.back();
          out.defect = *defect;
          return true;
        }
        return false;
      }
      for (int letter : letters) {
        if (!word.empty() && word.back() == -letter) continue;
        const RatMatrix& g = letter > 0 ? gens[static_cast<std::size_t>(letter - 1)]
                                        : inverses[static_cast<std::size_t>(-letter - 1)];
        word.push_back(letter);
        prefix.push_back(prefix.back() * g);
        const bool hit = search();
        word.pop_back();
        prefix.pop_back();
        if (hit) return true;
      }
      return false;
    };
    if (search()) return out;
  }

  RatLattice current{Lattice::standard(n), 1};
  out.index_trace.push_back(1);
  for (int step = 0;; ++step) {
    if (invariant(gens, inverses, current, n)) break;
    if (step >= caps.saturation_steps) {
      out.unknown_reason = "lattice saturation did not stabilize within " + std::to_string(caps.saturation_steps) +
                           " steps";
      return out;
    }
    std::vector<RatLattice> parts{current};
    for (std::size_t i = 0; i < gens.size(); ++i) {
      parts.push_back(apply(gens[i], current));
      parts.push_back(apply(inverses[i], current));
    }
    current = join(parts, n);
    out.saturation_steps_used = step + 1;
    const Integer idx = index_over_standard(current);
    out.index_trace.push_back(idx);
    if (idx > caps.max_index) {
      out.unknown_reason = "invariant lattice index exceeded " + to_string(caps.max_index);
      return out;
    }
  }

  out.conjugator = RatMatrix(current.num.basis(), current.den);
  const RatMatrix b_inv = out.conjugator.inverse();
  for (const auto& g : gens) {
    const RatMatrix c = b_inv * g * out.conjugator;
    if (!c.is_integral() || mp::abs(determinant(c.num())) != 1)
      throw std::logic_error("conjugate_into_GLnZ: conjugated generator not in GL(n,Z)");
    out.conjugated.push_back(c.num());
  }
  out.lattice_numerator = current.num;
  out.lattice_denominator = current.den;
  out.status = Verdict::yes;
  return out;
}

ZnByFree virtually_Zn_by_free(const GraphOfGroups& g, const ConjugacyCaps& caps) {
  ZnByFree out;
  out.image = modular_generators(g);
  const Index n = g.rank;
  out.conjugacy = conjugate_into_GLnZ(out.image.generators, n, caps);
  out.status = out.conjugacy.status;
  if (out.status != Verdict::yes) return out;

  // Every vertex group and both edge-group images, in base coordinates.
  std::vector<RatLattice> groups;
  for (const auto& t : out.image.transport) {
    const RatMatrix back = t.inverse();
    groups.push_back(make(back.num(), back.den()));
  }
  for (const auto& e : g.edges) {
    const RatMatrix back_from = out.image.transport[*g.vertex_index(e.from)].inverse() * RatMatrix(e.incl_from);
    const RatMatrix back_to = out.image.transport[*g.vertex_index(e.to)].inverse() * RatMatrix(e.incl_to);
    groups.push_back(make(back_from.num(), back_from.den()));
    groups.push_back(make(back_to.num(), back_to.den()));
  }
  const RatLattice target = meet(groups, n);
  const Lattice& h = out.conjugacy.lattice_numerator;
  const Integer& dh = out.conjugacy.lattice_denominator;
  // m * h / dh inside target.num / target.den  <=>  m * (h * target.den) inside target.num * dh
  const Integer m = containment_multiplier(h.scaled(target.den), target.num.scaled(dh));
  out.rescaling = m;
  const Lattice scaled = h.scaled(m);
  IntMatrix basis = scaled.basis();
  for (Index i = 0; i < basis.rows(); ++i)
    for (Index j = 0; j < basis.cols(); ++j) {
      if (mp::abs(basis(i, j)) % dh != 0) throw std::logic_error("virtually_Zn_by_free: non-integral witness lattice");
      basis(i, j) /= dh;
    }
  out.normal_lattice = Lattice::from_generators(basis);
  return out;
}

}  // namespace gbs
