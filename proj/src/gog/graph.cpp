#include "gbs/gog/graph.hpp"

#include "gbs/exact/rat_matrix.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace gbs {

Integer Edge::label_from() const { return mp::abs(determinant(incl_from)); }
Integer Edge::label_to() const { return mp::abs(determinant(incl_to)); }

std::optional<std::size_t> GraphOfGroups::vertex_index(const std::string& name) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == name) return i;
  return std::nullopt;
}

std::optional<std::size_t> GraphOfGroups::edge_index(const std::string& id) const {
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (edges[i].id == id) return i;
  return std::nullopt;
}

namespace {

void check_matrix(const Edge& e, const char* side, const IntMatrix& m, Index n, std::vector<ValidationIssue>& out) {
  if (m.rows() != n || m.cols() != n) {
    out.push_back({e.id, std::string(side) + " must be " + std::to_string(n) + "x" + std::to_string(n) + ", got " +
                             std::to_string(m.rows()) + "x" + std::to_string(m.cols())});
    return;
  }
  if (determinant(m) == 0) out.push_back({e.id, std::string(side) + " is singular"});
}

}  // namespace

std::vector<ValidationIssue> validate(const GraphOfGroups& g) {
  std::vector<ValidationIssue> out;
  if (g.rank < 1) out.push_back({"graph", "rank must be at least 1"});
  if (g.vertices.empty()) out.push_back({"graph", "no vertices"});
  std::set<std::string> names;
  for (const auto& v : g.vertices)
    if (!names.insert(v).second) out.push_back({v, "duplicate vertex"});
  std::set<std::string> ids;
  for (const auto& e : g.edges) {
    if (!ids.insert(e.id).second) out.push_back({e.id, "duplicate edge id"});
    if (!names.count(e.from)) out.push_back({e.id, "unknown vertex '" + e.from + "'"});
    if (!names.count(e.to)) out.push_back({e.id, "unknown vertex '" + e.to + "'"});
    if (g.rank >= 1) {
      check_matrix(e, "incl_from", e.incl_from, g.rank, out);
      check_matrix(e, "incl_to", e.incl_to, g.rank, out);
    }
  }
  if (!out.empty() || g.vertices.empty()) return out;

  std::vector<std::size_t> component(g.vertices.size());
  std::iota(component.begin(), component.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return component[x] == x ? x : component[x] = find(component[x]);
  };
  for (const auto& e : g.edges) component[find(*g.vertex_index(e.from))] = find(*g.vertex_index(e.to));
  for (std::size_t i = 1; i < g.vertices.size(); ++i)
    if (find(i) != find(0)) out.push_back({g.vertices[i], "graph is disconnected: no path to '" + g.vertices[0] + "'"});
  return out;
}

void require_valid(const GraphOfGroups& g) {
  const auto issues = validate(g);
  if (issues.empty()) return;
  std::string msg = "invalid graph of groups:";
  for (const auto& i : issues) msg += " [" + i.where + "] " + i.message + ";";
  throw std::invalid_argument(msg);
}

SpanningTree spanning_tree(const GraphOfGroups& g) {
  SpanningTree t;
  const std::size_t nv = g.vertices.size();
  t.parent_edge.assign(nv, std::nullopt);
  if (nv == 0) return t;
  t.root = static_cast<std::size_t>(std::min_element(g.vertices.begin(), g.vertices.end()) - g.vertices.begin());

  std::vector<std::size_t> by_id(g.edges.size());
  std::iota(by_id.begin(), by_id.end(), 0);
  std::sort(by_id.begin(), by_id.end(), [&](auto a, auto b) { return g.edges[a].id < g.edges[b].id; });

  std::vector<bool> seen(nv, false), used(g.edges.size(), false);
  std::deque<std::size_t> queue{t.root};
  seen[t.root] = true;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    t.order.push_back(u);
    for (std::size_t k : by_id) {
      const Edge& e = g.edges[k];
      const std::size_t a = *g.vertex_index(e.from), b = *g.vertex_index(e.to);
      if (a != u && b != u) continue;
      const std::size_t other = a == u ? b : a;
      if (seen[other]) continue;
      seen[other] = true;
      used[k] = true;
      t.parent_edge[other] = k;
      t.tree_edges.push_back(k);
      queue.push_back(other);
    }
  }
  for (std::size_t k : by_id)
    if (!used[k]) t.non_tree_edges.push_back(k);
  return t;
}

std::vector<Rational> cycle_ratios(const GraphOfGroups& g) {
  const SpanningTree t = spanning_tree(g);
  std::vector<Rational> potential(g.vertices.size(), Rational(1));
  for (std::size_t v : t.order) {
    if (!t.parent_edge[v]) continue;
    const Edge& e = g.edges[*t.parent_edge[v]];
    const Rational rho(e.label_to(), e.label_from());
    const std::size_t from = *g.vertex_index(e.from);
    potential[v] = from == v ? potential[*g.vertex_index(e.to)] / rho : potential[from] * rho;
  }
  std::vector<Rational> out;
  for (std::size_t k : t.non_tree_edges) {
    const Edge& e = g.edges[k];
    out.push_back(potential[*g.vertex_index(e.from)] * Rational(e.label_to(), e.label_from()) /
                  potential[*g.vertex_index(e.to)]);
  }
  return out;
}

Edge flipped(const Edge& e) { return Edge{e.id, e.to, e.from, e.incl_to, e.incl_from}; }

}  // namespace gbs
