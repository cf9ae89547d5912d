#include "gbs/gog/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace gbs {

namespace {

std::optional<std::size_t> next_collapse(const GraphOfGroups& g, const std::vector<std::string>& priority) {
  std::optional<std::size_t> best;
  auto rank_of = [&](const std::string& id) {
    const auto it = std::find(priority.begin(), priority.end(), id);
    return static_cast<std::size_t>(it - priority.begin());
  };
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    const Edge& e = g.edges[k];
    if (e.is_loop() || !(is_unimodular(e.incl_from) || is_unimodular(e.incl_to))) continue;
    if (!best) {
      best = k;
      continue;
    }
    const Edge& b = g.edges[*best];
    const auto ra = rank_of(e.id), rb = rank_of(b.id);
    if (ra < rb || (ra == rb && e.id < b.id)) best = k;
  }
  return best;
}

Collapse collapse(GraphOfGroups& g, std::size_t k) {
  Edge e = g.edges[k];
  // Orient so that incl_from is the unimodular side; removed = iota e.
  if (!is_unimodular(e.incl_from)) e = flipped(e);
  Collapse c{e.id, e.from, e.to, e.incl_to * unimodular_inverse(e.incl_from)};
  g.edges.erase(g.edges.begin() + static_cast<long>(k));
  for (Edge& f : g.edges) {
    if (f.from == c.removed) {
      f.from = c.kept;
      f.incl_from = c.transform * f.incl_from;
    }
    if (f.to == c.removed) {
      f.to = c.kept;
      f.incl_to = c.transform * f.incl_to;
    }
  }
  g.vertices.erase(std::find(g.vertices.begin(), g.vertices.end(), c.removed));
  return c;
}

}  // namespace

Reduction reduce(const GraphOfGroups& g) { return reduce(g, {}); }

Reduction reduce(const GraphOfGroups& g, const std::vector<std::string>& priority) {
  require_valid(g);
  Reduction r{g, {}};
  while (const auto k = next_collapse(r.graph, priority)) r.log.push_back(collapse(r.graph, *k));
  return r;
}

std::string to_string(Classification::Kind kind) {
  switch (kind) {
    case Classification::Kind::free_abelian:
      return "free_abelian";
    case Classification::Kind::ascending_hnn:
      return "ascending_hnn";
    case Classification::Kind::general:
      return "general";
  }
  return "general";
}

Classification classify(const GraphOfGroups& reduced) {
  Classification c;
  if (reduced.edges.empty()) {
    c.kind = Classification::Kind::free_abelian;
    return c;
  }
  if (reduced.vertices.size() != 1 || reduced.edges.size() != 1) return c;
  const Edge& loop = reduced.edges.front();
  if (is_unimodular(loop.incl_from)) {
    c.phi = loop.incl_to * unimodular_inverse(loop.incl_from);
  } else if (is_unimodular(loop.incl_to)) {
    c.phi = loop.incl_from * unimodular_inverse(loop.incl_to);
    c.flipped = true;
  } else {
    return c;
  }
  c.kind = Classification::Kind::ascending_hnn;
  c.d = mp::abs(determinant(c.phi));
  c.loop_id = loop.id;
  return c;
}

Classification classify_reduced(const Reduction& r) {
  Classification c = classify(r.graph);
  c.collapse_log = r.log;
  return c;
}

}  // namespace gbs
