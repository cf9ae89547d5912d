#pragma once

#include "gbs/exact/rat_matrix.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace gbs {

/// Edge group G_e = Z^n with inclusions into the vertex groups at its ends.
/// Columns of each matrix are images of the edge-group basis.
struct Edge {
  std::string id;
  std::string from;  // iota e
  std::string to;    // tau e
  IntMatrix incl_from;
  IntMatrix incl_to;

  bool is_loop() const { return from == to; }
  Integer label_from() const;  // |det incl_from|
  Integer label_to() const;    // |det incl_to|
};

struct GraphOfGroups {
  Index rank = 0;
  std::vector<std::string> vertices;
  std::vector<Edge> edges;

  std::optional<std::size_t> vertex_index(const std::string& name) const;
  std::optional<std::size_t> edge_index(const std::string& id) const;
};

struct ValidationIssue {
  std::string where;  // edge id, vertex name or "graph"
  std::string message;
};

std::vector<ValidationIssue> validate(const GraphOfGroups& g);
/// Throws std::invalid_argument listing every issue.
void require_valid(const GraphOfGroups& g);

/// Merging `removed` into `kept` along edge `edge_id`; every other edge end
/// at `removed` had its inclusion left-multiplied by `transform`.
struct Collapse {
  std::string edge_id;
  std::string removed;
  std::string kept;
  IntMatrix transform;
};

struct Reduction {
  GraphOfGroups graph;
  std::vector<Collapse> log;
};

/// Collapses non-loop edges with a unimodular inclusion, lowest edge id first,
/// until none remain.
Reduction reduce(const GraphOfGroups& g);
/// Same, but among the collapsible edges the one picked is the first in
/// `priority` (edge ids); ids not listed come after, in id order.
Reduction reduce(const GraphOfGroups& g, const std::vector<std::string>& priority);

struct Classification {
  enum class Kind { free_abelian, ascending_hnn, general };
  Kind kind = Kind::general;
  IntMatrix phi;              // ascending_hnn only
  Integer d = 0;              // |det phi|
  std::string loop_id;        // ascending_hnn only
  bool flipped = false;       // loop read against its orientation
  std::vector<Collapse> collapse_log;
};

std::string to_string(Classification::Kind kind);

/// For an already reduced graph.
Classification classify(const GraphOfGroups& reduced);
/// reduce followed by classify.
Classification classify_reduced(const Reduction& r);

/// BFS spanning tree from the least vertex name, scanning incident edges in
/// ascending id order.
struct SpanningTree {
  std::size_t root = 0;
  std::vector<std::size_t> order;                      // BFS order of vertex indices
  std::vector<std::optional<std::size_t>> parent_edge;  // per vertex
  std::vector<std::size_t> tree_edges;
  std::vector<std::size_t> non_tree_edges;  // ascending id order
};

SpanningTree spanning_tree(const GraphOfGroups& g);

/// Product of lambda_tau / lambda_iota around the fundamental cycle of each
/// non-tree edge, traversed along that edge's orientation.
std::vector<Rational> cycle_ratios(const GraphOfGroups& g);

/// Reverses an edge: swaps its ends and inclusions.
Edge flipped(const Edge& e);

}  // namespace gbs
