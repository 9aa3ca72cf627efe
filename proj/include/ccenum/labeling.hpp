#pragma once

#include <vector>

#include "ccenum/compact_graph.hpp"

namespace ccenum {

/// Degree labeling: labels[v] is the step at which v was removed when
/// repeatedly deleting a minimum-degree vertex (0-based).
struct Labeling {
  std::vector<Label> labels;

  /// Inverse permutation: order()[i] is the vertex removed at step i.
  std::vector<VertexId> order() const;
};

/// Iterated minimum-degree deletion. Among several minimum-degree vertices
/// the smallest vertex id is removed first, so the result depends only on the
/// graph, never on edge input order.
Labeling degree_labeling(const CompactGraph& g);

/// Computes the degree labeling and attaches it to `g`.
Labeling label_graph(CompactGraph& g);

}  // namespace ccenum
