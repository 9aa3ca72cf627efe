#include "ccenum/compact_graph.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "ccenum/errors.hpp"

namespace ccenum {

namespace {

void check_vertex(std::size_t n, VertexId u) {
  if (u >= n) {
    throw InvalidVertex("vertex " + std::to_string(u) + " out of range (n = " +
                        std::to_string(n) + ")");
  }
}

}  // namespace

std::size_t CompactGraph::degree(VertexId u) const {
  check_vertex(vertex_count(), u);
  return offsets_[u + 1] - offsets_[u];
}

std::span<const VertexId> CompactGraph::neighbors(VertexId u) const {
  check_vertex(vertex_count(), u);
  return neighbors_unchecked(u);
}

bool CompactGraph::is_adjacent(VertexId u, VertexId v) const {
  check_vertex(vertex_count(), u);
  check_vertex(vertex_count(), v);
  return adjacent_unchecked(u, v);
}

bool CompactGraph::adjacent_unchecked(VertexId u, VertexId v) const noexcept {
  const auto block = neighbors_unchecked(u);
  return std::binary_search(block.begin(), block.end(), v);
}

void CompactGraph::attach_labels(std::span<const Label> labels) {
  const std::size_t n = vertex_count();
  if (labels.size() != n) {
    throw InvalidParameter("label count " + std::to_string(labels.size()) +
                           " does not match vertex count " + std::to_string(n));
  }
  std::vector<char> seen(n, 0);
  for (Label l : labels) {
    if (l >= n || seen[l]) throw InvalidParameter("labels are not a permutation of 0..n-1");
    seen[l] = 1;
  }
  labels_.assign(labels.begin(), labels.end());
  has_labels_ = true;
}

std::vector<Edge> CompactGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (VertexId u = 0; u < vertex_count(); ++u) {
    for (VertexId v : neighbors_unchecked(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

CompactGraph build_compact(std::size_t n, std::span<const Edge> edges) {
  if (n >= std::numeric_limits<VertexId>::max()) {
    throw InvalidParameter("vertex count exceeds 32-bit index width");
  }
  std::vector<Edge> directed;
  directed.reserve(2 * edges.size());
  for (const Edge& e : edges) {
    check_vertex(n, e.u);
    check_vertex(n, e.v);
    if (e.u == e.v) {
      throw SelfLoopRejected(0, "self-loop on vertex " + std::to_string(e.u));
    }
    directed.push_back({e.u, e.v});
    directed.push_back({e.v, e.u});
  }
  std::sort(directed.begin(), directed.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  directed.erase(std::unique(directed.begin(), directed.end()), directed.end());
  if (directed.size() > std::numeric_limits<std::uint32_t>::max()) {
    throw InvalidParameter("edge count exceeds 32-bit index width");
  }

  CompactGraph g;
  g.offsets_.assign(n + 1, 0);
  g.adjacency_.reserve(directed.size());
  for (const Edge& e : directed) {
    ++g.offsets_[e.u + 1];
    g.adjacency_.push_back(e.v);
  }
  for (std::size_t i = 0; i < n; ++i) {
    g.max_degree_ = std::max<std::size_t>(g.max_degree_, g.offsets_[i + 1]);
    g.offsets_[i + 1] += g.offsets_[i];
  }
  g.labels_.assign(n, 0);
  return g;
}

CompactGraph build_compact(const EdgeList& list) {
  return build_compact(list.vertex_count, list.edges);
}

}  // namespace ccenum
