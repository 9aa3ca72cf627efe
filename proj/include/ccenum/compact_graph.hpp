#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ccenum {

using VertexId = std::uint32_t;
using Label = std::uint32_t;

inline constexpr VertexId kNoVertex = ~VertexId{0};

struct Edge {
  VertexId u;
  VertexId v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// An undirected edge list as produced by the generators and loaders, in the
/// order the edges were produced.
struct EdgeList {
  std::size_t vertex_count = 0;
  std::vector<Edge> edges;
};

/// Immutable CSR graph: vertex offsets (V_e), sorted adjacency (E_e) and
/// degree labels (L_v).
///
/// Every undirected edge is stored in both endpoint blocks, so the adjacency
/// array has 2m entries and offsets()[n] == 2m. Neighbor blocks are strictly
/// increasing, which makes is_adjacent() a binary search over at most
/// max_degree() entries. Labels are all zero until attach_labels() is called.
class CompactGraph {
 public:
  CompactGraph() = default;

  std::size_t vertex_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return adjacency_.size() / 2; }
  std::size_t max_degree() const noexcept { return max_degree_; }

  std::size_t degree(VertexId u) const;
  std::span<const VertexId> neighbors(VertexId u) const;
  bool is_adjacent(VertexId u, VertexId v) const;

  // Unchecked variants for the enumeration inner loops.
  std::span<const VertexId> neighbors_unchecked(VertexId u) const noexcept {
    return {adjacency_.data() + offsets_[u], adjacency_.data() + offsets_[u + 1]};
  }
  bool adjacent_unchecked(VertexId u, VertexId v) const noexcept;

  std::span<const std::uint32_t> offsets() const noexcept { return offsets_; }
  std::span<const VertexId> adjacency() const noexcept { return adjacency_; }
  std::span<const Label> labels() const noexcept { return labels_; }

  bool has_labels() const noexcept { return has_labels_; }
  /// Installs a vertex labeling. Throws InvalidParameter unless `labels` is a
  /// permutation of 0..n-1.
  void attach_labels(std::span<const Label> labels);

  /// Distinct edges with u < v, ordered by (u, v).
  std::vector<Edge> edges() const;

 private:
  friend CompactGraph build_compact(std::size_t, std::span<const Edge>);

  std::vector<std::uint32_t> offsets_{0};
  std::vector<VertexId> adjacency_;
  std::vector<Label> labels_;
  std::size_t max_degree_ = 0;
  bool has_labels_ = false;
};

/// Builds the CSR form. Duplicate pairs (in either orientation) are merged.
/// Throws InvalidVertex for an endpoint >= n and SelfLoopRejected for (u, u).
CompactGraph build_compact(std::size_t n, std::span<const Edge> edges);
CompactGraph build_compact(const EdgeList& list);

// --- generators -------------------------------------------------------------

/// Synthetic graph families. Vertex numbering:
///   cycle(k):               0..k-1 around the cycle
///   wheel(k):               rim 0..k-1, hub k
///   complete_bipartite(a,b): left side 0..a-1, right side a..a+b-1
///   grid(r,c):              row-major, vertex (i, j) is i*c + j
struct GraphFamily {
  enum class Kind { Cycle, Wheel, CompleteBipartite, Grid };
  Kind kind = Kind::Cycle;
  std::size_t a = 3;
  std::size_t b = 0;

  static GraphFamily cycle(std::size_t k) { return {Kind::Cycle, k, 0}; }
  static GraphFamily wheel(std::size_t k) { return {Kind::Wheel, k, 0}; }
  static GraphFamily complete_bipartite(std::size_t a, std::size_t b) {
    return {Kind::CompleteBipartite, a, b};
  }
  static GraphFamily grid(std::size_t r, std::size_t c) { return {Kind::Grid, r, c}; }
};

/// Parses "cycle:K", "wheel:K", "bipartite:AxB" or "grid:RxC".
/// Throws InvalidParameter on malformed input or out-of-range parameters.
GraphFamily parse_family(std::string_view spec);
std::string to_string(const GraphFamily& family);

EdgeList generate_edges(const GraphFamily& family);
CompactGraph generate(const GraphFamily& family);

/// Erdos-Renyi G(n, p) with a fixed seed (std::mt19937_64).
EdgeList random_gnp(std::size_t n, double p, std::uint64_t seed);

// --- text formats -----------------------------------------------------------

/// Reads "u v" lines. Blank lines and lines starting with '#' are skipped; an
/// optional "p n m" header fixes the vertex count (m is informational).
/// Throws ParseError / SelfLoopRejected carrying the 1-based line number.
EdgeList read_edge_list(std::istream& in);
CompactGraph load_edge_list(std::istream& in);

/// Writes `list` in the format accepted by read_edge_list. A "p n m" header is
/// emitted only when the edges alone would not recover the vertex count.
void write_edge_list(std::ostream& out, const EdgeList& list);

// --- niche overlap ----------------------------------------------------------

struct Arc {
  VertexId predator;
  VertexId prey;
};

struct DirectedEdgeList {
  std::size_t vertex_count = 0;
  std::vector<Arc> arcs;
};

/// Same line format as read_edge_list, read as "predator prey"; self-arcs are
/// kept (a cannibal is a valid food-web entry).
DirectedEdgeList read_arc_list(std::istream& in);

/// Competition graph: u -- v (u != v) iff u and v share at least one prey.
CompactGraph niche_overlap(const DirectedEdgeList& food_web);

}  // namespace ccenum
