#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ccenum/compact_graph.hpp"

namespace ccenum {

/// Wall time of the two enumeration phases: seeding (triangles and initial
/// triplets) and path expansion.
struct PhaseTimes {
  double seed_ms = 0;
  double expand_ms = 0;
};

/// Collection of chordless cycles, stored flat (one offset per cycle), or in
/// count-only mode just the tallies. Triangles and longer cycles are counted
/// separately either way.
class CycleSet {
 public:
  explicit CycleSet(bool count_only = false) : count_only_(count_only) {}

  bool count_only() const noexcept { return count_only_; }

  /// Stores the cycle (unless count-only) and updates the tallies.
  void insert(std::span<const VertexId> cycle);
  /// Tally-only update, for engines that do not materialize the cycle.
  void count(std::size_t length, std::uint64_t times = 1);
  void reserve(std::size_t cycles, std::size_t vertices);

  std::uint64_t triangle_count() const noexcept { return triangles_; }
  /// Chordless cycles with more than three vertices.
  std::uint64_t chordless_count() const noexcept { return longer_; }
  std::uint64_t total() const noexcept { return triangles_ + longer_; }

  /// Number of materialized cycles (0 in count-only mode).
  std::size_t size() const noexcept { return offsets_.size() - 1; }
  std::span<const VertexId> operator[](std::size_t i) const noexcept {
    return {vertices_.data() + offsets_[i], vertices_.data() + offsets_[i + 1]};
  }

  /// Materialized cycles as vectors, sorted lexicographically.
  std::vector<std::vector<VertexId>> sorted() const;
  bool has_duplicates() const;

 private:
  bool count_only_;
  std::vector<VertexId> vertices_;
  std::vector<std::size_t> offsets_{0};
  std::uint64_t triangles_ = 0;
  std::uint64_t longer_ = 0;
};

}  // namespace ccenum
