#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "ccenum/compact_graph.hpp"
#include "ccenum/cycle_set.hpp"
#include "ccenum/path_store.hpp"

namespace ccenum {

// Two-stage data-parallel enumeration.
//
// Stage 1 maps a flat index space of n * maxdeg^2 lanes onto (u, x, y)
// wedges and emits triangles and initial triplets. Stage 2 maps |T| * maxdeg
// lanes onto (path, candidate neighbour) pairs and either closes a cycle,
// extends the path into the next frontier, or drops the lane. Kernels touch
// shared state only through PathStore appends and atomic counters, so a lane
// can run on any worker; the host loop swaps frontiers behind a barrier.

struct CapacityPolicy {
  std::size_t initial_rows = 1024;
  /// When false, running out of rows throws CapacityExceeded instead of
  /// growing the store and re-running the stage.
  bool growable = true;
  /// When nonzero, a round expands at most this many frontier rows at a time
  /// and the resulting sub-frontier is finished before the next slice, so
  /// peak memory scales with the slice instead of the widest round. Counts,
  /// cycles and the evolution log are the same as for an unsliced run.
  std::size_t max_frontier_rows = 0;
};

struct KernelConfig {
  /// Persistent worker count; each worker strides the lane space by this.
  std::size_t workers = 1;
  /// Stage-2 rounds; defaults to n - 3.
  std::optional<std::size_t> rounds;
  /// Stop as soon as a round produces an empty frontier.
  bool early_exit_check = true;
  bool count_only = false;
  bool evolution_log = false;
  CapacityPolicy capacity;
  /// Called with the stage-1 frontier (round 1) and with every frontier batch
  /// a stage-2 round produces (round 2, 3, ...). Unsliced runs produce one
  /// batch per round.
  std::function<void(std::size_t round, const PathStore& frontier)> on_frontier;

  static std::size_t default_workers() noexcept;
};

struct RoundRecord {
  std::size_t round;
  std::uint64_t frontier_size;
  std::uint64_t cycles_total;
};

/// Frontier and cycle counts after stage 1 (round 1) and after every stage-2
/// round (2, 3, ...).
class EvolutionLog {
 public:
  void record(std::size_t round, std::uint64_t frontier, std::uint64_t cycles) {
    records_.push_back({round, frontier, cycles});
  }
  std::span<const RoundRecord> records() const noexcept { return records_; }
  bool empty() const noexcept { return records_.empty(); }

  /// "round,frontier_size,cycles_total" header plus one row per record.
  void write_csv(std::ostream& out) const;

 private:
  std::vector<RoundRecord> records_;
};

/// Per-round lane accounting. Every lane ends in exactly one bucket, so
/// lanes == invalid + rejected + extended + closed.
struct RoundStats {
  std::uint64_t consumed = 0;  // frontier rows read
  std::uint64_t lanes = 0;
  std::uint64_t invalid = 0;   // candidate index past the tail's degree
  std::uint64_t rejected = 0;  // label gate, already on path, or chord
  std::uint64_t extended = 0;
  std::uint64_t closed = 0;

  RoundStats& operator+=(const RoundStats& o) noexcept;
};

/// Destination for closed cycles: a PathStore of closed rows, or just a
/// counter in count-only mode.
class CycleSink {
 public:
  explicit CycleSink(PathStore* store) noexcept : store_(store) {}

  bool emit(const PathRecord& record) noexcept {
    if (store_ == nullptr) {
      counted_.fetch_add(1, std::memory_order_relaxed);
      return true;
    }
    return store_->try_append(record).has_value();
  }
  std::uint64_t size() const noexcept {
    return store_ ? store_->size() : counted_.load(std::memory_order_relaxed);
  }
  PathStore* store() const noexcept { return store_; }
  void rollback(std::uint64_t mark) noexcept;

 private:
  PathStore* store_;
  std::atomic<std::uint64_t> counted_{0};
};

struct Stage1Index {
  std::uint64_t u;
  std::uint64_t x;
  std::uint64_t y;
  friend bool operator==(const Stage1Index&, const Stage1Index&) = default;
};

/// Lane -> (vertex index, neighbour slot of x, neighbour slot of y).
constexpr Stage1Index stage1_decompose(std::uint64_t gid, std::uint64_t max_degree) noexcept {
  const std::uint64_t sq = max_degree * max_degree;
  const std::uint64_t u = gid / sq;
  return {u, (gid - u * sq) / max_degree, gid % max_degree};
}

/// Lane count of stage 1 (n * maxdeg^2).
std::uint64_t stage1_lanes(const CompactGraph& g) noexcept;

/// One stage-1 lane: appends <x, u, y> to `triangles` if x ~ y, else to
/// `triplets`. Invalid or label-rejected lanes have no effect. Returns false
/// if an append was dropped for lack of capacity.
bool stage1_kernel(const CompactGraph& g, std::span<const Label> labels, std::uint64_t gid,
                   CycleSink& triangles, PathStore& triplets, std::span<bits::Word> scratch);

/// One persistent stage-2 worker: processes lanes worker, worker + workers,
/// ... below frontier.size() * maxdeg.
void stage2_kernel(const CompactGraph& g, std::span<const Label> labels, const PathStore& frontier,
                   PathStore& next, CycleSink& cycles, std::size_t worker, std::size_t workers,
                   RoundStats& stats);

/// Same, restricted to frontier rows [row_begin, row_end).
void stage2_kernel(const CompactGraph& g, std::span<const Label> labels, const PathStore& frontier,
                   std::size_t row_begin, std::size_t row_end, PathStore& next, CycleSink& cycles,
                   std::size_t worker, std::size_t workers, RoundStats& stats);

struct ParallelResult {
  CycleSet cycles;
  EvolutionLog log;
  /// stats[i] describes stage-2 round i + 1.
  std::vector<RoundStats> stats;
  std::uint64_t initial_frontier = 0;
  std::uint64_t final_frontier = 0;
  std::size_t rounds_run = 0;
  PhaseTimes times;
};

/// Host loop: stage 1, then up to `rounds` stage-2 rounds with T / T'
/// swapped behind a barrier (see CapacityPolicy::max_frontier_rows for the
/// sliced variant). Uses the labels attached to `g`, or computes the
/// degree labeling when none are attached. Closed rows are converted back to
/// ordered canonical cycles at the end.
ParallelResult host_enumerate(const CompactGraph& g, const KernelConfig& config);

}  // namespace ccenum
