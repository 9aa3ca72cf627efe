#pragma once

#include <atomic>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ccenum/bitset.hpp"
#include "ccenum/compact_graph.hpp"

namespace ccenum {

/// One chordless path (or closed cycle) to be written into a PathStore.
/// `extra`, when set, is added to the bitmap and becomes the last vertex.
struct PathRecord {
  std::span<const bits::Word> members;
  VertexId first = kNoVertex;
  VertexId second = kNoVertex;
  VertexId last = kNoVertex;
  VertexId extra = kNoVertex;
};

/// Row-oriented store of in-flight paths: one membership bitmap per row plus
/// the first, second and last vertex of the path.
///
/// Appends may run concurrently: a row is reserved with one atomic increment
/// and then written by the reserving thread alone. An append that lands past
/// capacity() is dropped but still counted, so after a round the host can read
/// requested() to size the retry. Rows are only read once all writers have
/// joined.
class PathStore {
 public:
  PathStore() = default;
  PathStore(std::size_t vertex_count, std::size_t capacity);

  PathStore(PathStore&& other) noexcept;
  PathStore& operator=(PathStore&& other) noexcept;
  PathStore(const PathStore&) = delete;
  PathStore& operator=(const PathStore&) = delete;

  std::size_t words_per_row() const noexcept { return words_; }
  std::size_t capacity() const noexcept { return first_.size(); }
  /// Valid rows; never exceeds capacity().
  std::size_t size() const noexcept;
  /// Appends attempted since the last clear(), including dropped ones.
  std::size_t requested() const noexcept { return reserved_.load(std::memory_order_acquire); }
  bool overflowed() const noexcept { return requested() > capacity(); }

  /// Thread-safe. Returns the row index, or nullopt when the store is full.
  std::optional<std::size_t> try_append(const PathRecord& record) noexcept;

  std::span<const bits::Word> row(std::size_t r) const noexcept {
    return {bits_.data() + r * words_, words_};
  }
  VertexId first(std::size_t r) const noexcept { return first_[r]; }
  VertexId second(std::size_t r) const noexcept { return second_[r]; }
  VertexId last(std::size_t r) const noexcept { return last_[r]; }

  // Not thread-safe; call between rounds only.
  void clear() noexcept { reserved_.store(0, std::memory_order_release); }
  void truncate(std::size_t rows) noexcept;
  /// Grows to at least `rows` rows. Existing rows are preserved.
  void reserve_rows(std::size_t rows);

 private:
  std::size_t words_ = 0;
  std::vector<bits::Word> bits_;
  std::vector<VertexId> first_;
  std::vector<VertexId> second_;
  std::vector<VertexId> last_;
  std::atomic<std::size_t> reserved_{0};
};

/// Throwing append: CapacityExceeded when no row is free.
std::size_t append_reserved(PathStore& store, const PathRecord& record);

}  // namespace ccenum
