#include "ccenum/path_store.hpp"

#include <algorithm>
#include <cstring>
#include <string>

#include "ccenum/errors.hpp"

namespace ccenum {

PathStore::PathStore(std::size_t vertex_count, std::size_t capacity)
    : words_(std::max<std::size_t>(1, bits::words_for(vertex_count))),
      bits_(capacity * words_, 0),
      first_(capacity, kNoVertex),
      second_(capacity, kNoVertex),
      last_(capacity, kNoVertex) {}

PathStore::PathStore(PathStore&& other) noexcept
    : words_(other.words_),
      bits_(std::move(other.bits_)),
      first_(std::move(other.first_)),
      second_(std::move(other.second_)),
      last_(std::move(other.last_)),
      reserved_(other.reserved_.load()) {
  other.reserved_ = 0;
}

PathStore& PathStore::operator=(PathStore&& other) noexcept {
  words_ = other.words_;
  bits_ = std::move(other.bits_);
  first_ = std::move(other.first_);
  second_ = std::move(other.second_);
  last_ = std::move(other.last_);
  reserved_ = other.reserved_.load();
  other.reserved_ = 0;
  return *this;
}

std::size_t PathStore::size() const noexcept { return std::min(requested(), capacity()); }

std::optional<std::size_t> PathStore::try_append(const PathRecord& record) noexcept {
  const std::size_t r = reserved_.fetch_add(1, std::memory_order_acq_rel);
  if (r >= capacity()) return std::nullopt;
  bits::Word* dst = bits_.data() + r * words_;
  const std::size_t n = std::min(words_, record.members.size());
  std::memcpy(dst, record.members.data(), n * sizeof(bits::Word));
  std::fill(dst + n, dst + words_, bits::Word{0});
  VertexId last = record.last;
  if (record.extra != kNoVertex) {
    bits::set(std::span<bits::Word>(dst, words_), record.extra);
    last = record.extra;
  }
  first_[r] = record.first;
  second_[r] = record.second;
  last_[r] = last;
  return r;
}

void PathStore::truncate(std::size_t rows) noexcept {
  if (rows < requested()) reserved_.store(rows, std::memory_order_release);
}

void PathStore::reserve_rows(std::size_t rows) {
  if (rows <= capacity()) return;
  bits_.resize(rows * words_, 0);
  first_.resize(rows, kNoVertex);
  second_.resize(rows, kNoVertex);
  last_.resize(rows, kNoVertex);
}

std::size_t append_reserved(PathStore& store, const PathRecord& record) {
  if (auto r = store.try_append(record)) return *r;
  throw CapacityExceeded("path store full at " + std::to_string(store.capacity()) + " rows");
}

}  // namespace ccenum
