#include "ccenum/cycle_set.hpp"

#include <algorithm>

namespace ccenum {

void CycleSet::insert(std::span<const VertexId> cycle) {
  count(cycle.size());
  if (count_only_) return;
  vertices_.insert(vertices_.end(), cycle.begin(), cycle.end());
  offsets_.push_back(vertices_.size());
}

void CycleSet::count(std::size_t length, std::uint64_t times) {
  if (length == 3) {
    triangles_ += times;
  } else {
    longer_ += times;
  }
}

void CycleSet::reserve(std::size_t cycles, std::size_t vertices) {
  if (count_only_) return;
  offsets_.reserve(cycles + 1);
  vertices_.reserve(vertices);
}

std::vector<std::vector<VertexId>> CycleSet::sorted() const {
  std::vector<std::vector<VertexId>> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) {
    const auto c = (*this)[i];
    out.emplace_back(c.begin(), c.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool CycleSet::has_duplicates() const {
  const auto s = sorted();
  return std::adjacent_find(s.begin(), s.end()) != s.end();
}

}  // namespace ccenum
