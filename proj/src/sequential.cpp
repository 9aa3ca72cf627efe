#include "ccenum/sequential.hpp"

#include <chrono>

#include "ccenum/labeling.hpp"

namespace ccenum {

TripletSplit find_triplets(const CompactGraph& g, std::span<const Label> labels, bool count_only) {
  TripletSplit out{CycleSet(count_only), {}};
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    const auto nb = g.neighbors_unchecked(u);
    for (VertexId x : nb) {
      if (labels[x] <= labels[u]) continue;
      for (VertexId y : nb) {
        if (labels[y] <= labels[x]) continue;
        if (g.adjacent_unchecked(x, y)) {
          const VertexId tri[] = {x, u, y};
          out.triangles.insert(tri);
        } else {
          out.triplets.push_back({x, u, y});
        }
      }
    }
  }
  return out;
}

namespace {

enum class Extension { Rejected, Extends, Closes };

// Adj(v) intersected with the path must be {last} to extend, {last, first}
// to close a cycle. Anything else is a chord.
Extension classify(const CompactGraph& g, std::span<const bits::Word> members, VertexId first,
                   VertexId last, VertexId v) {
  bool touches_first = false;
  for (VertexId w : g.neighbors_unchecked(v)) {
    if (w == last || !bits::test(members, w)) continue;
    if (w != first) return Extension::Rejected;
    touches_first = true;
  }
  return touches_first ? Extension::Closes : Extension::Extends;
}

}  // namespace

CycleSet enumerate_sequential(const CompactGraph& g, SequentialOptions options) {
  std::vector<Label> computed;
  std::span<const Label> labels = g.labels();
  if (!g.has_labels()) {
    computed = degree_labeling(g).labels;
    labels = computed;
  }

  using Clock = std::chrono::steady_clock;
  auto t0 = Clock::now();
  TripletSplit split = find_triplets(g, labels, options.count_only);
  CycleSet cycles = std::move(split.triangles);
  if (options.times) {
    options.times->seed_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  }
  t0 = Clock::now();

  std::vector<bits::Word> members(bits::words_for(g.vertex_count()), 0);
  std::vector<VertexId> path;
  std::vector<std::uint32_t> cursor;  // next neighbour index to try, per depth
  path.reserve(g.vertex_count() + 1);
  cursor.reserve(g.vertex_count() + 1);

  for (const Triplet& t : split.triplets) {
    path.assign({t.x, t.u, t.y});
    for (VertexId v : path) bits::set(members, v);
    cursor.assign(1, 0);
    const Label floor = labels[t.u];

    while (!cursor.empty()) {
      const VertexId tail = path.back();
      const auto nb = g.neighbors_unchecked(tail);
      if (cursor.back() == nb.size()) {
        cursor.pop_back();
        if (path.size() > 3) {
          bits::reset(members, tail);
          path.pop_back();
        }
        continue;
      }
      const VertexId v = nb[cursor.back()++];
      if (labels[v] <= floor || bits::test(members, v)) continue;
      switch (classify(g, members, t.x, tail, v)) {
        case Extension::Rejected:
          break;
        case Extension::Closes:
          if (options.count_only) {
            cycles.count(path.size() + 1);
          } else {
            path.push_back(v);
            cycles.insert(path);
            path.pop_back();
          }
          break;
        case Extension::Extends:
          path.push_back(v);
          bits::set(members, v);
          cursor.push_back(0);
          break;
      }
    }
    for (VertexId v : path) bits::reset(members, v);
  }
  if (options.times) {
    options.times->expand_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  }
  return cycles;
}

}  // namespace ccenum
