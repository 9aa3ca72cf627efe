#include <algorithm>
#include <string>

#include "ccenum/errors.hpp"
#include "ccenum/sequential.hpp"

namespace ccenum {

std::vector<VertexId> canonicalize(const CompactGraph& g, std::span<const VertexId> cycle,
                                   std::span<const Label> labels) {
  const std::size_t k = cycle.size();
  if (k < 3) throw NotACycle("a cycle needs at least three vertices");
  if (labels.size() != g.vertex_count()) throw InvalidParameter("label count mismatch");
  std::vector<VertexId> sorted(cycle.begin(), cycle.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw NotACycle("repeated vertex in cycle");
  }
  for (std::size_t i = 0; i < k; ++i) {
    const VertexId a = cycle[i];
    const VertexId b = cycle[(i + 1) % k];
    if (a >= g.vertex_count() || b >= g.vertex_count() || !g.adjacent_unchecked(a, b)) {
      throw NotACycle("vertices " + std::to_string(a) + " and " + std::to_string(b) +
                      " are not adjacent");
    }
  }

  std::size_t lo = 0;
  for (std::size_t i = 1; i < k; ++i) {
    if (labels[cycle[i]] < labels[cycle[lo]]) lo = i;
  }
  const std::size_t prev = (lo + k - 1) % k;
  const std::size_t next = (lo + 1) % k;
  std::vector<VertexId> out;
  out.reserve(k);
  if (labels[cycle[prev]] < labels[cycle[next]]) {
    for (std::size_t i = 0; i < k; ++i) out.push_back(cycle[(prev + i) % k]);
  } else {
    for (std::size_t i = 0; i < k; ++i) out.push_back(cycle[(next + k - i) % k]);
  }
  return out;
}

std::vector<VertexId> reconstruct_order(const CompactGraph& g, std::span<const bits::Word> members,
                                        VertexId first, VertexId last) {
  const std::size_t n = g.vertex_count();
  if (members.size() < bits::words_for(n)) throw InvalidParameter("bitmap narrower than graph");

  std::vector<VertexId> vertices;
  bool stray = false;
  bits::for_each_set(members, [&](std::size_t v) {
    if (v >= n) {
      stray = true;
    } else {
      vertices.push_back(static_cast<VertexId>(v));
    }
  });
  if (stray) throw NotInduced("bitmap has bits beyond the vertex range");
  if (vertices.empty()) throw NotInduced("empty member set");

  // Induced degree of every member decides path vs cycle.
  std::size_t ends = 0;
  for (VertexId v : vertices) {
    std::size_t d = 0;
    for (VertexId w : g.neighbors_unchecked(v)) d += bits::test(members, w) ? 1 : 0;
    if (d > 2) throw NotInduced("vertex " + std::to_string(v) + " has induced degree > 2");
    if (d < 2) ++ends;
  }
  const std::size_t k = vertices.size();
  const bool is_cycle = ends == 0 && k >= 3;

  if (first == kNoVertex) {
    if (!is_cycle) throw NotInduced("member set does not induce a cycle");
    first = vertices.front();
    last = kNoVertex;
    for (VertexId w : g.neighbors_unchecked(first)) {
      if (bits::test(members, w)) {
        last = std::max(last == kNoVertex ? w : last, w);
      }
    }
  } else {
    if (first >= n || last >= n || !bits::test(members, first) || !bits::test(members, last)) {
      throw NotInduced("endpoints are not members");
    }
    if (k == 1) {
      if (first != last) throw NotInduced("single member but distinct endpoints");
      return {first};
    }
    if (!is_cycle && ends != 2) throw NotInduced("member set is neither a path nor a cycle");
    if (is_cycle && !g.adjacent_unchecked(first, last)) {
      throw NotInduced("cycle endpoints are not adjacent");
    }
    if (!is_cycle) {
      const auto deg_in = [&](VertexId v) {
        std::size_t d = 0;
        for (VertexId w : g.neighbors_unchecked(v)) d += bits::test(members, w) ? 1 : 0;
        return d;
      };
      if (deg_in(first) != 1 || deg_in(last) != 1) {
        throw NotInduced("endpoints are not the path ends");
      }
    }
  }

  std::vector<VertexId> order;
  order.reserve(k);
  order.push_back(first);
  VertexId prev = is_cycle ? last : kNoVertex;
  VertexId cur = first;
  while (order.size() < k) {
    VertexId next = kNoVertex;
    for (VertexId w : g.neighbors_unchecked(cur)) {
      if (w != prev && bits::test(members, w)) {
        next = w;
        break;
      }
    }
    if (next == kNoVertex || next == first) throw NotInduced("member set is disconnected");
    order.push_back(next);
    prev = cur;
    cur = next;
  }
  if (order.back() != last) throw NotInduced("walk did not end at the given last vertex");
  return order;
}

}  // namespace ccenum
