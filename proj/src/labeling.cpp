#include "ccenum/labeling.hpp"

#include <set>

namespace ccenum {

std::vector<VertexId> Labeling::order() const {
  std::vector<VertexId> out(labels.size());
  for (std::size_t v = 0; v < labels.size(); ++v) out[labels[v]] = static_cast<VertexId>(v);
  return out;
}

Labeling degree_labeling(const CompactGraph& g) {
  const std::size_t n = g.vertex_count();
  Labeling out;
  out.labels.assign(n, 0);
  if (n == 0) return out;

  // Bucket per residual degree; std::set keeps each bucket ordered by id so
  // the tie-break is just "take the first element".
  std::vector<std::size_t> degree(n);
  std::vector<std::set<VertexId>> buckets(g.max_degree() + 1);
  for (VertexId v = 0; v < n; ++v) {
    degree[v] = g.neighbors_unchecked(v).size();
    buckets[degree[v]].insert(v);
  }
  std::vector<char> removed(n, 0);
  std::size_t low = 0;
  for (Label step = 0; step < n; ++step) {
    while (buckets[low].empty()) ++low;
    const VertexId u = *buckets[low].begin();
    buckets[low].erase(buckets[low].begin());
    removed[u] = 1;
    out.labels[u] = step;
    for (VertexId w : g.neighbors_unchecked(u)) {
      if (removed[w]) continue;
      buckets[degree[w]].erase(w);
      --degree[w];
      buckets[degree[w]].insert(w);
    }
    // A deletion lowers neighbour degrees by at most one.
    if (low > 0) --low;
  }
  return out;
}

Labeling label_graph(CompactGraph& g) {
  Labeling l = degree_labeling(g);
  g.attach_labels(l.labels);
  return l;
}

}  // namespace ccenum
