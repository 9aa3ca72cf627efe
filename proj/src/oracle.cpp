#include "ccenum/oracle.hpp"

#include <numeric>
#include <string>
#include <vector>

#include "ccenum/errors.hpp"
#include "ccenum/sequential.hpp"

namespace ccenum {

namespace {

class BruteForce {
 public:
  explicit BruteForce(const CompactGraph& g) : n_(g.vertex_count()), adj_(n_ * n_, 0) {
    for (VertexId u = 0; u < n_; ++u) {
      for (VertexId v : g.neighbors(u)) adj_[u * n_ + v] = 1;
    }
  }

  std::vector<std::vector<VertexId>> run() {
    on_path_.assign(n_, 0);
    for (VertexId s = 0; s < n_; ++s) {
      path_.assign(1, s);
      on_path_[s] = 1;
      walk();
      on_path_[s] = 0;
    }
    return std::move(found_);
  }

 private:
  bool adj(VertexId a, VertexId b) const { return adj_[a * n_ + b] != 0; }

  // Induced edge count of a vertex set, counted from the dense matrix.
  std::size_t induced_edges(const std::vector<VertexId>& vs) const {
    std::size_t e = 0;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      for (std::size_t j = i + 1; j < vs.size(); ++j) e += adj(vs[i], vs[j]) ? 1 : 0;
    }
    return e;
  }

  void walk() {
    const VertexId s = path_.front();
    const VertexId tail = path_.back();
    for (VertexId v = s + 1; v < n_; ++v) {
      if (!adj(tail, v) || on_path_[v]) continue;
      // Chord to an interior vertex: neither this walk nor any longer one
      // can be chordless.
      bool chord = false;
      for (std::size_t i = 1; i + 1 < path_.size(); ++i) chord = chord || adj(path_[i], v);
      if (chord) continue;
      path_.push_back(v);
      if (path_.size() >= 3 && adj(v, s)) {
        if (path_[1] < v && induced_edges(path_) == path_.size()) found_.push_back(path_);
      } else {
        on_path_[v] = 1;
        walk();
        on_path_[v] = 0;
      }
      path_.pop_back();
    }
  }

  std::size_t n_;
  std::vector<char> adj_;
  std::vector<char> on_path_;
  std::vector<VertexId> path_;
  std::vector<std::vector<VertexId>> found_;
};

}  // namespace

CycleSet brute_force_chordless(const CompactGraph& g, std::size_t vertex_limit) {
  if (g.vertex_count() > vertex_limit) {
    throw InputTooLarge("oracle limited to " + std::to_string(vertex_limit) + " vertices, got " +
                        std::to_string(g.vertex_count()));
  }
  std::vector<Label> identity;
  std::span<const Label> labels = g.labels();
  if (!g.has_labels()) {
    identity.resize(g.vertex_count());
    std::iota(identity.begin(), identity.end(), Label{0});
    labels = identity;
  }
  CycleSet out;
  for (const auto& c : BruteForce(g).run()) out.insert(canonicalize(g, c, labels));
  return out;
}

}  // namespace ccenum
