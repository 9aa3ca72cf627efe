#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "ccenum/ccenum.hpp"
#include "support/test_support.hpp"

using namespace ccenum;

namespace {

std::vector<Label> identity_labels(std::size_t n) {
  std::vector<Label> l(n);
  std::iota(l.begin(), l.end(), 0);
  return l;
}

std::vector<bits::Word> bitmap(std::size_t n, std::initializer_list<VertexId> vs) {
  std::vector<bits::Word> m(bits::words_for(n), 0);
  for (VertexId v : vs) bits::set(m, v);
  return m;
}

const CompactGraph& c4() {
  static const CompactGraph g =
      build_compact(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  return g;
}

}  // namespace

TEST_CASE("find_triplets: C4 with identity labels") {
  const auto split = find_triplets(c4(), identity_labels(4));
  CHECK(split.triangles.total() == 0);
  REQUIRE(split.triplets.size() == 1);
  CHECK(split.triplets[0] == Triplet{1, 0, 3});
}

TEST_CASE("find_triplets: trees have none, unicyclic graphs have one") {
  const auto tree = testing::labeled(
      build_compact(7, std::vector<Edge>{{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}}));
  CHECK(find_triplets(tree, tree.labels()).triplets.empty());
  const auto path = testing::labeled(generate(GraphFamily::grid(1, 9)));
  CHECK(find_triplets(path, path.labels()).triplets.empty());

  const auto c4_pendant = testing::labeled(
      build_compact(5, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {3, 4}}));
  CHECK(find_triplets(c4_pendant, c4_pendant.labels()).triplets.size() == 1);
  for (std::size_t k = 4; k <= 40; ++k) {
    const auto c = testing::labeled(generate(GraphFamily::cycle(k)));
    CHECK(find_triplets(c, c.labels()).triplets.size() == 1);
  }
}

TEST_CASE("property: each triangle appears once and triplets respect the label order") {
  for (const auto& ng : testing::random_corpus(60, 900)) {
    CAPTURE(ng.name);
    const auto& g = ng.graph;
    const auto l = g.labels();
    const auto adj = testing::dense(g);
    std::uint64_t expected = 0;
    for (VertexId a = 0; a < g.vertex_count(); ++a)
      for (VertexId b = a + 1; b < g.vertex_count(); ++b)
        for (VertexId c = b + 1; c < g.vertex_count(); ++c)
          expected += (adj[a][b] && adj[b][c] && adj[a][c]) ? 1 : 0;
    const auto split = find_triplets(g, l);
    CHECK(split.triangles.triangle_count() == expected);
    std::set<std::vector<VertexId>> seen;
    for (std::size_t i = 0; i < split.triangles.size(); ++i) {
      std::vector<VertexId> t(split.triangles[i].begin(), split.triangles[i].end());
      std::sort(t.begin(), t.end());
      CHECK(seen.insert(t).second);
    }
    for (const Triplet& t : split.triplets) {
      CHECK(l[t.u] < l[t.x]);
      CHECK(l[t.x] < l[t.y]);
      CHECK(adj[t.u][t.x]);
      CHECK(adj[t.u][t.y]);
      CHECK_FALSE(adj[t.x][t.y]);
    }
  }
}

TEST_CASE("property: initial search space bound") {
  auto check = [](const testing::NamedGraph& ng) {
    CAPTURE(ng.name);
    const auto& g = ng.graph;
    const auto split = find_triplets(g, g.labels());
    const std::uint64_t delta = g.max_degree();
    if (delta == 0) return;
    CHECK(2 * split.triplets.size() <= (delta - 1) * g.edge_count());
  };
  for (const auto& ng : testing::family_corpus()) check(ng);
  for (const auto& ng : testing::random_corpus(200, 1)) check(ng);
}

TEST_CASE("enumerate_sequential: published counts") {
  struct Row {
    GraphFamily family;
    std::uint64_t c3;
    std::uint64_t clc;
  };
  const Row rows[] = {
      {GraphFamily::cycle(100), 0, 1},
      {GraphFamily::wheel(100), 100, 1},
      {GraphFamily::complete_bipartite(8, 8), 0, 784},
      {GraphFamily::grid(4, 10), 0, 1823},
      {GraphFamily::grid(5, 6), 0, 749},
      {GraphFamily::grid(6, 6), 0, 3436},
  };
  for (const Row& r : rows) {
    CAPTURE(to_string(r.family));
    const auto g = generate(r.family);
    const auto cycles = enumerate_sequential(g);
    CHECK(cycles.triangle_count() == r.c3);
    CHECK(cycles.chordless_count() == r.clc);
    CHECK(cycles.size() == r.c3 + r.clc);
    const auto counted = enumerate_sequential(g, {.count_only = true});
    CHECK(counted.triangle_count() == r.c3);
    CHECK(counted.chordless_count() == r.clc);
    CHECK(counted.size() == 0);
  }
}

TEST_CASE("enumerate_sequential: output is chordless, canonical and duplicate-free") {
  auto check = [](const testing::NamedGraph& ng) {
    CAPTURE(ng.name);
    const auto& g = ng.graph;
    const auto l = g.labels();
    const auto adj = testing::dense(g);
    const auto cycles = enumerate_sequential(g);
    for (std::size_t i = 0; i < cycles.size(); ++i) {
      const auto c = cycles[i];
      CHECK(testing::is_chordless_cycle(adj, c));
      for (VertexId v : c) CHECK(l[c[1]] <= l[v]);
      CHECK(l[c[0]] < l[c[2]]);
      CHECK(std::equal(c.begin(), c.end(), canonicalize(g, c, l).begin()));
    }
    CHECK_FALSE(cycles.has_duplicates());
  };
  for (const auto& ng : testing::family_corpus()) check(ng);
  for (const auto& ng : testing::random_corpus(80, 77)) check(ng);
}

TEST_CASE("enumerate_sequential: phase timings and unlabeled input") {
  PhaseTimes t;
  const auto g = generate(GraphFamily::grid(4, 5));
  const auto a = enumerate_sequential(g, {.count_only = false, .times = &t});
  CHECK(t.seed_ms >= 0);
  CHECK(t.expand_ms >= 0);
  const auto b = enumerate_sequential(testing::labeled(g));
  CHECK(a.sorted() == b.sorted());
}

TEST_CASE("canonicalize: examples") {
  const auto ids = identity_labels(4);
  const std::vector<VertexId> rev = {3, 2, 1, 0};
  CHECK(canonicalize(c4(), rev, ids) == std::vector<VertexId>{1, 0, 3, 2});
  const std::vector<VertexId> canon = {1, 0, 3, 2};
  CHECK(canonicalize(c4(), canon, ids) == canon);

  const std::vector<VertexId> chordal_skip = {0, 2, 1, 3};
  CHECK_THROWS_AS(canonicalize(c4(), chordal_skip, ids), NotACycle);
  const std::vector<VertexId> repeat = {0, 1, 0, 3};
  CHECK_THROWS_AS(canonicalize(c4(), repeat, ids), NotACycle);
  const std::vector<VertexId> two = {0, 1};
  CHECK_THROWS_AS(canonicalize(c4(), two, ids), NotACycle);
  const std::vector<VertexId> outside = {0, 1, 9};
  CHECK_THROWS_AS(canonicalize(c4(), outside, ids), NotACycle);
}

TEST_CASE("property: all 2k representations share one canonical form") {
  for (const auto& ng : testing::random_corpus(40, 4242)) {
    CAPTURE(ng.name);
    const auto& g = ng.graph;
    const auto l = g.labels();
    const auto cycles = enumerate_sequential(g);
    for (std::size_t i = 0; i < cycles.size(); ++i) {
      const std::vector<VertexId> c(cycles[i].begin(), cycles[i].end());
      const std::size_t k = c.size();
      std::set<std::vector<VertexId>> forms;
      std::size_t fixed_points = 0;
      for (int dir = 0; dir < 2; ++dir) {
        for (std::size_t r = 0; r < k; ++r) {
          std::vector<VertexId> rep(k);
          for (std::size_t j = 0; j < k; ++j) {
            rep[j] = dir == 0 ? c[(r + j) % k] : c[(r + k - j) % k];
          }
          const auto canon = canonicalize(g, rep, l);
          forms.insert(canon);
          if (canon == rep) ++fixed_points;
        }
      }
      CHECK(forms.size() == 1);
      CHECK(fixed_points == 1);
    }
  }
}

TEST_CASE("reconstruct_order: examples") {
  const auto grid = testing::grid2x3_graph();
  CHECK(reconstruct_order(grid, bitmap(6, {0, 1, 3}), 1, 3) == std::vector<VertexId>{1, 0, 3});
  CHECK(reconstruct_order(grid, bitmap(6, {3, 4}), 3, 4) == std::vector<VertexId>{3, 4});
  CHECK(reconstruct_order(grid, bitmap(6, {2}), 2, 2) == std::vector<VertexId>{2});

  const auto cyc = reconstruct_order(c4(), bitmap(4, {0, 1, 2, 3}), kNoVertex, kNoVertex);
  REQUIRE(cyc.size() == 4);
  CHECK(cyc.front() == 0);
  CHECK(canonicalize(c4(), cyc, identity_labels(4)) == std::vector<VertexId>{1, 0, 3, 2});

  // Cycle mode with given ends walks away from `last`.
  CHECK(reconstruct_order(c4(), bitmap(4, {0, 1, 2, 3}), 1, 0) ==
        std::vector<VertexId>{1, 2, 3, 0});
}

TEST_CASE("reconstruct_order: errors") {
  const auto grid = testing::grid2x3_graph();
  // Disconnected pair.
  CHECK_THROWS_AS(reconstruct_order(grid, bitmap(6, {0, 5}), 0, 5), NotInduced);
  // Vertex 1 has induced degree 3.
  CHECK_THROWS_AS(reconstruct_order(grid, bitmap(6, {0, 1, 2, 4}), 0, 2), NotInduced);
  // Path is not a cycle.
  CHECK_THROWS_AS(reconstruct_order(grid, bitmap(6, {0, 1, 3}), kNoVertex, kNoVertex),
                  NotInduced);
  // Endpoint outside the set, or not an end of the path.
  CHECK_THROWS_AS(reconstruct_order(grid, bitmap(6, {0, 1, 3}), 1, 4), NotInduced);
  CHECK_THROWS_AS(reconstruct_order(grid, bitmap(6, {0, 1, 3}), 0, 3), NotInduced);
  CHECK_THROWS_AS(reconstruct_order(grid, bitmap(6, {}), 0, 0), NotInduced);
  // Path plus a disjoint cycle still has two ends.
  const auto two_parts = build_compact(
      6, std::vector<Edge>{{0, 1}, {2, 3}, {3, 4}, {4, 2}});
  CHECK_THROWS_AS(reconstruct_order(two_parts, bitmap(6, {0, 1, 2, 3, 4}), 0, 1), NotInduced);
}
