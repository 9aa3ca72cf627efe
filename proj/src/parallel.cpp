#include "ccenum/parallel.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>

#include "ccenum/errors.hpp"
#include "ccenum/labeling.hpp"
#include "ccenum/sequential.hpp"

namespace ccenum {

std::size_t KernelConfig::default_workers() noexcept {
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : hc;
}

void EvolutionLog::write_csv(std::ostream& out) const {
  out << "round,frontier_size,cycles_total\n";
  for (const auto& r : records_) {
    out << r.round << ',' << r.frontier_size << ',' << r.cycles_total << '\n';
  }
}

RoundStats& RoundStats::operator+=(const RoundStats& o) noexcept {
  consumed += o.consumed;
  lanes += o.lanes;
  invalid += o.invalid;
  rejected += o.rejected;
  extended += o.extended;
  closed += o.closed;
  return *this;
}

void CycleSink::rollback(std::uint64_t mark) noexcept {
  if (store_ != nullptr) {
    store_->truncate(mark);
  } else {
    counted_.store(mark, std::memory_order_relaxed);
  }
}

std::uint64_t stage1_lanes(const CompactGraph& g) noexcept {
  const std::uint64_t d = g.max_degree();
  return g.vertex_count() * d * d;
}

bool stage1_kernel(const CompactGraph& g, std::span<const Label> labels, std::uint64_t gid,
                   CycleSink& triangles, PathStore& triplets, std::span<bits::Word> scratch) {
  const auto [iu, ix, iy] = stage1_decompose(gid, g.max_degree());
  const auto u = static_cast<VertexId>(iu);
  const auto nb = g.neighbors_unchecked(u);
  if (ix >= nb.size() || iy >= nb.size()) return true;
  const VertexId x = nb[ix];
  const VertexId y = nb[iy];
  if (!(labels[u] < labels[x] && labels[x] < labels[y])) return true;

  bits::set(scratch, x);
  bits::set(scratch, u);
  bits::set(scratch, y);
  const PathRecord rec{scratch, x, u, y};
  const bool ok = g.adjacent_unchecked(x, y) ? triangles.emit(rec)
                                             : triplets.try_append(rec).has_value();
  bits::reset(scratch, x);
  bits::reset(scratch, u);
  bits::reset(scratch, y);
  return ok;
}

void stage2_kernel(const CompactGraph& g, std::span<const Label> labels, const PathStore& frontier,
                   PathStore& next, CycleSink& cycles, std::size_t worker, std::size_t workers,
                   RoundStats& stats) {
  stage2_kernel(g, labels, frontier, 0, frontier.size(), next, cycles, worker, workers, stats);
}

void stage2_kernel(const CompactGraph& g, std::span<const Label> labels, const PathStore& frontier,
                   std::size_t row_begin, std::size_t row_end, PathStore& next, CycleSink& cycles,
                   std::size_t worker, std::size_t workers, RoundStats& stats) {
  const std::uint64_t degree = g.max_degree();
  const std::uint64_t lanes = (row_end - row_begin) * degree;
  std::vector<bits::Word> path(frontier.words_per_row());
  std::uint64_t cached = ~std::uint64_t{0};
  VertexId first = kNoVertex;
  VertexId second = kNoVertex;
  VertexId tail = kNoVertex;

  for (std::uint64_t gid = worker; gid < lanes; gid += workers) {
    ++stats.lanes;
    const std::uint64_t ip = row_begin + gid / degree;
    if (ip != cached) {
      // Worker-private copy of the path row.
      const auto row = frontier.row(ip);
      std::copy(row.begin(), row.end(), path.begin());
      first = frontier.first(ip);
      second = frontier.second(ip);
      tail = frontier.last(ip);
      cached = ip;
    }
    const auto nb = g.neighbors_unchecked(tail);
    const std::uint64_t iv = gid % degree;
    if (iv >= nb.size()) {
      ++stats.invalid;
      continue;
    }
    const VertexId v = nb[iv];
    if (bits::test(path, v) || labels[v] <= labels[second]) {
      ++stats.rejected;
      continue;
    }
    bool touches_first = false;
    bool chord = false;
    for (VertexId w : g.neighbors_unchecked(v)) {
      if (w == tail || !bits::test(path, w)) continue;
      if (w != first) {
        chord = true;
        break;
      }
      touches_first = true;
    }
    if (chord) {
      ++stats.rejected;
      continue;
    }
    const PathRecord rec{path, first, second, tail, v};
    if (touches_first) {
      cycles.emit(rec);
      ++stats.closed;
    } else {
      next.try_append(rec);
      ++stats.extended;
    }
  }
}

namespace {

template <class Body>
void run_workers(std::size_t workers, Body&& body) {
  if (workers == 1) {
    body(std::size_t{0});
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back([&body, w] { body(w); });
  body(std::size_t{0});
  for (auto& t : pool) t.join();
}

void grow_or_throw(PathStore& store, const CapacityPolicy& policy, const char* what) {
  if (!policy.growable) {
    throw CapacityExceeded(std::string(what) + " store exceeded fixed capacity of " +
                           std::to_string(store.capacity()) + " rows");
  }
  store.reserve_rows(std::max(2 * store.capacity(), store.requested()));
}

}  // namespace

ParallelResult host_enumerate(const CompactGraph& g, const KernelConfig& config) {
  if (config.workers == 0) throw InvalidParameter("worker count must be positive");

  std::vector<Label> computed;
  std::span<const Label> labels = g.labels();
  if (!g.has_labels()) {
    computed = degree_labeling(g).labels;
    labels = computed;
  }

  const std::size_t n = g.vertex_count();
  const std::size_t workers = config.workers;
  const CapacityPolicy& policy = config.capacity;
  const std::size_t initial = std::max<std::size_t>(1, policy.initial_rows);

  PathStore seed(n, initial);
  PathStore closed_rows(config.count_only ? 0 : n, config.count_only ? 0 : initial);
  CycleSink sink(config.count_only ? nullptr : &closed_rows);

  ParallelResult result{CycleSet(config.count_only), {}, {}, 0, 0, 0, {}};
  using Clock = std::chrono::steady_clock;
  const auto ms_since = [](Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  };
  auto t0 = Clock::now();

  // Stage 1.
  const std::uint64_t lanes1 = stage1_lanes(g);
  for (;;) {
    run_workers(workers, [&](std::size_t w) {
      std::vector<bits::Word> scratch(seed.words_per_row(), 0);
      for (std::uint64_t gid = w; gid < lanes1; gid += workers) {
        stage1_kernel(g, labels, gid, sink, seed, scratch);
      }
    });
    const bool t_full = seed.overflowed();
    const bool c_full = !config.count_only && closed_rows.overflowed();
    if (!t_full && !c_full) break;
    if (t_full) grow_or_throw(seed, policy, "triplet");
    if (c_full) grow_or_throw(closed_rows, policy, "cycle");
    seed.clear();
    sink.rollback(0);
  }
  const std::uint64_t triangles = sink.size();
  result.initial_frontier = seed.size();
  result.times.seed_ms = ms_since(t0);
  t0 = Clock::now();
  if (config.on_frontier) config.on_frontier(1, seed);

  // Stage 2. Rows at depth d have d + 3 vertices; a chordless path has at
  // most n vertices, so depths past n - 3 are always empty.
  const std::size_t rounds = std::min(config.rounds.value_or(n >= 3 ? n - 3 : 0), n);
  const std::size_t slice_rows =
      policy.max_frontier_rows == 0 ? ~std::size_t{0} : policy.max_frontier_rows;
  std::vector<std::uint64_t> produced(rounds + 1, 0);
  std::vector<std::uint64_t> closed(rounds + 1, 0);
  std::vector<RoundStats> stats(rounds);
  produced[0] = seed.size();

  struct Level {
    PathStore rows;
    std::size_t cursor;
    std::size_t depth;
  };
  std::vector<Level> stack;
  std::vector<PathStore> spare;
  const auto recycle = [&spare](PathStore&& store) {
    store.clear();
    spare.push_back(std::move(store));
  };
  if (seed.size() > 0) stack.push_back({std::move(seed), 0, 0});

  std::vector<RoundStats> per_worker(workers);
  while (!stack.empty()) {
    if (stack.back().depth >= rounds) {
      recycle(std::move(stack.back().rows));
      stack.pop_back();
      continue;
    }
    Level& top = stack.back();
    const std::size_t begin = top.cursor;
    const std::size_t end = begin + std::min(slice_rows, top.rows.size() - begin);
    top.cursor = end;
    const std::size_t depth = top.depth;

    PathStore next;
    if (spare.empty()) {
      next = PathStore(n, initial);
    } else {
      next = std::move(spare.back());
      spare.pop_back();
    }
    next.reserve_rows(std::max(initial, end - begin));
    const std::uint64_t mark = sink.size();
    for (;;) {
      next.clear();
      std::fill(per_worker.begin(), per_worker.end(), RoundStats{});
      run_workers(workers, [&](std::size_t w) {
        stage2_kernel(g, labels, top.rows, begin, end, next, sink, w, workers, per_worker[w]);
      });
      // Every worker has joined; T' and C are complete for this slice.
      const bool t_full = next.overflowed();
      const bool c_full = !config.count_only && closed_rows.overflowed();
      if (!t_full && !c_full) break;
      if (t_full) grow_or_throw(next, policy, "frontier");
      if (c_full) grow_or_throw(closed_rows, policy, "cycle");
      sink.rollback(mark);
    }
    for (const auto& s : per_worker) stats[depth] += s;
    stats[depth].consumed += end - begin;
    produced[depth + 1] += next.size();
    closed[depth] += sink.size() - mark;
    if (config.on_frontier) config.on_frontier(depth + 2, next);

    if (top.cursor == top.rows.size()) {
      recycle(std::move(top.rows));
      stack.pop_back();
    }
    if (next.size() > 0) {
      stack.push_back({std::move(next), 0, depth + 1});
    } else {
      recycle(std::move(next));
    }
  }

  std::size_t rounds_run = rounds;
  if (config.early_exit_check) {
    rounds_run = 0;
    while (rounds_run < rounds && produced[rounds_run] > 0) ++rounds_run;
  }
  result.rounds_run = rounds_run;
  result.stats.assign(stats.begin(), stats.begin() + static_cast<std::ptrdiff_t>(rounds_run));
  result.final_frontier = produced[rounds_run];
  if (config.evolution_log) {
    std::uint64_t cycles_total = triangles;
    result.log.record(1, produced[0], cycles_total);
    for (std::size_t r = 1; r <= rounds_run; ++r) {
      cycles_total += closed[r - 1];
      result.log.record(r + 1, produced[r], cycles_total);
    }
  }
  result.times.expand_ms = ms_since(t0);

  if (config.count_only) {
    result.cycles.count(3, triangles);
    result.cycles.count(4, sink.size() - triangles);
    return result;
  }
  // Closed rows -> ordered cycles. Each row holds <first, second, ..., last>.
  result.cycles.reserve(closed_rows.size(), 0);
  for (std::size_t r = 0; r < closed_rows.size(); ++r) {
    const auto order =
        reconstruct_order(g, closed_rows.row(r), closed_rows.first(r), closed_rows.last(r));
    if (order.size() < 3 || order[1] != closed_rows.second(r)) {
      throw std::logic_error("closed row " + std::to_string(r) + " is not in canonical order");
    }
    result.cycles.insert(order);
  }
  return result;
}

}  // namespace ccenum
