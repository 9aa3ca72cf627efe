#pragma once

#include <cstddef>

#include "ccenum/compact_graph.hpp"
#include "ccenum/cycle_set.hpp"

namespace ccenum {

inline constexpr std::size_t kOracleVertexLimit = 30;

/// Brute-force chordless cycle enumeration for validation.
///
/// Walks every simple path that starts at its smallest vertex, closes a cycle
/// whenever the walk returns next to the start, and keeps a cycle only when
/// its vertex set induces exactly as many edges as it has vertices. Rotations
/// are excluded by the smallest-start rule and reflections by requiring the
/// start's successor to be smaller than its predecessor. Walks that already
/// contain a chord are cut short, since no chordless cycle extends them.
///
/// Cycles are returned canonicalized with the labels attached to `g` (vertex
/// ids when none are attached). Throws InputTooLarge above `vertex_limit`.
CycleSet brute_force_chordless(const CompactGraph& g,
                               std::size_t vertex_limit = kOracleVertexLimit);

}  // namespace ccenum
