#pragma once

#include <span>
#include <vector>

#include "ccenum/bitset.hpp"
#include "ccenum/compact_graph.hpp"
#include "ccenum/cycle_set.hpp"

namespace ccenum {

/// Seed of a chordless path search: x and y are neighbours of u,
/// label(u) < label(x) < label(y), and x, y are not adjacent.
struct Triplet {
  VertexId x;
  VertexId u;
  VertexId y;
  friend bool operator==(const Triplet&, const Triplet&) = default;
};

struct TripletSplit {
  CycleSet triangles;
  std::vector<Triplet> triplets;
};

/// Splits every label-ordered wedge <x, u, y> into a triangle (x ~ y) or an
/// initial triplet (x !~ y). Each triangle of `g` appears exactly once.
TripletSplit find_triplets(const CompactGraph& g, std::span<const Label> labels,
                           bool count_only = false);

struct SequentialOptions {
  bool count_only = false;
  /// Filled with phase timings when non-null.
  PhaseTimes* times = nullptr;
};

/// Depth-first chordless cycle enumeration over an explicit stack.
///
/// Uses the labels attached to `g`, or computes the degree labeling when none
/// are attached. Every chordless cycle is reported exactly once, already in
/// canonical form.
CycleSet enumerate_sequential(const CompactGraph& g, SequentialOptions options = {});

/// Returns the unique rotation/reflection <v1, v2, ..., vk> of `cycle` whose
/// second vertex carries the smallest label and with label(v1) < label(v3).
/// Throws NotACycle if `cycle` is not a simple cycle of `g`.
std::vector<VertexId> canonicalize(const CompactGraph& g, std::span<const VertexId> cycle,
                                   std::span<const Label> labels);

/// Recovers vertex order from a membership bitmap.
///
/// With `first` set, the members must induce a path from `first` to `last`,
/// or a cycle in which `first` and `last` are adjacent; the result starts at
/// `first` and ends at `last`. With `first == kNoVertex` the members must
/// induce a cycle, returned starting at its smallest id. Throws NotInduced
/// otherwise.
std::vector<VertexId> reconstruct_order(const CompactGraph& g, std::span<const bits::Word> members,
                                        VertexId first, VertexId last);

}  // namespace ccenum
