#pragma once
// Strand-level analysis of a Morse word: connected components, boundary
// pairings, writhes, winding numbers, the rotational-form check, and the
// flow-order traversal used by invariant evaluation.
//
// Component ids are dense (0..count-1) in canonical order: open components
// in order of first appearance along the bottom boundary left to right, then
// the top boundary left to right; closed components after them, in order of
// creation.  Endpoint ids number the bottom endpoints left to right and then
// the top endpoints left to right.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rotdiag/morse.hpp"

namespace rotdiag {

struct ComponentMap {
  int component_count = 0;
  std::vector<int> bottom_component;  // component id per bottom endpoint
  std::vector<int> top_component;     // component id per top endpoint
  // Each open component's two endpoint ids, smaller first.
  std::vector<std::pair<int, int>> boundary_connections;
  std::vector<int> closed_components;  // ids with no boundary endpoint
};

// One crossing's strand data, in layer order.
struct CrossingInfo {
  int layer = 0;
  int sign = 0;
  int over_component = 0;
  int under_component = 0;
  bool upup = false;
};

// One extremum or rotation mark, in layer order.
struct TurnInfo {
  int layer = 0;
  GenKind kind = GenKind::RotCCW;
  int component = 0;
};

struct TraceResult {
  ComponentMap components;
  std::vector<CrossingInfo> crossings;
  std::vector<TurnInfo> turns;
};

struct DiagramInvariants {
  std::map<int, int> self_writhe;                      // component -> sum
  std::map<std::pair<int, int>, int> mixed_writhe;     // {i, j}, i < j
  std::map<int, int> winding;                          // component -> turns
  int crossing_count = 0;
};

TraceResult trace_components(const MorseWord& w);
DiagramInvariants diagram_invariants(const MorseWord& w);

struct RotationalViolation {
  int layer = 0;  // -1 for the bottom boundary, layers.size() for the top
  std::string reason;
};

struct RotationalReport {
  bool pass = true;
  std::vector<RotationalViolation> violations;
};

// A word is in rotational form when every boundary endpoint points up, every
// crossing is upward-upward, and every descending strand segment runs from a
// cap directly to a cup of the same chirality (so the pair realises one full
// rotation rather than a stray extremum).  The verdict is invariant under
// normalize().
RotationalReport check_rotational(const MorseWord& w);

// One bead-relevant event met while walking a component along its flow.
struct FlowStop {
  enum class Kind { OverCrossing, UnderCrossing, Rotation } kind;
  int index = 0;      // crossings: index into TraceResult::crossings
  GenKind rot_kind = GenKind::RotCCW;  // rotations only
};

// Flow-order stops per component (dense component ids).  Requires a word
// that passes check_rotational and has no closed components.
std::vector<std::vector<FlowStop>> flow_stops(const MorseWord& w,
                                              const TraceResult& trace);

}  // namespace rotdiag
