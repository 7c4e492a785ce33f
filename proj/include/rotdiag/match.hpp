#pragma once
// Pattern matching and rewriting.  A match site embeds one side of a rule
// into the canonical form of a word: a single column translation plus the
// ordered set of layers realising the pattern.  Unselected layers may sit
// between selected ones only when they act entirely beside the pattern's
// strands without moving its column strip, or when they keep the strand
// count and touch none of the selected layers beneath them; either way the
// rewrite commutes them below the replacement, so the selection can be
// substituted in place by the rule's other side.  (The scan is greedy: a
// layer that realises the next pattern layer is always selected, so a few
// exotic embeddings that would require skipping such a layer go unseen.)

#include <cstddef>
#include <vector>

#include "rotdiag/rules.hpp"

namespace rotdiag {

enum class Direction : std::uint8_t { Fwd, Bwd };

class MatchError : public MorseError {
 public:
  explicit MatchError(const std::string& what) : MorseError(what) {}
};

struct MatchSite {
  // Index of the first selected layer in the normalized word; for a
  // pattern with no layers, the index of the boundary row (0 .. layer
  // count, inclusive) the pattern's strands are read off from.
  std::size_t anchor_layer = 0;
  // Column translation: pattern column c embeds at word column c + offset.
  int column_offset = 0;
  // Ascending indices of the selected layers in the normalized word;
  // empty exactly when the pattern has no layers.
  std::vector<std::size_t> layer_selection;
};

const MorseWord& rule_side(const MoveRule& r, Direction d);  // source side

// All convex matches of the source side of r in normalize(w), ordered by
// ascending anchor layer, then ascending column offset.  Matching is exact
// on generator kinds, signs and strand orientations.
std::vector<MatchSite> find_matches(const MorseWord& w, const MoveRule& r,
                                    Direction d);

// Replaces the matched source side by the target side, translated to the
// site, and returns the normalized result.  The site must come from
// find_matches on (a word equivalent to) w; a site that no longer embeds
// raises MatchError("stale match site...").  The rewrite preserves the
// boundary and its connections and moves the invariants by exactly the
// rule family's delta; violations raise MatchError.
MorseWord apply_move(const MorseWord& w, const MoveRule& r, Direction d,
                     const MatchSite& site);

}  // namespace rotdiag
