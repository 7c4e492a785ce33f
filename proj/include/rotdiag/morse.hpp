#pragma once
// Tangle diagrams as Morse words: a bottom boundary of oriented strand
// endpoints plus a stack of layers, each placing one elementary generator at
// a 0-based strand column while every other strand passes straight through.
// Orientations (Up/Down) propagate from the bottom; each generator constrains
// the orientations of the strands it touches, so a well-formed word determines
// the orientation of every strand segment.
//
// Generator conventions (left leg listed first):
//   CupCCW creates (Down, Up), CupCW creates (Up, Down); flow enters a cup
//   downward on its Down leg and leaves upward on its Up leg.  CapCW consumes
//   (Up, Down), CapCCW consumes (Down, Up); flow enters a cap upward on its
//   Up leg and leaves downward on its Down leg.  The chirality names record
//   the turning sense of the flow through the extremum.  Cross swaps two
//   adjacent strands and carries a sign; RotCW/RotCCW are full-turn rotation
//   marks on a single upward strand.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rotdiag {

enum class Orient : std::uint8_t { Up, Down };

enum class GenKind : std::uint8_t {
  IdUp,
  IdDown,
  CupCW,
  CupCCW,
  CapCW,
  CapCCW,
  Cross,
  RotCW,
  RotCCW,
};

enum class Side : std::uint8_t { Left, Right };

// One generator placed at a column.  For Cross, sign is +1 or -1 and
// left_in/right_in are the declared input orientations; the propagated strand
// orientations must match them.  The fields are unused (and kept at defaults)
// for every other kind.
struct Layer {
  GenKind kind = GenKind::IdUp;
  int column = 0;
  int sign = 0;
  Orient left_in = Orient::Up;
  Orient right_in = Orient::Up;

  friend bool operator==(const Layer&, const Layer&) = default;
  friend auto operator<=>(const Layer&, const Layer&) = default;
};

struct MorseWord {
  std::vector<Orient> bottom;
  std::vector<Layer> layers;

  friend bool operator==(const MorseWord&, const MorseWord&) = default;
};

// Thrown when a word violates width or orientation propagation, or when an
// operation's precondition fails.
class MorseError : public std::runtime_error {
 public:
  explicit MorseError(const std::string& what) : std::runtime_error(what) {}
};

// Convenience constructors.
Layer make_cross(int column, int sign, Orient left_in = Orient::Up,
                 Orient right_in = Orient::Up);
Layer make_layer(GenKind kind, int column);

int input_arity(GenKind k);
int output_arity(GenKind k);
bool is_cup(GenKind k);
bool is_cap(GenKind k);
bool is_rot(GenKind k);
bool is_identity(GenKind k);

// True for crossings whose declared input orientations are both Up.
bool crossing_is_upup(const Layer& l);

// Which input strand of a crossing passes over: true when the left input is
// the over-strand.  Convention: over = left iff (sign > 0) == (inputs agree).
bool over_is_left(const Layer& l);

// Checks a layer's inputs against the current strand orientations and applies
// its width/orientation change in place.  layer_index is used in error text.
void apply_layer(std::vector<Orient>& strands, const Layer& l, int layer_index);

// Validates widths and orientations, throwing MorseError at the first
// offending layer.
void check_well_formed(const MorseWord& w);

// Strand orientations at every horizontal level: entry 0 is the bottom
// boundary, entry layers.size() is the top boundary.
std::vector<std::vector<Orient>> level_orientations(const MorseWord& w);

// Top boundary of a well-formed word.
std::vector<Orient> top_boundary(const MorseWord& w);

// Stacks upper on top of lower; the boundaries must agree.
MorseWord compose(const MorseWord& lower, const MorseWord& upper);

// Places right beside left (columns of right shift by left's width profile).
MorseWord tensor(const MorseWord& left, const MorseWord& right);

// Adds m nested cups below and m nested caps above on the chosen side,
// turning the m outermost bottom endpoints and m outermost top endpoints on
// that side into through-strands.  Requires those endpoints to be Up.
MorseWord close_partial(const MorseWord& w, Side side, int m);

// Shifts every layer's column by delta (word must stay valid in context).
std::vector<Layer> shift_layers(const std::vector<Layer>& layers, int delta);

}  // namespace rotdiag
