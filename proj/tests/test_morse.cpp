#include "doctest.h"
#include "rotdiag/morse.hpp"

using namespace rotdiag;

namespace {
MorseWord word(std::vector<Orient> bottom, std::vector<Layer> layers) {
  MorseWord w;
  w.bottom = std::move(bottom);
  w.layers = std::move(layers);
  return w;
}
const Orient U = Orient::Up;
const Orient D = Orient::Down;
}  // namespace

// Intent: cups create oriented leg pairs by chirality and caps consume the
// matching pairs; the flow enters a cup downward on its D leg and leaves a
// cap downward on its D leg.
TEST_CASE("extrema orientation conventions") {
  const MorseWord ccw = word({}, {make_layer(GenKind::CupCCW, 0)});
  CHECK(top_boundary(ccw) == std::vector<Orient>{D, U});
  const MorseWord cw = word({}, {make_layer(GenKind::CupCW, 0)});
  CHECK(top_boundary(cw) == std::vector<Orient>{U, D});

  CHECK_NOTHROW(check_well_formed(
      word({U, D}, {make_layer(GenKind::CapCW, 0)})));
  CHECK_NOTHROW(check_well_formed(
      word({D, U}, {make_layer(GenKind::CapCCW, 0)})));
  CHECK_THROWS_AS(check_well_formed(
                      word({U, U}, {make_layer(GenKind::CapCW, 0)})),
                  MorseError);
  CHECK_THROWS_AS(check_well_formed(
                      word({D, U}, {make_layer(GenKind::CapCW, 0)})),
                  MorseError);
}

// Intent: crossings swap strand positions and demand that declared input
// orientations match the incoming strands.
TEST_CASE("crossing orientation checks") {
  CHECK_NOTHROW(check_well_formed(word({U, U}, {make_cross(0, +1)})));
  CHECK_THROWS_AS(check_well_formed(word({U, D}, {make_cross(0, +1)})),
                  MorseError);
  CHECK_NOTHROW(
      check_well_formed(word({U, D}, {make_cross(0, +1, U, D)})));
  const MorseWord w = word({U, D}, {make_cross(0, +1, U, D)});
  CHECK(top_boundary(w) == std::vector<Orient>{D, U});
}

// Intent: the over-strand of a crossing is determined by sign and input
// orientations together (upward positive crossings have the left strand
// over; flipping one input orientation flips the reading).
TEST_CASE("over strand rule") {
  CHECK(over_is_left(make_cross(0, +1)));
  CHECK_FALSE(over_is_left(make_cross(0, -1)));
  CHECK_FALSE(over_is_left(make_cross(0, +1, U, D)));
  CHECK(over_is_left(make_cross(0, -1, U, D)));
  CHECK(crossing_is_upup(make_cross(0, +1)));
  CHECK_FALSE(crossing_is_upup(make_cross(0, +1, D, U)));
}

// Intent: rotation marks require an upward strand.
TEST_CASE("rotation marks need upward strands") {
  CHECK_NOTHROW(check_well_formed(word({U}, {make_layer(GenKind::RotCW, 0)})));
  CHECK_THROWS_AS(
      check_well_formed(word({D}, {make_layer(GenKind::RotCCW, 0)})),
      MorseError);
}

// Intent: identities must match the orientation they sit on.
TEST_CASE("identity layers check orientation") {
  CHECK_NOTHROW(check_well_formed(word({D}, {make_layer(GenKind::IdDown, 0)})));
  CHECK_THROWS_AS(check_well_formed(word({D}, {make_layer(GenKind::IdUp, 0)})),
                  MorseError);
}

// Intent: out-of-range columns are rejected rather than silently ignored.
TEST_CASE("column bounds are enforced") {
  CHECK_THROWS_AS(check_well_formed(word({U}, {make_cross(0, +1)})),
                  MorseError);
  CHECK_THROWS_AS(check_well_formed(word({}, {make_layer(GenKind::CapCW, 0)})),
                  MorseError);
  CHECK_THROWS_AS(check_well_formed(word({U}, {make_layer(GenKind::IdUp, 1)})),
                  MorseError);
}

// Intent: composition stacks words with matching interface; tensor places
// words side by side, shifting the right word's columns.
TEST_CASE("compose and tensor") {
  const MorseWord x = word({U, U}, {make_cross(0, +1)});
  const MorseWord xx = compose(x, x);
  CHECK(xx.layers.size() == 2);
  CHECK(top_boundary(xx) == std::vector<Orient>{U, U});
  CHECK_THROWS_AS(compose(x, word({U}, {})), MorseError);

  const MorseWord t = tensor(x, word({U}, {make_layer(GenKind::RotCW, 0)}));
  CHECK(t.bottom == std::vector<Orient>{U, U, U});
  REQUIRE(t.layers.size() == 2);
  CHECK(t.layers[1].kind == GenKind::RotCW);
  CHECK(t.layers[1].column == 2);
}

// Intent: tensor shifts by the larger of the two interface widths of the
// left factor so cups created by the left factor stay left of the right
// factor.
TEST_CASE("tensor after width growth") {
  const MorseWord grows = word({}, {make_layer(GenKind::CupCCW, 0)});
  const MorseWord t = tensor(grows, word({U}, {}));
  CHECK(t.bottom == std::vector<Orient>{U});
  CHECK(top_boundary(t) == std::vector<Orient>{D, U, U});
}

// Intent: closing the rightmost strand of a positive crossing produces the
// familiar one-strand curl with matching extrema chirality.
TEST_CASE("close_partial right on a crossing") {
  const MorseWord x = word({U, U}, {make_cross(0, +1)});
  const MorseWord curl = close_partial(x, Side::Right, 1);
  CHECK(curl.bottom == std::vector<Orient>{U});
  CHECK(top_boundary(curl) == std::vector<Orient>{U});
  REQUIRE(curl.layers.size() == 3);
  CHECK(curl.layers[0].kind == GenKind::CupCW);
  CHECK(curl.layers[0].column == 1);
  CHECK(curl.layers[1].kind == GenKind::Cross);
  CHECK(curl.layers[2].kind == GenKind::CapCW);
  CHECK(curl.layers[2].column == 1);
  CHECK_NOTHROW(check_well_formed(curl));
}

// Intent: closing on the left mirrors the construction with CCW extrema.
TEST_CASE("close_partial left on a crossing") {
  const MorseWord x = word({U, U}, {make_cross(0, +1)});
  const MorseWord curl = close_partial(x, Side::Left, 1);
  CHECK(curl.bottom == std::vector<Orient>{U});
  CHECK(top_boundary(curl) == std::vector<Orient>{U});
  REQUIRE(curl.layers.size() == 3);
  CHECK(curl.layers[0].kind == GenKind::CupCCW);
  CHECK(curl.layers[2].kind == GenKind::CapCCW);
  CHECK_NOTHROW(check_well_formed(curl));
}

// Intent: closing more strands than available, or over downward endpoints,
// is a precondition failure.
TEST_CASE("close_partial preconditions") {
  const MorseWord x = word({U, U}, {make_cross(0, +1)});
  CHECK_THROWS_AS(close_partial(x, Side::Right, 3), MorseError);
  const MorseWord down = word({U, D}, {make_layer(GenKind::CapCW, 0)});
  CHECK_THROWS_AS(close_partial(down, Side::Right, 1), MorseError);
}

// Intent: generator arities drive all span arithmetic.
TEST_CASE("generator arities") {
  CHECK(input_arity(GenKind::CupCCW) == 0);
  CHECK(output_arity(GenKind::CupCCW) == 2);
  CHECK(input_arity(GenKind::CapCW) == 2);
  CHECK(output_arity(GenKind::CapCW) == 0);
  CHECK(input_arity(GenKind::Cross) == 2);
  CHECK(output_arity(GenKind::Cross) == 2);
  CHECK(input_arity(GenKind::RotCW) == 1);
  CHECK(output_arity(GenKind::IdDown) == 1);
}
