#include <algorithm>
#include <random>

#include "doctest.h"
#include "rotdiag/io.hpp"
#include "rotdiag/match.hpp"
#include "rotdiag/normalize.hpp"

using namespace rotdiag;

namespace {

MoveRule make_rule(const std::string& name, MoveFamily fam,
                   const std::string& lhs, const std::string& rhs) {
  MoveRule r;
  r.name = name;
  r.family = fam;
  r.lhs = parse_diagram(lhs);
  r.rhs = parse_diagram(rhs);
  return r;
}

MoveRule crossing_pair_rule() {
  return make_rule("O2a", MoveFamily::O2, "IN: U U\n",
                   "IN: U U\nXP 0\nXN 0\n");
}

MoveRule kink_rule() {
  return make_rule("O1a", MoveFamily::O1, "IN: U\n",
                   "IN: U\nCUPCCW 0\nXP 1\nCAPCCW 0\n");
}

MoveRule rotation_slide_rule() {
  return make_rule("O0c", MoveFamily::O0,
                   "IN: U U\nXP 0\nROTCCW 0\nROTCCW 1\n",
                   "IN: U U\nROTCCW 0\nROTCCW 1\nXP 0\n");
}

MoveRule swirl_conjugation_rule() {
  return make_rule("O0s", MoveFamily::O0, "IN: U U\nXP 0\n",
                   "IN: U U\nROTCCW 0\nROTCCW 1\nXP 0\nROTCW 0\nROTCW 1\n");
}

bool same_layer(const Layer& a, const Layer& b) {
  return a.kind == b.kind && a.column == b.column && a.sign == b.sign &&
         a.left_in == b.left_in && a.right_in == b.right_in;
}

// Straight-from-the-definition matcher: tries every layer subset of the
// pattern's size, reads the offset off the first selected layer, and checks
// the embedding conditions directly.  Deliberately combinatorial, as an
// independent cross-check of the scanning matcher.
std::vector<MatchSite> brute_force_matches(const MorseWord& word,
                                           const MoveRule& r, Direction d) {
  const MorseWord W = normalize(word);
  const MorseWord P = normalize(rule_side(r, d));
  const auto rows = level_orientations(W);
  std::vector<MatchSite> out;
  const std::size_t n = W.layers.size();
  const std::size_t k = P.layers.size();
  if (k == 0 || k > n) return out;
  std::vector<std::size_t> idx(k);
  // Enumerate ascending index tuples in lexicographic order; that visits
  // candidate sites by ascending anchor automatically.
  const auto advance = [&]() {
    int i = static_cast<int>(k) - 1;
    while (i >= 0) {
      ++idx[static_cast<std::size_t>(i)];
      if (idx[static_cast<std::size_t>(i)] + (k - 1 - static_cast<std::size_t>(i)) < n) {
        for (std::size_t j = static_cast<std::size_t>(i) + 1; j < k; ++j)
          idx[j] = idx[j - 1] + 1;
        return true;
      }
      --i;
    }
    return false;
  };
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  do {
    const int t = W.layers[idx[0]].column - P.layers[0].column;
    if (t < 0) continue;
    if (static_cast<std::size_t>(t) + P.bottom.size() > rows[idx[0]].size())
      continue;
    if (!std::equal(P.bottom.begin(), P.bottom.end(),
                    rows[idx[0]].begin() + t))
      continue;
    bool ok = true;
    for (std::size_t i = 0; ok && i < k; ++i) {
      Layer want = P.layers[i];
      want.column += t;
      ok = same_layer(W.layers[idx[i]], want);
    }
    if (!ok) continue;
    // Every unselected layer inside the range must sit beside the pattern's
    // strip without shifting it, or keep the strand count and touch none of
    // the selected layers beneath it (then it commutes below the rewrite).
    // The scanner is greedy, so selections that skip a layer realising the
    // next pattern layer are not reported either.
    int width = static_cast<int>(P.bottom.size());
    std::size_t sel_at = 0;
    std::vector<Layer> below;  // selected layers passed so far
    for (std::size_t j = idx[0]; ok && j <= idx[k - 1]; ++j) {
      if (sel_at < k && idx[sel_at] == j) {
        below.push_back(W.layers[j]);
        width += output_arity(W.layers[j].kind) - input_arity(W.layers[j].kind);
        ++sel_at;
        continue;
      }
      const Layer& L = W.layers[j];
      Layer next = P.layers[sel_at];
      next.column += t;
      if (same_layer(L, next)) {
        ok = false;  // a greedy scan would have selected this layer
        continue;
      }
      const int in_a = input_arity(L.kind);
      if (in_a == 0) {
        ok = L.column >= t + width;
      } else if (L.column >= t + width) {
        // beside on the right
      } else if (L.column + in_a <= t) {
        ok = output_arity(L.kind) == in_a;
      } else if (output_arity(L.kind) != in_a) {
        ok = false;
      } else {
        for (const Layer& S : below) {
          const int sc = S.column;
          const int s_in = input_arity(S.kind);
          const int s_out = output_arity(S.kind);
          if (s_out > s_in)
            ok = ok && !(sc < L.column + in_a && L.column < sc + s_out);
          else if (s_out < s_in)
            ok = ok && !(L.column < sc && sc < L.column + in_a);
          else
            ok = ok && !(sc < L.column + in_a && L.column < sc + s_in);
        }
      }
    }
    if (ok) out.push_back({idx[0], t, idx});
  } while (advance());
  return out;
}

bool same_site(const MatchSite& a, const MatchSite& b) {
  return a.anchor_layer == b.anchor_layer &&
         a.column_offset == b.column_offset &&
         a.layer_selection == b.layer_selection;
}

// Random upward word with occasional planted pattern material, so matcher
// runs see hits as well as misses.
MorseWord random_word(std::mt19937& rng) {
  MorseWord w;
  const int strands = 2 + static_cast<int>(rng() % 3);
  w.bottom.assign(static_cast<size_t>(strands), Orient::Up);
  const int steps = 2 + static_cast<int>(rng() % 4);
  for (int i = 0; i < steps; ++i) {
    const int width = static_cast<int>(top_boundary(w).size());
    switch (rng() % 4) {
      case 0: {
        if (width < 2) break;
        const int c = static_cast<int>(rng() % static_cast<unsigned>(width - 1));
        w.layers.push_back(make_cross(c, rng() % 2 ? +1 : -1));
        break;
      }
      case 1: {
        const int c = static_cast<int>(rng() % static_cast<unsigned>(width));
        w.layers.push_back(make_layer(
            rng() % 2 ? GenKind::RotCW : GenKind::RotCCW, c));
        break;
      }
      case 2: {  // plant a crossing pair
        if (width < 2) break;
        const int c = static_cast<int>(rng() % static_cast<unsigned>(width - 1));
        w.layers.push_back(make_cross(c, +1));
        w.layers.push_back(make_cross(c, -1));
        break;
      }
      default: {  // plant a counterclockwise kink
        const int c = static_cast<int>(rng() % static_cast<unsigned>(width));
        w.layers.push_back(make_layer(GenKind::CupCCW, c));
        w.layers.push_back(make_cross(c + 1, +1));
        w.layers.push_back(make_layer(GenKind::CapCCW, c));
        break;
      }
    }
  }
  check_well_formed(w);
  return w;
}

}  // namespace

// Intent: the two-strand creation pattern has no layers, so it matches a
// trivial two-strand word at exactly one row.
TEST_CASE("empty pattern matches the trivial word once") {
  const MoveRule r = crossing_pair_rule();
  const MorseWord w = parse_diagram("IN: U U\n");
  const auto sites = find_matches(w, r, Direction::Fwd);
  REQUIRE(sites.size() == 1);
  CHECK(sites[0].anchor_layer == 0);
  CHECK(sites[0].column_offset == 0);
  CHECK(sites[0].layer_selection.empty());
}

// Intent: a pattern found inside its own left-hand side anchors at the
// first layer with no translation.
TEST_CASE("pattern matches itself at the origin") {
  const MoveRule r = make_rule(
      "O3a1", MoveFamily::O3,
      "IN: U U D\nCUPCCW 0\nXN 1\nXN 2\nCAPCW 3\nXP 1\n",
      "IN: U U D\nXP 0\nCUPCCW 0\nXN 1\nXN 2\nCAPCW 3\n");
  const auto sites = find_matches(r.lhs, r, Direction::Fwd);
  REQUIRE(sites.size() == 1);
  CHECK(sites[0].anchor_layer == 0);
  CHECK(sites[0].column_offset == 0);
  REQUIRE(sites[0].layer_selection.size() == 5);
  for (std::size_t i = 0; i < 5; ++i) CHECK(sites[0].layer_selection[i] == i);
}

// Intent: applying the creation move forward inserts the crossing pair; the
// result is handed back in canonical form.
TEST_CASE("apply crossing pair creation") {
  const MoveRule r = crossing_pair_rule();
  const MorseWord w = parse_diagram("IN: U U\n");
  const auto sites = find_matches(w, r, Direction::Fwd);
  REQUIRE(sites.size() == 1);
  const MorseWord out = apply_move(w, r, Direction::Fwd, sites[0]);
  CHECK(equivalent(out, parse_diagram("IN: U U\nXP 0\nXN 0\n")));
}

// Intent: a forward application followed by the backward one at the fresh
// site returns to the start -- the round trip used by every script replay.
TEST_CASE("apply then revert is the identity") {
  const MoveRule r = crossing_pair_rule();
  const MorseWord w = parse_diagram("IN: U U U\nXP 1\nROTCCW 0\n");
  const auto sites = find_matches(w, r, Direction::Fwd);
  REQUIRE_FALSE(sites.empty());
  for (const MatchSite& s : sites) {
    const MorseWord mid = apply_move(w, r, Direction::Fwd, s);
    const auto back = find_matches(mid, r, Direction::Bwd);
    REQUIRE_FALSE(back.empty());
    bool restored = false;
    for (const MatchSite& b : back)
      restored |= equivalent(apply_move(mid, r, Direction::Bwd, b), w);
    CHECK(restored);
  }
}

// Intent: offsets walk the pattern across all strand positions of a wider
// word, in ascending order.
TEST_CASE("matches are ordered by anchor then offset") {
  const MoveRule r = crossing_pair_rule();
  const MorseWord w = parse_diagram("IN: U U U U\n");
  const auto sites = find_matches(w, r, Direction::Fwd);
  REQUIRE(sites.size() == 3);
  for (std::size_t i = 0; i < sites.size(); ++i) {
    CHECK(sites[i].anchor_layer == 0);
    CHECK(sites[i].column_offset == static_cast<int>(i));
  }
}

// Intent: a kink written at a different column is still the same pattern,
// found through the column translation.
TEST_CASE("translation moves the pattern sideways") {
  const MoveRule r = kink_rule();
  const MorseWord w =
      parse_diagram("IN: U U U\nCUPCCW 2\nXP 3\nCAPCCW 2\n");
  const auto sites = find_matches(w, r, Direction::Bwd);
  REQUIRE(sites.size() == 1);
  CHECK(sites[0].column_offset == 2);
  const MorseWord out = apply_move(w, r, Direction::Bwd, sites[0]);
  CHECK(equivalent(out, parse_diagram("IN: U U U\n")));
}

// Intent: material beside the pattern's strands neither hides the match
// nor is harmed by the rewrite.
TEST_CASE("context beside the pattern survives a rewrite") {
  const MoveRule r = rotation_slide_rule();
  // The slide's source occupies strands 1 and 2; strand 0 carries its own
  // rotation mark and strand 3 a kink.
  MorseWord w = parse_diagram(
      "IN: U U U U\n"
      "ROTCW 0\n"
      "XP 1\nROTCCW 1\nROTCCW 2\n"
      "CUPCCW 3\nXN 4\nCAPCCW 3\n");
  const auto sites = find_matches(w, r, Direction::Fwd);
  REQUIRE(sites.size() == 1);
  CHECK(sites[0].column_offset == 1);
  const MorseWord out = apply_move(w, r, Direction::Fwd, sites[0]);
  const MorseWord expect = parse_diagram(
      "IN: U U U U\n"
      "ROTCW 0\n"
      "ROTCCW 1\nROTCCW 2\nXP 1\n"
      "CUPCCW 3\nXN 4\nCAPCCW 3\n");
  CHECK(equivalent(out, expect));
}

// Intent: canonical form interleaves the strands' rotation marks, so the
// backward swirl match only exists because a mark that touches none of the
// selected layers beneath it may drop below the rewrite.
TEST_CASE("commutable mark inside the strip does not hide a match") {
  const MoveRule r = swirl_conjugation_rule();
  const MorseWord bare = parse_diagram("IN: U U\nROTCW 0\nROTCW 1\nXP 0\n");
  const auto fwd = find_matches(bare, r, Direction::Fwd);
  REQUIRE(fwd.size() == 1);
  const MorseWord swirled = apply_move(bare, r, Direction::Fwd, fwd[0]);
  // The canonical spelling sorts one leftover clockwise mark between the
  // pattern's counterclockwise pair; the whole swirl must still unwind.
  const auto bwd = find_matches(swirled, r, Direction::Bwd);
  REQUIRE(bwd.size() == 1);
  CHECK(equivalent(apply_move(swirled, r, Direction::Bwd, bwd[0]), bare));
}

// Intent: a site fabricated against the wrong word is refused instead of
// rewriting garbage.
TEST_CASE("stale sites are rejected") {
  const MoveRule r = crossing_pair_rule();
  const MorseWord w = parse_diagram("IN: U U\n");
  MatchSite site;
  site.anchor_layer = 0;
  site.column_offset = 1;  // the strip would stick out of the word
  CHECK_THROWS_AS((void)apply_move(w, r, Direction::Fwd, site), MatchError);
  const MorseWord kinked = parse_diagram("IN: U\nCUPCCW 0\nXP 1\nCAPCCW 0\n");
  MatchSite bogus;
  bogus.anchor_layer = 1;
  bogus.column_offset = 0;
  bogus.layer_selection = {1, 2};
  CHECK_THROWS_AS((void)apply_move(kinked, kink_rule(), Direction::Bwd, bogus),
                  MatchError);
}

// Intent: the scanning matcher agrees, site for site, with the matcher
// that enumerates every layer subset straight from the definition.
TEST_CASE("matcher agrees with the brute-force definition") {
  std::mt19937 rng(20260818);
  const MoveRule rules[] = {crossing_pair_rule(), kink_rule(),
                            rotation_slide_rule(), swirl_conjugation_rule()};
  int hits = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const MorseWord w = random_word(rng);
    for (const MoveRule& r : rules) {
      for (Direction d : {Direction::Fwd, Direction::Bwd}) {
        if (normalize(rule_side(r, d)).layers.empty()) continue;
        const auto fast = find_matches(w, r, d);
        const auto slow = brute_force_matches(w, r, d);
        REQUIRE(fast.size() == slow.size());
        for (std::size_t i = 0; i < fast.size(); ++i)
          CHECK(same_site(fast[i], slow[i]));
        hits += static_cast<int>(fast.size());
        // Every reported site must apply cleanly.
        for (const MatchSite& s : fast)
          (void)apply_move(w, r, d, s);
      }
    }
  }
  CHECK(hits > 50);  // the planted material guarantees real coverage
}
