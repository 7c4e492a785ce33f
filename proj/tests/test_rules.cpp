#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "rotdiag/io.hpp"
#include "rotdiag/rules.hpp"
#include "rotdiag/trace.hpp"

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

const RuleCheck* failing_check(const RuleReport& rep) {
  for (const RuleCheck& c : rep.checks)
    if (!c.pass) return &c;
  return nullptr;
}

}  // namespace

// Intent: a word whose boundary already points up everywhere closes to
// itself; there is nothing to join.
TEST_CASE("standard closure is the identity on upward boundaries") {
  const MorseWord w = parse_diagram("IN: U U\nXP 0\nROTCCW 1\n");
  const MorseWord c = standard_closure(w);
  CHECK(c.bottom == w.bottom);
  CHECK(c.layers == w.layers);
}

// Intent: downward legs are absorbed by joints whose chirality the two
// orientations force, and the closed pattern lands in rotational form.
TEST_CASE("standard closure joins downward legs") {
  const MorseWord w = parse_diagram(
      "IN: U U D\n"
      "CUPCCW 0\nXN 1\nXN 2\nCAPCW 3\nXP 1\n");
  const MorseWord c = standard_closure(w);
  REQUIRE(c.bottom == std::vector<Orient>{Orient::Up});
  CHECK(top_boundary(c) == std::vector<Orient>{Orient::Up});
  // The bottom (U, D) pair takes a clockwise cup; the top (D, U) pair a
  // counterclockwise cap.
  CHECK(c.layers.front().kind == GenKind::CupCW);
  CHECK(c.layers.back().kind == GenKind::CapCCW);
  CHECK(check_rotational(c).pass);
}

// Intent: a downward leg with no upward neighbour cannot be closed and the
// failure is reported, not silently mangled.
TEST_CASE("standard closure rejects unjoinable boundaries") {
  // Two downward strands crossing: no upward neighbour exists for either
  // downward leg, so neighbour joining must give up loudly.
  MorseWord w;
  w.bottom = {Orient::Down, Orient::Down};
  w.layers.push_back(make_cross(0, +1, Orient::Down, Orient::Down));
  check_well_formed(w);
  CHECK_THROWS_AS((void)standard_closure(w), CatalogError);
}

// Intent: the rotation-cancellation rule passes every validation stage.
TEST_CASE("validate_rule accepts a rotation pair cancellation") {
  const MoveRule r = make_rule("O0a", MoveFamily::O0,
                               "IN: U\nROTCW 0\nROTCCW 0\n", "IN: U\n");
  const RuleReport rep = validate_rule(r);
  CHECK(rep.pass);
  CHECK(failing_check(rep) == nullptr);
}

// Intent: a kink creation changes exactly one self-writhe by one and is
// exempt from the algebra gate, which it would otherwise fail.
TEST_CASE("validate_rule accepts a kink creation") {
  const MoveRule r =
      make_rule("O1a", MoveFamily::O1, "IN: U\n",
                "IN: U\nCUPCCW 0\nXP 1\nCAPCCW 0\n");
  const RuleReport rep = validate_rule(r);
  CHECK(rep.pass);
  for (const RuleCheck& c : rep.checks) CHECK(c.what != "toy-invariant");
}

// Intent: the crossing-pair creation keeps every writhe and carries equal
// toy invariants on both closures.
TEST_CASE("validate_rule accepts a crossing pair creation") {
  const MoveRule r = make_rule("O2a", MoveFamily::O2, "IN: U U\n",
                               "IN: U U\nXP 0\nXN 0\n");
  const RuleReport rep = validate_rule(r);
  CHECK(rep.pass);
  bool saw_toy = false;
  for (const RuleCheck& c : rep.checks) saw_toy |= c.what == "toy-invariant";
  CHECK(saw_toy);
}

// Intent: sides over different boundaries fail the first check.
TEST_CASE("validate_rule rejects a boundary mismatch") {
  const MoveRule r =
      make_rule("bad", MoveFamily::O0, "IN: U\n", "IN: U U\n");
  const RuleReport rep = validate_rule(r);
  REQUIRE_FALSE(rep.pass);
  REQUIRE(failing_check(rep) != nullptr);
  CHECK(failing_check(rep)->what == "boundary");
}

// Intent: equal boundaries are not enough -- the strands must pair the
// endpoints the same way on both sides.
TEST_CASE("validate_rule rejects reconnected strands") {
  const MoveRule r = make_rule("bad", MoveFamily::O2, "IN: U U\n",
                               "IN: U U\nXP 0\n");
  const RuleReport rep = validate_rule(r);
  REQUIRE_FALSE(rep.pass);
  REQUIRE(failing_check(rep) != nullptr);
  CHECK(failing_check(rep)->what == "connections");
}

// Intent: a rule declared in a family whose crossing budget it breaks is
// caught by the family delta stage.
TEST_CASE("validate_rule rejects a wrong family declaration") {
  const MoveRule r = make_rule("bad", MoveFamily::O2, "IN: U\n",
                               "IN: U\nCUPCCW 0\nXP 1\nCAPCCW 0\n");
  const RuleReport rep = validate_rule(r);
  REQUIRE_FALSE(rep.pass);
  REQUIRE(failing_check(rep) != nullptr);
  CHECK(failing_check(rep)->what == "crossing-count");
}

// Intent: a move that silently inserts a full rotation survives the
// structural checks but the toy algebra sees the extra kappa.
TEST_CASE("validate_rule rejects a rotation insertion via the toy gate") {
  const MoveRule r =
      make_rule("bad", MoveFamily::O0, "IN: U\n", "IN: U\nROTCW 0\n");
  const RuleReport rep = validate_rule(r);
  REQUIRE_FALSE(rep.pass);
  REQUIRE(failing_check(rep) != nullptr);
  CHECK(failing_check(rep)->what == "toy-invariant");
}

// Intent: an incomplete catalog directory is rejected atomically with the
// missing rule named, rather than loaded in part.
TEST_CASE("load_catalog reports missing rules") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "rotdiag_partial_catalog";
  fs::create_directories(dir);
  {
    std::ofstream lhs(dir / "O0a.lhs.tang");
    lhs << "IN: U\nROTCW 0\nROTCCW 0\n";
    std::ofstream rhs(dir / "O0a.rhs.tang");
    rhs << "IN: U\n";
    std::ofstream man(dir / "manifest.txt");
    man << "# one rule only\n";
    man << "RULE O0a O0 O0a.lhs.tang O0a.rhs.tang\n";
  }
  CHECK_THROWS_WITH_AS((void)load_catalog(dir),
                       doctest::Contains("missing rule"), CatalogError);
  fs::remove_all(dir);
}

// Intent: a manifest referencing an unreadable pattern file fails with the
// rule and file named.
TEST_CASE("load_catalog reports unreadable pattern files") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "rotdiag_broken_catalog";
  fs::create_directories(dir);
  {
    std::ofstream man(dir / "manifest.txt");
    man << "RULE O0a O0 nowhere.tang nowhere.tang\n";
  }
  CHECK_THROWS_WITH_AS((void)load_catalog(dir), doctest::Contains("O0a"),
                       CatalogError);
  fs::remove_all(dir);
}

// Intent: family tokens outside the fixed list are a manifest error.
TEST_CASE("family names round-trip and reject unknowns") {
  for (MoveFamily f : {MoveFamily::O0, MoveFamily::O1, MoveFamily::O1f,
                       MoveFamily::O2, MoveFamily::O3, MoveFamily::Aux})
    CHECK(family_from_name(family_name(f)) == f);
  CHECK_THROWS_AS((void)family_from_name("O7"), CatalogError);
}
