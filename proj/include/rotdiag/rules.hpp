#pragma once
// The named catalog of local rewrite rules.  A rule is a pair of patterns
// over the same boundary; applying it replaces one embedded pattern by the
// other.  Rules are grouped into families with known invariant behaviour
// (how crossing counts and writhes may change), and the loader enforces the
// full expected inventory so a missing or miscoded entry cannot slip in.

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "rotdiag/morse.hpp"

namespace rotdiag {

// Rule families.  O0: rotation pairs and their slides past a crossing;
// O1: kink creation (changes writhe); O1f: framed kink exchanges (writhe
// preserving); O2: crossing-pair creation and kink threading; O3: third
// order moves (three crossings each side); Aux: derived rotation slides
// used as stepping stones.
enum class MoveFamily : std::uint8_t { O0, O1, O1f, O2, O3, Aux };

std::string family_name(MoveFamily f);
MoveFamily family_from_name(const std::string& s);

struct MoveRule {
  std::string name;
  MoveFamily family = MoveFamily::O0;
  MorseWord lhs;
  MorseWord rhs;
};

struct CatalogError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One validation check's outcome.
struct RuleCheck {
  std::string what;
  bool pass = true;
  std::string detail;
};

struct RuleReport {
  std::string rule;
  bool pass = true;
  std::vector<RuleCheck> checks;
};

struct Catalog {
  std::map<std::string, MoveRule> rules;
  // Named rule-name lists: the swirl core "O", the bundled theorem
  // generator sets, and the two families of four-move completions.
  std::map<std::string, std::vector<std::string>> sets;
};

// Turns every downward boundary leg into an internal U-turn by joining it
// to its adjacent upward neighbour with an extremum (cups below the bottom
// row, caps above the top row), leftmost downward leg first.  The joint's
// chirality is forced by the two orientations it absorbs.  Used to embed a
// local pattern into the all-upward form that invariant evaluation needs.
MorseWord standard_closure(const MorseWord& w);

// Checks, in order: equal boundaries (orientations included), equal
// boundary connections, the family's crossing-count and writhe deltas, and
// -- for every family except the unframed kinks O1 -- equality of the toy
// algebra invariant on the standard closures of both sides.
RuleReport validate_rule(const MoveRule& r);

// Reads `manifest.txt` in dir (lines `RULE <name> <family> <lhs-file>
// <rhs-file>`, paths relative to dir), parses every referenced pattern,
// validates every rule, checks the inventory (4 O0 + 4 O1 + 6 O2 + 18 O3
// unframed, 6 O1f, 2 Aux), and builds the named sets.  Throws CatalogError
// on the first problem; never returns a partial catalog.
Catalog load_catalog(const std::filesystem::path& dir);

}  // namespace rotdiag
