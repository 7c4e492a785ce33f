#pragma once
// Derivation scripts: replayable move sequences that exhibit one rule as a
// consequence of others.  A script starts from the derived rule's left side
// (embedded in a declared context), applies catalog moves step by step, and
// must land exactly on the right side's embedding.  Scripts are data files,
// so every derivation in the bundled suite can be audited line by line.

#include <optional>
#include <string>
#include <vector>

#include "rotdiag/match.hpp"

namespace rotdiag {

class ScriptError : public MorseError {
 public:
  explicit ScriptError(const std::string& what) : MorseError(what) {}
};

struct MatchHint {
  std::size_t anchor_layer = 0;
  int column_offset = 0;
};

struct ScriptStep {
  std::string rule;
  Direction dir = Direction::Fwd;
  std::optional<MatchHint> hint;
};

struct DerivationScript {
  std::string name;
  std::string derived_rule;
  std::vector<std::string> assumed_rules;
  // Embedding the replay runs in: "std" is the bare rule, "padL<k>" /
  // "padR<k>" add k parallel upward strands on that side.
  std::string context_id = "std";
  std::vector<ScriptStep> steps;
};

// Text form: `DERIVES <rule> FROM <rule,...> IN <context-id>` followed by
// one `STEP <rule> FWD|BWD [AT <layer> <col>]` line per step.
DerivationScript parse_script(const std::string& text,
                              const std::string& name);
std::string serialize_script(const DerivationScript& s);

// Applies the script's declared context to a pattern side.
MorseWord embed_in_context(const MorseWord& w, const std::string& context_id);

struct ScriptReport {
  std::string script;
  bool pass = false;
  int steps_applied = 0;
  std::string error;  // empty on success
};

// Replays the script against the catalog.  Every step must name an assumed
// rule and must match (at the hint when one is given, else at the first
// site in deterministic order); the final word must be normalize-equal to
// the rhs embedding.  Failures report the step index and the current word,
// or the diff of the two normal forms.
ScriptReport run_script(const DerivationScript& s, const Catalog& c);

struct SearchOutcome {
  std::optional<DerivationScript> script;
  bool depth_exhausted = false;  // a resource cap cut the frontier short
  long states_visited = 0;
};

// Breadth-first search from source to target over applications of the
// allowed rules (both directions), with normalized words as visited keys.
// Returns a minimal-length script whose steps carry explicit hints; rules
// are tried in the order given, so ties resolve deterministically.
SearchOutcome search_derivation(const MorseWord& source,
                                const MorseWord& target,
                                const std::vector<std::string>& allowed,
                                const Catalog& c, int max_depth);

}  // namespace rotdiag
