#include "rotdiag/script.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <sstream>
#include <unordered_map>

#include "rotdiag/io.hpp"
#include "rotdiag/normalize.hpp"

namespace rotdiag {

namespace {

std::vector<std::string> split_names(const std::string& csv) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : csv) {
    if (ch == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

}  // namespace

DerivationScript parse_script(const std::string& text,
                              const std::string& name) {
  DerivationScript s;
  s.name = name;
  std::istringstream in(text);
  std::string line;
  bool have_header = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    const std::string at = name + " line " + std::to_string(lineno);
    if (!have_header) {
      if (tok != "DERIVES")
        throw ScriptError(at + ": expected DERIVES, got " + tok);
      std::string from, csv, in_kw, ctx;
      if (!(ls >> s.derived_rule >> from >> csv >> in_kw >> ctx) ||
          from != "FROM" || in_kw != "IN")
        throw ScriptError(
            at + ": expected DERIVES <rule> FROM <rule,...> IN <context-id>");
      s.assumed_rules = split_names(csv);
      if (s.assumed_rules.empty())
        throw ScriptError(at + ": empty assumed rule list");
      s.context_id = ctx;
      have_header = true;
      continue;
    }
    if (tok != "STEP") throw ScriptError(at + ": expected STEP, got " + tok);
    ScriptStep step;
    std::string dir;
    if (!(ls >> step.rule >> dir) || (dir != "FWD" && dir != "BWD"))
      throw ScriptError(at + ": expected STEP <rule> FWD|BWD [AT <layer> <col>]");
    step.dir = dir == "FWD" ? Direction::Fwd : Direction::Bwd;
    std::string kw;
    if (ls >> kw) {
      long layer = 0;
      int col = 0;
      if (kw != "AT" || !(ls >> layer >> col) || layer < 0)
        throw ScriptError(at + ": malformed AT hint");
      step.hint = MatchHint{static_cast<std::size_t>(layer), col};
    }
    s.steps.push_back(std::move(step));
  }
  if (!have_header) throw ScriptError(name + ": missing DERIVES header");
  return s;
}

std::string serialize_script(const DerivationScript& s) {
  std::ostringstream out;
  out << "DERIVES " << s.derived_rule << " FROM ";
  for (size_t i = 0; i < s.assumed_rules.size(); ++i) {
    if (i) out << ',';
    out << s.assumed_rules[i];
  }
  out << " IN " << s.context_id << "\n";
  for (const ScriptStep& st : s.steps) {
    out << "STEP " << st.rule << ' '
        << (st.dir == Direction::Fwd ? "FWD" : "BWD");
    if (st.hint)
      out << " AT " << st.hint->anchor_layer << ' ' << st.hint->column_offset;
    out << "\n";
  }
  return out.str();
}

MorseWord embed_in_context(const MorseWord& w, const std::string& context_id) {
  if (context_id == "std") return w;
  const bool left = context_id.rfind("padL", 0) == 0;
  const bool right = context_id.rfind("padR", 0) == 0;
  if (!left && !right)
    throw ScriptError("unknown context-id: " + context_id);
  const std::string num = context_id.substr(4);
  if (num.empty() ||
      num.find_first_not_of("0123456789") != std::string::npos || num[0] == '0')
    throw ScriptError("bad pad width in context-id: " + context_id);
  MorseWord pad;
  pad.bottom.assign(static_cast<size_t>(std::stoi(num)), Orient::Up);
  return left ? tensor(pad, w) : tensor(w, pad);
}

ScriptReport run_script(const DerivationScript& s, const Catalog& c) {
  ScriptReport rep;
  rep.script = s.name;
  const auto derived = c.rules.find(s.derived_rule);
  if (derived == c.rules.end()) {
    rep.error = "unknown derived rule " + s.derived_rule;
    return rep;
  }
  for (const std::string& a : s.assumed_rules)
    if (!c.rules.count(a)) {
      rep.error = "unknown assumed rule " + a;
      return rep;
    }
  MorseWord cur;
  MorseWord target;
  try {
    cur = normalize(embed_in_context(derived->second.lhs, s.context_id));
    target = normalize(embed_in_context(derived->second.rhs, s.context_id));
  } catch (const MorseError& e) {
    rep.error = e.what();
    return rep;
  }
  for (size_t i = 0; i < s.steps.size(); ++i) {
    const ScriptStep& st = s.steps[i];
    const std::string where = "step " + std::to_string(i);
    if (std::find(s.assumed_rules.begin(), s.assumed_rules.end(), st.rule) ==
        s.assumed_rules.end()) {
      rep.error = where + " uses rule " + st.rule + " outside the assumed set";
      return rep;
    }
    const MoveRule& rule = c.rules.at(st.rule);
    const std::vector<MatchSite> sites = find_matches(cur, rule, st.dir);
    const MatchSite* chosen = nullptr;
    if (st.hint) {
      for (const MatchSite& site : sites)
        if (site.anchor_layer == st.hint->anchor_layer &&
            site.column_offset == st.hint->column_offset) {
          chosen = &site;
          break;
        }
    } else if (!sites.empty()) {
      chosen = &sites.front();
    }
    if (!chosen) {
      rep.error = "no match at " + where + " (" + st.rule +
                  (st.dir == Direction::Fwd ? " FWD" : " BWD") +
                  (st.hint ? ", hinted" : "") + "); current word:\n" +
                  serialize_diagram(cur);
      return rep;
    }
    try {
      cur = apply_move(cur, rule, st.dir, *chosen);
    } catch (const MorseError& e) {
      rep.error = where + ": " + e.what();
      return rep;
    }
    ++rep.steps_applied;
  }
  if (!equivalent(cur, target)) {
    rep.error = "final mismatch; reached:\n" + serialize_diagram(cur) +
                "expected:\n" + serialize_diagram(target);
    return rep;
  }
  rep.pass = true;
  return rep;
}

SearchOutcome search_derivation(const MorseWord& source,
                                const MorseWord& target,
                                const std::vector<std::string>& allowed,
                                const Catalog& c, int max_depth) {
  // The cap bounds total stored states, which is what actually limits
  // memory; hitting it is reported, never silent.
  constexpr long kStateCap = 200000;
  SearchOutcome out;
  std::vector<const MoveRule*> rules;
  for (const std::string& name : allowed) {
    const auto it = c.rules.find(name);
    if (it == c.rules.end())
      throw ScriptError("search over unknown rule " + name);
    rules.push_back(&it->second);
  }
  const MorseWord src = normalize(source);
  const MorseWord tgt = normalize(target);
  const std::string src_key = serialize_diagram(src);
  const std::string tgt_key = serialize_diagram(tgt);

  struct Edge {
    std::string parent;
    ScriptStep step;
    int depth = 0;
  };
  std::unordered_map<std::string, Edge> seen;
  std::unordered_map<std::string, MorseWord> words;
  std::deque<std::string> frontier;
  seen.emplace(src_key, Edge{});
  words.emplace(src_key, src);
  frontier.push_back(src_key);
  out.states_visited = 1;

  const auto build_script = [&](const std::string& key) {
    DerivationScript s;
    s.context_id = "std";
    std::string at = key;
    while (at != src_key) {
      const Edge& e = seen.at(at);
      s.steps.push_back(e.step);
      at = e.parent;
    }
    std::reverse(s.steps.begin(), s.steps.end());
    std::set<std::string> used;
    for (const ScriptStep& st : s.steps) used.insert(st.rule);
    s.assumed_rules.assign(used.begin(), used.end());
    return s;
  };

  if (src_key == tgt_key) {
    DerivationScript s;
    s.context_id = "std";
    out.script = std::move(s);
    return out;
  }
  while (!frontier.empty()) {
    const std::string key = frontier.front();
    frontier.pop_front();
    const int depth = seen.at(key).depth;
    if (depth >= max_depth) {
      out.depth_exhausted = true;  // unexplored states remain past the bound
      continue;
    }
    const MorseWord cur = words.at(key);
    for (const MoveRule* rule : rules) {
      for (const Direction d : {Direction::Fwd, Direction::Bwd}) {
        for (const MatchSite& site : find_matches(cur, *rule, d)) {
          MorseWord next;
          try {
            next = apply_move(cur, *rule, d, site);
          } catch (const MorseError&) {
            continue;  // a site the rewrite itself refuses is just skipped
          }
          std::string nkey = serialize_diagram(next);
          if (seen.count(nkey)) continue;
          ScriptStep step{rule->name, d,
                          MatchHint{site.anchor_layer, site.column_offset}};
          seen.emplace(nkey, Edge{key, step, depth + 1});
          if (nkey == tgt_key) {
            out.script = build_script(nkey);
            out.states_visited = static_cast<long>(seen.size());
            return out;
          }
          if (static_cast<long>(seen.size()) >= kStateCap) {
            out.depth_exhausted = true;
            out.states_visited = static_cast<long>(seen.size());
            return out;
          }
          words.emplace(nkey, std::move(next));
          frontier.push_back(std::move(nkey));
        }
      }
    }
  }
  out.states_visited = static_cast<long>(seen.size());
  return out;
}

}  // namespace rotdiag
