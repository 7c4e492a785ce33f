#include "rotdiag/rules.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "rotdiag/invariant.hpp"
#include "rotdiag/io.hpp"
#include "rotdiag/normalize.hpp"
#include "rotdiag/trace.hpp"

namespace rotdiag {

namespace {

// Joins the leftmost downward leg of `row` to an upward neighbour, left
// neighbour preferred.  Returns the join column, or -1 if no downward leg
// remains.  Throws if a downward leg has no upward neighbour to absorb it.
int pick_join(const std::vector<Orient>& row) {
  for (size_t c = 0; c < row.size(); ++c) {
    if (row[c] != Orient::Down) continue;
    if (c > 0 && row[c - 1] == Orient::Up) return static_cast<int>(c) - 1;
    if (c + 1 < row.size() && row[c + 1] == Orient::Up)
      return static_cast<int>(c);
    throw CatalogError(
        "standard closure: downward boundary leg has no adjacent upward "
        "neighbour to join");
  }
  return -1;
}

}  // namespace

std::string family_name(MoveFamily f) {
  switch (f) {
    case MoveFamily::O0: return "O0";
    case MoveFamily::O1: return "O1";
    case MoveFamily::O1f: return "O1f";
    case MoveFamily::O2: return "O2";
    case MoveFamily::O3: return "O3";
    case MoveFamily::Aux: return "Aux";
  }
  throw CatalogError("unknown move family value");
}

MoveFamily family_from_name(const std::string& s) {
  if (s == "O0") return MoveFamily::O0;
  if (s == "O1") return MoveFamily::O1;
  if (s == "O1f") return MoveFamily::O1f;
  if (s == "O2") return MoveFamily::O2;
  if (s == "O3") return MoveFamily::O3;
  if (s == "Aux") return MoveFamily::Aux;
  throw CatalogError("unknown move family name: " + s);
}

MorseWord standard_closure(const MorseWord& w) {
  check_well_formed(w);
  MorseWord out = w;
  // Bottom: each join removes the leg pair from the boundary and re-creates
  // it with a cup placed below everything added so far; the cup's chirality
  // is forced by the pair of orientations it must produce.
  std::vector<Layer> below;
  std::vector<Orient> row = out.bottom;
  for (int c = pick_join(row); c >= 0; c = pick_join(row)) {
    GenKind kind = row[static_cast<size_t>(c)] == Orient::Up
                       ? GenKind::CupCW     // creates (Up, Down)
                       : GenKind::CupCCW;   // creates (Down, Up)
    below.push_back(make_layer(kind, c));
    row.erase(row.begin() + c, row.begin() + c + 2);
  }
  // Joins were recorded outside-in, so the last cup must sit lowest.
  std::reverse(below.begin(), below.end());
  out.bottom = row;
  below.insert(below.end(), out.layers.begin(), out.layers.end());
  out.layers = std::move(below);
  // Top: symmetric, with caps appended above; the cap's chirality is forced
  // by the pair of orientations it must consume.
  row = top_boundary(out);
  for (int c = pick_join(row); c >= 0; c = pick_join(row)) {
    GenKind kind = row[static_cast<size_t>(c)] == Orient::Up
                       ? GenKind::CapCW     // consumes (Up, Down)
                       : GenKind::CapCCW;   // consumes (Down, Up)
    out.layers.push_back(make_layer(kind, c));
    row.erase(row.begin() + c, row.begin() + c + 2);
  }
  check_well_formed(out);
  return out;
}

namespace {

std::string show_boundary(const std::vector<Orient>& b) {
  std::string s;
  for (Orient o : b) {
    if (!s.empty()) s += ' ';
    s += o == Orient::Up ? 'U' : 'D';
  }
  return s.empty() ? "(empty)" : s;
}

void add_check(RuleReport& rep, const std::string& what, bool pass,
               const std::string& detail = "") {
  rep.checks.push_back({what, pass, detail});
  if (!pass) rep.pass = false;
}

// Self-writhe maps of the two sides must agree except on `slack` components
// where they may differ by +-1 each.  Returns the failing detail, empty on
// success.
std::string diff_self_writhe(const std::map<int, int>& l,
                             const std::map<int, int>& r, int slack) {
  std::map<int, int> delta;
  for (const auto& [c, v] : l) delta[c] += v;
  for (const auto& [c, v] : r) delta[c] -= v;
  int changed = 0;
  for (const auto& [c, d] : delta) {
    if (d == 0) continue;
    if (std::abs(d) != 1)
      return "component " + std::to_string(c) + " self-writhe changes by " +
             std::to_string(d);
    ++changed;
  }
  if (changed != slack)
    return std::to_string(changed) +
           " component self-writhes change, expected " + std::to_string(slack);
  return "";
}

}  // namespace

RuleReport validate_rule(const MoveRule& r) {
  RuleReport rep;
  rep.rule = r.name;

  // Both sides must be structurally valid before anything is compared.
  try {
    check_well_formed(r.lhs);
    check_well_formed(r.rhs);
  } catch (const MorseError& e) {
    add_check(rep, "well-formed", false, e.what());
    return rep;
  }
  add_check(rep, "well-formed", true);

  // 1. Boundary equality, orientations included, on both ends.
  bool b_ok = r.lhs.bottom == r.rhs.bottom;
  std::vector<Orient> top_l = top_boundary(r.lhs);
  std::vector<Orient> top_r = top_boundary(r.rhs);
  bool t_ok = top_l == top_r;
  add_check(rep, "boundary", b_ok && t_ok,
            b_ok && t_ok
                ? ""
                : (!b_ok ? "bottom " + show_boundary(r.lhs.bottom) + " vs " +
                               show_boundary(r.rhs.bottom)
                         : "top " + show_boundary(top_l) + " vs " +
                               show_boundary(top_r)));
  if (!rep.pass) return rep;

  // 2. The pairing of boundary endpoints into strands must coincide, and a
  // local pattern must not hide a closed component.
  TraceResult tr_l = trace_components(r.lhs);
  TraceResult tr_r = trace_components(r.rhs);
  if (!tr_l.components.closed_components.empty() ||
      !tr_r.components.closed_components.empty()) {
    add_check(rep, "connections", false, "pattern side contains a closed component");
    return rep;
  }
  bool conn_ok = tr_l.components.boundary_connections ==
                 tr_r.components.boundary_connections;
  add_check(rep, "connections", conn_ok,
            conn_ok ? "" : "boundary endpoints pair up differently");
  if (!rep.pass) return rep;

  // 3. Family deltas.  Boundary connections coincide, so component ids --
  // assigned by first boundary appearance -- correspond across the sides
  // and the writhe maps can be compared entry by entry.
  DiagramInvariants inv_l = diagram_invariants(r.lhs);
  DiagramInvariants inv_r = diagram_invariants(r.rhs);
  int cc_l = inv_l.crossing_count;
  int cc_r = inv_r.crossing_count;
  switch (r.family) {
    case MoveFamily::O0:
    case MoveFamily::Aux: {
      bool ok = cc_l == cc_r;
      add_check(rep, "crossing-count", ok,
                ok ? "" : std::to_string(cc_l) + " vs " + std::to_string(cc_r));
      std::string d = ok ? diff_self_writhe(inv_l.self_writhe,
                                            inv_r.self_writhe, 0)
                         : "";
      add_check(rep, "self-writhe", d.empty(), d);
      bool m_ok = inv_l.mixed_writhe == inv_r.mixed_writhe;
      add_check(rep, "mixed-writhe", m_ok,
                m_ok ? "" : "mixed writhes differ");
      break;
    }
    case MoveFamily::O1: {
      bool ok = std::abs(cc_l - cc_r) == 1;
      add_check(rep, "crossing-count", ok,
                ok ? "" : std::to_string(cc_l) + " vs " + std::to_string(cc_r));
      std::string d =
          diff_self_writhe(inv_l.self_writhe, inv_r.self_writhe, 1);
      add_check(rep, "self-writhe", d.empty(), d);
      bool m_ok = inv_l.mixed_writhe == inv_r.mixed_writhe;
      add_check(rep, "mixed-writhe", m_ok,
                m_ok ? "" : "mixed writhes differ");
      break;
    }
    case MoveFamily::O1f: {
      bool ok = cc_l == 1 && cc_r == 1;
      add_check(rep, "crossing-count", ok,
                ok ? "" : std::to_string(cc_l) + " vs " + std::to_string(cc_r) +
                              ", expected one crossing per side");
      std::string d =
          diff_self_writhe(inv_l.self_writhe, inv_r.self_writhe, 0);
      add_check(rep, "self-writhe", d.empty(), d);
      bool m_ok = inv_l.mixed_writhe == inv_r.mixed_writhe;
      add_check(rep, "mixed-writhe", m_ok,
                m_ok ? "" : "mixed writhes differ");
      break;
    }
    case MoveFamily::O2: {
      bool ok = std::abs(cc_l - cc_r) == 2;
      add_check(rep, "crossing-count", ok,
                ok ? "" : std::to_string(cc_l) + " vs " + std::to_string(cc_r));
      std::string d =
          diff_self_writhe(inv_l.self_writhe, inv_r.self_writhe, 0);
      add_check(rep, "self-writhe", d.empty(), d);
      bool m_ok = inv_l.mixed_writhe == inv_r.mixed_writhe;
      add_check(rep, "mixed-writhe", m_ok,
                m_ok ? "" : "mixed writhes differ");
      break;
    }
    case MoveFamily::O3: {
      bool ok = cc_l == 3 && cc_r == 3;
      add_check(rep, "crossing-count", ok,
                ok ? "" : std::to_string(cc_l) + " vs " + std::to_string(cc_r) +
                              ", expected three crossings per side");
      std::string d =
          diff_self_writhe(inv_l.self_writhe, inv_r.self_writhe, 0);
      add_check(rep, "self-writhe", d.empty(), d);
      bool m_ok = inv_l.mixed_writhe == inv_r.mixed_writhe;
      add_check(rep, "mixed-writhe", m_ok,
                m_ok ? "" : "mixed writhes differ");
      break;
    }
  }
  if (!rep.pass) return rep;

  // 4. Oracle gate: both sides embedded by the standard closure must carry
  // the same toy invariant.  The unframed kinks are exempt -- changing the
  // writhe is exactly what they do, and the toy invariant sees it.
  if (r.family == MoveFamily::O1) return rep;
  try {
    MorseWord cl = standard_closure(r.lhs);
    MorseWord cr = standard_closure(r.rhs);
    RotationalReport rot_l = check_rotational(cl);
    RotationalReport rot_r = check_rotational(cr);
    if (!rot_l.pass || !rot_r.pass) {
      add_check(rep, "toy-invariant", false,
                "standard closure is not rotational");
      return rep;
    }
    AlgebraPtr toy = make_algebra("toy");
    CanonTensor vl = evaluate_invariant(cl, toy);
    CanonTensor vr = evaluate_invariant(cr, toy);
    bool eq = ct_equal(vl, vr);
    add_check(rep, "toy-invariant", eq,
              eq ? ""
                 : show_tensor(*toy, vl) + " vs " + show_tensor(*toy, vr));
  } catch (const MorseError& e) {
    add_check(rep, "toy-invariant", false, e.what());
  }
  return rep;
}

namespace {

// The complete expected inventory, name -> family.
const std::vector<std::pair<std::string, MoveFamily>>& expected_rules() {
  static const std::vector<std::pair<std::string, MoveFamily>> table = [] {
    std::vector<std::pair<std::string, MoveFamily>> t;
    for (const char* n : {"O0a", "O0b", "O0c", "O0d"})
      t.emplace_back(n, MoveFamily::O0);
    for (const char* n : {"O1a", "O1b", "O1c", "O1d"})
      t.emplace_back(n, MoveFamily::O1);
    for (const char* n : {"O1fa", "O1fb", "O1fc", "O1fd", "O1fe", "O1ff"})
      t.emplace_back(n, MoveFamily::O1f);
    for (const char* n : {"O2a", "O2b", "O2c1", "O2c2", "O2d1", "O2d2"})
      t.emplace_back(n, MoveFamily::O2);
    for (const char* n : {"O3a1", "O3a2", "O3a3", "O3a4", "O3a5", "O3a6",
                          "O3b", "O3c", "O3d", "O3e", "O3f", "O3g", "O3h1",
                          "O3h2", "O3h3", "O3h4", "O3h5", "O3h6"})
      t.emplace_back(n, MoveFamily::O3);
    for (const char* n : {"AuxL1", "AuxL2"}) t.emplace_back(n, MoveFamily::Aux);
    return t;
  }();
  return table;
}

std::vector<std::string> with_core(std::initializer_list<const char*> extra) {
  std::vector<std::string> s = {"O0a", "O0b", "O0c", "O0d"};
  for (const char* e : extra) s.push_back(e);
  return s;
}

void build_sets(Catalog& cat) {
  cat.sets["O"] = {"O0a", "O0b", "O0c", "O0d"};
  cat.sets["thm1"] = with_core({"O1a", "O1b", "O2a", "O3a1"});
  cat.sets["thm2a"] = with_core({"O1fa", "O2a", "O2d1", "O3a1", "O3h1"});
  cat.sets["thm2b"] = with_core({"O1fd", "O2b", "O2c2", "O3a3", "O3h4"});
  cat.sets["thm3"] = with_core({"O1a", "O1b", "O2c1", "O2d1", "O3b"});
  cat.sets["thm4"] =
      with_core({"O2a", "O2b", "O2c1", "O2d1", "O1fe", "O3b"});
  std::vector<std::string> unframed;
  std::vector<std::string> framed;
  for (const auto& [name, fam] : expected_rules()) {
    if (fam == MoveFamily::O0 || fam == MoveFamily::O1 ||
        fam == MoveFamily::O2 || fam == MoveFamily::O3)
      unframed.push_back(name);
    if (fam == MoveFamily::O0 || fam == MoveFamily::O1f ||
        fam == MoveFamily::O2 || fam == MoveFamily::O3)
      framed.push_back(name);
  }
  cat.sets["all-unframed"] = unframed;  // 32 rules
  cat.sets["all-framed"] = framed;      // 34 rules
  // The two families of four-element completions: a kink pair, one
  // crossing-pair move, and one third-order move of the matching series.
  const std::vector<std::pair<std::string, std::string>> a_pairs = {
      {"O1a", "O1c"}, {"O1b", "O1d"}, {"O1a", "O1b"}};
  const std::vector<std::pair<std::string, std::string>> h_pairs = {
      {"O1a", "O1c"}, {"O1b", "O1d"}, {"O1c", "O1d"}};
  auto tag = [](const std::string& rule) {
    return rule.substr(1);  // "O1a" -> "1a", "O2b" -> "2b"
  };
  for (const auto& [series, pairs] :
       {std::make_pair(std::string("A"), a_pairs),
        std::make_pair(std::string("H"), h_pairs)}) {
    for (const auto& [k1, k2] : pairs) {
      for (const std::string two : {"O2a", "O2b"}) {
        for (int k = 1; k <= 6; ++k) {
          std::string three =
              (series == "A" ? "O3a" : "O3h") + std::to_string(k);
          std::string key = series + "-" + tag(k1) + tag(k2) + "-" + tag(two) +
                            "-" + tag(three).substr(1);
          cat.sets[key] = {k1, k2, two, three};
        }
      }
    }
  }
}

MorseWord load_pattern(const std::filesystem::path& dir,
                       const std::string& rel, const std::string& rule) {
  std::ifstream in(dir / rel);
  if (!in)
    throw CatalogError("rule " + rule + ": cannot open pattern file " + rel);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_diagram(ss.str());
  } catch (const MorseError& e) {
    throw CatalogError("rule " + rule + ": bad pattern file " + rel + ": " +
                       e.what());
  }
}

}  // namespace

Catalog load_catalog(const std::filesystem::path& dir) {
  std::ifstream in(dir / "manifest.txt");
  if (!in)
    throw CatalogError("cannot open catalog manifest in " + dir.string());
  Catalog cat;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok != "RULE")
      throw CatalogError("manifest line " + std::to_string(lineno) +
                         ": expected RULE, got " + tok);
    std::string name, fam, lhs_file, rhs_file;
    if (!(ls >> name >> fam >> lhs_file >> rhs_file))
      throw CatalogError("manifest line " + std::to_string(lineno) +
                         ": expected RULE <name> <family> <lhs> <rhs>");
    if (cat.rules.count(name))
      throw CatalogError("duplicate rule " + name);
    MoveRule r;
    r.name = name;
    r.family = family_from_name(fam);
    r.lhs = load_pattern(dir, lhs_file, name);
    r.rhs = load_pattern(dir, rhs_file, name);
    cat.rules.emplace(name, std::move(r));
  }
  // Inventory: exactly the expected rules, each in its expected family.
  for (const auto& [name, fam] : expected_rules()) {
    auto it = cat.rules.find(name);
    if (it == cat.rules.end()) throw CatalogError("missing rule " + name);
    if (it->second.family != fam)
      throw CatalogError("rule " + name + " declared in family " +
                         family_name(it->second.family) + ", expected " +
                         family_name(fam));
  }
  if (cat.rules.size() != expected_rules().size())
    for (const auto& [name, r] : cat.rules) {
      bool known = false;
      for (const auto& [en, ef] : expected_rules())
        if (en == name) known = true;
      if (!known) throw CatalogError("unexpected rule " + name);
    }
  // Every rule must check out.
  for (const auto& [name, r] : cat.rules) {
    RuleReport rep = validate_rule(r);
    if (!rep.pass) {
      std::string why;
      for (const RuleCheck& c : rep.checks)
        if (!c.pass) {
          why = c.what + (c.detail.empty() ? "" : ": " + c.detail);
          break;
        }
      throw CatalogError("rule " + name + " fails validation (" + why + ")");
    }
  }
  build_sets(cat);
  return cat;
}

}  // namespace rotdiag
