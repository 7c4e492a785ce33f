#include "rotdiag/trace.hpp"

#include <algorithm>
#include <sstream>

namespace rotdiag {

namespace {

// Half-turn units contributed by an extremum or rotation mark: counter-
// clockwise turning is positive, and a rotation mark is a full turn.
int half_turns(GenKind k) {
  switch (k) {
    case GenKind::CupCCW:
    case GenKind::CapCCW: return 1;
    case GenKind::CupCW:
    case GenKind::CapCW: return -1;
    case GenKind::RotCCW: return 2;
    case GenKind::RotCW: return -2;
    default: return 0;
  }
}

struct UnionFind {
  std::vector<int> parent;
  int add() {
    parent.push_back(static_cast<int>(parent.size()));
    return parent.back();
  }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] =
          parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<size_t>(b)] = a;
  }
};

// Raw (pre-dense) trace data gathered in one pass.
struct RawTrace {
  UnionFind uf;
  std::vector<int> bottom_ids;
  std::vector<int> top_ids;
  struct RawCrossing {
    int layer, sign, over_id, under_id;
    bool upup;
  };
  struct RawTurn {
    int layer;
    GenKind kind;
    int id;
  };
  std::vector<RawCrossing> crossings;
  std::vector<RawTurn> turns;
};

RawTrace raw_trace(const MorseWord& w) {
  check_well_formed(w);
  RawTrace t;
  std::vector<int> cur;
  for (size_t j = 0; j < w.bottom.size(); ++j) cur.push_back(t.uf.add());
  t.bottom_ids = cur;
  for (size_t i = 0; i < w.layers.size(); ++i) {
    const Layer& l = w.layers[i];
    const size_t c = static_cast<size_t>(l.column);
    switch (l.kind) {
      case GenKind::IdUp:
      case GenKind::IdDown:
        break;
      case GenKind::CupCW:
      case GenKind::CupCCW: {
        const int a = t.uf.add();
        const int b = t.uf.add();
        t.uf.unite(a, b);
        cur.insert(cur.begin() + static_cast<long>(c), {a, b});
        t.turns.push_back({static_cast<int>(i), l.kind, a});
        break;
      }
      case GenKind::CapCW:
      case GenKind::CapCCW:
        t.uf.unite(cur[c], cur[c + 1]);
        t.turns.push_back({static_cast<int>(i), l.kind, cur[c]});
        cur.erase(cur.begin() + static_cast<long>(c),
                  cur.begin() + static_cast<long>(c) + 2);
        break;
      case GenKind::Cross: {
        const bool left_over = over_is_left(l);
        t.crossings.push_back({static_cast<int>(i), l.sign,
                               left_over ? cur[c] : cur[c + 1],
                               left_over ? cur[c + 1] : cur[c],
                               crossing_is_upup(l)});
        std::swap(cur[c], cur[c + 1]);
        break;
      }
      case GenKind::RotCW:
      case GenKind::RotCCW:
        t.turns.push_back({static_cast<int>(i), l.kind, cur[c]});
        break;
    }
  }
  t.top_ids = cur;
  return t;
}

}  // namespace

TraceResult trace_components(const MorseWord& w) {
  RawTrace raw = raw_trace(w);
  const int total_ids = static_cast<int>(raw.uf.parent.size());

  // Dense numbering: bottom endpoints, then top endpoints, then closed
  // components in id-creation order.
  std::map<int, int> dense;  // root -> dense id
  auto assign = [&](int id) {
    const int root = raw.uf.find(id);
    if (!dense.count(root)) {
      const int next = static_cast<int>(dense.size());
      dense[root] = next;
    }
  };
  for (int id : raw.bottom_ids) assign(id);
  for (int id : raw.top_ids) assign(id);
  const int open_count = static_cast<int>(dense.size());
  for (int id = 0; id < total_ids; ++id) assign(id);

  TraceResult r;
  r.components.component_count = static_cast<int>(dense.size());
  auto dense_of = [&](int id) { return dense.at(raw.uf.find(id)); };
  for (int id : raw.bottom_ids)
    r.components.bottom_component.push_back(dense_of(id));
  for (int id : raw.top_ids) r.components.top_component.push_back(dense_of(id));
  for (int c = open_count; c < r.components.component_count; ++c)
    r.components.closed_components.push_back(c);

  // Boundary endpoints per open component; every strand has exactly two.
  const int nb = static_cast<int>(raw.bottom_ids.size());
  std::vector<std::vector<int>> endpoints(
      static_cast<size_t>(r.components.component_count));
  for (int j = 0; j < nb; ++j)
    endpoints[static_cast<size_t>(r.components.bottom_component[j])].push_back(
        j);
  for (size_t j = 0; j < raw.top_ids.size(); ++j)
    endpoints[static_cast<size_t>(r.components.top_component[j])].push_back(
        nb + static_cast<int>(j));
  for (int c = 0; c < open_count; ++c) {
    const auto& e = endpoints[static_cast<size_t>(c)];
    if (e.size() != 2) {
      std::ostringstream out;
      out << "component " << c << " has " << e.size()
          << " boundary endpoints; expected 2";
      throw MorseError(out.str());
    }
    r.components.boundary_connections.emplace_back(e[0], e[1]);
  }

  for (const auto& x : raw.crossings)
    r.crossings.push_back({x.layer, x.sign, dense_of(x.over_id),
                           dense_of(x.under_id), x.upup});
  for (const auto& t : raw.turns)
    r.turns.push_back({t.layer, t.kind, dense_of(t.id)});
  return r;
}

DiagramInvariants diagram_invariants(const MorseWord& w) {
  const TraceResult t = trace_components(w);
  DiagramInvariants inv;
  inv.crossing_count = static_cast<int>(t.crossings.size());
  for (int c = 0; c < t.components.component_count; ++c) {
    inv.self_writhe[c] = 0;
    inv.winding[c] = 0;
  }
  for (const CrossingInfo& x : t.crossings) {
    if (x.over_component == x.under_component) {
      inv.self_writhe[x.over_component] += x.sign;
    } else {
      const int a = std::min(x.over_component, x.under_component);
      const int b = std::max(x.over_component, x.under_component);
      inv.mixed_writhe[{a, b}] += x.sign;
    }
  }
  // A pair that sums to zero is no pair at all: dropping it makes the map
  // of a diagram with cancelling crossings equal to that of one without.
  std::erase_if(inv.mixed_writhe, [](const auto& e) { return e.second == 0; });
  std::map<int, int> half;
  for (const TurnInfo& t2 : t.turns) half[t2.component] += half_turns(t2.kind);
  for (const auto& [c, h] : half) {
    // Flooring division keeps stray half-turns (possible only outside
    // rotational form) deterministic.
    inv.winding[c] = (h >= 0 ? h : h - 1) / 2;
  }
  return inv;
}

namespace {

// Moves one step down a descending strand: from sitting at `pos` just above
// layer `li`, returns the position below it, or reports that the strand ends
// at this layer's cup.
struct DownStep {
  bool ended_at_cup = false;
  GenKind cup_kind = GenKind::CupCCW;
  int pos = 0;
};

DownStep descend_layer(const Layer& l, int pos) {
  DownStep r;
  const int c = l.column;
  switch (l.kind) {
    case GenKind::CupCW:
    case GenKind::CupCCW: {
      const int d_leg = (l.kind == GenKind::CupCCW) ? c : c + 1;
      if (pos == d_leg) {
        r.ended_at_cup = true;
        r.cup_kind = l.kind;
        return r;
      }
      r.pos = pos >= c + 2 ? pos - 2 : pos;
      return r;
    }
    case GenKind::CapCW:
    case GenKind::CapCCW:
      r.pos = pos >= c ? pos + 2 : pos;
      return r;
    case GenKind::Cross:
      if (pos == c) {
        r.pos = c + 1;
      } else if (pos == c + 1) {
        r.pos = c;
      } else {
        r.pos = pos;
      }
      return r;
    default:
      r.pos = pos;
      return r;
  }
}

}  // namespace

RotationalReport check_rotational(const MorseWord& w) {
  RotationalReport report;
  const auto levels = level_orientations(w);
  auto flag = [&](int layer, const std::string& reason) {
    report.violations.push_back({layer, reason});
  };

  for (size_t j = 0; j < w.bottom.size(); ++j) {
    if (w.bottom[j] == Orient::Down) {
      std::ostringstream out;
      out << "bottom endpoint " << j << " points down";
      flag(-1, out.str());
    }
  }
  const std::vector<Orient>& top = levels.back();
  for (size_t j = 0; j < top.size(); ++j) {
    if (top[j] == Orient::Down) {
      std::ostringstream out;
      out << "top endpoint " << j << " points down";
      flag(static_cast<int>(w.layers.size()), out.str());
    }
  }

  for (size_t i = 0; i < w.layers.size(); ++i) {
    const Layer& l = w.layers[i];
    if (l.kind == GenKind::Cross && !crossing_is_upup(l)) {
      flag(static_cast<int>(i), "crossing with a non-upward strand");
    }
  }

  // Every cap's descending leg must terminate at a cup of equal chirality.
  // Runs reaching the bottom boundary were already flagged above.
  for (size_t i = 0; i < w.layers.size(); ++i) {
    const Layer& l = w.layers[i];
    if (!is_cap(l.kind)) continue;
    int pos = (l.kind == GenKind::CapCW) ? l.column + 1 : l.column;
    bool resolved = false;
    for (size_t li = i; li-- > 0;) {
      const DownStep step = descend_layer(w.layers[li], pos);
      if (step.ended_at_cup) {
        const bool cap_ccw = l.kind == GenKind::CapCCW;
        const bool cup_ccw = step.cup_kind == GenKind::CupCCW;
        if (cap_ccw != cup_ccw) {
          std::ostringstream out;
          out << "cap at layer " << i
              << " pairs with an opposite-chirality cup at layer " << li;
          flag(static_cast<int>(i), out.str());
        }
        resolved = true;
        break;
      }
      pos = step.pos;
    }
    (void)resolved;
  }

  report.pass = report.violations.empty();
  return report;
}

std::vector<std::vector<FlowStop>> flow_stops(const MorseWord& w,
                                              const TraceResult& trace) {
  if (!trace.components.closed_components.empty())
    throw MorseError("flow_stops: word has a closed component");
  const RotationalReport rot = check_rotational(w);
  if (!rot.pass) throw MorseError("flow_stops: word is not rotational");

  std::map<int, int> crossing_index;  // layer -> index into trace.crossings
  for (size_t k = 0; k < trace.crossings.size(); ++k)
    crossing_index[trace.crossings[k].layer] = static_cast<int>(k);

  std::vector<std::vector<FlowStop>> stops(
      static_cast<size_t>(trace.components.component_count));
  const int top_level = static_cast<int>(w.layers.size());
  const long step_budget =
      4L * (static_cast<long>(w.layers.size()) + 1) *
      (static_cast<long>(w.bottom.size()) + 2 * w.layers.size() + 2);

  for (size_t j = 0; j < w.bottom.size(); ++j) {
    const int comp = trace.components.bottom_component[j];
    auto& out = stops[static_cast<size_t>(comp)];
    int level = 0;
    int pos = static_cast<int>(j);
    bool up = true;
    long steps = 0;
    while (true) {
      if (++steps > step_budget)
        throw MorseError("flow_stops: traversal did not terminate");
      if (up) {
        if (level == top_level) break;  // exits at the top boundary
        const Layer& l = w.layers[static_cast<size_t>(level)];
        const int c = l.column;
        switch (l.kind) {
          case GenKind::Cross:
            if (pos == c || pos == c + 1) {
              const bool entered_left = pos == c;
              const bool over = over_is_left(l) == entered_left;
              out.push_back({over ? FlowStop::Kind::OverCrossing
                                  : FlowStop::Kind::UnderCrossing,
                             crossing_index.at(level), GenKind::RotCCW});
              pos = entered_left ? c + 1 : c;
            }
            ++level;
            break;
          case GenKind::CupCW:
          case GenKind::CupCCW:
            if (pos >= c) pos += 2;
            ++level;
            break;
          case GenKind::CapCW:
          case GenKind::CapCCW: {
            const int u_leg = (l.kind == GenKind::CapCW) ? c : c + 1;
            const int d_leg = (l.kind == GenKind::CapCW) ? c + 1 : c;
            if (pos == u_leg) {
              pos = d_leg;  // turn and descend from this level
              up = false;
            } else if (pos == d_leg) {
              throw MorseError("flow_stops: walked up a descending leg");
            } else {
              if (pos > c + 1) pos -= 2;
              ++level;
            }
            break;
          }
          case GenKind::RotCW:
          case GenKind::RotCCW:
            if (pos == c)
              out.push_back({FlowStop::Kind::Rotation, 0, l.kind});
            ++level;
            break;
          default:
            ++level;
            break;
        }
      } else {
        if (level == 0)
          throw MorseError("flow_stops: descending run reached the bottom");
        const Layer& l = w.layers[static_cast<size_t>(level - 1)];
        const int c = l.column;
        if (is_cup(l.kind)) {
          const int d_leg = (l.kind == GenKind::CupCCW) ? c : c + 1;
          const int u_leg = (l.kind == GenKind::CupCCW) ? c + 1 : c;
          if (pos == d_leg) {
            pos = u_leg;  // turn and rise again from this level
            up = true;
            continue;
          }
        }
        const DownStep step = descend_layer(l, pos);
        if (step.ended_at_cup)
          throw MorseError("flow_stops: inconsistent cup encounter");
        pos = step.pos;
        --level;
      }
    }
  }
  return stops;
}

}  // namespace rotdiag
