#include "rotdiag/match.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>

#include "rotdiag/normalize.hpp"
#include "rotdiag/trace.hpp"

namespace rotdiag {

namespace {

bool layer_matches(const Layer& wl, const Layer& pl, int t) {
  return wl.kind == pl.kind && wl.column == pl.column + t &&
         wl.sign == pl.sign && wl.left_in == pl.left_in &&
         wl.right_in == pl.right_in;
}

// Extends a match of P at (anchor, t), assuming the anchor layer realises
// P's first layer.  Walks upward matching pattern layers in order.  Every
// other layer inside the range must either stay beside the pattern's column
// strip [t, t + width) without shifting it, or -- when it keeps the strand
// count -- be commutable below the whole selection: its column interval must
// be disjoint from every selected layer beneath it, so the rewrite can drop
// it under the replacement block unchanged (up to the column shift of any
// selected extremum acting to its left).
std::optional<std::vector<std::size_t>> scan_from(const MorseWord& W,
                                                  const MorseWord& P,
                                                  std::size_t anchor, int t) {
  std::vector<std::size_t> sel;
  // Column footprint of the selected layers so far, for the commute test:
  // (column, input arity, output arity).
  std::vector<std::array<int, 3>> footprint;
  int width = static_cast<int>(P.bottom.size());
  std::size_t p = 0;
  for (std::size_t j = anchor; j < W.layers.size() && p < P.layers.size();
       ++j) {
    const Layer& L = W.layers[j];
    if (layer_matches(L, P.layers[p], t)) {
      sel.push_back(j);
      footprint.push_back(
          {L.column, input_arity(L.kind), output_arity(L.kind)});
      width += output_arity(L.kind) - input_arity(L.kind);
      ++p;
      continue;
    }
    int in_a = input_arity(L.kind);
    if (in_a == 0) {
      // A cup inserting at or beyond the strip's right edge is beside the
      // pattern; anywhere else it either interleaves the strip or shifts it.
      if (L.column >= t + width) continue;
      return std::nullopt;
    }
    if (L.column >= t + width) continue;  // beside, right
    if (L.column + in_a <= t) {
      // Beside on the left: harmless only if it keeps the strand count.
      if (output_arity(L.kind) == in_a) continue;
      return std::nullopt;
    }
    // Overlaps the strip.  A strand-count-preserving layer may still slide
    // below the selection when it touches none of the selected layers under
    // it: a cup conflicts on the columns it creates, a cap pinches the seam
    // at its column, anything width-preserving conflicts on plain overlap.
    if (output_arity(L.kind) != in_a) return std::nullopt;
    for (const std::array<int, 3>& S : footprint) {
      int sc = S[0], s_in = S[1], s_out = S[2];
      bool conflict;
      if (s_out > s_in)
        conflict = sc < L.column + in_a && L.column < sc + s_out;
      else if (s_out < s_in)
        conflict = L.column < sc && sc < L.column + in_a;
      else
        conflict = sc < L.column + in_a && L.column < sc + s_in;
      if (conflict) return std::nullopt;
    }
  }
  if (p < P.layers.size()) return std::nullopt;
  return sel;
}

bool bottom_fits(const MorseWord& P, const std::vector<Orient>& row, int t) {
  if (t < 0) return false;
  if (static_cast<std::size_t>(t) + P.bottom.size() > row.size()) return false;
  return std::equal(P.bottom.begin(), P.bottom.end(), row.begin() + t);
}

std::string no_self_writhe_change(const std::map<int, int>& a,
                                  const std::map<int, int>& b, int slack) {
  std::map<int, int> delta;
  for (const auto& [c, v] : a) delta[c] += v;
  for (const auto& [c, v] : b) delta[c] -= v;
  int changed = 0;
  for (const auto& [c, d] : delta) {
    if (d == 0) continue;
    if (std::abs(d) != 1)
      return "component " + std::to_string(c) + " self-writhe moved by " +
             std::to_string(d);
    ++changed;
  }
  if (changed != slack)
    return std::to_string(changed) + " self-writhes moved, expected " +
           std::to_string(slack);
  return "";
}

}  // namespace

const MorseWord& rule_side(const MoveRule& r, Direction d) {
  return d == Direction::Fwd ? r.lhs : r.rhs;
}

std::vector<MatchSite> find_matches(const MorseWord& w, const MoveRule& r,
                                    Direction d) {
  MorseWord W = normalize(w);
  MorseWord P = normalize(rule_side(r, d));
  std::vector<std::vector<Orient>> rows = level_orientations(W);
  std::vector<MatchSite> out;
  if (P.layers.empty()) {
    // A pure boundary pattern matches at every row where its strand strip
    // appears; the anchor names the row.
    for (std::size_t a = 0; a < rows.size(); ++a)
      for (std::size_t off = 0; off + P.bottom.size() <= rows[a].size(); ++off)
        if (bottom_fits(P, rows[a], static_cast<int>(off)))
          out.push_back({a, static_cast<int>(off), {}});
    return out;
  }
  const Layer& p0 = P.layers[0];
  for (std::size_t a = 0; a < W.layers.size(); ++a) {
    int t = W.layers[a].column - p0.column;
    if (t < 0 || !layer_matches(W.layers[a], p0, t)) continue;
    if (!bottom_fits(P, rows[a], t)) continue;
    std::optional<std::vector<std::size_t>> sel = scan_from(W, P, a, t);
    if (sel) out.push_back({a, t, std::move(*sel)});
  }
  return out;
}

MorseWord apply_move(const MorseWord& w, const MoveRule& r, Direction d,
                     const MatchSite& site) {
  MorseWord W = normalize(w);
  MorseWord P = normalize(rule_side(r, d));
  MorseWord T =
      normalize(rule_side(r, d == Direction::Fwd ? Direction::Bwd
                                                 : Direction::Fwd));
  std::vector<std::vector<Orient>> rows = level_orientations(W);
  const int t = site.column_offset;

  // Re-embed the site before touching anything; a site computed against a
  // different word (or an outdated normal form) must fail loudly.
  std::vector<std::size_t> sel;
  if (P.layers.empty()) {
    bool ok = site.layer_selection.empty() &&
              site.anchor_layer < rows.size() &&
              bottom_fits(P, rows[site.anchor_layer], t);
    if (!ok)
      throw MatchError(
          "stale match site: pattern no longer embeds at the given position");
  } else {
    std::optional<std::vector<std::size_t>> s;
    if (site.anchor_layer < W.layers.size() && t >= 0 &&
        layer_matches(W.layers[site.anchor_layer], P.layers[0], t) &&
        bottom_fits(P, rows[site.anchor_layer], t))
      s = scan_from(W, P, site.anchor_layer, t);
    if (!s || *s != site.layer_selection)
      throw MatchError(
          "stale match site: pattern no longer embeds at the given position");
    sel = std::move(*s);
  }

  // Replace the selection: layers below the anchor stay; unselected layers
  // inside the match range drop below the replacement (they commute with the
  // selection, as the scan established; a layer right of the strip is re-read
  // in anchor-row coordinates by undoing the strip's width changes, and a
  // layer inside the strip undoes the shifts of selected extrema to its
  // left); the target side goes in translated; everything above is untouched
  // (both sides of a rule span the same boundary, so upper columns keep
  // meaning).
  MorseWord result;
  result.bottom = W.bottom;
  std::size_t cut = P.layers.empty() ? site.anchor_layer : sel.front();
  result.layers.assign(W.layers.begin(), W.layers.begin() + cut);
  std::size_t resume = cut;
  if (!sel.empty()) {
    int delta = 0;  // net strand change of selected layers passed so far
    std::vector<std::pair<int, int>> passed;  // (column, out - in) of those
    std::size_t si = 0;
    for (std::size_t j = sel.front(); j <= sel.back(); ++j) {
      if (si < sel.size() && sel[si] == j) {
        int d_arity =
            output_arity(W.layers[j].kind) - input_arity(W.layers[j].kind);
        delta += d_arity;
        passed.emplace_back(W.layers[j].column, d_arity);
        ++si;
        continue;
      }
      Layer L = W.layers[j];
      int width = static_cast<int>(P.bottom.size()) + delta;
      if (L.column >= t + width) {
        L.column -= delta;
      } else if (L.column + input_arity(L.kind) > t) {
        int shift = 0;
        for (const std::pair<int, int>& s : passed)
          if (s.first <= L.column) shift += s.second;
        L.column -= shift;
      }
      result.layers.push_back(L);
    }
    resume = sel.back() + 1;
  }
  for (const Layer& L : shift_layers(T.layers, t)) result.layers.push_back(L);
  result.layers.insert(result.layers.end(), W.layers.begin() + resume,
                       W.layers.end());
  check_well_formed(result);

  // A rewrite is only a rewrite if the rest of the diagram kept its shape.
  if (top_boundary(result) != top_boundary(W))
    throw MatchError("rewrite changed the top boundary");
  if (trace_components(W).components.boundary_connections !=
      trace_components(result).components.boundary_connections)
    throw MatchError("rewrite changed the boundary connections");
  DiagramInvariants before = diagram_invariants(W);
  DiagramInvariants after = diagram_invariants(result);
  int dcc = std::abs(after.crossing_count - before.crossing_count);
  int want_dcc = 0;
  int self_slack = 0;
  switch (r.family) {
    case MoveFamily::O0:
    case MoveFamily::O1f:
    case MoveFamily::O3:
    case MoveFamily::Aux: break;
    case MoveFamily::O1: want_dcc = 1; self_slack = 1; break;
    case MoveFamily::O2: want_dcc = 2; break;
  }
  if (dcc != want_dcc)
    throw MatchError("rewrite moved the crossing count by " +
                     std::to_string(dcc) + ", rule family allows " +
                     std::to_string(want_dcc));
  std::string sw =
      no_self_writhe_change(before.self_writhe, after.self_writhe, self_slack);
  if (!sw.empty())
    throw MatchError("rewrite broke the self-writhe delta: " + sw);
  if (before.mixed_writhe != after.mixed_writhe)
    throw MatchError("rewrite changed a mixed writhe");
  return normalize(result);
}

}  // namespace rotdiag
