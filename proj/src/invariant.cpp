#include "rotdiag/invariant.hpp"

#include <algorithm>
#include <sstream>

namespace rotdiag {

namespace {

// Validates `order` as a permutation of 0..n-1; empty means identity.
std::vector<int> resolve_order(const std::vector<int>& order, int n) {
  if (order.empty()) {
    std::vector<int> id(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) id[static_cast<size_t>(i)] = i;
    return id;
  }
  if (static_cast<int>(order.size()) != n)
    throw MorseError("component order: wrong length");
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (int c : order) {
    if (c < 0 || c >= n || seen[static_cast<size_t>(c)])
      throw MorseError("component order: not a permutation");
    seen[static_cast<size_t>(c)] = true;
  }
  return order;
}

void require_checked(const XCAlgebra& alg) {
  static std::map<std::string, bool> cache;
  auto it = cache.find(alg.name());
  if (it != cache.end()) {
    if (!it->second)
      throw MorseError("algebra fails XC axioms: " + alg.name());
    return;
  }
  const AxiomReport rep = check_xc_axioms(alg);
  cache[alg.name()] = rep.all_pass;
  if (!rep.all_pass)
    throw MorseError("algebra fails XC axioms: " + alg.name());
}

}  // namespace

std::vector<BeadPlacement> bead_table(const MorseWord& w) {
  std::vector<BeadPlacement> table;
  for (size_t i = 0; i < w.layers.size(); ++i) {
    const Layer& l = w.layers[i];
    if (l.kind == GenKind::Cross) {
      table.push_back({static_cast<int>(i), l.sign > 0
                                                ? BeadPlacement::Source::RPair
                                                : BeadPlacement::Source::RbarPair});
    } else if (l.kind == GenKind::RotCCW) {
      table.push_back({static_cast<int>(i), BeadPlacement::Source::Kappa});
    } else if (l.kind == GenKind::RotCW) {
      table.push_back({static_cast<int>(i), BeadPlacement::Source::KappaBar});
    }
  }
  return table;
}

CanonTensor evaluate_invariant(const MorseWord& w, const AlgebraPtr& alg,
                               const std::vector<int>& order) {
  if (!alg) throw MorseError("evaluate_invariant: null algebra");
  require_checked(*alg);

  const TraceResult trace = trace_components(w);
  const auto stops = flow_stops(w, trace);  // rejects closed/non-rotational
  const int n = trace.components.component_count;
  const std::vector<int> perm = resolve_order(order, n);

  const auto& rp = alg->r_pairs();
  const auto& rbp = alg->rbar_pairs();
  const size_t k = trace.crossings.size();
  std::vector<size_t> sizes(k);
  for (size_t c = 0; c < k; ++c) {
    sizes[c] = trace.crossings[c].sign > 0 ? rp.size() : rbp.size();
    if (sizes[c] == 0) return ct_zero(n);  // empty R: zero invariant
  }

  CanonTensor result = ct_zero(n);
  std::vector<size_t> idx(k, 0);
  while (true) {
    // One index assignment: multiply beads along each component, with the
    // bead met later in the traversal on the left.
    std::vector<Element> comp_value(static_cast<size_t>(n));
    for (int c = 0; c < n; ++c) {
      Element acc = alg->unit();
      for (const FlowStop& s : stops[static_cast<size_t>(c)]) {
        const Element* bead = nullptr;
        switch (s.kind) {
          case FlowStop::Kind::OverCrossing: {
            const CrossingInfo& x = trace.crossings[static_cast<size_t>(s.index)];
            bead = x.sign > 0 ? &rp[idx[static_cast<size_t>(s.index)]].first
                              : &rbp[idx[static_cast<size_t>(s.index)]].first;
            break;
          }
          case FlowStop::Kind::UnderCrossing: {
            const CrossingInfo& x = trace.crossings[static_cast<size_t>(s.index)];
            bead = x.sign > 0 ? &rp[idx[static_cast<size_t>(s.index)]].second
                              : &rbp[idx[static_cast<size_t>(s.index)]].second;
            break;
          }
          case FlowStop::Kind::Rotation:
            bead = s.rot_kind == GenKind::RotCCW ? &alg->kappa()
                                                 : &alg->kappa_bar();
            break;
        }
        acc = el_mul(*alg, *bead, acc);
      }
      comp_value[static_cast<size_t>(c)] = std::move(acc);
    }
    std::vector<Element> factors(static_cast<size_t>(n));
    for (int s = 0; s < n; ++s)
      factors[static_cast<size_t>(s)] =
          comp_value[static_cast<size_t>(perm[static_cast<size_t>(s)])];
    result = ct_add(result, ct_from_pure(*alg, factors));

    // Odometer over crossing term indices.
    size_t c = 0;
    while (c < k && ++idx[c] == sizes[c]) {
      idx[c] = 0;
      ++c;
    }
    if (c == k) break;
    if (k == 0) break;
  }
  return result;
}

CanonTensor toy_closed_form(const MorseWord& w, const std::vector<int>& order) {
  const TraceResult trace = trace_components(w);
  if (!trace.components.closed_components.empty())
    throw MorseError("toy_closed_form: word has a closed component");
  if (!check_rotational(w).pass)
    throw MorseError("toy_closed_form: word is not rotational");

  const int n = trace.components.component_count;
  const std::vector<int> perm = resolve_order(order, n);

  std::vector<int> over_sum(static_cast<size_t>(n), 0);
  std::vector<int> rot_sum(static_cast<size_t>(n), 0);
  for (const CrossingInfo& x : trace.crossings)
    over_sum[static_cast<size_t>(x.over_component)] += x.sign;
  for (const TurnInfo& t : trace.turns) {
    if (t.kind == GenKind::RotCCW) rot_sum[static_cast<size_t>(t.component)] += 1;
    if (t.kind == GenKind::RotCW) rot_sum[static_cast<size_t>(t.component)] -= 1;
  }

  static const RingPtr empty_ring = make_ring({}, {});
  CanonTensor t = ct_zero(n);
  std::vector<BasisLabel> key(static_cast<size_t>(n));
  for (int s = 0; s < n; ++s) {
    const int c = perm[static_cast<size_t>(s)];
    key[static_cast<size_t>(s)] = {over_sum[static_cast<size_t>(c)],
                                   ((rot_sum[static_cast<size_t>(c)] % 2) + 2) %
                                       2};
  }
  t.terms[key] = LaurentScalar::constant(empty_ring, 1);
  return t;
}

}  // namespace rotdiag
