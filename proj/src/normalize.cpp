#include "rotdiag/normalize.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace rotdiag {

namespace {

// One adjacent downward swap of the mover at index i, passing on the chosen
// side of the layer below it.  Returns false when that side is blocked.
// Passing on the left leaves the mover's column alone and shifts the other
// layer by the mover's width change; passing on the right re-expresses the
// mover's column in the other layer's input row.
bool swap_down(std::vector<Layer>& v, size_t i, bool right_side) {
  const Layer lower = v[i - 1];
  const Layer mover = v[i];
  const int m_in = input_arity(mover.kind);
  if (right_side) {
    if (mover.column < lower.column + output_arity(lower.kind)) return false;
    Layer moved = mover;
    moved.column -= output_arity(lower.kind) - input_arity(lower.kind);
    v[i - 1] = moved;
    v[i] = lower;
  } else {
    if (mover.column + (m_in == 0 ? 0 : m_in) > lower.column) return false;
    Layer raised = lower;
    raised.column += output_arity(mover.kind) - input_arity(mover.kind);
    v[i - 1] = mover;
    v[i] = raised;
  }
  return true;
}

// Collects every stack obtainable by bubbling the layer at index j down to
// the front.  Usually at most one side is open at each step, but a cup aimed
// exactly at a cap's column may pass on either side of the cap's doomed
// strands; both forks are explored so no spelling of the remainder is missed.
void descend_all(const std::vector<Layer>& layers, size_t j,
                 std::set<std::vector<Layer>>& out) {
  if (j == 0) {
    out.insert(layers);
    return;
  }
  std::vector<Layer> branch = layers;
  if (swap_down(branch, j, /*right_side=*/false)) descend_all(branch, j - 1, out);
  branch = layers;
  if (swap_down(branch, j, /*right_side=*/true)) descend_all(branch, j - 1, out);
}

// Total order on layers used by the normal form.  Consumers (caps) sort
// before producers (cups) at equal column: a cup aimed at a gap next to a
// cap's doomed strands can be written on either side of them, and emitting
// the cap first collapses both spellings to one.
int kind_rank(GenKind k) {
  switch (k) {
    case GenKind::Cross: return 0;
    case GenKind::CapCW: return 1;
    case GenKind::CapCCW: return 2;
    case GenKind::RotCW: return 3;
    case GenKind::RotCCW: return 4;
    case GenKind::CupCW: return 5;
    case GenKind::CupCCW: return 6;
    case GenKind::IdUp: return 7;
    case GenKind::IdDown: return 8;
  }
  return 9;
}

using LayerKey = std::array<int, 5>;

LayerKey layer_key(const Layer& l, int col) {
  return {col, kind_rank(l.kind), -l.sign, static_cast<int>(l.left_in),
          static_cast<int>(l.right_in)};
}

bool word_less(const std::vector<Layer>& a, const std::vector<Layer>& b) {
  const size_t n = std::min(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    const LayerKey ka = layer_key(a[i], a[i].column);
    const LayerKey kb = layer_key(b[i], b[i].column);
    if (ka != kb) return ka < kb;
  }
  return a.size() < b.size();
}

std::string layers_cache_key(const std::vector<Layer>& v) {
  std::string s;
  for (const Layer& l : v) {
    s += std::to_string(static_cast<int>(l.kind));
    s += ',';
    s += std::to_string(l.column);
    s += ',';
    s += std::to_string(l.sign);
    s += ',';
    s += std::to_string(static_cast<int>(l.left_in));
    s += std::to_string(static_cast<int>(l.right_in));
    s += ';';
  }
  return s;
}

// True when the stack holds at least one cup and at least one cap.  The two
// counts are preserved by interchanges, so the test is constant on every
// interchange class and can safely steer which canonicalization runs.  Mixing
// the two extremum kinds is exactly what lets a layer get "pocketed": a cup
// can sit between strands that a cap above it later merges, and freeing it
// requires moving the cap first, a reordering that no single-layer descent
// discovers.  Stacks with at most one extremum kind cannot form such pockets,
// because strands then only ever split or only ever merge.
bool mixes_cups_and_caps(const std::vector<Layer>& layers) {
  bool cup = false;
  bool cap = false;
  for (const Layer& l : layers) {
    cup = cup || is_cup(l.kind);
    cap = cap || is_cap(l.kind);
  }
  return cup && cap;
}

// Exhaustive fallback: the lexicographically least member of the whole
// interchange orbit, explored by adjacent swaps on both admissible sides.
// Used for words that mix cups with caps, whose pocketed spellings defeat
// front-first recursion.  Exhaustive search is exact on every class; the
// size cap guards against pathological words with many independent layers.
std::vector<Layer> orbit_least(const std::vector<Layer>& start) {
  constexpr size_t kOrbitCap = 500000;
  std::unordered_set<std::string> seen{layers_cache_key(start)};
  std::vector<std::vector<Layer>> pending{start};
  std::vector<Layer> best = start;
  while (!pending.empty()) {
    const std::vector<Layer> cur = std::move(pending.back());
    pending.pop_back();
    if (word_less(cur, best)) best = cur;
    for (size_t i = 1; i < cur.size(); ++i) {
      for (const bool right_side : {false, true}) {
        std::vector<Layer> next = cur;
        if (!swap_down(next, i, right_side)) continue;
        if (!seen.insert(layers_cache_key(next)).second) continue;
        if (seen.size() > kOrbitCap)
          throw MorseError("interchange class too large to canonicalize");
        pending.push_back(std::move(next));
      }
    }
  }
  return best;
}

// Lexicographically least reordering of the layer stack reachable by
// interchanges.  Every layer that can be bubbled to the front is tried, on
// every admissible descent path; among the outcomes whose front layer has the
// least key, each remainder is completed recursively and the least completed
// word kept.  Sound for words whose extrema are all of one kind: with strands
// that only split (cups) or only merge (caps), whether two layers commute is
// determined by the strands they touch and never by the spelling, so every
// reachable front layer is found by descending it alone.
std::vector<Layer> least_reordering(
    std::vector<Layer> layers,
    std::map<std::string, std::vector<Layer>>& cache) {
  if (layers.empty()) return layers;
  const std::string key = layers_cache_key(layers);
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  bool have_key = false;
  LayerKey best_key{};
  std::set<std::vector<Layer>> chosen;
  for (size_t j = 0; j < layers.size(); ++j) {
    std::set<std::vector<Layer>> results;
    descend_all(layers, j, results);
    for (const std::vector<Layer>& r : results) {
      const LayerKey cand = layer_key(r.front(), r.front().column);
      if (!have_key || cand < best_key) {
        have_key = true;
        best_key = cand;
        chosen.clear();
        chosen.insert(r);
      } else if (cand == best_key) {
        chosen.insert(r);
      }
    }
  }

  std::vector<Layer> best;
  for (const std::vector<Layer>& r : chosen) {
    std::vector<Layer> rest(r.begin() + 1, r.end());
    std::vector<Layer> completed = least_reordering(std::move(rest), cache);
    completed.insert(completed.begin(), r.front());
    if (best.empty() || word_less(completed, best)) best = std::move(completed);
  }
  cache[key] = best;
  return best;
}

// Canonical spelling of one chunk's layer stack, in chunk-local columns.
// Chunks that mix cups with caps need the exhaustive orbit; the rest are
// handled by the cheaper front-first recursion.
std::vector<Layer> least_chunk(std::vector<Layer> layers) {
  if (layers.size() < 2) return layers;
  if (mixes_cups_and_caps(layers)) return orbit_least(layers);
  std::map<std::string, std::vector<Layer>> cache;
  return least_reordering(std::move(layers), cache);
}

// A word whose pieces all reach the bottom row splits into independent
// chunks: the connected components of the relation "two layers touch a
// common strand", plus one chunk per untouched bottom strand.  Strands of
// one chunk always form a contiguous block of columns (an arc bridging a
// live foreign strand would need its feet adjacent, which they never are),
// and the blocks keep their left-to-right order in every spelling, so each
// chunk can be canonicalized on its own and the results merged.
struct ChunkSplit {
  bool needs_whole_orbit = false;     // some piece never reaches the bottom
  std::vector<int> block_sizes;       // strands per block, left to right
  std::vector<std::vector<Layer>> chunk_layers;  // chunk-local columns
};

ChunkSplit split_chunks(const MorseWord& w) {
  ChunkSplit out;
  int next_id = static_cast<int>(w.bottom.size());
  std::vector<int> parent(static_cast<size_t>(next_id));
  for (int i = 0; i < next_id; ++i) parent[static_cast<size_t>(i)] = i;
  auto find = [&](int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] =
          parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<size_t>(b)] = a;
  };

  // First pass: assign strand ids, union strands that share a layer, and
  // remember one strand touched by each layer.
  std::vector<int> row(w.bottom.size());
  for (size_t i = 0; i < row.size(); ++i) row[i] = static_cast<int>(i);
  std::vector<int> touched;
  touched.reserve(w.layers.size());
  for (const Layer& l : w.layers) {
    const size_t c = static_cast<size_t>(l.column);
    if (is_cup(l.kind)) {
      const int a = next_id++;
      const int b = next_id++;
      parent.push_back(a);
      parent.push_back(b);
      unite(a, b);
      row.insert(row.begin() + static_cast<long>(c), {a, b});
      touched.push_back(a);
    } else if (is_cap(l.kind)) {
      touched.push_back(row[c]);
      unite(row[c], row[c + 1]);
      row.erase(row.begin() + static_cast<long>(c),
                row.begin() + static_cast<long>(c) + 2);
    } else if (l.kind == GenKind::Cross) {
      touched.push_back(row[c]);
      unite(row[c], row[c + 1]);
      std::swap(row[c], row[c + 1]);
    } else {
      touched.push_back(row[c]);
    }
  }
  for (size_t i = 0; i < w.layers.size(); ++i) {
    if (find(touched[i]) >= static_cast<int>(w.bottom.size())) {
      // The chunk's root is a cup-born strand, so no strand of the chunk
      // lies in the bottom row; such a piece can dive below its neighbours
      // and slide sideways, which only the whole-word orbit handles.
      bool anchored = false;
      for (size_t s = 0; s < w.bottom.size(); ++s)
        anchored = anchored || find(static_cast<int>(s)) == find(touched[i]);
      if (!anchored) {
        out.needs_whole_orbit = true;
        return out;
      }
    }
  }

  // Blocks in bottom-row order.
  std::vector<int> block_of_root;
  std::vector<int> roots;
  auto block_index = [&](int root) {
    for (size_t b = 0; b < roots.size(); ++b)
      if (roots[b] == root) return static_cast<int>(b);
    roots.push_back(root);
    out.block_sizes.push_back(0);
    out.chunk_layers.emplace_back();
    return static_cast<int>(roots.size()) - 1;
  };
  for (size_t s = 0; s < w.bottom.size(); ++s)
    out.block_sizes[static_cast<size_t>(block_index(find(static_cast<int>(s))))]++;

  // Second pass: express each layer's column relative to its own chunk by
  // counting only same-chunk strands to its left.
  std::vector<int> comp_row(w.bottom.size());
  for (size_t i = 0; i < comp_row.size(); ++i)
    comp_row[i] = find(static_cast<int>(i));
  for (size_t i = 0; i < w.layers.size(); ++i) {
    Layer l = w.layers[i];
    const size_t c = static_cast<size_t>(l.column);
    const int root = find(touched[i]);
    int rel = 0;
    for (size_t p = 0; p < c; ++p)
      if (comp_row[p] == root) ++rel;
    l.column = rel;
    out.chunk_layers[static_cast<size_t>(block_index(root))].push_back(l);
    if (is_cup(l.kind)) {
      comp_row.insert(comp_row.begin() + static_cast<long>(c), {root, root});
    } else if (is_cap(l.kind)) {
      comp_row.erase(comp_row.begin() + static_cast<long>(c),
                     comp_row.begin() + static_cast<long>(c) + 2);
    }
  }
  return out;
}

// Interleaves the chunks' canonical stacks into the least global word.  At
// every step the heads of all chunks are compared at their absolute columns
// (chunk-local column plus the widths of the blocks to the left) and the
// least one is emitted; block widths then track the emitted layer's arity.
// Heads of distinct chunks always differ in column, so the choice is strict,
// and replacing any chunk's subsequence or deferring the least head would
// produce a lexicographically larger word.
std::vector<Layer> merge_chunks(ChunkSplit split) {
  std::vector<size_t> head(split.chunk_layers.size(), 0);
  std::vector<Layer> out;
  for (;;) {
    int best_block = -1;
    Layer best{};
    LayerKey best_key{};
    int offset = 0;
    for (size_t b = 0; b < split.chunk_layers.size(); ++b) {
      if (head[b] < split.chunk_layers[b].size()) {
        Layer cand = split.chunk_layers[b][head[b]];
        cand.column += offset;
        const LayerKey key = layer_key(cand, cand.column);
        if (best_block < 0 || key < best_key) {
          best_block = static_cast<int>(b);
          best = cand;
          best_key = key;
        }
      }
      offset += split.block_sizes[b];
    }
    if (best_block < 0) break;
    out.push_back(best);
    head[static_cast<size_t>(best_block)]++;
    split.block_sizes[static_cast<size_t>(best_block)] +=
        output_arity(best.kind) - input_arity(best.kind);
  }
  return out;
}

}  // namespace

bool try_interchange(MorseWord& w, size_t i) {
  if (i + 1 >= w.layers.size()) return false;
  const Layer lower = w.layers[i];
  const Layer upper = w.layers[i + 1];
  const int u_in = input_arity(upper.kind);
  const bool upper_left =
      upper.column + (u_in == 0 ? 0 : u_in) <= lower.column;
  const bool upper_right =
      upper.column >= lower.column + output_arity(lower.kind);
  if (!upper_left && !upper_right) return false;

  Layer new_lower = upper;
  Layer new_upper = lower;
  if (upper_left) {
    // The lower layer now sits above the upper one's width change.
    new_upper.column += output_arity(upper.kind) - input_arity(upper.kind);
  } else {
    // The upper layer drops below the lower one's width change.
    new_lower.column -=
        output_arity(lower.kind) - input_arity(lower.kind);
  }
  w.layers[i] = new_lower;
  w.layers[i + 1] = new_upper;
  return true;
}

MorseWord strip_identities(const MorseWord& w) {
  MorseWord r;
  r.bottom = w.bottom;
  for (const Layer& l : w.layers)
    if (!is_identity(l.kind)) r.layers.push_back(l);
  return r;
}

MorseWord normalize(const MorseWord& w) {
  check_well_formed(w);
  MorseWord cur = strip_identities(w);

  // Rewriting workloads normalize the same words over and over; remember
  // finished answers across calls.
  static thread_local std::unordered_map<std::string, std::vector<Layer>> memo;
  const std::string memo_key =
      std::to_string(w.bottom.size()) + '|' + layers_cache_key(cur.layers);
  if (auto it = memo.find(memo_key); it != memo.end()) {
    cur.layers = it->second;
    return cur;
  }

  ChunkSplit split = split_chunks(cur);
  if (split.needs_whole_orbit) {
    cur.layers = orbit_least(cur.layers);
  } else {
    for (std::vector<Layer>& chunk : split.chunk_layers)
      chunk = least_chunk(std::move(chunk));
    cur.layers = merge_chunks(std::move(split));
  }
  check_well_formed(cur);
  if (memo.size() > 100000) memo.clear();
  memo[memo_key] = cur.layers;
  return cur;
}

bool equivalent(const MorseWord& a, const MorseWord& b) {
  return normalize(a) == normalize(b);
}

}  // namespace rotdiag
