#include "rotdiag/morse.hpp"

#include <sstream>

namespace rotdiag {

namespace {

std::string orient_name(Orient o) { return o == Orient::Up ? "Up" : "Down"; }

std::string kind_name(GenKind k) {
  switch (k) {
    case GenKind::IdUp: return "IdUp";
    case GenKind::IdDown: return "IdDown";
    case GenKind::CupCW: return "CupCW";
    case GenKind::CupCCW: return "CupCCW";
    case GenKind::CapCW: return "CapCW";
    case GenKind::CapCCW: return "CapCCW";
    case GenKind::Cross: return "Cross";
    case GenKind::RotCW: return "RotCW";
    case GenKind::RotCCW: return "RotCCW";
  }
  return "?";
}

[[noreturn]] void layer_error(int layer_index, const std::string& msg) {
  std::ostringstream out;
  out << "layer " << layer_index << ": " << msg;
  throw MorseError(out.str());
}

void expect_orient(const std::vector<Orient>& strands, int column,
                   Orient want, int layer_index, const char* role) {
  if (strands[static_cast<size_t>(column)] != want) {
    std::ostringstream out;
    out << role << " strand at column " << column << " is "
        << orient_name(strands[static_cast<size_t>(column)]) << ", expected "
        << orient_name(want);
    layer_error(layer_index, out.str());
  }
}

}  // namespace

Layer make_cross(int column, int sign, Orient left_in, Orient right_in) {
  Layer l;
  l.kind = GenKind::Cross;
  l.column = column;
  l.sign = sign;
  l.left_in = left_in;
  l.right_in = right_in;
  return l;
}

Layer make_layer(GenKind kind, int column) {
  Layer l;
  l.kind = kind;
  l.column = column;
  return l;
}

int input_arity(GenKind k) {
  switch (k) {
    case GenKind::CupCW:
    case GenKind::CupCCW: return 0;
    case GenKind::CapCW:
    case GenKind::CapCCW: return 2;
    case GenKind::Cross: return 2;
    default: return 1;
  }
}

int output_arity(GenKind k) {
  switch (k) {
    case GenKind::CupCW:
    case GenKind::CupCCW: return 2;
    case GenKind::CapCW:
    case GenKind::CapCCW: return 0;
    case GenKind::Cross: return 2;
    default: return 1;
  }
}

bool is_cup(GenKind k) { return k == GenKind::CupCW || k == GenKind::CupCCW; }
bool is_cap(GenKind k) { return k == GenKind::CapCW || k == GenKind::CapCCW; }
bool is_rot(GenKind k) { return k == GenKind::RotCW || k == GenKind::RotCCW; }
bool is_identity(GenKind k) {
  return k == GenKind::IdUp || k == GenKind::IdDown;
}

bool crossing_is_upup(const Layer& l) {
  return l.kind == GenKind::Cross && l.left_in == Orient::Up &&
         l.right_in == Orient::Up;
}

bool over_is_left(const Layer& l) {
  if (l.kind != GenKind::Cross) throw MorseError("over_is_left: not a crossing");
  return (l.sign > 0) == (l.left_in == l.right_in);
}

void apply_layer(std::vector<Orient>& strands, const Layer& l,
                 int layer_index) {
  const int width = static_cast<int>(strands.size());
  const int in = input_arity(l.kind);
  if (l.column < 0 || l.column + in > width ||
      (in == 0 && l.column > width)) {
    std::ostringstream out;
    out << kind_name(l.kind) << " at column " << l.column
        << " does not fit width " << width;
    layer_error(layer_index, out.str());
  }
  const size_t c = static_cast<size_t>(l.column);
  switch (l.kind) {
    case GenKind::IdUp:
      expect_orient(strands, l.column, Orient::Up, layer_index, "identity");
      break;
    case GenKind::IdDown:
      expect_orient(strands, l.column, Orient::Down, layer_index, "identity");
      break;
    case GenKind::CupCW:
      strands.insert(strands.begin() + static_cast<long>(c),
                     {Orient::Up, Orient::Down});
      break;
    case GenKind::CupCCW:
      strands.insert(strands.begin() + static_cast<long>(c),
                     {Orient::Down, Orient::Up});
      break;
    case GenKind::CapCW:
      expect_orient(strands, l.column, Orient::Up, layer_index, "cap left");
      expect_orient(strands, l.column + 1, Orient::Down, layer_index,
                    "cap right");
      strands.erase(strands.begin() + static_cast<long>(c),
                    strands.begin() + static_cast<long>(c) + 2);
      break;
    case GenKind::CapCCW:
      expect_orient(strands, l.column, Orient::Down, layer_index, "cap left");
      expect_orient(strands, l.column + 1, Orient::Up, layer_index,
                    "cap right");
      strands.erase(strands.begin() + static_cast<long>(c),
                    strands.begin() + static_cast<long>(c) + 2);
      break;
    case GenKind::Cross: {
      if (l.sign != 1 && l.sign != -1)
        layer_error(layer_index, "crossing sign must be +1 or -1");
      expect_orient(strands, l.column, l.left_in, layer_index,
                    "crossing left");
      expect_orient(strands, l.column + 1, l.right_in, layer_index,
                    "crossing right");
      std::swap(strands[c], strands[c + 1]);
      break;
    }
    case GenKind::RotCW:
    case GenKind::RotCCW:
      expect_orient(strands, l.column, Orient::Up, layer_index, "rotation");
      break;
  }
}

void check_well_formed(const MorseWord& w) { (void)top_boundary(w); }

std::vector<std::vector<Orient>> level_orientations(const MorseWord& w) {
  std::vector<std::vector<Orient>> levels;
  levels.reserve(w.layers.size() + 1);
  std::vector<Orient> cur = w.bottom;
  levels.push_back(cur);
  for (size_t i = 0; i < w.layers.size(); ++i) {
    apply_layer(cur, w.layers[i], static_cast<int>(i));
    levels.push_back(cur);
  }
  return levels;
}

std::vector<Orient> top_boundary(const MorseWord& w) {
  std::vector<Orient> cur = w.bottom;
  for (size_t i = 0; i < w.layers.size(); ++i) {
    apply_layer(cur, w.layers[i], static_cast<int>(i));
  }
  return cur;
}

MorseWord compose(const MorseWord& lower, const MorseWord& upper) {
  if (top_boundary(lower) != upper.bottom)
    throw MorseError("compose: boundary mismatch");
  MorseWord r = lower;
  r.layers.insert(r.layers.end(), upper.layers.begin(), upper.layers.end());
  return r;
}

MorseWord tensor(const MorseWord& left, const MorseWord& right) {
  check_well_formed(left);
  check_well_formed(right);
  MorseWord r;
  r.bottom = left.bottom;
  r.bottom.insert(r.bottom.end(), right.bottom.begin(), right.bottom.end());
  r.layers = left.layers;
  // Right-hand layers run above the left-hand ones, shifted by the width of
  // the left word at its top (constant once all left layers have acted).
  const int offset = static_cast<int>(top_boundary(left).size());
  for (Layer l : right.layers) {
    l.column += offset;
    r.layers.push_back(l);
  }
  check_well_formed(r);
  return r;
}

MorseWord close_partial(const MorseWord& w, Side side, int m) {
  if (m < 0) throw MorseError("close_partial: negative arc count");
  if (m == 0) return w;
  const std::vector<Orient> top = top_boundary(w);
  const int nb = static_cast<int>(w.bottom.size());
  const int nt = static_cast<int>(top.size());
  if (m > nb || m > nt)
    throw MorseError("close_partial: not enough endpoints to close");
  auto bottom_at = [&](int j) {
    return side == Side::Left ? w.bottom[static_cast<size_t>(j)]
                              : w.bottom[static_cast<size_t>(nb - 1 - j)];
  };
  auto top_at = [&](int j) {
    return side == Side::Left ? top[static_cast<size_t>(j)]
                              : top[static_cast<size_t>(nt - 1 - j)];
  };
  for (int j = 0; j < m; ++j) {
    if (bottom_at(j) != Orient::Up || top_at(j) != Orient::Up)
      throw MorseError("close_partial: closed endpoints must be Up");
  }

  MorseWord r;
  if (side == Side::Left) {
    r.bottom.assign(w.bottom.begin() + m, w.bottom.end());
    // Nested cups: the bottom-most cup serves the innermost closed endpoint
    // (index m-1); each later cup is inserted inside the previous pair.
    for (int j = m - 1; j >= 0; --j)
      r.layers.push_back(make_layer(GenKind::CupCCW, m - 1 - j));
    for (Layer l : w.layers) {
      l.column += m;
      r.layers.push_back(l);
    }
    for (int j = 0; j < m; ++j)
      r.layers.push_back(make_layer(GenKind::CapCCW, m - 1 - j));
  } else {
    r.bottom.assign(w.bottom.begin(), w.bottom.end() - m);
    for (int j = m - 1; j >= 0; --j)
      r.layers.push_back(make_layer(GenKind::CupCW, nb - m + (m - 1 - j)));
    r.layers.insert(r.layers.end(), w.layers.begin(), w.layers.end());
    for (int j = 0; j < m; ++j)
      r.layers.push_back(make_layer(GenKind::CapCW, nt - 1 - j));
  }
  check_well_formed(r);
  return r;
}

std::vector<Layer> shift_layers(const std::vector<Layer>& layers, int delta) {
  std::vector<Layer> r = layers;
  for (Layer& l : r) l.column += delta;
  return r;
}

}  // namespace rotdiag
