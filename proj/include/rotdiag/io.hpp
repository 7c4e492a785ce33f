#pragma once
// Plain-text diagram format.  First significant line declares the bottom
// boundary ("IN:" followed by U/D tokens); each further line places one
// generator: a token and a 0-based column.  '#' starts a comment, blank
// lines are skipped.  Crossing tokens: XP/XN for the upward-upward crossings,
// XPO/XNO with a two-letter orientation suffix (UU, UD, DU, DD) for general
// ones; the suffix may also be written as a separate word, and XPOUU/XNOUU
// are accepted as aliases of XP/XN.  The serializer always emits the
// normalized word, so parse(serialize(w)) round-trips canonically.

#include <string>

#include "rotdiag/morse.hpp"

namespace rotdiag {

class ParseError : public MorseError {
 public:
  explicit ParseError(const std::string& what) : MorseError(what) {}
};

MorseWord parse_diagram(const std::string& text);
std::string serialize_diagram(const MorseWord& w);

}  // namespace rotdiag
