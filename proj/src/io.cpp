#include "rotdiag/io.hpp"

#include <sstream>
#include <vector>

#include "rotdiag/normalize.hpp"

namespace rotdiag {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::string tok;
  for (char ch : line) {
    if (ch == '#') break;
    if (ch == ' ' || ch == '\t' || ch == '\r') {
      if (!tok.empty()) {
        out.push_back(tok);
        tok.clear();
      }
    } else {
      tok.push_back(ch);
    }
  }
  if (!tok.empty()) out.push_back(tok);
  return out;
}

Orient parse_orient_char(char c, int line_no) {
  if (c == 'U') return Orient::Up;
  if (c == 'D') return Orient::Down;
  std::ostringstream out;
  out << "line " << line_no << ": bad orientation character '" << c << "'";
  throw ParseError(out.str());
}

int parse_column(const std::string& tok, int line_no) {
  if (tok.empty()) throw ParseError("missing column");
  size_t pos = 0;
  int value = 0;
  try {
    value = std::stoi(tok, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != tok.size() || value < 0) {
    std::ostringstream out;
    out << "line " << line_no << ": bad column '" << tok << "'";
    throw ParseError(out.str());
  }
  return value;
}

}  // namespace

MorseWord parse_diagram(const std::string& text) {
  MorseWord w;
  bool saw_boundary = false;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::vector<std::string> toks = tokenize(line);
    if (toks.empty()) continue;
    if (!saw_boundary) {
      if (toks[0] != "IN:") {
        std::ostringstream out;
        out << "line " << line_no << ": expected 'IN:' boundary line first";
        throw ParseError(out.str());
      }
      for (size_t i = 1; i < toks.size(); ++i) {
        if (toks[i].size() != 1) {
          std::ostringstream out;
          out << "line " << line_no << ": bad orientation token '" << toks[i]
              << "'";
          throw ParseError(out.str());
        }
        w.bottom.push_back(parse_orient_char(toks[i][0], line_no));
      }
      saw_boundary = true;
      continue;
    }

    std::string name = toks[0];
    size_t next = 1;
    Layer l;
    auto need_suffix = [&](int sign) {
      std::string suffix;
      if (name.size() == 3) {
        if (next >= toks.size()) {
          std::ostringstream out;
          out << "line " << line_no << ": missing orientation suffix";
          throw ParseError(out.str());
        }
        suffix = toks[next++];
      } else {
        suffix = name.substr(3);
      }
      if (suffix.size() != 2) {
        std::ostringstream out;
        out << "line " << line_no << ": bad orientation suffix '" << suffix
            << "'";
        throw ParseError(out.str());
      }
      l = make_cross(0, sign, parse_orient_char(suffix[0], line_no),
                     parse_orient_char(suffix[1], line_no));
    };

    if (name == "IDU") {
      l = make_layer(GenKind::IdUp, 0);
    } else if (name == "IDD") {
      l = make_layer(GenKind::IdDown, 0);
    } else if (name == "CUPCW") {
      l = make_layer(GenKind::CupCW, 0);
    } else if (name == "CUPCCW") {
      l = make_layer(GenKind::CupCCW, 0);
    } else if (name == "CAPCW") {
      l = make_layer(GenKind::CapCW, 0);
    } else if (name == "CAPCCW") {
      l = make_layer(GenKind::CapCCW, 0);
    } else if (name == "ROTCW") {
      l = make_layer(GenKind::RotCW, 0);
    } else if (name == "ROTCCW") {
      l = make_layer(GenKind::RotCCW, 0);
    } else if (name == "XP") {
      l = make_cross(0, +1);
    } else if (name == "XN") {
      l = make_cross(0, -1);
    } else if (name.rfind("XPO", 0) == 0 && (name.size() == 3 || name.size() == 5)) {
      need_suffix(+1);
    } else if (name.rfind("XNO", 0) == 0 && (name.size() == 3 || name.size() == 5)) {
      need_suffix(-1);
    } else {
      std::ostringstream out;
      out << "line " << line_no << ": unknown generator token '" << name
          << "'";
      throw ParseError(out.str());
    }

    if (next >= toks.size()) {
      std::ostringstream out;
      out << "line " << line_no << ": missing column";
      throw ParseError(out.str());
    }
    l.column = parse_column(toks[next++], line_no);
    if (next != toks.size()) {
      std::ostringstream out;
      out << "line " << line_no << ": trailing tokens";
      throw ParseError(out.str());
    }
    w.layers.push_back(l);
  }
  if (!saw_boundary) throw ParseError("missing 'IN:' boundary line");
  check_well_formed(w);
  return w;
}

std::string serialize_diagram(const MorseWord& word) {
  const MorseWord w = normalize(word);
  std::ostringstream out;
  out << "IN:";
  for (Orient o : w.bottom) out << " " << (o == Orient::Up ? "U" : "D");
  out << "\n";
  for (const Layer& l : w.layers) {
    switch (l.kind) {
      case GenKind::IdUp: out << "IDU"; break;
      case GenKind::IdDown: out << "IDD"; break;
      case GenKind::CupCW: out << "CUPCW"; break;
      case GenKind::CupCCW: out << "CUPCCW"; break;
      case GenKind::CapCW: out << "CAPCW"; break;
      case GenKind::CapCCW: out << "CAPCCW"; break;
      case GenKind::RotCW: out << "ROTCW"; break;
      case GenKind::RotCCW: out << "ROTCCW"; break;
      case GenKind::Cross: {
        const bool upup = crossing_is_upup(l);
        out << (l.sign > 0 ? (upup ? "XP" : "XPO") : (upup ? "XN" : "XNO"));
        if (!upup) {
          out << (l.left_in == Orient::Up ? "U" : "D");
          out << (l.right_in == Orient::Up ? "U" : "D");
        }
        break;
      }
    }
    out << " " << l.column << "\n";
  }
  return out.str();
}

}  // namespace rotdiag
