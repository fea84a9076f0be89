#include "moltm/symbols.hpp"

#include <algorithm>

#include "moltm/error.hpp"

namespace moltm {

const char* glyph(Symbol s) noexcept {
  switch (s) {
    case Symbol::Zero: return "0";
    case Symbol::One: return "1";
    case Symbol::Blank: return "β";
    case Symbol::Error: return "ε";
  }
  return "?";
}

const char* label(Symbol s) noexcept {
  switch (s) {
    case Symbol::Zero: return "0";
    case Symbol::One: return "1";
    case Symbol::Blank: return "blank";
    case Symbol::Error: return "error";
  }
  return "?";
}

const char* to_string(State s) noexcept {
  switch (s) {
    case State::S0: return "S0";
    case State::S1: return "S1";
    case State::S2: return "S2";
    case State::Halt: return "HALT";
  }
  return "?";
}

std::string parse_bits(std::string_view text) {
  for (char c : text) {
    if (c != '0' && c != '1') throw ParseError("input must contain only 0 and 1: '" + std::string(text) + "'");
  }
  return std::string(text);
}

namespace {

Symbol bit(char c) { return c == '1' ? Symbol::One : Symbol::Zero; }

}  // namespace

std::vector<Symbol> interleave_inputs(std::string_view a, std::string_view b, bool allow_unequal) {
  parse_bits(a);
  parse_bits(b);
  if (a.size() != b.size() && !allow_unequal) {
    throw LengthMismatch("inputs differ in length: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
  }
  std::vector<Symbol> cells;
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (i < a.size() && i < b.size()) {
      cells.push_back(bit(a[i]));
      cells.push_back(bit(b[i]));
    } else {
      cells.push_back(bit(i < a.size() ? a[i] : b[i]));
      cells.push_back(Symbol::Blank);
    }
  }
  return cells;
}

std::string output_bits(const std::vector<Symbol>& symbols) {
  std::string out;
  for (Symbol s : symbols) {
    if (s == Symbol::Zero) out += '0';
    if (s == Symbol::One) out += '1';
  }
  return out;
}

bool contains_error(const std::vector<Symbol>& symbols) {
  return std::find(symbols.begin(), symbols.end(), Symbol::Error) != symbols.end();
}

std::string glyphs(const std::vector<Symbol>& symbols) {
  std::string out;
  for (Symbol s : symbols) out += glyph(s);
  return out;
}

}  // namespace moltm
