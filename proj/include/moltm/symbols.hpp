#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace moltm {

/// Tape alphabet {0, 1, blank, error}.
enum class Symbol { Zero, One, Blank, Error };
inline constexpr std::array<Symbol, 4> kAllSymbols = {Symbol::Zero, Symbol::One, Symbol::Blank, Symbol::Error};

enum class State { S0, S1, S2, Halt };

/// "0", "1", "β", "ε".
const char* glyph(Symbol s) noexcept;
/// Short ASCII label used in file formats: "0", "1", "blank", "error".
const char* label(Symbol s) noexcept;
const char* to_string(State s) noexcept;

/// Validates a string of '0'/'1' characters; throws ParseError otherwise.
std::string parse_bits(std::string_view text);

/// Writes inputs a and b interleaved as a1 b1 a2 b2 ...
///
/// With equal lengths this is the plain interleaving. When `allow_unequal`
/// is set, a pair with one member missing is written as (present bit, blank),
/// so the machine meets a blank in state S1 or S2 and marks the cell with the
/// error symbol. Unequal lengths without the flag throw LengthMismatch.
std::vector<Symbol> interleave_inputs(std::string_view a, std::string_view b, bool allow_unequal = false);

/// The {0,1} subsequence of a symbol list, as a bit string.
std::string output_bits(const std::vector<Symbol>& symbols);
bool contains_error(const std::vector<Symbol>& symbols);
std::string glyphs(const std::vector<Symbol>& symbols);

}  // namespace moltm
