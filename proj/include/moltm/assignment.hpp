#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "moltm/strand.hpp"
#include "moltm/symbols.hpp"

namespace moltm {

/// Spacer fills of one transition molecule. Slot lengths are fixed by the
/// transition's layout (see transition_blueprints()); the halting transition
/// only uses `pre_bbvi`.
struct TransitionFill {
  BaseSeq pre_bseri;  // 6 nt between the written symbol's suffix and BserI
  BaseSeq post_foki;  // 3, 4 or 5 nt after FokI; selects the next state
  BaseSeq pre_bpmi;   // 12 nt before the facing BpmI pair
  BaseSeq post_bpmi;  // 8 nt between BpmI and the read-symbol payload
  BaseSeq pre_bbvi;   // 6, 7 or 8 nt before BbvI; selects the read frame

  friend bool operator==(const TransitionFill&, const TransitionFill&) = default;
};

/// Concrete bases for every abstract nucleotide family of the machine.
struct BaseAssignment {
  std::array<BaseSeq, 4> payload;  // 6 nt per symbol, indexed by Symbol
  BaseSeq suffix;                   // 4 nt delimiter after every payload
  BaseSeq halt;                     // detection segment carried by T3
  BaseSeq head_pre_bseri;           // 6 nt before BserI on a fresh tape
  BaseSeq head_post_foki;           // 9 nt after FokI on a fresh tape
  std::array<TransitionFill, 9> transitions;  // T1..T9
  std::uint64_t seed = 0;

  const BaseSeq& payload_of(Symbol s) const { return payload[static_cast<int>(s)]; }
  const TransitionFill& fill(int transition_number) const { return transitions.at(transition_number - 1); }

  friend bool operator==(const BaseAssignment&, const BaseAssignment&) = default;
};

/// The part of an assignment needed to read symbols off a molecule.
struct SymbolEncoding {
  std::array<BaseSeq, 4> payload;
  BaseSeq suffix;

  static SymbolEncoding of(const BaseAssignment& a) { return {a.payload, a.suffix}; }
  const BaseSeq& payload_of(Symbol s) const { return payload[static_cast<int>(s)]; }
};

/// Line-oriented text: `label: BASES`, one per line, `#` comments allowed.
std::string format_assignment(const BaseAssignment& a);
BaseAssignment parse_assignment(std::string_view text);  // throws ParseError
BaseAssignment load_assignment(const std::string& path);
void save_assignment(const BaseAssignment& a, const std::string& path);

/// The shipped assignment every golden trace is recorded against.
const BaseAssignment& default_assignment();
std::string_view default_assignment_text();

}  // namespace moltm
