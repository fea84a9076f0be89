#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace moltm {

enum class EventKind { Cleave, Activate, Insert, Excise, Circularize, Halt };

const char* to_string(EventKind k) noexcept;

/// One reaction in the soup. `before` is the stock transition for Activate
/// and the released fragment for Excise; otherwise both sides describe the
/// main molecule.
struct ReactionEvent {
  std::size_t index = 0;
  std::size_t step = 0;
  EventKind kind = EventKind::Cleave;
  std::string subject;  // site, transition name, or excised segment
  std::size_t before_bp = 0;
  std::size_t after_bp = 0;
  std::string before_render;
  std::string after_render;
  std::string layout;  // segment layout of the main molecule after the event
  // Conservation ledger after the event, in nucleotides:
  // main + loose + waste - drawn equals the starting tape.
  std::size_t main_nt = 0;
  std::size_t loose_nt = 0;
  std::size_t waste_nt = 0;
  std::size_t drawn_nt = 0;

  friend bool operator==(const ReactionEvent&, const ReactionEvent&) = default;
};

using ReactionTrace = std::vector<ReactionEvent>;

enum class TraceFormat { Text, Structured };

/// Renders one line per event; `full` appends both two-row renderings under
/// each event. Output is stable for golden-file comparison.
std::string format_trace(const ReactionTrace& trace, TraceFormat format = TraceFormat::Text, bool full = false);

/// Checks the event grammar of a trace: every step is
///   Cleave Cleave Excise Activate Insert (Cleave Cleave Excise Circularize | Halt)
/// and only the last step halts. Throws InvariantViolation.
void check_trace_shape(const ReactionTrace& trace);

}  // namespace moltm
