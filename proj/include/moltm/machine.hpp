#pragma once

// The molecular NAND machine: tape and transition molecules built from a base
// assignment, and the scheduler that drives the main molecule through
// cleavage, activation, insertion and excision until it halts.

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "moltm/assignment.hpp"
#include "moltm/enzyme.hpp"
#include "moltm/layout.hpp"
#include "moltm/strand.hpp"
#include "moltm/symbols.hpp"
#include "moltm/trace.hpp"

namespace moltm {

inline constexpr std::size_t kPayloadLength = 6;
inline constexpr std::size_t kSuffixLength = 4;
inline constexpr std::size_t kHaltLength = 12;
inline constexpr std::size_t kHeadPreLength = 6;
inline constexpr std::size_t kHeadPostLength = 9;
inline constexpr std::size_t kPreBserILength = 6;
inline constexpr std::size_t kPreBpmILength = 12;
inline constexpr std::size_t kPostBpmILength = 8;

/// The molecular form of one transition rule. The FokI spacer fixes the
/// frame the next cut exposes (5 → S0, 4 → S1, 3 → S2); the BbvI spacer
/// fixes the frame the core recognizes (6 → S0, 7 → S1, 8 → S2).
struct TransitionBlueprint {
  int number = 0;  // 1..9
  State state = State::S0;
  Symbol read = Symbol::Zero;
  State next = State::S0;
  std::optional<Symbol> write;  // empty for the halting transition
  std::size_t foki_spacer = 0;  // 0 for the halting transition
  std::size_t bbvi_spacer = 0;

  bool halts() const noexcept { return next == State::Halt; }
  std::string name() const { return "T" + std::to_string(number); }
};

const std::array<TransitionBlueprint, 9>& transition_blueprints();

/// Frame exposed by FokI, and recognized by BbvI cores, in a given state.
std::size_t frame_offset(State s);
std::size_t foki_spacer_for(State next);
std::size_t bbvi_spacer_for(State s);

/// Throws InvalidAssignment if any slot has the wrong length or the payloads
/// are not pairwise distinct.
void check_assignment_shape(const BaseAssignment& a);

enum class TransitionVariant {
  Standard,    // T8 reads 1 and writes 0
  T8CopiesT7,  // T8 built as a copy of T7
};

struct TransitionMolecule {
  TransitionBlueprint rule;
  Molecule molecule;
  Layout layout;  // designed segment layout
};

/// T1..T9 as blunt linear duplexes.
std::vector<TransitionMolecule> build_transitions(const BaseAssignment& a,
                                                  TransitionVariant variant = TransitionVariant::Standard);

/// A transition after BsrDI and BbvI digestion: the core that inserts into
/// the tape gap plus the two caps that go to waste.
struct ActivatedTransition {
  TransitionBlueprint rule;
  Molecule source;
  Molecule core;
  std::vector<Molecule> caps;
};

ActivatedTransition activate(const TransitionMolecule& t);

struct TapeOptions {
  bool allow_unequal = false;
};

/// Tape cells for inputs a and b; see interleave_inputs.
std::vector<Symbol> tape_cells(const std::string& a, const std::string& b, TapeOptions opts = {});

/// Designed layout of a fresh tape read from just after its FokI site.
Layout tape_layout(const std::vector<Symbol>& cells);

/// Circular starting configuration: a leading blank and suffix, the head
/// region (spacer, BserI, FokI, spacer), then one payload plus suffix per
/// cell. Throws InvalidAssignment if the tape does not carry exactly one
/// FokI and one BserI site and nothing else from Φ, or LengthMismatch.
Molecule build_tape(const BaseAssignment& a, const std::string& a_bits, const std::string& b_bits,
                    TapeOptions opts = {});
Molecule build_tape_from_cells(const BaseAssignment& a, const std::vector<Symbol>& cells);

/// Decodes the state and symbol from a 4-nt 5' overhang exposed by FokI.
/// Throws UnrecognizedFrame when no frame or more than one matches.
std::pair<State, Symbol> infer_state(const StickyEnd& end, const SymbolEncoding& enc);

/// Reads the halted ring as payload+suffix words starting just after HALT.
/// Throws MissingHalt or UndecodableSegment.
std::vector<Symbol> readout(const Molecule& m, const SymbolEncoding& enc, const BaseSeq& halt);
std::vector<Symbol> readout(const Molecule& m, const BaseAssignment& a);

/// Everything a run needs that does not change between steps.
struct MachineSetup {
  BaseAssignment assignment;
  TransitionVariant variant = TransitionVariant::Standard;
  std::vector<TransitionMolecule> transitions;
  // Activated cores, deduplicated by exact base content.
  std::vector<ActivatedTransition> cores;

  static std::shared_ptr<const MachineSetup> make(const BaseAssignment& a,
                                                  TransitionVariant variant = TransitionVariant::Standard);
};

struct StepOptions {
  bool strict = true;  // raise on any ambiguity instead of choosing
  bool record_renderings = true;
  LigationPolicy ligation{};
};

/// The reaction vessel. The main molecule is circular between steps.
struct Soup {
  std::shared_ptr<const MachineSetup> setup;
  Molecule main;
  std::vector<Molecule> loose;  // activated cores awaiting insertion
  std::vector<Molecule> waste;
  ReactionTrace trace;
  BaseCounts initial{};
  BaseCounts drawn{};  // bases taken from the transition stock
  std::size_t steps = 0;
  bool halted = false;
  StepOptions options;
};

Soup make_soup(std::shared_ptr<const MachineSetup> setup, Molecule tape, StepOptions options = {});

/// One full machine step. Throws NoMatchingTransition, AmbiguousTransition,
/// AmbiguityError, UnrecognizedFrame or InvariantViolation.
Soup step(Soup soup);

struct RunOptions {
  TransitionVariant variant = TransitionVariant::Standard;
  bool allow_unequal = false;
  StepOptions step{};
  std::optional<std::size_t> step_budget;  // default 4(n+1)
};

struct RunResult {
  std::vector<Symbol> symbols;  // readout, leading blank included
  std::string output;           // {0,1} subsequence
  bool errored = false;         // an error symbol was written
  std::size_t steps = 0;
  ReactionTrace trace;
  std::optional<Molecule> final_molecule;
};

std::size_t default_step_budget(std::size_t n);

RunResult run(const BaseAssignment& a, const std::string& a_bits, const std::string& b_bits, RunOptions opts = {});
RunResult run(std::shared_ptr<const MachineSetup> setup, const std::string& a_bits, const std::string& b_bits,
              RunOptions opts = {});

/// Site census over Φ: raw recognition counts per enzyme name.
std::vector<std::pair<std::string, std::size_t>> site_census(const Molecule& m);

}  // namespace moltm
