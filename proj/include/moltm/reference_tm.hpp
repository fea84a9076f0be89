#pragma once

// The symbolic NAND Turing machine, the truth-table oracle, and cross-checks
// of molecular runs against both.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "moltm/assignment.hpp"
#include "moltm/machine.hpp"
#include "moltm/symbols.hpp"

namespace moltm {

enum class Move { Right };

struct SymbolicRule {
  State state;
  Symbol read;
  State next;
  std::optional<Symbol> write;  // empty on halt
  std::optional<Move> move;     // empty on halt
};

/// The nine rules, total on {S0,S1,S2} x {0,1,blank}.
const std::vector<SymbolicRule>& symbolic_rules();

/// Throws std::out_of_range for an undefined (state, symbol), e.g. any error read.
const SymbolicRule& symbolic_rule(State s, Symbol read);

struct SymbolicRun {
  std::vector<Symbol> tape;  // materialized cells after the run
  std::string output;        // {0,1} subsequence of the tape
  bool errored = false;
  std::size_t transitions = 0;  // halting transition included
};

/// Runs the machine from S0 over the interleaved tape. Unequal lengths are
/// accepted and padded as interleave_inputs does.
SymbolicRun run_symbolic(const std::string& a, const std::string& b);

/// Elementwise NOT(a AND b). Throws LengthMismatch.
std::string nand_oracle(const std::string& a, const std::string& b);

struct Divergence {
  std::string a;
  std::string b;
  std::string molecular;  // output, "error: ..." or with an " (errored)" flag
  std::string symbolic;
  std::string oracle;     // "-" for unequal lengths
  std::string detail;
};

struct EquivalenceOptions {
  TransitionVariant variant = TransitionVariant::Standard;
  bool include_unequal = false;
};

struct EquivalenceReport {
  std::size_t equal_pairs = 0;  // equal-length pairs checked, empty pair included
  std::size_t unequal_pairs = 0;
  std::size_t agreeing = 0;
  std::vector<Divergence> divergences;

  bool ok() const noexcept { return divergences.empty(); }
};

/// All bit strings of length exactly n, in lexicographic order.
std::vector<std::string> bit_strings(std::size_t n);

/// Runs every input pair with lengths up to max_len on the molecular
/// machine and the symbolic machine, and equal-length pairs on the oracle.
/// Molecular runs must match the symbolic tape cell for cell.
EquivalenceReport check_equivalence(const BaseAssignment& a, std::size_t max_len, EquivalenceOptions opts = {});

std::string format_report(const EquivalenceReport& r);

}  // namespace moltm
