#include "moltm/reference_tm.hpp"

#include <sstream>
#include <stdexcept>

#include "moltm/error.hpp"

namespace moltm {

const std::vector<SymbolicRule>& symbolic_rules() {
  using S = State;
  using Y = Symbol;
  static const std::vector<SymbolicRule> kRules = {
      {S::S0, Y::Zero, S::S1, Y::Blank, Move::Right},  {S::S0, Y::One, S::S2, Y::Blank, Move::Right},
      {S::S0, Y::Blank, S::Halt, std::nullopt, std::nullopt},
      {S::S1, Y::Zero, S::S0, Y::One, Move::Right},    {S::S1, Y::One, S::S0, Y::One, Move::Right},
      {S::S1, Y::Blank, S::S0, Y::Error, Move::Right}, {S::S2, Y::Zero, S::S0, Y::One, Move::Right},
      {S::S2, Y::One, S::S0, Y::Zero, Move::Right},    {S::S2, Y::Blank, S::S0, Y::Error, Move::Right},
  };
  return kRules;
}

const SymbolicRule& symbolic_rule(State s, Symbol read) {
  for (const auto& r : symbolic_rules()) {
    if (r.state == s && r.read == read) return r;
  }
  throw std::out_of_range(std::string("no rule for ") + to_string(s) + " reading " + label(read));
}

SymbolicRun run_symbolic(const std::string& a, const std::string& b) {
  SymbolicRun run;
  run.tape = interleave_inputs(a, b, true);
  State state = State::S0;
  std::size_t head = 0;
  bool materialized = false;
  while (state != State::Halt) {
    materialized = head == run.tape.size();
    if (materialized) run.tape.push_back(Symbol::Blank);
    const Symbol read = run.tape[head];
    if (read == Symbol::Error) throw InvariantViolation("symbolic machine read an error cell");
    const SymbolicRule& r = symbolic_rule(state, read);
    ++run.transitions;
    state = r.next;
    if (!r.write) break;
    run.tape[head] = *r.write;
    ++head;
  }
  // The blank the halting rule read is not part of the written tape.
  if (materialized) run.tape.pop_back();
  run.output = output_bits(run.tape);
  run.errored = contains_error(run.tape);
  return run;
}

std::string nand_oracle(const std::string& a, const std::string& b) {
  parse_bits(a);
  parse_bits(b);
  if (a.size() != b.size()) throw LengthMismatch("NAND needs equal-length inputs");
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) out += (a[i] == '1' && b[i] == '1') ? '0' : '1';
  return out;
}

std::vector<std::string> bit_strings(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t v = 0; v < (std::size_t{1} << n); ++v) {
    std::string s(n, '0');
    for (std::size_t i = 0; i < n; ++i) {
      if (v & (std::size_t{1} << (n - 1 - i))) s[i] = '1';
    }
    out.push_back(s);
  }
  return out;
}

namespace {

std::string describe_run(const std::string& output, bool errored) {
  return output + (errored ? " (errored)" : "");
}

}  // namespace

EquivalenceReport check_equivalence(const BaseAssignment& a, std::size_t max_len, EquivalenceOptions opts) {
  EquivalenceReport report;
  const auto setup = MachineSetup::make(a, opts.variant);
  RunOptions run_opts;
  run_opts.variant = opts.variant;
  run_opts.allow_unequal = true;
  run_opts.step.record_renderings = false;

  for (std::size_t la = 0; la <= max_len; ++la) {
    for (std::size_t lb = 0; lb <= max_len; ++lb) {
      if (la != lb && !opts.include_unequal) continue;
      for (const auto& x : bit_strings(la)) {
        for (const auto& y : bit_strings(lb)) {
          (la == lb ? report.equal_pairs : report.unequal_pairs) += 1;
          const SymbolicRun sym = run_symbolic(x, y);
          Divergence d{x, y, "", describe_run(sym.output, sym.errored), la == lb ? nand_oracle(x, y) : "-", ""};
          bool agree = true;
          try {
            const RunResult mol = run(setup, x, y, run_opts);
            d.molecular = describe_run(mol.output, mol.errored);
            std::vector<Symbol> written(mol.symbols.begin() + (mol.symbols.empty() ? 0 : 1), mol.symbols.end());
            if (mol.symbols.empty() || mol.symbols.front() != Symbol::Blank) {
              agree = false;
              d.detail = "readout does not start with the leading blank";
            } else if (written != sym.tape) {
              agree = false;
              d.detail = "tape " + glyphs(written) + " vs symbolic " + glyphs(sym.tape);
            }
            if (mol.output != sym.output || mol.errored != sym.errored) agree = false;
            if (la == lb && mol.output != d.oracle) agree = false;
          } catch (const Error& e) {
            agree = false;
            d.molecular = std::string("error: ") + e.what();
          }
          if (la == lb && sym.output != d.oracle) agree = false;
          if (agree) {
            ++report.agreeing;
          } else {
            report.divergences.push_back(std::move(d));
          }
        }
      }
    }
  }
  return report;
}

std::string format_report(const EquivalenceReport& r) {
  std::ostringstream out;
  const std::size_t equal_agree = r.equal_pairs - [&] {
    std::size_t n = 0;
    for (const auto& d : r.divergences) n += d.a.size() == d.b.size();
    return n;
  }();
  out << equal_agree << '/' << r.equal_pairs << " equal-length pairs agree";
  if (r.unequal_pairs > 0) {
    out << ", " << (r.agreeing - equal_agree) << '/' << r.unequal_pairs << " unequal-length pairs agree";
  }
  out << '\n';
  for (const auto& d : r.divergences) {
    out << "diverges a=\"" << d.a << "\" b=\"" << d.b << "\" molecular=" << d.molecular << " symbolic=" << d.symbolic
        << " oracle=" << d.oracle;
    if (!d.detail.empty()) out << " (" << d.detail << ')';
    out << '\n';
  }
  return out.str();
}

}  // namespace moltm
