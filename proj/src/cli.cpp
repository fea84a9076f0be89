#include "moltm/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "moltm/assignment.hpp"
#include "moltm/design.hpp"
#include "moltm/error.hpp"
#include "moltm/layout.hpp"
#include "moltm/machine.hpp"
#include "moltm/reference_tm.hpp"

namespace moltm::cli {

namespace {

struct Config {
  std::string a;
  std::string b;
  std::string assignment_path;
  std::string out_path;
  std::string format = "text";
  std::uint64_t seed = 7;
  std::size_t max_len = 3;
  std::size_t check_len = 4;
  bool allow_unequal = false;
  bool lenient = false;
  bool full = false;
  bool t8_copies_t7 = false;
  bool transitions = false;
};

const CLI::Validator kBits(
    [](std::string& s) {
      return std::all_of(s.begin(), s.end(), [](char c) { return c == '0' || c == '1'; })
                 ? std::string()
                 : "must contain only 0 and 1";
    },
    "BITS");

BaseAssignment load(const Config& c) {
  return c.assignment_path.empty() ? default_assignment() : load_assignment(c.assignment_path);
}

RunOptions run_options(const Config& c) {
  RunOptions o;
  o.variant = c.t8_copies_t7 ? TransitionVariant::T8CopiesT7 : TransitionVariant::Standard;
  o.allow_unequal = c.allow_unequal;
  o.step.strict = !c.lenient;
  return o;
}

TraceFormat trace_format(const Config& c) { return c.format == "structured" ? TraceFormat::Structured : TraceFormat::Text; }

int cmd_run(const Config& c, std::ostream& out) {
  const RunResult r = run(load(c), c.a, c.b, run_options(c));
  if (c.format == "structured") {
    out << "result output=" << (r.output.empty() ? "-" : r.output) << " errored=" << (r.errored ? "true" : "false")
        << " steps=" << r.steps << " tape=" << glyphs(r.symbols) << '\n';
  } else {
    out << "output: " << r.output << '\n'
        << "errored: " << (r.errored ? "yes" : "no") << '\n'
        << "steps: " << r.steps << '\n'
        << "tape: " << glyphs(r.symbols) << '\n';
  }
  if (c.full) out << format_trace(r.trace, trace_format(c), true);
  return kOk;
}

int cmd_trace(const Config& c, std::ostream& out) {
  const RunResult r = run(load(c), c.a, c.b, run_options(c));
  out << format_trace(r.trace, trace_format(c), c.full);
  return kOk;
}

int cmd_verify(const Config& c, std::ostream& out) {
  EquivalenceOptions o;
  o.variant = c.t8_copies_t7 ? TransitionVariant::T8CopiesT7 : TransitionVariant::Standard;
  o.include_unequal = c.allow_unequal;
  const EquivalenceReport r = check_equivalence(load(c), c.max_len, o);
  out << format_report(r);
  return r.ok() ? kOk : kVerificationFailed;
}

int cmd_design(const Config& c, std::ostream& out) {
  DesignOptions o;
  o.max_len = c.check_len;
  const BaseAssignment a = design(c.seed, o);
  const VerificationReport r = verify_assignment(a, c.check_len);
  if (c.out_path.empty()) {
    out << format_assignment(a);
  } else {
    save_assignment(a, c.out_path);
    out << "wrote " << c.out_path << '\n';
  }
  out << format_verification(r);
  return r.ok() ? kOk : kVerificationFailed;
}

int cmd_verify_assignment(const Config& c, std::ostream& out) {
  const VerificationReport r = verify_assignment(load(c), c.check_len);
  out << format_verification(r);
  return r.ok() ? kOk : kVerificationFailed;
}

int cmd_render(const Config& c, std::ostream& out) {
  const BaseAssignment a = load(c);
  if (c.transitions) {
    const auto variant = c.t8_copies_t7 ? TransitionVariant::T8CopiesT7 : TransitionVariant::Standard;
    for (const auto& t : build_transitions(a, variant)) {
      const ActivatedTransition act = activate(t);
      out << t.rule.name() << ' ' << to_string(t.rule.state) << ' ' << glyph(t.rule.read) << " -> "
          << to_string(t.rule.next);
      if (t.rule.write) out << ' ' << glyph(*t.rule.write);
      out << '\n' << layout_string(t.layout) << '\n' << render(t.molecule) << '\n';
      out << "core:\n" << render(act.core) << "\n\n";
    }
    return kOk;
  }
  const Molecule tape = build_tape(a, c.a, c.b, {c.allow_unequal});
  out << layout_string(describe_layout(tape, a)) << '\n' << render(tape) << '\n';
  return kOk;
}

}  // namespace

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Molecular NAND Turing machine simulator", "moltm"};
  app.require_subcommand(1);

  auto inputs = [&](CLI::App* sub) {
    sub->add_option("--a", c.a, "first input bits")->check(kBits);
    sub->add_option("--b", c.b, "second input bits")->check(kBits);
    sub->add_flag("--allow-unequal", c.allow_unequal, "accept inputs of different lengths");
  };
  auto assignment = [&](CLI::App* sub) {
    sub->add_option("--assignment", c.assignment_path, "assignment file (default: shipped assignment)");
  };
  auto machine = [&](CLI::App* sub) {
    sub->add_flag("--lenient", c.lenient, "choose the first candidate instead of failing on ambiguity");
    sub->add_flag("--t8-copies-t7", c.t8_copies_t7, "build T8 as a copy of T7");
    sub->add_option("--format", c.format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
    sub->add_flag("--full", c.full, "include two-row renderings");
  };

  auto* run_cmd = app.add_subcommand("run", "run the machine on one input pair");
  inputs(run_cmd);
  assignment(run_cmd);
  machine(run_cmd);

  auto* trace_cmd = app.add_subcommand("trace", "print the reaction trace of one run");
  inputs(trace_cmd);
  assignment(trace_cmd);
  machine(trace_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "compare molecular, symbolic and NAND results exhaustively");
  assignment(verify_cmd);
  verify_cmd->add_option("--max-len", c.max_len, "largest input length");
  verify_cmd->add_flag("--t8-copies-t7", c.t8_copies_t7, "build T8 as a copy of T7");
  verify_cmd->add_flag("--allow-unequal", c.allow_unequal, "also check unequal-length pairs");

  auto* design_cmd = app.add_subcommand("design", "search for a valid base assignment");
  design_cmd->add_option("--seed", c.seed, "search seed");
  design_cmd->add_option("--check-len", c.check_len, "input length the assignment is verified to");
  design_cmd->add_option("--out", c.out_path, "write the assignment here instead of stdout");

  auto* va_cmd = app.add_subcommand("verify-assignment", "check an assignment for stray sites and collisions");
  assignment(va_cmd);
  va_cmd->add_option("--check-len", c.check_len, "input length to check tapes and runs up to");

  auto* render_cmd = app.add_subcommand("render", "show a tape or the transition molecules");
  inputs(render_cmd);
  assignment(render_cmd);
  render_cmd->add_flag("--transitions", c.transitions, "render T1..T9 and their activated cores");
  render_cmd->add_flag("--t8-copies-t7", c.t8_copies_t7, "build T8 as a copy of T7");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << app.help();
    return kUsage;
  }

  try {
    if (run_cmd->parsed()) return cmd_run(c, out);
    if (trace_cmd->parsed()) return cmd_trace(c, out);
    if (verify_cmd->parsed()) return cmd_verify(c, out);
    if (design_cmd->parsed()) return cmd_design(c, out);
    if (va_cmd->parsed()) return cmd_verify_assignment(c, out);
    if (render_cmd->parsed()) return cmd_render(c, out);
  } catch (const LengthMismatch& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const SearchExhausted& e) {
    err << "search exhausted: " << e.what() << '\n';
    return kSearchExhausted;
  } catch (const MachineError& e) {
    err << "machine error: " << e.what() << '\n';
    return kMachineError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kMachineError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kOther;
  }
  return kUsage;
}

}  // namespace moltm::cli
