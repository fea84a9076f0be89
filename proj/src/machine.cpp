#include "moltm/machine.hpp"

#include <algorithm>
#include <array>

#include "moltm/error.hpp"

namespace moltm {

namespace {

using Rule = TransitionBlueprint;

constexpr std::array<Rule, 9> kRules = {{
    {1, State::S0, Symbol::Zero, State::S1, Symbol::Blank, 4, 6},
    {2, State::S0, Symbol::One, State::S2, Symbol::Blank, 3, 6},
    {3, State::S0, Symbol::Blank, State::Halt, std::nullopt, 0, 6},
    {4, State::S1, Symbol::Zero, State::S0, Symbol::One, 5, 7},
    {5, State::S1, Symbol::One, State::S0, Symbol::One, 5, 7},
    {6, State::S1, Symbol::Blank, State::S0, Symbol::Error, 5, 7},
    {7, State::S2, Symbol::Zero, State::S0, Symbol::One, 5, 8},
    {8, State::S2, Symbol::One, State::S0, Symbol::Zero, 5, 8},
    {9, State::S2, Symbol::Blank, State::S0, Symbol::Error, 5, 8},
}};

const EnzymeSpec& enzyme(const char* name) { return standard_enzyme(name); }

EnzymeSet only(const char* name) { return {enzyme(name)}; }

std::string symbol_token(Symbol s) { return "6_" + std::string(glyph(s)); }

void add(BaseCounts& acc, const BaseCounts& x, long sign = 1) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += sign * x[i];
}

long total(const BaseCounts& c) {
  long t = 0;
  for (long x : c) t += x;
  return t;
}

void expect_length(const BaseSeq& s, std::size_t n, const std::string& what) {
  if (s.size() != n) {
    throw InvalidAssignment(what + " must be " + std::to_string(n) + " nt, got " + std::to_string(s.size()));
  }
}

}  // namespace

const std::array<TransitionBlueprint, 9>& transition_blueprints() { return kRules; }

std::size_t frame_offset(State s) {
  switch (s) {
    case State::S0: return 0;
    case State::S1: return 1;
    case State::S2: return 2;
    case State::Halt: break;
  }
  throw std::invalid_argument("the halting state has no frame");
}

std::size_t foki_spacer_for(State next) { return 5 - frame_offset(next); }
std::size_t bbvi_spacer_for(State s) { return 6 + frame_offset(s); }

void check_assignment_shape(const BaseAssignment& a) {
  for (Symbol s : kAllSymbols) expect_length(a.payload_of(s), kPayloadLength, std::string("payload ") + label(s));
  for (std::size_t i = 0; i < a.payload.size(); ++i) {
    for (std::size_t j = i + 1; j < a.payload.size(); ++j) {
      if (a.payload[i] == a.payload[j]) throw InvalidAssignment("two symbols share a payload");
    }
  }
  expect_length(a.suffix, kSuffixLength, "suffix");
  expect_length(a.halt, kHaltLength, "halt");
  expect_length(a.head_pre_bseri, kHeadPreLength, "head.pre_bseri");
  expect_length(a.head_post_foki, kHeadPostLength, "head.post_foki");
  for (const Rule& r : kRules) {
    const TransitionFill& f = a.fill(r.number);
    const std::string p = r.name() + ".";
    expect_length(f.pre_bbvi, r.bbvi_spacer, p + "pre_bbvi");
    if (r.halts()) continue;
    expect_length(f.pre_bseri, kPreBserILength, p + "pre_bseri");
    expect_length(f.post_foki, r.foki_spacer, p + "post_foki");
    expect_length(f.pre_bpmi, kPreBpmILength, p + "pre_bpmi");
    expect_length(f.post_bpmi, kPostBpmILength, p + "post_bpmi");
  }
}

std::vector<TransitionMolecule> build_transitions(const BaseAssignment& a, TransitionVariant variant) {
  check_assignment_shape(a);
  const BaseSeq& bsrdi = enzyme("BsrDI").recognition;
  const BaseSeq& bserI = enzyme("BserI").recognition;
  const BaseSeq& foki = enzyme("FokI").recognition;
  const BaseSeq& bpmi = enzyme("BpmI").recognition;
  const BaseSeq& bbvi = enzyme("BbvI").recognition;
  const BaseSeq bpmi_pair = reverse_complement(bpmi) + bpmi;

  std::vector<TransitionMolecule> out;
  for (Rule r : kRules) {
    TransitionFill f = a.fill(r.number);
    if (variant == TransitionVariant::T8CopiesT7 && r.number == 8) {
      // An exact copy of T7, spacer bases included.
      const Rule& t7 = kRules[6];
      r.read = t7.read;
      r.write = t7.write;
      f = a.fill(7);
    }
    const BaseSeq& read = a.payload_of(r.read);
    BaseSeq top;
    Layout layout;
    if (r.halts()) {
      top = bsrdi + a.suffix + a.halt + read + f.pre_bbvi + bbvi;
      layout = {"BsrDI", "4_F", "HALT", symbol_token(r.read), std::to_string(r.bbvi_spacer), "BbvI"};
    } else {
      top = bsrdi + a.suffix + a.payload_of(*r.write) + a.suffix + f.pre_bseri + bserI + foki + f.post_foki +
            a.suffix + f.pre_bpmi + bpmi_pair + f.post_bpmi + read + f.pre_bbvi + bbvi;
      layout = {"BsrDI",
                "4_F",
                symbol_token(*r.write),
                "4_F",
                std::to_string(kPreBserILength),
                "BserI",
                "FokI",
                std::to_string(r.foki_spacer),
                "4_F",
                std::to_string(kPreBpmILength),
                "BpmI",
                "BpmI",
                std::to_string(kPostBpmILength),
                symbol_token(r.read),
                std::to_string(r.bbvi_spacer),
                "BbvI"};
    }
    out.push_back({r, make_blunt_duplex(top), std::move(layout)});
  }
  return out;
}

ActivatedTransition activate(const TransitionMolecule& t) {
  auto left = digest_step(t.molecule, only("BsrDI"));
  if (!left || left->fragments.size() != 2) throw InvariantViolation(t.rule.name() + ": BsrDI activation failed");
  auto right = digest_step(left->fragments[1], only("BbvI"));
  if (!right || right->fragments.size() != 2) throw InvariantViolation(t.rule.name() + ": BbvI activation failed");
  return {t.rule, t.molecule, right->fragments[0], {left->fragments[0], right->fragments[1]}};
}

std::vector<Symbol> tape_cells(const std::string& a, const std::string& b, TapeOptions opts) {
  return interleave_inputs(a, b, opts.allow_unequal);
}

Layout tape_layout(const std::vector<Symbol>& cells) {
  Layout out = {std::to_string(kHeadPostLength)};
  for (Symbol s : cells) {
    out.push_back(symbol_token(s));
    out.push_back("4_F");
  }
  for (const char* t : {"6_β", "4_F", "6", "BserI", "FokI"}) out.emplace_back(t);
  return out;
}

std::vector<std::pair<std::string, std::size_t>> site_census(const Molecule& m) {
  std::vector<std::pair<std::string, std::size_t>> out;
  for (const auto& e : standard_enzymes()) out.emplace_back(e.name, count_recognition(m, e));
  return out;
}

namespace {

std::size_t census_of(const std::vector<std::pair<std::string, std::size_t>>& census, const std::string& name) {
  for (const auto& [n, c] : census) {
    if (n == name) return c;
  }
  return 0;
}

bool census_is(const Molecule& m, std::size_t foki, std::size_t bseri, std::size_t bpmi, std::size_t bsrdi,
               std::size_t bbvi) {
  const auto c = site_census(m);
  return census_of(c, "FokI") == foki && census_of(c, "BserI") == bseri && census_of(c, "BpmI") == bpmi &&
         census_of(c, "BsrDI") == bsrdi && census_of(c, "BbvI") == bbvi;
}

std::string census_string(const Molecule& m) {
  std::string out;
  for (const auto& [name, count] : site_census(m)) {
    if (!out.empty()) out += ' ';
    out += name + "=" + std::to_string(count);
  }
  return out;
}

}  // namespace

Molecule build_tape_from_cells(const BaseAssignment& a, const std::vector<Symbol>& cells) {
  check_assignment_shape(a);
  BaseSeq ring = a.payload_of(Symbol::Blank) + a.suffix + a.head_pre_bseri + enzyme("BserI").recognition +
                 enzyme("FokI").recognition + a.head_post_foki;
  for (Symbol s : cells) ring += a.payload_of(s) + a.suffix;
  Molecule tape = Molecule::circular(ring);
  if (!census_is(tape, 1, 1, 0, 0, 0)) {
    throw InvalidAssignment("tape carries unintended sites: " + census_string(tape));
  }
  return tape;
}

Molecule build_tape(const BaseAssignment& a, const std::string& a_bits, const std::string& b_bits, TapeOptions opts) {
  return build_tape_from_cells(a, tape_cells(a_bits, b_bits, opts));
}

std::pair<State, Symbol> infer_state(const StickyEnd& end, const SymbolEncoding& enc) {
  if (end.polarity != Polarity::FivePrime || end.overhang.size() != 4) {
    throw UnrecognizedFrame("expected a 4-nt 5' overhang");
  }
  std::vector<std::pair<State, Symbol>> matches;
  for (State s : {State::S0, State::S1, State::S2}) {
    for (Symbol sym : kAllSymbols) {
      if (enc.payload_of(sym).substr(frame_offset(s), 4) == end.overhang) matches.emplace_back(s, sym);
    }
  }
  if (matches.empty()) throw UnrecognizedFrame("overhang " + end.overhang.str() + " matches no frame");
  // The error symbol is never read, so its frames only break ties.
  std::vector<std::pair<State, Symbol>> readable;
  for (const auto& m : matches) {
    if (m.second != Symbol::Error) readable.push_back(m);
  }
  if (readable.size() == 1) return readable.front();
  if (readable.empty() && matches.size() == 1) return matches.front();
  throw UnrecognizedFrame("overhang " + end.overhang.str() + " matches several frames");
}

std::vector<Symbol> readout(const Molecule& m, const SymbolEncoding& enc, const BaseSeq& halt) {
  if (!m.is_circular()) throw MissingHalt("readout needs a circular molecule");
  const Molecule* ring = &m;
  Molecule turned = flipped(m);
  auto locate = [&](const Molecule& r) {
    const std::string doubled = r.top().str() + r.top().str();
    const auto p = doubled.find(halt.str());
    return p < r.top().size() ? p : std::string::npos;
  };
  auto at = locate(m);
  if (at == std::string::npos) {
    at = locate(turned);
    ring = &turned;
  }
  if (at == std::string::npos) throw MissingHalt("no HALT segment on the molecule");

  const std::string& top = ring->top().str();
  const std::size_t n = top.size();
  const std::size_t body = n - halt.size();
  const std::size_t word = kPayloadLength + kSuffixLength;
  if (body % word != 0) throw UndecodableSegment("ring does not tile into payload+suffix words");
  const std::string doubled = top + top;
  const std::size_t start = (at + halt.size()) % n;
  std::vector<Symbol> out;
  for (std::size_t w = 0; w < body / word; ++w) {
    const std::string seg = doubled.substr(start + w * word, word);
    bool found = false;
    for (Symbol s : kAllSymbols) {
      if (seg == (enc.payload_of(s) + enc.suffix).str()) {
        out.push_back(s);
        found = true;
        break;
      }
    }
    if (!found) throw UndecodableSegment("word " + std::to_string(w) + " '" + seg + "' is not a symbol");
  }
  return out;
}

std::vector<Symbol> readout(const Molecule& m, const BaseAssignment& a) {
  return readout(m, SymbolEncoding::of(a), a.halt);
}

std::shared_ptr<const MachineSetup> MachineSetup::make(const BaseAssignment& a, TransitionVariant variant) {
  auto setup = std::make_shared<MachineSetup>();
  setup->assignment = a;
  setup->variant = variant;
  setup->transitions = build_transitions(a, variant);
  for (const auto& t : setup->transitions) {
    ActivatedTransition act = activate(t);
    const bool duplicate = std::any_of(setup->cores.begin(), setup->cores.end(),
                                       [&](const ActivatedTransition& c) { return c.source == act.source; });
    if (!duplicate) setup->cores.push_back(std::move(act));
  }
  return setup;
}

Soup make_soup(std::shared_ptr<const MachineSetup> setup, Molecule tape, StepOptions options) {
  Soup s{std::move(setup), tape, {}, {}, {}, tape.base_counts(), {}, 0, false, options};
  return s;
}

namespace {

struct Recorder {
  Soup& soup;

  BaseCounts waste_counts() const {
    BaseCounts c{};
    for (const auto& w : soup.waste) add(c, w.base_counts());
    return c;
  }

  void check_ledger() const {
    BaseCounts c = soup.main.base_counts();
    for (const auto& m : soup.loose) add(c, m.base_counts());
    add(c, waste_counts());
    add(c, soup.drawn, -1);
    if (c != soup.initial) throw InvariantViolation("conservation ledger out of balance");
  }

  void record(EventKind kind, std::string subject, const Molecule& before, const Molecule& after) {
    check_ledger();
    ReactionEvent e;
    e.index = soup.trace.size();
    e.step = soup.steps + 1;
    e.kind = kind;
    e.subject = std::move(subject);
    e.before_bp = length_bp(before);
    e.after_bp = length_bp(after);
    if (soup.options.record_renderings) {
      e.before_render = render(before);
      e.after_render = render(after);
      e.layout = layout_string(describe_layout(soup.main, soup.setup->assignment));
    }
    e.main_nt = soup.main.nucleotide_count();
    e.loose_nt = 0;
    for (const auto& m : soup.loose) e.loose_nt += m.nucleotide_count();
    e.waste_nt = static_cast<std::size_t>(total(waste_counts()));
    e.drawn_nt = static_cast<std::size_t>(total(soup.drawn));
    soup.trace.push_back(std::move(e));
  }
};

// Cuts once with a single enzyme and returns the digestion.
Digestion cut(const Molecule& m, const char* name, bool strict) {
  auto d = digest_step(m, only(name), {}, strict);
  if (!d) throw InvariantViolation(std::string("expected a ") + name + " site on the main molecule");
  return *d;
}

// The fragment that does not carry the acting recognition site.
std::size_t keep_index(const SiteHit& hit) { return hit.acting_direction == CutDirection::Leftward ? 0 : 1; }

bool fits(const Molecule& main, const Molecule& core, LigationPolicy policy) {
  return can_ligate(main.right_end(), core.left_end(), policy) && can_ligate(core.right_end(), main.left_end(), policy);
}

}  // namespace

Soup step(Soup soup) {
  if (soup.halted) throw InvariantViolation("the machine has already halted");
  const MachineSetup& setup = *soup.setup;
  const bool strict = soup.options.strict;
  Recorder rec{soup};

  // FokI opens the ring at the head; BserI releases the head region.
  {
    const Molecule before = soup.main;
    Digestion d = cut(soup.main, "FokI", strict);
    soup.main = d.fragments.front();
    rec.record(EventKind::Cleave, describe(d.hit), before, soup.main);
  }
  {
    const Molecule before = soup.main;
    Digestion d = cut(soup.main, "BserI", strict);
    const std::size_t k = keep_index(d.hit);
    soup.main = d.fragments[k];
    soup.waste.push_back(d.fragments[1 - k]);
    rec.record(EventKind::Cleave, describe(d.hit), before, soup.main);
    rec.record(EventKind::Excise, "head", soup.waste.back(), soup.main);
  }

  const auto [state, symbol] = infer_state(soup.main.left_end(), SymbolEncoding::of(setup.assignment));

  std::vector<std::pair<const ActivatedTransition*, Molecule>> fitting;
  for (const auto& c : setup.cores) {
    for (const Molecule& oriented : {c.core, flipped(c.core)}) {
      if (fits(soup.main, oriented, soup.options.ligation)) fitting.emplace_back(&c, oriented);
    }
  }
  if (fitting.empty()) {
    throw NoMatchingTransition(std::string("no transition reads ") + glyph(symbol) + " in " + to_string(state));
  }
  if (fitting.size() > 1 && strict) {
    throw AmbiguousTransition(fitting[0].first->rule.name() + " and " + fitting[1].first->rule.name() +
                              " both fit the gap");
  }
  const ActivatedTransition& chosen = *fitting.front().first;
  const Molecule core = fitting.front().second;
  if (chosen.rule.state != state || chosen.rule.read != symbol) {
    throw InvariantViolation(chosen.rule.name() + " fits a gap it was not designed for");
  }

  add(soup.drawn, chosen.source.base_counts());
  for (const auto& cap : chosen.caps) soup.waste.push_back(cap);
  soup.loose.push_back(core);
  rec.record(EventKind::Activate, chosen.rule.name(), chosen.source, core);

  {
    const Molecule before = soup.main;
    soup.main = circularize(ligate(soup.main, core, soup.options.ligation), soup.options.ligation);
    soup.loose.clear();
    rec.record(EventKind::Insert, chosen.rule.name(), before, soup.main);
  }

  if (chosen.rule.halts()) {
    if (!census_is(soup.main, 0, 0, 0, 0, 0)) {
      throw InvariantViolation("halted molecule still carries sites: " + census_string(soup.main));
    }
    soup.halted = true;
    rec.record(EventKind::Halt, "", soup.main, soup.main);
    ++soup.steps;
    return soup;
  }

  if (!census_is(soup.main, 1, 1, 2, 0, 0)) {
    throw InvariantViolation("inserted molecule carries unexpected sites: " + census_string(soup.main));
  }

  // The facing BpmI pair excises the consumed symbol; the ends then close.
  {
    const Molecule before = soup.main;
    Digestion d = cut(soup.main, "BpmI", strict);
    soup.main = d.fragments.front();
    rec.record(EventKind::Cleave, describe(d.hit), before, soup.main);
  }
  {
    const Molecule before = soup.main;
    Digestion d = cut(soup.main, "BpmI", strict);
    const std::size_t k = keep_index(d.hit);
    soup.main = d.fragments[k];
    soup.waste.push_back(d.fragments[1 - k]);
    rec.record(EventKind::Cleave, describe(d.hit), before, soup.main);
    rec.record(EventKind::Excise, "symbol", soup.waste.back(), soup.main);
  }
  {
    const Molecule before = soup.main;
    soup.main = circularize(soup.main, soup.options.ligation);
    rec.record(EventKind::Circularize, "", before, soup.main);
  }

  if (!census_is(soup.main, 1, 1, 0, 0, 0)) {
    throw InvariantViolation("step left unexpected sites: " + census_string(soup.main));
  }
  ++soup.steps;
  return soup;
}

std::size_t default_step_budget(std::size_t n) { return 4 * (n + 1); }

RunResult run(std::shared_ptr<const MachineSetup> setup, const std::string& a_bits, const std::string& b_bits,
              RunOptions opts) {
  const auto cells = tape_cells(a_bits, b_bits, {opts.allow_unequal});
  const std::size_t budget = opts.step_budget.value_or(default_step_budget(std::max(a_bits.size(), b_bits.size())));
  Soup soup = make_soup(setup, build_tape_from_cells(setup->assignment, cells), opts.step);
  while (!soup.halted) {
    if (soup.steps >= budget) throw BudgetExhausted("no halt within " + std::to_string(budget) + " steps");
    soup = step(std::move(soup));
  }
  check_trace_shape(soup.trace);
  RunResult r;
  r.symbols = readout(soup.main, setup->assignment);
  r.output = output_bits(r.symbols);
  r.errored = contains_error(r.symbols);
  r.steps = soup.steps;
  r.trace = std::move(soup.trace);
  r.final_molecule = soup.main;
  return r;
}

RunResult run(const BaseAssignment& a, const std::string& a_bits, const std::string& b_bits, RunOptions opts) {
  return run(MachineSetup::make(a, opts.variant), a_bits, b_bits, opts);
}

}  // namespace moltm
