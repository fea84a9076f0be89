#include "moltm/design.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "moltm/enzyme.hpp"
#include "moltm/error.hpp"
#include "moltm/layout.hpp"
#include "moltm/machine.hpp"
#include "moltm/reference_tm.hpp"

namespace moltm {

namespace {

struct RawSite {
  std::string enzyme;
  long position = 0;

  friend bool operator==(const RawSite&, const RawSite&) = default;
};

// Every recognition occurrence on the top strand, in either orientation.
std::vector<RawSite> raw_sites(const std::string& s, bool circular) {
  std::vector<RawSite> out;
  const std::string hay = circular ? s + s : s;
  for (const auto& e : standard_enzymes()) {
    for (const std::string& needle : {e.recognition.str(), reverse_complement(e.recognition).str()}) {
      for (auto p = hay.find(needle); p != std::string::npos && p < s.size(); p = hay.find(needle, p + 1)) {
        if (!circular && p + needle.size() > s.size()) break;
        out.push_back({e.name, static_cast<long>(p)});
      }
    }
  }
  return out;
}

std::size_t token_length(const std::string& token) {
  if (token == "HALT") return kHaltLength;
  if (token == "4_F") return kSuffixLength;
  if (token.rfind("6_", 0) == 0) return kPayloadLength;
  for (const auto& e : standard_enzymes()) {
    if (e.name == token) return e.recognition.size();
  }
  return static_cast<std::size_t>(std::stoul(token));
}

std::vector<RawSite> designed_sites(const Layout& layout) {
  std::vector<RawSite> out;
  long at = 0;
  for (const auto& token : layout) {
    for (const auto& e : standard_enzymes()) {
      if (e.name == token) out.push_back({token, at});
    }
    at += static_cast<long>(token_length(token));
  }
  return out;
}

void report_unintended(const std::vector<RawSite>& found, const std::vector<RawSite>& designed,
                       const std::string& molecule, std::vector<Violation>& out) {
  for (const auto& s : found) {
    if (std::find(designed.begin(), designed.end(), s) == designed.end()) {
      out.push_back({"site", molecule, s.enzyme, s.position, "unintended " + s.enzyme + " site"});
    }
  }
}

std::string tape_name(const std::vector<Symbol>& cells) { return "tape[" + glyphs(cells) + "]"; }

BaseSeq tape_ring(const BaseAssignment& a, const std::vector<Symbol>& cells) {
  BaseSeq ring = a.payload_of(Symbol::Blank) + a.suffix + a.head_pre_bseri + standard_enzyme("BserI").recognition +
                 standard_enzyme("FokI").recognition + a.head_post_foki;
  for (Symbol s : cells) ring += a.payload_of(s) + a.suffix;
  return ring;
}

// Designed sites of a fresh tape counted from the ring origin.
std::vector<RawSite> tape_designed_sites() {
  const long bseri = static_cast<long>(kPayloadLength + kSuffixLength + kHeadPreLength);
  return {{"BserI", bseri}, {"FokI", bseri + static_cast<long>(standard_enzyme("BserI").recognition.size())}};
}

void check_tape(const BaseAssignment& a, const std::vector<Symbol>& cells, std::vector<Violation>& out) {
  const BaseSeq ring = tape_ring(a, cells);
  const std::string name = tape_name(cells);
  const std::size_t before = out.size();
  report_unintended(raw_sites(ring.str(), true), tape_designed_sites(), name, out);
  if (out.size() != before) return;
  const Layout got = describe_layout(Molecule::circular(ring), a);
  if (!cyclic_equal(got, tape_layout(cells))) {
    out.push_back({"layout", name, "", -1, "reads as " + layout_string(got)});
  }
}

void check_transition(const TransitionMolecule& t, const BaseAssignment& a, std::vector<Violation>& out) {
  const std::size_t before = out.size();
  report_unintended(raw_sites(t.molecule.top().str(), false), designed_sites(t.layout), t.rule.name(), out);
  if (out.size() != before) return;
  const Layout got = describe_layout(t.molecule, a);
  if (got != t.layout) out.push_back({"layout", t.rule.name(), "", -1, "reads as " + layout_string(got)});
}

std::vector<std::vector<Symbol>> all_tapes(std::size_t max_len) {
  std::vector<std::vector<Symbol>> out;
  for (std::size_t la = 0; la <= max_len; ++la) {
    for (std::size_t lb = 0; lb <= max_len; ++lb) {
      for (const auto& x : bit_strings(la)) {
        for (const auto& y : bit_strings(lb)) out.push_back(interleave_inputs(x, y, true));
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::pair<std::string, BaseSeq>> slots(const BaseAssignment& a) {
  std::vector<std::pair<std::string, BaseSeq>> out;
  for (Symbol s : kAllSymbols) out.emplace_back(std::string("payload.") + label(s), a.payload_of(s));
  out.emplace_back("suffix", a.suffix);
  out.emplace_back("halt", a.halt);
  out.emplace_back("head.pre_bseri", a.head_pre_bseri);
  out.emplace_back("head.post_foki", a.head_post_foki);
  for (int t = 1; t <= 9; ++t) {
    const TransitionFill& f = a.fill(t);
    const std::string p = "T" + std::to_string(t) + ".";
    out.emplace_back(p + "pre_bseri", f.pre_bseri);
    out.emplace_back(p + "post_foki", f.post_foki);
    out.emplace_back(p + "pre_bpmi", f.pre_bpmi);
    out.emplace_back(p + "post_bpmi", f.post_bpmi);
    out.emplace_back(p + "pre_bbvi", f.pre_bbvi);
  }
  return out;
}

void check_frames(const BaseAssignment& a, VerificationReport& r) {
  struct Frame {
    State state;
    Symbol symbol;
    BaseSeq bases;
  };
  std::vector<Frame> frames;
  for (State s : {State::S0, State::S1, State::S2}) {
    for (Symbol y : kAllSymbols) frames.push_back({s, y, a.payload_of(y).substr(frame_offset(s), 4)});
  }
  for (std::size_t i = 0; i < frames.size(); ++i) {
    for (std::size_t j = i + 1; j < frames.size(); ++j) {
      if (frames[i].bases != frames[j].bases) continue;
      const std::string what = std::string(to_string(frames[i].state)) + " frame of " + label(frames[i].symbol) +
                               " equals " + to_string(frames[j].state) + " frame of " + label(frames[j].symbol) +
                               " (" + frames[i].bases.str() + ")";
      if (frames[i].symbol == Symbol::Error || frames[j].symbol == Symbol::Error) {
        r.warnings.push_back(what);
      } else {
        r.violations.push_back({"frame", "payloads", "", -1, what});
      }
    }
  }
}

}  // namespace

VerificationReport verify_assignment(const BaseAssignment& a, std::size_t max_len) {
  VerificationReport r;
  try {
    check_assignment_shape(a);
  } catch (const InvalidAssignment& e) {
    r.violations.push_back({"shape", "assignment", "", -1, e.what()});
    return r;
  }

  for (const auto& [name, seq] : slots(a)) report_unintended(raw_sites(seq.str(), false), {}, name, r.violations);
  check_frames(a, r);

  for (const auto& t : build_transitions(a)) {
    check_transition(t, a, r.violations);
    ++r.molecules_checked;
  }
  for (const auto& cells : all_tapes(max_len)) {
    check_tape(a, cells, r.violations);
    ++r.molecules_checked;
  }
  if (!r.ok()) return r;

  try {
    const EquivalenceReport eq = check_equivalence(a, max_len, {TransitionVariant::Standard, true});
    r.runs_checked = eq.equal_pairs + eq.unequal_pairs;
    for (const auto& d : eq.divergences) {
      r.violations.push_back({"run", "a=\"" + d.a + "\" b=\"" + d.b + "\"", "", -1,
                              "molecular " + d.molecular + ", symbolic " + d.symbolic +
                                  (d.detail.empty() ? "" : ", " + d.detail)});
    }
  } catch (const Error& e) {
    r.violations.push_back({"run", "setup", "", -1, e.what()});
  }
  return r;
}

std::string format_verification(const VerificationReport& r) {
  std::ostringstream out;
  out << (r.ok() ? "valid" : "invalid") << ": " << r.violations.size() << " violation(s), " << r.warnings.size()
      << " warning(s), " << r.molecules_checked << " molecules and " << r.runs_checked << " runs checked\n";
  for (const auto& v : r.violations) {
    out << "violation " << v.kind << ' ' << v.molecule;
    if (!v.enzyme.empty()) out << ' ' << v.enzyme << '@' << v.position;
    out << ": " << v.message << '\n';
  }
  for (const auto& w : r.warnings) out << "warning " << w << '\n';
  return out.str();
}

namespace {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  BaseSeq bases(std::size_t n) {
    static constexpr char kBases[] = "ACGT";
    std::string s(n, 'A');
    for (char& c : s) c = kBases[gen_() >> 62];
    return BaseSeq::parse(s);
  }

 private:
  std::mt19937_64 gen_;
};

bool site_free(const BaseSeq& s) { return raw_sites(s.str(), false).empty(); }

template <typename Pred>
BaseSeq draw(Rng& rng, std::size_t n, std::size_t tries, Pred ok) {
  for (std::size_t i = 0; i < tries; ++i) {
    BaseSeq s = rng.bases(n);
    if (site_free(s) && ok(s)) return s;
  }
  throw SearchExhausted("no " + std::to_string(n) + "-nt sequence satisfied the constraints");
}

bool contains(const BaseSeq& hay, const BaseSeq& needle) { return hay.str().find(needle.str()) != std::string::npos; }

bool frames_distinct(const std::vector<BaseSeq>& payloads) {
  std::vector<BaseSeq> frames;
  for (const auto& p : payloads) {
    for (std::size_t k = 0; k < 3; ++k) frames.push_back(p.substr(k, 4));
  }
  std::sort(frames.begin(), frames.end());
  return std::adjacent_find(frames.begin(), frames.end()) == frames.end();
}

void fill_transition(Rng& rng, TransitionFill& f, const TransitionBlueprint& rule, std::size_t tries) {
  auto any = [](const BaseSeq&) { return true; };
  f.pre_bbvi = draw(rng, rule.bbvi_spacer, tries, any);
  if (rule.halts()) return;
  f.pre_bseri = draw(rng, kPreBserILength, tries, any);
  f.post_foki = draw(rng, rule.foki_spacer, tries, any);
  f.pre_bpmi = draw(rng, kPreBpmILength, tries, any);
  f.post_bpmi = draw(rng, kPostBpmILength, tries, any);
}

bool attempt(Rng& rng, BaseAssignment& a, const DesignOptions& opts) {
  const std::size_t tries = opts.slot_attempts;
  a.suffix = draw(rng, kSuffixLength, tries, [](const BaseSeq& f) {
    const BaseSeq half = f.substr(0, 2);
    return half != reverse_complement(half) && f != reverse_complement(f);
  });

  std::vector<BaseSeq> chosen;
  for (std::size_t i = 0; i < a.payload.size(); ++i) {
    a.payload[i] = draw(rng, kPayloadLength, tries, [&](const BaseSeq& p) {
      if (contains(a.suffix + p + a.suffix, a.suffix + a.suffix)) return false;
      if (!site_free(a.suffix + p + a.suffix)) return false;
      auto next = chosen;
      next.push_back(p);
      if (std::find(chosen.begin(), chosen.end(), p) != chosen.end()) return false;
      return frames_distinct(next);
    });
    chosen.push_back(a.payload[i]);
  }

  a.halt = draw(rng, kHaltLength, tries, [&](const BaseSeq& h) {
    if (!site_free(a.suffix + h + a.payload_of(Symbol::Blank))) return false;
    if (contains(h, a.suffix)) return false;
    return std::none_of(a.payload.begin(), a.payload.end(), [&](const BaseSeq& p) { return contains(h, p); });
  });

  // Head spacers: every tape up to the checked length must stay clean.
  const auto tapes = all_tapes(std::min<std::size_t>(opts.max_len, 2));
  bool head_ok = false;
  for (std::size_t i = 0; i < tries && !head_ok; ++i) {
    a.head_pre_bseri = rng.bases(kHeadPreLength);
    a.head_post_foki = rng.bases(kHeadPostLength);
    std::vector<Violation> v;
    for (const auto& cells : tapes) {
      check_tape(a, cells, v);
      if (!v.empty()) break;
    }
    head_ok = v.empty();
  }
  if (!head_ok) return false;

  for (const auto& rule : transition_blueprints()) fill_transition(rng, a.transitions[rule.number - 1], rule, tries);
  for (const auto& rule : transition_blueprints()) {
    bool ok = false;
    for (std::size_t i = 0; i < tries && !ok; ++i) {
      if (i > 0) fill_transition(rng, a.transitions[rule.number - 1], rule, tries);
      const auto built = build_transitions(a);
      std::vector<Violation> v;
      check_transition(built[rule.number - 1], a, v);
      ok = v.empty();
    }
    if (!ok) return false;
  }
  return verify_assignment(a, opts.max_len).ok();
}

}  // namespace

BaseAssignment design(std::uint64_t seed, DesignOptions opts) {
  Rng rng(seed);
  for (std::size_t i = 0; i < opts.attempts; ++i) {
    BaseAssignment a;
    a.seed = seed;
    try {
      if (attempt(rng, a, opts)) return a;
    } catch (const SearchExhausted&) {
      // fall through to a fresh restart
    }
  }
  throw SearchExhausted("no valid assignment after " + std::to_string(opts.attempts) + " attempts");
}

}  // namespace moltm
