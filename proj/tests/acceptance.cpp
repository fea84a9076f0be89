// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "moltm/cli.hpp"
#include "moltm/enzyme.hpp"
#include "moltm/error.hpp"
#include "moltm/layout.hpp"
#include "moltm/machine.hpp"
#include "moltm/reference_tm.hpp"

using namespace moltm;

namespace {

const BaseAssignment& A() { return default_assignment(); }

struct Check {
  bool ok = true;
  std::string why;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      why = what;
    }
  }
};

std::vector<std::pair<std::string, std::string>> equal_pairs(std::size_t max_len) {
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t n = 0; n <= max_len; ++n)
    for (const auto& a : bit_strings(n))
      for (const auto& b : bit_strings(n)) out.emplace_back(a, b);
  return out;
}

std::vector<Symbol> drop_leading_blank(std::vector<Symbol> s) {
  if (!s.empty() && s.front() == Symbol::Blank) s.erase(s.begin());
  return s;
}

std::map<std::string, std::size_t> census(const Molecule& m) {
  std::map<std::string, std::size_t> c;
  for (const auto& [name, n] : site_census(m)) c[name] = n;
  return c;
}

Check c1_exhaustive() {
  Check c;
  const auto pairs = equal_pairs(3);
  c.require(pairs.size() == 85, "expected 84 pairs plus the empty pair");
  for (const auto& [a, b] : pairs) {
    const RunResult m = run(A(), a, b);
    const SymbolicRun s = run_symbolic(a, b);
    const std::string o = nand_oracle(a, b);
    c.require(m.output == o && s.output == o, "divergence on a=" + a + " b=" + b);
    c.require(drop_leading_blank(m.symbols) == s.tape, "tape mismatch on a=" + a + " b=" + b);
  }
  const EquivalenceReport r = check_equivalence(A(), 3);
  c.require(r.ok() && r.equal_pairs == 85 && r.agreeing == 85, "check_equivalence reported divergences");
  return c;
}

Check c2_worked_example() {
  Check c;
  const RunResult r = run(A(), "0", "1");
  c.require(r.output == "1", "output was '" + r.output + "'");
  c.require(!r.errored, "run flagged errored");
  return c;
}

Check c3_case1() {
  Check c;
  const RunResult r = run(A(), "", "");
  c.require(r.final_molecule.has_value(), "no final molecule");
  if (!c.ok) return c;
  const Molecule& m = *r.final_molecule;
  c.require(m.is_circular(), "final molecule not circular");
  c.require(unpaired_count(m) == 0, "final molecule not fully paired");
  c.require(m.top().str().find(A().halt.str()) != std::string::npos, "HALT segment missing");
  for (const auto& e : standard_enzymes()) c.require(find_sites(m, e).empty(), e.name + " site left on halted molecule");
  const Layout want = {"6_β", "4_F", "HALT"};
  c.require(cyclic_equal(describe_layout(m, A()), want),
            "layout " + layout_string(describe_layout(m, A())));
  std::size_t inserts = 0;
  for (const auto& e : r.trace) inserts += e.kind == EventKind::Insert;
  c.require(inserts == 1 && r.trace.back().kind == EventKind::Halt, "expected one T3 insertion then Halt");
  return c;
}

Check c4_case2_case3() {
  Check c;
  auto setup = MachineSetup::make(A());
  struct Case {
    const char* a;
    const char* b;
    const char* transition;
    const char* spacer;
  };
  for (const Case& k : {Case{"01", "10", "T1", "4"}, Case{"10", "01", "T2", "3"}}) {
    const Soup s = step(make_soup(setup, build_tape(A(), k.a, k.b)));
    const std::string l2 = std::string("6_") + k.b[0];
    // New initial configuration: spacer, remaining cells, the kept blank,
    // the written blank, then the head.
    const Layout want = {k.spacer, "4_F", l2,  "4_F", std::string("6_") + k.a[1], "4_F",
                         std::string("6_") + k.b[1], "4_F", "6_β", "4_F", "6_β", "4_F", "6", "BserI", "FokI"};
    const Layout got = describe_layout(s.main, A());
    c.require(got == want, std::string(k.transition) + " step gave " + layout_string(got));
    std::string inserted;
    for (const auto& e : s.trace)
      if (e.kind == EventKind::Insert) inserted = e.subject;
    c.require(inserted == k.transition, "inserted " + inserted);
  }
  return c;
}

Check c5_offsets() {
  Check c;
  struct Row {
    const char* name;
    long top;
    long bottom;
    Polarity polarity;
    std::size_t length;
  };
  const Row rows[] = {
      {"FokI", 14, 18, Polarity::FivePrime, 4}, {"BsrDI", 8, 6, Polarity::ThreePrime, 2},
      {"BpmI", 22, 20, Polarity::ThreePrime, 2}, {"BserI", -8, -10, Polarity::ThreePrime, 2},
      {"BbvI", -12, -8, Polarity::FivePrime, 4},
  };
  const BaseSeq flank = BaseSeq::parse("ACAACATACAAACAATAACAAAACAC");  // site-free
  for (const auto& row : rows) {
    const EnzymeSpec& e = standard_enzyme(row.name);
    for (bool mirrored : {false, true}) {
      const BaseSeq site = mirrored ? reverse_complement(e.recognition) : e.recognition;
      const Molecule m = make_blunt_duplex(flank + site + flank);
      const auto hits = find_sites(m, e);
      c.require(hits.size() == 1, std::string(row.name) + ": expected one hit");
      if (!c.ok) return c;
      const long p = static_cast<long>(flank.size());
      const long L = static_cast<long>(site.size());
      // A mirrored site is the top-strand picture turned end over end.
      const long top = mirrored ? p + L - row.bottom : p + row.top;
      const long bottom = mirrored ? p + L - row.top : p + row.bottom;
      c.require(hits[0].top_cut == top && hits[0].bottom_cut == bottom, std::string(row.name) + ": cut columns");
      const auto f = cleave(m, hits[0]);
      c.require(f.size() == 2, std::string(row.name) + ": fragment count");
      if (!c.ok) return c;
      c.require(f[0].top().size() == static_cast<std::size_t>(top) &&
                    f[0].bottom().size() == static_cast<std::size_t>(bottom),
                std::string(row.name) + ": fragment lengths");
      c.require(f[0].right_end().polarity == row.polarity && f[1].left_end().polarity == row.polarity,
                std::string(row.name) + ": polarity");
      c.require(f[0].right_end().overhang.size() == row.length, std::string(row.name) + ": overhang length");
    }
  }
  return c;
}

Check c6_conservation() {
  Check c;
  auto setup = MachineSetup::make(A());
  for (const auto& [a, b] : equal_pairs(3)) {
    Soup s = make_soup(setup, build_tape(A(), a, b));
    const std::size_t start = s.main.nucleotide_count();
    while (!s.halted) {
      s = step(std::move(s));
      BaseCounts sum = s.main.base_counts();
      for (const auto& m : s.loose)
        for (std::size_t i = 0; i < 4; ++i) sum[i] += m.base_counts()[i];
      for (const auto& w : s.waste)
        for (std::size_t i = 0; i < 4; ++i) sum[i] += w.base_counts()[i];
      for (std::size_t i = 0; i < 4; ++i) sum[i] -= s.drawn[i];
      c.require(sum == s.initial, "multiset drifted on a=" + a + " b=" + b);
    }
    for (const auto& e : s.trace)
      c.require(e.main_nt + e.loose_nt + e.waste_nt == start + e.drawn_nt, "event ledger off on a=" + a + " b=" + b);
  }
  return c;
}

Check c7_frames() {
  Check c;
  const SymbolEncoding enc = SymbolEncoding::of(A());
  const std::pair<State, std::size_t> frames[] = {{State::S0, 0}, {State::S1, 1}, {State::S2, 2}};
  for (const auto& [state, offset] : frames)
    for (Symbol x : kAllSymbols) {
      const StickyEnd e{Polarity::FivePrime, A().payload_of(x).substr(offset, 4), Side::Left};
      const auto got = infer_state(e, enc);
      c.require(got == std::pair{state, x}, std::string("frame ") + to_string(state) + "/" + glyph(x));
    }
  return c;
}

Check c8_error_path() {
  Check c;
  RunOptions o;
  o.allow_unequal = true;
  std::size_t checked = 0;
  for (std::size_t n = 0; n <= 3; ++n)
    for (std::size_t m = 0; m <= 3; ++m) {
      if (n == m) continue;
      for (const auto& a : bit_strings(n))
        for (const auto& b : bit_strings(m)) {
          const RunResult r = run(A(), a, b, o);
          const SymbolicRun s = run_symbolic(a, b);
          const std::string tag = " on a=" + a + " b=" + b;
          c.require(r.errored && contains_error(r.symbols), "molecular run not errored" + tag);
          c.require(s.errored && contains_error(s.tape), "symbolic run not errored" + tag);
          c.require(drop_leading_blank(r.symbols) == s.tape, "executors disagree" + tag);
          ++checked;
        }
    }
  c.require(checked == 15 * 15 - 85, "pair count");
  return c;
}

Check c9_mutation() {
  Check c;
  EquivalenceOptions o;
  o.variant = TransitionVariant::T8CopiesT7;
  const EquivalenceReport r = check_equivalence(A(), 3, o);
  std::map<std::pair<std::string, std::string>, bool> diverged;
  for (const auto& d : r.divergences) diverged[{d.a, d.b}] = true;
  for (const auto& [a, b] : equal_pairs(3)) {
    bool has11 = false;
    for (std::size_t i = 0; i < a.size(); ++i) has11 = has11 || (a[i] == '1' && b[i] == '1');
    c.require(diverged.count({a, b}) == static_cast<std::size_t>(has11),
              (has11 ? "missed divergence" : "spurious divergence") + std::string(" on a=") + a + " b=" + b);
  }
  c.require(!r.divergences.empty(), "no divergences at all");
  return c;
}

Check c10_determinism() {
  Check c;
  for (const auto& [a, b] : equal_pairs(2)) {
    std::vector<std::string> args = {"trace", "--a", a, "--b", b, "--full"};
    std::ostringstream o1, o2, e1, e2;
    const int r1 = cli::main(args, o1, e1);
    const int r2 = cli::main(args, o2, e2);
    c.require(r1 == 0 && r2 == 0, "trace failed on a=" + a + " b=" + b);
    c.require(o1.str() == o2.str() && !o1.str().empty(), "traces differ on a=" + a + " b=" + b);
  }
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Check()>>> criteria = {
      {"1 exhaustive NAND equivalence (n <= 3, 85 pairs)", c1_exhaustive},
      {"2 worked example 0,1 -> 1", c2_worked_example},
      {"3 blank-first halt: HALT present, fully paired, no sites", c3_case1},
      {"4 first-step layouts after reading 0 and 1", c4_case2_case3},
      {"5 enzyme offset suite", c5_offsets},
      {"6 conservation ledger", c6_conservation},
      {"7 state-frame decoding", c7_frames},
      {"8 error path on unequal inputs", c8_error_path},
      {"9 T8 copied from T7 diverges exactly on (1,1) pairs", c9_mutation},
      {"10 trace determinism", c10_determinism},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Check c;
    try {
      c = fn();
    } catch (const std::exception& e) {
      c.ok = false;
      c.why = std::string("threw: ") + e.what();
    }
    std::printf("%s criterion %s%s%s\n", c.ok ? "PASS" : "FAIL", name, c.ok ? "" : " -- ", c.why.c_str());
    failed += !c.ok;
  }
  return failed == 0 ? 0 : 1;
}
