#include <doctest.h>

#include <string>

#include "moltm/error.hpp"
#include "moltm/reference_tm.hpp"

using namespace moltm;

namespace {

std::string nand_by_hand(const std::string& a, const std::string& b) {
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) out += (a[i] == '1' && b[i] == '1') ? '0' : '1';
  return out;
}

}  // namespace

TEST_CASE("NAND truth table") {
  CHECK(nand_oracle("0", "0") == "1");
  CHECK(nand_oracle("0", "1") == "1");
  CHECK(nand_oracle("1", "0") == "1");
  CHECK(nand_oracle("1", "1") == "0");
  CHECK(nand_oracle("", "") == "");
  CHECK(nand_oracle("10", "11") == "01");
  CHECK_THROWS_AS(nand_oracle("1", "10"), LengthMismatch);
}

TEST_CASE("bit_strings enumerates in lexicographic order") {
  CHECK(bit_strings(0) == std::vector<std::string>{""});
  CHECK(bit_strings(2) == std::vector<std::string>{"00", "01", "10", "11"});
  CHECK(bit_strings(4).size() == 16);
}

TEST_CASE("rule table") {
  struct Row {
    State s;
    Symbol read;
    State next;
    std::optional<Symbol> write;
  };
  const Row rows[] = {
      {State::S0, Symbol::Zero, State::S1, Symbol::Blank},  {State::S0, Symbol::One, State::S2, Symbol::Blank},
      {State::S0, Symbol::Blank, State::Halt, std::nullopt}, {State::S1, Symbol::Zero, State::S0, Symbol::One},
      {State::S1, Symbol::One, State::S0, Symbol::One},      {State::S1, Symbol::Blank, State::S0, Symbol::Error},
      {State::S2, Symbol::Zero, State::S0, Symbol::One},     {State::S2, Symbol::One, State::S0, Symbol::Zero},
      {State::S2, Symbol::Blank, State::S0, Symbol::Error},
  };
  REQUIRE(symbolic_rules().size() == 9);
  for (const auto& r : rows) {
    CAPTURE(to_string(r.s));
    CAPTURE(glyph(r.read));
    const SymbolicRule& got = symbolic_rule(r.s, r.read);
    CHECK(got.next == r.next);
    CHECK(got.write == r.write);
    CHECK(got.move.has_value() == r.write.has_value());
  }
  CHECK_THROWS_AS(symbolic_rule(State::S0, Symbol::Error), std::out_of_range);
  CHECK_THROWS_AS(symbolic_rule(State::Halt, Symbol::Zero), std::out_of_range);
}

TEST_CASE("symbolic runs") {
  const SymbolicRun r01 = run_symbolic("0", "1");
  CHECK(glyphs(r01.tape) == "β1");
  CHECK(r01.output == "1");
  CHECK_FALSE(r01.errored);
  CHECK(r01.transitions == 3);

  const SymbolicRun empty = run_symbolic("", "");
  CHECK(empty.tape.empty());
  CHECK(empty.transitions == 1);

  CHECK(run_symbolic("1", "1").output == "0");
  CHECK(run_symbolic("10", "11").output == "01");

  const SymbolicRun bad = run_symbolic("1", "");
  CHECK(bad.errored);
  CHECK(glyphs(bad.tape) == "βε");
}

TEST_CASE("symbolic machine computes NAND in 2n+1 transitions") {
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const auto& a : bit_strings(n)) {
      for (const auto& b : bit_strings(n)) {
        CAPTURE(a);
        CAPTURE(b);
        const SymbolicRun r = run_symbolic(a, b);
        CHECK(r.output == nand_by_hand(a, b));
        CHECK(r.output == nand_oracle(a, b));
        CHECK_FALSE(r.errored);
        CHECK(r.transitions == 2 * n + 1);
        CHECK(r.tape.size() == 2 * n);
      }
    }
  }
}

TEST_CASE("unequal inputs always error symbolically") {
  for (std::size_t n = 0; n <= 3; ++n)
    for (std::size_t m = 0; m <= 3; ++m) {
      if (n == m) continue;
      for (const auto& a : bit_strings(n))
        for (const auto& b : bit_strings(m)) {
          CAPTURE(a);
          CAPTURE(b);
          CHECK(run_symbolic(a, b).errored);
        }
    }
}

TEST_CASE("check_equivalence") {
  const EquivalenceReport r = check_equivalence(default_assignment(), 3);
  CHECK(r.equal_pairs == 85);
  CHECK(r.agreeing == 85);
  CHECK(r.ok());
  CHECK(format_report(r).find("85/85 equal-length pairs agree") != std::string::npos);

  EquivalenceOptions all;
  all.include_unequal = true;
  const EquivalenceReport u = check_equivalence(default_assignment(), 2, all);
  CHECK(u.ok());
  CHECK(u.unequal_pairs == 7 * 7 - 21);
}

TEST_CASE("T8 copied from T7 diverges exactly on pairs containing (1,1)") {
  EquivalenceOptions o;
  o.variant = TransitionVariant::T8CopiesT7;
  const EquivalenceReport r = check_equivalence(default_assignment(), 3, o);
  std::size_t expected = 0;
  for (std::size_t n = 0; n <= 3; ++n)
    for (const auto& a : bit_strings(n))
      for (const auto& b : bit_strings(n)) {
        bool has11 = false;
        for (std::size_t i = 0; i < n; ++i) has11 = has11 || (a[i] == '1' && b[i] == '1');
        expected += has11;
        bool diverged = false;
        for (const auto& d : r.divergences) diverged = diverged || (d.a == a && d.b == b);
        CAPTURE(a);
        CAPTURE(b);
        CHECK(diverged == has11);
      }
  CHECK(r.divergences.size() == expected);
  CHECK(r.agreeing + expected == 85);
}
