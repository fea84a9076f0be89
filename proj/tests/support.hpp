#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "moltm/enzyme.hpp"
#include "moltm/strand.hpp"

namespace moltm::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::size_t below(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }

  BaseSeq seq(std::size_t n) {
    static constexpr char kBases[] = "ACGT";
    std::string s(n, 'A');
    for (char& c : s) c = kBases[below(4)];
    return BaseSeq::parse(s);
  }

  /// A linear duplex with random overhangs of up to four nucleotides at
  /// either end, in either polarity.
  Molecule linear(std::size_t core) {
    const BaseSeq paired = seq(core);
    const long left = static_cast<long>(below(9)) - 4;
    const long right = static_cast<long>(below(9)) - 4;
    BaseSeq top = paired;
    BaseSeq bottom = paired.complemented();
    long offset = 0;
    if (left > 0) {
      top = seq(static_cast<std::size_t>(left)) + top;
      offset = left;
    } else if (left < 0) {
      bottom = seq(static_cast<std::size_t>(-left)) + bottom;
      offset = left;
    }
    if (right > 0) {
      top += seq(static_cast<std::size_t>(right));
    } else if (right < 0) {
      bottom += seq(static_cast<std::size_t>(-right));
    }
    return Molecule::linear(top, bottom, offset);
  }

 private:
  std::mt19937_64 rng_;
};

/// Random bases carrying no recognition site of the standard set in either
/// orientation.
inline BaseSeq clean_seq(Gen& g, std::size_t n) {
  for (;;) {
    const BaseSeq s = g.seq(n);
    const Molecule m = make_blunt_duplex(s.empty() ? BaseSeq::parse("A") : s);
    bool clean = true;
    for (const auto& e : standard_enzymes()) clean = clean && count_recognition(m, e) == 0;
    if (clean || n == 0) return s;
  }
}

inline bool paired_soundly(const Molecule& m) {
  for (long col = m.paired_lo(); col < m.paired_hi(); ++col) {
    if (complement(m.top()[static_cast<std::size_t>(col)]) != m.bottom()[static_cast<std::size_t>(col - m.offset())]) {
      return false;
    }
  }
  return true;
}

}  // namespace moltm::testing
