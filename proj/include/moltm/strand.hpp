#pragma once

// Double-stranded DNA as immutable values: bases, sequences, linear duplexes
// with sticky ends, circular duplexes, ligation and rendering.

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "moltm/error.hpp"

namespace moltm {

enum class Base : std::uint8_t { A, C, G, T };

constexpr Base complement(Base b) noexcept {
  switch (b) {
    case Base::A: return Base::T;
    case Base::T: return Base::A;
    case Base::G: return Base::C;
    case Base::C: return Base::G;
  }
  return b;
}

char to_char(Base b) noexcept;
Base base_from_char(char c);  // throws InvalidSequence

/// Ordered bases read 5' to 3'. Backed by a validated ACGT string.
class BaseSeq {
 public:
  BaseSeq() = default;
  BaseSeq(std::initializer_list<Base> bases);

  /// Throws InvalidSequence on anything outside {A,C,G,T}.
  static BaseSeq parse(std::string_view text);

  std::size_t size() const noexcept { return text_.size(); }
  bool empty() const noexcept { return text_.empty(); }
  Base operator[](std::size_t i) const { return base_from_char(text_[i]); }
  const std::string& str() const noexcept { return text_; }

  BaseSeq substr(std::size_t pos, std::size_t len = std::string::npos) const;
  BaseSeq reversed() const;
  BaseSeq complemented() const;  // base-wise, same order

  BaseSeq& operator+=(const BaseSeq& rhs) {
    text_ += rhs.text_;
    return *this;
  }
  friend BaseSeq operator+(BaseSeq lhs, const BaseSeq& rhs) { return lhs += rhs; }
  friend bool operator==(const BaseSeq&, const BaseSeq&) = default;
  friend auto operator<=>(const BaseSeq&, const BaseSeq&) = default;

 private:
  explicit BaseSeq(std::string validated) : text_(std::move(validated)) {}
  std::string text_;
};

BaseSeq reverse_complement(const BaseSeq& s);

/// Per-base counts indexed by Base; the nucleotide multiset of a molecule.
using BaseCounts = std::array<long, 4>;

enum class Polarity { FivePrime, ThreePrime, Blunt };
enum class Side { Left, Right };

const char* to_string(Polarity p) noexcept;

/// A derived view of one end of a linear duplex. The overhang is read 5'->3'
/// along the strand that protrudes.
struct StickyEnd {
  Polarity polarity = Polarity::Blunt;
  BaseSeq overhang;
  Side side = Side::Left;

  friend bool operator==(const StickyEnd&, const StickyEnd&) = default;
};

struct LigationPolicy {
  bool allow_blunt = false;
};

/// True iff the two ends can anneal and be sealed by ligase: opposite sides,
/// equal polarity and length, and antiparallel-complementary overhangs.
/// One-nucleotide overhangs never ligate; blunt pairs only if the policy says so.
bool can_ligate(const StickyEnd& a, const StickyEnd& b, LigationPolicy policy = {});

/// A duplex DNA value.
///
/// Linear molecules keep both strands and a single alignment offset: the
/// top strand occupies columns [0, |top|) and the bottom strand occupies
/// [offset, offset + |bottom|). `bottom` is stored column-aligned, i.e. read
/// 3'->5' from left to right. Sticky ends are computed from this geometry.
///
/// Circular molecules are fully paired rings; only the top strand is stored.
class Molecule {
 public:
  /// Throws InvalidMolecule if the strands do not overlap or any paired
  /// column is not Watson-Crick complementary.
  static Molecule linear(BaseSeq top, BaseSeq bottom_aligned, long offset);
  static Molecule circular(BaseSeq ring);

  bool is_linear() const noexcept { return !ring_only_; }
  bool is_circular() const noexcept { return ring_only_; }

  const BaseSeq& top() const noexcept { return top_; }
  /// Bottom strand, column-aligned (3'->5' left to right). For a circular
  /// molecule this is the complement of the ring.
  const BaseSeq& bottom() const noexcept { return bottom_; }
  long offset() const noexcept { return offset_; }
  /// Bottom strand as a real strand, 5'->3'.
  BaseSeq bottom_5to3() const { return bottom_.reversed(); }

  /// Columns where both strands are present, as [lo, hi) in top coordinates.
  long paired_lo() const noexcept;
  long paired_hi() const noexcept;

  StickyEnd left_end() const;   // throws InvalidMolecule on circular input
  StickyEnd right_end() const;  // throws InvalidMolecule on circular input

  std::size_t nucleotide_count() const noexcept { return top_.size() + bottom_.size(); }
  BaseCounts base_counts() const noexcept;

  /// Rotates a circular molecule so that column `start` becomes column 0.
  Molecule rotated(long start) const;

  friend bool operator==(const Molecule&, const Molecule&) = default;

 private:
  Molecule() = default;
  BaseSeq top_;
  BaseSeq bottom_;
  long offset_ = 0;
  bool ring_only_ = false;
};

Molecule make_blunt_duplex(const BaseSeq& top);

/// Paired base count (the gel-electrophoresis length).
std::size_t length_bp(const Molecule& m) noexcept;
/// Nucleotides sitting in overhangs.
std::size_t unpaired_count(const Molecule& m) noexcept;

/// Joins a's right end to b's left end, or b's right end to a's left end if
/// only that orientation fits. Throws IncompatibleEnds otherwise.
Molecule ligate(const Molecule& a, const Molecule& b, LigationPolicy policy = {});

/// Closes a linear molecule whose right end anneals to its own left end.
Molecule circularize(const Molecule& a, LigationPolicy policy = {});

/// The same duplex turned end-over-end (top and bottom exchanged).
Molecule flipped(const Molecule& a);

/// True if two circular molecules are the same ring up to rotation.
bool same_ring(const Molecule& a, const Molecule& b);

/// Two-row rendering: top 5'->3', bottom 3'->5', columns aligned, overhangs
/// shown as gaps. Brackets delimit linear molecules, parentheses circular ones.
std::string render(const Molecule& m);

}  // namespace moltm
