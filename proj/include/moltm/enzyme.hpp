#pragma once

// Type IIS restriction enzymes: recognition-site search on both strands and
// offset cleavage that leaves sticky ends.

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "moltm/strand.hpp"

namespace moltm {

enum class CutDirection { Rightward, Leftward };

/// One enzyme as it reads on the top strand. Offsets count nucleotides from
/// the edge of the recognition site on the cleavage side; `cut_top` applies
/// to the top strand and `cut_bottom` to the bottom strand.
struct EnzymeSpec {
  std::string name;
  BaseSeq recognition;
  CutDirection direction = CutDirection::Rightward;
  int cut_top = 0;
  int cut_bottom = 0;

  Polarity overhang_polarity() const noexcept;
  int overhang_length() const noexcept { return cut_top > cut_bottom ? cut_top - cut_bottom : cut_bottom - cut_top; }

  /// Throws InvalidSequence for negative or equal offsets, or an empty or
  /// palindromic recognition sequence.
  void validate() const;

  friend bool operator==(const EnzymeSpec&, const EnzymeSpec&) = default;
};

using EnzymeSet = std::vector<EnzymeSpec>;

/// FokI, BsrDI, BpmI, BserI and BbvI.
const EnzymeSet& standard_enzymes();
/// Looks an enzyme up by name in the standard set; throws std::out_of_range.
const EnzymeSpec& standard_enzyme(std::string_view name);

/// The enzyme table as rows, with BpmI listed a second
/// time in its mirrored (leftward) reading.
const EnzymeSet& mirrored_enzyme_rows();

/// Plain-text enzyme table, one enzyme per line:
///   name recognition direction cut_top cut_bottom
/// with direction `right` or `left`. Blank lines and `#` comments are skipped.
EnzymeSet parse_enzyme_table(std::string_view text);
std::string format_enzyme_table(const EnzymeSet& enzymes);

enum class SiteStrand { Top, BottomMirror };

/// A recognition site found on a molecule with its resolved cut columns.
/// Cut columns are boundaries: cutting at c separates column c-1 from c.
/// For circular molecules both are reduced modulo the ring length.
struct SiteHit {
  EnzymeSpec enzyme;
  long position = 0;  // first column of the recognition site on the top strand
  SiteStrand strand = SiteStrand::Top;
  CutDirection acting_direction = CutDirection::Rightward;
  long top_cut = 0;
  long bottom_cut = 0;
  long overhang_shift = 0;  // bottom_cut - top_cut before reduction

  friend bool operator==(const SiteHit&, const SiteHit&) = default;
};

std::string describe(const SiteHit& hit);

/// All cleavable sites of `e` on `m`, sorted by position then strand. Sites
/// and cuts must lie in the paired region of a linear molecule.
std::vector<SiteHit> find_sites(const Molecule& m, const EnzymeSpec& e);
std::vector<SiteHit> find_sites(const Molecule& m, const EnzymeSet& enzymes);

/// Raw recognition occurrences of `e` on either strand, ignoring whether a
/// cut would be possible. Used for site census and design checks.
std::size_t count_recognition(const Molecule& m, const EnzymeSpec& e);

/// Circular input yields one linear fragment; linear input yields two, in
/// left-to-right order. Throws StaleHit if `hit` does not belong to `m`.
std::vector<Molecule> cleave(const Molecule& m, const SiteHit& hit);

struct Digestion {
  SiteHit hit;
  std::vector<Molecule> fragments;
};

/// Applies the single highest-priority cut. Priority is the order of names in
/// `priority` (enzymes not listed follow in set order), then top-strand hits
/// before mirrored ones, then position. In strict mode two hits tied at the
/// top rank raise AmbiguityError. Returns nothing when no enzyme has a site.
std::optional<Digestion> digest_step(const Molecule& m, const EnzymeSet& enzymes,
                                     std::span<const std::string> priority = {}, bool strict = true);

}  // namespace moltm
