#pragma once

// Segment-level description of a molecule in the same vocabulary as the
// machine's design: enzyme sites, HALT, symbol words, suffixes and spacer
// lengths, e.g. "6_β|4_F|6|BserI|FokI|9|6_0|4_F".

#include <string>
#include <vector>

#include "moltm/assignment.hpp"
#include "moltm/strand.hpp"

namespace moltm {

using Layout = std::vector<std::string>;

/// Tokenizes the top strand left to right, preferring (in order) a Φ
/// recognition site in either orientation, the HALT segment, a symbol
/// payload, the suffix, and otherwise counting spacer bases. Circular
/// molecules are read from just after their FokI site if there is one, else
/// from just after HALT, else from the origin.
Layout describe_layout(const Molecule& m, const BaseAssignment& a);

std::string layout_string(const Layout& layout);

/// True if the two token sequences are rotations of each other.
bool cyclic_equal(const Layout& a, const Layout& b);

/// Rotates a cyclic layout so it starts at the first occurrence of `token`;
/// returns it unchanged when the token is absent.
Layout rotate_to(const Layout& layout, const std::string& token);

}  // namespace moltm
