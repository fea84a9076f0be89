#pragma once

// Choosing concrete bases for every slot of the machine, and checking that a
// choice keeps recognition sites, frames and layouts where they belong.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "moltm/assignment.hpp"

namespace moltm {

struct Violation {
  std::string kind;      // shape, site, frame, layout or run
  std::string molecule;  // where it was found
  std::string enzyme;    // for site violations
  long position = -1;    // for site violations, column on the top strand
  std::string message;
};

struct VerificationReport {
  std::vector<Violation> violations;
  std::vector<std::string> warnings;
  std::size_t molecules_checked = 0;
  std::size_t runs_checked = 0;

  bool ok() const noexcept { return violations.empty(); }
};

/// Static checks over every slot, all nine transitions and every tape for
/// inputs up to `max_len` (equal and unequal lengths), then dynamic runs of
/// all of those inputs against the symbolic machine. Frame collisions that
/// only involve the error symbol are warnings.
VerificationReport verify_assignment(const BaseAssignment& a, std::size_t max_len);

std::string format_verification(const VerificationReport& r);

struct DesignOptions {
  std::size_t max_len = 4;
  std::size_t attempts = 50;        // full restarts
  std::size_t slot_attempts = 500;  // refills of one slot group per restart
};

/// Seeded search for an assignment with an empty verification report.
/// Deterministic for a fixed seed; throws SearchExhausted.
BaseAssignment design(std::uint64_t seed, DesignOptions opts = {});

}  // namespace moltm
