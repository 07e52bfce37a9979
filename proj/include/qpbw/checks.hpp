#pragma once

#include <functional>
#include <string>
#include <vector>

namespace qpbw {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // diagnostics, including expected table deviations
};

/// The full verification suite:
///  1. Delta_r table reproduction (determinant authoritative; the G_2 line
///     is a documented table-vs-determinant diagnostic).
///  2. Root-of-unity nonvanishing at admissible orders + negative controls.
///  3. Bell round trip on randomized sequences.
///  4. Double definitions of the root-vector families agree.
///  5. q = 1 specialization square.
///  6. Dual-basis orthonormality and regularity.
///  7. Ordered-monomial pairing consistency.
///  8. Generating-series relation.
///  9. Iota word validation (shipped words pass, corrupted words locate).
/// 10. Toral basis regularity.
/// 11. Imaginary block transition round trip.
std::vector<CheckResult> run_acceptance_checks();

/// Runs and prints one line per criterion; returns the number of failures.
int run_and_report_acceptance(std::ostream& os);

}  // namespace qpbw
