#pragma once

#include <array>
#include <optional>
#include <string>

#include "trisect/pairings.hpp"

namespace trisect {

/// Homological record of a Spin^C structure relative to an opaque base.
///
/// euler[l] is the relative Euler class in H_1(H_l) (quotient coordinates).
/// twists[l] accumulates the Lutz-twist classes applied in H_l since the base.
/// c1_offset = c1(current) - c1(base) as a cocycle; it is defined only while
/// the accumulated twists form a cycle of the dual complex.
struct SpinCLedger {
  std::string base_id;
  std::array<IntVector, 3> euler;
  std::array<IntVector, 3> twists;
  std::optional<OneOneCocycle> c1_offset;

  bool operator==(const SpinCLedger&) const = default;
};

/// The base structure: zero twists, zero c1 offset, and the given relative
/// Euler classes (zero if omitted).
SpinCLedger base_ledger(const Trisection& t, std::string base_id,
                        std::optional<std::array<IntVector, 3>> euler = std::nullopt);

/// The structure extends over the 3-handles iff the Euler class of the plane
/// field on each Y_l = H_l u H_{l+1} vanishes: e_l - e_{l+1} = 0 in H_1(Y_l).
std::optional<std::string> admissibility_violation(const Trisection& t, const SpinCLedger& s);
bool is_admissible(const Trisection& t, const SpinCLedger& s);

/// Lutz twist along gamma in H_l: e_l <- e_l - 2 gamma.
SpinCLedger lutz_shift(const SecondCohomology& h2, const SpinCLedger& s, std::size_t l,
                       const IntVector& gamma);

/// The H^2 action: a Lutz twist along each a_l of the dual rep. Rejects reps
/// that are not cycles.
SpinCLedger act(const SecondCohomology& h2, const SpinCLedger& s, const H2DualRep& a);

/// c1(s1) - c1(s2) = 2 (class by which they differ), as a cocycle modulo
/// coboundaries. Refuses ledgers with different bases or non-cycle differences.
OneOneCocycle c1_difference(const SecondCohomology& h2, const SpinCLedger& s1, const SpinCLedger& s2);

}  // namespace trisect
