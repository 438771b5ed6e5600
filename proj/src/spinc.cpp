#include "trisect/spinc.hpp"

#include <stdexcept>
#include <utility>

namespace trisect {

namespace {

std::array<IntVector, 3> lift_all(const Trisection& t, const std::array<IntVector, 3>& coords) {
  std::array<IntVector, 3> out;
  for (std::size_t l = 0; l < 3; ++l) out[l] = t.handlebody_homology(l).lift(coords[l]);
  return out;
}

void check_coordinates(const Trisection& t, const std::array<IntVector, 3>& coords, const char* what) {
  for (std::size_t l = 0; l < 3; ++l)
    if (coords[l].size() != t.handlebody_homology(l).coordinate_count())
      throw std::invalid_argument(std::string(what) + ": H1(H_l) coordinates have the wrong length");
}

void refresh_c1(const SecondCohomology& h2, SpinCLedger& s) {
  const Trisection& t = h2.trisection();
  const auto lifts = lift_all(t, s.twists);
  if (cycle_violation(t, lifts)) {
    s.c1_offset.reset();
    return;
  }
  s.c1_offset = Integer(2) * h2.class_of(make_dual_rep(t, lifts));
}

}  // namespace

SpinCLedger base_ledger(const Trisection& t, std::string base_id,
                        std::optional<std::array<IntVector, 3>> euler) {
  SpinCLedger s;
  s.base_id = std::move(base_id);
  for (std::size_t l = 0; l < 3; ++l)
    s.twists[l] = zero_vector(t.handlebody_homology(l).coordinate_count());
  s.euler = euler.value_or(s.twists);
  check_coordinates(t, s.euler, "base_ledger");
  s.c1_offset = zero_cocycle(t);
  return s;
}

std::optional<std::string> admissibility_violation(const Trisection& t, const SpinCLedger& s) {
  check_coordinates(t, s.euler, "admissibility");
  const auto lifts = lift_all(t, s.euler);
  for (std::size_t l = 0; l < 3; ++l) {
    const std::size_t next = (l + 1) % 3;
    if (!t.sector_homology(l).is_zero(subtract(lifts[l], lifts[next])))
      return "e" + std::to_string(l + 1) + " - e" + std::to_string(next + 1) + " != 0 in H1(Y_" +
             std::to_string(l + 1) + ")";
  }
  return std::nullopt;
}

bool is_admissible(const Trisection& t, const SpinCLedger& s) { return !admissibility_violation(t, s); }

SpinCLedger lutz_shift(const SecondCohomology& h2, const SpinCLedger& s, std::size_t l,
                       const IntVector& gamma) {
  const Trisection& t = h2.trisection();
  if (l > 2) throw std::out_of_range("lutz_shift: handlebody index must be 0, 1 or 2");
  if (gamma.size() != t.handlebody_homology(l).coordinate_count())
    throw std::invalid_argument("lutz_shift: gamma has the wrong number of coordinates");
  SpinCLedger out = s;
  out.euler[l] = subtract(s.euler[l], scale(Integer(2), gamma));
  out.twists[l] = add(s.twists[l], gamma);
  refresh_c1(h2, out);
  return out;
}

SpinCLedger act(const SecondCohomology& h2, const SpinCLedger& s, const H2DualRep& a) {
  const Trisection& t = h2.trisection();
  if (auto v = cycle_violation(t, a.lifts))
    throw std::invalid_argument("act: not a cycle: " + *v);
  SpinCLedger out = s;
  for (std::size_t l = 0; l < 3; ++l) {
    const IntVector gamma = t.handlebody_homology(l).project(a.lifts[l]);
    out.euler[l] = subtract(out.euler[l], scale(Integer(2), gamma));
    out.twists[l] = add(out.twists[l], gamma);
  }
  refresh_c1(h2, out);
  return out;
}

OneOneCocycle c1_difference(const SecondCohomology& h2, const SpinCLedger& s1, const SpinCLedger& s2) {
  if (s1.base_id != s2.base_id)
    throw std::invalid_argument("c1_difference: ledgers have different bases ('" + s1.base_id +
                                "' vs '" + s2.base_id + "')");
  const Trisection& t = h2.trisection();
  std::array<IntVector, 3> diff;
  for (std::size_t l = 0; l < 3; ++l) diff[l] = subtract(s1.twists[l], s2.twists[l]);
  const auto lifts = lift_all(t, diff);
  if (auto v = cycle_violation(t, lifts))
    throw std::invalid_argument("c1_difference: twist difference is not a cycle: " + *v);
  return Integer(2) * h2.class_of(make_dual_rep(t, lifts));
}

}  // namespace trisect
