#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "trisect/cohomology.hpp"
#include "trisect/diagram.hpp"

namespace trisect {

using Mod2Vector = std::vector<std::uint8_t>;

/// A quadratic enhancement of the mod-2 intersection form, stored by its
/// values on a_1, b_1, ..., a_g, b_g. Ordering is lexicographic on those bits.
struct QuadraticEnhancement {
  Mod2Vector basis_values;

  auto operator<=>(const QuadraticEnhancement&) const = default;
  bool operator==(const QuadraticEnhancement&) const = default;
};

inline constexpr std::size_t kSpinGenusBound = 8;

Mod2Vector reduce_mod2(const IntVector& x);

/// q(sum x_i e_i) = sum x_i q(e_i) + sum_{i<j} x_i x_j <e_i, e_j>  (mod 2).
std::uint8_t evaluate(const QuadraticEnhancement& q, const Mod2Vector& x);
std::uint8_t evaluate(const QuadraticEnhancement& q, const IntVector& x);

/// <x, y> mod 2 on H_1(Sigma; Z/2).
std::uint8_t intersection_mod2(const Mod2Vector& x, const Mod2Vector& y);

bool vanishes_on(const QuadraticEnhancement& q, const CutSystem& cs);

/// Every enhancement vanishing on all three cut systems, in lexicographic
/// order. Refuses (std::length_error) when genus exceeds genus_bound.
std::vector<QuadraticEnhancement> enumerate_spin(const Trisection& t,
                                                 std::size_t genus_bound = kSpinGenusBound);

/// |Hom(H, Z/2)| = 2^(rank + number of even torsion factors).
Integer hom_to_z2_order(const HomologyGroup& h);

}  // namespace trisect
