#pragma once

// Random cocycles, coboundaries and cycle reps for property tests.

#include <random>

#include "trisect/pairings.hpp"

namespace fuzz {

using namespace trisect;

inline IntVector random_vector(std::mt19937_64& rng, std::size_t n, long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  IntVector v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

inline IntVector combo(const std::vector<IntVector>& basis, const IntVector& c, std::size_t n) {
  IntVector v = zero_vector(n);
  for (std::size_t i = 0; i < basis.size(); ++i) v = add(v, scale(c[i], basis[i]));
  return v;
}

inline OneOneCocycle random_coboundary(const Trisection& t, std::mt19937_64& rng) {
  std::array<IntVector, 3> w;
  for (std::size_t l = 0; l < 3; ++l) {
    const auto& basis = t.pair_intersection(l).vectors();
    w[l] = combo(basis, random_vector(rng, basis.size(), 3), t.rank());
  }
  return coboundary(t, w);
}

/// Random combination of basis and torsion cocycles plus a random coboundary.
inline OneOneCocycle random_cocycle(const Trisection& t, std::mt19937_64& rng) {
  OneOneCocycle x = zero_cocycle(t);
  for (const auto& b : h2_basis_cocycles(t)) x = x + Integer(random_vector(rng, 1, 4)[0]) * b;
  for (const auto& b : h2_torsion_cocycles(t)) x = x + Integer(random_vector(rng, 1, 2)[0]) * b;
  return x + random_coboundary(t, rng);
}

/// A cycle rep of the class x, disguised by a boundary and by L_l terms.
inline H2DualRep random_rep(const SecondCohomology& h2, const OneOneCocycle& x, std::mt19937_64& rng) {
  const Trisection& t = h2.trisection();
  std::array<IntVector, 3> lifts = h2.poincare_dual_rep(x).lifts;
  const IntVector common = random_vector(rng, t.rank(), 2);
  for (std::size_t l = 0; l < 3; ++l) {
    lifts[l] = add(lifts[l], common);
    for (const auto& v : t.lagrangian(l).vectors()) lifts[l] = add(lifts[l], scale(random_vector(rng, 1, 2)[0], v));
  }
  return make_dual_rep(t, lifts);
}

}  // namespace fuzz
