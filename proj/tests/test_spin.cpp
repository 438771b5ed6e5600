#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "support.hpp"
#include "trisect/cohomology.hpp"
#include "trisect/pairings.hpp"
#include "trisect/spin.hpp"

using namespace trisect;

namespace {

int bit(std::uint32_t x, std::size_t i) { return (x >> i) & 1u; }

int omega_mod2(std::uint32_t x, std::uint32_t y, std::size_t g) {
  int s = 0;
  for (std::size_t k = 0; k < g; ++k) s ^= (bit(x, 2 * k) & bit(y, 2 * k + 1)) ^ (bit(x, 2 * k + 1) & bit(y, 2 * k));
  return s;
}

std::uint32_t pack(const IntVector& v) {
  std::uint32_t x = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (mpz_odd_p(v[i].get_mpz_t())) x |= 1u << i;
  return x;
}

/// Every function F2^{2g} -> F2 satisfying q(x + y) = q(x) + q(y) + <x, y>
/// and vanishing on all curves, read off on a1, b1, ..., ag, bg.
std::set<Mod2Vector> brute_force_spin(const TrisectionDiagram& d) {
  const std::size_t g = d.genus, n = 2 * g, size = std::size_t{1} << n;
  std::set<Mod2Vector> out;
  for (std::uint64_t table = 0; table < (std::uint64_t{1} << size); ++table) {
    auto q = [&](std::uint32_t x) { return static_cast<int>((table >> x) & 1u); };
    bool ok = true;
    for (std::uint32_t x = 0; x < size && ok; ++x)
      for (std::uint32_t y = 0; y < size && ok; ++y)
        ok = q(x ^ y) == (q(x) ^ q(y) ^ omega_mod2(x, y, g));
    for (const auto& cs : d.systems)
      for (const auto& c : cs.curves) ok = ok && q(pack(c)) == 0;
    if (!ok) continue;
    Mod2Vector values(n);
    for (std::size_t i = 0; i < n; ++i) values[i] = static_cast<std::uint8_t>(q(1u << i));
    out.insert(values);
  }
  return out;
}

std::size_t spin_count(const char* name) { return enumerate_spin(Trisection(builtin(name))).size(); }

}  // namespace

TEST_CASE("quadratic enhancement arithmetic") {
  const QuadraticEnhancement q{{1, 0, 0, 1}};
  CHECK(evaluate(q, Mod2Vector{1, 0, 0, 0}) == 1);
  CHECK(evaluate(q, Mod2Vector{1, 1, 0, 0}) == 0);  // 1 + 0 + <a1, b1> = 0
  CHECK(evaluate(q, IntVector{3, 1, 0, 0}) == 0);
  CHECK(evaluate(q, Mod2Vector{0, 0, 1, 1}) == 0);
  CHECK(intersection_mod2(Mod2Vector{1, 0}, Mod2Vector{0, 1}) == 1);
  CHECK(reduce_mod2(IntVector{-3, 2, 5}) == Mod2Vector{1, 0, 1});
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    Mod2Vector v(6), x(6), y(6);
    for (auto* w : {&v, &x, &y})
      for (auto& e : *w) e = rng() % 2;
    const QuadraticEnhancement r{v};
    Mod2Vector s(6);
    for (std::size_t i = 0; i < 6; ++i) s[i] = x[i] ^ y[i];
    CHECK(evaluate(r, s) == (evaluate(r, x) ^ evaluate(r, y) ^ intersection_mod2(x, y)));
  }
}

TEST_CASE("builtin spin counts") {
  CHECK(spin_count("S4") == 1);
  CHECK(spin_count("CP2") == 0);
  CHECK(spin_count("CP2bar") == 0);
  CHECK(spin_count("S1xS3") == 2);
  CHECK(spin_count("CP2#CP2bar") == 0);
  CHECK(spin_count("S2xS2") == 1);
  CHECK(spin_count("S2xS2_candidate") == 0);
  CHECK(spin_count("S1xS3#S1xS3") == 4);
}

TEST_CASE("enumeration matches the exhaustive function search for g <= 2") {
  std::vector<TrisectionDiagram> ds;
  for (const auto& d : oracle::diagram_suite(24))
    if (d.genus <= 2) ds.push_back(d);
  REQUIRE(ds.size() >= 10);
  for (const auto& d : ds) {
    CAPTURE(d.label);
    const auto spins = enumerate_spin(Trisection(d));
    std::set<Mod2Vector> got;
    for (const auto& q : spins) got.insert(q.basis_values);
    CHECK(got.size() == spins.size());
    CHECK(got == brute_force_spin(d));
    CHECK(std::is_sorted(spins.begin(), spins.end()));
    for (const auto& q : spins)
      for (const auto& cs : d.systems) CHECK(vanishes_on(q, cs));
  }
}

TEST_CASE("count law, parity and handleslide invariance on the suite") {
  std::mt19937_64 rng(8);
  for (const auto& d : oracle::diagram_suite(60)) {
    CAPTURE(d.label);
    const Trisection t(d);
    const std::size_t count = enumerate_spin(t).size();
    const Integer hom = hom_to_z2_order(fm_homology(t)[1]);
    CHECK((count == 0 || Integer(count) == hom));
    if (count > 0) CHECK(intersection_form(t).even);
    if (d.genus < 2) continue;
    TrisectionDiagram slid = d;
    for (int k = 0; k < 6; ++k) {
      auto& cs = slid.systems[rng() % 3];
      const std::size_t i = rng() % d.genus;
      const std::size_t j = (i + 1 + rng() % (d.genus - 1)) % d.genus;
      cs = handleslide(cs, i, j, (rng() % 2) ? 1 : -1);
    }
    CHECK(enumerate_spin(Trisection(slid)).size() == count);
  }
}

TEST_CASE("hom to Z/2") {
  CHECK(hom_to_z2_order(HomologyGroup{0, {}}) == 1);
  CHECK(hom_to_z2_order(HomologyGroup{2, {}}) == 4);
  CHECK(hom_to_z2_order(HomologyGroup{1, {3}}) == 2);
  CHECK(hom_to_z2_order(HomologyGroup{0, {2, 6}}) == 4);
}

TEST_CASE("genus bound") {
  CHECK(enumerate_spin(Trisection(builtin("S4"))).size() == 1);
  const Trisection t(random_diagram(3, 1));
  CHECK_THROWS_AS(enumerate_spin(t, 2), std::length_error);
  CHECK_NOTHROW(enumerate_spin(t, 3));
}
