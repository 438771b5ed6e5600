#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "trisect/cohomology.hpp"

using namespace trisect;

namespace {

HomologyGroup z(std::size_t rank = 1) { return HomologyGroup{rank, {}}; }
const HomologyGroup kZero{};

std::array<HomologyGroup, 5> table(const char* name) { return fm_homology(Trisection(builtin(name))); }

HomologyGroup free_part(const HomologyGroup& h) { return HomologyGroup{h.rank, {}}; }
HomologyGroup torsion_part(const HomologyGroup& h) { return HomologyGroup{0, h.torsion}; }

}  // namespace

TEST_CASE("group formatting") {
  CHECK(kZero.to_string() == "0");
  CHECK(z().to_string() == "Z");
  CHECK(z(3).to_string() == "Z^3");
  CHECK(HomologyGroup{1, {2}}.to_string() == "Z + Z/2");
  CHECK(HomologyGroup{0, {2, 4}}.to_string() == "Z/2 + Z/4");
  CHECK(direct_sum(HomologyGroup{0, {2}}, HomologyGroup{1, {3}}) == HomologyGroup{1, {6}});
}

TEST_CASE("chain complexes reject bad data") {
  CHECK_THROWS(FreeChainComplex({{"A", 1, 0}, {"B", 1, 1}, {"C", 1, 2}}, {IntMatrix{{1}}, IntMatrix{{1}}}));
  CHECK_THROWS(FreeChainComplex({{"A", 2, 0}, {"B", 1, 1}}, {IntMatrix{{1}}}));
  const FreeChainComplex c({{"A", 1, 0}, {"B", 1, 1}}, {IntMatrix{{2}}});
  CHECK(homology(c, 1) == HomologyGroup{0, {2}});
  CHECK(homology(c, 0) == kZero);
  CHECK_THROWS(homology(c, 5));
}

TEST_CASE("CP2 FM complex matches the hand computation") {
  const Trisection t(builtin("CP2"));
  const FreeChainComplex c = build_fm_complex(t);
  CHECK(c.ranks() == std::vector<std::size_t>{1, 0, 3, 2, 1});
  // iota: L_alpha + L_beta + L_gamma -> Z^2 on generators (1,0), (0,1), (1,1)
  CHECK(c.differentials()[2] == IntMatrix{{1, 0, 1}, {0, 1, 1}});
  // its Smith form is [1 0 0; 0 1 0]: cokernel 0, kernel rank 1
  CHECK(fm_homology(t) == std::array<HomologyGroup, 5>{z(), kZero, z(), kZero, z()});
}

TEST_CASE("S1xS3 FM complex matches the hand computation") {
  const Trisection t(builtin("S1xS3"));
  const FreeChainComplex c = build_fm_complex(t);
  CHECK(c.ranks() == std::vector<std::size_t>{1, 3, 3, 2, 1});
  // zeta(w0, w1, w2) = (w2 - w0, w0 - w1, w1 - w2) on the common generator (0,1)
  CHECK(c.differentials()[1] == IntMatrix{{-1, 0, 1}, {1, -1, 0}, {0, 1, -1}});
  CHECK(c.differentials()[2] == IntMatrix{{0, 0, 0}, {1, 1, 1}});
  CHECK(fm_homology(t) == std::array<HomologyGroup, 5>{z(), z(), kZero, z(), z()});
}

TEST_CASE("builtin homology table") {
  CHECK(table("S4") == std::array<HomologyGroup, 5>{z(), kZero, kZero, kZero, z()});
  CHECK(table("CP2") == std::array<HomologyGroup, 5>{z(), kZero, z(), kZero, z()});
  CHECK(table("CP2bar") == std::array<HomologyGroup, 5>{z(), kZero, z(), kZero, z()});
  CHECK(table("S1xS3") == std::array<HomologyGroup, 5>{z(), z(), kZero, z(), z()});
  CHECK(table("CP2#CP2bar") == std::array<HomologyGroup, 5>{z(), kZero, z(2), kZero, z()});
  CHECK(table("S2xS2") == std::array<HomologyGroup, 5>{z(), kZero, z(2), kZero, z()});
  CHECK(table("S1xS3#S1xS3") == std::array<HomologyGroup, 5>{z(), z(2), kZero, z(2), z()});
}

TEST_CASE("complex homology agrees with the rank and divisor oracle") {
  for (const auto& d : oracle::diagram_suite(60)) {
    if (d.genus > 3) continue;
    CAPTURE(d.label);
    const Trisection t(d);
    std::vector<FreeChainComplex> complexes = {build_fm_complex(t), build_dual_complex(t)};
    for (int j = 0; j < 3; ++j) complexes.push_back(build_cech_complex(t, j));
    for (const auto& c : complexes)
      for (std::size_t pos = 0; pos < c.terms().size(); ++pos) {
        const oracle::Group expect = oracle::complex_homology(c.ranks(), c.differentials(), pos);
        const HomologyGroup got = homology(c, c.terms()[pos].degree);
        CHECK(got.rank == expect.rank);
        CHECK(got.torsion == expect.torsion);
      }
  }
}

TEST_CASE("FM homology agrees with the lattice description on the suite") {
  for (const auto& d : oracle::diagram_suite()) {
    CAPTURE(d.label);
    const Trisection t(d);
    const auto h = fm_homology(t);
    CHECK(h[0] == z());
    CHECK(h[4] == z());
    // H_1 = H_1(Sigma) / (L_alpha + L_beta + L_gamma)
    const QuotientPresentation h1(t.rank(), t.total_sum());
    CHECK(h[1] == HomologyGroup{h1.free_rank(), h1.torsion()});
    CHECK(h[3].rank == h[1].rank);
    CHECK(h[3].torsion.empty());
    CHECK(h[2].torsion == h[1].torsion);
    // chi = 2 + g - k1 - k2 - k3
    const auto& k = t.k_values();
    CHECK(euler_characteristic(h) == 2 + static_cast<long>(t.genus()) - static_cast<long>(k[0] + k[1] + k[2]));
  }
}

TEST_CASE("hodge diamond structure and duality on the suite") {
  std::size_t count = 0;
  for (const auto& d : oracle::diagram_suite(120)) {
    CAPTURE(d.label);
    const Trisection t(d);
    const HodgeDiamond hd = hodge_diamond(t);
    CHECK(hd.at(0, 0) == z());
    CHECK(hd.at(1, 0) == kZero);
    CHECK(hd.at(2, 0) == kZero);
    CHECK(hd.at(0, 2) == kZero);
    CHECK(hd.at(1, 2) == kZero);
    CHECK(hd.at(2, 2) == z());
    CHECK(check_serre_duality(hd));
    // H^k = free(H_k) + torsion(H_{k-1})
    const auto h = fm_homology(t);
    for (int k = 0; k <= 4; ++k) {
      HomologyGroup expected = free_part(h[k]);
      if (k > 0) expected = direct_sum(expected, torsion_part(h[k - 1]));
      CHECK(hd.cohomology(k) == expected);
    }
    const H2OracleCheck o = h2_oracle_check(t);
    CHECK(o.agree());
    CHECK(o.fm == h[2]);
    ++count;
  }
  CHECK(count >= 100);
}

TEST_CASE("serre check detects asymmetry") {
  HodgeDiamond hd;
  for (auto& row : hd.entries) row.fill(kZero);
  hd.entries[0][0] = z();
  CHECK_FALSE(check_serre_duality(hd));
  hd.entries[2][2] = z();
  CHECK(check_serre_duality(hd));
}

TEST_CASE("CP2 diamond") {
  const HodgeDiamond hd = hodge_diamond(Trisection(builtin("CP2")));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(hd.at(i, j) == (i == j ? z() : kZero));
}
