#pragma once

#include <array>
#include <string>
#include <vector>

#include "trisect/diagram.hpp"
#include "trisect/int_matrix.hpp"

namespace trisect {

/// A finitely generated abelian group Z^rank + Z/t_1 + ... with t_1 | t_2 | ...
struct HomologyGroup {
  std::size_t rank = 0;
  std::vector<Integer> torsion;

  bool is_zero() const { return rank == 0 && torsion.empty(); }
  /// "0", "Z", "Z^2", "Z/2", "Z + Z/2", ...
  std::string to_string() const;

  bool operator==(const HomologyGroup&) const = default;
};

/// Direct sum, with torsion re-normalized into invariant-factor form.
HomologyGroup direct_sum(const HomologyGroup& a, const HomologyGroup& b);

struct ChainTerm {
  std::string name;
  std::size_t rank = 0;
  int degree = 0;
};

/// Free Z-modules T_0 -> T_1 -> ... -> T_n with differentials d_i: T_i -> T_{i+1}.
/// Each term carries the degree label of the group it computes, so the same
/// type holds homological (degrees falling) and Cech (degrees rising) complexes.
/// Construction rejects mismatched shapes and d_{i+1} d_i != 0.
class FreeChainComplex {
 public:
  FreeChainComplex(std::vector<ChainTerm> terms, std::vector<IntMatrix> differentials);

  const std::vector<ChainTerm>& terms() const { return terms_; }
  const std::vector<IntMatrix>& differentials() const { return differentials_; }
  std::vector<std::size_t> ranks() const;
  std::size_t position_of(int degree) const;

 private:
  std::vector<ChainTerm> terms_;
  std::vector<IntMatrix> differentials_;
};

/// Homology class representatives at one term, in that term's coordinates.
struct HomologyData {
  HomologyGroup group;
  /// Representatives of a basis of the free quotient.
  std::vector<IntVector> free_generators;
  /// One representative per torsion factor, same order as group.torsion.
  std::vector<IntVector> torsion_generators;
};

HomologyGroup homology(const FreeChainComplex& c, int degree);
HomologyData homology_with_generators(const FreeChainComplex& c, int degree);

/// 0 -> Z -> (+) L_l cap L_{l+1} -> (+) L_l -> H_1(Sigma) -> Z -> 0, degrees 4..0,
/// with zeta(a, b, c) = (c - a, a - b, b - c) and iota(a, b, c) = a + b + c,
/// written in the canonical subgroup bases.
FreeChainComplex build_fm_complex(const Trisection& t);

/// H_0 .. H_4 of the closed 4-manifold.
std::array<HomologyGroup, 5> fm_homology(const Trisection& t);

/// Cech complex of the presheaf C^j (j = 0, 1, 2) over the trisection cover,
/// degrees 0, 1, 2. The j = 1 complex is assembled in H^1(Sigma) covector
/// coordinates from M_l = pi(L_l).
FreeChainComplex build_cech_complex(const Trisection& t, int j);

/// H_1(Sigma) -> (+) H_1(H_l) -> (+) H_1(Z_l) in free quotient coordinates,
/// degree labels 3, 2, 1; the middle homology is H_2 of the 4-manifold. The
/// second map is (a_1, a_2, a_3) -> ([a_1 - a_2], [a_2 - a_3], [a_3 - a_1]).
FreeChainComplex build_dual_complex(const Trisection& t);

struct HodgeDiamond {
  /// entries[i][j] = H^i(T; C^j).
  std::array<std::array<HomologyGroup, 3>, 3> entries;

  const HomologyGroup& at(int i, int j) const { return entries.at(i).at(j); }
  /// H^k of the 4-manifold as the direct sum over i + j = k.
  HomologyGroup cohomology(int k) const;
};

HodgeDiamond hodge_diamond(const Trisection& t);

/// rank(i, j) == rank(2 - i, 2 - j) for all entries; torsion is ignored.
bool check_serre_duality(const HodgeDiamond& h);

struct H2OracleCheck {
  HomologyGroup fm;
  HomologyGroup dual;
  HomologyGroup cech;
  bool agree() const { return fm == dual && dual == cech; }
};

/// H_2 computed three ways: the FM complex, the dual complex, and H^1(T; C^1).
H2OracleCheck h2_oracle_check(const Trisection& t);

/// Alternating Betti sum of the FM homology.
long euler_characteristic(const std::array<HomologyGroup, 5>& homology);

}  // namespace trisect
