#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "trisect/int_matrix.hpp"
#include "trisect/lattice.hpp"
#include "trisect/symplectic.hpp"

namespace trisect {

/// g curves on the central surface, each given by its class in H_1.
struct CutSystem {
  std::vector<IntVector> curves;

  bool operator==(const CutSystem&) const = default;
};

/// (Sigma_g; alpha, beta, gamma). Systems are indexed 0, 1, 2 throughout;
/// pair l couples system l with system (l + 1) mod 3.
struct TrisectionDiagram {
  std::size_t genus = 0;
  std::array<CutSystem, 3> systems;
  std::string label;

  const CutSystem& alpha() const { return systems[0]; }
  const CutSystem& beta() const { return systems[1]; }
  const CutSystem& gamma() const { return systems[2]; }

  bool operator==(const TrisectionDiagram&) const = default;
};

inline constexpr std::array<std::string_view, 3> kSystemNames = {"alpha", "beta", "gamma"};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  std::optional<std::array<std::size_t, 3>> k_values;

  bool valid() const;
  /// First failing check, if any.
  const CheckResult* first_failure() const;
};

class InvalidDiagramError : public std::runtime_error {
 public:
  explicit InvalidDiagramError(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// Span of cut system `index` (0, 1, 2) in canonical form.
Subgroup lagrangian_subgroup(const TrisectionDiagram& d, std::size_t index);

ValidationReport validate(const TrisectionDiagram& d);

/// k_l = rank(L_l cap L_{l+1}); throws InvalidDiagramError on invalid input.
std::array<std::size_t, 3> k_values(const TrisectionDiagram& d);

/// Catalog entries: S4, CP2, CP2bar, S1xS3, S2xS2, S2xS2_candidate, and any
/// '#'-separated connected sum of these (e.g. "CP2#CP2bar").
TrisectionDiagram builtin(std::string_view name);
std::vector<std::string> builtin_names();

TrisectionDiagram connected_sum(const TrisectionDiagram& d1, const TrisectionDiagram& d2);

/// Replaces curve i by curve_i + sign * curve_j (0-based indices, sign = +-1).
CutSystem handleslide(const CutSystem& cs, std::size_t i, std::size_t j, int sign);

/// Applies an integer symplectic automorphism (given as a 2g x 2g matrix
/// acting on column vectors) to every curve.
TrisectionDiagram apply_linear_map(const TrisectionDiagram& d, const IntMatrix& map);

/// Deterministic pseudo-random valid diagram: a random word of symplectic
/// transvections applied to the standard triple alpha = {a_i},
/// beta = {b_i}, gamma = {a_i + b_i}. word_length defaults to 4g + 4; a
/// length of zero returns the standard triple.
TrisectionDiagram random_diagram(std::size_t genus, std::uint64_t seed,
                                 std::optional<std::size_t> word_length = std::nullopt);

/// Random connected sum of catalog atoms (total genus <= max_genus, at least
/// one), scrambled by a random symplectic word and random handleslides.
TrisectionDiagram random_composite_diagram(std::uint64_t seed, std::size_t max_genus = 4);

/// A validated diagram with its derived subgroups. Every computation
/// downstream of the diagram goes through this type.
class Trisection {
 public:
  /// Throws InvalidDiagramError when validate(d) fails.
  explicit Trisection(TrisectionDiagram d);

  const TrisectionDiagram& diagram() const { return diagram_; }
  std::size_t genus() const { return diagram_.genus; }
  std::size_t rank() const { return 2 * diagram_.genus; }
  const SymplecticLattice& surface() const { return surface_; }
  const std::array<std::size_t, 3>& k_values() const { return k_; }

  /// L_l.
  const Subgroup& lagrangian(std::size_t l) const { return lagrangians_.at(l); }
  /// L_l cap L_{l+1}.
  const Subgroup& pair_intersection(std::size_t l) const { return intersections_.at(l); }
  /// L_l + L_{l+1}.
  const Subgroup& pair_sum(std::size_t l) const { return sums_.at(l); }
  const Subgroup& triple_intersection() const { return triple_intersection_; }
  const Subgroup& total_sum() const { return total_sum_; }
  /// H_1(H_l) = H_1(Sigma) / L_l.
  const QuotientPresentation& handlebody_homology(std::size_t l) const { return handlebodies_.at(l); }
  /// H_1(Z_l) = H_1(Y_l) = H_1(Sigma) / (L_l + L_{l+1}).
  const QuotientPresentation& sector_homology(std::size_t l) const { return sectors_.at(l); }

 private:
  TrisectionDiagram diagram_;
  SymplecticLattice surface_;
  std::array<std::size_t, 3> k_{};
  std::vector<Subgroup> lagrangians_;
  std::vector<Subgroup> intersections_;
  std::vector<Subgroup> sums_;
  Subgroup triple_intersection_;
  Subgroup total_sum_;
  std::vector<QuotientPresentation> handlebodies_;
  std::vector<QuotientPresentation> sectors_;
};

}  // namespace trisect
