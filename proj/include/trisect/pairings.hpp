#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "trisect/diagram.hpp"
#include "trisect/int_matrix.hpp"

namespace trisect {

/// A Cech 1-cocycle of C^1: one class b_l in each L_l (read through the
/// identification H^1(H_l) = L_l) with b_0 + b_1 + b_2 = 0. It is also the
/// transition data of a complex line bundle with that first Chern class.
struct OneOneCocycle {
  std::array<IntVector, 3> parts;

  bool operator==(const OneOneCocycle&) const = default;
};

/// A class of the dual complex: a_l in H_1(H_l) = H_1(Sigma)/L_l, kept as
/// ambient lifts plus quotient coordinates, with a_l - a_{l+1} = 0 in H_1(Z_l).
struct H2DualRep {
  std::array<IntVector, 3> lifts;
  std::array<IntVector, 3> coordinates;
};

/// Throws std::invalid_argument unless x is a cocycle for t.
void check_cocycle(const Trisection& t, const OneOneCocycle& x);
bool is_cocycle(const Trisection& t, const OneOneCocycle& x);
/// Description of the first violated cocycle condition, if any.
std::optional<std::string> cocycle_violation(const Trisection& t, const OneOneCocycle& x);

OneOneCocycle zero_cocycle(const Trisection& t);
OneOneCocycle operator+(const OneOneCocycle& x, const OneOneCocycle& y);
OneOneCocycle operator-(const OneOneCocycle& x, const OneOneCocycle& y);
OneOneCocycle operator*(const Integer& c, const OneOneCocycle& x);

/// zeta(w_0, w_1, w_2) for w_l in L_l cap L_{l+1}: (w_2 - w_0, w_0 - w_1, w_1 - w_2).
OneOneCocycle coboundary(const Trisection& t, const std::array<IntVector, 3>& w);

/// Representatives of a basis of H^2/torsion, as ker(iota)/im(zeta) classes.
std::vector<OneOneCocycle> h2_basis_cocycles(const Trisection& t);
/// One representative per torsion factor of H^2.
std::vector<OneOneCocycle> h2_torsion_cocycles(const Trisection& t);

/// <x.b_0, y.b_1> on the central surface.
Integer intersection_pairing(const Trisection& t, const OneOneCocycle& x, const OneOneCocycle& y);
/// The three cyclic expressions <x_0, y_1>, <x_1, y_2>, <x_2, y_0>.
std::array<Integer, 3> pairing_expressions(const Trisection& t, const OneOneCocycle& x,
                                           const OneOneCocycle& y);

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  long value() const { return static_cast<long>(positive) - static_cast<long>(negative); }
};

/// Inertia of a symmetric integer matrix by congruence over Q.
Signature signature(const IntMatrix& symmetric);

struct IntersectionForm {
  IntMatrix gram;
  Signature signature;
  Integer determinant;
  bool unimodular = false;
  bool even = false;
  /// Characteristic element w mod 2 (Q(x, x) = Q(x, w) mod 2), when the
  /// form is invertible mod 2.
  std::optional<std::vector<int>> characteristic;
};

IntersectionForm intersection_form(const Trisection& t);

/// <h3, h1> for h3 in H_1(Sigma) (a representative modulo L_0 + L_1 + L_2)
/// and h1 in L_0 cap L_1 cap L_2.
Integer pairing_h3_h1(const Trisection& t, const IntVector& h3, const IntVector& h1);
/// Matrix of pairing_h3_h1 on bases of H^3/torsion (rows) and H^1 (columns).
IntMatrix h3_h1_pairing_matrix(const Trisection& t);

/// Builds a dual rep from ambient lifts; throws std::invalid_argument naming
/// the violated cycle condition.
H2DualRep make_dual_rep(const Trisection& t, const std::array<IntVector, 3>& lifts);
/// The violated cycle condition, if any (e.g. "a1 - a2 != 0 in H1(Z_1)").
std::optional<std::string> cycle_violation(const Trisection& t, const std::array<IntVector, 3>& lifts);
H2DualRep zero_dual_rep(const Trisection& t);
H2DualRep operator+(const H2DualRep& a, const H2DualRep& b);

/// sum over l of <x.b_l, lift(K.a_l)>.
Integer evaluate_on_surface_class(const Trisection& t, const OneOneCocycle& x, const H2DualRep& k);

/// Cached bases and Gram data for H^2 and H_2; PD solves go through here.
class SecondCohomology {
 public:
  explicit SecondCohomology(const Trisection& t);

  const Trisection& trisection() const { return t_; }
  const std::vector<OneOneCocycle>& basis() const { return basis_; }
  /// Basis of the free part of the dual complex middle homology.
  const std::vector<H2DualRep>& dual_basis() const { return dual_basis_; }
  const IntMatrix& gram() const { return gram_; }
  /// evaluation()(i, j) = evaluate(basis[i], dual_basis[j]).
  const IntMatrix& evaluation() const { return evaluation_; }

  /// Coordinates of x modulo torsion and coboundaries in basis().
  IntVector coordinates(const OneOneCocycle& x) const;
  OneOneCocycle from_coordinates(const IntVector& c) const;
  /// K with evaluate(x', K) == pairing(x', x) for every basis x'.
  H2DualRep poincare_dual_rep(const OneOneCocycle& x) const;
  /// The class x with pairing(x', x) == evaluate(x', K) for every basis x'.
  OneOneCocycle class_of(const H2DualRep& k) const;

 private:
  Trisection t_;
  std::vector<OneOneCocycle> basis_;
  std::vector<H2DualRep> dual_basis_;
  IntMatrix gram_;
  IntMatrix evaluation_;
};

H2DualRep poincare_dual_rep(const Trisection& t, const OneOneCocycle& x);

}  // namespace trisect
