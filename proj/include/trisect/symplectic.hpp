#pragma once

#include "trisect/int_matrix.hpp"
#include "trisect/lattice.hpp"

namespace trisect {

/// H_1 of a closed genus-g surface with its intersection form, over the
/// ordered basis a_1, b_1, ..., a_g, b_g with <a_i, b_i> = +1.
class SymplecticLattice {
 public:
  explicit SymplecticLattice(std::size_t genus);

  std::size_t genus() const { return genus_; }
  std::size_t rank() const { return 2 * genus_; }
  /// Block-diagonal form matrix J, g copies of [[0, 1], [-1, 0]].
  const IntMatrix& form() const { return form_; }

  /// x^T J y.
  Integer intersection_number(const IntVector& x, const IntVector& y) const;
  /// Coordinates of the functional y -> <y, x>.
  IntVector pi_dual(const IntVector& x) const;
  /// Matrix of pi_dual (equal to J under these conventions).
  IntMatrix pi_matrix() const;
  /// pi applied to a Lagrangian subgroup; throws if lagrangian is not isotropic of rank g.
  Subgroup m_subgroup(const Subgroup& lagrangian) const;

  bool is_isotropic(const std::vector<IntVector>& vectors) const;

  /// Unit vector for a_i (1-based index i).
  IntVector a(std::size_t i) const;
  /// Unit vector for b_i (1-based index i).
  IntVector b(std::size_t i) const;

 private:
  void check(const IntVector& x) const;

  std::size_t genus_;
  IntMatrix form_;
};

}  // namespace trisect
