#pragma once

#include <optional>
#include <vector>

#include "trisect/int_matrix.hpp"

namespace trisect {

/// Result of a Smith normal form computation: left * m * right == diagonal.
/// The inverses of the two unimodular transforms are tracked alongside so
/// callers can move between original and diagonal coordinates exactly.
struct SmithForm {
  IntMatrix left;
  IntMatrix left_inverse;
  IntMatrix diagonal;
  IntMatrix right;
  IntMatrix right_inverse;

  /// Number of nonzero diagonal entries.
  std::size_t rank() const;
  /// The nonzero diagonal entries d_1 | d_2 | ... in order.
  std::vector<Integer> invariant_factors() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Rank over Q.
std::size_t rank(const IntMatrix& m);

/// Integer solution of m * x == b, or nullopt if none exists.
std::optional<IntVector> solve_integer(const IntMatrix& m, const IntVector& b);

/// A subgroup of Z^n kept in a canonical echelon basis.
///
/// The basis vectors (the columns of basis()) are the rows of the Hermite
/// normal form of any generating set: pivots are positive, strictly increase
/// in position, and entries sharing a pivot position with a later vector are
/// reduced into [0, pivot). Two generating sets of the same subgroup produce
/// identical bases, so equality is data equality.
class Subgroup {
 public:
  explicit Subgroup(std::size_t ambient_rank = 0);
  static Subgroup span(std::size_t ambient_rank, const std::vector<IntVector>& generators);
  static Subgroup from_columns(const IntMatrix& generators);
  static Subgroup full(std::size_t ambient_rank);

  std::size_t ambient_rank() const { return ambient_rank_; }
  std::size_t rank() const { return vectors_.size(); }
  bool is_trivial() const { return vectors_.empty(); }

  /// Basis vectors as columns (ambient_rank x rank).
  IntMatrix basis() const;
  const std::vector<IntVector>& vectors() const { return vectors_; }

  /// Coefficients c with basis() * c == v, or nullopt when v is not a member.
  std::optional<IntVector> coordinates(const IntVector& v) const;
  bool contains(const IntVector& v) const { return coordinates(v).has_value(); }
  bool contains(const Subgroup& other) const;

  bool operator==(const Subgroup& rhs) const = default;

 private:
  std::size_t ambient_rank_;
  std::vector<IntVector> vectors_;
  std::vector<std::size_t> pivots_;
};

/// The finitely generated abelian group Z^n / rel, with coordinates.
///
/// Quotient coordinates list one entry per torsion factor (reduced into
/// [0, d)) followed by free_rank free entries.
class QuotientPresentation {
 public:
  QuotientPresentation(std::size_t ambient_rank, const Subgroup& relations);

  std::size_t ambient_rank() const { return ambient_rank_; }
  std::size_t free_rank() const { return free_rank_; }
  const std::vector<Integer>& torsion() const { return torsion_; }
  std::size_t coordinate_count() const { return torsion_.size() + free_rank_; }
  bool is_free() const { return torsion_.empty(); }
  const Subgroup& relations() const { return relations_; }

  IntVector project(const IntVector& ambient) const;
  IntVector lift(const IntVector& coordinates) const;
  bool is_zero(const IntVector& ambient) const;

  /// Matrix of the free part of project (free_rank x ambient_rank).
  IntMatrix free_projection() const;
  /// Matrix of lift restricted to free coordinates (ambient_rank x free_rank).
  IntMatrix free_lift() const;

 private:
  std::size_t ambient_rank_;
  Subgroup relations_;
  std::size_t relation_rank_;
  std::size_t free_rank_;
  std::vector<Integer> torsion_;
  std::vector<std::size_t> torsion_rows_;
  IntMatrix left_;
  IntMatrix left_inverse_;
};

/// Saturated basis of {x : m * x == 0}.
Subgroup kernel_basis(const IntMatrix& m);
/// Subgroup of Z^rows spanned by the columns of m.
Subgroup image(const IntMatrix& m);
QuotientPresentation quotient(std::size_t ambient_rank, const Subgroup& relations);
Subgroup subgroup_intersection(const Subgroup& a, const Subgroup& b);
Subgroup subgroup_sum(const Subgroup& a, const Subgroup& b);

}  // namespace trisect
