#include "trisect/symplectic.hpp"

#include <stdexcept>
#include <string>

namespace trisect {

SymplecticLattice::SymplecticLattice(std::size_t genus) : genus_(genus), form_(2 * genus, 2 * genus) {
  for (std::size_t i = 0; i < genus; ++i) {
    form_(2 * i, 2 * i + 1) = 1;
    form_(2 * i + 1, 2 * i) = -1;
  }
}

void SymplecticLattice::check(const IntVector& x) const {
  if (x.size() != rank())
    throw std::invalid_argument("surface class has length " + std::to_string(x.size()) +
                                ", expected " + std::to_string(rank()));
}

Integer SymplecticLattice::intersection_number(const IntVector& x, const IntVector& y) const {
  check(x);
  check(y);
  Integer total = 0;
  for (std::size_t i = 0; i < genus_; ++i)
    total += x[2 * i] * y[2 * i + 1] - x[2 * i + 1] * y[2 * i];
  return total;
}

IntVector SymplecticLattice::pi_dual(const IntVector& x) const {
  check(x);
  // (pi x)_k = <e_k, x> = (J x)_k
  return form_ * x;
}

IntMatrix SymplecticLattice::pi_matrix() const { return form_; }

Subgroup SymplecticLattice::m_subgroup(const Subgroup& lagrangian) const {
  if (lagrangian.ambient_rank() != rank())
    throw std::invalid_argument("m_subgroup: ambient rank mismatch");
  if (!lagrangian.is_trivial() && (lagrangian.rank() != genus_ || !is_isotropic(lagrangian.vectors())))
    throw std::invalid_argument("m_subgroup: subgroup is not Lagrangian");
  std::vector<IntVector> images;
  for (const auto& v : lagrangian.vectors()) images.push_back(pi_dual(v));
  return Subgroup::span(rank(), images);
}

bool SymplecticLattice::is_isotropic(const std::vector<IntVector>& vectors) const {
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = i + 1; j < vectors.size(); ++j)
      if (intersection_number(vectors[i], vectors[j]) != 0) return false;
  return true;
}

IntVector SymplecticLattice::a(std::size_t i) const {
  IntVector v = zero_vector(rank());
  v.at(2 * (i - 1)) = 1;
  return v;
}

IntVector SymplecticLattice::b(std::size_t i) const {
  IntVector v = zero_vector(rank());
  v.at(2 * (i - 1) + 1) = 1;
  return v;
}

}  // namespace trisect
