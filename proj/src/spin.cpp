#include "trisect/spin.hpp"

#include <stdexcept>
#include <string>

namespace trisect {

Mod2Vector reduce_mod2(const IntVector& x) {
  Mod2Vector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = mpz_odd_p(x[i].get_mpz_t()) ? 1 : 0;
  return out;
}

std::uint8_t intersection_mod2(const Mod2Vector& x, const Mod2Vector& y) {
  if (x.size() != y.size() || x.size() % 2 != 0)
    throw std::invalid_argument("intersection_mod2: length mismatch");
  std::uint8_t s = 0;
  for (std::size_t k = 0; k + 1 < x.size(); k += 2) s ^= (x[k] & y[k + 1]) ^ (x[k + 1] & y[k]);
  return s;
}

std::uint8_t evaluate(const QuadraticEnhancement& q, const Mod2Vector& x) {
  if (x.size() != q.basis_values.size())
    throw std::invalid_argument("evaluate: class has length " + std::to_string(x.size()) +
                                ", expected " + std::to_string(q.basis_values.size()));
  std::uint8_t s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s ^= x[i] & q.basis_values[i];
  // Only <a_k, b_k> is nonzero among basis pairs with i < j.
  for (std::size_t k = 0; k + 1 < x.size(); k += 2) s ^= x[k] & x[k + 1];
  return s;
}

std::uint8_t evaluate(const QuadraticEnhancement& q, const IntVector& x) {
  return evaluate(q, reduce_mod2(x));
}

bool vanishes_on(const QuadraticEnhancement& q, const CutSystem& cs) {
  for (const auto& c : cs.curves)
    if (evaluate(q, c) != 0) return false;
  return true;
}

std::vector<QuadraticEnhancement> enumerate_spin(const Trisection& t, std::size_t genus_bound) {
  if (t.genus() > genus_bound)
    throw std::length_error("enumerate_spin: genus " + std::to_string(t.genus()) +
                            " exceeds the enumeration bound " + std::to_string(genus_bound));
  const std::size_t n = t.rank();
  std::vector<Mod2Vector> curves;
  for (const auto& cs : t.diagram().systems)
    for (const auto& c : cs.curves) curves.push_back(reduce_mod2(c));

  std::vector<QuadraticEnhancement> out;
  QuadraticEnhancement q{Mod2Vector(n, 0)};
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    // The first basis value is the most significant bit, so increasing
    // masks visit enhancements in lexicographic order.
    for (std::size_t i = 0; i < n; ++i) q.basis_values[i] = (mask >> (n - 1 - i)) & 1U;
    bool ok = true;
    for (const auto& c : curves)
      if (evaluate(q, c) != 0) {
        ok = false;
        break;
      }
    if (ok) out.push_back(q);
  }
  return out;
}

Integer hom_to_z2_order(const HomologyGroup& h) {
  std::size_t exponent = h.rank;
  for (const auto& t : h.torsion)
    if (mpz_even_p(t.get_mpz_t())) ++exponent;
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, exponent);
  return out;
}

}  // namespace trisect
