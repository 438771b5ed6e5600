#include "trisect/cohomology.hpp"

#include <stdexcept>
#include <string>

#include "trisect/lattice.hpp"

namespace trisect {

namespace {

IntMatrix zero_matrix(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }

// Columns: for each generator w of part l of `domain`, -w into block l and +w
// into block l + 1 of `codomain`, both in canonical coordinates. This is zeta
// (and the Cech differential delta_1) in the cyclic pair convention.
IntMatrix cyclic_difference(const std::array<const Subgroup*, 3>& domain,
                            const std::array<const Subgroup*, 3>& codomain) {
  std::size_t rows = 0, cols = 0;
  std::array<std::size_t, 3> row_offset{};
  for (std::size_t l = 0; l < 3; ++l) {
    row_offset[l] = rows;
    rows += codomain[l]->rank();
    cols += domain[l]->rank();
  }
  IntMatrix m(rows, cols);
  std::size_t col = 0;
  for (std::size_t l = 0; l < 3; ++l) {
    const std::size_t next = (l + 1) % 3;
    for (const auto& w : domain[l]->vectors()) {
      const auto here = codomain[l]->coordinates(w);
      const auto there = codomain[next]->coordinates(w);
      if (!here || !there) throw std::logic_error("cyclic_difference: generator outside target");
      for (std::size_t r = 0; r < here->size(); ++r) m(row_offset[l] + r, col) -= (*here)[r];
      for (std::size_t r = 0; r < there->size(); ++r) m(row_offset[next] + r, col) += (*there)[r];
      ++col;
    }
  }
  return m;
}

IntMatrix summation(const std::array<const Subgroup*, 3>& parts, std::size_t ambient_rank) {
  IntMatrix m(ambient_rank, 0);
  for (const auto* part : parts) m = hconcat(m, part->basis());
  return m;
}

std::vector<Integer> normalize_torsion(const std::vector<Integer>& factors) {
  IntMatrix diag(factors.size(), factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i) diag(i, i) = factors[i];
  std::vector<Integer> out;
  for (const auto& f : smith_normal_form(diag).invariant_factors())
    if (f != 1) out.push_back(f);
  return out;
}

}  // namespace

std::string HomologyGroup::to_string() const {
  std::string s;
  if (rank == 1) s = "Z";
  else if (rank > 1) s = "Z^" + std::to_string(rank);
  for (const auto& t : torsion) {
    if (!s.empty()) s += " + ";
    s += "Z/" + t.get_str();
  }
  return s.empty() ? "0" : s;
}

HomologyGroup direct_sum(const HomologyGroup& a, const HomologyGroup& b) {
  std::vector<Integer> factors = a.torsion;
  factors.insert(factors.end(), b.torsion.begin(), b.torsion.end());
  return HomologyGroup{a.rank + b.rank, normalize_torsion(factors)};
}

FreeChainComplex::FreeChainComplex(std::vector<ChainTerm> terms, std::vector<IntMatrix> differentials)
    : terms_(std::move(terms)), differentials_(std::move(differentials)) {
  if (terms_.empty()) throw std::invalid_argument("FreeChainComplex: no terms");
  if (differentials_.size() + 1 != terms_.size())
    throw std::invalid_argument("FreeChainComplex: need one differential between each pair of terms");
  for (std::size_t i = 0; i < differentials_.size(); ++i) {
    const IntMatrix& d = differentials_[i];
    if (d.cols() != terms_[i].rank || d.rows() != terms_[i + 1].rank)
      throw std::invalid_argument("FreeChainComplex: differential " + std::to_string(i) +
                                  " has shape " + std::to_string(d.rows()) + "x" +
                                  std::to_string(d.cols()));
  }
  for (std::size_t i = 0; i + 1 < differentials_.size(); ++i)
    if (!(differentials_[i + 1] * differentials_[i]).is_zero())
      throw std::invalid_argument("FreeChainComplex: d" + std::to_string(i + 1) + " * d" +
                                  std::to_string(i) + " != 0");
}

std::vector<std::size_t> FreeChainComplex::ranks() const {
  std::vector<std::size_t> out;
  for (const auto& t : terms_) out.push_back(t.rank);
  return out;
}

std::size_t FreeChainComplex::position_of(int degree) const {
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].degree == degree) return i;
  throw std::out_of_range("FreeChainComplex: no term of degree " + std::to_string(degree));
}

HomologyData homology_with_generators(const FreeChainComplex& c, int degree) {
  const std::size_t p = c.position_of(degree);
  const std::size_t n = c.terms()[p].rank;
  const IntMatrix outgoing =
      p + 1 < c.terms().size() ? c.differentials()[p] : zero_matrix(0, n);
  const IntMatrix incoming = p > 0 ? c.differentials()[p - 1] : zero_matrix(n, 0);

  const Subgroup cycles = kernel_basis(outgoing);
  const IntMatrix cycle_basis = cycles.basis();
  IntMatrix boundaries(cycles.rank(), incoming.cols());
  for (std::size_t j = 0; j < incoming.cols(); ++j) {
    const auto coords = cycles.coordinates(incoming.column(j));
    if (!coords) throw std::logic_error("homology: boundary is not a cycle");
    for (std::size_t i = 0; i < coords->size(); ++i) boundaries(i, j) = (*coords)[i];
  }
  const SmithForm snf = smith_normal_form(boundaries);
  const std::size_t r = snf.rank();

  HomologyData out;
  out.group.rank = cycles.rank() - r;
  const IntMatrix generators = cycle_basis * snf.left_inverse;
  for (std::size_t i = 0; i < r; ++i)
    if (snf.diagonal(i, i) != 1) {
      out.group.torsion.push_back(snf.diagonal(i, i));
      out.torsion_generators.push_back(generators.column(i));
    }
  for (std::size_t i = r; i < cycles.rank(); ++i) out.free_generators.push_back(generators.column(i));
  return out;
}

HomologyGroup homology(const FreeChainComplex& c, int degree) {
  return homology_with_generators(c, degree).group;
}

FreeChainComplex build_fm_complex(const Trisection& t) {
  const std::size_t n = t.rank();
  const std::array<const Subgroup*, 3> pairs = {&t.pair_intersection(0), &t.pair_intersection(1),
                                                &t.pair_intersection(2)};
  const std::array<const Subgroup*, 3> lags = {&t.lagrangian(0), &t.lagrangian(1), &t.lagrangian(2)};
  const IntMatrix zeta = cyclic_difference(pairs, lags);
  const IntMatrix iota = summation(lags, n);
  std::vector<ChainTerm> terms = {
      {"Z", 1, 4},
      {"(+) L_l cap L_l+1", zeta.cols(), 3},
      {"(+) L_l", iota.cols(), 2},
      {"H1(Sigma)", n, 1},
      {"Z", 1, 0},
  };
  return FreeChainComplex(std::move(terms),
                          {zero_matrix(zeta.cols(), 1), zeta, iota, zero_matrix(1, n)});
}

std::array<HomologyGroup, 5> fm_homology(const Trisection& t) {
  const FreeChainComplex c = build_fm_complex(t);
  std::array<HomologyGroup, 5> out;
  for (int k = 0; k < 5; ++k) out[k] = homology(c, k);
  return out;
}

FreeChainComplex build_cech_complex(const Trisection& t, int j) {
  switch (j) {
    case 0: {
      const IntMatrix delta0 = {{1, -1, 0}, {0, 1, -1}, {-1, 0, 1}};
      const IntMatrix delta1 = {{1, 1, 1}};
      return FreeChainComplex({{"H0(Z_l)", 3, 0}, {"H0(H_l)", 3, 1}, {"H0(Sigma)", 1, 2}},
                              {delta0, delta1});
    }
    case 1: {
      const SymplecticLattice& surface = t.surface();
      std::array<Subgroup, 3> m;
      for (std::size_t l = 0; l < 3; ++l) m[l] = surface.m_subgroup(t.lagrangian(l));
      std::array<Subgroup, 3> sectors;
      for (std::size_t l = 0; l < 3; ++l) sectors[l] = subgroup_intersection(m[l], m[(l + 1) % 3]);
      const std::array<const Subgroup*, 3> dom = {&sectors[0], &sectors[1], &sectors[2]};
      const std::array<const Subgroup*, 3> mid = {&m[0], &m[1], &m[2]};
      const IntMatrix delta1 = cyclic_difference(dom, mid);
      const IntMatrix delta2 = summation(mid, t.rank());
      return FreeChainComplex({{"H1(Z_l)", delta1.cols(), 0},
                               {"H1(H_l)", delta2.cols(), 1},
                               {"H1(Sigma)", t.rank(), 2}},
                              {delta1, delta2});
    }
    case 2:
      return FreeChainComplex({{"H2(Z_l)", 0, 0}, {"H2(H_l)", 0, 1}, {"H2(Sigma)", 1, 2}},
                              {zero_matrix(0, 0), zero_matrix(1, 0)});
    default:
      throw std::out_of_range("build_cech_complex: j must be 0, 1 or 2");
  }
}

FreeChainComplex build_dual_complex(const Trisection& t) {
  const std::size_t n = t.rank();
  std::array<std::size_t, 3> mid_offset{}, out_offset{};
  std::size_t mid = 0, out = 0;
  for (std::size_t l = 0; l < 3; ++l) {
    if (!t.handlebody_homology(l).is_free() || !t.sector_homology(l).is_free())
      throw std::logic_error("build_dual_complex: quotient groups must be free");
    mid_offset[l] = mid;
    out_offset[l] = out;
    mid += t.handlebody_homology(l).free_rank();
    out += t.sector_homology(l).free_rank();
  }
  IntMatrix restrict_map(0, n);
  for (std::size_t l = 0; l < 3; ++l)
    restrict_map = vconcat(restrict_map, t.handlebody_homology(l).free_projection());

  IntMatrix difference(out, mid);
  for (std::size_t l = 0; l < 3; ++l) {
    const std::size_t next = (l + 1) % 3;
    const IntMatrix to_sector = t.sector_homology(l).free_projection();
    const IntMatrix own = to_sector * t.handlebody_homology(l).free_lift();
    const IntMatrix other = to_sector * t.handlebody_homology(next).free_lift();
    for (std::size_t r = 0; r < own.rows(); ++r) {
      for (std::size_t c = 0; c < own.cols(); ++c) difference(out_offset[l] + r, mid_offset[l] + c) += own(r, c);
      for (std::size_t c = 0; c < other.cols(); ++c)
        difference(out_offset[l] + r, mid_offset[next] + c) -= other(r, c);
    }
  }
  return FreeChainComplex({{"H1(Sigma)", n, 3}, {"(+) H1(H_l)", mid, 2}, {"(+) H1(Z_l)", out, 1}},
                          {restrict_map, difference});
}

HomologyGroup HodgeDiamond::cohomology(int k) const {
  HomologyGroup total;
  for (int i = 0; i <= 2; ++i) {
    const int j = k - i;
    if (j < 0 || j > 2) continue;
    total = direct_sum(total, at(i, j));
  }
  return total;
}

HodgeDiamond hodge_diamond(const Trisection& t) {
  HodgeDiamond h;
  for (int j = 0; j <= 2; ++j) {
    const FreeChainComplex c = build_cech_complex(t, j);
    for (int i = 0; i <= 2; ++i) h.entries[i][j] = homology(c, i);
  }
  return h;
}

bool check_serre_duality(const HodgeDiamond& h) {
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; j <= 2; ++j)
      if (h.at(i, j).rank != h.at(2 - i, 2 - j).rank) return false;
  return true;
}

H2OracleCheck h2_oracle_check(const Trisection& t) {
  return H2OracleCheck{homology(build_fm_complex(t), 2), homology(build_dual_complex(t), 2),
                       homology(build_cech_complex(t, 1), 1)};
}

long euler_characteristic(const std::array<HomologyGroup, 5>& homology) {
  long chi = 0;
  for (std::size_t k = 0; k < homology.size(); ++k)
    chi += (k % 2 == 0 ? 1 : -1) * static_cast<long>(homology[k].rank);
  return chi;
}

}  // namespace trisect
