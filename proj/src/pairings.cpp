#include "trisect/pairings.hpp"

#include <stdexcept>
#include <string>

#include "trisect/cohomology.hpp"
#include "trisect/lattice.hpp"

namespace trisect {

namespace {

std::string part_name(std::size_t l) { return "b" + std::to_string(l + 1); }

// Splits a vector in (+) L_l coordinates into ambient classes.
OneOneCocycle cocycle_from_block_coordinates(const Trisection& t, const IntVector& coords) {
  OneOneCocycle x;
  std::size_t offset = 0;
  for (std::size_t l = 0; l < 3; ++l) {
    const Subgroup& lag = t.lagrangian(l);
    IntVector c(coords.begin() + static_cast<std::ptrdiff_t>(offset),
                coords.begin() + static_cast<std::ptrdiff_t>(offset + lag.rank()));
    x.parts[l] = lag.basis() * c;
    offset += lag.rank();
  }
  return x;
}

IntVector require_solution(const IntMatrix& m, const IntVector& rhs, const char* what) {
  auto sol = solve_integer(m, rhs);
  if (!sol) throw std::runtime_error(std::string(what) + ": singular integer solve");
  return *sol;
}

std::optional<std::vector<int>> characteristic_mod2(const IntMatrix& gram) {
  const std::size_t n = gram.rows();
  // Augmented system G w = diag(G) over F_2.
  std::vector<std::vector<int>> a(n, std::vector<int>(n + 1, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = mpz_odd_p(gram(i, j).get_mpz_t()) ? 1 : 0;
    a[i][n] = mpz_odd_p(gram(i, i).get_mpz_t()) ? 1 : 0;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && a[p][col] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[col]);
    for (std::size_t i = 0; i < n; ++i)
      if (i != col && a[i][col] == 1)
        for (std::size_t j = col; j <= n; ++j) a[i][j] ^= a[col][j];
  }
  std::vector<int> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = a[i][n];
  return w;
}

}  // namespace

std::optional<std::string> cocycle_violation(const Trisection& t, const OneOneCocycle& x) {
  IntVector total = zero_vector(t.rank());
  for (std::size_t l = 0; l < 3; ++l) {
    if (x.parts[l].size() != t.rank()) return part_name(l) + " has the wrong length";
    if (!t.lagrangian(l).contains(x.parts[l]))
      return part_name(l) + " is not in L_" + std::to_string(l + 1);
    total = add(total, x.parts[l]);
  }
  if (!is_zero(total)) return std::string("b1 + b2 + b3 != 0");
  return std::nullopt;
}

void check_cocycle(const Trisection& t, const OneOneCocycle& x) {
  if (auto v = cocycle_violation(t, x)) throw std::invalid_argument("not a (1,1)-cocycle: " + *v);
}

bool is_cocycle(const Trisection& t, const OneOneCocycle& x) { return !cocycle_violation(t, x); }

OneOneCocycle zero_cocycle(const Trisection& t) {
  OneOneCocycle x;
  for (auto& p : x.parts) p = zero_vector(t.rank());
  return x;
}

OneOneCocycle operator+(const OneOneCocycle& x, const OneOneCocycle& y) {
  OneOneCocycle z;
  for (std::size_t l = 0; l < 3; ++l) z.parts[l] = add(x.parts[l], y.parts[l]);
  return z;
}

OneOneCocycle operator-(const OneOneCocycle& x, const OneOneCocycle& y) {
  OneOneCocycle z;
  for (std::size_t l = 0; l < 3; ++l) z.parts[l] = subtract(x.parts[l], y.parts[l]);
  return z;
}

OneOneCocycle operator*(const Integer& c, const OneOneCocycle& x) {
  OneOneCocycle z;
  for (std::size_t l = 0; l < 3; ++l) z.parts[l] = scale(c, x.parts[l]);
  return z;
}

OneOneCocycle coboundary(const Trisection& t, const std::array<IntVector, 3>& w) {
  for (std::size_t l = 0; l < 3; ++l)
    if (!t.pair_intersection(l).contains(w[l]))
      throw std::invalid_argument("coboundary: w" + std::to_string(l + 1) +
                                  " is not in L_l cap L_l+1");
  return OneOneCocycle{{subtract(w[2], w[0]), subtract(w[0], w[1]), subtract(w[1], w[2])}};
}

std::vector<OneOneCocycle> h2_basis_cocycles(const Trisection& t) {
  const HomologyData h = homology_with_generators(build_fm_complex(t), 2);
  std::vector<OneOneCocycle> out;
  for (const auto& g : h.free_generators) out.push_back(cocycle_from_block_coordinates(t, g));
  return out;
}

std::vector<OneOneCocycle> h2_torsion_cocycles(const Trisection& t) {
  const HomologyData h = homology_with_generators(build_fm_complex(t), 2);
  std::vector<OneOneCocycle> out;
  for (const auto& g : h.torsion_generators) out.push_back(cocycle_from_block_coordinates(t, g));
  return out;
}

Integer intersection_pairing(const Trisection& t, const OneOneCocycle& x, const OneOneCocycle& y) {
  check_cocycle(t, x);
  check_cocycle(t, y);
  return t.surface().intersection_number(x.parts[0], y.parts[1]);
}

std::array<Integer, 3> pairing_expressions(const Trisection& t, const OneOneCocycle& x,
                                           const OneOneCocycle& y) {
  check_cocycle(t, x);
  check_cocycle(t, y);
  const SymplecticLattice& s = t.surface();
  return {s.intersection_number(x.parts[0], y.parts[1]), s.intersection_number(x.parts[1], y.parts[2]),
          s.intersection_number(x.parts[2], y.parts[0])};
}

Signature signature(const IntMatrix& symmetric) {
  const std::size_t n = symmetric.rows();
  if (symmetric.cols() != n || symmetric != symmetric.transpose())
    throw std::invalid_argument("signature: matrix is not symmetric");
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = mpq_class(symmetric(i, j));

  auto swap_index = [&](std::size_t p, std::size_t q) {
    std::swap(a[p], a[q]);
    for (auto& row : a) std::swap(row[p], row[q]);
  };
  auto add_index = [&](std::size_t target, std::size_t source, const mpq_class& c) {
    for (std::size_t j = 0; j < n; ++j) a[target][j] += c * a[source][j];
    for (std::size_t i = 0; i < n; ++i) a[i][target] += c * a[i][source];
  };

  Signature sig;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t j = k + 1;
      while (j < n && a[j][j] == 0) ++j;
      if (j < n) {
        swap_index(k, j);
      } else {
        j = k + 1;
        while (j < n && a[k][j] == 0) ++j;
        if (j == n) {
          ++sig.zero;
          continue;
        }
        add_index(k, j, 1);  // a[k][k] becomes 2 a[k][j]
      }
    }
    const mpq_class pivot = a[k][k];
    if (pivot > 0) ++sig.positive;
    else ++sig.negative;
    for (std::size_t i = k + 1; i < n; ++i)
      if (a[i][k] != 0) add_index(i, k, -a[i][k] / pivot);
  }
  return sig;
}

IntersectionForm intersection_form(const Trisection& t) {
  const SecondCohomology h2(t);
  IntersectionForm f;
  f.gram = h2.gram();
  f.signature = signature(f.gram);
  f.determinant = determinant(f.gram);
  f.unimodular = abs(f.determinant) == 1;
  f.characteristic = characteristic_mod2(f.gram);
  if (f.characteristic) {
    f.even = true;
    for (int w : *f.characteristic) f.even = f.even && w == 0;
  } else {
    f.even = true;
    for (std::size_t i = 0; i < f.gram.rows(); ++i)
      f.even = f.even && mpz_even_p(f.gram(i, i).get_mpz_t());
  }
  return f;
}

Integer pairing_h3_h1(const Trisection& t, const IntVector& h3, const IntVector& h1) {
  if (h3.size() != t.rank() || h1.size() != t.rank())
    throw std::invalid_argument("pairing_h3_h1: classes must have length 2g");
  if (!t.triple_intersection().contains(h1))
    throw std::invalid_argument("pairing_h3_h1: h1 is not in L_1 cap L_2 cap L_3");
  return t.surface().intersection_number(h3, h1);
}

IntMatrix h3_h1_pairing_matrix(const Trisection& t) {
  const QuotientPresentation h3 = quotient(t.rank(), t.total_sum());
  const IntMatrix lifts = h3.free_lift();
  const auto& h1 = t.triple_intersection().vectors();
  IntMatrix m(lifts.cols(), h1.size());
  for (std::size_t i = 0; i < lifts.cols(); ++i)
    for (std::size_t j = 0; j < h1.size(); ++j) m(i, j) = pairing_h3_h1(t, lifts.column(i), h1[j]);
  return m;
}

std::optional<std::string> cycle_violation(const Trisection& t, const std::array<IntVector, 3>& lifts) {
  for (std::size_t l = 0; l < 3; ++l)
    if (lifts[l].size() != t.rank())
      return "a" + std::to_string(l + 1) + " has length " + std::to_string(lifts[l].size()) +
             ", expected " + std::to_string(t.rank());
  for (std::size_t l = 0; l < 3; ++l) {
    const std::size_t next = (l + 1) % 3;
    if (!t.sector_homology(l).is_zero(subtract(lifts[l], lifts[next])))
      return "a" + std::to_string(l + 1) + " - a" + std::to_string(next + 1) + " != 0 in H1(Z_" +
             std::to_string(l + 1) + ")";
  }
  return std::nullopt;
}

H2DualRep make_dual_rep(const Trisection& t, const std::array<IntVector, 3>& lifts) {
  if (auto v = cycle_violation(t, lifts)) throw std::invalid_argument("not a cycle: " + *v);
  H2DualRep k;
  k.lifts = lifts;
  for (std::size_t l = 0; l < 3; ++l) k.coordinates[l] = t.handlebody_homology(l).project(lifts[l]);
  return k;
}

H2DualRep zero_dual_rep(const Trisection& t) {
  return make_dual_rep(t, {zero_vector(t.rank()), zero_vector(t.rank()), zero_vector(t.rank())});
}

H2DualRep operator+(const H2DualRep& a, const H2DualRep& b) {
  H2DualRep k;
  for (std::size_t l = 0; l < 3; ++l) {
    k.lifts[l] = add(a.lifts[l], b.lifts[l]);
    k.coordinates[l] = add(a.coordinates[l], b.coordinates[l]);
  }
  return k;
}

Integer evaluate_on_surface_class(const Trisection& t, const OneOneCocycle& x, const H2DualRep& k) {
  check_cocycle(t, x);
  if (auto v = cycle_violation(t, k.lifts)) throw std::invalid_argument("not a cycle: " + *v);
  Integer total = 0;
  for (std::size_t l = 0; l < 3; ++l) total += t.surface().intersection_number(x.parts[l], k.lifts[l]);
  return total;
}

SecondCohomology::SecondCohomology(const Trisection& t) : t_(t), basis_(h2_basis_cocycles(t)) {
  const FreeChainComplex dual = build_dual_complex(t);
  const HomologyData middle = homology_with_generators(dual, 2);
  for (const auto& g : middle.free_generators) {
    std::array<IntVector, 3> lifts;
    std::size_t offset = 0;
    for (std::size_t l = 0; l < 3; ++l) {
      const QuotientPresentation& q = t.handlebody_homology(l);
      IntVector c(g.begin() + static_cast<std::ptrdiff_t>(offset),
                  g.begin() + static_cast<std::ptrdiff_t>(offset + q.coordinate_count()));
      lifts[l] = q.lift(c);
      offset += q.coordinate_count();
    }
    dual_basis_.push_back(make_dual_rep(t, lifts));
  }
  const std::size_t r = basis_.size();
  gram_ = IntMatrix(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) gram_(i, j) = intersection_pairing(t_, basis_[i], basis_[j]);
  evaluation_ = IntMatrix(r, dual_basis_.size());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < dual_basis_.size(); ++j)
      evaluation_(i, j) = evaluate_on_surface_class(t_, basis_[i], dual_basis_[j]);
}

IntVector SecondCohomology::coordinates(const OneOneCocycle& x) const {
  IntVector rhs;
  for (const auto& b : basis_) rhs.push_back(intersection_pairing(t_, b, x));
  return require_solution(gram_, rhs, "SecondCohomology::coordinates");
}

OneOneCocycle SecondCohomology::from_coordinates(const IntVector& c) const {
  if (c.size() != basis_.size()) throw std::invalid_argument("from_coordinates: wrong length");
  OneOneCocycle x = zero_cocycle(t_);
  for (std::size_t i = 0; i < c.size(); ++i) x = x + c[i] * basis_[i];
  return x;
}

H2DualRep SecondCohomology::poincare_dual_rep(const OneOneCocycle& x) const {
  IntVector rhs;
  for (const auto& b : basis_) rhs.push_back(intersection_pairing(t_, b, x));
  const IntVector coeffs = require_solution(evaluation_, rhs, "poincare_dual_rep");
  H2DualRep k = zero_dual_rep(t_);
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    std::array<IntVector, 3> lifts;
    for (std::size_t l = 0; l < 3; ++l) lifts[l] = scale(coeffs[j], dual_basis_[j].lifts[l]);
    k = k + make_dual_rep(t_, lifts);
  }
  return k;
}

OneOneCocycle SecondCohomology::class_of(const H2DualRep& k) const {
  IntVector rhs;
  for (const auto& b : basis_) rhs.push_back(evaluate_on_surface_class(t_, b, k));
  return from_coordinates(require_solution(gram_, rhs, "SecondCohomology::class_of"));
}

H2DualRep poincare_dual_rep(const Trisection& t, const OneOneCocycle& x) {
  return SecondCohomology(t).poincare_dual_rep(x);
}

}  // namespace trisect
