#pragma once

// Independent oracles shared by the test binaries. None of these call the
// Smith-form or Hermite-form code under test.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "trisect/diagram.hpp"
#include "trisect/int_matrix.hpp"

namespace oracle {

using trisect::Integer;
using trisect::IntMatrix;
using trisect::IntVector;

/// Rank over Q by fraction-exact Gaussian elimination.
inline std::size_t rational_rank(const IntMatrix& m) {
  std::vector<std::vector<mpq_class>> a(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && a[p][c] == 0) ++p;
    if (p == m.rows()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (a[i][c] == 0) continue;
      const mpq_class f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < m.cols(); ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

inline Integer det_small(const std::vector<std::vector<Integer>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  Integer d = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<Integer>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Integer> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(a[i][j]);
      minor.push_back(row);
    }
    const Integer term = a[0][c] * det_small(minor);
    d += (c % 2 == 0) ? term : Integer(-term);
  }
  return d;
}

/// Determinant by Gaussian elimination over Q.
inline Integer det_rational(const std::vector<std::vector<Integer>>& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  mpq_class det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      const mpq_class f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return Integer(det);
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

/// gcd of all k x k minors (cofactor expansion; small matrices only).
inline Integer determinantal_divisor(const IntMatrix& m, std::size_t k) {
  std::vector<std::vector<std::size_t>> rs, cs;
  std::vector<std::size_t> cur;
  subsets(m.rows(), k, 0, cur, rs);
  subsets(m.cols(), k, 0, cur, cs);
  Integer g = 0;
  for (const auto& r : rs)
    for (const auto& c : cs) {
      std::vector<std::vector<Integer>> a(k, std::vector<Integer>(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) a[i][j] = m(r[i], c[j]);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), Integer(det_rational(a)).get_mpz_t());
    }
  return g;
}

/// Nonzero invariant factors d_k / d_{k-1}.
inline std::vector<Integer> invariant_factors(const IntMatrix& m) {
  std::vector<Integer> out;
  Integer prev = 1;
  for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
    const Integer d = determinantal_divisor(m, k);
    if (d == 0) break;
    out.push_back(Integer(d / prev));
    prev = d;
  }
  return out;
}

/// Factors greater than one: the torsion of the cokernel.
inline std::vector<Integer> cokernel_torsion(const IntMatrix& m) {
  std::vector<Integer> out;
  for (const auto& f : invariant_factors(m))
    if (abs(f) != 1) out.push_back(abs(f));
  return out;
}

/// Inertia of a symmetric matrix from the characteristic polynomial
/// (Faddeev-LeVerrier); all roots are real, so Descartes' rule is exact.
struct Inertia {
  std::size_t positive = 0, negative = 0, zero = 0;
};

inline Inertia descartes_inertia(const IntMatrix& s) {
  const std::size_t n = s.rows();
  // p(x) = x^n + c_1 x^{n-1} + ... + c_n
  std::vector<mpq_class> c(n + 1);
  c[0] = 1;
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n)), mk(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = s(i, j);
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{k-1} I with M_0 = 0, c_k = -tr(A M_k) / k
    std::vector<std::vector<mpq_class>> next(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        mpq_class v = 0;
        for (std::size_t l = 0; l < n; ++l) v += a[i][l] * mk[l][j];
        if (i == j) v += c[k - 1];
        next[i][j] = v;
      }
    mk = next;
    mpq_class tr = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) tr += a[i][l] * mk[l][i];
    c[k] = -tr / k;
  }
  Inertia out;
  // coefficients of p by ascending power: coef[d] = c[n - d]
  std::size_t z = 0;
  while (z < n && c[n - z] == 0) ++z;
  out.zero = z;
  auto sign_changes = [&](bool negate_odd) {
    std::size_t changes = 0;
    int last = 0;
    for (std::size_t d = z; d <= n; ++d) {
      int sg = sgn(c[n - d]);
      if (negate_odd && d % 2 == 1) sg = -sg;
      if (sg == 0) continue;
      if (last != 0 && sg != last) ++changes;
      last = sg;
    }
    return changes;
  };
  out.positive = sign_changes(false);
  out.negative = sign_changes(true);
  return out;
}

/// <x, y> in the a_i, b_i basis, written out directly.
inline Integer omega(const IntVector& x, const IntVector& y) {
  Integer s = 0;
  for (std::size_t i = 0; i + 1 < x.size(); i += 2) s += x[i] * y[i + 1] - x[i + 1] * y[i];
  return s;
}

/// Product of random transvections x -> x +- <x, v> v, v = e_i or e_i +- e_j.
inline IntMatrix random_symplectic(std::size_t g, std::mt19937_64& rng, std::size_t length) {
  const std::size_t n = 2 * g;
  IntMatrix m = IntMatrix::identity(n);
  for (std::size_t step = 0; step < length; ++step) {
    IntVector v(n, 0);
    v[rng() % n] += 1;
    if (rng() % 2) v[rng() % n] += (rng() % 2) ? 1 : -1;
    const long sign = (rng() % 2) ? 1 : -1;
    IntMatrix t = IntMatrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
      IntVector e(n, 0);
      e[c] = 1;
      const Integer f = sign * omega(e, v);
      for (std::size_t r = 0; r < n; ++r) t(r, c) += f * v[r];
    }
    m = t * m;
  }
  return m;
}

/// A genus-3 diagram with H_1 = Z/2 (pair sums saturated, total sum of index 2).
inline trisect::TrisectionDiagram torsion_example() {
  trisect::TrisectionDiagram d;
  d.genus = 3;
  d.systems[0].curves = {{1, 0, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0}, {0, 0, 0, 0, 1, 0}};
  d.systems[1].curves = {{1, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 0, 1}};
  d.systems[2].curves = {{3, 2, -1, 1, -1, 1}, {2, 2, -1, 3, -1, 1}, {0, 0, 0, -1, 1, 0}};
  d.label = "torsion-Z/2";
  return d;
}

/// Builtins, connected sums, torsion examples, and seeded random diagrams (g <= 4).
inline std::vector<trisect::TrisectionDiagram> diagram_suite(std::size_t random_count = 100) {
  std::vector<trisect::TrisectionDiagram> out;
  for (const auto& n : trisect::builtin_names()) out.push_back(trisect::builtin(n));
  for (const char* n : {"CP2#CP2bar", "S1xS3#S1xS3", "CP2#S1xS3", "S2xS2#CP2bar"}) out.push_back(trisect::builtin(n));
  out.push_back(torsion_example());
  out.push_back(trisect::connected_sum(torsion_example(), trisect::builtin("S1xS3")));
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 4; ++i) {
    trisect::TrisectionDiagram d = trisect::apply_linear_map(torsion_example(), random_symplectic(3, rng, 10));
    d.label = "torsion-Z/2 scrambled " + std::to_string(i);
    out.push_back(d);
  }
  for (std::uint64_t seed = 0; seed < random_count; ++seed) {
    if (seed % 2 == 0)
      out.push_back(trisect::random_diagram(1 + seed % 4, seed));
    else
      out.push_back(trisect::random_composite_diagram(seed, 4));
  }
  return out;
}

}  // namespace oracle

namespace oracle {

struct Group {
  std::size_t rank = 0;
  std::vector<Integer> torsion;
};

/// Homology at term `pos` of a complex T_0 -> T_1 -> ...: ranks over Q, and
/// torsion from the determinantal divisors of the incoming map.
inline Group complex_homology(const std::vector<std::size_t>& ranks, const std::vector<IntMatrix>& d,
                              std::size_t pos) {
  const std::size_t in = pos > 0 ? rational_rank(d[pos - 1]) : 0;
  const std::size_t out = pos < d.size() ? rational_rank(d[pos]) : 0;
  Group g;
  g.rank = ranks[pos] - in - out;
  if (pos > 0) {
    g.torsion = cokernel_torsion(d[pos - 1]);
    std::sort(g.torsion.begin(), g.torsion.end());
  }
  return g;
}

}  // namespace oracle
