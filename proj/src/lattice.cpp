#include "trisect/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace trisect {

namespace {

// Extended gcd: p*a + q*b == g with g > 0.
void extended_gcd(const Integer& a, const Integer& b, Integer& g, Integer& p, Integer& q) {
  mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

class SmithReducer {
 public:
  explicit SmithReducer(const IntMatrix& m)
      : a_(m),
        left_(IntMatrix::identity(m.rows())),
        left_inv_(IntMatrix::identity(m.rows())),
        right_(IntMatrix::identity(m.cols())),
        right_inv_(IntMatrix::identity(m.cols())) {}

  SmithForm run() {
    const std::size_t steps = std::min(a_.rows(), a_.cols());
    for (std::size_t t = 0; t < steps; ++t) {
      if (!bring_pivot(t)) break;
      for (;;) {
        clear_column(t);
        clear_row(t);
        if (!column_clear(t)) continue;
        if (fix_divisibility(t)) continue;
        break;
      }
      if (a_(t, t) < 0) negate_row(t);
    }
    return SmithForm{left_, left_inv_, a_, right_, right_inv_};
  }

 private:
  bool bring_pivot(std::size_t t) {
    bool found = false;
    std::size_t bi = t, bj = t;
    Integer best;
    for (std::size_t i = t; i < a_.rows(); ++i)
      for (std::size_t j = t; j < a_.cols(); ++j) {
        if (a_(i, j) == 0) continue;
        Integer v = abs(a_(i, j));
        if (!found || v < best) {
          best = v;
          bi = i;
          bj = j;
          found = true;
        }
      }
    if (!found) return false;
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  bool column_clear(std::size_t t) const {
    for (std::size_t i = t + 1; i < a_.rows(); ++i)
      if (a_(i, t) != 0) return false;
    return true;
  }

  void clear_column(std::size_t t) {
    for (std::size_t i = t + 1; i < a_.rows(); ++i) {
      if (a_(i, t) == 0) continue;
      Integer a = a_(t, t), b = a_(i, t);
      if (mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
        add_row_multiple(i, t, -(b / a));
        continue;
      }
      Integer g, p, q;
      extended_gcd(a, b, g, p, q);
      combine_rows(t, i, p, q, -(b / g), a / g);
    }
  }

  void clear_row(std::size_t t) {
    for (std::size_t j = t + 1; j < a_.cols(); ++j) {
      if (a_(t, j) == 0) continue;
      Integer a = a_(t, t), b = a_(t, j);
      if (mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
        add_col_multiple(j, t, -(b / a));
        continue;
      }
      Integer g, p, q;
      extended_gcd(a, b, g, p, q);
      combine_cols(t, j, p, q, -(b / g), a / g);
    }
  }

  // Returns true if a row was folded into row t to restore d_t | everything.
  bool fix_divisibility(std::size_t t) {
    for (std::size_t i = t + 1; i < a_.rows(); ++i)
      for (std::size_t j = t + 1; j < a_.cols(); ++j)
        if (!mpz_divisible_p(a_(i, j).get_mpz_t(), a_(t, t).get_mpz_t())) {
          add_row_multiple(t, i, 1);
          return true;
        }
    return false;
  }

  // Each row operation A <- M A is mirrored as left <- M left and
  // left_inv <- left_inv M^-1; column operations likewise on the right.
  void swap_rows(std::size_t i, std::size_t j) {
    a_.swap_rows(i, j);
    left_.swap_rows(i, j);
    left_inv_.swap_cols(i, j);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    a_.swap_cols(i, j);
    right_.swap_cols(i, j);
    right_inv_.swap_rows(i, j);
  }
  void add_row_multiple(std::size_t target, std::size_t source, const Integer& c) {
    a_.add_row_multiple(target, source, c);
    left_.add_row_multiple(target, source, c);
    left_inv_.add_col_multiple(source, target, -c);
  }
  void add_col_multiple(std::size_t target, std::size_t source, const Integer& c) {
    a_.add_col_multiple(target, source, c);
    right_.add_col_multiple(target, source, c);
    right_inv_.add_row_multiple(source, target, -c);
  }
  void negate_row(std::size_t i) {
    a_.negate_row(i);
    left_.negate_row(i);
    left_inv_.negate_col(i);
  }
  // (p s - q r) == 1 is required of both combinations.
  void combine_rows(std::size_t i, std::size_t j, const Integer& p, const Integer& q,
                    const Integer& r, const Integer& s) {
    a_.combine_rows(i, j, p, q, r, s);
    left_.combine_rows(i, j, p, q, r, s);
    left_inv_.combine_cols(i, j, s, -r, -q, p);
  }
  void combine_cols(std::size_t i, std::size_t j, const Integer& p, const Integer& q,
                    const Integer& r, const Integer& s) {
    a_.combine_cols(i, j, p, q, r, s);
    right_.combine_cols(i, j, p, q, r, s);
    right_inv_.combine_rows(i, j, s, -r, -q, p);
  }

  IntMatrix a_;
  IntMatrix left_;
  IntMatrix left_inv_;
  IntMatrix right_;
  IntMatrix right_inv_;
};

// Row Hermite normal form of the given rows; zero rows are dropped.
void hermite_rows(std::vector<IntVector>& rows, std::size_t width,
                  std::vector<std::size_t>& pivots) {
  pivots.clear();
  std::size_t top = 0;
  for (std::size_t col = 0; col < width && top < rows.size(); ++col) {
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = top; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        if (best == rows.size() || abs(rows[i][col]) < abs(rows[best][col])) best = i;
      }
      if (best == rows.size()) break;
      std::swap(rows[top], rows[best]);
      bool done = true;
      for (std::size_t i = top + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        Integer q = floor_div(rows[i][col], rows[top][col]);
        for (std::size_t k = col; k < width; ++k) rows[i][k] -= q * rows[top][k];
        if (rows[i][col] != 0) done = false;
      }
      if (done) break;
    }
    if (top == rows.size() || rows[top][col] == 0) continue;
    if (rows[top][col] < 0)
      for (std::size_t k = col; k < width; ++k) rows[top][k] = -rows[top][k];
    const Integer& pivot = rows[top][col];
    for (std::size_t i = 0; i < top; ++i) {
      Integer q = floor_div(rows[i][col], pivot);
      if (q == 0) continue;
      for (std::size_t k = col; k < width; ++k) rows[i][k] -= q * rows[top][k];
    }
    pivots.push_back(col);
    ++top;
  }
  rows.resize(top);
}

}  // namespace

std::size_t SmithForm::rank() const {
  std::size_t r = 0;
  const std::size_t n = std::min(diagonal.rows(), diagonal.cols());
  while (r < n && diagonal(r, r) != 0) ++r;
  return r;
}

std::vector<Integer> SmithForm::invariant_factors() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < rank(); ++i) out.push_back(diagonal(i, i));
  return out;
}

SmithForm smith_normal_form(const IntMatrix& m) { return SmithReducer(m).run(); }

std::size_t rank(const IntMatrix& m) { return image(m).rank(); }

std::optional<IntVector> solve_integer(const IntMatrix& m, const IntVector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve_integer: dimension mismatch");
  const SmithForm snf = smith_normal_form(m);
  const IntVector c = snf.left * b;
  const std::size_t r = snf.rank();
  IntVector y = zero_vector(m.cols());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < r) {
      if (!mpz_divisible_p(c[i].get_mpz_t(), snf.diagonal(i, i).get_mpz_t())) return std::nullopt;
      y[i] = c[i] / snf.diagonal(i, i);
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  return snf.right * y;
}

Subgroup::Subgroup(std::size_t ambient_rank) : ambient_rank_(ambient_rank) {}

Subgroup Subgroup::span(std::size_t ambient_rank, const std::vector<IntVector>& generators) {
  Subgroup s(ambient_rank);
  s.vectors_ = generators;
  for (const auto& v : s.vectors_)
    if (v.size() != ambient_rank) throw std::invalid_argument("Subgroup: generator length mismatch");
  hermite_rows(s.vectors_, ambient_rank, s.pivots_);
  return s;
}

Subgroup Subgroup::from_columns(const IntMatrix& generators) {
  return span(generators.rows(), generators.columns());
}

Subgroup Subgroup::full(std::size_t ambient_rank) {
  return from_columns(IntMatrix::identity(ambient_rank));
}

IntMatrix Subgroup::basis() const { return IntMatrix::from_columns(ambient_rank_, vectors_); }

std::optional<IntVector> Subgroup::coordinates(const IntVector& v) const {
  if (v.size() != ambient_rank_) throw std::invalid_argument("Subgroup: vector length mismatch");
  IntVector residual = v;
  IntVector coeffs(vectors_.size());
  for (std::size_t k = 0; k < vectors_.size(); ++k) {
    const std::size_t p = pivots_[k];
    const Integer& pivot = vectors_[k][p];
    if (!mpz_divisible_p(residual[p].get_mpz_t(), pivot.get_mpz_t())) return std::nullopt;
    coeffs[k] = residual[p] / pivot;
    if (coeffs[k] != 0)
      for (std::size_t i = p; i < ambient_rank_; ++i) residual[i] -= coeffs[k] * vectors_[k][i];
  }
  if (!trisect::is_zero(residual)) return std::nullopt;
  return coeffs;
}

bool Subgroup::contains(const Subgroup& other) const {
  if (other.ambient_rank_ != ambient_rank_) return false;
  return std::all_of(other.vectors_.begin(), other.vectors_.end(),
                     [&](const IntVector& v) { return contains(v); });
}

QuotientPresentation::QuotientPresentation(std::size_t ambient_rank, const Subgroup& relations)
    : ambient_rank_(ambient_rank), relations_(relations) {
  if (relations.ambient_rank() != ambient_rank)
    throw std::invalid_argument("quotient: relations live in a different ambient rank");
  const SmithForm snf = smith_normal_form(relations.basis());
  relation_rank_ = snf.rank();
  free_rank_ = ambient_rank - relation_rank_;
  for (std::size_t i = 0; i < relation_rank_; ++i)
    if (snf.diagonal(i, i) != 1) {
      torsion_.push_back(snf.diagonal(i, i));
      torsion_rows_.push_back(i);
    }
  left_ = snf.left;
  left_inverse_ = snf.left_inverse;
}

IntVector QuotientPresentation::project(const IntVector& ambient) const {
  if (ambient.size() != ambient_rank_) throw std::invalid_argument("project: length mismatch");
  const IntVector y = left_ * ambient;
  IntVector out;
  out.reserve(coordinate_count());
  for (std::size_t k = 0; k < torsion_.size(); ++k)
    out.push_back(mod_floor(y[torsion_rows_[k]], torsion_[k]));
  for (std::size_t i = relation_rank_; i < ambient_rank_; ++i) out.push_back(y[i]);
  return out;
}

IntVector QuotientPresentation::lift(const IntVector& coordinates) const {
  if (coordinates.size() != coordinate_count()) throw std::invalid_argument("lift: length mismatch");
  IntVector y = zero_vector(ambient_rank_);
  for (std::size_t k = 0; k < torsion_.size(); ++k) y[torsion_rows_[k]] = coordinates[k];
  for (std::size_t f = 0; f < free_rank_; ++f)
    y[relation_rank_ + f] = coordinates[torsion_.size() + f];
  return left_inverse_ * y;
}

bool QuotientPresentation::is_zero(const IntVector& ambient) const {
  return relations_.contains(ambient);
}

IntMatrix QuotientPresentation::free_projection() const {
  IntMatrix out(free_rank_, ambient_rank_);
  for (std::size_t f = 0; f < free_rank_; ++f)
    for (std::size_t j = 0; j < ambient_rank_; ++j) out(f, j) = left_(relation_rank_ + f, j);
  return out;
}

IntMatrix QuotientPresentation::free_lift() const {
  IntMatrix out(ambient_rank_, free_rank_);
  for (std::size_t i = 0; i < ambient_rank_; ++i)
    for (std::size_t f = 0; f < free_rank_; ++f) out(i, f) = left_inverse_(i, relation_rank_ + f);
  return out;
}

Subgroup kernel_basis(const IntMatrix& m) {
  const SmithForm snf = smith_normal_form(m);
  std::vector<IntVector> generators;
  for (std::size_t j = snf.rank(); j < m.cols(); ++j) generators.push_back(snf.right.column(j));
  return Subgroup::span(m.cols(), generators);
}

Subgroup image(const IntMatrix& m) { return Subgroup::span(m.rows(), m.columns()); }

QuotientPresentation quotient(std::size_t ambient_rank, const Subgroup& relations) {
  return QuotientPresentation(ambient_rank, relations);
}

Subgroup subgroup_intersection(const Subgroup& a, const Subgroup& b) {
  if (a.ambient_rank() != b.ambient_rank())
    throw std::invalid_argument("subgroup_intersection: ambient rank mismatch");
  const IntMatrix basis_a = a.basis();
  const Subgroup solutions = kernel_basis(hconcat(basis_a, -b.basis()));
  std::vector<IntVector> generators;
  for (const auto& sol : solutions.vectors()) {
    IntVector x(sol.begin(), sol.begin() + static_cast<std::ptrdiff_t>(a.rank()));
    generators.push_back(basis_a * x);
  }
  return Subgroup::span(a.ambient_rank(), generators);
}

Subgroup subgroup_sum(const Subgroup& a, const Subgroup& b) {
  if (a.ambient_rank() != b.ambient_rank())
    throw std::invalid_argument("subgroup_sum: ambient rank mismatch");
  std::vector<IntVector> generators = a.vectors();
  generators.insert(generators.end(), b.vectors().begin(), b.vectors().end());
  return Subgroup::span(a.ambient_rank(), generators);
}

}  // namespace trisect
