#include "toric/exact_linalg.hpp"

#include <algorithm>

#include "toric/errors.hpp"

namespace toric {

RationalMatrix to_rational(const IntegerMatrix& m) {
  RationalMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

Integer lcm_of_denominators(std::span<const Rational> entries) {
  Integer l = 1;
  for (const auto& e : entries) l = lcm(l, Integer(e.get_den()));
  return l;
}

namespace {

// floor division, used to reduce entries above a pivot into [0, pivot)
Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer trunc_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

} // namespace

HermiteForm hermite_normal_form(const IntegerMatrix& m) {
  IntegerMatrix h = m;
  IntegerMatrix u = IntegerMatrix::identity(m.rows());
  std::size_t pivot_row = 0;

  for (std::size_t col = 0; col < h.cols() && pivot_row < h.rows(); ++col) {
    // Euclid on the column: bring the smallest nonzero entry up, clear below, repeat.
    while (true) {
      std::size_t best = h.rows();
      for (std::size_t i = pivot_row; i < h.rows(); ++i) {
        if (sgn(h(i, col)) == 0) continue;
        if (best == h.rows() || abs(h(i, col)) < abs(h(best, col))) best = i;
      }
      if (best == h.rows()) break;
      h.swap_rows(pivot_row, best);
      u.swap_rows(pivot_row, best);

      bool cleared = true;
      for (std::size_t i = pivot_row + 1; i < h.rows(); ++i) {
        if (sgn(h(i, col)) == 0) continue;
        const Integer q = -trunc_div(h(i, col), h(pivot_row, col));
        h.add_row_multiple(i, pivot_row, q);
        u.add_row_multiple(i, pivot_row, q);
        if (sgn(h(i, col)) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (sgn(h(pivot_row, col)) == 0) continue;

    if (sgn(h(pivot_row, col)) < 0) {
      h.negate_row(pivot_row);
      u.negate_row(pivot_row);
    }
    const Integer pivot = h(pivot_row, col);
    for (std::size_t i = 0; i < pivot_row; ++i) {
      const Integer q = -floor_div(h(i, col), pivot);
      if (sgn(q) == 0) continue;
      h.add_row_multiple(i, pivot_row, q);
      u.add_row_multiple(i, pivot_row, q);
    }
    ++pivot_row;
  }
  return {std::move(h), std::move(u)};
}

SmithDecomposition smith_normal_form(const IntegerMatrix& m) {
  IntegerMatrix d = m;
  IntegerMatrix p = IntegerMatrix::identity(m.rows());
  IntegerMatrix q = IntegerMatrix::identity(m.cols());
  const std::size_t steps = std::min(m.rows(), m.cols());

  for (std::size_t t = 0; t < steps; ++t) {
    while (true) {
      std::size_t bi = d.rows(), bj = d.cols();
      for (std::size_t i = t; i < d.rows(); ++i)
        for (std::size_t j = t; j < d.cols(); ++j) {
          if (sgn(d(i, j)) == 0) continue;
          if (bi == d.rows() || abs(d(i, j)) < abs(d(bi, bj))) {
            bi = i;
            bj = j;
          }
        }
      if (bi == d.rows()) return {std::move(d), std::move(p), std::move(q)};

      d.swap_rows(t, bi);
      p.swap_rows(t, bi);
      d.swap_cols(t, bj);
      q.swap_cols(t, bj);

      bool cleared = true;
      for (std::size_t i = t + 1; i < d.rows(); ++i) {
        if (sgn(d(i, t)) == 0) continue;
        const Integer f = -trunc_div(d(i, t), d(t, t));
        d.add_row_multiple(i, t, f);
        p.add_row_multiple(i, t, f);
        if (sgn(d(i, t)) != 0) cleared = false;
      }
      for (std::size_t j = t + 1; j < d.cols(); ++j) {
        if (sgn(d(t, j)) == 0) continue;
        const Integer f = -trunc_div(d(t, j), d(t, t));
        d.add_col_multiple(j, t, f);
        q.add_col_multiple(j, t, f);
        if (sgn(d(t, j)) != 0) cleared = false;
      }
      if (!cleared) continue;

      // The pivot must divide the whole remaining block; otherwise fold the
      // offending row into row t and continue with a smaller remainder.
      std::size_t offending = d.rows();
      for (std::size_t i = t + 1; i < d.rows() && offending == d.rows(); ++i)
        for (std::size_t j = t + 1; j < d.cols(); ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            offending = i;
            break;
          }
      if (offending == d.rows()) break;
      d.add_row_multiple(t, offending, Integer(1));
      p.add_row_multiple(t, offending, Integer(1));
    }
    if (sgn(d(t, t)) < 0) {
      d.negate_row(t);
      p.negate_row(t);
    }
  }
  return {std::move(d), std::move(p), std::move(q)};
}

namespace {

// Fraction-free (Bareiss) elimination. Returns the rank; `det` receives the
// determinant when the matrix is square.
std::size_t bareiss(IntegerMatrix a, Integer* det) {
  const std::size_t rows = a.rows(), cols = a.cols();
  Integer prev = 1;
  int sign = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && sgn(a(piv, c)) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      a.swap_rows(piv, r);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer v = a(r, c) * a(i, j) - a(i, c) * a(r, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  if (det) {
    if (rows != cols || r < rows)
      *det = 0;
    else
      *det = sign * prev;
  }
  return r;
}

// In-place reduced row echelon form over Q; returns pivot columns.
std::vector<std::size_t> rref(RationalMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && sgn(a(piv, c)) == 0) ++piv;
    if (piv == a.rows()) continue;
    a.swap_rows(piv, r);
    const Rational inv = 1 / a(r, c);
    a.scale_row(r, inv);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || sgn(a(i, c)) == 0) continue;
      a.add_row_multiple(i, r, Rational(-a(i, c)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

} // namespace

std::size_t rank(const IntegerMatrix& m) { return bareiss(m, nullptr); }

std::size_t rank(const RationalMatrix& m) {
  RationalMatrix copy = m;
  return rref(copy).size();
}

Integer determinant(const IntegerMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  Integer det;
  bareiss(m, &det);
  return det;
}

Rational determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  RationalMatrix a = m;
  Rational det = 1;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    std::size_t piv = c;
    while (piv < a.rows() && sgn(a(piv, c)) == 0) ++piv;
    if (piv == a.rows()) return 0;
    if (piv != c) {
      a.swap_rows(piv, c);
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < a.rows(); ++i) {
      if (sgn(a(i, c)) == 0) continue;
      a.add_row_multiple(i, c, Rational(-a(i, c) / a(c, c)));
    }
  }
  return det;
}

LatticeBasis LatticeBasis::from_generators(std::size_t ambient_dim,
                                           const std::vector<IntVector>& gens) {
  for (const auto& g : gens)
    if (g.size() != ambient_dim) throw std::invalid_argument("lattice generator has wrong length");
  LatticeBasis out(ambient_dim);
  if (gens.empty()) return out;
  const HermiteForm hnf = hermite_normal_form(IntegerMatrix::from_rows(gens, ambient_dim));
  for (std::size_t i = 0; i < hnf.H.rows(); ++i) {
    IntVector row = hnf.H.row(i);
    if (std::all_of(row.begin(), row.end(), [](const Integer& v) { return sgn(v) == 0; })) break;
    out.vectors_.push_back(std::move(row));
  }
  return out;
}

IntegerMatrix LatticeBasis::as_rows() const { return IntegerMatrix::from_rows(vectors_, ambient_dim_); }

bool LatticeBasis::contains(std::span<const Integer> v) const {
  if (v.size() != ambient_dim_) return false;
  IntVector rest(v.begin(), v.end());
  // Echelon shape: each basis vector owns a pivot column to the right of the previous one.
  for (const auto& b : vectors_) {
    const auto pivot = static_cast<std::size_t>(
        std::find_if(b.begin(), b.end(), [](const Integer& x) { return sgn(x) != 0; }) - b.begin());
    for (std::size_t j = 0; j < pivot; ++j)
      if (sgn(rest[j]) != 0) return false;
    if (!mpz_divisible_p(rest[pivot].get_mpz_t(), b[pivot].get_mpz_t())) return false;
    const Integer coeff = rest[pivot] / b[pivot];
    for (std::size_t j = pivot; j < ambient_dim_; ++j) rest[j] -= coeff * b[j];
  }
  return std::all_of(rest.begin(), rest.end(), [](const Integer& x) { return sgn(x) == 0; });
}

LatticeBasis kernel_lattice(const IntegerMatrix& m) {
  // U * M^T = H; the rows of U facing zero rows of H span the integer kernel of M.
  const HermiteForm hnf = hermite_normal_form(m.transpose());
  std::vector<IntVector> gens;
  for (std::size_t i = 0; i < hnf.H.rows(); ++i) {
    bool zero = true;
    for (std::size_t j = 0; j < hnf.H.cols() && zero; ++j) zero = sgn(hnf.H(i, j)) == 0;
    if (zero) gens.push_back(hnf.U.row(i));
  }
  return LatticeBasis::from_generators(m.cols(), gens);
}

LatticeBasis saturate_lattice(const LatticeBasis& basis) {
  const LatticeBasis annihilator = kernel_lattice(basis.as_rows());
  return kernel_lattice(annihilator.as_rows());
}

std::optional<RatVector> solve_row_rational(const IntegerMatrix& a, std::span<const Rational> b,
                                            std::span<const std::size_t> columns) {
  if (b.size() != a.cols()) throw std::invalid_argument("right-hand side length must equal column count");
  const std::size_t unknowns = a.rows();
  // One equation per selected column: sum_k omega_k * a(k, c) = b_c.
  RationalMatrix system(columns.size(), unknowns + 1);
  for (std::size_t e = 0; e < columns.size(); ++e) {
    const std::size_t c = columns[e];
    if (c >= a.cols()) throw std::out_of_range("column index out of range");
    for (std::size_t k = 0; k < unknowns; ++k) system(e, k) = Rational(a(k, c));
    system(e, unknowns) = b[c];
  }
  const auto pivots = rref(system);
  if (!pivots.empty() && pivots.back() == unknowns) return std::nullopt;
  RatVector omega(unknowns);
  for (std::size_t r = 0; r < pivots.size(); ++r) omega[pivots[r]] = system(r, unknowns);
  return omega;
}

std::vector<std::size_t> extend_to_basis(const IntegerMatrix& a, std::size_t pivot) {
  if (pivot >= a.cols()) throw std::out_of_range("pivot column out of range");
  if (a.column_is_zero(pivot)) throw Error("column " + std::to_string(pivot + 1) + " is zero");
  if (rank(a) != a.rows())
    throw Error("matrix rank is below its row count; no square nonsingular column subset exists");

  std::vector<std::size_t> chosen{pivot};
  std::size_t current = 1;
  for (std::size_t j = 0; j < a.cols() && chosen.size() < a.rows(); ++j) {
    if (j == pivot) continue;
    chosen.push_back(j);
    const std::size_t r = rank(a.select_columns(chosen));
    if (r > current)
      current = r;
    else
      chosen.pop_back();
  }
  return chosen;
}

RationalMatrix inverse(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const auto pivots = rref(aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] >= n)) throw Error("matrix is singular");
  RationalMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  return out;
}

ClearedInverse inverse_and_clear(const IntegerMatrix& m) {
  RationalMatrix inv = inverse(to_rational(m));
  Integer q = lcm_of_denominators(inv.data());
  return {std::move(inv), std::move(q)};
}

} // namespace toric
