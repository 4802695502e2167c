#ifndef TORIC_TESTS_SUPPORT_HPP
#define TORIC_TESTS_SUPPORT_HPP

// Independent brute-force references used by the unit and acceptance suites.
// Nothing here calls into the normal-form or rewriting code it is compared with.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "toric/exact_linalg.hpp"
#include "toric/monomial.hpp"
#include "toric/parametrization.hpp"

namespace toric::testing {

inline IntegerMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  IntegerMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

inline std::vector<std::vector<long>> to_long(const IntegerMatrix& m) {
  std::vector<std::vector<long>> out(m.rows(), std::vector<long>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).get_si();
  return out;
}

/// Every v in [-bound, bound]^n with M v = 0 (machine integers; small inputs only).
inline std::vector<IntVector> box_kernel_vectors(const IntegerMatrix& m, long bound) {
  const auto a = to_long(m);
  const std::size_t n = m.cols();
  std::vector<long> v(n, -bound);
  std::vector<IntVector> out;
  while (true) {
    bool zero = true;
    for (std::size_t i = 0; i < a.size() && zero; ++i) {
      long dot = 0;
      for (std::size_t j = 0; j < n; ++j) dot += a[i][j] * v[j];
      zero = dot == 0;
    }
    if (zero) {
      IntVector iv;
      for (long x : v) iv.emplace_back(x);
      out.push_back(std::move(iv));
    }
    std::size_t k = 0;
    while (k < n && v[k] == bound) v[k++] = -bound;
    if (k == n) break;
    ++v[k];
  }
  return out;
}

/// Rank by Gaussian elimination over doubles is not exact; this one uses
/// Cramer-free exact elimination over rationals written independently of the
/// library's Bareiss routine.
inline std::size_t naive_rank(const IntegerMatrix& m) {
  std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && a[p][c] == 0) ++p;
    if (p == m.rows()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      const Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < m.cols(); ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

/// All exponent vectors of total degree `degree` (recursive, independent of
/// monomials_of_degree).
inline void all_monomials(std::size_t nvars, Exponent degree, ExponentVector& cur, std::size_t var,
                          std::vector<ExponentVector>& out) {
  if (var == nvars) {
    if (degree == 0) out.push_back(cur);
    return;
  }
  for (Exponent e = 0; e <= degree; ++e) {
    cur[var] = e;
    all_monomials(nvars, degree - e, cur, var + 1, out);
  }
  cur[var] = 0;
}

inline std::vector<ExponentVector> all_monomials(std::size_t nvars, Exponent degree) {
  std::vector<ExponentVector> out;
  ExponentVector cur(nvars, 0);
  all_monomials(nvars, degree, cur, 0, out);
  return out;
}

/// Membership of a balanced binomial in the ideal of balanced generators:
/// union-find over every monomial of the binomial's degree, joining m*a and
/// m*c for every generator a - c and every multiplier m of complementary degree.
inline bool union_find_member(const Binomial& b, const std::vector<Binomial>& gens) {
  if (b.is_zero()) return true;
  const Exponent d = total_degree(b.plus());
  const auto monos = all_monomials(b.nvars(), d);
  std::map<ExponentVector, std::size_t> index;
  for (std::size_t i = 0; i < monos.size(); ++i) index[monos[i]] = i;
  std::vector<std::size_t> parent(monos.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    const Exponent gd = total_degree(g.plus());
    if (gd > d) continue;
    for (const auto& m : all_monomials(b.nvars(), d - gd)) {
      ExponentVector lhs = m, rhs = m;
      for (std::size_t i = 0; i < m.size(); ++i) {
        lhs[i] += g.plus()[i];
        rhs[i] += g.minus()[i];
      }
      parent[find(index.at(lhs))] = find(index.at(rhs));
    }
  }
  return find(index.at(b.plus())) == find(index.at(b.minus()));
}

inline RationalMatrix random_nonsingular_rational(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> num(-3, 3), den(1, 3);
  while (true) {
    RationalMatrix q(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        q(i, j) = Rational(num(rng), den(rng));
        q(i, j).canonicalize();
      }
    if (determinant(q) != 0) return q;
  }
}

} // namespace toric::testing

#endif
