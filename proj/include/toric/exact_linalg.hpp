#ifndef TORIC_EXACT_LINALG_HPP
#define TORIC_EXACT_LINALG_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace toric {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Dense row-major matrix over an exact ring (mpz_class or mpq_class).
template <class T>
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_)
      throw std::invalid_argument("matrix data size does not match its shape");
  }

  /// Builds a matrix from small literal rows; every row must have the same width.
  static Matrix from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<std::vector<T>> converted;
    for (auto r : rows) {
      std::vector<T> row;
      for (long v : r) row.emplace_back(v);
      converted.push_back(std::move(row));
    }
    return from_rows(converted);
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols_if_empty = 0) {
    const std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
    Matrix out(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw std::invalid_argument("ragged matrix rows");
      for (std::size_t j = 0; j < cols; ++j) out(i, j) = rows[i][j];
    }
    return out;
  }

  static Matrix identity(std::size_t n) {
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
    return out;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  std::vector<T> column(std::size_t j) const {
    std::vector<T> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
    return out;
  }

  bool column_is_zero(std::size_t j) const {
    for (std::size_t i = 0; i < rows_; ++i)
      if (sgn((*this)(i, j)) != 0) return false;
    return true;
  }

  bool is_zero() const {
    for (const auto& v : data_)
      if (sgn(v) != 0) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  Matrix select_columns(std::span<const std::size_t> cols) const {
    Matrix out(rows_, cols.size());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols.size(); ++k) out(i, k) = (*this)(i, cols[k]);
    return out;
  }

  Matrix select_rows(std::span<const std::size_t> rows) const {
    Matrix out(rows.size(), cols_);
    for (std::size_t k = 0; k < rows.size(); ++k)
      for (std::size_t j = 0; j < cols_; ++j) out(k, j) = (*this)(rows[k], j);
    return out;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  // row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source, const T& factor) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(target, j) += factor * (*this)(source, j);
  }

  void add_col_multiple(std::size_t target, std::size_t source, const T& factor) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, target) += factor * (*this)(i, source);
  }

  void negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
  }

  void scale_row(std::size_t i, const T& factor) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) *= factor;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (sgn(aik) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend std::vector<T> operator*(const Matrix& a, std::span<const T> v) {
    if (a.cols_ != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
    std::vector<T> out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) out[i] += a(i, j) * v[j];
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  const std::vector<T>& data() const noexcept { return data_; }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntegerMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;

RationalMatrix to_rational(const IntegerMatrix& m);

/// Least positive c such that c * entries is integral (1 for an empty range).
Integer lcm_of_denominators(std::span<const Rational> entries);

struct HermiteForm {
  IntegerMatrix H;
  IntegerMatrix U;
};

/// Row-style Hermite normal form: U unimodular with U * M = H, H upper echelon,
/// pivots positive and entries above each pivot reduced into [0, pivot).
HermiteForm hermite_normal_form(const IntegerMatrix& m);

/// D = P * M * Q with P, Q unimodular and d1 | d2 | ... | dr, zeros trailing.
struct SmithDecomposition {
  IntegerMatrix D;
  IntegerMatrix P;
  IntegerMatrix Q;
};

SmithDecomposition smith_normal_form(const IntegerMatrix& m);

std::size_t rank(const IntegerMatrix& m);
std::size_t rank(const RationalMatrix& m);
Integer determinant(const IntegerMatrix& m);
Rational determinant(const RationalMatrix& m);

/// A sublattice of Z^n, stored as the nonzero rows of the row Hermite normal
/// form of its generators. Two bases describe the same lattice iff they
/// compare equal.
class LatticeBasis {
public:
  explicit LatticeBasis(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

  /// Lattice spanned by arbitrary (possibly dependent) integer generators.
  static LatticeBasis from_generators(std::size_t ambient_dim, const std::vector<IntVector>& gens);

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t size() const noexcept { return vectors_.size(); }
  bool empty() const noexcept { return vectors_.empty(); }
  const std::vector<IntVector>& vectors() const noexcept { return vectors_; }

  /// Rows are the basis vectors (size() x ambient_dim()).
  IntegerMatrix as_rows() const;

  bool contains(std::span<const Integer> v) const;

  friend bool operator==(const LatticeBasis&, const LatticeBasis&) = default;

private:
  std::size_t ambient_dim_ = 0;
  std::vector<IntVector> vectors_;
};

/// Basis of {u in Z^n : M u = 0}, n = M.cols().
LatticeBasis kernel_lattice(const IntegerMatrix& m);

/// (Q-span of B) intersected with Z^n.
LatticeBasis saturate_lattice(const LatticeBasis& basis);

/// Solves (omega * A)_c = b_c for every c in `columns`; b is indexed by column
/// of A. Free coordinates of the echelon solution are set to zero. Returns
/// nullopt when the system is inconsistent.
std::optional<RatVector> solve_row_rational(const IntegerMatrix& a, std::span<const Rational> b,
                                            std::span<const std::size_t> columns);

/// Greedily extends column `pivot` to a set of rows() columns forming a
/// nonsingular submatrix. The result lists `pivot` first, then the kept
/// columns in increasing index order. Requires rank(A) == rows() and a
/// nonzero pivot column; throws toric::Error otherwise.
std::vector<std::size_t> extend_to_basis(const IntegerMatrix& a, std::size_t pivot);

RationalMatrix inverse(const RationalMatrix& m);

struct ClearedInverse {
  RationalMatrix inverse;
  Integer q;  // lcm of the denominators of `inverse`
};

ClearedInverse inverse_and_clear(const IntegerMatrix& m);

} // namespace toric

#endif
