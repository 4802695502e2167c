#include "toric/parametrization.hpp"

#include <algorithm>
#include <numeric>

#include "toric/errors.hpp"

namespace toric {

Parametrization::Parametrization(VariableSet params, VariableSet vars, IntegerMatrix matrix,
                                 Degeneracy degeneracy)
    : params_(std::move(params)), vars_(std::move(vars)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != params_.size() || matrix_.cols() != vars_.size())
    throw Error("parametrization matrix is " + std::to_string(matrix_.rows()) + "x" +
                std::to_string(matrix_.cols()) + " but there are " + std::to_string(params_.size()) +
                " parameters and " + std::to_string(vars_.size()) + " variables");
  if (degeneracy == Degeneracy::reject)
    for (std::size_t j = 0; j < matrix_.cols(); ++j)
      if (matrix_.column_is_zero(j))
        throw Error("variable '" + vars_[j] + "' maps to 1 (zero column)");
}

bool Parametrization::is_degenerate() const {
  for (std::size_t j = 0; j < matrix_.cols(); ++j)
    if (matrix_.column_is_zero(j)) return true;
  return false;
}

Parametrization Parametrization::reorder_vars(const VariableSet& order) const {
  if (order.size() != vars_.size()) throw Error("variable reordering is not a permutation");
  std::vector<std::size_t> cols;
  for (const auto& name : order.names()) cols.push_back(vars_.index_of(name));
  return Parametrization(params_, order, matrix_.select_columns(cols), Degeneracy::allow);
}

Parametrization Parametrization::rename_params(VariableSet params) const {
  return Parametrization(std::move(params), vars_, matrix_, Degeneracy::allow);
}

IntVector evaluate(const Parametrization& p, std::span<const Exponent> u) {
  IntVector v;
  v.reserve(u.size());
  for (Exponent e : u) v.emplace_back(static_cast<unsigned long>(e));
  return evaluate(p, std::span<const Integer>(v));
}

IntVector evaluate(const Parametrization& p, std::span<const Integer> u) {
  if (u.size() != p.nvars()) throw std::invalid_argument("exponent vector has wrong length");
  return p.matrix() * u;
}

bool contains_binomial(const Parametrization& p, const Binomial& b) {
  if (b.nvars() != p.nvars()) throw std::invalid_argument("binomial does not match the variables");
  return evaluate(p, std::span<const Exponent>(b.plus())) ==
         evaluate(p, std::span<const Exponent>(b.minus()));
}

std::size_t dimension(const Parametrization& p) { return rank(p.matrix()); }

bool is_maximal_rank(const Parametrization& p) { return dimension(p) == p.nparams(); }

namespace {

std::vector<std::size_t> nonzero_columns(const IntegerMatrix& a) {
  std::vector<std::size_t> cols;
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (!a.column_is_zero(j)) cols.push_back(j);
  return cols;
}

} // namespace

std::optional<HomogeneityCertificate> homogeneity_certificate(const Parametrization& p) {
  const RatVector ones(p.nvars(), Rational(1));
  const auto cols = nonzero_columns(p.matrix());
  auto omega = solve_row_rational(p.matrix(), ones, cols);
  if (!omega) return std::nullopt;
  return HomogeneityCertificate{std::move(*omega)};
}

bool is_valid_certificate(const Parametrization& p, const HomogeneityCertificate& c) {
  if (c.omega.size() != p.nparams()) return false;
  for (std::size_t j : nonzero_columns(p.matrix())) {
    Rational dot = 0;
    for (std::size_t k = 0; k < p.nparams(); ++k) dot += c.omega[k] * p.matrix()(k, j);
    if (dot != 1) return false;
  }
  return true;
}

Reparametrization reparametrize(const Parametrization& p, const RationalMatrix& q) {
  if (q.rows() != p.nparams() || q.cols() != p.nparams())
    throw Error("reparametrization matrix must be " + std::to_string(p.nparams()) + "x" +
                std::to_string(p.nparams()));
  if (rank(q) != q.rows()) throw Error("reparametrization matrix is singular");
  const RationalMatrix product = q * to_rational(p.matrix());
  Integer scale = lcm_of_denominators(product.data());
  IntegerMatrix out(product.rows(), product.cols());
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t j = 0; j < out.cols(); ++j) {
      const Rational v = product(i, j) * scale;
      out(i, j) = v.get_num();
    }
  return {Parametrization(p.params(), p.vars(), std::move(out), Degeneracy::allow), std::move(scale)};
}

PinResult normalize_pin(const Parametrization& p, std::size_t var) {
  if (var >= p.nvars()) throw std::out_of_range("variable index out of range");
  if (p.matrix().column_is_zero(var))
    throw Error("variable '" + p.vars()[var] + "' maps to 1; it cannot be pinned");

  // Rows in increasing order, kept while they raise the rank.
  std::vector<std::size_t> kept;
  std::size_t current = 0;
  for (std::size_t i = 0; i < p.nparams(); ++i) {
    kept.push_back(i);
    const std::size_t r = rank(p.matrix().select_rows(kept));
    if (r > current)
      current = r;
    else
      kept.pop_back();
  }
  const IntegerMatrix reduced = p.matrix().select_rows(kept);

  const auto basis_cols = extend_to_basis(reduced, var);
  const ClearedInverse inv = inverse_and_clear(reduced.select_columns(basis_cols));
  const RationalMatrix product = inv.inverse * to_rational(reduced);

  // Least q making the product integral; divides inv.q.
  Integer q = lcm_of_denominators(product.data());
  IntegerMatrix out(product.rows(), product.cols());
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t j = 0; j < out.cols(); ++j) out(i, j) = Rational(product(i, j) * q).get_num();

  std::vector<std::string> names;
  for (std::size_t i : kept) names.push_back(p.params()[i]);
  // basis_cols[0] == var, so B * A_S = I puts e_0 in the pinned column.
  return {Parametrization(VariableSet(std::move(names)), p.vars(), std::move(out), Degeneracy::allow), 0,
          std::move(q)};
}

Parametrization dehomogenize_parametrization(const Parametrization& p, std::string_view x,
                                             std::string_view s) {
  const std::size_t xi = p.vars().index_of(x);
  const std::size_t si = p.params().index_of(s);
  const IntegerMatrix& a = p.matrix();
  for (std::size_t k = 0; k < a.rows(); ++k)
    if (k != si && sgn(a(k, xi)) != 0)
      throw Error("column of '" + std::string(x) + "' has support outside parameter '" + std::string(s) + "'");
  if (sgn(a(si, xi)) == 0) throw Error("variable '" + std::string(x) + "' has zero exponent on '" + std::string(s) + "'");

  std::vector<std::size_t> rows, cols;
  for (std::size_t k = 0; k < a.rows(); ++k)
    if (k != si) rows.push_back(k);
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (j != xi) cols.push_back(j);
  return Parametrization(p.params().without(si), p.vars().without(xi),
                         a.select_rows(rows).select_columns(cols), Degeneracy::allow);
}

VariableSet numbered_names(std::string_view prefix, std::size_t count) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= count; ++i) names.push_back(std::string(prefix) + std::to_string(i));
  return VariableSet(std::move(names));
}

Parametrization parametrization_from_lattice(const LatticeBasis& basis, const VariableSet& vars) {
  if (vars.size() != basis.ambient_dim()) throw Error("variable count does not match the lattice dimension");
  const LatticeBasis annihilator = kernel_lattice(basis.as_rows());
  return Parametrization(numbered_names("t", annihilator.size()), vars, annihilator.as_rows(),
                         Degeneracy::allow);
}

Parametrization parametrization_from_lattice(const LatticeBasis& basis) {
  return parametrization_from_lattice(basis, numbered_names("x", basis.ambient_dim()));
}

} // namespace toric
