#ifndef TORIC_PARAMETRIZATION_HPP
#define TORIC_PARAMETRIZATION_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "toric/exact_linalg.hpp"
#include "toric/monomial.hpp"

namespace toric {

enum class Degeneracy { reject, allow };

/// Monomial map x_i -> t^(column i of matrix). Rows are indexed by params,
/// columns by vars.
class Parametrization {
public:
  Parametrization() = default;
  /// Throws toric::Error on a shape mismatch, or on a zero column unless
  /// `degeneracy` is Degeneracy::allow.
  Parametrization(VariableSet params, VariableSet vars, IntegerMatrix matrix,
                  Degeneracy degeneracy = Degeneracy::reject);

  const VariableSet& params() const noexcept { return params_; }
  const VariableSet& vars() const noexcept { return vars_; }
  const IntegerMatrix& matrix() const noexcept { return matrix_; }
  std::size_t nparams() const noexcept { return params_.size(); }
  std::size_t nvars() const noexcept { return vars_.size(); }

  /// True when some variable maps to the constant monomial 1.
  bool is_degenerate() const;

  /// Same map with the variables listed in `order` (a permutation of vars()).
  Parametrization reorder_vars(const VariableSet& order) const;
  Parametrization rename_params(VariableSet params) const;

private:
  VariableSet params_;
  VariableSet vars_;
  IntegerMatrix matrix_;
};

struct HomogeneityCertificate {
  RatVector omega;  // omega . alpha_i == 1 for every nonzero column alpha_i
};

struct Reparametrization {
  Parametrization parametrization;
  Integer scale;  // least positive c with c*Q*A integral
};

struct PinResult {
  Parametrization parametrization;
  std::size_t pinned_param = 0;  // j: the pinned variable maps to t_j^q
  Integer q;
};

/// A . u, the exponent of phi(x^u).
IntVector evaluate(const Parametrization& p, std::span<const Exponent> u);
IntVector evaluate(const Parametrization& p, std::span<const Integer> u);

bool contains_binomial(const Parametrization& p, const Binomial& b);

/// Krull dimension of k[x]/ker(phi), i.e. rank(A).
std::size_t dimension(const Parametrization& p);
bool is_maximal_rank(const Parametrization& p);

std::optional<HomogeneityCertificate> homogeneity_certificate(const Parametrization& p);
bool is_valid_certificate(const Parametrization& p, const HomogeneityCertificate& c);

/// c * Q * A with c minimal; the kernel (hence the ideal) is unchanged.
/// Throws toric::Error when Q is singular or not m x m.
Reparametrization reparametrize(const Parametrization& p, const RationalMatrix& q);

/// Maximal-rank parametrization of the same ideal in which variable `var`
/// maps to a pure power t_j^q. Throws toric::Error when that column is zero.
PinResult normalize_pin(const Parametrization& p, std::size_t var);

/// Drops variable `x` and parameter row `s`. The x column must be γ·e_s, γ ≠ 0.
Parametrization dehomogenize_parametrization(const Parametrization& p, std::string_view x,
                                             std::string_view s);

/// Parametrization whose integer kernel is the saturation of `basis`.
/// Parameters are named t1, t2, ...; zero columns are allowed.
Parametrization parametrization_from_lattice(const LatticeBasis& basis, const VariableSet& vars);
Parametrization parametrization_from_lattice(const LatticeBasis& basis);

inline LatticeBasis kernel_lattice(const Parametrization& p) { return kernel_lattice(p.matrix()); }

/// Default variable names x1..xn.
VariableSet numbered_names(std::string_view prefix, std::size_t count);

} // namespace toric

#endif
