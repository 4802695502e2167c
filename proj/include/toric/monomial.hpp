#ifndef TORIC_MONOMIAL_HPP
#define TORIC_MONOMIAL_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "toric/exact_linalg.hpp"

namespace toric {

/// Ordered list of distinct variable (or parameter) names. The position of a
/// name is its coordinate in exponent vectors.
class VariableSet {
public:
  VariableSet() = default;
  explicit VariableSet(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  bool empty() const noexcept { return names_.empty(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& operator[](std::size_t i) const { return names_[i]; }

  std::optional<std::size_t> find(std::string_view name) const;
  bool contains(std::string_view name) const { return find(name).has_value(); }
  /// Index of `name`; throws toric::Error when absent.
  std::size_t index_of(std::string_view name) const;

  VariableSet with(std::string name) const;
  VariableSet without(std::size_t index) const;

  friend bool operator==(const VariableSet&, const VariableSet&) = default;

private:
  std::vector<std::string> names_;
};

using Exponent = std::uint64_t;
using ExponentVector = std::vector<Exponent>;

struct Monomial {
  ExponentVector exponents;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

Exponent total_degree(std::span<const Exponent> exponents);
inline Exponent total_degree(const Monomial& m) { return total_degree(m.exponents); }

/// x^plus - x^minus with disjoint supports and the first nonzero coordinate of
/// plus - minus positive. The zero binomial has both sides zero.
class Binomial {
public:
  Binomial() = default;
  explicit Binomial(std::size_t nvars) : plus_(nvars, 0), minus_(nvars, 0) {}

  /// Cancels the common factor of both sides and fixes the sign.
  static Binomial from_sides(ExponentVector lhs, ExponentVector rhs);

  const ExponentVector& plus() const noexcept { return plus_; }
  const ExponentVector& minus() const noexcept { return minus_; }
  std::size_t nvars() const noexcept { return plus_.size(); }
  bool is_zero() const;
  /// max of the two side degrees
  Exponent degree() const;
  bool is_balanced() const { return total_degree(plus_) == total_degree(minus_); }

  /// plus - minus as an integer vector.
  IntVector difference() const;

  /// Zero-padded copy over a larger variable list; `positions[i]` is the new
  /// coordinate of old variable i.
  Binomial embed(std::size_t nvars, std::span<const std::size_t> positions) const;

  friend auto operator<=>(const Binomial&, const Binomial&) = default;

private:
  ExponentVector plus_;
  ExponentVector minus_;
};

struct DisjointSplit {
  Binomial binomial;
  bool sign_flipped = false;
};

/// u = u_plus - u_minus with disjoint supports, canonicalized.
DisjointSplit split_disjoint(std::span<const Integer> u);

/// Multiplies the lower-degree side by a power of a new last variable.
Binomial homogenize_binomial(const Binomial& b);

/// Drops coordinate `var` and re-canonicalizes (common factors cancel).
Binomial dehomogenize_binomial(const Binomial& b, std::size_t var);

/// Name-checked variants: `x` must be fresh for homogenization and present
/// for dehomogenization. The returned set is the binomial's new variable list.
std::pair<VariableSet, Binomial> homogenize_binomial(const VariableSet& vars, const Binomial& b,
                                                     const std::string& x);
std::pair<VariableSet, Binomial> dehomogenize_binomial(const VariableSet& vars, const Binomial& b,
                                                       std::string_view x);

/// Re-expresses `b` (over `from`) over the superset `to`, matching by name.
Binomial embed_by_name(const VariableSet& from, const Binomial& b, const VariableSet& to);

std::string format_monomial(const VariableSet& vars, std::span<const Exponent> exponents);
/// `z1^2*z2 - x^3`; the zero binomial prints as `0`.
std::string format_binomial(const VariableSet& vars, const Binomial& b);

/// Accepts the output of format_binomial (and `1` for the empty monomial,
/// repeated factors, arbitrary spacing). Throws ParseError (line 0).
Binomial parse_binomial(const VariableSet& vars, std::string_view text);

} // namespace toric

#endif
