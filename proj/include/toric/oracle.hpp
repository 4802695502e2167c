#ifndef TORIC_ORACLE_HPP
#define TORIC_ORACLE_HPP

// Brute-force certification at small degree: kernel enumeration by bucketing
// monomials on their image, and binomial-ideal membership by monomial rewriting.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "toric/monomial.hpp"
#include "toric/parametrization.hpp"

namespace toric {

struct SumConstruction;

struct DegreeBound {
  std::size_t max_degree = 3;
  std::size_t search_slack = 2;

  DegreeBound() = default;
  /// Throws std::invalid_argument when max_degree == 0.
  explicit DegreeBound(std::size_t max_degree, std::size_t search_slack = 2);
};

/// All exponent vectors in `nvars` variables of total degree exactly `degree`,
/// in decreasing lexicographic order.
std::vector<ExponentVector> monomials_of_degree(std::size_t nvars, std::size_t degree);

/// Kernel binomials of total degree at most bound.max_degree. Monomials of
/// degree 0..max_degree are bucketed by their image A.u; each bucket emits
/// (member - representative) for every non-representative member, the
/// representative being the lexicographically smallest exponent vector.
/// Output is canonical, deduplicated and sorted by (degree, binomial).
std::vector<Binomial> enumerate_kernel_binomials(const Parametrization& p, const DegreeBound& bound);

struct RewriteSearch {
  /// Monomials from b.plus() to b.minus(), each step one generator move.
  std::optional<std::vector<ExponentVector>> chain;
  /// True when the explored region was the whole connected piece, so a
  /// missing chain proves non-membership.
  bool exhaustive = true;
};

/// Breadth-first search over moves m -> m/a*c for generators a - c (either
/// direction). With only degree-balanced generators the search stays in one
/// graded piece; otherwise intermediate degree is capped at
/// deg(b) + bound.search_slack.
RewriteSearch find_rewrite_chain(const Binomial& b, std::span<const Binomial> gens,
                                 const DegreeBound& bound);

bool reduces_to_zero(const Binomial& b, std::span<const Binomial> gens, const DegreeBound& bound);

enum class VerdictStatus { equal_up_to_degree, missing_in_sum, missing_in_kernel };

std::string to_string(VerdictStatus status);

struct CertificationVerdict {
  VerdictStatus status = VerdictStatus::equal_up_to_degree;
  std::optional<Binomial> witness;
  std::size_t degree_checked = 0;
  /// False when some rewrite search hit the degree cap (non-homogeneous
  /// generators); then the verdict only holds "up to search bound".
  bool exact = true;
};

/// Checks (a) every generator lies in ker(result) and (b) every enumerated
/// kernel binomial of `result` up to the bound rewrites to zero modulo gens.
/// Generators must be over result.vars().
CertificationVerdict certify_generators(const Parametrization& result, std::span<const Binomial> gens,
                                        const DegreeBound& bound);

/// certify_generators on the construction's result with gens1 and gens2,
/// both already expressed over the merged variables.
CertificationVerdict certify_sum(const SumConstruction& construction, std::span<const Binomial> gens1,
                                 std::span<const Binomial> gens2, const DegreeBound& bound);

} // namespace toric

#endif
