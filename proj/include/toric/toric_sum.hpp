#ifndef TORIC_TORIC_SUM_HPP
#define TORIC_TORIC_SUM_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "toric/parametrization.hpp"

namespace toric {

/// Parametrization of I1 + I2 for two homogeneous toric ideals sharing one
/// variable x. The result matrix has the block shape
///
///   [ A1'  0    0 ]
///   [ 0    A2'  0 ]
///   [ a1   a2   g ]
///
/// over parameters (t1_*, t2_*, s) and variables (z1, z2, x).
struct SumConstruction {
  Parametrization result;
  Integer gamma;
  std::size_t predicted_dimension = 0;  // dim(P1) + dim(P2) - 1
  std::size_t rank_dimension = 0;       // rank of the result matrix
  HomogeneityCertificate certificate;   // (omega1, omega2, 1/gamma)
  std::vector<std::string> warnings;
};

struct SumOptions {
  /// Degree up to which the oracle looks for a kernel binomial involving the
  /// shared variable in each input; 0 disables the check.
  std::size_t involvement_degree = 3;
};

/// Block-diagonal parametrization of a sum over pairwise disjoint variable
/// sets. Parameters are prefixed t1_, t2_, ... when there is more than one
/// summand. Throws toric::Error on overlapping variables.
Parametrization sum_disjoint(std::span<const Parametrization> parts);

/// Throws toric::Error unless vars(p1) ∩ vars(p2) == {x}, both inputs are
/// homogeneous, and x has a nonzero column in both.
SumConstruction sum_shared(const Parametrization& p1, const Parametrization& p2, std::string_view x,
                           const SumOptions& options = {});

/// sum_shared with the shared variable inferred.
SumConstruction sum_shared(const Parametrization& p1, const Parametrization& p2,
                           const SumOptions& options = {});

struct FamilyEdge {
  std::size_t a = 0;
  std::size_t b = 0;
  std::string shared;
};

struct FamilyComponent {
  std::vector<std::size_t> vertices;  // ascending
  std::size_t edge_count = 0;
  bool is_tree = false;
  /// Vertices lying on a cycle (the 2-core); empty for trees.
  std::vector<std::size_t> cycle_vertices;
};

struct FamilyMember {
  std::string id;
  VariableSet vars;
};

/// Vertices are ideals, edges join ideals sharing exactly one variable.
class IdealFamilyGraph {
public:
  const std::vector<FamilyMember>& members() const noexcept { return members_; }
  const std::vector<FamilyEdge>& edges() const noexcept { return edges_; }
  const std::vector<FamilyComponent>& components() const noexcept { return components_; }

  std::size_t vertex_count() const noexcept { return members_.size(); }     // k
  std::size_t component_count() const noexcept { return components_.size(); }  // r
  bool is_forest() const;

  std::vector<std::size_t> neighbors(std::size_t v) const;

private:
  friend IdealFamilyGraph build_family_graph(std::span<const FamilyMember> members);

  std::vector<FamilyMember> members_;
  std::vector<FamilyEdge> edges_;
  std::vector<FamilyComponent> components_;
};

/// Throws toric::Error naming the pair when two ideals share two or more variables.
IdealFamilyGraph build_family_graph(std::span<const FamilyMember> members);

struct NamedParametrization {
  std::string id;
  Parametrization parametrization;
};

struct FamilySumReport {
  Parametrization result;
  std::size_t rank_dimension = 0;
  std::int64_t dimension_sum = 0;       // sum of the input dimensions
  std::int64_t iterated_prediction = 0;  // sum - (k - r)
  std::int64_t printed_formula = 0;      // sum + r - k + 1
  bool formulas_disagree = false;
  std::size_t k = 0;
  std::size_t r = 0;
  std::vector<std::string> merges;  // one line per two-ideal merge
  std::vector<std::string> warnings;
};

/// Picks the leaf to peel next; `leaves` is ascending and nonempty. The
/// default takes the last one, so the lowest-index vertex ends up as the root.
using LeafChooser = std::function<std::size_t(std::span<const std::size_t> leaves)>;

/// Sum of a family whose graph is a forest. Each tree is folded by peeling
/// leaves and merging them back with sum_shared; trees are then combined with
/// sum_disjoint. The result lists variables in order of first appearance.
/// Throws toric::Error on a cycle (naming its vertices), on a pair sharing
/// two or more variables, or on a non-homogeneous member.
FamilySumReport sum_family(std::span<const NamedParametrization> members, const LeafChooser& choose = {},
                           const SumOptions& options = {});

} // namespace toric

#endif
