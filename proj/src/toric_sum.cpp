#include "toric/toric_sum.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "toric/errors.hpp"
#include "toric/oracle.hpp"

namespace toric {

namespace {

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

std::vector<std::string> prefixed(std::string_view prefix, const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (const auto& n : names) out.push_back(std::string(prefix) + n);
  return out;
}

// One side of a shared-variable sum, brought into the shape
//   [ rest 0 ]
//   [ alpha gamma ]
// with the shared variable last and gamma > 0.
struct PinnedSide {
  IntegerMatrix rest;    // A' (rows without the shared parameter, cols without x)
  IntVector alpha;       // shared-parameter row without x
  Integer gamma;
  std::vector<std::string> rest_params;
  std::vector<std::string> other_vars;
};

PinnedSide pin_side(const Parametrization& p, std::size_t x) {
  const IntegerMatrix* a = &p.matrix();
  Parametrization pinned;
  std::size_t row = p.nparams();

  std::size_t support = 0;
  for (std::size_t i = 0; i < a->rows(); ++i)
    if (sgn((*a)(i, x)) != 0) {
      ++support;
      row = i;
    }
  const VariableSet* params = &p.params();
  if (support != 1 || !is_maximal_rank(p)) {
    PinResult pin = normalize_pin(p, x);
    pinned = std::move(pin.parametrization);
    a = &pinned.matrix();
    params = &pinned.params();
    row = pin.pinned_param;
  }

  PinnedSide side;
  std::vector<std::size_t> rows, cols;
  for (std::size_t i = 0; i < a->rows(); ++i)
    if (i != row) {
      rows.push_back(i);
      side.rest_params.push_back((*params)[i]);
    }
  for (std::size_t j = 0; j < a->cols(); ++j)
    if (j != x) {
      cols.push_back(j);
      side.other_vars.push_back(p.vars()[j]);
    }
  side.rest = a->select_rows(rows).select_columns(cols);
  const IntVector last = a->row(row);
  for (std::size_t j : cols) side.alpha.push_back(last[j]);
  side.gamma = last[x];
  if (sgn(side.gamma) == 0) throw Error("shared variable has zero exponent after pinning");
  if (sgn(side.gamma) < 0) {
    side.gamma = -side.gamma;
    for (auto& v : side.alpha) v = -v;
  }
  return side;
}

// Certificate of the block [rest 0; alpha gamma] without its last coordinate,
// which is forced to 1/gamma.
RatVector side_certificate(const PinnedSide& side) {
  const std::size_t m = side.rest.rows() + 1;
  const std::size_t n = side.rest.cols() + 1;
  IntegerMatrix block(m, n);
  for (std::size_t i = 0; i + 1 < m; ++i)
    for (std::size_t j = 0; j + 1 < n; ++j) block(i, j) = side.rest(i, j);
  for (std::size_t j = 0; j + 1 < n; ++j) block(m - 1, j) = side.alpha[j];
  block(m - 1, n - 1) = side.gamma;
  const Parametrization as_param(numbered_names("p", m), numbered_names("v", n), block, Degeneracy::allow);
  auto cert = homogeneity_certificate(as_param);
  if (!cert) throw Error("pinned parametrization lost its homogeneity certificate");
  cert->omega.pop_back();
  return cert->omega;
}

bool involves_shared(const Parametrization& p, std::size_t x, std::size_t degree) {
  for (const auto& b : enumerate_kernel_binomials(p, DegreeBound(degree)))
    if (b.plus()[x] != 0 || b.minus()[x] != 0) return true;
  return false;
}

} // namespace

Parametrization sum_disjoint(std::span<const Parametrization> parts) {
  if (parts.size() == 1) return parts.front();

  std::vector<std::string> vars, params;
  std::size_t rows = 0, cols = 0;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    for (const auto& v : parts[k].vars().names()) {
      if (std::find(vars.begin(), vars.end(), v) != vars.end())
        throw Error("variable '" + v + "' occurs in more than one summand");
      vars.push_back(v);
    }
    auto renamed = prefixed("t" + std::to_string(k + 1) + "_", parts[k].params().names());
    params.insert(params.end(), renamed.begin(), renamed.end());
    rows += parts[k].nparams();
    cols += parts[k].nvars();
  }

  IntegerMatrix block(rows, cols);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& part : parts) {
    for (std::size_t i = 0; i < part.nparams(); ++i)
      for (std::size_t j = 0; j < part.nvars(); ++j) block(r0 + i, c0 + j) = part.matrix()(i, j);
    r0 += part.nparams();
    c0 += part.nvars();
  }
  return Parametrization(VariableSet(std::move(params)), VariableSet(std::move(vars)), std::move(block),
                         Degeneracy::allow);
}

SumConstruction sum_shared(const Parametrization& p1, const Parametrization& p2, std::string_view x,
                           const SumOptions& options) {
  std::vector<std::string> shared;
  for (const auto& v : p1.vars().names())
    if (p2.vars().contains(v)) shared.push_back(v);
  if (shared.size() != 1 || shared.front() != x)
    throw Error("the two ideals must share exactly the variable '" + std::string(x) + "'; they share {" +
                join(shared, ",") + "}");
  if (!homogeneity_certificate(p1))
    throw Error("first summand (variables " + join(p1.vars().names(), ",") + ") is not homogeneous");
  if (!homogeneity_certificate(p2))
    throw Error("second summand (variables " + join(p2.vars().names(), ",") + ") is not homogeneous");

  const std::size_t x1 = p1.vars().index_of(x);
  const std::size_t x2 = p2.vars().index_of(x);
  if (p1.matrix().column_is_zero(x1) || p2.matrix().column_is_zero(x2))
    throw Error("shared variable '" + std::string(x) + "' maps to 1 in a summand");

  SumConstruction out;
  if (options.involvement_degree > 0) {
    if (!involves_shared(p1, x1, options.involvement_degree))
      out.warnings.push_back("no kernel binomial of degree <= " + std::to_string(options.involvement_degree) +
                             " in the first summand involves '" + std::string(x) + "'");
    if (!involves_shared(p2, x2, options.involvement_degree))
      out.warnings.push_back("no kernel binomial of degree <= " + std::to_string(options.involvement_degree) +
                             " in the second summand involves '" + std::string(x) + "'");
  }

  PinnedSide s1 = pin_side(p1, x1);
  PinnedSide s2 = pin_side(p2, x2);
  out.gamma = lcm(s1.gamma, s2.gamma);
  for (PinnedSide* s : {&s1, &s2}) {
    const Integer factor = out.gamma / s->gamma;
    for (auto& v : s->alpha) v *= factor;
    s->gamma = out.gamma;
  }

  const std::size_t m1 = s1.rest.rows(), m2 = s2.rest.rows();
  const std::size_t n1 = s1.rest.cols(), n2 = s2.rest.cols();
  IntegerMatrix a(m1 + m2 + 1, n1 + n2 + 1);
  for (std::size_t i = 0; i < m1; ++i)
    for (std::size_t j = 0; j < n1; ++j) a(i, j) = s1.rest(i, j);
  for (std::size_t i = 0; i < m2; ++i)
    for (std::size_t j = 0; j < n2; ++j) a(m1 + i, n1 + j) = s2.rest(i, j);
  for (std::size_t j = 0; j < n1; ++j) a(m1 + m2, j) = s1.alpha[j];
  for (std::size_t j = 0; j < n2; ++j) a(m1 + m2, n1 + j) = s2.alpha[j];
  a(m1 + m2, n1 + n2) = out.gamma;

  std::vector<std::string> params = prefixed("t1_", s1.rest_params);
  for (auto& n : prefixed("t2_", s2.rest_params)) params.push_back(std::move(n));
  params.emplace_back("s");
  std::vector<std::string> vars = s1.other_vars;
  vars.insert(vars.end(), s2.other_vars.begin(), s2.other_vars.end());
  vars.emplace_back(x);

  RatVector omega = side_certificate(s1);
  for (auto& w : side_certificate(s2)) omega.push_back(std::move(w));
  omega.emplace_back(Rational(1) / Rational(out.gamma));

  out.result = Parametrization(VariableSet(std::move(params)), VariableSet(std::move(vars)), std::move(a),
                               Degeneracy::allow);
  out.certificate = HomogeneityCertificate{std::move(omega)};
  if (!is_valid_certificate(out.result, out.certificate))
    throw std::logic_error("assembled homogeneity certificate does not satisfy omega.A = 1");
  out.predicted_dimension = dimension(p1) + dimension(p2) - 1;
  out.rank_dimension = dimension(out.result);
  return out;
}

SumConstruction sum_shared(const Parametrization& p1, const Parametrization& p2, const SumOptions& options) {
  std::vector<std::string> shared;
  for (const auto& v : p1.vars().names())
    if (p2.vars().contains(v)) shared.push_back(v);
  if (shared.size() != 1)
    throw Error("the two ideals must share exactly one variable; they share {" + join(shared, ",") + "}");
  return sum_shared(p1, p2, shared.front(), options);
}

bool IdealFamilyGraph::is_forest() const {
  return std::all_of(components_.begin(), components_.end(), [](const FamilyComponent& c) { return c.is_tree; });
}

std::vector<std::size_t> IdealFamilyGraph::neighbors(std::size_t v) const {
  std::vector<std::size_t> out;
  for (const auto& e : edges_) {
    if (e.a == v) out.push_back(e.b);
    if (e.b == v) out.push_back(e.a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

IdealFamilyGraph build_family_graph(std::span<const FamilyMember> members) {
  IdealFamilyGraph g;
  g.members_.assign(members.begin(), members.end());
  const std::size_t k = members.size();

  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      std::vector<std::string> shared;
      for (const auto& v : members[i].vars.names())
        if (members[j].vars.contains(v)) shared.push_back(v);
      if (shared.size() >= 2)
        throw Error("ideals " + members[i].id + " and " + members[j].id + " share " +
                    std::to_string(shared.size()) + " variables {" + join(shared, ",") + "}");
      if (shared.size() == 1) g.edges_.push_back({i, j, shared.front()});
    }

  std::vector<std::size_t> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& e : g.edges_) parent[find(e.a)] = find(e.b);

  std::vector<std::size_t> component_of(k, k);
  for (std::size_t v = 0; v < k; ++v) {
    const std::size_t root = find(v);
    if (component_of[root] == k) {
      component_of[root] = g.components_.size();
      g.components_.emplace_back();
    }
    g.components_[component_of[root]].vertices.push_back(v);
  }
  for (const auto& e : g.edges_) ++g.components_[component_of[find(e.a)]].edge_count;

  for (auto& c : g.components_) {
    c.is_tree = c.edge_count + 1 == c.vertices.size();
    if (c.is_tree) continue;
    // 2-core: strip degree-one vertices until none remain.
    std::set<std::size_t> alive(c.vertices.begin(), c.vertices.end());
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto it = alive.begin(); it != alive.end();) {
        std::size_t degree = 0;
        for (std::size_t n : g.neighbors(*it)) degree += alive.count(n);
        if (degree <= 1) {
          it = alive.erase(it);
          changed = true;
        } else {
          ++it;
        }
      }
    }
    c.cycle_vertices.assign(alive.begin(), alive.end());
  }
  return g;
}

FamilySumReport sum_family(std::span<const NamedParametrization> members, const LeafChooser& choose,
                           const SumOptions& options) {
  std::vector<FamilyMember> vertices;
  for (const auto& m : members) vertices.push_back({m.id, m.parametrization.vars()});
  const IdealFamilyGraph graph = build_family_graph(vertices);

  for (const auto& c : graph.components())
    if (!c.is_tree) {
      std::vector<std::string> ids;
      for (std::size_t v : c.cycle_vertices) ids.push_back(members[v].id);
      throw Error("family graph has a cycle {" + join(ids, ",") + "}");
    }
  for (const auto& m : members)
    if (!homogeneity_certificate(m.parametrization)) throw Error("ideal " + m.id + " is not homogeneous");

  FamilySumReport report;
  report.k = graph.vertex_count();
  report.r = graph.component_count();

  std::vector<Parametrization> folded;
  for (const auto& c : graph.components()) {
    // Peel leaves until one vertex remains, then merge in reverse peel order:
    // each re-added leaf meets the merged part in exactly its edge variable.
    std::set<std::size_t> remaining(c.vertices.begin(), c.vertices.end());
    struct Peel {
      std::size_t leaf, neighbor;
      std::string shared;
    };
    std::vector<Peel> peels;
    while (remaining.size() > 1) {
      std::vector<std::size_t> leaves;
      for (std::size_t v : remaining) {
        std::size_t degree = 0;
        for (std::size_t n : graph.neighbors(v)) degree += remaining.count(n);
        if (degree == 1) leaves.push_back(v);
      }
      std::size_t pick = choose ? choose(leaves) : leaves.size() - 1;
      if (pick >= leaves.size()) pick = leaves.size() - 1;
      const std::size_t leaf = leaves[pick];
      std::size_t neighbor = leaf;
      for (std::size_t n : graph.neighbors(leaf))
        if (remaining.count(n)) neighbor = n;
      std::string shared;
      for (const auto& e : graph.edges())
        if ((e.a == leaf && e.b == neighbor) || (e.b == leaf && e.a == neighbor)) shared = e.shared;
      peels.push_back({leaf, neighbor, shared});
      remaining.erase(leaf);
    }

    Parametrization acc = members[*remaining.begin()].parametrization;
    for (auto it = peels.rbegin(); it != peels.rend(); ++it) {
      SumConstruction step = sum_shared(acc, members[it->leaf].parametrization, it->shared, options);
      report.merges.push_back("merge " + members[it->leaf].id + " via " + it->shared + ": gamma=" +
                              step.gamma.get_str() + " dim(rank)=" + std::to_string(step.rank_dimension) +
                              " predicted(thm)=" + std::to_string(step.predicted_dimension));
      for (auto& w : step.warnings) report.warnings.push_back(members[it->leaf].id + ": " + w);
      acc = std::move(step.result);
    }
    folded.push_back(std::move(acc));
  }

  // Variables in order of first appearance across the inputs.
  std::vector<std::string> order;
  for (const auto& m : members)
    for (const auto& v : m.parametrization.vars().names())
      if (std::find(order.begin(), order.end(), v) == order.end()) order.push_back(v);

  report.result = folded.empty() ? Parametrization()
                                 : sum_disjoint(folded).reorder_vars(VariableSet(std::move(order)));
  report.rank_dimension = dimension(report.result);
  for (const auto& m : members) report.dimension_sum += static_cast<std::int64_t>(dimension(m.parametrization));
  const auto k = static_cast<std::int64_t>(report.k), r = static_cast<std::int64_t>(report.r);
  report.iterated_prediction = report.dimension_sum - (k - r);
  report.printed_formula = report.dimension_sum + r - k + 1;
  report.formulas_disagree = report.iterated_prediction != report.printed_formula;
  return report;
}

} // namespace toric
