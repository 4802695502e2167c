#include "toric/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

#include "toric/toric_sum.hpp"

namespace toric {

DegreeBound::DegreeBound(std::size_t max_degree, std::size_t search_slack)
    : max_degree(max_degree), search_slack(search_slack) {
  if (max_degree == 0) throw std::invalid_argument("max_degree must be at least 1");
}

namespace {

void fill_monomials(std::size_t var, Exponent remaining, ExponentVector& current,
                    std::vector<ExponentVector>& out) {
  if (var + 1 == current.size()) {
    current[var] = remaining;
    out.push_back(current);
    return;
  }
  for (Exponent e = remaining + 1; e-- > 0;) {
    current[var] = e;
    fill_monomials(var + 1, remaining - e, current, out);
  }
  current[var] = 0;
}

bool divides(const ExponentVector& a, const ExponentVector& m) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > m[i]) return false;
  return true;
}

} // namespace

std::vector<ExponentVector> monomials_of_degree(std::size_t nvars, std::size_t degree) {
  std::vector<ExponentVector> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  ExponentVector current(nvars, 0);
  fill_monomials(0, degree, current, out);
  return out;
}

std::vector<Binomial> enumerate_kernel_binomials(const Parametrization& p, const DegreeBound& bound) {
  // Buckets span all degrees at once: a non-homogeneous kernel (z1*z2 - 1)
  // relates monomials of different degrees.
  std::map<IntVector, std::vector<ExponentVector>> buckets;
  for (std::size_t e = 0; e <= bound.max_degree; ++e)
    for (auto& m : monomials_of_degree(p.nvars(), e)) {
      auto image = evaluate(p, std::span<const Exponent>(m));
      buckets[std::move(image)].push_back(std::move(m));
    }

  std::set<Binomial> found;
  for (const auto& [image, members] : buckets) {
    if (members.size() < 2) continue;
    const auto& rep = *std::min_element(members.begin(), members.end());
    for (const auto& m : members) {
      if (m == rep) continue;
      Binomial b = Binomial::from_sides(m, rep);
      if (!b.is_zero()) found.insert(std::move(b));
    }
  }
  std::vector<Binomial> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const Binomial& a, const Binomial& b) { return a.degree() < b.degree(); });
  return out;
}

RewriteSearch find_rewrite_chain(const Binomial& b, std::span<const Binomial> gens,
                                 const DegreeBound& bound) {
  RewriteSearch result;
  if (b.is_zero()) {
    result.chain = std::vector<ExponentVector>{b.plus()};
    return result;
  }
  for (const auto& g : gens)
    if (g.nvars() != b.nvars()) throw std::invalid_argument("generator does not match the binomial's variables");

  const bool balanced = std::all_of(gens.begin(), gens.end(), [](const Binomial& g) { return g.is_balanced(); });
  const Exponent cap = balanced ? 0 : b.degree() + bound.search_slack;

  std::map<ExponentVector, ExponentVector> parent;
  std::deque<ExponentVector> queue{b.plus()};
  parent.emplace(b.plus(), b.plus());

  auto try_move = [&](const ExponentVector& m, const ExponentVector& from, const ExponentVector& to) {
    if (!divides(from, m)) return;
    ExponentVector next = m;
    for (std::size_t i = 0; i < next.size(); ++i) next[i] = next[i] - from[i] + to[i];
    if (!balanced && total_degree(next) > cap) {
      result.exhaustive = false;
      return;
    }
    if (parent.emplace(next, m).second) queue.push_back(std::move(next));
  };

  while (!queue.empty()) {
    const ExponentVector m = std::move(queue.front());
    queue.pop_front();
    if (m == b.minus()) {
      std::vector<ExponentVector> chain{m};
      for (auto cur = m; cur != b.plus();) {
        cur = parent.at(cur);
        chain.push_back(cur);
      }
      std::reverse(chain.begin(), chain.end());
      result.chain = std::move(chain);
      return result;
    }
    for (const auto& g : gens) {
      if (g.is_zero()) continue;
      try_move(m, g.plus(), g.minus());
      try_move(m, g.minus(), g.plus());
    }
  }
  return result;
}

bool reduces_to_zero(const Binomial& b, std::span<const Binomial> gens, const DegreeBound& bound) {
  return find_rewrite_chain(b, gens, bound).chain.has_value();
}

std::string to_string(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::equal_up_to_degree: return "equal-up-to-degree";
    case VerdictStatus::missing_in_sum: return "missing-in-sum";
    case VerdictStatus::missing_in_kernel: return "missing-in-kernel";
  }
  return "unknown";
}

CertificationVerdict certify_generators(const Parametrization& result, std::span<const Binomial> gens,
                                        const DegreeBound& bound) {
  CertificationVerdict verdict;
  verdict.degree_checked = bound.max_degree;
  for (const auto& g : gens)
    if (!contains_binomial(result, g)) {
      verdict.status = VerdictStatus::missing_in_kernel;
      verdict.witness = g;
      return verdict;
    }
  for (const auto& b : enumerate_kernel_binomials(result, bound)) {
    const RewriteSearch search = find_rewrite_chain(b, gens, bound);
    if (!search.exhaustive) verdict.exact = false;
    if (!search.chain) {
      verdict.status = VerdictStatus::missing_in_sum;
      verdict.witness = b;
      return verdict;
    }
  }
  return verdict;
}

CertificationVerdict certify_sum(const SumConstruction& construction, std::span<const Binomial> gens1,
                                 std::span<const Binomial> gens2, const DegreeBound& bound) {
  std::vector<Binomial> all(gens1.begin(), gens1.end());
  all.insert(all.end(), gens2.begin(), gens2.end());
  return certify_generators(construction.result, all, bound);
}

} // namespace toric
