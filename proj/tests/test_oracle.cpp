#include <gtest/gtest.h>

#include <map>
#include <numeric>
#include <random>
#include <set>

#include "support.hpp"
#include "toric/oracle.hpp"
#include "toric/parametrization.hpp"

using namespace toric;

namespace {

Parametrization make(const IntegerMatrix& m) {
  return Parametrization(numbered_names("t", m.rows()), numbered_names("x", m.cols()), m, Degeneracy::allow);
}

std::set<std::string> formatted(const VariableSet& v, const std::vector<Binomial>& bs) {
  std::set<std::string> out;
  for (const auto& b : bs) out.insert(format_binomial(v, b));
  return out;
}

} // namespace

TEST(Oracle, MonomialsOfDegree) {
  const auto m = monomials_of_degree(3, 2);
  EXPECT_EQ(m.size(), 6u);
  EXPECT_EQ(m.front(), (ExponentVector{2, 0, 0}));
  EXPECT_EQ(m.back(), (ExponentVector{0, 0, 2}));
  EXPECT_EQ(monomials_of_degree(2, 0), (std::vector<ExponentVector>{{0, 0}}));
  EXPECT_THROW(DegreeBound(0), std::invalid_argument);
}

TEST(Oracle, TwistedCubicDegreeTwo) {
  const auto p = make(IntegerMatrix::from_rows({{3, 2, 1, 0}, {0, 1, 2, 3}}));
  const auto bs = enumerate_kernel_binomials(p, DegreeBound(2));
  EXPECT_EQ(formatted(p.vars(), bs),
            (std::set<std::string>{"x1*x3 - x2^2", "x2*x4 - x3^2", "x1*x4 - x2*x3"}));
}

TEST(Oracle, NonHomogeneousBucketsAcrossDegrees) {
  const auto p = make(IntegerMatrix::from_rows({{1, -1}}));
  const auto bs = enumerate_kernel_binomials(p, DegreeBound(2));
  EXPECT_EQ(formatted(p.vars(), bs), (std::set<std::string>{"x1*x2 - 1"}));
}

TEST(Oracle, RewriteChain) {
  const VariableSet v({"a", "b", "c"});
  const std::vector<Binomial> gens{parse_binomial(v, "a - b"), parse_binomial(v, "b - c")};
  const auto target = parse_binomial(v, "a^2 - c^2");
  const auto search = find_rewrite_chain(target, gens, DegreeBound(3));
  ASSERT_TRUE(search.chain);
  EXPECT_EQ(search.chain->front(), target.plus());
  EXPECT_EQ(search.chain->back(), target.minus());
  EXPECT_TRUE(search.exhaustive);
  EXPECT_FALSE(reduces_to_zero(parse_binomial(v, "a^2 - b"), {gens.begin(), 1}, DegreeBound(3)));
  EXPECT_TRUE(reduces_to_zero(Binomial(3), gens, DegreeBound(3)));
}

TEST(Oracle, CertifyGenerators) {
  const auto p = make(IntegerMatrix::from_rows({{3, 2, 1, 0}, {0, 1, 2, 3}}));
  const VariableSet& v = p.vars();
  std::vector<Binomial> gens{parse_binomial(v, "x1*x3 - x2^2"), parse_binomial(v, "x2*x4 - x3^2"),
                             parse_binomial(v, "x1*x4 - x2*x3")};
  auto ok = certify_generators(p, gens, DegreeBound(3));
  EXPECT_EQ(ok.status, VerdictStatus::equal_up_to_degree);
  EXPECT_TRUE(ok.exact);
  EXPECT_EQ(ok.degree_checked, 3u);

  const std::vector<Binomial> partial(gens.begin(), gens.begin() + 2);
  const auto missing = certify_generators(p, partial, DegreeBound(3));
  EXPECT_EQ(missing.status, VerdictStatus::missing_in_sum);
  ASSERT_TRUE(missing.witness);
  EXPECT_FALSE(reduces_to_zero(*missing.witness, partial, DegreeBound(3)));

  gens.push_back(parse_binomial(v, "x1 - x2"));
  const auto extra = certify_generators(p, gens, DegreeBound(3));
  EXPECT_EQ(extra.status, VerdictStatus::missing_in_kernel);
  EXPECT_EQ(to_string(extra.status), "missing-in-kernel");
}

TEST(OracleProperty, HomogeneousKernelIsBalanced) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> rows(1, 3), cols(2, 5);
  int checked = 0;
  while (checked < 200) {
    const std::size_t m = rows(rng), n = cols(rng);
    auto a = toric::testing::random_matrix(rng, m, n, -3, 3);
    // force homogeneity with an all-ones row
    for (std::size_t j = 0; j < n; ++j) a(0, j) = 1;
    const auto p = make(a);
    ASSERT_TRUE(homogeneity_certificate(p));
    for (const auto& b : enumerate_kernel_binomials(p, DegreeBound(3))) {
      ASSERT_TRUE(b.is_balanced()) << format_binomial(p.vars(), b);
      ASSERT_TRUE(contains_binomial(p, b));
    }
    ++checked;
  }
}

TEST(OracleProperty, EnumerationMatchesBruteForce) {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<std::size_t> rows(1, 3), cols(2, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = rows(rng), n = cols(rng);
    const auto p = make(toric::testing::random_matrix(rng, m, n, -3, 3));
    const auto bs = enumerate_kernel_binomials(p, DegreeBound(2));
    const std::set<Binomial> got(bs.begin(), bs.end());
    // Completeness: joining m*plus and m*minus for every enumerated binomial
    // and multiplier m (within degree 2) must connect every pair of monomials
    // of degree <= 2 sharing an image.
    std::vector<ExponentVector> all;
    for (Exponent d = 0; d <= 2; ++d)
      for (auto& e : toric::testing::all_monomials(n, d)) all.push_back(e);
    std::map<ExponentVector, std::size_t> index;
    for (std::size_t i = 0; i < all.size(); ++i) index[all[i]] = i;
    std::vector<std::size_t> parent(all.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (const auto& b : got)
      for (const auto& mult : all) {
        ExponentVector lhs = mult, rhs = mult;
        for (std::size_t i = 0; i < n; ++i) {
          lhs[i] += b.plus()[i];
          rhs[i] += b.minus()[i];
        }
        const auto li = index.find(lhs), ri = index.find(rhs);
        if (li != index.end() && ri != index.end()) parent[find(li->second)] = find(ri->second);
      }
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = i + 1; j < all.size(); ++j)
        if (evaluate(p, std::span<const Exponent>(all[i])) == evaluate(p, std::span<const Exponent>(all[j])))
          ASSERT_EQ(find(i), find(j));
    for (const auto& b : got) ASSERT_TRUE(contains_binomial(p, b));
  }
}

TEST(OracleProperty, ReductionAgreesWithUnionFind) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::size_t> rows(1, 2), cols(2, 4);
  int checked = 0;
  while (checked < 200) {
    const std::size_t m = rows(rng), n = cols(rng);
    auto a = toric::testing::random_matrix(rng, m, n, -3, 3);
    for (std::size_t j = 0; j < n; ++j) a(0, j) = 1;
    const auto p = make(a);
    const auto kernel = enumerate_kernel_binomials(p, DegreeBound(3));
    if (kernel.empty()) continue;
    // random subset of the degree <= 2 part as generators
    std::vector<Binomial> gens;
    for (const auto& b : kernel)
      if (b.degree() <= 2 && (rng() & 1)) gens.push_back(b);
    for (const auto& b : kernel) {
      const bool uf = toric::testing::union_find_member(b, gens);
      const auto search = find_rewrite_chain(b, gens, DegreeBound(3));
      ASSERT_TRUE(search.exhaustive);
      ASSERT_EQ(search.chain.has_value(), uf) << format_binomial(p.vars(), b);
    }
    ++checked;
  }
}
