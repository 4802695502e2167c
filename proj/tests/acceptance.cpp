// One line per acceptance criterion, [PASS] or [FAIL], with wall-clock limits.
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "support.hpp"
#include "toric/cli.hpp"
#include "toric/errors.hpp"
#include "toric/oracle.hpp"
#include "toric/parametrization.hpp"
#include "toric/toric_sum.hpp"

using namespace toric;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(const char* id, const char* title, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (out.ok && secs >= limit_seconds) {
    out.ok = false;
    out.detail = "took longer than the limit";
  }
  if (!out.ok) ++failures;
  std::printf("[%s] %s %s (%.3fs, limit %.0fs)%s%s\n", out.ok ? "PASS" : "FAIL", id, title, secs, limit_seconds,
              out.detail.empty() ? "" : ": ", out.detail.c_str());
}

Parametrization quadric(const std::string& a, const std::string& b, const std::string& x) {
  return Parametrization(VariableSet({"t", "s"}), VariableSet({a, b, x}),
                         IntegerMatrix::from_rows({{1, -1, 0}, {1, 1, 1}}));
}

bool rows_equal_up_to_sign_and_order(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  auto norm = [](const IntegerMatrix& m) {
    std::multiset<IntVector> rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      auto r = m.row(i);
      for (const auto& v : r)
        if (v != 0) {
          if (v < 0)
            for (auto& w : r) w = -w;
          break;
        }
      rows.insert(std::move(r));
    }
    return rows;
  };
  return norm(a) == norm(b);
}

Outcome twisted_cubic() {
  Outcome o;
  const Parametrization p(VariableSet({"s", "t"}), VariableSet({"x0", "x1", "x2", "x3"}),
                          IntegerMatrix::from_rows({{3, 2, 1, 0}, {0, 1, 2, 3}}));
  o.require(dimension(p) == 2, "dimension != 2");
  const auto cert = homogeneity_certificate(p);
  o.require(cert && cert->omega == RatVector{Rational(1, 3), Rational(1, 3)}, "omega != (1/3,1/3)");
  std::set<std::string> got;
  for (const auto& b : enumerate_kernel_binomials(p, DegreeBound(2))) got.insert(format_binomial(p.vars(), b));
  o.require(got == std::set<std::string>{"x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"},
            "degree-2 kernel binomials differ");
  return o;
}

Outcome glued_quadrics() {
  Outcome o;
  const auto s = sum_shared(quadric("z1", "z2", "x"), quadric("w1", "w2", "x"), "x");
  o.require(rows_equal_up_to_sign_and_order(
                s.result.matrix(),
                IntegerMatrix::from_rows({{1, -1, 0, 0, 0}, {0, 0, 1, -1, 0}, {1, 1, 1, 1, 1}})),
            "assembled matrix differs");
  o.require(s.result.vars() == VariableSet({"z1", "z2", "w1", "w2", "x"}), "variable order differs");
  o.require(s.rank_dimension == 3 && s.predicted_dimension == 3, "dimension != 3");
  const VariableSet& v = s.result.vars();
  const std::vector<Binomial> g1{parse_binomial(v, "z1*z2 - x^2")}, g2{parse_binomial(v, "w1*w2 - x^2")};
  const auto verdict = certify_sum(s, g1, g2, DegreeBound(3));
  o.require(verdict.status == VerdictStatus::equal_up_to_degree && verdict.exact, "certification failed");
  return o;
}

Outcome pinned_conic() {
  Outcome o;
  const Parametrization p(VariableSet({"t", "u"}), VariableSet({"x1", "x2", "x3"}),
                          IntegerMatrix::from_rows({{1, 1, 1}, {0, 1, 2}}));
  const auto pin = normalize_pin(p, 2);
  o.require(is_maximal_rank(pin.parametrization), "not maximal rank");
  o.require(pin.q == 2, "q != 2");
  const auto col = pin.parametrization.matrix().column(2);
  for (std::size_t i = 0; i < col.size(); ++i)
    o.require(col[i] == (i == pin.pinned_param ? pin.q : Integer(0)), "pinned column is not q*e_j");
  o.require(kernel_lattice(pin.parametrization) == kernel_lattice(p), "kernel lattice changed");
  return o;
}

Outcome path_family() {
  Outcome o;
  const std::vector<NamedParametrization> family{
      {"I1", quadric("z1", "z2", "x")},
      {"I2", Parametrization(VariableSet({"u", "s"}), VariableSet({"w1", "w2", "x", "y"}),
                             IntegerMatrix::from_rows({{1, -1, 0, 0}, {1, 1, 1, 1}}))},
      {"I3", quadric("v1", "v2", "y")}};
  const auto report = sum_family(family);
  o.require(report.rank_dimension == 4, "rank dimension != 4");
  o.require(report.iterated_prediction == 4, "iterated prediction != 4");
  o.require(report.printed_formula == 5, "printed formula != 5");
  o.require(report.formulas_disagree, "discrepancy not flagged");
  const VariableSet& v = report.result.vars();
  std::vector<Binomial> gens;
  for (const char* g : {"z1*z2 - x^2", "w1*w2 - x^2", "x - y", "v1*v2 - y^2"}) gens.push_back(parse_binomial(v, g));
  const auto verdict = certify_generators(report.result, gens, DegreeBound(3));
  o.require(verdict.status == VerdictStatus::equal_up_to_degree, "certification failed");
  return o;
}

Outcome property_suite() {
  Outcome o;
  constexpr int kCases = 200;
  std::mt19937_64 rng(424242);
  std::uniform_int_distribution<std::size_t> rows(1, 4), cols(1, 5);

  // (a) Hermite and Smith
  for (int i = 0; i < kCases && o.ok; ++i) {
    const auto m = toric::testing::random_matrix(rng, rows(rng), cols(rng), -3, 3);
    const auto hf = hermite_normal_form(m);
    o.require(hf.U * m == hf.H && abs(determinant(hf.U)) == 1, "(a) U*M != H or |det U| != 1");
    const auto s = smith_normal_form(m);
    o.require(s.P * m * s.Q == s.D, "(a) P*M*Q != D");
    const std::size_t r = toric::testing::naive_rank(m);
    for (std::size_t k = 0; k + 1 < r; ++k)
      o.require(mpz_divisible_p(s.D(k + 1, k + 1).get_mpz_t(), s.D(k, k).get_mpz_t()) != 0,
                "(a) divisibility chain broken");
  }
  // (b) kernel lattice against a box search
  for (int i = 0; i < kCases && o.ok; ++i) {
    const std::size_t n = cols(rng);
    const auto m = toric::testing::random_matrix(rng, rows(rng), n, -3, 3);
    const auto k = kernel_lattice(m);
    for (const auto& v : k.vectors())
      for (const auto& x : m * std::span<const Integer>(v)) o.require(x == 0, "(b) kernel vector not annihilated");
    for (const auto& v : toric::testing::box_kernel_vectors(m, 2)) o.require(k.contains(v), "(b) box vector missing");
    o.require(k.size() == n - toric::testing::naive_rank(m), "(b) kernel rank wrong");
  }
  // (c) reparametrization keeps membership
  for (int i = 0; i < kCases && o.ok; ++i) {
    const std::size_t m = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 4)(rng);
    const Parametrization p(numbered_names("t", m), numbered_names("x", n),
                            toric::testing::random_matrix(rng, m, n, -3, 3), Degeneracy::allow);
    const auto r = reparametrize(p, toric::testing::random_nonsingular_rational(rng, m));
    for (const auto& b : enumerate_kernel_binomials(p, DegreeBound(3)))
      o.require(contains_binomial(r.parametrization, b), "(c) binomial lost by reparametrization");
  }
  // (d) homogeneous => balanced; (e) rewriting agrees with union-find
  for (int i = 0; i < kCases && o.ok; ++i) {
    const std::size_t m = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 4)(rng);
    auto a = toric::testing::random_matrix(rng, m, n, -3, 3);
    for (std::size_t j = 0; j < n; ++j) a(0, j) = 1;
    const Parametrization p(numbered_names("t", m), numbered_names("x", n), a, Degeneracy::allow);
    const auto kernel = enumerate_kernel_binomials(p, DegreeBound(3));
    for (const auto& b : kernel) o.require(b.is_balanced(), "(d) unbalanced kernel binomial");
    std::vector<Binomial> gens;
    for (const auto& b : kernel)
      if (b.degree() <= 2 && (rng() & 1)) gens.push_back(b);
    for (const auto& b : kernel)
      o.require(reduces_to_zero(b, gens, DegreeBound(3)) == toric::testing::union_find_member(b, gens),
                "(e) rewriting disagrees with union-find");
  }
  return o;
}

Outcome negative_paths() {
  Outcome o;
  const std::string dir = TORIC_TEST_DATA;
  auto expect = [&](const std::vector<std::string>& args, int code, const std::string& witness) {
    std::ostringstream out, err;
    const int got = cli::run(args, out, err);
    const std::string text = out.str() + err.str();
    o.require(got == code, args[0] + " " + args[1] + ": exit " + std::to_string(got));
    o.require(text.find(witness) != std::string::npos, "missing message '" + witness + "'");
  };
  expect({"sum", dir + "/shared_two.ideal"}, cli::kRejected, "ideals I1 and I2 share 2 variables");
  expect({"sum", dir + "/triangle.ideal"}, cli::kRejected, "cycle {I1,I2,I3}");
  expect({"graph", dir + "/triangle.ideal"}, cli::kRejected, "cycle {I1,I2,I3}");
  expect({"sum", dir + "/nonhomogeneous.ideal"}, cli::kRejected, "ideal I1 is not homogeneous");
  expect({"dim", dir + "/bad_width.ideal"}, cli::kUsage, "line 4");

  bool threw = false;
  try {
    const Parametrization nonhom(VariableSet({"t"}), VariableSet({"z1", "z2", "x"}),
                                 IntegerMatrix::from_rows({{1, 2, 3}}));
    sum_shared(nonhom, quadric("w1", "w2", "x"), "x");
  } catch (const Error& e) {
    threw = std::string(e.what()).find("not homogeneous") != std::string::npos;
  }
  o.require(threw, "sum_shared accepted a non-homogeneous summand");
  return o;
}

} // namespace

int main() {
  criterion("AC1", "twisted cubic: dimension, certificate, degree-2 kernel", 1, twisted_cubic);
  criterion("AC2", "glued quadrics: assembled matrix, dimension 3, certified at d=3", 1, glued_quadrics);
  criterion("AC3", "pinning variable 3 of [[1,1,1],[0,1,2]]: q=2, same lattice", 1, pinned_conic);
  criterion("AC4", "path of three ideals: rank 4, predictions 4 and 5 flagged, certified", 5, path_family);
  criterion("AC5", "property suite (a)-(e), 200 cases each", 60, property_suite);
  criterion("AC6", "negative paths: exit codes and witness messages", 1, negative_paths);
  return failures == 0 ? 0 : 1;
}
