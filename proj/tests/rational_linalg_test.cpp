#include "oracles.hpp"
#include "qlogic/linalg.hpp"
#include "qlogic/rational.hpp"
#include "qlogic/reference_cases.hpp"
#include "qlogic/extend.hpp"

#include <gtest/gtest.h>

#include <random>

namespace qlogic {
namespace {

TEST(Rational, NormalizesSignAndLowestTerms) {
  EXPECT_EQ(to_string(rat(2, 4)), "1/2");
  EXPECT_EQ(to_string(rat(1, 12)), "1/12");
  EXPECT_EQ(to_string(rat(-3, -6)), "1/2");
  EXPECT_EQ(to_string(rat(3, -6)), "-1/2");
  EXPECT_EQ(to_string(rat(0, -5)), "0");
  EXPECT_EQ(rat(0, 7).get_den(), 1);
}

TEST(Rational, ZeroDenominatorIsDomainError) { EXPECT_THROW(rat(1, 0), std::domain_error); }

TEST(Rational, ParsesTextForm) {
  EXPECT_EQ(parse_rational("-2/4"), rat(-1, 2));
  EXPECT_EQ(parse_rational("7"), rat(7));
  EXPECT_EQ(parse_rational("123456789012345678901234567890/3"),
            Rational(mpz_class("41152263004115226300411522630")));
  for (const char* bad : {"", "-", "1/", "/2", "1/0", "1 /2", "+1", "1/-2", "0x10", "1.5"})
    EXPECT_THROW(parse_rational(bad), std::invalid_argument) << bad;
}

TEST(Rational, TextRoundTrip) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> draw(-1000, 1000);
  for (int i = 0; i < 200; ++i) {
    long q = draw(rng);
    if (q == 0) q = 1;
    const Rational r = rat(draw(rng), q);
    EXPECT_EQ(parse_rational(to_string(r)), r);
  }
}

TEST(RatMatrix, RejectsRaggedRows) {
  EXPECT_THROW(RatMatrix(std::vector<RatVector>{{1, 2}, {3}}), std::invalid_argument);
}

TEST(SolveAffine, IdentitySystem) {
  const RatMatrix a{{1, 0}, {0, 1}};
  const auto out = solve_affine(a, {rat(1, 2), rat(1, 2)});
  const auto& sol = std::get<AffineSolution>(out);
  EXPECT_EQ(sol.particular, (RatVector{rat(1, 2), rat(1, 2)}));
  EXPECT_EQ(sol.rank, 2u);
  EXPECT_TRUE(sol.nullspace_basis.empty());
}

TEST(SolveAffine, OneEquationTwoUnknowns) {
  const RatMatrix a{{1, 1}};
  const auto sol = std::get<AffineSolution>(solve_affine(a, {1}));
  EXPECT_EQ(sol.rank, 1u);
  EXPECT_EQ(sol.particular, (RatVector{1, 0}));
  ASSERT_EQ(sol.nullspace_basis.size(), 1u);
  EXPECT_EQ(sol.nullspace_basis[0], (RatVector{1, -1}));
}

TEST(SolveAffine, ShapeMismatchThrows) {
  EXPECT_THROW(solve_affine(RatMatrix{{1, 1}}, {1, 2}), std::invalid_argument);
  EXPECT_THROW(nonneg_feasible(RatMatrix{{1, 1}}, {}), std::invalid_argument);
}

TEST(SolveAffine, Mo4IncidenceSystemIsInconsistent) {
  const auto state = reference::mo4_two_valued_state();
  const auto sys = incidence_system(state);
  ASSERT_EQ(sys.matrix.rows(), 10u);
  ASSERT_EQ(sys.matrix.cols(), 6u);
  const auto out = solve_affine(sys.matrix, sys.rhs);
  const auto& bad = std::get<AffineInconsistent>(out);
  EXPECT_TRUE(is_zero(left_multiply(bad.certificate, sys.matrix)));
  // Raw elimination finds A - B - D + C (canonical rows 1..4); pairing
  // 0 - 1 - 1 + 0. Frozen from an independent fraction-based RREF.
  EXPECT_EQ(bad.certificate, (RatVector{0, 1, -1, -1, 1, 0, 0, 0, 0, 0}));
  EXPECT_EQ(dot(bad.certificate, sys.rhs), -2);
}

TEST(SolveAffine, CertificateIsNormalized) {
  // 2x = 1 and 4x = 3 conflict; any multiple of (2, -1) certifies it.
  const auto bad = std::get<AffineInconsistent>(solve_affine(RatMatrix{{2}, {4}}, {1, 3}));
  EXPECT_EQ(bad.certificate, (RatVector{2, -1}));
}

TEST(NormalizeIntegerVector, SmallestIntegersWithPositiveLead) {
  EXPECT_EQ(normalize_integer_vector({0, rat(-1, 2), rat(3, 4)}), (RatVector{0, 2, -3}));
  EXPECT_EQ(normalize_integer_vector({6, 4}), (RatVector{3, 2}));
  EXPECT_EQ(normalize_integer_vector({0, 0}), (RatVector{0, 0}));
}

RatMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> draw(-2, 2);
  RatMatrix a(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) a(r, c) = draw(rng);
  return a;
}

RatVector random_vector(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> draw(-3, 3);
  RatVector v(n);
  for (auto& x : v) x = draw(rng);
  return v;
}

TEST(SolveAffine, OutcomeInvariantsOnRandomSystems) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> dim(1, 7);
  std::size_t solved = 0, refuted = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const auto a = random_matrix(rng, dim(rng), dim(rng));
    const auto b = random_vector(rng, a.rows());
    const auto out = solve_affine(a, b);
    const auto check = oracle::eliminate_backwards(a, b);
    if (const auto* sol = std::get_if<AffineSolution>(&out)) {
      ++solved;
      EXPECT_TRUE(check.consistent);
      EXPECT_EQ(sol->rank, check.rank);
      EXPECT_EQ(multiply(a, sol->particular), b);
      EXPECT_EQ(sol->nullspace_basis.size(), a.cols() - sol->rank);
      for (const auto& v : sol->nullspace_basis) EXPECT_TRUE(is_zero(multiply(a, v)));
    } else {
      ++refuted;
      const auto& cert = std::get<AffineInconsistent>(out).certificate;
      EXPECT_FALSE(check.consistent);
      EXPECT_TRUE(is_zero(left_multiply(cert, a)));
      EXPECT_NE(dot(cert, b), 0);
    }
  }
  EXPECT_GT(solved, 50u);
  EXPECT_GT(refuted, 50u);
}

TEST(NonnegFeasible, SmallExamples) {
  const auto one = nonneg_feasible(RatMatrix{{1, 1}}, {1});
  ASSERT_TRUE(one.feasible());
  EXPECT_EQ(one.witness->at(0) + one.witness->at(1), 1);
  EXPECT_GE(one.witness->at(0), 0);
  EXPECT_GE(one.witness->at(1), 0);

  EXPECT_FALSE(nonneg_feasible(RatMatrix{{1, 1}, {1, -1}}, {1, 3}).feasible());
}

TEST(NonnegFeasible, NegativePointSystemOnFourPoints) {
  const auto state = reference::negative_point_state(2);
  const auto sys = incidence_system(state);
  EXPECT_FALSE(nonneg_feasible(sys.matrix, sys.rhs).feasible());
}

TEST(NonnegFeasible, DegenerateShapes) {
  EXPECT_TRUE(nonneg_feasible(RatMatrix(0, 3), {}).feasible());
  EXPECT_TRUE(nonneg_feasible(RatMatrix(2, 0), {0, 0}).feasible());
  EXPECT_FALSE(nonneg_feasible(RatMatrix(2, 0), {0, 1}).feasible());
}

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

TEST(NonnegFeasible, AgreesWithVertexEnumeration) {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<std::size_t> rows(1, 10), cols(1, 6);
  std::size_t yes = 0, no = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const auto a = random_matrix(rng, rows(rng), cols(rng));
    const auto b = random_vector(rng, a.rows());
    const auto got = nonneg_feasible(a, b);
    EXPECT_EQ(got.feasible(), oracle::vertex_enumeration_feasible(a, b));
    EXPECT_LE(got.pivots, binomial(a.rows() + a.cols(), a.cols()));
    if (got.feasible()) {
      ++yes;
      EXPECT_EQ(multiply(a, *got.witness), b);
      for (const auto& x : *got.witness) EXPECT_GE(x, 0);
    } else {
      ++no;
    }
  }
  EXPECT_GT(yes, 30u);
  EXPECT_GT(no, 30u);
}

TEST(NonnegFeasible, FeasibleByConstructionSystems) {
  // b = A x0 with x0 >= 0 is always feasible.
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> mass(0, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_matrix(rng, 6, 5);
    RatVector x0(5);
    for (auto& x : x0) x = mass(rng);
    EXPECT_TRUE(nonneg_feasible(a, multiply(a, x0)).feasible());
  }
}

}  // namespace
}  // namespace qlogic
