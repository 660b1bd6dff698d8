#include <gtest/gtest.h>

#include "salab/errors.hpp"
#include "salab/resolution.hpp"
#include "test_util.hpp"

namespace salab {
namespace {

using test::P;
using test::Ps;
using test::ring_of;

long long binom(long long n, long long k) {
  if (k < 0 || n < k) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

TEST(Syzygies, WorkedExample) {
  auto r = ring_of("QQ", {"x1", "x2"});
  const auto fs = Ps(r, {"x1^2", "x1*x2"});
  const auto syz = syzygies(generator_row(fs, r));
  ASSERT_EQ(syz.cols(), 1u);
  // Up to a unit, the kernel is generated by (-x2, x1).
  const bool plus = syz(0, 0) == P(r, "-x2") && syz(1, 0) == P(r, "x1");
  const bool minus = syz(0, 0) == P(r, "x2") && syz(1, 0) == P(r, "-x1");
  EXPECT_TRUE(plus || minus);
  EXPECT_EQ(syz.col_degrees(), std::vector<int>{3});
}

TEST(Syzygies, TrivialAndKoszulPair) {
  auto r = ring_of("QQ", {"x", "y"});
  GradedMatrix unit(r, {0}, {0});
  unit(0, 0) = P(r, "1");
  EXPECT_EQ(syzygies(unit).cols(), 0u);

  const auto syz = syzygies(generator_row(Ps(r, {"x", "y"}), r));
  ASSERT_EQ(syz.cols(), 1u);
  EXPECT_TRUE((generator_row(Ps(r, {"x", "y"}), r) * syz).is_zero());
  EXPECT_EQ(syz(0, 0) * P(r, "x") + syz(1, 0) * P(r, "y"), Polynomial(r));
  EXPECT_TRUE(syz(0, 0) == P(r, "-y") || syz(0, 0) == P(r, "y"));
}

TEST(Syzygies, GradingViolationRejected) {
  auto r = ring_of("QQ", {"x", "y"});
  GradedMatrix m(r, {0}, {2});
  m(0, 0) = P(r, "x");
  EXPECT_THROW(syzygies(m), DomainError);
}

TEST(Resolve, WorkedExample) {
  auto r = ring_of("QQ", {"x1", "x2"});
  const Ideal I(r, Ps(r, {"x1^2", "x1*x2"}));
  const auto res = resolve(I);
  EXPECT_EQ(res.ranks(), (std::vector<std::size_t>{1, 2, 1}));
  EXPECT_TRUE(compositions_vanish(res));
  EXPECT_TRUE(verify_exactness(res));
  const auto minimal = minimalize(res);
  EXPECT_EQ(minimal.resolution.ranks(), (std::vector<std::size_t>{1, 2, 1}));
  EXPECT_EQ(minimal.betti.totals(), (std::vector<int>{1, 2, 1}));
  EXPECT_EQ(minimal.betti.graded.at({1, 2}), 2);
  EXPECT_EQ(minimal.betti.graded.at({2, 3}), 1);
  EXPECT_EQ(projective_dimension(I), 2);
}

TEST(Resolve, PrincipalAndZero) {
  auto r = ring_of("QQ", {"x1", "x2", "x3"});
  EXPECT_EQ(resolve(Ideal(r, Ps(r, {"x1"}))).ranks(), (std::vector<std::size_t>{1, 1}));
  EXPECT_EQ(projective_dimension(Ideal(r, Ps(r, {"x1^3 - x2*x3^2 + x3^3"}))), 1);
  EXPECT_EQ(projective_dimension(Ideal(r, {})), 0);
  EXPECT_THROW(resolve(Ideal(r, Ps(r, {"x1 + 1"}))), DomainError);
  EXPECT_THROW(resolve(Ideal(r, Ps(r, {"x1", "2"}))), DomainError);
}

TEST(Resolve, MaximalIdealIsKoszul) {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto r = RingContext::make_indexed(FieldSpec::rationals(), n);
    std::vector<Polynomial> vars;
    for (std::size_t i = 0; i < n; ++i) vars.push_back(Polynomial::variable(r, i));
    const Ideal I(r, vars);
    const auto res = resolve(I);
    const auto ranks = res.ranks();
    ASSERT_EQ(ranks.size(), n + 1);
    for (std::size_t i = 0; i <= n; ++i) EXPECT_EQ(static_cast<long long>(ranks[i]), binom(n, i));
    EXPECT_TRUE(verify_exactness(res));
    EXPECT_EQ(projective_dimension(I), static_cast<int>(n));
  }
}

TEST(Minimalize, CancelsIdentitySummand) {
  auto r = ring_of("QQ", {"x1", "x2"});
  const auto base = resolve(Ideal(r, Ps(r, {"x1^2", "x1*x2"})));
  // Pad F1 and F2 with a trivial S(-3) <- S(-3) identity summand.
  GradedMatrix phi1(r, {0}, {2, 2, 3});
  phi1(0, 0) = base.maps[0](0, 0);
  phi1(0, 1) = base.maps[0](0, 1);
  GradedMatrix phi2(r, {2, 2, 3}, {3, 3});
  phi2(0, 0) = base.maps[1](0, 0);
  phi2(1, 0) = base.maps[1](1, 0);
  phi2(2, 1) = P(r, "1");
  FreeResolution padded{r, {phi1, phi2}};
  ASSERT_TRUE(compositions_vanish(padded));
  ASSERT_TRUE(verify_exactness(padded));
  const auto minimal = minimalize(padded);
  EXPECT_EQ(minimal.resolution.ranks(), (std::vector<std::size_t>{1, 2, 1}));
  EXPECT_EQ(minimal.betti, betti_table(base));
}

TEST(Minimalize, RedundantGeneratorMatchesPair) {
  auto r = ring_of("QQ", {"x", "y"});
  const auto redundant = minimalize(resolve(Ideal(r, Ps(r, {"x", "y", "x + y"}))));
  const auto pair = minimalize(resolve(Ideal(r, Ps(r, {"x", "y"}))));
  EXPECT_EQ(redundant.betti, pair.betti);
  EXPECT_EQ(redundant.betti.totals(), (std::vector<int>{1, 2, 1}));
  EXPECT_TRUE(compositions_vanish(redundant.resolution));
  EXPECT_TRUE(verify_exactness(redundant.resolution));
  for (const auto& m : redundant.resolution.maps) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) EXPECT_FALSE(!m(i, j).is_zero() && m(i, j).is_constant());
    }
  }
}

TEST(KoszulCheck, Examples) {
  auto r = ring_of("QQ", {"x", "y", "z"});
  EXPECT_TRUE(koszul_check(Ps(r, {"x", "y", "z"})));
  EXPECT_FALSE(koszul_check(Ps(r, {"x*y", "x*z"})));
  auto r2 = ring_of("QQ", {"x", "y"});
  EXPECT_TRUE(koszul_check(Ps(r2, {"x^2 + y^2", "x*y"})));
  EXPECT_FALSE(koszul_check(Ps(r2, {"x^2", "x^2"})));
  EXPECT_THROW(koszul_check(Ps(r2, {"x + 1"})), DomainError);
  std::vector<Polynomial> many(21, P(r2, "x"));
  EXPECT_THROW(koszul_check(many), ResourceError);
}

TEST(Mutation, PerturbedSyzygiesBreakWorkedExample) {
  auto r = ring_of("QQ", {"x1", "x2"});
  mutation::set_syzygy_perturbation(true);
  const auto ranks = resolve(Ideal(r, Ps(r, {"x1^2", "x1*x2"}))).ranks();
  mutation::set_syzygy_perturbation(false);
  EXPECT_NE(ranks, (std::vector<std::size_t>{1, 2, 1}));
}

TEST(ResolutionProperties, SyzygyBoundExactnessAndBettiInvariance) {
  Rng rng(31337);
  for (const char* field : {"QQ", "F5"}) {
    for (int iter = 0; iter < 40; ++iter) {
      const auto n = static_cast<std::size_t>(rng.uniform(1, 4));
      auto ring = RingContext::make_indexed(FieldSpec::parse(field), n);
      const Ideal I(ring, test::random_tuple(ring, rng, static_cast<int>(rng.uniform(1, 4)), 3));
      const auto res = resolve(I);
      ASSERT_LE(res.length(), n + 1);
      ASSERT_TRUE(verify_exactness(res)) << serialize_ideal(I);
      const auto grevlex = minimalize(res);
      ResolveOptions lex;
      lex.order = MonomialOrder::lex;
      const auto by_lex = minimalize(resolve(I, lex));
      EXPECT_EQ(grevlex.betti, by_lex.betti) << serialize_ideal(I);
      EXPECT_LE(grevlex.resolution.length(), n);
      EXPECT_LE(grevlex.betti.projective_dimension(), static_cast<int>(n));
    }
  }
}

}  // namespace
}  // namespace salab
