#include <gtest/gtest.h>

#include <chrono>

#include "salab/errors.hpp"
#include "salab/gin.hpp"
#include "test_util.hpp"

using namespace salab;
using salab::test::P;
using salab::test::Ps;

namespace {

std::string show(const std::vector<Monomial>& gens, const Ring& ring) {
  std::string out;
  for (const auto& m : gens) out += (out.empty() ? "" : ", ") + to_string(Polynomial::monomial(ring, 1, m));
  return out;
}

}  // namespace

TEST(Gin, BorelFixedIdealIsItsOwnGin) {
  const auto ring = test::ring_of("QQ", {"x1", "x2"});
  const Ideal ideal(ring, Ps(ring, {"x1^2", "x1*x2"}));
  const auto g = generic_initial_ideal(ideal, 1);
  EXPECT_TRUE(g.stable);
  EXPECT_TRUE(g.borel);
  EXPECT_EQ(show(g.gin, ring), "x1*x2, x1^2");
}

TEST(Gin, Examples) {
  const auto ring = test::ring_of("QQ", {"x1", "x2", "x3"});
  const auto sq = generic_initial_ideal(Ideal(ring, Ps(ring, {"x2^2"})), 2);
  EXPECT_TRUE(sq.stable);
  EXPECT_EQ(show(sq.gin, ring), "x1^2");
  const auto lin = generic_initial_ideal(Ideal(ring, Ps(ring, {"x2 - 3*x3"})), 3);
  EXPECT_EQ(show(lin.gin, ring), "x1");
  const auto zero = generic_initial_ideal(Ideal(ring, {}), 4);
  EXPECT_TRUE(zero.gin.empty());
  EXPECT_TRUE(zero.stable);
}

TEST(Gin, Errors) {
  const auto ring = test::ring_of("QQ", {"x", "y"});
  EXPECT_THROW(generic_initial_ideal(Ideal(ring, Ps(ring, {"x^2 + y"})), 1), DomainError);
  const auto small = test::ring_of("F7", {"x", "y"});
  EXPECT_THROW(generic_initial_ideal(Ideal(small, Ps(small, {"x^2"})), 1), DomainError);
  GinOptions one;
  one.trials = 1;
  EXPECT_THROW(generic_initial_ideal(Ideal(ring, Ps(ring, {"x^2"})), 1, one), DomainError);
}

TEST(Gin, BorelCheck) {
  EXPECT_TRUE(is_borel_fixed({Monomial({2, 0}), Monomial({1, 1})}, 2));
  EXPECT_FALSE(is_borel_fixed({Monomial({0, 2})}, 2));
  EXPECT_FALSE(is_borel_fixed({Monomial({1, 1})}, 2));
}

TEST(Gin, PdInvarianceExamples) {
  const auto ring = test::ring_of("QQ", {"x1", "x2"});
  const auto c = check_gin_pd_invariance(Ideal(ring, Ps(ring, {"x1^2", "x1*x2"})), 5);
  EXPECT_EQ(c.pd_ideal, 2);
  EXPECT_EQ(c.pd_gin, 2);
  EXPECT_TRUE(c.agree);
  const auto r3 = test::ring_of("QQ", {"x", "y", "z"});
  const auto p = check_gin_pd_invariance(Ideal(r3, Ps(r3, {"x^2*y + z^3 - y*z^2"})), 6);
  EXPECT_EQ(p.pd_ideal, 1);
  EXPECT_EQ(p.pd_gin, 1);
}

TEST(Gin, RandomTwoQuadricsInFourVariables) {
  const auto ring = RingContext::make_indexed(FieldSpec::rationals(), 4);
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    Rng rng(derive_seed(99, seed));
    RandomFormSpec spec;
    spec.degree = 2;
    spec.max_terms = 4;
    const Ideal ideal(ring, {random_form(ring, spec, rng), random_form(ring, spec, rng)});
    const auto c = check_gin_pd_invariance(ideal, seed);
    ASSERT_TRUE(c.stable) << "seed " << seed;
    EXPECT_TRUE(c.agree) << "seed " << seed;
    const int mmax = default_hilbert_mmax(ideal);
    EXPECT_EQ(hilbert_function(ideal, mmax).values,
              hilbert_function_of_monomials(c.gin.gin, *ring, mmax).values);
  }
}

TEST(Gin, SeedIndependentWhenStable) {
  const auto ring = RingContext::make_indexed(FieldSpec::prime(32003), 3);
  const Ideal ideal(ring, Ps(ring, {"x1*x2 + x3^2", "x2^3 - x1*x3^2"}));
  const auto a = generic_initial_ideal(ideal, 10);
  const auto b = generic_initial_ideal(ideal, 11);
  ASSERT_TRUE(a.stable && b.stable);
  EXPECT_EQ(a.gin, b.gin);
}
