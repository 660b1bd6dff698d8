#include <gtest/gtest.h>

#include "salab/errors.hpp"
#include "test_util.hpp"

namespace salab {
namespace {

using test::P;
using test::ring_of;

class RingCoreTest : public ::testing::Test {
 protected:
  Ring q3 = ring_of("QQ", {"x1", "x2", "x3"});
};

TEST_F(RingCoreTest, AddCancelsAndKeepsIdentity) {
  EXPECT_EQ(P(q3, "x1 + x2") + P(q3, "-x2"), P(q3, "x1"));
  EXPECT_EQ(P(q3, "x1^2 + x3") + Polynomial(q3), P(q3, "x1^2 + x3"));
  EXPECT_EQ(P(q3, "x1^2 + x2^2") + P(q3, "x2^2"), P(q3, "x1^2 + 2*x2^2"));
}

TEST_F(RingCoreTest, MultiplicationExamples) {
  // Composition of the two maps in the worked resolution of (x1^2, x1*x2).
  EXPECT_TRUE((P(q3, "x1^2") * P(q3, "-x2") + P(q3, "x1*x2") * P(q3, "x1")).is_zero());
  EXPECT_EQ(P(q3, "1") * P(q3, "x1 - x3^4"), P(q3, "x1 - x3^4"));
  auto r = ring_of("QQ", {"x", "y"});
  EXPECT_EQ(P(r, "x + y") * P(r, "x - y"), P(r, "x^2 - y^2"));
}

TEST_F(RingCoreTest, RingMismatchIsRejected) {
  auto other = ring_of("F5", {"x1", "x2", "x3"});
  EXPECT_THROW(P(q3, "x1") + P(other, "x1"), DomainError);
  EXPECT_THROW(P(q3, "x1") * P(other, "x1"), DomainError);
}

TEST_F(RingCoreTest, Homogeneity) {
  auto h = is_homogeneous(P(q3, "x1^3 + x1*x2*x3"));
  EXPECT_TRUE(h.homogeneous);
  EXPECT_EQ(h.degree, 3);
  EXPECT_FALSE(is_homogeneous(P(q3, "x1^3 + x1^2")).homogeneous);
  auto z = is_homogeneous(Polynomial(q3));
  EXPECT_TRUE(z.homogeneous);
  EXPECT_FALSE(z.degree.has_value());
  EXPECT_FALSE(Polynomial(q3).degree().has_value());
}

TEST_F(RingCoreTest, SubstituteExamples) {
  auto one = RingContext::make_indexed(FieldSpec::rationals(), 1, "X");
  const Polynomial g = P(q3, "x1^2 + x2^2 + x3^2");
  std::vector<Polynomial> gs{g};
  EXPECT_EQ(substitute(P(one, "X1^3"), gs), pow(g, 3));
  EXPECT_EQ(substitute(P(one, "X1"), gs), g);

  auto three = RingContext::make_indexed(FieldSpec::rationals(), 3, "X");
  auto xy = ring_of("QQ", {"x", "y"});
  std::vector<Polynomial> hs{P(xy, "x"), P(xy, "y"), P(xy, "x*y")};
  EXPECT_TRUE(substitute(P(three, "X1*X2 - X3"), hs).is_zero());
  EXPECT_THROW(substitute(P(three, "X1"), gs), DomainError);
}

TEST_F(RingCoreTest, PartialDerivatives) {
  EXPECT_EQ(partial_derivative(P(q3, "x1^3 + x1*x2*x3"), 0), P(q3, "3*x1^2 + x2*x3"));
  EXPECT_TRUE(partial_derivative(P(q3, "x1^2"), 1).is_zero());
  EXPECT_THROW(partial_derivative(P(q3, "x1"), 3), DomainError);
  // (x1 + x2)^2 = x1^2 + 2 x1 x2 + x2^2, so the x1-derivative is 2 x1 + 2 x2.
  auto one = RingContext::make_indexed(FieldSpec::rationals(), 1, "X");
  std::vector<Polynomial> gs{P(q3, "x1 + x2")};
  EXPECT_EQ(partial_derivative(substitute(P(one, "X1^2"), gs), 0), P(q3, "2*x1 + 2*x2"));
}

TEST_F(RingCoreTest, LeadingTerms) {
  auto r = ring_of("QQ", {"x1", "x2"});
  EXPECT_EQ(leading_term(P(r, "x1^2 + x1*x2"), MonomialOrder::grevlex).mono, Monomial({2, 0}));
  EXPECT_EQ(leading_term(P(r, "x2^3 + x1^2"), MonomialOrder::lex).mono, Monomial({2, 0}));
  EXPECT_EQ(leading_term(P(r, "x2^3 + x1^2"), MonomialOrder::grevlex).mono, Monomial({0, 3}));
  // grevlex with x > y > z: x^2 z beats x y z (smaller y-exponent).
  auto xyz = ring_of("QQ", {"x", "y", "z"});
  EXPECT_EQ(leading_term(P(xyz, "x*y*z + x^2*z"), MonomialOrder::grevlex).mono, Monomial({2, 0, 1}));
  EXPECT_THROW(leading_term(Polynomial(r), MonomialOrder::lex), DomainError);
}

TEST(FieldSpec, RejectsCharacteristicTwoAndComposites) {
  EXPECT_THROW(FieldSpec::prime(2), DomainError);
  EXPECT_THROW(FieldSpec::prime(9), DomainError);
  EXPECT_EQ(FieldSpec::prime(7).characteristic(), 7u);
  const auto f = FieldSpec::prime(7);
  EXPECT_EQ(f.normalize(mpq_class(1, 3)), Coeff(5));
  EXPECT_EQ(f.mul(f.inv(Coeff(3)), Coeff(3)), Coeff(1));
}

// ---- properties ----------------------------------------------------------

bool canonical(const Polynomial& f) {
  const auto terms = f.terms();
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (sgn(terms[i].coeff) == 0) return false;
    if (i > 0 && compare(terms[i - 1].mono, terms[i].mono, MonomialOrder::grevlex) <= 0) return false;
  }
  return true;
}

Polynomial random_poly(const Ring& ring, Rng& rng, int max_deg = 3) {
  std::vector<Term> terms;
  const auto count = rng.uniform(0, 5);
  for (int t = 0; t < count; ++t) {
    std::vector<int> e(ring->num_vars());
    for (auto& x : e) x = static_cast<int>(rng.uniform(0, max_deg));
    terms.push_back({Coeff(static_cast<long>(rng.uniform(-4, 4)), static_cast<unsigned long>(rng.uniform(1, 3))),
                     Monomial(e)});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

TEST(RingCoreProperties, RingAxiomsAndCanonicalForm) {
  for (const char* field : {"QQ", "F5"}) {
    auto ring = ring_of(field, {"a", "b", "c"});
    Rng rng(11);
    for (int iter = 0; iter < 200; ++iter) {
      const auto f = random_poly(ring, rng), g = random_poly(ring, rng), h = random_poly(ring, rng);
      ASSERT_TRUE(canonical(f + g) && canonical(f * g) && canonical(f - g));
      EXPECT_EQ((f + g) + h, f + (g + h));
      EXPECT_EQ((f * g) * h, f * (g * h));
      EXPECT_EQ(f * (g + h), f * g + f * h);
      EXPECT_EQ(f * g, g * f);
      EXPECT_EQ(f + g, g + f);
      EXPECT_TRUE((f - f).is_zero());
    }
  }
}

TEST(RingCoreProperties, HomogeneityPreserved) {
  auto ring = ring_of("QQ", {"a", "b", "c", "d"});
  auto outer = RingContext::make_indexed(FieldSpec::rationals(), 3, "X");
  Rng rng(5);
  for (int iter = 0; iter < 100; ++iter) {
    RandomFormSpec s1{static_cast<int>(rng.uniform(1, 3)), 3, 4, false};
    RandomFormSpec s2{static_cast<int>(rng.uniform(1, 3)), 3, 4, false};
    const auto f = random_form(ring, s1, rng), g = random_form(ring, s2, rng);
    const auto h = is_homogeneous(f * g);
    ASSERT_TRUE(h.homogeneous);
    EXPECT_EQ(*h.degree, s1.degree + s2.degree);

    const int d = static_cast<int>(rng.uniform(1, 2));
    const int e = static_cast<int>(rng.uniform(1, 3));
    std::vector<Polynomial> gs;
    for (int i = 0; i < 3; ++i) gs.push_back(random_form(ring, {d, 3, 3, false}, rng));
    const auto F = random_form(outer, {e, 3, 3, false}, rng);
    const auto sub = substitute(F, gs);
    const auto hs = is_homogeneous(sub);
    ASSERT_TRUE(hs.homogeneous);
    if (!sub.is_zero()) EXPECT_EQ(*hs.degree, d * e);
  }
}

TEST(RingCoreProperties, ChainRule) {
  Rng rng(2024);
  for (int iter = 0; iter < 100; ++iter) {
    const auto s = static_cast<std::size_t>(rng.uniform(1, 3));
    const auto n = static_cast<std::size_t>(rng.uniform(1, 4));
    auto outer = RingContext::make_indexed(FieldSpec::rationals(), s, "X");
    auto inner = RingContext::make_indexed(FieldSpec::rationals(), n, "x");
    const auto F = random_poly(outer, rng, 3);
    std::vector<Polynomial> gs;
    for (std::size_t j = 0; j < s; ++j) gs.push_back(random_poly(inner, rng, 2));
    const auto composed = substitute(F, gs, inner);
    for (std::size_t i = 0; i < n; ++i) {
      Polynomial rhs(inner);
      for (std::size_t j = 0; j < s; ++j) {
        rhs += substitute(partial_derivative(F, j), gs, inner) * partial_derivative(gs[j], i);
      }
      ASSERT_EQ(partial_derivative(composed, i), rhs);
    }
  }
}

}  // namespace
}  // namespace salab
