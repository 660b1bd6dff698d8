#include <gtest/gtest.h>

#include "salab/errors.hpp"
#include "salab/resolution.hpp"
#include "salab/structure.hpp"
#include "test_util.hpp"

using namespace salab;
using salab::test::P;
using salab::test::Ps;

namespace {

Ring qq(std::size_t n) { return RingContext::make_indexed(FieldSpec::rationals(), n); }

Polynomial random_quadric(const Ring& ring, Rng& rng, std::size_t terms) {
  RandomFormSpec spec;
  spec.degree = 2;
  spec.max_terms = terms;
  spec.coeff_bound = 3;
  spec.allow_zero = true;
  return random_form(ring, spec, rng);
}

void expect_valid_decomposition(std::span<const Polynomial> fs, const ThresholdFunction& N, const Decomposition& d) {
  const auto& sp = d.presentation;
  EXPECT_TRUE(verify_presentation(fs, sp));
  const int s = static_cast<int>(sp.inner.size());
  EXPECT_TRUE(nu_tuple(sp.inner).value.exceeds(N(s)));
  EXPECT_EQ(nu_tuple(sp.inner).value, d.nu);
  EXPECT_LE(s, decomposition_length_bound(static_cast<int>(fs.size()), N));
  for (std::size_t j = 0; j < sp.inner.size(); ++j) EXPECT_EQ(sp.outer_ring->weight(j), *sp.inner[j].degree());
  for (const auto& F : sp.outers) EXPECT_TRUE(is_homogeneous(F).homogeneous);
}

}  // namespace

TEST(RegularSequence, Examples) {
  for (std::size_t n = 1; n <= 5; ++n)
    for (std::size_t r = 1; r <= n; ++r) {
      const auto ring = qq(n);
      std::vector<Polynomial> vars;
      for (std::size_t i = 0; i < r; ++i) vars.push_back(Polynomial::variable(ring, i));
      EXPECT_TRUE(is_regular_sequence(vars).regular);
    }
  const auto ring = test::ring_of("QQ", {"x", "y", "z"});
  const auto xy_xz = Ps(ring, {"x*y", "x*z"});
  const auto rep = is_regular_sequence(xy_xz);
  EXPECT_FALSE(rep.regular);
  EXPECT_EQ(rep.codimension, 1);
  EXPECT_FALSE(koszul_check(xy_xz));

  const auto r3 = qq(3);
  const auto pair = Ps(r3, {"x1^2 + x2^2 + x3^2", "x1*x2 + x2*x3"});
  EXPECT_EQ(is_regular_sequence(pair).regular, koszul_check(pair));
  EXPECT_TRUE(is_regular_sequence(pair).regular);

  EXPECT_FALSE(is_regular_sequence(std::vector<Polynomial>{Polynomial(r3)}).regular);
  EXPECT_FALSE(is_regular_sequence(Ps(r3, {"x1", "x2", "x3", "x1 + x2"})).regular);
  EXPECT_FALSE(is_regular_sequence(Ps(r3, {"x1", "x1"})).regular);
  EXPECT_THROW(is_regular_sequence(Ps(r3, {"x1 + x2^2"})), DomainError);
}

TEST(RegularSequence, DimensionAgreesWithKoszul) {
  Rng rng(21);
  int regular = 0, total = 0;
  for (const char* field : {"QQ", "F5"}) {
    for (int it = 0; it < 60; ++it) {
      const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 4));
      const auto ring = RingContext::make_indexed(FieldSpec::parse(field), n);
      const int r = static_cast<int>(rng.uniform(1, std::min<std::int64_t>(3, static_cast<std::int64_t>(n))));
      const auto fs = test::random_tuple(ring, rng, r, 3, 3);
      const auto rep = is_regular_sequence(fs);
      EXPECT_EQ(rep.regular, koszul_check(fs)) << field << " n=" << n;
      regular += rep.regular;
      ++total;
    }
  }
  EXPECT_GT(regular, 0);
  EXPECT_LT(regular, total);
}

TEST(Jacobian, Examples) {
  const auto ring = test::ring_of("QQ", {"x", "y", "z"});
  EXPECT_TRUE(jacobian_independent(Ps(ring, {"x", "y", "z"})));
  EXPECT_FALSE(jacobian_independent(Ps(ring, {"x + y", "x^2 + 2*x*y + y^2"})));
  EXPECT_FALSE(jacobian_independent(Ps(ring, {"x", "y", "z", "x*y"})));
  EXPECT_FALSE(jacobian_independent(Ps(ring, {"x*y", "x^2*y^2 - 3"})));
  EXPECT_TRUE(jacobian_independent(Ps(ring, {"x*y", "x*z"})));
  const auto f3 = test::ring_of("F3", {"x", "y"});
  EXPECT_THROW(jacobian_independent(Ps(f3, {"x"})), DomainError);
}

TEST(Jacobian, RegularImpliesIndependent) {
  Rng rng(22);
  int checked = 0;
  for (int it = 0; it < 80; ++it) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 4));
    const auto ring = qq(n);
    const int r = static_cast<int>(rng.uniform(1, static_cast<std::int64_t>(n)));
    const auto fs = test::random_tuple(ring, rng, r, 3, 3);
    if (!is_regular_sequence(fs).regular) continue;
    ++checked;
    EXPECT_TRUE(jacobian_independent(fs));
  }
  EXPECT_GT(checked, 10);
}

TEST(Threshold, Parsing) {
  const auto n = ThresholdFunction::parse("1,2,4");
  EXPECT_EQ(n(1), 1);
  EXPECT_EQ(n(3), 4);
  EXPECT_EQ(n(10), 4);
  EXPECT_EQ(n.max_up_to(2), 2);
  EXPECT_EQ(ThresholdFunction::parse("3")(7), 3);
  EXPECT_THROW(ThresholdFunction::parse("2,x"), DomainError);
  EXPECT_THROW(ThresholdFunction::parse("-1"), DomainError);
  EXPECT_EQ(decomposition_length_bound(2, ThresholdFunction::constant(3)), 8);
}

TEST(Decompose, HaltsOnEntry) {
  const auto ring = qq(5);
  const auto fs = Ps(ring, {"x1^2 + x2^2 + x3^2 + x4^2 + x5^2"});
  const auto N = ThresholdFunction::constant(2);
  const auto d = decompose_to_high_nu(fs, N);
  EXPECT_EQ(d.steps, 0);
  EXPECT_EQ(d.nu, Nu::finite(5));
  ASSERT_EQ(d.presentation.inner.size(), 1u);
  EXPECT_EQ(d.presentation.inner[0], fs[0]);
  EXPECT_EQ(to_string(d.presentation.outers[0]), "X1");
  expect_valid_decomposition(fs, N, d);
}

TEST(Decompose, SplitsProductIntoLinearForms) {
  const auto ring = qq(2);
  const auto fs = Ps(ring, {"x1*x2"});
  const auto N = ThresholdFunction::constant(3);
  const auto d = decompose_to_high_nu(fs, N);
  EXPECT_EQ(d.steps, 1);
  EXPECT_EQ(d.presentation.inner.size(), 2u);
  for (const auto& g : d.presentation.inner) EXPECT_EQ(g.degree(), 1);
  EXPECT_EQ(d.nu, Nu::infinity());
  EXPECT_EQ(d.presentation.outers[0].degree(), 2);
  expect_valid_decomposition(fs, N, d);
}

TEST(Decompose, MixedOutput) {
  const auto ring = qq(2);
  const auto fs = Ps(ring, {"x1^2 + x2^2", "x1^2 - x2^2"});
  const auto N = ThresholdFunction::constant(2);
  const auto d = decompose_to_high_nu(fs, N);
  EXPECT_GE(d.steps, 1);
  expect_valid_decomposition(fs, N, d);
}

TEST(Decompose, ZeroAndRepeatedMembers) {
  const auto ring = qq(3);
  const auto fs = std::vector<Polynomial>{P(ring, "x1^2 + x2^2 + x3^2"), Polynomial(ring), P(ring, "x1^2 + x2^2 + x3^2")};
  const auto N = ThresholdFunction::constant(1);
  const auto d = decompose_to_high_nu(fs, N);
  expect_valid_decomposition(fs, N, d);
  EXPECT_EQ(d.presentation.inner.size(), 1u);
}

TEST(Decompose, RandomTuplesSatisfyPostconditions) {
  Rng rng(23);
  for (const char* field : {"F5", "F7", "QQ"}) {
    for (int it = 0; it < 30; ++it) {
      const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 5));
      const auto ring = RingContext::make_indexed(FieldSpec::parse(field), n);
      const std::size_t r = static_cast<std::size_t>(rng.uniform(1, 3));
      std::vector<Polynomial> fs;
      for (std::size_t i = 0; i < r; ++i) fs.push_back(random_quadric(ring, rng, rng.uniform(1, 4)));
      const auto N = ThresholdFunction::constant(static_cast<int>(rng.uniform(1, 3)));
      Decomposition d;
      try {
        d = decompose_to_high_nu(fs, N);
      } catch (const DomainError& e) {
        // Irrational minimizers over QQ only.
        EXPECT_TRUE(ring->field().is_rationals()) << e.what();
        continue;
      }
      expect_valid_decomposition(fs, N, d);
    }
  }
}

TEST(Decompose, LengthBoundIndependentOfVariableCount) {
  Rng rng(24);
  for (std::size_t n = 3; n <= 8; ++n) {
    const auto ring = RingContext::make_indexed(FieldSpec::prime(5), n);
    for (int it = 0; it < 8; ++it) {
      const std::size_t r = static_cast<std::size_t>(rng.uniform(1, 3));
      std::vector<Polynomial> fs;
      for (std::size_t i = 0; i < r; ++i) fs.push_back(random_quadric(ring, rng, rng.uniform(1, 2 * n)));
      const auto N = ThresholdFunction::table({1, 2, 3});
      const auto d = decompose_to_high_nu(fs, N);
      EXPECT_LE(static_cast<int>(d.presentation.inner.size()), decomposition_length_bound(static_cast<int>(r), N));
      EXPECT_TRUE(verify_presentation(fs, d.presentation));
    }
  }
}

TEST(PdTransfer, Examples) {
  {
    const auto ring = qq(3);
    const auto outer = RingContext::make_indexed(FieldSpec::rationals(), 2, "X");
    SubalgebraPresentation sp{Ps(ring, {"x1", "x2"}), Ps(outer, {"X1^2", "X1*X2"}), outer};
    const auto t = pd_transfer(sp);
    EXPECT_EQ(t.pd_over_inner, 2);
    EXPECT_EQ(t.pd_in_S, 2);
    EXPECT_TRUE(t.agree);
  }
  {
    const auto ring = qq(3);
    const auto outer = RingContext::make_indexed(FieldSpec::rationals(), 2, "X", {2, 2});
    SubalgebraPresentation sp{Ps(ring, {"x1^2 + x2^2 + x3^2", "x1*x2 + x2*x3"}), Ps(outer, {"X1^2", "X1*X2"}), outer};
    const auto t = pd_transfer(sp);
    EXPECT_EQ(t.pd_over_inner, 2);
    EXPECT_EQ(t.pd_in_S, 2);
    EXPECT_TRUE(t.agree);
  }
  {
    const auto ring = qq(3);
    const auto outer = RingContext::make_indexed(FieldSpec::rationals(), 2, "X", {1, 2});
    SubalgebraPresentation sp{Ps(ring, {"x1 + x2 + x3", "x1*x2 + x1*x3 + x2*x3"}), Ps(outer, {"X1", "X2"}), outer};
    const auto t = pd_transfer(sp);
    EXPECT_EQ(t.pd_over_inner, 2);
    EXPECT_EQ(t.pd_in_S, 2);
  }
  {
    const auto ring = test::ring_of("QQ", {"x", "y", "z"});
    const auto outer = RingContext::make_indexed(FieldSpec::rationals(), 2, "X", {2, 2});
    SubalgebraPresentation sp{Ps(ring, {"x*y", "x*z"}), Ps(outer, {"X1", "X2"}), outer};
    EXPECT_THROW(pd_transfer(sp), DomainError);
  }
}

TEST(PdTransfer, AgreesOnRegularDecompositions) {
  Rng rng(25);
  int checked = 0;
  for (int it = 0; it < 40; ++it) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(3, 5));
    const auto ring = RingContext::make_indexed(FieldSpec::prime(7), n);
    std::vector<Polynomial> fs;
    for (int i = 0; i < 2; ++i) fs.push_back(random_quadric(ring, rng, 3));
    const auto d = decompose_to_high_nu(fs, ThresholdFunction::constant(static_cast<int>(rng.uniform(1, 2))));
    if (d.presentation.inner.empty() || !is_regular_sequence(d.presentation.inner).regular) continue;
    ++checked;
    EXPECT_TRUE(pd_transfer(d.presentation).agree);
  }
  EXPECT_GT(checked, 5);
}
