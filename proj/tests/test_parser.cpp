#include <gtest/gtest.h>

#include "salab/errors.hpp"
#include "salab/parser.hpp"
#include "salab/random.hpp"
#include "test_util.hpp"

namespace salab {
namespace {

using test::P;

std::pair<std::size_t, std::size_t> error_position(const std::string& text) {
  try {
    parse_ideal_file(text);
  } catch (const ParseError& e) {
    return {e.line(), e.column()};
  }
  ADD_FAILURE() << "no parse error for: " << text;
  return {0, 0};
}

TEST(Parser, Examples) {
  const auto s7 = parse_ideal_file("ring QQ[x1,x2]\nx1^2\nx1*x2");
  ASSERT_EQ(s7.generators().size(), 2u);
  EXPECT_EQ(to_string(s7.generators()[0]), "x1^2");
  EXPECT_EQ(to_string(s7.generators()[1]), "x1*x2");
  const auto f3 = parse_ideal_file("ring F3[x,y]\nx^2 + 2*y^2");
  EXPECT_EQ(f3.ring()->field(), FieldSpec::prime(3));
  EXPECT_EQ(to_string(f3.generators()[0]), "x^2 + 2*y^2");
}

TEST(Parser, GrammarFeatures) {
  const auto ideal = parse_ideal_file(
      "# leading comment\n"
      "\n"
      "ring QQ[x, y, z]   # trailing comment\n"
      "(x + y)^2 - 3/4*x*y\n"
      "-(z - 1/2*x)*(z + 1/2*x)\n");
  const auto& r = ideal.ring();
  EXPECT_EQ(ideal.generators()[0], P(r, "x^2 + 5/4*x*y + y^2"));
  EXPECT_EQ(ideal.generators()[1], P(r, "1/4*x^2 - z^2"));
  const auto fp = parse_ideal_file("ring F7[a,b]\n1/2*a + 8*b\n");
  EXPECT_EQ(to_string(fp.generators()[0]), "4*a + b");
}

TEST(Parser, ErrorsCarryPositions) {
  EXPECT_EQ(error_position("ring QQ[x]\nx^^2"), std::make_pair(std::size_t{2}, std::size_t{3}));
  EXPECT_EQ(error_position("ring QQ[x]\nx + w").first, 2u);
  EXPECT_EQ(error_position("ring QQ[x]\nx + w").second, 5u);
  EXPECT_EQ(error_position("ring QQ[x]\n1/0*x").first, 2u);
  EXPECT_EQ(error_position("ring QQ[x]\nx/2").first, 2u);
  EXPECT_EQ(error_position("ring QQ[x,y]\nx y").first, 2u);
  EXPECT_EQ(error_position("ring QQ[x,y]\n2x").first, 2u);
  EXPECT_EQ(error_position("ring F2[x]\nx").first, 1u);
  EXPECT_EQ(error_position("ring F9[x]\nx").first, 1u);
  EXPECT_EQ(error_position("ring QQ[x]\n").first, 2u);
  EXPECT_EQ(error_position("x^2\n").first, 1u);
  EXPECT_EQ(error_position("ring QQ[x,x]\nx").first, 1u);
  EXPECT_EQ(error_position("ring QQ[x]\n(x + 1").first, 2u);
}

TEST(Parser, SerializeRoundTrip) {
  Rng rng(31);
  for (const char* field : {"QQ", "F5", "F101"}) {
    for (int it = 0; it < 100; ++it) {
      const auto n = static_cast<std::size_t>(rng.uniform(1, 4));
      const auto ring = RingContext::make_indexed(FieldSpec::parse(field), n, it % 2 ? "x" : "v");
      std::vector<Polynomial> gens;
      const auto r = rng.uniform(1, 3);
      for (std::int64_t g = 0; g < r; ++g) {
        std::vector<Term> terms;
        const auto k = rng.uniform(1, 4);
        for (std::int64_t t = 0; t < k; ++t) {
          std::vector<int> e(n);
          for (auto& x : e) x = static_cast<int>(rng.uniform(0, 3));
          Coeff c(rng.uniform(-20, 20), rng.uniform(1, 7));
          c.canonicalize();
          if (!ring->field().is_rationals() && c.get_den() % static_cast<long>(ring->field().characteristic()) == 0)
            c = 1;
          terms.push_back({c, Monomial(std::move(e))});
        }
        auto f = Polynomial::from_terms(ring, std::move(terms));
        if (!f.is_zero()) gens.push_back(std::move(f));
      }
      if (gens.empty()) continue;
      const Ideal ideal(ring, gens);
      const auto text = serialize_ideal(ideal);
      const auto back = parse_ideal_file(text);
      ASSERT_EQ(back.generators().size(), ideal.generators().size()) << text;
      for (std::size_t i = 0; i < gens.size(); ++i) {
        EXPECT_EQ(to_string(back.generators()[i]), to_string(ideal.generators()[i])) << text;
      }
      EXPECT_EQ(serialize_ideal(back), text);
    }
  }
}

}  // namespace
}  // namespace salab
