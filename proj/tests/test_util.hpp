#pragma once

#include <string>
#include <vector>

#include "salab/parser.hpp"
#include "salab/polynomial.hpp"
#include "salab/random.hpp"

namespace salab::test {

inline Ring ring_of(const std::string& field, std::vector<std::string> names) {
  return RingContext::make(FieldSpec::parse(field), std::move(names));
}

inline Polynomial P(const Ring& ring, const std::string& text) { return parse_polynomial(text, ring); }

inline std::vector<Polynomial> Ps(const Ring& ring, const std::vector<std::string>& texts) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(P(ring, t));
  return out;
}

/// Sparse random homogeneous tuple used by the property suites.
inline std::vector<Polynomial> random_tuple(const Ring& ring, Rng& rng, int r, int max_degree,
                                            std::size_t max_terms = 3, std::int64_t bound = 3) {
  std::vector<Polynomial> out;
  for (int i = 0; i < r; ++i) {
    RandomFormSpec spec;
    spec.degree = static_cast<int>(rng.uniform(1, max_degree));
    spec.max_terms = max_terms;
    spec.coeff_bound = bound;
    out.push_back(random_form(ring, spec, rng));
  }
  return out;
}

}  // namespace salab::test
