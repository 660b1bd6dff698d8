#include "salab/random.hpp"

#include <algorithm>

#include "salab/errors.hpp"

namespace salab {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw DomainError("Rng::uniform: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

Polynomial random_form(const Ring& ring, const RandomFormSpec& spec, Rng& rng) {
  const auto monos = monomials_of_degree(ring->num_vars(), spec.degree, ring->weights());
  if (monos.empty()) throw DomainError("random_form: no monomials of the requested degree");
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Term> terms;
    if (spec.max_terms == 0 || spec.max_terms >= monos.size()) {
      for (const auto& m : monos) {
        terms.push_back({Coeff(static_cast<long>(rng.uniform(-spec.coeff_bound, spec.coeff_bound))), m});
      }
    } else {
      const auto count = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(spec.max_terms)));
      for (std::size_t t = 0; t < count; ++t) {
        const auto idx = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(monos.size()) - 1));
        std::int64_t c = 0;
        while (c == 0) c = rng.uniform(-spec.coeff_bound, spec.coeff_bound);
        terms.push_back({Coeff(static_cast<long>(c)), monos[idx]});
      }
    }
    Polynomial f = Polynomial::from_terms(ring, std::move(terms));
    if (!f.is_zero() || spec.allow_zero) return f;
  }
  throw DomainError("random_form: could not draw a nonzero form");
}

}  // namespace salab
