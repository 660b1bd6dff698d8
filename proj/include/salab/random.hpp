#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "salab/polynomial.hpp"

namespace salab {

/// Seeded 64-bit Mersenne Twister with portable integer sampling (the
/// standard distributions are implementation-defined; this is not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [lo, hi] by rejection sampling.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool coin(std::uint64_t numerator, std::uint64_t denominator) {
    return static_cast<std::uint64_t>(uniform(0, static_cast<std::int64_t>(denominator) - 1)) < numerator;
  }

 private:
  std::mt19937_64 engine_;
};

/// Derives an independent stream seed from (seed, index) via splitmix64.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

struct RandomFormSpec {
  int degree = 2;
  /// Coefficients are drawn from [-coeff_bound, coeff_bound] (then reduced).
  std::int64_t coeff_bound = 5;
  /// Maximum number of terms; 0 means dense (every monomial may appear).
  std::size_t max_terms = 0;
  bool allow_zero = false;
};

/// Random homogeneous form in the ring grading.
Polynomial random_form(const Ring& ring, const RandomFormSpec& spec, Rng& rng);

}  // namespace salab
