#pragma once

#include <cstdint>
#include <vector>

#include "salab/groebner.hpp"

namespace salab {

struct GinOptions {
  int trials = 3;
  std::int64_t bound = 50;         ///< change-of-variables entries in [-bound, bound]
  std::uint64_t char_floor = 101;  ///< smallest admissible characteristic p
};

struct GinResult {
  std::vector<Monomial> gin;  ///< minimal generators, ascending grevlex
  int trials_used = 0;
  bool stable = false;
  bool borel = true;          ///< Borel-fixed check (always true when not run)
  std::uint64_t seed = 0;
  std::int64_t bound = 0;     ///< coefficient bound of the accepted round
};

/// grevlex generic initial ideal by random dense changes of coordinates.
/// Throws DomainError on inhomogeneous input or characteristic below the floor.
GinResult generic_initial_ideal(const Ideal& ideal, std::uint64_t seed, const GinOptions& opts = {});

/// Closure under x_j * m / x_i for j < i with x_i | m.
bool is_borel_fixed(const std::vector<Monomial>& gens, std::size_t num_vars);

struct GinPdCheck {
  int pd_ideal = 0;
  int pd_gin = 0;
  bool agree = false;
  bool stable = false;
  GinResult gin;
};

GinPdCheck check_gin_pd_invariance(const Ideal& ideal, std::uint64_t seed, const GinOptions& opts = {});

/// Monomial ideal generated by `gens` as an Ideal in `ring`.
Ideal monomial_ideal(const Ring& ring, const std::vector<Monomial>& gens);

}  // namespace salab
