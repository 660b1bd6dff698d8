#include "salab/gin.hpp"

#include <future>
#include <map>

#include "salab/errors.hpp"
#include "salab/linalg.hpp"
#include "salab/random.hpp"
#include "salab/resolution.hpp"

namespace salab {

namespace {

std::vector<Monomial> initial_after_change(const Ideal& ideal, std::uint64_t seed, std::int64_t bound) {
  const Ring& ring = ideal.ring();
  const FieldSpec& k = ring->field();
  const std::size_t n = ring->num_vars();
  Rng rng(seed);
  DenseMatrix m(k, n, n);
  do {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = k.from_int(static_cast<long>(rng.uniform(-bound, bound)));
  } while (determinant(m) == 0);
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Term> terms;
    for (std::size_t j = 0; j < n; ++j)
      if (m(i, j) != 0) terms.push_back({m(i, j), Monomial::variable(n, j)});
    images.push_back(Polynomial::from_terms(ring, std::move(terms)));
  }
  std::vector<Polynomial> moved;
  for (const auto& f : ideal.generators()) moved.push_back(substitute(f, images, ring));
  const auto gb = buchberger(Ideal(ring, std::move(moved)), MonomialOrder::grevlex);
  return minimize_monomials(leading_monomials(gb));
}

std::vector<std::vector<Monomial>> run_round(const Ideal& ideal, std::uint64_t seed, int round, int trials,
                                             std::int64_t bound) {
  std::vector<std::future<std::vector<Monomial>>> jobs;
  for (int t = 0; t < trials; ++t) {
    const auto s = derive_seed(seed, static_cast<std::uint64_t>(round * trials + t));
    jobs.push_back(std::async(std::launch::async, [&ideal, s, bound] { return initial_after_change(ideal, s, bound); }));
  }
  std::vector<std::vector<Monomial>> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

bool all_equal(const std::vector<std::vector<Monomial>>& xs) {
  for (const auto& x : xs)
    if (!(x == xs.front())) return false;
  return true;
}

}  // namespace

Ideal monomial_ideal(const Ring& ring, const std::vector<Monomial>& gens) {
  std::vector<Polynomial> polys;
  for (const auto& m : gens) polys.push_back(Polynomial::monomial(ring, Coeff(1), m));
  return Ideal(ring, std::move(polys));
}

bool is_borel_fixed(const std::vector<Monomial>& gens, std::size_t num_vars) {
  auto member = [&](const Monomial& m) {
    for (const auto& g : gens)
      if (g.divides(m)) return true;
    return false;
  };
  for (const auto& m : gens)
    for (std::size_t i = 1; i < num_vars; ++i) {
      if (m[i] == 0) continue;
      for (std::size_t j = 0; j < i; ++j) {
        const Monomial moved = quotient(m, Monomial::variable(num_vars, i)) * Monomial::variable(num_vars, j);
        if (!member(moved)) return false;
      }
    }
  return true;
}

GinResult generic_initial_ideal(const Ideal& ideal, std::uint64_t seed, const GinOptions& opts) {
  if (opts.trials < 2) throw DomainError("gin needs at least 2 trials");
  if (opts.bound < 1) throw DomainError("gin coefficient bound must be positive");
  if (!ideal.is_homogeneous()) throw DomainError("gin requires a homogeneous ideal");
  const FieldSpec& k = ideal.ring()->field();
  if (!k.is_rationals() && k.characteristic() < opts.char_floor)
    throw DomainError("gin needs characteristic 0 or at least " + std::to_string(opts.char_floor));
  GinResult res;
  res.seed = seed;
  const std::size_t n = ideal.ring()->num_vars();
  if (ideal.is_zero()) {
    res.stable = true;
    return res;
  }
  std::int64_t bound = opts.bound;
  std::vector<std::vector<Monomial>> results;
  for (int round = 0; round < 2; ++round, bound *= 2) {
    results = run_round(ideal, seed, round, opts.trials, bound);
    res.trials_used += opts.trials;
    res.bound = bound;
    if (all_equal(results)) {
      res.stable = true;
      res.gin = results.front();
      break;
    }
  }
  if (!res.stable) {
    std::map<std::size_t, int> votes;
    for (std::size_t i = 0; i < results.size(); ++i)
      for (std::size_t j = 0; j <= i; ++j)
        if (results[j] == results[i]) {
          ++votes[j];
          break;
        }
    std::size_t best = 0;
    for (const auto& [idx, v] : votes)
      if (v > votes[best]) best = idx;
    res.gin = results[best];
  }
  if (k.is_rationals()) {
    res.borel = is_borel_fixed(res.gin, n);
    if (!res.borel) res.stable = false;
  }
  return res;
}

GinPdCheck check_gin_pd_invariance(const Ideal& ideal, std::uint64_t seed, const GinOptions& opts) {
  GinPdCheck out;
  out.gin = generic_initial_ideal(ideal, seed, opts);
  out.stable = out.gin.stable;
  auto gin_pd = std::async(std::launch::async,
                           [&] { return projective_dimension(monomial_ideal(ideal.ring(), out.gin.gin)); });
  out.pd_ideal = projective_dimension(ideal);
  out.pd_gin = gin_pd.get();
  out.agree = out.pd_ideal == out.pd_gin;
  return out;
}

}  // namespace salab
