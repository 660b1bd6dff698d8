#include "salab/groebner.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "salab/errors.hpp"

namespace salab {

Ideal::Ideal(Ring ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
  for (auto& g : generators) {
    require_same_ring(g.ring(), ring_, "ideal");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

bool Ideal::is_homogeneous() const {
  return std::all_of(gens_.begin(), gens_.end(),
                     [](const Polynomial& g) { return salab::is_homogeneous(g).homogeneous; });
}

int Ideal::max_degree() const {
  int d = 0;
  for (const auto& g : gens_) d = std::max(d, *g.degree());
  return d;
}

namespace {

ModuleOrder plain_order(MonomialOrder ord) {
  ModuleOrder o;
  o.mono = ord;
  return o;
}

Polynomial to_polynomial(const ModuleVector& v, const Ring& ring) { return component(v, 0, ring); }

}  // namespace

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors, MonomialOrder ord) {
  const ModuleOrder order = plain_order(ord);
  std::vector<ModuleVector> divs;
  divs.reserve(divisors.size());
  for (const auto& g : divisors) {
    require_same_ring(g.ring(), f.ring(), "normal_form");
    divs.push_back(to_vector(g, 0, order));
  }
  return to_polynomial(reduce_vector(to_vector(f, 0, order), divs, order, *f.ring()), f.ring());
}

GroebnerBasis buchberger(const Ideal& ideal, MonomialOrder ord, const GroebnerOptions& opts) {
  const ModuleOrder order = plain_order(ord);
  ModuleGroebner engine(ideal.ring(), order, true, opts.max_basis);
  // Seed with generators sorted by degree so low-degree elements come first.
  std::vector<const Polynomial*> gens;
  for (const auto& g : ideal.generators()) gens.push_back(&g);
  std::stable_sort(gens.begin(), gens.end(),
                   [](const Polynomial* a, const Polynomial* b) { return *a->degree() < *b->degree(); });
  for (const auto* g : gens) {
    ModuleVector v = engine.reduce(to_vector(*g, 0, order));
    if (!v.empty()) engine.add_generator(std::move(v));
    engine.complete();
  }
  GroebnerBasis gb{ideal, ord, {}};
  for (const auto& v : engine.reduced_basis()) gb.basis.push_back(to_polynomial(v, ideal.ring()));
  return gb;
}

bool verify_groebner_certificate(const GroebnerBasis& gb) {
  const auto& b = gb.basis;
  for (std::size_t i = 0; i < b.size(); ++i) {
    const Term li = leading_term(b[i], gb.order);
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      const Term lj = leading_term(b[j], gb.order);
      const Monomial l = lcm(li.mono, lj.mono);
      const FieldSpec& field = b[i].field();
      Polynomial s = b[i].times_monomial(field.inv(li.coeff), quotient(l, li.mono)) -
                     b[j].times_monomial(field.inv(lj.coeff), quotient(l, lj.mono));
      if (!normal_form(s, b, gb.order).is_zero()) return false;
    }
  }
  return true;
}

bool contains(const GroebnerBasis& gb, const Polynomial& f) {
  return normal_form(f, gb.basis, gb.order).is_zero();
}

std::vector<Monomial> leading_monomials(const GroebnerBasis& gb) {
  std::vector<Monomial> out;
  out.reserve(gb.basis.size());
  for (const auto& g : gb.basis) out.push_back(leading_term(g, gb.order).mono);
  return minimize_monomials(std::move(out));
}

std::vector<Monomial> minimize_monomials(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    return compare(a, b, MonomialOrder::grevlex) < 0;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (const auto& m : gens) {
    // Divisors precede multiples in a degree-compatible order.
    if (std::none_of(out.begin(), out.end(), [&](const Monomial& d) { return d.divides(m); })) {
      out.push_back(m);
    }
  }
  return out;
}

Ideal initial_ideal(const GroebnerBasis& gb) {
  const Ring& ring = gb.ideal.ring();
  std::vector<Polynomial> gens;
  for (const auto& m : leading_monomials(gb)) gens.push_back(Polynomial::monomial(ring, Coeff(1), m));
  return Ideal(ring, std::move(gens));
}

int default_hilbert_mmax(const Ideal& ideal) {
  return 2 * ideal.max_degree() + static_cast<int>(ideal.ring()->num_vars());
}

HilbertFunctionTable hilbert_function_of_monomials(std::span<const Monomial> gens,
                                                   const RingContext& ring, int m_max) {
  HilbertFunctionTable table;
  for (int m = 0; m <= m_max; ++m) {
    long long count = 0;
    for (const auto& mono : monomials_of_degree(ring.num_vars(), m, ring.weights())) {
      if (std::none_of(gens.begin(), gens.end(), [&](const Monomial& g) { return g.divides(mono); })) {
        ++count;
      }
    }
    table.values[m] = count;
  }
  return table;
}

HilbertFunctionTable hilbert_function(const Ideal& ideal, int m_max) {
  if (!ideal.is_homogeneous()) throw DomainError("hilbert_function: inhomogeneous generator");
  if (ideal.is_zero()) return hilbert_function_of_monomials({}, *ideal.ring(), m_max);
  const auto gb = buchberger(ideal, MonomialOrder::grevlex);
  const auto leads = leading_monomials(gb);
  return hilbert_function_of_monomials(leads, *ideal.ring(), m_max);
}

namespace {

// Minimum number of variables meeting every support (a hitting set).
int min_hitting_set(const std::vector<std::uint64_t>& supports, std::uint64_t chosen, int used, int best) {
  if (used >= best) return best;
  const std::uint64_t* unhit = nullptr;
  for (const auto& s : supports) {
    if ((s & chosen) == 0) {
      if (unhit == nullptr || std::popcount(s) < std::popcount(*unhit)) unhit = &s;
    }
  }
  if (unhit == nullptr) return used;
  for (std::uint64_t bits = *unhit; bits != 0; bits &= bits - 1) {
    const std::uint64_t v = bits & (~bits + 1);
    best = std::min(best, min_hitting_set(supports, chosen | v, used + 1, best));
  }
  return best;
}

}  // namespace

int krull_dimension_of_monomials(std::span<const Monomial> gens, std::size_t num_vars) {
  if (num_vars > 64) throw ResourceError("krull_dimension supports at most 64 variables");
  std::vector<std::uint64_t> supports;
  for (const auto& g : gens) {
    if (g.is_one()) throw DomainError("krull_dimension: unit ideal");
    std::uint64_t s = 0;
    for (std::size_t v : g.support()) s |= std::uint64_t{1} << v;
    supports.push_back(s);
  }
  const int n = static_cast<int>(num_vars);
  return n - min_hitting_set(supports, 0, 0, n + 1);
}

int krull_dimension(const Ideal& ideal) {
  const std::size_t n = ideal.ring()->num_vars();
  if (ideal.is_zero()) return static_cast<int>(n);
  const auto gb = buchberger(ideal, MonomialOrder::grevlex);
  return krull_dimension_of_monomials(leading_monomials(gb), n);
}

int codimension(const Ideal& ideal) {
  return static_cast<int>(ideal.ring()->num_vars()) - krull_dimension(ideal);
}

}  // namespace salab
