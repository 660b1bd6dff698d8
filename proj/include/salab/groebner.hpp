#pragma once

#include <map>
#include <span>
#include <vector>

#include "salab/module_gb.hpp"
#include "salab/polynomial.hpp"

namespace salab {

/// Ideal given by generators; zero generators are stripped on construction,
/// so an empty generator list denotes the zero ideal.
class Ideal {
 public:
  Ideal(Ring ring, std::vector<Polynomial> generators);

  const Ring& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  /// Every generator homogeneous in the ring grading.
  bool is_homogeneous() const;
  /// Largest generator degree (0 for the zero ideal).
  int max_degree() const;

 private:
  Ring ring_;
  std::vector<Polynomial> gens_;
};

struct GroebnerBasis {
  Ideal ideal;
  MonomialOrder order;
  /// Reduced basis: monic, minimal, tail-reduced; ascending by lead term.
  std::vector<Polynomial> basis;
};

struct GroebnerOptions {
  std::size_t max_basis = 100000;
};

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors, MonomialOrder ord);

GroebnerBasis buchberger(const Ideal& ideal, MonomialOrder ord, const GroebnerOptions& opts = {});

/// True when every S-polynomial of the basis reduces to zero.
bool verify_groebner_certificate(const GroebnerBasis& gb);

/// Ideal-membership test against a Groebner basis.
bool contains(const GroebnerBasis& gb, const Polynomial& f);

/// Leading monomials of the (reduced) basis: the minimal generators of the
/// initial ideal.
std::vector<Monomial> leading_monomials(const GroebnerBasis& gb);

/// The monomial ideal of leading terms.
Ideal initial_ideal(const GroebnerBasis& gb);

struct HilbertFunctionTable {
  std::map<int, long long> values;  ///< degree -> dim (S/I)_m
  friend bool operator==(const HilbertFunctionTable&, const HilbertFunctionTable&) = default;
};

/// 2 * (max generator degree) + n.
int default_hilbert_mmax(const Ideal& ideal);

/// Counts standard monomials of each degree up to m_max. Throws DomainError
/// on an inhomogeneous generator.
HilbertFunctionTable hilbert_function(const Ideal& ideal, int m_max);

/// Standard-monomial count for a monomial ideal given by generators.
HilbertFunctionTable hilbert_function_of_monomials(std::span<const Monomial> gens,
                                                   const RingContext& ring, int m_max);

/// dim S/I via the largest variable subset containing no initial-ideal
/// generator's support. Throws DomainError for the unit ideal.
int krull_dimension(const Ideal& ideal);
/// Same computation on a monomial ideal.
int krull_dimension_of_monomials(std::span<const Monomial> gens, std::size_t num_vars);

int codimension(const Ideal& ideal);

/// Minimal generators of the monomial ideal generated by `gens`, sorted
/// ascending in grevlex.
std::vector<Monomial> minimize_monomials(std::vector<Monomial> gens);

}  // namespace salab
