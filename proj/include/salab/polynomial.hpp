#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "salab/ring.hpp"

namespace salab {

struct Term {
  Coeff coeff;
  Monomial mono;
};

/// Sparse polynomial in canonical form: nonzero coefficients, distinct
/// monomials, terms strictly descending in grevlex. Equality is term-wise.
class Polynomial {
 public:
  explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}

  /// Normalizes coefficients into the field, merges duplicates, drops zeros.
  static Polynomial from_terms(Ring ring, std::vector<Term> terms);
  static Polynomial constant(Ring ring, const Coeff& c);
  static Polynomial variable(Ring ring, std::size_t index);
  static Polynomial monomial(Ring ring, const Coeff& c, Monomial m);

  const Ring& ring() const { return ring_; }
  const FieldSpec& field() const { return ring_->field(); }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  /// Largest term degree in the ring grading; nullopt for zero.
  std::optional<int> degree() const;
  /// Coefficient of `m` (zero if absent).
  Coeff coefficient(const Monomial& m) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& g);
  Polynomial& operator-=(const Polynomial& g);
  Polynomial& operator*=(const Polynomial& g);
  Polynomial scaled(const Coeff& c) const;
  Polynomial times_monomial(const Coeff& c, const Monomial& m) const;

  friend Polynomial operator+(Polynomial f, const Polynomial& g) { return f += g; }
  friend Polynomial operator-(Polynomial f, const Polynomial& g) { return f -= g; }
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
  friend bool operator==(const Polynomial& f, const Polynomial& g);

 private:
  Ring ring_;
  std::vector<Term> terms_;

  friend class PolynomialBuilder;
};

/// Homogeneity in the ring grading; `degree` is nullopt for the zero polynomial.
struct Homogeneity {
  bool homogeneous = true;
  std::optional<int> degree;
};

Homogeneity is_homogeneous(const Polynomial& f);

Polynomial pow(const Polynomial& f, unsigned k);

/// Evaluates F at (g1..gs); `target` is the ring of the gs (required when gs
/// is empty). Throws DomainError on arity or ring mismatch.
Polynomial substitute(const Polynomial& F, std::span<const Polynomial> gs, const Ring& target);
Polynomial substitute(const Polynomial& F, std::span<const Polynomial> gs);

Polynomial partial_derivative(const Polynomial& f, std::size_t var);

/// Maximal term under `ord`. Throws DomainError on zero.
Term leading_term(const Polynomial& f, MonomialOrder ord);

/// Reinterprets f in a ring with the same number of variables (e.g. reducing
/// rational coefficients mod p, or renaming).
Polynomial change_ring(const Polynomial& f, const Ring& target);

/// Determinant of a square matrix of polynomials (subset expansion).
Polynomial determinant(const std::vector<std::vector<Polynomial>>& m, const Ring& ring);

std::string to_string(const Polynomial& f);

void require_same_ring(const Ring& a, const Ring& b, const char* what);

}  // namespace salab
