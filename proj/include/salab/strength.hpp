#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "salab/linalg.hpp"
#include "salab/polynomial.hpp"

namespace salab {

/// nu-complexity value: a non-negative integer or +infinity.
struct Nu {
  bool infinite = false;
  int value = 0;

  static Nu finite(int v) { return Nu{false, v}; }
  static Nu infinity() { return Nu{true, 0}; }

  friend bool operator==(const Nu&, const Nu&) = default;
  friend bool operator<(const Nu& a, const Nu& b) {
    if (a.infinite || b.infinite) return !a.infinite && b.infinite;
    return a.value < b.value;
  }
  /// nu > threshold, with infinity exceeding every threshold.
  bool exceeds(int threshold) const { return infinite || value > threshold; }
};

std::string to_string(const Nu& nu);

/// f = F(g_1, ..., g_s) with every g_i of lower degree than f.
struct DecompositionWitness {
  Polynomial outer;               ///< F, in a ring with s variables
  std::vector<Polynomial> inner;  ///< g_1..g_s, in the ring of f
};

/// Symmetric Gram matrix G with f = x^T G x (off-diagonal halves). Throws
/// DomainError unless f is zero or a quadratic form.
DenseMatrix gram_matrix(const Polynomial& f);

/// Quadratic form from a symmetric matrix (inverse of gram_matrix).
Polynomial quadric_from_gram(const DenseMatrix& gram, const Ring& ring);

struct WeightedSquare {
  Coeff weight;
  Polynomial linear;
};

/// f = sum weight_k * linear_k^2 with exactly rank(f) terms.
std::vector<WeightedSquare> diagonalize(const Polynomial& quadric);

struct NuReport {
  Nu value;
  std::optional<DecompositionWitness> witness;
  /// Combination of the tuple attaining `value` (empty when not constructed,
  /// e.g. an irrational minimizer over QQ, or value infinity).
  std::vector<Coeff> combination;
  /// Degree class that attains `value` (-1 when infinite).
  int degree_class = -1;
};

/// nu of a quadratic form = rank of its Gram matrix, with a diagonal witness.
NuReport nu_quadric(const Polynomial& f);

/// nu of a tuple of forms of degree <= 2: minimum over degree classes of the
/// least nu of a nonzero combination within that class.
NuReport nu_tuple(std::span<const Polynomial> fs);

/// max(0, ceil(rank / 2) - 1).
int strength_quadric(const Polynomial& f);

/// substitute(outer, inner) == f and every inner form has degree < deg f.
bool verify_witness(const Polynomial& f, const DecompositionWitness& w);

struct VariableBound {
  int bound;
  DecompositionWitness witness;
};

/// Number of variables occurring in f (an upper bound for nu), with the
/// witness g_i = x_i. Throws DomainError when deg f < 2.
VariableBound nu_variable_bound(const Polynomial& f);

// ---- pencil minimum rank ---------------------------------------------------

struct PencilMinimum {
  int rank = 0;
  std::vector<Coeff> combination;
};

/// Exhaustive projective enumeration over F_p (odometer order, first nonzero
/// coordinate 1). Throws ResourceError past `cap` points.
PencilMinimum min_pencil_rank_enumerate(std::span<const DenseMatrix> grams, std::size_t cap = 1000000);

/// Smallest k such that the (k+1)-minors of the generic pencil vanish at a
/// nonzero point: over QQ, a point over the algebraic closure; over F_p the
/// homogeneous field equations restrict to F_p-rational points.
int min_pencil_rank_symbolic(std::span<const DenseMatrix> grams);

/// First integer combination (by height, then odometer order) whose pencil
/// matrix has rank <= max_rank, searching heights 1..max_height.
std::optional<std::vector<Coeff>> find_low_rank_combination(std::span<const DenseMatrix> grams, int max_rank,
                                                            int max_height = 6);

}  // namespace salab
