#pragma once

#include <cstddef>
#include <set>
#include <span>
#include <tuple>
#include <utility>
#include <vector>

#include "salab/polynomial.hpp"

namespace salab {

/// One term c * m * e_comp of a free-module element.
struct VTerm {
  Coeff coeff;
  Monomial mono;
  std::size_t comp = 0;
};

/// Free-module element; terms strictly descending in the active ModuleOrder.
using ModuleVector = std::vector<VTerm>;

/// Term order on a free module. Comparison cascades: elimination block
/// (components below `elim_block` are larger), shifted degree when `shifts`
/// is non-empty, the monomial order, then the lower component index.
struct ModuleOrder {
  MonomialOrder mono = MonomialOrder::grevlex;
  std::vector<int> shifts;
  std::size_t elim_block = 0;

  int compare(const VTerm& a, const VTerm& b, const RingContext& ring) const;
  int degree(const VTerm& t, const RingContext& ring) const;
};

/// Sorts terms into `order`, normalizes and merges duplicates, drops zeros.
ModuleVector normalize_vector(ModuleVector v, const ModuleOrder& order, const RingContext& ring);

/// Embeds a polynomial as a vector supported on component `comp`.
ModuleVector to_vector(const Polynomial& f, std::size_t comp, const ModuleOrder& order);
/// Component `comp` of v as a canonical polynomial.
Polynomial component(const ModuleVector& v, std::size_t comp, const Ring& ring);

/// Incremental Buchberger engine over a free module (rank 1 = ideals).
/// Pairs are processed by the normal strategy: smallest lcm degree first,
/// ties broken by pair index. Buchberger's chain criterion is always on;
/// the product criterion is used only for rank-one input.
class ModuleGroebner {
 public:
  /// `rank_one` enables the product criterion; pass true only when every
  /// element lives in a single component.
  ModuleGroebner(Ring ring, ModuleOrder order, bool rank_one, std::size_t max_basis = 100000);

  const Ring& ring() const { return ring_; }
  const ModuleOrder& order() const { return order_; }

  /// Adds a (normalized) generator; pairs are created but not processed.
  void add_generator(ModuleVector v);
  /// Processes pending pairs until the basis is a Groebner basis.
  void complete();

  /// Full normal form against the current basis; divisors are tried in
  /// insertion order and the leading term is always reduced first.
  ModuleVector reduce(ModuleVector v) const;

  /// Reduced basis (monic, minimal, tail-reduced), sorted ascending by lead.
  std::vector<ModuleVector> reduced_basis() const;
  /// Current (non-reduced) basis elements in insertion order.
  const std::vector<ModuleVector>& raw_basis() const { return basis_; }

  std::size_t s_pairs_reduced() const { return reductions_; }

 private:
  struct PairKey {
    int degree;
    std::size_t i;
    std::size_t j;
    friend bool operator<(const PairKey& a, const PairKey& b) {
      return std::tie(a.degree, a.i, a.j) < std::tie(b.degree, b.i, b.j);
    }
  };

  bool chain_criterion(std::size_t i, std::size_t j, const Monomial& l) const;
  ModuleVector s_vector(std::size_t i, std::size_t j) const;
  void insert(ModuleVector v);
  bool is_pending(std::size_t i, std::size_t j) const;

  Ring ring_;
  ModuleOrder order_;
  std::size_t max_basis_;
  bool rank_one_;
  std::vector<ModuleVector> basis_;
  std::set<PairKey> queue_;
  std::set<std::pair<std::size_t, std::size_t>> pending_;
  std::size_t reductions_ = 0;
};

/// Full normal form of p by `divisors` (tried in list order, leading term
/// reduced first). Divisors need not be monic.
ModuleVector reduce_vector(ModuleVector p, std::span<const ModuleVector> divisors,
                           const ModuleOrder& order, const RingContext& ring);

/// `f - c * m * g` with both vectors sorted in `order`.
ModuleVector sub_multiple(const ModuleVector& f, std::size_t f_start, const Coeff& c,
                          const Monomial& m, const ModuleVector& g, const ModuleOrder& order,
                          const RingContext& ring);

}  // namespace salab
