#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "salab/groebner.hpp"

namespace salab {

/// Matrix of polynomials with a grading: entry (i, j) is zero or homogeneous
/// of degree col_degrees[j] - row_degrees[i].
class GradedMatrix {
 public:
  GradedMatrix(Ring ring, std::vector<int> row_degrees, std::vector<int> col_degrees);

  const Ring& ring() const { return ring_; }
  std::size_t rows() const { return row_degrees_.size(); }
  std::size_t cols() const { return col_degrees_.size(); }
  const std::vector<int>& row_degrees() const { return row_degrees_; }
  const std::vector<int>& col_degrees() const { return col_degrees_; }

  const Polynomial& operator()(std::size_t r, std::size_t c) const { return entries_[r][c]; }
  Polynomial& operator()(std::size_t r, std::size_t c) { return entries_[r][c]; }

  /// Throws DomainError when an entry violates the grading.
  void validate() const;
  bool is_zero() const;

  void remove_row(std::size_t r);
  void remove_col(std::size_t c);

  friend GradedMatrix operator*(const GradedMatrix& a, const GradedMatrix& b);
  friend bool operator==(const GradedMatrix& a, const GradedMatrix& b);

 private:
  Ring ring_;
  std::vector<int> row_degrees_;
  std::vector<int> col_degrees_;
  std::vector<std::vector<Polynomial>> entries_;
};

/// Chain S^{b0} <- S^{b1} <- ... ; maps[k] is the map F_{k+1} -> F_k.
struct FreeResolution {
  Ring ring;
  std::vector<GradedMatrix> maps;

  /// Ranks b0, b1, ..., b_len.
  std::vector<std::size_t> ranks() const;
  std::size_t length() const { return maps.size(); }
};

/// Graded Betti numbers: (homological step i, internal degree j) -> count.
struct BettiTable {
  std::map<std::pair<int, int>, int> graded;

  std::vector<int> totals() const;
  int projective_dimension() const;
  friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

struct ResolveOptions {
  MonomialOrder order = MonomialOrder::grevlex;
  /// Maximum rank of any free module in the resolution.
  std::size_t rank_cap = 5000;
};

/// Minimal generators of the kernel of M (as the columns of the result).
GradedMatrix syzygies(const GradedMatrix& m, MonomialOrder ord = MonomialOrder::grevlex);

/// Graded free resolution of S/I on the given generators; later steps use
/// minimal syzygy generators, so only the first map can be non-minimal and the
/// raw length is at most n + 1 (n after minimalize). Throws DomainError for inhomogeneous input
/// or the unit ideal, ResourceError when a rank exceeds the cap.
FreeResolution resolve(const Ideal& ideal, const ResolveOptions& opts = {});

struct MinimalResolution {
  FreeResolution resolution;
  BettiTable betti;
};

/// Cancels unit entries (left to right) until no map has a nonzero constant.
MinimalResolution minimalize(FreeResolution res);

BettiTable betti_table(const FreeResolution& res);

int projective_dimension(const Ideal& ideal, MonomialOrder ord = MonomialOrder::grevlex);

/// Every consecutive composition is exactly zero.
bool compositions_vanish(const FreeResolution& res);
/// Compositions vanish, each kernel lies in the next image, and the last map
/// is injective.
bool verify_exactness(const FreeResolution& res);

/// True iff the first Koszul homology of fs vanishes: every syzygy of fs lies
/// in the module of trivial syzygies f_j e_i - f_i e_j. Throws DomainError on
/// non-homogeneous or constant input and ResourceError for more than 20 forms.
bool koszul_check(std::span<const Polynomial> fs);

/// The 1 x r matrix [f1 ... fr] with its natural grading.
GradedMatrix generator_row(std::span<const Polynomial> fs, const Ring& ring);

namespace mutation {
/// Test hook: when enabled, syzygies() silently drops its last generator.
void set_syzygy_perturbation(bool enabled);
bool syzygy_perturbation();
}  // namespace mutation

}  // namespace salab
