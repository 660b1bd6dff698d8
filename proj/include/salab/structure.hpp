#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "salab/monomial.hpp"
#include "salab/polynomial.hpp"
#include "salab/strength.hpp"

namespace salab {

struct RegularityReport {
  bool regular = false;
  int codimension = 0;
  std::string reason;
};

/// Regularity of a homogeneous tuple via codim (fs) == r. Zero or constant
/// members and r > n give false with a reason; inhomogeneous input throws.
RegularityReport is_regular_sequence(std::span<const Polynomial> fs);

/// Rank of the Jacobian over the fraction field equals r (characteristic 0).
bool jacobian_independent(std::span<const Polynomial> fs);

/// Threshold N: s -> N(s). A table repeats its last entry past its end.
class ThresholdFunction {
 public:
  static ThresholdFunction constant(int value);
  static ThresholdFunction table(std::vector<int> values);
  /// "3" or a comma-separated table "1,2,3".
  static ThresholdFunction parse(const std::string& text);

  int operator()(int s) const;
  /// max N(t) for 1 <= t <= s.
  int max_up_to(int s) const;
  std::string describe() const;

 private:
  std::vector<int> values_;
};

/// f_i = F_i(g_1, ..., g_s). `outers` live in a ring X1..Xs graded by deg g_j.
struct SubalgebraPresentation {
  std::vector<Polynomial> inner;
  std::vector<Polynomial> outers;
  Ring outer_ring;
};

struct Decomposition {
  SubalgebraPresentation presentation;
  Nu nu;               ///< nu(inner) on exit
  int steps = 0;       ///< number of step-(C) rewrites
};

/// Rewrites fs over a tuple of nu-complexity above N(s). Degrees <= 2.
Decomposition decompose_to_high_nu(std::span<const Polynomial> fs, const ThresholdFunction& N);

/// substitute(outers[i], inner) == fs[i] for all i.
bool verify_presentation(std::span<const Polynomial> fs, const SubalgebraPresentation& sp);

/// Bound r * (1 + max_{t <= r + r N(r)} N(t)) on the decomposition length.
int decomposition_length_bound(int r, const ThresholdFunction& N);

struct PdTransfer {
  int pd_over_inner = 0;
  int pd_in_S = 0;
  bool agree = false;
};

/// pd of (F_1..F_r) in the weighted outer ring against pd of (f_1..f_r) in S.
/// Throws DomainError unless the inner tuple is a regular sequence.
PdTransfer pd_transfer(const SubalgebraPresentation& sp, MonomialOrder ord = MonomialOrder::grevlex);

}  // namespace salab
