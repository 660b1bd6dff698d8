#pragma once

#include <memory>
#include <string>
#include <vector>

#include "salab/field.hpp"
#include "salab/monomial.hpp"

namespace salab {

/// Polynomial ring k[x1..xn] with an optional positive grading by variable
/// weights (all 1 unless stated otherwise).
class RingContext {
 public:
  /// Throws DomainError on duplicate or empty names or non-positive weights.
  static std::shared_ptr<const RingContext> make(FieldSpec field, std::vector<std::string> names,
                                                 std::vector<int> weights = {});
  /// Ring with variables prefix1..prefixN.
  static std::shared_ptr<const RingContext> make_indexed(FieldSpec field, std::size_t n,
                                                         const std::string& prefix = "x",
                                                         std::vector<int> weights = {});

  const FieldSpec& field() const { return field_; }
  std::size_t num_vars() const { return names_.size(); }
  const std::vector<std::string>& var_names() const { return names_; }
  /// Empty when the grading is standard.
  const std::vector<int>& weights() const { return weights_; }
  bool standard_grading() const { return weights_.empty(); }
  int weight(std::size_t i) const { return weights_.empty() ? 1 : weights_[i]; }

  /// Degree of a monomial in this ring's grading.
  int degree(const Monomial& m) const;

  friend bool operator==(const RingContext& a, const RingContext& b) {
    return a.field_ == b.field_ && a.names_ == b.names_ && a.weights_ == b.weights_;
  }

 private:
  RingContext() = default;

  FieldSpec field_;
  std::vector<std::string> names_;
  std::vector<int> weights_;
};

using Ring = std::shared_ptr<const RingContext>;

bool same_ring(const Ring& a, const Ring& b);

}  // namespace salab
