#include "salab/ring.hpp"

#include <algorithm>
#include <set>

#include "salab/errors.hpp"

namespace salab {

std::shared_ptr<const RingContext> RingContext::make(FieldSpec field, std::vector<std::string> names,
                                                     std::vector<int> weights) {
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw DomainError("empty variable name");
    if (!seen.insert(n).second) throw DomainError("duplicate variable name '" + n + "'");
  }
  if (!weights.empty()) {
    if (weights.size() != names.size()) throw DomainError("weight vector has wrong length");
    if (std::any_of(weights.begin(), weights.end(), [](int w) { return w <= 0; })) {
      throw DomainError("variable weights must be positive");
    }
    if (std::all_of(weights.begin(), weights.end(), [](int w) { return w == 1; })) weights.clear();
  }
  auto ring = std::shared_ptr<RingContext>(new RingContext());
  ring->field_ = field;
  ring->names_ = std::move(names);
  ring->weights_ = std::move(weights);
  return ring;
}

std::shared_ptr<const RingContext> RingContext::make_indexed(FieldSpec field, std::size_t n,
                                                             const std::string& prefix,
                                                             std::vector<int> weights) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i + 1));
  return make(field, std::move(names), std::move(weights));
}

int RingContext::degree(const Monomial& m) const {
  if (weights_.empty()) return m.degree();
  int d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += m[i] * weights_[i];
  return d;
}

bool same_ring(const Ring& a, const Ring& b) { return a == b || (a && b && *a == *b); }

}  // namespace salab
