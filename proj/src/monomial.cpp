#include "salab/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "salab/errors.hpp"

namespace salab {

Monomial::Monomial(std::vector<int> exponents)
    : exps_(std::move(exponents)), degree_(std::accumulate(exps_.begin(), exps_.end(), 0)) {}

Monomial Monomial::variable(std::size_t num_vars, std::size_t index, int power) {
  Monomial m(num_vars);
  m.exps_[index] = power;
  m.degree_ = power;
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > 0) out.push_back(i);
  }
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m.exps_[i] = a.exps_[i] + b.exps_[i];
  m.degree_ = a.degree_ + b.degree_;
  return m;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m(a.size());
  int d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    m.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    d += m.exps_[i];
  }
  m.degree_ = d;
  return m;
}

Monomial quotient(const Monomial& a, const Monomial& b) {
  Monomial m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m.exps_[i] = a.exps_[i] - b.exps_[i];
  m.degree_ = a.degree_ - b.degree_;
  return m;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.exps_[i] > 0 && b.exps_[i] > 0) return false;
  }
  return true;
}

int compare(const Monomial& a, const Monomial& b, MonomialOrder ord) {
  const auto ea = a.exponents();
  const auto eb = b.exponents();
  if (ord != MonomialOrder::lex && a.degree() != b.degree()) {
    return a.degree() > b.degree() ? 1 : -1;
  }
  if (ord == MonomialOrder::grevlex) {
    // Smaller exponent in the last differing variable wins.
    for (std::size_t i = ea.size(); i-- > 0;) {
      if (ea[i] != eb[i]) return ea[i] < eb[i] ? 1 : -1;
    }
    return 0;
  }
  for (std::size_t i = 0; i < ea.size(); ++i) {
    if (ea[i] != eb[i]) return ea[i] > eb[i] ? 1 : -1;
  }
  return 0;
}

std::string to_string(MonomialOrder ord) {
  switch (ord) {
    case MonomialOrder::grevlex: return "grevlex";
    case MonomialOrder::lex: return "lex";
    case MonomialOrder::grlex: return "grlex";
  }
  return "?";
}

MonomialOrder parse_order(const std::string& name) {
  if (name == "grevlex") return MonomialOrder::grevlex;
  if (name == "lex") return MonomialOrder::lex;
  if (name == "grlex") return MonomialOrder::grlex;
  throw DomainError("unknown monomial order '" + name + "'");
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int e : m.exponents()) {
    h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

namespace {

void fill_monomials(std::size_t var, int remaining, std::span<const int> weights,
                    std::vector<int>& exps, std::vector<Monomial>& out) {
  const std::size_t n = exps.size();
  if (var + 1 == n) {
    const int w = weights.empty() ? 1 : weights[var];
    if (remaining % w == 0) {
      exps[var] = remaining / w;
      out.emplace_back(exps);
    }
    exps[var] = 0;
    return;
  }
  const int w = weights.empty() ? 1 : weights[var];
  for (int e = remaining / w; e >= 0; --e) {
    exps[var] = e;
    fill_monomials(var + 1, remaining - e * w, weights, exps, out);
  }
  exps[var] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t num_vars, int degree,
                                          std::span<const int> weights) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  if (num_vars == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  std::vector<int> exps(num_vars, 0);
  fill_monomials(0, degree, weights, exps, out);
  return out;
}

}  // namespace salab
