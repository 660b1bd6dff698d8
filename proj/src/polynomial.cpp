#include "salab/polynomial.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "salab/errors.hpp"

namespace salab {

namespace {

bool grevlex_greater(const Term& a, const Term& b) {
  return compare(a.mono, b.mono, MonomialOrder::grevlex) > 0;
}

// Sorts descending and merges equal monomials. Coefficients must already be
// field-normalized.
std::vector<Term> canonicalize(const FieldSpec& field, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), grevlex_greater);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = field.add(out.back().coeff, t.coeff);
    } else {
      if (!out.empty() && sgn(out.back().coeff) == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && sgn(out.back().coeff) == 0) out.pop_back();
  return out;
}

std::vector<Term> merge(const FieldSpec& field, std::span<const Term> a, std::span<const Term> b,
                        bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c;
    if (i == a.size()) {
      c = -1;
    } else if (j == b.size()) {
      c = 1;
    } else {
      c = compare(a[i].mono, b[j].mono, MonomialOrder::grevlex);
    }
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({subtract ? field.neg(b[j].coeff) : b[j].coeff, b[j].mono});
      ++j;
    } else {
      Coeff s = subtract ? field.sub(a[i].coeff, b[j].coeff) : field.add(a[i].coeff, b[j].coeff);
      if (sgn(s) != 0) out.push_back({std::move(s), a[i].mono});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

class PolynomialBuilder {
 public:
  static Polynomial wrap(Ring ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    return p;
  }
};

void require_same_ring(const Ring& a, const Ring& b, const char* what) {
  if (!same_ring(a, b)) throw DomainError(std::string("ring mismatch in ") + what);
}

Polynomial Polynomial::from_terms(Ring ring, std::vector<Term> terms) {
  const FieldSpec& field = ring->field();
  for (auto& t : terms) {
    if (t.mono.size() != ring->num_vars()) throw DomainError("monomial has wrong number of variables");
    t.coeff = field.normalize(t.coeff);
  }
  auto canon = canonicalize(field, std::move(terms));
  return PolynomialBuilder::wrap(std::move(ring), std::move(canon));
}

Polynomial Polynomial::constant(Ring ring, const Coeff& c) {
  const std::size_t n = ring->num_vars();
  return monomial(std::move(ring), c, Monomial(n));
}

Polynomial Polynomial::variable(Ring ring, std::size_t index) {
  if (index >= ring->num_vars()) throw DomainError("variable index out of range");
  const std::size_t n = ring->num_vars();
  return monomial(std::move(ring), Coeff(1), Monomial::variable(n, index));
}

Polynomial Polynomial::monomial(Ring ring, const Coeff& c, Monomial m) {
  std::vector<Term> t;
  t.push_back({c, std::move(m)});
  return from_terms(std::move(ring), std::move(t));
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

std::optional<int> Polynomial::degree() const {
  if (terms_.empty()) return std::nullopt;
  int d = ring_->degree(terms_[0].mono);
  for (const auto& t : terms_) d = std::max(d, ring_->degree(t.mono));
  return d;
}

Coeff Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_) {
    if (t.mono == m) return t.coeff;
  }
  return Coeff(0);
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({field().neg(t.coeff), t.mono});
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& g) {
  require_same_ring(ring_, g.ring_, "add");
  terms_ = merge(field(), terms_, g.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& g) {
  require_same_ring(ring_, g.ring_, "sub");
  terms_ = merge(field(), terms_, g.terms_, true);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& g) { return *this = *this * g; }

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f.ring_, g.ring_, "mul");
  const FieldSpec& field = f.field();
  if (f.is_zero() || g.is_zero()) return Polynomial(f.ring_);
  if (f.size() == 1) return g.times_monomial(f.terms_[0].coeff, f.terms_[0].mono);
  if (g.size() == 1) return f.times_monomial(g.terms_[0].coeff, g.terms_[0].mono);
  std::vector<Term> prod;
  prod.reserve(f.size() * g.size());
  for (const auto& a : f.terms_) {
    for (const auto& b : g.terms_) prod.push_back({field.mul(a.coeff, b.coeff), a.mono * b.mono});
  }
  return PolynomialBuilder::wrap(f.ring_, canonicalize(field, std::move(prod)));
}

bool operator==(const Polynomial& f, const Polynomial& g) {
  if (!same_ring(f.ring_, g.ring_)) return false;
  if (f.terms_.size() != g.terms_.size()) return false;
  for (std::size_t i = 0; i < f.terms_.size(); ++i) {
    if (f.terms_[i].coeff != g.terms_[i].coeff || !(f.terms_[i].mono == g.terms_[i].mono)) return false;
  }
  return true;
}

Polynomial Polynomial::scaled(const Coeff& c) const {
  const Coeff cc = field().normalize(c);
  Polynomial r(ring_);
  if (sgn(cc) == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({field().mul(t.coeff, cc), t.mono});
  return r;
}

Polynomial Polynomial::times_monomial(const Coeff& c, const Monomial& m) const {
  // Multiplication by a monomial preserves any monomial order.
  const Coeff cc = field().normalize(c);
  Polynomial r(ring_);
  if (sgn(cc) == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({field().mul(t.coeff, cc), t.mono * m});
  return r;
}

Homogeneity is_homogeneous(const Polynomial& f) {
  Homogeneity h;
  if (f.is_zero()) return h;
  const int d = f.ring()->degree(f.terms()[0].mono);
  h.degree = d;
  for (const auto& t : f.terms()) {
    if (f.ring()->degree(t.mono) != d) {
      h.homogeneous = false;
      h.degree.reset();
      return h;
    }
  }
  return h;
}

Polynomial pow(const Polynomial& f, unsigned k) {
  Polynomial result = Polynomial::constant(f.ring(), Coeff(1));
  Polynomial base = f;
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return result;
}

Polynomial substitute(const Polynomial& F, std::span<const Polynomial> gs, const Ring& target) {
  if (gs.size() != F.ring()->num_vars()) throw DomainError("substitute: arity mismatch");
  for (const auto& g : gs) require_same_ring(g.ring(), target, "substitute");
  if (!(F.field() == target->field())) throw DomainError("substitute: field mismatch");
  // Powers cache per variable.
  std::vector<std::vector<Polynomial>> powers(gs.size());
  auto power_of = [&](std::size_t var, int e) -> const Polynomial& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, Coeff(1)));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * gs[var]);
    return cache[static_cast<std::size_t>(e)];
  };
  Polynomial acc(target);
  for (const auto& t : F.terms()) {
    Polynomial prod = Polynomial::constant(target, t.coeff);
    for (std::size_t v = 0; v < gs.size() && !prod.is_zero(); ++v) {
      if (t.mono[v] > 0) prod *= power_of(v, t.mono[v]);
    }
    acc += prod;
  }
  return acc;
}

Polynomial substitute(const Polynomial& F, std::span<const Polynomial> gs) {
  if (gs.empty()) throw DomainError("substitute: empty substitution needs a target ring");
  return substitute(F, gs, gs[0].ring());
}

Polynomial partial_derivative(const Polynomial& f, std::size_t var) {
  if (var >= f.ring()->num_vars()) throw DomainError("partial_derivative: index out of range");
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    const int e = t.mono[var];
    if (e == 0) continue;
    std::vector<int> exps(t.mono.exponents().begin(), t.mono.exponents().end());
    exps[var] -= 1;
    out.push_back({t.coeff * e, Monomial(std::move(exps))});
  }
  return Polynomial::from_terms(f.ring(), std::move(out));
}

Term leading_term(const Polynomial& f, MonomialOrder ord) {
  if (f.is_zero()) throw DomainError("leading_term of the zero polynomial");
  if (ord == MonomialOrder::grevlex) return f.terms()[0];
  const Term* best = &f.terms()[0];
  for (const auto& t : f.terms()) {
    if (compare(t.mono, best->mono, ord) > 0) best = &t;
  }
  return *best;
}

Polynomial change_ring(const Polynomial& f, const Ring& target) {
  if (target->num_vars() != f.ring()->num_vars()) throw DomainError("change_ring: variable count mismatch");
  std::vector<Term> terms(f.terms().begin(), f.terms().end());
  return Polynomial::from_terms(target, std::move(terms));
}

Polynomial determinant(const std::vector<std::vector<Polynomial>>& m, const Ring& ring) {
  const std::size_t k = m.size();
  if (k == 0) return Polynomial::constant(ring, Coeff(1));
  if (k > 20) throw ResourceError("determinant: matrix too large for subset expansion");
  std::vector<std::optional<Polynomial>> dp(std::size_t{1} << k);
  dp[0] = Polynomial::constant(ring, Coeff(1));
  for (std::size_t mask = 0; mask < dp.size(); ++mask) {
    if (!dp[mask] || dp[mask]->is_zero()) continue;
    const auto row = static_cast<std::size_t>(std::popcount(mask));
    if (row >= k) continue;
    for (std::size_t c = 0; c < k; ++c) {
      if (mask & (std::size_t{1} << c)) continue;
      const Polynomial& a = m[row][c];
      if (a.is_zero()) continue;
      const int above = std::popcount(mask >> (c + 1));
      Polynomial term = *dp[mask] * a;
      if (above % 2 == 1) term = -term;
      auto& slot = dp[mask | (std::size_t{1} << c)];
      if (slot) {
        *slot += term;
      } else {
        slot = std::move(term);
      }
    }
  }
  const auto& full = dp.back();
  return full ? *full : Polynomial(ring);
}

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  const auto& names = f.ring()->var_names();
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    Coeff c = t.coeff;
    const bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (t.mono[i] > 1) mono += "^" + std::to_string(t.mono[i]);
    }
    if (mono.empty()) {
      out += c.get_str();
    } else if (c == 1) {
      out += mono;
    } else {
      out += c.get_str() + "*" + mono;
    }
  }
  return out;
}

}  // namespace salab
