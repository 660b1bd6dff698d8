#include "salab/field.hpp"

#include <cctype>

#include "salab/errors.hpp"

namespace salab {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p == 2) throw DomainError("characteristic 2 is not supported");
  if (!is_prime(p) || p > (std::uint64_t{1} << 31)) {
    throw DomainError("F" + std::to_string(p) + " is not a supported prime field");
  }
  FieldSpec f;
  f.kind_ = Kind::prime;
  f.p_ = p;
  return f;
}

FieldSpec FieldSpec::parse(const std::string& name) {
  if (name == "QQ") return rationals();
  if (name.size() >= 2 && (name[0] == 'F' || name[0] == 'f')) {
    std::uint64_t p = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(name[i]))) {
        throw DomainError("bad field name '" + name + "'");
      }
      p = p * 10 + static_cast<std::uint64_t>(name[i] - '0');
      if (p > (std::uint64_t{1} << 40)) throw DomainError("prime too large");
    }
    return prime(p);
  }
  throw DomainError("bad field name '" + name + "' (expected QQ or F<p>)");
}

std::string FieldSpec::name() const {
  return is_rationals() ? std::string("QQ") : "F" + std::to_string(p_);
}

namespace {

std::uint64_t residue(const mpz_class& z, std::uint64_t p) {
  return mpz_fdiv_ui(z.get_mpz_t(), p);
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  // Extended Euclid on signed 64-bit values; p < 2^31 so no overflow.
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

Coeff from_u64(std::uint64_t v) { return Coeff(static_cast<unsigned long>(v)); }

}  // namespace

Coeff FieldSpec::normalize(const mpq_class& v) const {
  if (is_rationals()) {
    Coeff c(v);
    c.canonicalize();
    return c;
  }
  const std::uint64_t den = residue(v.get_den(), p_);
  if (den == 0) throw DomainError("denominator divisible by the characteristic");
  const std::uint64_t num = residue(v.get_num(), p_);
  return from_u64(num * inverse_mod(den, p_) % p_);
}

Coeff FieldSpec::add(const Coeff& a, const Coeff& b) const {
  if (is_rationals()) return a + b;
  std::uint64_t s = a.get_num().get_ui() + b.get_num().get_ui();
  if (s >= p_) s -= p_;
  return from_u64(s);
}

Coeff FieldSpec::sub(const Coeff& a, const Coeff& b) const {
  if (is_rationals()) return a - b;
  const std::uint64_t x = a.get_num().get_ui();
  const std::uint64_t y = b.get_num().get_ui();
  return from_u64(x >= y ? x - y : x + p_ - y);
}

Coeff FieldSpec::mul(const Coeff& a, const Coeff& b) const {
  if (is_rationals()) return a * b;
  return from_u64(a.get_num().get_ui() * b.get_num().get_ui() % p_);
}

Coeff FieldSpec::neg(const Coeff& a) const {
  if (is_rationals()) return -a;
  const std::uint64_t x = a.get_num().get_ui();
  return from_u64(x == 0 ? 0 : p_ - x);
}

Coeff FieldSpec::inv(const Coeff& a) const {
  if (sgn(a) == 0) throw DomainError("division by zero");
  if (is_rationals()) return 1 / a;
  return from_u64(inverse_mod(a.get_num().get_ui(), p_));
}

std::string to_string(const Coeff& c) { return c.get_str(); }

}  // namespace salab
