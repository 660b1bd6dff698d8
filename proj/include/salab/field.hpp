#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace salab {

/// Field elements are stored as GMP rationals. Over a prime field the stored
/// value is always an integer in [0, p).
using Coeff = mpq_class;

/// The coefficient field: exact rationals or Z/p for an odd prime p.
class FieldSpec {
 public:
  enum class Kind { rationals, prime };

  FieldSpec() = default;

  static FieldSpec rationals() { return FieldSpec(); }
  /// Throws DomainError unless p is an odd prime.
  static FieldSpec prime(std::uint64_t p);
  /// Accepts "QQ" or "F<p>".
  static FieldSpec parse(const std::string& name);

  Kind kind() const { return kind_; }
  bool is_rationals() const { return kind_ == Kind::rationals; }
  std::uint64_t characteristic() const { return p_; }
  std::string name() const;

  /// Maps an arbitrary rational into canonical field form.
  Coeff normalize(const mpq_class& v) const;
  Coeff from_int(long v) const { return normalize(mpq_class(v)); }

  Coeff add(const Coeff& a, const Coeff& b) const;
  Coeff sub(const Coeff& a, const Coeff& b) const;
  Coeff mul(const Coeff& a, const Coeff& b) const;
  Coeff neg(const Coeff& a) const;
  /// Throws DomainError on zero.
  Coeff inv(const Coeff& a) const;
  Coeff div(const Coeff& a, const Coeff& b) const { return mul(a, inv(b)); }

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_;
  }

 private:
  Kind kind_ = Kind::rationals;
  std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Coeff& c);

}  // namespace salab
