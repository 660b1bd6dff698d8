#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace salab {

/// Exponent vector with cached total degree.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t num_vars) : exps_(num_vars, 0) {}
  explicit Monomial(std::vector<int> exponents);

  static Monomial variable(std::size_t num_vars, std::size_t index, int power = 1);

  std::size_t size() const { return exps_.size(); }
  int degree() const { return degree_; }
  int operator[](std::size_t i) const { return exps_[i]; }
  std::span<const int> exponents() const { return exps_; }
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const;
  /// Indices of variables with positive exponent.
  std::vector<std::size_t> support() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  /// Requires b.divides(a).
  friend Monomial quotient(const Monomial& a, const Monomial& b);
  friend bool coprime(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

 private:
  std::vector<int> exps_;
  int degree_ = 0;
};

enum class MonomialOrder { grevlex, lex, grlex };

/// Three-way comparison under `ord`, with x1 > x2 > ... > xn.
int compare(const Monomial& a, const Monomial& b, MonomialOrder ord);

std::string to_string(MonomialOrder ord);
/// Throws DomainError on an unknown name.
MonomialOrder parse_order(const std::string& name);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// All monomials in `num_vars` variables of weighted degree `degree`, in
/// descending lex order. Empty `weights` means standard grading.
std::vector<Monomial> monomials_of_degree(std::size_t num_vars, int degree,
                                          std::span<const int> weights = {});

}  // namespace salab
