#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sternpoly/bigint.hpp"

namespace sternpoly {

/// Maximum number of stored terms in any SparsePoly result. Default 10^6.
std::size_t term_cap() noexcept;
void set_term_cap(std::size_t cap) noexcept;

struct Term {
  BigInt exp;
  BigInt coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Integer polynomial in z stored as (exponent, coefficient) pairs with
/// strictly increasing exponents and no zero coefficients. Exponents are
/// unbounded integers, so z^(t^(nk)) substitutions never overflow.
class SparsePoly {
 public:
  SparsePoly() = default;
  /// The constant polynomial c.
  explicit SparsePoly(const BigInt& c);

  static SparsePoly constant(const BigInt& c);
  static SparsePoly monomial(const BigInt& exp, const BigInt& coeff = 1);
  /// Sorts, merges equal exponents and drops zero coefficients.
  static SparsePoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }

  /// Throws InvalidParameter for the zero polynomial.
  const BigInt& degree() const;
  BigInt coefficient(const BigInt& exp) const;
  BigInt constant_term() const;
  BigInt value_at_one() const;
  Rational evaluate(const Rational& x) const;

  /// Drops every term with exponent >= order.
  SparsePoly truncated(const BigInt& order) const;
  /// Multiplies by coeff * z^by.
  SparsePoly scaled(const BigInt& by, const BigInt& coeff = 1) const;

  SparsePoly operator-() const;
  friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly multiply_sub(const SparsePoly& a, const SparsePoly& b, const SparsePoly& c, const SparsePoly& d);
  friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

 private:
  explicit SparsePoly(std::vector<Term> normalized);
  void enforce_cap() const;

  std::vector<Term> terms_;
};

/// p(z^m); m >= 1.
/// a*b - c*d; neither product is formed on its own, so only the result is held to the term cap.
SparsePoly multiply_sub(const SparsePoly& a, const SparsePoly& b, const SparsePoly& c, const SparsePoly& d);

SparsePoly compose_power(const SparsePoly& p, const BigInt& m);

/// Smallest exponent at which a and b differ, or -1 if they are equal.
BigInt first_difference(const SparsePoly& a, const SparsePoly& b);

/// "1 + z^2 - 3*z^5", ascending exponents, "0" for the zero polynomial.
std::string to_text(const SparsePoly& p);

}  // namespace sternpoly
