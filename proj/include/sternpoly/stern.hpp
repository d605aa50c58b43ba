#pragma once

#include <optional>

#include "sternpoly/bigint.hpp"
#include "sternpoly/report.hpp"
#include "sternpoly/sparse_poly.hpp"

namespace sternpoly {

/// Base t >= 2 of the z -> z^t substitution and block length k >= 1.
class Params {
 public:
  Params(long t, long k);

  unsigned long t() const noexcept { return t_; }
  unsigned long k() const noexcept { return k_; }
  /// t^k, the exponent of one block substitution z -> z^(t^k).
  BigInt block() const { return pow(t_, k_); }
  /// t^(nk).
  BigInt level_scale(unsigned long n) const { return pow(t_, n * k_); }

  Json to_json() const;
  friend bool operator==(const Params&, const Params&) = default;

 private:
  unsigned long t_;
  unsigned long k_;
};

struct AlphaIndex {
  unsigned long k;
  unsigned long n;
  BigInt value;
};

/// (2^(kn) - (-1)^n) / (2^k + 1).
AlphaIndex alpha(long k, long n);

/// Type-1 Stern polynomial a_t(n; z). When `order` is given, every
/// intermediate is truncated below z^order and the result is a_t(n; z) mod z^order.
SparsePoly stern_poly(long t, const BigInt& n, const std::optional<BigInt>& order = std::nullopt);

/// Stern's diatomic sequence a(n), from the integer recurrence alone.
BigInt stern_value_at_one(long t, const BigInt& n);

/// a_t(2^k; z) = z^((t^k - 1)/(t - 1)).
SparsePoly closed_form_2k(const Params& params);
/// a_t(2^k - 1; z) = sum_{i=1..k} z^((t^k - t^i)/(t - 1)).
SparsePoly closed_form_2k_minus_1(const Params& params);

/// a_t(alpha_{n+1}; z) = a_t(2^k-1; z) a_t(alpha_n; z^(t^k)) + a_t(2^k; z^(t^k)) a_t(alpha_{n-1}; z^(t^2k))
/// checked exactly for 1 <= n < n_max.
CheckReport verify_three_term(const Params& params, long n_max);

/// Closed forms against the recursive construction, coefficient shape and
/// diatomic term counts.
CheckReport verify_closed_forms(const Params& params);

}  // namespace sternpoly
