#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sternpoly/bigint.hpp"
#include "sternpoly/report.hpp"
#include "sternpoly/stern.hpp"

namespace sternpoly {

/// Coefficients of z^0 .. z^(order-1) of a formal power series.
struct TruncatedSeries {
  Params params;
  std::size_t order;
  std::vector<BigInt> coeffs;

  /// "1010..." when every coefficient is 0 or 1; throws InternalInvariant otherwise.
  std::string bitstring() const;
};

/// Certified enclosure [lo, hi] of a real number.
struct RationalInterval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains(const RationalInterval& other) const { return lo <= other.lo && other.hi <= hi; }
  bool excludes_zero() const { return sgn(lo) > 0 || sgn(hi) < 0; }
};

/// Quotient of two enclosures; nullopt when the divisor contains zero.
std::optional<RationalInterval> divide(const RationalInterval& num, const RationalInterval& den);

inline constexpr int kDefaultIterationCap = 64;

/// H_k(z) mod z^order as the stable prefix of a_t(alpha_n; z), n >= 2.
TruncatedSeries h_series(const Params& params, std::size_t order, int iteration_cap = kDefaultIterationCap);

/// Smallest exponent where a_t(alpha_n; z) and a_t(alpha_{n+1}; z) differ;
/// nullopt when the two polynomials are identical (k = 1, n = 1).
std::optional<BigInt> agreement_degree(const Params& params, long n);

/// Strict growth of agreement_degree over n_lo..n_hi.
CheckReport verify_agreement_growth(const Params& params, long n_lo, long n_hi);

/// H_k(z) = a_t(2^k-1; z) H_k(z^(t^k)) + a_t(2^k; z^(t^k)) H_k(z^(t^2k)) mod z^order,
/// together with the 0/1 coefficient shape of the truncation.
CheckReport verify_functional_equation(const Params& params, std::size_t order);

/// Both rows of the Mahler system for f1 = H_k(z), f2 = H_k(z^(t^k)), cleared of
/// the z^(d_1) denominator.
CheckReport verify_mat_system(const Params& params, std::size_t order);

/// Partial sum of the first `order` coefficients at alpha plus the geometric
/// tail bound |alpha|^order / (1 - |alpha|), valid because every coefficient lies in {0, 1}.
RationalInterval eval_series_certified(const Params& params, const Rational& alpha, std::size_t order);

/// Same enclosure from an already computed truncation.
RationalInterval enclose(const TruncatedSeries& series, const Rational& alpha);

}  // namespace sternpoly
