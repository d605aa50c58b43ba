#include "sternpoly/stern.hpp"

#include <algorithm>
#include <string>

#include "sternpoly/error.hpp"

namespace sternpoly {

Params::Params(long t, long k) {
  require(t >= 2, ErrorKind::InvalidParameter, "t must be >= 2, got " + std::to_string(t));
  require(k >= 1, ErrorKind::InvalidParameter, "k must be >= 1, got " + std::to_string(k));
  t_ = static_cast<unsigned long>(t);
  k_ = static_cast<unsigned long>(k);
}

Json Params::to_json() const {
  Json j;
  j["t"] = t_;
  j["k"] = k_;
  return j;
}

AlphaIndex alpha(long k, long n) {
  require(k >= 1, ErrorKind::InvalidParameter, "k must be >= 1, got " + std::to_string(k));
  require(n >= 0, ErrorKind::InvalidParameter, "n must be >= 0, got " + std::to_string(n));
  const auto uk = static_cast<unsigned long>(k);
  const auto un = static_cast<unsigned long>(n);
  BigInt numerator = pow(2, uk * un) - (un % 2 == 0 ? 1 : -1);
  BigInt modulus = pow(2, uk) + 1;
  require(mpz_divisible_p(numerator.get_mpz_t(), modulus.get_mpz_t()) != 0, ErrorKind::InternalInvariant,
          "2^(kn) - (-1)^n not divisible by 2^k + 1");
  return {uk, un, numerator / modulus};
}

SparsePoly stern_poly(long t, const BigInt& n, const std::optional<BigInt>& order) {
  require(t >= 2, ErrorKind::InvalidParameter, "t must be >= 2, got " + std::to_string(t));
  require(sgn(n) >= 0, ErrorKind::InvalidParameter, "n must be >= 0");

  // Invariant: a_t(n; z) = c(z) a_t(m; z^s) + e(z) a_t(m + 1; z^s), where m
  // walks the binary expansion of n from the low end and s = t^j.
  auto keep = [&](SparsePoly p) { return order ? p.truncated(*order) : p; };
  auto times_w = [&](const SparsePoly& p, const BigInt& s) {
    if (order && s >= *order) return SparsePoly{};
    return keep(p.scaled(s));
  };

  SparsePoly c = SparsePoly::constant(1);
  SparsePoly e;
  BigInt m = n;
  BigInt s = 1;
  while (m > 0) {
    if (mpz_even_p(m.get_mpz_t())) {
      c = times_w(c, s) + e;
    } else {
      e = c + times_w(e, s);
    }
    m >>= 1;
    s *= static_cast<unsigned long>(t);
  }
  return keep(e);
}

BigInt stern_value_at_one(long t, const BigInt& n) {
  require(t >= 2, ErrorKind::InvalidParameter, "t must be >= 2, got " + std::to_string(t));
  require(sgn(n) >= 0, ErrorKind::InvalidParameter, "n must be >= 0");
  // (a(m), a(m+1)) from the most significant bit down, starting at m = 0.
  BigInt lo = 0, hi = 1;
  for (auto bit = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2)); bit-- > 0;) {
    if (mpz_tstbit(n.get_mpz_t(), static_cast<mp_bitcnt_t>(bit)))
      lo += hi;
    else
      hi += lo;
  }
  return lo;
}

SparsePoly closed_form_2k(const Params& params) {
  const BigInt exp = (params.block() - 1) / (params.t() - 1);
  return SparsePoly::monomial(exp);
}

SparsePoly closed_form_2k_minus_1(const Params& params) {
  std::vector<Term> terms;
  const BigInt tk = params.block();
  for (unsigned long i = 1; i <= params.k(); ++i) terms.push_back({(tk - pow(params.t(), i)) / (params.t() - 1), 1});
  return SparsePoly::from_terms(std::move(terms));
}

namespace {
BigInt alpha_value(const Params& params, unsigned long n) {
  return alpha(static_cast<long>(params.k()), static_cast<long>(n)).value;
}

std::string mismatch_detail(const SparsePoly& lhs, const SparsePoly& rhs) {
  return "sides first differ at z^" + to_decimal(first_difference(lhs, rhs)) + " (lhs " +
         std::to_string(lhs.term_count()) + " terms, rhs " + std::to_string(rhs.term_count()) + " terms)";
}
}  // namespace

CheckReport verify_three_term(const Params& params, long n_max) {
  require(n_max >= 2, ErrorKind::InvalidParameter, "n_max must be >= 2");
  const long t = static_cast<long>(params.t());
  const BigInt tk = params.block();
  const SparsePoly b0 = closed_form_2k_minus_1(params);
  const SparsePoly a1 = compose_power(closed_form_2k(params), tk);

  CheckReport report("stern.three_term", params.to_json());
  for (unsigned long n = 1; n < static_cast<unsigned long>(n_max); ++n) {
    const SparsePoly lhs = stern_poly(t, alpha_value(params, n + 1));
    const SparsePoly rhs = b0 * compose_power(stern_poly(t, alpha_value(params, n)), tk) +
                           a1 * compose_power(stern_poly(t, alpha_value(params, n - 1)), tk * tk);
    Json p = params.to_json();
    p["n"] = n;
    const bool ok = lhs == rhs;
    report.add("three_term_recurrence", std::move(p), ok, ok ? std::string{} : mismatch_detail(lhs, rhs));
  }
  return report;
}

CheckReport verify_closed_forms(const Params& params) {
  const long t = static_cast<long>(params.t());
  const BigInt two_k = pow(2, params.k());
  CheckReport report("stern.closed_forms", params.to_json());

  const SparsePoly top = stern_poly(t, two_k);
  const SparsePoly below = stern_poly(t, two_k - 1);
  const bool top_ok = top == closed_form_2k(params);
  const bool below_ok = below == closed_form_2k_minus_1(params);
  report.add("closed_form_2k", params.to_json(), top_ok, top_ok ? "" : mismatch_detail(top, closed_form_2k(params)));
  report.add("closed_form_2k_minus_1", params.to_json(), below_ok,
             below_ok ? "" : mismatch_detail(below, closed_form_2k_minus_1(params)));

  const bool counts_ok = stern_value_at_one(t, two_k) == 1 && stern_value_at_one(t, two_k - 1) == params.k();
  report.add("values_at_one", params.to_json(), counts_ok,
             counts_ok ? "" : "a(2^k) != 1 or a(2^k - 1) != k");
  return report;
}

}  // namespace sternpoly
