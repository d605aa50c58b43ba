#include "sternpoly/series.hpp"

#include <algorithm>
#include <array>

#include "sternpoly/error.hpp"

namespace sternpoly {

namespace {
using Dense = std::vector<BigInt>;

Dense to_dense(const SparsePoly& p, std::size_t order) {
  Dense out(order, 0);
  for (const auto& term : p.terms()) {
    if (term.exp >= order) break;
    out[term.exp.get_ui()] = term.coeff;
  }
  return out;
}

// s(z^m) mod z^order.
Dense substitute(const Dense& s, const BigInt& m, std::size_t order) {
  Dense out(order, 0);
  if (m >= order) {
    out[0] = s[0];
    return out;
  }
  const std::size_t step = m.get_ui();
  for (std::size_t i = 0; i * step < order; ++i) out[i * step] = s[i];
  return out;
}

Dense multiply(const SparsePoly& p, const Dense& s, std::size_t order) {
  Dense out(order, 0);
  for (const auto& term : p.terms()) {
    if (term.exp >= order) break;
    const std::size_t shift = term.exp.get_ui();
    for (std::size_t i = 0; i + shift < order; ++i)
      if (s[i] != 0) out[i + shift] += term.coeff * s[i];
  }
  return out;
}

Dense subtract(const Dense& a, const Dense& b) {
  Dense out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Dense add(const Dense& a, const Dense& b) {
  Dense out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

std::string first_mismatch(const Dense& a, const Dense& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i])
      return "sides differ at z^" + std::to_string(i) + ": " + to_decimal(a[i]) + " vs " + to_decimal(b[i]);
  return {};
}

Json with(const Params& params, const char* key, std::size_t value) {
  Json j = params.to_json();
  j[key] = value;
  return j;
}

void require_order(std::size_t order) { require(order >= 1, ErrorKind::InvalidParameter, "order must be >= 1"); }
}  // namespace

std::string TruncatedSeries::bitstring() const {
  std::string out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) {
    require(c == 0 || c == 1, ErrorKind::InternalInvariant, "coefficient outside {0,1}: " + to_decimal(c));
    out.push_back(c == 0 ? '0' : '1');
  }
  return out;
}

std::optional<RationalInterval> divide(const RationalInterval& num, const RationalInterval& den) {
  if (!den.excludes_zero()) return std::nullopt;
  const std::array<Rational, 4> q{num.lo / den.lo, num.lo / den.hi, num.hi / den.lo, num.hi / den.hi};
  auto [lo, hi] = std::minmax_element(q.begin(), q.end());
  return RationalInterval{*lo, *hi};
}

TruncatedSeries h_series(const Params& params, std::size_t order, int iteration_cap) {
  require_order(order);
  const long t = static_cast<long>(params.t());
  const BigInt bound(static_cast<unsigned long>(order));
  // alpha_1 = 1 and alpha_2 = 2^k - 1 coincide as polynomials when k = 1,
  // so comparisons start from the pair (alpha_2, alpha_3).
  Dense previous = to_dense(stern_poly(t, alpha(static_cast<long>(params.k()), 2).value, bound), order);
  for (long n = 3; n <= iteration_cap; ++n) {
    Dense current = to_dense(stern_poly(t, alpha(static_cast<long>(params.k()), n).value, bound), order);
    if (current == previous) return {params, order, std::move(current)};
    previous = std::move(current);
  }
  fail(ErrorKind::NonConvergence, "H_k truncation to order " + std::to_string(order) + " not stable after " +
                                      std::to_string(iteration_cap) + " iterations");
}

std::optional<BigInt> agreement_degree(const Params& params, long n) {
  require(n >= 1, ErrorKind::InvalidParameter, "n must be >= 1");
  const long t = static_cast<long>(params.t());
  const long k = static_cast<long>(params.k());
  const BigInt diff = first_difference(stern_poly(t, alpha(k, n).value), stern_poly(t, alpha(k, n + 1).value));
  if (diff < 0) return std::nullopt;
  return diff;
}

CheckReport verify_agreement_growth(const Params& params, long n_lo, long n_hi) {
  require(n_lo >= 1 && n_hi > n_lo, ErrorKind::InvalidParameter, "need 1 <= n_lo < n_hi");
  CheckReport report("series.agreement", params.to_json());
  std::optional<BigInt> previous = agreement_degree(params, n_lo);
  for (long n = n_lo + 1; n <= n_hi; ++n) {
    std::optional<BigInt> current = agreement_degree(params, n);
    Json p = params.to_json();
    p["n"] = n;
    // An identical pair means agreement to every order; growth past it is impossible.
    const bool ok = previous && (!current || *current > *previous);
    std::string detail;
    if (!ok)
      detail = "agreement(" + std::to_string(n - 1) + ")=" + (previous ? to_decimal(*previous) : "inf") +
               ", agreement(" + std::to_string(n) + ")=" + (current ? to_decimal(*current) : "inf");
    else
      detail = "agreement=" + (current ? to_decimal(*current) : std::string("inf"));
    report.add("agreement_strictly_increasing", std::move(p), ok, std::move(detail));
    previous = std::move(current);
  }
  return report;
}

CheckReport verify_functional_equation(const Params& params, std::size_t order) {
  require_order(order);
  const TruncatedSeries h = h_series(params, order);
  const BigInt tk = params.block();
  CheckReport report("series.functional_equation", with(params, "order", order));

  const bool binary =
      std::all_of(h.coeffs.begin(), h.coeffs.end(), [](const BigInt& c) { return c == 0 || c == 1; });
  report.add("coefficients_in_0_1", with(params, "order", order), binary, binary ? "" : "non-binary coefficient");
  report.add("constant_term_one", with(params, "order", order), h.coeffs[0] == 1,
             h.coeffs[0] == 1 ? "" : "constant term " + to_decimal(h.coeffs[0]));

  const Dense rhs =
      add(multiply(closed_form_2k_minus_1(params), substitute(h.coeffs, tk, order), order),
          multiply(compose_power(closed_form_2k(params), tk), substitute(h.coeffs, tk * tk, order), order));
  const std::string mismatch = first_mismatch(h.coeffs, rhs);
  report.add("functional_equation", with(params, "order", order), mismatch.empty(), mismatch);
  return report;
}

CheckReport verify_mat_system(const Params& params, std::size_t order) {
  require_order(order);
  const TruncatedSeries h = h_series(params, order);
  const BigInt tk = params.block();
  const BigInt d1 = closed_form_2k(params).degree() * tk;
  CheckReport report("series.mat_system", with(params, "order", order));

  const Dense& f1 = h.coeffs;
  const Dense f2 = substitute(f1, tk, order);

  // Row 1: f1(z^(t^k)) = f2(z).
  const std::string row1 = first_mismatch(substitute(f1, tk, order), f2);
  report.add("mat_row1", with(params, "order", order), row1.empty(), row1);

  // Row 2: z^(d_1) f2(z^(t^k)) = f1(z) - a_t(2^k-1; z) f2(z).
  const Dense remainder = subtract(f1, multiply(closed_form_2k_minus_1(params), f2, order));
  const Dense lhs = multiply(SparsePoly::monomial(d1), substitute(f2, tk, order), order);
  const std::string row2 = first_mismatch(lhs, remainder);
  report.add("mat_row2", with(params, "order", order), row2.empty(), row2);

  // The remainder must vanish below z^(d_1) for the division by a_t(2^k; z^(t^k)) to be exact.
  std::string low;
  for (std::size_t i = 0; i < order && i < d1; ++i)
    if (remainder[i] != 0) {
      low = "nonzero coefficient at z^" + std::to_string(i) + " below d_1=" + to_decimal(d1);
      break;
    }
  report.add("mat_row2_divisible_by_z^d1", with(params, "order", order), low.empty(), low);
  return report;
}

RationalInterval enclose(const TruncatedSeries& series, const Rational& alpha) {
  require(sgn(alpha) != 0 && abs(alpha) < 1, ErrorKind::AlphaOutOfRange,
          "alpha must satisfy 0 < |alpha| < 1, got " + to_fraction_string(alpha));
  Rational sum = 0;
  Rational power = 1;
  for (const auto& c : series.coeffs) {
    if (c != 0) sum += Rational(c) * power;
    power *= alpha;
  }
  const Rational magnitude = abs(alpha);
  Rational tail = abs(power) / (1 - magnitude);
  tail.canonicalize();
  sum.canonicalize();
  if (sgn(alpha) > 0) return {sum, sum + tail};
  return {sum - tail, sum + tail};
}

RationalInterval eval_series_certified(const Params& params, const Rational& alpha, std::size_t order) {
  require_order(order);
  require(sgn(alpha) != 0 && abs(alpha) < 1, ErrorKind::AlphaOutOfRange,
          "alpha must satisfy 0 < |alpha| < 1, got " + to_fraction_string(alpha));
  return enclose(h_series(params, order), alpha);
}

}  // namespace sternpoly
