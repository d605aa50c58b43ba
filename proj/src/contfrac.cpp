#include "sternpoly/contfrac.hpp"

#include <string>

#include "sternpoly/error.hpp"
#include "sternpoly/series.hpp"

namespace sternpoly {

namespace {
Json at_level(const Params& params, const char* key, std::size_t value) {
  Json j = params.to_json();
  j[key] = value;
  return j;
}

std::string approx(const Rational& x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x.get_d());
  return buf;
}
}  // namespace

CFExpansion cf_terms(const Params& params, std::size_t depth) {
  const SparsePoly top = closed_form_2k(params);
  const SparsePoly below = closed_form_2k_minus_1(params);
  CFExpansion out{below, {}};
  out.terms.reserve(depth);
  for (unsigned long n = 1; n <= depth; ++n) {
    const BigInt scale = params.level_scale(n);
    out.terms.push_back({compose_power(top, scale), compose_power(below, scale), n});
  }
  return out;
}

std::vector<ConvergentPair> convergents(const SparsePoly& b0, std::span<const CFTerm> terms) {
  std::vector<SparsePoly> a, b;
  a.reserve(terms.size());
  b.reserve(terms.size());
  for (const auto& term : terms) {
    a.push_back(term.a);
    b.push_back(term.b);
  }
  return convergent_recurrence<SparsePoly>(b0, a, b);
}

CheckReport verify_cf1(const Params& params, long n_max) {
  require(n_max >= 1, ErrorKind::InvalidParameter, "n_max must be >= 1");
  CheckReport report("contfrac.cf1", params.to_json());
  if (n_max < 2) return report;

  const std::size_t depth = static_cast<std::size_t>(n_max - 2);
  const long t = static_cast<long>(params.t());
  const long k = static_cast<long>(params.k());
  const BigInt tk = params.block();
  const CFExpansion cf = cf_terms(params, depth);
  const auto conv = convergents(cf.b0, cf.terms);

  SparsePoly numerator_product(1);
  for (std::size_t m = 0; m <= depth; ++m) {
    const SparsePoly upper = stern_poly(t, alpha(k, static_cast<long>(m) + 2).value);
    const SparsePoly lower = compose_power(stern_poly(t, alpha(k, static_cast<long>(m) + 1).value), tk);
    const auto& [p, q] = conv[m];

    const bool cross = p * lower == q * upper;
    report.add("cf1_cross_multiplied", at_level(params, "m", m), cross,
               cross ? "" : "p_m a(alpha_{m+1}; z^T) != q_m a(alpha_{m+2}; z)");
    const bool strong = p == upper && q == lower;
    report.add("cf1_strong_form", at_level(params, "m", m), strong,
               strong ? "" : (p == upper ? "q_m" : "p_m") + std::string(" differs from the Stern polynomial"));

    if (m == 0) continue;
    numerator_product = numerator_product * cf.terms[m - 1].a;
    const SparsePoly det = p * conv[m - 1].q - conv[m - 1].p * q;
    // The product of the monomials a_1 ... a_m is z^(d_1 + ... + d_m).
    BigInt delta = 0;
    for (unsigned long j = 1; j <= m; ++j) delta += closed_form_2k(params).degree() * params.level_scale(j);
    const SparsePoly expected = SparsePoly::monomial(delta, m % 2 == 1 ? 1 : -1);
    const bool ok = det == expected && numerator_product == SparsePoly::monomial(delta);
    report.add("convergent_determinant", at_level(params, "m", m), ok,
               ok ? "" : "p_m q_{m-1} - p_{m-1} q_m = " + to_text(det));
  }
  return report;
}

DegreeLedger degree_ledger(const Params& params, std::size_t n_max) {
  require(n_max >= 1, ErrorKind::InvalidParameter, "n_max must be >= 1");
  const unsigned long t = params.t();
  const BigInt tk = params.block();
  DegreeLedger ledger;
  BigInt previous_D = 0;
  for (unsigned long n = 1; n <= n_max; ++n) {
    const BigInt scale = params.level_scale(n);
    BigInt d = scale * (tk - 1) / (t - 1);
    BigInt D = d - previous_D;
    BigInt margin = D - scale * (tk - t) / (t - 1);
    require(margin > 0, ErrorKind::InternalInvariant, "nonpositive degree margin at n=" + std::to_string(n));
    previous_D = D;
    ledger.d.push_back(std::move(d));
    ledger.D.push_back(std::move(D));
    ledger.margin.push_back(std::move(margin));
  }
  return ledger;
}

CheckReport verify_degree_ledger(const Params& params, std::size_t n_max) {
  CheckReport report("contfrac.degree_ledger", at_level(params, "n_max", n_max));
  const DegreeLedger ledger = degree_ledger(params, n_max);
  const CFExpansion cf = cf_terms(params, n_max);
  const BigInt tk = params.block();
  for (std::size_t i = 0; i < n_max; ++i) {
    const unsigned long n = i + 1;
    const CFTerm& term = cf.terms[i];
    const BigInt scale = params.level_scale(n);

    const bool shape = term.a.is_monomial() && term.a.terms()[0].coeff == 1 && term.b.term_count() == params.k() &&
                       term.b.constant_term() == 1;
    report.add("term_shape", at_level(params, "n", n), shape, shape ? "" : "a_n not a monic monomial or b_n malformed");

    const bool degrees = term.a.degree() == ledger.d[i] && term.a.degree() == term.b.degree() + scale;
    report.add("deg_a_equals_deg_b_plus_t^nk", at_level(params, "n", n), degrees,
               degrees ? "" : "deg a_n=" + to_decimal(term.a.degree()) + ", deg b_n=" + to_decimal(term.b.degree()));

    const BigInt margin = ledger.D[i] - term.b.degree();
    bool ok = margin > 0 && margin == ledger.margin[i];
    std::string detail = "margin=" + to_decimal(margin);
    if (n >= 2) {
      const BigInt bound = scale - params.level_scale(n - 1) * (tk - 1) / (params.t() - 1);
      ok = ok && margin >= bound && bound > 0;
      detail += ", lower bound=" + to_decimal(bound);
    }
    report.add("degree_margin_positive", at_level(params, "n", n), ok, detail);
  }
  return report;
}

std::size_t regular_depth_within_cap(const Params& params, std::size_t max_depth) {
  const BigInt cap(static_cast<unsigned long>(bit_cap()));
  std::size_t depth = 0;
  for (unsigned long n = 1; n <= max_depth; ++n) {
    const BigInt d = params.level_scale(n) * (params.block() - 1) / (params.t() - 1);
    if (d > cap) break;
    depth = n;
  }
  return depth;
}

namespace {
struct EvaluatedCF {
  Rational b0;
  std::vector<Rational> a;
  std::vector<Rational> b;
};

EvaluatedCF evaluate_terms(const Params& params, const Rational& x, std::size_t depth) {
  const CFExpansion cf = cf_terms(params, depth);
  EvaluatedCF out{cf.b0.evaluate(x), {}, {}};
  for (const auto& term : cf.terms) {
    out.a.push_back(term.a.evaluate(x));
    out.b.push_back(term.b.evaluate(x));
  }
  return out;
}

}  // namespace

std::vector<Rational> convergent_values(const std::vector<Convergent<Rational>>& conv) {
  std::vector<Rational> out;
  out.reserve(conv.size());
  for (std::size_t m = 0; m < conv.size(); ++m) {
    if (conv[m].q == 0) fail(ErrorKind::DivisionByZero, "convergent denominator vanishes at m=" + std::to_string(m));
    Rational v = conv[m].p / conv[m].q;
    v.canonicalize();
    out.push_back(std::move(v));
  }
  return out;
}

namespace {
void require_unit_disk(const Rational& alpha) {
  require(sgn(alpha) != 0 && abs(alpha) < 1, ErrorKind::AlphaOutOfRange,
          "alpha must satisfy 0 < |alpha| < 1, got " + to_fraction_string(alpha));
}
}  // namespace

RegularCF regular_cf_transform(const Params& params, std::size_t depth) {
  require(depth >= 1, ErrorKind::InvalidParameter, "depth must be >= 1");
  if (regular_depth_within_cap(params, depth) < depth)
    fail(ErrorKind::CapExceeded, "2^(d_n) scaling at depth " + std::to_string(depth) + " exceeds the bit cap");
  const DegreeLedger ledger = degree_ledger(params, depth);
  const EvaluatedCF at_half = evaluate_terms(params, Rational(1, 2), depth);

  RegularCF out{at_half.b0, {}};
  BigInt scale_prev = 1;
  for (std::size_t i = 0; i < depth; ++i) {
    const BigInt scale = pow(2, to_ulong(ledger.D[i], "D_n"));
    Rational numerator = Rational(scale * scale_prev) * at_half.a[i];
    Rational denominator = Rational(scale) * at_half.b[i];
    numerator.canonicalize();
    denominator.canonicalize();
    require(numerator.get_den() == 1 && denominator.get_den() == 1, ErrorKind::InternalInvariant,
            "scaled term at n=" + std::to_string(i + 1) + " is not an integer");
    out.terms.push_back({numerator.get_num(), denominator.get_num()});
    scale_prev = scale;
  }
  return out;
}

CheckReport verify_regular_cf(const Params& params, std::size_t depth) {
  CheckReport report("contfrac.regular_cf", at_level(params, "depth", depth));
  const RegularCF regular = regular_cf_transform(params, depth);
  const EvaluatedCF at_half = evaluate_terms(params, Rational(1, 2), depth);

  std::vector<Rational> nums, dens;
  for (std::size_t i = 0; i < depth; ++i) {
    const auto& term = regular.terms[i];
    const bool unit = term.numerator == 1;
    report.add("regular_numerator_is_1", at_level(params, "n", i + 1), unit,
               unit ? "" : "numerator " + to_decimal(term.numerator));
    const bool positive = term.denominator > 0;
    report.add("regular_denominator_positive_integer", at_level(params, "n", i + 1), positive,
               positive ? "bits=" + std::to_string(mpz_sizeinbase(term.denominator.get_mpz_t(), 2))
                        : "denominator " + to_decimal(term.denominator));
    nums.emplace_back(term.numerator);
    dens.emplace_back(term.denominator);
  }

  const auto original = convergent_values(convergent_recurrence<Rational>(at_half.b0, at_half.a, at_half.b));
  const auto transformed = convergent_values(convergent_recurrence<Rational>(regular.b0, nums, dens));
  for (std::size_t m = 0; m <= depth; ++m) {
    const bool same = original[m] == transformed[m];
    report.add("regular_value_preserved", at_level(params, "m", m), same,
               same ? "value~" + approx(original[m]) : approx(original[m]) + " vs " + approx(transformed[m]));
  }
  return report;
}

std::vector<Rational> eval_cf_at_rational(const Params& params, const Rational& alpha, std::size_t depth) {
  require_unit_disk(alpha);
  const EvaluatedCF terms = evaluate_terms(params, alpha, depth);
  return convergent_values(convergent_recurrence<Rational>(terms.b0, terms.a, terms.b));
}

CheckReport verify_cf_against_series(const Params& params, const Rational& alpha, std::size_t depth,
                                     std::size_t order, const Rational& tolerance) {
  Json p = params.to_json();
  p["alpha"] = to_fraction_string(alpha);
  p["depth"] = depth;
  p["order"] = order;
  p["tolerance"] = to_fraction_string(tolerance);
  CheckReport report("contfrac.series_consistency", p);

  const TruncatedSeries h = h_series(params, order);
  const RationalInterval num = enclose(h, alpha);
  const RationalInterval den = enclose(h, pow(alpha, params.block()));
  const auto ratio = divide(num, den);
  const Rational convergent = eval_cf_at_rational(params, alpha, depth).back();
  if (!ratio) {
    report.add("cf_matches_series_ratio", p, false, "series ratio undetermined: divisor enclosure contains 0");
    return report;
  }
  const bool ok = ratio->lo - tolerance <= convergent && convergent <= ratio->hi + tolerance;
  report.add("cf_matches_series_ratio", p, ok,
             "convergent~" + approx(convergent) + ", ratio in [" + approx(ratio->lo) + ", " + approx(ratio->hi) + "]");
  return report;
}

}  // namespace sternpoly
