#include "sternpoly/mahler.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <string>

#include "sternpoly/contfrac.hpp"
#include "sternpoly/error.hpp"

namespace sternpoly {

namespace {

Json at_level(const Params& params, const char* key, unsigned long value) {
  Json j = params.to_json();
  j[key] = value;
  return j;
}

void require_levels(long n_max, long minimum) {
  require(n_max >= minimum, ErrorKind::InvalidParameter, "n_max must be >= " + std::to_string(minimum));
}

BigInt delta_exponent(const Params& params, unsigned long n) {
  const DegreeLedger ledger = degree_ledger(params, n);
  BigInt sum = 0;
  for (const auto& d : ledger.d) sum += d;
  return sum;
}

/// Minimal owning wrapper over an MPFR value with a fixed precision.
class Real {
 public:
  explicit Real(mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_zero(v_, 1); }
  Real(const BigInt& x, mpfr_prec_t bits) : Real(bits) { mpfr_set_z(v_, x.get_mpz_t(), MPFR_RNDN); }
  Real(const Real& o) : Real(mpfr_get_prec(o.v_)) { mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real& operator=(const Real& o) {
    if (this != &o) mpfr_set(v_, o.v_, MPFR_RNDN);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t bits() const { return mpfr_get_prec(v_); }

  friend Real operator+(const Real& a, const Real& b) { return apply(mpfr_add, a, b); }
  friend Real operator-(const Real& a, const Real& b) { return apply(mpfr_sub, a, b); }
  friend Real operator*(const Real& a, const Real& b) { return apply(mpfr_mul, a, b); }
  friend Real operator/(const Real& a, const Real& b) { return apply(mpfr_div, a, b); }
  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }

  Real abs() const {
    Real out(bits());
    mpfr_abs(out.v_, v_, MPFR_RNDN);
    return out;
  }
  Real sqrt() const {
    Real out(bits());
    mpfr_sqrt(out.v_, v_, MPFR_RNDN);
    return out;
  }
  Real pow(unsigned long e) const {
    Real out(bits());
    mpfr_pow_ui(out.v_, v_, e, MPFR_RNDN);
    return out;
  }
  std::string str(unsigned digits) const {
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Re", static_cast<int>(digits > 1 ? digits - 1 : 0), v_);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
  }

 private:
  template <class Op>
  static Real apply(Op op, const Real& a, const Real& b) {
    Real out(std::max(a.bits(), b.bits()));
    op(out.v_, a.v_, b.v_, MPFR_RNDN);
    return out;
  }

  mpfr_t v_;
};

/// r + s*sqrt(D) with rational r, s and a positive non-square integer D.
struct QuadraticSurd {
  Rational r;
  Rational s;
  BigInt D;

  QuadraticSurd operator+(const QuadraticSurd& o) const { return {r + o.r, s + o.s, D}; }
  QuadraticSurd operator*(const QuadraticSurd& o) const { return {r * o.r + s * o.s * D, r * o.s + s * o.r, D}; }
  QuadraticSurd operator-(const Rational& x) const { return {r - x, s, D}; }

  int sign() const {
    const int sr = sgn(r), ss = sgn(s);
    if (ss == 0) return sr;
    if (sr == 0 || sr == ss) return ss;
    // Opposite signs: compare r^2 against s^2 D.
    const int cmp_sq = cmp(Rational(r * r), Rational(s * s * D));
    return cmp_sq > 0 ? sr : (cmp_sq < 0 ? ss : 0);
  }
  bool is_rational(const Rational& x) const { return s == 0 && r == x; }
};

}  // namespace

GMatrix b_factor(const Params& params, unsigned long j) {
  const BigInt scale = params.level_scale(j);
  const SparsePoly upper = compose_power(compose_power(closed_form_2k(params), params.block()), scale);
  const SparsePoly lower = compose_power(closed_form_2k_minus_1(params), scale);
  return GMatrix{{{{SparsePoly{}, upper}, {SparsePoly(1), -lower}}}, 1};
}

GMatrix b_matrix(const Params& params) { return b_factor(params, 0); }

GMatrix multiply(const GMatrix& lhs, const GMatrix& rhs) {
  GMatrix out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.g[i][j] = lhs.g[i][0] * rhs.g[0][j] + lhs.g[i][1] * rhs.g[1][j];
  out.level = lhs.level + rhs.level;
  return out;
}

SparsePoly determinant(const GMatrix& m) { return multiply_sub(m(0, 0), m(1, 1), m(0, 1), m(1, 0)); }

IntMatrix value_at_one(const GMatrix& m) {
  IntMatrix out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out[i][j] = m(i, j).value_at_one();
  return out;
}

CheckReport a_matrix_pole_check(const Params& params) {
  CheckReport report("mahler.a_matrix_pole", params.to_json());
  const GMatrix b = b_matrix(params);
  const SparsePoly& denominator = b(0, 1);
  const BigInt d1 = degree_ledger(params, 1).d.front();

  const bool monomial = denominator.is_monomial() && denominator.terms()[0].coeff == 1;
  report.add("denominator_is_monomial", params.to_json(), monomial,
             monomial ? "z^" + to_decimal(denominator.degree()) : "a_t(2^k; z^(t^k)) = " + to_text(denominator));
  const bool order_ok = monomial && denominator.degree() == d1;
  report.add("pole_order_equals_d1", params.to_json(), order_ok,
             order_ok ? "" : "denominator degree differs from d_1=" + to_decimal(d1));
  // B has the constant entry 1, so z^(-d_1) B(z) attains the full pole order at 0 and no other pole.
  const bool attained = b(1, 0).constant_term() != 0;
  report.add("pole_only_at_zero", params.to_json(), attained && monomial,
             attained ? "" : "no entry of B(z) has a nonzero constant term");
  return report;
}

GMatrix g_product(const Params& params, unsigned long n) {
  require(n >= 1, ErrorKind::InvalidParameter, "n must be >= 1");
  GMatrix out = b_factor(params, 0);
  for (unsigned long j = 1; j < n; ++j) out = multiply(b_factor(params, j), out);
  return out;
}

std::vector<GMatrix> g_recur_sequence(const Params& params, unsigned long n_max) {
  require(n_max >= 1, ErrorKind::InvalidParameter, "n must be >= 1");
  const SparsePoly top = closed_form_2k(params);
  const SparsePoly below = closed_form_2k_minus_1(params);
  std::vector<GMatrix> out;
  out.reserve(n_max);
  out.push_back(GMatrix{{{{SparsePoly{}, compose_power(top, params.block())}, {SparsePoly(1), -below}}}, 1});
  for (unsigned long n = 1; n < n_max; ++n) {
    const GMatrix& g = out.back();
    const SparsePoly a_next = compose_power(top, params.level_scale(n + 1));
    const SparsePoly b_here = compose_power(below, params.level_scale(n));
    GMatrix next;
    next.g[0][0] = a_next * g(1, 0);
    next.g[0][1] = a_next * g(1, 1);
    next.g[1][0] = g(0, 0) - b_here * g(1, 0);
    next.g[1][1] = g(0, 1) - b_here * g(1, 1);
    next.level = n + 1;
    out.push_back(std::move(next));
  }
  return out;
}

GMatrix g_recur(const Params& params, unsigned long n) { return g_recur_sequence(params, n).back(); }

CheckReport verify_g_product_recur(const Params& params, long n_max) {
  require_levels(n_max, 1);
  CheckReport report("mahler.g_product_recur", params.to_json());
  const auto recur = g_recur_sequence(params, static_cast<unsigned long>(n_max));
  GMatrix product = b_factor(params, 0);
  for (unsigned long n = 1; n <= static_cast<unsigned long>(n_max); ++n) {
    if (n > 1) product = multiply(b_factor(params, n - 1), product);
    const bool same = product == recur[n - 1];
    report.add("g_product_equals_g_recur", at_level(params, "n", n), same,
               same ? "" : "direct product and entrywise recurrence disagree");
  }
  return report;
}

CheckReport g_constant_terms(const Params& params, long n_max) {
  require_levels(n_max, 1);
  CheckReport report("mahler.g_constant_terms", params.to_json());
  const auto seq = g_recur_sequence(params, static_cast<unsigned long>(n_max));
  for (const auto& g : seq) {
    const BigInt sign = g.level % 2 == 1 ? 1 : -1;  // (-1)^(n-1)
    const BigInt c11 = g(0, 0).constant_term(), c12 = g(0, 1).constant_term();
    const BigInt c21 = g(1, 0).constant_term(), c22 = g(1, 1).constant_term();
    const bool ok = c11 == 0 && c12 == 0 && c21 == sign && c22 == -sign;
    report.add("g_constant_terms", at_level(params, "n", g.level), ok,
               "G(0) = [[" + to_decimal(c11) + ", " + to_decimal(c12) + "], [" + to_decimal(c21) + ", " +
                   to_decimal(c22) + "]]");
  }
  return report;
}

CheckReport g_nonvanishing(const Params& params, long n_max) {
  require_levels(n_max, 2);
  CheckReport report("mahler.g_nonvanishing", params.to_json());
  const auto seq = g_recur_sequence(params, static_cast<unsigned long>(n_max));
  for (const auto& g : seq) {
    const bool ok = !g(0, 1).is_zero() && !g(1, 0).is_zero() && !g(1, 1).is_zero();
    std::string detail;
    if (g(0, 1).is_zero()) detail += "G12 = 0; ";
    if (g(1, 0).is_zero()) detail += "G21 = 0; ";
    if (g(1, 1).is_zero()) detail += "G22 = 0; ";
    report.add("g12_g21_g22_nonzero", at_level(params, "n", g.level), ok, detail);
  }
  return report;
}

CheckReport det_check(const Params& params, long n_max) {
  require_levels(n_max, 1);
  CheckReport report("mahler.det", params.to_json());
  const auto seq = g_recur_sequence(params, static_cast<unsigned long>(n_max));
  for (const auto& g : seq) {
    const BigInt delta = delta_exponent(params, g.level);
    const SparsePoly expected = SparsePoly::monomial(delta, g.level % 2 == 0 ? 1 : -1);
    const SparsePoly det = determinant(g);
    const bool ok = det == expected;
    report.add("det_equals_signed_monomial", at_level(params, "n", g.level), ok,
               ok ? "delta_n=" + to_decimal(delta)
                  : "det has " + std::to_string(det.term_count()) + " terms, expected (-1)^n z^" + to_decimal(delta));
  }
  return report;
}

std::vector<IntMatrix> g_values_at_one(const Params& params, unsigned long n_max) {
  require(n_max >= 1, ErrorKind::InvalidParameter, "n_max must be >= 1");
  std::vector<IntMatrix> out;
  out.reserve(n_max);
  IntMatrix g = value_at_one(b_factor(params, 0));
  out.push_back(g);
  for (unsigned long j = 1; j < n_max; ++j) {
    const IntMatrix b = value_at_one(b_factor(params, j));
    IntMatrix next;
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) next[r][c] = b[r][0] * g[0][c] + b[r][1] * g[1][c];
    g = next;
    out.push_back(g);
  }
  return out;
}

std::pair<CheckReport, SpectralFit> g_at_one_spectral(const Params& params, long n_max, unsigned precision) {
  require_levels(n_max, 3);
  require(precision >= 2, ErrorKind::InvalidParameter, "precision must be >= 2 digits");
  const auto levels = static_cast<unsigned long>(n_max);
  const unsigned long k = params.k();
  Json base = params.to_json();
  base["n_max"] = levels;
  base["precision"] = precision;
  CheckReport report("mahler.spectral", base);

  const auto values = g_values_at_one(params, levels);  // values[n-1] = G^(n)(1)

  // Values at one from the full polynomial product where it stays small.
  const unsigned long poly_levels = std::min<unsigned long>(levels, 8);
  const auto polys = g_recur_sequence(params, poly_levels);
  for (unsigned long n = 1; n <= poly_levels; ++n) {
    const bool same = value_at_one(polys[n - 1]) == values[n - 1];
    report.add("g_at_one_matches_polynomial", at_level(params, "n", n), same,
               same ? "" : "product of B_j(1) differs from G^(n) evaluated at 1");
  }

  for (unsigned long n = 2; n < levels; ++n) {
    bool ok = true;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        ok = ok && values[n][i][j] == -BigInt(k) * values[n - 1][i][j] + values[n - 2][i][j];
    report.add("integer_recurrence_at_one", at_level(params, "n", n), ok,
               ok ? "" : "G^(n+1)(1) != -k G^(n)(1) + G^(n-1)(1)");
  }

  // gamma = (-k + sqrt(D)) / 2, delta = (-k - sqrt(D)) / 2 with D = k^2 + 4.
  const BigInt D = BigInt(k) * k + 4;
  Rational half_k(BigInt(k), 2);
  half_k.canonicalize();
  const QuadraticSurd gamma_exact{-half_k, Rational(1, 2), D};
  const QuadraticSurd delta_exact{-half_k, Rational(-1, 2), D};
  const bool product_ok = (gamma_exact * delta_exact).is_rational(-1);
  const bool sum_ok = (gamma_exact + delta_exact).is_rational(-BigInt(k));
  report.add("gamma_delta_product_is_minus_1", base, product_ok, product_ok ? "" : "gamma*delta != -1");
  report.add("gamma_plus_delta_is_minus_k", base, sum_ok, sum_ok ? "" : "gamma+delta != -k");
  const bool gamma_range = gamma_exact.sign() > 0 && (gamma_exact - Rational(1)).sign() < 0;
  const bool delta_range = (delta_exact + QuadraticSurd{Rational(1), Rational(0), D}).sign() < 0;
  report.add("gamma_in_open_unit_interval", base, gamma_range, gamma_range ? "" : "gamma outside (0,1)");
  report.add("abs_delta_greater_than_1", base, delta_range, delta_range ? "" : "|delta| <= 1");

  const auto bits = static_cast<mpfr_prec_t>(std::ceil(precision * 3.3219280948873623)) + 16;
  const Real root = Real(D, bits).sqrt();
  const Real kk(BigInt(k), bits);
  const Real two(BigInt(2), bits);
  const Real gamma = (root - kk) / two;
  const Real delta = (Real(BigInt(0), bits) - root - kk) / two;
  const Real gamma2 = gamma * gamma, delta2 = delta * delta;
  const Real det = gamma * delta2 - delta * gamma2;

  SpectralFit fit;
  fit.k = k;
  fit.precision = precision;
  fit.gamma = gamma.str(precision);
  fit.delta = delta.str(precision);

  Real residual(bits);
  std::array<std::array<Real, 2>, 2> c_fit{{{Real(bits), Real(bits)}, {Real(bits), Real(bits)}}};
  std::array<std::array<Real, 2>, 2> d_fit = c_fit;
  const Real one(BigInt(1), bits);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const Real g1(values[0][i][j], bits), g2(values[1][i][j], bits);
      c_fit[i][j] = (g1 * delta2 - g2 * delta) / det;
      d_fit[i][j] = (g2 * gamma - g1 * gamma2) / det;
      fit.c[i][j] = c_fit[i][j].str(precision);
      fit.d[i][j] = d_fit[i][j].str(precision);
      for (unsigned long n = 1; n <= levels; ++n) {
        const Real exact(values[n - 1][i][j], bits);
        const Real model = c_fit[i][j] * gamma.pow(n) + d_fit[i][j] * delta.pow(n);
        const Real scale = one < exact.abs() ? exact.abs() : one;
        const Real err = (exact - model).abs() / scale;
        if (residual < err) residual = err;
      }
    }
  fit.residual = residual.str(6);
  fit.residual_value = mpfr_get_d(residual.get(), MPFR_RNDN);

  Real tolerance(bits);
  mpfr_set_ui(tolerance.get(), 10, MPFR_RNDN);
  mpfr_pow_si(tolerance.get(), tolerance.get(), -static_cast<long>(precision / 2), MPFR_RNDN);
  if (tolerance < residual)
    fail(ErrorKind::PrecisionTooLow, "closed-form residual " + fit.residual + " exceeds 1e-" +
                                         std::to_string(precision / 2) + " at " + std::to_string(precision) +
                                         " digits");
  report.add("closed_form_fit", base, true, "residual=" + fit.residual);

  // |G^(n+1)(1)| / |G^(n)(1)| approaches |delta|.
  const Real abs_delta = delta.abs();
  const Real one_percent = one / Real(BigInt(100), bits);
  for (unsigned long n = 10; n < levels; ++n) {
    bool ok = true;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        if (values[n - 1][i][j] == 0) continue;
        const Real ratio = (Real(values[n][i][j], bits) / Real(values[n - 1][i][j], bits)).abs();
        ok = ok && ((ratio - abs_delta).abs() / abs_delta) < one_percent;
      }
    report.add("growth_ratio_near_abs_delta", at_level(params, "n", n), ok,
               ok ? "" : "ratio deviates from |delta| by more than 1%");
  }
  return {report, fit};
}

}  // namespace sternpoly
