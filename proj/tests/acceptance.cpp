#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "sternpoly/contfrac.hpp"
#include "sternpoly/error.hpp"
#include "sternpoly/mahler.hpp"
#include "sternpoly/series.hpp"
#include "sternpoly/stern.hpp"

using namespace sternpoly;

namespace {

struct Criterion {
  int id;
  const char* name;
  double limit_s;
  std::function<CheckReport()> body;
};

const std::vector<std::pair<long, long>>& grid() {
  static const std::vector<std::pair<long, long>> g{{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {3, 3}};
  return g;
}

CheckReport closed_forms() {
  CheckReport r("closed_forms", {});
  for (long t : {2, 3, 4})
    for (long k = 1; k <= 5; ++k) r.append(verify_closed_forms(Params(t, k)));
  return r;
}

std::vector<long> diatomic(long n_max) {
  std::vector<long> a(n_max + 1, 0);
  if (n_max >= 1) a[1] = 1;
  for (long n = 2; n <= n_max; ++n) a[n] = n % 2 == 0 ? a[n / 2] : a[n / 2] + a[n / 2 + 1];
  return a;
}

CheckReport diatomic_counts() {
  CheckReport r("diatomic", {});
  const auto a = diatomic(200);
  bool counts = true;
  for (long n = 0; n <= 200; ++n)
    counts = counts && static_cast<long>(stern_poly(2, n).term_count()) == a[n] && stern_value_at_one(2, n) == a[n];
  r.add("term_counts", {{"n_max", 200}}, counts, "");
  bool powers = true;
  for (long k = 0; (1L << k) <= 200; ++k) {
    powers = powers && stern_poly(2, 1L << k).term_count() == 1;
    if (k >= 1) powers = powers && static_cast<long>(stern_poly(2, (1L << k) - 1).term_count()) == k;
  }
  r.add("powers_of_two", {}, powers, "");
  return r;
}

CheckReport three_term() {
  CheckReport r("three_term", {});
  for (auto [t, k] : grid()) r.append(verify_three_term(Params(t, k), 6));
  return r;
}

CheckReport cf1() {
  CheckReport r("cf1", {});
  for (auto [t, k] : grid()) r.append(verify_cf1(Params(t, k), 6));
  return r;
}

CheckReport series() {
  CheckReport r("series", {});
  for (auto [t, k] : grid()) {
    const Params p(t, k);
    r.append(verify_functional_equation(p, 256));
    r.append(verify_mat_system(p, 256));
    r.append(verify_agreement_growth(p, 2, 7));
  }
  return r;
}

CheckReport ledger() {
  CheckReport r("ledger", {});
  for (auto [t, k] : grid()) r.append(verify_degree_ledger(Params(t, k), 6));
  for (long k : {1, 2, 3}) r.append(verify_regular_cf(Params(2, k), 4));
  return r;
}

CheckReport mahler() {
  CheckReport r("mahler", {});
  for (auto [t, k] : grid()) {
    const Params p(t, k);
    r.append(verify_g_product_recur(p, 8));
    r.append(g_constant_terms(p, 8));
    r.append(det_check(p, 8));
    r.append(g_nonvanishing(p, 8));
  }
  return r;
}

CheckReport spectral() {
  CheckReport r("spectral", {});
  for (long k : {1, 2, 3}) {
    auto [report, fit] = g_at_one_spectral(Params(2, k), 20, 60);
    r.append(report);
    r.add("residual", {{"k", k}}, fit.residual_value < 1e-12, "residual " + fit.residual);
  }
  return r;
}

CheckReport consistency() {
  CheckReport r("consistency", {});
  r.append(verify_cf_against_series(Params(2, 1), Rational(1, 2), 8, 64, Rational(1, 1000000)));
  const double value = eval_cf_at_rational(Params(2, 1), Rational(1, 2), 8).back().get_d();
  r.add("frozen_value", {}, std::abs(value - 1.235347984529053) < 1e-6, std::to_string(value));
  for (long k : {2, 3}) r.append(verify_cf_against_series(Params(2, k), Rational(1, 2), 4, 64, Rational(1, 10000)));
  return r;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "closed forms", 1.0, closed_forms},
      {2, "diatomic cross-check", 1.0, diatomic_counts},
      {3, "three-term recurrence", 10.0, three_term},
      {4, "continued fraction identity", 10.0, cf1},
      {5, "series truncations", 30.0, series},
      {6, "degree ledger and regular transform", 10.0, ledger},
      {7, "Mahler matrices", 30.0, mahler},
      {8, "spectral check at one", 5.0, spectral},
      {9, "numeric consistency", 5.0, consistency},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    try {
      const CheckReport report = c.body();
      ok = report.pass() && !report.checks().empty();
      for (const auto& check : report.checks())
        if (!check.pass) detail += " " + check.name + ": " + check.detail + ";";
    } catch (const Error& e) {
      detail = " " + std::string(to_string(e.kind())) + ": " + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && secs > c.limit_s) detail += " exceeded " + std::to_string(c.limit_s) + " s;";
    ok = ok && secs <= c.limit_s;
    if (!ok) ++failures;
    std::printf("criterion %d %s: %s (%.3f s)%s\n", c.id, c.name, ok ? "PASS" : "FAIL", secs, detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
