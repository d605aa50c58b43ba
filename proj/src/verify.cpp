#include "sternpoly/verify.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <thread>

#include "sternpoly/contfrac.hpp"
#include "sternpoly/mahler.hpp"
#include "sternpoly/series.hpp"
#include "sternpoly/stern.hpp"

namespace sternpoly {

namespace {

constexpr const char* kSuites[] = {"stern", "series", "contfrac", "mahler", "all"};

bool wants(const std::string& suite, const char* name) { return suite == "all" || suite == name; }

struct PointResult {
  CheckReport report;
  std::optional<ErrorKind> error;
};

PointResult run_point(const Params& params, const VerifyConfig& config) {
  PointResult result{CheckReport("point", params.to_json()), std::nullopt};
  const long depth = static_cast<long>(config.depth);
  std::vector<std::function<CheckReport()>> steps;

  if (wants(config.suite, "stern")) {
    steps.emplace_back([&] { return verify_closed_forms(params); });
    steps.emplace_back([&] { return verify_three_term(params, std::max(depth + 1, 2L)); });
  }
  if (wants(config.suite, "series")) {
    steps.emplace_back([&] { return verify_functional_equation(params, config.order); });
    steps.emplace_back([&] { return verify_mat_system(params, config.order); });
    steps.emplace_back([&] { return verify_agreement_growth(params, 2, std::max(depth + 2, 3L)); });
  }
  if (wants(config.suite, "contfrac")) {
    steps.emplace_back([&] { return verify_cf1(params, depth + 2); });
    steps.emplace_back([&] { return verify_degree_ledger(params, config.depth + 1); });
    const std::size_t regular_depth = regular_depth_within_cap(params, std::max<std::size_t>(config.depth, 1));
    if (regular_depth >= 1) {
      steps.emplace_back([&params, regular_depth] { return verify_regular_cf(params, regular_depth); });
      steps.emplace_back([&params, regular_depth, &config] {
        return verify_cf_against_series(params, Rational(1, 2), regular_depth, std::min<std::size_t>(config.order, 64),
                                        Rational(1, 1000000));
      });
    }
  }
  if (wants(config.suite, "mahler")) {
    const long levels = std::max(depth, 2L);
    steps.emplace_back([&] { return a_matrix_pole_check(params); });
    steps.emplace_back([&, levels] { return verify_g_product_recur(params, levels); });
    steps.emplace_back([&, levels] { return g_constant_terms(params, levels); });
    steps.emplace_back([&, levels] { return g_nonvanishing(params, levels); });
    steps.emplace_back([&, levels] { return det_check(params, levels); });
    steps.emplace_back([&] { return g_at_one_spectral(params, std::max(depth, 20L), config.precision).first; });
  }

  for (const auto& step : steps) {
    try {
      result.report.append(step());
    } catch (const Error& e) {
      result.report.add("aborted", params.to_json(), false, e.what());
      result.error = e.kind();
      break;
    }
  }
  return result;
}

}  // namespace

VerifyOutcome run_verify(const VerifyConfig& config) {
  require(std::find(std::begin(kSuites), std::end(kSuites), config.suite) != std::end(kSuites),
          ErrorKind::InvalidParameter, "unknown suite '" + config.suite + "'");
  require(!config.t_list.empty() && !config.k_list.empty(), ErrorKind::InvalidParameter, "empty grid");
  require(config.order >= 1, ErrorKind::InvalidParameter, "order must be >= 1");
  require(config.depth >= 1, ErrorKind::InvalidParameter, "depth must be >= 1");
  std::vector<Params> grid;
  for (long t : config.t_list)
    for (long k : config.k_list) grid.emplace_back(t, k);

  Json params;
  params["t"] = config.t_list;
  params["k"] = config.k_list;
  params["depth"] = config.depth;
  params["order"] = config.order;
  params["precision"] = config.precision;
  VerifyOutcome outcome{CheckReport(config.suite, params), std::nullopt};

  const unsigned jobs =
      std::max(1u, config.jobs != 0 ? config.jobs : std::max(1u, std::thread::hardware_concurrency()));
  std::vector<PointResult> results(grid.size());
  for (std::size_t start = 0; start < grid.size(); start += jobs) {
    const std::size_t stop = std::min(grid.size(), start + jobs);
    std::vector<std::future<PointResult>> batch;
    for (std::size_t i = start; i < stop; ++i)
      batch.push_back(std::async(std::launch::async, run_point, std::cref(grid[i]), std::cref(config)));
    for (std::size_t i = start; i < stop; ++i) results[i] = batch[i - start].get();
  }

  for (const auto& r : results) {
    outcome.report.append(r.report);
    if (r.error && !outcome.error) outcome.error = r.error;
  }
  return outcome;
}

}  // namespace sternpoly
