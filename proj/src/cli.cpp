#include "sternpoly/cli.hpp"

#include <cstdlib>
#include <ostream>
#include <string>

#include "CLI11.hpp"
#include "sternpoly/contfrac.hpp"
#include "sternpoly/error.hpp"
#include "sternpoly/json_io.hpp"
#include "sternpoly/series.hpp"
#include "sternpoly/stern.hpp"
#include "sternpoly/verify.hpp"

namespace sternpoly {

namespace {

enum class Format { Text, Json };

void add_format(CLI::App* cmd, Format& format) {
  cmd->add_option("--format", format, "Output format")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"text", Format::Text}, {"json", Format::Json}},
                                          CLI::ignore_case))
      ->option_text("text|json (default text)");
}

void print(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

std::string interval_text(const RationalInterval& iv) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "[%.15g, %.15g]", iv.lo.get_d(), iv.hi.get_d());
  return std::string(buf) + "  (" + to_fraction_string(iv.lo) + " .. " + to_fraction_string(iv.hi) + ")";
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Type-1 Stern polynomials, the series H_k(z), their continued fractions and Mahler matrices"};
  app.require_subcommand(1);
  std::size_t cap = 0;
  app.add_option("--term-cap", cap, "Maximum polynomial term count (default 1000000, env STERN_TERM_CAP)");

  Format format = Format::Text;
  long t = 2, k = 1;
  std::string n_text = "0";
  std::size_t order = 64, depth = 4;
  std::string alpha_text;

  auto* poly = app.add_subcommand("poly", "Print a_t(n; z)");
  poly->add_option("--t", t, "Substitution exponent t >= 2")->required();
  poly->add_option("--n", n_text, "Index n >= 0, any size")->required();
  add_format(poly, format);

  long alpha_n = 0;
  auto* alpha_cmd = app.add_subcommand("alpha", "Print alpha_n(k) = (2^(kn) - (-1)^n) / (2^k + 1)");
  alpha_cmd->add_option("--k", k, "Block length k >= 1")->required();
  alpha_cmd->add_option("--n", alpha_n, "n >= 1")->required();
  add_format(alpha_cmd, format);

  auto* series = app.add_subcommand("series", "Print H_k(z) mod z^order");
  series->add_option("--t", t, "Substitution exponent t >= 2")->required();
  series->add_option("--k", k, "Block length k >= 1")->required();
  series->add_option("--order", order, "Truncation order")->capture_default_str();
  add_format(series, format);

  auto* eval = app.add_subcommand("eval", "Certified enclosures of H_k(alpha), H_k(alpha^(t^k)) and their ratio");
  eval->add_option("--t", t, "Substitution exponent t >= 2")->required();
  eval->add_option("--k", k, "Block length k >= 1")->required();
  eval->add_option("--alpha", alpha_text, "Exact rational p/q with 0 < |p/q| < 1")->required();
  eval->add_option("--order", order, "Truncation order of the partial sums")->capture_default_str();
  add_format(eval, format);

  bool regular = false;
  auto* cf = app.add_subcommand("cf", "Continued fraction terms and convergents");
  cf->add_option("--t", t, "Substitution exponent t >= 2")->required();
  cf->add_option("--k", k, "Block length k >= 1")->required();
  cf->add_option("--depth", depth, "Number of levels")->capture_default_str();
  cf->add_option("--at", alpha_text, "Evaluate at the exact rational p/q");
  cf->add_flag("--regular", regular, "Regular continued fraction at z = 1/2 (requires --at 1/2)");
  add_format(cf, format);

  VerifyConfig config;
  auto* verify = app.add_subcommand("verify", "Run the identity verification suites over a (t, k) grid");
  verify->add_option("--t", config.t_list, "Comma-separated t values")->delimiter(',')->capture_default_str();
  verify->add_option("--k", config.k_list, "Comma-separated k values")->delimiter(',')->capture_default_str();
  verify->add_option("--depth", config.depth, "Recurrence and continued fraction depth")->capture_default_str();
  verify->add_option("--order", config.order, "Series truncation order")->capture_default_str();
  verify->add_option("--precision", config.precision, "Decimal digits for the spectral fit")->capture_default_str();
  verify->add_option("--suite", config.suite, "Suite to run")->capture_default_str()
      ->check(CLI::IsMember({"stern", "series", "contfrac", "mahler", "all"}));
  verify->add_option("--jobs", config.jobs, "Grid points run concurrently (0 = hardware threads)")->capture_default_str();
  add_format(verify, format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  if (cap == 0) {
    if (const char* env = std::getenv("STERN_TERM_CAP")) {
      try {
        cap = std::stoull(env);
      } catch (const std::exception&) {
        err << "invalid STERN_TERM_CAP: " << env << "\n";
        return 2;
      }
    }
  }
  const std::size_t saved_cap = term_cap();
  if (cap != 0) set_term_cap(cap);
  struct RestoreCap {
    std::size_t cap;
    ~RestoreCap() { set_term_cap(cap); }
  } restore{saved_cap};

  try {
    if (*poly) {
      const SparsePoly p = stern_poly(t, parse_bigint(n_text));
      if (format == Format::Json)
        print(out, to_json(p));
      else
        out << to_text(p) << "\n";
      return 0;
    }
    if (*alpha_cmd) {
      const AlphaIndex a = alpha(k, alpha_n);
      if (format == Format::Json)
        print(out, to_json(a));
      else
        out << to_decimal(a.value) << "\n";
      return 0;
    }
    if (*series) {
      const TruncatedSeries s = h_series(Params(t, k), order);
      if (format == Format::Json) {
        print(out, to_json(s));
      } else {
        std::string exps;
        for (std::size_t i = 0; i < s.coeffs.size(); ++i)
          if (s.coeffs[i] != 0) exps += (exps.empty() ? "" : " ") + std::to_string(i);
        out << s.bitstring() << "\nexponents: " << exps << "\n";
      }
      return 0;
    }
    if (*eval) {
      const Params params(t, k);
      const Rational a = parse_rational(alpha_text);
      require(sgn(a) != 0 && abs(a) < 1, ErrorKind::AlphaOutOfRange,
              "alpha must satisfy 0 < |alpha| < 1, got " + to_fraction_string(a));
      const TruncatedSeries h = h_series(params, order);
      const RationalInterval at_alpha = enclose(h, a);
      const RationalInterval at_power = enclose(h, pow(a, params.block()));
      const auto ratio = divide(at_alpha, at_power);
      if (format == Format::Json) {
        Json j;
        j["t"] = params.t();
        j["k"] = params.k();
        j["alpha"] = to_fraction_string(a);
        j["order"] = order;
        j["tail_bound"] = "coefficients in {0,1}: |tail| <= |x|^order / (1 - |x|)";
        j["H_alpha"] = to_json(at_alpha);
        j["H_alpha_tk"] = to_json(at_power);
        j["ratio"] = ratio ? to_json(*ratio) : Json("undetermined");
        print(out, j);
      } else {
        out << "H_k(alpha)       in " << interval_text(at_alpha) << "\n";
        out << "H_k(alpha^(t^k)) in " << interval_text(at_power) << "\n";
        out << "ratio            in " << (ratio ? interval_text(*ratio) : std::string("undetermined")) << "\n";
      }
      return 0;
    }
    if (*cf) {
      const Params params(t, k);
      if (regular) {
        if (alpha_text.empty() || parse_rational(alpha_text) != Rational(1, 2)) {
          err << "--regular requires --at 1/2\n";
          return 2;
        }
        const RegularCF rcf = regular_cf_transform(params, depth);
        if (format == Format::Json) {
          Json terms = Json::array();
          for (const auto& term : rcf.terms)
            terms.push_back(Json::array({to_decimal(term.numerator), to_decimal(term.denominator)}));
          Json j;
          j["b0"] = to_fraction_string(rcf.b0);
          j["terms"] = std::move(terms);
          print(out, j);
        } else {
          out << "b0 = " << to_fraction_string(rcf.b0) << "\n";
          for (std::size_t i = 0; i < rcf.terms.size(); ++i)
            out << "n=" << i + 1 << "  numerator " << to_decimal(rcf.terms[i].numerator) << "  denominator "
                << to_decimal(rcf.terms[i].denominator) << "\n";
        }
        return 0;
      }
      if (!alpha_text.empty()) {
        const Rational a = parse_rational(alpha_text);
        const auto values = eval_cf_at_rational(params, a, depth);
        if (format == Format::Json) {
          Json list = Json::array();
          for (const auto& v : values) list.push_back(to_fraction_string(v));
          Json j;
          j["alpha"] = to_fraction_string(a);
          j["convergents"] = std::move(list);
          print(out, j);
        } else {
          for (std::size_t m = 0; m < values.size(); ++m) {
            char buf[48];
            std::snprintf(buf, sizeof buf, "%.15g", values[m].get_d());
            out << "m=" << m << "  " << to_fraction_string(values[m]) << "  ~" << buf << "\n";
          }
        }
        return 0;
      }
      const CFExpansion expansion = cf_terms(params, depth);
      const auto conv = convergents(expansion.b0, expansion.terms);
      if (format == Format::Json) {
        print(out, cf_report_json(params, expansion, conv));
      } else {
        out << "b0 = " << to_text(expansion.b0) << "\n";
        for (const auto& term : expansion.terms)
          out << "n=" << term.level << "  a = " << to_text(term.a) << "  b = " << to_text(term.b) << "\n";
        for (std::size_t m = 0; m < conv.size(); ++m)
          out << "m=" << m << "  p = " << to_text(conv[m].p) << "  q = " << to_text(conv[m].q) << "\n";
      }
      return 0;
    }
    if (*verify) {
      const VerifyOutcome outcome = run_verify(config);
      if (format == Format::Json)
        print(out, outcome.report.to_json());
      else
        out << outcome.report.to_text();
      if (outcome.error) return exit_code(*outcome.error);
      return outcome.report.pass() ? 0 : 1;
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
    return exit_code(e.kind());
  }
  return 2;
}

}  // namespace sternpoly
