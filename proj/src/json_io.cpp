#include "sternpoly/json_io.hpp"

#include "sternpoly/error.hpp"

namespace sternpoly {

Json to_json(const SparsePoly& p) {
  Json terms = Json::array();
  for (const auto& term : p.terms()) terms.push_back(Json::array({to_decimal(term.exp), to_decimal(term.coeff)}));
  Json out;
  out["terms"] = std::move(terms);
  return out;
}

SparsePoly sparse_poly_from_json(const Json& j) {
  require(j.is_object() && j.contains("terms") && j.at("terms").is_array(), ErrorKind::InvalidParameter,
          "SparsePoly JSON needs a \"terms\" array");
  std::vector<Term> terms;
  for (const auto& entry : j.at("terms")) {
    require(entry.is_array() && entry.size() == 2 && entry[0].is_string() && entry[1].is_string(),
            ErrorKind::InvalidParameter, "each term must be [\"<exp>\", \"<coeff>\"]");
    Term term{parse_bigint(entry[0].get<std::string>()), parse_bigint(entry[1].get<std::string>())};
    require(sgn(term.exp) >= 0, ErrorKind::InvalidParameter, "negative exponent");
    require(term.coeff != 0, ErrorKind::InvalidParameter, "zero coefficient stored");
    require(terms.empty() || terms.back().exp < term.exp, ErrorKind::InvalidParameter,
            "exponents must be strictly increasing");
    terms.push_back(std::move(term));
  }
  return SparsePoly::from_terms(std::move(terms));
}

Json to_json(const TruncatedSeries& s) {
  Json out;
  out["t"] = s.params.t();
  out["k"] = s.params.k();
  out["order"] = s.order;
  out["coeffs"] = s.bitstring();
  return out;
}

Json to_json(const RationalInterval& interval) {
  Json out;
  out["lo"] = to_fraction_string(interval.lo);
  out["hi"] = to_fraction_string(interval.hi);
  return out;
}

Json to_json(const AlphaIndex& a) {
  Json out;
  out["k"] = a.k;
  out["n"] = a.n;
  out["value"] = to_decimal(a.value);
  return out;
}

Json cf_report_json(const Params& params, const CFExpansion& cf, const std::vector<ConvergentPair>& conv) {
  const DegreeLedger ledger = degree_ledger(params, std::max<std::size_t>(cf.terms.size(), 1));
  Json terms = Json::array();
  for (std::size_t i = 0; i < cf.terms.size(); ++i) {
    Json entry;
    entry["a"] = to_json(cf.terms[i].a);
    entry["b"] = to_json(cf.terms[i].b);
    entry["d_n"] = to_decimal(ledger.d[i]);
    entry["D_n"] = to_decimal(ledger.D[i]);
    terms.push_back(std::move(entry));
  }
  Json convergents = Json::array();
  for (const auto& c : conv) {
    Json entry;
    entry["p"] = to_json(c.p);
    entry["q"] = to_json(c.q);
    convergents.push_back(std::move(entry));
  }
  Json out;
  out["b0"] = to_json(cf.b0);
  out["terms"] = std::move(terms);
  out["convergents"] = std::move(convergents);
  return out;
}

Json to_json(const GMatrix& m) {
  Json out;
  out["n"] = m.level;
  out["g"] = Json::array({Json::array({to_json(m(0, 0)), to_json(m(0, 1))}),
                          Json::array({to_json(m(1, 0)), to_json(m(1, 1))})});
  return out;
}

Json to_json(const SpectralFit& fit) {
  auto matrix = [](const std::array<std::array<std::string, 2>, 2>& m) {
    return Json::array({Json::array({m[0][0], m[0][1]}), Json::array({m[1][0], m[1][1]})});
  };
  Json out;
  out["k"] = fit.k;
  out["gamma"] = fit.gamma;
  out["delta"] = fit.delta;
  out["c"] = matrix(fit.c);
  out["d"] = matrix(fit.d);
  out["residual"] = fit.residual;
  return out;
}

}  // namespace sternpoly
