#pragma once

#include "sternpoly/contfrac.hpp"
#include "sternpoly/mahler.hpp"
#include "sternpoly/report.hpp"
#include "sternpoly/series.hpp"
#include "sternpoly/sparse_poly.hpp"
#include "sternpoly/stern.hpp"

// Wire formats. Every number is a decimal string so that arbitrary precision
// values survive any JSON consumer; rationals are "p/q" in lowest terms.
namespace sternpoly {

/// {"terms": [["<exp>", "<coeff>"], ...]} with ascending exponents.
Json to_json(const SparsePoly& p);
/// Inverse of to_json(SparsePoly); rejects unsorted or zero-coefficient terms.
SparsePoly sparse_poly_from_json(const Json& j);

/// {"t", "k", "order", "coeffs": "<bitstring>"}.
Json to_json(const TruncatedSeries& s);
/// {"lo": "p/q", "hi": "p/q"}.
Json to_json(const RationalInterval& interval);
Json to_json(const AlphaIndex& a);

/// {"b0", "terms": [{"a", "b", "d_n", "D_n"}], "convergents": [{"p", "q"}]}.
Json cf_report_json(const Params& params, const CFExpansion& cf, const std::vector<ConvergentPair>& conv);

/// {"n", "g": [[p11, p12], [p21, p22]]}.
Json to_json(const GMatrix& m);
/// {"k", "gamma", "delta", "c", "d", "residual"}.
Json to_json(const SpectralFit& fit);

}  // namespace sternpoly
