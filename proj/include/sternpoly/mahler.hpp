#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "sternpoly/bigint.hpp"
#include "sternpoly/report.hpp"
#include "sternpoly/sparse_poly.hpp"
#include "sternpoly/stern.hpp"

namespace sternpoly {

/// 2x2 matrix of polynomials. `level` is n for G^(n) = B(z^(t^((n-1)k))) ... B(z);
/// a single factor B(z^(t^(jk))) is stored with level 1.
struct GMatrix {
  std::array<std::array<SparsePoly, 2>, 2> g;
  unsigned long level = 1;

  const SparsePoly& operator()(int i, int j) const { return g[i][j]; }
  friend bool operator==(const GMatrix&, const GMatrix&) = default;
};

using IntMatrix = std::array<std::array<BigInt, 2>, 2>;

/// B(z) = [[0, a_t(2^k; z^(t^k))], [1, -a_t(2^k-1; z)]].
GMatrix b_matrix(const Params& params);
/// B(z^(t^(jk))).
GMatrix b_factor(const Params& params, unsigned long j);

GMatrix multiply(const GMatrix& lhs, const GMatrix& rhs);
SparsePoly determinant(const GMatrix& m);
IntMatrix value_at_one(const GMatrix& m);

/// A(z) = B(z) / a_t(2^k; z^(t^k)) has its only pole at 0, of order d_1.
CheckReport a_matrix_pole_check(const Params& params);

/// Direct product B(z^(t^((n-1)k))) ... B(z^(t^k)) B(z).
GMatrix g_product(const Params& params, unsigned long n);
/// Entrywise recurrences starting from G^(1) = B(z).
GMatrix g_recur(const Params& params, unsigned long n);
/// g_recur for levels 1..n_max in one pass.
std::vector<GMatrix> g_recur_sequence(const Params& params, unsigned long n_max);

CheckReport verify_g_product_recur(const Params& params, long n_max);
/// G11(0) = G12(0) = 0 and G21(0) = -G22(0) = (-1)^(n-1).
CheckReport g_constant_terms(const Params& params, long n_max);
/// G21, G22 nonzero for n >= 1 and G12 nonzero for n >= 1.
CheckReport g_nonvanishing(const Params& params, long n_max);
/// det G^(n) = (-1)^n z^(d_1 + ... + d_n).
CheckReport det_check(const Params& params, long n_max);

/// G^(n)(1) for n = 1..n_max from products of the factors B_j(1), each taken
/// from the polynomial factor itself.
std::vector<IntMatrix> g_values_at_one(const Params& params, unsigned long n_max);

/// Roots of X^2 + kX - 1 and the constants of G_ij^(n)(1) = c_ij gamma^n + d_ij delta^n,
/// as decimal strings at the working precision.
struct SpectralFit {
  unsigned long k = 0;
  unsigned precision = 0;
  std::string gamma;
  std::string delta;
  std::array<std::array<std::string, 2>, 2> c;
  std::array<std::array<std::string, 2>, 2> d;
  std::string residual;
  /// Largest relative deviation |G - fit| / max(1, |G|) over the checked levels.
  double residual_value = 0.0;
};

inline constexpr unsigned kDefaultPrecision = 60;

/// Integer three-term recurrence at z = 1, closed-form fit from levels 1 and 2,
/// exact root identities and growth ratio. Throws PrecisionTooLow when the fit
/// residual exceeds 10^(-precision/2).
std::pair<CheckReport, SpectralFit> g_at_one_spectral(const Params& params, long n_max,
                                                      unsigned precision = kDefaultPrecision);

}  // namespace sternpoly
