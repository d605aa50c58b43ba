#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sternpoly/bigint.hpp"
#include "sternpoly/report.hpp"
#include "sternpoly/sparse_poly.hpp"
#include "sternpoly/stern.hpp"

namespace sternpoly {

/// Level-n partial numerator a_t(2^k; z^(t^(nk))) and denominator a_t(2^k-1; z^(t^(nk))).
struct CFTerm {
  SparsePoly a;
  SparsePoly b;
  unsigned long level;
};

struct CFExpansion {
  SparsePoly b0;
  std::vector<CFTerm> terms;
};

/// b_0 = a_t(2^k-1; z) and the terms of levels 1..depth.
CFExpansion cf_terms(const Params& params, std::size_t depth);

template <class T>
struct Convergent {
  T p;
  T q;
};

using ConvergentPair = Convergent<SparsePoly>;

/// p_m = b_m p_{m-1} + a_m p_{m-2}, q_m likewise, seeded with
/// (p_{-1}, q_{-1}) = (1, 0) and (p_0, q_0) = (b_0, 1). Entry m of the result is
/// the m-th convergent; the result has size numerators.size() + 1.
template <class T>
std::vector<Convergent<T>> convergent_recurrence(const T& b0, std::span<const T> numerators,
                                                 std::span<const T> denominators) {
  std::vector<Convergent<T>> out;
  out.reserve(numerators.size() + 1);
  T p_prev(1), q_prev(0);
  T p(b0), q(1);
  out.push_back({p, q});
  for (std::size_t m = 0; m < numerators.size(); ++m) {
    T p_next = denominators[m] * p + numerators[m] * p_prev;
    T q_next = denominators[m] * q + numerators[m] * q_prev;
    p_prev = std::move(p);
    q_prev = std::move(q);
    p = std::move(p_next);
    q = std::move(q_next);
    out.push_back({p, q});
  }
  return out;
}

/// p_m / q_m for each convergent; DivisionByZero names the first vanishing q_m.
std::vector<Rational> convergent_values(const std::vector<Convergent<Rational>>& conv);

std::vector<ConvergentPair> convergents(const SparsePoly& b0, std::span<const CFTerm> terms);

/// For m <= n_max - 2: p_m a_t(alpha_{m+1}; z^(t^k)) = q_m a_t(alpha_{m+2}; z), the
/// strong form p_m = a_t(alpha_{m+2}; z), q_m = a_t(alpha_{m+1}; z^(t^k)), and the
/// convergent determinant p_m q_{m-1} - p_{m-1} q_m = (-1)^(m-1) a_1 ... a_m.
CheckReport verify_cf1(const Params& params, long n_max);

struct DegreeLedger {
  std::vector<BigInt> d;       ///< d_n = t^(nk) (t^k - 1) / (t - 1), n = 1..n_max
  std::vector<BigInt> D;       ///< D_n = d_n - d_{n-1} + ... + (-1)^(n-1) d_1
  std::vector<BigInt> margin;  ///< D_n - deg a_t(2^k-1; z^(t^(nk)))
};

/// Throws InternalInvariant if any margin is not positive.
DegreeLedger degree_ledger(const Params& params, std::size_t n_max);

CheckReport verify_degree_ledger(const Params& params, std::size_t n_max);

struct RegularTerm {
  BigInt numerator;
  BigInt denominator;
};

/// The continued fraction at z = 1/2 after scaling level n by 2^(D_n):
/// every partial numerator becomes 1 and every partial denominator a positive integer.
struct RegularCF {
  Rational b0;
  std::vector<RegularTerm> terms;
};

RegularCF regular_cf_transform(const Params& params, std::size_t depth);

/// Numerators equal to 1, positive integer denominators, and equal convergent
/// values before and after the transform at every depth.
CheckReport verify_regular_cf(const Params& params, std::size_t depth);

/// Largest depth <= max_depth whose 2^(D_n) scaling fits the bit cap.
std::size_t regular_depth_within_cap(const Params& params, std::size_t max_depth);

/// Exact convergents m = 0..depth of the infinite continued fraction at alpha.
std::vector<Rational> eval_cf_at_rational(const Params& params, const Rational& alpha, std::size_t depth);

/// The depth-`depth` convergent at alpha lies within `tolerance` of the
/// certified enclosure of H_k(alpha) / H_k(alpha^(t^k)) built at `order`.
CheckReport verify_cf_against_series(const Params& params, const Rational& alpha, std::size_t depth,
                                     std::size_t order, const Rational& tolerance);

}  // namespace sternpoly
