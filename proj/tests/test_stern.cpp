#include "doctest.h"
#include "sternpoly/stern.hpp"
#include "test_support.hpp"

using namespace sternpoly;
using namespace sternpoly::testing;

TEST_CASE("params reject t < 2 and k < 1") {
  CHECK(error_kind_of([] { Params(1, 1); }) == ErrorKind::InvalidParameter);
  CHECK(error_kind_of([] { Params(2, 0); }) == ErrorKind::InvalidParameter);
  CHECK(Params(2, 3).block() == 8);
  CHECK(Params(3, 2).level_scale(2) == 81);
}

TEST_CASE("stern_poly examples") {
  CHECK(stern_poly(3, 0).is_zero());
  CHECK(stern_poly(2, 1) == ones({0}));
  CHECK(stern_poly(2, 4) == ones({3}));
  CHECK(stern_poly(2, 11) == ones({0, 2, 4, 8, 10}));
  CHECK(stern_poly(2, 5) == ones({0, 2, 4}));
  CHECK(error_kind_of([] { stern_poly(1, 3); }) == ErrorKind::InvalidParameter);
  CHECK(error_kind_of([] { stern_poly(2, -1); }) == ErrorKind::InvalidParameter);
}

TEST_CASE("stern_poly obeys its defining recurrences") {
  for (long t : {2, 3, 5})
    for (long n = 1; n < 150; ++n) {
      CHECK(stern_poly(t, 2 * n) == compose_power(stern_poly(t, n), t).scaled(1));
      CHECK(stern_poly(t, 2 * n + 1) == compose_power(stern_poly(t, n + 1) + stern_poly(t, n), t));
    }
}

TEST_CASE("composition with z^2 along the even branch") {
  // a_2(10; z) = z a_2(5; z^2)
  const SparsePoly doubled = compose_power(stern_poly(2, 5), 2);
  CHECK(doubled.term_count() == 3);
  CHECK(doubled.scaled(1) == stern_poly(2, 10));
}

TEST_CASE("diatomic sequence") {
  const long expected[] = {0, 1, 1, 2, 1, 3, 2, 3, 1, 4, 3, 5, 2, 5, 3, 4, 1, 5, 4, 7, 3};
  for (long n = 0; n <= 20; ++n) CHECK(stern_value_at_one(2, n) == expected[n]);
  CHECK(stern_value_at_one(2, 11) == 5);
  for (unsigned long k = 1; k <= 6; ++k) {
    CHECK(stern_value_at_one(3, pow(2UL, static_cast<unsigned long>(k))) == 1);
    CHECK(stern_value_at_one(3, pow(2UL, static_cast<unsigned long>(k)) - 1) == k);
  }
  CHECK(error_kind_of([] { stern_value_at_one(1, 3); }) == ErrorKind::InvalidParameter);
}

TEST_CASE("0/1 coefficients and term counts match the diatomic values") {
  for (long t : {2, 3})
    for (long n = 0; n <= 300; ++n) {
      const SparsePoly p = stern_poly(t, n);
      CHECK(BigInt(static_cast<unsigned long>(p.term_count())) == stern_value_at_one(t, n));
      for (const auto& term : p.terms()) CHECK(term.coeff == 1);
    }
}

TEST_CASE("truncated construction agrees with truncating the full polynomial") {
  for (long t : {2, 3})
    for (long n : {11L, 21L, 171L, 341L, 1365L, 5461L})
      for (long order : {1L, 5L, 17L, 100L}) CHECK(stern_poly(t, n, BigInt(order)) == stern_poly(t, n).truncated(order));
}

TEST_CASE("alpha") {
  CHECK(alpha(1, 0).value == 0);
  CHECK(alpha(1, 1).value == 1);
  CHECK(alpha(1, 5).value == 11);
  CHECK(alpha(2, 3).value == 13);
  for (long k = 1; k <= 5; ++k)
    for (long n = 0; n <= 12; ++n) {
      const BigInt sign = n % 2 == 0 ? 1 : -1;
      CHECK(alpha(k, n).value * (pow(2UL, static_cast<unsigned long>(k)) + 1) == pow(2UL, static_cast<unsigned long>(k * n)) - sign);
    }
  CHECK(error_kind_of([] { alpha(0, 1); }) == ErrorKind::InvalidParameter);
  CHECK(error_kind_of([] { alpha(1, -1); }) == ErrorKind::InvalidParameter);
}

TEST_CASE("closed forms") {
  CHECK(closed_form_2k(Params(2, 1)) == ones({1}));
  CHECK(closed_form_2k_minus_1(Params(2, 1)) == ones({0}));
  for (long t = 2; t <= 5; ++t) {
    CHECK(closed_form_2k(Params(t, 2)) == ones({t + 1}));
    CHECK(closed_form_2k_minus_1(Params(t, 2)) == ones({0, t}));
  }
  CHECK(closed_form_2k(Params(2, 3)) == ones({7}));
  CHECK(closed_form_2k_minus_1(Params(2, 3)) == ones({0, 4, 6}));

  for (long t : {2, 3, 4})
    for (long k = 1; k <= 5; ++k) {
      const Params params(t, k);
      CHECK(stern_poly(t, pow(2UL, static_cast<unsigned long>(k))) == closed_form_2k(params));
      CHECK(stern_poly(t, pow(2UL, static_cast<unsigned long>(k)) - 1) == closed_form_2k_minus_1(params));
      CHECK(closed_form_2k_minus_1(params).term_count() == static_cast<std::size_t>(k));
      CHECK(verify_closed_forms(params).pass());
    }
}

TEST_CASE("three-term recurrence") {
  // n = 3 with t = 2, k = 1: a_2(5; z) = a_2(3; z^2) + z^2 a_2(1; z^4).
  CHECK(stern_poly(2, 5) == compose_power(stern_poly(2, 3), 2) + ones({2}) * compose_power(stern_poly(2, 1), 4));

  for (long t : {2, 3})
    for (long k : {1, 2, 3}) {
      const CheckReport report = verify_three_term(Params(t, k), 6);
      CHECK(report.checks().size() == 5);
      CHECK_MESSAGE(report.pass(), report.to_text());
    }
  CHECK(error_kind_of([] { verify_three_term(Params(2, 1), 1); }) == ErrorKind::InvalidParameter);
}

TEST_CASE("term cap aborts large constructions") {
  TermCapGuard guard(2);
  CHECK(error_kind_of([] { stern_poly(2, 11); }) == ErrorKind::CapExceeded);
  CHECK(error_kind_of([] { verify_three_term(Params(2, 1), 6); }) == ErrorKind::CapExceeded);
}
