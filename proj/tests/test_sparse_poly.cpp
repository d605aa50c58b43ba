#include <random>

#include "doctest.h"
#include "sternpoly/bigint.hpp"
#include "sternpoly/json_io.hpp"
#include "sternpoly/sparse_poly.hpp"
#include "test_support.hpp"

using namespace sternpoly;
using namespace sternpoly::testing;

TEST_CASE("normalization merges, sorts and drops zero coefficients") {
  const SparsePoly p = SparsePoly::from_terms({{5, 1}, {2, 3}, {5, -1}, {0, 0}, {2, 1}});
  REQUIRE(p.term_count() == 1);
  CHECK(p.terms()[0] == Term{2, 4});
  CHECK(SparsePoly::from_terms({{3, 2}, {3, -2}}).is_zero());
  CHECK(error_kind_of([] { SparsePoly::from_terms({{-1, 1}}); }) == ErrorKind::InvalidParameter);
}

TEST_CASE("zero polynomial has no degree") {
  CHECK(SparsePoly{}.is_zero());
  CHECK(error_kind_of([] { (void)SparsePoly{}.degree(); }) == ErrorKind::InvalidParameter);
  CHECK(SparsePoly(0).is_zero());
  CHECK(SparsePoly(7).degree() == 0);
}

TEST_CASE("ring operations") {
  const SparsePoly x = poly({{1, 1}});
  const SparsePoly one(1);
  CHECK((one + x) * (one - x) == poly({{0, 1}, {2, -1}}));
  CHECK((x - x).is_zero());
  CHECK(-(one + x) == poly({{0, -1}, {1, -1}}));
  CHECK((x * SparsePoly{}).is_zero());
  CHECK(x.scaled(4, 3) == poly({{5, 3}}));
}

TEST_CASE("exponents beyond machine words") {
  const BigInt big = pow(2UL, 100UL);
  const SparsePoly p = SparsePoly::monomial(big);
  CHECK((p * p).degree() == pow(2UL, 101UL));
  CHECK(compose_power(p, big).degree() == pow(2UL, 200UL));
  CHECK(to_text(p) == "z^1267650600228229401496703205376");
}

TEST_CASE("compose_power") {
  CHECK(compose_power(ones({0, 2}), 1) == ones({0, 2}));
  CHECK(compose_power(ones({0, 2}), 4) == ones({0, 8}));
  CHECK(error_kind_of([] { compose_power(ones({0}), 0); }) == ErrorKind::InvalidParameter);

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const SparsePoly p = random_poly(rng);
    const long a = 1 + static_cast<long>(rng() % 7), b = 1 + static_cast<long>(rng() % 7);
    CHECK(compose_power(compose_power(p, a), b) == compose_power(p, a * b));
    CHECK(compose_power(p, a).term_count() == p.term_count());
  }
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const SparsePoly p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
    CHECK(p * q == q * p);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK((p - q) + q == p);
    const Rational x(static_cast<long>(rng() % 7) - 3, 5);
    CHECK((p * q).evaluate(x) == p.evaluate(x) * q.evaluate(x));
    CHECK((p + q).value_at_one() == p.value_at_one() + q.value_at_one());
  }
}

TEST_CASE("truncation and coefficient lookup") {
  const SparsePoly p = ones({0, 2, 4, 8, 10});
  CHECK(p.truncated(8) == ones({0, 2, 4}));
  CHECK(p.truncated(0).is_zero());
  CHECK(p.coefficient(8) == 1);
  CHECK(p.coefficient(9) == 0);
  CHECK(p.constant_term() == 1);
  CHECK(p.value_at_one() == 5);
  CHECK(p.evaluate(Rational(1, 2)) == Rational(1349, 1024));
}

TEST_CASE("first_difference") {
  CHECK(first_difference(ones({0, 2, 4}), ones({0, 2, 4, 8, 10})) == 8);
  CHECK(first_difference(ones({0, 2}), ones({0, 2})) == -1);
  CHECK(first_difference(ones({0, 3}), ones({0, 2})) == 2);
  CHECK(first_difference(poly({{1, 2}}), poly({{1, 3}})) == 1);
}

TEST_CASE("text rendering") {
  CHECK(to_text(SparsePoly{}) == "0");
  CHECK(to_text(ones({0, 2, 4, 8, 10})) == "1 + z^2 + z^4 + z^8 + z^10");
  CHECK(to_text(poly({{0, -1}, {1, 1}, {5, -3}})) == "-1 + z - 3*z^5");
}

TEST_CASE("term cap") {
  TermCapGuard guard(3);
  CHECK(error_kind_of([] { ones({0, 1, 2, 3}); }) == ErrorKind::CapExceeded);
  CHECK(error_kind_of([] { ones({0, 1}) * ones({0, 2}); }) == ErrorKind::CapExceeded);
  CHECK(ones({0, 1, 2}).term_count() == 3);
}

TEST_CASE("JSON form") {
  CHECK(to_json(ones({7})).dump() == R"({"terms":[["7","1"]]})");
  CHECK(to_json(SparsePoly{}).dump() == R"({"terms":[]})");

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const SparsePoly p = compose_power(random_poly(rng), pow(3UL, 40UL));
    const Json j = to_json(p);
    CHECK(sparse_poly_from_json(Json::parse(j.dump())) == p);
  }
  CHECK(error_kind_of([] { sparse_poly_from_json(Json::parse(R"({"terms":[["3","1"],["2","1"]]})")); }) ==
        ErrorKind::InvalidParameter);
  CHECK(error_kind_of([] { sparse_poly_from_json(Json::parse(R"({"terms":[["3","0"]]})")); }) ==
        ErrorKind::InvalidParameter);
  CHECK(error_kind_of([] { sparse_poly_from_json(Json::parse(R"({"terms":[[3,1]]})")); }) ==
        ErrorKind::InvalidParameter);
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(to_fraction_string(parse_rational("-3/6")) == "-1/2");
  CHECK(to_fraction_string(parse_rational("4")) == "4/1");
  CHECK(error_kind_of([] { parse_rational("1/0"); }) == ErrorKind::InvalidParameter);
  CHECK(error_kind_of([] { parse_rational("1/-2"); }) == ErrorKind::InvalidParameter);
  CHECK(error_kind_of([] { parse_rational("x/2"); }) == ErrorKind::InvalidParameter);
  CHECK(error_kind_of([] { parse_rational(""); }) == ErrorKind::InvalidParameter);
}

TEST_CASE("rational powers respect the bit cap") {
  CHECK(pow(Rational(1, 2), BigInt(10)) == Rational(1, 1024));
  CHECK(pow(Rational(-1), pow(2UL, 80UL) + 1) == Rational(-1));
  CHECK(error_kind_of([] { pow(Rational(1, 2), pow(2UL, 40UL)); }) == ErrorKind::CapExceeded);
}

TEST_CASE("multiply_sub matches separate products") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const SparsePoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng), d = random_poly(rng);
    CHECK(multiply_sub(a, b, c, d) == a * b - c * d);
  }
  const SparsePoly huge = compose_power(ones({0, 1, 3}), pow(2UL, 70UL));
  CHECK(multiply_sub(huge, huge, huge, huge).is_zero());
  CHECK(multiply_sub(huge, ones({0}), ones({0}), huge).is_zero());
  const BigInt big_coeff = pow(2UL, 61UL);
  const SparsePoly wide = poly({{0, 1}, {1, 1}}) * SparsePoly(big_coeff);
  CHECK(multiply_sub(wide, wide, ones({}), ones({})).coefficient(1) == 2 * big_coeff * big_coeff);
}

TEST_CASE("only the result of multiply_sub is held to the term cap") {
  const SparsePoly a = ones({0, 1, 2, 3, 4, 5, 6, 7});
  const SparsePoly b = ones({0, 10, 20, 30, 40, 50, 60, 70});
  TermCapGuard guard(60);
  CHECK(error_kind_of([&] { (void)(a * b); }) == ErrorKind::CapExceeded);
  CHECK(multiply_sub(a, b, b, a).is_zero());
}
