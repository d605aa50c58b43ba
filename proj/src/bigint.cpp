#include "sternpoly/bigint.hpp"

#include <algorithm>
#include <atomic>
#include <string>

#include "sternpoly/error.hpp"

namespace sternpoly {

namespace {
std::atomic<std::size_t> g_bit_cap{std::size_t{1} << 24};

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}
}  // namespace

std::string to_decimal(const BigInt& value) { return value.get_str(10); }

std::string to_fraction_string(const Rational& value) {
  Rational v(value);
  v.canonicalize();
  return v.get_num().get_str(10) + "/" + v.get_den().get_str(10);
}

BigInt parse_bigint(std::string_view text) {
  if (!is_integer_literal(text)) fail(ErrorKind::InvalidParameter, "not an integer: '" + std::string(text) + "'");
  std::string s(text);
  if (s[0] == '+') s.erase(0, 1);
  return BigInt(s, 10);
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  BigInt num = parse_bigint(text.substr(0, slash));
  BigInt den = 1;
  if (slash != std::string_view::npos) {
    auto den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
      fail(ErrorKind::InvalidParameter, "signed denominator in '" + std::string(text) + "'");
    den = parse_bigint(den_text);
  }
  if (den == 0) fail(ErrorKind::InvalidParameter, "zero denominator in '" + std::string(text) + "'");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

BigInt pow(unsigned long base, unsigned long exponent) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exponent);
  return out;
}

unsigned long to_ulong(const BigInt& value, std::string_view what) {
  if (sgn(value) < 0 || !value.fits_ulong_p())
    fail(ErrorKind::CapExceeded, std::string(what) + " does not fit a machine word: " + to_decimal(value));
  return value.get_ui();
}

std::size_t bit_cap() noexcept { return g_bit_cap.load(std::memory_order_relaxed); }
void set_bit_cap(std::size_t bits) noexcept { g_bit_cap.store(bits, std::memory_order_relaxed); }

Rational pow(const Rational& base, const BigInt& exponent) {
  if (sgn(exponent) < 0) fail(ErrorKind::InvalidParameter, "negative exponent");
  if (exponent == 0) return Rational(1);
  if (base == 0) return Rational(0);
  const std::size_t size = std::max(mpz_sizeinbase(base.get_num_mpz_t(), 2), mpz_sizeinbase(base.get_den_mpz_t(), 2));
  if (size == 1) return Rational(exponent % 2 == 0 ? 1 : sgn(base));
  const BigInt estimate = BigInt(exponent) * (size - 1);
  if (estimate > BigInt(static_cast<unsigned long>(bit_cap())))
    fail(ErrorKind::CapExceeded, "power of size ~" + to_decimal(estimate) + " bits exceeds the bit cap");
  const unsigned long e = exponent.get_ui();
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), e);
  out.canonicalize();
  return out;
}

}  // namespace sternpoly
