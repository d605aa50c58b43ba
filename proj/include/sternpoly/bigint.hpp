#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace sternpoly {

using BigInt = mpz_class;
using Rational = mpq_class;

std::string to_decimal(const BigInt& value);

/// Lowest-terms "p/q" with the sign carried by the numerator.
std::string to_fraction_string(const Rational& value);

/// Accepts "p/q" or a bare integer "p". Throws InvalidParameter on malformed
/// input or a zero denominator.
Rational parse_rational(std::string_view text);
BigInt parse_bigint(std::string_view text);

BigInt pow(unsigned long base, unsigned long exponent);

/// Narrow a nonnegative BigInt to unsigned long, or throw CapExceeded naming `what`.
unsigned long to_ulong(const BigInt& value, std::string_view what);

/// Upper bound on the bit length of numbers produced by exact evaluation
/// (powers of rationals, 2^{D_n} scalings). Default 2^24 bits.
std::size_t bit_cap() noexcept;
void set_bit_cap(std::size_t bits) noexcept;

/// x^e for a rational x, refusing results whose size estimate exceeds bit_cap().
Rational pow(const Rational& base, const BigInt& exponent);

}  // namespace sternpoly
