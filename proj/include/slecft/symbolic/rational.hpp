#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace slecft::sym {

// mpq_class keeps its value canonical (lowest terms, positive denominator)
// as long as every construction goes through the helpers below.
using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p", "p/q" and "-p/q". Throws std::invalid_argument on junk or q == 0.
Rational parse_rational(std::string_view text);

// Always "num/den", e.g. "3/1", "-1/2".
std::string to_canonical(const Rational& r);

// "3", "-1/2" (denominator dropped when it is 1).
std::string to_short(const Rational& r);

Rational make_rational(long num, long den = 1);

double to_double(const Rational& r);

bool is_integer(const Rational& r);

}  // namespace slecft::sym
