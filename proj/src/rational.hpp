#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qflag {

using Integer = mpz_class;
using Rational = mpq_class;

// Parses "p", "p/q" or "-p/q" (whitespace trimmed). Throws InvalidArgument.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

// Integer value of r; throws DomainError when r has a nontrivial denominator.
Integer require_integer(const Rational& r, std::string_view what);

// r^e for integer e (negative allowed when r != 0).
Rational pow(const Rational& r, long e);

}  // namespace qflag
