#include "rational.hpp"

#include "error.hpp"

#include <cctype>

namespace qflag {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  const std::string_view num = slash == std::string_view::npos ? s : s.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-')
    throw InvalidArgument("not a rational number: '" + std::string(text) + "'");
  Integer n(std::string(num.front() == '+' ? num.substr(1) : num));
  Integer d(std::string(den.front() == '+' ? den.substr(1) : den));
  if (d == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_string(const Integer& z) { return z.get_str(); }

Integer require_integer(const Rational& r, std::string_view what) {
  if (r.get_den() != 1)
    throw DomainError(std::string(what) + " is not an integer: " + r.get_str());
  return r.get_num();
}

Rational pow(const Rational& r, long e) {
  if (e < 0) {
    if (r == 0) throw DomainError("zero raised to a negative power");
    Rational inv = 1 / r;
    return pow(inv, -e);
  }
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), r.get_num().get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), r.get_den().get_mpz_t(), static_cast<unsigned long>(e));
  Rational out(n, d);
  out.canonicalize();
  return out;
}

}  // namespace qflag
