#pragma once

#include <gmpxx.h>

#include <string>

namespace aluffi {

// Exact arbitrary-precision arithmetic.  mpq canonical form is exactly the
// representation contract we need: denominator > 0 and gcd(num, den) = 1.
using Integer = mpz_class;
using Rational = mpq_class;

// num/den with canonicalization; throws DomainError on den == 0.
Rational make_rational(const Integer& num, const Integer& den);

// "n" when the denominator is 1, otherwise "n/d"; round-trips through the
// coefficient grammar.
std::string to_string(const Rational& q);
std::string to_string(const Integer& n);

bool is_integer(const Rational& q);

Rational pow(const Rational& base, unsigned long exponent);
Integer pow(const Integer& base, unsigned long exponent);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

int sign(const Rational& q);

} // namespace aluffi
