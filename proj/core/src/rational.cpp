#include "aluffi/rational.hpp"

#include "aluffi/errors.hpp"

namespace aluffi {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0)
        throw DomainError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

std::string to_string(const Integer& n) {
    return n.get_str();
}

bool is_integer(const Rational& q) {
    return q.get_den() == 1;
}

Rational pow(const Rational& base, unsigned long exponent) {
    Rational r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()), exponent);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()), exponent);
    // base was canonical, so num^e / den^e already is.
    return r;
}

Integer pow(const Integer& base, unsigned long exponent) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

Integer gcd(const Integer& a, const Integer& b) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Integer lcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

int sign(const Rational& q) {
    return mpq_sgn(q.get_mpq_t());
}

} // namespace aluffi
