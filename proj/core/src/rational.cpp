#include "owdvv/rational.hpp"

namespace owdvv {

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    bool invert = e < 0;
    unsigned long k = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    if (invert && is_zero()) throw std::domain_error("Rational: 0 to negative power");
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), k);
    return invert ? from_mpz(den, num) : from_mpz(num, den);
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

// Generalized binomial coefficient C(q,k) = q(q-1)...(q-k+1)/k! for rational q.
Rational binomial_coefficient(const Rational& q, unsigned long k) {
    Rational r(1);
    for (unsigned long j = 0; j < k; ++j) {
        r *= (q - Rational(static_cast<long>(j)));
        r /= Rational(static_cast<long>(j) + 1);
    }
    return r;
}

// gcd(a/b, c/d) = gcd(a,c)/lcm(b,d); gcd(x,0) = |x|.
Rational rational_gcd(const Rational& a, const Rational& b) {
    if (a.is_zero()) return b.sign() < 0 ? -b : b;
    if (b.is_zero()) return a.sign() < 0 ? -a : a;
    mpz_class gn, lm;
    mpz_gcd(gn.get_mpz_t(), a.numerator().get_mpz_t(), b.numerator().get_mpz_t());
    mpz_lcm(lm.get_mpz_t(), a.denominator().get_mpz_t(), b.denominator().get_mpz_t());
    return Rational::from_mpz(gn, lm);
}

}  // namespace owdvv
