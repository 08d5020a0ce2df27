#ifndef OWDVV_TEST_UTIL_HPP
#define OWDVV_TEST_UTIL_HPP

#include <random>

#include "owdvv/laurent.hpp"

namespace owdvv_test {

using namespace owdvv;

inline CoefElement t(int k) { return CoefElement::var(k - 1); }
inline CoefElement q(long n, long d = 1) { return CoefElement(Rational(n, d)); }
inline CoefElement expof(std::initializer_list<std::pair<int, Rational>> arg) {
    ExpMonomial m;
    for (auto& [v, c] : arg) m[v - 1] = c;
    return CoefElement::exponential(m);
}

inline CoefElement random_element(std::mt19937& rng, int maxterms = 4, bool with_exp = true) {
    std::uniform_int_distribution<int> nt(1, maxterms), num(-9, 9), den(1, 6), texp(0, 3),
        echoice(0, 6), flag(0, 1);
    static const Rational ecoefs[7] = {Rational(-2), Rational(-1), Rational(-1, 2), Rational(0),
                                       Rational(1, 2), Rational(1), Rational(2)};
    CoefElement out;
    int n = nt(rng);
    for (int k = 0; k < n; ++k) {
        Term term;
        term.coef = Rational(num(rng), den(rng));
        if (term.coef.is_zero()) term.coef = Rational(1);
        term.alg = {flag(rng), flag(rng)};
        for (int v = 0; v < 3; ++v) {
            int e = texp(rng);
            if (e > 0 && flag(rng)) term.tmon[v] = e;
        }
        if (with_exp)
            for (int v = 0; v < 3; ++v) {
                Rational c = ecoefs[echoice(rng)];
                if (!c.is_zero() && flag(rng)) term.emon[v] = c;
            }
        out += CoefElement::from_term(term);
    }
    return out;
}

inline std::map<int, std::complex<double>> random_assignment(std::mt19937& rng,
                                                             double lo = -1.0, double hi = 1.0) {
    std::uniform_real_distribution<double> u(lo, hi);
    std::map<int, std::complex<double>> a;
    for (int v = 0; v < 3; ++v) a[v] = {u(rng), u(rng)};
    return a;
}

inline LaurentPoly random_laurent(std::mt19937& rng, Chart chart, int emin = -3, int emax = 4,
                                  bool with_exp = true) {
    std::uniform_int_distribution<int> e(emin, emax), nterms(1, 4);
    LaurentPoly p(chart);
    int n = nterms(rng);
    for (int k = 0; k < n; ++k)
        p += LaurentPoly::monomial(chart, e(rng), random_element(rng, 2, with_exp));
    return p;
}

}  // namespace owdvv_test

#endif
