#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "owdvv/series.hpp"
#include "test_util.hpp"

using namespace owdvv;
using namespace owdvv_test;

namespace {

const Chart kAffine = Chart::affine();
const Chart kZi = Chart::exponential(Kappa::I);
const Chart kZ1 = Chart::exponential(Kappa::One);

LaurentPoly mono(Chart c, int e, const CoefElement& v) { return LaurentPoly::monomial(c, e, v); }

// lambda = p^3 + t^2 p + t^1
LaurentPoly cubic() {
    LaurentPoly l(kAffine);
    l.set_coeff(3, q(1));
    l.set_coeff(1, t(2));
    l.set_coeff(0, t(1));
    return l;
}

// trig1 in the z = e^{ip} chart: t1 - e^{t2/2} (z + 1/z)
LaurentPoly trig1() {
    LaurentPoly l(kZi);
    CoefElement e2 = expof({{2, Rational(1, 2)}});
    l.set_coeff(0, t(1));
    l.set_coeff(1, -e2);
    l.set_coeff(-1, -e2);
    return l;
}

// trig2 in the z = e^{p} chart: z^2 + sqrt2 t2 z + t1 + e^{t3} z^-1 / sqrt2
LaurentPoly trig2() {
    LaurentPoly l(kZ1);
    l.set_coeff(2, q(1));
    l.set_coeff(1, CoefElement::sqrt2() * t(2));
    l.set_coeff(0, t(1));
    l.set_coeff(-1, expof({{3, Rational(1)}}) * CoefElement::sqrt2() * Rational(1, 2));
    return l;
}

// schoolbook long division of rational functions at infinity, used as the
// independent oracle for series_at_infinity on polynomial inputs
std::map<int, CoefElement> long_division_at_infinity(const LaurentPoly& num,
                                                     const LaurentPoly& den, int order) {
    std::map<int, CoefElement> out;
    LaurentPoly rem = num;
    CoefElement dl = den.coeff(den.max_exp());
    auto dli = dl.invert();
    REQUIRE(dli.has_value());
    while (!rem.is_zero() && -rem.max_exp() + den.max_exp() <= order) {
        int k = rem.max_exp() - den.max_exp();
        CoefElement c = rem.coeff(rem.max_exp()) * *dli;
        out[-k] = c;  // term c x^k = c w^-k
        rem -= den.shifted(k) * c;
    }
    return out;
}

}  // namespace

TEST_CASE("d_dp: spec examples") {
    LaurentPoly l = cubic();
    LaurentPoly d = l.d_dp();
    CHECK(d.coeff(2) == q(3));
    CHECK(d.coeff(1).is_zero());
    CHECK(d.coeff(0) == t(2));

    LaurentPoly zz = mono(kZi, 1, q(1)) + mono(kZi, -1, q(1));
    LaurentPoly dz = zz.d_dp();
    CHECK(dz == (mono(kZi, 1, q(1)) - mono(kZi, -1, q(1))) * CoefElement::i());

    LaurentPoly d2 = trig2().d_dp();
    CHECK(d2.coeff(2) == q(2));
    CHECK(d2.coeff(1) == CoefElement::sqrt2() * t(2));
    CHECK(d2.coeff(0).is_zero());
    CHECK(d2.coeff(-1) == -(expof({{3, Rational(1)}}) * CoefElement::sqrt2() * Rational(1, 2)));
}

TEST_CASE("derive_t: spec examples") {
    CHECK(trig1().derive_t(1) ==
          (mono(kZi, 1, q(1)) + mono(kZi, -1, q(1))) * (expof({{2, Rational(1, 2)}}) * Rational(-1, 2)));
    CHECK(cubic().derive_t(0) == LaurentPoly::constant(kAffine, q(1)));
    CHECK(trig2().derive_t(2) ==
          mono(kZ1, -1, expof({{3, Rational(1)}}) * CoefElement::sqrt2() * Rational(1, 2)));
}

TEST_CASE("primitive_in_p: spec examples") {
    LaurentPoly f(kAffine);
    f.set_coeff(2, q(1));
    f.set_coeff(0, t(1));
    Primitive pr = primitive_in_p(f);
    CHECK(pr.log_coefficient.is_zero());
    CHECK(pr.laurent.coeff(3) == q(1, 3));
    CHECK(pr.laurent.coeff(1) == t(1));

    Primitive tr = primitive_in_p(trig1());
    CHECK(tr.log_coefficient == t(1));
    CoefElement ie = CoefElement::i() * expof({{2, Rational(1, 2)}});
    CHECK(tr.laurent.coeff(1) == ie);
    CHECK(tr.laurent.coeff(-1) == -ie);
    CHECK(tr.laurent.pretty_str() == "-2*exp(1/2*t2)*sin(p)");

    Primitive z = primitive_in_p(LaurentPoly(kAffine));
    CHECK(z.laurent.is_zero());
    CHECK(z.log_coefficient.is_zero());
}

TEST_CASE("series_at: spec examples") {
    // 1/(p - t1) at infinity
    LaurentPoly den(kAffine);
    den.set_coeff(1, q(1));
    den.set_coeff(0, -t(1));
    RatFunc f(LaurentPoly::constant(kAffine, q(1)), den);
    TruncatedSeries s = series_at_infinity(f, 3);
    CHECK(s.coeff(1) == FracCoef(q(1)));
    CHECK(s.coeff(2) == FracCoef(t(1)));
    CHECK(s.coeff(3) == FracCoef(t(1) * t(1)));

    // p^2/(3p^2 + t2) at infinity vs the long-division oracle
    LaurentPoly num2 = mono(kAffine, 2, q(1));
    LaurentPoly den2 = mono(kAffine, 2, q(3)) + LaurentPoly::constant(kAffine, t(2));
    RatFunc g(num2, den2);
    TruncatedSeries sg = series_at_infinity(g, 4);
    auto oracle = long_division_at_infinity(num2, den2, 4);
    CHECK(sg.coeff(0) == FracCoef(q(1, 3)));
    CHECK(sg.coeff(1).is_zero());
    CHECK(sg.coeff(2) == FracCoef(-t(2) * Rational(1, 9)));
    CHECK(sg.coeff(3).is_zero());
    for (auto& [e, c] : oracle) CHECK(sg.coeff(e) == FracCoef(c));

    // 1/z at zero
    RatFunc h(LaurentPoly::constant(kZi, q(1)), mono(kZi, 1, q(1)));
    TruncatedSeries sh = series_at_zero(h, 0);
    CHECK(sh.coeff(-1) == FracCoef(q(1)));
    CHECK(sh.coeff(0).is_zero());
}

TEST_CASE("series_at_point and the unreduced-input error") {
    // 1/(p^2 + t1) at p = 1
    LaurentPoly den(kAffine);
    den.set_coeff(2, q(1));
    den.set_coeff(0, t(1));
    RatFunc f(LaurentPoly::constant(kAffine, q(1)), den);
    TruncatedSeries s = series_at_point(f, q(1), 1);
    FracCoef c0 = s.coeff(0);
    CHECK(c0 == FracCoef(q(1), t(1) + q(1)));
    CHECK(s.coeff(1) == FracCoef(q(-2), (t(1) + q(1)) * (t(1) + q(1))));

    // (p-1)/(p-1) entered unreduced: common zero at the center
    LaurentPoly lin(kAffine);
    lin.set_coeff(1, q(1));
    lin.set_coeff(0, q(-1));
    // same polynomial twice but scaled so monomial/content reduction keeps both
    RatFunc u(lin * (lin + LaurentPoly::constant(kAffine, t(1))), lin);
    CHECK_THROWS_AS(series_at_point(u, q(1), 2), unreduced_input);
}

TEST_CASE("ratfunc arithmetic: spec examples") {
    LaurentPoly lp = cubic().d_dp();
    RatFunc inv(LaurentPoly::constant(kAffine, q(1)), lp);
    CHECK(inv * RatFunc(lp) == RatFunc(LaurentPoly::constant(kAffine, q(1))));

    RatFunc z(LaurentPoly(kAffine), mono(kAffine, 1, q(2)));
    CHECK(z.is_zero());

    RatFunc a(mono(kAffine, 1, q(1)), lp);
    CHECK((a + (-a)).is_zero());
    CHECK_THROWS_AS(a / z, division_by_zero);
}

TEST_CASE("property: primitive round-trip") {
    std::mt19937 rng(42);
    for (int iter = 0; iter < 40; ++iter) {
        Chart chart = iter % 3 == 0 ? kAffine : (iter % 3 == 1 ? kZi : kZ1);
        LaurentPoly f = random_laurent(rng, chart);
        Primitive pr = primitive_in_p(f);
        LaurentPoly back = pr.laurent.d_dp();
        if (chart.is_affine())
            back += mono(chart, -1, pr.log_coefficient);
        else
            back += LaurentPoly::constant(chart, pr.log_coefficient);
        CHECK(back == f);
    }
}

TEST_CASE("property: derive_t and d_dp commute") {
    std::mt19937 rng(43);
    for (int iter = 0; iter < 40; ++iter) {
        Chart chart = iter % 2 ? kAffine : kZ1;
        LaurentPoly f = random_laurent(rng, chart);
        for (int j = 0; j < 3; ++j) CHECK(f.d_dp().derive_t(j) == f.derive_t(j).d_dp());
    }
}

TEST_CASE("property: series at infinity matches numeric evaluation far out") {
    std::mt19937 rng(44);
    for (int iter = 0; iter < 25; ++iter) {
        LaurentPoly num = random_laurent(rng, kAffine, 0, 3, false);
        LaurentPoly den = random_laurent(rng, kAffine, 0, 3, false);
        if (den.is_zero()) continue;
        den.set_coeff(den.max_exp() + 1, q(1));  // keep the leading coefficient invertible
        RatFunc f(num, den);
        TruncatedSeries s = series_at_infinity(f, 12);
        auto assign = random_assignment(rng);
        std::complex<double> p(1e3, 0.37e3);
        std::complex<double> direct = f.eval(p, assign), acc(0, 0);
        for (int e = s.lowest; e <= s.highest(); ++e) acc += s.coeff(e).eval(assign) * std::pow(p, -e);
        CHECK(std::abs(direct - acc) <= 1e-9 * std::max(1.0, std::abs(direct)));
    }
}

TEST_CASE("property: ratfunc equality agrees with numeric sampling") {
    std::mt19937 rng(45);
    for (int iter = 0; iter < 25; ++iter) {
        LaurentPoly a = random_laurent(rng, kAffine, -2, 3), b = random_laurent(rng, kAffine, -2, 3);
        LaurentPoly c = random_laurent(rng, kAffine, -2, 3);
        if (b.is_zero() || c.is_zero()) continue;
        RatFunc f(a, b);
        RatFunc g(a * c, b * c);  // same function, different representative
        CHECK(f == g);
        auto assign = random_assignment(rng);
        for (int k = 0; k < 5; ++k) {
            std::uniform_real_distribution<double> u(0.5, 2.0);
            std::complex<double> p(u(rng), u(rng));
            std::complex<double> vf = f.eval(p, assign), vg = g.eval(p, assign);
            CHECK(std::abs(vf - vg) <= 1e-9 * std::max(1.0, std::abs(vf)));
        }
        if (!f.is_zero()) CHECK(f != f + RatFunc(LaurentPoly::constant(kAffine, q(1))));
    }
}

TEST_CASE("p-free detection and constant extraction") {
    // (p^2 + t2/3) / (3 p^2 + t2) = 1/3
    LaurentPoly num(kAffine), den(kAffine);
    num.set_coeff(2, q(1));
    num.set_coeff(0, t(2) * Rational(1, 3));
    den.set_coeff(2, q(3));
    den.set_coeff(0, t(2));
    RatFunc f(num, den);
    CHECK(f.is_p_free());
    CHECK(f.constant_value() == FracCoef(q(1, 3)));
    CHECK(f.constant_value().to_coef().value() == q(1, 3));

    RatFunc g(den, num);
    CHECK(g.is_p_free());
    CHECK(g.constant_value() == FracCoef(q(3)));

    LaurentPoly num2 = num;
    num2.set_coeff(1, t(1));
    CHECK(!RatFunc(num2, den).is_p_free());
}

TEST_CASE("pretty rendering in exponential charts") {
    CHECK(trig1().pretty_str() == "t1 - 2*exp(1/2*t2)*cos(p)");
    CHECK(trig2().pretty_str() ==
          "1/2*sqrt2*exp(t3 - p) + t1 + sqrt2*t2*exp(p) + exp(2*p)");
}
