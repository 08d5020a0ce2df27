#include "owdvv/series.hpp"

namespace owdvv {

namespace {

// Dense coefficient vector of a Laurent polynomial relative to its min_exp.
struct Dense {
    int shift = 0;  // poly[k] multiplies x^(shift+k)
    std::vector<FracCoef> c;
};

Dense densify(const LaurentPoly& p) {
    Dense d;
    if (p.is_zero()) return d;
    d.shift = p.min_exp();
    d.c.assign(static_cast<size_t>(p.max_exp() - p.min_exp() + 1), FracCoef());
    for (auto& [e, cc] : p.coeffs()) d.c[static_cast<size_t>(e - d.shift)] = FracCoef(cc);
    return d;
}

Dense densify_reversed(const LaurentPoly& p) {
    // coefficients of f(1/w) as a Laurent object in w
    Dense d;
    if (p.is_zero()) return d;
    d.shift = -p.max_exp();
    d.c.assign(static_cast<size_t>(p.max_exp() - p.min_exp() + 1), FracCoef());
    for (auto& [e, cc] : p.coeffs()) d.c[static_cast<size_t>(-e - d.shift)] = FracCoef(cc);
    return d;
}

// series division num/den to exponents <= order; den.c[0] != 0
TruncatedSeries divide_series(const Dense& num, const Dense& den, int order, SeriesCenter center,
                              const CoefElement& center_value) {
    TruncatedSeries out;
    out.center = center;
    out.center_value = center_value;
    out.lowest = num.shift - den.shift;
    int len = order - out.lowest + 1;
    if (len <= 0 || num.c.empty()) {
        out.coeffs.clear();
        if (num.c.empty()) out.lowest = order + 1;
        return out;
    }
    const FracCoef d0inv = den.c[0].inverse();
    out.coeffs.assign(static_cast<size_t>(len), FracCoef());
    for (int k = 0; k < len; ++k) {
        FracCoef acc = static_cast<size_t>(k) < num.c.size() ? num.c[static_cast<size_t>(k)]
                                                             : FracCoef();
        for (int j = 1; j <= k && static_cast<size_t>(j) < den.c.size(); ++j)
            acc -= den.c[static_cast<size_t>(j)] * out.coeffs[static_cast<size_t>(k - j)];
        out.coeffs[static_cast<size_t>(k)] = acc * d0inv;
    }
    return out;
}

}  // namespace

TruncatedSeries series_at_zero(const RatFunc& f, int order) {
    if (f.is_zero()) {
        TruncatedSeries s;
        s.lowest = order + 1;
        return s;
    }
    return divide_series(densify(f.num()), densify(f.den()), order, SeriesCenter::Zero,
                         CoefElement::zero());
}

TruncatedSeries series_at_infinity(const RatFunc& f, int order) {
    if (f.is_zero()) {
        TruncatedSeries s;
        s.center = SeriesCenter::Infinity;
        s.lowest = order + 1;
        return s;
    }
    return divide_series(densify_reversed(f.num()), densify_reversed(f.den()), order,
                         SeriesCenter::Infinity, CoefElement::zero());
}

TruncatedSeries series_at_point(const RatFunc& f, const CoefElement& center, int order) {
    if (!f.chart().is_affine())
        throw std::domain_error("series_at_point: affine chart only");
    if (f.is_zero()) {
        TruncatedSeries s;
        s.center = SeriesCenter::Finite;
        s.center_value = center;
        s.lowest = order + 1;
        return s;
    }
    // clear negative exponents, substitute p -> center + w via binomials
    int m = std::min(f.num().min_exp(), std::min(f.den().min_exp(), 0));
    auto shift_poly = [&](const LaurentPoly& p) {
        LaurentPoly q = p.shifted(-m);
        int deg = q.max_exp();
        std::vector<CoefElement> in(static_cast<size_t>(deg + 1));
        for (auto& [e, c] : q.coeffs()) in[static_cast<size_t>(e)] = c;
        std::vector<CoefElement> out(static_cast<size_t>(deg + 1));
        // (center + w)^e expanded: accumulate binomial contributions
        std::vector<CoefElement> cpow(static_cast<size_t>(deg + 1));
        cpow[0] = CoefElement::one();
        for (int j = 1; j <= deg; ++j) cpow[static_cast<size_t>(j)] = cpow[static_cast<size_t>(j - 1)] * center;
        for (int e = 0; e <= deg; ++e) {
            if (in[static_cast<size_t>(e)].is_zero()) continue;
            Rational binom(1);
            for (int k = 0; k <= e; ++k) {
                // coefficient of w^k: C(e,k) center^(e-k)
                out[static_cast<size_t>(k)] +=
                    in[static_cast<size_t>(e)] * cpow[static_cast<size_t>(e - k)] * binom;
                binom *= Rational(e - k);
                binom /= Rational(k + 1);
            }
        }
        return out;
    };
    std::vector<CoefElement> num_w = shift_poly(f.num());
    std::vector<CoefElement> den_w = shift_poly(f.den());
    auto to_dense = [](const std::vector<CoefElement>& v) {
        Dense d;
        size_t lo = 0;
        while (lo < v.size() && v[lo].is_zero()) ++lo;
        size_t hi = v.size();
        while (hi > lo && v[hi - 1].is_zero()) --hi;
        d.shift = static_cast<int>(lo);
        for (size_t k = lo; k < hi; ++k) d.c.push_back(FracCoef(v[k]));
        return d;
    };
    Dense dn = to_dense(num_w), dd = to_dense(den_w);
    if (dn.c.empty()) {
        TruncatedSeries s;
        s.center = SeriesCenter::Finite;
        s.center_value = center;
        s.lowest = order + 1;
        return s;
    }
    if (dn.shift > 0 && dd.shift > 0)
        throw unreduced_input(
            "series_at_point: center is a common zero of numerator and denominator of (" +
            f.num().str() + ")/(" + f.den().str() + ")");
    return divide_series(dn, dd, order, SeriesCenter::Finite, center);
}

}  // namespace owdvv
