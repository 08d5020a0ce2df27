#include "owdvv/residue.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace owdvv {

ClearedPoly clear_laurent(const LaurentPoly& p, bool keep_zero_roots) {
    ClearedPoly out;
    if (p.is_zero()) return out;
    int shift = keep_zero_roots ? std::min(0, p.min_exp()) : p.min_exp();
    std::vector<FracCoef> c(static_cast<size_t>(p.max_exp() - shift + 1));
    for (auto& [e, cc] : p.coeffs()) c[static_cast<size_t>(e - shift)] = FracCoef(cc);
    out.poly = UPoly<FracCoef>(std::move(c));
    out.shift = shift;
    return out;
}

std::vector<BoundaryPoint> boundary_points(const Chart& chart, const LaurentPoly& lambda) {
    if (chart.is_affine()) {
        if (!lambda.is_zero() && lambda.min_exp() < 0)
            return {BoundaryPoint::Infinity, BoundaryPoint::Zero};
        return {BoundaryPoint::Infinity};
    }
    return {BoundaryPoint::Zero, BoundaryPoint::Infinity};
}

FracCoef residue_at_boundary(const RatFunc& f, BoundaryPoint which) {
    if (f.is_zero()) return FracCoef();
    if (which == BoundaryPoint::Zero) {
        TruncatedSeries s = series_at_zero(f, -1);
        return s.coeff(-1);
    }
    TruncatedSeries s = series_at_infinity(f, 1);
    return -s.coeff(1);  // res_inf(f dx) = -[x^-1] f
}

namespace {

// Polynomial part of d_p lambda, keeping roots at the origin only where the
// origin belongs to the chart (affine polynomial lambda).
ClearedPoly critical_poly(const LaurentPoly& lambda) {
    LaurentPoly lp = lambda.d_dp();
    if (lp.is_zero()) throw std::domain_error("lambda is constant in the chart variable");
    bool keep_zero = lambda.chart().is_affine() && lambda.min_exp() >= 0;
    return clear_laurent(lp, keep_zero);
}

// integrand as a coefficient of d(chart var): in the exponential chart
// f dp = (f / (kappa z)) dz.
RatFunc to_chartvar_form(const RatFunc& f) {
    if (f.chart().is_affine()) return f;
    LaurentPoly kz =
        LaurentPoly::monomial(f.chart(), 1, f.chart().kappa_coef());
    return RatFunc(f.num(), f.den() * kz);
}

}  // namespace

FracCoef residue_complement(const ResidueRequest& req,
                            const std::vector<LaurentPoly>& extra_pole_factors) {
    if (req.locus != ResidueLocus::CriticalPoints)
        throw std::logic_error("residue_complement: CriticalPoints locus only");
    if (req.integrand.is_zero()) return FracCoef();

    RatFunc g = to_chartvar_form(req.integrand);
    const auto boundary = boundary_points(req.lambda.chart(), req.lambda);
    const bool zero_is_boundary =
        std::find(boundary.begin(), boundary.end(), BoundaryPoint::Zero) != boundary.end();

    // precondition: finite poles divide powers of the allowed factors
    UPoly<FracCoef> allowed = critical_poly(req.lambda).poly;
    for (auto& fac : extra_pole_factors) allowed = allowed * clear_laurent(fac, false).poly;
    ClearedPoly den = clear_laurent(g.den(), zero_is_boundary ? false : true);
    UPoly<FracCoef> d = den.poly;
    int guard = 0;
    while (d.degree() > 0) {
        UPoly<FracCoef> gc = upoly_gcd(d, allowed);
        if (gc.degree() <= 0)
            throw pole_outside_locus("residue_complement: integrand (" + req.integrand.str() +
                                     ") has a pole away from d(lambda)=0 and the chart boundary");
        d = d.divmod(gc).first;
        if (++guard > 64) throw pole_outside_locus("residue_complement: pole check diverged");
    }

    FracCoef total;
    for (auto b : boundary) total += residue_at_boundary(g, b);
    return -total;
}

FracCoef residue_trace(const LaurentPoly& numerator, const LaurentPoly& lambda) {
    const Chart& chart = lambda.chart();
    LaurentPoly lp = lambda.d_dp();
    if (lp.is_zero()) throw std::domain_error("residue_trace: lambda constant in chart variable");
    bool keep_zero = chart.is_affine() && lambda.min_exp() >= 0;
    ClearedPoly W = clear_laurent(lp, keep_zero);
    UPoly<FracCoef> Wp = W.poly.derivative();
    if (upoly_gcd(W.poly, Wp).degree() > 0)
        throw degenerate_critical_points(
            "residue_trace: degenerate critical points (d_p lambda not squarefree)");

    // residue of (N / lambda') dp at a simple root a of W:
    //   affine:      N(a) a^{-s} / W'(a)
    //   exponential: N(a) a^{-s-1} / (kappa W'(a))
    // with lambda' = W x^s and N = Nhat x^nu.
    if (numerator.is_zero()) return FracCoef();
    ClearedPoly N = clear_laurent(numerator, false);
    long e = N.shift - W.shift - (chart.is_affine() ? 0 : 1);
    UPoly<FracCoef> num = N.poly;
    UPoly<FracCoef> wfac = Wp;
    if (!chart.is_affine()) wfac = wfac.scaled(FracCoef(chart.kappa_coef()));
    if (e >= 0)
        num = num * UPoly<FracCoef>::monomial(static_cast<int>(e), FracCoef(1));
    else
        wfac = wfac * UPoly<FracCoef>::monomial(static_cast<int>(-e), FracCoef(1));
    try {
        return root_sum(num, wfac, W.poly);
    } catch (const std::domain_error&) {
        throw degenerate_critical_points(
            "residue_trace: denominator not invertible modulo the critical polynomial");
    }
}

FracCoef residue_trace_over(const RatFunc& integrand_dp, const LaurentPoly& modulus,
                            const Chart& chart) {
    // f dp = (num / den) dp, den = modulus * rest up to monomials; residue at
    // a simple root a of the modulus Q: num(a) / (Q'(a) rest(a)).
    RatFunc g = chart.is_affine() ? integrand_dp : to_chartvar_form(integrand_dp);
    if (g.is_zero()) return FracCoef();
    // clear monomial factors jointly so both sides become plain polynomials
    int m = std::min(g.num().min_exp(), std::min(g.den().min_exp(), 0));
    ClearedPoly N = clear_laurent(g.num().shifted(-m), true);
    ClearedPoly D = clear_laurent(g.den().shifted(-m), true);
    // zero roots of the modulus count only where the origin is in the chart
    ClearedPoly Q = clear_laurent(modulus, chart.is_affine());
    UPoly<FracCoef> Qp = Q.poly.derivative();
    if (upoly_gcd(Q.poly, Qp).degree() > 0)
        throw degenerate_critical_points("residue_trace_over: modulus not squarefree");
    // pad with x^j when a zero root of the modulus was cancelled against the
    // numerator (the padded root contributes nothing: the numerator gains x^j)
    UPoly<FracCoef> Np = N.poly, Dp = D.poly;
    const UPoly<FracCoef> x = UPoly<FracCoef>::monomial(1, FracCoef(1));
    for (int j = 0;; ++j) {
        auto [rest, rem] = Dp.divmod(Q.poly);
        if (rem.is_zero()) {
            try {
                return root_sum(Np, Qp * rest, Q.poly);
            } catch (const std::domain_error&) {
                throw degenerate_critical_points(
                    "residue_trace_over: shared roots between modulus and the cofactor");
            }
        }
        if (j > Q.poly.degree() + 2)
            throw std::domain_error(
                "residue_trace_over: modulus does not divide the denominator");
        Np = Np * x;
        Dp = Dp * x;
    }
}

// ---------------------------------------------------------------------------
// numeric engine

namespace {

std::vector<std::complex<double>> poly_roots(const std::vector<std::complex<double>>& c) {
    // c[k] multiplies x^k; leading coefficient nonzero expected
    int deg = static_cast<int>(c.size()) - 1;
    while (deg > 0 && std::abs(c[static_cast<size_t>(deg)]) == 0.0) --deg;
    if (deg <= 0) return {};
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(deg, deg);
    std::complex<double> lead = c[static_cast<size_t>(deg)];
    for (int k = 0; k < deg; ++k) {
        m(k, deg - 1) = -c[static_cast<size_t>(k)] / lead;
        if (k > 0) m(k, k - 1) = 1.0;
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m, false);
    std::vector<std::complex<double>> roots(static_cast<size_t>(deg));
    for (int k = 0; k < deg; ++k) roots[static_cast<size_t>(k)] = es.eigenvalues()(k);
    std::sort(roots.begin(), roots.end(), [](auto a, auto b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return roots;
}

std::vector<std::complex<double>> numeric_coeffs(const UPoly<FracCoef>& p,
                                                 const std::map<int, std::complex<double>>& t) {
    std::vector<std::complex<double>> c(static_cast<size_t>(p.degree() + 1));
    for (int k = 0; k <= p.degree(); ++k) c[static_cast<size_t>(k)] = p.coeff(k).eval(t);
    return c;
}

std::complex<double> circle_integral(const RatFunc& g, std::complex<double> center, double radius,
                                     const std::map<int, std::complex<double>>& t, int nodes) {
    // (1/2*pi*i) closed integral of g dz around the circle
    std::complex<double> acc(0, 0);
    for (int k = 0; k < nodes; ++k) {
        double th = 2.0 * M_PI * static_cast<double>(k) / nodes;
        std::complex<double> w = radius * std::complex<double>(std::cos(th), std::sin(th));
        acc += g.eval(center + w, t) * w;
    }
    return acc / static_cast<double>(nodes);
}

std::complex<double> stable_sum(std::vector<std::complex<double>> xs) {
    std::sort(xs.begin(), xs.end(),
              [](auto a, auto b) { return std::abs(a) < std::abs(b); });
    std::complex<double> s(0, 0);
    for (auto& x : xs) s += x;
    return s;
}

constexpr int kNodes = 512;

}  // namespace

std::vector<std::complex<double>> critical_points_numeric(
    const LaurentPoly& lambda, const std::map<int, std::complex<double>>& t_assignment) {
    ClearedPoly W = critical_poly(lambda);
    return poly_roots(numeric_coeffs(W.poly, t_assignment));
}

std::complex<double> residue_numeric(const ResidueRequest& req,
                                     const std::map<int, std::complex<double>>& t) {
    const Chart& chart = req.integrand.chart();
    RatFunc g = to_chartvar_form(req.integrand);

    if (req.locus == ResidueLocus::AtZero || req.locus == ResidueLocus::AtPoint) {
        std::complex<double> c = req.locus == ResidueLocus::AtZero
                                     ? std::complex<double>(0, 0)
                                     : req.point;
        // keep the circle clear of the other denominator roots
        double radius = 0.5;
        if (!g.den().is_constant()) {
            ClearedPoly D = clear_laurent(g.den(), false);
            for (auto r : poly_roots(numeric_coeffs(D.poly, t))) {
                double dist = std::abs(r - c);
                if (dist > 1e-12) radius = std::min(radius, dist / 2.0);
            }
        }
        return circle_integral(g, c, radius, t, kNodes);
    }
    if (req.locus == ResidueLocus::AtInfinity) {
        double R = 2.0;
        ClearedPoly D = clear_laurent(g.den(), false);
        for (auto r : poly_roots(numeric_coeffs(D.poly, t))) R = std::max(R, 2.0 * std::abs(r));
        return -circle_integral(g, {0, 0}, R, t, kNodes);
    }

    // critical point sum
    auto crit = critical_points_numeric(req.lambda, t);
    if (crit.empty()) return {0, 0};
    double scale = 1.0;
    for (auto r : crit) scale = std::max(scale, std::abs(r));
    const bool zero_excluded =
        !chart.is_affine() || (!req.lambda.is_zero() && req.lambda.min_exp() < 0);
    for (size_t a = 0; a < crit.size(); ++a) {
        for (size_t b = a + 1; b < crit.size(); ++b)
            if (std::abs(crit[a] - crit[b]) < 1e-6 * scale)
                throw clustered_roots("residue_numeric: clustered critical points");
        if (zero_excluded && std::abs(crit[a]) < 1e-9 * scale)
            throw clustered_roots("residue_numeric: critical point at the chart boundary");
    }
    // circles must also clear the integrand's remaining poles
    std::vector<std::complex<double>> other_poles;
    if (!g.den().is_constant()) {
        ClearedPoly D = clear_laurent(g.den(), false);
        other_poles = poly_roots(numeric_coeffs(D.poly, t));
    }
    std::vector<std::complex<double>> parts;
    for (size_t a = 0; a < crit.size(); ++a) {
        double radius = 1.0;
        for (size_t b = 0; b < crit.size(); ++b)
            if (b != a) radius = std::min(radius, std::abs(crit[a] - crit[b]) / 3.0);
        if (zero_excluded) radius = std::min(radius, std::abs(crit[a]) / 3.0);
        for (auto& pz : other_poles) {
            double dist = std::abs(pz - crit[a]);
            if (dist > 1e-7 * scale) radius = std::min(radius, dist / 3.0);
        }
        parts.push_back(circle_integral(g, crit[a], radius, t, kNodes));
    }
    return stable_sum(std::move(parts));
}

}  // namespace owdvv
