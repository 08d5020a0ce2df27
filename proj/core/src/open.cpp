#include "owdvv/open.hpp"

namespace owdvv {

LaurentPoly OmegaFunction::d_dp() const {
    LaurentPoly r = laurent.d_dp();
    r += LaurentPoly::constant(chart, p_coefficient);
    return r;
}

LaurentPoly OmegaFunction::d2_t(int a, int b) const {
    CoefElement plin = p_coefficient.derive(a).derive(b);
    if (!plin.is_zero())
        throw unsupported_omega("Omega has a p-linear coefficient nonlinear in t");
    LaurentPoly r = laurent.derive_t(a).derive_t(b);
    r += LaurentPoly::constant(chart, tfun.derive(a).derive(b));
    return r;
}

LaurentPoly OmegaFunction::dp_dt(int b) const { return d_dp().derive_t(b); }

LaurentPoly OmegaFunction::d2_pp() const { return d_dp().d_dp(); }

std::string OmegaFunction::str(const std::vector<std::string>& names) const {
    std::string s = laurent.str(names);
    if (!p_coefficient.is_zero()) {
        std::string c = p_coefficient.str(names);
        bool paren = c.find(" + ") != std::string::npos || c.find(" - ") != std::string::npos;
        s += " + " + (paren ? "(" + c + ")" : c) + "*p";
    }
    if (!tfun.is_zero()) s += " + " + tfun.str(names);
    return s;
}

std::string OmegaFunction::pretty(const std::vector<std::string>& names) const {
    std::string s = laurent.pretty_str(names);
    if (!p_coefficient.is_zero()) {
        std::string c = p_coefficient.str(names);
        bool paren = c.find(" + ") != std::string::npos || c.find(" - ") != std::string::npos;
        std::string term = (paren ? "(" + c + ")" : c) + "*p";
        s = (s == "0") ? term : s + " + " + term;
    }
    if (!tfun.is_zero()) s += " + " + tfun.str(names);
    return s;
}

void validate_omega(const OmegaFunction& omega) {
    for (auto& term : omega.p_coefficient.terms()) {
        long deg = 0;
        for (auto& [v, e] : term.tmon) deg += e;
        if (deg > 1 || !term.emon.empty())
            throw unsupported_omega(
                "Omega's p coefficient must be at most linear in t for the open checks");
    }
}

// ---------------------------------------------------------------------------

RatMatrix alcolado_rhs(const SuperpotentialSpec& spec, const FracTensor3& c_raised) {
    const size_t n = static_cast<size_t>(spec.n());
    std::vector<LaurentPoly> dl;
    for (size_t j = 0; j < n; ++j) dl.push_back(spec.lambda.derive_t(static_cast<int>(j)));
    RatFunc lp{spec.lambda.d_dp()};
    RatMatrix rhs(n, std::vector<RatFunc>(n));
    for (size_t a = 0; a < n; ++a)
        for (size_t b = a; b < n; ++b) {
            RatFunc num{dl[a] * dl[b]};
            for (size_t g = 0; g < n; ++g) {
                if (c_raised[g][a][b].is_zero()) continue;
                num -= RatFunc::from_frac(spec.chart, c_raised[g][a][b]) * RatFunc(dl[g]);
            }
            RatFunc v = num / lp;
            rhs[a][b] = v;
            rhs[b][a] = v;
        }
    return rhs;
}

CheckReport check_main_identity(const SuperpotentialSpec& spec, const FracTensor3& c_raised) {
    CheckReport rep{"main_identity", true, {}};
    RatMatrix rhs = alcolado_rhs(spec, c_raised);
    const size_t n = rhs.size();
    for (size_t a = 0; a < n; ++a)
        for (size_t b = a; b < n; ++b) {
            RatFunc residual =
                RatFunc(spec.lambda.derive_t(static_cast<int>(a)).derive_t(static_cast<int>(b))) -
                rhs[a][b].d_dp();
            if (!residual.is_zero()) {
                rep.passed = false;
                rep.issues.push_back({{static_cast<int>(a) + 1, static_cast<int>(b) + 1},
                                      residual.str(spec.varnames)});
            }
        }
    return rep;
}

namespace {

// d_a d_b Lambda as a Laurent polynomial; the log coefficient must have a
// vanishing second derivative for this to stay in the Laurent algebra.
LaurentPoly lambda_primitive_d2(const Primitive& prim, int a, int b) {
    CoefElement logc2 = prim.log_coefficient.derive(a).derive(b);
    if (!logc2.is_zero())
        throw unsupported_omega(
            "the primitive's p/log coefficient is nonlinear in t; integration constants "
            "unsupported for this input");
    return prim.laurent.derive_t(a).derive_t(b);
}

}  // namespace

IntegrationConstants integration_constants(const SuperpotentialSpec& spec, const RatMatrix& rhs) {
    const size_t n = rhs.size();
    Primitive prim = primitive_in_p(spec.lambda);
    IntegrationConstants out;
    out.delta.assign(n, std::vector<FracCoef>(n));
    for (size_t a = 0; a < n; ++a)
        for (size_t b = a; b < n; ++b) {
            RatFunc d = rhs[a][b] -
                        RatFunc(lambda_primitive_d2(prim, static_cast<int>(a), static_cast<int>(b)));
            if (!d.is_p_free())
                throw p_freeness_violation(
                    "integration constant Delta_" + std::to_string(a + 1) +
                    std::to_string(b + 1) +
                    " depends on the chart variable (eta/c inconsistency): " +
                    d.str(spec.varnames));
            FracCoef v = d.constant_value();
            out.delta[a][b] = v;
            out.delta[b][a] = v;
        }
    // integrability of the Hessian candidate
    for (size_t g = 0; g < n; ++g)
        for (size_t a = g + 1; a < n; ++a)
            for (size_t b = 0; b < n; ++b) {
                FracCoef diff = out.delta[a][b].derive(static_cast<int>(g)) -
                                out.delta[g][b].derive(static_cast<int>(a));
                if (!diff.is_zero())
                    throw integrability_violation("Delta is not integrable at (" +
                                                  std::to_string(g + 1) + "," +
                                                  std::to_string(a + 1) + "," +
                                                  std::to_string(b + 1) + ")");
            }
    // solve d_a d_b OmegaTilde = Delta_ab
    std::vector<std::vector<CoefElement>> delta_c(n, std::vector<CoefElement>(n));
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) {
            auto v = out.delta[a][b].to_coef();
            if (!v) {
                out.unavailable_reason =
                    "Delta_" + std::to_string(a + 1) + std::to_string(b + 1) + " = " +
                    out.delta[a][b].str(spec.varnames) +
                    " is not a polynomial-exponential element; OmegaTilde would need "
                    "logarithmic terms";
                return out;
            }
            delta_c[a][b] = *v;
        }
    try {
        std::vector<CoefElement> grad(n);
        for (size_t b = 0; b < n; ++b) {
            std::vector<CoefElement> col(n);
            for (size_t a = 0; a < n; ++a) col[a] = delta_c[a][b];
            grad[b] = solve_gradient(col);
        }
        out.omega_tilde = solve_gradient(grad);
    } catch (const std::exception& e) {
        out.unavailable_reason = e.what();
    }
    return out;
}

OmegaFunction assemble_omega(const SuperpotentialSpec& spec, const Primitive& lambda_primitive,
                             const CoefElement& omega_tilde) {
    OmegaFunction o;
    o.chart = spec.chart;
    o.laurent = lambda_primitive.laurent;
    o.tfun = omega_tilde;
    if (spec.chart.is_affine()) {
        if (!lambda_primitive.log_coefficient.is_zero())
            throw unsupported_omega(
                "assemble_omega: affine primitive carries a log term; Omega is outside the "
                "Laurent algebra");
        o.p_coefficient = CoefElement::zero();
    } else {
        o.p_coefficient = lambda_primitive.log_coefficient;
    }
    validate_omega(o);
    return o;
}

// ---------------------------------------------------------------------------
// checks

namespace {

FracTensor3 c_raised_from_F(const CoefElement& F, const FracMatrix& eta) {
    const size_t n = eta.size();
    FracMatrix eta_inv = invert_matrix(eta);
    FracTensor3 out(n, FracMatrix(n, std::vector<FracCoef>(n)));
    for (size_t g = 0; g < n; ++g)
        for (size_t a = 0; a < n; ++a)
            for (size_t b = a; b < n; ++b) {
                FracCoef acc;
                for (size_t d = 0; d < n; ++d)
                    acc += eta_inv[g][d] * FracCoef(F.derive(static_cast<int>(d))
                                                        .derive(static_cast<int>(a))
                                                        .derive(static_cast<int>(b)));
                out[g][a][b] = acc;
                out[g][b][a] = acc;
            }
    return out;
}

}  // namespace

CheckReport check_open_wdvv(const CoefElement& F, const OmegaFunction& omega,
                            const FracMatrix& eta, const std::vector<std::string>& names) {
    validate_omega(omega);
    CheckReport rep{"open_wdvv", true, {}};
    const size_t n = eta.size();
    const Chart& chart = omega.chart;
    FracTensor3 c = c_raised_from_F(F, eta);

    std::vector<std::vector<RatFunc>> d2(n, std::vector<RatFunc>(n));
    std::vector<RatFunc> dpdt(n);
    for (size_t a = 0; a < n; ++a) {
        dpdt[a] = RatFunc(omega.dp_dt(static_cast<int>(a)));
        for (size_t b = a; b < n; ++b) {
            d2[a][b] = RatFunc(omega.d2_t(static_cast<int>(a), static_cast<int>(b)));
            d2[b][a] = d2[a][b];
        }
    }
    RatFunc dpp{omega.d2_pp()};

    // second line: c^d_ab Omega_pd + Omega_ab Omega_pp = Omega_ap Omega_bp
    for (size_t a = 0; a < n; ++a)
        for (size_t b = a; b < n; ++b) {
            RatFunc acc = d2[a][b] * dpp - dpdt[a] * dpdt[b];
            for (size_t d = 0; d < n; ++d)
                acc += RatFunc::from_frac(chart, c[d][a][b]) * dpdt[d];
            if (!acc.is_zero()) {
                rep.passed = false;
                rep.issues.push_back({{static_cast<int>(a) + 1, static_cast<int>(b) + 1, 0},
                                      acc.str(names)});
            }
        }
    // first line: c^d_ab Omega_gd + Omega_ab Omega_gp = (a <-> g)
    for (size_t a = 0; a < n; ++a)
        for (size_t g = a + 1; g < n; ++g)
            for (size_t b = 0; b < n; ++b) {
                RatFunc acc = d2[a][b] * dpdt[g] - d2[g][b] * dpdt[a];
                for (size_t d = 0; d < n; ++d)
                    acc += RatFunc::from_frac(chart, c[d][a][b]) * d2[g][d] -
                           RatFunc::from_frac(chart, c[d][g][b]) * d2[a][d];
                if (!acc.is_zero()) {
                    rep.passed = false;
                    rep.issues.push_back({{static_cast<int>(a) + 1, static_cast<int>(b) + 1,
                                           static_cast<int>(g) + 1},
                                          acc.str(names)});
                }
            }
    return rep;
}

CheckReport check_oriented_wdvv(const CoefElement& F, const OmegaFunction& omega,
                                const FracMatrix& eta, const std::vector<std::string>& names) {
    validate_omega(omega);
    CheckReport rep{"oriented_wdvv", true, {}};
    const size_t n = eta.size();
    const size_t m = n + 1;  // the p-slot
    const Chart& chart = omega.chart;
    FracMatrix eta_inv = invert_matrix(eta);

    // vector potential: F^g = eta^{g mu} d_mu F for g <= n, F^{n+1} = Omega
    std::vector<FracCoef> fvec(n);
    for (size_t g = 0; g < n; ++g) {
        FracCoef acc;
        for (size_t mu = 0; mu < n; ++mu)
            acc += eta_inv[g][mu] * FracCoef(F.derive(static_cast<int>(mu)));
        fvec[g] = acc;
    }

    // C[g][a][b] = d_a d_b F^g over all m indices
    std::vector<std::vector<std::vector<RatFunc>>> C(
        m, std::vector<std::vector<RatFunc>>(m, std::vector<RatFunc>(m, RatFunc::zero(chart))));
    for (size_t g = 0; g < n; ++g)
        for (size_t a = 0; a < n; ++a)
            for (size_t b = a; b < n; ++b) {
                RatFunc v = RatFunc::from_frac(
                    chart, fvec[g].derive(static_cast<int>(a)).derive(static_cast<int>(b)));
                C[g][a][b] = v;
                C[g][b][a] = v;
            }
    for (size_t a = 0; a < n; ++a) {
        for (size_t b = a; b < n; ++b) {
            RatFunc v{omega.d2_t(static_cast<int>(a), static_cast<int>(b))};
            C[n][a][b] = v;
            C[n][b][a] = v;
        }
        RatFunc v{omega.dp_dt(static_cast<int>(a))};
        C[n][a][n] = v;
        C[n][n][a] = v;
    }
    C[n][n][n] = RatFunc{omega.d2_pp()};

    for (size_t a = 0; a < m; ++a)
        for (size_t b = 0; b < m; ++b)
            for (size_t g = a + 1; g < m; ++g)
                for (size_t d = 0; d < m; ++d) {
                    RatFunc acc = RatFunc::zero(chart);
                    for (size_t mu = 0; mu < m; ++mu)
                        acc += C[mu][a][b] * C[d][mu][g] - C[mu][g][b] * C[d][mu][a];
                    if (!acc.is_zero()) {
                        rep.passed = false;
                        rep.issues.push_back({{static_cast<int>(a) + 1, static_cast<int>(b) + 1,
                                               static_cast<int>(g) + 1, static_cast<int>(d) + 1},
                                              acc.str(names)});
                    }
                }
    return rep;
}

CheckReport check_unit_conditions(const OmegaFunction& omega, int n,
                                  const std::vector<std::string>& names) {
    CheckReport rep{"unit_conditions", true, {}};
    LaurentPoly dp1 = omega.d_dp().derive_t(0);
    if (!(dp1 == LaurentPoly::constant(omega.chart, CoefElement::one()))) {
        rep.passed = false;
        rep.issues.push_back({{0}, dp1.str(names)});
    }
    for (int b = 0; b < n; ++b) {
        LaurentPoly d = omega.d2_t(0, b);
        if (!d.is_zero()) {
            rep.passed = false;
            rep.issues.push_back({{1, b + 1}, d.str(names)});
        }
    }
    return rep;
}

CheckReport check_unit_conditions_via_rhs(const SuperpotentialSpec& spec, const RatMatrix& rhs) {
    CheckReport rep{"unit_conditions", true, {}};
    LaurentPoly d1 = spec.lambda.derive_t(0);
    if (!(d1 == LaurentPoly::constant(spec.chart, CoefElement::one()))) {
        rep.passed = false;
        rep.issues.push_back({{0}, d1.str(spec.varnames)});
    }
    for (size_t b = 0; b < rhs.size(); ++b)
        if (!rhs[0][b].is_zero()) {
            rep.passed = false;
            rep.issues.push_back({{1, static_cast<int>(b) + 1}, rhs[0][b].str(spec.varnames)});
        }
    return rep;
}

CheckReport check_first_line_redundancy(const SuperpotentialSpec& spec,
                                        const FracTensor3& c_raised) {
    CheckReport rep{"first_line_redundancy", true, {}};
    RatMatrix rhs = alcolado_rhs(spec, c_raised);
    const size_t n = rhs.size();
    std::vector<RatFunc> dl;
    for (size_t j = 0; j < n; ++j)
        dl.push_back(RatFunc(spec.lambda.derive_t(static_cast<int>(j))));
    for (size_t a = 0; a < n; ++a)
        for (size_t g = a + 1; g < n; ++g)
            for (size_t b = 0; b < n; ++b) {
                RatFunc acc = rhs[a][b] * dl[g] - rhs[g][b] * dl[a];
                for (size_t d = 0; d < n; ++d)
                    acc += RatFunc::from_frac(spec.chart, c_raised[d][a][b]) * rhs[g][d] -
                           RatFunc::from_frac(spec.chart, c_raised[d][g][b]) * rhs[a][d];
                if (!acc.is_zero()) {
                    rep.passed = false;
                    rep.issues.push_back({{static_cast<int>(a) + 1, static_cast<int>(b) + 1,
                                           static_cast<int>(g) + 1},
                                          acc.str(spec.varnames)});
                }
            }
    return rep;
}

}  // namespace owdvv
