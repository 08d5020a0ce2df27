#include "owdvv/frobenius.hpp"

#include <array>
#include <sstream>

#include "owdvv/util.hpp"

namespace owdvv {

void validate_spec(const SuperpotentialSpec& spec) {
    if (spec.n() < 1) throw invalid_spec("spec needs at least one flat variable");
    if (spec.lambda.is_zero() || spec.lambda.is_constant())
        throw invalid_spec("lambda must be nonconstant in the chart variable");
    if (!(spec.lambda.chart() == spec.chart)) throw invalid_spec("lambda chart mismatch");
    LaurentPoly d1 = spec.lambda.derive_t(0);
    if (!(d1 == LaurentPoly::constant(spec.chart, CoefElement::one())))
        throw invalid_spec("unit-direction convention violated: d(lambda)/d(" +
                           spec.varnames[0] + ") must be 1, got " + d1.str(spec.varnames));
    if (spec.euler) {
        if (spec.euler->q.size() != spec.varnames.size() ||
            spec.euler->r.size() != spec.varnames.size())
            throw invalid_spec("euler weight arrays must match the variable count");
    }
}

namespace {

std::vector<LaurentPoly> t_derivatives(const SuperpotentialSpec& spec) {
    std::vector<LaurentPoly> d;
    d.reserve(static_cast<size_t>(spec.n()));
    for (int j = 0; j < spec.n(); ++j) d.push_back(spec.lambda.derive_t(j));
    return d;
}

}  // namespace

FracMatrix compute_eta(const SuperpotentialSpec& spec) {
    const size_t n = static_cast<size_t>(spec.n());
    auto dl = t_derivatives(spec);
    LaurentPoly lp = spec.lambda.d_dp();
    FracMatrix eta(n, std::vector<FracCoef>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j) {
            ResidueRequest req{RatFunc(dl[i] * dl[j], lp), spec.lambda};
            FracCoef v = residue_complement(req);
            eta[i][j] = v;
            eta[j][i] = v;
        }
    return eta;
}

FracTensor3 compute_c(const SuperpotentialSpec& spec) {
    const size_t n = static_cast<size_t>(spec.n());
    auto dl = t_derivatives(spec);
    LaurentPoly lp = spec.lambda.d_dp();
    FracTensor3 c(n, FracMatrix(n, std::vector<FracCoef>(n)));
    std::vector<std::array<size_t, 3>> idx;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j)
            for (size_t k = j; k < n; ++k) idx.push_back({i, j, k});
    std::vector<FracCoef> vals(idx.size());
    parallel_for(idx.size(), [&](size_t w) {
        auto [i, j, k] = idx[w];
        ResidueRequest req{RatFunc(dl[i] * dl[j] * dl[k], lp), spec.lambda};
        vals[w] = residue_complement(req);
    });
    for (size_t w = 0; w < idx.size(); ++w) {
        auto [i, j, k] = idx[w];
        size_t perm[6][3] = {{i, j, k}, {i, k, j}, {j, i, k}, {j, k, i}, {k, i, j}, {k, j, i}};
        for (auto& p : perm) c[p[0]][p[1]][p[2]] = vals[w];
    }
    return c;
}

FracMatrix compute_intersection_form(const SuperpotentialSpec& spec) {
    const size_t n = static_cast<size_t>(spec.n());
    auto dl = t_derivatives(spec);
    LaurentPoly lp = spec.lambda.d_dp();
    {
        ClearedPoly L = clear_laurent(spec.lambda, false);
        ClearedPoly W = clear_laurent(lp, false);
        if (upoly_gcd(L.poly, W.poly).degree() > 0)
            throw degenerate_critical_points(
                "compute_intersection_form: a critical value vanishes identically");
    }
    FracMatrix g(n, std::vector<FracCoef>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j) {
            RatFunc f(dl[i] * dl[j], spec.lambda * lp);
            ResidueRequest req{f, spec.lambda};
            FracCoef total = residue_complement(req, {spec.lambda});
            FracCoef at_lambda_zeros = residue_trace_over(f, spec.lambda, spec.chart);
            FracCoef v = total - at_lambda_zeros;
            g[i][j] = v;
            g[j][i] = v;
        }
    return g;
}

FracMatrix invert_matrix(const FracMatrix& m) {
    const size_t n = m.size();
    FracMatrix a = m;
    FracMatrix inv(n, std::vector<FracCoef>(n));
    for (size_t i = 0; i < n; ++i) inv[i][i] = FracCoef(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) throw singular_matrix("invert_matrix: singular matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        FracCoef scale = a[col][col].inverse();
        for (size_t j = 0; j < n; ++j) {
            a[col][j] *= scale;
            inv[col][j] *= scale;
        }
        for (size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col].is_zero()) continue;
            FracCoef f = a[row][col];
            for (size_t j = 0; j < n; ++j) {
                a[row][j] -= f * a[col][j];
                inv[row][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

FracTensor3 raise_first_index(const FracMatrix& eta_inv, const FracTensor3& c_lower) {
    const size_t n = eta_inv.size();
    FracTensor3 out(n, FracMatrix(n, std::vector<FracCoef>(n)));
    for (size_t g = 0; g < n; ++g)
        for (size_t a = 0; a < n; ++a)
            for (size_t b = a; b < n; ++b) {
                FracCoef acc;
                for (size_t d = 0; d < n; ++d) acc += eta_inv[g][d] * c_lower[d][a][b];
                out[g][a][b] = acc;
                out[g][b][a] = acc;
            }
    return out;
}

bool matrix_is_constant(const FracMatrix& m) {
    for (auto& row : m)
        for (auto& v : row)
            if (!v.is_constant()) return false;
    return true;
}

std::optional<CoefTensor3> tensor_to_coef(const FracTensor3& c) {
    CoefTensor3 out(c.size());
    for (size_t i = 0; i < c.size(); ++i) {
        out[i].resize(c[i].size());
        for (size_t j = 0; j < c[i].size(); ++j) {
            out[i][j].resize(c[i][j].size());
            for (size_t k = 0; k < c[i][j].size(); ++k) {
                auto v = c[i][j][k].to_coef();
                if (!v) return std::nullopt;
                out[i][j][k] = *v;
            }
        }
    }
    return out;
}

CheckReport check_closed_wdvv(const FracTensor3& c_raised,
                              const std::vector<std::string>& names) {
    const size_t n = c_raised.size();
    CheckReport rep{"closed_wdvv", true, {}};
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b)
            for (size_t g = a + 1; g < n; ++g)
                for (size_t d = 0; d < n; ++d) {
                    FracCoef lhs, rhs;
                    for (size_t m = 0; m < n; ++m) {
                        lhs += c_raised[m][a][b] * c_raised[d][m][g];
                        rhs += c_raised[m][g][b] * c_raised[d][m][a];
                    }
                    FracCoef res = lhs - rhs;
                    if (!res.is_zero()) {
                        rep.passed = false;
                        rep.issues.push_back({{static_cast<int>(a) + 1, static_cast<int>(b) + 1,
                                               static_cast<int>(g) + 1, static_cast<int>(d) + 1},
                                              res.str(names)});
                    }
                }
    return rep;
}

CheckReport check_unit_axiom(const FracMatrix& eta, const FracTensor3& c_lower,
                             const std::vector<std::string>& names) {
    CheckReport rep{"unit_axiom", true, {}};
    const size_t n = eta.size();
    for (size_t j = 0; j < n; ++j)
        for (size_t k = j; k < n; ++k) {
            FracCoef res = c_lower[0][j][k] - eta[j][k];
            if (!res.is_zero()) {
                rep.passed = false;
                rep.issues.push_back(
                    {{1, static_cast<int>(j) + 1, static_cast<int>(k) + 1}, res.str(names)});
            }
        }
    return rep;
}

CheckReport check_quasi_homogeneity(const CoefElement& F, const EulerData& euler,
                                    const std::vector<std::string>& names) {
    CheckReport rep{"quasi_homogeneity", true, {}};
    CoefElement ef;
    for (size_t j = 0; j < euler.q.size(); ++j) {
        CoefElement coeff =
            CoefElement::var(static_cast<int>(j)) * (Rational(1) - euler.q[j]) +
            CoefElement(euler.r[j]);
        ef += coeff * F.derive(static_cast<int>(j));
    }
    CoefElement disc = ef - F * (Rational(3) - euler.d);
    if (!disc.is_zero() && (disc.has_exp() || disc.total_t_degree() > 2)) {
        rep.passed = false;
        rep.issues.push_back({{}, disc.str(names)});
    } else if (!disc.is_zero()) {
        rep.issues.push_back({{}, disc.str(names)});  // quadratic-or-lower, allowed
    }
    return rep;
}

CoefElement solve_gradient(const std::vector<CoefElement>& v) {
    const int n = static_cast<int>(v.size());
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k)
            if (!(v[static_cast<size_t>(j)].derive(k) == v[static_cast<size_t>(k)].derive(j)))
                throw integrability_violation(
                    "solve_gradient: cross derivatives differ at (" + std::to_string(j + 1) +
                    "," + std::to_string(k + 1) + "): " +
                    (v[static_cast<size_t>(j)].derive(k) - v[static_cast<size_t>(k)].derive(j))
                        .str());
    CoefElement s;
    for (int j = 0; j < n; ++j) {
        CoefElement rem = v[static_cast<size_t>(j)] - s.derive(j);
        for (int k = 0; k < j; ++k)
            if (!rem.is_free_of(k))
                throw integrability_violation(
                    "solve_gradient: remainder depends on an already-integrated variable");
        s += rem.antiderive(j);
    }
    return s;
}

CoefElement reconstruct_F(const CoefTensor3& c, int n) {
    for (int d = 0; d < n; ++d)
        for (int a = d + 1; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int g = b; g < n; ++g) {
                    CoefElement diff =
                        c[static_cast<size_t>(a)][static_cast<size_t>(b)][static_cast<size_t>(g)]
                            .derive(d) -
                        c[static_cast<size_t>(d)][static_cast<size_t>(b)][static_cast<size_t>(g)]
                            .derive(a);
                    if (!diff.is_zero())
                        throw integrability_violation(
                            "reconstruct_F: d_" + std::to_string(d + 1) + " c_" +
                            std::to_string(a + 1) + std::to_string(b + 1) +
                            std::to_string(g + 1) + " asymmetric, difference " + diff.str());
                }
    std::vector<std::vector<CoefElement>> G(static_cast<size_t>(n),
                                            std::vector<CoefElement>(static_cast<size_t>(n)));
    for (int b = 0; b < n; ++b)
        for (int g = b; g < n; ++g) {
            std::vector<CoefElement> v(static_cast<size_t>(n));
            for (int a = 0; a < n; ++a)
                v[static_cast<size_t>(a)] =
                    c[static_cast<size_t>(a)][static_cast<size_t>(b)][static_cast<size_t>(g)];
            CoefElement s = solve_gradient(v);
            G[static_cast<size_t>(b)][static_cast<size_t>(g)] = s;
            G[static_cast<size_t>(g)][static_cast<size_t>(b)] = s;
        }
    std::vector<CoefElement> K(static_cast<size_t>(n));
    for (int g = 0; g < n; ++g) {
        std::vector<CoefElement> v(static_cast<size_t>(n));
        for (int b = 0; b < n; ++b)
            v[static_cast<size_t>(b)] = G[static_cast<size_t>(b)][static_cast<size_t>(g)];
        K[static_cast<size_t>(g)] = solve_gradient(v);
    }
    CoefElement F = solve_gradient(K);
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b)
            for (int g = b; g < n; ++g)
                if (!(F.derive(a).derive(b).derive(g) ==
                      c[static_cast<size_t>(a)][static_cast<size_t>(b)][static_cast<size_t>(g)]))
                    throw integrability_violation("reconstruct_F: round-trip check failed");
    return F;
}

CoefElement fractional_power_residue(const LaurentPoly& lambda, long m, long N) {
    if (!lambda.chart().is_affine())
        throw invalid_spec("fractional_power_residue: affine chart required");
    if (lambda.is_zero() || lambda.max_exp() != N || !lambda.coeff(static_cast<int>(N)).is_one())
        throw invalid_spec("fractional_power_residue: lambda must be monic of degree " +
                           std::to_string(N));
    // u = lambda p^-N - 1 has only negative exponents
    LaurentPoly u = lambda.shifted(static_cast<int>(-N));
    u.set_coeff(0, CoefElement::zero());
    Rational expo(m, N);
    // [p^-1] of p^m (1+u)^expo; u^k cannot reach p^(-1-m) once k > m+1
    CoefElement acc;
    LaurentPoly upow = LaurentPoly::constant(lambda.chart(), CoefElement::one());
    for (long k = 0; k <= m + 1; ++k) {
        if (k > 0) upow *= u;
        acc += upow.coeff(static_cast<int>(-1 - m)) *
               binomial_coefficient(expo, static_cast<unsigned long>(k));
    }
    return acc;
}

CoefElement flat_coordinates_residue(const SuperpotentialSpec& spec, int gamma) {
    if (!spec.chart.is_affine())
        throw invalid_spec("flat_coordinates_residue: affine chart required");
    if (spec.lambda.is_zero() || spec.lambda.min_exp() < 0)
        throw invalid_spec("flat_coordinates_residue: lambda must be a polynomial");
    long N = spec.lambda.max_exp();
    if (N != spec.n() + 1)
        throw invalid_spec("flat_coordinates_residue: expected monic degree n+1 polynomial");
    if (gamma < 1 || gamma > spec.n())
        throw invalid_spec("flat_coordinates_residue: index out of range");
    return fractional_power_residue(spec.lambda, N - gamma, N);
}

CriticalData critical_data_numeric(const SuperpotentialSpec& spec,
                                   const std::map<int, std::complex<double>>& t_assignment) {
    CriticalData out;
    auto roots = critical_points_numeric(spec.lambda, t_assignment);
    if (roots.empty())
        throw std::runtime_error("critical_data_numeric: no critical points found");
    for (auto& r : roots) out.points.push_back({r, spec.lambda.eval(r, t_assignment)});
    double scale = 1.0;
    for (auto& cp : out.points) scale = std::max(scale, std::abs(cp.u));
    for (size_t a = 0; a < out.points.size(); ++a)
        for (size_t b = a + 1; b < out.points.size(); ++b)
            if (std::abs(out.points[a].u - out.points[b].u) < 1e-8 * scale) out.semisimple = false;
    return out;
}

FrobeniusData derive_frobenius(const SuperpotentialSpec& spec) {
    validate_spec(spec);
    FrobeniusData d;
    d.eta = compute_eta(spec);
    d.eta_constant = matrix_is_constant(d.eta);
    d.eta_inv = invert_matrix(d.eta);
    d.c_lower = compute_c(spec);
    d.c_raised = raise_first_index(d.eta_inv, d.c_lower);
    if (auto cc = tensor_to_coef(d.c_lower)) {
        try {
            d.F = reconstruct_F(*cc, spec.n());
        } catch (const std::exception& e) {
            d.F_unavailable_reason = e.what();
        }
    } else {
        d.F_unavailable_reason =
            "structure constants leave the polynomial-exponential ring; the potential would "
            "need logarithmic terms";
    }
    try {
        d.g = compute_intersection_form(spec);
    } catch (const std::exception& e) {
        d.g_unavailable_reason = e.what();
    }
    return d;
}

}  // namespace owdvv
