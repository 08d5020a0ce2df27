#include "owdvv/catalog.hpp"

namespace owdvv {

namespace {

const Chart kAffine = Chart::affine();

CoefElement tvar(int k) { return CoefElement::var(k); }  // 0-based

std::vector<std::string> var_names(int n) {
    std::vector<std::string> v;
    for (int k = 0; k < n; ++k) v.push_back(default_var_name(k));
    return v;
}

// ---------------------------------------------------------------------------
// flat-coordinate construction for the affine families
//
// The naive coefficient parametrization is flat only for small n; in general
// the flat variables are triangular polynomial corrections of the
// coefficients, obtained from the period formula t = res lambda^{m/N} dp
// normalized to t^gamma = c_{e} + higher-grade terms.

// exponents[j] is the p-exponent controlled by variable j; exponents with
// entry kind Residue get the fractional-power construction, Linear ones map
// identically (the p^1/q^1 coordinates of the pole block).
struct CoeffSlot {
    int exponent;
    bool linear;  // exact flat coordinate, no corrections
};

LaurentPoly flat_family_lambda(long top_degree, const std::vector<CoeffSlot>& slots) {
    const int n = static_cast<int>(slots.size());
    const long N = top_degree;
    // lambda in the raw coefficient variables
    LaurentPoly lam_c(kAffine);
    lam_c.set_coeff(static_cast<int>(N), CoefElement::one());
    for (int j = 0; j < n; ++j) lam_c.set_coeff(slots[j].exponent, tvar(j));

    // invert t(c) slot by slot, highest exponent first (corrections to a
    // slot involve only strictly higher exponents by quasi-homogeneity)
    std::vector<CoefElement> c_expr(static_cast<size_t>(n));
    std::vector<char> known(static_cast<size_t>(n), 0);
    std::vector<int> order(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) order[static_cast<size_t>(j)] = j;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return slots[static_cast<size_t>(a)].exponent > slots[static_cast<size_t>(b)].exponent; });
    for (int j : order) {
        const CoeffSlot& slot = slots[static_cast<size_t>(j)];
        if (slot.linear) {
            c_expr[static_cast<size_t>(j)] = tvar(j);
            known[static_cast<size_t>(j)] = 1;
            continue;
        }
        // gamma with leading coefficient on this exponent: e = gamma - 1
        long gamma = slot.exponent + 1;
        CoefElement r = fractional_power_residue(lam_c, N - gamma, N);
        Rational sigma(N - gamma, N);
        CoefElement corr = r * sigma.inverse() - tvar(j);
        // substitute the already-known higher slots
        for (int k : order) {
            if (k == j) break;
            corr = corr.substitute(k, c_expr[static_cast<size_t>(k)]);
        }
        if (!corr.is_free_of(j))
            throw std::logic_error("flat_family_lambda: correction not triangular");
        c_expr[static_cast<size_t>(j)] = tvar(j) - corr;
        known[static_cast<size_t>(j)] = 1;
    }
    LaurentPoly lam(kAffine);
    lam.set_coeff(static_cast<int>(N), CoefElement::one());
    for (int j = 0; j < n; ++j) lam.set_coeff(slots[static_cast<size_t>(j)].exponent, c_expr[static_cast<size_t>(j)]);
    return lam;
}

// h0_n: lambda = p^{n+1} + c_{n-1} p^{n-1} + ... + c_0, t^j <-> c_{j-1}
SuperpotentialSpec make_h0_n(long n) {
    std::vector<CoeffSlot> slots;
    for (long j = 0; j < n; ++j) slots.push_back({static_cast<int>(j), false});
    SuperpotentialSpec spec;
    spec.chart = kAffine;
    spec.lambda = flat_family_lambda(n + 1, slots);
    spec.varnames = var_names(static_cast<int>(n));
    EulerData e;
    for (long k = 1; k <= n; ++k) {
        e.q.push_back(Rational(k - 1, n + 1));
        e.r.push_back(Rational(0));
    }
    e.d = Rational(n - 1, n + 1);
    spec.euler = e;
    return spec;
}

// h0_n_0: lambda = p^n + c_{n-1} p^{n-1} + ... + c_0 + c_{-1}/p
// variables: t1 <-> c_0, t2 <-> c_{-1} (pole residue), t3.. <-> c_1..c_{n-1};
// the top slot c_{n-1} is the translation coordinate p^1, linear and exact,
// as is the residue coordinate q^1 = c_{-1}.
SuperpotentialSpec make_h0_n_0(long n) {
    std::vector<CoeffSlot> slots;
    slots.push_back({0, n == 1});  // for n = 1 the constant IS the translation coordinate
    slots.push_back({-1, true});
    for (long e = 1; e <= n - 1; ++e) slots.push_back({static_cast<int>(e), e == n - 1});
    SuperpotentialSpec spec;
    spec.chart = kAffine;
    spec.lambda = flat_family_lambda(n, slots);
    spec.varnames = var_names(static_cast<int>(n) + 1);
    EulerData e;
    e.q.push_back(Rational(0));        // c_0
    e.q.push_back(Rational(-1, n));    // c_{-1}
    for (long k = 1; k <= n - 1; ++k) e.q.push_back(Rational(k, n));
    for (size_t k = 0; k < e.q.size(); ++k) e.r.push_back(Rational(0));
    e.d = Rational(n - 2, n);
    spec.euler = e;
    return spec;
}

SuperpotentialSpec make_trig1() {
    Chart chart = Chart::exponential(Kappa::I);
    ExpMonomial half_t2{{1, Rational(1, 2)}};
    CoefElement e2 = CoefElement::exponential(half_t2);
    LaurentPoly lam(chart);
    lam.set_coeff(0, tvar(0));
    lam.set_coeff(1, -e2);
    lam.set_coeff(-1, -e2);
    SuperpotentialSpec spec;
    spec.chart = chart;
    spec.lambda = lam;
    spec.varnames = var_names(2);
    spec.euler = EulerData{{Rational(0), Rational(1)}, {Rational(0), Rational(2)}, Rational(1)};
    return spec;
}

SuperpotentialSpec make_trig2() {
    Chart chart = Chart::exponential(Kappa::One);
    CoefElement et3 = CoefElement::exponential(ExpMonomial{{2, Rational(1)}});
    LaurentPoly lam(chart);
    lam.set_coeff(2, CoefElement::one());
    lam.set_coeff(1, CoefElement::sqrt2() * tvar(1));
    lam.set_coeff(0, tvar(0));
    lam.set_coeff(-1, et3 * CoefElement::sqrt2() * Rational(1, 2));  // e^{t3}/sqrt2
    SuperpotentialSpec spec;
    spec.chart = chart;
    spec.lambda = lam;
    spec.varnames = var_names(3);
    spec.euler = EulerData{{Rational(0), Rational(1, 2), Rational(1)},
                           {Rational(0), Rational(0), Rational(3, 2)},
                           Rational(1)};
    return spec;
}

PaperSolution paper_h0_1() {
    PaperSolution p;
    p.F = tvar(0).pow(3) * Rational(1, 6);
    OmegaFunction o;
    o.chart = kAffine;
    o.laurent = LaurentPoly::monomial(kAffine, 3, CoefElement(Rational(1, 3)));
    o.laurent.set_coeff(1, tvar(0));
    o.p_coefficient = CoefElement::zero();
    o.tfun = CoefElement::zero();
    p.omega = o;
    return p;
}

PaperSolution paper_h0_2() {
    PaperSolution p;
    p.F = tvar(0).pow(2) * tvar(1) * Rational(1, 2) - tvar(1).pow(4) * Rational(1, 72);
    OmegaFunction o;
    o.chart = kAffine;
    o.laurent = LaurentPoly::monomial(kAffine, 4, CoefElement(Rational(1, 4)));
    o.laurent.set_coeff(2, tvar(1) * Rational(1, 2));
    o.laurent.set_coeff(1, tvar(0));
    o.p_coefficient = CoefElement::zero();
    o.tfun = tvar(1).pow(2) * Rational(1, 6);
    p.omega = o;
    return p;
}

PaperSolution paper_trig1() {
    PaperSolution p;
    p.F = tvar(0).pow(2) * tvar(1) * Rational(1, 2) +
          CoefElement::exponential(ExpMonomial{{1, Rational(1)}});
    Chart chart = Chart::exponential(Kappa::I);
    CoefElement ie = CoefElement::i() * CoefElement::exponential(ExpMonomial{{1, Rational(1, 2)}});
    OmegaFunction o;
    o.chart = chart;
    o.laurent = LaurentPoly::monomial(chart, 1, ie);
    o.laurent.set_coeff(-1, -ie);
    o.p_coefficient = tvar(0);
    o.tfun = CoefElement::zero();
    p.omega = o;
    return p;
}

PaperSolution paper_trig2() {
    PaperSolution p;
    CoefElement et3 = CoefElement::exponential(ExpMonomial{{2, Rational(1)}});
    p.F = tvar(0).pow(2) * tvar(1) * Rational(1, 2) +
          tvar(1).pow(2) * tvar(0) * Rational(1, 2) - tvar(1).pow(4) * Rational(1, 24) +
          tvar(1) * et3;
    Chart chart = Chart::exponential(Kappa::One);
    OmegaFunction o;
    o.chart = chart;
    o.laurent = LaurentPoly::monomial(chart, 2, CoefElement(Rational(1, 2)));
    o.laurent.set_coeff(1, CoefElement::sqrt2() * tvar(1));
    o.laurent.set_coeff(-1, -(et3 * CoefElement::sqrt2() * Rational(1, 2)));
    o.p_coefficient = tvar(0);
    o.tfun = tvar(1).pow(2) * Rational(1, 2);
    p.omega = o;
    return p;
}

}  // namespace

CatalogEntry catalog_get(const std::string& name, std::optional<long> parameter) {
    auto need_param = [&](long lo, long hi) {
        if (!parameter)
            throw unknown_catalog_entry("catalog entry '" + name + "' needs a parameter n");
        if (*parameter < lo || *parameter > hi)
            throw unknown_catalog_entry("catalog entry '" + name + "': parameter out of range [" +
                                        std::to_string(lo) + "," + std::to_string(hi) + "]");
        return *parameter;
    };
    CatalogEntry e;
    e.name = name;
    e.family = name;
    if (name == "h0_1" || (name == "h0_n" && parameter && *parameter == 1)) {
        e.name = "h0_1";
        e.spec = make_h0_n(1);
        e.calibration.f_scale = Rational(2);
        e.paper_solution = paper_h0_1();
        e.paper_f_text = "t1^3/6";
        e.paper_omega_text = "p^3/3 + t1*p";
        e.description = "H_{0,1}: lambda = p^2 + t1, phi = dp";
        return e;
    }
    if (name == "h0_2" || (name == "h0_n" && parameter && *parameter == 2)) {
        e.name = "h0_2";
        e.spec = make_h0_n(2);
        e.calibration.f_scale = Rational(3);
        e.paper_solution = paper_h0_2();
        e.paper_f_text = "t1^2*t2/2 - t2^4/72";
        e.paper_omega_text = "p^4/4 + t2*p^2/2 + t1*p + t2^2/6";
        e.description = "H_{0,2}: lambda = p^3 + t2*p + t1, phi = dp";
        return e;
    }
    if (name == "h0_n") {
        long n = need_param(1, 12);
        e.name = "h0_n(" + std::to_string(n) + ")";
        e.spec = make_h0_n(n);
        e.description = "H_{0,n}: monic degree n+1 polynomial family in flat coordinates";
        return e;
    }
    if (name == "h0_n_0") {
        long n = need_param(1, 12);
        e.name = "h0_n_0(" + std::to_string(n) + ")";
        e.spec = make_h0_n_0(n);
        e.full_pipeline = false;  // structure constants leave the polynomial ring
        e.description =
            "H_{0,n-1,0}: lambda = p^n + ... + t-coefficients + pole at p=0, phi = dp; "
            "eta/c/main-identity sector only";
        return e;
    }
    if (name == "trig1") {
        e.spec = make_trig1();
        e.calibration.f_scale = Rational(-1);
        e.paper_solution = paper_trig1();
        e.paper_f_text = "t1^2*t2/2 + exp(t2)";
        e.paper_omega_text = "t1*p - 2*exp(t2/2)*sin(p)";
        e.description = "H_{0,0,0}: lambda = t1 - 2 e^{t2/2} cos p in the z = e^{ip} chart";
        return e;
    }
    if (name == "trig2") {
        e.spec = make_trig2();
        e.paper_solution = paper_trig2();
        e.paper_f_text = "t1^2*t2/2 + t2^2*t1/2 - t2^4/24 + t2*exp(t3)";
        e.paper_omega_text = "exp(2p)/2 + sqrt2*t2*exp(p) + t1*p - exp(t3-p)/sqrt2 + t2^2/2";
        e.description = "H_{0,1,0}: lambda = e^{2p} + sqrt2 t2 e^p + t1 + e^{t3-p}/sqrt2";
        return e;
    }
    if (name == "h1_1") {
        e.mode = CatalogMode::Numeric;
        e.paper_f_text = "t1^2*t3/2 + t1*t2^2/2 - (I*pi/48)*E2(t3)";
        e.paper_omega_text = "t1*p + t2^2 * d/dp log theta1(p, t3)";
        e.description =
            "H_{1,1}: lambda = t1 + t2^2 d^2/dp^2 log theta1(p, t3), phi = dp; numeric q-series "
            "verification";
        return e;
    }
    throw unknown_catalog_entry("unknown catalog entry '" + name + "'");
}

std::vector<CatalogInfo> catalog_list() {
    return {
        {"h0_1", CatalogMode::Exact, 0, "H_{0,1}: lambda = p^2 + t1"},
        {"h0_2", CatalogMode::Exact, 0, "H_{0,2}: lambda = p^3 + t2 p + t1"},
        {"h0_n", CatalogMode::Exact, 1, "H_{0,n}: monic degree n+1 polynomial family"},
        {"h0_n_0", CatalogMode::Exact, 1,
         "H_{0,n-1,0}: degree n polynomial plus simple pole at p = 0 (identity sector)"},
        {"trig1", CatalogMode::Exact, 0, "H_{0,0,0} in the z = e^{ip} chart"},
        {"trig2", CatalogMode::Exact, 0, "H_{0,1,0} in the z = e^{p} chart"},
        {"h1_1", CatalogMode::Numeric, 0, "H_{1,1} genus-one family, theta-function numerics"},
    };
}

}  // namespace owdvv
