#include "owdvv/pipeline.hpp"

namespace owdvv {

bool DeriveOutcome::all_passed() const {
    for (auto* r : reports())
        if (!r->passed) return false;
    return true;
}

std::vector<const CheckReport*> DeriveOutcome::reports() const {
    std::vector<const CheckReport*> out{&unit_axiom, &closed, &main_identity, &first_line,
                                        &unit_conditions};
    if (quasi_homog) out.push_back(&*quasi_homog);
    if (open) out.push_back(&*open);
    if (oriented) out.push_back(&*oriented);
    return out;
}

namespace {

OmegaFunction scale_omega(const OmegaFunction& o, const Rational& s) {
    OmegaFunction out = o;
    out.laurent = out.laurent * s;
    out.p_coefficient = out.p_coefficient * s;
    out.tfun = out.tfun * s;
    return out;
}

bool omega_equal(const OmegaFunction& a, const OmegaFunction& b) {
    return a.laurent == b.laurent && a.p_coefficient == b.p_coefficient && a.tfun == b.tfun;
}

std::string omega_difference(const OmegaFunction& a, const OmegaFunction& b,
                             const std::vector<std::string>& names) {
    OmegaFunction d;
    d.chart = a.chart;
    d.laurent = a.laurent - b.laurent;
    d.p_coefficient = a.p_coefficient - b.p_coefficient;
    d.tfun = a.tfun - b.tfun;
    return d.str(names);
}

}  // namespace

DeriveOutcome run_derive(const SuperpotentialSpec& spec) {
    DeriveOutcome out;
    out.spec = spec;
    out.frob = derive_frobenius(spec);
    out.eta_constant_warning = !out.frob.eta_constant;
    const auto& names = spec.varnames;

    out.unit_axiom = check_unit_axiom(out.frob.eta, out.frob.c_lower, names);
    out.closed = check_closed_wdvv(out.frob.c_raised, names);
    out.main_identity = check_main_identity(spec, out.frob.c_raised);
    out.first_line = check_first_line_redundancy(spec, out.frob.c_raised);

    if (spec.euler && out.frob.F) {
        out.quasi_homog = check_quasi_homogeneity(*out.frob.F, *spec.euler, names);
    } else if (spec.euler) {
        out.skipped.push_back({"quasi_homogeneity", out.frob.F_unavailable_reason});
    } else {
        out.skipped.push_back({"quasi_homogeneity", "no Euler weights supplied"});
    }

    RatMatrix rhs = alcolado_rhs(spec, out.frob.c_raised);
    out.ic = integration_constants(spec, rhs);

    if (out.frob.F && out.ic->omega_tilde) {
        Primitive prim = primitive_in_p(spec.lambda);
        out.omega = assemble_omega(spec, prim, *out.ic->omega_tilde);
        out.open = check_open_wdvv(*out.frob.F, *out.omega, out.frob.eta, names);
        out.oriented = check_oriented_wdvv(*out.frob.F, *out.omega, out.frob.eta, names);
        out.unit_conditions = check_unit_conditions(*out.omega, spec.n(), names);
    } else {
        std::string reason =
            !out.frob.F ? out.frob.F_unavailable_reason : out.ic->unavailable_reason;
        out.skipped.push_back({"open_wdvv", reason});
        out.skipped.push_back({"oriented_wdvv", reason});
        out.unit_conditions = check_unit_conditions_via_rhs(spec, rhs);
    }
    return out;
}

DeriveOutcome run_derive_entry(const CatalogEntry& entry) {
    if (!entry.spec)
        throw invalid_spec("catalog entry '" + entry.name +
                           "' is numeric-mode; use the elliptic checker");
    DeriveOutcome out = run_derive(*entry.spec);
    if (out.frob.F) out.F_transported = *out.frob.F * entry.calibration.f_scale;
    if (out.omega) out.omega_transported = scale_omega(*out.omega, entry.calibration.omega_scale);
    if (entry.paper_solution) {
        out.paper.has_paper = true;
        const auto& names = entry.spec->varnames;
        if (out.F_transported) {
            out.paper.f_available = true;
            CoefElement diff = *out.F_transported - entry.paper_solution->F;
            out.paper.f_match = diff.is_zero();
            if (!out.paper.f_match) out.paper.f_difference = diff.str(names);
        }
        if (out.omega_transported) {
            out.paper.omega_available = true;
            out.paper.omega_match = omega_equal(*out.omega_transported, entry.paper_solution->omega);
            if (!out.paper.omega_match)
                out.paper.omega_difference =
                    omega_difference(*out.omega_transported, entry.paper_solution->omega, names);
        }
    }
    return out;
}

bool VerifyOutcome::all_passed() const {
    return eta_constant && eta_nondegenerate && closed.passed && open.passed && oriented.passed &&
           unit_conditions.passed;
}

VerifyOutcome run_verify(const CoefElement& F, const OmegaFunction& omega, int n,
                         const std::vector<std::string>& names) {
    VerifyOutcome out;
    const size_t un = static_cast<size_t>(n);
    out.eta.assign(un, std::vector<FracCoef>(un));
    out.eta_constant = true;
    for (size_t j = 0; j < un; ++j)
        for (size_t k = j; k < un; ++k) {
            CoefElement e = F.derive(0).derive(static_cast<int>(j)).derive(static_cast<int>(k));
            if (!e.is_constant()) out.eta_constant = false;
            out.eta[j][k] = FracCoef(e);
            out.eta[k][j] = out.eta[j][k];
        }
    out.closed = CheckReport{"closed_wdvv", false, {}};
    out.open = CheckReport{"open_wdvv", false, {}};
    out.oriented = CheckReport{"oriented_wdvv", false, {}};
    out.unit_conditions = CheckReport{"unit_conditions", false, {}};
    if (!out.eta_constant) {
        out.closed.issues.push_back({{}, "eta = c_1ab read off F is not constant"});
        return out;
    }
    try {
        invert_matrix(out.eta);
        out.eta_nondegenerate = true;
    } catch (const singular_matrix&) {
        out.closed.issues.push_back({{}, "eta read off F is degenerate"});
        return out;
    }
    // full c tensor from F for the closed check
    FracMatrix eta_inv = invert_matrix(out.eta);
    FracTensor3 c_lower(un, FracMatrix(un, std::vector<FracCoef>(un)));
    for (size_t a = 0; a < un; ++a)
        for (size_t b = a; b < un; ++b)
            for (size_t g = b; g < un; ++g) {
                FracCoef v{F.derive(static_cast<int>(a))
                               .derive(static_cast<int>(b))
                               .derive(static_cast<int>(g))};
                size_t perm[6][3] = {{a, b, g}, {a, g, b}, {b, a, g}, {b, g, a}, {g, a, b}, {g, b, a}};
                for (auto& p : perm) c_lower[p[0]][p[1]][p[2]] = v;
            }
    out.closed = check_closed_wdvv(raise_first_index(eta_inv, c_lower), names);
    out.open = check_open_wdvv(F, omega, out.eta, names);
    out.oriented = check_oriented_wdvv(F, omega, out.eta, names);
    out.unit_conditions = check_unit_conditions(omega, n, names);
    return out;
}

}  // namespace owdvv
