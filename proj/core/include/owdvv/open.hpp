#ifndef OWDVV_OPEN_HPP
#define OWDVV_OPEN_HPP

#include "owdvv/frobenius.hpp"

namespace owdvv {

/// Omega = laurent(z or p) + p_coefficient * p + tfun(t). In the affine
/// chart polynomial p-dependence lives entirely in `laurent` and
/// p_coefficient stays zero. tfun carries the integration constant.
struct OmegaFunction {
    Chart chart;
    LaurentPoly laurent;
    CoefElement p_coefficient;
    CoefElement tfun;

    LaurentPoly d_dp() const;
    LaurentPoly d2_t(int a, int b) const;   // d_a d_b Omega (p-linear part must die)
    LaurentPoly dp_dt(int b) const;         // d_p d_b Omega
    LaurentPoly d2_pp() const;
    std::string str(const std::vector<std::string>& names = {}) const;
    std::string pretty(const std::vector<std::string>& names = {}) const;
};

/// The second derivatives of Omega exist in the Laurent algebra only when
/// the p-linear coefficient is at most linear in t.
void validate_omega(const OmegaFunction& omega);

using RatMatrix = std::vector<std::vector<RatFunc>>;

/// RHS_ab = (d_a lambda d_b lambda - c^g_ab d_g lambda) / d_p lambda, reduced.
RatMatrix alcolado_rhs(const SuperpotentialSpec& spec, const FracTensor3& c_raised);

/// d_a d_b lambda - d_p(RHS_ab) = 0 as an exact rational identity, per pair.
CheckReport check_main_identity(const SuperpotentialSpec& spec, const FracTensor3& c_raised);

struct IntegrationConstants {
    FracMatrix delta;  // p-free values RHS_ab - d_a d_b Lambda
    std::optional<CoefElement> omega_tilde;
    std::string unavailable_reason;  // set when delta leaves the ring
};

/// Splits the Alcolado RHS into d_a d_b Lambda plus a p-free Delta, checks
/// p-freeness / symmetry / integrability, and solves the Hessian problem
/// d_a d_b OmegaTilde = Delta_ab with linear terms fixed to zero.
IntegrationConstants integration_constants(const SuperpotentialSpec& spec, const RatMatrix& rhs);

OmegaFunction assemble_omega(const SuperpotentialSpec& spec, const Primitive& lambda_primitive,
                             const CoefElement& omega_tilde);

/// Both lines of the open WDVV system for the pair (F, Omega) against eta.
CheckReport check_open_wdvv(const CoefElement& F, const OmegaFunction& omega,
                            const FracMatrix& eta, const std::vector<std::string>& names);

/// Associativity of the (n+1)-component oriented system built from
/// (eta^{1m} d_m F, ..., eta^{nm} d_m F, Omega).
CheckReport check_oriented_wdvv(const CoefElement& F, const OmegaFunction& omega,
                                const FracMatrix& eta, const std::vector<std::string>& names);

/// d2 Omega / dt1 dp = 1 and d2 Omega / dt1 dt_b = 0.
CheckReport check_unit_conditions(const OmegaFunction& omega, int n,
                                  const std::vector<std::string>& names);
/// Same conditions read off the RHS matrix, for families whose OmegaTilde
/// is not representable: they hold iff RHS_{1b} = 0.
CheckReport check_unit_conditions_via_rhs(const SuperpotentialSpec& spec, const RatMatrix& rhs);

/// The first open-WDVV line is implied by the second once Omega_ab is the
/// Alcolado RHS: verified as an exact rational identity.
CheckReport check_first_line_redundancy(const SuperpotentialSpec& spec,
                                        const FracTensor3& c_raised);

class p_freeness_violation : public std::runtime_error {
public:
    explicit p_freeness_violation(const std::string& w) : std::runtime_error(w) {}
};
class unsupported_omega : public std::runtime_error {
public:
    explicit unsupported_omega(const std::string& w) : std::runtime_error(w) {}
};

}  // namespace owdvv

#endif
