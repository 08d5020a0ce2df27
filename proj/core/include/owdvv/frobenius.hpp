#ifndef OWDVV_FROBENIUS_HPP
#define OWDVV_FROBENIUS_HPP

#include <optional>

#include "owdvv/residue.hpp"

namespace owdvv {

/// Euler vector field data E = sum ((1-q_i) t_i + r_i) d_i and the conformal
/// dimension d in E(F) = (3-d) F.
struct EulerData {
    std::vector<Rational> q, r;
    Rational d;
};

struct SuperpotentialSpec {
    Chart chart;
    LaurentPoly lambda;
    std::vector<std::string> varnames;
    std::optional<EulerData> euler;
    int n() const { return static_cast<int>(varnames.size()); }
};

/// Nonconstant lambda, n >= 1, unit-direction convention d(lambda)/d(t1) = 1.
void validate_spec(const SuperpotentialSpec& spec);

using FracMatrix = std::vector<std::vector<FracCoef>>;
using FracTensor3 = std::vector<std::vector<std::vector<FracCoef>>>;
using CoefTensor3 = std::vector<std::vector<std::vector<CoefElement>>>;

/// eta_ij = sum res_{d lambda=0} (d_i lambda d_j lambda / d_p lambda) dp.
FracMatrix compute_eta(const SuperpotentialSpec& spec);
/// c_ijk = sum res_{d lambda=0} (d_i d_j d_k lambda / d_p lambda) dp.
FracTensor3 compute_c(const SuperpotentialSpec& spec);
/// g_ij = sum res_{d lambda=0} (d_i lambda d_j lambda / (lambda d_p lambda)) dp.
/// Errors when a critical value vanishes identically (gcd(lambda, lambda')).
FracMatrix compute_intersection_form(const SuperpotentialSpec& spec);

/// Exact Gaussian elimination over the fraction field.
FracMatrix invert_matrix(const FracMatrix& m);
/// c^g_ab = eta^{g d} c_{d a b}.
FracTensor3 raise_first_index(const FracMatrix& eta_inv, const FracTensor3& c_lower);

bool matrix_is_constant(const FracMatrix& m);
std::optional<CoefTensor3> tensor_to_coef(const FracTensor3& c);

struct CheckIssue {
    std::vector<int> indices;  // 1-based
    std::string residual;
};
struct CheckReport {
    std::string name;
    bool passed = true;
    std::vector<CheckIssue> issues;
};

/// Associativity sum_m c^m_ab c^d_mg = sum_m c^m_gb c^d_ma, exact.
CheckReport check_closed_wdvv(const FracTensor3& c_raised,
                              const std::vector<std::string>& names);
/// c_1jk = eta_jk (the unit axiom forced by d(lambda)/d(t1) = 1).
CheckReport check_unit_axiom(const FracMatrix& eta, const FracTensor3& c_lower,
                             const std::vector<std::string>& names);
/// E(F) = (3-d) F up to at most quadratic polynomial terms.
CheckReport check_quasi_homogeneity(const CoefElement& F, const EulerData& euler,
                                    const std::vector<std::string>& names);

/// Solves d_j S = v[j] with integration constants fixed to zero; requires
/// cross-derivative symmetry of v. Building block for F and Omega-tilde.
CoefElement solve_gradient(const std::vector<CoefElement>& v);

/// F with third derivatives equal to c; integrability checked first.
/// Throws integrability_violation (with the failing index quadruple) or
/// not_antidifferentiable when c leaves the polynomial-exponential ring.
CoefElement reconstruct_F(const CoefTensor3& c, int n);

/// [p^-1] of lambda^{m/N}, N = top degree, via the truncated binomial
/// expansion; requires affine chart and monic lambda.
CoefElement fractional_power_residue(const LaurentPoly& lambda, long m, long N);
/// t^gamma = res_{p=inf} lambda^{(n+1-gamma)/(n+1)} dp for monic affine
/// lambda of degree n+1 (counterclockwise-in-p orientation).
CoefElement flat_coordinates_residue(const SuperpotentialSpec& spec, int gamma);

struct CriticalPointData {
    std::complex<double> p;
    std::complex<double> u;
};
struct CriticalData {
    std::vector<CriticalPointData> points;
    bool semisimple = true;
};
/// Numeric critical points and values; flags coincident values within 1e-8.
CriticalData critical_data_numeric(const SuperpotentialSpec& spec,
                                   const std::map<int, std::complex<double>>& t_assignment);

struct FrobeniusData {
    FracMatrix eta, eta_inv;
    bool eta_constant = true;
    FracTensor3 c_lower, c_raised;
    std::optional<CoefElement> F;
    std::string F_unavailable_reason;
    std::optional<FracMatrix> g;
    std::string g_unavailable_reason;
};

/// Full closed-sector derivation: eta, its inverse, c (both positions), F
/// when representable, intersection form when the stratum is generic.
FrobeniusData derive_frobenius(const SuperpotentialSpec& spec);

class integrability_violation : public std::runtime_error {
public:
    explicit integrability_violation(const std::string& w) : std::runtime_error(w) {}
};
class singular_matrix : public std::runtime_error {
public:
    explicit singular_matrix(const std::string& w) : std::runtime_error(w) {}
};
class invalid_spec : public std::runtime_error {
public:
    explicit invalid_spec(const std::string& w) : std::runtime_error(w) {}
};

}  // namespace owdvv

#endif
