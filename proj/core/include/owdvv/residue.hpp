#ifndef OWDVV_RESIDUE_HPP
#define OWDVV_RESIDUE_HPP

#include <complex>
#include <vector>

#include "owdvv/series.hpp"
#include "owdvv/upoly.hpp"

namespace owdvv {

enum class ResidueLocus { CriticalPoints, AtInfinity, AtZero, AtPoint };
enum class BoundaryPoint { Infinity, Zero };

/// Residue-sum request for the integrand f dp against the superpotential
/// lambda; the default locus sums over the critical points d lambda = 0.
struct ResidueRequest {
    RatFunc integrand;
    LaurentPoly lambda;
    ResidueLocus locus = ResidueLocus::CriticalPoints;
    std::complex<double> point{0.0, 0.0};  // AtPoint (numeric engine)
};

/// Chart boundary points implied by the chart and lambda's pole structure:
/// affine polynomial -> {infinity}; affine Laurent -> {infinity, zero};
/// exponential -> {zero, infinity}.
std::vector<BoundaryPoint> boundary_points(const Chart& chart, const LaurentPoly& lambda);

/// Residue of f d(chart variable) at a boundary point, with the orientation
/// convention res_inf(f dx) = -[x^-1] f and finite residues counterclockwise.
FracCoef residue_at_boundary(const RatFunc& f, BoundaryPoint which);

/// Exact sum of residues of f dp over the critical points, computed as minus
/// the boundary residues (global residue theorem). Requires every finite pole
/// of the integrand to sit at d lambda = 0 or at the chart boundary; verified,
/// pole_outside_locus otherwise. `extra_pole_factors` extends the allowed
/// locus (used by the intersection form for the zeros of lambda).
FracCoef residue_complement(const ResidueRequest& req,
                            const std::vector<LaurentPoly>& extra_pole_factors = {});

/// Exact sum over d lambda = 0 of (numerator / d_p lambda) dp as a trace form
/// on K[x]/(W), W the polynomial part of d_p lambda. Requires simple critical
/// points (degenerate_critical_points otherwise).
FracCoef residue_trace(const LaurentPoly& numerator, const LaurentPoly& lambda);

/// Sum over the simple roots of `modulus` of the residues of f dp there,
/// where f = p_num / (modulus * rest) with rest nonvanishing on the roots.
/// Shared trace-form machinery, exposed for the intersection form and tests.
FracCoef residue_trace_over(const RatFunc& integrand_dp, const LaurentPoly& modulus,
                            const Chart& chart);

/// Floating residue sum by contour quadrature: companion-matrix roots of the
/// critical polynomial, adaptive circle radii, trapezoid rule (512 nodes),
/// magnitude-sorted summation. Refuses clustered roots.
std::complex<double> residue_numeric(const ResidueRequest& req,
                                     const std::map<int, std::complex<double>>& t_assignment);

/// Numeric roots of the polynomial part of d_p lambda at the assignment.
std::vector<std::complex<double>> critical_points_numeric(
    const LaurentPoly& lambda, const std::map<int, std::complex<double>>& t_assignment);

class pole_outside_locus : public std::runtime_error {
public:
    explicit pole_outside_locus(const std::string& w) : std::runtime_error(w) {}
};
class degenerate_critical_points : public std::runtime_error {
public:
    explicit degenerate_critical_points(const std::string& w) : std::runtime_error(w) {}
};
class clustered_roots : public std::runtime_error {
public:
    explicit clustered_roots(const std::string& w) : std::runtime_error(w) {}
};

}  // namespace owdvv

#endif
