#ifndef OWDVV_LAURENT_HPP
#define OWDVV_LAURENT_HPP

#include <map>

#include "owdvv/fraction.hpp"

namespace owdvv {

enum class ChartKind { Affine, Exponential };
enum class Kappa { One, I };

/// Chart for the superpotential variable: affine p, or z = e^{kappa p} with
/// kappa in {1, i}. In the exponential chart d/dp acts as kappa*z*d/dz and
/// dp = dz/(kappa*z).
struct Chart {
    ChartKind kind = ChartKind::Affine;
    Kappa kappa = Kappa::One;

    static Chart affine() { return {ChartKind::Affine, Kappa::One}; }
    static Chart exponential(Kappa k) { return {ChartKind::Exponential, k}; }

    bool is_affine() const { return kind == ChartKind::Affine; }
    CoefElement kappa_coef() const;
    CoefElement kappa_inv_coef() const;
    std::complex<double> kappa_value() const;
    std::string var_symbol() const { return is_affine() ? "p" : "z"; }

    friend bool operator==(const Chart&, const Chart&) = default;
};

/// Laurent polynomial in the chart variable with CoefElement coefficients.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(Chart chart) : chart_(chart) {}
    static LaurentPoly constant(Chart chart, const CoefElement& c);
    static LaurentPoly monomial(Chart chart, int exponent, const CoefElement& c);

    const Chart& chart() const { return chart_; }
    const std::map<int, CoefElement>& coeffs() const { return c_; }
    CoefElement coeff(int exponent) const;
    void set_coeff(int exponent, const CoefElement& c);

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const;  // only exponent 0
    int min_exp() const;       // requires nonzero
    int max_exp() const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
    LaurentPoly operator*(const CoefElement& c) const;
    LaurentPoly operator*(const Rational& r) const;
    LaurentPoly pow(long e) const;
    LaurentPoly shifted(int k) const;  // multiply by x^k

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    /// Coefficient-wise partial derivative in flat variable `var`.
    LaurentPoly derive_t(int var) const;
    /// d/d(chart variable), termwise.
    LaurentPoly d_chart() const;
    /// d/dp: affine chart termwise power rule; exponential chart kappa*z*d/dz.
    LaurentPoly d_dp() const;

    std::complex<double> eval(std::complex<double> x,
                              const std::map<int, std::complex<double>>& t) const;

    Rational content() const;
    std::string str(const std::vector<std::string>& names = {}) const;
    /// Human-readable form: z-chart terms map back to trig/exp notation.
    std::string pretty_str(const std::vector<std::string>& names = {}) const;

private:
    void prune(int exponent);
    Chart chart_;
    std::map<int, CoefElement> c_;
};

/// Antiderivative data: laurent part plus the coefficient of the p-linear
/// term (exponential chart: the z^0 part integrates to c*p; affine chart:
/// a p^-1 term integrates to c*log p).
struct Primitive {
    LaurentPoly laurent;
    CoefElement log_coefficient;
};

/// Chart-aware primitive with the p-free constant fixed to zero.
Primitive primitive_in_p(const LaurentPoly& f);

/// Reduced rational function num/den in the chart variable. Reduction:
/// common monomial factor, rational content, canonical denominator sign.
class RatFunc {
public:
    RatFunc() = default;
    RatFunc(LaurentPoly num, LaurentPoly den);
    explicit RatFunc(const LaurentPoly& num);
    static RatFunc zero(Chart chart) { return RatFunc(LaurentPoly(chart)); }
    static RatFunc constant(Chart chart, const CoefElement& c) {
        return RatFunc(LaurentPoly::constant(chart, c));
    }
    static RatFunc from_frac(Chart chart, const FracCoef& f);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    const Chart& chart() const { return num_.chart(); }

    bool is_zero() const { return num_.is_zero(); }

    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);
    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }

    /// Exact equality by cross multiplication.
    friend bool operator==(const RatFunc& a, const RatFunc& b);
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc derive_t(int var) const;
    RatFunc d_dp() const;

    /// d/dp vanishes identically (chart-variable-free).
    bool is_p_free() const;
    /// The constant value of a p-free function.
    FracCoef constant_value() const;

    std::complex<double> eval(std::complex<double> x,
                              const std::map<int, std::complex<double>>& t) const;
    std::string str(const std::vector<std::string>& names = {}) const;

private:
    void reduce();
    LaurentPoly num_, den_;
};

class division_by_zero : public std::runtime_error {
public:
    explicit division_by_zero(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace owdvv

#endif
