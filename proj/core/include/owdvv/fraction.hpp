#ifndef OWDVV_FRACTION_HPP
#define OWDVV_FRACTION_HPP

#include "owdvv/coefring.hpp"

namespace owdvv {

/// Element of the fraction field of CoefElement. Normalization is partial
/// (rational content, denominator sign, exact-quotient collapse); equality
/// goes through cross multiplication and stays exact regardless.
class FracCoef {
public:
    FracCoef() : num_(CoefElement::zero()), den_(CoefElement::one()) {}
    FracCoef(long n) : num_(n), den_(CoefElement::one()) {}
    FracCoef(const CoefElement& c) : num_(c), den_(CoefElement::one()) {}
    explicit FracCoef(const Rational& r) : num_(CoefElement(r)), den_(CoefElement::one()) {}
    FracCoef(CoefElement num, CoefElement den);

    const CoefElement& num() const { return num_; }
    const CoefElement& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    /// Denominator is exactly 1 (after normalization).
    bool is_polynomial() const { return den_.is_one(); }
    /// No t-dependence: every derivative vanishes.
    bool is_constant() const;

    /// The CoefElement value when the quotient is exact; nullopt otherwise.
    std::optional<CoefElement> to_coef() const;

    FracCoef operator-() const;
    FracCoef& operator+=(const FracCoef& o);
    FracCoef& operator-=(const FracCoef& o);
    FracCoef& operator*=(const FracCoef& o);
    FracCoef& operator/=(const FracCoef& o);
    friend FracCoef operator+(FracCoef a, const FracCoef& b) { return a += b; }
    friend FracCoef operator-(FracCoef a, const FracCoef& b) { return a -= b; }
    friend FracCoef operator*(FracCoef a, const FracCoef& b) { return a *= b; }
    friend FracCoef operator/(FracCoef a, const FracCoef& b) { return a /= b; }

    FracCoef inverse() const;

    friend bool operator==(const FracCoef& a, const FracCoef& b);
    friend bool operator!=(const FracCoef& a, const FracCoef& b) { return !(a == b); }

    FracCoef derive(int var) const;
    std::complex<double> eval(const std::map<int, std::complex<double>>& assignment) const;
    std::string str(const std::vector<std::string>& names = {}) const;

private:
    void normalize();
    CoefElement num_, den_;
};

}  // namespace owdvv

#endif
