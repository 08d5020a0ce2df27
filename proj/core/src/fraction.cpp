#include "owdvv/fraction.hpp"

namespace owdvv {

FracCoef::FracCoef(CoefElement num, CoefElement den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("FracCoef: zero denominator");
    normalize();
}

void FracCoef::normalize() {
    if (num_.is_zero()) {
        den_ = CoefElement::one();
        return;
    }
    if (den_.is_one()) return;
    if (auto inv = den_.invert()) {  // single-term units and algebraic constants
        num_ *= *inv;
        den_ = CoefElement::one();
        return;
    }
    if (auto q = CoefElement::exact_divide(num_, den_)) {
        num_ = *q;
        den_ = CoefElement::one();
        return;
    }
    // cancel the largest common single-term factor (keeps denominators from
    // growing multiplicatively across additions), then the rational content
    Term g = CoefElement::common_term_factor(num_, den_);
    bool trivial = g.coef.is_one() && g.alg == AlgebraicPart{} && g.tmon.empty() && g.emon.empty();
    if (!trivial) {
        num_ = num_.divide_by_term(g);
        den_ = den_.divide_by_term(g);
    }
    if (den_.terms().front().coef.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

bool FracCoef::is_constant() const {
    if (num_.is_zero()) return true;
    if (num_.is_constant() && den_.is_constant()) return true;
    // d/dt (num/den) = 0 for every variable, tested by cross multiplication
    std::map<int, char> vars;
    for (auto& t : num_.terms()) {
        for (auto& [v, e] : t.tmon) vars[v] = 1;
        for (auto& [v, c] : t.emon) vars[v] = 1;
    }
    for (auto& t : den_.terms()) {
        for (auto& [v, e] : t.tmon) vars[v] = 1;
        for (auto& [v, c] : t.emon) vars[v] = 1;
    }
    for (auto& [v, _] : vars) {
        CoefElement lhs = num_.derive(v) * den_ - num_ * den_.derive(v);
        if (!lhs.is_zero()) return false;
    }
    return true;
}

std::optional<CoefElement> FracCoef::to_coef() const {
    if (den_.is_one()) return num_;
    return CoefElement::exact_divide(num_, den_);
}

FracCoef FracCoef::operator-() const {
    FracCoef r = *this;
    r.num_ = -r.num_;
    return r;
}

FracCoef& FracCoef::operator+=(const FracCoef& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

FracCoef& FracCoef::operator-=(const FracCoef& o) { return *this += -o; }

FracCoef& FracCoef::operator*=(const FracCoef& o) {
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

FracCoef& FracCoef::operator/=(const FracCoef& o) {
    if (o.is_zero()) throw std::domain_error("FracCoef: division by zero");
    num_ = num_ * o.den_;
    den_ = den_ * o.num_;
    normalize();
    return *this;
}

FracCoef FracCoef::inverse() const {
    if (is_zero()) throw std::domain_error("FracCoef: inverse of zero");
    return FracCoef(den_, num_);
}

bool operator==(const FracCoef& a, const FracCoef& b) {
    return (a.num_ * b.den_ - b.num_ * a.den_).is_zero();
}

FracCoef FracCoef::derive(int var) const {
    CoefElement n = num_.derive(var) * den_ - num_ * den_.derive(var);
    return FracCoef(n, den_ * den_);
}

std::complex<double> FracCoef::eval(
    const std::map<int, std::complex<double>>& assignment) const {
    return num_.eval(assignment) / den_.eval(assignment);
}

std::string FracCoef::str(const std::vector<std::string>& names) const {
    if (den_.is_one()) return num_.str(names);
    return "(" + num_.str(names) + ")/(" + den_.str(names) + ")";
}

}  // namespace owdvv
