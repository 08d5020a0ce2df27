#include "owdvv/laurent.hpp"

#include <sstream>

namespace owdvv {

CoefElement Chart::kappa_coef() const {
    return kappa == Kappa::One ? CoefElement::one() : CoefElement::i();
}

CoefElement Chart::kappa_inv_coef() const {
    return kappa == Kappa::One ? CoefElement::one() : -CoefElement::i();
}

std::complex<double> Chart::kappa_value() const {
    return kappa == Kappa::One ? std::complex<double>(1, 0) : std::complex<double>(0, 1);
}

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly LaurentPoly::constant(Chart chart, const CoefElement& c) {
    LaurentPoly p(chart);
    if (!c.is_zero()) p.c_[0] = c;
    return p;
}

LaurentPoly LaurentPoly::monomial(Chart chart, int exponent, const CoefElement& c) {
    LaurentPoly p(chart);
    if (!c.is_zero()) p.c_[exponent] = c;
    return p;
}

CoefElement LaurentPoly::coeff(int exponent) const {
    auto it = c_.find(exponent);
    return it == c_.end() ? CoefElement::zero() : it->second;
}

void LaurentPoly::set_coeff(int exponent, const CoefElement& c) {
    if (c.is_zero())
        c_.erase(exponent);
    else
        c_[exponent] = c;
}

bool LaurentPoly::is_constant() const {
    return c_.empty() || (c_.size() == 1 && c_.begin()->first == 0);
}

int LaurentPoly::min_exp() const {
    if (c_.empty()) throw std::logic_error("min_exp of zero polynomial");
    return c_.begin()->first;
}

int LaurentPoly::max_exp() const {
    if (c_.empty()) throw std::logic_error("max_exp of zero polynomial");
    return c_.rbegin()->first;
}

void LaurentPoly::prune(int exponent) {
    auto it = c_.find(exponent);
    if (it != c_.end() && it->second.is_zero()) c_.erase(it);
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(chart_);
    for (auto& [e, c] : c_) r.c_[e] = -c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (auto& [e, c] : o.c_) {
        auto it = c_.find(e);
        if (it == c_.end()) {
            c_[e] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) c_.erase(it);
        }
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    LaurentPoly r(chart_);
    for (auto& [e1, c1] : c_)
        for (auto& [e2, c2] : o.c_) {
            CoefElement prod = c1 * c2;
            if (prod.is_zero()) continue;
            auto it = r.c_.find(e1 + e2);
            if (it == r.c_.end()) {
                r.c_[e1 + e2] = prod;
            } else {
                it->second += prod;
                if (it->second.is_zero()) r.c_.erase(it);
            }
        }
    *this = std::move(r);
    return *this;
}

LaurentPoly LaurentPoly::operator*(const CoefElement& c) const {
    LaurentPoly r(chart_);
    if (c.is_zero()) return r;
    for (auto& [e, a] : c_) {
        CoefElement prod = a * c;
        if (!prod.is_zero()) r.c_[e] = prod;
    }
    return r;
}

LaurentPoly LaurentPoly::operator*(const Rational& x) const {
    LaurentPoly r(chart_);
    if (x.is_zero()) return r;
    for (auto& [e, a] : c_) r.c_[e] = a * x;
    return r;
}

LaurentPoly LaurentPoly::pow(long e) const {
    if (e < 0) throw std::domain_error("LaurentPoly::pow: negative exponent");
    LaurentPoly r = constant(chart_, CoefElement::one());
    LaurentPoly b = *this;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly r(chart_);
    for (auto& [e, c] : c_) r.c_[e + k] = c;
    return r;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    auto ia = a.c_.begin();
    for (auto& [e, c] : b.c_) {
        if (ia->first != e || !(ia->second == c)) return false;
        ++ia;
    }
    return true;
}

LaurentPoly LaurentPoly::derive_t(int var) const {
    LaurentPoly r(chart_);
    for (auto& [e, c] : c_) {
        CoefElement d = c.derive(var);
        if (!d.is_zero()) r.c_[e] = d;
    }
    return r;
}

LaurentPoly LaurentPoly::d_chart() const {
    LaurentPoly r(chart_);
    for (auto& [e, c] : c_) {
        if (e == 0) continue;
        r.c_[e - 1] = c * Rational(e);
    }
    return r;
}

LaurentPoly LaurentPoly::d_dp() const {
    if (chart_.is_affine()) return d_chart();
    LaurentPoly r(chart_);
    CoefElement kap = chart_.kappa_coef();
    for (auto& [e, c] : c_) {
        if (e == 0) continue;
        r.c_[e] = c * kap * Rational(e);
    }
    return r;
}

std::complex<double> LaurentPoly::eval(std::complex<double> x,
                                       const std::map<int, std::complex<double>>& t) const {
    std::complex<double> sum(0, 0);
    for (auto& [e, c] : c_) {
        std::complex<double> xp(1, 0);
        if (e >= 0)
            for (int j = 0; j < e; ++j) xp *= x;
        else
            for (int j = 0; j < -e; ++j) xp /= x;
        sum += c.eval(t) * xp;
    }
    return sum;
}

Rational LaurentPoly::content() const {
    Rational g(0);
    for (auto& [e, c] : c_) g = rational_gcd(g, c.content());
    return g;
}

std::string LaurentPoly::str(const std::vector<std::string>& names) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    const std::string x = chart_.var_symbol();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        std::string cs = it->second.str(names);
        bool neg = cs.size() && cs[0] == '-';
        if (first) {
            if (neg) {
                os << "-";
                cs = cs.substr(1);
            }
        } else {
            os << (neg ? " - " : " + ");
            if (neg) cs = cs.substr(1);
        }
        first = false;
        bool needs_paren = cs.find(" + ") != std::string::npos || cs.find(" - ") != std::string::npos;
        if (it->first == 0) {
            os << (needs_paren ? "(" + cs + ")" : cs);
        } else {
            if (cs == "1")
                ;
            else
                os << (needs_paren ? "(" + cs + ")" : cs) << "*";
            os << x;
            if (it->first != 1) os << "^" << it->first;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// pretty rendering (z-chart back to trig / exp-of-p notation)

namespace {

std::string render_with_p_shift(const CoefElement& c, long pk, Kappa kappa,
                                const std::vector<std::string>& names) {
    // Renders c * exp(kappa * pk * p) merging the exponential factors, for
    // the kappa = 1 chart; pk is the z-exponent.
    std::ostringstream os;
    bool first = true;
    (void)kappa;
    for (auto& t : c.terms()) {
        Rational r = t.coef;
        if (first) {
            if (r.sign() < 0) {
                os << "-";
                r = -r;
            }
        } else {
            os << (r.sign() < 0 ? " - " : " + ");
            if (r.sign() < 0) r = -r;
        }
        first = false;
        bool any = false;
        if (!r.is_one()) {
            os << r.str();
            any = true;
        }
        if (t.alg.sqrt2) {
            os << (any ? "*" : "") << "sqrt2";
            any = true;
        }
        if (t.alg.imag) {
            os << (any ? "*" : "") << "I";
            any = true;
        }
        for (auto& [v, e] : t.tmon) {
            os << (any ? "*" : "")
               << (static_cast<size_t>(v) < names.size() ? names[v] : default_var_name(v));
            if (e != 1) os << "^" << e;
            any = true;
        }
        if (t.emon.empty() && pk == 0) {
            if (!any) os << "1";
            continue;
        }
        // merged exponential: exp(arg +- pk*p)
        os << (any ? "*" : "") << "exp(";
        bool efirst = true;
        for (auto& [v, cc] : t.emon) {
            Rational a = cc;
            if (!efirst) {
                os << (a.sign() < 0 ? " - " : " + ");
                if (a.sign() < 0) a = -a;
            } else if (a.sign() < 0) {
                os << "-";
                a = -a;
            }
            efirst = false;
            if (!a.is_one()) os << a.str() << "*";
            os << (static_cast<size_t>(v) < names.size() ? names[v] : default_var_name(v));
        }
        if (pk != 0) {
            if (!efirst) os << (pk < 0 ? " - " : " + ");
            else if (pk < 0)
                os << "-";
            long a = pk < 0 ? -pk : pk;
            if (a != 1) os << a << "*";
            os << "p";
        }
        os << ")";
    }
    return os.str();
}

}  // namespace

std::string LaurentPoly::pretty_str(const std::vector<std::string>& names) const {
    if (chart_.is_affine()) return str(names);
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const std::string& s) {
        if (s.empty() || s == "0") return;
        if (!first) os << (s[0] == '-' ? " - " : " + ") << (s[0] == '-' ? s.substr(1) : s);
        else
            os << s;
        first = false;
    };
    if (chart_.kappa == Kappa::I) {
        // z^k + z^-k = 2 cos(kp), z^k - z^-k = 2 i sin(kp)
        auto coef_times = [&](const CoefElement& cc, const std::string& fn) {
            std::string cs = cc.str(names);
            if (cs == "1") return fn;
            if (cs == "-1") return "-" + fn;
            bool paren =
                cs.find(" + ") != std::string::npos || cs.find(" - ") != std::string::npos;
            return (paren ? "(" + cs + ")*" : cs + "*") + fn;
        };
        CoefElement c0 = coeff(0);
        if (!c0.is_zero()) emit(c0.str(names));
        int kmax = std::max(std::abs(min_exp()), std::abs(max_exp()));
        for (int k = 1; k <= kmax; ++k) {
            CoefElement a = coeff(k), b = coeff(-k);
            CoefElement ccos = a + b;
            CoefElement csin = (a - b) * CoefElement::i();
            std::string arg = (k == 1 ? std::string("p") : std::to_string(k) + "*p");
            if (!ccos.is_zero()) emit(coef_times(ccos, "cos(" + arg + ")"));
            if (!csin.is_zero()) emit(coef_times(csin, "sin(" + arg + ")"));
        }
        return first ? "0" : os.str();
    }
    // kappa = 1: z^k -> exp(k p), merging exponential prefactors
    for (auto& [e, c] : c_) emit(render_with_p_shift(c, e, chart_.kappa, names));
    return first ? "0" : os.str();
}

// ---------------------------------------------------------------------------
// primitive

Primitive primitive_in_p(const LaurentPoly& f) {
    Primitive out{LaurentPoly(f.chart()), CoefElement::zero()};
    if (f.chart().is_affine()) {
        for (auto& [e, c] : f.coeffs()) {
            if (e == -1)
                out.log_coefficient = c;
            else
                out.laurent.set_coeff(e + 1, c * Rational(1, e + 1));
        }
    } else {
        CoefElement kinv = f.chart().kappa_inv_coef();
        for (auto& [e, c] : f.coeffs()) {
            if (e == 0)
                out.log_coefficient = c;  // integrates to c * p
            else
                out.laurent.set_coeff(e, c * kinv * Rational(1, e));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// RatFunc

RatFunc::RatFunc(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw division_by_zero("RatFunc: zero denominator");
    if (!(num_.chart() == den_.chart())) throw std::logic_error("RatFunc: chart mismatch");
    reduce();
}

RatFunc::RatFunc(const LaurentPoly& num)
    : num_(num), den_(LaurentPoly::constant(num.chart(), CoefElement::one())) {}

RatFunc RatFunc::from_frac(Chart chart, const FracCoef& f) {
    return RatFunc(LaurentPoly::constant(chart, f.num()), LaurentPoly::constant(chart, f.den()));
}

void RatFunc::reduce() {
    // common monomial: shift so den starts at exponent 0
    int shift = den_.min_exp();
    if (shift != 0) den_ = den_.shifted(-shift);
    if (!num_.is_zero() && shift != 0) num_ = num_.shifted(-shift);
    if (num_.is_zero()) {
        den_ = LaurentPoly::constant(den_.chart(), CoefElement::one());
        return;
    }
    // joint rational content
    Rational g = rational_gcd(num_.content(), den_.content());
    if (!g.is_one() && !g.is_zero()) {
        Rational inv = g.inverse();
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
    // canonical sign from den's lowest coefficient's leading term
    if (den_.coeffs().begin()->second.terms().front().coef.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    LaurentPoly n = num_ * o.den_ + o.num_ * den_;
    LaurentPoly d = den_ * o.den_;
    *this = RatFunc(std::move(n), std::move(d));
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    *this = RatFunc(num_ * o.num_, den_ * o.den_);
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
    if (o.is_zero()) throw division_by_zero("RatFunc: division by zero rational function");
    *this = RatFunc(num_ * o.den_, den_ * o.num_);
    return *this;
}

bool operator==(const RatFunc& a, const RatFunc& b) {
    return (a.num_ * b.den_ - b.num_ * a.den_).is_zero();
}

RatFunc RatFunc::derive_t(int var) const {
    LaurentPoly n = num_.derive_t(var) * den_ - num_ * den_.derive_t(var);
    return RatFunc(std::move(n), den_ * den_);
}

RatFunc RatFunc::d_dp() const {
    LaurentPoly n = num_.d_dp() * den_ - num_ * den_.d_dp();
    return RatFunc(std::move(n), den_ * den_);
}

bool RatFunc::is_p_free() const {
    if (num_.is_zero()) return true;
    return (num_.d_dp() * den_ - num_ * den_.d_dp()).is_zero();
}

FracCoef RatFunc::constant_value() const {
    if (num_.is_zero()) return FracCoef();
    if (!is_p_free()) throw std::logic_error("constant_value: function depends on the chart variable");
    // num = c * den; read c off any exponent where den has a coefficient
    int e = den_.coeffs().begin()->first;
    return FracCoef(num_.coeff(e), den_.coeff(e));
}

std::complex<double> RatFunc::eval(std::complex<double> x,
                                   const std::map<int, std::complex<double>>& t) const {
    return num_.eval(x, t) / den_.eval(x, t);
}

std::string RatFunc::str(const std::vector<std::string>& names) const {
    if (den_.is_constant() && den_.coeff(0).is_one()) return num_.str(names);
    return "(" + num_.str(names) + ")/(" + den_.str(names) + ")";
}

}  // namespace owdvv
