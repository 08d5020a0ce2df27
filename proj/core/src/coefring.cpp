#include "owdvv/coefring.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace owdvv {

std::string default_var_name(int index) { return "t" + std::to_string(index + 1); }

// ---------------------------------------------------------------------------
// term ordering

namespace {

// graded-lex: higher total degree first; ties broken lexicographically on the
// (var, exponent) sequence.
int cmp_tmon(const TMonomial& a, const TMonomial& b) {
    long da = 0, db = 0;
    for (auto& [v, e] : a) da += e;
    for (auto& [v, e] : b) db += e;
    if (da != db) return da < db ? -1 : 1;
    auto ia = a.begin(), ib = b.begin();
    for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return ia->first < ib->first ? 1 : -1;  // smaller var index ranks higher
        if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
    }
    if (ia == a.end() && ib == b.end()) return 0;
    return ia == a.end() ? -1 : 1;
}

int cmp_rat(const Rational& a, const Rational& b) {
    if (a == b) return 0;
    return a < b ? -1 : 1;
}

// Sign of a-b at the smallest var index where they differ. Depends only on
// the difference, so the order is compatible with argument addition (needed
// for the division algorithm: lead(x*y) = lead(x)*lead(y)).
int cmp_emon(const ExpMonomial& a, const ExpMonomial& b) {
    auto ia = a.begin(), ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
        if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
            if (int s = ia->second.sign(); s != 0) return s;
            ++ia;
        } else if (ia == a.end() || ib->first < ia->first) {
            if (int s = ib->second.sign(); s != 0) return -s;
            ++ib;
        } else {
            if (int c = cmp_rat(ia->second, ib->second); c != 0) return c;
            ++ia;
            ++ib;
        }
    }
    return 0;
}

int cmp_key(const Term& a, const Term& b) {
    if (int c = cmp_tmon(a.tmon, b.tmon); c != 0) return c;
    if (int c = cmp_emon(a.emon, b.emon); c != 0) return c;
    if (a.alg.sqrt2 != b.alg.sqrt2) return a.alg.sqrt2 < b.alg.sqrt2 ? -1 : 1;
    if (a.alg.imag != b.alg.imag) return a.alg.imag < b.alg.imag ? -1 : 1;
    return 0;
}

Term mul_terms(const Term& a, const Term& b) {
    Term r;
    r.coef = a.coef * b.coef;
    int s = a.alg.sqrt2 + b.alg.sqrt2;
    if (s >= 2) {
        s -= 2;
        r.coef *= Rational(2);
    }
    int im = a.alg.imag + b.alg.imag;
    if (im >= 2) {
        im -= 2;
        r.coef *= Rational(-1);
    }
    r.alg = {s, im};
    r.tmon = a.tmon;
    for (auto& [v, e] : b.tmon) {
        long& x = r.tmon[v];
        x += e;
        if (x == 0) r.tmon.erase(v);
    }
    r.emon = a.emon;
    for (auto& [v, c] : b.emon) {
        auto it = r.emon.find(v);
        if (it == r.emon.end()) {
            r.emon.emplace(v, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) r.emon.erase(it);
        }
    }
    return r;
}

}  // namespace

bool CoefElement::key_less(const Term& a, const Term& b) { return cmp_key(a, b) < 0; }

void CoefElement::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return cmp_key(a, b) > 0; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && cmp_key(out.back(), t) == 0) {
            out.back().coef += t.coef;
            if (out.back().coef.is_zero()) out.pop_back();
        } else if (!t.coef.is_zero()) {
            out.push_back(std::move(t));
        }
    }
    terms_ = std::move(out);
}

// ---------------------------------------------------------------------------
// constructors

CoefElement CoefElement::from_rational(const Rational& r) {
    CoefElement e;
    if (!r.is_zero()) e.terms_.push_back(Term{r, {}, {}, {}});
    return e;
}

CoefElement CoefElement::var(int index, long exponent) {
    if (exponent == 0) return one();
    CoefElement e;
    Term t;
    t.coef = Rational(1);
    t.tmon[index] = exponent;
    e.terms_.push_back(std::move(t));
    return e;
}

CoefElement CoefElement::sqrt2() {
    CoefElement e;
    e.terms_.push_back(Term{Rational(1), {1, 0}, {}, {}});
    return e;
}

CoefElement CoefElement::i() {
    CoefElement e;
    e.terms_.push_back(Term{Rational(1), {0, 1}, {}, {}});
    return e;
}

CoefElement CoefElement::exponential(const ExpMonomial& argument) {
    Term t;
    t.coef = Rational(1);
    for (auto& [v, c] : argument)
        if (!c.is_zero()) t.emon.emplace(v, c);
    CoefElement e;
    e.terms_.push_back(std::move(t));
    return e;
}

CoefElement CoefElement::from_term(Term t) {
    CoefElement e;
    if (!t.coef.is_zero()) e.terms_.push_back(std::move(t));
    e.normalize();
    return e;
}

// ---------------------------------------------------------------------------
// predicates

bool CoefElement::is_one() const {
    return terms_.size() == 1 && terms_[0].coef.is_one() && terms_[0].alg == AlgebraicPart{} &&
           terms_[0].tmon.empty() && terms_[0].emon.empty();
}

bool CoefElement::is_constant() const {
    for (auto& t : terms_)
        if (!t.tmon.empty() || !t.emon.empty()) return false;
    return true;
}

bool CoefElement::is_free_of(int var) const {
    for (auto& t : terms_) {
        if (t.tmon.count(var)) return false;
        if (t.emon.count(var)) return false;
    }
    return true;
}

bool CoefElement::has_exp() const {
    for (auto& t : terms_)
        if (!t.emon.empty()) return true;
    return false;
}

long CoefElement::total_t_degree() const {
    long d = -1;
    for (auto& t : terms_) {
        long s = 0;
        for (auto& [v, e] : t.tmon) s += e;
        d = std::max(d, s);
    }
    return d;
}

long CoefElement::degree_in(int var) const {
    long d = 0;
    for (auto& t : terms_) {
        auto it = t.tmon.find(var);
        if (it != t.tmon.end()) d = std::max(d, it->second);
    }
    return d;
}

// ---------------------------------------------------------------------------
// arithmetic

CoefElement CoefElement::operator-() const {
    CoefElement r = *this;
    for (auto& t : r.terms_) t.coef = -t.coef;
    return r;
}

CoefElement& CoefElement::operator+=(const CoefElement& o) {
    terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
    normalize();
    return *this;
}

CoefElement& CoefElement::operator-=(const CoefElement& o) { return *this += -o; }

CoefElement& CoefElement::operator*=(const CoefElement& o) {
    std::vector<Term> out;
    out.reserve(terms_.size() * o.terms_.size());
    for (auto& a : terms_)
        for (auto& b : o.terms_) out.push_back(mul_terms(a, b));
    terms_ = std::move(out);
    normalize();
    return *this;
}

CoefElement CoefElement::operator*(const Rational& r) const {
    if (r.is_zero()) return zero();
    CoefElement out = *this;
    for (auto& t : out.terms_) t.coef *= r;
    return out;
}

CoefElement CoefElement::pow(long e) const {
    if (e < 0) throw std::domain_error("CoefElement::pow: negative exponent");
    CoefElement r = one(), b = *this;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

bool operator==(const CoefElement& a, const CoefElement& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (size_t k = 0; k < a.terms_.size(); ++k) {
        if (cmp_key(a.terms_[k], b.terms_[k]) != 0) return false;
        if (a.terms_[k].coef != b.terms_[k].coef) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// calculus

CoefElement CoefElement::derive(int var) const {
    CoefElement out;
    for (auto& t : terms_) {
        // power-rule part
        auto it = t.tmon.find(var);
        if (it != t.tmon.end()) {
            Term u = t;
            u.coef *= Rational(it->second);
            auto uit = u.tmon.find(var);
            if (--uit->second == 0) u.tmon.erase(uit);
            out.terms_.push_back(std::move(u));
        }
        // exp part
        auto ie = t.emon.find(var);
        if (ie != t.emon.end()) {
            Term u = t;
            u.coef *= ie->second;
            out.terms_.push_back(std::move(u));
        }
    }
    out.normalize();
    return out;
}

CoefElement CoefElement::antiderive(int var) const {
    CoefElement out;
    for (auto& t : terms_) {
        long k = 0;
        if (auto it = t.tmon.find(var); it != t.tmon.end()) k = it->second;
        auto ie = t.emon.find(var);
        if (ie == t.emon.end()) {
            Term u = t;
            u.coef /= Rational(k + 1);
            u.tmon[var] = k + 1;
            out.terms_.push_back(std::move(u));
        } else {
            // integral of t^k exp(c t) by parts
            const Rational c = ie->second;
            Rational falling(1);
            for (long m = 0; m <= k; ++m) {
                if (m > 0) falling *= Rational(k - m + 1);
                Term u = t;
                u.coef *= falling * c.pow(-(m + 1));
                if (m % 2 == 1) u.coef = -u.coef;
                if (k - m == 0)
                    u.tmon.erase(var);
                else
                    u.tmon[var] = k - m;
                out.terms_.push_back(std::move(u));
            }
        }
    }
    out.normalize();
    return out;
}

std::complex<double> CoefElement::eval(
    const std::map<int, std::complex<double>>& assignment) const {
    static const double sqrt2v = std::sqrt(2.0);
    std::complex<double> sum(0.0, 0.0);
    for (auto& t : terms_) {
        std::complex<double> v(t.coef.to_double(), 0.0);
        if (t.alg.sqrt2) v *= sqrt2v;
        if (t.alg.imag) v *= std::complex<double>(0.0, 1.0);
        for (auto& [var, e] : t.tmon) {
            auto it = assignment.find(var);
            if (it == assignment.end())
                throw missing_assignment("eval: no value for " + default_var_name(var));
            std::complex<double> b = it->second, p(1.0, 0.0);
            for (long j = 0; j < e; ++j) p *= b;
            v *= p;
        }
        if (!t.emon.empty()) {
            std::complex<double> arg(0.0, 0.0);
            for (auto& [var, c] : t.emon) {
                auto it = assignment.find(var);
                if (it == assignment.end())
                    throw missing_assignment("eval: no value for " + default_var_name(var));
                arg += c.to_double() * it->second;
            }
            v *= std::exp(arg);
        }
        sum += v;
    }
    return sum;
}

CoefElement CoefElement::substitute(int var, const CoefElement& value) const {
    CoefElement out;
    for (auto& t : terms_) {
        if (t.emon.count(var))
            throw std::domain_error("substitute: variable occurs in an exp argument");
        auto it = t.tmon.find(var);
        if (it == t.tmon.end()) {
            out += from_term(t);
        } else {
            Term u = t;
            long e = it->second;
            u.tmon.erase(var);
            out += from_term(u) * value.pow(e);
        }
    }
    return out;
}

CoefElement CoefElement::substitute_zero(int var) const {
    CoefElement out;
    for (auto& t : terms_) {
        if (t.tmon.count(var)) continue;  // t^k -> 0
        if (auto ie = t.emon.find(var); ie != t.emon.end()) {
            Term u = t;
            u.emon.erase(var);  // exp(c*0) = 1
            out.terms_.push_back(std::move(u));
        } else {
            out.terms_.push_back(t);
        }
    }
    out.normalize();
    return out;
}

// ---------------------------------------------------------------------------
// inversion and division

namespace {

CoefElement conjugate(const CoefElement& x, bool flip_sqrt2, bool flip_i) {
    CoefElement out;
    for (auto t : x.terms()) {
        if ((flip_sqrt2 && t.alg.sqrt2) || (flip_i && t.alg.imag)) {
            if ((flip_sqrt2 && t.alg.sqrt2) != (flip_i && t.alg.imag)) t.coef = -t.coef;
            // flipping both on a sqrt2*i term flips sign twice
        }
        out += CoefElement::from_term(t);
    }
    return out;
}

}  // namespace

std::optional<CoefElement> CoefElement::invert() const {
    if (is_zero()) return std::nullopt;
    if (terms_.size() == 1 && terms_[0].tmon.empty()) {
        const Term& t = terms_[0];
        Term u;
        u.coef = t.coef.inverse();
        if (t.alg.sqrt2) {
            u.alg.sqrt2 = 1;  // 1/s = s/2
            u.coef /= Rational(2);
        }
        if (t.alg.imag) {
            u.alg.imag = 1;  // 1/i = -i
            u.coef = -u.coef;
        }
        for (auto& [v, c] : t.emon) u.emon.emplace(v, -c);
        return from_term(u);
    }
    if (is_constant()) {
        // product of the three nontrivial Galois conjugates over Q
        CoefElement p = conjugate(*this, true, false) * conjugate(*this, false, true) *
                        conjugate(*this, true, true);
        CoefElement n = *this * p;
        if (n.terms_.size() != 1 || !n.terms_[0].tmon.empty() || !n.terms_[0].emon.empty() ||
            n.terms_[0].alg != AlgebraicPart{})
            return std::nullopt;
        return p * n.terms_[0].coef.inverse();
    }
    return std::nullopt;
}

std::optional<CoefElement> CoefElement::exact_divide(const CoefElement& a, const CoefElement& b) {
    if (b.is_zero()) return std::nullopt;
    if (a.is_zero()) return zero();
    CoefElement rem = a, quot;
    const Term& lead_b = b.terms_.front();
    // long division by the leading term in the canonical order
    int guard = 0;
    const int max_steps = 64 + 8 * static_cast<int>(a.terms_.size());
    while (!rem.is_zero()) {
        if (++guard > max_steps) return std::nullopt;
        const Term lt = rem.terms_.front();
        Term q;
        q.coef = lt.coef / lead_b.coef;
        int s = lt.alg.sqrt2 - lead_b.alg.sqrt2;
        if (s < 0) {
            s += 2;
            q.coef /= Rational(2);
        }
        int im = lt.alg.imag - lead_b.alg.imag;
        if (im < 0) {
            im += 2;
            q.coef = -q.coef;
        }
        q.alg = {s, im};
        q.tmon = lt.tmon;
        for (auto& [v, e] : lead_b.tmon) {
            auto it = q.tmon.find(v);
            if (it == q.tmon.end() || it->second < e) return std::nullopt;
            it->second -= e;
            if (it->second == 0) q.tmon.erase(it);
        }
        q.emon = lt.emon;
        for (auto& [v, c] : lead_b.emon) {
            auto it = q.emon.find(v);
            if (it == q.emon.end())
                q.emon.emplace(v, -c);
            else {
                it->second -= c;
                if (it->second.is_zero()) q.emon.erase(it);
            }
        }
        CoefElement qe = from_term(q);
        quot += qe;
        rem -= qe * b;
        if (!rem.is_zero() && cmp_key(rem.terms_.front(), lt) >= 0)
            return std::nullopt;  // no progress: not divisble
    }
    return quot;
}

Rational CoefElement::content() const {
    Rational g(0);
    for (auto& t : terms_) g = rational_gcd(g, t.coef);
    return g;
}

Term CoefElement::common_term_factor(const CoefElement& a, const CoefElement& b) {
    Term g;
    g.coef = rational_gcd(a.content(), b.content());
    bool first = true;
    auto fold = [&](const Term& t) {
        if (first) {
            g.alg = t.alg;
            g.tmon = t.tmon;
            g.emon = t.emon;
            first = false;
            return;
        }
        g.alg.sqrt2 = std::min(g.alg.sqrt2, t.alg.sqrt2);
        g.alg.imag = std::min(g.alg.imag, t.alg.imag);
        for (auto it = g.tmon.begin(); it != g.tmon.end();) {
            auto jt = t.tmon.find(it->first);
            long e = jt == t.tmon.end() ? 0 : jt->second;
            it->second = std::min(it->second, e);
            it = it->second == 0 ? g.tmon.erase(it) : std::next(it);
        }
        for (auto it = g.emon.begin(); it != g.emon.end();) {
            auto jt = t.emon.find(it->first);
            Rational c = jt == t.emon.end() ? Rational(0) : jt->second;
            if (c < it->second) it->second = c;
            it = it->second.is_zero() ? g.emon.erase(it) : std::next(it);
        }
        // exp coefficients present in t but absent in g stay out (min with 0),
        // unless negative: a uniformly negative coefficient is worth pulling
    };
    for (auto& t : a.terms_) fold(t);
    for (auto& t : b.terms_) fold(t);
    return g;
}

CoefElement CoefElement::divide_by_term(const Term& g) const {
    CoefElement out;
    out.terms_.reserve(terms_.size());
    for (auto t : terms_) {
        t.coef /= g.coef;
        t.alg.sqrt2 -= g.alg.sqrt2;
        t.alg.imag -= g.alg.imag;
        for (auto& [v, e] : g.tmon) {
            auto it = t.tmon.find(v);
            if (it == t.tmon.end() || it->second < e)
                throw std::logic_error("divide_by_term: factor does not divide");
            it->second -= e;
            if (it->second == 0) t.tmon.erase(it);
        }
        for (auto& [v, c] : g.emon) {
            auto it = t.emon.find(v);
            if (it == t.emon.end())
                t.emon.emplace(v, -c);
            else {
                it->second -= c;
                if (it->second.is_zero()) t.emon.erase(it);
            }
        }
        out.terms_.push_back(std::move(t));
    }
    out.normalize();
    return out;
}

// ---------------------------------------------------------------------------
// rendering

namespace {

std::string var_name(int index, const std::vector<std::string>& names) {
    if (index >= 0 && static_cast<size_t>(index) < names.size()) return names[index];
    return default_var_name(index);
}

std::string render_term_body(const Term& t, const std::vector<std::string>& names) {
    std::ostringstream os;
    bool first = true;
    auto sep = [&]() {
        if (!first) os << "*";
        first = false;
    };
    Rational c = t.coef;
    if (c.sign() < 0) c = -c;
    if (!c.is_one() || (t.alg == AlgebraicPart{} && t.tmon.empty() && t.emon.empty())) {
        sep();
        os << c.str();
    }
    if (t.alg.sqrt2) {
        sep();
        os << "sqrt2";
    }
    if (t.alg.imag) {
        sep();
        os << "I";
    }
    for (auto& [v, e] : t.tmon) {
        sep();
        os << var_name(v, names);
        if (e != 1) os << "^" << e;
    }
    if (!t.emon.empty()) {
        sep();
        os << "exp(";
        bool efirst = true;
        for (auto& [v, cc] : t.emon) {
            Rational a = cc;
            if (efirst) {
                if (a.sign() < 0) {
                    os << "-";
                    a = -a;
                }
            } else {
                os << (a.sign() < 0 ? " - " : " + ");
                if (a.sign() < 0) a = -a;
            }
            efirst = false;
            if (!a.is_one()) os << a.str() << "*";
            os << var_name(v, names);
        }
        os << ")";
    }
    return os.str();
}

}  // namespace

std::string CoefElement::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& t : terms_) {
        if (first) {
            if (t.coef.sign() < 0) os << "-";
        } else {
            os << (t.coef.sign() < 0 ? " - " : " + ");
        }
        first = false;
        os << render_term_body(t, names);
    }
    return os.str();
}

}  // namespace owdvv
