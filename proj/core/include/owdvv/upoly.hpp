#ifndef OWDVV_UPOLY_HPP
#define OWDVV_UPOLY_HPP

#include <utility>
#include <vector>

#include "owdvv/fraction.hpp"
#include "owdvv/laurent.hpp"

namespace owdvv {

/// Dense univariate polynomial over a field F (used with F = FracCoef).
/// Supports the Euclidean algebra needed by the trace residue engine.
template <class F>
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
    static UPoly constant(const F& v) { return UPoly(std::vector<F>{v}); }
    static UPoly monomial(int e, const F& v) {
        std::vector<F> c(static_cast<size_t>(e) + 1);
        c.back() = v;
        return UPoly(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const F& lead() const { return c_.back(); }
    F coeff(int e) const {
        if (e < 0 || e >= static_cast<int>(c_.size())) return F();
        return c_[static_cast<size_t>(e)];
    }
    const std::vector<F>& coeffs() const { return c_; }

    UPoly operator-() const {
        UPoly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        std::vector<F> c(std::max(a.c_.size(), b.c_.size()));
        for (size_t k = 0; k < c.size(); ++k) {
            if (k < a.c_.size()) c[k] += a.c_[k];
            if (k < b.c_.size()) c[k] += b.c_[k];
        }
        return UPoly(std::move(c));
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return UPoly();
        std::vector<F> c(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return UPoly(std::move(c));
    }
    UPoly scaled(const F& s) const {
        UPoly r = *this;
        for (auto& x : r.c_) x = x * s;
        r.trim();
        return r;
    }

    /// Euclidean division, returns (quotient, remainder).
    std::pair<UPoly, UPoly> divmod(const UPoly& d) const {
        if (d.is_zero()) throw std::domain_error("UPoly: division by zero");
        UPoly r = *this, q;
        q.c_.assign(degree() >= d.degree() ? static_cast<size_t>(degree() - d.degree() + 1) : 0, F());
        F li = d.lead().inverse();
        while (!r.is_zero() && r.degree() >= d.degree()) {
            int k = r.degree() - d.degree();
            F f = r.lead() * li;
            q.c_[static_cast<size_t>(k)] = f;
            for (int j = 0; j <= d.degree(); ++j)
                r.c_[static_cast<size_t>(j + k)] -= f * d.c_[static_cast<size_t>(j)];
            r.trim();
        }
        q.trim();
        return {q, r};
    }

    UPoly derivative() const {
        if (c_.size() <= 1) return UPoly();
        std::vector<F> c(c_.size() - 1);
        for (size_t k = 1; k < c_.size(); ++k) c[k - 1] = c_[k] * F(static_cast<long>(k));
        return UPoly(std::move(c));
    }

    UPoly monic() const {
        if (is_zero()) return *this;
        return scaled(lead().inverse());
    }

    F eval(const F& x) const {
        F acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<F> c_;
};

template <class F>
UPoly<F> upoly_gcd(UPoly<F> a, UPoly<F> b) {
    while (!b.is_zero()) {
        auto [q, r] = a.divmod(b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Inverse of a modulo q via extended Euclid; throws if not coprime.
template <class F>
UPoly<F> inverse_mod(const UPoly<F>& a, const UPoly<F>& q) {
    UPoly<F> r0 = q, r1 = a.divmod(q).second;
    UPoly<F> s0, s1 = UPoly<F>::constant(F(1));
    while (!r1.is_zero()) {
        auto [quot, rem] = r0.divmod(r1);
        UPoly<F> s2 = s0 - quot * s1;
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.degree() != 0) throw std::domain_error("inverse_mod: arguments not coprime");
    return s0.scaled(r0.lead().inverse()).divmod(q).second;
}

/// Trace of the multiplication-by-h operator on F[x]/(q).
template <class F>
F trace_of_multiplication(const UPoly<F>& h, const UPoly<F>& q) {
    int n = q.degree();
    if (n <= 0) return F();
    UPoly<F> r = h.divmod(q).second;
    F tr;
    UPoly<F> xpow = UPoly<F>::constant(F(1));
    for (int k = 0; k < n; ++k) {
        UPoly<F> col = (xpow * r).divmod(q).second;
        tr += col.coeff(k);
        xpow = (UPoly<F>::monomial(1, F(1)) * xpow).divmod(q).second;
    }
    return tr;
}

/// Sum over the simple roots of q of p(a)/w(a), as a trace form.
/// Requires gcd(w, q) = 1.
template <class F>
F root_sum(const UPoly<F>& p, const UPoly<F>& w, const UPoly<F>& q) {
    UPoly<F> h = (p * inverse_mod(w, q)).divmod(q).second;
    return trace_of_multiplication(h, q);
}

/// Laurent polynomial as UPoly with the exponent shift used; shift is
/// min(0, min_exp) when keep_zero_roots, otherwise the full min_exp.
struct ClearedPoly {
    UPoly<FracCoef> poly;
    int shift = 0;
};

ClearedPoly clear_laurent(const LaurentPoly& p, bool keep_zero_roots);

}  // namespace owdvv

#endif
