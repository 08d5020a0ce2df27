#ifndef OWDVV_COEFRING_HPP
#define OWDVV_COEFRING_HPP

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "owdvv/rational.hpp"

namespace owdvv {

/// Exponents of sqrt2 and i, both canonically in {0,1}; the reductions
/// s^2 -> 2 and i^2 -> -1 are folded into the rational coefficient.
struct AlgebraicPart {
    int sqrt2 = 0;
    int imag = 0;
    friend bool operator==(const AlgebraicPart&, const AlgebraicPart&) = default;
    friend auto operator<=>(const AlgebraicPart&, const AlgebraicPart&) = default;
};

/// Monomial in the flat variables, var index (0-based) -> positive exponent.
using TMonomial = std::map<int, long>;

/// exp(sum_j c_j t^j): var index -> nonzero rational coefficient.
/// The empty map is the multiplicative unit.
using ExpMonomial = std::map<int, Rational>;

struct Term {
    Rational coef;
    AlgebraicPart alg;
    TMonomial tmon;
    ExpMonomial emon;
};

/// Element of Q(sqrt2, i)[t^1..t^n; exp-generators], canonical ordered form.
/// Immutable value semantics; all operations are pure.
class CoefElement {
public:
    CoefElement() = default;
    CoefElement(long n) { *this = from_rational(Rational(n)); }
    explicit CoefElement(const Rational& r) { *this = from_rational(r); }

    static CoefElement zero() { return CoefElement(); }
    static CoefElement one() { return CoefElement(1); }
    static CoefElement from_rational(const Rational& r);
    static CoefElement var(int index, long exponent = 1);
    static CoefElement sqrt2();
    static CoefElement i();
    /// exp(sum c_j t^j) given the linear form.
    static CoefElement exponential(const ExpMonomial& argument);
    static CoefElement from_term(Term t);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    /// No t-dependence at all (empty t-monomials and empty exp arguments).
    bool is_constant() const;
    /// True if the variable appears nowhere (monomials or exp arguments).
    bool is_free_of(int var) const;
    bool has_exp() const;
    long total_t_degree() const;  // max over terms; -1 for zero
    long degree_in(int var) const;

    const std::vector<Term>& terms() const { return terms_; }

    CoefElement operator-() const;
    CoefElement& operator+=(const CoefElement& o);
    CoefElement& operator-=(const CoefElement& o);
    CoefElement& operator*=(const CoefElement& o);
    friend CoefElement operator+(CoefElement a, const CoefElement& b) { return a += b; }
    friend CoefElement operator-(CoefElement a, const CoefElement& b) { return a -= b; }
    friend CoefElement operator*(CoefElement a, const CoefElement& b) { return a *= b; }
    CoefElement operator*(const Rational& r) const;
    CoefElement pow(long e) const;  // e >= 0

    friend bool operator==(const CoefElement& a, const CoefElement& b);
    friend bool operator!=(const CoefElement& a, const CoefElement& b) { return !(a == b); }

    /// Partial derivative in flat variable `var`.
    CoefElement derive(int var) const;
    /// Antiderivative in `var` with the t-free-in-var integration constant
    /// fixed to zero. Throws not_antidifferentiable for terms outside the
    /// ring's image (exp coefficient zero cannot happen; only genuine
    /// obstructions like negative-power inputs reach this via callers).
    CoefElement antiderive(int var) const;

    std::complex<double> eval(const std::map<int, std::complex<double>>& assignment) const;

    /// Substitute variable -> value (polynomial substitution). Throws if the
    /// variable occurs inside an exp argument.
    CoefElement substitute(int var, const CoefElement& value) const;
    CoefElement substitute_zero(int var) const;

    /// Multiplicative inverse when one exists in the ring (single-term units
    /// and algebraic constants); nullopt otherwise.
    std::optional<CoefElement> invert() const;

    /// Exact quotient a/b when it exists in the ring.
    static std::optional<CoefElement> exact_divide(const CoefElement& a, const CoefElement& b);

    /// Rational content: gcd of the rational coefficients (0 for zero element).
    Rational content() const;

    /// Largest single-term factor dividing every term of both arguments
    /// (t-exponent minima, exp-argument minima, algebraic minima, rational
    /// content gcd). Both must be nonzero.
    static Term common_term_factor(const CoefElement& a, const CoefElement& b);
    /// Exact division by a single term produced by common_term_factor.
    CoefElement divide_by_term(const Term& g) const;

    /// Canonical rendering; names[i] used for var i, defaults to t1,t2,...
    std::string str(const std::vector<std::string>& names = {}) const;

    /// Total strict order on term keys (graded-lex t-monomial, then exp
    /// argument, then algebraic part); used for the canonical form.
    static bool key_less(const Term& a, const Term& b);

private:
    void normalize();
    std::vector<Term> terms_;  // sorted descending by key, nonzero coefs
};

class not_antidifferentiable : public std::runtime_error {
public:
    explicit not_antidifferentiable(const std::string& what) : std::runtime_error(what) {}
};

class missing_assignment : public std::runtime_error {
public:
    explicit missing_assignment(const std::string& what) : std::runtime_error(what) {}
};

std::string default_var_name(int index);

}  // namespace owdvv

#endif
