#pragma once

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace gca {

/// Exact rational coefficients. Arbitrary precision: fraction-field
/// elimination grows coefficients quickly, fixed width would overflow.
using Rational = mpq_class;

Rational ratFromString(const std::string& s);
std::string ratToString(const Rational& q);
Rational ratPow(const Rational& base, int e);

/// One monomial x^alpha * t^m * u^k of the coefficient ring
/// Q[x1..xn, t][u, u^-1], where u stands for e^t. The exponent k may be
/// negative (e^-t occurs in the time-extended structures); alpha and m
/// may not. Ordering is lexicographic on (k, m, alpha); alpha keeps no
/// trailing zeros so the order does not depend on the ambient n.
struct Monomial {
    int expWeight = 0;          // k, power of u = e^t
    int tDegree = 0;            // m
    std::vector<int> xExp;      // alpha, trailing zeros trimmed

    void trim();
    bool isOne() const { return expWeight == 0 && tDegree == 0 && xExp.empty(); }
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Rational substitution point: values for x1..xn, t, and u (u != 0).
struct EvalPoint {
    std::vector<Rational> x;
    Rational t = 0;
    Rational u = 1;
};

/// Element of Q[x1..xn, t][u, u^-1] as a canonical sparse map from
/// monomials to nonzero rational coefficients. Structural equality of
/// the maps is ring equality. All operations are pure; values are
/// immutable once built except through the arithmetic interface.
class RingElem {
public:
    using TermMap = std::map<Monomial, Rational>;

    RingElem() = default;
    explicit RingElem(const Rational& c);
    explicit RingElem(long c);

    static RingElem constant(const Rational& c) { return RingElem(c); }
    static RingElem coordinate(int i);      // x_{i+1}, zero based index
    static RingElem tVar();
    static RingElem expT(int k = 1);        // u^k
    static RingElem monomialTerm(const Monomial& m, const Rational& c);

    bool isZero() const { return terms_.empty(); }
    bool isConstant() const;
    /// The constant value; zero element gives 0, throws if nonconstant.
    Rational constantValue() const;
    /// True when no monomial uses t or u.
    bool timeFree() const;

    const TermMap& terms() const { return terms_; }
    std::size_t termCount() const { return terms_.size(); }

    RingElem operator-() const;
    RingElem operator+(const RingElem& o) const;
    RingElem operator-(const RingElem& o) const;
    RingElem operator*(const RingElem& o) const;
    RingElem& operator+=(const RingElem& o);
    RingElem& operator-=(const RingElem& o);

    RingElem scaled(const Rational& c) const;
    RingElem pow(int e) const;              // e >= 0

    RingElem partialX(int i) const;         // throws on i out of range (i < 0)
    RingElem partialT() const;

    /// Exact substitution, with u an independent nonzero value standing
    /// for e^t. Sound as an identity oracle because x, t, u are
    /// algebraically independent generators.
    Rational evalAt(const EvalPoint& p) const;

    /// Canonical text: terms in monomial order, shared expression syntax.
    std::string str(const std::vector<std::string>* coordNames = nullptr) const;

    bool operator==(const RingElem&) const = default;

    void addTerm(const Monomial& m, const Rational& c);

private:
    TermMap terms_;
};

inline RingElem operator*(const Rational& c, const RingElem& e) { return e.scaled(c); }

} // namespace gca
