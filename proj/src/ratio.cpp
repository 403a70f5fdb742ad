#include "gca/ratio.hpp"

namespace gca {

namespace {

// gcd of |p/q| over all coefficients: gcd of numerators over lcm of
// denominators. Returns 1 for the zero element.
Rational content(const RingElem& e) {
    if (e.isZero()) return 1;
    mpz_class g = 0, l = 1;
    for (const auto& [m, c] : e.terms()) {
        mpz_class num = c.get_num();
        if (num < 0) num = -num;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    }
    if (g == 0) g = 1;
    Rational r(g, l);
    r.canonicalize();
    return r;
}

Rational leadingCoeff(const RingElem& e) {
    if (e.isZero()) return 0;
    return e.terms().rbegin()->second;
}

} // namespace

RatioElem::RatioElem(RingElem n, RingElem d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.isZero()) throw std::domain_error("zero denominator");
    normalize();
}

void RatioElem::normalize() {
    if (num_.isZero()) {
        den_ = RingElem(1L);
        return;
    }
    Rational g = content(num_);
    Rational h = content(den_);
    mpz_class gn;
    mpz_gcd(gn.get_mpz_t(), g.get_num().get_mpz_t(), h.get_num().get_mpz_t());
    mpz_class gl;
    mpz_lcm(gl.get_mpz_t(), g.get_den().get_mpz_t(), h.get_den().get_mpz_t());
    Rational common(gn, gl);
    common.canonicalize();
    if (leadingCoeff(den_) < 0) common = -common;
    Rational inv = 1 / common;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
}

std::optional<RingElem> RatioElem::asRing() const {
    if (num_.isZero()) return RingElem();
    if (!den_.isConstant()) return std::nullopt;
    return num_.scaled(1 / den_.constantValue());
}

RatioElem RatioElem::operator-() const {
    RatioElem r = *this;
    r.num_ = -r.num_;
    return r;
}

RatioElem RatioElem::operator+(const RatioElem& o) const {
    if (den_ == o.den_) return RatioElem(num_ + o.num_, den_);
    return RatioElem(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatioElem RatioElem::operator-(const RatioElem& o) const {
    if (den_ == o.den_) return RatioElem(num_ - o.num_, den_);
    return RatioElem(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatioElem RatioElem::operator*(const RatioElem& o) const {
    return RatioElem(num_ * o.num_, den_ * o.den_);
}

RatioElem RatioElem::operator/(const RatioElem& o) const {
    if (o.isZero()) throw std::domain_error("division by zero fraction");
    return RatioElem(num_ * o.den_, den_ * o.num_);
}

bool RatioElem::operator==(const RatioElem& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

std::optional<Rational> RatioElem::evalAt(const EvalPoint& p) const {
    Rational d = den_.evalAt(p);
    if (d == 0) return std::nullopt;
    return num_.evalAt(p) / d;
}

std::string RatioElem::str(const std::vector<std::string>* coordNames) const {
    if (denIsOne()) return num_.str(coordNames);
    return "(" + num_.str(coordNames) + ") / (" + den_.str(coordNames) + ")";
}

} // namespace gca
