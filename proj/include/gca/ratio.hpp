#pragma once

#include "gca/ring.hpp"

#include <optional>

namespace gca {

/// Fraction field of the coefficient ring (the ring is an integral
/// domain, so this is honest). No polynomial gcd reduction; only the
/// common rational content is removed and the denominator's leading
/// coefficient is kept positive. Equality is cross-multiplication.
class RatioElem {
public:
    RatioElem() : num_(), den_(RingElem(1L)) {}
    RatioElem(RingElem n) : num_(std::move(n)), den_(RingElem(1L)) {}
    RatioElem(RingElem n, RingElem d);

    const RingElem& num() const { return num_; }
    const RingElem& den() const { return den_; }
    bool isZero() const { return num_.isZero(); }
    bool denIsOne() const { return den_ == RingElem(1L); }

    /// The numerator when the denominator reduced to a rational constant,
    /// otherwise nullopt.
    std::optional<RingElem> asRing() const;

    RatioElem operator-() const;
    RatioElem operator+(const RatioElem& o) const;
    RatioElem operator-(const RatioElem& o) const;
    RatioElem operator*(const RatioElem& o) const;
    RatioElem operator/(const RatioElem& o) const;   // throws on zero divisor
    RatioElem& operator+=(const RatioElem& o) { return *this = *this + o; }
    RatioElem& operator-=(const RatioElem& o) { return *this = *this - o; }

    bool operator==(const RatioElem& o) const;

    /// Exact value at a point; nullopt when the denominator vanishes there.
    std::optional<Rational> evalAt(const EvalPoint& p) const;

    std::string str(const std::vector<std::string>* coordNames = nullptr) const;

private:
    void normalize();
    RingElem num_, den_;
};

inline RatioElem operator*(const RingElem& a, const RatioElem& b) { return RatioElem(a) * b; }

} // namespace gca
