#pragma once

#include "gca/ring.hpp"

#include <cstdint>
#include <map>

namespace gca {

/// Labels for a trivialized rank r bundle and its dual. The pairing of
/// dual basis sections is Kronecker delta by construction.
struct BundleBasis {
    int rank = 0;
    std::vector<std::string> sections;   // X1..Xr
    std::vector<std::string> duals;      // al1..alr

    static BundleBasis standard(int r);
};

/// Koszul sign of X_A ^ X_B for disjoint index masks, 0 on overlap.
int wedgeSign(std::uint32_t a, std::uint32_t b);

/// Sparse graded exterior-algebra element over a fixed rank r basis.
/// Keys are strictly increasing index tuples encoded as bit masks;
/// coefficients are ring elements, zeros never stored. The same type
/// carries multivectors (basis X_i) and forms (dual basis); which one
/// is meant is a matter of which operations it is fed to, mirroring
/// how the calculus treats sections of the two bundles symmetrically.
class Graded {
public:
    Graded() = default;
    explicit Graded(int rank) : rank_(rank) {}

    static Graded scalar(int rank, RingElem f);
    static Graded basis(int rank, int i, RingElem coef = RingElem(1L));
    static Graded term(int rank, std::uint32_t mask, RingElem coef);

    int rank() const { return rank_; }
    bool isZero() const { return terms_.empty(); }
    const std::map<std::uint32_t, RingElem>& terms() const { return terms_; }

    RingElem coeff(std::uint32_t mask) const;
    /// Degree of the unique graded piece; throws when mixed. Zero element
    /// reports degree 0.
    int degree() const;
    bool isHomogeneous(int deg) const;
    int maxDegree() const;
    Graded component(int deg) const;

    void addTerm(std::uint32_t mask, const RingElem& c);

    Graded operator-() const;
    Graded operator+(const Graded& o) const;
    Graded operator-(const Graded& o) const;
    Graded& operator+=(const Graded& o);
    Graded& operator-=(const Graded& o);

    Graded scaled(const RingElem& f) const;
    Graded scaled(const Rational& c) const;

    bool operator==(const Graded&) const = default;

    std::string str(const std::vector<std::string>& labels,
                    const std::vector<std::string>* coordNames = nullptr) const;

private:
    int rank_ = 0;
    std::map<std::uint32_t, RingElem> terms_;
};

/// Graded-commutative associative wedge with Koszul signs.
Graded wedge(const Graded& a, const Graded& b);

/// Interior product by a degree one element of the dual role, inserting
/// into the first slot. Degree zero terms of the target contract to zero.
Graded contract(const Graded& one, const Graded& target);

/// Full duality pairing of equal-degree elements, determinant convention.
/// Mixed-degree inputs pair componentwise (cross terms vanish).
RingElem pairing(const Graded& formSide, const Graded& vecSide);

} // namespace gca
