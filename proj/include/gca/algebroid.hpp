#pragma once

#include "gca/graded.hpp"
#include "gca/report.hpp"

namespace gca {

/// Vector field over the chart, components along d/dx1..d/dxn plus a
/// final d/dt slot (zero unless the structure is time extended).
struct VecField {
    int baseDim = 0;
    std::vector<RingElem> comps;   // size baseDim + 1

    static VecField zero(int n);
    bool isZero() const;
};

VecField vfAdd(const VecField& a, const VecField& b);
VecField vfSub(const VecField& a, const VecField& b);
VecField vfScale(const VecField& a, const RingElem& f);
RingElem vfApply(const VecField& v, const RingElem& f);
VecField vfLie(const VecField& a, const VecField& b);

/// Lie algebroid over a coordinate chart, given by structure functions
/// c_ij^k on a fixed rank r frame and an anchor matrix. The same type
/// serves the dual algebroid: its sections are the dual frame and its
/// forms are multivectors of the primal side; every operation below only
/// touches the structure's own data, so both read the same way.
///
/// Anchor rows have baseDim + 1 entries; the last one is the d/dt
/// component used by the time-extended structures.
class AlgebroidStructure {
public:
    AlgebroidStructure() = default;
    AlgebroidStructure(BundleBasis basis, int baseDim, bool timeExtended,
                       std::vector<RingElem> structureFns,   // r*r*r, index (i*r+j)*r+k
                       std::vector<RingElem> anchor);        // r*(baseDim+1)

    static AlgebroidStructure zero(int rank, int baseDim);
    /// Tangent algebroid of the chart: rank n, identity anchor, zero brackets.
    static AlgebroidStructure tangent(int n);
    /// Tangent algebroid of chart x R_t: rank n+1, last section is d/dt.
    static AlgebroidStructure tangentExtended(int n);

    const BundleBasis& basis() const { return basis_; }
    int rank() const { return basis_.rank; }
    int baseDim() const { return baseDim_; }
    bool timeExtended() const { return timeExtended_; }

    const RingElem& c(int i, int j, int k) const;
    const RingElem& anchorEntry(int i, int col) const;
    const Graded& basisBracket(int i, int j) const;   // memoized [X_i, X_j]

    VecField anchorRow(int i) const;
    /// a(X_i) applied to a function.
    RingElem anchorApplyBasis(int i, const RingElem& f) const;
    /// a(X) applied to a function, X of degree one.
    RingElem anchorApply(const Graded& x, const RingElem& f) const;
    VecField anchorOf(const Graded& x) const;

    /// Differential of a function: sum_i a(X_i)f over the dual frame.
    Graded dFunction(const RingElem& f) const;

private:
    BundleBasis basis_;
    int baseDim_ = 0;
    bool timeExtended_ = false;
    std::vector<RingElem> c_;
    std::vector<RingElem> anchor_;
    std::vector<Graded> bracketTable_;
};

/// Degree one section of the dual bundle intended as a 1-cocycle; for
/// the dual algebroid the roles flip and the "form" is a multivector.
struct Cocycle {
    Graded form;
};

/// Bilinear anchored Leibniz extension of the frame bracket.
Graded bracketSections(const AlgebroidStructure& s, const Graded& x, const Graded& y);

/// Exterior differential by the Koszul formula evaluated on frame tuples.
Graded dExterior(const AlgebroidStructure& s, const Graded& eta);

/// Deformed differential d eta + phi ^ eta.
Graded dPhi(const AlgebroidStructure& s, const Graded& phi, const Graded& eta);

/// Deformed Lie derivative by the Cartan formula with dPhi.
Graded liePhi(const AlgebroidStructure& s, const Graded& phi, const Graded& x, const Graded& eta);

/// Schouten bracket, graded Leibniz extension of the section bracket with
/// [X, f] = a(X)f. Degree bookkeeping forces [f, g] = 0.
Graded schouten(const AlgebroidStructure& s, const Graded& p, const Graded& q);

/// Deformed Schouten bracket
/// [P,Q] + (p-1) P ^ (i_phi Q) + (-1)^p (q-1) (i_phi P) ^ Q.
Graded schoutenPhi(const AlgebroidStructure& s, const Graded& phi, const Graded& p, const Graded& q);

/// Frame Jacobi identity plus anchor morphism.
Report checkLieAlgebroid(const AlgebroidStructure& s, const std::string& tag,
                         ExecMode mode = ExecMode::Parallel);

/// <phi,[X_i,X_j]> = a(X_i)<phi,X_j> - a(X_j)<phi,X_i> over frame pairs.
Report checkCocycle(const AlgebroidStructure& s, const Graded& phi, const std::string& tag,
                    ExecMode mode = ExecMode::Parallel);

} // namespace gca
