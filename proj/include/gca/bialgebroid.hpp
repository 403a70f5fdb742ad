#pragma once

#include "gca/algebroid.hpp"

namespace gca {

/// Pair ((A, phi), (A*, W)) over one chart. phi is a degree one element
/// over the dual frame of A; W a degree one element over the frame of A
/// (which is the dual frame of A*). Both structures share the rank and
/// the chart.
struct GenLieBialgebroid {
    AlgebroidStructure A;
    AlgebroidStructure Astar;
    Graded phi;   // 1-cocycle of A
    Graded w;     // 1-cocycle of A*

    int rank() const { return A.rank(); }
    int baseDim() const { return A.baseDim(); }
};

GenLieBialgebroid makeGenLieBialgebroid(AlgebroidStructure a, AlgebroidStructure astar,
                                        Graded phi, Graded w);

/// Deformed dual differential d_*^W eta = d_* eta + W ^ eta.
inline Graded dualDW(const GenLieBialgebroid& b, const Graded& eta) {
    return dPhi(b.Astar, b.w, eta);
}

/// Deformed differential d^phi eta = d eta + phi ^ eta.
inline Graded dAPhi(const GenLieBialgebroid& b, const Graded& eta) {
    return dPhi(b.A, b.phi, eta);
}

/// Both compatibility conditions of the generalized Lie bialgebroid pair,
/// verified on frame pairs (condition 1) and on the generator set
/// {1, X_i, X_i ^ X_j} (condition 2). Preconditions (both structures are
/// Lie algebroids, phi and W are 1-cocycles) are re-checked and reported
/// distinctly.
Report checkGenBialgebroid(const GenLieBialgebroid& b, ExecMode mode = ExecMode::Parallel);

/// Compatibility conditions only, preconditions assumed.
Report checkBialgebroidCompatibility(const GenLieBialgebroid& b, ExecMode mode = ExecMode::Parallel);

/// Time extension with bracket/anchor deformed by the cocycle acting as
/// d/dt weight: same structure functions, anchor gains the <phi,X_i> d/dt
/// column. Sections with time-dependent coefficients then bracket through
/// the generic Leibniz extension.
AlgebroidStructure extendTilde(const AlgebroidStructure& s, const Graded& phi);

/// Exponentially weighted time extension:
/// c_ij^k -> e^-t (c_ij^k - phi_i d_jk + phi_j d_ik),
/// anchor row i -> e^-t (a_i, phi_i).
AlgebroidStructure extendHat(const AlgebroidStructure& s, const Graded& phi);

/// The extended pair as a plain Lie bialgebroid (zero cocycles).
GenLieBialgebroid extendPair(const GenLieBialgebroid& b);

/// Verdict agreement between the pair's own compatibility check and the
/// plain Lie bialgebroid check of the time-extended pair.
Report checkTheorem1(const GenLieBialgebroid& b, ExecMode mode = ExecMode::Parallel);

/// Bivector and vector field over the tangent algebroid of the chart.
struct JacobiStructure {
    int baseDim = 0;
    Graded lambda;   // degree 2 over rank n tangent frame
    Graded eVec;     // degree 1
};

/// [Lambda,Lambda] + 2 E ^ Lambda = 0 and [E, Lambda] = 0.
Report checkJacobiManifold(const JacobiStructure& j);

/// e^-t (Lambda + d/dt ^ E) over the extended tangent frame.
Graded poissonization(const JacobiStructure& j);

/// [Lp, Lp] = 0 and [d/dt, Lp] = -Lp for the Poissonization Lp.
Report checkPoissonization(const JacobiStructure& j);

} // namespace gca
