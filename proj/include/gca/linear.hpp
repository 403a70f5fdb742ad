#pragma once

#include "gca/ratio.hpp"

#include <optional>
#include <vector>

namespace gca {

using RingMatrix = std::vector<std::vector<RingElem>>;
using RatioVector = std::vector<RatioElem>;
using RatMatrix = std::vector<std::vector<Rational>>;

/// One solution of M x = rhs over the fraction field, or nullopt when the
/// system is inconsistent. Free variables are set to zero. The returned
/// vector is verified by exact back substitution before it is handed out.
std::optional<RatioVector> solveLinear(const RingMatrix& m, const std::vector<RingElem>& rhs);

/// Basis of the nullspace of M over the fraction field.
std::vector<RatioVector> nullspaceBasis(const RingMatrix& m);

/// Rank over the fraction field.
int rankRing(const RingMatrix& m);

/// Exact rank of a rational matrix.
int rankRational(RatMatrix m);

/// Nullspace basis of a rational matrix.
std::vector<std::vector<Rational>> rationalNullspace(RatMatrix m);

/// Entry-wise evaluation at a point.
RatMatrix evalMatrix(const RingMatrix& m, const EvalPoint& p);

} // namespace gca
