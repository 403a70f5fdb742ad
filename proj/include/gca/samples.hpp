#pragma once

#include "gca/ring.hpp"

#include <cstdint>
#include <vector>

namespace gca {

/// Default seed for the published sample point set.
inline constexpr std::uint64_t kDefaultSeed = 20230917;

/// Deterministic rational sample points (x1..xn, t, u) with u != 0.
/// Avoids std:: distributions so the stream is identical across
/// standard libraries.
std::vector<EvalPoint> makeSamplePoints(std::uint64_t seed, int n, int count = 8);

/// Small deterministic generator for tests and probe polynomials.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    /// Uniform-ish value in [0, bound).
    std::uint64_t below(std::uint64_t bound);
    /// Integer in [lo, hi].
    long intIn(long lo, long hi);

private:
    std::uint64_t state_;
};

} // namespace gca
