#include "gca/samples.hpp"

namespace gca {

std::uint64_t SplitMix64::next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
    return bound ? next() % bound : 0;
}

long SplitMix64::intIn(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

std::vector<EvalPoint> makeSamplePoints(std::uint64_t seed, int n, int count) {
    SplitMix64 rng(seed ^ 0xa5a5a5a5ULL);
    std::vector<EvalPoint> pts;
    pts.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        EvalPoint p;
        p.x.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            Rational v(rng.intIn(-9, 9), rng.intIn(1, 3));
            v.canonicalize();
            p.x.push_back(v);
        }
        p.t = Rational(rng.intIn(-5, 5), rng.intIn(1, 3));
        p.t.canonicalize();
        long num = rng.intIn(1, 9);
        if (rng.below(2)) num = -num;
        p.u = Rational(num, rng.intIn(1, 3));
        p.u.canonicalize();
        pts.push_back(std::move(p));
    }
    return pts;
}

} // namespace gca
