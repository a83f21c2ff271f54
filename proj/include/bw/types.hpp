#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace bw {

using RealVec = std::vector<double>;
using IntVec = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVec>;

using RealSpan = std::span<const double>;
using IntSpan = std::span<const std::int64_t>;

// Inclusive sphere membership: a point is kept when its squared distance is
// within a small relative+absolute tolerance of the squared radius. The same
// predicate is used by the decoders and the brute-force oracle so that the
// two can only disagree on a genuine bug, never on a boundary ulp.
inline constexpr double kRadiusRelTol = 1e-9;
inline constexpr double kRadiusAbsTol = 1e-12;

inline bool within_radius(double dist2, double r2) {
    return dist2 <= r2 * (1.0 + kRadiusRelTol) + kRadiusAbsTol;
}

inline double sq_dist(RealSpan a, RealSpan b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

inline double sq_dist(RealSpan a, IntSpan b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - static_cast<double>(b[i]);
        s += d * d;
    }
    return s;
}

inline bool lex_less(IntSpan a, IntSpan b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

}  // namespace bw
