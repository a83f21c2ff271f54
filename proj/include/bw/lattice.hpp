#pragma once

#include <cstdint>
#include <optional>

#include "bw/rng.hpp"
#include "bw/types.hpp"

namespace bw {

// Closed-form constants of BW_n under the scaling BW_2 = Z^2.
//   d = n/2, rho2 = d/4, volume = (n/2)^(n/4), gamma = sqrt(n/2),
//   kissing = prod_{i=1..t} (2^i + 2), sigma2_max = vol^(2/n) / (2*pi*e).
struct LatticeParams {
    int t = 0;
    std::int64_t n = 0;
    double d = 0.0;
    double rho2 = 0.0;
    double volume = 0.0;
    double kissing = 0.0;
    double gamma = 0.0;
    double sigma2_max = 0.0;
};

// Supported exponent range. Everything in this project lives at t <= 8
// (n <= 256); volume overflows a double from t = 9 on.
inline constexpr int kMaxExponent = 8;

LatticeParams lattice_params(int t);

// Exact integer forms, for identity checks in exact arithmetic.
std::int64_t min_dist2_int(int t);       // d(BW_n) = 2^(t-1)
std::int64_t kissing_number_int(int t);  // prod (2^i + 2)
std::int64_t log2_volume_int(int t);     // log2 vol = (t-1)*2^(t-2), t >= 2; 0 at t = 1

inline double min_dist2(int t) { return static_cast<double>(min_dist2_int(t)); }

// Blockwise scaling-rotation (a, b) -> (a+b, a-b) and its inverse
// (a, b) -> ((a+b)/2, (a-b)/2). Doubles/halves squared norms.
RealVec rotate(const RealVec& v);
RealVec unrotate(const RealVec& v);
IntVec rotate(const IntVec& v);

// Exact inverse rotation on integer vectors; empty when some pair has odd
// sum (the vector is then not in a rotated integral lattice).
std::optional<IntVec> unrotate_exact(IntSpan v);

// Generator with rows ordered as G_{2n} = [[G, G], [0, G*R]], G_2 = I.
IntMatrix generator_matrix(int t);

// x = z * G without materializing G.
IntVec lattice_point_from_coeffs(IntSpan z, int t);

// Inverse of the above (exact back-substitution through the block
// structure); empty when x is not a lattice point.
std::optional<IntVec> coeffs_from_point(IntSpan x, int t);

bool is_member(IntSpan x, int t);

// z uniform per coordinate in [-range, range], returns z*G.
IntVec sample_lattice_point(int t, std::int64_t range, Rng& rng);

// Union-bound MLD estimate (tau/2) * erfc(sqrt(d / (8 sigma^2))) at
// sigma^2 = sigma2_max / vnr (vnr linear).
double union_bound_estimate(int t, double vnr);

int exponent_for_dim(std::int64_t n);  // throws unless n = 2^t, t >= 1

}  // namespace bw
