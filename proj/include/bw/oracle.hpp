#pragma once

#include "bw/candidates.hpp"
#include "bw/types.hpp"

namespace bw {
// Brute-force ground truth for small dimensions (n <= 16). Depth-first
// enumeration over integer coefficients of the Gram-Schmidt-triangularized
// generator; shares no code with the recursive decoders.
namespace oracle {

inline constexpr int kMaxOracleExponent = 4;

// Provably closest lattice point (distance ties -> lexicographically
// smallest point).
IntVec exact_cvp(const RealVec& y, int t);

// All lattice points with squared distance <= r2 (inclusive tolerance
// identical to the decoders), lexicographically sorted.
// Guard: r2 <= (3/4) * d(BW_n).
CandidateList enumerate_ball(const RealVec& y, int t, double r2);

// All lattice vectors of squared norm exactly d(BW_n).
CandidateList minimal_vectors(int t);

}  // namespace oracle
}  // namespace bw
