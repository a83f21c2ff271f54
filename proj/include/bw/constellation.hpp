#pragma once

#include <cstdint>

#include "bw/channel_sim.hpp"
#include "bw/decoders.hpp"
#include "bw/types.hpp"

namespace bw {

// Voronoi constellation over the partition BW_n / M BW_n with M = 2^eta;
// the bounded list decoder doubles as the shaping quantizer.
struct ConstellationConfig {
    int t = 6;
    int eta = 4;  // rate in bits per channel use
    ListSchedule schedule{0.375, {20}};

    std::int64_t modulus() const { return std::int64_t{1} << eta; }
};

// length-n symbols, each in [0, 2^eta)
using Message = IntVec;

struct EncodeResult {
    IntVec point;            // lattice point congruent to msg*G mod M*BW_n
    bool incomplete = false; // quantizer truncated to emptiness or energy bound hit
};

EncodeResult encode(const Message& msg, const ConstellationConfig& cfg);
EncodeResult encode(const Message& msg, const ConstellationConfig& cfg, OpCounter& ops);

Message decode(const RealVec& y, const ConstellationConfig& cfg);
Message decode(const RealVec& y, const ConstellationConfig& cfg, OpCounter& ops);

// x == msg*G (mod M*BW_n)
bool congruent(const IntVec& x, const Message& msg, const ConstellationConfig& cfg);

struct SerPoint {
    double vnr_db = 0.0;
    std::int64_t trials = 0;        // messages simulated
    std::int64_t symbol_errors = 0;
    double ser = 0.0;               // symbol error rate
    double ci_low = 0.0;            // Wilson 95% on ser
    double ci_high = 0.0;
    double mean_ops = 0.0;          // mean decode tally
    double incomplete_rate = 0.0;   // flagged encodes / trials
};

struct SerResult {
    ConstellationConfig config;
    std::vector<SerPoint> points;
};

// AWGN symbol-error campaign; the sweep runs over the distance to the
// Poltyrev limit of the coding lattice, like run_campaign. Deterministic for
// a given seed regardless of `threads`.
SerResult run_ser_campaign(const ConstellationConfig& cfg,
                           const std::vector<double>& snr_points_db,
                           std::int64_t trials_per_point, std::uint64_t seed,
                           int threads = 1);

}  // namespace bw
