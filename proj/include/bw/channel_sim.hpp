#pragma once

#include <cstdint>

#include "bw/decoders.hpp"
#include "bw/rng.hpp"
#include "bw/types.hpp"

namespace bw {

inline constexpr std::uint64_t kDefaultSeed = 20250817ULL;

enum class SimAlgo { bdd, bounded_list };
enum class TxMode { zero_word, random_point };

// Seeded Monte-Carlo AWGN campaign over a grid of distances to the Poltyrev
// limit (vnr = sigma2_max / sigma2, in dB).
struct SimConfig {
    int t = 6;
    SimAlgo algo = SimAlgo::bounded_list;
    ListSchedule schedule{0.375, {20}};  // used when algo == bounded_list
    std::vector<double> vnr_points_db;
    std::int64_t trials_per_point = 100000;
    std::uint64_t seed = kDefaultSeed;
    std::int64_t max_errors = 200;  // early stop per point
    TxMode tx_mode = TxMode::random_point;
    std::int64_t tx_range = 4;  // coefficient range for random-point mode
};

struct SimPoint {
    double vnr_db = 0.0;
    std::int64_t trials = 0;
    std::int64_t point_errors = 0;
    double per = 0.0;       // point error rate
    double nep = 0.0;       // per / n
    double ci_low = 0.0;    // Wilson 95% on per
    double ci_high = 0.0;
    double mean_ops = 0.0;  // mean scalar-op tally per decode
    double wall_ms = 0.0;
};

struct SimResult {
    SimConfig config;
    std::vector<SimPoint> points;
};

struct WilsonInterval {
    double low = 0.0;
    double high = 0.0;
};

// 95% score interval; well-defined at zero successes.
WilsonInterval wilson_interval(std::int64_t errors, std::int64_t trials);

// Deterministic for a given seed regardless of `threads`: trial i of point p
// draws from substream_seed(seed, p, i) and aggregation is per fixed-size
// chunk, in order.
SimResult run_campaign(const SimConfig& cfg, int threads = 1);

// Union-bound MLD estimate per sweep point, emitted alongside campaigns.
std::vector<double> mld_reference_curve(int t, const std::vector<double>& vnr_points_db);

double sigma2_from_vnr_db(int t, double vnr_db);

}  // namespace bw
