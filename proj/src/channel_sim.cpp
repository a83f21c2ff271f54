#include "bw/channel_sim.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "bw/lattice.hpp"

namespace bw {

namespace {

constexpr std::int64_t kChunk = 256;  // fixed so results never depend on thread count

struct TrialOutcome {
    bool error = false;
    std::uint64_t ops = 0;
};

TrialOutcome run_trial(const SimConfig& cfg, std::size_t point_idx, std::int64_t trial_idx,
                       double sigma) {
    const std::size_t n = std::size_t{1} << cfg.t;
    Rng rng(substream_seed(cfg.seed, point_idx, static_cast<std::uint64_t>(trial_idx)));

    IntVec x;
    if (cfg.tx_mode == TxMode::random_point)
        x = sample_lattice_point(cfg.t, cfg.tx_range, rng);
    else
        x.assign(n, 0);

    RealVec y(n);
    for (std::size_t i = 0; i < n; ++i)
        y[i] = static_cast<double>(x[i]) + sigma * rng.gaussian();

    OpCounter ops;
    bool error = false;
    if (cfg.algo == SimAlgo::bdd) {
        error = rec_bdd(y, cfg.t, ops) != x;
    } else {
        const CandidateList list = list_rec_bounded(y, cfg.t, cfg.schedule, ops);
        error = list.empty() || list.items[list.argmin()].point != x;
    }
    return {error, ops.total()};
}

}  // namespace

WilsonInterval wilson_interval(std::int64_t errors, std::int64_t trials) {
    if (trials <= 0) return {0.0, 1.0};
    if (errors == 0) {
        const double z = 1.959963984540054;
        const double nn = static_cast<double>(trials);
        return {0.0, (z * z / nn) / (1.0 + z * z / nn)};
    }
    const double z = 1.959963984540054;
    const double nn = static_cast<double>(trials);
    const double p = static_cast<double>(errors) / nn;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / nn;
    const double center = (p + z2 / (2.0 * nn)) / denom;
    const double half =
        z * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

double sigma2_from_vnr_db(int t, double vnr_db) {
    return lattice_params(t).sigma2_max / std::pow(10.0, vnr_db / 10.0);
}

SimResult run_campaign(const SimConfig& cfg, int threads) {
    if (cfg.trials_per_point < 1)
        throw std::invalid_argument("run_campaign: trials_per_point must be >= 1");
    for (double db : cfg.vnr_points_db)
        if (!std::isfinite(db)) throw std::invalid_argument("run_campaign: non-finite vnr");
    if (cfg.algo == SimAlgo::bounded_list) validate_schedule(cfg.schedule);
    if (threads < 1) threads = 1;

    const double n = std::exp2(cfg.t);
    SimResult result;
    result.config = cfg;

    for (std::size_t pi = 0; pi < cfg.vnr_points_db.size(); ++pi) {
        const double sigma = std::sqrt(sigma2_from_vnr_db(cfg.t, cfg.vnr_points_db[pi]));
        const auto t0 = std::chrono::steady_clock::now();

        std::int64_t done = 0;
        std::int64_t errors = 0;
        std::uint64_t total_ops = 0;
        std::vector<TrialOutcome> buf(kChunk);

        while (done < cfg.trials_per_point && errors < cfg.max_errors) {
            const std::int64_t count = std::min<std::int64_t>(kChunk, cfg.trials_per_point - done);
            auto work = [&](std::int64_t lo, std::int64_t hi) {
                for (std::int64_t i = lo; i < hi; ++i)
                    buf[static_cast<std::size_t>(i)] = run_trial(cfg, pi, done + i, sigma);
            };
            if (threads == 1 || count < 2 * threads) {
                work(0, count);
            } else {
                std::vector<std::thread> pool;
                const std::int64_t stride = (count + threads - 1) / threads;
                for (int w = 0; w < threads; ++w) {
                    const std::int64_t lo = w * stride;
                    const std::int64_t hi = std::min<std::int64_t>(count, lo + stride);
                    if (lo >= hi) break;
                    pool.emplace_back(work, lo, hi);
                }
                for (auto& th : pool) th.join();
            }
            for (std::int64_t i = 0; i < count; ++i) {
                errors += buf[static_cast<std::size_t>(i)].error ? 1 : 0;
                total_ops += buf[static_cast<std::size_t>(i)].ops;
            }
            done += count;
        }

        const auto t1 = std::chrono::steady_clock::now();
        SimPoint p;
        p.vnr_db = cfg.vnr_points_db[pi];
        p.trials = done;
        p.point_errors = errors;
        p.per = done > 0 ? static_cast<double>(errors) / static_cast<double>(done) : 0.0;
        p.nep = p.per / n;
        const WilsonInterval ci = wilson_interval(errors, done);
        p.ci_low = ci.low;
        p.ci_high = ci.high;
        p.mean_ops = done > 0 ? static_cast<double>(total_ops) / static_cast<double>(done) : 0.0;
        p.wall_ms =
            std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(t1 - t0)
                .count();
        result.points.push_back(p);
    }
    return result;
}

std::vector<double> mld_reference_curve(int t, const std::vector<double>& vnr_points_db) {
    std::vector<double> out;
    out.reserve(vnr_points_db.size());
    for (double db : vnr_points_db)
        out.push_back(union_bound_estimate(t, std::pow(10.0, db / 10.0)));
    return out;
}

}  // namespace bw
