#include "bw/constellation.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>

#include "bw/lattice.hpp"

namespace bw {

namespace {

void check_config(const ConstellationConfig& cfg) {
    if (cfg.eta < 1) throw std::invalid_argument("constellation: eta must be >= 1");
    validate_schedule(cfg.schedule);
}

void check_message(const Message& msg, const ConstellationConfig& cfg) {
    if (msg.size() != (std::size_t{1} << cfg.t))
        throw std::invalid_argument("constellation: message length must be 2^t");
    const std::int64_t mod = cfg.modulus();
    for (auto s : msg)
        if (s < 0 || s >= mod)
            throw std::invalid_argument("constellation: symbols must lie in [0, 2^eta)");
}

// Quantize y to BW_n with the bounded list decoder; falls back to the BDD
// when the truncated list comes back empty (flagged by the caller).
IntVec quantize(const RealVec& y, const ConstellationConfig& cfg, bool& incomplete,
                OpCounter& ops) {
    const CandidateList list = list_rec_bounded(y, cfg.t, cfg.schedule, ops);
    if (list.empty()) {
        incomplete = true;
        return rec_bdd(y, cfg.t, ops);
    }
    return list.items[list.argmin()].point;
}

}  // namespace

EncodeResult encode(const Message& msg, const ConstellationConfig& cfg) {
    OpCounter ops;
    return encode(msg, cfg, ops);
}

EncodeResult encode(const Message& msg, const ConstellationConfig& cfg, OpCounter& ops) {
    check_config(cfg);
    check_message(msg, cfg);
    const std::size_t n = msg.size();
    const std::int64_t mod = cfg.modulus();
    const IntVec c = lattice_point_from_coeffs(msg, cfg.t);

    RealVec scaled(n);
    for (std::size_t i = 0; i < n; ++i)
        scaled[i] = static_cast<double>(c[i]) / static_cast<double>(mod);

    EncodeResult out;
    IntVec q = quantize(scaled, cfg, out.incomplete, ops);
    out.point.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.point[i] = c[i] - mod * q[i];

    // conservative energy bound: a point this far out cannot be a Voronoi
    // representative, so the quantizer must have missed
    double energy = 0.0;
    for (auto v : out.point) energy += static_cast<double>(v) * static_cast<double>(v);
    const double d = static_cast<double>(min_dist2_int(cfg.t));
    const double bound = static_cast<double>(n) * static_cast<double>(mod * mod) * d / 4.0;
    if (energy > bound) out.incomplete = true;
    return out;
}

Message decode(const RealVec& y, const ConstellationConfig& cfg) {
    OpCounter ops;
    return decode(y, cfg, ops);
}

Message decode(const RealVec& y, const ConstellationConfig& cfg, OpCounter& ops) {
    check_config(cfg);
    if (y.size() != (std::size_t{1} << cfg.t))
        throw std::invalid_argument("constellation: received word length must be 2^t");
    bool unused = false;
    const IntVec xhat = quantize(y, cfg, unused, ops);
    const auto z = coeffs_from_point(xhat, cfg.t);
    if (!z)
        throw std::logic_error("constellation: decoder emitted a non-lattice point");
    const std::int64_t mod = cfg.modulus();
    Message msg(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
        const std::int64_t r = (*z)[i] % mod;
        msg[i] = r < 0 ? r + mod : r;
    }
    return msg;
}

bool congruent(const IntVec& x, const Message& msg, const ConstellationConfig& cfg) {
    const IntVec c = lattice_point_from_coeffs(msg, cfg.t);
    const std::int64_t mod = cfg.modulus();
    IntVec diff(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const std::int64_t d = c[i] - x[i];
        if (d % mod != 0) return false;
        diff[i] = d / mod;
    }
    return is_member(diff, cfg.t);
}

SerResult run_ser_campaign(const ConstellationConfig& cfg,
                           const std::vector<double>& snr_points_db,
                           std::int64_t trials_per_point, std::uint64_t seed,
                           int threads) {
    check_config(cfg);
    if (trials_per_point < 1)
        throw std::invalid_argument("run_ser_campaign: trials must be >= 1");
    if (threads < 1) threads = 1;

    const std::size_t n = std::size_t{1} << cfg.t;
    const std::int64_t mod = cfg.modulus();
    constexpr std::int64_t kChunk = 256;

    struct Outcome {
        std::int32_t symbol_errors = 0;
        bool incomplete = false;
        std::uint64_t decode_ops = 0;
    };

    auto run_trial = [&](std::size_t pi, std::int64_t trial, double sigma) {
        Rng rng(substream_seed(seed, pi, static_cast<std::uint64_t>(trial)));
        Message msg(n);
        for (auto& s : msg) s = rng.uniform_int(0, mod - 1);
        OpCounter enc_ops;
        const EncodeResult enc = encode(msg, cfg, enc_ops);
        RealVec y(n);
        for (std::size_t i = 0; i < n; ++i)
            y[i] = static_cast<double>(enc.point[i]) + sigma * rng.gaussian();
        OpCounter dec_ops;
        const Message got = decode(y, cfg, dec_ops);
        Outcome o;
        for (std::size_t i = 0; i < n; ++i)
            if (got[i] != msg[i]) ++o.symbol_errors;
        o.incomplete = enc.incomplete;
        o.decode_ops = dec_ops.total();
        return o;
    };

    SerResult result;
    result.config = cfg;
    for (std::size_t pi = 0; pi < snr_points_db.size(); ++pi) {
        const double sigma = std::sqrt(sigma2_from_vnr_db(cfg.t, snr_points_db[pi]));
        std::int64_t done = 0;
        std::int64_t sym_errors = 0;
        std::int64_t incompletes = 0;
        std::uint64_t total_ops = 0;
        std::vector<Outcome> buf(kChunk);
        while (done < trials_per_point) {
            const std::int64_t count = std::min<std::int64_t>(kChunk, trials_per_point - done);
            auto work = [&](std::int64_t lo, std::int64_t hi) {
                for (std::int64_t i = lo; i < hi; ++i)
                    buf[static_cast<std::size_t>(i)] = run_trial(pi, done + i, sigma);
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
                const Outcome& o = buf[static_cast<std::size_t>(i)];
                sym_errors += o.symbol_errors;
                incompletes += o.incomplete ? 1 : 0;
                total_ops += o.decode_ops;
            }
            done += count;
        }
        SerPoint p;
        p.vnr_db = snr_points_db[pi];
        p.trials = done;
        p.symbol_errors = sym_errors;
        const std::int64_t symbols = done * static_cast<std::int64_t>(n);
        p.ser = static_cast<double>(sym_errors) / static_cast<double>(symbols);
        const WilsonInterval ci = wilson_interval(sym_errors, symbols);
        p.ci_low = ci.low;
        p.ci_high = ci.high;
        p.mean_ops = static_cast<double>(total_ops) / static_cast<double>(done);
        p.incomplete_rate = static_cast<double>(incompletes) / static_cast<double>(done);
        result.points.push_back(p);
    }
    return result;
}

}  // namespace bw
