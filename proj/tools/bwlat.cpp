// bwlat: batch CLI over the Barnes-Wall lattice toolkit.
// Subcommands: params, decode, oracle, simulate, constellation, bench.
// Exit codes: 0 success, 1 usage error, 2 runtime error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "bw/channel_sim.hpp"
#include "bw/constellation.hpp"
#include "bw/decoders.hpp"
#include "bw/io.hpp"
#include "bw/lattice.hpp"
#include "bw/oracle.hpp"

namespace {

using namespace bw;

std::vector<RealVec> read_inputs(const std::string& path, std::size_t n) {
    std::vector<RealVec> rows;
    if (path == "-") {
        rows = io::read_real_vectors(std::cin);
    } else {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open input file: " + path);
        rows = io::read_real_vectors(in);
    }
    if (!rows.empty() && rows.front().size() < n)
        throw std::runtime_error("input rows are shorter than the lattice dimension");
    // extra trailing columns (e.g. dist2 from a previous decode run) are ignored
    for (auto& r : rows) r.resize(n);
    return rows;
}

struct OutStream {
    std::ofstream file;
    std::ostream* os = &std::cout;
    explicit OutStream(const std::string& path) {
        if (!path.empty() && path != "-") {
            file.open(path);
            if (!file) throw std::runtime_error("cannot open output file: " + path);
            os = &file;
        }
    }
    std::ostream& get() { return *os; }
};

void print_candidate_line(std::ostream& os, const IntVec& p, double dist2) {
    for (std::size_t i = 0; i < p.size(); ++i) os << p[i] << ' ';
    os << dist2 << '\n';
}

ListSchedule schedule_from_flags(double delta, const std::vector<int>& aleph) {
    return make_schedule(delta, aleph);
}

int cmd_params(int t) {
    std::cout << io::params_to_json(lattice_params(t)) << '\n';
    return 0;
}

int cmd_decode(std::int64_t n, const std::string& algo, double delta,
               const std::vector<int>& aleph, const std::string& in_path,
               const std::string& out_path, bool all) {
    const int t = exponent_for_dim(n);
    const auto rows = read_inputs(in_path, static_cast<std::size_t>(n));
    OutStream out(out_path);

    ListSchedule sched;
    if (algo == "bounded") sched = schedule_from_flags(delta, aleph);

    for (const RealVec& y : rows) {
        if (algo == "bdd") {
            const IntVec x = rec_bdd(y, t);
            print_candidate_line(out.get(), x, sq_dist(y, x));
            continue;
        }
        const CandidateList list =
            algo == "list" ? list_rec(y, t, delta) : list_rec_bounded(y, t, sched);
        if (all) {
            out.get() << list.size() << '\n';
            for (const Candidate& c : list.items)
                print_candidate_line(out.get(), c.point, c.dist2);
        } else if (list.empty()) {
            out.get() << "# no lattice point within radius\n";
        } else {
            const Candidate& c = list.items[list.argmin()];
            print_candidate_line(out.get(), c.point, c.dist2);
        }
    }
    return 0;
}

int cmd_oracle(std::int64_t n, const std::string& mode, double r2,
               const std::string& in_path, const std::string& out_path) {
    const int t = exponent_for_dim(n);
    OutStream out(out_path);
    if (mode == "minvecs") {
        const CandidateList mv = oracle::minimal_vectors(t);
        out.get() << mv.size() << '\n';
        for (const Candidate& c : mv.items)
            print_candidate_line(out.get(), c.point, c.dist2);
        return 0;
    }
    const auto rows = read_inputs(in_path, static_cast<std::size_t>(n));
    for (const RealVec& y : rows) {
        if (mode == "cvp") {
            const IntVec x = oracle::exact_cvp(y, t);
            print_candidate_line(out.get(), x, sq_dist(y, x));
        } else {  // ball
            const CandidateList ball = oracle::enumerate_ball(y, t, r2);
            out.get() << ball.size() << '\n';
            for (const Candidate& c : ball.items)
                print_candidate_line(out.get(), c.point, c.dist2);
        }
    }
    return 0;
}

int cmd_simulate(const std::string& config_path, const std::string& out_path,
                 const std::string& mld_ref_path, int threads) {
    std::ifstream in(config_path);
    if (!in) throw std::runtime_error("cannot open config: " + config_path);
    std::stringstream buf;
    buf << in.rdbuf();
    const SimConfig cfg = io::sim_config_from_json(buf.str());

    const SimResult result = run_campaign(cfg, threads);
    OutStream out(out_path);
    out.get() << io::campaign_to_csv(result);

    if (!mld_ref_path.empty()) {
        const std::vector<double> est = mld_reference_curve(cfg.t, cfg.vnr_points_db);
        OutStream ref(mld_ref_path);
        ref.get() << "vnr_db,mld_union_bound\n";
        for (std::size_t i = 0; i < est.size(); ++i)
            ref.get() << cfg.vnr_points_db[i] << ',' << est[i] << '\n';
    }
    return 0;
}

int cmd_constellation(int t, int eta, const std::string& mode, double delta,
                      const std::vector<int>& aleph, const std::string& in_path,
                      const std::string& out_path, const std::vector<double>& snr_points,
                      std::int64_t trials, std::uint64_t seed, int threads) {
    ConstellationConfig cfg;
    cfg.t = t;
    cfg.eta = eta;
    cfg.schedule = schedule_from_flags(delta, aleph);
    const std::size_t n = std::size_t{1} << t;

    if (mode == "simulate") {
        const SerResult r = run_ser_campaign(cfg, snr_points, trials, seed, threads);
        OutStream out(out_path);
        out.get() << io::ser_to_csv(r);
        return 0;
    }

    OutStream out(out_path);
    if (mode == "encode") {
        std::vector<IntVec> msgs;
        if (in_path == "-") {
            msgs = io::read_symbol_lines(std::cin);
        } else {
            std::ifstream in(in_path);
            if (!in) throw std::runtime_error("cannot open input file: " + in_path);
            msgs = io::read_symbol_lines(in);
        }
        for (const IntVec& msg : msgs) {
            const EncodeResult e = encode(msg, cfg);
            for (std::size_t i = 0; i < e.point.size(); ++i) out.get() << e.point[i] << ' ';
            out.get() << (e.incomplete ? "# incomplete" : "") << '\n';
        }
        return 0;
    }
    // decode
    const auto rows = read_inputs(in_path, n);
    for (const RealVec& y : rows) {
        const Message msg = decode(y, cfg);
        for (std::size_t i = 0; i < msg.size(); ++i)
            out.get() << msg[i] << (i + 1 < msg.size() ? "," : "\n");
    }
    return 0;
}

int cmd_bench(const std::string& algo, const std::vector<std::int64_t>& n_list,
              double delta, const std::vector<int>& aleph_sweep, std::int64_t trials,
              double vnr_db, std::uint64_t seed, const std::string& out_path) {
    OutStream out(out_path);
    out.get() << "n,algo,aleph,mean_ops,mean_base_calls,mean_us\n";
    for (std::int64_t n : n_list) {
        const int t = exponent_for_dim(n);
        const double sigma = std::sqrt(sigma2_from_vnr_db(t, vnr_db));
        const std::vector<int> alephs =
            algo == "bdd" ? std::vector<int>{0} : aleph_sweep;
        for (int aleph : alephs) {
            ListSchedule sched;
            if (algo != "bdd") {
                std::vector<int> tr(static_cast<std::size_t>(radius_chain_length(delta)),
                                    aleph);
                // deeper radii rarely need the full budget; keep them small
                for (std::size_t i = 1; i < tr.size(); ++i)
                    tr[i] = std::max(1, aleph / 16);
                sched = make_schedule(delta, tr);
            }
            OpCounter total;
            double wall_us = 0.0;
            for (std::int64_t rep = 0; rep < trials; ++rep) {
                Rng rng(substream_seed(seed, static_cast<std::uint64_t>(n), rep));
                const IntVec x = sample_lattice_point(t, 3, rng);
                RealVec y(x.size());
                for (std::size_t i = 0; i < y.size(); ++i)
                    y[i] = static_cast<double>(x[i]) + sigma * rng.gaussian();
                OpCounter ops;
                const auto t0 = std::chrono::steady_clock::now();
                if (algo == "bdd")
                    rec_bdd(y, t, ops);
                else
                    list_rec_bounded(y, t, sched, ops);
                const auto t1 = std::chrono::steady_clock::now();
                wall_us +=
                    std::chrono::duration_cast<std::chrono::duration<double, std::micro>>(
                        t1 - t0)
                        .count();
                total += ops;
            }
            const double k = static_cast<double>(trials);
            out.get() << n << ',' << algo << ',' << aleph << ','
                      << static_cast<double>(total.total()) / k << ','
                      << static_cast<double>(total.base_calls) / k << ',' << wall_us / k
                      << '\n';
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Barnes-Wall lattice coding toolkit"};
    app.require_subcommand(1);

    std::uint64_t seed = kDefaultSeed;
    int threads = 1;
    app.add_option("--seed", seed, "global RNG seed");
    app.add_option("--threads", threads, "worker threads (results are identical for any value)");

    // params
    auto* sp = app.add_subcommand("params", "dump lattice constants as JSON");
    int params_t = 1;
    sp->add_option("--t", params_t, "exponent, n = 2^t")->required();

    // decode
    auto* sd = app.add_subcommand("decode", "batch-decode real vectors");
    std::int64_t dec_n = 0;
    std::string dec_algo = "bdd", dec_in = "-", dec_out;
    double dec_delta = 0.375;
    std::vector<int> dec_aleph{20};
    bool dec_all = false;
    sd->add_option("--n", dec_n, "lattice dimension (power of two)")->required();
    sd->add_option("--algo", dec_algo, "bdd | list | bounded")
        ->check(CLI::IsMember({"bdd", "list", "bounded"}));
    sd->add_option("--delta", dec_delta, "relative squared radius");
    sd->add_option("--aleph", dec_aleph, "truncation sizes (bounded)")->delimiter(',');
    sd->add_option("--in", dec_in, "input vector file ('-' = stdin)");
    sd->add_option("--out", dec_out, "output file (default stdout)");
    sd->add_flag("--all", dec_all, "emit full candidate lists");

    // oracle
    auto* so = app.add_subcommand("oracle", "brute-force ground truth (n <= 16)");
    std::int64_t orc_n = 0;
    std::string orc_mode, orc_in = "-", orc_out;
    double orc_r2 = 0.5;
    so->add_option("--n", orc_n, "lattice dimension (power of two)")->required();
    so->add_option("mode", orc_mode, "cvp | ball | minvecs")
        ->required()
        ->check(CLI::IsMember({"cvp", "ball", "minvecs"}));
    so->add_option("--r2", orc_r2, "squared radius (ball mode)");
    so->add_option("--in", orc_in, "input vector file ('-' = stdin)");
    so->add_option("--out", orc_out, "output file (default stdout)");

    // simulate
    auto* ss = app.add_subcommand("simulate", "seeded AWGN Monte-Carlo campaign");
    std::string sim_cfg, sim_out, sim_ref;
    ss->add_option("--config", sim_cfg, "JSON campaign config")->required();
    ss->add_option("--out", sim_out, "CSV output (default stdout)");
    ss->add_option("--mld-ref", sim_ref, "also write the union-bound MLD reference CSV");

    // constellation
    auto* sc = app.add_subcommand("constellation", "Voronoi constellation codec");
    int con_t = 6, con_eta = 4;
    std::string con_mode, con_in = "-", con_out;
    double con_delta = 0.375;
    std::vector<int> con_aleph{20};
    std::vector<double> con_snr{1.0, 2.0, 3.0};
    std::int64_t con_trials = 10000;
    sc->add_option("mode", con_mode, "encode | decode | simulate")
        ->required()
        ->check(CLI::IsMember({"encode", "decode", "simulate"}));
    sc->add_option("--t", con_t, "exponent");
    sc->add_option("--eta", con_eta, "bits per channel use");
    sc->add_option("--delta", con_delta, "quantizer relative squared radius");
    sc->add_option("--aleph", con_aleph, "quantizer truncation sizes")->delimiter(',');
    sc->add_option("--in", con_in, "input file ('-' = stdin)");
    sc->add_option("--out", con_out, "output file (default stdout)");
    sc->add_option("--snr-points", con_snr, "sweep points in dB (simulate)")->delimiter(',');
    sc->add_option("--trials", con_trials, "messages per sweep point");

    // bench
    auto* sb = app.add_subcommand("bench", "operation-count and wall-time tables");
    std::string ben_algo = "bdd", ben_out;
    std::vector<std::int64_t> ben_n{8, 16, 32, 64, 128, 256};
    double ben_delta = 0.375, ben_vnr = 1.0;
    std::vector<int> ben_sweep{1, 5, 10, 20, 40};
    std::int64_t ben_trials = 50;
    sb->add_option("--algo", ben_algo, "bdd | bounded")
        ->check(CLI::IsMember({"bdd", "bounded"}));
    sb->add_option("--n", ben_n, "dimension list")->delimiter(',');
    sb->add_option("--delta", ben_delta, "relative squared radius (bounded)");
    sb->add_option("--aleph-sweep", ben_sweep, "truncation sizes to sweep")->delimiter(',');
    sb->add_option("--trials", ben_trials, "decodes per table row");
    sb->add_option("--vnr-db", ben_vnr, "workload noise level");
    sb->add_option("--out", ben_out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (sp->parsed()) return cmd_params(params_t);
        if (sd->parsed())
            return cmd_decode(dec_n, dec_algo, dec_delta, dec_aleph, dec_in, dec_out,
                              dec_all);
        if (so->parsed()) return cmd_oracle(orc_n, orc_mode, orc_r2, orc_in, orc_out);
        if (ss->parsed()) return cmd_simulate(sim_cfg, sim_out, sim_ref, threads);
        if (sc->parsed())
            return cmd_constellation(con_t, con_eta, con_mode, con_delta, con_aleph,
                                     con_in, con_out, con_snr, con_trials, seed, threads);
        if (sb->parsed())
            return cmd_bench(ben_algo, ben_n, ben_delta, ben_sweep, ben_trials, ben_vnr,
                             seed, ben_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 1;
}
