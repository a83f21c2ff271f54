#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "bw/channel_sim.hpp"
#include "bw/lattice.hpp"

using namespace bw;

namespace {

bool same_points(const SimResult& a, const SimResult& b) {
    if (a.points.size() != b.points.size()) return false;
    for (std::size_t i = 0; i < a.points.size(); ++i) {
        const SimPoint& p = a.points[i];
        const SimPoint& q = b.points[i];
        if (p.trials != q.trials || p.point_errors != q.point_errors ||
            p.per != q.per || p.mean_ops != q.mean_ops)
            return false;
    }
    return true;
}

}  // namespace

TEST_CASE("wilson interval") {
    const WilsonInterval z = wilson_interval(0, 1000);
    CHECK(z.low == 0.0);
    CHECK(z.high > 0.0);
    CHECK(z.high < 0.01);
    const WilsonInterval h = wilson_interval(500, 1000);
    CHECK(h.low < 0.5);
    CHECK(h.high > 0.5);
    CHECK(h.high - h.low < 0.07);
}

TEST_CASE("campaigns: zero errors at very high vnr, determinism, early stop") {
    SimConfig cfg;
    cfg.t = 3;
    cfg.algo = SimAlgo::bdd;
    cfg.vnr_points_db = {30.0};
    cfg.trials_per_point = 1000;
    cfg.seed = 99;

    const SimResult clean = run_campaign(cfg);
    REQUIRE(clean.points.size() == 1);
    CHECK(clean.points[0].point_errors == 0);
    CHECK(clean.points[0].trials == 1000);
    CHECK(clean.points[0].per == 0.0);

    // same seed -> identical tallies; different seed -> independent stream
    cfg.vnr_points_db = {0.5, 1.5};
    cfg.trials_per_point = 400;
    const SimResult a = run_campaign(cfg);
    const SimResult b = run_campaign(cfg);
    CHECK(same_points(a, b));

    // thread count must not change anything
    const SimResult c = run_campaign(cfg, 3);
    CHECK(same_points(a, c));

    // early stop accounting: per = errors / completed trials
    cfg.vnr_points_db = {-3.0};  // heavy noise
    cfg.trials_per_point = 100000;
    cfg.max_errors = 25;
    const SimResult es = run_campaign(cfg);
    CHECK(es.points[0].point_errors >= 25);
    CHECK(es.points[0].trials < 100000);
    CHECK(es.points[0].per ==
          doctest::Approx(static_cast<double>(es.points[0].point_errors) /
                          static_cast<double>(es.points[0].trials)));
}

TEST_CASE("campaigns: bounded-list mode and zero-word mode") {
    SimConfig cfg;
    cfg.t = 4;
    cfg.algo = SimAlgo::bounded_list;
    cfg.schedule = make_schedule(0.375, {4});
    cfg.vnr_points_db = {2.0};
    cfg.trials_per_point = 300;
    cfg.tx_mode = TxMode::zero_word;
    const SimResult r = run_campaign(cfg);
    CHECK(r.points[0].trials == 300);
    CHECK(r.points[0].mean_ops > 0.0);
    CHECK(r.points[0].nep ==
          doctest::Approx(r.points[0].per / 16.0));
}

TEST_CASE("bounded list outperforms plain BDD at moderate noise") {
    SimConfig cfg;
    cfg.t = 4;
    cfg.vnr_points_db = {1.0};
    cfg.trials_per_point = 4000;
    cfg.max_errors = 100000;
    cfg.seed = 7;

    cfg.algo = SimAlgo::bdd;
    const SimResult bdd = run_campaign(cfg);
    cfg.algo = SimAlgo::bounded_list;
    cfg.schedule = make_schedule(0.375, {8});
    const SimResult lst = run_campaign(cfg);
    CHECK(lst.points[0].point_errors < bdd.points[0].point_errors);
}

TEST_CASE("mld reference curve is monotone and bounds MLD from above") {
    const std::vector<double> grid{0.5, 1.0, 1.5, 2.0, 2.5};
    const std::vector<double> est = mld_reference_curve(6, grid);
    REQUIRE(est.size() == grid.size());
    for (std::size_t i = 1; i < est.size(); ++i) CHECK(est[i] < est[i - 1]);
}

TEST_CASE("config validation") {
    SimConfig cfg;
    cfg.t = 3;
    cfg.vnr_points_db = {1.0};
    cfg.trials_per_point = 0;
    CHECK_THROWS_AS(run_campaign(cfg), std::invalid_argument);
    cfg.trials_per_point = 10;
    cfg.vnr_points_db = {std::nan("")};
    CHECK_THROWS_AS(run_campaign(cfg), std::invalid_argument);
}
