#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <set>

#include "bw/constellation.hpp"
#include "bw/lattice.hpp"
#include "test_util.hpp"

using namespace bw;

namespace {

ConstellationConfig small_cfg() {
    ConstellationConfig cfg;
    cfg.t = 2;
    cfg.eta = 1;
    cfg.schedule = make_schedule(0.375, {8});
    return cfg;
}

ConstellationConfig paper_cfg() {
    ConstellationConfig cfg;  // t = 6, eta = 4, delta = 3/8, aleph = 20
    return cfg;
}

Message random_message(std::size_t n, std::int64_t mod, Rng& rng) {
    Message m(n);
    for (auto& s : m) s = rng.uniform_int(0, mod - 1);
    return m;
}

}  // namespace

TEST_CASE("all-zero message encodes to the origin") {
    const ConstellationConfig cfg = small_cfg();
    const EncodeResult e = encode(Message(4, 0), cfg);
    CHECK(e.point == IntVec(4, 0));
    CHECK_FALSE(e.incomplete);
}

TEST_CASE("message validation") {
    const ConstellationConfig cfg = small_cfg();
    CHECK_THROWS_AS(encode(Message(3, 0), cfg), std::invalid_argument);
    CHECK_THROWS_AS(encode(Message(4, 2), cfg), std::invalid_argument);
    CHECK_THROWS_AS(encode(Message{0, 0, 0, -1}, cfg), std::invalid_argument);
}

TEST_CASE("bijectivity at desk scale: t = 2, eta = 1") {
    const ConstellationConfig cfg = small_cfg();
    std::set<IntVec> images;
    for (int m = 0; m < 16; ++m) {
        Message msg(4);
        for (int i = 0; i < 4; ++i) msg[i] = (m >> i) & 1;
        const EncodeResult e = encode(msg, cfg);
        CHECK(is_member(e.point, cfg.t));
        CHECK(congruent(e.point, msg, cfg));
        images.insert(e.point);
        CHECK(decode(bwtest::to_real(e.point), cfg) == msg);
    }
    CHECK(images.size() == 16);
}

TEST_CASE("round trip and congruence at n = 64 (desk-scale sample)") {
    const ConstellationConfig cfg = paper_cfg();
    Rng rng(404);
    const std::size_t n = 64;
    int incomplete = 0;
    for (int rep = 0; rep < 200; ++rep) {
        const Message msg = random_message(n, cfg.modulus(), rng);
        const EncodeResult e = encode(msg, cfg);
        CHECK(is_member(e.point, cfg.t));
        CHECK(congruent(e.point, msg, cfg));
        CHECK(decode(bwtest::to_real(e.point), cfg) == msg);
        incomplete += e.incomplete ? 1 : 0;
    }
    CHECK(incomplete <= 2);  // < 1% target, desk-scale glimpse
}

TEST_CASE("small noise within rho still recovers the message") {
    const ConstellationConfig cfg = paper_cfg();
    Rng rng(3000);
    const double rho2 = static_cast<double>(min_dist2_int(cfg.t)) / 4.0;
    for (int rep = 0; rep < 50; ++rep) {
        const Message msg = random_message(64, cfg.modulus(), rng);
        const EncodeResult e = encode(msg, cfg);
        const RealVec y = bwtest::add_noise(e.point, 0.9 * rho2, rng);
        CHECK(decode(y, cfg) == msg);
    }
}

TEST_CASE("shaping strictly reduces mean energy") {
    const ConstellationConfig cfg = paper_cfg();
    Rng rng(11);
    double shaped = 0.0, unshaped = 0.0;
    const int trials = 1000;
    for (int rep = 0; rep < trials; ++rep) {
        const Message msg = random_message(64, cfg.modulus(), rng);
        const IntVec c = lattice_point_from_coeffs(msg, cfg.t);
        const EncodeResult e = encode(msg, cfg);
        for (auto v : c) unshaped += static_cast<double>(v) * static_cast<double>(v);
        for (auto v : e.point) shaped += static_cast<double>(v) * static_cast<double>(v);
    }
    CHECK(shaped < unshaped);
}

TEST_CASE("SER campaign: zero noise, determinism, monotone trend") {
    ConstellationConfig cfg = small_cfg();
    const std::vector<double> points{12.0};
    const SerResult clean = run_ser_campaign(cfg, points, 300, 5);
    REQUIRE(clean.points.size() == 1);
    CHECK(clean.points[0].symbol_errors == 0);
    CHECK(clean.points[0].incomplete_rate <= 0.01);

    const std::vector<double> sweep{-1.0, 1.0, 3.0};
    const SerResult a = run_ser_campaign(cfg, sweep, 400, 5);
    const SerResult b = run_ser_campaign(cfg, sweep, 400, 5);
    const SerResult c = run_ser_campaign(cfg, sweep, 400, 5, 3);
    for (std::size_t i = 0; i < sweep.size(); ++i) {
        CHECK(a.points[i].symbol_errors == b.points[i].symbol_errors);
        CHECK(a.points[i].symbol_errors == c.points[i].symbol_errors);
        if (i > 0) {
            // non-increasing within the CI overlap
            CHECK(a.points[i].ci_low <= a.points[i - 1].ci_high);
        }
    }
    CHECK(a.points.front().ser >= a.points.back().ser);
}
