#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "bw/lattice.hpp"
#include "bw/oracle.hpp"
#include "test_util.hpp"

using namespace bw;

TEST_CASE("exact_cvp basics") {
    CHECK(oracle::exact_cvp(RealVec{0.6, 0.6}, 1) == IntVec{1, 1});

    Rng rng(11);
    for (int t = 1; t <= 4; ++t) {
        for (int rep = 0; rep < 20; ++rep) {
            const IntVec x = sample_lattice_point(t, 2, rng);
            CHECK(oracle::exact_cvp(bwtest::to_real(x), t) == x);
        }
    }
    CHECK_THROWS_AS(oracle::exact_cvp(RealVec(32, 0.0), 5), std::invalid_argument);
}

TEST_CASE("enumerate_ball basics") {
    // r2 = 0 at a lattice point: singleton
    const CandidateList single = oracle::enumerate_ball(RealVec{1, 1, 2, 0}, 2, 0.0);
    REQUIRE(single.size() == 1);
    CHECK(single.items[0].point == IntVec{1, 1, 2, 0});

    // deep hole of Z^2
    const CandidateList hole = oracle::enumerate_ball(RealVec{0.5, 0.5}, 1, 0.5);
    REQUIRE(hole.size() == 4);
    CHECK(hole.items[0].point == IntVec{0, 0});
    CHECK(hole.items[1].point == IntVec{0, 1});
    CHECK(hole.items[2].point == IntVec{1, 0});
    CHECK(hole.items[3].point == IntVec{1, 1});

    CHECK_THROWS_AS(oracle::enumerate_ball(RealVec(4, 0.0), 2, 1.6), std::invalid_argument);
}

TEST_CASE("ball members are lattice points and cvp is self-consistent") {
    Rng rng(321);
    for (int t = 2; t <= 4; ++t) {
        const IntMatrix gen = generator_matrix(t);
        const double d = static_cast<double>(min_dist2_int(t));
        for (int rep = 0; rep < 15; ++rep) {
            const RealVec y = bwtest::uniform_in_cell(gen, rng);
            const IntVec best = oracle::exact_cvp(y, t);
            const double best_d2 = sq_dist(y, best);
            CHECK(best_d2 <= 0.5 * d * (1.0 + 1e-9));  // covering radius bound
            const CandidateList ball = oracle::enumerate_ball(y, t, best_d2);
            bool found = false;
            for (const Candidate& c : ball.items) {
                CHECK(is_member(c.point, t));
                CHECK(c.dist2 >= best_d2 * (1.0 - 1e-9));
                if (c.point == best) found = true;
            }
            CHECK(found);
        }
    }
}

TEST_CASE("minimal vectors of BW_2") {
    const CandidateList mv = oracle::minimal_vectors(1);
    REQUIRE(mv.size() == 4);
    CHECK(mv.items[0].point == IntVec{-1, 0});
    CHECK(mv.items[1].point == IntVec{0, -1});
    CHECK(mv.items[2].point == IntVec{0, 1});
    CHECK(mv.items[3].point == IntVec{1, 0});
}

TEST_CASE("deep hole of BW_4 found by grid search attains 2n points at r2 = d/2") {
    // search targets on the half-integer grid of [0,1]^4, maximizing the
    // exact CVP distance
    double best_d2 = -1.0;
    RealVec hole;
    RealVec y(4);
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b)
            for (int c = 0; c <= 2; ++c)
                for (int e = 0; e <= 2; ++e) {
                    y = {a / 2.0, b / 2.0, c / 2.0, e / 2.0};
                    const double d2 = sq_dist(y, oracle::exact_cvp(y, 2));
                    if (d2 > best_d2) {
                        best_d2 = d2;
                        hole = y;
                    }
                }
    CHECK(best_d2 == doctest::Approx(1.0).epsilon(1e-12));  // = d(BW_4)/2
    const CandidateList ball = oracle::enumerate_ball(hole, 2, 1.0);
    CHECK(ball.size() == 8);  // 2n
}
