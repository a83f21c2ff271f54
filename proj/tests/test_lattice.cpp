#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "bw/lattice.hpp"
#include "bw/oracle.hpp"
#include "test_util.hpp"

using namespace bw;

TEST_CASE("params: closed-form constants") {
    const LatticeParams p1 = lattice_params(1);
    CHECK(p1.n == 2);
    CHECK(p1.d == 1.0);
    CHECK(p1.rho2 == 0.25);
    CHECK(p1.volume == 1.0);
    CHECK(p1.gamma == 1.0);
    CHECK(p1.kissing == 4.0);

    const LatticeParams p2 = lattice_params(2);
    CHECK(p2.d == 2.0);
    CHECK(p2.kissing == 24.0);
    CHECK(p2.volume == 2.0);
    CHECK(p2.gamma == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));

    const LatticeParams p4 = lattice_params(4);
    CHECK(p4.kissing == 4320.0);
    CHECK(p4.volume == 4096.0);
    CHECK(p4.d == 8.0);

    CHECK_THROWS_AS(lattice_params(0), std::invalid_argument);
    CHECK_THROWS_AS(lattice_params(-3), std::invalid_argument);
    CHECK_THROWS_AS(lattice_params(9), std::invalid_argument);
}

TEST_CASE("params: exact-arithmetic identities for t <= 8") {
    for (int t = 1; t <= 8; ++t) {
        const std::int64_t n = std::int64_t{1} << t;
        // gamma^2 * vol^(4/n) = d^2 reduces to 4*log2(vol) == (t-1)*n
        CHECK(4 * log2_volume_int(t) == (t - 1) * n);
        // scaling ladder
        if (t >= 2) {
            CHECK(min_dist2_int(t) == 2 * min_dist2_int(t - 1));
            // vol(t) = 2^(n/4) * vol(t-1)^2 with n = 2^t
            CHECK(log2_volume_int(t) == n / 4 + 2 * log2_volume_int(t - 1));
            CHECK(kissing_number_int(t) ==
                  kissing_number_int(t - 1) * ((std::int64_t{1} << t) + 2));
        }
        const LatticeParams p = lattice_params(t);
        CHECK(p.volume == std::exp2(static_cast<double>(log2_volume_int(t))));
        CHECK(p.gamma == doctest::Approx(std::sqrt(static_cast<double>(p.n) / 2.0)));
        CHECK(p.gamma * p.gamma == doctest::Approx(p.d).epsilon(1e-14));
        CHECK(p.sigma2_max ==
              doctest::Approx(std::pow(p.volume, 2.0 / static_cast<double>(p.n)) /
                              (2.0 * M_PI * std::exp(1.0)))
                  .epsilon(1e-12));
    }
}

TEST_CASE("rotate / unrotate") {
    CHECK(rotate(RealVec{1, 0}) == RealVec{1, 1});
    CHECK(unrotate(RealVec{1, 1}) == RealVec{1, 0});
    CHECK(rotate(RealVec{2, 3, -1, 4}) == RealVec{5, -1, 3, -5});
    CHECK_THROWS_AS(rotate(RealVec{1, 2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(unrotate(RealVec{1}), std::invalid_argument);

    Rng rng(7);
    for (int rep = 0; rep < 50; ++rep) {
        // dyadic coordinates: the round trip is exact, as is norm doubling
        RealVec v(8);
        for (auto& c : v) c = static_cast<double>(rng.uniform_int(-64, 64)) / 16.0;
        CHECK(unrotate(rotate(v)) == v);
        double n1 = 0.0, n2 = 0.0;
        const RealVec r = rotate(v);
        for (std::size_t i = 0; i < v.size(); ++i) {
            n1 += v[i] * v[i];
            n2 += r[i] * r[i];
        }
        CHECK(n2 == doctest::Approx(2.0 * n1).epsilon(1e-14));
    }
}

TEST_CASE("generator matrix") {
    CHECK(generator_matrix(1) == IntMatrix{{1, 0}, {0, 1}});

    const IntMatrix g2 = generator_matrix(2);
    CHECK(bwtest::abs_det(g2) == doctest::Approx(2.0));
    CHECK(g2[2] == IntVec{0, 0, 1, 1});
    std::int64_t norm = 0;
    for (auto v : g2[2]) norm += v * v;
    CHECK(norm == min_dist2_int(2));

    for (int t = 2; t <= 4; ++t) {
        const IntMatrix g = generator_matrix(t);
        const double vol = std::exp2(static_cast<double>(log2_volume_int(t)));
        CHECK(bwtest::abs_det(g) == doctest::Approx(vol).epsilon(1e-9));
        for (const IntVec& row : g) CHECK(is_member(row, t));
    }
}

TEST_CASE("is_member basics") {
    CHECK(is_member(IntVec{0, 0, 0, 0}, 2));
    CHECK(is_member(IntVec{0, 0, 1, 1}, 2));
    CHECK_FALSE(is_member(IntVec{0, 0, 1, 0}, 2));
    CHECK_THROWS_AS(is_member(IntVec{0, 0, 0}, 2), std::invalid_argument);
}

TEST_CASE("membership agrees with integer solvability of z*G = x") {
    Rng rng(1234);
    for (int t = 1; t <= 4; ++t) {
        const IntMatrix gen = generator_matrix(t);
        const std::size_t n = std::size_t{1} << t;
        int members = 0;
        for (int rep = 0; rep < 1000; ++rep) {
            IntVec x(n);
            if (rep % 2 == 0) {
                x = sample_lattice_point(t, 3, rng);
            } else {
                for (auto& c : x) c = rng.uniform_int(-6, 6);
            }
            const bool mem = is_member(x, t);
            CHECK(mem == bwtest::solvable_over_integers(x, gen));
            if (mem) {
                const auto z = coeffs_from_point(x, t);
                REQUIRE(z.has_value());
                CHECK(lattice_point_from_coeffs(*z, t) == x);
            }
            members += mem ? 1 : 0;
        }
        CHECK(members >= 500);  // the sampled half at least
    }
}

TEST_CASE("rotate preserves membership and doubles norms") {
    Rng rng(99);
    for (int t = 1; t <= 5; ++t) {
        for (int rep = 0; rep < 40; ++rep) {
            const IntVec x = sample_lattice_point(t, 3, rng);
            const IntVec r = rotate(x);
            CHECK(is_member(r, t));
            std::int64_t n1 = 0, n2 = 0;
            for (auto v : x) n1 += v * v;
            for (auto v : r) n2 += v * v;
            CHECK(n2 == 2 * n1);
        }
    }
}

TEST_CASE("sample_lattice_point") {
    Rng rng(5);
    CHECK(sample_lattice_point(3, 0, rng) == IntVec(8, 0));
    for (int rep = 0; rep < 100; ++rep)
        CHECK(is_member(sample_lattice_point(4, 4, rng), 4));

    Rng a(42), b(42);
    CHECK(sample_lattice_point(5, 4, a) == sample_lattice_point(5, 4, b));
    CHECK_THROWS_AS(sample_lattice_point(3, -1, rng), std::invalid_argument);
}

TEST_CASE("kissing census matches the product formula (t <= 3)") {
    CHECK(oracle::minimal_vectors(1).size() == 4);
    CHECK(oracle::minimal_vectors(2).size() == 24);
    CHECK(oracle::minimal_vectors(3).size() == 240);
    CHECK(kissing_number_int(1) == 4);
    CHECK(kissing_number_int(2) == 24);
    CHECK(kissing_number_int(3) == 240);
}

TEST_CASE("union bound estimate") {
    CHECK_THROWS_AS(union_bound_estimate(1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(union_bound_estimate(1, -2.0), std::invalid_argument);

    // vanishing at high vnr, strictly decreasing in vnr
    CHECK(union_bound_estimate(3, 1e9) < 1e-200);
    for (int t : {1, 3, 6}) {
        const double e1 = union_bound_estimate(t, std::pow(10.0, 0.1));  // 1 dB
        const double e2 = union_bound_estimate(t, std::pow(10.0, 0.2));  // 2 dB
        CHECK(e2 < e1);
    }

    // value stays within [0, tau/2]
    for (double vnr : {0.01, 0.5, 1.0, 4.0}) {
        const double e = union_bound_estimate(6, vnr);
        CHECK(e >= 0.0);
        CHECK(e <= lattice_params(6).kissing / 2.0);
    }

    // t = 1, vnr = 1: direct evaluation, cross-checked by Monte Carlo MLD in
    // Z^2 (coordinate-wise rounding is exact MLD there)
    const double est = union_bound_estimate(1, 1.0);
    const double sigma = std::sqrt(lattice_params(1).sigma2_max);
    Rng rng(777);
    int errors = 0;
    const int trials = 200000;
    for (int i = 0; i < trials; ++i) {
        const double a = sigma * rng.gaussian();
        const double b = sigma * rng.gaussian();
        if (std::llround(a) != 0 || std::llround(b) != 0) ++errors;
    }
    const double mc = static_cast<double>(errors) / trials;
    CHECK(est < 2.0 * mc);
    CHECK(est > 0.5 * mc);
}
