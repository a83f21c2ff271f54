#include "bw/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "bw/lattice.hpp"

namespace bw {
namespace oracle {

namespace {

struct GramSchmidt {
    int n = 0;
    IntMatrix basis;                         // integer generator rows
    std::vector<std::vector<double>> mu;     // mu[i][j], j < i
    std::vector<std::vector<double>> bstar;  // orthogonalized rows
    std::vector<double> bstar_norm2;

    explicit GramSchmidt(int t) {
        basis = generator_matrix(t);
        n = static_cast<int>(basis.size());
        mu.assign(n, std::vector<double>(n, 0.0));
        bstar.assign(n, std::vector<double>(n, 0.0));
        bstar_norm2.assign(n, 0.0);
        for (int i = 0; i < n; ++i) {
            for (int k = 0; k < n; ++k) bstar[i][k] = static_cast<double>(basis[i][k]);
            for (int j = 0; j < i; ++j) {
                double dot = 0.0;
                for (int k = 0; k < n; ++k)
                    dot += static_cast<double>(basis[i][k]) * bstar[j][k];
                mu[i][j] = dot / bstar_norm2[j];
                for (int k = 0; k < n; ++k) bstar[i][k] -= mu[i][j] * bstar[j][k];
            }
            double norm2 = 0.0;
            for (int k = 0; k < n; ++k) norm2 += bstar[i][k] * bstar[i][k];
            bstar_norm2[i] = norm2;
        }
    }
};

// Depth-first enumeration over integer coefficients, nearest-first per level.
// `leaf` sees every coefficient vector whose pruned partial distance stays
// within `bound` and may shrink the bound (CVP) or leave it fixed (ball).
struct Enumerator {
    const GramSchmidt& gs;
    std::vector<double> center;
    std::vector<double> partial;
    IntVec coeff;

    explicit Enumerator(const GramSchmidt& g)
        : gs(g), center(g.n, 0.0), partial(g.n + 1, 0.0), coeff(g.n, 0) {}

    template <typename Leaf>
    void run(const RealVec& y, double bound, Leaf&& leaf) {
        std::vector<double> proj(gs.n, 0.0);  // <y, bstar_i> / ||bstar_i||^2
        for (int i = 0; i < gs.n; ++i) {
            double dot = 0.0;
            for (int k = 0; k < gs.n; ++k) dot += y[k] * gs.bstar[i][k];
            proj[i] = dot / gs.bstar_norm2[i];
        }
        descend(gs.n - 1, proj, bound, leaf);
    }

private:
    template <typename Leaf>
    void descend(int i, const std::vector<double>& proj, double& bound, Leaf&& leaf) {
        if (i < 0) {
            leaf(coeff, bound);
            return;
        }
        double c = proj[i];
        for (int k = i + 1; k < gs.n; ++k) c -= static_cast<double>(coeff[k]) * gs.mu[k][i];
        const std::int64_t z0 = std::llround(c);
        // Zig-zag around the rounded center. |z0 - c| is minimal over all
        // integers and both sides grow monotonically with the step, so the
        // first step where neither side fits ends the level.
        for (std::int64_t step = 0;; ++step) {
            bool advanced = false;
            for (int side = 0; side < (step == 0 ? 1 : 2); ++side) {
                const std::int64_t z = (side == 0) ? z0 + step : z0 - step;
                const double diff = static_cast<double>(z) - c;
                const double acc = partial[i + 1] + diff * diff * gs.bstar_norm2[i];
                if (acc <= bound) {
                    advanced = true;
                    coeff[i] = z;
                    partial[i] = acc;
                    descend(i - 1, proj, bound, leaf);
                }
            }
            if (!advanced) break;
        }
    }
};

void check_exponent(int t) {
    if (t < 1 || t > kMaxOracleExponent)
        throw std::invalid_argument("oracle: dimension too large (t <= 4)");
}

void check_target(const RealVec& y, int t) {
    check_exponent(t);
    if (y.size() != (std::size_t{1} << t))
        throw std::invalid_argument("oracle: length must be 2^t");
}

IntVec point_of(const GramSchmidt& gs, IntSpan z) {
    IntVec p(gs.n, 0);
    for (int i = 0; i < gs.n; ++i) {
        if (z[i] == 0) continue;
        for (int k = 0; k < gs.n; ++k) p[k] += z[i] * gs.basis[i][k];
    }
    return p;
}

CandidateList enumerate_ball_unguarded(const RealVec& y, int t, double r2) {
    const GramSchmidt gs(t);
    Enumerator en(gs);
    CandidateList out;
    out.target = y;
    // enumeration slack beyond the inclusive predicate absorbs GS roundoff
    const double bound = r2 * (1.0 + kRadiusRelTol) + kRadiusAbsTol + 1e-7 * (1.0 + r2);
    en.run(y, bound, [&](const IntVec& z, double&) {
        IntVec p = point_of(gs, z);
        const double d2 = sq_dist(y, p);
        if (within_radius(d2, r2)) out.items.push_back({std::move(p), d2});
    });
    std::sort(out.items.begin(), out.items.end(),
              [](const Candidate& a, const Candidate& b) {
                  return lex_less(a.point, b.point);
              });
    return out;
}

}  // namespace

IntVec exact_cvp(const RealVec& y, int t) {
    check_target(y, t);
    const GramSchmidt gs(t);
    Enumerator en(gs);
    IntVec best;
    double best_d2 = std::numeric_limits<double>::infinity();
    en.run(y, std::numeric_limits<double>::infinity(),
           [&](const IntVec& z, double& bound) {
               IntVec p = point_of(gs, z);
               const double d2 = sq_dist(y, p);
               if (d2 < best_d2 || (d2 == best_d2 && lex_less(p, best))) {
                   best = std::move(p);
                   best_d2 = d2;
                   // keep exact-distance ties enumerable for the lex tie-break
                   bound = best_d2 * (1.0 + kRadiusRelTol) + kRadiusAbsTol;
               }
           });
    return best;
}

CandidateList enumerate_ball(const RealVec& y, int t, double r2) {
    check_target(y, t);
    if (r2 < 0.0) throw std::invalid_argument("enumerate_ball: negative radius");
    const double d = static_cast<double>(min_dist2_int(t));
    if (r2 > 0.75 * d)
        throw std::invalid_argument("enumerate_ball: radius guard exceeded (r2 <= 3/4 d)");
    return enumerate_ball_unguarded(y, t, r2);
}

CandidateList minimal_vectors(int t) {
    check_exponent(t);
    const double d = static_cast<double>(min_dist2_int(t));
    const RealVec origin(std::size_t{1} << t, 0.0);
    CandidateList ball = enumerate_ball_unguarded(origin, t, d);
    CandidateList out;
    out.target = origin;
    for (auto& c : ball.items) {
        std::int64_t norm2 = 0;
        for (auto v : c.point) norm2 += v * v;
        if (norm2 == min_dist2_int(t)) out.items.push_back(std::move(c));
    }
    return out;
}

}  // namespace oracle
}  // namespace bw
