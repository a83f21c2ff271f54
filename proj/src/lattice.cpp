#include "bw/lattice.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace bw {

namespace {

constexpr double kTwoPiE = 17.0794684453471324;  // 2*pi*e

void check_exponent(int t) {
    if (t < 1) throw std::invalid_argument("exponent t must be >= 1");
    if (t > kMaxExponent)
        throw std::invalid_argument("exponent t exceeds supported range (t <= " +
                                    std::to_string(kMaxExponent) + ")");
}

void check_len(std::size_t len, int t, const char* what) {
    if (len != (std::size_t{1} << t))
        throw std::invalid_argument(std::string(what) + ": length must be 2^t");
}

}  // namespace

std::int64_t min_dist2_int(int t) {
    check_exponent(t);
    return std::int64_t{1} << (t - 1);
}

std::int64_t kissing_number_int(int t) {
    check_exponent(t);
    std::int64_t k = 1;
    for (int i = 1; i <= t; ++i) k *= (std::int64_t{1} << i) + 2;
    return k;
}

std::int64_t log2_volume_int(int t) {
    check_exponent(t);
    if (t == 1) return 0;
    return static_cast<std::int64_t>(t - 1) << (t - 2);
}

LatticeParams lattice_params(int t) {
    check_exponent(t);
    LatticeParams p;
    p.t = t;
    p.n = std::int64_t{1} << t;
    p.d = static_cast<double>(min_dist2_int(t));
    p.rho2 = p.d / 4.0;
    p.volume = std::exp2(static_cast<double>(log2_volume_int(t)));
    p.kissing = static_cast<double>(kissing_number_int(t));
    p.gamma = std::sqrt(static_cast<double>(p.n) / 2.0);
    // vol^(2/n) = 2^((t-1)/2); the Poltyrev-limit noise variance.
    p.sigma2_max = std::exp2(0.5 * (t - 1)) / kTwoPiE;
    return p;
}

RealVec rotate(const RealVec& v) {
    if (v.size() % 2 != 0) throw std::invalid_argument("rotate: odd-length input");
    RealVec out(v.size());
    for (std::size_t i = 0; i < v.size(); i += 2) {
        out[i] = v[i] + v[i + 1];
        out[i + 1] = v[i] - v[i + 1];
    }
    return out;
}

RealVec unrotate(const RealVec& v) {
    if (v.size() % 2 != 0) throw std::invalid_argument("unrotate: odd-length input");
    RealVec out(v.size());
    for (std::size_t i = 0; i < v.size(); i += 2) {
        out[i] = (v[i] + v[i + 1]) / 2.0;
        out[i + 1] = (v[i] - v[i + 1]) / 2.0;
    }
    return out;
}

IntVec rotate(const IntVec& v) {
    if (v.size() % 2 != 0) throw std::invalid_argument("rotate: odd-length input");
    IntVec out(v.size());
    for (std::size_t i = 0; i < v.size(); i += 2) {
        out[i] = v[i] + v[i + 1];
        out[i + 1] = v[i] - v[i + 1];
    }
    return out;
}

std::optional<IntVec> unrotate_exact(IntSpan v) {
    if (v.size() % 2 != 0) throw std::invalid_argument("unrotate: odd-length input");
    IntVec out(v.size());
    for (std::size_t i = 0; i < v.size(); i += 2) {
        const std::int64_t s = v[i] + v[i + 1];
        const std::int64_t d = v[i] - v[i + 1];
        if (s % 2 != 0) return std::nullopt;
        out[i] = s / 2;
        out[i + 1] = d / 2;
    }
    return out;
}

IntMatrix generator_matrix(int t) {
    check_exponent(t);
    if (t == 1) return {{1, 0}, {0, 1}};
    const IntMatrix g = generator_matrix(t - 1);
    const std::size_t m = g.size();
    IntMatrix out(2 * m, IntVec(2 * m, 0));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            out[i][j] = g[i][j];
            out[i][m + j] = g[i][j];
        }
        const IntVec rot = rotate(g[i]);
        for (std::size_t j = 0; j < m; ++j) out[m + i][m + j] = rot[j];
    }
    return out;
}

IntVec lattice_point_from_coeffs(IntSpan z, int t) {
    check_len(z.size(), t, "lattice_point_from_coeffs");
    if (t == 1) return IntVec(z.begin(), z.end());
    const std::size_t m = z.size() / 2;
    const IntVec x1 = lattice_point_from_coeffs(z.first(m), t - 1);
    const IntVec v = rotate(lattice_point_from_coeffs(z.last(m), t - 1));
    IntVec out(z.size());
    for (std::size_t i = 0; i < m; ++i) {
        out[i] = x1[i];
        out[m + i] = x1[i] + v[i];
    }
    return out;
}

std::optional<IntVec> coeffs_from_point(IntSpan x, int t) {
    check_len(x.size(), t, "coeffs_from_point");
    if (t == 1) return IntVec(x.begin(), x.end());
    const std::size_t m = x.size() / 2;
    auto z1 = coeffs_from_point(x.first(m), t - 1);
    if (!z1) return std::nullopt;
    IntVec diff(m);
    for (std::size_t i = 0; i < m; ++i) diff[i] = x[m + i] - x[i];
    auto w = unrotate_exact(diff);
    if (!w) return std::nullopt;
    auto z2 = coeffs_from_point(*w, t - 1);
    if (!z2) return std::nullopt;
    IntVec z(x.size());
    for (std::size_t i = 0; i < m; ++i) {
        z[i] = (*z1)[i];
        z[m + i] = (*z2)[i];
    }
    return z;
}

bool is_member(IntSpan x, int t) {
    check_len(x.size(), t, "is_member");
    if (t == 1) return true;
    const std::size_t m = x.size() / 2;
    if (!is_member(x.first(m), t - 1)) return false;
    IntVec diff(m);
    for (std::size_t i = 0; i < m; ++i) diff[i] = x[m + i] - x[i];
    const auto w = unrotate_exact(diff);
    if (!w) return false;
    return is_member(*w, t - 1);
}

IntVec sample_lattice_point(int t, std::int64_t range, Rng& rng) {
    check_exponent(t);
    if (range < 0) throw std::invalid_argument("sample_lattice_point: range must be >= 0");
    IntVec z(std::size_t{1} << t);
    for (auto& c : z) c = rng.uniform_int(-range, range);
    return lattice_point_from_coeffs(z, t);
}

double union_bound_estimate(int t, double vnr) {
    const LatticeParams p = lattice_params(t);
    if (!(vnr > 0.0)) throw std::invalid_argument("union_bound_estimate: vnr must be > 0");
    const double sigma2 = p.sigma2_max / vnr;
    return 0.5 * p.kissing * std::erfc(std::sqrt(p.d / (8.0 * sigma2)));
}

int exponent_for_dim(std::int64_t n) {
    if (n >= 2 && (n & (n - 1)) == 0) {
        int t = 0;
        while ((std::int64_t{1} << t) < n) ++t;
        return t;
    }
    throw std::invalid_argument("dimension must be a power of two, n >= 2");
}

}  // namespace bw
