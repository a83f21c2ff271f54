#include "bw/decoders.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bw/lattice.hpp"

namespace bw {

namespace {

constexpr double kBddRadius = 0.25;  // relative squared packing radius

void check_len(std::size_t len, int t, const char* what) {
    if (t < 1 || len != (std::size_t{1} << t))
        throw std::invalid_argument(std::string(what) + ": length must be 2^t, t >= 1");
}

// Working buffers for the BDD recursion, indexed by level. One instance per
// top-level decode keeps the hot path allocation-free and the decoders pure.
struct Scratch {
    std::vector<IntVec> u1, u2, v;  // half-dimension integer buffers
    std::vector<RealVec> res;       // half-dimension residual buffers
    std::vector<IntVec> alt;        // full-dimension second candidate
    std::vector<Candidate> sort_buf;  // merge-pass scratch, reused post-order

    explicit Scratch(int tmax) {
        u1.resize(tmax + 1);
        u2.resize(tmax + 1);
        v.resize(tmax + 1);
        res.resize(tmax + 1);
        alt.resize(tmax + 1);
        for (int s = 2; s <= tmax; ++s) {
            const std::size_t m = std::size_t{1} << (s - 1);
            u1[s].resize(m);
            u2[s].resize(m);
            v[s].resize(m);
            res[s].resize(m);
            alt[s].resize(2 * m);
        }
    }
};

// res = unrotate(yb - u), pairwise exact halving of the real residual.
void residual_unrotate(RealSpan yb, const IntVec& u, RealVec& res, OpCounter& ops) {
    const std::size_t m = yb.size();
    for (std::size_t i = 0; i < m; i += 2) {
        const double a = yb[i] - static_cast<double>(u[i]);
        const double b = yb[i + 1] - static_cast<double>(u[i + 1]);
        res[i] = (a + b) * 0.5;
        res[i + 1] = (a - b) * 0.5;
    }
    ops.adds += 2 * m;
    ops.muls += m;
}

// Returns the squared distance of `out` to y; composed incrementally from
// the child distances via d(y, (u, u+v)) = d(y1, u) + 2 d(unrot(y2-u), v').
double rec_bdd_into(RealSpan y, int t, IntVec& out, Scratch& ws, OpCounter& ops) {
    ++ops.calls;
    if (t == 1) {
        ++ops.base_calls;
        out[0] = std::llround(y[0]);
        out[1] = std::llround(y[1]);
        ops.rounds += 2;
        ops.muls += 2;
        ops.adds += 2;
        const double a = y[0] - static_cast<double>(out[0]);
        const double b = y[1] - static_cast<double>(out[1]);
        return a * a + b * b;
    }
    if (t == 2) {
        // unrolled bottom level; same arithmetic and tallies as the general
        // branch below, minus the call overhead of four leaf recursions
        ops.calls += 4;
        ops.base_calls += 4;
        ops.rounds += 8;
        ops.muls += 12;
        ops.adds += 24;
        const std::int64_t u10 = std::llround(y[0]), u11 = std::llround(y[1]);
        const std::int64_t u20 = std::llround(y[2]), u21 = std::llround(y[3]);
        const double e0 = y[0] - static_cast<double>(u10);
        const double e1 = y[1] - static_cast<double>(u11);
        const double e2 = y[2] - static_cast<double>(u20);
        const double e3 = y[3] - static_cast<double>(u21);
        const double du1 = e0 * e0 + e1 * e1;
        const double du2 = e2 * e2 + e3 * e3;

        const double a1 = y[2] - static_cast<double>(u10);
        const double b1 = y[3] - static_cast<double>(u11);
        const double r10 = (a1 + b1) * 0.5, r11 = (a1 - b1) * 0.5;
        const std::int64_t v20 = std::llround(r10), v21 = std::llround(r11);
        const double f0 = r10 - static_cast<double>(v20);
        const double f1 = r11 - static_cast<double>(v21);
        const double d_first = du1 + 2.0 * (f0 * f0 + f1 * f1);

        const double a2 = y[0] - static_cast<double>(u20);
        const double b2 = y[1] - static_cast<double>(u21);
        const double r20 = (a2 + b2) * 0.5, r21 = (a2 - b2) * 0.5;
        const std::int64_t v10 = std::llround(r20), v11 = std::llround(r21);
        const double g0 = r20 - static_cast<double>(v10);
        const double g1 = r21 - static_cast<double>(v11);
        const double d_second = du2 + 2.0 * (g0 * g0 + g1 * g1);

        out[0] = u10;
        out[1] = u11;
        out[2] = u10 + v20 + v21;
        out[3] = u11 + v20 - v21;
        if (d_second < d_first ||
            (d_second == d_first && [&] {
                 const std::int64_t alt0 = u20 + v10 + v11;
                 const std::int64_t alt1 = u21 + v10 - v11;
                 if (alt0 != out[0]) return alt0 < out[0];
                 if (alt1 != out[1]) return alt1 < out[1];
                 if (u20 != out[2]) return u20 < out[2];
                 return u21 < out[3];
             }())) {
            out[0] = u20 + v10 + v11;
            out[1] = u21 + v10 - v11;
            out[2] = u20;
            out[3] = u21;
            return d_second;
        }
        return d_first;
    }

    const std::size_t m = y.size() / 2;
    RealSpan y1 = y.first(m);
    RealSpan y2 = y.last(m);
    IntVec& u1 = ws.u1[t];
    IntVec& u2 = ws.u2[t];
    IntVec& v = ws.v[t];
    RealVec& res = ws.res[t];
    IntVec& alt = ws.alt[t];

    const double du1 = rec_bdd_into(y1, t - 1, u1, ws, ops);
    const double du2 = rec_bdd_into(y2, t - 1, u2, ws, ops);

    // candidate (u1, u1 + v2): decode the residual in RBW via unrotate,
    // recurse, rotate back
    residual_unrotate(y2, u1, res, ops);
    const double dv2 = rec_bdd_into(res, t - 1, v, ws, ops);
    for (std::size_t i = 0; i < m; i += 2) {
        const std::int64_t r0 = v[i] + v[i + 1];
        const std::int64_t r1 = v[i] - v[i + 1];
        out[i] = u1[i];
        out[i + 1] = u1[i + 1];
        out[m + i] = u1[i] + r0;
        out[m + i + 1] = u1[i + 1] + r1;
    }
    ops.adds += 2 * m;
    const double d_first = du1 + 2.0 * dv2;

    // candidate (u2 + v1, u2), mirrored
    residual_unrotate(y1, u2, res, ops);
    const double dv1 = rec_bdd_into(res, t - 1, v, ws, ops);
    for (std::size_t i = 0; i < m; i += 2) {
        const std::int64_t r0 = v[i] + v[i + 1];
        const std::int64_t r1 = v[i] - v[i + 1];
        alt[i] = u2[i] + r0;
        alt[i + 1] = u2[i + 1] + r1;
        alt[m + i] = u2[i];
        alt[m + i + 1] = u2[i + 1];
    }
    ops.adds += 2 * m;
    const double d_second = du2 + 2.0 * dv1;

    if (d_second < d_first || (d_second == d_first && lex_less(alt, out))) {
        std::copy(alt.begin(), alt.end(), out.begin());
        return d_second;
    }
    return d_first;
}

void enum_z2_into(RealSpan y, double r, std::vector<Candidate>& out, OpCounter& ops) {
    const double r2 = r * r;
    const auto lo0 = static_cast<std::int64_t>(std::ceil(y[0] - r)) - 1;
    const auto hi0 = static_cast<std::int64_t>(std::floor(y[0] + r)) + 1;
    const auto lo1 = static_cast<std::int64_t>(std::ceil(y[1] - r)) - 1;
    const auto hi1 = static_cast<std::int64_t>(std::floor(y[1] + r)) + 1;
    for (std::int64_t p = lo0; p <= hi0; ++p) {
        const double dx = y[0] - static_cast<double>(p);
        for (std::int64_t q = lo1; q <= hi1; ++q) {
            const double dy = y[1] - static_cast<double>(q);
            const double d2 = dx * dx + dy * dy;
            ops.adds += 2;
            ops.muls += 2;
            if (within_radius(d2, r2)) out.push_back({{p, q}, d2});
        }
    }
}

struct ListCtx {
    const ListSchedule* sched = nullptr;  // null: exact Alg. 3; set: Alg. 5
    Scratch* ws = nullptr;
    OpCounter* ops = nullptr;
};

CandidateList list_core(RealSpan y, int t, double delta, int ridx, ListCtx& cx);

// delta1/delta2 <= 1/4 select the BDD branch, otherwise the recursive list
// branch at the given schedule index. Candidate distances compose
// incrementally, dist2 = d(u, ya) + 2 d(v', w), per the distance
// decomposition of the squaring construction.
void sub_core(RealSpan ya, RealSpan yb, int t, double delta1, int r1, double delta2,
              int r2, bool reverse, ListCtx& cx, std::vector<Candidate>& out) {
    OpCounter& ops = *cx.ops;
    const std::size_t m = ya.size();

    std::vector<Candidate> us;
    if (delta1 <= kBddRadius) {
        IntVec u(m);
        const double d2 = rec_bdd_into(ya, t - 1, u, *cx.ws, ops);
        us.push_back({std::move(u), d2});
    } else {
        us = list_core(ya, t - 1, delta1, r1, cx).items;
    }

    RealVec& res = cx.ws->res[t];
    for (const Candidate& uc : us) {
        residual_unrotate(yb, uc.point, res, ops);
        std::vector<Candidate> vs;
        if (delta2 <= kBddRadius) {
            IntVec v(m);
            const double d2 = rec_bdd_into(res, t - 1, v, *cx.ws, ops);
            vs.push_back({std::move(v), d2});
        } else {
            vs = list_core(res, t - 1, delta2, r2, cx).items;
        }
        for (const Candidate& vc : vs) {
            IntVec p(2 * m);
            if (!reverse) {
                for (std::size_t i = 0; i < m; i += 2) {
                    const std::int64_t r0 = vc.point[i] + vc.point[i + 1];
                    const std::int64_t rr = vc.point[i] - vc.point[i + 1];
                    p[i] = uc.point[i];
                    p[i + 1] = uc.point[i + 1];
                    p[m + i] = uc.point[i] + r0;
                    p[m + i + 1] = uc.point[i + 1] + rr;
                }
            } else {
                for (std::size_t i = 0; i < m; i += 2) {
                    const std::int64_t r0 = vc.point[i] + vc.point[i + 1];
                    const std::int64_t rr = vc.point[i] - vc.point[i + 1];
                    p[i] = uc.point[i] + r0;
                    p[i + 1] = uc.point[i + 1] + rr;
                    p[m + i] = uc.point[i];
                    p[m + i + 1] = uc.point[i + 1];
                }
            }
            ops.adds += 2 * m + 1;
            ops.muls += 1;
            out.push_back({std::move(p), uc.dist2 + 2.0 * vc.dist2});
        }
    }
}

CandidateList list_core(RealSpan y, int t, double delta, int ridx, ListCtx& cx) {
    OpCounter& ops = *cx.ops;
    ++ops.calls;
    CandidateList out;
    if (t == 1) {
        ++ops.base_calls;
        enum_z2_into(y, std::sqrt(delta), out.items, ops);  // d(BW_2) = 1
        return out;
    }
    const double a = (2.0 / 3.0) * delta;
    const std::size_t m = y.size() / 2;
    RealSpan y1 = y.first(m);
    RealSpan y2 = y.last(m);
    sub_core(y1, y2, t, a, ridx + 1, delta, ridx, false, cx, out.items);
    sub_core(y1, y2, t, delta, ridx, a, ridx + 1, false, cx, out.items);
    sub_core(y2, y1, t, delta, ridx, a, ridx + 1, true, cx, out.items);
    sub_core(y2, y1, t, a, ridx + 1, delta, ridx, true, cx, out.items);

    if (cx.sched == nullptr) {
        // Alg. 3 steps 10-11: radius removal, then sort + dedup.
        const double r2 = std::exp2(t - 1) * delta;
        std::erase_if(out.items,
                      [&](const Candidate& c) { return !within_radius(c.dist2, r2); });
        sort_dedup_in_place(out.items, &ops, &cx.ws->sort_buf);
    } else {
        // Alg. 5: steps flipped; sort + dedup first, then keep the
        // truncation-many closest to this level's target (ties -> lex order,
        // which the stable sort preserves from the dedup pass).
        sort_dedup_in_place(out.items, &ops, &cx.ws->sort_buf);
        const std::size_t keep =
            ridx < static_cast<int>(cx.sched->truncations.size())
                ? static_cast<std::size_t>(cx.sched->truncations[ridx])
                : out.items.size();
        if (out.items.size() > keep) {
            std::stable_sort(out.items.begin(), out.items.end(),
                             [&](const Candidate& x, const Candidate& z) {
                                 ++ops.compares;
                                 return x.dist2 < z.dist2;
                             });
            out.items.resize(keep);
            sort_dedup_in_place(out.items, &ops, &cx.ws->sort_buf);
        }
    }
    return out;
}

void check_delta(double delta) {
    if (!(delta >= 0.25 && delta < 0.75))
        throw std::invalid_argument("delta out of accepted range [1/4, 3/4)");
}

}  // namespace

int radius_chain_length(double delta) {
    check_delta(delta);
    int k = 0;
    double r = delta;
    while (r > kBddRadius) {
        ++k;
        r = (2.0 / 3.0) * r;
    }
    return k;
}

ListSchedule make_schedule(double delta, std::vector<int> truncations) {
    ListSchedule s{delta, std::move(truncations)};
    validate_schedule(s);
    return s;
}

void validate_schedule(const ListSchedule& s) {
    check_delta(s.delta);
    const int len = radius_chain_length(s.delta);
    if (static_cast<int>(s.truncations.size()) != len)
        throw std::invalid_argument("schedule: expected " + std::to_string(len) +
                                    " truncation size(s) for this delta");
    for (int k : s.truncations)
        if (k < 1) throw std::invalid_argument("schedule: truncation sizes must be >= 1");
}

IntVec rec_bdd(const RealVec& y, int t) {
    OpCounter ops;
    return rec_bdd(y, t, ops);
}

IntVec rec_bdd(const RealVec& y, int t, OpCounter& ops) {
    check_len(y.size(), t, "rec_bdd");
    Scratch ws(t);
    IntVec out(y.size());
    rec_bdd_into(y, t, out, ws, ops);
    return out;
}

CandidateList enum_z2(const RealVec& y, double r) {
    OpCounter ops;
    return enum_z2(y, r, ops);
}

CandidateList enum_z2(const RealVec& y, double r, OpCounter& ops) {
    if (y.size() != 2) throw std::invalid_argument("enum_z2: length must be 2");
    if (r < 0.0) throw std::invalid_argument("enum_z2: radius must be >= 0");
    CandidateList out;
    out.target = y;
    enum_z2_into(y, r, out.items, ops);
    return out;  // lexicographic by construction
}

CandidateList list_rec(const RealVec& y, int t, double delta) {
    OpCounter ops;
    return list_rec(y, t, delta, ops);
}

CandidateList list_rec(const RealVec& y, int t, double delta, OpCounter& ops) {
    check_len(y.size(), t, "list_rec");
    check_delta(delta);
    Scratch ws(t);
    ListCtx cx{nullptr, &ws, &ops};
    CandidateList out = list_core(y, t, delta, 0, cx);
    out.target = y;
    return out;
}

CandidateList subroutine(const RealVec& y1, const RealVec& y2, int t, double delta1,
                         double delta2, bool reverse) {
    OpCounter ops;
    return subroutine(y1, y2, t, delta1, delta2, reverse, ops);
}

CandidateList subroutine(const RealVec& y1, const RealVec& y2, int t, double delta1,
                         double delta2, bool reverse, OpCounter& ops) {
    if (t < 2) throw std::invalid_argument("subroutine: t must be >= 2");
    check_len(y1.size(), t - 1, "subroutine");
    check_len(y2.size(), t - 1, "subroutine");
    if (!(delta1 > 0.0 && delta1 <= 0.75) || !(delta2 > 0.0 && delta2 <= 0.75))
        throw std::invalid_argument("subroutine: deltas must lie in (0, 3/4]");
    Scratch ws(t);
    ListCtx cx{nullptr, &ws, &ops};
    CandidateList out;
    out.target.reserve(y1.size() + y2.size());
    const RealVec& first = reverse ? y2 : y1;
    const RealVec& second = reverse ? y1 : y2;
    out.target.insert(out.target.end(), first.begin(), first.end());
    out.target.insert(out.target.end(), second.begin(), second.end());
    sub_core(y1, y2, t, delta1, 0, delta2, 0, reverse, cx, out.items);
    return out;
}

CandidateList list_rec_bounded(const RealVec& y, int t, const ListSchedule& schedule) {
    OpCounter ops;
    return list_rec_bounded(y, t, schedule, ops);
}

CandidateList list_rec_bounded(const RealVec& y, int t, const ListSchedule& schedule,
                               OpCounter& ops) {
    check_len(y.size(), t, "list_rec_bounded");
    validate_schedule(schedule);
    Scratch ws(t);
    ListCtx cx{&schedule, &ws, &ops};
    CandidateList out = list_core(y, t, schedule.delta, 0, cx);
    out.target = y;
    return out;
}

double list_size_bound(std::int64_t n, double delta) {
    if (!(delta < 1.0)) throw std::invalid_argument("list_size_bound: delta must be < 1");
    if (delta < 0.25) return 1.0;
    if (delta < 0.5) return 1.0 / (2.0 * (0.5 - delta));
    if (delta == 0.5) return 2.0 * static_cast<double>(n);
    return 2.0 * std::pow(static_cast<double>(n), 16.0 * std::log2(1.0 / (1.0 - delta)));
}

double relative_dist2(double dist2, int t) { return dist2 / std::exp2(t - 1); }

}  // namespace bw
