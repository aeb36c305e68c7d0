#include "fiberosc/approximation.hpp"

#include <algorithm>

#include "fiberosc/errors.hpp"

namespace fiberosc {

namespace {

const Rational kZero(0);
const Rational kOne(1);

std::vector<Rational> canonical_keep(const FiberedSpaceModel& m, std::vector<Rational> keep) {
    for (Rational& a : keep) a = m.canonical_base(a);
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    return keep;
}

bool in_sorted(const std::vector<Rational>& v, const Rational& x) {
    return std::binary_search(v.begin(), v.end(), x);
}

RangeResult hull(const RangeResult& a, const RangeResult& b) {
    return {min(a.inf, b.inf), max(a.sup, b.sup)};
}

}  // namespace

ApproximationPlan flatten(const RepresentableFunction& h, std::vector<Rational> keep,
                          const Rational& c) {
    if (!(c > kOne)) throw ParameterError("flatten: c must exceed 1");
    if (h.space.mode == TopologyMode::Product)
        throw UnsupportedTopology("flatten: product mode has no finite oscillation supports");
    require_valid(h);

    ApproximationPlan plan;
    plan.h = h;
    plan.keep = canonical_keep(h.space, std::move(keep));
    plan.c = c;

    OscillationProfile prof = oscillate(h);
    plan.s = kZero;
    std::vector<Rational> to_flatten;
    for (const auto& [a, osc] : prof.support) {
        if (in_sorted(plan.keep, a)) continue;
        plan.s = max(plan.s, osc);
        to_flatten.push_back(a);
    }

    RepresentableFunction p = h;
    for (const Rational& a : to_flatten) {
        Rational osc = prof.support.at(a);

        // initial radius: a third of the gap to the nearest other
        // distinguished point or domain edge, so closed bridge intervals
        // stay pairwise disjoint and avoid the keep set
        Rational gap = a > kZero ? a : kOne;
        if (a < kOne) gap = min(gap, kOne - a);
        for (const auto& [b, fd] : h.fibers)
            if (b != a) gap = min(gap, (b - a).abs());
        for (const Rational& b : plan.keep)
            gap = min(gap, (b - a).abs());
        Rational delta = gap / Rational(3);

        // shrink until the value band obeys the oscillation bound
        Rational l, r;
        RangeResult band{kZero, kZero};
        for (;;) {
            l = a > delta ? a - delta : kZero;
            r = a + delta < kOne ? a + delta : kOne;
            band = hull(h.base.range(l, r, RangeMode::IncludeLimits), fiber_range(h, a));
            if (band.diameter() < c * osc) break;
            delta /= Rational(2);
        }

        Rational va = h.base.eval(l), vb = h.base.eval(r);
        Rational bva = a == kZero ? vb : va;
        Rational bvb = a == kOne ? va : vb;
        PLFunction bridge = pl_bridge(l, r, bva, bvb);

        if (min(bva, bvb) < band.inf || max(bva, bvb) > band.sup)
            throw Error("flatten: bridge escapes the value band");

        p.base = p.base.replace_on(l, r, bridge, a != kZero, a != kOne);
        p.fibers.erase(a);
        plan.bridges.push_back({a, l, r, band.inf, band.sup, osc, std::move(bridge)});
    }

    plan.result = p;
    plan.achieved_error = sup_norm(subtract(p, h));
    plan.error_bound = c * plan.s;

    // postconditions, all exact
    if (!is_valid(p)) throw Error("flatten: result fails the continuity validator");
    for (const Rational& y : oscillate(p).support_points())
        if (!in_sorted(plan.keep, y))
            throw Error("flatten: oscillation support escapes the keep set");
    if (plan.achieved_error > plan.error_bound)
        throw Error("flatten: error bound violated");
    for (std::size_t i = 0; i + 1 < plan.bridges.size(); ++i)
        if (!(plan.bridges[i].hi < plan.bridges[i + 1].lo))
            throw Error("flatten: bridge intervals overlap");
    for (const BridgeInfo& b : plan.bridges)
        for (const Rational& k : plan.keep)
            if (b.lo <= k && k <= b.hi) throw Error("flatten: bridge touches the keep set");
    return plan;
}

DistBounds dist_bounds(const RepresentableFunction& h, std::vector<Rational> keep) {
    static const Rational schedule[] = {Rational(2), Rational(3, 2), Rational(9, 8),
                                        Rational(17, 16)};
    DistBounds out;
    bool first = true;
    for (const Rational& c : schedule) {
        ApproximationPlan plan = flatten(h, keep, c);
        if (first) {
            out.s = plan.s;
            out.lower = plan.s / Rational(2);
            out.upper = plan.achieved_error;
            first = false;
        }
        out.upper = min(out.upper, plan.achieved_error);
        out.schedule.emplace_back(c, plan.achieved_error);
    }
    if (out.lower > out.upper) throw Error("distance: sandwich inverted");
    if (out.upper > schedule[3] * out.s) throw Error("distance: upper bound exceeds c_min * s");
    return out;
}

ChainReport bprime_chain(const RepresentableFunction& h, std::vector<Rational> c_schedule) {
    if (c_schedule.empty()) throw ParameterError("chain: empty schedule");
    for (const Rational& c : c_schedule)
        if (!(c > kOne)) throw ParameterError("chain: schedule entries must exceed 1");

    OscillationProfile prof = oscillate(h);
    if (prof.is_infinite()) throw UnsupportedTopology("chain: infinite oscillation profile");

    ChainReport report;
    report.c_ref = c_schedule.front();
    for (const Rational& c : c_schedule) report.c_ref = min(report.c_ref, c);

    // K_m changes exactly at m = ceil(1/osc) for each support value
    std::vector<long> ms{1};
    for (const auto& [y, v] : prof.support) ms.push_back(v.reciprocal().ceil_long());
    std::sort(ms.begin(), ms.end());
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
    report.exhaustion_m = ms.back();

    for (std::size_t i = 0; i < ms.size(); ++i) {
        ChainRow row;
        row.m_from = ms[i];
        row.m_to = i + 1 < ms.size() ? ms[i + 1] - 1 : ms[i];
        Rational thr(1, row.m_from);
        for (const auto& [y, v] : prof.support)
            if (v >= thr) row.keep.push_back(y);

        bool first = true;
        for (const Rational& c : c_schedule) {
            ApproximationPlan plan = flatten(h, row.keep, c);
            if (first) {
                row.s = plan.s;
                row.upper = plan.achieved_error;
                first = false;
            }
            row.upper = min(row.upper, plan.achieved_error);
        }
        // certified decay: upper <= c_ref * s < c_ref / m across the row
        if (row.upper > report.c_ref * row.s)
            throw Error("chain: row upper bound exceeds c * s");
        if (row.upper * Rational(row.m_to) > report.c_ref)
            throw Error("chain: decay bound fails inside the row");
        report.rows.push_back(std::move(row));
    }

    // monotonicity of the chain
    for (std::size_t i = 0; i + 1 < report.rows.size(); ++i) {
        const auto& a = report.rows[i].keep;
        const auto& b = report.rows[i + 1].keep;
        if (!std::includes(b.begin(), b.end(), a.begin(), a.end()))
            throw Error("chain: keep sets are not increasing");
    }
    report.exact_zero_at_exhaustion = report.rows.back().upper.is_zero();
    if (!report.exact_zero_at_exhaustion)
        throw Error("chain: distance must vanish once the support is exhausted");
    return report;
}

NestingReport nesting_check(const std::vector<Rational>& a, const std::vector<Rational>& b,
                            const std::vector<RepresentableFunction>& samples) {
    std::vector<Rational> sa = a, sb = b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (!std::includes(sb.begin(), sb.end(), sa.begin(), sa.end()))
        throw DomainError("nesting: A must be a subset of B");
    NestingReport rep;
    for (const RepresentableFunction& q : samples) {
        OscillationProfile prof = oscillate(q);
        if (prof.is_infinite()) continue;
        bool in_za = true;
        for (const Rational& y : prof.support_points())
            if (!std::binary_search(sa.begin(), sa.end(), y)) { in_za = false; break; }
        if (!in_za) continue;
        ++rep.checked;
        for (const Rational& y : prof.support_points())
            if (!std::binary_search(sb.begin(), sb.end(), y)) rep.ok = false;
    }
    return rep;
}

}  // namespace fiberosc
