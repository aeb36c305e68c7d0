#pragma once

// Shared fixtures and independent pointwise oracles for the test suites.
// The oracles evaluate functions point by point (never through pl_range or
// sup_norm) so they stay independent of the code paths they check.

#include <vector>

#include "fiberosc/functions.hpp"
#include "fiberosc/plfunction.hpp"

namespace fiberosc::testing {

inline Rational rat(long n, long d = 1) { return Rational(n, d); }

inline PLFunction step_at_half() {
    return PLFunction({{rat(0), rat(0), rat(0), rat(0)},
                       {rat(1, 2), rat(0), rat(0), rat(1)},
                       {rat(1), rat(1), rat(1), rat(1)}});
}

// lex square: base = unit step at 1/2, identity fiber there
inline RepresentableFunction make_h1() {
    RepresentableFunction h;
    h.space = FiberedSpaceModel::lex_square();
    h.base = step_at_half();
    h.fibers.emplace(rat(1, 2), FiberData::interval(PLFunction::identity()));
    return h;
}

// double arrow: base = x with a +1/3 jump at 1/4
inline RepresentableFunction make_h2() {
    RepresentableFunction h;
    h.space = FiberedSpaceModel::double_arrow();
    h.base = PLFunction({{rat(0), rat(0), rat(0), rat(0)},
                         {rat(1, 4), rat(1, 4), rat(1, 4), rat(7, 12)},
                         {rat(1), rat(4, 3), rat(4, 3), rat(4, 3)}});
    h.fibers.emplace(rat(1, 4), FiberData::chain({rat(1, 4), rat(7, 12)}));
    return h;
}

// lex square: zero base, tent fibers of oscillation 1/2 at 1/3 and 1/4 at 2/3
inline RepresentableFunction make_h4() {
    RepresentableFunction h;
    h.space = FiberedSpaceModel::lex_square();
    h.base = PLFunction::constant(rat(0));
    h.fibers.emplace(rat(1, 3), FiberData::interval(PLFunction::interpolate(
                                    {{rat(0), rat(0)}, {rat(1, 2), rat(1, 2)}, {rat(1), rat(0)}})));
    h.fibers.emplace(rat(2, 3), FiberData::interval(PLFunction::interpolate(
                                    {{rat(0), rat(0)}, {rat(1, 2), rat(1, 4)}, {rat(1), rat(0)}})));
    return h;
}

// product square: h(x, y) = y
inline RepresentableFunction make_product_y() {
    RepresentableFunction h;
    h.space = FiberedSpaceModel::product_square();
    h.base = PLFunction::constant(rat(0));
    h.product_slope = rat(1);
    return h;
}

// all points of X whose value can realize the sup of |h| or of a difference
inline std::vector<XPoint> probe_points(const RepresentableFunction& h) {
    std::vector<XPoint> pts;
    auto fiber_probe = [&](const Rational& b) {
        FiberKind k = h.space.fiber_at(b);
        switch (k.tag) {
            case FiberKind::Tag::Singleton:
                pts.push_back(XPoint::at_singleton(b));
                break;
            case FiberKind::Tag::Interval: {
                auto it = h.fibers.find(b);
                if (it != h.fibers.end() && it->second.pl) {
                    for (const Breakpoint& q : it->second.pl->breakpoints())
                        pts.push_back(XPoint::on_interval(b, q.x));
                } else {
                    pts.push_back(XPoint::on_interval(b, Rational(0)));
                    pts.push_back(XPoint::on_interval(b, Rational(1)));
                }
                break;
            }
            case FiberKind::Tag::FiniteChain:
                for (int i = 0; i < k.chain_size; ++i) pts.push_back(XPoint::on_chain(b, i));
                break;
        }
    };
    for (const Breakpoint& p : h.base.breakpoints()) {
        Rational b = h.space.canonical_base(p.x);
        fiber_probe(b);
    }
    for (const auto& [a, fd] : h.fibers) fiber_probe(a);
    return pts;
}

// pointwise sup-norm oracle: h attains its sup at one of the probe points
inline Rational oracle_sup_abs(const RepresentableFunction& h) {
    Rational best(0);
    for (const XPoint& p : probe_points(h)) best = max(best, eval(h, p).abs());
    return best;
}

// pointwise oracle for sup |a - b| over the common space
inline Rational oracle_sup_diff(const RepresentableFunction& a, const RepresentableFunction& b) {
    Rational best(0);
    std::vector<XPoint> pts = probe_points(a);
    for (const XPoint& p : probe_points(b)) pts.push_back(p);
    for (const XPoint& p : pts) best = max(best, (eval(a, p) - eval(b, p)).abs());
    return best;
}

// fiber diameter over an explicit coordinate grid (monotone refinement
// oracle for the oscillation)
inline Rational oracle_grid_diameter(const RepresentableFunction& h, const Rational& at,
                                     const std::vector<Rational>& grid) {
    bool first = true;
    Rational lo(0), hi(0);
    for (const Rational& y : grid) {
        Rational v = eval(h, XPoint::on_interval(at, y));
        if (first) { lo = hi = v; first = false; }
        if (v < lo) lo = v;
        if (v > hi) hi = v;
    }
    return hi - lo;
}

}  // namespace fiberosc::testing
