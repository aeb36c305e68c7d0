#include "fiberosc/quotients.hpp"

#include <algorithm>

#include "fiberosc/errors.hpp"
#include "fiberosc/oscillation.hpp"

namespace fiberosc {

namespace {
const Rational kZero(0);
const Rational kOne(1);
}  // namespace

XPoint QuotientModel::project(const XPoint& x) const {
    check_point(parent, x);
    Rational b = parent.canonical_base(x.base);
    if (std::binary_search(keep.begin(), keep.end(), b)) return x;
    return XPoint::at_singleton(b);
}

Rational QuotientModel::to_base(const XPoint& u) const {
    check_point(derived, u);
    return derived.canonical_base(u.base);
}

QuotientModel build_quotient(const FiberedSpaceModel& m, std::vector<Rational> keep) {
    QuotientModel q;
    q.parent = m;
    for (Rational& a : keep) {
        a = m.canonical_base(a);
        if (a < kZero || a > kOne) throw DomainError("quotient: keep point outside the base");
    }
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    q.keep = std::move(keep);

    q.derived.mode = m.mode;
    q.derived.default_fiber = FiberKind::singleton();
    for (const Rational& a : q.keep) {
        FiberKind k = m.fiber_at(a);
        if (!k.is_singleton()) q.derived.explicit_fibers.emplace(a, k);
    }
    return q;
}

bool is_metrizable(const FiberedSpaceModel& m) {
    if (!m.default_fiber.is_singleton()) return false;
    return true;  // explicit part is finite by representation
}

namespace {

// coordinate charge of p against the surviving fiber at c
Rational metric_coordinate(const FiberedSpaceModel& m, const XPoint& p, const Rational& c) {
    Rational b = m.canonical_base(p.base);
    if (b == c) return canonical_coordinate(m, p);
    if (m.on_circle()) return kZero;  // outer copies are isolated; passing costs nothing
    return b < c ? kZero : kOne;
}

}  // namespace

Rational quotient_metric(const FiberedSpaceModel& m, const XPoint& p, const XPoint& q) {
    if (!is_metrizable(m)) throw DomainError("metric: model is not metrizable");
    check_point(m, p);
    check_point(m, q);
    Rational bp = m.canonical_base(p.base), bq = m.canonical_base(q.base);
    Rational base_d = (bp - bq).abs();
    if (m.on_circle()) base_d = min(base_d, kOne - base_d);
    Rational d = base_d;
    for (const auto& [c, k] : m.explicit_fibers) {
        if (k.is_singleton()) continue;
        d += (metric_coordinate(m, p, c) - metric_coordinate(m, q, c)).abs();
    }
    return d;
}

TransferResult transfer_TA(const RepresentableFunction& h, std::vector<Rational> keep) {
    require_valid(h);
    OscillationProfile prof = oscillate(h);
    QuotientModel q = build_quotient(h.space, std::move(keep));
    if (prof.is_infinite())
        throw MembershipError("transfer: oscillation support is infinite");
    for (const auto& [y, v] : prof.support)
        if (!std::binary_search(q.keep.begin(), q.keep.end(), y))
            throw MembershipError("transfer: oscillation support escapes the keep set at " +
                                  y.str());

    RepresentableFunction g;
    g.space = q.derived;
    g.base = h.base;
    g.product_slope = h.product_slope;
    for (const auto& [a, fd] : h.fibers)
        if (std::binary_search(q.keep.begin(), q.keep.end(), a)) g.fibers.emplace(a, fd);

    require_valid(g);
    if (sup_norm(g) != sup_norm(h))
        throw Error("transfer: sup norms of h and T_A h differ");
    for (const Rational& y : q.keep) {
        if (fiber_range(g, y) != fiber_range(h, y) ||
            fiber_value_set(g, y) != fiber_value_set(h, y))
            throw Error("transfer: fiber images differ over " + y.str());
    }
    return {std::move(q), std::move(g)};
}

}  // namespace fiberosc
