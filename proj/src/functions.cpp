#include "fiberosc/functions.hpp"

#include <algorithm>
#include <set>

#include "fiberosc/errors.hpp"

namespace fiberosc {

namespace {
const Rational kZero(0);
const Rational kOne(1);
}  // namespace

std::vector<Violation> validate(const RepresentableFunction& h) {
    std::vector<Violation> out;
    const FiberedSpaceModel& m = h.space;
    const bool order = m.mode == TopologyMode::Order;
    const bool product = m.mode == TopologyMode::Product;
    const bool circle = m.on_circle();

    if (!product && !h.product_slope.is_zero())
        out.push_back({kZero, "fiber slope is meaningful only in product mode"});

    // jumps are allowed only at active points; in product/circle not at all
    for (const Breakpoint& bp : h.base.breakpoints()) {
        bool jump = bp.left != bp.value || bp.value != bp.right;
        if (!jump) continue;
        if (product || circle) {
            out.push_back({bp.x, "base function must be continuous everywhere"});
        } else if (!h.fibers.count(bp.x)) {
            out.push_back({bp.x, "base jump off the active set"});
        }
    }
    if (circle && h.base.eval(kZero) != h.base.eval(kOne))
        out.push_back({kZero, "base values at the seam 0 ~ 1 must agree"});

    if (product && !h.fibers.empty())
        out.push_back({h.fibers.begin()->first, "product-mode class carries no fiber table"});

    if (product || (!order && !circle)) return out;

    for (const auto& [a, fd] : h.fibers) {
        FiberKind k = m.fiber_at(a);
        if (k.is_singleton()) {
            out.push_back({a, "active point sits on a singleton fiber"});
            continue;
        }
        if (circle) {
            if (a == kZero || a == kOne) {
                out.push_back({a, "seam point cannot carry a fiber correction"});
                continue;
            }
            if (!k.is_chain() || static_cast<std::size_t>(k.chain_size) != fd.values.size() ||
                fd.pl) {
                out.push_back({a, "double-circle fiber takes a value tuple of the chain size"});
                continue;
            }
            if (fd.values[0] != h.base.eval(a))
                out.push_back({a, "inner-circle value must equal the base value"});
            continue;
        }

        // Order mode
        Rational left = a > kZero ? h.base.eval(a, Side::Left) : h.base.eval(a);
        Rational right = a < kOne ? h.base.eval(a, Side::Right) : h.base.eval(a);
        Rational value = h.base.eval(a);
        if (a > kZero && a < kOne && value != left)
            out.push_back({a, "base value at an interior active point must equal its left limit"});
        if (a == kZero && value != right)
            out.push_back({a, "base value at active 0 must equal its right limit"});

        if (k.is_interval()) {
            if (!fd.pl || !fd.values.empty()) {
                out.push_back({a, "interval fiber takes a fiber function"});
                continue;
            }
            if (!fd.pl->continuous_everywhere()) {
                out.push_back({a, "fiber function must be continuous"});
                continue;
            }
            if (a > kZero && fd.pl->eval(kZero) != left)
                out.push_back({a, "fiber minimum must equal the base left limit"});
            if (a < kOne && fd.pl->eval(kOne) != right)
                out.push_back({a, "fiber maximum must equal the base right limit"});
        } else {  // finite chain
            if (fd.pl || fd.values.size() != static_cast<std::size_t>(k.chain_size)) {
                out.push_back({a, "chain fiber takes a value tuple of the chain size"});
                continue;
            }
            if (a > kZero && fd.values.front() != left)
                out.push_back({a, "chain minimum must equal the base left limit"});
            if (a < kOne && fd.values.back() != right)
                out.push_back({a, "chain maximum must equal the base right limit"});
        }
    }
    return out;
}

bool is_valid(const RepresentableFunction& h) { return validate(h).empty(); }

void require_valid(const RepresentableFunction& h) {
    auto v = validate(h);
    if (!v.empty())
        throw DomainError("function violates continuity at " + v.front().at.str() + ": " +
                          v.front().constraint);
}

Rational eval(const RepresentableFunction& h, const XPoint& p) {
    check_point(h.space, p);
    Rational b = h.space.canonical_base(p.base);
    if (h.space.mode == TopologyMode::Product) {
        Rational v = h.base.eval(b);
        return p.interval_coord ? v + h.product_slope * *p.interval_coord : v;
    }
    auto it = h.fibers.find(b);
    if (it == h.fibers.end()) return h.base.eval(b);
    const FiberData& fd = it->second;
    if (fd.pl) return fd.pl->eval(*p.interval_coord);
    return fd.values.at(static_cast<std::size_t>(*p.chain_index));
}

RangeResult fiber_range(const RepresentableFunction& h, const Rational& y) {
    Rational b = h.space.canonical_base(y);
    if (h.space.mode == TopologyMode::Product) {
        Rational v = h.base.eval(b);
        Rational lo = v + min(kZero, h.product_slope);
        Rational hi = v + max(kZero, h.product_slope);
        return {lo, hi};
    }
    auto it = h.fibers.find(b);
    if (it == h.fibers.end()) {
        Rational v = h.base.eval(b);
        return {v, v};
    }
    const FiberData& fd = it->second;
    if (fd.pl) return fd.pl->range(kZero, kOne, RangeMode::ValuesOnly);
    RangeResult r{fd.values.front(), fd.values.front()};
    for (const Rational& v : fd.values) {
        if (v < r.inf) r.inf = v;
        if (v > r.sup) r.sup = v;
    }
    return r;
}

std::vector<Rational> fiber_value_set(const RepresentableFunction& h, const Rational& y) {
    Rational b = h.space.canonical_base(y);
    auto it = h.fibers.find(b);
    if (it != h.fibers.end() && !it->second.values.empty()) {
        std::vector<Rational> vals = it->second.values;
        std::sort(vals.begin(), vals.end());
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
        return vals;
    }
    RangeResult r = fiber_range(h, b);
    if (r.inf == r.sup) return {r.inf};
    return {r.inf, r.sup};  // interval fibers attain everything in between
}

Rational sup_norm(const RepresentableFunction& h) {
    RangeResult base = h.base.range(kZero, kOne, RangeMode::IncludeLimits);
    Rational best = max(base.inf.abs(), base.sup.abs());
    if (h.space.mode == TopologyMode::Product) {
        Rational lo = base.inf + min(kZero, h.product_slope);
        Rational hi = base.sup + max(kZero, h.product_slope);
        return max(best, max(lo.abs(), hi.abs()));
    }
    for (const auto& [a, fd] : h.fibers) {
        RangeResult r = fiber_range(h, a);
        best = max(best, max(r.inf.abs(), r.sup.abs()));
    }
    return best;
}

namespace {

// fiber data of h at a, materialized even when a is not active
FiberData materialized_fiber(const RepresentableFunction& h, const Rational& a,
                             const FiberKind& k) {
    auto it = h.fibers.find(a);
    if (it != h.fibers.end()) return it->second;
    Rational v = h.base.eval(a);
    if (k.is_interval()) return FiberData::interval(PLFunction::constant(v));
    return FiberData::chain(std::vector<Rational>(static_cast<std::size_t>(k.chain_size), v));
}

}  // namespace

RepresentableFunction linear_combine(std::span<const Rational> coeffs,
                                     std::span<const RepresentableFunction> fns) {
    if (coeffs.size() != fns.size() || fns.empty())
        throw DomainError("combine needs matching nonempty coefficient/function lists");
    const FiberedSpaceModel& m = fns[0].space;
    for (const RepresentableFunction& f : fns)
        if (!(f.space == m)) throw DomainError("combine requires one common space");

    RepresentableFunction out;
    out.space = m;
    std::vector<PLFunction> bases;
    for (const RepresentableFunction& f : fns) bases.push_back(f.base);
    out.base = PLFunction::combine(coeffs, bases);

    if (m.mode == TopologyMode::Product) {
        for (std::size_t i = 0; i < fns.size(); ++i)
            out.product_slope += coeffs[i] * fns[i].product_slope;
        return out;
    }

    std::set<Rational> active;
    for (const RepresentableFunction& f : fns)
        for (const auto& [a, fd] : f.fibers) active.insert(a);
    for (const Rational& a : active) {
        FiberKind k = m.fiber_at(a);
        if (k.is_interval()) {
            std::vector<PLFunction> parts;
            for (const RepresentableFunction& f : fns)
                parts.push_back(*materialized_fiber(f, a, k).pl);
            out.fibers.emplace(a, FiberData::interval(PLFunction::combine(coeffs, parts)));
        } else {
            std::vector<Rational> vals(static_cast<std::size_t>(k.chain_size), Rational(0));
            for (std::size_t i = 0; i < fns.size(); ++i) {
                FiberData fd = materialized_fiber(fns[i], a, k);
                for (std::size_t j = 0; j < vals.size(); ++j)
                    vals[j] += coeffs[i] * fd.values[j];
            }
            out.fibers.emplace(a, FiberData::chain(std::move(vals)));
        }
    }
    return out;
}

RepresentableFunction subtract(const RepresentableFunction& a, const RepresentableFunction& b) {
    std::vector<Rational> cs{Rational(1), Rational(-1)};
    std::vector<RepresentableFunction> fs{a, b};
    return linear_combine(cs, fs);
}

bool pointwise_equal(const RepresentableFunction& a, const RepresentableFunction& b) {
    return sup_norm(subtract(a, b)).is_zero();
}

}  // namespace fiberosc
