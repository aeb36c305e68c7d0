#include "fiberosc/generators.hpp"

#include <algorithm>
#include <set>

#include "fiberosc/errors.hpp"

namespace fiberosc {

namespace {
const Rational kZero(0);
const Rational kOne(1);
}  // namespace

std::uint64_t Rng::next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

long Rng::pick(long lo, long hi) {
    if (lo > hi) throw DomainError("rng: empty range");
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next() % span);
}

bool Rng::chance(long num, long den) { return pick(1, den) <= num; }

Rational Rng::unit_rational(long max_den) {
    long den = pick(1, max_den);
    long num = pick(0, den);
    return Rational(num, den);
}

Rational Rng::value_rational(long mag, long max_den) {
    return Rational(pick(-mag, mag), pick(1, max_den));
}

namespace {

std::vector<Rational> distinct_unit_rationals(Rng& rng, int count, long max_den,
                                              bool open_interval) {
    std::set<Rational> got;
    int guard = 0;
    while (static_cast<int>(got.size()) < count && guard++ < 64 * count + 64) {
        Rational r = rng.unit_rational(max_den);
        if (open_interval && (r == kZero || r == kOne)) continue;
        got.insert(r);
    }
    return {got.begin(), got.end()};
}

// continuous PL fiber function through fixed endpoint values
PLFunction random_fiber_fn(Rng& rng, const FunctionGenOptions& opt, const Rational& at_min,
                           const Rational& at_max) {
    std::vector<std::pair<Rational, Rational>> nodes;
    nodes.emplace_back(kZero, at_min);
    for (const Rational& x :
         distinct_unit_rationals(rng, static_cast<int>(rng.pick(0, opt.max_fiber_nodes)),
                                 opt.max_den, true))
        nodes.emplace_back(x, rng.value_rational(opt.value_mag, opt.max_den));
    nodes.emplace_back(kOne, at_max);
    return PLFunction::interpolate(nodes);
}

}  // namespace

RepresentableFunction random_function(Rng& rng, const FiberedSpaceModel& m,
                                      const FunctionGenOptions& opt) {
    const bool order = m.mode == TopologyMode::Order;
    const bool circle = m.on_circle();
    const bool product = m.mode == TopologyMode::Product;

    RepresentableFunction h;
    h.space = m;

    std::vector<Rational> actives;
    if (!product) {
        for (const Rational& a :
             distinct_unit_rationals(rng, static_cast<int>(rng.pick(0, opt.max_support)),
                                     opt.max_den, circle)) {
            if (m.fiber_at(a).is_singleton()) continue;  // nothing to correct there
            actives.push_back(a);
        }
    }

    std::set<Rational> xs{kZero, kOne};
    for (const Rational& a : actives) xs.insert(a);
    for (const Rational& x : distinct_unit_rationals(rng, static_cast<int>(rng.pick(0, 3)),
                                                     opt.max_den, false))
        xs.insert(x);

    std::vector<Breakpoint> pts;
    for (const Rational& x : xs) {
        Rational v = rng.value_rational(opt.value_mag, opt.max_den);
        if (order && std::binary_search(actives.begin(), actives.end(), x) && x > kZero &&
            x < kOne) {
            Rational r = rng.value_rational(opt.value_mag, opt.max_den);
            pts.push_back({x, v, v, r});  // interior jump, canonical value = left
        } else {
            pts.push_back({x, v, v, v});
        }
    }
    if (circle) {
        // seam values agree on the circle
        pts.back().left = pts.front().value;
        pts.back().value = pts.front().value;
        pts.back().right = pts.front().value;
    }
    h.base = PLFunction(std::move(pts));

    if (product) {
        if (!rng.chance(1, 4)) h.product_slope = rng.value_rational(8, 8);
        return h;
    }

    for (const Rational& a : actives) {
        FiberKind k = m.fiber_at(a);
        Rational left = a > kZero ? h.base.eval(a, Side::Left) : h.base.eval(a);
        Rational right = a < kOne ? h.base.eval(a, Side::Right) : h.base.eval(a);
        if (circle) {
            std::vector<Rational> vals{h.base.eval(a)};
            for (int i = 1; i < k.chain_size; ++i)
                vals.push_back(rng.value_rational(opt.value_mag, opt.max_den));
            h.fibers.emplace(a, FiberData::chain(std::move(vals)));
            continue;
        }
        if (k.is_interval()) {
            Rational lo = a > kZero ? left : rng.value_rational(opt.value_mag, opt.max_den);
            Rational hi = a < kOne ? right : rng.value_rational(opt.value_mag, opt.max_den);
            h.fibers.emplace(a, FiberData::interval(random_fiber_fn(rng, opt, lo, hi)));
        } else {
            std::vector<Rational> vals(static_cast<std::size_t>(k.chain_size));
            for (auto& v : vals) v = rng.value_rational(opt.value_mag, opt.max_den);
            if (a > kZero) vals.front() = left;
            if (a < kOne) vals.back() = right;
            h.fibers.emplace(a, FiberData::chain(std::move(vals)));
        }
    }
    return h;
}

XPoint random_point(Rng& rng, const FiberedSpaceModel& m, long max_den) {
    Rational b = rng.unit_rational(max_den);
    if (m.on_circle() && b == kOne) b = kZero;
    FiberKind k = m.fiber_at(b);
    switch (k.tag) {
        case FiberKind::Tag::Singleton: return XPoint::at_singleton(b);
        case FiberKind::Tag::Interval: return XPoint::on_interval(b, rng.unit_rational(max_den));
        case FiberKind::Tag::FiniteChain:
            return XPoint::on_chain(b, static_cast<int>(rng.pick(0, k.chain_size - 1)));
    }
    throw DomainError("random point: unknown fiber kind");
}

std::vector<Rational> random_subset(Rng& rng, const std::vector<Rational>& pts) {
    std::vector<Rational> out;
    for (const Rational& p : pts)
        if (rng.chance(1, 2)) out.push_back(p);
    return out;
}

}  // namespace fiberosc
