#include "fiberosc/oscillation.hpp"

#include <algorithm>

#include "fiberosc/errors.hpp"
#include "fiberosc/generators.hpp"

namespace fiberosc {

namespace {
const Rational kZero(0);
const Rational kOne(1);
}  // namespace

Rational OscillationProfile::sup_value() const {
    if (infinite) return infinite->epsilon;
    Rational best(0);
    for (const auto& [y, v] : support) best = max(best, v);
    return best;
}

Rational OscillationProfile::value_at(const Rational& y) const {
    if (infinite) return infinite->interval.contains(y) ? infinite->epsilon : Rational(0);
    auto it = support.find(y);
    return it == support.end() ? Rational(0) : it->second;
}

std::vector<Rational> OscillationProfile::support_points() const {
    std::vector<Rational> out;
    out.reserve(support.size());
    for (const auto& [y, v] : support) out.push_back(y);
    return out;
}

OscillationProfile oscillate(const RepresentableFunction& h) {
    require_valid(h);
    OscillationProfile p;
    if (h.space.mode == TopologyMode::Product) {
        if (!h.product_slope.is_zero())
            p.infinite = InfiniteWitness{BaseInterval::whole(), h.product_slope.abs()};
        return p;
    }
    for (const auto& [a, fd] : h.fibers) {
        Rational d = fiber_range(h, a).diameter();
        if (!d.is_zero()) p.support.emplace(a, d);
    }
    return p;
}

LevelSet level_set(const RepresentableFunction& h, const Rational& eps) {
    if (!eps.is_positive()) throw DomainError("level set: epsilon must be positive");
    OscillationProfile p = oscillate(h);
    LevelSet out;
    if (p.is_infinite()) {
        if (p.infinite->epsilon >= eps)
            out.infinite = InfiniteWitness{p.infinite->interval, eps};
        return out;
    }
    for (const auto& [y, v] : p.support)
        if (v >= eps) out.points.push_back(y);
    return out;
}

C0Certificate in_c0(const RepresentableFunction& h) {
    OscillationProfile p = oscillate(h);
    C0Certificate cert;
    if (p.is_infinite()) {
        cert.member = false;
        cert.witness = p.infinite;
        return cert;
    }
    cert.member = true;
    // thresholds where K_m = {osc >= 1/m} changes; the last exhausts supp
    std::vector<long> ms{1};
    for (const auto& [y, v] : p.support) ms.push_back(v.reciprocal().ceil_long());
    std::sort(ms.begin(), ms.end());
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
    for (long m : ms) {
        std::vector<Rational> km;
        Rational thr(1, m);
        for (const auto& [y, v] : p.support)
            if (v >= thr) km.push_back(y);
        cert.chain.emplace_back(m, std::move(km));
    }
    return cert;
}

FullClosednessResult full_closedness(const FiberedSpaceModel& m, std::uint64_t seed,
                                     int samples) {
    FullClosednessResult res;
    if (m.mode == TopologyMode::Product) {
        res.fully_closed = false;
        NotFullyClosedWitness w;
        w.set_a = {BaseInterval::whole(), kZero};
        w.set_b = {BaseInterval::whole(), kOne};
        w.separating.space = m;
        w.separating.base = PLFunction::constant(kZero);
        w.separating.product_slope = kOne;
        w.epsilon = kOne;
        w.common_image = BaseInterval::whole();
        res.witness = std::move(w);
        return res;
    }
    res.fully_closed = true;
    Rng rng(seed);
    for (int i = 0; i < samples; ++i) {
        RepresentableFunction h = random_function(rng, m);
        OscillationProfile p = oscillate(h);
        if (p.is_infinite())
            throw Error("full closedness: structural finiteness violated by a sample");
        for (const Rational& eps : {Rational(1, 2), Rational(1, 8), Rational(1, 64)}) {
            LevelSet ls = level_set(h, eps);
            if (ls.is_infinite())
                throw Error("full closedness: infinite level set on a sample");
            res.max_level_set_size = std::max(res.max_level_set_size, ls.points.size());
            if (ls.points.size() > h.fibers.size())
                throw Error("full closedness: level set exceeds the active set");
        }
        ++res.sampled;
    }
    return res;
}

}  // namespace fiberosc
