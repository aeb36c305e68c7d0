#include "fiberosc/plfunction.hpp"

#include <algorithm>

namespace fiberosc {

namespace {
const Rational kZero(0);
const Rational kOne(1);
}  // namespace

PLFunction::PLFunction(std::vector<Breakpoint> breakpoints) : pts_(std::move(breakpoints)) {
    if (pts_.empty()) throw DomainError("pl: empty breakpoint list");
    for (std::size_t i = 0; i + 1 < pts_.size(); ++i)
        if (!(pts_[i].x < pts_[i + 1].x))
            throw DomainError("pl: breakpoints not strictly increasing");
    if (pts_.front().x != kZero || pts_.back().x != kOne)
        throw DomainError("pl: domain endpoints 0 and 1 must be breakpoints");
    if (pts_.front().left != pts_.front().value)
        throw DomainError("pl: left limit at 0 must equal the value");
    if (pts_.back().right != pts_.back().value)
        throw DomainError("pl: right limit at 1 must equal the value");
}

PLFunction PLFunction::constant(const Rational& v) {
    return PLFunction({{kZero, v, v, v}, {kOne, v, v, v}});
}

PLFunction PLFunction::identity() {
    return PLFunction({{kZero, kZero, kZero, kZero}, {kOne, kOne, kOne, kOne}});
}

PLFunction PLFunction::interpolate(const std::vector<std::pair<Rational, Rational>>& nodes) {
    std::vector<Breakpoint> pts;
    pts.reserve(nodes.size());
    for (const auto& [x, v] : nodes) pts.push_back({x, v, v, v});
    return PLFunction(std::move(pts));
}

std::size_t PLFunction::floor_index(const Rational& x) const {
    // pts_ is sorted; find last breakpoint with .x <= x
    std::size_t lo = 0, hi = pts_.size() - 1;
    while (lo < hi) {
        std::size_t mid = (lo + hi + 1) / 2;
        if (pts_[mid].x <= x) lo = mid; else hi = mid - 1;
    }
    return lo;
}

Rational PLFunction::interp_between(std::size_t seg, const Rational& x) const {
    const Breakpoint& a = pts_[seg];
    const Breakpoint& b = pts_[seg + 1];
    // affine through (a.x, a.right) and (b.x, b.left)
    return a.right + (b.left - a.right) * (x - a.x) / (b.x - a.x);
}

Rational PLFunction::eval(const Rational& x, Side side) const {
    if (x < kZero || x > kOne) throw DomainError("pl: point outside [0,1]");
    if (side == Side::Left && x == kZero) throw DomainError("pl: no left limit at 0");
    if (side == Side::Right && x == kOne) throw DomainError("pl: no right limit at 1");
    std::size_t i = floor_index(x);
    if (pts_[i].x == x) {
        switch (side) {
            case Side::Left: return pts_[i].left;
            case Side::At: return pts_[i].value;
            case Side::Right: return pts_[i].right;
        }
    }
    return interp_between(i, x);  // interior of a segment: all sides agree
}

RangeResult PLFunction::range(const Rational& a, const Rational& b, RangeMode mode) const {
    if (a > b) throw DomainError("pl: empty interval");
    if (a < kZero || b > kOne) throw DomainError("pl: interval outside [0,1]");

    std::vector<Rational> cand;
    cand.push_back(eval(a, Side::At));
    cand.push_back(eval(b, Side::At));
    if (a < b) {
        // inward limits at the endpoints are suprema/infima of attained values
        cand.push_back(eval(a, Side::Right));
        cand.push_back(eval(b, Side::Left));
    }
    if (mode == RangeMode::IncludeLimits) {
        if (a > kZero) cand.push_back(eval(a, Side::Left));
        if (b < kOne) cand.push_back(eval(b, Side::Right));
    }
    for (const Breakpoint& p : pts_) {
        if (p.x <= a || p.x >= b) continue;
        cand.push_back(p.left);
        cand.push_back(p.value);
        cand.push_back(p.right);
    }
    RangeResult r{cand.front(), cand.front()};
    for (const Rational& v : cand) {
        if (v < r.inf) r.inf = v;
        if (v > r.sup) r.sup = v;
    }
    return r;
}

Rational PLFunction::sup_abs() const {
    RangeResult r = range(kZero, kOne, RangeMode::IncludeLimits);
    return max(r.inf.abs(), r.sup.abs());
}

bool PLFunction::has_jump_at(const Rational& x) const {
    std::size_t i = floor_index(x);
    if (pts_[i].x != x) return false;
    return pts_[i].left != pts_[i].value || pts_[i].value != pts_[i].right;
}

bool PLFunction::continuous_everywhere() const {
    for (const Breakpoint& p : pts_)
        if (p.left != p.value || p.value != p.right) return false;
    return true;
}

PLFunction PLFunction::combine(std::span<const Rational> coeffs,
                               std::span<const PLFunction> fns) {
    if (coeffs.size() != fns.size() || fns.empty())
        throw DomainError("pl: combine needs matching nonempty coefficient/function lists");
    std::vector<Rational> xs;
    for (const PLFunction& f : fns)
        for (const Breakpoint& p : f.pts_) xs.push_back(p.x);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    std::vector<Breakpoint> pts;
    pts.reserve(xs.size());
    for (const Rational& x : xs) {
        Breakpoint bp{x, Rational(0), Rational(0), Rational(0)};
        for (std::size_t i = 0; i < fns.size(); ++i) {
            bp.value += coeffs[i] * fns[i].eval(x, Side::At);
            bp.left += coeffs[i] * (x == kZero ? fns[i].eval(x, Side::At)
                                               : fns[i].eval(x, Side::Left));
            bp.right += coeffs[i] * (x == kOne ? fns[i].eval(x, Side::At)
                                               : fns[i].eval(x, Side::Right));
        }
        pts.push_back(std::move(bp));
    }
    return PLFunction(std::move(pts));
}

PLFunction PLFunction::scaled(const Rational& c) const {
    std::vector<Rational> cs{c};
    std::vector<PLFunction> fs{*this};
    return combine(cs, fs);
}

PLFunction PLFunction::plus(const PLFunction& o) const {
    std::vector<Rational> cs{Rational(1), Rational(1)};
    std::vector<PLFunction> fs{*this, o};
    return combine(cs, fs);
}

PLFunction PLFunction::replace_on(const Rational& l, const Rational& r, const PLFunction& g,
                                  bool glue_left, bool glue_right) const {
    if (!(kZero <= l && l < r && r <= kOne))
        throw DomainError("pl: replace_on needs 0 <= l < r <= 1");
    if (!glue_left && l != kZero) throw DomainError("pl: unglued left seam must sit at 0");
    if (!glue_right && r != kOne) throw DomainError("pl: unglued right seam must sit at 1");
    if (glue_left && (has_jump_at(l) || g.eval(l, Side::At) != eval(l, Side::At)))
        throw DomainError("pl: replacement does not match the left seam");
    if (glue_right && (has_jump_at(r) || g.eval(r, Side::At) != eval(r, Side::At)))
        throw DomainError("pl: replacement does not match the right seam");

    Rational fl = glue_left ? eval(l, Side::At) : g.eval(l, Side::At);
    Rational fr = glue_right ? eval(r, Side::At) : g.eval(r, Side::At);
    std::vector<Breakpoint> pts;
    for (const Breakpoint& p : pts_)
        if (p.x < l) pts.push_back(p);
    pts.push_back({l, fl, fl, g.eval(l, Side::Right)});
    for (const Breakpoint& p : g.breakpoints())
        if (p.x > l && p.x < r) pts.push_back(p);
    pts.push_back({r, g.eval(r, Side::Left), fr, fr});
    for (const Breakpoint& p : pts_)
        if (p.x > r) pts.push_back(p);
    return PLFunction(std::move(pts));
}

PLFunction PLFunction::canonicalized() const {
    std::vector<Breakpoint> pts;
    pts.reserve(pts_.size());
    for (std::size_t i = 0; i < pts_.size(); ++i) {
        const Breakpoint& p = pts_[i];
        if (i == 0 || i + 1 == pts_.size() || p.left != p.value || p.value != p.right) {
            pts.push_back(p);
            continue;
        }
        const Breakpoint& a = pts_[i - 1];
        const Breakpoint& b = pts_[i + 1];
        Rational interp = a.right + (b.left - a.right) * (p.x - a.x) / (b.x - a.x);
        if (interp != p.value) pts.push_back(p);
    }
    return PLFunction(std::move(pts));
}

bool PLFunction::same_function(const PLFunction& o) const {
    return canonicalized().breakpoints() == o.canonicalized().breakpoints();
}

PLFunction pl_bridge(const Rational& a, const Rational& b,
                     const Rational& va, const Rational& vb) {
    if (!(a < b)) throw DomainError("pl: bridge needs a < b");
    if (a < kZero || b > kOne) throw DomainError("pl: bridge endpoints outside [0,1]");
    std::vector<Breakpoint> pts;
    if (a > kZero) pts.push_back({kZero, va, va, va});
    pts.push_back({a, va, va, va});
    pts.push_back({b, vb, vb, vb});
    if (b < kOne) pts.push_back({kOne, vb, vb, vb});
    return PLFunction(std::move(pts));
}

}  // namespace fiberosc
