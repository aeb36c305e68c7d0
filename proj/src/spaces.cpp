#include "fiberosc/spaces.hpp"

#include <algorithm>

#include "fiberosc/errors.hpp"

namespace fiberosc {

namespace {
const Rational kZero(0);
const Rational kOne(1);
}  // namespace

FiberKind FiberKind::chain(int k) {
    if (k < 2) throw DomainError("fiber: chain size must be >= 2");
    return {Tag::FiniteChain, k};
}

FiberedSpaceModel FiberedSpaceModel::lex_square() {
    return {TopologyMode::Order, FiberKind::interval(), {}};
}
FiberedSpaceModel FiberedSpaceModel::double_arrow() {
    return {TopologyMode::Order, FiberKind::chain(2), {}};
}
FiberedSpaceModel FiberedSpaceModel::double_circle() {
    return {TopologyMode::DoubleCircle, FiberKind::chain(2), {}};
}
FiberedSpaceModel FiberedSpaceModel::product_square() {
    return {TopologyMode::Product, FiberKind::interval(), {}};
}

FiberKind FiberedSpaceModel::fiber_at(const Rational& base) const {
    auto it = explicit_fibers.find(canonical_base(base));
    return it == explicit_fibers.end() ? default_fiber : it->second;
}

Rational FiberedSpaceModel::canonical_base(const Rational& x) const {
    if (on_circle() && x == kOne) return kZero;
    return x;
}

bool FiberedSpaceModel::operator==(const FiberedSpaceModel& o) const {
    return mode == o.mode && default_fiber == o.default_fiber &&
           explicit_fibers == o.explicit_fibers;
}

void check_point(const FiberedSpaceModel& m, const XPoint& p) {
    if (p.base < kZero || p.base > kOne) throw DomainError("point: base outside [0,1]");
    FiberKind k = m.fiber_at(p.base);
    switch (k.tag) {
        case FiberKind::Tag::Singleton:
            if (p.interval_coord || p.chain_index)
                throw DomainError("point: singleton fiber takes no coordinate");
            break;
        case FiberKind::Tag::Interval:
            if (!p.interval_coord || p.chain_index)
                throw DomainError("point: interval fiber needs an interval coordinate");
            if (*p.interval_coord < kZero || *p.interval_coord > kOne)
                throw DomainError("point: fiber coordinate outside [0,1]");
            break;
        case FiberKind::Tag::FiniteChain:
            if (!p.chain_index || p.interval_coord)
                throw DomainError("point: chain fiber needs an index");
            if (*p.chain_index < 0 || *p.chain_index >= k.chain_size)
                throw DomainError("point: chain index out of range");
            break;
    }
}

Rational canonical_coordinate(const FiberedSpaceModel& m, const XPoint& p) {
    FiberKind k = m.fiber_at(p.base);
    switch (k.tag) {
        case FiberKind::Tag::Singleton: return kZero;
        case FiberKind::Tag::Interval: return *p.interval_coord;
        case FiberKind::Tag::FiniteChain:
            return Rational(*p.chain_index, k.chain_size - 1);
    }
    throw DomainError("point: unknown fiber kind");
}

// ---------------------------------------------------------------------------
// BaseInterval / BaseSubset

bool BaseInterval::contains(const Rational& x) const {
    if (x < lo || x > hi) return false;
    if (x == lo && !lo_closed) return false;
    if (x == hi && !hi_closed) return false;
    return true;
}

bool BaseInterval::open_in_segment() const {
    return (!lo_closed || lo == kZero) && (!hi_closed || hi == kOne);
}

bool intervals_intersect(const BaseInterval& a, const BaseInterval& b) {
    if (a.empty() || b.empty()) return false;
    const BaseInterval& l = a.lo <= b.lo ? a : b;
    const BaseInterval& r = a.lo <= b.lo ? b : a;
    if (r.lo < l.hi) return true;
    if (r.lo == l.hi) return r.lo_closed && l.hi_closed;
    return false;
}

namespace {

// true when u ends at or after v's start so their union is one interval
bool mergeable(const BaseInterval& u, const BaseInterval& v) {
    if (v.lo < u.hi) return true;
    if (v.lo == u.hi) return v.lo_closed || u.hi_closed;
    return false;
}

// (hi,flag) ordering: does v end strictly after u?
bool ends_after(const BaseInterval& u, const BaseInterval& v) {
    return v.hi > u.hi || (v.hi == u.hi && v.hi_closed && !u.hi_closed);
}

std::vector<BaseInterval> merge_intervals(std::vector<BaseInterval> ivs) {
    std::erase_if(ivs, [](const BaseInterval& i) { return i.empty(); });
    std::sort(ivs.begin(), ivs.end(), [](const BaseInterval& a, const BaseInterval& b) {
        if (a.lo != b.lo) return a.lo < b.lo;
        return a.lo_closed && !b.lo_closed;
    });
    std::vector<BaseInterval> out;
    for (const BaseInterval& iv : ivs) {
        if (!out.empty() && mergeable(out.back(), iv)) {
            if (ends_after(out.back(), iv)) {
                out.back().hi = iv.hi;
                out.back().hi_closed = iv.hi_closed;
            }
        } else {
            out.push_back(iv);
        }
    }
    return out;
}

bool circle_interval_contains(const FiberedSpaceModel& m, const BaseInterval& iv,
                              const Rational& x) {
    if (iv.contains(x)) return true;
    if (m.on_circle() && x == kZero && iv.contains(kOne)) return true;
    return false;
}

bool circle_intervals_intersect(const FiberedSpaceModel& m, const BaseInterval& a,
                                const BaseInterval& b) {
    if (intervals_intersect(a, b)) return true;
    if (m.on_circle()) {
        if (a.contains(kZero) && b.contains(kOne)) return true;
        if (a.contains(kOne) && b.contains(kZero)) return true;
    }
    return false;
}

}  // namespace

void BaseSubset::add(BaseInterval iv) {
    if (iv.is_point()) {
        pts_.push_back(iv.lo);
    } else if (!iv.empty()) {
        ivs_.push_back(std::move(iv));
    }
    normalize();
}

void BaseSubset::add_point(const Rational& x) {
    pts_.push_back(x);
    normalize();
}

void BaseSubset::normalize() {
    for (bool changed = true; changed;) {
        changed = false;
        auto merged = merge_intervals(ivs_);
        if (merged != ivs_) { ivs_ = std::move(merged); changed = true; }

        std::sort(pts_.begin(), pts_.end());
        pts_.erase(std::unique(pts_.begin(), pts_.end()), pts_.end());
        std::vector<Rational> keep;
        for (const Rational& x : pts_) {
            bool absorbed = false;
            for (BaseInterval& iv : ivs_) {
                if (iv.contains(x)) { absorbed = true; break; }
                if (x == iv.lo && !iv.lo_closed) { iv.lo_closed = true; absorbed = true; break; }
                if (x == iv.hi && !iv.hi_closed) { iv.hi_closed = true; absorbed = true; break; }
            }
            if (absorbed) changed = true; else keep.push_back(x);
        }
        pts_ = std::move(keep);
    }
}

bool BaseSubset::contains(const Rational& x) const {
    for (const BaseInterval& iv : ivs_)
        if (iv.contains(x)) return true;
    return std::find(pts_.begin(), pts_.end(), x) != pts_.end();
}

bool BaseSubset::subset_of(const BaseSubset& o) const {
    for (const Rational& x : pts_)
        if (!o.contains(x)) return false;
    for (const BaseInterval& iv : ivs_) {
        // each interval of a normalized subset must sit inside one interval of o
        bool ok = false;
        for (const BaseInterval& jv : o.intervals()) {
            bool lo_ok = jv.lo < iv.lo || (jv.lo == iv.lo && (jv.lo_closed || !iv.lo_closed));
            bool hi_ok = jv.hi > iv.hi || (jv.hi == iv.hi && (jv.hi_closed || !iv.hi_closed));
            if (lo_ok && hi_ok) { ok = true; break; }
        }
        if (!ok) return false;
    }
    return true;
}

bool BaseSubset::open_in_base(const FiberedSpaceModel& m) const {
    if (!pts_.empty()) return false;
    for (const BaseInterval& iv : ivs_) {
        if (iv.open_in_segment()) continue;
        if (!m.on_circle()) return false;
        // wrap rules: a closed end at 0 (resp. 1) is interior when the
        // approach from the other side of the seam is covered
        if (iv.lo == kZero && iv.lo_closed) {
            bool covered = false;
            for (const BaseInterval& jv : ivs_)
                if (jv.hi == kOne && jv.lo < kOne) covered = true;
            if (!covered) return false;
        } else if (iv.lo_closed) {
            return false;
        }
        if (iv.hi == kOne && iv.hi_closed) {
            bool covered = false;
            for (const BaseInterval& jv : ivs_)
                if (jv.lo == kZero && jv.hi > kZero) covered = true;
            if (!covered) return false;
        } else if (iv.hi < kOne && iv.hi_closed) {
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// FiberSpan

bool FiberSpan::contains(const Rational& y) const {
    if (y < lo || y > hi) return false;
    if (y == lo && !lo_closed) return false;
    if (y == hi && !hi_closed) return false;
    return true;
}

namespace {

bool spans_intersect(const FiberSpan& a, const FiberSpan& b) {
    BaseInterval ia{a.lo, a.hi, a.lo_closed, a.hi_closed};
    BaseInterval ib{b.lo, b.hi, b.lo_closed, b.hi_closed};
    return intervals_intersect(ia, ib);
}

std::vector<FiberSpan> merge_spans(std::vector<FiberSpan> spans) {
    std::vector<BaseInterval> ivs;
    for (const FiberSpan& s : spans)
        if (!s.empty()) ivs.push_back({s.lo, s.hi, s.lo_closed, s.hi_closed});
    std::vector<FiberSpan> out;
    for (const BaseInterval& iv : merge_intervals(std::move(ivs)))
        out.push_back({iv.lo, iv.hi, iv.lo_closed, iv.hi_closed});
    return out;
}

// fully covers the closed fiber [0,1]?
bool spans_cover_whole(const std::vector<FiberSpan>& merged) {
    return merged.size() == 1 && merged[0].is_whole();
}

// ---------------------------------------------------------------------------
// Normal form for openness / image computations

struct MergedPieces {
    bool class_covered = false;         // singleton fiber piece present
    std::vector<FiberSpan> spans;       // interval fibers
    std::set<int> indices;              // chain fibers
};

struct Normalized {
    std::vector<BaseInterval> fulls;    // merged; whole-span rects included
    std::map<Rational, MergedPieces> pieces;
    std::vector<Rect> rects;            // strictly partial spans
};

Normalized normalize_set(const FiberedSpaceModel& m, const OpenSet& u) {
    Normalized n;
    std::vector<BaseInterval> fulls = u.fulls;
    for (const Rect& r : u.rects) {
        if (r.base.empty() || r.span.empty()) continue;
        if (r.span.is_whole()) fulls.push_back(r.base);
        else n.rects.push_back(r);
    }
    std::erase_if(fulls, [](const BaseInterval& i) { return i.empty(); });
    n.fulls = merge_intervals(std::move(fulls));

    for (const FiberPiece& p : u.pieces) {
        Rational at = m.canonical_base(p.at);
        FiberKind k = m.fiber_at(at);
        MergedPieces& mp = n.pieces[at];
        switch (k.tag) {
            case FiberKind::Tag::Singleton:
                mp.class_covered = true;
                break;
            case FiberKind::Tag::Interval: {
                const auto* span = std::get_if<FiberSpan>(&p.shape);
                if (!span) throw DomainError("open set: chain piece on an interval fiber");
                if (!span->empty()) mp.spans.push_back(*span);
                break;
            }
            case FiberKind::Tag::FiniteChain: {
                const auto* idx = std::get_if<std::set<int>>(&p.shape);
                if (!idx) throw DomainError("open set: interval piece on a chain fiber");
                for (int i : *idx) {
                    if (i < 0 || i >= k.chain_size)
                        throw DomainError("open set: chain index out of range");
                    mp.indices.insert(i);
                }
                break;
            }
        }
    }
    for (auto& [at, mp] : n.pieces) mp.spans = merge_spans(std::move(mp.spans));
    return n;
}

bool fulls_contain(const FiberedSpaceModel& m, const Normalized& n, const Rational& x) {
    for (const BaseInterval& iv : n.fulls)
        if (circle_interval_contains(m, iv, x)) return true;
    return false;
}

// full fibers over some (a - delta, a) are present
bool collar_left(const FiberedSpaceModel& m, const Normalized& n, const Rational& a) {
    if (m.on_circle() && a == kZero) {
        for (const BaseInterval& iv : n.fulls)
            if (iv.hi == kOne && iv.lo < kOne) return true;
        return false;
    }
    for (const BaseInterval& iv : n.fulls)
        if (iv.lo < a && iv.hi >= a) return true;
    return false;
}

// full fibers over some (a, a + delta) are present
bool collar_right(const FiberedSpaceModel&, const Normalized& n, const Rational& a) {
    for (const BaseInterval& iv : n.fulls)
        if (iv.hi > a && iv.lo <= a) return true;
    return false;
}

std::string rat(const Rational& r) { return r.str(); }

}  // namespace

// ---------------------------------------------------------------------------

bool contains(const FiberedSpaceModel& m, const OpenSet& u, const XPoint& p) {
    check_point(m, p);
    Rational b = m.canonical_base(p.base);
    for (const BaseInterval& iv : u.fulls)
        if (circle_interval_contains(m, iv, b)) return true;
    FiberKind k = m.fiber_at(b);
    for (const FiberPiece& piece : u.pieces) {
        if (m.canonical_base(piece.at) != b) continue;
        switch (k.tag) {
            case FiberKind::Tag::Singleton:
                return true;
            case FiberKind::Tag::Interval: {
                const auto* span = std::get_if<FiberSpan>(&piece.shape);
                if (span && span->contains(*p.interval_coord)) return true;
                break;
            }
            case FiberKind::Tag::FiniteChain: {
                const auto* idx = std::get_if<std::set<int>>(&piece.shape);
                if (idx && idx->count(*p.chain_index)) return true;
                break;
            }
        }
    }
    if (!u.rects.empty()) {
        Rational c = canonical_coordinate(m, p);
        for (const Rect& r : u.rects)
            if (circle_interval_contains(m, r.base, b) && r.span.contains(c)) return true;
    }
    return false;
}

std::vector<std::string> open_violations(const FiberedSpaceModel& m, const OpenSet& u) {
    std::vector<std::string> out;
    Normalized n = normalize_set(m, u);
    const bool order = m.mode == TopologyMode::Order;
    const bool product = m.mode == TopologyMode::Product;
    const bool circle = m.on_circle();

    for (const BaseInterval& iv : n.fulls) {
        if (!circle) {
            if (!iv.open_in_segment())
                out.push_back("full pullback over [" + rat(iv.lo) + "," + rat(iv.hi) +
                              "] has a closed endpoint inside (0,1)");
            continue;
        }
        // circle rules: a closed end at the seam needs the approach from
        // the other side of the seam covered; closed ends inside never work
        if (iv.lo == kZero && iv.lo_closed) {
            bool covered = false;
            for (const BaseInterval& jv : n.fulls)
                if (jv.hi == kOne && jv.lo < kOne) covered = true;
            if (!covered)
                out.push_back("arc closed at the seam 0 without coverage from the 1 side");
        }
        if (iv.lo > kZero && iv.lo_closed)
            out.push_back("arc closed at interior point " + rat(iv.lo));
        if (iv.hi < kOne && iv.hi_closed)
            out.push_back("arc closed at interior point " + rat(iv.hi));
        if (iv.hi == kOne && iv.hi_closed) {
            bool covered = false;
            for (const BaseInterval& jv : n.fulls)
                if (jv.lo == kZero && jv.hi > kZero) covered = true;
            if (!covered)
                out.push_back("arc closed at the seam 1 without coverage from the 0 side");
        }
    }

    for (const auto& [at, mp] : n.pieces) {
        if (fulls_contain(m, n, at)) continue;  // piece swallowed by a pullback
        FiberKind k = m.fiber_at(at);
        if (product) {
            out.push_back("single-fiber piece at " + rat(at) + " is never open in product topology");
            continue;
        }
        if (circle) {
            if (k.is_interval()) {
                out.push_back("interval fiber piece unsupported in double-circle mode");
                continue;
            }
            bool inner = mp.class_covered || mp.indices.count(0) > 0;
            if (inner && !(collar_left(m, n, at) && collar_right(m, n, at)))
                out.push_back("inner-circle point at " + rat(at) +
                              " needs punctured arc coverage on both sides");
            continue;
        }
        // Order mode
        bool needs_left = false, needs_right = false;
        switch (k.tag) {
            case FiberKind::Tag::Singleton:
                needs_left = needs_right = mp.class_covered;
                break;
            case FiberKind::Tag::Interval:
                for (const FiberSpan& s : mp.spans) {
                    if (s.lo_closed && s.lo > kZero)
                        out.push_back("fiber piece at " + rat(at) +
                                      " closed at interior fiber coordinate " + rat(s.lo));
                    if (s.hi_closed && s.hi < kOne)
                        out.push_back("fiber piece at " + rat(at) +
                                      " closed at interior fiber coordinate " + rat(s.hi));
                    needs_left = needs_left || s.covers_min();
                    needs_right = needs_right || s.covers_max();
                }
                break;
            case FiberKind::Tag::FiniteChain:
                needs_left = mp.indices.count(0) > 0;
                needs_right = mp.indices.count(k.chain_size - 1) > 0;
                break;
        }
        if (needs_left && at > kZero && !collar_left(m, n, at))
            out.push_back("fiber minimum at " + rat(at) + " lacks a left base collar");
        if (needs_right && at < kOne && !collar_right(m, n, at))
            out.push_back("fiber maximum at " + rat(at) + " lacks a right base collar");
    }

    for (const Rect& r : n.rects) {
        // redundant when the strip sits inside merged pullbacks
        bool inside = false;
        for (const BaseInterval& iv : n.fulls) {
            bool lo_ok = iv.lo < r.base.lo || (iv.lo == r.base.lo && (iv.lo_closed || !r.base.lo_closed));
            bool hi_ok = iv.hi > r.base.hi || (iv.hi == r.base.hi && (iv.hi_closed || !r.base.hi_closed));
            if (lo_ok && hi_ok) { inside = true; break; }
        }
        if (inside) continue;
        if (!r.base.open_in_segment()) {
            out.push_back("strip base not open");
            continue;
        }
        if (product) {
            bool lo_ok = !r.span.lo_closed || r.span.lo == kZero;
            bool hi_ok = !r.span.hi_closed || r.span.hi == kOne;
            if (!lo_ok || !hi_ok) out.push_back("strip span not open in the fiber");
        } else if (order) {
            if (r.span.lo_closed || r.span.hi_closed)
                out.push_back("strip span must avoid fiber endpoints in order topology");
        } else {  // circle
            if (r.span.contains(kZero))
                out.push_back("strip touching the inner circle is not open");
        }
    }
    return out;
}

bool is_open(const FiberedSpaceModel& m, const OpenSet& u) {
    return open_violations(m, u).empty();
}

// ---------------------------------------------------------------------------

namespace {

bool piece_shapes_intersect(const FiberedSpaceModel& m, const Rational& at,
                            const FiberPiece& a, const FiberPiece& b) {
    FiberKind k = m.fiber_at(at);
    switch (k.tag) {
        case FiberKind::Tag::Singleton:
            return true;
        case FiberKind::Tag::Interval: {
            const auto* sa = std::get_if<FiberSpan>(&a.shape);
            const auto* sb = std::get_if<FiberSpan>(&b.shape);
            return sa && sb && spans_intersect(*sa, *sb);
        }
        case FiberKind::Tag::FiniteChain: {
            const auto* ia = std::get_if<std::set<int>>(&a.shape);
            const auto* ib = std::get_if<std::set<int>>(&b.shape);
            if (!ia || !ib) return false;
            for (int i : *ia)
                if (ib->count(i)) return true;
            return false;
        }
    }
    return false;
}

bool piece_rect_intersect(const FiberedSpaceModel& m, const FiberPiece& p, const Rect& r) {
    Rational at = m.canonical_base(p.at);
    if (!circle_interval_contains(m, r.base, at)) return false;
    FiberKind k = m.fiber_at(at);
    switch (k.tag) {
        case FiberKind::Tag::Singleton:
            return r.span.contains(kZero);
        case FiberKind::Tag::Interval: {
            const auto* s = std::get_if<FiberSpan>(&p.shape);
            return s && spans_intersect(*s, r.span);
        }
        case FiberKind::Tag::FiniteChain: {
            const auto* idx = std::get_if<std::set<int>>(&p.shape);
            if (!idx) return false;
            for (int i : *idx)
                if (r.span.contains(Rational(i, k.chain_size - 1))) return true;
            return false;
        }
    }
    return false;
}

bool piece_nonempty(const FiberPiece& p) {
    if (const auto* s = std::get_if<FiberSpan>(&p.shape)) return !s->empty();
    if (const auto* idx = std::get_if<std::set<int>>(&p.shape)) return !idx->empty();
    return false;
}

}  // namespace

bool sets_disjoint(const FiberedSpaceModel& m, const OpenSet& u, const OpenSet& v) {
    for (const BaseInterval& a : u.fulls) {
        for (const BaseInterval& b : v.fulls)
            if (circle_intervals_intersect(m, a, b)) return false;
        for (const FiberPiece& p : v.pieces)
            if (piece_nonempty(p) && circle_interval_contains(m, a, m.canonical_base(p.at)))
                return false;
        for (const Rect& r : v.rects)
            if (!r.span.empty() && circle_intervals_intersect(m, a, r.base)) return false;
    }
    for (const FiberPiece& p : u.pieces) {
        if (!piece_nonempty(p)) continue;
        Rational at = m.canonical_base(p.at);
        for (const BaseInterval& b : v.fulls)
            if (circle_interval_contains(m, b, at)) return false;
        for (const FiberPiece& q : v.pieces)
            if (piece_nonempty(q) && at == m.canonical_base(q.at) &&
                piece_shapes_intersect(m, at, p, q))
                return false;
        for (const Rect& r : v.rects)
            if (piece_rect_intersect(m, p, r)) return false;
    }
    for (const Rect& r : u.rects) {
        if (r.span.empty()) continue;
        for (const BaseInterval& b : v.fulls)
            if (circle_intervals_intersect(m, b, r.base)) return false;
        for (const FiberPiece& q : v.pieces)
            if (piece_nonempty(q) && piece_rect_intersect(m, q, r)) return false;
        for (const Rect& s : v.rects)
            if (!s.span.empty() && circle_intervals_intersect(m, r.base, s.base) &&
                spans_intersect(r.span, s.span))
                return false;
    }
    return true;
}

BaseSubset base_footprint(const FiberedSpaceModel& m, const OpenSet& u) {
    BaseSubset out;
    for (const BaseInterval& iv : u.fulls) out.add(iv);
    for (const Rect& r : u.rects)
        if (!r.span.empty()) out.add(r.base);
    for (const FiberPiece& p : u.pieces)
        if (piece_nonempty(p)) out.add_point(m.canonical_base(p.at));
    return out;
}

BaseSubset small_image(const FiberedSpaceModel& m, const OpenSet& u) {
    auto violations = open_violations(m, u);
    if (!violations.empty())
        throw TopologyError("small image requires an open set: " + violations.front());

    Normalized n = normalize_set(m, u);

    // arrangement of critical base points
    std::vector<Rational> crit{kZero, kOne};
    for (const BaseInterval& iv : n.fulls) { crit.push_back(iv.lo); crit.push_back(iv.hi); }
    for (const Rect& r : n.rects) { crit.push_back(r.base.lo); crit.push_back(r.base.hi); }
    for (const auto& [at, mp] : n.pieces) crit.push_back(at);
    for (const auto& [at, k] : m.explicit_fibers) crit.push_back(at);
    std::sort(crit.begin(), crit.end());
    crit.erase(std::unique(crit.begin(), crit.end()), crit.end());

    auto whole_fiber_covered_by_span = [&](const FiberKind& k, const FiberSpan& span) {
        switch (k.tag) {
            case FiberKind::Tag::Singleton: return span.contains(kZero);
            case FiberKind::Tag::Interval: return span.is_whole();
            case FiberKind::Tag::FiniteChain: {
                for (int i = 0; i < k.chain_size; ++i)
                    if (!span.contains(Rational(i, k.chain_size - 1))) return false;
                return true;
            }
        }
        return false;
    };

    BaseSubset out;
    // cells between consecutive critical points carry the default kind and
    // can only be covered uniformly
    for (std::size_t i = 0; i + 1 < crit.size(); ++i) {
        Rational mid = (crit[i] + crit[i + 1]) / Rational(2);
        bool covered = false;
        for (const BaseInterval& iv : n.fulls)
            if (iv.contains(mid)) { covered = true; break; }
        if (!covered) {
            for (const Rect& r : n.rects)
                if (r.base.contains(mid) && whole_fiber_covered_by_span(m.default_fiber, r.span)) {
                    covered = true;
                    break;
                }
        }
        if (covered) out.add(BaseInterval::open(crit[i], crit[i + 1]));
    }
    for (const Rational& w : crit) {
        if (m.on_circle() && w == kOne) continue;  // alias of 0
        FiberKind k = m.fiber_at(w);
        bool covered = fulls_contain(m, n, w);
        if (!covered) {
            auto it = n.pieces.find(w);
            if (it != n.pieces.end()) {
                const MergedPieces& mp = it->second;
                switch (k.tag) {
                    case FiberKind::Tag::Singleton: covered = mp.class_covered; break;
                    case FiberKind::Tag::Interval: covered = spans_cover_whole(mp.spans); break;
                    case FiberKind::Tag::FiniteChain:
                        covered = static_cast<int>(mp.indices.size()) == k.chain_size;
                        break;
                }
            }
        }
        if (!covered) {
            for (const Rect& r : n.rects)
                if (circle_interval_contains(m, r.base, w) &&
                    whole_fiber_covered_by_span(k, r.span)) {
                    covered = true;
                    break;
                }
        }
        if (covered) out.add_point(w);
    }
    return out;
}

// ---------------------------------------------------------------------------
// separate_points

namespace {

// open base interval around a, reaching at most halfway toward the guards
BaseInterval base_nbhd(const Rational& a, const Rational& lo_guard, const Rational& hi_guard) {
    BaseInterval iv;
    if (a == kZero) { iv.lo = kZero; iv.lo_closed = true; }
    else { iv.lo = a - (a - lo_guard) / Rational(2); iv.lo_closed = false; }
    if (a == kOne) { iv.hi = kOne; iv.hi_closed = true; }
    else { iv.hi = a + (hi_guard - a) / Rational(2); iv.hi_closed = false; }
    return iv;
}

// open neighborhood of (a, y) inside an interval fiber, radius r, with the
// base collars required by the order topology when the span touches an end
OpenSet interval_fiber_nbhd(const Rational& a, const Rational& y, const Rational& r,
                            bool collar_side_left, bool collar_side_right,
                            const Rational& collar_lo, const Rational& collar_hi) {
    OpenSet u;
    FiberSpan span;
    if (y - r <= kZero) { span.lo = kZero; span.lo_closed = true; }
    else { span.lo = y - r; span.lo_closed = false; }
    if (y + r >= kOne) { span.hi = kOne; span.hi_closed = true; }
    else { span.hi = y + r; span.hi_closed = false; }
    u.pieces.push_back(FiberPiece::interval_piece(a, span));
    if (span.covers_min() && a > kZero && collar_side_left)
        u.fulls.push_back(BaseInterval::open(collar_lo, a));
    if (span.covers_max() && a < kOne && collar_side_right)
        u.fulls.push_back(BaseInterval::open(a, collar_hi));
    return u;
}

}  // namespace

std::pair<OpenSet, OpenSet> separate_points(const FiberedSpaceModel& m,
                                            const XPoint& p0, const XPoint& q0) {
    check_point(m, p0);
    check_point(m, q0);
    XPoint p = p0, q = q0;
    p.base = m.canonical_base(p.base);
    q.base = m.canonical_base(q.base);
    if (p == q) throw DomainError("separate: points coincide");

    if (p.base != q.base) {
        bool swapped = q.base < p.base;
        if (swapped) std::swap(p, q);
        if (m.on_circle()) {
            // quarter of the circular gap on each side keeps the arcs apart
            Rational g1 = q.base - p.base;
            Rational g2 = kOne - g1;
            Rational r = min(g1, g2) / Rational(4);
            auto arc = [&](const Rational& c) {
                OpenSet u;
                Rational lo = c - r, hi = c + r;
                if (lo < kZero) {
                    u.fulls.push_back({kZero, hi, true, false});
                    u.fulls.push_back({lo + kOne, kOne, false, true});
                } else if (hi > kOne) {
                    u.fulls.push_back({lo, kOne, false, true});
                    u.fulls.push_back({kZero, hi - kOne, true, false});
                } else {
                    u.fulls.push_back({lo, hi, false, false});
                }
                return u;
            };
            OpenSet u = arc(p.base), v = arc(q.base);
            return swapped ? std::make_pair(v, u) : std::make_pair(u, v);
        }
        Rational mid = (p.base + q.base) / Rational(2);
        OpenSet u = OpenSet::pullback(base_nbhd(p.base, kZero, mid));
        OpenSet v = OpenSet::pullback(base_nbhd(q.base, mid, kOne));
        return swapped ? std::make_pair(v, u) : std::make_pair(u, v);
    }

    const Rational a = p.base;
    FiberKind k = m.fiber_at(a);
    if (k.is_singleton()) throw DomainError("separate: points coincide in a singleton fiber");

    if (m.mode == TopologyMode::Product) {
        // with collapsed classes accumulating at a, every neighborhood of a
        // surviving-fiber point swallows them: no disjoint pair exists
        if (m.default_fiber.is_singleton())
            throw TopologyError("separate: product quotients are not Hausdorff along surviving fibers");
        Rational yp = canonical_coordinate(m, p), yq = canonical_coordinate(m, q);
        bool swapped = yq < yp;
        if (swapped) std::swap(yp, yq);
        Rational r = (yq - yp) / Rational(4);
        auto strip = [&](const Rational& y) {
            FiberSpan span;
            if (y - r <= kZero) { span.lo = kZero; span.lo_closed = true; }
            else { span.lo = y - r; span.lo_closed = false; }
            if (y + r >= kOne) { span.hi = kOne; span.hi_closed = true; }
            else { span.hi = y + r; span.hi_closed = false; }
            OpenSet u;
            u.rects.push_back({BaseInterval::whole(), span});
            return u;
        };
        OpenSet u = strip(yp), v = strip(yq);
        return swapped ? std::make_pair(v, u) : std::make_pair(u, v);
    }

    if (m.on_circle()) {
        // same fiber: inner vs outer copy (indices 0 and 1)
        int ip = *p.chain_index, iq = *q.chain_index;
        Rational r = Rational(1, 4);
        for (const auto& [b, kk] : m.explicit_fibers) {
            (void)kk;
            if (b == a) continue;
            Rational d1 = (b - a).abs();
            Rational d2 = kOne - d1;
            r = min(r, min(d1, d2) / Rational(2));
        }
        auto punctured = [&]() {
            // both-sided punctured arc collar around a, wrapped at the seam
            OpenSet u;
            Rational lo = a - r, hi = a + r;
            auto push = [&](const Rational& x, const Rational& y, bool lc, bool hc) {
                if (x < y) u.fulls.push_back({x, y, lc, hc});
            };
            if (lo < kZero) {
                push(kZero, a, true, false);
                push(lo + kOne, kOne, false, true);
            } else {
                push(lo, a, false, false);
            }
            if (hi > kOne) {
                push(a, kOne, false, true);
                push(kZero, hi - kOne, true, false);
            } else {
                push(a, hi, false, false);
            }
            return u;
        };
        auto inner_nbhd = [&]() {
            OpenSet u = punctured();
            u.pieces.push_back(FiberPiece::chain_piece(a, {0}));
            return u;
        };
        auto outer_point = [&](int idx) {
            OpenSet u;
            u.pieces.push_back(FiberPiece::chain_piece(a, {idx}));
            return u;
        };
        OpenSet up = ip == 0 ? inner_nbhd() : outer_point(ip);
        OpenSet uq = iq == 0 ? inner_nbhd() : outer_point(iq);
        return {up, uq};
    }

    // Order mode, same fiber
    if (k.is_interval()) {
        Rational yp = *p.interval_coord, yq = *q.interval_coord;
        bool swapped = yq < yp;
        if (swapped) std::swap(yp, yq);
        Rational r = (yq - yp) / Rational(4);
        Rational collar_lo = a / Rational(2);
        Rational collar_hi = a + (kOne - a) / Rational(2);
        OpenSet u = interval_fiber_nbhd(a, yp, r, true, false, collar_lo, collar_hi);
        OpenSet v = interval_fiber_nbhd(a, yq, r, false, true, collar_lo, collar_hi);
        return swapped ? std::make_pair(v, u) : std::make_pair(u, v);
    }

    // chain fiber: endpoints take one-sided collars, middles are isolated
    int ip = *p.chain_index, iq = *q.chain_index;
    Rational collar_lo = a / Rational(2);
    Rational collar_hi = a + (kOne - a) / Rational(2);
    auto chain_nbhd = [&](int i) {
        OpenSet u;
        u.pieces.push_back(FiberPiece::chain_piece(a, {i}));
        if (i == 0 && a > kZero) u.fulls.push_back(BaseInterval::open(collar_lo, a));
        if (i == k.chain_size - 1 && a < kOne)
            u.fulls.push_back(BaseInterval::open(a, collar_hi));
        return u;
    };
    return {chain_nbhd(ip), chain_nbhd(iq)};
}

}  // namespace fiberosc
