#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "fiberosc/rational.hpp"

namespace fiberosc {

// Topology of the total space over the base [0,1].
//   Order       - lexicographic order topology on the fibered sum
//                 (lexicographic square, double arrow, their quotients)
//   Product     - ordinary product topology (the non-example)
//   DoubleCircle- base is the circle [0,1]/0~1; chain-2 fibers are an inner
//                 (continuum) copy at index 0 and an isolated outer copy at
//                 index 1
enum class TopologyMode { Order, Product, DoubleCircle };

struct FiberKind {
    enum class Tag { Singleton, FiniteChain, Interval };
    Tag tag = Tag::Interval;
    int chain_size = 2;  // FiniteChain only, >= 2

    static FiberKind singleton() { return {Tag::Singleton, 2}; }
    static FiberKind chain(int k);
    static FiberKind interval() { return {Tag::Interval, 2}; }

    bool is_singleton() const { return tag == Tag::Singleton; }
    bool is_chain() const { return tag == Tag::FiniteChain; }
    bool is_interval() const { return tag == Tag::Interval; }

    bool operator==(const FiberKind& o) const {
        return tag == o.tag && (!is_chain() || chain_size == o.chain_size);
    }
};

// Symbolic model of the map f : X -> Y with Y = [0,1]. A finite explicit
// fiber table overrides the default kind. Immutable in normal use.
struct FiberedSpaceModel {
    TopologyMode mode = TopologyMode::Order;
    FiberKind default_fiber = FiberKind::interval();
    std::map<Rational, FiberKind> explicit_fibers;

    static FiberedSpaceModel lex_square();      // Order, all fibers Interval
    static FiberedSpaceModel double_arrow();    // Order, all fibers chain-2
    static FiberedSpaceModel double_circle();   // DoubleCircle, chain-2
    static FiberedSpaceModel product_square();  // Product, Interval fibers

    FiberKind fiber_at(const Rational& base) const;
    bool on_circle() const { return mode == TopologyMode::DoubleCircle; }

    // Base points live in [0,1]; on the circle 1 is an alias of 0.
    Rational canonical_base(const Rational& x) const;

    bool operator==(const FiberedSpaceModel& o) const;
};

// A point of X: base position plus a fiber coordinate matching the kind.
struct XPoint {
    Rational base;
    std::optional<Rational> interval_coord;  // Interval fibers, in [0,1]
    std::optional<int> chain_index;          // FiniteChain fibers, 0..k-1

    static XPoint at_singleton(Rational b) { return {std::move(b), {}, {}}; }
    static XPoint on_interval(Rational b, Rational y) { return {std::move(b), std::move(y), {}}; }
    static XPoint on_chain(Rational b, int i) { return {std::move(b), {}, i}; }

    bool operator==(const XPoint&) const = default;
};

// Checks that the fiber coordinate matches the model's kind at the base.
void check_point(const FiberedSpaceModel& m, const XPoint& p);

// Canonical fiber coordinate in [0,1]: interval coord itself, chain index
// i/(k-1), singleton 0.
Rational canonical_coordinate(const FiberedSpaceModel& m, const XPoint& p);

// Subinterval of the base [0,1] with endpoint flags.
struct BaseInterval {
    Rational lo, hi;
    bool lo_closed = false, hi_closed = false;

    static BaseInterval open(Rational a, Rational b) { return {std::move(a), std::move(b), false, false}; }
    static BaseInterval closed(Rational a, Rational b) { return {std::move(a), std::move(b), true, true}; }
    static BaseInterval point(const Rational& a) { return {a, a, true, true}; }
    static BaseInterval whole() { return {Rational(0), Rational(1), true, true}; }

    bool empty() const { return lo > hi || (lo == hi && !(lo_closed && hi_closed)); }
    bool contains(const Rational& x) const;
    bool is_point() const { return lo == hi && lo_closed && hi_closed; }
    // open as a subset of the segment [0,1]
    bool open_in_segment() const;
    bool operator==(const BaseInterval&) const = default;
};

bool intervals_intersect(const BaseInterval& a, const BaseInterval& b);

// Finite union of intervals and isolated points, kept normalized (sorted,
// disjoint, points not absorbed by intervals). The value type of small
// images and footprints.
class BaseSubset {
public:
    BaseSubset() = default;
    void add(BaseInterval iv);
    void add_point(const Rational& x);

    const std::vector<BaseInterval>& intervals() const { return ivs_; }
    const std::vector<Rational>& points() const { return pts_; }

    bool empty() const { return ivs_.empty() && pts_.empty(); }
    bool contains(const Rational& x) const;
    bool subset_of(const BaseSubset& o) const;
    // open as a subset of [0,1] (Order/Product) or of the circle
    bool open_in_base(const FiberedSpaceModel& m) const;

    bool operator==(const BaseSubset&) const = default;

private:
    void normalize();
    std::vector<BaseInterval> ivs_;
    std::vector<Rational> pts_;
};

// Sub-piece of one fiber in canonical coordinates [0,1].
struct FiberSpan {
    Rational lo, hi;
    bool lo_closed = false, hi_closed = false;

    static FiberSpan whole() { return {Rational(0), Rational(1), true, true}; }
    static FiberSpan open(Rational a, Rational b) { return {std::move(a), std::move(b), false, false}; }

    bool empty() const { return lo > hi || (lo == hi && !(lo_closed && hi_closed)); }
    bool contains(const Rational& y) const;
    bool is_whole() const { return lo.is_zero() && hi == Rational(1) && lo_closed && hi_closed; }
    bool covers_min() const { return lo.is_zero() && lo_closed; }
    bool covers_max() const { return hi == Rational(1) && hi_closed; }
    bool operator==(const FiberSpan&) const = default;
};

// {at} x piece-of-fiber. For Interval fibers the shape is a FiberSpan in
// fiber coordinates; for FiniteChain fibers a set of indices; for Singleton
// fibers the shape is ignored (the piece is the class point).
struct FiberPiece {
    Rational at;
    std::variant<FiberSpan, std::set<int>> shape = FiberSpan::whole();

    static FiberPiece interval_piece(Rational a, FiberSpan s) { return {std::move(a), std::move(s)}; }
    static FiberPiece chain_piece(Rational a, std::set<int> idx) { return {std::move(a), std::move(idx)}; }
    static FiberPiece class_point(Rational a) { return {std::move(a), FiberSpan::whole()}; }

    bool operator==(const FiberPiece&) const = default;
};

// base x span strip, in canonical fiber coordinates uniformly over the base.
struct Rect {
    BaseInterval base;
    FiberSpan span;
    bool operator==(const Rect&) const = default;
};

// Finite union of the three primitive shapes. The algebra is closed under
// the constructions of the supported proofs; openness, membership and
// disjointness are decidable per topology mode.
struct OpenSet {
    std::vector<BaseInterval> fulls;   // full-fiber pullbacks f^{-1}(I)
    std::vector<FiberPiece> pieces;    // single-fiber pieces
    std::vector<Rect> rects;           // strips

    static OpenSet empty() { return {}; }
    static OpenSet pullback(BaseInterval iv) { return {{std::move(iv)}, {}, {}}; }

    bool is_empty_set() const { return fulls.empty() && pieces.empty() && rects.empty(); }
    bool operator==(const OpenSet&) const = default;
};

bool contains(const FiberedSpaceModel& m, const OpenSet& u, const XPoint& p);

// Reasons the set fails to be open; empty means open.
std::vector<std::string> open_violations(const FiberedSpaceModel& m, const OpenSet& u);
bool is_open(const FiberedSpaceModel& m, const OpenSet& u);

bool sets_disjoint(const FiberedSpaceModel& m, const OpenSet& u, const OpenSet& v);

// f(U): base projection of the set.
BaseSubset base_footprint(const FiberedSpaceModel& m, const OpenSet& u);

// Small image f#(U) = {y : f^{-1}(y) inside U}, exact. U must be open.
BaseSubset small_image(const FiberedSpaceModel& m, const OpenSet& u);

// Disjoint open neighborhoods of two distinct points, constructive
// Hausdorffness witness. Works for the ambient models and their quotients.
std::pair<OpenSet, OpenSet> separate_points(const FiberedSpaceModel& m,
                                            const XPoint& p, const XPoint& q);

}  // namespace fiberosc
