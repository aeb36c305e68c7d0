#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include "fiberosc/rational.hpp"

namespace fiberosc {

// Evaluation side at a point: one-sided limit or the value itself.
enum class Side { Left, At, Right };

// Endpoint treatment for range queries. IncludeLimits adds the outward
// one-sided limits at the interval endpoints (closure semantics of the image
// of a closed neighborhood); ValuesOnly takes the image of the interval as a
// set of attained values and its limit points from inside only.
enum class RangeMode { IncludeLimits, ValuesOnly };

struct Breakpoint {
    Rational x;
    Rational left;    // limit from below; equals value at x = 0
    Rational value;
    Rational right;   // limit from above; equals value at x = 1

    bool operator==(const Breakpoint&) const = default;
};

struct RangeResult {
    Rational inf;
    Rational sup;
    Rational diameter() const { return sup - inf; }
    bool operator==(const RangeResult&) const = default;
};

// Piecewise-linear function on [0,1]. Jumps are permitted only at declared
// breakpoints (where left/value/right may disagree); between consecutive
// breakpoints the function is the affine segment joining the adjacent
// one-sided limits. Breakpoints are strictly increasing and always include
// 0 and 1. Immutable after construction.
class PLFunction {
public:
    // Validates ordering, domain endpoints and the endpoint-limit
    // conventions; throws DomainError on violation.
    explicit PLFunction(std::vector<Breakpoint> breakpoints);

    static PLFunction constant(const Rational& v);
    static PLFunction identity();
    // Continuous function through the given (x, value) nodes, affine in
    // between. Nodes must include 0 and 1.
    static PLFunction interpolate(const std::vector<std::pair<Rational, Rational>>& nodes);

    const std::vector<Breakpoint>& breakpoints() const { return pts_; }

    // Exact one-sided limit or value. Side::Left requires x > 0,
    // Side::Right requires x < 1; x must lie in [0,1].
    Rational eval(const Rational& x, Side side = Side::At) const;

    // Exact inf/sup over the closed interval [a,b] in [0,1].
    RangeResult range(const Rational& a, const Rational& b,
                      RangeMode mode = RangeMode::IncludeLimits) const;

    // sup over [0,1] of |f|, limits included.
    Rational sup_abs() const;

    bool has_jump_at(const Rational& x) const;
    bool continuous_everywhere() const;

    // Pointwise sum of coeff[i] * f[i]. All inputs share the domain [0,1].
    static PLFunction combine(std::span<const Rational> coeffs,
                              std::span<const PLFunction> fns);

    PLFunction scaled(const Rational& c) const;
    PLFunction plus(const PLFunction& o) const;

    // Copy of *this with values on (l, r) replaced by g, keeping *this
    // outside. Requires 0 <= l < r <= 1 and g(l) = f(l), g(r) = f(r) with f
    // continuous at l and r, so the result has no new jumps at the seams.
    // A seam at a domain endpoint may be unglued (glue_* = false, requiring
    // l = 0 resp. r = 1): the replacement then covers that endpoint too.
    PLFunction replace_on(const Rational& l, const Rational& r, const PLFunction& g,
                          bool glue_left = true, bool glue_right = true) const;

    // Drops interior breakpoints that carry no information (no jump,
    // collinear with neighbors).
    PLFunction canonicalized() const;

    // Structural equality of breakpoint lists.
    bool operator==(const PLFunction&) const = default;

    // Equality as functions on [0,1] (canonical forms agree).
    bool same_function(const PLFunction& o) const;

private:
    // index of the breakpoint with pts_[i].x <= x maximal
    std::size_t floor_index(const Rational& x) const;
    Rational interp_between(std::size_t seg, const Rational& x) const;

    std::vector<Breakpoint> pts_;
};

// Affine interpolation between (a, va) and (b, vb), extended flat outside
// [a,b] so the whole object stays a function on [0,1] with range exactly
// [min(va,vb), max(va,vb)]. This is the one-dimensional continuous-extension
// step used by the fiber-flattening algorithm.
PLFunction pl_bridge(const Rational& a, const Rational& b,
                     const Rational& va, const Rational& vb);

}  // namespace fiberosc
