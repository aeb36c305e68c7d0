#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fiberosc/plfunction.hpp"
#include "fiberosc/spaces.hpp"

namespace fiberosc {

// Fiber correction attached to one active base point: a continuous
// PLFunction on the fiber for Interval fibers, a value tuple for
// FiniteChain fibers.
struct FiberData {
    std::optional<PLFunction> pl;
    std::vector<Rational> values;

    static FiberData interval(PLFunction f) { return {std::move(f), {}}; }
    static FiberData chain(std::vector<Rational> v) { return {{}, std::move(v)}; }
    bool operator==(const FiberData&) const = default;
};

// Continuous function on a fibered space model: a base PLFunction plus a
// finite fiber-correction table. The base may jump only at active points;
// the mode-specific matching rules below are what `validate` checks.
//
// Canonical form: at an interior active point the base value equals the
// left limit (the base value is never attained there, the fiber carries the
// values); at active 0 the value equals the right limit.
//
// Product mode restricts the class to h(x,y) = base(x) + slope * y.
struct RepresentableFunction {
    FiberedSpaceModel space;
    PLFunction base = PLFunction::constant(Rational(0));
    std::map<Rational, FiberData> fibers;   // keys form the active set
    Rational product_slope = Rational(0);   // Product mode only

    bool operator==(const RepresentableFunction&) const = default;
};

struct Violation {
    Rational at;
    std::string constraint;
};

// Mode-specific continuity checks; empty result means the function is a
// well-formed continuous member of the computable class.
std::vector<Violation> validate(const RepresentableFunction& h);
bool is_valid(const RepresentableFunction& h);
void require_valid(const RepresentableFunction& h);  // DomainError on failure

Rational eval(const RepresentableFunction& h, const XPoint& p);

// Exact image of the fiber at y: [inf, sup] plus, for chain fibers, the
// attained value set.
RangeResult fiber_range(const RepresentableFunction& h, const Rational& y);
std::vector<Rational> fiber_value_set(const RepresentableFunction& h, const Rational& y);

Rational sup_norm(const RepresentableFunction& h);

RepresentableFunction linear_combine(std::span<const Rational> coeffs,
                                     std::span<const RepresentableFunction> fns);

RepresentableFunction subtract(const RepresentableFunction& a, const RepresentableFunction& b);

// h and g take the same value at every point of the common space
bool pointwise_equal(const RepresentableFunction& a, const RepresentableFunction& b);

}  // namespace fiberosc
