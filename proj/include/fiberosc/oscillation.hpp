#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "fiberosc/functions.hpp"

namespace fiberosc {

// Certificate that a level set (or the whole oscillation profile) is
// infinite: every fiber over the interval oscillates by at least epsilon.
struct InfiniteWitness {
    BaseInterval interval;
    Rational epsilon;
    bool operator==(const InfiniteWitness&) const = default;
};

// Fiberwise oscillation of one function: a finite support map (strictly
// positive values, zeros pruned), or an infinite symbolic profile for
// product-mode functions with nonzero slope.
struct OscillationProfile {
    std::map<Rational, Rational> support;
    std::optional<InfiniteWitness> infinite;

    bool is_infinite() const { return infinite.has_value(); }
    Rational sup_value() const;                    // ||Omega_f(h)||_inf
    Rational value_at(const Rational& y) const;
    std::vector<Rational> support_points() const;
};

// Omega_f(h): exact per-fiber diameters. Requires a valid h.
OscillationProfile oscillate(const RepresentableFunction& h);

// H_{h,eps} = {y : Omega_f(h)(y) >= eps}; finite for order/double-circle
// models, an interval witness in product mode when |slope| >= eps.
struct LevelSet {
    std::vector<Rational> points;
    std::optional<InfiniteWitness> infinite;
    bool is_infinite() const { return infinite.has_value(); }
};
LevelSet level_set(const RepresentableFunction& h, const Rational& eps);

// Membership of Omega_f(h) in c_0(Y), with the K_m chain as certificate.
// Chain rows are recorded at the thresholds m where K_m changes; the last
// row exhausts the support.
struct C0Certificate {
    bool member = false;
    std::vector<std::pair<long, std::vector<Rational>>> chain;
    std::optional<InfiniteWitness> witness;
};
C0Certificate in_c0(const RepresentableFunction& h);

// Closed strip base x {fiber coordinate}: the shape of the disjoint closed
// sets in the non-fully-closed witness.
struct ClosedStrip {
    BaseInterval base;
    Rational fiber_coord;
};

struct NotFullyClosedWitness {
    ClosedStrip set_a, set_b;            // disjoint closed sets
    RepresentableFunction separating;    // g with g(A) = {0}, g(B) = {1}
    Rational epsilon;                    // level threshold with infinite H
    BaseInterval common_image;           // f(A) and f(B) both cover this
};

struct FullClosednessResult {
    bool fully_closed = false;
    int sampled = 0;                          // randomized re-verification size
    std::size_t max_level_set_size = 0;       // largest |H| observed
    std::optional<NotFullyClosedWitness> witness;
};

// Order and double-circle models are fully closed (every representable
// function has finite level sets; re-verified on a seeded random sample).
// The product square returns the explicit counterexample witness.
FullClosednessResult full_closedness(const FiberedSpaceModel& m,
                                     std::uint64_t seed = 0, int samples = 32);

}  // namespace fiberosc
