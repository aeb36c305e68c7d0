#pragma once

#include <vector>

#include "fiberosc/oscillation.hpp"

namespace fiberosc {

// One flattened support point: the closed bridge interval around it, the
// exact value band of h over that interval, and the affine replacement.
struct BridgeInfo {
    Rational at;
    Rational lo, hi;            // closed bridge interval inside [0,1]
    Rational band_lo, band_hi;  // exact range of h over the interval
    Rational osc;               // oscillation of h at the point
    PLFunction bridge;
};

// Result of the fiber-flattening approximation: p agrees with h outside the
// bridge intervals, is constant on fibers inside them, has oscillation
// support inside the keep set, and satisfies the exact error bound
// ||p - h|| <= c * s with s the sup of the flattened oscillations.
struct ApproximationPlan {
    RepresentableFunction h;
    std::vector<Rational> keep;
    Rational c;
    Rational s;
    std::vector<BridgeInfo> bridges;
    RepresentableFunction result;
    Rational achieved_error;
    Rational error_bound;  // c * s
};

ApproximationPlan flatten(const RepresentableFunction& h, std::vector<Rational> keep,
                          const Rational& c);

// Sandwich for dist(h, Z_K): the lower bound s/2 comes from the seminorm
// bound osc <= 2||.||; the upper bound is the best achieved flattening
// error over a fixed schedule of c values descending toward 1.
struct DistBounds {
    Rational lower, upper;
    Rational s;
    std::vector<std::pair<Rational, Rational>> schedule;  // (c, achieved error)
};
DistBounds dist_bounds(const RepresentableFunction& h, std::vector<Rational> keep);

// Increasing chain K_m = {y : osc >= 1/m} with certified decay of the
// distance upper bounds. Rows are recorded on the maximal ranges of m where
// K_m is constant; the last row exhausts the support with distance exactly
// zero.
struct ChainRow {
    long m_from = 1, m_to = 1;
    std::vector<Rational> keep;
    Rational s;
    Rational upper;  // flattening error at this K, minimized over the schedule
};
struct ChainReport {
    std::vector<ChainRow> rows;
    Rational c_ref;  // smallest schedule entry; upper <= c_ref/m holds rowwise
    long exhaustion_m = 1;
    bool exact_zero_at_exhaustion = false;
};
ChainReport bprime_chain(const RepresentableFunction& h,
                         std::vector<Rational> c_schedule = {Rational(3, 2)});

// Executable form of the nesting law: every sampled function with
// oscillation support inside A also lies in Z_B when A is a subset of B.
struct NestingReport {
    int checked = 0;
    bool ok = true;
};
NestingReport nesting_check(const std::vector<Rational>& a, const std::vector<Rational>& b,
                            const std::vector<RepresentableFunction>& samples);

}  // namespace fiberosc
