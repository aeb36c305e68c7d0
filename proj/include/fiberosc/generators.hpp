#pragma once

#include <cstdint>
#include <vector>

#include "fiberosc/functions.hpp"

namespace fiberosc {

// Deterministic seeded generator for randomized suites. Uses a splitmix64
// stream with hand-rolled range reduction so the byte-for-byte output is
// stable across standard library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

    std::uint64_t next();
    long pick(long lo, long hi);         // inclusive bounds
    bool chance(long num, long den);     // true with probability num/den

    // rational in [0,1] with denominator <= max_den
    Rational unit_rational(long max_den);
    // rational value with |numerator| <= mag and denominator <= max_den
    Rational value_rational(long mag, long max_den);

private:
    std::uint64_t state_;
};

struct FunctionGenOptions {
    int max_support = 8;
    long max_den = 64;
    long value_mag = 64;
    int max_fiber_nodes = 3;  // interior nodes of interval-fiber functions
};

// Random member of the computable class on the model, valid by
// construction.
RepresentableFunction random_function(Rng& rng, const FiberedSpaceModel& m,
                                      const FunctionGenOptions& opt = {});

// Random point of the model (base in [0,1], fiber coordinate matching).
XPoint random_point(Rng& rng, const FiberedSpaceModel& m, long max_den = 64);

// Random subset of the given points (each kept with probability 1/2).
std::vector<Rational> random_subset(Rng& rng, const std::vector<Rational>& pts);

}  // namespace fiberosc
