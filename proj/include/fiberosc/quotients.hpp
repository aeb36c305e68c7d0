#pragma once

#include <vector>

#include "fiberosc/functions.hpp"

namespace fiberosc {

// Quotient Y_A of the parent space: fibers over A survive, every other
// fiber collapses to a class point. The derived space is itself a
// FiberedSpaceModel (the model class is closed under this collapse), so all
// space-level operations apply to it directly.
struct QuotientModel {
    FiberedSpaceModel parent;
    std::vector<Rational> keep;      // A, sorted canonical
    FiberedSpaceModel derived;       // Y_A

    // quotient map f_A : X -> Y_A (collapsed fibers lose their coordinate)
    XPoint project(const XPoint& x) const;
    // pi_A : Y_A -> Y, the unique map with f = pi_A . f_A
    Rational to_base(const XPoint& u) const;
};

QuotientModel build_quotient(const FiberedSpaceModel& m, std::vector<Rational> keep);

// Metrizability of a model: the nontrivial fibers must form a countable
// set, which for this model class means the default fiber is a singleton.
bool is_metrizable(const FiberedSpaceModel& m);

// Compatible metric on a metrizable model: base distance plus fiber
// coordinate distance at the surviving fibers. Order mode resolves a split
// fiber by charging the full coordinate gap when passing it; on the circle
// the outer copies are uniformly isolated.
Rational quotient_metric(const FiberedSpaceModel& m, const XPoint& p, const XPoint& q);

// T_A : Z_A -> C(Y_A), h |-> h . f_A^{-1}. Requires supp(Omega_f(h))
// inside A (MembershipError otherwise). The sup-norm equality and the
// fiber-image equality over A are asserted after construction.
struct TransferResult {
    QuotientModel quotient;
    RepresentableFunction transferred;
};
TransferResult transfer_TA(const RepresentableFunction& h, std::vector<Rational> keep);

}  // namespace fiberosc
