#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fiberosc/generators.hpp"
#include "fiberosc/plfunction.hpp"
#include "test_support.hpp"

using namespace fiberosc;
using fiberosc::testing::rat;
using fiberosc::testing::step_at_half;

namespace {

// f(x) = x for x < 1/4, x + 1/3 for x > 1/4 (value at 1/4 from the left)
PLFunction affine_jump_quarter() {
    return PLFunction({{rat(0), rat(0), rat(0), rat(0)},
                       {rat(1, 4), rat(1, 4), rat(1, 4), rat(1, 4) + rat(1, 3)},
                       {rat(1), rat(4, 3), rat(4, 3), rat(4, 3)}});
}

PLFunction random_pl(Rng& rng) {
    std::set<Rational> xs{rat(0), rat(1)};
    int extra = static_cast<int>(rng.pick(0, 5));
    while (static_cast<int>(xs.size()) < extra + 2) xs.insert(rng.unit_rational(32));
    std::vector<Breakpoint> pts;
    for (const Rational& x : xs) {
        Rational l = rng.value_rational(16, 16);
        Rational v = rng.value_rational(16, 16);
        Rational r = rng.value_rational(16, 16);
        if (rng.chance(1, 2)) { l = v; r = v; }  // mostly continuous points
        if (x == rat(0)) l = v;
        if (x == rat(1)) r = v;
        pts.push_back({x, l, v, r});
    }
    return PLFunction(std::move(pts));
}

}  // namespace

TEST_CASE("construction invariants") {
    CHECK_THROWS_AS(PLFunction({}), DomainError);
    // missing endpoint 1
    CHECK_THROWS_AS(PLFunction({{rat(0), rat(0), rat(0), rat(0)}}), DomainError);
    // unsorted
    CHECK_THROWS_AS(PLFunction({{rat(0), rat(0), rat(0), rat(0)},
                                {rat(1, 2), rat(0), rat(0), rat(0)},
                                {rat(1, 2), rat(0), rat(0), rat(0)},
                                {rat(1), rat(0), rat(0), rat(0)}}),
                    DomainError);
    // left limit at 0 must equal the value
    CHECK_THROWS_AS(PLFunction({{rat(0), rat(1), rat(0), rat(0)}, {rat(1), rat(0), rat(0), rat(0)}}),
                    DomainError);
}

TEST_CASE("evaluation: identity and step") {
    PLFunction id = PLFunction::identity();
    CHECK(id.eval(rat(1, 2)) == rat(1, 2));

    PLFunction st = step_at_half();
    CHECK(st.eval(rat(1, 2), Side::Right) == rat(1));
    CHECK(st.eval(rat(1, 2), Side::Left) == rat(0));
    CHECK(st.eval(rat(1, 2)) == rat(0));
    CHECK(st.eval(rat(1, 4)) == rat(0));
    CHECK(st.eval(rat(3, 4)) == rat(1));
}

TEST_CASE("evaluation: one-sided limit of an affine branch") {
    PLFunction f = affine_jump_quarter();
    Rational expected = rat(1, 4) + rat(1, 3);  // substitute x = 1/4 into the upper branch
    CHECK(expected == rat(7, 12));
    CHECK(f.eval(rat(1, 4), Side::Right) == expected);
    CHECK(f.eval(rat(1, 8)) == rat(1, 8));
    CHECK(f.eval(rat(1, 2)) == rat(1, 2) + rat(1, 3));
}

TEST_CASE("evaluation domain errors") {
    PLFunction id = PLFunction::identity();
    CHECK_THROWS_AS(id.eval(rat(3, 2)), DomainError);
    CHECK_THROWS_AS(id.eval(rat(-1, 2)), DomainError);
    CHECK_THROWS_AS(id.eval(rat(0), Side::Left), DomainError);
    CHECK_THROWS_AS(id.eval(rat(1), Side::Right), DomainError);
}

TEST_CASE("range: monotone affine and step") {
    PLFunction id = PLFunction::identity();
    RangeResult r = id.range(rat(1, 4), rat(3, 4));
    CHECK(r.inf == rat(1, 4));
    CHECK(r.sup == rat(3, 4));

    PLFunction st = step_at_half();
    RangeResult s = st.range(rat(0), rat(1));
    CHECK(s.inf == rat(0));
    CHECK(s.sup == rat(1));
    CHECK(s.diameter() == rat(1));
}

TEST_CASE("range: include-limits picks up the outward branch") {
    PLFunction f = affine_jump_quarter();
    RangeResult r = f.range(rat(1, 8), rat(3, 8), RangeMode::IncludeLimits);
    CHECK(r.inf == rat(1, 8));
    CHECK(r.sup == rat(3, 8) + rat(1, 3));  // right-limit branch at 3/8
    CHECK(r.sup == rat(17, 24));
}

TEST_CASE("range: degenerate interval semantics") {
    PLFunction st = step_at_half();
    RangeResult vo = st.range(rat(1, 2), rat(1, 2), RangeMode::ValuesOnly);
    CHECK(vo.inf == rat(0));
    CHECK(vo.sup == rat(0));
    RangeResult il = st.range(rat(1, 2), rat(1, 2), RangeMode::IncludeLimits);
    CHECK(il.inf == rat(0));
    CHECK(il.sup == rat(1));
    CHECK_THROWS_AS(st.range(rat(3, 4), rat(1, 4)), DomainError);
}

TEST_CASE("bridge: spec cases") {
    PLFunction zero = pl_bridge(rat(0), rat(1), rat(0), rat(0));
    CHECK(zero.same_function(PLFunction::constant(rat(0))));

    PLFunction mid = pl_bridge(rat(1, 4), rat(3, 4), rat(0), rat(1));
    CHECK(mid.eval(rat(1, 2)) == rat(1, 2));
    CHECK(mid.eval(rat(0)) == rat(0));   // flat extension left of the bridge
    CHECK(mid.eval(rat(7, 8)) == rat(1));

    // affine formula: va + (x-a)/(b-a) * (vb-va)
    PLFunction br = pl_bridge(rat(0), rat(1), rat(1, 4), rat(7, 12));
    Rational expected = rat(1, 4) + rat(1, 3) * (rat(7, 12) - rat(1, 4));
    CHECK(expected == rat(13, 36));
    CHECK(br.eval(rat(1, 3)) == expected);

    CHECK_THROWS_AS(pl_bridge(rat(1, 2), rat(1, 2), rat(0), rat(1)), DomainError);
    CHECK_THROWS_AS(pl_bridge(rat(3, 4), rat(1, 4), rat(0), rat(1)), DomainError);
}

TEST_CASE("bridge range invariant on random rational inputs") {
    Rng rng(41);
    for (int i = 0; i < 200; ++i) {
        Rational a = rng.unit_rational(32), b = rng.unit_rational(32);
        if (a == b) continue;
        if (b < a) std::swap(a, b);
        Rational va = rng.value_rational(32, 32), vb = rng.value_rational(32, 32);
        PLFunction f = pl_bridge(a, b, va, vb);
        RangeResult r = f.range(rat(0), rat(1));
        CHECK(r.inf == min(va, vb));
        CHECK(r.sup == max(va, vb));
    }
}

TEST_CASE("nested interval range inclusion") {
    Rng rng(42);
    for (int i = 0; i < 200; ++i) {
        PLFunction f = random_pl(rng);
        Rational a = rng.unit_rational(16), b = rng.unit_rational(16);
        if (b < a) std::swap(a, b);
        Rational a2 = a + (b - a) / rat(3);
        Rational b2 = b - (b - a) / rat(4);
        RangeResult inner = f.range(a2, b2);
        RangeResult outer = f.range(a, b);
        CHECK(outer.inf <= inner.inf);
        CHECK(inner.sup <= outer.sup);
    }
}

TEST_CASE("diameter subadditive under pointwise sum") {
    Rng rng(43);
    for (int i = 0; i < 200; ++i) {
        PLFunction f = random_pl(rng), g = random_pl(rng);
        PLFunction sum = f.plus(g);
        Rational a = rng.unit_rational(16), b = rng.unit_rational(16);
        if (b < a) std::swap(a, b);
        for (RangeMode mode : {RangeMode::IncludeLimits, RangeMode::ValuesOnly}) {
            Rational ds = sum.range(a, b, mode).diameter();
            Rational df = f.range(a, b, mode).diameter();
            Rational dg = g.range(a, b, mode).diameter();
            CHECK(ds <= df + dg);
        }
    }
}

TEST_CASE("combine is pointwise") {
    Rng rng(44);
    for (int i = 0; i < 100; ++i) {
        PLFunction f = random_pl(rng), g = random_pl(rng);
        Rational cf = rng.value_rational(8, 8), cg = rng.value_rational(8, 8);
        std::vector<Rational> cs{cf, cg};
        std::vector<PLFunction> fs{f, g};
        PLFunction h = PLFunction::combine(cs, fs);
        for (int k = 0; k < 8; ++k) {
            Rational x = rng.unit_rational(16);
            CHECK(h.eval(x) == cf * f.eval(x) + cg * g.eval(x));
            if (x > rat(0))
                CHECK(h.eval(x, Side::Left) ==
                      cf * f.eval(x, Side::Left) + cg * g.eval(x, Side::Left));
        }
    }
}

TEST_CASE("replace_on splices exactly") {
    PLFunction id = PLFunction::identity();
    PLFunction br = pl_bridge(rat(1, 4), rat(3, 4), rat(1, 4), rat(3, 4));
    PLFunction same = id.replace_on(rat(1, 4), rat(3, 4), br);
    CHECK(same.same_function(id));

    // replacing with a mismatched boundary must fail
    PLFunction bad = pl_bridge(rat(1, 4), rat(3, 4), rat(0), rat(1));
    CHECK_THROWS_AS(id.replace_on(rat(1, 4), rat(3, 4), bad), DomainError);

    // unglued seam at the domain edge: value at 0 may change
    PLFunction slope = pl_bridge(rat(0), rat(1, 4), rat(5), rat(1, 4));
    PLFunction spliced = id.replace_on(rat(0), rat(1, 4), slope, false, true);
    CHECK_THROWS_AS(id.replace_on(rat(0), rat(1, 4), slope), DomainError);
    CHECK(spliced.eval(rat(0)) == rat(5));
    CHECK(spliced.eval(rat(1, 8)) == (rat(5) + rat(1, 4)) / rat(2));
    CHECK(spliced.eval(rat(1, 2)) == rat(1, 2));
}

TEST_CASE("canonicalized drops removable points") {
    PLFunction id = PLFunction::identity();
    PLFunction redundant({{rat(0), rat(0), rat(0), rat(0)},
                          {rat(1, 2), rat(1, 2), rat(1, 2), rat(1, 2)},
                          {rat(1), rat(1), rat(1), rat(1)}});
    CHECK(redundant.canonicalized().breakpoints().size() == 2);
    CHECK(redundant.same_function(id));
    CHECK_FALSE(redundant == id);  // structural equality still sees the point
}
