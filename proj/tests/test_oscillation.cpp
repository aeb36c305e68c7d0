#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "fiberosc/generators.hpp"
#include "fiberosc/oscillation.hpp"
#include "test_support.hpp"

using namespace fiberosc;
using namespace fiberosc::testing;

TEST_CASE("oscillate: diameters match the refinement oracle") {
    RepresentableFunction h1 = make_h1();
    OscillationProfile p = oscillate(h1);
    REQUIRE(p.support.size() == 1);
    CHECK(p.value_at(rat(1, 2)) == rat(1));
    // oracle: diameter over the fiber grid including all fiber breakpoints
    CHECK(oracle_grid_diameter(h1, rat(1, 2), {rat(0), rat(1, 2), rat(1)}) == rat(1));

    RepresentableFunction c;
    c.space = FiberedSpaceModel::lex_square();
    c.base = PLFunction::constant(rat(3));
    CHECK(oscillate(c).support.empty());

    RepresentableFunction h2 = make_h2();
    OscillationProfile p2 = oscillate(h2);
    REQUIRE(p2.support.size() == 1);
    CHECK(p2.value_at(rat(1, 4)) == rat(7, 12) - rat(1, 4));
    CHECK(p2.value_at(rat(1, 4)) == rat(1, 3));
}

TEST_CASE("oscillate: zero-oscillation actives are pruned") {
    RepresentableFunction h;
    h.space = FiberedSpaceModel::lex_square();
    h.base = PLFunction::constant(rat(2));
    h.fibers.emplace(rat(1, 2), FiberData::interval(PLFunction::constant(rat(2))));
    REQUIRE(validate(h).empty());
    CHECK(oscillate(h).support.empty());
}

TEST_CASE("level sets: threshold filtering") {
    RepresentableFunction h4 = make_h4();
    LevelSet ls = level_set(h4, rat(1, 3));
    REQUIRE(ls.points.size() == 1);
    CHECK(ls.points[0] == rat(1, 3));

    // epsilon above twice the sup norm empties every level set
    Rational eps = rat(2) * sup_norm(h4) + rat(1);
    CHECK(level_set(h4, eps).points.empty());

    CHECK_THROWS_AS(level_set(h4, rat(0)), DomainError);
    CHECK_THROWS_AS(level_set(h4, rat(-1)), DomainError);
}

TEST_CASE("level sets: product witness") {
    RepresentableFunction py = make_product_y();
    LevelSet ls = level_set(py, rat(1));
    REQUIRE(ls.is_infinite());
    CHECK(ls.infinite->interval == BaseInterval::whole());
    CHECK(ls.infinite->epsilon == rat(1));
    CHECK(level_set(py, rat(2)).points.empty());
    CHECK_FALSE(level_set(py, rat(2)).is_infinite());
}

TEST_CASE("c0 membership certificates") {
    RepresentableFunction h1 = make_h1();
    C0Certificate c1 = in_c0(h1);
    CHECK(c1.member);
    REQUIRE(c1.chain.size() == 1);
    CHECK(c1.chain[0].first == 1);
    CHECK(c1.chain[0].second == std::vector<Rational>{rat(1, 2)});

    RepresentableFunction py = make_product_y();
    C0Certificate cp = in_c0(py);
    CHECK_FALSE(cp.member);
    REQUIRE(cp.witness.has_value());
    CHECK(cp.witness->epsilon == rat(1));

    RepresentableFunction c;
    c.space = FiberedSpaceModel::lex_square();
    c.base = PLFunction::constant(rat(5));
    C0Certificate cc = in_c0(c);
    CHECK(cc.member);
    REQUIRE(cc.chain.size() == 1);
    CHECK(cc.chain[0].second.empty());

    RepresentableFunction h4 = make_h4();
    C0Certificate c4 = in_c0(h4);
    std::vector<long> ms;
    for (const auto& [m, km] : c4.chain) ms.push_back(m);
    CHECK(ms == std::vector<long>{1, 2, 4});
}

TEST_CASE("boundedness: oscillation never exceeds twice the sup norm") {
    Rng rng(21);
    for (const FiberedSpaceModel& m :
         {FiberedSpaceModel::lex_square(), FiberedSpaceModel::double_arrow(),
          FiberedSpaceModel::double_circle()}) {
        for (int i = 0; i < 150; ++i) {
            RepresentableFunction h = random_function(rng, m);
            OscillationProfile p = oscillate(h);
            CHECK(p.sup_value() <= rat(2) * sup_norm(h));
        }
    }
}

TEST_CASE("seminorm laws of the pointwise oscillation") {
    Rng rng(22);
    for (const FiberedSpaceModel& m :
         {FiberedSpaceModel::lex_square(), FiberedSpaceModel::double_arrow(),
          FiberedSpaceModel::double_circle()}) {
        for (int i = 0; i < 80; ++i) {
            RepresentableFunction f = random_function(rng, m);
            RepresentableFunction g = random_function(rng, m);
            Rational lam = rng.value_rational(8, 8);
            RepresentableFunction sum = linear_combine(std::vector<Rational>{rat(1), rat(1)},
                                                       std::vector<RepresentableFunction>{f, g});
            RepresentableFunction lf = linear_combine(std::vector<Rational>{lam},
                                                      std::vector<RepresentableFunction>{f});
            OscillationProfile pf = oscillate(f), pg = oscillate(g), ps = oscillate(sum),
                               pl = oscillate(lf);
            std::vector<Rational> ys = pf.support_points();
            for (const Rational& y : pg.support_points()) ys.push_back(y);
            for (const Rational& y : ps.support_points()) ys.push_back(y);
            for (const Rational& y : ys) {
                CHECK(ps.value_at(y) <= pf.value_at(y) + pg.value_at(y));
                CHECK(pl.value_at(y) == lam.abs() * pf.value_at(y));
            }
        }
    }
}

TEST_CASE("level sets shrink as epsilon grows") {
    Rng rng(23);
    auto lex = FiberedSpaceModel::lex_square();
    for (int i = 0; i < 80; ++i) {
        RepresentableFunction h = random_function(rng, lex);
        Rational e1 = Rational(rng.pick(1, 8), rng.pick(8, 64));
        Rational e2 = e1 + Rational(rng.pick(1, 8), 8);
        LevelSet big = level_set(h, e1);   // smaller threshold, bigger set
        LevelSet small = level_set(h, e2);
        CHECK(std::includes(big.points.begin(), big.points.end(), small.points.begin(),
                            small.points.end()));
        CHECK(big.points.size() <= h.fibers.size());
    }
}

TEST_CASE("monotone grid exhaustion of the fiber diameter") {
    RepresentableFunction h4 = make_h4();
    const Rational at = rat(1, 3);
    std::vector<Rational> grid{rat(0), rat(1)};
    Rational prev = oracle_grid_diameter(h4, at, grid);
    Rational osc = oscillate(h4).value_at(at);
    CHECK(prev <= osc);
    for (const Rational& refine : {rat(1, 4), rat(3, 4), rat(1, 2), rat(7, 8)}) {
        grid.push_back(refine);
        Rational d = oracle_grid_diameter(h4, at, grid);
        CHECK(prev <= d);   // nondecreasing under grid inclusion
        CHECK(d <= osc);    // never exceeds the true oscillation
        prev = d;
    }
    // once the grid holds every vertex of the fiber function the diameter
    // is attained exactly
    CHECK(prev == osc);

    Rng rng(24);
    auto lex = FiberedSpaceModel::lex_square();
    for (int i = 0; i < 40; ++i) {
        RepresentableFunction h = random_function(rng, lex);
        for (const auto& [a, fd] : h.fibers) {
            if (!fd.pl) continue;
            std::vector<Rational> g{rat(0), rat(1)};
            Rational last = oracle_grid_diameter(h, a, g);
            for (const Breakpoint& bp : fd.pl->breakpoints()) {
                g.push_back(bp.x);
                Rational d = oracle_grid_diameter(h, a, g);
                CHECK(last <= d);
                last = d;
            }
            CHECK(last == oscillate(h).value_at(a));
        }
    }
}

TEST_CASE("full closedness: the three models certify, the product refutes") {
    FullClosednessResult lex = full_closedness(FiberedSpaceModel::lex_square(), 5);
    CHECK(lex.fully_closed);
    CHECK(lex.sampled == 32);

    CHECK(full_closedness(FiberedSpaceModel::double_arrow(), 5).fully_closed);
    CHECK(full_closedness(FiberedSpaceModel::double_circle(), 5).fully_closed);

    FullClosednessResult prod = full_closedness(FiberedSpaceModel::product_square());
    CHECK_FALSE(prod.fully_closed);
    REQUIRE(prod.witness.has_value());
    const NotFullyClosedWitness& w = *prod.witness;
    // disjoint closed strips
    CHECK(w.set_a.fiber_coord != w.set_b.fiber_coord);
    // the separating function is 0 on A and 1 on B
    CHECK(eval(w.separating, XPoint::on_interval(rat(1, 3), w.set_a.fiber_coord)) == rat(0));
    CHECK(eval(w.separating, XPoint::on_interval(rat(1, 3), w.set_b.fiber_coord)) == rat(1));
    // its level set at epsilon = 1 is infinite
    LevelSet ls = level_set(w.separating, w.epsilon);
    CHECK(ls.is_infinite());
    // both strips project onto the whole base
    CHECK(w.common_image == BaseInterval::whole());
    CHECK(w.set_a.base == BaseInterval::whole());
}
