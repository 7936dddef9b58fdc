#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pretop/io.hpp"
#include "pretop/space.hpp"
#include "pretop/verify.hpp"

using namespace pretop;

namespace {

PointMask bits(std::initializer_list<int> points) {
    PointMask m = 0;
    for (int p : points) m |= PointMask{1} << p;
    return m;
}

} // namespace

TEST_CASE("closure of singletons and sets") {
    ClosureSpace jp = jplus_space();
    CHECK(jp.closure(bits({0})) == bits({0, 1}));
    CHECK(jp.closure(0) == 0);
    ClosureSpace c5 = cycle_space(5);
    CHECK(c5.closure(bits({0})) == bits({4, 0, 1}));
    CHECK_THROWS_AS(c5.closure(PointMask{1} << 10), input_error);
}

TEST_CASE("interior examples on JPlus") {
    ClosureSpace jp = jplus_space();
    CHECK(jp.interior(bits({1})) == 0);
    CHECK(jp.interior(bits({0})) == bits({0}));
    CHECK(jp.interior(jp.universe()) == jp.universe());
    CHECK(jp.is_open(bits({0})));
    CHECK(jp.is_closed(bits({1})));
    CHECK(jp.is_open(0));
    CHECK(jp.is_closed(0));
}

TEST_CASE("closure axioms and duality on random spaces") {
    std::mt19937_64 rng(7);
    RandomSpaceOptions opt;
    opt.min_points = 1;
    opt.max_points = 8;
    for (int trial = 0; trial < 300; ++trial) {
        ClosureSpace x = random_space(rng, opt);
        PointMask a = random_subset(rng, x);
        PointMask b = random_subset(rng, x);
        CHECK(x.closure(0) == 0);
        CHECK((a & ~x.closure(a)) == 0);
        CHECK(x.closure(a | b) == (x.closure(a) | x.closure(b)));
        if ((a & ~b) == 0) CHECK((x.closure(a) & ~x.closure(b)) == 0);
        CHECK(x.interior(a) == (x.universe() & ~x.closure(x.universe() & ~a)));
        CHECK(x.closure(a) == (x.universe() & ~x.interior(x.universe() & ~a)));
        CHECK(x.interior(a & b) == (x.interior(a) & x.interior(b)));
        // minimal neighborhoods are the transpose relation
        for (int p = 0; p < x.size(); ++p)
            CHECK((x.closure(a) & (PointMask{1} << p)) ==
                  ((x.minimal_neighborhood(p) & a) ? (PointMask{1} << p) : 0));
    }
}

TEST_CASE("continuity checks") {
    ClosureSpace jp = jplus_space();
    CHECK(is_continuous(SpaceMap::identity(jp)));
    // swap on JPlus is not continuous
    CHECK_FALSE(is_continuous(SpaceMap(jp, jp, {1, 0})));
    // the 'round up' analogue J2 -> JPlus fails the definition check at the
    // middle point: c(1) contains 0 but f(0) = 0 is not in c(f(1)) = {1}
    ClosureSpace j2 = standard_space(StandardKind::JM, 2);
    CHECK_FALSE(is_continuous(SpaceMap(j2, jp, {0, 1, 1})));
}

TEST_CASE("composition of continuous maps is continuous") {
    std::mt19937_64 rng(11);
    RandomSpaceOptions opt;
    opt.max_points = 5;
    for (int trial = 0; trial < 100; ++trial) {
        ClosureSpace x = random_space(rng, opt);
        ClosureSpace y = random_space(rng, opt);
        ClosureSpace z = random_space(rng, opt);
        auto f = random_continuous_map(rng, x, y);
        auto g = random_continuous_map(rng, y, z);
        if (!f || !g) continue;
        CHECK(is_continuous(compose(*g, *f)));
    }
}

TEST_CASE("product closure via minimal neighborhoods") {
    ClosureSpace j1 = j1_space();
    ClosureSpace p = product_space(j1, j1);
    CHECK(p.size() == 4);
    CHECK(p.closure(bits({0})) == p.universe()); // (0,0) closes to everything
    // unitor: X x * = X
    ClosureSpace pt = one_point_space();
    ClosureSpace c5 = cycle_space(5);
    ClosureSpace c5p = product_space(c5, pt);
    for (int i = 0; i < 5; ++i) CHECK(c5p.point_closure(i) == c5.point_closure(i));
    // X x discrete Y = X [] discrete Y
    ClosureSpace d3 = standard_space(StandardKind::Discrete, 3);
    CHECK(product_space(c5, d3).point_names() == inductive_product_space(c5, d3).point_names());
    for (int i = 0; i < 15; ++i)
        CHECK(product_space(c5, d3).point_closure(i) ==
              inductive_product_space(c5, d3).point_closure(i));
}

TEST_CASE("inductive product closure") {
    ClosureSpace j1 = j1_space();
    ClosureSpace b = inductive_product_space(j1, j1);
    // closure of (0,0) = {(0,0),(0,1),(1,0)}
    CHECK(b.closure(bits({0})) == bits({0, 1, 2}));
    // pointwise comparison with the product closure
    std::mt19937_64 rng(3);
    RandomSpaceOptions opt;
    opt.max_points = 4;
    for (int trial = 0; trial < 50; ++trial) {
        ClosureSpace x = random_space(rng, opt);
        ClosureSpace y = random_space(rng, opt);
        ClosureSpace cross = product_space(x, y);
        ClosureSpace ind = inductive_product_space(x, y);
        for (int p = 0; p < cross.size(); ++p)
            CHECK((ind.point_closure(p) & ~cross.point_closure(p)) == 0);
    }
    // X [] * = X
    ClosureSpace pt = one_point_space();
    ClosureSpace c5 = cycle_space(5);
    ClosureSpace c5i = inductive_product_space(c5, pt);
    for (int i = 0; i < 5; ++i) CHECK(c5i.point_closure(i) == c5.point_closure(i));
}

TEST_CASE("projections from the product are continuous and the closure is coarsest") {
    std::mt19937_64 rng(5);
    RandomSpaceOptions opt;
    opt.min_points = 2;
    opt.max_points = 3;
    for (int trial = 0; trial < 40; ++trial) {
        ClosureSpace x = random_space(rng, opt);
        ClosureSpace y = random_space(rng, opt);
        ClosureSpace p = product_space(x, y);
        std::vector<int> px(static_cast<size_t>(p.size())), py(static_cast<size_t>(p.size()));
        for (int i = 0; i < p.size(); ++i) {
            px[static_cast<size_t>(i)] = i / y.size();
            py[static_cast<size_t>(i)] = i % y.size();
        }
        CHECK(is_continuous(SpaceMap(p, x, px)));
        CHECK(is_continuous(SpaceMap(p, y, py)));
        // enlarging any singleton closure breaks a projection witness
        for (int i = 0; i < p.size(); ++i) {
            PointMask extra = p.universe() & ~p.point_closure(i);
            if (!extra) continue;
            int added = mask_to_points(extra)[0];
            std::vector<PointMask> closures;
            for (int q = 0; q < p.size(); ++q) closures.push_back(p.point_closure(q));
            closures[static_cast<size_t>(i)] |= PointMask{1} << added;
            ClosureSpace bigger(p.point_names(), closures);
            bool both = is_continuous(SpaceMap(bigger, x, px)) &&
                        is_continuous(SpaceMap(bigger, y, py));
            CHECK_FALSE(both);
        }
    }
}

TEST_CASE("coproduct and injections") {
    ClosureSpace jp = jplus_space();
    CoproductResult cp = coproduct_space(jp, jp);
    CHECK(cp.space.size() == 4);
    CHECK(is_continuous(cp.into_first));
    CHECK(is_continuous(cp.into_second));
    CHECK(cp.space.closure(cp.into_first.image(bits({0}))) == bits({0, 1}));
}

TEST_CASE("pushouts build the generalized intervals") {
    ClosureSpace j1 = j1_space();
    ClosureSpace pt = one_point_space();
    // J1 * J1 glued 1 -> 0 gives J2
    SpaceMap at1(pt, j1, {1});
    SpaceMap at0(pt, j1, {0});
    PushoutResult p = pushout_space(at1, at0);
    ClosureSpace j2 = standard_space(StandardKind::JM, 2);
    REQUIRE(p.space.size() == 3);
    // match up to the canonical renaming: order is 0:0 < 0:1~1:0 < 1:1
    CHECK(p.space.point_closure(0) == bits({0, 1}));
    CHECK(p.space.point_closure(1) == bits({0, 1, 2}));
    CHECK(p.space.point_closure(2) == bits({1, 2}));
    CHECK(j2.point_closure(0) == bits({0, 1}));

    // JPlus * JMinus glued gives J_{2,1}
    ClosureSpace jplus = jplus_space();
    ClosureSpace jminus = standard_space(StandardKind::JMinus, 1);
    PushoutResult q = pushout_space(SpaceMap(pt, jplus, {1}), SpaceMap(pt, jminus, {0}));
    ClosureSpace j21 = standard_space(StandardKind::JMK, 2, 1);
    REQUIRE(q.space.size() == 3);
    CHECK(q.space.point_closure(0) == bits({0, 1}));
    CHECK(q.space.point_closure(1) == bits({1}));
    CHECK(q.space.point_closure(2) == bits({1, 2}));
    CHECK(j21.point_closure(0) == bits({0, 1}));
    CHECK(j21.point_closure(1) == bits({1}));
    CHECK(j21.point_closure(2) == bits({1, 2}));

    // pushout along identities is the original space
    ClosureSpace c5 = cycle_space(5);
    PushoutResult r = pushout_space(SpaceMap::identity(c5), SpaceMap::identity(c5));
    CHECK(r.space.size() == c5.size());
    for (int i = 0; i < 5; ++i) CHECK(r.space.point_closure(i) == c5.point_closure(i));

    CHECK_THROWS_AS(pushout_space(SpaceMap(jplus, jplus, {1, 0}), SpaceMap::identity(jplus)),
                    input_error);
}

TEST_CASE("quotient by a subspace") {
    ClosureSpace c5 = cycle_space(5);
    QuotientResult whole = quotient_by_subspace(SpacePair(c5, c5.universe()));
    CHECK(whole.space.size() == 1);

    ClosureSpace p3 = path_space(3);
    QuotientResult q = quotient_by_subspace(SpacePair(p3, bits({0, 2})));
    REQUIRE(q.space.size() == 2);
    CHECK(q.space.point_closure(0) == bits({0, 1}));
    CHECK(q.space.point_closure(1) == bits({0, 1}));
    CHECK(is_continuous(q.projection));

    CHECK_THROWS_AS(quotient_by_subspace(SpacePair(p3, 0)), input_error);
}

TEST_CASE("subspace closure") {
    ClosureSpace jp = jplus_space();
    ClosureSpace full = subspace(jp, jp.universe());
    CHECK(full == jp);
    CHECK(subspace(jp, bits({1})).size() == 1);
    ClosureSpace c5 = cycle_space(5);
    ClosureSpace p3 = subspace(c5, bits({0, 1, 2}));
    ClosureSpace path3 = path_space(3);
    for (int i = 0; i < 3; ++i) CHECK(p3.point_closure(i) == path3.point_closure(i));
}

TEST_CASE("topological modification") {
    ClosureSpace jp = jplus_space();
    CHECK(jp.is_topological());
    CHECK(topological_modification(jp) == jp);

    ClosureSpace j1 = j1_space();
    ClosureSpace box = inductive_product_space(j1, j1);
    CHECK_FALSE(box.is_topological());
    ClosureSpace tau = topological_modification(box);
    CHECK(tau.is_topological());
    for (int i = 0; i < 4; ++i) CHECK(tau.point_closure(i) == tau.universe());

    ClosureSpace jpbox = inductive_product_space(jplus_space(), jplus_space());
    ClosureSpace jptau = topological_modification(jpbox);
    ClosureSpace jpcross = product_space(jplus_space(), jplus_space());
    CHECK(jptau == jpcross);
}

TEST_CASE("topological modification is minimal among topological coarsenings") {
    std::mt19937_64 rng(13);
    RandomSpaceOptions opt;
    opt.min_points = 2;
    opt.max_points = 4;
    for (int trial = 0; trial < 30; ++trial) {
        ClosureSpace x = random_space(rng, opt);
        ClosureSpace tau = topological_modification(x);
        CHECK(tau.is_topological());
        for (int p = 0; p < x.size(); ++p)
            CHECK((x.point_closure(p) & ~tau.point_closure(p)) == 0);
        // brute force: every topological closure coarser than x is coarser
        // than tau as well
        const int n = x.size();
        const int pairs = n * (n - 1);
        for (int code = 0; code < (1 << pairs); ++code) {
            std::vector<PointMask> cl(static_cast<size_t>(n));
            int bit = 0;
            for (int i = 0; i < n; ++i) cl[static_cast<size_t>(i)] = PointMask{1} << i;
            for (int i = 0; i < n; ++i)
                for (int k = 0; k < n; ++k) {
                    if (i == k) continue;
                    if ((code >> bit) & 1) cl[static_cast<size_t>(i)] |= PointMask{1} << k;
                    ++bit;
                }
            ClosureSpace cand(x.point_names(), cl);
            if (!cand.is_topological()) continue;
            bool coarser_than_x = true;
            for (int p = 0; p < n; ++p)
                coarser_than_x &= (x.point_closure(p) & ~cand.point_closure(p)) == 0;
            if (!coarser_than_x) continue;
            for (int p = 0; p < n; ++p)
                CHECK((tau.point_closure(p) & ~cand.point_closure(p)) == 0);
        }
        if (x.size() >= 4) break; // one exhaustive 4-point instance is plenty
    }
}

TEST_CASE("interior covers") {
    ClosureSpace box = inductive_product_space(jplus_space(), jplus_space());
    // points in order: (0,0),(0,1),(1,0),(1,1)
    Cover good{box, {bits({0}), bits({0, 2}), bits({0, 1}), bits({1, 3, 2})}};
    CHECK(is_interior_cover(good));

    ClosureSpace c6 = cycle_space(6);
    Cover arcs{c6, {bits({5, 0, 1, 2, 3}), bits({2, 3, 4, 5, 0})}};
    CHECK(is_interior_cover(arcs));
    CHECK(c6.interior(bits({5, 0, 1, 2, 3})) == bits({0, 1, 2}));
    CHECK(c6.interior(bits({2, 3, 4, 5, 0})) == bits({3, 4, 5}));
    Cover bad{c6, {bits({0, 1}), bits({2, 3, 4, 5})}};
    CHECK_FALSE(is_interior_cover(bad));
}

TEST_CASE("standard spaces") {
    CHECK(standard_space(StandardKind::JMK, 1, 1) == jplus_space());
    CHECK(standard_space(StandardKind::JTop, 1) == j1_space());
    ClosureSpace jle = standard_space(StandardKind::JLe, 1);
    CHECK(jle == jplus_space());
    CHECK_THROWS_AS(standard_space(StandardKind::JMK, 2, 4), input_error);
    ClosureSpace jm = standard_space(StandardKind::JM, 3);
    CHECK(jm.point_closure(1) == bits({0, 1, 2}));
}

TEST_CASE("powers") {
    ClosureSpace j1 = j1_space();
    ClosureSpace sq = power_space(j1, 2, ProductKind::Cross);
    for (int i = 0; i < 4; ++i) CHECK(sq.point_closure(i) == sq.universe());
    ClosureSpace jb = power_space(jplus_space(), 2, ProductKind::Inductive);
    CHECK(jb.closure(bits({0})) == bits({0, 1, 2}));
    CHECK(power_space(j1, 0, ProductKind::Cross).size() == 1);
    CHECK(power_space(j1, 0, ProductKind::Inductive).size() == 1);
}

TEST_CASE("coproduct universal property on small spaces") {
    std::mt19937_64 rng(17);
    RandomSpaceOptions opt;
    opt.min_points = 1;
    opt.max_points = 3;
    for (int trial = 0; trial < 30; ++trial) {
        ClosureSpace a = random_space(rng, opt);
        ClosureSpace b = random_space(rng, opt);
        ClosureSpace z = random_space(rng, opt);
        CoproductResult cp = coproduct_space(a, b);
        for (const auto& fa : enumerate_continuous_maps(a, z))
            for (const auto& fb : enumerate_continuous_maps(b, z)) {
                std::vector<int> h(fa);
                h.insert(h.end(), fb.begin(), fb.end());
                // the induced map must be continuous, and it is the only
                // candidate commuting with both injections
                CHECK(is_continuous(SpaceMap(cp.space, z, h)));
            }
        if (trial > 5) break; // enumeration is exponential; a few suffice
    }
}

TEST_CASE("pushout universal property on small spaces") {
    std::mt19937_64 rng(19);
    RandomSpaceOptions opt;
    opt.min_points = 1;
    opt.max_points = 2;
    int checked = 0;
    while (checked < 8) {
        ClosureSpace a = random_space(rng, opt);
        ClosureSpace x = random_space(rng, opt);
        ClosureSpace y = random_space(rng, opt);
        auto f = random_continuous_map(rng, a, x);
        auto g = random_continuous_map(rng, a, y);
        if (!f || !g) continue;
        ++checked;
        PushoutResult p = pushout_space(*f, *g);
        CHECK(is_continuous(p.from_first));
        CHECK(is_continuous(p.from_second));
        ClosureSpace z = random_space(rng, opt);
        for (const auto& zx : enumerate_continuous_maps(x, z))
            for (const auto& zy : enumerate_continuous_maps(y, z)) {
                bool commutes = true;
                for (int i = 0; i < a.size() && commutes; ++i)
                    commutes = zx[static_cast<size_t>((*f)(i))] ==
                               zy[static_cast<size_t>((*g)(i))];
                if (!commutes) continue;
                // the unique factoring map through the pushout is continuous
                std::vector<int> u(static_cast<size_t>(p.space.size()), -1);
                for (int i = 0; i < x.size(); ++i)
                    u[static_cast<size_t>(p.from_first(i))] = zx[static_cast<size_t>(i)];
                for (int i = 0; i < y.size(); ++i)
                    u[static_cast<size_t>(p.from_second(i))] = zy[static_cast<size_t>(i)];
                CHECK(is_continuous(SpaceMap(p.space, z, u)));
            }
    }
}

TEST_CASE("space json round trip") {
    ClosureSpace c5 = cycle_space(5);
    Json j = space_to_json(c5);
    ClosureSpace back = space_from_json(j);
    CHECK(back == c5);
    CHECK(space_to_json(back) == j);

    Json broken = j;
    broken["closure"]["0"] = Json::array({"1"}); // drops the reflexive loop
    CHECK_THROWS_AS(space_from_json(broken), input_error);
    Json unknown = j;
    unknown["closure"]["0"].push_back("nope");
    CHECK_THROWS_AS(space_from_json(unknown), input_error);
}

TEST_CASE("point cap is a resource error") {
    std::vector<std::string> names;
    std::vector<PointMask> cl;
    for (int i = 0; i < 65; ++i) names.push_back("q" + std::to_string(i));
    CHECK_THROWS_AS(ClosureSpace(names, std::vector<PointMask>(65, 1)), resource_error);
}
