#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pretop/nerve.hpp"
#include "pretop/verify.hpp"

using namespace pretop;

namespace {

// Brute-force oracle: realize the model space (simplex or cube) with the
// spaces module and filter every assignment through the raw continuity
// definition.
ClosureSpace simplex_model(Interval j, int n) {
    return j == Interval::J1 ? standard_space(StandardKind::JTop, n)
                             : standard_space(StandardKind::JLe, n);
}

std::vector<std::vector<int>> all_assignments(int positions, int values) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<size_t>(positions), 0);
    for (;;) {
        out.push_back(cur);
        int k = positions - 1;
        while (k >= 0 && ++cur[static_cast<size_t>(k)] == values) {
            cur[static_cast<size_t>(k)] = 0;
            --k;
        }
        if (k < 0) break;
    }
    return out;
}

std::vector<Simplex> oracle_simplices(const ClosureSpace& x, Interval j, int n) {
    ClosureSpace model = simplex_model(j, n);
    std::vector<Simplex> out;
    for (auto& a : all_assignments(n + 1, x.size()))
        if (is_continuous(SpaceMap(model, x, a))) out.push_back(Simplex{a});
    return out;
}

std::vector<Cube> oracle_cubes(const ClosureSpace& x, Interval j, ProductKind p, int n) {
    ClosureSpace model = power_space(interval_space(j), n, p);
    std::vector<Cube> out;
    for (auto& a : all_assignments(1 << n, x.size())) {
        // corner w of the power space has index w with the FIRST coordinate
        // most significant (left fold); our cubes use least significant.
        std::vector<int> reordered(a.size());
        for (unsigned w = 0; w < a.size(); ++w) {
            unsigned rev = 0;
            for (int b = 0; b < n; ++b)
                if (w & (1u << b)) rev |= 1u << (n - 1 - b);
            reordered[w] = a[rev];
        }
        if (is_continuous(SpaceMap(model, x, a)))
            out.push_back(Cube{n, reordered});
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_CASE("simplices of JPlus") {
    ClosureSpace jp = jplus_space();
    auto j1_simp = enumerate_simplices(jp, Interval::J1, 1);
    REQUIRE(j1_simp.size() == 2);
    CHECK(j1_simp[0].vertices == std::vector<int>{0, 0});
    CHECK(j1_simp[1].vertices == std::vector<int>{1, 1});
    auto jp_simp = enumerate_simplices(jp, Interval::JPlus, 1);
    REQUIRE(jp_simp.size() == 3);
    CHECK(jp_simp[0].vertices == std::vector<int>{0, 0});
    CHECK(jp_simp[1].vertices == std::vector<int>{0, 1});
    CHECK(jp_simp[2].vertices == std::vector<int>{1, 1});
    CHECK(enumerate_simplices(jp, Interval::J1, 0).size() == 2);
}

TEST_CASE("enumeration agrees with the raw continuity oracle") {
    std::mt19937_64 rng(37);
    RandomSpaceOptions opt;
    opt.min_points = 1;
    opt.max_points = 4;
    for (int trial = 0; trial < 12; ++trial) {
        ClosureSpace x = random_space(rng, opt);
        for (Interval j : {Interval::J1, Interval::JPlus}) {
            for (int n = 0; n <= 2; ++n) {
                auto ours = enumerate_simplices(x, j, n);
                auto oracle = oracle_simplices(x, j, n);
                CHECK(ours == oracle);
            }
            for (ProductKind p : {ProductKind::Cross, ProductKind::Inductive})
                for (int n = 0; n <= 2; ++n) {
                    auto ours = enumerate_cubes(x, j, p, n);
                    auto oracle = oracle_cubes(x, j, p, n);
                    CHECK(ours == oracle);
                }
        }
    }
}

TEST_CASE("derived cube characterizations match raw continuity in dim 3") {
    std::mt19937_64 rng(41);
    RandomSpaceOptions opt;
    opt.min_points = 2;
    opt.max_points = 3;
    for (int trial = 0; trial < 4; ++trial) {
        ClosureSpace x = random_space(rng, opt);
        for (Interval j : {Interval::J1, Interval::JPlus})
            for (ProductKind p : {ProductKind::Cross, ProductKind::Inductive})
                CHECK(enumerate_cubes(x, j, p, 3) == oracle_cubes(x, j, p, 3));
    }
}

TEST_CASE("cube counts from the examples") {
    ClosureSpace j1 = j1_space();
    CHECK(enumerate_cubes(j1, Interval::J1, ProductKind::Inductive, 1).size() == 4);
    ClosureSpace jp = jplus_space();
    auto cubes = enumerate_cubes(jp, Interval::JPlus, ProductKind::Inductive, 1);
    REQUIRE(cubes.size() == 3);
    CHECK(enumerate_cubes(jp, Interval::JPlus, ProductKind::Inductive, 0).size() == 2);
}

TEST_CASE("simplex faces and degeneracies") {
    Simplex s{{3, 5, 7}};
    CHECK(simplex_face(s, 1).vertices == std::vector<int>{3, 7});
    CHECK(simplex_degeneracy(Simplex{{3, 5}}, 0).vertices == std::vector<int>{3, 3, 5});
    CHECK_THROWS_AS(simplex_face(s, 3), input_error);
    // d_i d_j = d_{j-1} d_i for i < j
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<int> v(0, 9);
    for (int trial = 0; trial < 50; ++trial) {
        Simplex t{{v(rng), v(rng), v(rng), v(rng)}};
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j <= 3; ++j)
                CHECK(simplex_face(simplex_face(t, j), i) ==
                      simplex_face(simplex_face(t, i), j - 1));
        // s_j then face identities
        for (int i = 0; i <= 3; ++i) {
            CHECK(simplex_face(simplex_degeneracy(t, i), i) == t);
            CHECK(simplex_face(simplex_degeneracy(t, i), i + 1) == t);
        }
    }
}

TEST_CASE("cube faces, degeneracies, connections") {
    // 1-cube p -> q
    Cube pq{1, {3, 8}};
    CHECK(cube_face(pq, 1, 0).corners == std::vector<int>{3});
    CHECK(cube_face(pq, 1, 1).corners == std::vector<int>{8});
    Cube deg = cube_degeneracy(Cube{0, {5}}, 1);
    CHECK(deg.corners == std::vector<int>{5, 5});
    CHECK(is_degenerate(deg));
    CHECK_FALSE(is_degenerate(pq));

    // identity 2-cube of J1 [] J1 is not degenerate
    ClosureSpace box = inductive_product_space(j1_space(), j1_space());
    // corner (a1,a2) -> point a1 + 2 a2? our product index is x*ny + y; the
    // identity cube assigns corner w to the point with the same coordinates
    Cube identity2{2, {0, 2, 1, 3}};
    CHECK(is_valid_cube(box, Interval::J1, ProductKind::Inductive, 2, identity2.corners));
    CHECK_FALSE(is_degenerate(identity2));

    // connections on a 1-cube: min table and max table
    Cube gmin = cube_connection(pq, 1, 1);
    CHECK(gmin.corners == std::vector<int>{3, 3, 3, 8});
    Cube gmax = cube_connection(pq, 1, 0);
    CHECK(gmax.corners == std::vector<int>{3, 8, 8, 8});
    Cube constant{1, {4, 4}};
    CHECK(cube_connection(constant, 1, 0).corners == std::vector<int>(4, 4));

    // face/degeneracy indices out of range
    CHECK_THROWS_AS(cube_face(pq, 2, 0), input_error);
    CHECK_THROWS_AS(cube_connection(pq, 2, 1), input_error);
}

TEST_CASE("cubical identities on random cubes") {
    std::mt19937_64 rng(47);
    std::uniform_int_distribution<int> v(0, 9);
    for (int trial = 0; trial < 40; ++trial) {
        Cube q{3, {}};
        for (int i = 0; i < 8; ++i) q.corners.push_back(v(rng));
        // A_i^n A_j^{n+1} = A_j^... : d_(i,e) d_(j,d) = d_(j-1,d) d_(i,e) for i < j
        for (int i = 1; i <= 2; ++i)
            for (int j = i + 1; j <= 3; ++j)
                for (int e = 0; e <= 1; ++e)
                    for (int d = 0; d <= 1; ++d)
                        CHECK(cube_face(cube_face(q, j, d), i, e) ==
                              cube_face(cube_face(q, i, e), j - 1, d));
        // s_j d_(j,e) = id
        for (int j = 1; j <= 4; ++j) {
            Cube up = cube_degeneracy(q, j);
            CHECK(cube_face(up, j, 0) == q);
            CHECK(cube_face(up, j, 1) == q);
        }
        // connection transpositions: same side for i <= j, mixed sides for
        // i < j (mixed at i = j genuinely fails for the min/max realization)
        for (int i = 1; i <= 3; ++i)
            for (int j = i; j <= 3; ++j)
                for (int e = 0; e <= 1; ++e)
                    for (int d = 0; d <= 1; ++d) {
                        if (e != d && i == j) continue;
                        CHECK(cube_connection(cube_connection(q, j, d), i, e) ==
                              cube_connection(cube_connection(q, i, e), j + 1, d));
                    }
        // d_(i,e) G_i = id and d_(i+1,e) G_i = id for matching sides
        for (int i = 1; i <= 3; ++i)
            for (int e = 0; e <= 1; ++e) {
                CHECK(cube_face(cube_connection(q, i, e), i, e) == q);
                CHECK(cube_face(cube_connection(q, i, e), i + 1, e) == q);
            }
    }
}

TEST_CASE("comparison cube") {
    Simplex seg{{3, 8}};
    CHECK(comparison_cube(seg).corners == std::vector<int>{3, 8});
    Simplex tri{{1, 2, 3}};
    Cube c = comparison_cube(tri);
    // corners in word order (00, 10, 01, 11) with a1 least significant
    CHECK(c.corners == std::vector<int>{1, 2, 1, 3});

    // f d_i = B_{i+1} f for i < n and f d_n = A_n f
    std::mt19937_64 rng(53);
    std::uniform_int_distribution<int> v(0, 9);
    for (int trial = 0; trial < 60; ++trial) {
        Simplex s{{v(rng), v(rng), v(rng)}};
        for (int i = 0; i <= 1; ++i)
            CHECK(comparison_cube(simplex_face(s, i)) ==
                  cube_face(comparison_cube(s), i + 1, 1));
        CHECK(comparison_cube(simplex_face(s, 2)) == cube_face(comparison_cube(s), 2, 0));
    }

    // injectivity on each dimension over a small alphabet
    for (int n = 1; n <= 2; ++n) {
        auto tuples = all_assignments(n + 1, 3);
        std::vector<Cube> seen;
        for (auto& t : tuples) seen.push_back(comparison_cube(Simplex{t}));
        std::sort(seen.begin(), seen.end());
        CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
    }
}

TEST_CASE("comparison cubes remain valid and nondegenerate") {
    std::mt19937_64 rng(59);
    RandomSpaceOptions opt;
    opt.min_points = 2;
    opt.max_points = 4;
    for (int trial = 0; trial < 10; ++trial) {
        ClosureSpace x = random_space(rng, opt);
        for (Interval j : {Interval::J1, Interval::JPlus})
            for (int n = 1; n <= 2; ++n)
                for (const Simplex& s : enumerate_simplices(x, j, n)) {
                    Cube c = comparison_cube(s);
                    CHECK(is_valid_cube(x, j, ProductKind::Cross, n, c.corners));
                    if (!is_degenerate(s)) CHECK_FALSE(is_degenerate(c));
                }
    }
}

TEST_CASE("postcomposition") {
    ClosureSpace c5 = cycle_space(5);
    Simplex s{{0, 1}};
    SpaceMap id = SpaceMap::identity(c5);
    CHECK(postcompose(s, id) == s);
    SpaceMap konst = SpaceMap::constant(c5, c5, 2);
    Cube q{1, {0, 1}};
    Cube qc = postcompose(q, konst);
    CHECK(is_degenerate(qc));
    SpaceMap bad(jplus_space(), jplus_space(), {1, 0});
    CHECK_THROWS_AS(postcompose(s, bad), input_error);
}

TEST_CASE("enumeration caps are resource errors") {
    ClosureSpace big = standard_space(StandardKind::Indiscrete, 10);
    EnumLimits tight;
    tight.max_count = 50;
    CHECK_THROWS_AS(enumerate_simplices(big, Interval::J1, 2, tight), resource_error);
    EnumLimits shallow;
    shallow.max_dim = 1;
    CHECK_THROWS_AS(enumerate_cubes(big, Interval::J1, ProductKind::Cross, 2, shallow),
                    resource_error);
    CHECK_THROWS_AS(enumerate_simplices(big, Interval::J1, -1), input_error);
}
