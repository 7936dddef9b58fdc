#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pretop/exact.hpp"

using namespace pretop;

namespace {

Mat64 from_rows(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    Mat64 m(static_cast<int>(rows.size()),
            rows.size() ? static_cast<int>(rows.begin()->size()) : 0);
    int i = 0;
    for (auto& row : rows) {
        int j = 0;
        for (std::int64_t v : row) m.at(i, j++) = v;
        ++i;
    }
    return m;
}

// Independent oracle: rank by fraction-free (Bareiss) elimination.
int bareiss_rank(const Mat64& input) {
    MatZ m = to_bigint(input);
    int rank = 0;
    BigInt prev = 1;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int pivot = -1;
        for (int i = rank; i < m.rows; ++i)
            if (!m.at(i, col).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
        for (int i = rank + 1; i < m.rows; ++i) {
            for (int j = col + 1; j < m.cols; ++j)
                m.at(i, j) = (m.at(rank, col) * m.at(i, j) - m.at(i, col) * m.at(rank, j)) / prev;
            m.at(i, col) = 0;
        }
        prev = m.at(rank, col);
        ++rank;
    }
    return rank;
}

BigInt det_bareiss(const MatZ& input) {
    MatZ m = input;
    const int n = m.rows;
    BigInt prev = 1;
    BigInt sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k).is_zero()) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m.at(i, k).is_zero()) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(k, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j)) / prev;
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

void check_snf(const Mat64& m) {
    SnfResult s = smith_normal_form(m);
    // d = u m v
    MatZ left = multiply(s.u, multiply(to_bigint(m), s.v));
    CHECK(left == s.d);
    // diagonal with the divisibility chain
    for (int i = 0; i < s.d.rows; ++i)
        for (int j = 0; j < s.d.cols; ++j)
            if (i != j) CHECK(s.d.at(i, j).is_zero());
    for (size_t i = 0; i + 1 < s.invariants.size(); ++i) {
        CHECK(s.invariants[i] > 0);
        CHECK(s.invariants[i + 1] % s.invariants[i] == 0);
    }
    BigInt du = det_bareiss(s.u), dv = det_bareiss(s.v);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    CHECK(static_cast<int>(s.invariants.size()) == bareiss_rank(m));
}

} // namespace

TEST_CASE("identity is its own smith form") {
    Mat64 eye = Mat64::identity(4);
    SnfResult s = smith_normal_form(eye);
    CHECK(s.rank == 4);
    for (int i = 0; i < 4; ++i) CHECK(s.d.at(i, i) == 1);
}

TEST_CASE("hand-eliminated 2x2") {
    Mat64 m = from_rows({{1, 1}, {1, -1}});
    SnfResult s = smith_normal_form(m);
    REQUIRE(s.invariants.size() == 2);
    CHECK(s.invariants[0] == 1);
    CHECK(s.invariants[1] == 2);
    check_snf(m);
}

TEST_CASE("zero and empty matrices") {
    Mat64 zero(3, 2);
    SnfResult s = smith_normal_form(zero);
    CHECK(s.rank == 0);
    CHECK(s.invariants.empty());
    Mat64 empty(0, 5);
    CHECK(smith_normal_form(empty).rank == 0);
    CHECK(rank_over_z(empty) == 0);
}

TEST_CASE("random matrices: d = u m v with unimodular transforms") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> dim(1, 6);
    std::uniform_int_distribution<std::int64_t> entry(-9, 9);
    for (int trial = 0; trial < 60; ++trial) {
        Mat64 m(dim(rng), dim(rng));
        for (auto& v : m.a) v = entry(rng);
        check_snf(m);
    }
}

TEST_CASE("bigger random matrices agree with the rational-rank oracle") {
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<std::int64_t> entry(-9, 9);
    for (int trial = 0; trial < 20; ++trial) {
        Mat64 m(12, 15);
        for (auto& v : m.a) v = entry(rng);
        CHECK(rank_over_z(m) == bareiss_rank(m));
    }
}

TEST_CASE("overflow promotion kicks in on adversarial input") {
    // Repeated Fibonacci-like growth forces large intermediates; the fast
    // path must hand over to the arbitrary-precision path silently.
    const int n = 18;
    Mat64 m(n, n);
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<std::int64_t> entry(-9, 9);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m.at(i, j) = (i == j ? 9 : (j == i + 1 ? 8 : entry(rng)));
    check_snf(m);
}

TEST_CASE("rank mod p") {
    Mat64 m = from_rows({{2, 0}, {0, 3}});
    CHECK(rank_mod_p(m, 2) == 1);
    CHECK(rank_mod_p(m, 3) == 1);
    CHECK(rank_mod_p(m, 5) == 2);
    CHECK(rank_over_z(m) == 2);
}

TEST_CASE("lattice membership and comparison") {
    // lattice generated by (2,0) and (0,3)
    MatZ l(2, 2);
    l.at(0, 0) = 2;
    l.at(1, 1) = 3;
    LatticeSolver solver(l);
    CHECK(solver.contains({BigInt(4), BigInt(3)}));
    CHECK_FALSE(solver.contains({BigInt(1), BigInt(0)}));
    MatZ sub(2, 1);
    sub.at(0, 0) = 6;
    sub.at(1, 0) = 3;
    CHECK(lattice_subset(sub, l));
    CHECK_FALSE(lattice_equal(sub, l));
    // trivial lattice only contains zero
    MatZ trivial(2, 0);
    LatticeSolver ts(trivial);
    CHECK(ts.contains({BigInt(0), BigInt(0)}));
    CHECK_FALSE(ts.contains({BigInt(0), BigInt(1)}));
}

TEST_CASE("presented groups") {
    // Z^2 / <(2,0)> = Z + Z/2
    PresentedGroup g;
    g.gens = 2;
    g.relations = MatZ(2, 1);
    g.relations.at(0, 0) = 2;
    CHECK(g.free_rank() == 1);
    REQUIRE(g.torsion().size() == 1);
    CHECK(g.torsion()[0] == 2);

    // the identity hom is an isomorphism
    CHECK(hom_isomorphism(g, g, MatZ::identity(2)));
    // multiplication by 2 kills the torsion generator and misses the odd
    // classes of the free one
    MatZ twice(2, 2);
    twice.at(0, 0) = 2;
    twice.at(1, 1) = 2;
    CHECK_FALSE(hom_injective(g, g, twice));
    CHECK_FALSE(hom_surjective(g, twice));
    CHECK(hom_well_defined(g, g, twice));
}

TEST_CASE("exactness of a short exact sequence of presented groups") {
    // 0 -> Z --x2--> Z -> Z/2 -> 0
    PresentedGroup z{1, MatZ(1, 0)};
    PresentedGroup z2{1, [] {
                          MatZ r(1, 1);
                          r.at(0, 0) = 2;
                          return r;
                      }()};
    MatZ times2(1, 1);
    times2.at(0, 0) = 2;
    MatZ quot = MatZ::identity(1);
    CHECK(exact_at(z, z, z2, times2, quot));
    CHECK(hom_injective(z, z, times2));
    CHECK(hom_surjective(z2, quot));
    // replacing x2 by x4 breaks exactness in the middle
    MatZ times4(1, 1);
    times4.at(0, 0) = 4;
    CHECK_FALSE(exact_at(z, z, z2, times4, quot));
}
