#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pretop/errors.hpp"

namespace pretop {

using BigInt = boost::multiprecision::cpp_int;

// Dense matrix in row-major order. Boundary matrices stay in int64 (their
// entries are signed incidence counts); transform and presentation work is
// done in BigInt.
template <class I>
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<I> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * static_cast<size_t>(c)) {}

    I& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const I& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = I(1);
        return m;
    }

    bool operator==(const Mat&) const = default;
};

using Mat64 = Mat<std::int64_t>;
using MatZ = Mat<BigInt>;

MatZ to_bigint(const Mat64& m);
MatZ multiply(const MatZ& a, const MatZ& b);
MatZ transpose(const MatZ& m);
Mat64 transpose64(const Mat64& m);

// d = u * m * v with u, v unimodular and d diagonal with the divisibility
// chain d1 | d2 | ... ; exact arbitrary-precision arithmetic throughout the
// slow path, with an int64 fast path that promotes itself on overflow.
struct SnfResult {
    MatZ d;
    MatZ u;
    MatZ v;
    std::vector<BigInt> invariants; // nonzero diagonal entries, in chain order
    int rank = 0;
};

SnfResult smith_normal_form(const MatZ& m);
SnfResult smith_normal_form(const Mat64& m);

// Like smith_normal_form but also carries v^-1, which turns "coordinates of
// a vector in the kernel basis" into a matrix slice.
struct SnfTransforms {
    MatZ d;
    MatZ u;
    MatZ v;
    MatZ v_inv;
    std::vector<BigInt> invariants;
    int rank = 0;
};

SnfTransforms snf_with_transforms(const Mat64& m);

// Invariant factors only (no transforms); drops zero and duplicate columns
// first, which leaves the column lattice unchanged.
std::vector<BigInt> snf_invariants(const Mat64& m);

int rank_over_z(const Mat64& m);
int rank_mod_p(const Mat64& m, std::int64_t p);

// ---- lattices and finitely presented abelian groups --------------------

// Column lattices in Z^n. A lattice is given by a generating matrix; the
// zero-column matrix generates the trivial lattice.
struct LatticeSolver {
    // Prepares membership tests against the column lattice of m.
    explicit LatticeSolver(const MatZ& m);
    bool contains(const std::vector<BigInt>& x) const;
    bool contains_columns(const MatZ& m) const;

private:
    int rows_;
    MatZ u_;
    std::vector<BigInt> diag_;
    int rank_;
};

bool lattice_subset(const MatZ& a, const MatZ& b); // cols(a) in lattice(b)
bool lattice_equal(const MatZ& a, const MatZ& b);
MatZ concat_cols(const MatZ& a, const MatZ& b);

// Z^gens modulo the column lattice of `relations`.
struct PresentedGroup {
    int gens = 0;
    MatZ relations; // gens x r

    std::vector<BigInt> torsion() const; // invariant factors > 1
    int free_rank() const;
};

// A homomorphism between presented groups is a matrix on generators that
// maps the source relation lattice into the target one.
bool hom_well_defined(const PresentedGroup& src, const PresentedGroup& tgt,
                      const MatZ& m);
bool homs_equal(const PresentedGroup& tgt, const MatZ& m1, const MatZ& m2);
MatZ hom_image_lattice(const PresentedGroup& tgt, const MatZ& m);
MatZ hom_kernel_lattice(const PresentedGroup& src, const PresentedGroup& tgt,
                        const MatZ& m);
bool hom_injective(const PresentedGroup& src, const PresentedGroup& tgt, const MatZ& m);
bool hom_surjective(const PresentedGroup& tgt, const MatZ& m);
bool hom_isomorphism(const PresentedGroup& src, const PresentedGroup& tgt,
                     const MatZ& m);

// im(f) == ker(g) inside the middle group (gf = 0 is checked separately by
// callers when meaningful).
bool exact_at(const PresentedGroup& left, const PresentedGroup& middle,
              const PresentedGroup& right, const MatZ& f, const MatZ& g);

} // namespace pretop
