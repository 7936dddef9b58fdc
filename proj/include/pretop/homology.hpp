#pragma once

#include <string>
#include <vector>

#include "pretop/chain.hpp"
#include "pretop/exact.hpp"

namespace pretop {

// A finitely generated abelian group: free rank plus the invariant-factor
// chain d1 | d2 | ... with every di > 1.
struct HomologyGroup {
    long long betti = 0;
    std::vector<BigInt> torsion;

    bool operator==(const HomologyGroup&) const = default;
    std::string to_string() const;
};

struct Coefficients {
    enum class Ring { Z, Zp, Q };
    Ring ring = Ring::Z;
    std::int64_t p = 0;

    static Coefficients integers() { return {}; }
    static Coefficients rationals() { return {Ring::Q, 0}; }
    static Coefficients mod(std::int64_t p);
    static Coefficients parse(const std::string& token); // "Z" | "Zp:<p>" | "Q"
    std::string to_string() const;
};

// H_n = ker d_n / im d_{n+1}; requires the complex built through n+1. Over a
// field only the dimension is meaningful (torsion stays empty).
HomologyGroup homology(const ChainComplex& complex, int n,
                       const Coefficients& coeffs = {}, bool reduced = false);

// H^n of Hom(C, G); same range requirement.
HomologyGroup cohomology(const ChainComplex& complex, int n,
                         const Coefficients& coeffs = {}, bool reduced = false);

// All of H_0 .. H_max_dim at once.
std::vector<HomologyGroup> homology_range(const ChainComplex& complex, int max_dim,
                                          const Coefficients& coeffs = {},
                                          bool reduced = false);

// H_n presented on a kernel basis of d_n: generators are the columns of
// kernel_basis, relations express im d_{n+1} in those coordinates, and
// `coord` recovers coordinates of any cycle (it is the kernel-row slice of
// V^-1 from the Smith decomposition of d_n).
struct HomologyPresentation {
    int n = 0;
    bool reduced = false;
    PresentedGroup group;
    MatZ kernel_basis; // C_n x gens
    MatZ coord;        // gens x C_n

    std::vector<BigInt> cycle_coordinates(const std::vector<BigInt>& cycle) const;
};

HomologyPresentation homology_presentation(const ChainComplex& complex, int n,
                                           bool reduced = false);

// Matrix of the induced map H_n(src) -> H_n(tgt) in the two presentations.
MatZ induced_on_homology(const ChainMap& f, const ChainComplex& src,
                         const ChainComplex& tgt, const HomologyPresentation& ps,
                         const HomologyPresentation& pt);

// ---- abstract group arithmetic (UCT / Kunneth right-hand sides) --------

HomologyGroup group_direct_sum(const HomologyGroup& a, const HomologyGroup& b);
HomologyGroup group_tensor(const HomologyGroup& a, const HomologyGroup& b);
HomologyGroup group_tor(const HomologyGroup& a, const HomologyGroup& b);
// Hom(A, G) and Ext(A, G) for G = Z or Z/p.
HomologyGroup group_hom_into(const HomologyGroup& a, const Coefficients& g);
HomologyGroup group_ext_into(const HomologyGroup& a, const Coefficients& g);
// Dimension of A (x) Z/p and Tor(A, Z/p) over F_p.
long long dim_tensor_mod_p(const HomologyGroup& a, std::int64_t p);
long long dim_tor_mod_p(const HomologyGroup& a, std::int64_t p);

// Canonicalizes a list of cyclic orders (>1) plus a free rank into
// invariant-factor form.
HomologyGroup group_from_cyclics(long long free_rank, std::vector<BigInt> orders);

// ---- cochain utilities (cup product) ------------------------------------

// A cochain on the dimension-p basis of a simplicial complex, with values
// in Z or Z/p.
struct Cochain {
    int dim = 0;
    std::vector<std::int64_t> values;
};

Cochain coboundary(const ChainComplex& complex, const Coefficients& coeffs,
                   const Cochain& a);
// Front-face/back-face cup product; simplicial complexes only.
Cochain cup_product(const ChainComplex& complex, const Coefficients& coeffs,
                    const Cochain& a, const Cochain& b);
bool is_cocycle(const ChainComplex& complex, const Coefficients& coeffs,
                const Cochain& a);
// Is `a` a coboundary (mod p arithmetic only)?
bool is_coboundary_mod_p(const ChainComplex& complex, std::int64_t p, const Cochain& a);
// Basis of the cocycle space mod p in dimension n.
std::vector<Cochain> cocycle_basis_mod_p(const ChainComplex& complex, std::int64_t p,
                                         int n);

} // namespace pretop
