#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pretop/exact.hpp"
#include "pretop/nerve.hpp"
#include "pretop/selector.hpp"
#include "pretop/space.hpp"

namespace pretop {

// A chain complex of free Z-modules with a canonically ordered basis per
// dimension. boundary[k] maps C_k to C_{k-1} (rows indexed by the (k-1)-basis)
// and is empty at k = 0; augmentable complexes additionally admit the
// augmentation eps = (1 ... 1) as the dimension-(-1) boundary for reduced
// homology.
struct ChainComplex {
    std::vector<std::vector<std::string>> labels;
    std::vector<Mat64> boundary;
    bool augmentable = false;

    // Populated when the complex came from a nerve; used to build chain maps.
    std::optional<TheorySelector> selector;
    std::vector<std::vector<Simplex>> simplices; // per dim, if simplicial
    std::vector<std::vector<Cube>> cubes;        // per dim, if cubical

    int top_dim() const { return static_cast<int>(labels.size()) - 1; }
    int rank(int n) const {
        return n >= 0 && n <= top_dim()
                   ? static_cast<int>(labels[static_cast<size_t>(n)].size())
                   : 0;
    }
    int index_of_simplex(int n, const Simplex& s) const; // -1 if absent
    int index_of_cube(int n, const Cube& q) const;
};

struct ComplexOptions {
    // Keep only the degenerate-quotient basis (the default working complex);
    // false keeps every singular element (the Moore / unnormalized complex).
    bool normalize = true;
    // Keep only elements whose image lies inside this subset (the chain
    // complex of a subspace, in ambient indexing).
    std::optional<PointMask> within;
    // Keep only elements whose image lies inside some part (interior-cover
    // subcomplex).
    std::optional<std::vector<PointMask>> within_any;
    // Quotient by the subcomplex of elements inside this subset (relative
    // complex of a pair).
    std::optional<PointMask> rel;
    EnumLimits limits;
};

// Chains in dimensions 0 .. max_dim + 1, so homology at max_dim is correct.
ChainComplex build_complex(const ClosureSpace& space, const TheorySelector& selector,
                           int max_dim, const ComplexOptions& options = {});

// Handcrafted complex from explicit boundary matrices; validates shapes and
// d d = 0. ranks[k] is the rank of C_k; boundaries[k] : C_{k+1} -> C_k.
ChainComplex complex_from_matrices(const std::vector<int>& ranks,
                                   const std::vector<Mat64>& boundaries);

ChainComplex tensor_complex(const ChainComplex& c, const ChainComplex& d);

// A degreewise map of complexes with sparse columns; commutes with the
// boundaries (checked on construction helpers in this module).
struct ChainMap {
    using Column = std::vector<std::pair<int, std::int64_t>>; // (row, coeff)
    std::vector<std::vector<Column>> cols; // [dim][source index]

    int dims() const { return static_cast<int>(cols.size()); }
};

// Postcomposition with a continuous map, theory-preserving. The two
// complexes must be built with the same selector/options over the map's
// endpoints.
ChainMap induced_chain_map(const SpaceMap& map, const ChainComplex& src,
                           const ChainComplex& tgt);

// The explicit simplicial -> (J, cross) cubical comparison, basiswise.
ChainMap comparison_chain_map(const ChainComplex& simplicial,
                              const ChainComplex& cubical);

// Inclusion of a subcomplex whose basis elements are literally elements of
// the target complex (restricted or cover subcomplexes).
ChainMap inclusion_chain_map(const ChainComplex& sub, const ChainComplex& whole);

// tgt-boundary o F == F o src-boundary in every available dimension.
bool is_chain_map(const ChainMap& f, const ChainComplex& src, const ChainComplex& tgt);

Mat64 chain_map_matrix(const ChainMap& f, const ChainComplex& src,
                       const ChainComplex& tgt, int n);

// ---- cochains ----------------------------------------------------------

// delta[n] : C^n -> C^{n+1} is the transpose of boundary[n+1]; with the
// reduced flag the augmentation transpose precedes C^0.
struct CochainComplex {
    std::vector<int> ranks;
    std::vector<Mat64> delta; // delta[n] defined for n < top_dim
    bool augmentable = false;

    int top_dim() const { return static_cast<int>(ranks.size()) - 1; }
};

CochainComplex dualize(const ChainComplex& complex);

} // namespace pretop
