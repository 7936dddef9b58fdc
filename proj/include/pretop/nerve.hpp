#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pretop/selector.hpp"
#include "pretop/space.hpp"

namespace pretop {

// A singular n-simplex: the vertex images of a continuous map from the
// n-th standard J-simplex (indiscrete for J1, up-set closure for JPlus).
struct Simplex {
    std::vector<int> vertices;

    int dim() const { return static_cast<int>(vertices.size()) - 1; }
    bool operator==(const Simplex&) const = default;
    auto operator<=>(const Simplex&) const = default;
};

// A singular n-cube: corner images of a continuous map from the n-fold
// product of the interval. Corner words are indexed by integers with the
// first cube coordinate in the least significant bit.
struct Cube {
    int dim = 0;
    std::vector<int> corners; // size 1 << dim

    bool operator==(const Cube&) const = default;
    auto operator<=>(const Cube&) const = default;
};

struct EnumLimits {
    std::size_t max_count = 1'000'000; // elements per dimension
    int max_dim = 4;
};

// Membership tests spelled out per theory; these are the continuity
// conditions of the defining map, specialized to singleton closures.
bool is_valid_simplex(const ClosureSpace& space, Interval j,
                      const std::vector<int>& vertices);
bool is_valid_cube(const ClosureSpace& space, Interval j, ProductKind product,
                   int dim, const std::vector<int>& corners);

// All n-simplices/n-cubes in lexicographic order of their vertex/corner
// vectors. Throws resource_error beyond the configured caps, never
// truncates.
std::vector<Simplex> enumerate_simplices(const ClosureSpace& space, Interval j, int n,
                                         const EnumLimits& limits = {});
std::vector<Cube> enumerate_cubes(const ClosureSpace& space, Interval j,
                                  ProductKind product, int n,
                                  const EnumLimits& limits = {});

Simplex simplex_face(const Simplex& s, int i);       // delete vertex i, 0 <= i <= n
Simplex simplex_degeneracy(const Simplex& s, int i); // repeat vertex i
bool is_degenerate(const Simplex& s);

// Face A_i (fix coordinate i to 0) for side == 0, B_i (fix to 1) for
// side == 1; coordinates are 1-based as in the boundary formula.
Cube cube_face(const Cube& q, int i, int side);
// Insert an ignored coordinate at position i (1-based), dim n -> n+1.
Cube cube_degeneracy(const Cube& q, int i);
bool is_degenerate(const Cube& q);
// Connection: merge coordinates i, i+1 of the result through min (side == 1)
// or max (side == 0), dim n -> n+1; 1 <= i <= n.
Cube cube_connection(const Cube& q, int i, int side);

// The explicit simplicial-to-cubical comparison: corner word w maps to the
// vertex indexed by the number of leading 1s of (a_1, ..., a_n). Lands in
// the (J, cross) cubical theory and is injective.
Cube comparison_cube(const Simplex& s);

Simplex postcompose(const Simplex& s, const SpaceMap& map);
Cube postcompose(const Cube& q, const SpaceMap& map);

std::string simplex_label(const ClosureSpace& space, const Simplex& s);
std::string cube_label(const ClosureSpace& space, const Cube& q);

} // namespace pretop
