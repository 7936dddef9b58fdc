#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pretop/errors.hpp"

namespace pretop {

// Subsets of a space are bit masks over the point indices. Spaces are capped
// at kMaxPoints so one machine word always suffices.
using PointMask = std::uint64_t;

inline constexpr int kMaxPoints = 64;

// A finite Cech closure space: an ordered point set together with the
// closure of each singleton. The closure of an arbitrary subset is the
// union of the singleton closures, which is lossless because finite closure
// operators are additive. The transpose relation gives the minimal
// neighborhood of each point: y is in N(x) iff x is in closure({y}).
//
// Values are immutable after construction and may be shared freely.
class ClosureSpace {
public:
    // `closures[i]` must contain bit i (reflexivity) and only bits < size.
    ClosureSpace(std::vector<std::string> names, std::vector<PointMask> closures);

    int size() const { return static_cast<int>(names_.size()); }
    PointMask universe() const {
        return size() == kMaxPoints ? ~PointMask{0} : ((PointMask{1} << size()) - 1);
    }

    const std::vector<std::string>& point_names() const { return names_; }
    const std::string& name_of(int p) const { return names_[static_cast<size_t>(p)]; }
    // Index of a named point; input_error if absent.
    int index_of(const std::string& name) const;
    std::optional<int> find(const std::string& name) const;

    PointMask point_closure(int p) const { return closures_[static_cast<size_t>(p)]; }
    PointMask minimal_neighborhood(int p) const { return nbhds_[static_cast<size_t>(p)]; }

    PointMask closure(PointMask subset) const;
    PointMask interior(PointMask subset) const;
    bool is_open(PointMask subset) const;
    bool is_closed(PointMask subset) const;
    // Idempotence on singletons; sufficient by additivity.
    bool is_topological() const;

    bool contains(int x, PointMask subset) const { return (subset >> x) & 1u; }
    void require_subset(PointMask subset, const char* what) const;

    bool operator==(const ClosureSpace& other) const = default;

private:
    std::vector<std::string> names_;
    std::vector<PointMask> closures_;
    std::vector<PointMask> nbhds_; // transpose of closures_
};

// A point assignment between two spaces. Continuity is a property to be
// checked, not an invariant: non-continuous maps are representable.
struct SpaceMap {
    ClosureSpace source;
    ClosureSpace target;
    std::vector<int> assignment; // assignment[x] = index in target

    SpaceMap(ClosureSpace src, ClosureSpace tgt, std::vector<int> assign);

    int operator()(int x) const { return assignment[static_cast<size_t>(x)]; }
    PointMask image(PointMask subset) const;

    static SpaceMap identity(const ClosureSpace& space);
    static SpaceMap constant(const ClosureSpace& source, const ClosureSpace& target,
                             int value);
};

// f(c({x})) subset of c({f(x)}) for every x; equivalent to the all-subsets
// condition by additivity.
bool is_continuous(const SpaceMap& map);

SpaceMap compose(const SpaceMap& g, const SpaceMap& f); // g after f

struct Cover {
    ClosureSpace space;
    std::vector<PointMask> parts;
};

bool is_interior_cover(const Cover& cover);

// Pair (X, A) with the subspace closure c_A(S) = c(S) & A.
struct SpacePair {
    ClosureSpace ambient;
    PointMask subspace_points;

    SpacePair(ClosureSpace space, PointMask subset);
};

// ---- constructions ----------------------------------------------------

// Product closure: N((x,y)) = N(x) x N(y), equivalently
// c({(x,y)}) = c({x}) x c({y}). Point names are "(a,b)" tuples ordered
// lexicographically by (index of a, index of b).
ClosureSpace product_space(const ClosureSpace& a, const ClosureSpace& b);

// Inductive product: c({(x,y)}) = ({x} x c({y})) | (c({x}) x {y}).
ClosureSpace inductive_product_space(const ClosureSpace& a, const ClosureSpace& b);

enum class ProductKind { Cross, Inductive };

// n-fold product with points named as flat n-tuples; n = 0 gives the
// one-point space.
ClosureSpace power_space(const ClosureSpace& base, int n, ProductKind kind);

struct CoproductResult {
    ClosureSpace space;
    SpaceMap into_first;
    SpaceMap into_second;
};

CoproductResult coproduct_space(const ClosureSpace& a, const ClosureSpace& b);

struct PushoutResult {
    ClosureSpace space;
    SpaceMap from_first;  // X -> P
    SpaceMap from_second; // Y -> P
};

// Pushout of X <-f- A -g-> Y: quotient of X + Y by f(a) ~ g(a), closure
// c_P(B) = i(c(i^-1 B)) | j(d(j^-1 B)). Requires f, g continuous with a
// common source.
PushoutResult pushout_space(const SpaceMap& f, const SpaceMap& g);

struct QuotientResult {
    ClosureSpace space;
    SpaceMap projection;
};

// X/A: the subspace collapsed to a single point (coequalizer closure
// c_Q(S) = p(c(p^-1 S))). A must be nonempty.
QuotientResult quotient_by_subspace(const SpacePair& pair);

ClosureSpace subspace(const ClosureSpace& space, PointMask subset);

// Finest topological (idempotent) closure coarser than the input: iterate
// singleton closures to their fixed point.
ClosureSpace topological_modification(const ClosureSpace& space);

// ---- standard spaces ---------------------------------------------------

enum class StandardKind {
    JBot,      // {0..m} discrete
    JTop,      // {0..m} indiscrete
    JM,        // {0..m}, c(i) = band |i-j| <= 1
    JPlus,     // {0,1}, c(0)={0,1}, c(1)={1}
    JMinus,    // {0,1}, c(0)={0}, c(1)={0,1}
    JMK,       // {0..m}, orientation of step i given by the i-th rightmost bit of k
    JLe,       // {0..m}, c(i) = up-set {j : j >= i}
    Discrete,  // n points, discrete
    Indiscrete // n points, indiscrete
};

// `m` is the top point for the J-family kinds (so m+1 points) and the point
// count for Discrete/Indiscrete. `k` is used by JMK only.
ClosureSpace standard_space(StandardKind kind, int m, std::uint64_t k = 0);

inline ClosureSpace j1_space() { return standard_space(StandardKind::JTop, 1); }
inline ClosureSpace jplus_space() { return standard_space(StandardKind::JPlus, 1); }
inline ClosureSpace one_point_space() { return standard_space(StandardKind::Discrete, 1); }

// Reflexive symmetric m-cycle 0-1-...-(m-1)-0.
ClosureSpace cycle_space(int m);
// Reflexive symmetric path 0-1-...-(m-1).
ClosureSpace path_space(int m);

std::vector<int> mask_to_points(PointMask mask);
PointMask points_to_mask(const std::vector<int>& points);

} // namespace pretop
