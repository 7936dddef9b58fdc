#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pretop/selector.hpp"
#include "pretop/space.hpp"

namespace pretop {

struct Pi0Partition {
    std::vector<PointMask> classes; // ordered by least member
};

// J-path components: the equivalence closure of one-step J-paths. For J1 a
// step needs mutual adjacency; for JPlus a directed edge in either
// orientation joins two points once the relation is symmetrized.
Pi0Partition pi0(const ClosureSpace& space, Interval j);

struct HomotopyBudget {
    std::size_t max_maps = 100'000; // BFS nodes / enumerated maps
};

enum class SearchStatus { Yes, No, Inconclusive };

// h_0 .. h_m with h_0 = f, h_m = g; consecutive entries are one-step
// homotopic.
struct HomotopyWitness {
    std::vector<std::vector<int>> chain;

    std::size_t steps() const { return chain.empty() ? 0 : chain.size() - 1; }
};

struct HomotopyResult {
    SearchStatus status = SearchStatus::Inconclusive;
    std::optional<HomotopyWitness> witness;
    std::size_t explored = 0;
};

// The unique candidate H : X (x) J -> Y with H(-,0) = f and H(-,1) = g,
// as a map from the two-point-interval product; the pair is one-step
// homotopic iff this map is continuous.
SpaceMap combined_homotopy_map(const SpaceMap& f, const SpaceMap& g, Interval j,
                               ProductKind product);
bool one_step_homotopic(const SpaceMap& f, const SpaceMap& g, Interval j,
                        ProductKind product);

// Breadth-first search over continuous maps with one-step edges, starting at
// f. Definitive No once the component is exhausted; Inconclusive only on
// budget exhaustion.
HomotopyResult are_homotopic(const SpaceMap& f, const SpaceMap& g, Interval j,
                             ProductKind product, const HomotopyBudget& budget = {});

bool verify_witness(const SpaceMap& f, const SpaceMap& g, Interval j,
                    ProductKind product, const HomotopyWitness& witness);

// Partition of all continuous maps X -> Y into homotopy classes (union-find
// over one-step edges). Throws resource_error past the budget.
struct MapClasses {
    std::vector<std::vector<std::vector<int>>> classes; // assignments per class
};
MapClasses homotopy_classes(const ClosureSpace& x, const ClosureSpace& y, Interval j,
                            ProductKind product, const HomotopyBudget& budget = {});

// Searches for identity ~ constant; a success names the collapse point in
// the witness's last entry.
HomotopyResult is_contractible(const ClosureSpace& x, Interval j, ProductKind product,
                               const HomotopyBudget& budget = {});

// Whether homotopy under (ja, pa) formally implies homotopy under (jb, pb):
// J1 refines JPlus and the cross product refines the inductive one.
bool relation_implies(Interval ja, ProductKind pa, Interval jb, ProductKind pb);

struct OrderCheckReport {
    bool applicable = false;   // the implication is part of the lattice
    SearchStatus finer = SearchStatus::Inconclusive;
    SearchStatus coarser = SearchStatus::Inconclusive;
    bool holds = true; // finer Yes forces coarser Yes
};

OrderCheckReport order_check(const SpaceMap& f, const SpaceMap& g, Interval finer_j,
                             ProductKind finer_p, Interval coarser_j,
                             ProductKind coarser_p, const HomotopyBudget& budget = {});

// All continuous maps X -> Y in lexicographic order of their assignments.
std::vector<std::vector<int>> enumerate_continuous_maps(const ClosureSpace& x,
                                                        const ClosureSpace& y,
                                                        const HomotopyBudget& budget = {});

} // namespace pretop
