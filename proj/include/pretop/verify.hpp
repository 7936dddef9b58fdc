#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "pretop/chain.hpp"
#include "pretop/homology.hpp"
#include "pretop/homotopy.hpp"

namespace pretop {

using Json = nlohmann::ordered_json;

// One verification outcome. `status` is one of verified / refuted /
// experimental / unsupported; experimental reports findings for the
// theories the paper leaves open and never asserts.
struct VerifyReport {
    std::string theorem;
    std::string selector;
    std::string instance;
    std::string status;
    Json details = Json::object();

    Json to_json() const;
};

struct VerifyOptions {
    int max_dim = 2;
    EnumLimits limits;
    Coefficients coeffs = Coefficients::integers();
    HomotopyBudget budget;
};

// Subcomplex of elements supported inside a single cover part; the equality
// flag against the full complex is the content of the interior-cover
// proposition for simplicial and (J, cross) cubical theories.
VerifyReport verify_cover_subcomplex(const ClosureSpace& space, const Cover& cover,
                                     const TheorySelector& selector,
                                     const VerifyOptions& options = {});

VerifyReport verify_mayer_vietoris(const ClosureSpace& space, PointMask a, PointMask b,
                                   const TheorySelector& selector,
                                   const VerifyOptions& options = {});

// Z and A with closure(Z) inside interior(A); inclusion-induced map of
// relative homologies.
VerifyReport verify_excision(const ClosureSpace& space, PointMask a, PointMask z,
                             const TheorySelector& selector,
                             const VerifyOptions& options = {});

VerifyReport verify_les_pair(const ClosureSpace& space, PointMask a,
                             const TheorySelector& selector,
                             const VerifyOptions& options = {});

VerifyReport verify_kunneth(const ClosureSpace& x, const ClosureSpace& y,
                            const TheorySelector& selector,
                            const VerifyOptions& options = {});

VerifyReport verify_eilenberg_zilber(const ClosureSpace& x, const ClosureSpace& y,
                                     const TheorySelector& selector,
                                     const VerifyOptions& options = {});

VerifyReport verify_uct(const ClosureSpace& space, const TheorySelector& selector,
                        const VerifyOptions& options = {});

// The explicit simplicial-to-cubical chain map induces isomorphisms.
VerifyReport verify_comparison(const ClosureSpace& space, Interval interval,
                               const VerifyOptions& options = {});

// Axioms 1-4 over a seeded random corpus of pairs.
VerifyReport verify_es_axioms(const TheorySelector& selector, std::uint64_t seed,
                              int instances, const VerifyOptions& options = {});

// Quotient comparison H_n(X, A) vs reduced H_n(X/A), gated on a retraction
// witness for a neighborhood of A.
VerifyReport verify_good_pair(const ClosureSpace& space, PointMask a, PointMask b,
                              const std::vector<int>& retraction,
                              const TheorySelector& selector,
                              const VerifyOptions& options = {});

// ---- prism operator ------------------------------------------------------

// Chains over ad-hoc simplices, used by the prism identity which must hold
// on the full Moore complex.
using SparseChain = std::map<Simplex, std::int64_t>;

// P(sigma) for a multi-step (J, cross) homotopy chain; steps traversed
// against their one-step orientation contribute with the opposite sign.
SparseChain prism_chain(const Simplex& s, const ClosureSpace& domain,
                        const ClosureSpace& codomain, const HomotopyWitness& witness,
                        Interval j);

// dP + Pd == g# - f# on every simplex of X up to max_dim.
struct PrismCheck {
    bool holds = true;
    std::string failure;
};
PrismCheck check_prism_identity(const ClosureSpace& x, const ClosureSpace& y,
                                const HomotopyWitness& witness, Interval j,
                                int max_dim, const EnumLimits& limits = {});

// Induced maps on homology agree in every dimension <= max_dim.
bool induced_maps_equal(const SpaceMap& f, const SpaceMap& g,
                        const TheorySelector& selector, int max_dim,
                        const EnumLimits& limits = {});

// ---- seeded corpora ------------------------------------------------------

struct RandomSpaceOptions {
    int min_points = 1;
    int max_points = 6;
    double edge_prob = 0.35;
    bool symmetric = false;
};

ClosureSpace random_space(std::mt19937_64& rng, const RandomSpaceOptions& options);
PointMask random_subset(std::mt19937_64& rng, const ClosureSpace& space,
                        bool nonempty = false);
std::optional<SpaceMap> random_continuous_map(std::mt19937_64& rng,
                                              const ClosureSpace& x,
                                              const ClosureSpace& y);

// A random interior cover {A, B} with both parts proper when possible.
std::optional<std::pair<PointMask, PointMask>> random_interior_cover(
    std::mt19937_64& rng, const ClosureSpace& space, int attempts = 64);

// A random triple (A, Z) with closure(Z) inside interior(A).
std::optional<std::pair<PointMask, PointMask>> random_excision_triple(
    std::mt19937_64& rng, const ClosureSpace& space, int attempts = 64);

} // namespace pretop
