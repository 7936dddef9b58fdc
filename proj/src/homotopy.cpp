#include "pretop/homotopy.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

namespace pretop {

namespace {

int find_root(std::vector<int>& parent, int x) {
    while (parent[static_cast<size_t>(x)] != x) {
        parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
        x = parent[static_cast<size_t>(x)];
    }
    return x;
}

// Per-point candidate values for a one-step successor g of f, so that the
// combined map on X (x) J is continuous. Continuity of g itself is enforced
// separately during backtracking.
std::vector<PointMask> successor_candidates(const SpaceMap& f, Interval j,
                                            ProductKind product) {
    const ClosureSpace& x = f.source;
    const ClosureSpace& y = f.target;
    std::vector<PointMask> cand(static_cast<size_t>(x.size()), y.universe());
    if (product == ProductKind::Cross) {
        // At (u, 0): g(c(u)) must land in c(f(u)).
        for (int u = 0; u < x.size(); ++u) {
            PointMask allowed = y.point_closure(f(u));
            PointMask cl = x.point_closure(u);
            while (cl) {
                int w = std::countr_zero(cl);
                cl &= cl - 1;
                cand[static_cast<size_t>(w)] &= allowed;
            }
        }
        if (j == Interval::J1) {
            // At (u, 1): also f(c(u)) inside c(g(u)).
            for (int u = 0; u < x.size(); ++u) {
                PointMask needed = f.image(x.point_closure(u));
                PointMask ok = 0;
                for (int v = 0; v < y.size(); ++v)
                    if (!(needed & ~y.point_closure(v))) ok |= PointMask{1} << v;
                cand[static_cast<size_t>(u)] &= ok;
            }
        }
    } else {
        for (int u = 0; u < x.size(); ++u) {
            PointMask allowed = y.point_closure(f(u));
            if (j == Interval::J1) {
                PointMask both = 0;
                PointMask scan = allowed;
                while (scan) {
                    int v = std::countr_zero(scan);
                    scan &= scan - 1;
                    if (y.contains(f(u), y.point_closure(v))) both |= PointMask{1} << v;
                }
                allowed = both;
            }
            cand[static_cast<size_t>(u)] &= allowed;
        }
    }
    return cand;
}

// Per-point candidates for a one-step predecessor g of f (a combined map
// with g at 0 and f at 1). For J1 the one-step relation is symmetric and
// this coincides with successor_candidates; for JPlus it does not.
std::vector<PointMask> predecessor_candidates(const SpaceMap& f, Interval j,
                                              ProductKind product) {
    if (j == Interval::J1) return successor_candidates(f, j, product);
    const ClosureSpace& x = f.source;
    const ClosureSpace& y = f.target;
    std::vector<PointMask> cand(static_cast<size_t>(x.size()), y.universe());
    if (product == ProductKind::Cross) {
        // At (u, 0): both g(c(u)) and f(c(u)) must land in c(g(u)); the g
        // part is its own continuity, checked during backtracking.
        for (int u = 0; u < x.size(); ++u) {
            PointMask needed = f.image(x.point_closure(u));
            PointMask ok = 0;
            for (int v = 0; v < y.size(); ++v)
                if (!(needed & ~y.point_closure(v))) ok |= PointMask{1} << v;
            cand[static_cast<size_t>(u)] &= ok;
        }
    } else {
        for (int u = 0; u < x.size(); ++u)
            cand[static_cast<size_t>(u)] &= y.minimal_neighborhood(f(u));
    }
    return cand;
}

// Enumerates, in lexicographic order, the continuous maps g compatible with
// the candidate masks.
template <class Fn>
void for_each_constrained_map(const ClosureSpace& x, const ClosureSpace& y,
                              const std::vector<PointMask>& cand, Fn&& fn) {
    std::vector<int> g(static_cast<size_t>(x.size()), -1);
    auto extend = [&](auto&& self, int pos) -> void {
        if (pos == x.size()) {
            fn(g);
            return;
        }
        PointMask options = cand[static_cast<size_t>(pos)];
        while (options) {
            int v = std::countr_zero(options);
            options &= options - 1;
            bool ok = true;
            for (int prev = 0; prev < pos && ok; ++prev) {
                if (x.contains(pos, x.point_closure(prev)) &&
                    !y.contains(v, y.point_closure(g[static_cast<size_t>(prev)])))
                    ok = false;
                if (ok && x.contains(prev, x.point_closure(pos)) &&
                    !y.contains(g[static_cast<size_t>(prev)], y.point_closure(v)))
                    ok = false;
            }
            if (!ok) continue;
            g[static_cast<size_t>(pos)] = v;
            self(self, pos + 1);
        }
        g[static_cast<size_t>(pos)] = -1;
    };
    extend(extend, 0);
}

struct Bfs {
    const ClosureSpace& x;
    const ClosureSpace& y;
    Interval j;
    ProductKind product;
    std::size_t budget;

    std::map<std::vector<int>, int> id_of;
    std::vector<std::vector<int>> maps;
    std::vector<int> parent;

    bool exhausted = true;

    template <class Stop>
    std::optional<int> run(const std::vector<int>& start, Stop&& stop) {
        id_of.clear();
        maps.clear();
        parent.clear();
        id_of[start] = 0;
        maps.push_back(start);
        parent.push_back(-1);
        if (stop(start)) return 0;
        std::size_t head = 0;
        exhausted = true;
        while (head < maps.size()) {
            std::vector<int> current = maps[head];
            int current_id = static_cast<int>(head);
            ++head;
            SpaceMap h(x, y, current);
            std::optional<int> found;
            auto visit = [&](const std::vector<int>& g) {
                if (found) return;
                if (maps.size() >= budget) {
                    exhausted = false;
                    return;
                }
                auto [it, inserted] = id_of.try_emplace(g, static_cast<int>(maps.size()));
                if (!inserted) return;
                maps.push_back(g);
                parent.push_back(current_id);
                if (stop(g)) found = it->second;
            };
            // The generated relation is the equivalence closure, so walk
            // one-step edges in both orientations.
            for_each_constrained_map(x, y, successor_candidates(h, j, product), visit);
            if (!found && j == Interval::JPlus)
                for_each_constrained_map(x, y, predecessor_candidates(h, j, product),
                                         visit);
            if (found) return found;
        }
        return std::nullopt;
    }

    HomotopyWitness witness(int goal) const {
        std::vector<std::vector<int>> chain;
        for (int at = goal; at >= 0; at = parent[static_cast<size_t>(at)])
            chain.push_back(maps[static_cast<size_t>(at)]);
        std::reverse(chain.begin(), chain.end());
        return HomotopyWitness{std::move(chain)};
    }
};

} // namespace

Pi0Partition pi0(const ClosureSpace& space, Interval j) {
    std::vector<int> parent(static_cast<size_t>(space.size()));
    for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    for (int a = 0; a < space.size(); ++a)
        for (int b = a + 1; b < space.size(); ++b) {
            bool ab = space.contains(b, space.point_closure(a));
            bool ba = space.contains(a, space.point_closure(b));
            bool edge = j == Interval::J1 ? (ab && ba) : (ab || ba);
            if (!edge) continue;
            int ra = find_root(parent, a), rb = find_root(parent, b);
            if (ra != rb) parent[static_cast<size_t>(std::max(ra, rb))] = std::min(ra, rb);
        }
    std::map<int, PointMask> blocks;
    for (int p = 0; p < space.size(); ++p)
        blocks[find_root(parent, p)] |= PointMask{1} << p;
    Pi0Partition out;
    for (auto& [root, mask] : blocks) out.classes.push_back(mask);
    return out;
}

SpaceMap combined_homotopy_map(const SpaceMap& f, const SpaceMap& g, Interval j,
                               ProductKind product) {
    if (f.source != g.source || f.target != g.target)
        throw input_error("homotopy endpoints must share source and target");
    if (!is_continuous(f) || !is_continuous(g))
        throw input_error("homotopy endpoints must be continuous");
    ClosureSpace interval = interval_space(j);
    ClosureSpace xj = product == ProductKind::Cross
                          ? product_space(f.source, interval)
                          : inductive_product_space(f.source, interval);
    // Point (x, t) has index 2 x + t in the product of X with the interval.
    std::vector<int> h(static_cast<size_t>(xj.size()));
    for (int u = 0; u < f.source.size(); ++u) {
        h[static_cast<size_t>(2 * u)] = f(u);
        h[static_cast<size_t>(2 * u + 1)] = g(u);
    }
    return SpaceMap(xj, f.target, std::move(h));
}

bool one_step_homotopic(const SpaceMap& f, const SpaceMap& g, Interval j,
                        ProductKind product) {
    return is_continuous(combined_homotopy_map(f, g, j, product));
}

HomotopyResult are_homotopic(const SpaceMap& f, const SpaceMap& g, Interval j,
                             ProductKind product, const HomotopyBudget& budget) {
    if (f.source != g.source || f.target != g.target)
        throw input_error("homotopy endpoints must share source and target");
    if (!is_continuous(f) || !is_continuous(g))
        throw input_error("homotopy endpoints must be continuous");
    Bfs bfs{f.source, f.target, j, product, budget.max_maps, {}, {}, {}, true};
    auto goal = bfs.run(f.assignment,
                        [&](const std::vector<int>& m) { return m == g.assignment; });
    HomotopyResult out;
    out.explored = bfs.maps.size();
    if (goal) {
        out.status = SearchStatus::Yes;
        out.witness = bfs.witness(*goal);
    } else {
        out.status = bfs.exhausted ? SearchStatus::No : SearchStatus::Inconclusive;
    }
    return out;
}

bool verify_witness(const SpaceMap& f, const SpaceMap& g, Interval j,
                    ProductKind product, const HomotopyWitness& witness) {
    if (witness.chain.empty()) return false;
    if (witness.chain.front() != f.assignment || witness.chain.back() != g.assignment)
        return false;
    for (size_t i = 0; i + 1 < witness.chain.size(); ++i) {
        SpaceMap a(f.source, f.target, witness.chain[i]);
        SpaceMap b(f.source, f.target, witness.chain[i + 1]);
        if (!is_continuous(a) || !is_continuous(b)) return false;
        // Steps may be traversed against their one-step orientation.
        if (!one_step_homotopic(a, b, j, product) &&
            !one_step_homotopic(b, a, j, product))
            return false;
    }
    return true;
}

std::vector<std::vector<int>> enumerate_continuous_maps(const ClosureSpace& x,
                                                        const ClosureSpace& y,
                                                        const HomotopyBudget& budget) {
    std::vector<std::vector<int>> out;
    std::vector<PointMask> cand(static_cast<size_t>(x.size()), y.universe());
    for_each_constrained_map(x, y, cand, [&](const std::vector<int>& g) {
        if (out.size() >= budget.max_maps)
            throw resource_error("continuous-map enumeration exceeded the budget of " +
                                 std::to_string(budget.max_maps));
        out.push_back(g);
    });
    return out;
}

MapClasses homotopy_classes(const ClosureSpace& x, const ClosureSpace& y, Interval j,
                            ProductKind product, const HomotopyBudget& budget) {
    std::vector<std::vector<int>> maps = enumerate_continuous_maps(x, y, budget);
    std::map<std::vector<int>, int> id_of;
    for (size_t i = 0; i < maps.size(); ++i) id_of[maps[i]] = static_cast<int>(i);
    std::vector<int> parent(maps.size());
    for (size_t i = 0; i < maps.size(); ++i) parent[i] = static_cast<int>(i);
    for (size_t i = 0; i < maps.size(); ++i) {
        SpaceMap h(x, y, maps[i]);
        auto cand = successor_candidates(h, j, product);
        for_each_constrained_map(x, y, cand, [&](const std::vector<int>& g) {
            auto it = id_of.find(g);
            if (it == id_of.end()) return; // cannot happen: successors are continuous
            int ra = find_root(parent, static_cast<int>(i));
            int rb = find_root(parent, it->second);
            if (ra != rb) parent[static_cast<size_t>(std::max(ra, rb))] = std::min(ra, rb);
        });
    }
    std::map<int, std::vector<std::vector<int>>> blocks;
    for (size_t i = 0; i < maps.size(); ++i)
        blocks[find_root(parent, static_cast<int>(i))].push_back(maps[i]);
    MapClasses out;
    for (auto& [root, block] : blocks) out.classes.push_back(std::move(block));
    return out;
}

HomotopyResult is_contractible(const ClosureSpace& x, Interval j, ProductKind product,
                               const HomotopyBudget& budget) {
    SpaceMap identity = SpaceMap::identity(x);
    Bfs bfs{x, x, j, product, budget.max_maps, {}, {}, {}, true};
    auto goal = bfs.run(identity.assignment, [&](const std::vector<int>& m) {
        return std::all_of(m.begin(), m.end(), [&](int v) { return v == m[0]; });
    });
    HomotopyResult out;
    out.explored = bfs.maps.size();
    if (goal) {
        out.status = SearchStatus::Yes;
        out.witness = bfs.witness(*goal);
    } else {
        out.status = bfs.exhausted ? SearchStatus::No : SearchStatus::Inconclusive;
    }
    return out;
}

bool relation_implies(Interval ja, ProductKind pa, Interval jb, ProductKind pb) {
    bool j_ok = ja == jb || (ja == Interval::J1 && jb == Interval::JPlus);
    bool p_ok = pa == pb || (pa == ProductKind::Cross && pb == ProductKind::Inductive);
    return j_ok && p_ok;
}

OrderCheckReport order_check(const SpaceMap& f, const SpaceMap& g, Interval finer_j,
                             ProductKind finer_p, Interval coarser_j,
                             ProductKind coarser_p, const HomotopyBudget& budget) {
    OrderCheckReport report;
    report.applicable = relation_implies(finer_j, finer_p, coarser_j, coarser_p);
    if (!report.applicable) return report;
    report.finer = are_homotopic(f, g, finer_j, finer_p, budget).status;
    report.coarser = are_homotopic(f, g, coarser_j, coarser_p, budget).status;
    report.holds =
        report.finer != SearchStatus::Yes || report.coarser == SearchStatus::Yes;
    return report;
}

} // namespace pretop
