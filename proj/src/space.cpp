#include "pretop/space.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <sstream>

namespace pretop {

namespace {

std::string tuple_name(const std::string& a, const std::string& b) {
    // Flatten nested tuples so iterated products read as n-tuples.
    std::string left = a;
    if (left.size() >= 2 && left.front() == '(' && left.back() == ')')
        left = left.substr(1, left.size() - 2);
    return "(" + left + "," + b + ")";
}

} // namespace

ClosureSpace::ClosureSpace(std::vector<std::string> names,
                           std::vector<PointMask> closures)
    : names_(std::move(names)), closures_(std::move(closures)) {
    if (names_.size() > static_cast<size_t>(kMaxPoints))
        throw resource_error("space has " + std::to_string(names_.size()) +
                             " points; the configured maximum is " +
                             std::to_string(kMaxPoints));
    if (names_.size() != closures_.size())
        throw input_error("point list and closure table sizes differ");
    {
        auto sorted = names_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw input_error("duplicate point name");
    }
    const PointMask u = universe();
    for (size_t i = 0; i < closures_.size(); ++i) {
        if (closures_[i] & ~u)
            throw input_error("closure of '" + names_[i] + "' mentions an unknown point");
        if (!((closures_[i] >> i) & 1u))
            throw input_error("closure of '" + names_[i] +
                              "' does not contain the point itself");
    }
    nbhds_.assign(names_.size(), 0);
    for (size_t x = 0; x < closures_.size(); ++x)
        for (size_t y = 0; y < closures_.size(); ++y)
            if ((closures_[y] >> x) & 1u) nbhds_[x] |= PointMask{1} << y;
}

int ClosureSpace::index_of(const std::string& name) const {
    if (auto i = find(name)) return *i;
    throw input_error("unknown point '" + name + "'");
}

std::optional<int> ClosureSpace::find(const std::string& name) const {
    for (size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<int>(i);
    return std::nullopt;
}

void ClosureSpace::require_subset(PointMask subset, const char* what) const {
    if (subset & ~universe())
        throw input_error(std::string(what) + " mentions a point outside the space");
}

PointMask ClosureSpace::closure(PointMask subset) const {
    require_subset(subset, "closure argument");
    PointMask out = 0;
    while (subset) {
        int x = std::countr_zero(subset);
        subset &= subset - 1;
        out |= closures_[static_cast<size_t>(x)];
    }
    return out;
}

PointMask ClosureSpace::interior(PointMask subset) const {
    require_subset(subset, "interior argument");
    return universe() & ~closure(universe() & ~subset);
}

bool ClosureSpace::is_open(PointMask subset) const { return interior(subset) == subset; }

bool ClosureSpace::is_closed(PointMask subset) const { return closure(subset) == subset; }

bool ClosureSpace::is_topological() const {
    for (int x = 0; x < size(); ++x)
        if (closure(point_closure(x)) != point_closure(x)) return false;
    return true;
}

SpaceMap::SpaceMap(ClosureSpace src, ClosureSpace tgt, std::vector<int> assign)
    : source(std::move(src)), target(std::move(tgt)), assignment(std::move(assign)) {
    if (assignment.size() != static_cast<size_t>(source.size()))
        throw input_error("map assignment is not total on the source points");
    for (int v : assignment)
        if (v < 0 || v >= target.size())
            throw input_error("map assignment hits an unknown target point");
}

PointMask SpaceMap::image(PointMask subset) const {
    PointMask out = 0;
    while (subset) {
        int x = std::countr_zero(subset);
        subset &= subset - 1;
        out |= PointMask{1} << assignment[static_cast<size_t>(x)];
    }
    return out;
}

SpaceMap SpaceMap::identity(const ClosureSpace& space) {
    std::vector<int> a(static_cast<size_t>(space.size()));
    std::iota(a.begin(), a.end(), 0);
    return SpaceMap(space, space, std::move(a));
}

SpaceMap SpaceMap::constant(const ClosureSpace& source, const ClosureSpace& target,
                            int value) {
    return SpaceMap(source, target, std::vector<int>(static_cast<size_t>(source.size()), value));
}

bool is_continuous(const SpaceMap& map) {
    for (int x = 0; x < map.source.size(); ++x) {
        PointMask img = map.image(map.source.point_closure(x));
        if (img & ~map.target.point_closure(map(x))) return false;
    }
    return true;
}

SpaceMap compose(const SpaceMap& g, const SpaceMap& f) {
    if (f.target != g.source)
        throw input_error("composition endpoints do not match");
    std::vector<int> a(f.assignment.size());
    for (size_t x = 0; x < a.size(); ++x)
        a[x] = g.assignment[static_cast<size_t>(f.assignment[x])];
    return SpaceMap(f.source, g.target, std::move(a));
}

bool is_interior_cover(const Cover& cover) {
    PointMask covered = 0;
    for (PointMask part : cover.parts) {
        cover.space.require_subset(part, "cover part");
        covered |= cover.space.interior(part);
    }
    return covered == cover.space.universe();
}

SpacePair::SpacePair(ClosureSpace space, PointMask subset)
    : ambient(std::move(space)), subspace_points(subset) {
    ambient.require_subset(subset, "subspace");
}

ClosureSpace product_space(const ClosureSpace& a, const ClosureSpace& b) {
    const int na = a.size(), nb = b.size();
    if (na * nb > kMaxPoints)
        throw resource_error("product would have " + std::to_string(na * nb) +
                             " points; the configured maximum is " +
                             std::to_string(kMaxPoints));
    std::vector<std::string> names;
    std::vector<PointMask> closures;
    names.reserve(static_cast<size_t>(na * nb));
    auto idx = [nb](int x, int y) { return x * nb + y; };
    for (int x = 0; x < na; ++x)
        for (int y = 0; y < nb; ++y) names.push_back(tuple_name(a.name_of(x), b.name_of(y)));
    for (int x = 0; x < na; ++x)
        for (int y = 0; y < nb; ++y) {
            PointMask m = 0;
            for (int x2 = 0; x2 < na; ++x2)
                for (int y2 = 0; y2 < nb; ++y2)
                    if (a.contains(x2, a.point_closure(x)) &&
                        b.contains(y2, b.point_closure(y)))
                        m |= PointMask{1} << idx(x2, y2);
            closures.push_back(m);
        }
    return ClosureSpace(std::move(names), std::move(closures));
}

ClosureSpace inductive_product_space(const ClosureSpace& a, const ClosureSpace& b) {
    const int na = a.size(), nb = b.size();
    if (na * nb > kMaxPoints)
        throw resource_error("inductive product would have " + std::to_string(na * nb) +
                             " points; the configured maximum is " +
                             std::to_string(kMaxPoints));
    std::vector<std::string> names;
    std::vector<PointMask> closures;
    auto idx = [nb](int x, int y) { return x * nb + y; };
    for (int x = 0; x < na; ++x)
        for (int y = 0; y < nb; ++y) names.push_back(tuple_name(a.name_of(x), b.name_of(y)));
    for (int x = 0; x < na; ++x)
        for (int y = 0; y < nb; ++y) {
            PointMask m = 0;
            for (int y2 = 0; y2 < nb; ++y2)
                if (b.contains(y2, b.point_closure(y))) m |= PointMask{1} << idx(x, y2);
            for (int x2 = 0; x2 < na; ++x2)
                if (a.contains(x2, a.point_closure(x))) m |= PointMask{1} << idx(x2, y);
            closures.push_back(m);
        }
    return ClosureSpace(std::move(names), std::move(closures));
}

ClosureSpace power_space(const ClosureSpace& base, int n, ProductKind kind) {
    if (n < 0) throw input_error("power exponent must be nonnegative");
    if (n == 0) return ClosureSpace({"()"}, {PointMask{1}});
    ClosureSpace out = base;
    for (int i = 1; i < n; ++i)
        out = kind == ProductKind::Cross ? product_space(out, base)
                                         : inductive_product_space(out, base);
    return out;
}

CoproductResult coproduct_space(const ClosureSpace& a, const ClosureSpace& b) {
    const int na = a.size(), nb = b.size();
    if (na + nb > kMaxPoints)
        throw resource_error("coproduct would have " + std::to_string(na + nb) +
                             " points; the configured maximum is " +
                             std::to_string(kMaxPoints));
    std::vector<std::string> names;
    std::vector<PointMask> closures;
    for (int x = 0; x < na; ++x) names.push_back("0:" + a.name_of(x));
    for (int y = 0; y < nb; ++y) names.push_back("1:" + b.name_of(y));
    for (int x = 0; x < na; ++x) closures.push_back(a.point_closure(x));
    for (int y = 0; y < nb; ++y)
        closures.push_back(b.point_closure(y) << na);
    ClosureSpace space(std::move(names), std::move(closures));
    std::vector<int> ia(static_cast<size_t>(na)), ib(static_cast<size_t>(nb));
    std::iota(ia.begin(), ia.end(), 0);
    std::iota(ib.begin(), ib.end(), na);
    return CoproductResult{space, SpaceMap(a, space, std::move(ia)),
                           SpaceMap(b, space, std::move(ib))};
}

namespace {

// Deterministic quotient construction shared by pushout and X/A: classes are
// named and ordered by their lexicographically least member name.
struct QuotientClasses {
    std::vector<int> class_of;        // original point -> class index
    std::vector<std::string> names;   // class index -> representative name
    int count = 0;
};

QuotientClasses build_classes(const std::vector<std::string>& point_names,
                              std::vector<int> parent) {
    auto root = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] =
                parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    const int n = static_cast<int>(point_names.size());
    std::map<int, std::string> least; // root -> least member name
    for (int x = 0; x < n; ++x) {
        int r = root(x);
        auto it = least.find(r);
        if (it == least.end() || point_names[static_cast<size_t>(x)] < it->second)
            least[r] = point_names[static_cast<size_t>(x)];
    }
    std::vector<std::pair<std::string, int>> ordered; // (name, root)
    for (auto& [r, nm] : least) ordered.emplace_back(nm, r);
    std::sort(ordered.begin(), ordered.end());
    std::map<int, int> class_index;
    QuotientClasses out;
    for (auto& [nm, r] : ordered) {
        class_index[r] = out.count++;
        out.names.push_back(nm);
    }
    out.class_of.resize(static_cast<size_t>(n));
    for (int x = 0; x < n; ++x) out.class_of[static_cast<size_t>(x)] = class_index[root(x)];
    return out;
}

// Closure on a quotient p : Y -> Q, c_Q(S) = p(c(p^-1 S)), restricted to
// singletons.
std::vector<PointMask> quotient_closures(const ClosureSpace& total,
                                         const QuotientClasses& classes) {
    std::vector<PointMask> preimage(static_cast<size_t>(classes.count), 0);
    for (int x = 0; x < total.size(); ++x)
        preimage[static_cast<size_t>(classes.class_of[static_cast<size_t>(x)])] |=
            PointMask{1} << x;
    std::vector<PointMask> out;
    for (int q = 0; q < classes.count; ++q) {
        PointMask cl = total.closure(preimage[static_cast<size_t>(q)]);
        PointMask m = 0;
        while (cl) {
            int x = std::countr_zero(cl);
            cl &= cl - 1;
            m |= PointMask{1} << classes.class_of[static_cast<size_t>(x)];
        }
        out.push_back(m);
    }
    return out;
}

} // namespace

PushoutResult pushout_space(const SpaceMap& f, const SpaceMap& g) {
    if (f.source != g.source)
        throw input_error("pushout legs must share their source space");
    if (!is_continuous(f) || !is_continuous(g))
        throw input_error("pushout legs must be continuous");
    CoproductResult cp = coproduct_space(f.target, g.target);
    const int nx = f.target.size();
    std::vector<int> parent(static_cast<size_t>(cp.space.size()));
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) x = parent[static_cast<size_t>(x)];
        return x;
    };
    for (int a = 0; a < f.source.size(); ++a) {
        int u = root(f(a)), v = root(g(a) + nx);
        if (u != v) parent[static_cast<size_t>(u)] = v;
    }
    QuotientClasses classes = build_classes(cp.space.point_names(), parent);
    // The pushout closure i(c(i^-1 B)) | j(d(j^-1 B)) equals the coproduct
    // closure pushed through the quotient map.
    ClosureSpace p(classes.names, quotient_closures(cp.space, classes));
    std::vector<int> ass_x(static_cast<size_t>(nx)), ass_y(static_cast<size_t>(g.target.size()));
    for (int x = 0; x < nx; ++x) ass_x[static_cast<size_t>(x)] = classes.class_of[static_cast<size_t>(x)];
    for (int y = 0; y < g.target.size(); ++y)
        ass_y[static_cast<size_t>(y)] = classes.class_of[static_cast<size_t>(y + nx)];
    return PushoutResult{p, SpaceMap(f.target, p, std::move(ass_x)),
                         SpaceMap(g.target, p, std::move(ass_y))};
}

QuotientResult quotient_by_subspace(const SpacePair& pair) {
    if (pair.subspace_points == 0)
        throw input_error("cannot collapse an empty subspace");
    const ClosureSpace& x = pair.ambient;
    std::vector<int> parent(static_cast<size_t>(x.size()));
    std::iota(parent.begin(), parent.end(), 0);
    int first = std::countr_zero(pair.subspace_points);
    PointMask rest = pair.subspace_points & (pair.subspace_points - 1);
    while (rest) {
        int y = std::countr_zero(rest);
        rest &= rest - 1;
        parent[static_cast<size_t>(y)] = first;
    }
    QuotientClasses classes = build_classes(x.point_names(), parent);
    ClosureSpace q(classes.names, quotient_closures(x, classes));
    return QuotientResult{q, SpaceMap(x, q, classes.class_of)};
}

ClosureSpace subspace(const ClosureSpace& space, PointMask subset) {
    space.require_subset(subset, "subspace");
    std::vector<int> points = mask_to_points(subset);
    std::vector<int> new_index(static_cast<size_t>(space.size()), -1);
    for (size_t i = 0; i < points.size(); ++i)
        new_index[static_cast<size_t>(points[i])] = static_cast<int>(i);
    std::vector<std::string> names;
    std::vector<PointMask> closures;
    for (int p : points) {
        names.push_back(space.name_of(p));
        PointMask cl = space.point_closure(p) & subset;
        PointMask m = 0;
        while (cl) {
            int y = std::countr_zero(cl);
            cl &= cl - 1;
            m |= PointMask{1} << new_index[static_cast<size_t>(y)];
        }
        closures.push_back(m);
    }
    return ClosureSpace(std::move(names), std::move(closures));
}

ClosureSpace topological_modification(const ClosureSpace& space) {
    std::vector<PointMask> cl(static_cast<size_t>(space.size()));
    for (int x = 0; x < space.size(); ++x) cl[static_cast<size_t>(x)] = space.point_closure(x);
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t x = 0; x < cl.size(); ++x) {
            PointMask next = cl[x];
            PointMask scan = cl[x];
            while (scan) {
                int y = std::countr_zero(scan);
                scan &= scan - 1;
                next |= cl[static_cast<size_t>(y)];
            }
            if (next != cl[x]) {
                cl[x] = next;
                changed = true;
            }
        }
    }
    return ClosureSpace(space.point_names(), std::move(cl));
}

ClosureSpace standard_space(StandardKind kind, int m, std::uint64_t k) {
    auto names_upto = [](int top) {
        std::vector<std::string> names;
        for (int i = 0; i <= top; ++i) names.push_back(std::to_string(i));
        return names;
    };
    switch (kind) {
    case StandardKind::Discrete: {
        if (m < 1) throw input_error("discrete space needs at least one point");
        std::vector<PointMask> cl;
        for (int i = 0; i < m; ++i) cl.push_back(PointMask{1} << i);
        return ClosureSpace(names_upto(m - 1), std::move(cl));
    }
    case StandardKind::Indiscrete: {
        if (m < 1) throw input_error("indiscrete space needs at least one point");
        if (m > kMaxPoints)
            throw resource_error("indiscrete space exceeds the point cap");
        PointMask u = m == kMaxPoints ? ~PointMask{0} : ((PointMask{1} << m) - 1);
        return ClosureSpace(names_upto(m - 1), std::vector<PointMask>(static_cast<size_t>(m), u));
    }
    case StandardKind::JBot:
        return standard_space(StandardKind::Discrete, m + 1);
    case StandardKind::JTop:
        return standard_space(StandardKind::Indiscrete, m + 1);
    case StandardKind::JM: {
        std::vector<PointMask> cl;
        for (int i = 0; i <= m; ++i) {
            PointMask c = PointMask{1} << i;
            if (i > 0) c |= PointMask{1} << (i - 1);
            if (i < m) c |= PointMask{1} << (i + 1);
            cl.push_back(c);
        }
        return ClosureSpace(names_upto(m), std::move(cl));
    }
    case StandardKind::JPlus:
        return standard_space(StandardKind::JMK, 1, 1);
    case StandardKind::JMinus:
        return standard_space(StandardKind::JMK, 1, 0);
    case StandardKind::JMK: {
        if (m < 0 || m >= kMaxPoints) throw input_error("JMK length out of range");
        if (k >= (std::uint64_t{1} << m))
            throw input_error("JMK pattern k out of range [0, 2^m - 1]");
        std::vector<PointMask> cl;
        for (int i = 0; i <= m; ++i) cl.push_back(PointMask{1} << i);
        for (int i = 1; i <= m; ++i) {
            bool bit = (k >> (i - 1)) & 1u;
            if (bit)
                cl[static_cast<size_t>(i - 1)] |= PointMask{1} << i; // i in c(i-1)
            else
                cl[static_cast<size_t>(i)] |= PointMask{1} << (i - 1); // i-1 in c(i)
        }
        return ClosureSpace(names_upto(m), std::move(cl));
    }
    case StandardKind::JLe: {
        std::vector<PointMask> cl;
        for (int i = 0; i <= m; ++i) {
            PointMask c = 0;
            for (int j = i; j <= m; ++j) c |= PointMask{1} << j;
            cl.push_back(c);
        }
        return ClosureSpace(names_upto(m), std::move(cl));
    }
    }
    throw input_error("unknown standard space kind");
}

ClosureSpace cycle_space(int m) {
    if (m < 3) throw input_error("cycle needs at least 3 points");
    if (m > kMaxPoints) throw resource_error("cycle exceeds the point cap");
    std::vector<std::string> names;
    std::vector<PointMask> cl;
    for (int i = 0; i < m; ++i) {
        names.push_back(std::to_string(i));
        PointMask c = PointMask{1} << i;
        c |= PointMask{1} << ((i + 1) % m);
        c |= PointMask{1} << ((i + m - 1) % m);
        cl.push_back(c);
    }
    return ClosureSpace(std::move(names), std::move(cl));
}

ClosureSpace path_space(int m) {
    if (m < 1) throw input_error("path needs at least 1 point");
    return standard_space(StandardKind::JM, m - 1);
}

std::vector<int> mask_to_points(PointMask mask) {
    std::vector<int> out;
    while (mask) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return out;
}

PointMask points_to_mask(const std::vector<int>& points) {
    PointMask m = 0;
    for (int p : points) m |= PointMask{1} << p;
    return m;
}

} // namespace pretop
