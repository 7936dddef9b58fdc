#pragma once

#include <string>

#include "pretop/errors.hpp"
#include "pretop/space.hpp"

namespace pretop {

enum class Interval { J1, JPlus };
enum class Flavor { Simplicial, Cubical };

// Which singular theory to compute: the interval object, the product used to
// build cubes, and simplicial vs cubical. Simplicial theories always use the
// product closure, so `product` is meaningful for Cubical only.
struct TheorySelector {
    Interval interval = Interval::J1;
    ProductKind product = ProductKind::Cross;
    Flavor flavor = Flavor::Cubical;

    static TheorySelector simplicial(Interval j) {
        return TheorySelector{j, ProductKind::Cross, Flavor::Simplicial};
    }
    static TheorySelector cubical(Interval j, ProductKind p) {
        return TheorySelector{j, p, Flavor::Cubical};
    }

    void validate() const {
        if (flavor == Flavor::Simplicial && product == ProductKind::Inductive)
            throw unsupported_theory_error(
                "no simplicial theory is defined for the inductive product");
    }

    bool operator==(const TheorySelector&) const = default;
};

// The two-point interval space itself.
ClosureSpace interval_space(Interval j);

// Parses "j1"/"jplus"; "i" is recognized and rejected as non-finitary.
Interval parse_interval(const std::string& token);
ProductKind parse_product(const std::string& token);
Flavor parse_flavor(const std::string& token);

std::string to_string(Interval j);
std::string to_string(ProductKind p);
std::string to_string(Flavor f);
std::string to_string(const TheorySelector& sel);

} // namespace pretop
