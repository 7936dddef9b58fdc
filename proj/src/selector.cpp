#include "pretop/selector.hpp"

#include <algorithm>
#include <cctype>

namespace pretop {

namespace {
std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}
} // namespace

ClosureSpace interval_space(Interval j) {
    return j == Interval::J1 ? j1_space() : jplus_space();
}

Interval parse_interval(const std::string& token) {
    std::string t = lower(token);
    if (t == "j1") return Interval::J1;
    if (t == "jplus" || t == "j+") return Interval::JPlus;
    if (t == "i")
        throw unsupported_theory_error(
            "non-finitary theory: the interval I is not computable here");
    throw input_error("unknown interval '" + token + "' (expected j1 or jplus)");
}

ProductKind parse_product(const std::string& token) {
    std::string t = lower(token);
    if (t == "cross" || t == "x") return ProductKind::Cross;
    if (t == "inductive" || t == "box") return ProductKind::Inductive;
    throw input_error("unknown product '" + token + "' (expected cross or inductive)");
}

Flavor parse_flavor(const std::string& token) {
    std::string t = lower(token);
    if (t == "simplicial") return Flavor::Simplicial;
    if (t == "cubical") return Flavor::Cubical;
    throw input_error("unknown flavor '" + token + "' (expected simplicial or cubical)");
}

std::string to_string(Interval j) { return j == Interval::J1 ? "j1" : "jplus"; }
std::string to_string(ProductKind p) {
    return p == ProductKind::Cross ? "cross" : "inductive";
}
std::string to_string(Flavor f) {
    return f == Flavor::Simplicial ? "simplicial" : "cubical";
}

std::string to_string(const TheorySelector& sel) {
    if (sel.flavor == Flavor::Simplicial)
        return "(" + to_string(sel.interval) + ",simplicial)";
    return "(" + to_string(sel.interval) + "," + to_string(sel.product) + ",cubical)";
}

} // namespace pretop
