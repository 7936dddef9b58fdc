#include "pretop/nerve.hpp"

#include <bit>

namespace pretop {

namespace {

void check_dimension(int n, const EnumLimits& limits) {
    if (n < 0) throw input_error("dimension must be nonnegative");
    if (n > limits.max_dim)
        throw resource_error("dimension " + std::to_string(n) +
                             " exceeds the configured maximum " +
                             std::to_string(limits.max_dim));
}

// Insert `bit` at position `pos` (0-based) of the corner word.
unsigned insert_bit(unsigned w, int pos, unsigned bit) {
    unsigned low = w & ((1u << pos) - 1u);
    unsigned high = (w >> pos) << (pos + 1);
    return low | high | (bit << pos);
}

unsigned delete_bit(unsigned w, int pos) {
    unsigned low = w & ((1u << pos) - 1u);
    unsigned high = (w >> (pos + 1)) << pos;
    return low | high;
}

bool adjacent(const ClosureSpace& space, int from, int to) {
    return space.contains(to, space.point_closure(from));
}

// Whether corner value v at word m is compatible with the already assigned
// lower corners, per theory.
bool corner_ok(const ClosureSpace& space, Interval j, ProductKind product,
               const std::vector<int>& corners, unsigned m, int v) {
    if (product == ProductKind::Cross) {
        if (j == Interval::J1) {
            for (unsigned p = 0; p < m; ++p) {
                int u = corners[p];
                if (!adjacent(space, u, v) || !adjacent(space, v, u)) return false;
            }
            return true;
        }
        // JPlus: constraints along the coordinatewise order only.
        for (unsigned p = 0; p < m; ++p) {
            if ((p & ~m) != 0) continue; // p not below m
            if (!adjacent(space, corners[p], v)) return false;
        }
        return true;
    }
    // Inductive product: constraints along Hamming-1 edges only.
    unsigned bits = m;
    while (bits) {
        unsigned b = bits & (0u - bits);
        bits ^= b;
        int u = corners[m ^ b];
        if (!adjacent(space, u, v)) return false;
        if (j == Interval::J1 && !adjacent(space, v, u)) return false;
    }
    return true;
}

} // namespace

bool is_valid_simplex(const ClosureSpace& space, Interval j,
                      const std::vector<int>& vertices) {
    const size_t n = vertices.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t k = i + 1; k < n; ++k) {
            if (!adjacent(space, vertices[i], vertices[k])) return false;
            if (j == Interval::J1 && !adjacent(space, vertices[k], vertices[i]))
                return false;
        }
    return true;
}

bool is_valid_cube(const ClosureSpace& space, Interval j, ProductKind product,
                   int dim, const std::vector<int>& corners) {
    if (corners.size() != (size_t{1} << dim)) return false;
    for (unsigned m = 1; m < corners.size(); ++m)
        if (!corner_ok(space, j, product, corners, m, corners[m])) return false;
    return true;
}

std::vector<Simplex> enumerate_simplices(const ClosureSpace& space, Interval j, int n,
                                         const EnumLimits& limits) {
    check_dimension(n, limits);
    std::vector<Simplex> out;
    std::vector<int> v(static_cast<size_t>(n) + 1);
    auto extend = [&](auto&& self, int pos) -> void {
        if (pos == n + 1) {
            if (out.size() >= limits.max_count)
                throw resource_error("simplex enumeration exceeded the cap of " +
                                     std::to_string(limits.max_count));
            out.push_back(Simplex{v});
            return;
        }
        for (int cand = 0; cand < space.size(); ++cand) {
            bool ok = true;
            for (int i = 0; i < pos && ok; ++i) {
                ok = adjacent(space, v[static_cast<size_t>(i)], cand);
                if (ok && j == Interval::J1)
                    ok = adjacent(space, cand, v[static_cast<size_t>(i)]);
            }
            if (!ok) continue;
            v[static_cast<size_t>(pos)] = cand;
            self(self, pos + 1);
        }
    };
    extend(extend, 0);
    return out;
}

std::vector<Cube> enumerate_cubes(const ClosureSpace& space, Interval j,
                                  ProductKind product, int n, const EnumLimits& limits) {
    check_dimension(n, limits);
    const unsigned ncorners = 1u << n;
    std::vector<Cube> out;
    std::vector<int> c(ncorners);
    auto extend = [&](auto&& self, unsigned m) -> void {
        if (m == ncorners) {
            if (out.size() >= limits.max_count)
                throw resource_error("cube enumeration exceeded the cap of " +
                                     std::to_string(limits.max_count));
            out.push_back(Cube{n, c});
            return;
        }
        for (int cand = 0; cand < space.size(); ++cand) {
            if (!corner_ok(space, j, product, c, m, cand)) continue;
            c[m] = cand;
            self(self, m + 1);
        }
    };
    extend(extend, 0);
    return out;
}

Simplex simplex_face(const Simplex& s, int i) {
    if (i < 0 || i > s.dim() || s.dim() < 1)
        throw input_error("simplex face index out of range");
    Simplex out;
    out.vertices = s.vertices;
    out.vertices.erase(out.vertices.begin() + i);
    return out;
}

Simplex simplex_degeneracy(const Simplex& s, int i) {
    if (i < 0 || i > s.dim()) throw input_error("simplex degeneracy index out of range");
    Simplex out;
    out.vertices = s.vertices;
    out.vertices.insert(out.vertices.begin() + i, s.vertices[static_cast<size_t>(i)]);
    return out;
}

bool is_degenerate(const Simplex& s) {
    for (size_t i = 0; i + 1 < s.vertices.size(); ++i)
        if (s.vertices[i] == s.vertices[i + 1]) return true;
    return false;
}

Cube cube_face(const Cube& q, int i, int side) {
    if (i < 1 || i > q.dim) throw input_error("cube face index out of range");
    if (side != 0 && side != 1) throw input_error("cube face side must be 0 or 1");
    Cube out;
    out.dim = q.dim - 1;
    out.corners.resize(size_t{1} << out.dim);
    for (unsigned w = 0; w < out.corners.size(); ++w)
        out.corners[w] = q.corners[insert_bit(w, i - 1, static_cast<unsigned>(side))];
    return out;
}

Cube cube_degeneracy(const Cube& q, int i) {
    if (i < 1 || i > q.dim + 1) throw input_error("cube degeneracy index out of range");
    Cube out;
    out.dim = q.dim + 1;
    out.corners.resize(size_t{1} << out.dim);
    for (unsigned w = 0; w < out.corners.size(); ++w)
        out.corners[w] = q.corners[delete_bit(w, i - 1)];
    return out;
}

bool is_degenerate(const Cube& q) {
    for (int i = 1; i <= q.dim; ++i)
        if (cube_face(q, i, 0) == cube_face(q, i, 1)) return true;
    return false;
}

Cube cube_connection(const Cube& q, int i, int side) {
    if (i < 1 || i > q.dim) throw input_error("cube connection index out of range");
    if (side != 0 && side != 1) throw input_error("cube connection side must be 0 or 1");
    Cube out;
    out.dim = q.dim + 1;
    out.corners.resize(size_t{1} << out.dim);
    for (unsigned w = 0; w < out.corners.size(); ++w) {
        unsigned ai = (w >> (i - 1)) & 1u;
        unsigned ai1 = (w >> i) & 1u;
        unsigned merged = side == 1 ? (ai & ai1) : (ai | ai1); // min / max
        unsigned inner = delete_bit(w, i);
        inner = (inner & ~(1u << (i - 1))) | (merged << (i - 1));
        out.corners[w] = q.corners[inner];
    }
    return out;
}

Cube comparison_cube(const Simplex& s) {
    Cube out;
    out.dim = s.dim();
    out.corners.resize(size_t{1} << out.dim);
    for (unsigned w = 0; w < out.corners.size(); ++w) {
        int leading = std::countr_one(w);
        out.corners[w] = s.vertices[static_cast<size_t>(leading)];
    }
    return out;
}

Simplex postcompose(const Simplex& s, const SpaceMap& map) {
    if (!is_continuous(map)) throw input_error("postcomposition requires a continuous map");
    Simplex out;
    out.vertices.reserve(s.vertices.size());
    for (int v : s.vertices) out.vertices.push_back(map(v));
    return out;
}

Cube postcompose(const Cube& q, const SpaceMap& map) {
    if (!is_continuous(map)) throw input_error("postcomposition requires a continuous map");
    Cube out;
    out.dim = q.dim;
    out.corners.reserve(q.corners.size());
    for (int v : q.corners) out.corners.push_back(map(v));
    return out;
}

std::string simplex_label(const ClosureSpace& space, const Simplex& s) {
    std::string out = "(";
    for (size_t i = 0; i < s.vertices.size(); ++i) {
        if (i) out += ",";
        out += space.name_of(s.vertices[i]);
    }
    return out + ")";
}

std::string cube_label(const ClosureSpace& space, const Cube& q) {
    std::string out = "[";
    for (size_t i = 0; i < q.corners.size(); ++i) {
        if (i) out += "|";
        out += space.name_of(q.corners[i]);
    }
    return out + "]";
}

} // namespace pretop
