#include "pretop/chain.hpp"

#include <algorithm>
#include <map>

namespace pretop {

namespace {

bool image_within(const std::vector<int>& points, PointMask mask) {
    for (int p : points)
        if (!((mask >> p) & 1u)) return false;
    return true;
}

bool keep_element(const std::vector<int>& points, const ComplexOptions& o) {
    if (o.within && !image_within(points, *o.within)) return false;
    if (o.within_any) {
        bool inside = false;
        for (PointMask part : *o.within_any)
            if (image_within(points, part)) {
                inside = true;
                break;
            }
        if (!inside) return false;
    }
    if (o.rel && image_within(points, *o.rel)) return false;
    return true;
}

void check_dd_zero(const ChainComplex& c) {
    for (int k = 2; k <= c.top_dim(); ++k) {
        const Mat64& a = c.boundary[static_cast<size_t>(k - 1)];
        const Mat64& b = c.boundary[static_cast<size_t>(k)];
        for (int i = 0; i < a.rows; ++i)
            for (int j = 0; j < b.cols; ++j) {
                std::int64_t s = 0;
                for (int m = 0; m < a.cols; ++m) s += a.at(i, m) * b.at(m, j);
                if (s != 0) throw input_error("boundary matrices do not square to zero");
            }
    }
}

} // namespace

int ChainComplex::index_of_simplex(int n, const Simplex& s) const {
    if (n < 0 || n > top_dim()) return -1;
    const auto& table = simplices[static_cast<size_t>(n)];
    auto it = std::lower_bound(table.begin(), table.end(), s);
    if (it != table.end() && *it == s) return static_cast<int>(it - table.begin());
    return -1;
}

int ChainComplex::index_of_cube(int n, const Cube& q) const {
    if (n < 0 || n > top_dim()) return -1;
    const auto& table = cubes[static_cast<size_t>(n)];
    auto it = std::lower_bound(table.begin(), table.end(), q);
    if (it != table.end() && *it == q) return static_cast<int>(it - table.begin());
    return -1;
}

ChainComplex build_complex(const ClosureSpace& space, const TheorySelector& selector,
                           int max_dim, const ComplexOptions& options) {
    selector.validate();
    if (max_dim < 0) throw input_error("max_dim must be nonnegative");
    const int top = max_dim + 1;
    const EnumLimits& limits = options.limits;
    ChainComplex c;
    c.selector = selector;
    c.augmentable = !options.rel.has_value();
    c.labels.resize(static_cast<size_t>(top) + 1);
    c.boundary.resize(static_cast<size_t>(top) + 1);
    if (selector.flavor == Flavor::Simplicial) {
        c.simplices.resize(static_cast<size_t>(top) + 1);
        for (int n = 0; n <= top; ++n) {
            for (Simplex& s : enumerate_simplices(space, selector.interval, n, limits)) {
                if (options.normalize && is_degenerate(s)) continue;
                if (!keep_element(s.vertices, options)) continue;
                c.simplices[static_cast<size_t>(n)].push_back(std::move(s));
            }
            for (const Simplex& s : c.simplices[static_cast<size_t>(n)])
                c.labels[static_cast<size_t>(n)].push_back(simplex_label(space, s));
        }
        for (int n = 1; n <= top; ++n) {
            const auto& basis = c.simplices[static_cast<size_t>(n)];
            Mat64 b(c.rank(n - 1), static_cast<int>(basis.size()));
            for (int j = 0; j < b.cols; ++j) {
                const Simplex& s = basis[static_cast<size_t>(j)];
                for (int i = 0; i <= n; ++i) {
                    Simplex f = simplex_face(s, i);
                    int row = c.index_of_simplex(n - 1, f);
                    if (row < 0) continue; // face was quotiented away
                    b.at(row, j) += (i % 2 == 0) ? 1 : -1;
                }
            }
            c.boundary[static_cast<size_t>(n)] = std::move(b);
        }
    } else {
        c.cubes.resize(static_cast<size_t>(top) + 1);
        for (int n = 0; n <= top; ++n) {
            for (Cube& q :
                 enumerate_cubes(space, selector.interval, selector.product, n, limits)) {
                if (options.normalize && is_degenerate(q)) continue;
                if (!keep_element(q.corners, options)) continue;
                c.cubes[static_cast<size_t>(n)].push_back(std::move(q));
            }
            for (const Cube& q : c.cubes[static_cast<size_t>(n)])
                c.labels[static_cast<size_t>(n)].push_back(cube_label(space, q));
        }
        for (int n = 1; n <= top; ++n) {
            const auto& basis = c.cubes[static_cast<size_t>(n)];
            Mat64 b(c.rank(n - 1), static_cast<int>(basis.size()));
            for (int j = 0; j < b.cols; ++j) {
                const Cube& q = basis[static_cast<size_t>(j)];
                for (int i = 1; i <= n; ++i) {
                    const std::int64_t sign = (i % 2 == 0) ? 1 : -1;
                    int row_a = c.index_of_cube(n - 1, cube_face(q, i, 0));
                    int row_b = c.index_of_cube(n - 1, cube_face(q, i, 1));
                    if (row_a >= 0) b.at(row_a, j) += sign;
                    if (row_b >= 0) b.at(row_b, j) -= sign;
                }
            }
            c.boundary[static_cast<size_t>(n)] = std::move(b);
        }
    }
    return c;
}

ChainComplex complex_from_matrices(const std::vector<int>& ranks,
                                   const std::vector<Mat64>& boundaries) {
    if (boundaries.size() + 1 != ranks.size() && !(boundaries.empty() && ranks.size() == 1))
        throw input_error("need one boundary matrix per positive dimension");
    ChainComplex c;
    c.labels.resize(ranks.size());
    c.boundary.resize(ranks.size());
    for (size_t n = 0; n < ranks.size(); ++n)
        for (int i = 0; i < ranks[n]; ++i)
            c.labels[n].push_back("e" + std::to_string(n) + "_" + std::to_string(i));
    for (size_t k = 1; k < ranks.size(); ++k) {
        const Mat64& b = boundaries[k - 1];
        if (b.rows != ranks[k - 1] || b.cols != ranks[k])
            throw input_error("boundary matrix shape mismatch");
        c.boundary[k] = b;
    }
    check_dd_zero(c);
    return c;
}

ChainComplex tensor_complex(const ChainComplex& c, const ChainComplex& d) {
    ChainComplex t;
    const int top = std::min(c.top_dim(), d.top_dim());
    t.labels.resize(static_cast<size_t>(top) + 1);
    t.boundary.resize(static_cast<size_t>(top) + 1);
    // block offset of C_i (x) D_{n-i} inside (C (x) D)_n
    auto offsets = [&](int n) {
        std::vector<int> off;
        int acc = 0;
        for (int i = 0; i <= n; ++i) {
            off.push_back(acc);
            acc += c.rank(i) * d.rank(n - i);
        }
        off.push_back(acc);
        return off;
    };
    for (int n = 0; n <= top; ++n)
        for (int i = 0; i <= n; ++i)
            for (const std::string& a : c.labels[static_cast<size_t>(i)])
                for (const std::string& b : d.labels[static_cast<size_t>(n - i)])
                    t.labels[static_cast<size_t>(n)].push_back(a + "(x)" + b);
    for (int n = 1; n <= top; ++n) {
        auto off_n = offsets(n);
        auto off_m = offsets(n - 1);
        Mat64 bnd(t.rank(n - 1), t.rank(n));
        for (int i = 0; i <= n; ++i) {
            const int rc = c.rank(i), rd = d.rank(n - i);
            for (int a = 0; a < rc; ++a)
                for (int b = 0; b < rd; ++b) {
                    const int col = off_n[static_cast<size_t>(i)] + a * rd + b;
                    if (i >= 1) { // d_C a (x) b lands in block i-1
                        const Mat64& bc = c.boundary[static_cast<size_t>(i)];
                        const int rd_prev = d.rank(n - i);
                        for (int a2 = 0; a2 < bc.rows; ++a2) {
                            std::int64_t v = bc.at(a2, a);
                            if (v)
                                bnd.at(off_m[static_cast<size_t>(i - 1)] + a2 * rd_prev + b,
                                       col) += v;
                        }
                    }
                    if (n - i >= 1) { // (-1)^i a (x) d_D b lands in block i
                        const Mat64& bd = d.boundary[static_cast<size_t>(n - i)];
                        const int rd_prev = d.rank(n - i - 1);
                        const std::int64_t sign = (i % 2 == 0) ? 1 : -1;
                        for (int b2 = 0; b2 < bd.rows; ++b2) {
                            std::int64_t v = bd.at(b2, b);
                            if (v)
                                bnd.at(off_m[static_cast<size_t>(i)] + a * rd_prev + b2,
                                       col) += sign * v;
                        }
                    }
                }
        }
        t.boundary[static_cast<size_t>(n)] = std::move(bnd);
    }
    return t;
}

namespace {

ChainMap map_by_images(const ChainComplex& src, const ChainComplex& tgt,
                       const SpaceMap* post, bool comparison) {
    ChainMap f;
    const int dims = std::min(src.top_dim(), tgt.top_dim()) + 1;
    f.cols.resize(static_cast<size_t>(dims));
    for (int n = 0; n < dims; ++n) {
        auto& column_table = f.cols[static_cast<size_t>(n)];
        column_table.resize(static_cast<size_t>(src.rank(n)));
        for (int j = 0; j < src.rank(n); ++j) {
            if (!src.simplices.empty() && !comparison) {
                Simplex img = postcompose(src.simplices[static_cast<size_t>(n)][static_cast<size_t>(j)], *post);
                int row = tgt.index_of_simplex(n, img);
                if (row < 0) continue; // degenerate image, zero in the quotient
                column_table[static_cast<size_t>(j)].push_back({row, 1});
            } else if (comparison) {
                Cube img = comparison_cube(
                    src.simplices[static_cast<size_t>(n)][static_cast<size_t>(j)]);
                int row = tgt.index_of_cube(n, img);
                if (row < 0)
                    throw input_error("comparison image missing from cubical basis");
                column_table[static_cast<size_t>(j)].push_back({row, 1});
            } else {
                Cube img = postcompose(src.cubes[static_cast<size_t>(n)][static_cast<size_t>(j)], *post);
                int row = tgt.index_of_cube(n, img);
                if (row < 0) continue;
                column_table[static_cast<size_t>(j)].push_back({row, 1});
            }
        }
    }
    return f;
}

} // namespace

ChainMap induced_chain_map(const SpaceMap& map, const ChainComplex& src,
                           const ChainComplex& tgt) {
    if (!is_continuous(map))
        throw input_error("induced chain map requires a continuous map");
    if (!src.selector || !tgt.selector || !(*src.selector == *tgt.selector))
        throw input_error("induced chain map requires matching theories");
    return map_by_images(src, tgt, &map, false);
}

ChainMap comparison_chain_map(const ChainComplex& simplicial,
                              const ChainComplex& cubical) {
    if (!simplicial.selector || simplicial.selector->flavor != Flavor::Simplicial)
        throw input_error("comparison source must be a simplicial complex");
    if (!cubical.selector || cubical.selector->flavor != Flavor::Cubical ||
        cubical.selector->product != ProductKind::Cross ||
        cubical.selector->interval != simplicial.selector->interval)
        throw input_error("comparison target must be the (J, cross) cubical complex");
    return map_by_images(simplicial, cubical, nullptr, true);
}

ChainMap inclusion_chain_map(const ChainComplex& sub, const ChainComplex& whole) {
    ChainMap f;
    const int dims = std::min(sub.top_dim(), whole.top_dim()) + 1;
    f.cols.resize(static_cast<size_t>(dims));
    for (int n = 0; n < dims; ++n) {
        f.cols[static_cast<size_t>(n)].resize(static_cast<size_t>(sub.rank(n)));
        for (int j = 0; j < sub.rank(n); ++j) {
            int row = sub.simplices.empty()
                          ? whole.index_of_cube(n, sub.cubes[static_cast<size_t>(n)][static_cast<size_t>(j)])
                          : whole.index_of_simplex(
                                n, sub.simplices[static_cast<size_t>(n)][static_cast<size_t>(j)]);
            if (row < 0) throw input_error("subcomplex element missing from the whole");
            f.cols[static_cast<size_t>(n)][static_cast<size_t>(j)].push_back({row, 1});
        }
    }
    return f;
}

Mat64 chain_map_matrix(const ChainMap& f, const ChainComplex& src,
                       const ChainComplex& tgt, int n) {
    Mat64 m(tgt.rank(n), src.rank(n));
    if (n < 0 || n >= f.dims()) return m;
    for (int j = 0; j < src.rank(n); ++j)
        for (auto& [row, coeff] : f.cols[static_cast<size_t>(n)][static_cast<size_t>(j)])
            m.at(row, j) += coeff;
    return m;
}

bool is_chain_map(const ChainMap& f, const ChainComplex& src, const ChainComplex& tgt) {
    const int dims = std::min({f.dims() - 1, src.top_dim(), tgt.top_dim()});
    for (int n = 1; n <= dims; ++n) {
        Mat64 fn = chain_map_matrix(f, src, tgt, n);
        Mat64 fm = chain_map_matrix(f, src, tgt, n - 1);
        const Mat64& bs = src.boundary[static_cast<size_t>(n)];
        const Mat64& bt = tgt.boundary[static_cast<size_t>(n)];
        for (int i = 0; i < tgt.rank(n - 1); ++i)
            for (int j = 0; j < src.rank(n); ++j) {
                std::int64_t lhs = 0, rhs = 0;
                for (int k = 0; k < tgt.rank(n); ++k) lhs += bt.at(i, k) * fn.at(k, j);
                for (int k = 0; k < src.rank(n - 1); ++k) rhs += fm.at(i, k) * bs.at(k, j);
                if (lhs != rhs) return false;
            }
    }
    return true;
}

CochainComplex dualize(const ChainComplex& complex) {
    CochainComplex d;
    d.augmentable = complex.augmentable;
    for (int n = 0; n <= complex.top_dim(); ++n) d.ranks.push_back(complex.rank(n));
    d.delta.resize(static_cast<size_t>(complex.top_dim()));
    for (int n = 0; n < complex.top_dim(); ++n)
        d.delta[static_cast<size_t>(n)] =
            transpose64(complex.boundary[static_cast<size_t>(n + 1)]);
    return d;
}

} // namespace pretop
