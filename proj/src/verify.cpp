#include "pretop/verify.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace pretop {

namespace {

Json group_json(const HomologyGroup& h) {
    Json torsion = Json::array();
    for (const BigInt& d : h.torsion) torsion.push_back(d.str());
    return Json{{"betti", h.betti}, {"torsion", torsion}};
}

HomologyGroup group_of(const PresentedGroup& g) {
    return HomologyGroup{g.free_rank(), g.torsion()};
}

PointMask element_mask(const ChainComplex& c, int n, int idx) {
    if (!c.simplices.empty())
        return points_to_mask(c.simplices[static_cast<size_t>(n)][static_cast<size_t>(idx)].vertices);
    return points_to_mask(c.cubes[static_cast<size_t>(n)][static_cast<size_t>(idx)].corners);
}

int locate(const ChainComplex& tgt, const ChainComplex& src, int n, int idx) {
    if (!src.simplices.empty())
        return tgt.index_of_simplex(n, src.simplices[static_cast<size_t>(n)][static_cast<size_t>(idx)]);
    return tgt.index_of_cube(n, src.cubes[static_cast<size_t>(n)][static_cast<size_t>(idx)]);
}

PresentedGroup direct_sum_group(const PresentedGroup& a, const PresentedGroup& b) {
    PresentedGroup out;
    out.gens = a.gens + b.gens;
    out.relations = MatZ(out.gens, a.relations.cols + b.relations.cols);
    for (int i = 0; i < a.gens; ++i)
        for (int j = 0; j < a.relations.cols; ++j)
            out.relations.at(i, j) = a.relations.at(i, j);
    for (int i = 0; i < b.gens; ++i)
        for (int j = 0; j < b.relations.cols; ++j)
            out.relations.at(a.gens + i, a.relations.cols + j) = b.relations.at(i, j);
    return out;
}

MatZ stack_rows(const MatZ& top, const MatZ& bottom) {
    if (top.cols != bottom.cols) throw input_error("row stack: column mismatch");
    MatZ out(top.rows + bottom.rows, top.cols);
    for (int i = 0; i < top.rows; ++i)
        for (int j = 0; j < top.cols; ++j) out.at(i, j) = top.at(i, j);
    for (int i = 0; i < bottom.rows; ++i)
        for (int j = 0; j < bottom.cols; ++j) out.at(top.rows + i, j) = bottom.at(i, j);
    return out;
}

MatZ negate(MatZ m) {
    for (BigInt& x : m.a) x = -x;
    return m;
}

// Boundary of a BigInt coefficient vector through an int64 boundary matrix.
std::vector<BigInt> apply_boundary(const Mat64& b, const std::vector<BigInt>& v) {
    std::vector<BigInt> out(static_cast<size_t>(b.rows));
    for (int j = 0; j < b.cols; ++j) {
        if (v[static_cast<size_t>(j)].is_zero()) continue;
        for (int i = 0; i < b.rows; ++i)
            if (b.at(i, j)) out[static_cast<size_t>(i)] += b.at(i, j) * v[static_cast<size_t>(j)];
    }
    return out;
}

// Connecting map of the pair sequence: lift a relative cycle, take its
// boundary in X, read it off as a cycle of A.
MatZ les_connecting(const ChainComplex& cx, const ChainComplex& cxa,
                    const ChainComplex& ca, const HomologyPresentation& prel,
                    const HomologyPresentation& pa, int n) {
    MatZ out(pa.group.gens, prel.group.gens);
    for (int g = 0; g < prel.group.gens; ++g) {
        std::vector<BigInt> lifted(static_cast<size_t>(cx.rank(n)));
        for (int k = 0; k < cxa.rank(n); ++k) {
            const BigInt& coeff = prel.kernel_basis.at(k, g);
            if (coeff.is_zero()) continue;
            int xi = locate(cx, cxa, n, k);
            if (xi < 0) throw input_error("relative basis element missing from X");
            lifted[static_cast<size_t>(xi)] = coeff;
        }
        std::vector<BigInt> bnd = apply_boundary(cx.boundary[static_cast<size_t>(n)], lifted);
        std::vector<BigInt> in_a(static_cast<size_t>(ca.rank(n - 1)));
        for (int i = 0; i < cx.rank(n - 1); ++i) {
            if (bnd[static_cast<size_t>(i)].is_zero()) continue;
            int ai = locate(ca, cx, n - 1, i);
            if (ai < 0)
                throw input_error("relative cycle boundary escapes the subspace");
            in_a[static_cast<size_t>(ai)] = bnd[static_cast<size_t>(i)];
        }
        std::vector<BigInt> coords = pa.cycle_coordinates(in_a);
        for (int i = 0; i < pa.group.gens; ++i) out.at(i, g) = coords[static_cast<size_t>(i)];
    }
    return out;
}

// Connecting map of the cover sequence: split the cycle into its A-part and
// B-part and take the boundary of the A-part.
MatZ mv_connecting(const ChainComplex& cu, const ChainComplex& cab,
                   const HomologyPresentation& pu, const HomologyPresentation& pab,
                   PointMask a_mask, int n) {
    MatZ out(pab.group.gens, pu.group.gens);
    for (int g = 0; g < pu.group.gens; ++g) {
        std::vector<BigInt> apart(static_cast<size_t>(cu.rank(n)));
        for (int k = 0; k < cu.rank(n); ++k) {
            const BigInt& coeff = pu.kernel_basis.at(k, g);
            if (coeff.is_zero()) continue;
            if (!(element_mask(cu, n, k) & ~a_mask)) apart[static_cast<size_t>(k)] = coeff;
        }
        std::vector<BigInt> bnd = apply_boundary(cu.boundary[static_cast<size_t>(n)], apart);
        std::vector<BigInt> in_ab(static_cast<size_t>(cab.rank(n - 1)));
        for (int i = 0; i < cu.rank(n - 1); ++i) {
            if (bnd[static_cast<size_t>(i)].is_zero()) continue;
            int ci = locate(cab, cu, n - 1, i);
            if (ci < 0)
                throw input_error("cover cycle boundary escapes the intersection");
            in_ab[static_cast<size_t>(ci)] = bnd[static_cast<size_t>(i)];
        }
        std::vector<BigInt> coords = pab.cycle_coordinates(in_ab);
        for (int i = 0; i < pab.group.gens; ++i) out.at(i, g) = coords[static_cast<size_t>(i)];
    }
    return out;
}

MatZ induced_between(const ChainComplex& src, const ChainComplex& tgt,
                     const HomologyPresentation& ps, const HomologyPresentation& pt) {
    ChainMap inc = inclusion_chain_map(src, tgt);
    return induced_on_homology(inc, src, tgt, ps, pt);
}

bool selector_asserts(const TheorySelector& sel) {
    return sel.flavor == Flavor::Simplicial || sel.product == ProductKind::Cross;
}

std::string instance_name(const ClosureSpace& space) {
    std::ostringstream out;
    out << space.size() << "-point space {";
    for (int i = 0; i < space.size(); ++i) {
        if (i) out << ",";
        out << space.name_of(i);
    }
    out << "}";
    return out.str();
}

} // namespace

Json VerifyReport::to_json() const {
    return Json{{"theorem", theorem},
                {"selector", selector},
                {"instance", instance},
                {"status", status},
                {"details", details}};
}

VerifyReport verify_cover_subcomplex(const ClosureSpace& space, const Cover& cover,
                                     const TheorySelector& selector,
                                     const VerifyOptions& options) {
    selector.validate();
    if (!is_interior_cover(cover))
        throw input_error("the given parts are not an interior cover");
    VerifyReport report;
    report.theorem = "cover-subcomplex";
    report.selector = to_string(selector);
    report.instance = instance_name(space);

    ComplexOptions full_opts;
    full_opts.limits = options.limits;
    ChainComplex full = build_complex(space, selector, options.max_dim, full_opts);
    ComplexOptions sub_opts = full_opts;
    sub_opts.within_any = cover.parts;
    ChainComplex sub = build_complex(space, selector, options.max_dim, sub_opts);

    bool equal = true;
    Json escapes = Json::array();
    for (int n = 0; n <= full.top_dim(); ++n) {
        if (sub.rank(n) == full.rank(n)) continue;
        equal = false;
        for (int i = 0; i < full.rank(n) && escapes.size() < 8; ++i)
            if (locate(sub, full, n, i) < 0)
                escapes.push_back(full.labels[static_cast<size_t>(n)][static_cast<size_t>(i)]);
    }
    report.details["equal"] = equal;
    report.details["escaping_elements"] = escapes;
    if (selector_asserts(selector))
        report.status = equal ? "verified" : "refuted";
    else
        report.status = "experimental";
    return report;
}

VerifyReport verify_mayer_vietoris(const ClosureSpace& space, PointMask a, PointMask b,
                                   const TheorySelector& selector,
                                   const VerifyOptions& options) {
    selector.validate();
    if (!is_interior_cover(Cover{space, {a, b}}))
        throw input_error("{A, B} is not an interior cover");
    VerifyReport report;
    report.theorem = "mayer-vietoris";
    report.selector = to_string(selector);
    report.instance = instance_name(space);

    const int max_dim = options.max_dim;
    ComplexOptions base;
    base.limits = options.limits;
    ComplexOptions in_a = base, in_b = base, in_ab = base, in_u = base;
    in_a.within = a;
    in_b.within = b;
    in_ab.within = a & b;
    in_u.within_any = std::vector<PointMask>{a, b};

    ChainComplex cu = build_complex(space, selector, max_dim, in_u);
    ChainComplex ca = build_complex(space, selector, max_dim, in_a);
    ChainComplex cb = build_complex(space, selector, max_dim, in_b);
    ChainComplex cab = build_complex(space, selector, max_dim, in_ab);

    std::vector<HomologyPresentation> pu, pa, pb, pab;
    for (int n = 0; n <= max_dim; ++n) {
        pu.push_back(homology_presentation(cu, n));
        pa.push_back(homology_presentation(ca, n));
        pb.push_back(homology_presentation(cb, n));
        pab.push_back(homology_presentation(cab, n));
    }

    bool exact = true;
    Json nodes = Json::array();
    auto record = [&](const std::string& name, bool ok) {
        nodes.push_back(Json{{"node", name}, {"exact", ok}});
        exact = exact && ok;
    };

    std::vector<PresentedGroup> sums;
    std::vector<MatZ> phis, psis;
    for (int n = 0; n <= max_dim; ++n) {
        sums.push_back(direct_sum_group(pa[static_cast<size_t>(n)].group,
                                        pb[static_cast<size_t>(n)].group));
        MatZ into_a = induced_between(cab, ca, pab[static_cast<size_t>(n)], pa[static_cast<size_t>(n)]);
        MatZ into_b = induced_between(cab, cb, pab[static_cast<size_t>(n)], pb[static_cast<size_t>(n)]);
        phis.push_back(stack_rows(into_a, negate(into_b)));
        MatZ from_a = induced_between(ca, cu, pa[static_cast<size_t>(n)], pu[static_cast<size_t>(n)]);
        MatZ from_b = induced_between(cb, cu, pb[static_cast<size_t>(n)], pu[static_cast<size_t>(n)]);
        psis.push_back(concat_cols(from_a, from_b));
    }
    std::vector<MatZ> connecting; // index n >= 1
    for (int n = 1; n <= max_dim; ++n)
        connecting.push_back(mv_connecting(cu, cab, pu[static_cast<size_t>(n)],
                                           pab[static_cast<size_t>(n - 1)], a, n));

    for (int n = 0; n <= max_dim; ++n) {
        record("H" + std::to_string(n) + "(A)+H" + std::to_string(n) + "(B)",
               exact_at(pab[static_cast<size_t>(n)].group, sums[static_cast<size_t>(n)],
                        pu[static_cast<size_t>(n)].group, phis[static_cast<size_t>(n)],
                        psis[static_cast<size_t>(n)]));
        if (n >= 1)
            record("H" + std::to_string(n) + "(U)",
                   exact_at(sums[static_cast<size_t>(n)], pu[static_cast<size_t>(n)].group,
                            pab[static_cast<size_t>(n - 1)].group, psis[static_cast<size_t>(n)],
                            connecting[static_cast<size_t>(n - 1)]));
        else
            record("H0(U)", hom_surjective(pu[0].group, psis[0]));
        if (n + 1 <= max_dim)
            record("H" + std::to_string(n) + "(A&B)",
                   exact_at(pu[static_cast<size_t>(n + 1)].group,
                            pab[static_cast<size_t>(n)].group, sums[static_cast<size_t>(n)],
                            connecting[static_cast<size_t>(n)], phis[static_cast<size_t>(n)]));
    }
    report.details["nodes"] = nodes;

    // How the cover subcomplex compares with the full complex.
    ChainComplex cx = build_complex(space, selector, max_dim, base);
    bool cover_equal = true;
    for (int n = 0; n <= cx.top_dim(); ++n) cover_equal &= cu.rank(n) == cx.rank(n);
    report.details["cover_subcomplex_equal"] = cover_equal;
    Json groups = Json::array();
    for (int n = 0; n <= max_dim; ++n)
        groups.push_back(group_json(group_of(pu[static_cast<size_t>(n)].group)));
    report.details["H(U)"] = groups;

    if (selector_asserts(selector)) {
        report.status = (exact && cover_equal) ? "verified" : "refuted";
    } else {
        report.status = "experimental";
        bool iso = true;
        for (int n = 0; n <= max_dim; ++n) {
            HomologyPresentation px = homology_presentation(cx, n);
            MatZ m = induced_between(cu, cx, pu[static_cast<size_t>(n)], px);
            iso = iso && hom_isomorphism(pu[static_cast<size_t>(n)].group, px.group, m);
        }
        report.details["subcomplex_inclusion_is_iso"] = iso;
        report.details["exact_on_cover_sequence"] = exact;
    }
    return report;
}

VerifyReport verify_excision(const ClosureSpace& space, PointMask a, PointMask z,
                             const TheorySelector& selector,
                             const VerifyOptions& options) {
    selector.validate();
    space.require_subset(a, "excision subspace A");
    space.require_subset(z, "excised set Z");
    if (z & ~a) throw input_error("excision needs Z inside A");
    if (space.closure(z) & ~space.interior(a))
        throw input_error("excision needs closure(Z) inside interior(A)");
    VerifyReport report;
    report.theorem = "excision";
    report.selector = to_string(selector);
    report.instance = instance_name(space);

    ComplexOptions src_opts, tgt_opts;
    src_opts.limits = tgt_opts.limits = options.limits;
    src_opts.within = space.universe() & ~z;
    src_opts.rel = a & ~z;
    tgt_opts.rel = a;
    ChainComplex src = build_complex(space, selector, options.max_dim, src_opts);
    ChainComplex tgt = build_complex(space, selector, options.max_dim, tgt_opts);

    bool iso = true;
    Json groups = Json::array();
    for (int n = 0; n <= options.max_dim; ++n) {
        HomologyPresentation ps = homology_presentation(src, n);
        HomologyPresentation pt = homology_presentation(tgt, n);
        MatZ m = induced_between(src, tgt, ps, pt);
        bool ok = hom_isomorphism(ps.group, pt.group, m);
        iso = iso && ok;
        groups.push_back(Json{{"n", n},
                              {"H(X-Z,A-Z)", group_json(group_of(ps.group))},
                              {"H(X,A)", group_json(group_of(pt.group))},
                              {"isomorphism", ok}});
    }
    report.details["dimensions"] = groups;
    report.status = selector_asserts(selector) ? (iso ? "verified" : "refuted")
                                               : "experimental";
    if (!selector_asserts(selector)) report.details["isomorphism_all"] = iso;
    return report;
}

VerifyReport verify_les_pair(const ClosureSpace& space, PointMask a,
                             const TheorySelector& selector,
                             const VerifyOptions& options) {
    selector.validate();
    space.require_subset(a, "pair subspace");
    VerifyReport report;
    report.theorem = "les";
    report.selector = to_string(selector);
    report.instance = instance_name(space);

    const int max_dim = options.max_dim;
    ComplexOptions base, in_a, rel;
    base.limits = in_a.limits = rel.limits = options.limits;
    in_a.within = a;
    rel.rel = a;
    ChainComplex cx = build_complex(space, selector, max_dim, base);
    ChainComplex ca = build_complex(space, selector, max_dim, in_a);
    ChainComplex cxa = build_complex(space, selector, max_dim, rel);

    std::vector<HomologyPresentation> px, pa, pxa;
    for (int n = 0; n <= max_dim; ++n) {
        px.push_back(homology_presentation(cx, n));
        pa.push_back(homology_presentation(ca, n));
        pxa.push_back(homology_presentation(cxa, n));
    }
    std::vector<MatZ> inc, proj, conn;
    for (int n = 0; n <= max_dim; ++n) {
        inc.push_back(induced_between(ca, cx, pa[static_cast<size_t>(n)], px[static_cast<size_t>(n)]));
        // The projection sends a basis element of X to itself when it
        // survives in the quotient and to zero otherwise.
        ChainMap down;
        down.cols.resize(static_cast<size_t>(n) + 1);
        for (int k = 0; k <= n; ++k) {
            down.cols[static_cast<size_t>(k)].resize(static_cast<size_t>(cx.rank(k)));
            for (int i = 0; i < cx.rank(k); ++i) {
                int j = locate(cxa, cx, k, i);
                if (j >= 0) down.cols[static_cast<size_t>(k)][static_cast<size_t>(i)].push_back({j, 1});
            }
        }
        proj.push_back(induced_on_homology(down, cx, cxa, px[static_cast<size_t>(n)],
                                           pxa[static_cast<size_t>(n)]));
    }
    for (int n = 1; n <= max_dim; ++n)
        conn.push_back(les_connecting(cx, cxa, ca, pxa[static_cast<size_t>(n)],
                                      pa[static_cast<size_t>(n - 1)], n));

    bool exact = true;
    Json nodes = Json::array();
    auto record = [&](const std::string& name, bool ok) {
        nodes.push_back(Json{{"node", name}, {"exact", ok}});
        exact = exact && ok;
    };
    for (int n = 0; n <= max_dim; ++n) {
        record("H" + std::to_string(n) + "(X)",
               exact_at(pa[static_cast<size_t>(n)].group, px[static_cast<size_t>(n)].group,
                        pxa[static_cast<size_t>(n)].group, inc[static_cast<size_t>(n)],
                        proj[static_cast<size_t>(n)]));
        if (n >= 1)
            record("H" + std::to_string(n) + "(X,A)",
                   exact_at(px[static_cast<size_t>(n)].group, pxa[static_cast<size_t>(n)].group,
                            pa[static_cast<size_t>(n - 1)].group, proj[static_cast<size_t>(n)],
                            conn[static_cast<size_t>(n - 1)]));
        else
            record("H0(X,A)", a == 0 || hom_surjective(pxa[0].group, proj[0]));
        if (n + 1 <= max_dim)
            record("H" + std::to_string(n) + "(A)",
                   exact_at(pxa[static_cast<size_t>(n + 1)].group, pa[static_cast<size_t>(n)].group,
                            px[static_cast<size_t>(n)].group, conn[static_cast<size_t>(n)],
                            inc[static_cast<size_t>(n)]));
    }
    report.details["nodes"] = nodes;
    report.status = exact ? "verified" : "refuted";
    return report;
}

VerifyReport verify_kunneth(const ClosureSpace& x, const ClosureSpace& y,
                            const TheorySelector& selector,
                            const VerifyOptions& options) {
    selector.validate();
    if (selector.flavor == Flavor::Cubical && selector.product == ProductKind::Inductive)
        throw unsupported_theory_error(
            "the Kunneth comparison is open for the inductive product");
    VerifyReport report;
    report.theorem = "kunneth";
    report.selector = to_string(selector);
    report.instance = instance_name(x) + " x " + instance_name(y);

    ComplexOptions opts;
    opts.limits = options.limits;
    ChainComplex cxy =
        build_complex(product_space(x, y), selector, options.max_dim, opts);
    ChainComplex cx = build_complex(x, selector, options.max_dim, opts);
    ChainComplex cy = build_complex(y, selector, options.max_dim, opts);

    bool equal = true;
    Json dims = Json::array();
    const bool field = options.coeffs.ring != Coefficients::Ring::Z;
    for (int n = 0; n <= options.max_dim; ++n) {
        HomologyGroup lhs = homology(cxy, n, options.coeffs);
        HomologyGroup rhs{0, {}};
        for (int i = 0; i <= n; ++i) {
            HomologyGroup hx = homology(cx, i, options.coeffs);
            HomologyGroup hy = homology(cy, n - i, options.coeffs);
            rhs = group_direct_sum(rhs, field ? HomologyGroup{hx.betti * hy.betti, {}}
                                              : group_tensor(hx, hy));
        }
        if (!field)
            for (int i = 0; i <= n - 1; ++i)
                rhs = group_direct_sum(
                    rhs, group_tor(homology(cx, i, options.coeffs),
                                   homology(cy, n - 1 - i, options.coeffs)));
        bool ok = lhs == rhs;
        equal = equal && ok;
        dims.push_back(Json{{"n", n},
                            {"H(XxY)", group_json(lhs)},
                            {"tensor_tor", group_json(rhs)},
                            {"equal", ok}});
    }
    report.details["dimensions"] = dims;
    report.details["coefficients"] = options.coeffs.to_string();
    report.status = equal ? "verified" : "refuted";
    return report;
}

VerifyReport verify_eilenberg_zilber(const ClosureSpace& x, const ClosureSpace& y,
                                     const TheorySelector& selector,
                                     const VerifyOptions& options) {
    selector.validate();
    if (selector.flavor == Flavor::Cubical && selector.product == ProductKind::Inductive)
        throw unsupported_theory_error(
            "the Eilenberg-Zilber comparison is open for the inductive product");
    VerifyReport report;
    report.theorem = "eilenberg-zilber";
    report.selector = to_string(selector);
    report.instance = instance_name(x) + " x " + instance_name(y);

    ComplexOptions opts;
    opts.limits = options.limits;
    ChainComplex cxy =
        build_complex(product_space(x, y), selector, options.max_dim, opts);
    ChainComplex cx = build_complex(x, selector, options.max_dim, opts);
    ChainComplex cy = build_complex(y, selector, options.max_dim, opts);
    ChainComplex tens = tensor_complex(cx, cy);

    bool equal = true;
    Json dims = Json::array();
    for (int n = 0; n <= options.max_dim; ++n) {
        HomologyGroup lhs = homology(cxy, n);
        HomologyGroup rhs = homology(tens, n);
        bool ok = lhs == rhs;
        equal = equal && ok;
        dims.push_back(Json{{"n", n},
                            {"H(C(XxY))", group_json(lhs)},
                            {"H(C(X)(x)C(Y))", group_json(rhs)},
                            {"equal", ok}});
    }
    report.details["dimensions"] = dims;
    report.status = equal ? "verified" : "refuted";
    return report;
}

VerifyReport verify_uct(const ClosureSpace& space, const TheorySelector& selector,
                        const VerifyOptions& options) {
    selector.validate();
    const Coefficients& g = options.coeffs;
    if (g.ring == Coefficients::Ring::Q)
        throw input_error("UCT check expects coefficients Z or Zp:<p>");
    VerifyReport report;
    report.theorem = "uct";
    report.selector = to_string(selector);
    report.instance = instance_name(space);

    ComplexOptions opts;
    opts.limits = options.limits;
    ChainComplex c = build_complex(space, selector, options.max_dim, opts);

    bool equal = true;
    Json dims = Json::array();
    for (int n = 0; n <= options.max_dim; ++n) {
        HomologyGroup hn = homology(c, n);
        HomologyGroup hprev = n > 0 ? homology(c, n - 1) : HomologyGroup{0, {}};
        Json entry{{"n", n}};
        if (g.ring == Coefficients::Ring::Zp) {
            long long lhs_h = homology(c, n, g).betti;
            long long rhs_h = dim_tensor_mod_p(hn, g.p) + dim_tor_mod_p(hprev, g.p);
            long long lhs_c = cohomology(c, n, g).betti;
            HomologyGroup hom = group_hom_into(hn, g);
            HomologyGroup ext = group_ext_into(hprev, g);
            long long rhs_c = static_cast<long long>(hom.torsion.size()) +
                              static_cast<long long>(ext.torsion.size());
            entry["homology_dim"] = lhs_h;
            entry["homology_uct_dim"] = rhs_h;
            entry["cohomology_dim"] = lhs_c;
            entry["cohomology_uct_dim"] = rhs_c;
            equal = equal && lhs_h == rhs_h && lhs_c == rhs_c;
        } else {
            HomologyGroup lhs = cohomology(c, n);
            HomologyGroup rhs =
                group_direct_sum(group_hom_into(hn, g), group_ext_into(hprev, g));
            entry["cohomology"] = group_json(lhs);
            entry["hom_ext"] = group_json(rhs);
            equal = equal && lhs == rhs;
        }
        dims.push_back(entry);
    }
    report.details["dimensions"] = dims;
    report.details["coefficients"] = g.to_string();
    report.status = equal ? "verified" : "refuted";
    return report;
}

VerifyReport verify_comparison(const ClosureSpace& space, Interval interval,
                               const VerifyOptions& options) {
    VerifyReport report;
    report.theorem = "comparison";
    report.selector = to_string(interval) + ",simplicial->cubical";
    report.instance = instance_name(space);

    ComplexOptions opts;
    opts.limits = options.limits;
    ChainComplex simp =
        build_complex(space, TheorySelector::simplicial(interval), options.max_dim, opts);
    ChainComplex cube = build_complex(
        space, TheorySelector::cubical(interval, ProductKind::Cross), options.max_dim, opts);
    ChainMap f = comparison_chain_map(simp, cube);
    bool chain_ok = is_chain_map(f, simp, cube);

    bool iso = true;
    Json dims = Json::array();
    for (int n = 0; n <= options.max_dim; ++n) {
        HomologyPresentation ps = homology_presentation(simp, n);
        HomologyPresentation pt = homology_presentation(cube, n);
        MatZ m = induced_on_homology(f, simp, cube, ps, pt);
        bool ok = hom_isomorphism(ps.group, pt.group, m);
        iso = iso && ok;
        dims.push_back(Json{{"n", n},
                            {"simplicial", group_json(group_of(ps.group))},
                            {"cubical", group_json(group_of(pt.group))},
                            {"isomorphism", ok}});
    }
    // In dimensions < 2 the map is a bijection of bases.
    bool low_identity = simp.rank(0) == cube.rank(0) && simp.rank(1) == cube.rank(1);
    report.details["chain_map"] = chain_ok;
    report.details["identity_below_dim2"] = low_identity;
    report.details["dimensions"] = dims;
    report.status = (chain_ok && iso && low_identity) ? "verified" : "refuted";
    return report;
}

VerifyReport verify_es_axioms(const TheorySelector& selector, std::uint64_t seed,
                              int instances, const VerifyOptions& options) {
    selector.validate();
    if (selector.flavor == Flavor::Cubical && selector.product == ProductKind::Inductive)
        throw unsupported_theory_error(
            "the Eilenberg-Steenrod suite asserts cross-product theories only");
    VerifyReport report;
    report.theorem = "es-axioms";
    report.selector = to_string(selector);
    report.instance = "seeded corpus (seed " + std::to_string(seed) + ", " +
                      std::to_string(instances) + " instances)";

    std::mt19937_64 rng(seed);
    bool all_ok = true;

    // Dimension axiom on the one-point space.
    {
        ComplexOptions opts;
        opts.limits = options.limits;
        ChainComplex c = build_complex(one_point_space(), selector, options.max_dim, opts);
        bool ok = true;
        for (int n = 1; n <= options.max_dim; ++n)
            ok = ok && homology(c, n) == HomologyGroup{0, {}};
        report.details["dimension_axiom"] = ok;
        all_ok = all_ok && ok;
    }

    RandomSpaceOptions sopt;
    sopt.min_points = 2;
    sopt.max_points = 4;
    int les_pass = 0, exc_pass = 0, hom_pass = 0, hom_seen = 0;
    for (int i = 0; i < instances; ++i) {
        ClosureSpace x = random_space(rng, sopt);
        PointMask a = random_subset(rng, x, true);
        VerifyReport les = verify_les_pair(x, a, selector, options);
        if (les.status == "verified") ++les_pass;

        auto triple = random_excision_triple(rng, x);
        if (triple) {
            VerifyReport exc = verify_excision(x, triple->first, triple->second,
                                               selector, options);
            if (exc.status == "verified") ++exc_pass;
        } else {
            ++exc_pass; // nothing admissible to test on this instance
        }

        ClosureSpace y = random_space(rng, sopt);
        auto f = random_continuous_map(rng, x, y);
        auto g = random_continuous_map(rng, x, y);
        if (f && g) {
            HomotopyResult hr = are_homotopic(*f, *g, selector.interval,
                                              selector.product, options.budget);
            if (hr.status == SearchStatus::Yes) {
                ++hom_seen;
                if (induced_maps_equal(*f, *g, selector, options.max_dim, options.limits))
                    ++hom_pass;
            }
        }
    }
    report.details["les_pass"] = les_pass;
    report.details["les_total"] = instances;
    report.details["excision_pass"] = exc_pass;
    report.details["excision_total"] = instances;
    report.details["homotopy_pairs_found"] = hom_seen;
    report.details["homotopy_pass"] = hom_pass;
    all_ok = all_ok && les_pass == instances && exc_pass == instances &&
             hom_pass == hom_seen;
    report.status = all_ok ? "verified" : "refuted";
    return report;
}

VerifyReport verify_good_pair(const ClosureSpace& space, PointMask a, PointMask b,
                              const std::vector<int>& retraction,
                              const TheorySelector& selector,
                              const VerifyOptions& options) {
    selector.validate();
    space.require_subset(a, "good-pair subspace");
    space.require_subset(b, "good-pair neighborhood");
    if (a & ~b) throw input_error("the neighborhood must contain the subspace");
    if (a & ~space.interior(b))
        throw input_error("B must be a neighborhood of A (A inside interior(B))");
    VerifyReport report;
    report.theorem = "good-pair";
    report.selector = to_string(selector);
    report.instance = instance_name(space);

    // The witness is a retraction B -> A fixed on A whose composite with the
    // inclusion is homotopic to the identity of B.
    ClosureSpace bspace = subspace(space, b);
    ClosureSpace aspace = subspace(space, a);
    if (retraction.size() != static_cast<size_t>(bspace.size()))
        throw input_error("retraction must be total on the neighborhood");
    SpaceMap r(bspace, aspace, retraction);
    if (!is_continuous(r)) throw input_error("retraction witness is not continuous");
    std::vector<int> a_points = mask_to_points(a);
    for (int i = 0; i < bspace.size(); ++i) {
        int global = mask_to_points(b)[static_cast<size_t>(i)];
        if (space.contains(global, a)) {
            int expect = static_cast<int>(std::lower_bound(a_points.begin(), a_points.end(),
                                                           global) -
                                          a_points.begin());
            if (r(i) != expect)
                throw input_error("retraction witness does not fix the subspace");
        }
    }
    std::vector<int> composite(static_cast<size_t>(bspace.size()));
    for (int i = 0; i < bspace.size(); ++i)
        composite[static_cast<size_t>(i)] = static_cast<int>(
            std::lower_bound(mask_to_points(b).begin(), mask_to_points(b).end(),
                             a_points[static_cast<size_t>(r(i))]) -
            mask_to_points(b).begin());
    HomotopyResult deform =
        are_homotopic(SpaceMap::identity(bspace), SpaceMap(bspace, bspace, composite),
                      selector.interval, selector.product, options.budget);
    report.details["deformation"] = deform.status == SearchStatus::Yes
                                        ? "yes"
                                        : (deform.status == SearchStatus::No
                                               ? "no"
                                               : "inconclusive");
    if (deform.status != SearchStatus::Yes) {
        report.status = "experimental";
        report.details["note"] = "retraction witness not certified; quotient "
                                 "comparison skipped";
        return report;
    }

    ComplexOptions rel_opts, quot_opts;
    rel_opts.limits = quot_opts.limits = options.limits;
    rel_opts.rel = a;
    ChainComplex relc = build_complex(space, selector, options.max_dim, rel_opts);
    QuotientResult q = quotient_by_subspace(SpacePair(space, a));
    ChainComplex quotc = build_complex(q.space, selector, options.max_dim, quot_opts);

    bool equal = true;
    Json dims = Json::array();
    for (int n = 0; n <= options.max_dim; ++n) {
        HomologyGroup rel_h = homology(relc, n);
        HomologyGroup quot_h = homology(quotc, n, Coefficients::integers(), true);
        bool ok = rel_h == quot_h;
        equal = equal && ok;
        dims.push_back(Json{{"n", n},
                            {"H(X,A)", group_json(rel_h)},
                            {"reduced H(X/A)", group_json(quot_h)},
                            {"equal", ok}});
    }
    report.details["dimensions"] = dims;
    report.status = equal ? "verified" : "refuted";
    return report;
}

SparseChain prism_chain(const Simplex& s, const ClosureSpace& domain,
                        const ClosureSpace& codomain, const HomotopyWitness& witness,
                        Interval j) {
    SparseChain out;
    const int n = s.dim();
    for (size_t step = 0; step + 1 < witness.chain.size(); ++step) {
        SpaceMap lo(domain, codomain, witness.chain[step]);
        SpaceMap hi(domain, codomain, witness.chain[step + 1]);
        std::int64_t orientation = 1;
        if (!one_step_homotopic(lo, hi, j, ProductKind::Cross)) {
            if (!one_step_homotopic(hi, lo, j, ProductKind::Cross))
                throw input_error("non-witnessing homotopy data in prism construction");
            std::swap(lo, hi);
            orientation = -1;
        }
        for (int cut = 0; cut <= n; ++cut) {
            Simplex tau;
            tau.vertices.reserve(static_cast<size_t>(n) + 2);
            for (int k = 0; k <= cut; ++k)
                tau.vertices.push_back(lo(s.vertices[static_cast<size_t>(k)]));
            for (int k = cut; k <= n; ++k)
                tau.vertices.push_back(hi(s.vertices[static_cast<size_t>(k)]));
            std::int64_t coeff = orientation * ((cut % 2 == 0) ? 1 : -1);
            auto [it, inserted] = out.try_emplace(tau, coeff);
            if (!inserted) {
                it->second += coeff;
                if (it->second == 0) out.erase(it);
            }
        }
    }
    return out;
}

namespace {

void add_into(SparseChain& acc, const Simplex& s, std::int64_t coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = acc.try_emplace(s, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) acc.erase(it);
    }
}

SparseChain boundary_of(const SparseChain& chain) {
    SparseChain out;
    for (auto& [s, coeff] : chain) {
        if (s.dim() == 0) continue;
        for (int i = 0; i <= s.dim(); ++i)
            add_into(out, simplex_face(s, i), coeff * ((i % 2 == 0) ? 1 : -1));
    }
    return out;
}

} // namespace

PrismCheck check_prism_identity(const ClosureSpace& x, const ClosureSpace& y,
                                const HomotopyWitness& witness, Interval j,
                                int max_dim, const EnumLimits& limits) {
    PrismCheck check;
    if (witness.chain.empty()) {
        check.holds = false;
        check.failure = "empty witness";
        return check;
    }
    SpaceMap f(x, y, witness.chain.front());
    SpaceMap g(x, y, witness.chain.back());
    for (int n = 0; n <= max_dim; ++n) {
        for (const Simplex& s : enumerate_simplices(x, j, n, limits)) {
            SparseChain lhs = boundary_of(prism_chain(s, x, y, witness, j));
            for (int i = 0; i <= n && n > 0; ++i) {
                SparseChain pface =
                    prism_chain(simplex_face(s, i), x, y, witness, j);
                for (auto& [t, c] : pface)
                    add_into(lhs, t, c * ((i % 2 == 0) ? 1 : -1));
            }
            SparseChain rhs;
            add_into(rhs, postcompose(s, g), 1);
            add_into(rhs, postcompose(s, f), -1);
            if (lhs != rhs) {
                check.holds = false;
                check.failure = "identity fails on " + simplex_label(x, s);
                return check;
            }
        }
    }
    return check;
}

bool induced_maps_equal(const SpaceMap& f, const SpaceMap& g,
                        const TheorySelector& selector, int max_dim,
                        const EnumLimits& limits) {
    ComplexOptions opts;
    opts.limits = limits;
    ChainComplex src = build_complex(f.source, selector, max_dim, opts);
    ChainComplex tgt = build_complex(f.target, selector, max_dim, opts);
    ChainMap cf = induced_chain_map(f, src, tgt);
    ChainMap cg = induced_chain_map(g, src, tgt);
    for (int n = 0; n <= max_dim; ++n) {
        HomologyPresentation ps = homology_presentation(src, n);
        HomologyPresentation pt = homology_presentation(tgt, n);
        MatZ mf = induced_on_homology(cf, src, tgt, ps, pt);
        MatZ mg = induced_on_homology(cg, src, tgt, ps, pt);
        if (!homs_equal(pt.group, mf, mg)) return false;
    }
    return true;
}

ClosureSpace random_space(std::mt19937_64& rng, const RandomSpaceOptions& options) {
    std::uniform_int_distribution<int> size_dist(options.min_points, options.max_points);
    std::bernoulli_distribution edge(options.edge_prob);
    const int n = size_dist(rng);
    std::vector<std::string> names;
    std::vector<PointMask> closures;
    for (int i = 0; i < n; ++i) {
        names.push_back("p" + std::to_string(i));
        closures.push_back(PointMask{1} << i);
    }
    if (options.symmetric) {
        for (int i = 0; i < n; ++i)
            for (int k = i + 1; k < n; ++k)
                if (edge(rng)) {
                    closures[static_cast<size_t>(i)] |= PointMask{1} << k;
                    closures[static_cast<size_t>(k)] |= PointMask{1} << i;
                }
    } else {
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k)
                if (i != k && edge(rng)) closures[static_cast<size_t>(i)] |= PointMask{1} << k;
    }
    return ClosureSpace(std::move(names), std::move(closures));
}

PointMask random_subset(std::mt19937_64& rng, const ClosureSpace& space, bool nonempty) {
    std::bernoulli_distribution in(0.5);
    PointMask m = 0;
    for (int i = 0; i < space.size(); ++i)
        if (in(rng)) m |= PointMask{1} << i;
    if (nonempty && m == 0)
        m = PointMask{1} << std::uniform_int_distribution<int>(0, space.size() - 1)(rng);
    return m;
}

std::optional<SpaceMap> random_continuous_map(std::mt19937_64& rng,
                                              const ClosureSpace& x,
                                              const ClosureSpace& y) {
    std::vector<int> assignment(static_cast<size_t>(x.size()), -1);
    auto extend = [&](auto&& self, int pos) -> bool {
        if (pos == x.size()) return true;
        std::vector<int> order(static_cast<size_t>(y.size()));
        for (int v = 0; v < y.size(); ++v) order[static_cast<size_t>(v)] = v;
        std::shuffle(order.begin(), order.end(), rng);
        for (int v : order) {
            bool ok = true;
            for (int prev = 0; prev < pos && ok; ++prev) {
                if (x.contains(pos, x.point_closure(prev)) &&
                    !y.contains(v, y.point_closure(assignment[static_cast<size_t>(prev)])))
                    ok = false;
                if (ok && x.contains(prev, x.point_closure(pos)) &&
                    !y.contains(assignment[static_cast<size_t>(prev)], y.point_closure(v)))
                    ok = false;
            }
            if (!ok) continue;
            assignment[static_cast<size_t>(pos)] = v;
            if (self(self, pos + 1)) return true;
        }
        assignment[static_cast<size_t>(pos)] = -1;
        return false;
    };
    if (!extend(extend, 0)) return std::nullopt;
    return SpaceMap(x, y, assignment);
}

std::optional<std::pair<PointMask, PointMask>> random_interior_cover(
    std::mt19937_64& rng, const ClosureSpace& space, int attempts) {
    for (int i = 0; i < attempts; ++i) {
        PointMask a = random_subset(rng, space, true);
        PointMask b = random_subset(rng, space, true);
        if ((space.interior(a) | space.interior(b)) != space.universe()) continue;
        return std::make_pair(a, b);
    }
    return std::nullopt;
}

std::optional<std::pair<PointMask, PointMask>> random_excision_triple(
    std::mt19937_64& rng, const ClosureSpace& space, int attempts) {
    for (int i = 0; i < attempts; ++i) {
        PointMask a = random_subset(rng, space, true);
        PointMask z = random_subset(rng, space) & a;
        if (space.closure(z) & ~space.interior(a)) continue;
        if (z == 0 && i + 1 < attempts) continue; // prefer a real excision
        return std::make_pair(a, z);
    }
    return std::nullopt;
}

} // namespace pretop
