#include "pretop/homology.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace pretop {

namespace {

// Effective boundary out of dimension n: the augmentation row when reduced,
// an empty matrix otherwise.
Mat64 boundary_out(const ChainComplex& c, int n, bool reduced) {
    if (n > 0) return c.boundary[static_cast<size_t>(n)];
    if (reduced) {
        if (!c.augmentable) throw input_error("complex does not carry an augmentation");
        Mat64 eps(1, c.rank(0));
        for (int j = 0; j < c.rank(0); ++j) eps.at(0, j) = 1;
        return eps;
    }
    return Mat64(0, c.rank(0));
}

void require_range(const ChainComplex& c, int n) {
    if (n < 0) throw input_error("homology dimension must be nonnegative");
    if (n + 1 > c.top_dim())
        throw input_error("complex was built only through dimension " +
                          std::to_string(c.top_dim()) + "; homology at " +
                          std::to_string(n) + " needs one more");
}

std::vector<BigInt> prime_power_factors(const BigInt& d) {
    std::vector<BigInt> out;
    BigInt rest = d;
    for (BigInt p = 2; p * p <= rest; ++p) {
        if (rest % p != 0) continue;
        BigInt power = 1;
        while (rest % p == 0) {
            power *= p;
            rest /= p;
        }
        out.push_back(power);
    }
    if (rest > 1) out.push_back(rest);
    return out;
}

std::int64_t mod_value(std::int64_t x, std::int64_t p) {
    std::int64_t r = x % p;
    return r < 0 ? r + p : r;
}

} // namespace

std::string HomologyGroup::to_string() const {
    std::ostringstream out;
    bool first = true;
    if (betti > 0) {
        out << "Z";
        if (betti > 1) out << "^" << betti;
        first = false;
    }
    for (const BigInt& d : torsion) {
        if (!first) out << " + ";
        out << "Z/" << d;
        first = false;
    }
    if (first) out << "0";
    return out.str();
}

Coefficients Coefficients::mod(std::int64_t p) {
    if (p < 2) throw input_error("coefficient modulus must be a prime >= 2");
    for (std::int64_t q = 2; q * q <= p; ++q)
        if (p % q == 0) throw input_error("coefficient modulus must be prime");
    return {Ring::Zp, p};
}

Coefficients Coefficients::parse(const std::string& token) {
    if (token == "Z" || token == "z") return integers();
    if (token == "Q" || token == "q") return rationals();
    if (token.rfind("Zp:", 0) == 0 || token.rfind("zp:", 0) == 0)
        return mod(std::stoll(token.substr(3)));
    throw input_error("unknown coefficients '" + token + "' (expected Z, Zp:<p>, Q)");
}

std::string Coefficients::to_string() const {
    switch (ring) {
    case Ring::Z: return "Z";
    case Ring::Q: return "Q";
    case Ring::Zp: return "Zp:" + std::to_string(p);
    }
    return "?";
}

HomologyGroup homology(const ChainComplex& complex, int n, const Coefficients& coeffs,
                       bool reduced) {
    require_range(complex, n);
    Mat64 out = boundary_out(complex, n, reduced);
    const Mat64& in = complex.boundary[static_cast<size_t>(n + 1)];
    const int cn = complex.rank(n);
    HomologyGroup h;
    switch (coeffs.ring) {
    case Coefficients::Ring::Z: {
        std::vector<BigInt> inv = snf_invariants(in);
        h.betti = cn - rank_over_z(out) - static_cast<long long>(inv.size());
        for (BigInt& d : inv)
            if (d > 1) h.torsion.push_back(std::move(d));
        break;
    }
    case Coefficients::Ring::Q:
        h.betti = cn - rank_over_z(out) - rank_over_z(in);
        break;
    case Coefficients::Ring::Zp:
        h.betti = cn - rank_mod_p(out, coeffs.p) - rank_mod_p(in, coeffs.p);
        break;
    }
    return h;
}

HomologyGroup cohomology(const ChainComplex& complex, int n, const Coefficients& coeffs,
                         bool reduced) {
    require_range(complex, n);
    // delta^n = transpose of d_{n+1}; delta^{n-1} = transpose of the
    // effective boundary out of dimension n.
    Mat64 delta_out = transpose64(complex.boundary[static_cast<size_t>(n + 1)]);
    Mat64 delta_in = transpose64(boundary_out(complex, n, reduced));
    const int cn = complex.rank(n);
    HomologyGroup h;
    switch (coeffs.ring) {
    case Coefficients::Ring::Z: {
        std::vector<BigInt> inv = snf_invariants(delta_in);
        h.betti = cn - rank_over_z(delta_out) - static_cast<long long>(inv.size());
        for (BigInt& d : inv)
            if (d > 1) h.torsion.push_back(std::move(d));
        break;
    }
    case Coefficients::Ring::Q:
        h.betti = cn - rank_over_z(delta_out) - rank_over_z(delta_in);
        break;
    case Coefficients::Ring::Zp:
        h.betti = cn - rank_mod_p(delta_out, coeffs.p) - rank_mod_p(delta_in, coeffs.p);
        break;
    }
    return h;
}

std::vector<HomologyGroup> homology_range(const ChainComplex& complex, int max_dim,
                                          const Coefficients& coeffs, bool reduced) {
    std::vector<HomologyGroup> out;
    for (int n = 0; n <= max_dim; ++n) out.push_back(homology(complex, n, coeffs, reduced));
    return out;
}

std::vector<BigInt> HomologyPresentation::cycle_coordinates(
    const std::vector<BigInt>& cycle) const {
    if (static_cast<int>(cycle.size()) != coord.cols)
        throw input_error("cycle has the wrong length");
    std::vector<BigInt> out(static_cast<size_t>(coord.rows));
    for (int i = 0; i < coord.rows; ++i) {
        BigInt acc = 0;
        for (int k = 0; k < coord.cols; ++k)
            if (!cycle[static_cast<size_t>(k)].is_zero())
                acc += coord.at(i, k) * cycle[static_cast<size_t>(k)];
        out[static_cast<size_t>(i)] = std::move(acc);
    }
    return out;
}

HomologyPresentation homology_presentation(const ChainComplex& complex, int n,
                                           bool reduced) {
    require_range(complex, n);
    Mat64 out = boundary_out(complex, n, reduced);
    SnfTransforms t = snf_with_transforms(out);
    const int cn = complex.rank(n);
    const int gens = cn - t.rank;

    HomologyPresentation pres;
    pres.n = n;
    pres.reduced = reduced;
    pres.kernel_basis = MatZ(cn, gens);
    for (int j = 0; j < gens; ++j)
        for (int i = 0; i < cn; ++i) pres.kernel_basis.at(i, j) = t.v.at(i, t.rank + j);
    pres.coord = MatZ(gens, cn);
    for (int i = 0; i < gens; ++i)
        for (int k = 0; k < cn; ++k) pres.coord.at(i, k) = t.v_inv.at(t.rank + i, k);

    // Relations: im d_{n+1} in kernel coordinates, duplicate columns dropped.
    const Mat64& in = complex.boundary[static_cast<size_t>(n + 1)];
    std::vector<std::vector<std::pair<int, std::int64_t>>> sparse_cols;
    for (int j = 0; j < in.cols; ++j) {
        std::vector<std::pair<int, std::int64_t>> col;
        for (int i = 0; i < in.rows; ++i)
            if (in.at(i, j)) col.push_back({i, in.at(i, j)});
        if (!col.empty()) sparse_cols.push_back(std::move(col));
    }
    std::sort(sparse_cols.begin(), sparse_cols.end());
    sparse_cols.erase(std::unique(sparse_cols.begin(), sparse_cols.end()),
                      sparse_cols.end());
    MatZ relations(gens, static_cast<int>(sparse_cols.size()));
    for (int j = 0; j < relations.cols; ++j) {
        // Check that the column really is a cycle: the non-kernel rows of
        // V^-1 * column must vanish (d d = 0 guarantees this).
        for (int i = 0; i < t.rank; ++i) {
            BigInt acc = 0;
            for (auto& [row, val] : sparse_cols[static_cast<size_t>(j)])
                acc += t.v_inv.at(i, row) * val;
            if (!acc.is_zero())
                throw input_error("boundary image is not a cycle; d d != 0");
        }
        for (int i = 0; i < gens; ++i) {
            BigInt acc = 0;
            for (auto& [row, val] : sparse_cols[static_cast<size_t>(j)])
                acc += t.v_inv.at(t.rank + i, row) * val;
            relations.at(i, j) = std::move(acc);
        }
    }
    pres.group = PresentedGroup{gens, std::move(relations)};
    return pres;
}

MatZ induced_on_homology(const ChainMap& f, const ChainComplex& src,
                         const ChainComplex& tgt, const HomologyPresentation& ps,
                         const HomologyPresentation& pt) {
    if (ps.n != pt.n) throw input_error("presentation dimensions differ");
    const int n = ps.n;
    if (n >= f.dims()) throw input_error("chain map not available in this dimension");
    (void)src;
    // image = F * kernel_basis, then coordinates in the target presentation.
    MatZ image(tgt.rank(n), ps.group.gens);
    for (int j = 0; j < ps.kernel_basis.rows; ++j) {
        for (auto& [row, coeff] : f.cols[static_cast<size_t>(n)][static_cast<size_t>(j)])
            for (int g = 0; g < ps.group.gens; ++g) {
                const BigInt& x = ps.kernel_basis.at(j, g);
                if (!x.is_zero()) image.at(row, g) += coeff * x;
            }
    }
    return multiply(pt.coord, image);
}

HomologyGroup group_direct_sum(const HomologyGroup& a, const HomologyGroup& b) {
    std::vector<BigInt> orders = a.torsion;
    orders.insert(orders.end(), b.torsion.begin(), b.torsion.end());
    return group_from_cyclics(a.betti + b.betti, std::move(orders));
}

HomologyGroup group_tensor(const HomologyGroup& a, const HomologyGroup& b) {
    std::vector<BigInt> orders;
    // Z^r (x) Z^s = Z^{rs}; Z (x) Z/d = Z/d; Z/d (x) Z/e = Z/gcd(d,e).
    for (const BigInt& d : a.torsion)
        for (long long i = 0; i < b.betti; ++i) orders.push_back(d);
    for (const BigInt& e : b.torsion)
        for (long long i = 0; i < a.betti; ++i) orders.push_back(e);
    for (const BigInt& d : a.torsion)
        for (const BigInt& e : b.torsion) orders.push_back(gcd(d, e));
    return group_from_cyclics(a.betti * b.betti, std::move(orders));
}

HomologyGroup group_tor(const HomologyGroup& a, const HomologyGroup& b) {
    std::vector<BigInt> orders;
    for (const BigInt& d : a.torsion)
        for (const BigInt& e : b.torsion) orders.push_back(gcd(d, e));
    return group_from_cyclics(0, std::move(orders));
}

HomologyGroup group_hom_into(const HomologyGroup& a, const Coefficients& g) {
    if (g.ring == Coefficients::Ring::Z) {
        // Hom(Z^r + T, Z) = Z^r.
        return HomologyGroup{a.betti, {}};
    }
    if (g.ring != Coefficients::Ring::Zp)
        throw input_error("Hom target must be Z or Z/p");
    std::vector<BigInt> orders;
    for (long long i = 0; i < a.betti; ++i) orders.push_back(g.p);
    for (const BigInt& d : a.torsion) orders.push_back(gcd(d, BigInt(g.p)));
    return group_from_cyclics(0, std::move(orders));
}

HomologyGroup group_ext_into(const HomologyGroup& a, const Coefficients& g) {
    if (g.ring == Coefficients::Ring::Z) {
        // Ext(Z^r + T, Z) = T.
        return group_from_cyclics(0, a.torsion);
    }
    if (g.ring != Coefficients::Ring::Zp)
        throw input_error("Ext target must be Z or Z/p");
    std::vector<BigInt> orders;
    for (const BigInt& d : a.torsion) orders.push_back(gcd(d, BigInt(g.p)));
    return group_from_cyclics(0, std::move(orders));
}

long long dim_tensor_mod_p(const HomologyGroup& a, std::int64_t p) {
    long long dim = a.betti;
    for (const BigInt& d : a.torsion)
        if (d % p == 0) ++dim;
    return dim;
}

long long dim_tor_mod_p(const HomologyGroup& a, std::int64_t p) {
    long long dim = 0;
    for (const BigInt& d : a.torsion)
        if (d % p == 0) ++dim;
    return dim;
}

HomologyGroup group_from_cyclics(long long free_rank, std::vector<BigInt> orders) {
    // Split into prime powers, then rebuild the invariant-factor chain by
    // greedily combining the largest power of each prime.
    std::map<BigInt, std::vector<BigInt>> by_prime; // prime -> powers, descending
    for (const BigInt& d : orders) {
        if (d <= 1) continue;
        for (const BigInt& q : prime_power_factors(d)) {
            BigInt p = 2;
            BigInt scan = q;
            while (scan % p != 0) ++p;
            by_prime[p].push_back(q);
        }
    }
    size_t chain_len = 0;
    for (auto& [p, powers] : by_prime) {
        std::sort(powers.begin(), powers.end(), std::greater<BigInt>());
        chain_len = std::max(chain_len, powers.size());
    }
    std::vector<BigInt> chain(chain_len, BigInt(1));
    for (auto& [p, powers] : by_prime)
        for (size_t i = 0; i < powers.size(); ++i) chain[i] *= powers[i];
    std::sort(chain.begin(), chain.end()); // ascending divisibility order
    HomologyGroup out;
    out.betti = free_rank;
    out.torsion = std::move(chain);
    return out;
}

Cochain coboundary(const ChainComplex& complex, const Coefficients& coeffs,
                   const Cochain& a) {
    const int n = a.dim;
    if (n + 1 > complex.top_dim())
        throw input_error("complex too shallow for this coboundary");
    const Mat64& bnd = complex.boundary[static_cast<size_t>(n + 1)];
    Cochain out;
    out.dim = n + 1;
    out.values.assign(static_cast<size_t>(complex.rank(n + 1)), 0);
    for (int j = 0; j < bnd.cols; ++j) {
        std::int64_t acc = 0;
        for (int i = 0; i < bnd.rows; ++i)
            if (bnd.at(i, j)) acc += bnd.at(i, j) * a.values[static_cast<size_t>(i)];
        if (coeffs.ring == Coefficients::Ring::Zp) acc = mod_value(acc, coeffs.p);
        out.values[static_cast<size_t>(j)] = acc;
    }
    return out;
}

Cochain cup_product(const ChainComplex& complex, const Coefficients& coeffs,
                    const Cochain& a, const Cochain& b) {
    if (!complex.selector || complex.selector->flavor != Flavor::Simplicial)
        throw unsupported_theory_error("cup product is defined on simplicial complexes only");
    const int p = a.dim, q = b.dim;
    if (p + q > complex.top_dim())
        throw input_error("complex too shallow for this cup product");
    Cochain out;
    out.dim = p + q;
    out.values.assign(static_cast<size_t>(complex.rank(p + q)), 0);
    const auto& basis = complex.simplices[static_cast<size_t>(p + q)];
    for (size_t j = 0; j < basis.size(); ++j) {
        const Simplex& s = basis[j];
        Simplex front{std::vector<int>(s.vertices.begin(), s.vertices.begin() + p + 1)};
        Simplex back{std::vector<int>(s.vertices.begin() + p, s.vertices.end())};
        int fi = complex.index_of_simplex(p, front);
        int bi = complex.index_of_simplex(q, back);
        if (fi < 0 || bi < 0) continue; // degenerate half, zero on the quotient
        std::int64_t v =
            a.values[static_cast<size_t>(fi)] * b.values[static_cast<size_t>(bi)];
        if (coeffs.ring == Coefficients::Ring::Zp) v = mod_value(v, coeffs.p);
        out.values[j] = v;
    }
    return out;
}

bool is_cocycle(const ChainComplex& complex, const Coefficients& coeffs,
                const Cochain& a) {
    Cochain d = coboundary(complex, coeffs, a);
    for (std::int64_t v : d.values)
        if (v != 0) return false;
    return true;
}

bool is_coboundary_mod_p(const ChainComplex& complex, std::int64_t p, const Cochain& a) {
    const int n = a.dim;
    if (n == 0) {
        for (std::int64_t v : a.values)
            if (mod_value(v, p) != 0) return false;
        return true;
    }
    // Solve delta x = a, i.e. transpose(d_n) x = a mod p.
    const Mat64& bnd = complex.boundary[static_cast<size_t>(n)];
    const int rows = complex.rank(n);     // equations
    const int cols = complex.rank(n - 1); // unknowns
    std::vector<std::vector<std::int64_t>> m(static_cast<size_t>(rows));
    for (int i = 0; i < rows; ++i) {
        m[static_cast<size_t>(i)].assign(static_cast<size_t>(cols) + 1, 0);
        for (int j = 0; j < cols; ++j)
            m[static_cast<size_t>(i)][static_cast<size_t>(j)] = mod_value(bnd.at(j, i), p);
        m[static_cast<size_t>(i)][static_cast<size_t>(cols)] =
            mod_value(a.values[static_cast<size_t>(i)], p);
    }
    auto inv_mod = [p](std::int64_t x) {
        std::int64_t r = 1, b = x % p, e = p - 2;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    };
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int i = rank; i < rows; ++i)
            if (m[static_cast<size_t>(i)][static_cast<size_t>(col)]) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[static_cast<size_t>(pivot)], m[static_cast<size_t>(rank)]);
        std::int64_t s = inv_mod(m[static_cast<size_t>(rank)][static_cast<size_t>(col)]);
        for (int j = col; j <= cols; ++j)
            m[static_cast<size_t>(rank)][static_cast<size_t>(j)] =
                m[static_cast<size_t>(rank)][static_cast<size_t>(j)] * s % p;
        for (int i = 0; i < rows; ++i) {
            if (i == rank) continue;
            std::int64_t f = m[static_cast<size_t>(i)][static_cast<size_t>(col)];
            if (!f) continue;
            for (int j = col; j <= cols; ++j) {
                std::int64_t& x = m[static_cast<size_t>(i)][static_cast<size_t>(j)];
                x = mod_value(x - f * m[static_cast<size_t>(rank)][static_cast<size_t>(j)], p);
            }
        }
        ++rank;
    }
    for (int i = rank; i < rows; ++i)
        if (m[static_cast<size_t>(i)][static_cast<size_t>(cols)]) return false;
    // Rows below rank are all-zero in A by construction of the elimination;
    // inconsistent rows were caught above.
    for (int i = 0; i < rank; ++i) {
        bool zero_row = true;
        for (int j = 0; j < cols; ++j)
            if (m[static_cast<size_t>(i)][static_cast<size_t>(j)]) {
                zero_row = false;
                break;
            }
        if (zero_row && m[static_cast<size_t>(i)][static_cast<size_t>(cols)]) return false;
    }
    return true;
}

std::vector<Cochain> cocycle_basis_mod_p(const ChainComplex& complex, std::int64_t p,
                                         int n) {
    require_range(complex, n);
    // Kernel of delta^n = transpose(d_{n+1}) mod p.
    Mat64 delta = transpose64(complex.boundary[static_cast<size_t>(n + 1)]);
    const int rows = delta.rows, cols = delta.cols;
    std::vector<std::vector<std::int64_t>> m(static_cast<size_t>(rows));
    for (int i = 0; i < rows; ++i) {
        m[static_cast<size_t>(i)].assign(static_cast<size_t>(cols), 0);
        for (int j = 0; j < cols; ++j)
            m[static_cast<size_t>(i)][static_cast<size_t>(j)] = mod_value(delta.at(i, j), p);
    }
    auto inv_mod = [p](std::int64_t x) {
        std::int64_t r = 1, b = x % p, e = p - 2;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    };
    std::vector<int> pivot_col;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int i = rank; i < rows; ++i)
            if (m[static_cast<size_t>(i)][static_cast<size_t>(col)]) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[static_cast<size_t>(pivot)], m[static_cast<size_t>(rank)]);
        std::int64_t s = inv_mod(m[static_cast<size_t>(rank)][static_cast<size_t>(col)]);
        for (int j = 0; j < cols; ++j)
            m[static_cast<size_t>(rank)][static_cast<size_t>(j)] =
                m[static_cast<size_t>(rank)][static_cast<size_t>(j)] * s % p;
        for (int i = 0; i < rows; ++i) {
            if (i == rank) continue;
            std::int64_t f = m[static_cast<size_t>(i)][static_cast<size_t>(col)];
            if (!f) continue;
            for (int j = 0; j < cols; ++j) {
                std::int64_t& x = m[static_cast<size_t>(i)][static_cast<size_t>(j)];
                x = mod_value(x - f * m[static_cast<size_t>(rank)][static_cast<size_t>(j)], p);
            }
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
    for (int cidx : pivot_col) is_pivot[static_cast<size_t>(cidx)] = true;
    std::vector<Cochain> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[static_cast<size_t>(free)]) continue;
        Cochain v;
        v.dim = n;
        v.values.assign(static_cast<size_t>(cols), 0);
        v.values[static_cast<size_t>(free)] = 1;
        for (int r = 0; r < rank; ++r)
            v.values[static_cast<size_t>(pivot_col[static_cast<size_t>(r)])] = mod_value(
                -m[static_cast<size_t>(r)][static_cast<size_t>(free)], p);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace pretop
