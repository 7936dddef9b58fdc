#include "pretop/exact.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <map>

namespace pretop {

namespace {

// Thrown by the int64 fast path when an intermediate value no longer fits;
// the caller reruns the same elimination over BigInt.
struct overflow_flag {};

struct C64 {
    std::int64_t v = 0;
    C64() = default;
    C64(std::int64_t x) : v(x) {}

    friend C64 operator+(C64 a, C64 b) {
        std::int64_t r;
        if (__builtin_add_overflow(a.v, b.v, &r)) throw overflow_flag{};
        return r;
    }
    friend C64 operator-(C64 a, C64 b) {
        std::int64_t r;
        if (__builtin_sub_overflow(a.v, b.v, &r)) throw overflow_flag{};
        return r;
    }
    friend C64 operator*(C64 a, C64 b) {
        std::int64_t r;
        if (__builtin_mul_overflow(a.v, b.v, &r)) throw overflow_flag{};
        return r;
    }
    friend C64 operator/(C64 a, C64 b) {
        if (a.v == std::numeric_limits<std::int64_t>::min() && b.v == -1)
            throw overflow_flag{};
        return a.v / b.v;
    }
    friend C64 operator%(C64 a, C64 b) {
        if (a.v == std::numeric_limits<std::int64_t>::min() && b.v == -1)
            throw overflow_flag{};
        return a.v % b.v;
    }
    C64 operator-() const {
        if (v == std::numeric_limits<std::int64_t>::min()) throw overflow_flag{};
        return -v;
    }
    friend bool operator==(C64 a, C64 b) { return a.v == b.v; }
    friend bool operator!=(C64 a, C64 b) { return a.v != b.v; }
    friend bool operator<(C64 a, C64 b) { return a.v < b.v; }
};

C64 abs_of(C64 x) { return x.v < 0 ? -x : x; }
BigInt abs_of(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }
bool is_zero(C64 x) { return x.v == 0; }
bool is_zero(const BigInt& x) { return x.is_zero(); }

BigInt to_big(C64 x) { return BigInt(x.v); }
const BigInt& to_big(const BigInt& x) { return x; }

// Row/column elimination to Smith form. Transform tracking is optional:
// without it the engine only keeps the working matrix.
template <class E>
class SnfEngine {
public:
    SnfEngine(Mat<E> w, bool track) : w_(std::move(w)), track_(track) {
        if (track_) {
            u_ = Mat<E>::identity(w_.rows);
            v_ = Mat<E>::identity(w_.cols);
            vinv_ = Mat<E>::identity(w_.cols);
        }
    }

    void run() {
        const int steps = std::min(w_.rows, w_.cols);
        for (int t = 0; t < steps; ++t) {
            if (!reduce_step(t)) break;
            ++rank_;
        }
        for (int t = 0; t < rank_; ++t)
            if (w_.at(t, t) < E(0)) row_negate(t);
    }

    const Mat<E>& d() const { return w_; }
    const Mat<E>& u() const { return u_; }
    const Mat<E>& v() const { return v_; }
    const Mat<E>& v_inv() const { return vinv_; }
    int rank() const { return rank_; }

private:
    bool select_pivot(int t) {
        int bi = -1, bj = -1;
        for (int i = t; i < w_.rows; ++i)
            for (int j = t; j < w_.cols; ++j) {
                const E& x = w_.at(i, j);
                if (is_zero(x)) continue;
                if (bi < 0 || abs_of(x) < abs_of(w_.at(bi, bj))) {
                    bi = i;
                    bj = j;
                }
            }
        if (bi < 0) return false;
        if (bi != t) row_swap(t, bi);
        if (bj != t) col_swap(t, bj);
        return true;
    }

    // Quotient of round-to-nearest division, so remainders come out at most
    // half the divisor; this keeps the Euclidean descent short and the
    // intermediate entries tame.
    static E nearest_quotient(const E& a, const E& b) {
        E q = a / b;
        E r = a - q * b;
        if (is_zero(r)) return q;
        E twice = r + r;
        E habs = abs_of(twice);
        E babs = abs_of(b);
        if (babs < habs || babs == habs) {
            bool same_sign = (r < E(0)) == (b < E(0));
            q = same_sign ? q + E(1) : q - E(1);
        }
        return q;
    }

    // Returns false when the submatrix at (t, t) is entirely zero. The
    // minimal-entry pivot is re-selected on every sweep.
    bool reduce_step(int t) {
        if (!select_pivot(t)) return false;
        for (;;) {
            bool dirty = false;
            for (int i = t + 1; i < w_.rows; ++i) {
                if (is_zero(w_.at(i, t))) continue;
                E q = nearest_quotient(w_.at(i, t), w_.at(t, t));
                if (!is_zero(q)) row_axpy(i, t, q);
                if (!is_zero(w_.at(i, t))) dirty = true; // remainder <= |pivot|/2
            }
            for (int j = t + 1; j < w_.cols; ++j) {
                if (is_zero(w_.at(t, j))) continue;
                E q = nearest_quotient(w_.at(t, j), w_.at(t, t));
                if (!is_zero(q)) col_axpy(j, t, q);
                if (!is_zero(w_.at(t, j))) dirty = true;
            }
            if (dirty) {
                select_pivot(t); // a strictly smaller pivot now exists
                continue;
            }
            // Fold an entry the pivot does not divide into row t; the next
            // sweeps shrink the pivot toward the gcd of the submatrix. This
            // is what makes the diagonal a divisibility chain.
            for (int i = t + 1; i < w_.rows && !dirty; ++i)
                for (int j = t + 1; j < w_.cols && !dirty; ++j)
                    if (!is_zero(w_.at(i, j) % w_.at(t, t))) {
                        row_axpy(t, i, E(-1)); // row t += row i
                        dirty = true;
                    }
            if (!dirty) return true;
        }
    }

    void row_swap(int i, int j) {
        for (int k = 0; k < w_.cols; ++k) std::swap(w_.at(i, k), w_.at(j, k));
        if (track_)
            for (int k = 0; k < u_.cols; ++k) std::swap(u_.at(i, k), u_.at(j, k));
    }
    void row_negate(int i) {
        for (int k = 0; k < w_.cols; ++k) w_.at(i, k) = -w_.at(i, k);
        if (track_)
            for (int k = 0; k < u_.cols; ++k) u_.at(i, k) = -u_.at(i, k);
    }
    // row i -= q * row j
    void row_axpy(int i, int j, const E& q) {
        for (int k = 0; k < w_.cols; ++k) w_.at(i, k) = w_.at(i, k) - q * w_.at(j, k);
        if (track_)
            for (int k = 0; k < u_.cols; ++k) u_.at(i, k) = u_.at(i, k) - q * u_.at(j, k);
    }
    void col_swap(int i, int j) {
        for (int k = 0; k < w_.rows; ++k) std::swap(w_.at(k, i), w_.at(k, j));
        if (track_) {
            for (int k = 0; k < v_.rows; ++k) std::swap(v_.at(k, i), v_.at(k, j));
            for (int k = 0; k < vinv_.cols; ++k) std::swap(vinv_.at(i, k), vinv_.at(j, k));
        }
    }
    // col i -= q * col j; on v_inv this is the inverse op from the left,
    // row j += q * row i.
    void col_axpy(int i, int j, const E& q) {
        for (int k = 0; k < w_.rows; ++k) w_.at(k, i) = w_.at(k, i) - q * w_.at(k, j);
        if (track_) {
            for (int k = 0; k < v_.rows; ++k) v_.at(k, i) = v_.at(k, i) - q * v_.at(k, j);
            for (int k = 0; k < vinv_.cols; ++k)
                vinv_.at(j, k) = vinv_.at(j, k) + q * vinv_.at(i, k);
        }
    }

    Mat<E> w_;
    bool track_;
    Mat<E> u_, v_, vinv_;
    int rank_ = 0;
};

Mat<C64> to_checked(const Mat64& m) {
    Mat<C64> out(m.rows, m.cols);
    for (size_t i = 0; i < m.a.size(); ++i) out.a[i] = C64(m.a[i]);
    return out;
}

template <class E>
MatZ to_bigmat(const Mat<E>& m) {
    MatZ out(m.rows, m.cols);
    for (size_t i = 0; i < m.a.size(); ++i) out.a[i] = to_big(m.a[i]);
    return out;
}

SnfTransforms pack(const SnfEngine<C64>& e) {
    SnfTransforms r;
    r.d = to_bigmat(e.d());
    r.u = to_bigmat(e.u());
    r.v = to_bigmat(e.v());
    r.v_inv = to_bigmat(e.v_inv());
    r.rank = e.rank();
    for (int t = 0; t < r.rank; ++t) r.invariants.push_back(r.d.at(t, t));
    return r;
}

SnfTransforms pack(const SnfEngine<BigInt>& e) {
    SnfTransforms r;
    r.d = e.d();
    r.u = e.u();
    r.v = e.v();
    r.v_inv = e.v_inv();
    r.rank = e.rank();
    for (int t = 0; t < r.rank; ++t) r.invariants.push_back(r.d.at(t, t));
    return r;
}

} // namespace

MatZ to_bigint(const Mat64& m) {
    MatZ out(m.rows, m.cols);
    for (size_t i = 0; i < m.a.size(); ++i) out.a[i] = BigInt(m.a[i]);
    return out;
}

MatZ multiply(const MatZ& a, const MatZ& b) {
    if (a.cols != b.rows) throw input_error("matrix product shape mismatch");
    MatZ out(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            const BigInt& x = a.at(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < b.cols; ++j) {
                const BigInt& y = b.at(k, j);
                if (!y.is_zero()) out.at(i, j) += x * y;
            }
        }
    return out;
}

MatZ transpose(const MatZ& m) {
    MatZ out(m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) out.at(j, i) = m.at(i, j);
    return out;
}

Mat64 transpose64(const Mat64& m) {
    Mat64 out(m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) out.at(j, i) = m.at(i, j);
    return out;
}

SnfResult smith_normal_form(const MatZ& m) {
    SnfEngine<BigInt> e(m, true);
    e.run();
    SnfTransforms t = pack(e);
    return SnfResult{std::move(t.d), std::move(t.u), std::move(t.v),
                     std::move(t.invariants), t.rank};
}

SnfResult smith_normal_form(const Mat64& m) {
    SnfTransforms t = snf_with_transforms(m);
    return SnfResult{std::move(t.d), std::move(t.u), std::move(t.v),
                     std::move(t.invariants), t.rank};
}

SnfTransforms snf_with_transforms(const Mat64& m) {
    try {
        SnfEngine<C64> e(to_checked(m), true);
        e.run();
        return pack(e);
    } catch (const overflow_flag&) {
        SnfEngine<BigInt> e(to_bigint(m), true);
        e.run();
        return pack(e);
    }
}

std::vector<BigInt> snf_invariants(const Mat64& m) {
    // Zero and duplicate columns do not change the column lattice; dropping
    // them up front keeps boundary-matrix eliminations small.
    std::vector<std::vector<std::int64_t>> cols;
    cols.reserve(static_cast<size_t>(m.cols));
    for (int j = 0; j < m.cols; ++j) {
        std::vector<std::int64_t> col(static_cast<size_t>(m.rows));
        bool zero = true;
        for (int i = 0; i < m.rows; ++i) {
            col[static_cast<size_t>(i)] = m.at(i, j);
            zero = zero && m.at(i, j) == 0;
        }
        if (!zero) cols.push_back(std::move(col));
    }
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    Mat64 packed(m.rows, static_cast<int>(cols.size()));
    for (int j = 0; j < packed.cols; ++j)
        for (int i = 0; i < m.rows; ++i)
            packed.at(i, j) = cols[static_cast<size_t>(j)][static_cast<size_t>(i)];
    try {
        SnfEngine<C64> e(to_checked(packed), false);
        e.run();
        std::vector<BigInt> inv;
        for (int t = 0; t < e.rank(); ++t) inv.push_back(BigInt(e.d().at(t, t).v));
        return inv;
    } catch (const overflow_flag&) {
        SnfEngine<BigInt> e(to_bigint(packed), false);
        e.run();
        std::vector<BigInt> inv;
        for (int t = 0; t < e.rank(); ++t) inv.push_back(e.d().at(t, t));
        return inv;
    }
}

int rank_over_z(const Mat64& m) {
    return static_cast<int>(snf_invariants(m).size());
}

int rank_mod_p(const Mat64& m, std::int64_t p) {
    if (p < 2) throw input_error("modulus must be a prime >= 2");
    std::vector<std::vector<std::int64_t>> w(static_cast<size_t>(m.rows));
    for (int i = 0; i < m.rows; ++i) {
        w[static_cast<size_t>(i)].resize(static_cast<size_t>(m.cols));
        for (int j = 0; j < m.cols; ++j) {
            std::int64_t x = m.at(i, j) % p;
            if (x < 0) x += p;
            w[static_cast<size_t>(i)][static_cast<size_t>(j)] = x;
        }
    }
    auto inv_mod = [p](std::int64_t a) {
        std::int64_t r = 1, b = a % p, e = p - 2; // p prime
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    };
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int pivot = -1;
        for (int i = rank; i < m.rows; ++i)
            if (w[static_cast<size_t>(i)][static_cast<size_t>(col)]) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(w[static_cast<size_t>(pivot)], w[static_cast<size_t>(rank)]);
        std::int64_t s = inv_mod(w[static_cast<size_t>(rank)][static_cast<size_t>(col)]);
        for (int j = col; j < m.cols; ++j)
            w[static_cast<size_t>(rank)][static_cast<size_t>(j)] =
                w[static_cast<size_t>(rank)][static_cast<size_t>(j)] * s % p;
        for (int i = 0; i < m.rows; ++i) {
            if (i == rank) continue;
            std::int64_t f = w[static_cast<size_t>(i)][static_cast<size_t>(col)];
            if (!f) continue;
            for (int j = col; j < m.cols; ++j) {
                std::int64_t& x = w[static_cast<size_t>(i)][static_cast<size_t>(j)];
                x = (x - f * w[static_cast<size_t>(rank)][static_cast<size_t>(j)]) % p;
                if (x < 0) x += p;
            }
        }
        ++rank;
    }
    return rank;
}

LatticeSolver::LatticeSolver(const MatZ& m) : rows_(m.rows) {
    SnfEngine<BigInt> e(m, true);
    e.run();
    u_ = e.u();
    rank_ = e.rank();
    for (int t = 0; t < rank_; ++t) diag_.push_back(e.d().at(t, t));
}

bool LatticeSolver::contains(const std::vector<BigInt>& x) const {
    if (static_cast<int>(x.size()) != rows_)
        throw input_error("lattice membership: dimension mismatch");
    for (int i = 0; i < rows_; ++i) {
        BigInt y = 0;
        for (int k = 0; k < rows_; ++k)
            if (!u_.at(i, k).is_zero() && !x[static_cast<size_t>(k)].is_zero())
                y += u_.at(i, k) * x[static_cast<size_t>(k)];
        if (i < rank_) {
            if (y % diag_[static_cast<size_t>(i)] != 0) return false;
        } else if (!y.is_zero()) {
            return false;
        }
    }
    return true;
}

bool LatticeSolver::contains_columns(const MatZ& m) const {
    std::vector<BigInt> x(static_cast<size_t>(m.rows));
    for (int j = 0; j < m.cols; ++j) {
        for (int i = 0; i < m.rows; ++i) x[static_cast<size_t>(i)] = m.at(i, j);
        if (!contains(x)) return false;
    }
    return true;
}

bool lattice_subset(const MatZ& a, const MatZ& b) {
    if (a.rows != b.rows) throw input_error("lattice comparison: dimension mismatch");
    return LatticeSolver(b).contains_columns(a);
}

bool lattice_equal(const MatZ& a, const MatZ& b) {
    return lattice_subset(a, b) && lattice_subset(b, a);
}

MatZ concat_cols(const MatZ& a, const MatZ& b) {
    if (a.rows != b.rows) throw input_error("column concat: row mismatch");
    MatZ out(a.rows, a.cols + b.cols);
    for (int i = 0; i < a.rows; ++i) {
        for (int j = 0; j < a.cols; ++j) out.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols; ++j) out.at(i, a.cols + j) = b.at(i, j);
    }
    return out;
}

std::vector<BigInt> PresentedGroup::torsion() const {
    SnfEngine<BigInt> e(relations, false);
    e.run();
    std::vector<BigInt> out;
    for (int t = 0; t < e.rank(); ++t)
        if (e.d().at(t, t) > 1) out.push_back(e.d().at(t, t));
    return out;
}

int PresentedGroup::free_rank() const {
    SnfEngine<BigInt> e(relations, false);
    e.run();
    return gens - e.rank();
}

bool hom_well_defined(const PresentedGroup& src, const PresentedGroup& tgt,
                      const MatZ& m) {
    if (m.rows != tgt.gens || m.cols != src.gens) return false;
    return LatticeSolver(tgt.relations).contains_columns(multiply(m, src.relations));
}

bool homs_equal(const PresentedGroup& tgt, const MatZ& m1, const MatZ& m2) {
    if (m1.rows != m2.rows || m1.cols != m2.cols) return false;
    MatZ diff(m1.rows, m1.cols);
    for (size_t i = 0; i < diff.a.size(); ++i) diff.a[i] = m1.a[i] - m2.a[i];
    return LatticeSolver(tgt.relations).contains_columns(diff);
}

MatZ hom_image_lattice(const PresentedGroup& tgt, const MatZ& m) {
    return concat_cols(m, tgt.relations);
}

MatZ hom_kernel_lattice(const PresentedGroup& src, const PresentedGroup& tgt,
                        const MatZ& m) {
    // x is in the kernel iff m x lies in the target relation lattice, i.e.
    // [m | R_tgt] (x, y)^T = 0 for some y; project integer kernel onto x.
    MatZ combined = concat_cols(m, tgt.relations);
    SnfEngine<BigInt> e(combined, true);
    e.run();
    const MatZ& v = e.v();
    int null_dim = combined.cols - e.rank();
    MatZ proj(src.gens, null_dim + src.relations.cols);
    for (int j = 0; j < null_dim; ++j)
        for (int i = 0; i < src.gens; ++i) proj.at(i, j) = v.at(i, e.rank() + j);
    // The source relations are in the kernel subgroup by definition.
    for (int j = 0; j < src.relations.cols; ++j)
        for (int i = 0; i < src.gens; ++i)
            proj.at(i, null_dim + j) = src.relations.at(i, j);
    return proj;
}

bool hom_injective(const PresentedGroup& src, const PresentedGroup& tgt, const MatZ& m) {
    return lattice_subset(hom_kernel_lattice(src, tgt, m), src.relations);
}

bool hom_surjective(const PresentedGroup& tgt, const MatZ& m) {
    return lattice_subset(MatZ::identity(tgt.gens), hom_image_lattice(tgt, m));
}

bool hom_isomorphism(const PresentedGroup& src, const PresentedGroup& tgt,
                     const MatZ& m) {
    return hom_injective(src, tgt, m) && hom_surjective(tgt, m);
}

bool exact_at(const PresentedGroup& left, const PresentedGroup& middle,
              const PresentedGroup& right, const MatZ& f, const MatZ& g) {
    (void)left;
    return lattice_equal(hom_image_lattice(middle, f),
                         hom_kernel_lattice(middle, right, g));
}

} // namespace pretop
