#pragma once

// Test-only oracle: classical simplicial homology of the clique (flag)
// complex of a reflexive symmetric space, built from vertex-ordered oriented
// simplices. Independent of the singular-nerve pipeline: enumeration is by
// increasing vertex tuples, the rank comes from fraction-free elimination.

#include <vector>

#include "pretop/exact.hpp"
#include "pretop/homology.hpp"
#include "pretop/space.hpp"

namespace oracle {

using pretop::BigInt;
using pretop::ClosureSpace;
using pretop::Mat64;
using pretop::MatZ;

inline int bareiss_rank(const Mat64& input) {
    MatZ m = pretop::to_bigint(input);
    int rank = 0;
    BigInt prev = 1;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int pivot = -1;
        for (int i = rank; i < m.rows; ++i)
            if (!m.at(i, col).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
        for (int i = rank + 1; i < m.rows; ++i) {
            for (int j = col + 1; j < m.cols; ++j)
                m.at(i, j) =
                    (m.at(rank, col) * m.at(i, j) - m.at(i, col) * m.at(rank, j)) / prev;
            m.at(i, col) = 0;
        }
        prev = m.at(rank, col);
        ++rank;
    }
    return rank;
}

// All strictly increasing (n+1)-tuples spanning a clique.
inline std::vector<std::vector<int>> clique_simplices(const ClosureSpace& x, int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto extend = [&](auto&& self, int next) -> void {
        if (static_cast<int>(cur.size()) == n + 1) {
            out.push_back(cur);
            return;
        }
        for (int v = next; v < x.size(); ++v) {
            bool ok = true;
            for (int u : cur)
                ok = ok && x.contains(v, x.point_closure(u)) &&
                     x.contains(u, x.point_closure(v));
            if (!ok) continue;
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    extend(extend, 0);
    return out;
}

inline Mat64 clique_boundary(const ClosureSpace& x, int n) {
    auto rows = clique_simplices(x, n - 1);
    auto cols = clique_simplices(x, n);
    auto index_of = [&rows](const std::vector<int>& f) {
        return static_cast<int>(std::lower_bound(rows.begin(), rows.end(), f) -
                                rows.begin());
    };
    Mat64 b(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (int j = 0; j < b.cols; ++j) {
        for (size_t i = 0; i <= cols[static_cast<size_t>(j)].size() - 1; ++i) {
            std::vector<int> face = cols[static_cast<size_t>(j)];
            face.erase(face.begin() + static_cast<long>(i));
            b.at(index_of(face), j) += (i % 2 == 0) ? 1 : -1;
        }
    }
    return b;
}

inline pretop::HomologyGroup clique_homology(const ClosureSpace& x, int n) {
    Mat64 out = n == 0 ? Mat64(0, static_cast<int>(clique_simplices(x, 0).size()))
                       : clique_boundary(x, n);
    Mat64 in = clique_boundary(x, n + 1);
    pretop::HomologyGroup h;
    h.betti = static_cast<long long>(clique_simplices(x, n).size()) -
              bareiss_rank(out) - bareiss_rank(in);
    for (BigInt& d : pretop::snf_invariants(in))
        if (d > 1) h.torsion.push_back(std::move(d));
    return h;
}

} // namespace oracle
