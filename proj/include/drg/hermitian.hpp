#pragma once
// Explicit construction of the dual polar graphs of Hermitian type at desk
// scale. Vertices are the maximal totally isotropic subspaces of the
// standard Hermitian form H(x, y) = sum_i x_i conj(y_i) on GF(r^2)^{2D},
// enumerated by extending isotropic flags; subspaces are canonicalized by
// reduced row echelon form so identity is an exact comparison. Two maximal
// subspaces are adjacent when their intersection has dimension D - 1.

#include "finite_graph.hpp"
#include "gf.hpp"

#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace drg {

namespace detail {

// reduced row echelon form over F; dependent rows are dropped, so the
// returned row count is the rank
inline std::vector<std::vector<int>> gf_rref(const GFSquare& F,
                                             std::vector<std::vector<int>> rows) {
    size_t m = rows.empty() ? 0 : rows[0].size();
    size_t rank = 0;
    for (size_t col = 0; col < m && rank < rows.size(); ++col) {
        size_t piv = rank;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        int scale = F.inv(rows[rank][col]);
        for (size_t j = 0; j < m; ++j) rows[rank][j] = F.mul(rows[rank][j], scale);
        for (size_t rr = 0; rr < rows.size(); ++rr) {
            if (rr == rank || rows[rr][col] == 0) continue;
            int f = rows[rr][col];
            for (size_t j = 0; j < m; ++j)
                rows[rr][j] = F.sub(rows[rr][j], F.mul(f, rows[rank][j]));
        }
        ++rank;
    }
    rows.resize(rank);
    return rows;
}

}  // namespace detail

inline FiniteGraph build_hermitian_dual_polar(int D, long long r) {
    bool supported = (D == 2 && (r == 2 || r == 3)) || (D == 3 && r == 2);
    if (!supported)
        throw std::invalid_argument(
            "build_hermitian_dual_polar: supported (D, r) are (2,2), (3,2), (2,3)");
    GFSquare F(static_cast<int>(r));
    const int m = 2 * D;  // ambient dimension over GF(r^2)
    const int fs = F.size();

    auto herm = [&](const std::vector<int>& x, const std::vector<int>& y) {
        int acc = 0;
        for (int i = 0; i < m; ++i) acc = F.add(acc, F.mul(x[i], F.conj(y[i])));
        return acc;
    };

    // all nonzero isotropic vectors, decoded from base-|F| codes
    std::vector<std::vector<int>> iso;
    long long total = 1;
    for (int i = 0; i < m; ++i) total *= fs;
    std::vector<int> v(m);
    for (long long code = 1; code < total; ++code) {
        long long rest = code;
        for (int i = 0; i < m; ++i) {
            v[i] = static_cast<int>(rest % fs);
            rest /= fs;
        }
        if (herm(v, v) == 0) iso.push_back(v);
    }

    auto flatten = [&](const std::vector<std::vector<int>>& rows) {
        std::vector<int> key;
        key.reserve(rows.size() * m);
        for (const std::vector<int>& row : rows) key.insert(key.end(), row.begin(), row.end());
        return key;
    };

    // grow isotropic flags one dimension at a time, deduplicating each level
    // by the canonical basis so no subspace is explored twice
    std::vector<std::set<std::vector<int>>> seen(D + 1);
    std::function<void(const std::vector<std::vector<int>>&)> extend =
        [&](const std::vector<std::vector<int>>& basis) {
            int dim = static_cast<int>(basis.size());
            if (dim == D) return;
            for (const std::vector<int>& w : iso) {
                bool orthogonal = true;
                for (const std::vector<int>& row : basis)
                    if (herm(row, w) != 0) {
                        orthogonal = false;
                        break;
                    }
                if (!orthogonal) continue;
                std::vector<std::vector<int>> rows = basis;
                rows.push_back(w);
                rows = detail::gf_rref(F, std::move(rows));
                if (static_cast<int>(rows.size()) != dim + 1) continue;  // w in span
                if (seen[dim + 1].insert(flatten(rows)).second) extend(rows);
            }
        };
    extend({});

    // reconcile the enumerated count with the closed-form vertex count of
    // the intersection-array recurrence before trusting either
    long long expected = 1;
    for (int i = 1; i <= D; ++i) {
        long long f = 1;
        for (int e = 0; e < 2 * i - 1; ++e) f *= r;
        expected *= f + 1;
    }
    if (static_cast<long long>(seen[D].size()) != expected)
        throw std::logic_error(
            "build_hermitian_dual_polar: enumerated maximal isotropic count "
            "disagrees with the vertex-count recurrence");

    FiniteGraph g;
    g.n = static_cast<int>(seen[D].size());
    g.adj.assign(g.n, {});
    g.labels.reserve(g.n);
    std::vector<std::vector<std::vector<int>>> bases;
    bases.reserve(g.n);
    for (const std::vector<int>& key : seen[D]) {
        std::vector<std::vector<int>> rows(D, std::vector<int>(m));
        std::string label;
        for (int rr = 0; rr < D; ++rr) {
            for (int j = 0; j < m; ++j) {
                rows[rr][j] = key[rr * m + j];
                label += static_cast<char>('0' + rows[rr][j]);
            }
            if (rr + 1 < D) label += '/';
        }
        bases.push_back(std::move(rows));
        g.labels.push_back(std::move(label));
    }

    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j) {
            std::vector<std::vector<int>> stacked = bases[i];
            stacked.insert(stacked.end(), bases[j].begin(), bases[j].end());
            // dim(U cap W) = 2D_sub - rank; adjacency needs dimension D - 1
            int rank = static_cast<int>(detail::gf_rref(F, std::move(stacked)).size());
            if (rank == D + 1) {
                g.adj[i].push_back(j);
                g.adj[j].push_back(i);
            }
        }
    return g;
}

}  // namespace drg
