#pragma once
// A concrete finite graph at desk scale: sorted adjacency lists, vertex
// labels, and an optional all-pairs distance table filled by BFS from every
// vertex. Construction helpers build Hamming graphs; the Hermitian dual
// polar builder lives in hermitian.hpp.

#include <algorithm>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

namespace drg {

struct FiniteGraph {
    int n = 0;
    std::vector<std::vector<int>> adj;            // sorted neighbor lists
    std::vector<std::string> labels;              // vertex descriptors
    std::vector<std::vector<std::uint8_t>> dist;  // empty until computed

    bool adjacent(int u, int v) const {
        const std::vector<int>& a = adj[u];
        return std::binary_search(a.begin(), a.end(), v);
    }
    bool has_distances() const { return !dist.empty(); }
    int d(int u, int v) const { return dist[u][v]; }
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    long long edge_count() const {
        long long twice = 0;
        for (const std::vector<int>& a : adj) twice += static_cast<long long>(a.size());
        return twice / 2;
    }
    int diameter() const {
        int m = 0;
        for (const std::vector<std::uint8_t>& row : dist)
            for (std::uint8_t v : row) m = std::max(m, static_cast<int>(v));
        return m;
    }
};

// BFS from every vertex; requires a connected graph of moderate size
inline void compute_distances(FiniteGraph& g) {
    if (g.n > 16384)
        throw std::invalid_argument("compute_distances: all-pairs table needs n <= 16384");
    g.dist.assign(g.n, std::vector<std::uint8_t>(g.n, 255));
    std::vector<int> queue;
    queue.reserve(g.n);
    for (int s = 0; s < g.n; ++s) {
        std::vector<std::uint8_t>& row = g.dist[s];
        row[s] = 0;
        queue.clear();
        queue.push_back(s);
        for (size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            int du = row[u];
            for (int w : g.adj[u])
                if (row[w] == 255) {
                    if (du + 1 > 254)
                        throw std::overflow_error("compute_distances: distance exceeds 254");
                    row[w] = static_cast<std::uint8_t>(du + 1);
                    queue.push_back(w);
                }
        }
        if (static_cast<int>(queue.size()) != g.n)
            throw std::invalid_argument("compute_distances: graph is not connected");
    }
}

// words of length D over an alphabet of size q, adjacent when they differ in
// exactly one coordinate
inline FiniteGraph build_hamming(int D, long long q) {
    if (D < 1 || q < 1) throw std::invalid_argument("build_hamming: need D >= 1 and q >= 1");
    long long n = 1;
    for (int i = 0; i < D; ++i) {
        n *= q;
        if (n > 100000) throw std::invalid_argument("build_hamming: q^D must be <= 100000");
    }
    FiniteGraph g;
    g.n = static_cast<int>(n);
    g.adj.assign(g.n, {});
    g.labels.assign(g.n, "");
    std::vector<long long> digits(D);
    for (long long v = 0; v < n; ++v) {
        long long rest = v;
        for (int i = 0; i < D; ++i) {
            digits[i] = rest % q;
            rest /= q;
        }
        std::string label;
        long long place = 1;
        for (int i = 0; i < D; ++i) {
            label += std::to_string(digits[i]);
            if (i + 1 < D) label += ',';
            for (long long c = 0; c < q; ++c)
                if (c != digits[i]) g.adj[v].push_back(static_cast<int>(v + (c - digits[i]) * place));
            place *= q;
        }
        std::sort(g.adj[v].begin(), g.adj[v].end());
        g.labels[v] = label;
    }
    return g;
}

}  // namespace drg
