#pragma once
// Graph-level verification for constructed graphs: full (unsampled)
// distance-regularity measurement, maximal-clique structure, clique-to-vertex
// gamma profiles, equitable distance partitions of cliques, the strongly
// closed subgraph generated by a distance-2 pair, and the entrywise Schur
// square identity characterizing a light tail.

#include "finite_graph.hpp"
#include "geometric.hpp"
#include "krein.hpp"

#include <boost/dynamic_bitset.hpp>

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace drg {

namespace detail {

using Bits = boost::dynamic_bitset<>;

template <typename Report>
void bron_kerbosch(const std::vector<Bits>& nb, Bits R, Bits P, Bits X, Report&& report) {
    if (P.none() && X.none()) {
        report(R);
        return;
    }
    Bits both = P | X;
    size_t pivot = both.find_first();
    size_t best = 0;
    for (size_t u = pivot; u != Bits::npos; u = both.find_next(u)) {
        size_t c = (P & nb[u]).count();
        if (c > best) {
            best = c;
            pivot = u;
        }
    }
    Bits cand = P & ~nb[pivot];
    for (size_t v = cand.find_first(); v != Bits::npos; v = cand.find_next(v)) {
        Bits r2 = R;
        r2.set(v);
        bron_kerbosch(nb, std::move(r2), P & nb[v], X & nb[v], report);
        P.reset(v);
        X.set(v);
    }
}

inline std::vector<Bits> neighbor_bitsets(const FiniteGraph& g) {
    std::vector<Bits> nb(g.n, Bits(g.n));
    for (int v = 0; v < g.n; ++v)
        for (int w : g.adj[v]) nb[v].set(w);
    return nb;
}

}  // namespace detail

inline std::vector<std::vector<int>> maximal_cliques(const FiniteGraph& g) {
    std::vector<detail::Bits> nb = detail::neighbor_bitsets(g);
    detail::Bits all(g.n);
    all.set();
    std::vector<std::vector<int>> out;
    detail::bron_kerbosch(nb, detail::Bits(g.n), all, detail::Bits(g.n),
                          [&](const detail::Bits& r) {
                              std::vector<int> c;
                              for (size_t v = r.find_first(); v != detail::Bits::npos;
                                   v = r.find_next(v))
                                  c.push_back(static_cast<int>(v));
                              out.push_back(std::move(c));
                          });
    return out;
}

struct MeasuredParameters {
    bool distance_regular = false;
    std::string failure;  // names a violating pair when verification fails
    std::optional<IntersectionArray> array;
    std::vector<long long> gamma;  // |Gamma_i(x) cap C| profile over clique distances
    bool gamma_constant = false;
    std::map<long long, long long> maximal_clique_sizes;  // size -> count
    long long maximal_clique_count = 0;
    bool delsarte_complete = false;  // every maximal clique has size a_1 + 2
    bool k112_free = false;          // no induced K_4 minus an edge
    bool locally_disjoint_cliques = false;  // neighborhoods split into (a_1+1)-cliques
};

inline MeasuredParameters measure_parameters(const FiniteGraph& g) {
    if (!g.has_distances())
        throw std::invalid_argument("measure_parameters: compute_distances first");
    if (g.n > 4096)
        throw std::invalid_argument("measure_parameters: full verification needs n <= 4096");
    MeasuredParameters mp;
    if (g.n < 2) {
        mp.failure = "a single vertex has no intersection numbers";
        return mp;
    }
    int diam = g.diameter();

    // full constancy check of the intersection numbers over every ordered pair
    std::vector<long long> bvals(diam + 1, -1), cvals(diam + 1, -1);
    for (int x = 0; x < g.n; ++x) {
        const std::vector<std::uint8_t>& row = g.dist[x];
        for (int y = 0; y < g.n; ++y) {
            int i = row[y];
            long long down = 0, up = 0;
            for (int w : g.adj[y]) {
                int dw = row[w];
                if (dw == i - 1)
                    ++down;
                else if (dw == i + 1)
                    ++up;
            }
            if (i >= 1) {
                if (cvals[i] < 0) cvals[i] = down;
                if (cvals[i] != down) {
                    std::ostringstream os;
                    os << "vertices " << x << " and " << y << " at distance " << i
                       << ": c = " << down << ", elsewhere " << cvals[i];
                    mp.failure = os.str();
                    return mp;
                }
            }
            if (i <= diam - 1 || i == 0) {
                if (bvals[i] < 0) bvals[i] = up;
                if (bvals[i] != up) {
                    std::ostringstream os;
                    os << "vertices " << x << " and " << y << " at distance " << i
                       << ": b = " << up << ", elsewhere " << bvals[i];
                    mp.failure = os.str();
                    return mp;
                }
            }
        }
    }
    try {
        mp.array = IntersectionArray::from_bc(
            std::vector<long long>(bvals.begin(), bvals.begin() + diam),
            std::vector<long long>(cvals.begin() + 1, cvals.end()));
    } catch (const std::invalid_argument& e) {
        mp.failure = std::string("measured numbers are not an intersection array: ") + e.what();
        return mp;
    }
    mp.distance_regular = true;
    long long a1 = mp.array->a(1);

    // maximal cliques and the gamma profile over (vertex, clique) pairs
    std::vector<std::vector<int>> cliques = maximal_cliques(g);
    mp.maximal_clique_count = static_cast<long long>(cliques.size());
    for (const std::vector<int>& c : cliques) ++mp.maximal_clique_sizes[(long long)c.size()];
    mp.delsarte_complete = mp.maximal_clique_sizes.size() == 1 &&
                           mp.maximal_clique_sizes.count(a1 + 2) == 1;

    std::vector<long long> gam(diam + 1, -1);
    mp.gamma_constant = true;
    int max_i = 0;
    for (const std::vector<int>& c : cliques) {
        for (int x = 0; x < g.n; ++x) {
            int i = diam;
            for (int v : c) i = std::min(i, g.d(x, v));
            long long cnt = 0;
            for (int v : c)
                if (g.d(x, v) == i) ++cnt;
            max_i = std::max(max_i, i);
            if (gam[i] < 0)
                gam[i] = cnt;
            else if (gam[i] != cnt)
                mp.gamma_constant = false;
        }
    }
    mp.gamma.assign(gam.begin(), gam.begin() + max_i + 1);

    // K_{1,1,2}-freeness: no edge whose common neighborhood has a non-edge
    std::vector<detail::Bits> nb = detail::neighbor_bitsets(g);
    mp.k112_free = true;
    for (int u = 0; u < g.n && mp.k112_free; ++u)
        for (int v : g.adj[u]) {
            if (v <= u) continue;
            detail::Bits common = nb[u] & nb[v];
            for (size_t z = common.find_first(); z != detail::Bits::npos && mp.k112_free;
                 z = common.find_next(z))
                for (size_t w = common.find_next(z); w != detail::Bits::npos;
                     w = common.find_next(w))
                    if (!g.adjacent((int)z, (int)w)) {
                        mp.k112_free = false;
                        break;
                    }
            if (!mp.k112_free) break;
        }

    // each neighborhood must induce a disjoint union of (a_1 + 1)-cliques
    mp.locally_disjoint_cliques = true;
    for (int x = 0; x < g.n && mp.locally_disjoint_cliques; ++x)
        for (int y : g.adj[x]) {
            detail::Bits inside = nb[x] & nb[y];
            if (static_cast<long long>(inside.count()) != a1) {
                mp.locally_disjoint_cliques = false;
                break;
            }
            for (size_t z = inside.find_first(); z != detail::Bits::npos;
                 z = inside.find_next(z))
                for (size_t w = inside.find_next(z); w != detail::Bits::npos;
                     w = inside.find_next(w))
                    if (!g.adjacent((int)z, (int)w)) mp.locally_disjoint_cliques = false;
            if (!mp.locally_disjoint_cliques) break;
        }
    return mp;
}

struct CompletelyRegularReport {
    bool attains_bound = false;  // |C| equals the clique bound 1 - k/theta_D
    bool equitable = false;
    bool radius_matches = false;  // covering radius equals D - 1
    int covering_radius = -1;
    std::string note;
    bool holds() const { return attains_bound && equitable && radius_matches; }
};

inline CompletelyRegularReport verify_delsarte_completely_regular(
    const FiniteGraph& g, const Spectrum& s, const std::vector<int>& clique) {
    if (!g.has_distances())
        throw std::invalid_argument("verify_delsarte_completely_regular: compute_distances first");
    CompletelyRegularReport rep;
    if (clique.empty()) {
        rep.note = "empty vertex set";
        return rep;
    }
    for (size_t i = 0; i < clique.size(); ++i)
        for (size_t j = i + 1; j < clique.size(); ++j)
            if (!g.adjacent(clique[i], clique[j])) {
                std::ostringstream os;
                os << "vertices " << clique[i] << " and " << clique[j] << " are not adjacent";
                rep.note = os.str();
                return rep;
            }
    Scalar bound = delsarte_bound(s);
    if (!(Scalar(Rat((long long)clique.size())) == bound)) {
        std::ostringstream os;
        os << "clique of size " << clique.size() << " does not attain the clique bound "
           << bound.str();
        rep.note = os.str();
        return rep;
    }
    rep.attains_bound = true;

    std::vector<int> cell(g.n, 0);
    int radius = 0;
    for (int x = 0; x < g.n; ++x) {
        int i = g.n;
        for (int v : clique) i = std::min(i, g.d(x, v));
        cell[x] = i;
        radius = std::max(radius, i);
    }
    rep.covering_radius = radius;
    rep.radius_matches = radius == s.array().D() - 1;

    // equitable: neighbor counts toward every cell depend only on the cell
    std::vector<std::vector<long long>> profile(radius + 1);
    std::vector<int> witness(radius + 1, -1);
    rep.equitable = true;
    for (int x = 0; x < g.n; ++x) {
        std::vector<long long> p(radius + 1, 0);
        for (int w : g.adj[x]) ++p[cell[w]];
        int i = cell[x];
        if (witness[i] < 0) {
            witness[i] = x;
            profile[i] = std::move(p);
        } else if (profile[i] != p) {
            std::ostringstream os;
            os << "cell " << i << ": vertices " << witness[i] << " and " << x
               << " have different neighbor counts";
            rep.note = os.str();
            rep.equitable = false;
            return rep;
        }
    }
    if (!rep.radius_matches) {
        std::ostringstream os;
        os << "covering radius " << radius << " differs from D - 1 = " << s.array().D() - 1;
        rep.note = os.str();
    }
    return rep;
}

struct GqSearchResult {
    bool is_gq = false;
    int base_x = -1;
    int base_y = -1;
    long long subgraph_size = 0;
    std::optional<IntersectionArray> subgraph_array;  // measured when measurable
    std::string note;
};

// grow the strongly closed subgraph generated by the first distance-2 pair:
// whenever u, v are in the set, every neighbor w of v with d(u, w) <= d(u, v)
// joins too; then verify the induced subgraph is a generalized-quadrangle
// graph with parameters (s, t)
inline GqSearchResult find_induced_gq(const FiniteGraph& g, long long s_param,
                                      long long t_param) {
    if (!g.has_distances())
        throw std::invalid_argument("find_induced_gq: compute_distances first");
    GqSearchResult res;
    for (int x = 0; x < g.n && res.base_x < 0; ++x)
        for (int y = x + 1; y < g.n; ++y)
            if (g.d(x, y) == 2) {
                res.base_x = x;
                res.base_y = y;
                break;
            }
    if (res.base_x < 0) {
        res.note = "graph has no pair at distance 2";
        return res;
    }

    std::vector<char> in(g.n, 0);
    std::vector<int> members{res.base_x, res.base_y};
    in[res.base_x] = in[res.base_y] = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t iu = 0; iu < members.size(); ++iu)
            for (size_t iv = 0; iv < members.size(); ++iv) {
                if (iu == iv) continue;
                int u = members[iu], v = members[iv];
                int duv = g.d(u, v);
                for (int w : g.adj[v])
                    if (!in[w] && g.d(u, w) <= duv) {
                        in[w] = 1;
                        members.push_back(w);
                        changed = true;
                    }
            }
    }
    res.subgraph_size = static_cast<long long>(members.size());

    std::vector<int> local(g.n, -1);
    for (size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<int>(i);
    FiniteGraph sub;
    sub.n = static_cast<int>(members.size());
    sub.adj.assign(sub.n, {});
    sub.labels.assign(sub.n, "");
    for (size_t i = 0; i < members.size(); ++i) {
        sub.labels[i] = g.labels[members[i]];
        for (int w : g.adj[members[i]])
            if (local[w] >= 0) sub.adj[i].push_back(local[w]);
        std::sort(sub.adj[i].begin(), sub.adj[i].end());
    }
    try {
        compute_distances(sub);
    } catch (const std::invalid_argument&) {
        res.note = "closed subgraph is not connected";
        return res;
    }

    MeasuredParameters mp = measure_parameters(sub);
    std::ostringstream os;
    os << "closure of the pair (" << res.base_x << ", " << res.base_y << ") has "
       << res.subgraph_size << " vertices";
    if (!mp.distance_regular) {
        os << "; not distance-regular: " << mp.failure;
        res.note = os.str();
        return res;
    }
    res.subgraph_array = mp.array;
    IntersectionArray expected = IntersectionArray::from_bc(
        {(t_param + 1) * s_param, t_param * s_param}, {1, t_param + 1});
    res.is_gq = sub.diameter() == 2 && mp.k112_free && *mp.array == expected;
    os << "; measured array {" << mp.array->str() << "}";
    if (!res.is_gq) os << " does not match the (s, t) = (" << s_param << ", " << t_param
                       << ") generalized quadrangle";
    res.note = os.str();
    return res;
}

// entrywise Schur-square identity for the last idempotent: with entries
// u_{d(x,y)}(theta_D), squaring must land on
//   1/m_D + ((m_D - 1)/m_D) u_{d(x,y)}(theta_h)
// for the single associate index h; also re-checks the eigenvector relation
// for the distance weights on the graph itself from a base vertex
inline bool verify_light_tail_on_graph(const FiniteGraph& g, const Spectrum& s,
                                       std::string* note = nullptr) {
    if (!g.has_distances())
        throw std::invalid_argument("verify_light_tail_on_graph: compute_distances first");
    int D = s.array().D();
    if (g.diameter() != D) {
        if (note) *note = "graph diameter does not match the array";
        return false;
    }
    LightTailScan scan = light_tail_scan(s);
    const LightTailEntry& e = scan.at(D);
    if (!e.light) {
        if (note) {
            if (e.degenerate_rank_one)
                *note = "E_D has rank one (u_j = +-1 throughout): its Schur square "
                        "collapses onto the identity idempotent";
            else {
                std::ostringstream os;
                os << "E_D Schur-squares onto " << e.nonzero_count
                   << " nontrivial idempotents, not one";
                *note = os.str();
            }
        }
        return false;
    }
    for (int j = 0; j <= D; ++j) {
        Scalar lhs = s.u(D, j) * s.u(D, j);
        Scalar rhs = Scalar(e.weight_identity) + Scalar(e.weight_associate) * s.u(e.associate, j);
        if (!(lhs == rhs)) {
            if (note) {
                std::ostringstream os;
                os << "distance class " << j << ": u_j(theta_D)^2 != 1/m + (m-1)/m u_j";
                *note = os.str();
            }
            return false;
        }
    }
    // the distance weights from any base vertex form a theta_D eigenvector
    const int z = 0;
    for (int x = 0; x < g.n; ++x) {
        Scalar acc(Rat(0));
        for (int y : g.adj[x]) acc = acc + s.u(D, g.d(z, y));
        if (!(acc == s.theta(D) * s.u(D, g.d(z, x)))) {
            if (note) {
                std::ostringstream os;
                os << "eigenvector relation fails at vertex " << x;
                *note = os.str();
            }
            return false;
        }
    }
    return true;
}

}  // namespace drg
