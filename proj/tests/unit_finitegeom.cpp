// Explicit finite-geometry cross-validation: Hermitian dual polar graphs and
// Hamming graphs are built from scratch, measured exhaustively, and compared
// against the array-level predictions (intersection arrays, gamma profiles,
// clique structure, completely regular codes, induced quadrangles, and the
// Schur-square light-tail identity).

#include <catch2/catch_amalgamated.hpp>

#include <drg/finite_graph.hpp>
#include <drg/geometric.hpp>
#include <drg/gf.hpp>
#include <drg/graph_checks.hpp>
#include <drg/hermitian.hpp>

#include <algorithm>
#include <string>
#include <vector>

using namespace drg;

namespace {

const FiniteGraph& hermitian_graph(int D, long long r) {
    static FiniteGraph g22 = [] {
        FiniteGraph g = build_hermitian_dual_polar(2, 2);
        compute_distances(g);
        return g;
    }();
    static FiniteGraph g32 = [] {
        FiniteGraph g = build_hermitian_dual_polar(3, 2);
        compute_distances(g);
        return g;
    }();
    static FiniteGraph g23 = [] {
        FiniteGraph g = build_hermitian_dual_polar(2, 3);
        compute_distances(g);
        return g;
    }();
    if (D == 2 && r == 2) return g22;
    if (D == 3 && r == 2) return g32;
    return g23;
}

const FiniteGraph& hamming_graph(long long q) {
    static FiniteGraph h33 = [] {
        FiniteGraph g = build_hamming(3, 3);
        compute_distances(g);
        return g;
    }();
    static FiniteGraph h32 = [] {
        FiniteGraph g = build_hamming(3, 2);
        compute_distances(g);
        return g;
    }();
    if (q == 3) return h33;
    return h32;
}

}  // namespace

TEST_CASE("field tables verify their axioms and reject unsupported sizes") {
    GFSquare f4(2);
    CHECK(f4.size() == 4);
    CHECK(f4.mul(2, 2) == 3);   // w^2 = w + 1
    CHECK(f4.conj(2) == 3);     // conjugation is x -> x^2
    CHECK(f4.inv(2) == 3);
    CHECK(f4.in_ground_field(1));
    CHECK_FALSE(f4.in_ground_field(2));

    GFSquare f9(3);
    CHECK(f9.size() == 9);
    CHECK(f9.mul(3, 3) == 2);   // w^2 = -1
    CHECK(f9.conj(3) == 6);     // w^3 = -w
    CHECK(f9.mul(3, 6) == 1);   // w * (-w) = 1
    CHECK_THROWS_AS(GFSquare(5), std::invalid_argument);
    CHECK_THROWS_AS(GFSquare(4), std::invalid_argument);
}

TEST_CASE("hamming graphs measure to their textbook arrays") {
    FiniteGraph h23 = build_hamming(2, 3);
    compute_distances(h23);
    CHECK(h23.n == 9);
    MeasuredParameters mp = measure_parameters(h23);
    REQUIRE(mp.distance_regular);
    CHECK(mp.array->str() == "{4,2;1,2}");
    CHECK(mp.maximal_clique_sizes.at(3) == 6);
    CHECK(mp.gamma == std::vector<long long>{1, 1});
    CHECK(mp.gamma_constant);
    CHECK(mp.k112_free);
    CHECK(mp.locally_disjoint_cliques);

    MeasuredParameters cube = measure_parameters(hamming_graph(2));
    REQUIRE(cube.distance_regular);
    CHECK(cube.array->str() == "{3,2,1;1,2,3}");
    CHECK(cube.delsarte_complete);  // a_1 = 0: maximal cliques are the edges
    CHECK(cube.maximal_clique_sizes.at(2) == 12);
    CHECK(cube.gamma == std::vector<long long>{1, 1, 1});

    FiniteGraph k5 = build_hamming(1, 5);
    compute_distances(k5);
    MeasuredParameters mk = measure_parameters(k5);
    REQUIRE(mk.distance_regular);
    CHECK(mk.array->str() == "{4;1}");

    CHECK_THROWS_AS(build_hamming(6, 10), std::invalid_argument);
    CHECK_THROWS_AS(build_hamming(17, 2), std::invalid_argument);
    CHECK_THROWS_AS(build_hamming(0, 3), std::invalid_argument);
}

TEST_CASE("non-regular graphs fail measurement with a named pair") {
    // delete one vertex from the 3x3 rook graph
    FiniteGraph full = build_hamming(2, 3);
    FiniteGraph g;
    g.n = 8;
    g.adj.assign(8, {});
    g.labels.assign(8, "");
    for (int u = 0; u < 8; ++u)
        for (int v : full.adj[u])
            if (v < 8) g.adj[u].push_back(v);
    compute_distances(g);
    MeasuredParameters mp = measure_parameters(g);
    CHECK_FALSE(mp.distance_regular);
    CHECK(mp.failure.find("vertices") != std::string::npos);
}

TEST_CASE("hermitian dual polar graphs match their generator arrays exactly") {
    struct Case {
        int D;
        long long r;
        long long n;
        long long cliques;
    };
    // clique counts are n k / ((a_1 + 2)(a_1 + 1))
    for (Case tc : {Case{2, 2, 27, 45}, Case{3, 2, 891, 6237}, Case{2, 3, 112, 280}}) {
        const FiniteGraph& g = hermitian_graph(tc.D, tc.r);
        IntersectionArray gen = hermitian_dual_polar_array(tc.D, tc.r);
        CHECK(g.n == tc.n);
        CHECK(gen.n() == tc.n);  // enumerated count agrees with the recurrence

        MeasuredParameters mp = measure_parameters(g);
        REQUIRE(mp.distance_regular);
        CHECK(*mp.array == gen);
        CHECK(mp.maximal_clique_count == tc.cliques);
        CHECK(mp.delsarte_complete);
        CHECK(mp.k112_free);
        CHECK(mp.locally_disjoint_cliques);
        CHECK(mp.gamma_constant);

        Spectrum s(gen);
        GeometricProfile prof = gamma_sequence(s);
        REQUIRE(static_cast<int>(mp.gamma.size()) == gen.D());
        for (int i = 0; i < gen.D(); ++i) CHECK(Rat(mp.gamma[i]) == prof.gamma[i]);
    }
    CHECK(hermitian_graph(2, 2).edge_count() == 135);
    CHECK(hermitian_graph(3, 2).degree(0) == 42);

    CHECK_THROWS_AS(build_hermitian_dual_polar(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(build_hermitian_dual_polar(4, 2), std::invalid_argument);
    CHECK_THROWS_AS(build_hermitian_dual_polar(2, 5), std::invalid_argument);
    CHECK_THROWS_AS(build_hermitian_dual_polar(1, 2), std::invalid_argument);
}

TEST_CASE("delsarte cliques are completely regular codes of radius D - 1") {
    for (auto [D, r] : std::vector<std::pair<int, long long>>{{2, 2}, {3, 2}, {2, 3}}) {
        const FiniteGraph& g = hermitian_graph(D, r);
        Spectrum s(hermitian_dual_polar_array(D, r));
        std::vector<std::vector<int>> cliques = maximal_cliques(g);
        CompletelyRegularReport rep = verify_delsarte_completely_regular(g, s, cliques.front());
        CHECK(rep.holds());
        CHECK(rep.covering_radius == D - 1);
    }

    // an edge of the D = 2, r = 2 graph is a clique below the bound
    const FiniteGraph& g = hermitian_graph(2, 2);
    Spectrum s(hermitian_dual_polar_array(2, 2));
    std::vector<int> edge{0, g.adj[0][0]};
    CompletelyRegularReport rep = verify_delsarte_completely_regular(g, s, edge);
    CHECK_FALSE(rep.attains_bound);
    CHECK(rep.note.find("does not attain") != std::string::npos);

    // a non-clique is rejected with the offending pair
    int far = -1;
    for (int v = 0; v < g.n && far < 0; ++v)
        if (g.d(0, v) == 2) far = v;
    CompletelyRegularReport bad = verify_delsarte_completely_regular(g, s, {0, far});
    CHECK_FALSE(bad.attains_bound);
    CHECK(bad.note.find("not adjacent") != std::string::npos);

    // a Hamming line is also completely regular with radius D - 1
    const FiniteGraph& h33 = hamming_graph(3);
    Spectrum hs(measure_parameters(h33).array.value());
    std::vector<std::vector<int>> hcliques = maximal_cliques(h33);
    CompletelyRegularReport hrep = verify_delsarte_completely_regular(h33, hs, hcliques.front());
    CHECK(hrep.holds());
    CHECK(hrep.covering_radius == 2);
}

TEST_CASE("strongly closed subgraphs of distance-2 pairs are quadrangles") {
    GqSearchResult big = find_induced_gq(hermitian_graph(3, 2), 2, 4);
    CHECK(big.is_gq);
    CHECK(big.subgraph_size == 27);
    REQUIRE(big.subgraph_array.has_value());
    CHECK(big.subgraph_array->str() == "{10,8;1,5}");

    // at D = 2 the closure is the whole graph
    GqSearchResult whole = find_induced_gq(hermitian_graph(2, 2), 2, 4);
    CHECK(whole.is_gq);
    CHECK(whole.subgraph_size == 27);

    // in H(3,3) the closure of a distance-2 pair is a 3x3 grid: the trivial
    // quadrangle with t = 1, reported with its measured array
    GqSearchResult grid = find_induced_gq(hamming_graph(3), 2, 1);
    CHECK(grid.subgraph_size == 9);
    REQUIRE(grid.subgraph_array.has_value());
    CHECK(grid.subgraph_array->str() == "{4,2;1,2}");
    CHECK(grid.is_gq);
}

TEST_CASE("the schur-square identity certifies light tails on the graphs") {
    for (auto [D, r] : std::vector<std::pair<int, long long>>{{2, 2}, {3, 2}, {2, 3}}) {
        Spectrum s(hermitian_dual_polar_array(D, r));
        std::string note;
        CHECK(verify_light_tail_on_graph(hermitian_graph(D, r), s, &note));
        CHECK(note.empty());
    }

    std::string note;
    Spectrum cube(measure_parameters(hamming_graph(2)).array.value());
    CHECK_FALSE(verify_light_tail_on_graph(hamming_graph(2), cube, &note));
    CHECK(note.find("rank one") != std::string::npos);

    Spectrum h33(measure_parameters(hamming_graph(3)).array.value());
    CHECK_FALSE(verify_light_tail_on_graph(hamming_graph(3), h33, &note));
    CHECK(note.find("3 nontrivial idempotents") != std::string::npos);
}

TEST_CASE("the D = 3 graph satisfies every 2-boundedness condition") {
    const FiniteGraph& g = hermitian_graph(3, 2);
    MeasuredParameters mp = measure_parameters(g);
    REQUIRE(mp.distance_regular);
    CHECK(mp.k112_free);
    CHECK(mp.array->a(1) == 1);
    BoundednessReport br = boundedness_conditions(*mp.array);
    CHECK(br.bounded_up_to == 2);
    CHECK(br.requires_k112_free);

    // each neighborhood splits into exactly k / (a_1 + 1) cliques
    long long per_vertex = mp.maximal_clique_count * (mp.array->a(1) + 2) / g.n;
    CHECK(per_vertex == mp.array->k() / (mp.array->a(1) + 1));
}
