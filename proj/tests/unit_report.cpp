// The JSON report layer: exact scalar encodings, section assembly, the
// published schema, and the construct -> analyze round-trip identity.

#include <catch2/catch_amalgamated.hpp>

#include <drg/finite_graph.hpp>
#include <drg/hermitian.hpp>
#include <drg/report.hpp>

#include <fstream>
#include <string>

#include "support/schema_check.hpp"

using namespace drg;

namespace {

nlohmann::json load_schema() {
    std::ifstream in(REPORT_SCHEMA_PATH);
    REQUIRE(in.good());
    return nlohmann::json::parse(in);
}

void check_valid(const Json& doc) {
    static nlohmann::json schema = load_schema();
    std::string why;
    bool ok = schema_check::validate_report(schema, nlohmann::json::parse(doc.dump()), &why);
    INFO(why);
    CHECK(ok);
}

Json analyze_text(const std::string& text, ReportOptions opt = {}) {
    Spectrum s(IntersectionArray::parse(text));
    return analyze_report(s, opt);
}

}  // namespace

TEST_CASE("rational scalars serialize as exact fraction strings") {
    CHECK(rat_str(Rat(5)) == "5");
    CHECK(rat_str(Rat(-21, 22)) == "-21/22");
    CHECK(scalar_json(Scalar(Rat(1, 3))) == Json("1/3"));

    // an irrational eigenvalue carries min_poly + interval + approx
    Spectrum pent(IntersectionArray::parse("2,1;1,1"));
    Json t1 = scalar_json(pent.theta(1));  // (-1 + sqrt(5))/2: root of t^2 + t - 1
    REQUIRE(t1.is_object());
    CHECK(t1["min_poly"] == Json::array({"-1", "1", "1"}));
    REQUIRE(t1["interval"].size() == 2);
    CHECK(t1["approx"].get<std::string>().substr(0, 4) == "0.61");
}

TEST_CASE("analyze documents validate against the published schema") {
    for (const char* text : {"10,8;1,5", "42,40,32;1,5,21", "30,27;1,10", "3,2,1;1,2,3",
                             "2,1;1,1", "5,2,1;1,2,5", "14,12;1,2", "6,4,2;1,2,3"}) {
        Json doc = analyze_text(text);
        check_valid(doc);
        CHECK(doc["tool"]["exact_arithmetic"] == Json(true));
        CHECK(doc["input"]["array"] == Json(IntersectionArray::parse(text).str()));
    }
    check_valid(analyze_text("10,8;1,5", {.assume_2_bounded = true, .krein_full = true}));
    check_valid(analyze_text("42,40,32;1,5,21", {.assume_2_bounded = true}));
}

TEST_CASE("analyze content matches the exact pipeline results") {
    Json doc = analyze_text("42,40,32;1,5,21", {.assume_2_bounded = true});
    const Json& eig = doc["spectral"]["eigenvalues"];
    REQUIRE(eig.size() == 4);
    CHECK(eig[0]["theta"] == Json("42"));
    CHECK(eig[1]["theta"] == Json("9"));
    CHECK(eig[2]["theta"] == Json("-3"));
    CHECK(eig[3]["theta"] == Json("-21"));
    CHECK(eig[0]["multiplicity"] == Json("1"));
    CHECK(eig[1]["multiplicity"] == Json("252"));
    CHECK(eig[2]["multiplicity"] == Json("616"));
    CHECK(eig[3]["multiplicity"] == Json("22"));

    CHECK(doc["krein"]["light_tail"]["any_light"] == Json(true));
    CHECK(doc["krein"]["light_tail"]["light_indices"] == Json::array({3}));
    CHECK(doc["krein"]["diagonal_only"] == Json(true));
    CHECK(doc["bounds"]["light_tail_sufficiency"]["holds"] == Json(true));
    CHECK(doc["geometric"]["gamma"] == Json::array({"1", "1", "1"}));

    bool found = false;
    for (const Json& v : doc["classification"])
        if (v["pipeline"] == Json("dual_polar")) {
            found = true;
            CHECK(v["verdict"] == Json("IsHermitianDualPolar"));
            CHECK(v["order"] == Json(2));
            CHECK_FALSE(v["trace"].empty());
        }
    CHECK(found);

    // without the assumption the sufficiency block reports why it was skipped
    Json bare = analyze_text("42,40,32;1,5,21");
    CHECK_FALSE(bare["bounds"].contains("light_tail_sufficiency"));
    CHECK(bare["bounds"].contains("light_tail_sufficiency_skipped"));
}

TEST_CASE("krein full mode lists off-diagonal entries too") {
    Json diag = analyze_text("10,8;1,5");
    Json full = analyze_text("10,8;1,5", {.krein_full = true});
    CHECK(diag["krein"]["sparse"].size() < full["krein"]["sparse"].size());
    for (const Json& e : diag["krein"]["sparse"]) CHECK(e["i"] == e["j"]);
    check_valid(full);
}

TEST_CASE("search documents embed full reports for every hit") {
    SearchOptions opt;
    opt.max_k = 60;
    opt.max_D = 4;
    opt.a1 = 1;
    opt.hypothesis = HypothesisKind::A1Collapse;
    SearchOutcome out = search_arrays(opt);
    Json doc = search_report(out, {});
    check_valid(doc);
    REQUIRE(doc["hits"].size() == 2);
    CHECK(doc["hits"][0]["input"]["array"] == Json("{10,8;1,5}"));
    CHECK(doc["hits"][1]["input"]["array"] == Json("{42,40,32;1,5,21}"));
    CHECK(doc["counters"]["hits"] == Json(2));
    CHECK(doc["counters"]["arrays_checked"].get<long long>() >= 2);
}

TEST_CASE("construct documents validate and round-trip the analysis sections") {
    FiniteGraph g = build_hermitian_dual_polar(2, 2);
    compute_distances(g);
    MeasuredParameters mp = measure_parameters(g);
    Json doc = construct_report("hermitian", {2, 2}, g, mp, {}, true);
    check_valid(doc);
    CHECK(doc["construction"]["vertices"] == Json(27));
    CHECK(doc["construction"]["edges"] == Json(135));
    CHECK(doc["measured"]["array"] == Json("{10,8;1,5}"));
    CHECK(doc["verification"]["completely_regular_clique"]["holds"] == Json(true));
    CHECK(doc["verification"]["induced_quadrangle"]["is_gq"] == Json(true));
    CHECK(doc["verification"]["light_tail_on_graph"]["holds"] == Json(true));

    // byte-identical shared sections with a fresh analyze of the measured array
    Json ana = analyze_text("10,8;1,5");
    CHECK(doc["analysis"].dump() == ana.dump());

    // basic mode omits the verification block but still validates
    Json basic = construct_report("hermitian", {2, 2}, g, mp, {}, false);
    check_valid(basic);
    CHECK_FALSE(basic.contains("verification"));

    // the graph bundle export shape
    Json bundle = graph_bundle(g);
    CHECK(bundle["n"] == Json(27));
    CHECK(bundle["edges"].size() == 135);
    CHECK(bundle["labels"].size() == 27);
}

TEST_CASE("construct documents report measurement failures gracefully") {
    // an 8-vertex induced subgraph of the 3x3 rook graph is not regular
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
    Json doc = construct_report("hamming", {2, 3}, g, mp, {}, true);
    check_valid(doc);
    CHECK(doc["measured"]["distance_regular"] == Json(false));
    CHECK_FALSE(doc.contains("analysis"));
}

TEST_CASE("schema checker itself rejects shape violations") {
    nlohmann::json schema = load_schema();
    Json good = analyze_text("10,8;1,5");
    std::string why;

    nlohmann::json broken = nlohmann::json::parse(good.dump());
    broken["spectral"]["eigenvalues"][0]["multiplicity"] = 1;  // number, not string
    CHECK_FALSE(schema_check::validate_report(schema, broken, &why));
    CHECK(why.find("multiplicity") != std::string::npos);

    broken = nlohmann::json::parse(good.dump());
    broken["input"].erase("valency");
    CHECK_FALSE(schema_check::validate_report(schema, broken, &why));

    broken = nlohmann::json::parse(good.dump());
    broken["input"]["surprise"] = 1;
    CHECK_FALSE(schema_check::validate_report(schema, broken, &why));

    broken = nlohmann::json::parse(good.dump());
    broken["classification"][0]["verdict"] = "Maybe";
    CHECK_FALSE(schema_check::validate_report(schema, broken, &why));
}
