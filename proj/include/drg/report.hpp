#pragma once
// Structured JSON reports for the CLI.  Every numeric field is an exact
// serialization: rationals as "p" or "p/q" strings, algebraic irrationals as
// {min_poly, interval, approx} objects where only "approx" is lossy (and
// marked so by its name).  The document layout is frozen by
// docs/report.schema.json; tests validate every emitted report against it.

#include <cstdio>
#include <string>
#include <vector>

#include <drg/bounds.hpp>
#include <drg/geometric.hpp>
#include <drg/graph_checks.hpp>
#include <drg/krein.hpp>
#include <drg/search.hpp>
#include <drg/spectrum.hpp>
#include <drg/version.hpp>
#include <json.hpp>

namespace drg {

using Json = nlohmann::ordered_json;

inline std::string rat_str(const Rat& r) {
    if (is_integer(r)) return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

inline std::string approx_str(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

inline Json scalar_json(const Scalar& x) {
    if (x.is_rational()) return rat_str(x.rat());
    const AlgebraicReal& a = x.alg();
    Json coeffs = Json::array();
    for (int i = 0; i <= a.min_poly().degree(); ++i) coeffs.push_back(a.min_poly().coeff(i).str());
    Json j;
    j["min_poly"] = std::move(coeffs);
    j["interval"] = Json::array({rat_str(a.lo()), rat_str(a.hi())});
    j["approx"] = approx_str(a.approx());
    return j;
}

inline Json tool_section() {
    Json j;
    j["name"] = TOOL_NAME;
    j["version"] = TOOL_VERSION;
    j["exact_arithmetic"] = true;
    return j;
}

inline Json input_section(const IntersectionArray& arr) {
    Json j;
    j["array"] = arr.str();
    j["diameter"] = arr.D();
    j["valency"] = arr.k();
    j["vertices"] = arr.n().str();
    Json b = Json::array(), c = Json::array(), a = Json::array(), ki = Json::array();
    for (int i = 0; i < arr.D(); ++i) b.push_back(arr.b(i));
    for (int i = 1; i <= arr.D(); ++i) c.push_back(arr.c(i));
    for (int i = 0; i <= arr.D(); ++i) a.push_back(arr.a(i));
    for (int i = 0; i <= arr.D(); ++i) ki.push_back(arr.k_i(i).str());
    j["b"] = std::move(b);
    j["c"] = std::move(c);
    j["a"] = std::move(a);
    j["distance_valencies"] = std::move(ki);
    bool bip = true;
    for (int i = 0; i <= arr.D(); ++i) bip = bip && arr.a(i) == 0;
    j["bipartite"] = bip;
    return j;
}

inline Json spectral_section(const Spectrum& s) {
    int d = s.array().D();
    Json eig = Json::array();
    for (int i = 0; i <= d; ++i) {
        Json e;
        e["theta"] = scalar_json(s.theta(i));
        e["multiplicity"] = s.multiplicity(i).str();
        Json u = Json::array();
        for (int j = 0; j <= d; ++j) u.push_back(scalar_json(s.u(i, j)));
        e["standard_sequence"] = std::move(u);
        eig.push_back(std::move(e));
    }
    Json chi = Json::array();
    for (int i = 0; i <= s.char_poly().degree(); ++i) chi.push_back(s.char_poly().coeff(i).str());
    Json j;
    j["eigenvalues"] = std::move(eig);
    j["char_poly"] = std::move(chi);
    return j;
}

inline Json light_tail_section(const LightTailScan& scan) {
    Json entries = Json::array();
    for (const LightTailEntry& e : scan.entries) {
        Json t;
        t["index"] = e.index;
        t["light"] = e.light;
        t["degenerate_rank_one"] = e.degenerate_rank_one;
        t["nonzero_count"] = e.nonzero_count;
        if (e.light) {
            t["associate"] = e.associate;
            t["a_coeff"] = scalar_json(e.a_coeff);
            t["b_coeff"] = scalar_json(e.b_coeff);
            t["weight_identity"] = rat_str(e.weight_identity);
            t["weight_associate"] = rat_str(e.weight_associate);
        }
        entries.push_back(std::move(t));
    }
    Json j;
    j["any_light"] = scan.any_light;
    j["light_indices"] = scan.light_indices;
    j["entries"] = std::move(entries);
    return j;
}

// The sparse tensor restricted to diagonal rows (i, i, *) unless `full`,
// which light-tail analysis reads; `full` lists every nonzero entry.
inline Json krein_section(const KreinTensor& kt, const LightTailScan& scan, bool full) {
    int d = kt.count() - 1;
    Json sparse = Json::array();
    for (int i = 0; i <= d; ++i)
        for (int j = full ? 0 : i; j <= (full ? d : i); ++j)
            for (int h = 0; h <= d; ++h) {
                if (kt.is_zero(i, j, h)) continue;
                Json e;
                e["i"] = i;
                e["j"] = j;
                e["h"] = h;
                e["value"] = scalar_json(kt.q(i, j, h));
                sparse.push_back(std::move(e));
            }
    Json j;
    j["arithmetic"] = kt.arith() == KreinArith::rational          ? "rational"
                      : kt.arith() == KreinArith::quadratic_tower ? "quadratic_tower"
                                                                  : "generic";
    j["nonnegative"] = kt.nonnegative();
    j["absolute_bounds_hold"] = kt.absolute_bounds_hold();
    j["diagonal_only"] = !full;
    j["sparse"] = std::move(sparse);
    j["light_tail"] = light_tail_section(scan);
    return j;
}

inline Json bound_json(const BoundReport& r) {
    Json j;
    switch (r.bound_name) {
        case BoundName::MultiplicityLowerBound: j["bound"] = "multiplicity_lower"; break;
        case BoundName::Theta1LowerBound: j["bound"] = "theta1_lower"; break;
        default: j["bound"] = "theta1_upper"; break;
    }
    if (r.eigen_index >= 0) j["eigen_index"] = r.eigen_index;
    j["lhs"] = scalar_json(r.lhs);
    j["rhs"] = scalar_json(r.rhs);
    j["relation"] = relation_str(r.relation);
    j["equality_semantics"] = r.equality_semantics;
    if (r.assumed_gq_containment) j["assumed_gq_containment"] = true;
    return j;
}

inline Json bounds_section(const Spectrum& s, bool assume_containment) {
    const IntersectionArray& arr = s.array();
    Json mult = Json::array();
    Json j;
    if (arr.k() >= 3 && arr.D() >= 2) {
        for (int i = 1; i <= arr.D(); ++i) {
            try {
                mult.push_back(bound_json(multiplicity_bound(s, i)));
            } catch (const HypothesisError&) {
                // theta_i = -k (bipartite tail) sits outside the bound's domain
            }
        }
        j["multiplicity"] = std::move(mult);
        if (arr.a(1) >= 1 && arr.c(2) >= 2) {
            try {
                j["theta1_lower"] = bound_json(theta1_lower_bound(s));
            } catch (const HypothesisError& e) {
                j["theta1_note"] = e.what();
            }
            try {
                j["theta1_upper"] = bound_json(theta1_upper_bound(s, assume_containment));
            } catch (const HypothesisError& e) {
                if (!j.contains("theta1_note")) j["theta1_note"] = e.what();
            }
            try {
                SufficiencyResult suff = light_tail_sufficiency(s, assume_containment);
                Json sj;
                sj["holds"] = suff.verdict;
                sj["assumed_gq_containment"] = assume_containment;
                sj["lower"] = bound_json(suff.lower);
                sj["upper"] = bound_json(suff.upper);
                j["light_tail_sufficiency"] = std::move(sj);
            } catch (const HypothesisError& e) {
                j["light_tail_sufficiency_skipped"] = e.what();
            }
        } else {
            j["note"] = "theta1 bounds need a_1 >= 1 and c_2 >= 2";
        }
    } else {
        j["note"] = "bounds need k >= 3 and D >= 2";
    }
    std::string profile_note;
    j["schur_square_profile_identity"] = profile_identity(s, &profile_note);
    if (!profile_note.empty()) j["schur_square_profile_note"] = profile_note;
    return j;
}

inline Json geometric_section(const Spectrum& s) {
    GeometricProfile gp = gamma_sequence(s);
    BoundednessReport br = boundedness_conditions(s.array());
    Json j;
    j["clique_bound"] = scalar_json(gp.clique_bound);
    j["geometric_premise"] = gp.geometric_premise;
    if (gp.geometric_premise && !gp.degenerate) {
        Json g = Json::array();
        for (const Rat& r : gp.gamma) g.push_back(rat_str(r));
        j["gamma"] = std::move(g);
        j["gamma_integral"] = gp.gamma_integral;
    }
    j["a_relation_holds_up_to"] = gp.a_relation_holds_up_to;
    j["bounded_up_to"] = br.bounded_up_to;
    j["boundedness_requires_k112_free"] = br.requires_k112_free;
    if (!gp.note.empty()) j["note"] = gp.note;
    return j;
}

inline Json verdict_json(const char* pipeline, const ClassificationVerdict& v) {
    Json j;
    j["pipeline"] = pipeline;
    j["verdict"] = verdict_str(v.kind);
    if (v.kind == VerdictKind::IsHermitianDualPolar) j["order"] = v.r;
    if (!v.failed_step.empty()) j["failed_step"] = v.failed_step;
    if (!v.reason.empty()) j["reason"] = v.reason;
    if (v.counterexample_candidate) j["counterexample_candidate"] = true;
    if (v.conditional_on_external_classification) j["conditional_on_external_classification"] = true;
    if (v.gamma_step_index >= 0) j["gamma_step_index"] = v.gamma_step_index;
    Json trace = Json::array();
    for (const TraceStep& t : v.trace) {
        Json e;
        e["step"] = t.step;
        e["values"] = t.values;
        trace.push_back(std::move(e));
    }
    j["trace"] = std::move(trace);
    return j;
}

inline Json classification_section(const Spectrum& s, bool assume_2_bounded) {
    Json j = Json::array();
    j.push_back(verdict_json("dual_polar", classify_dual_polar(s, {.two_bounded = assume_2_bounded})));
    j.push_back(verdict_json("a1_collapse", classify_a1_one(s)));
    if (assume_2_bounded)
        j.push_back(verdict_json("bounded_geometric", classify_bounded_geometric(s, 2)));
    return j;
}

struct ReportOptions {
    bool assume_2_bounded = false;
    bool krein_full = false;
};

// The full analyze document; construct and search reuse it so that a
// construct -> analyze round trip is byte-identical on the shared sections.
inline Json analyze_report(const Spectrum& s, const ReportOptions& opt) {
    KreinTensor kt(s);
    LightTailScan scan = light_tail_scan(s, kt);
    verify_bound_scan_agreement(s, scan);
    Json j;
    j["tool"] = tool_section();
    j["input"] = input_section(s.array());
    j["spectral"] = spectral_section(s);
    j["krein"] = krein_section(kt, scan, opt.krein_full);
    j["bounds"] = bounds_section(s, opt.assume_2_bounded);
    j["geometric"] = geometric_section(s);
    j["classification"] = classification_section(s, opt.assume_2_bounded);
    return j;
}

inline Json measured_section(const MeasuredParameters& mp) {
    Json j;
    j["distance_regular"] = mp.distance_regular;
    if (!mp.distance_regular) {
        j["failure"] = mp.failure;
        return j;
    }
    j["array"] = mp.array->str();
    j["gamma_measured"] = mp.gamma;
    j["gamma_constant"] = mp.gamma_constant;
    Json sizes = Json::object();
    for (const auto& [size, count] : mp.maximal_clique_sizes)
        sizes[std::to_string(size)] = count;
    j["maximal_clique_sizes"] = std::move(sizes);
    j["maximal_clique_count"] = mp.maximal_clique_count;
    j["delsarte_complete"] = mp.delsarte_complete;
    j["k112_free"] = mp.k112_free;
    j["locally_disjoint_cliques"] = mp.locally_disjoint_cliques;
    return j;
}

// Deep graph-side checks for `construct --verify full`: a Delsarte clique as
// a completely regular code, the strongly closed quadrangle of a distance-2
// pair, and the Schur-square light-tail identity evaluated on the graph.
inline Json verification_section(const FiniteGraph& g, const MeasuredParameters& mp,
                                 const Spectrum& s) {
    Json j;
    std::vector<std::vector<int>> cliques = maximal_cliques(g);
    CompletelyRegularReport cr = verify_delsarte_completely_regular(g, s, cliques.front());
    Json crj;
    crj["holds"] = cr.holds();
    crj["attains_bound"] = cr.attains_bound;
    crj["equitable"] = cr.equitable;
    crj["covering_radius"] = cr.covering_radius;
    crj["radius_matches"] = cr.radius_matches;
    if (!cr.note.empty()) crj["note"] = cr.note;
    j["completely_regular_clique"] = std::move(crj);

    const IntersectionArray& arr = *mp.array;
    if (arr.D() >= 2 && arr.a(1) >= 1 && arr.c(2) >= 2) {
        GqSearchResult gq = find_induced_gq(g, arr.a(1) + 1, arr.c(2) - 1);
        Json gj;
        gj["is_gq"] = gq.is_gq;
        gj["base"] = Json::array({gq.base_x, gq.base_y});
        gj["size"] = gq.subgraph_size;
        if (gq.subgraph_array) gj["array"] = gq.subgraph_array->str();
        if (!gq.note.empty()) gj["note"] = gq.note;
        j["induced_quadrangle"] = std::move(gj);
    }

    std::string note;
    bool lt = verify_light_tail_on_graph(g, s, &note);
    Json ltj;
    ltj["holds"] = lt;
    if (!note.empty()) ltj["note"] = note;
    j["light_tail_on_graph"] = std::move(ltj);
    return j;
}

inline Json graph_bundle(const FiniteGraph& g) {
    Json edges = Json::array();
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adj[u])
            if (u < v) edges.push_back(Json::array({u, v}));
    Json j;
    j["n"] = g.n;
    j["edges"] = std::move(edges);
    j["labels"] = g.labels;
    return j;
}

// The construct document: what was built, what was measured, the analysis of
// the measured array, and (optionally) the deep graph-side verification.
inline Json construct_report(const std::string& family, const std::vector<long long>& params,
                             const FiniteGraph& g, const MeasuredParameters& mp,
                             const ReportOptions& opt, bool verify_full) {
    Json doc;
    doc["tool"] = tool_section();
    Json cons;
    cons["family"] = family;
    cons["parameters"] = params;
    cons["vertices"] = g.n;
    cons["edges"] = g.edge_count();
    doc["construction"] = std::move(cons);
    doc["measured"] = measured_section(mp);
    if (mp.distance_regular) {
        Spectrum s(*mp.array);
        doc["analysis"] = analyze_report(s, opt);
        if (verify_full) doc["verification"] = verification_section(g, mp, s);
    }
    return doc;
}

inline Json search_report(const SearchOutcome& res, const ReportOptions& opt) {
    Json hits = Json::array();
    for (const IntersectionArray& h : res.hits) {
        Spectrum s(h);
        hits.push_back(analyze_report(s, opt));
    }
    Json j;
    j["tool"] = tool_section();
    j["hits"] = std::move(hits);
    Json c;
    c["arrays_checked"] = res.arrays_checked;
    c["arrays_feasible"] = res.arrays_feasible;
    c["hits"] = static_cast<long long>(res.hits.size());
    j["counters"] = std::move(c);
    return j;
}

}  // namespace drg
