// drgtool: exact-arithmetic analysis of distance-regular graph intersection
// arrays.  Subcommands: analyze (full spectral/Krein/bounds/geometric report
// for one array), search (enumerate feasible arrays under caps, optionally
// filtered by a hypothesis predicate), construct (build a graph family
// explicitly and measure it), classify (verdict-focused view of analyze).
//
// Exit codes: 0 success; 2 input error (unparseable or infeasible array,
// caps exceeded, unsupported family); 3 internal consistency failure (two
// independent computations of the same quantity disagreed).

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <drg/finite_graph.hpp>
#include <drg/hermitian.hpp>
#include <drg/report.hpp>

namespace {

using drg::Json;

std::string scal(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    std::string out = "root of [";
    const Json& mp = v.at("min_poly");
    for (size_t i = 0; i < mp.size(); ++i) {
        if (i) out += ",";
        out += mp[i].get<std::string>();
    }
    out += "] in (" + v.at("interval")[0].get<std::string>() + ", " +
           v.at("interval")[1].get<std::string>() + ") ~ " + v.at("approx").get<std::string>();
    return out;
}

std::string yn(bool b) { return b ? "yes" : "no"; }

void print_bound_line(std::ostream& os, const Json& b) {
    os << "  " << b.at("bound").get<std::string>();
    if (b.contains("eigen_index")) os << " (i=" << b.at("eigen_index").get<int>() << ")";
    os << ": " << scal(b.at("lhs")) << " " << b.at("relation").get<std::string>() << " "
       << scal(b.at("rhs")) << "\n";
}

void print_classification_table(std::ostream& os, const Json& cls) {
    os << "classification:\n";
    for (const Json& v : cls) {
        os << "  " << v.at("pipeline").get<std::string>() << ": "
           << v.at("verdict").get<std::string>();
        if (v.contains("order")) os << " (order " << v.at("order").get<long long>() << ")";
        if (v.contains("reason")) os << " -- " << v.at("reason").get<std::string>();
        if (v.value("counterexample_candidate", false)) os << "  [COUNTEREXAMPLE CANDIDATE]";
        if (v.value("conditional_on_external_classification", false))
            os << "  [conditional on the external small-diameter classification]";
        os << "\n";
        for (const Json& t : v.at("trace"))
            os << "    " << t.at("step").get<std::string>() << ": "
               << t.at("values").get<std::string>() << "\n";
    }
}

void print_analyze_table(std::ostream& os, const Json& doc) {
    const Json& in = doc.at("input");
    os << "array " << in.at("array").get<std::string>() << "  n = "
       << in.at("vertices").get<std::string>() << "  k = " << in.at("valency").get<long long>()
       << "  D = " << in.at("diameter").get<int>()
       << "  bipartite: " << yn(in.at("bipartite").get<bool>()) << "\n";
    os << "eigenvalues:\n";
    for (const Json& e : doc.at("spectral").at("eigenvalues"))
        os << "  theta = " << scal(e.at("theta")) << "  multiplicity "
           << e.at("multiplicity").get<std::string>() << "\n";
    const Json& kr = doc.at("krein");
    os << "krein: nonnegative " << yn(kr.at("nonnegative").get<bool>()) << ", absolute bounds "
       << yn(kr.at("absolute_bounds_hold").get<bool>()) << " ("
       << kr.at("arithmetic").get<std::string>() << " arithmetic)\n";
    const Json& lt = kr.at("light_tail");
    if (lt.at("any_light").get<bool>()) {
        for (const Json& e : lt.at("entries"))
            if (e.at("light").get<bool>())
                os << "light tail at E_" << e.at("index").get<int>() << ", associate E_"
                   << e.at("associate").get<int>() << ", a = " << scal(e.at("a_coeff"))
                   << ", b = " << scal(e.at("b_coeff")) << "\n";
    } else {
        os << "light tail: none\n";
    }
    const Json& bd = doc.at("bounds");
    os << "bounds:\n";
    if (bd.contains("multiplicity"))
        for (const Json& b : bd.at("multiplicity")) print_bound_line(os, b);
    if (bd.contains("theta1_lower")) print_bound_line(os, bd.at("theta1_lower"));
    if (bd.contains("theta1_upper")) print_bound_line(os, bd.at("theta1_upper"));
    if (bd.contains("light_tail_sufficiency"))
        os << "  squeeze to light tail: "
           << yn(bd.at("light_tail_sufficiency").at("holds").get<bool>()) << "\n";
    const Json& geo = doc.at("geometric");
    os << "geometric: clique bound " << scal(geo.at("clique_bound")) << ", premise "
       << yn(geo.at("geometric_premise").get<bool>());
    if (geo.contains("gamma")) {
        os << ", gamma =";
        for (const Json& g : geo.at("gamma")) os << " " << g.get<std::string>();
    }
    os << ", bounded up to " << geo.at("bounded_up_to").get<int>() << "\n";
    print_classification_table(os, doc.at("classification"));
}

void export_graph(const drg::FiniteGraph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open export file: " + path);
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") {
        out << drg::graph_bundle(g).dump(2) << "\n";
        return;
    }
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adj[u])
            if (u < v) out << u << " " << v << "\n";
}

struct Options {
    std::string format = "json";
    bool quiet = false;
    int jobs = 1;
    std::string array_text;
    bool assume_2_bounded = false;
    bool krein_full = false;
    drg::SearchOptions search;
    std::string hypotheses;
    std::string family;
    std::vector<long long> params;
    std::string verify = "basic";
    std::string export_path;
};

int run_analyze(const Options& o, bool verdicts_only) {
    drg::IntersectionArray arr = drg::IntersectionArray::parse(o.array_text);
    drg::Spectrum s(arr);
    Json doc = drg::analyze_report(s, {o.assume_2_bounded, o.krein_full});
    if (o.format == "json")
        std::cout << doc.dump(2) << "\n";
    else if (verdicts_only)
        print_classification_table(std::cout, doc.at("classification"));
    else
        print_analyze_table(std::cout, doc);
    return 0;
}

int run_search(const Options& o) {
    drg::SearchOptions sopt = o.search;
    sopt.jobs = o.jobs;
    if (!o.hypotheses.empty()) sopt.hypothesis = drg::parse_hypothesis(o.hypotheses);
    drg::SearchOutcome out = drg::search_arrays(sopt);
    if (o.format == "json") {
        std::cout << drg::search_report(out, {o.assume_2_bounded, o.krein_full}).dump(2) << "\n";
    } else {
        for (const drg::IntersectionArray& h : out.hits)
            std::cout << h.str() << "  n = " << h.n().str() << "\n";
        if (!o.quiet)
            std::cout << "hits " << out.hits.size() << ", arrays checked " << out.arrays_checked
                      << ", feasible " << out.arrays_feasible << "\n";
    }
    return 0;
}

int run_construct(const Options& o) {
    if (o.params.size() != 2)
        throw std::invalid_argument("construct needs exactly two family parameters");
    int D = static_cast<int>(o.params[0]);
    long long r = o.params[1];
    drg::FiniteGraph g = o.family == "hermitian" ? drg::build_hermitian_dual_polar(D, r)
                                                 : drg::build_hamming(D, r);
    drg::compute_distances(g);
    drg::MeasuredParameters mp = drg::measure_parameters(g);
    Json doc = drg::construct_report(o.family, o.params, g, mp,
                                     {o.assume_2_bounded, o.krein_full}, o.verify == "full");
    if (!o.export_path.empty()) export_graph(g, o.export_path);

    if (o.format == "json") {
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << o.family << " graph on " << g.n << " vertices, " << g.edge_count()
                  << " edges\n";
        if (mp.distance_regular) {
            std::cout << "measured array " << mp.array->str() << ", gamma =";
            for (long long gv : mp.gamma) std::cout << " " << gv;
            std::cout << "\nmaximal cliques " << mp.maximal_clique_count << " (complete: "
                      << yn(mp.delsarte_complete) << "), K_{1,1,2}-free " << yn(mp.k112_free)
                      << "\n";
            if (doc.contains("verification")) {
                const Json& ver = doc.at("verification");
                std::cout << "completely regular clique: "
                          << yn(ver.at("completely_regular_clique").at("holds").get<bool>())
                          << "\n";
                if (ver.contains("induced_quadrangle")) {
                    const Json& gq = ver.at("induced_quadrangle");
                    std::cout << "induced quadrangle: " << yn(gq.at("is_gq").get<bool>()) << " ("
                              << gq.at("size").get<int>() << " vertices)\n";
                }
                std::cout << "light tail on graph: "
                          << yn(ver.at("light_tail_on_graph").at("holds").get<bool>()) << "\n";
            }
        } else {
            std::cout << "not distance-regular: " << mp.failure << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic toolkit for distance-regular graph intersection arrays"};
    app.require_subcommand(1);
    Options o;

    app.add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"json", "table"}))
        ->capture_default_str();
    app.add_flag("--quiet", o.quiet, "suppress summary chatter in table output");
    app.add_option("--jobs", o.jobs, "worker threads for search")->check(CLI::Range(1, 64));

    CLI::App* analyze = app.add_subcommand(
        "analyze", "full exact report (spectral, Krein, bounds, geometric, classification)");
    analyze->add_option("array", o.array_text, "intersection array \"b0,..,bD-1;c1,..,cD\"")
        ->required();
    analyze->add_flag("--assume-2-bounded", o.assume_2_bounded,
                      "grant the 2-bounded hypothesis the array cannot certify by itself");
    analyze->add_flag("--krein-full", o.krein_full,
                      "list every nonzero Krein entry, not just the diagonal rows");
    analyze->fallthrough();

    CLI::App* search = app.add_subcommand(
        "search", "enumerate feasible intersection arrays under caps (max-k <= 200, max-D <= 6)");
    search->add_option("--max-k", o.search.max_k, "valency cap")->capture_default_str();
    search->add_option("--max-D", o.search.max_D, "diameter cap")->capture_default_str();
    search->add_option("--a1", o.search.a1, "pin a_1 to this value");
    search->add_option("--hypotheses", o.hypotheses,
                       "filter: thm12 (a_1 = 1, c_2 >= 5, theta_D = -k/2) or lt "
                       "(theta_D = -k/(a_1+1) with a light tail)");
    search->fallthrough();

    CLI::App* construct = app.add_subcommand(
        "construct", "build a graph family explicitly, measure it, and verify");
    construct->add_option("family", o.family, "hermitian (D r) or hamming (D q)")
        ->required()
        ->check(CLI::IsMember({"hermitian", "hamming"}));
    construct->add_option("params", o.params, "two family parameters")->expected(2);
    construct->add_option("--verify", o.verify, "basic: measure only; full: add code/quadrangle/light-tail checks")
        ->check(CLI::IsMember({"basic", "full"}))
        ->capture_default_str();
    construct->add_option("--export", o.export_path,
                          "write the graph: edge list \"u v\" per line, or a JSON bundle when "
                          "the path ends in .json");
    construct->add_flag("--assume-2-bounded", o.assume_2_bounded);
    construct->add_flag("--krein-full", o.krein_full);
    construct->fallthrough();

    CLI::App* classify = app.add_subcommand(
        "classify", "run the classification pipelines (same JSON as analyze; table shows verdicts only)");
    classify->add_option("array", o.array_text, "intersection array")->required();
    classify->add_flag("--assume-2-bounded", o.assume_2_bounded);
    classify->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*analyze) return run_analyze(o, false);
        if (*classify) return run_analyze(o, true);
        if (*search) return run_search(o);
        return run_construct(o);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
