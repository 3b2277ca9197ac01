#pragma once

// Geometric structure of a distance-regular graph, read off its intersection
// array: the Delsarte clique bound, the gamma sequence (how a Delsarte clique
// meets the distance classes of an outside vertex), array-side certificates
// for the existence of strongly closed subgraphs, the Hermitian dual polar
// array generator, and the classification pipelines that recognize those
// arrays from spectral data.
//
// The classifiers replay a published characterization step by step with exact
// arithmetic.  Every stage either verifies a forced identity on the array or
// excludes the alternatives by an explicit inequality; the trace records each
// stage so a failing array can be audited.  Hypothesis violations are ordinary
// verdicts.  Disagreement between two independent routes to the same fact
// (Krein scan vs. multiplicity-bound equality) throws logic_error, because it
// can only come from an arithmetic bug, never from a merely infeasible array.

#include "bounds.hpp"
#include "krein.hpp"

#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace drg {

inline BigInt pow_big(long long base, int e) {
    BigInt r(1), b(base);
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

inline Rat pow_rat(const Rat& base, int e) {
    if (e < 0) return pow_rat(Rat(1) / base, -e);
    Rat r(1);
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

// Largest size a clique can have: c <= 1 - k/theta_D, exactly.
inline Scalar delsarte_bound(const Spectrum& s) {
    int d = s.array().D();
    return Scalar(1) - Scalar(Rat(s.array().k())) / s.theta(d);
}

// Array-side certificate for strongly closed subgraphs of diameters 1..m:
// with c_{m+1} != 1 they exist precisely when the graph is K_{1,1,2}-free,
// a_1 != 0, a_i = c_i a_1 for i <= m and c_{m-1} < c_m.  Everything except
// K_{1,1,2}-freeness is decidable from the array; that last condition stays a
// graph-side assumption, which the finite-geometry checks can discharge on a
// constructed graph.
struct BoundednessReport {
    int bounded_up_to = 0;           // largest m <= D-1 passing the array-side tests
    bool requires_k112_free = true;  // the graph-side hypothesis this rests on
    std::string diagnostics;
};

inline BoundednessReport boundedness_conditions(const IntersectionArray& arr) {
    BoundednessReport rep;
    int d = arr.D();
    long long a1 = arr.a(1);
    if (a1 == 0) {
        rep.diagnostics = "a_1 = 0: no strongly closed subgraph certificate applies";
        return rep;
    }
    std::string stop;
    for (int m = 1; m <= d - 1; ++m) {
        if (arr.c(m + 1) == 1) {
            stop = "c_" + std::to_string(m + 1) + " = 1 leaves m = " + std::to_string(m) +
                   " outside the certificate's scope";
            continue;
        }
        bool ok = arr.c(m - 1) < arr.c(m);
        if (!ok)
            stop = "c_" + std::to_string(m - 1) + " = c_" + std::to_string(m) + " = " +
                   std::to_string(arr.c(m));
        for (int i = 1; ok && i <= m; ++i) {
            if (arr.a(i) != arr.c(i) * a1) {
                ok = false;
                stop = "a_" + std::to_string(i) + " = " + std::to_string(arr.a(i)) +
                       " != c_" + std::to_string(i) + " a_1 = " +
                       std::to_string(arr.c(i) * a1);
            }
        }
        if (ok) rep.bounded_up_to = m;
    }
    if (d < 2)
        rep.diagnostics = "diameter 1: nothing to certify";
    else if (rep.bounded_up_to == d - 1)
        rep.diagnostics = "all array-side conditions hold up to m = D-1";
    else
        rep.diagnostics = stop;
    return rep;
}

// Gamma sequence and related array-level geometry.  gamma_i is defined by
//   gamma_i u_i(theta_D) + (a_1 + 2 - gamma_i) u_{i+1}(theta_D) = 0,
// the trace of a Delsarte clique across the distance partition.  It only
// makes sense when theta_D = -k/(a_1+1) -- the smallest eigenvalue a graph
// partitioned by (a_1+2)-cliques must have -- and then every u_j(theta_D) is
// rational, so the gammas are exact rationals.
struct GeometricProfile {
    Scalar clique_bound;             // 1 - k/theta_D
    bool geometric_premise = false;  // theta_D == -k/(a_1+1) exactly
    bool degenerate = false;         // u_i = u_{i+1} made some gamma_i undefined
    std::vector<Rat> gamma;          // gamma_0..gamma_{D-1}; empty unless premise holds
    bool gamma_integral = false;     // every gamma_i an integer in [1, a_1+1]
    int a_relation_holds_up_to = 0;  // largest m with a_i = c_i a_1 for all i <= m
    int bounded_up_to = 0;           // from boundedness_conditions
    std::string note;
};

inline GeometricProfile gamma_sequence(const Spectrum& s) {
    const IntersectionArray& arr = s.array();
    int d = arr.D();
    long long a1 = arr.a(1);
    GeometricProfile gp;
    gp.clique_bound = delsarte_bound(s);
    gp.a_relation_holds_up_to = d;
    for (int i = 1; i <= d; ++i) {
        if (arr.a(i) != arr.c(i) * a1) {
            gp.a_relation_holds_up_to = i - 1;
            break;
        }
    }
    gp.bounded_up_to = boundedness_conditions(arr).bounded_up_to;
    if (!(s.theta(d) == Scalar(Rat(-arr.k(), a1 + 1)))) {
        gp.note = "not geometric: theta_D != -k/(a_1+1)";
        return gp;
    }
    gp.geometric_premise = true;
    const std::vector<Rat>& u = s.u_rat(d);
    gp.gamma_integral = true;
    for (int i = 0; i <= d - 1; ++i) {
        Rat den = u[i + 1] - u[i];
        if (den == 0) {
            gp.degenerate = true;
            gp.gamma.clear();
            gp.gamma_integral = false;
            gp.note = "not geometric: u_" + std::to_string(i) + "(theta_D) = u_" +
                      std::to_string(i + 1) + "(theta_D), gamma_" + std::to_string(i) +
                      " undefined";
            return gp;
        }
        Rat g = Rat(a1 + 2) * u[i + 1] / den;
        if (!is_integer(g) || g < 1 || g > a1 + 1) gp.gamma_integral = false;
        gp.gamma.push_back(std::move(g));
    }
    return gp;
}

// The Hermitian dual polar array of diameter D over GF(r^2), r a prime power:
//   a_1 = r - 1,  c_i = (r^{2i} - 1)/(r^2 - 1),  a_i = c_i (r - 1),
//   k = r c_D,    b_i = k - a_i - c_i = r^{2i+1} (r^{2D-2i} - 1)/(r^2 - 1).
inline IntersectionArray hermitian_dual_polar_array(int D, long long r) {
    if (D < 2) throw std::invalid_argument("hermitian_dual_polar_array needs D >= 2");
    if (r < 2 || !is_prime_power(BigInt(r)))
        throw std::invalid_argument("hermitian_dual_polar_array: r = " + std::to_string(r) +
                                    " is not a prime power");
    BigInt r2m1 = BigInt(r) * r - 1;
    auto cfun = [&](int i) -> BigInt {
        BigInt p = pow_big(r, 2 * i);
        return (p - 1) / r2m1;
    };
    BigInt ck = BigInt(r) * cfun(D);
    long long k_max = std::numeric_limits<long long>::max();
    if (ck > k_max)
        throw std::overflow_error("hermitian_dual_polar_array: valency exceeds 64-bit range");
    long long k = ck.convert_to<long long>();
    std::vector<long long> b(D), c(D);
    for (int i = 1; i <= D; ++i) c[i - 1] = cfun(i).convert_to<long long>();
    b[0] = k;
    for (int i = 1; i < D; ++i) {
        long long ai = c[i - 1] * (r - 1);
        b[i] = k - ai - c[i - 1];
        BigInt closed = pow_big(r, 2 * i + 1) * (pow_big(r, 2 * (D - i)) - 1) / r2m1;
        if (closed != b[i])
            throw std::logic_error("hermitian_dual_polar_array: b_i closed form mismatch");
    }
    return IntersectionArray::from_bc(std::move(b), std::move(c));
}

// ---------------------------------------------------------------------------
// Classification pipelines
// ---------------------------------------------------------------------------

enum class VerdictKind { IsHermitianDualPolar, HypothesisFails, ConclusionFails };

struct TraceStep {
    std::string step;    // pipeline stage, named for what it checks
    std::string values;  // the quantities that stage computed or compared
};

struct ClassificationVerdict {
    VerdictKind kind = VerdictKind::HypothesisFails;
    long long r = 0;          // prime-power order when classified
    std::string failed_step;  // stage id for ConclusionFails
    std::string reason;       // explanation for either failure kind
    // Hypotheses held but a conclusion every graph must satisfy failed: the
    // input is either an infeasible array that slipped through earlier
    // filters or evidence of an arithmetic fault.  Worth a close look.
    bool counterexample_candidate = false;
    // The verdict leans on an external small-diameter classification that
    // this pipeline does not re-derive.
    bool conditional_on_external_classification = false;
    int gamma_step_index = -1;  // first i with gamma_i = 2 (a_1 = 1 checker)
    std::vector<TraceStep> trace;
};

inline const char* verdict_str(VerdictKind k) {
    switch (k) {
        case VerdictKind::IsHermitianDualPolar: return "IsHermitianDualPolar";
        case VerdictKind::HypothesisFails: return "HypothesisFails";
        default: return "ConclusionFails";
    }
}

struct DualPolarAssumptions {
    // Strongly closed subgraphs of diameters 1 and 2 exist around every
    // vertex pair at those distances.  Not decidable from an array; supplied
    // by the caller and cross-checked against the array-side certificate.
    bool two_bounded = false;
};

namespace detail {

inline ClassificationVerdict& hypothesis_fails(ClassificationVerdict& v, const std::string& why) {
    v.kind = VerdictKind::HypothesisFails;
    v.reason = why;
    v.trace.push_back({"hypotheses", "FAIL: " + why});
    return v;
}

inline ClassificationVerdict& conclusion_fails(ClassificationVerdict& v, const std::string& step,
                                               const std::string& why) {
    v.kind = VerdictKind::ConclusionFails;
    v.failed_step = step;
    v.reason = why;
    v.trace.push_back({step, "FAIL: " + why});
    return v;
}

}  // namespace detail

// Decides whether a spectrally feasible array is the Hermitian dual polar
// array, replaying the characterization: a non-bipartite 2-bounded graph with
// smallest eigenvalue -k/(a_1+1) whose last idempotent is a light tail must
// be the Hermitian dual polar graph of order a_1+1.  Induction on the level m
// of strongly closed subgraphs pins every c_i to the closed form
// (q^{2i}-1)/(q^2-1), q = a_1+1: candidate clique traces gamma_{m+1} >= 2 are
// excluded because their c_{m+1} closed form drops below the growth floor
// c_m + (c_m - c_{m-1})(c_2 - c_1) once k > q c_closed(m+1).
inline ClassificationVerdict classify_dual_polar(const Spectrum& s, DualPolarAssumptions assume) {
    const IntersectionArray& arr = s.array();
    int D = arr.D();
    long long k = arr.k(), a1 = arr.a(1);
    ClassificationVerdict v;
    auto note = [&v](std::string step, std::string vals) {
        v.trace.push_back({std::move(step), std::move(vals)});
    };

    // hypotheses
    if (D < 3) return detail::hypothesis_fails(v, "diameter must be at least 3");
    if (k < 3) return detail::hypothesis_fails(v, "valency must be at least 3");
    bool some_a = false;
    for (int i = 0; i <= D; ++i) some_a = some_a || arr.a(i) != 0;
    if (!some_a)
        return detail::hypothesis_fails(v, "every a_i = 0: the array is bipartite-type");
    if (s.theta(D) == Scalar(Rat(-k)))
        return detail::hypothesis_fails(v, "theta_D = -k is a bipartite-type spectrum");
    if (a1 == 0 || !(s.theta(D) == Scalar(Rat(-k, a1 + 1))))
        return detail::hypothesis_fails(v, "smallest eigenvalue is not -k/(a_1+1)");
    if (!assume.two_bounded)
        return detail::hypothesis_fails(v, "2-bounded assumption not supplied by the caller");
    BoundednessReport bd = boundedness_conditions(arr);
    if (arr.c(3) != 1 && bd.bounded_up_to < 2)
        return detail::hypothesis_fails(
            v, "2-bounded assumption contradicts the array: " + bd.diagnostics);
    long long q = a1 + 1;
    note("hypotheses", "D = " + std::to_string(D) + ", k = " + std::to_string(k) +
                           ", a_1 = " + std::to_string(a1) +
                           ", theta_D = -k/(a_1+1), 2-bounded assumed" +
                           (arr.c(3) == 1 ? " (array-side certificate vacuous: c_3 = 1)"
                                          : ", array-side certificate m >= 2"));

    // light tail at the smallest eigenvalue, cross-checked two ways
    KreinTensor kt(s);
    LightTailScan scan = light_tail_scan(s, kt);
    verify_bound_scan_agreement(s, scan);  // logic_error on internal mismatch
    const LightTailEntry& tail = scan.at(D);
    if (!tail.light) {
        std::string why = "E_D is not a light tail";
        if (tail.degenerate_rank_one)
            why += " (multiplicity 1, Schur square degenerates)";
        else
            why += " (its Krein row carries " + std::to_string(tail.nonzero_count) +
                   " nonzero entries)";
        return detail::hypothesis_fails(v, why);
    }
    note("light_tail", "E_D light, associate E_" + std::to_string(tail.associate) +
                           ", m_D = " + to_string(s.multiplicity(D)));

    // the Schur-square profile forces the associate eigenvalue to be
    // (k - (a_1+1)(a_1+2))/(a_1+1)^2, the equality case of the spectral-gap
    // lower bound, so the associate must be E_1
    BoundReport lb = theta1_lower_bound(s);
    if (tail.associate != 1)
        return detail::conclusion_fails(
            v, "associate_eigenvalue",
            "light tail pairs E_D with E_" + std::to_string(tail.associate) +
                ", but the Schur-square profile forces E_1");
    if (lb.relation != Relation::EQ)
        return detail::conclusion_fails(
            v, "associate_eigenvalue",
            "theta_1 " + std::string(relation_str(lb.relation)) + " " + lb.rhs.str() +
                "; the light tail needs exact equality");
    note("associate_eigenvalue", "theta_1 = " + lb.rhs.str() + " (spectral-gap equality)");

    // u_i(theta_D)^2 = alpha + beta u_i(theta_1)
    std::string pd;
    if (!profile_identity(s, &pd)) return detail::conclusion_fails(v, "u_profile", pd);
    note("u_profile",
         "u_i(theta_D)^2 = alpha + beta u_i(theta_1), alpha = (a_1+1)/(a_1 k + a_1 + 1)");

    // gamma sequence must open with 1,1,1
    GeometricProfile gp = gamma_sequence(s);
    if (gp.degenerate) return detail::conclusion_fails(v, "gamma_initial", gp.note);
    if (gp.gamma[0] != 1) throw std::logic_error("gamma_0 != 1 with theta_D = -k/(a_1+1)");
    for (int i = 1; i <= 2; ++i)
        if (gp.gamma[i] != 1)
            return detail::conclusion_fails(v, "gamma_initial",
                                            "gamma_" + std::to_string(i) + " = " +
                                                to_string(gp.gamma[i]) +
                                                ", but 2-boundedness forces 1");
    note("gamma_initial", "gamma_0 = gamma_1 = gamma_2 = 1");

    // c_2 is pinned by the closed form at i = 2
    auto closed_c = [&](int i) -> BigInt {
        BigInt p = pow_big(q, 2 * i);
        BigInt q2m1 = BigInt(q) * q - 1;
        return (p - 1) / q2m1;
    };
    if (BigInt(arr.c(2)) != closed_c(2))
        return detail::conclusion_fails(v, "c_closed_form",
                                        "c_2 = " + std::to_string(arr.c(2)) +
                                            " != (a_1+1)^2 + 1 = " + to_string(closed_c(2)));
    note("c_closed_form", "c_1 = 1, c_2 = (a_1+1)^2 + 1 = " + std::to_string(arr.c(2)));

    // induction on the strongly closed level m: each round forces
    // gamma_{m+1} = 1 and extends the closed form to c_{m+1}
    for (int m = 2; m <= D - 2; ++m) {
        std::string ms = std::to_string(m);
        // growth floor from the level-m subgraph structure
        BigInt growth =
            BigInt(arr.c(m)) + BigInt(arr.c(m) - arr.c(m - 1)) * (arr.c(2) - arr.c(1));
        if (BigInt(arr.c(m + 1)) < growth)
            return detail::conclusion_fails(v, "c_growth",
                                            "c_" + std::to_string(m + 1) + " = " +
                                                std::to_string(arr.c(m + 1)) +
                                                " < growth floor " + to_string(growth) +
                                                " at m = " + ms);
        note("c_growth", "m = " + ms + ": c_" + std::to_string(m + 1) + " = " +
                             std::to_string(arr.c(m + 1)) + " >= " + to_string(growth));

        // k > q c_closed(m+1), because b_{m+1} >= 1, a_{m+1} >= a_1 c_{m+1}
        // and c_{m+1} sits on or above the growth floor
        BigInt kmin = BigInt(q) * closed_c(m + 1);
        if (BigInt(k) <= kmin)
            return detail::conclusion_fails(v, "k_lower_bound",
                                            "k = " + std::to_string(k) +
                                                " <= (a_1+1) c_closed(m+1) = " + to_string(kmin) +
                                                " at m = " + ms);
        note("k_lower_bound",
             "m = " + ms + ": k = " + std::to_string(k) + " > " + to_string(kmin));

        // candidate traces gamma_{m+1} = g >= 2 (only g <= q/2 is possible,
        // since the squared standard sequence must keep decreasing); each one
        // would give
        //   c_{m+1}(g) = [(q+1-g) q (q^{2(m+1)}-1) - k (q+1)(g-1)]
        //                / [q^2 (q+1) (q-g)],
        // which falls below the growth floor once k clears the bound above
        bool any_candidate = false;
        for (long long g = 2; g <= q / 2; ++g) {
            any_candidate = true;
            BigInt p = pow_big(q, 2 * (m + 1));
            BigInt pm1 = p - 1;
            Rat num = Rat(q + 1 - g) * Rat(q) * Rat(pm1) - Rat(k) * Rat(q + 1) * Rat(g - 1);
            Rat den = Rat(q) * Rat(q) * Rat(q + 1) * Rat(q - g);
            Rat cg = num / den;
            if (cg >= Rat(growth))
                return detail::conclusion_fails(
                    v, "gamma_step_bound",
                    "candidate gamma_" + std::to_string(m + 1) + " = " + std::to_string(g) +
                        " survives: closed form " + to_string(cg) + " >= growth floor " +
                        to_string(growth));
            note("gamma_step_bound", "m = " + ms + ": gamma = " + std::to_string(g) +
                                         " excluded, closed form " + to_string(cg) +
                                         " < growth floor " + to_string(growth));
        }
        if (!any_candidate)
            note("gamma_step_bound",
                 "m = " + ms + ": no candidate gamma >= 2 admissible (a_1 + 1 <= 3)");

        // the array's own gamma must agree with the forced value
        if (gp.gamma[m + 1] != 1)
            return detail::conclusion_fails(v, "gamma_forced",
                                            "gamma_" + std::to_string(m + 1) + " = " +
                                                to_string(gp.gamma[m + 1]) +
                                                ", but the exclusion forces 1");
        note("gamma_forced", "gamma_" + std::to_string(m + 1) + " = 1");

        if (BigInt(arr.c(m + 1)) != closed_c(m + 1))
            return detail::conclusion_fails(
                v, "c_closed_form",
                "c_" + std::to_string(m + 1) + " = " + std::to_string(arr.c(m + 1)) +
                    " != (q^{2(m+1)}-1)/(q^2-1) = " + to_string(closed_c(m + 1)));
        note("c_closed_form",
             "c_" + std::to_string(m + 1) + " = " + to_string(closed_c(m + 1)));

        if (arr.a(m + 1) != a1 * arr.c(m + 1))
            return detail::conclusion_fails(v, "a_relation",
                                            "a_" + std::to_string(m + 1) + " = " +
                                                std::to_string(arr.a(m + 1)) + " != a_1 c_" +
                                                std::to_string(m + 1) + " = " +
                                                std::to_string(a1 * arr.c(m + 1)));
        note("a_relation", "a_" + std::to_string(m + 1) + " = a_1 c_" + std::to_string(m + 1));
    }

    // with every gamma_i = 1 the standard sequence at theta_D is (-1/q)^j;
    // this is forced by the defining relation, so a mismatch is a bug
    const std::vector<Rat>& u = s.u_rat(D);
    for (int j = 0; j <= D; ++j)
        if (u[j] != pow_rat(Rat(-1, q), j))
            throw std::logic_error("u_j(theta_D) != (-1/(a_1+1))^j despite gamma = 1");
    note("u_pattern", "u_j(theta_D) = (-1/(a_1+1))^j for all j");

    // terminal step: b_D = 0 and the eigenvalue equation at theta_D give
    // k = q c_D and a_D = a_1 c_D; the theta_1 equation then pins c_D
    if (BigInt(k) != BigInt(q) * arr.c(D))
        return detail::conclusion_fails(v, "terminal_recurrence",
                                        "k = " + std::to_string(k) + " != (a_1+1) c_D = " +
                                            to_string(BigInt(q) * arr.c(D)));
    if (arr.a(D) != a1 * arr.c(D))
        return detail::conclusion_fails(v, "terminal_recurrence",
                                        "a_D = " + std::to_string(arr.a(D)) +
                                            " != a_1 c_D = " + std::to_string(a1 * arr.c(D)));
    if (BigInt(arr.c(D)) != closed_c(D))
        return detail::conclusion_fails(
            v, "terminal_recurrence",
            "c_D = " + std::to_string(arr.c(D)) +
                " != (q^{2D}-1)/(q^2-1) = " + to_string(closed_c(D)));
    note("terminal_recurrence", "k = (a_1+1) c_D, a_D = a_1 c_D, c_D = " +
                                    std::to_string(arr.c(D)));

    // all parameters are pinned; the array must be the generator's output
    if (!is_prime_power(BigInt(q))) {
        v.counterexample_candidate = true;
        return detail::conclusion_fails(
            v, "generator_match",
            "a_1 + 1 = " + std::to_string(q) +
                " is not a prime power; no Hermitian dual polar graph has these parameters");
    }
    IntersectionArray gen = hermitian_dual_polar_array(D, q);
    if (!(arr == gen))
        throw std::logic_error(
            "classification steps all passed but the array differs from the generator");
    note("generator_match",
         "array equals the Hermitian dual polar array, D = " + std::to_string(D) +
             ", r = " + std::to_string(q));
    v.kind = VerdictKind::IsHermitianDualPolar;
    v.r = q;
    return v;
}

// Checker for arrays with a_1 = 1 (every edge lies in a unique triangle, so
// the graph is geometric as soon as theta_D = -k/2 makes triangles Delsarte
// cliques).  The gamma sequence is then nondecreasing with values in {1, 2};
// past its step index e the standard sequence at theta_D doubles instead of
// halving, which caps |u_D| and forces e >= ceil(D/2).  Under the additional
// hypothesis c_2 >= 5 the array collapses to c_2 = 5 and must be the order-2
// Hermitian dual polar array: for D >= 5 this is replayed through the main
// pipeline, for D <= 4 it leans on an external classification and the verdict
// says so.
inline ClassificationVerdict classify_a1_one(const Spectrum& s) {
    const IntersectionArray& arr = s.array();
    int D = arr.D();
    long long k = arr.k();
    ClassificationVerdict v;
    auto note = [&v](std::string step, std::string vals) {
        v.trace.push_back({std::move(step), std::move(vals)});
    };

    if (arr.a(1) != 1) return detail::hypothesis_fails(v, "a_1 must equal 1");
    if (k < 3) return detail::hypothesis_fails(v, "valency must be at least 3");
    if (D < 2) return detail::hypothesis_fails(v, "diameter must be at least 2");
    if (!(s.theta(D) == Scalar(Rat(-k, 2))))
        return detail::hypothesis_fails(v, "smallest eigenvalue is not -k/2");
    note("hypotheses", "a_1 = 1, k = " + std::to_string(k) + ", D = " + std::to_string(D) +
                           ", theta_D = -k/2, c_2 = " + std::to_string(arr.c(2)));

    // gamma pattern: nondecreasing over {1, 2} with step index e
    GeometricProfile gp = gamma_sequence(s);
    if (gp.degenerate) {
        v.counterexample_candidate = true;
        return detail::conclusion_fails(v, "gamma_pattern", gp.note);
    }
    int e = D;
    for (int i = 0; i <= D - 1; ++i) {
        const Rat& g = gp.gamma[i];
        if (g != 1 && g != 2) {
            v.counterexample_candidate = true;
            return detail::conclusion_fails(v, "gamma_pattern",
                                            "gamma_" + std::to_string(i) + " = " + to_string(g) +
                                                " outside {1, 2}");
        }
        if (g == 2 && e == D) e = i;
        if (g == 1 && e < D) {
            v.counterexample_candidate = true;
            return detail::conclusion_fails(
                v, "gamma_pattern",
                "gamma_" + std::to_string(i) + " drops back to 1 after the step at " +
                    std::to_string(e));
        }
    }
    v.gamma_step_index = e;
    note("gamma_pattern", "gamma nondecreasing in {1, 2}, step index e = " + std::to_string(e));

    // the gamma pattern fixes u_j(theta_D): halving to e, doubling after
    const std::vector<Rat>& u = s.u_rat(D);
    for (int j = 0; j <= D; ++j) {
        Rat expect = j <= e ? pow_rat(Rat(-1, 2), j) : pow_rat(Rat(-1, 2), 2 * e - j);
        if (u[j] != expect)
            throw std::logic_error("u pattern disagrees with the gamma step structure");
    }
    note("u_pattern", "u_j(theta_D) = (-1/2)^j for j <= e, (-1/2)^{2e-j} beyond");

    // |u_D| <= 1 caps the doubling run
    if (e < (D + 1) / 2) {
        v.counterexample_candidate = true;
        return detail::conclusion_fails(v, "e_lower_bound",
                                        "e = " + std::to_string(e) + " < ceil(D/2) leaves |u_D| = " +
                                            to_string(pow_rat(Rat(-1, 2), 2 * e - D)) + " > 1");
    }
    note("e_lower_bound", "e = " + std::to_string(e) + " >= ceil(D/2) = " +
                              std::to_string((D + 1) / 2));

    if (arr.c(2) < 5)
        return detail::hypothesis_fails(
            v, "c_2 = " + std::to_string(arr.c(2)) + " < 5: the collapse makes no claim");

    // collapse: c_2 >= 5 with theta_D = -k/2 forces c_2 = 5 exactly
    if (arr.c(2) != 5) {
        v.counterexample_candidate = true;
        return detail::conclusion_fails(v, "c2_collapse",
                                        "hypotheses hold but c_2 = " + std::to_string(arr.c(2)) +
                                            " != 5");
    }
    note("c2_collapse", "c_2 = 5 = (a_1+1)^2 + 1");

    if (D >= 5) {
        // e >= 3, so a_i = c_i a_1 for i <= 2 and the graph is 2-bounded;
        // hand the array to the main pipeline
        ClassificationVerdict inner = classify_dual_polar(s, {.two_bounded = true});
        v.trace.insert(v.trace.end(), inner.trace.begin(), inner.trace.end());
        v.kind = inner.kind;
        v.r = inner.r;
        v.failed_step = inner.failed_step;
        v.reason = inner.reason;
        if (inner.kind != VerdictKind::IsHermitianDualPolar) v.counterexample_candidate = true;
        if (inner.kind == VerdictKind::IsHermitianDualPolar && inner.r != 2)
            throw std::logic_error("a_1 = 1 array classified with order != 2");
        return v;
    }

    // D <= 4: match the generator directly; the identification of such small
    // diameter graphs relies on a published classification not re-derived here
    IntersectionArray gen = hermitian_dual_polar_array(D, 2);
    if (!(arr == gen)) {
        v.counterexample_candidate = true;
        return detail::conclusion_fails(v, "generator_match",
                                        "array " + arr.str() +
                                            " differs from the order-2 dual polar array " +
                                            gen.str());
    }
    note("generator_match", "array equals the D = " + std::to_string(D) +
                                ", r = 2 Hermitian dual polar array");
    v.conditional_on_external_classification = true;
    note("small_diameter",
         "D <= 4: the identification relies on an external classification of small-diameter "
         "a_1 = 1 graphs with theta_D = -k/2; it is not re-derived here");
    v.kind = VerdictKind::IsHermitianDualPolar;
    v.r = 2;
    return v;
}

// Checker for geometric arrays with an m-bounded assumption, m >= 2: once
// c_2 >= (a_1+1)^2 + 1, the two spectral-gap bounds on theta_1 squeeze c_2 to
// exactly (a_1+1)^2 + 1, and the main pipeline takes over.
inline ClassificationVerdict classify_bounded_geometric(const Spectrum& s, long long m_bounded) {
    const IntersectionArray& arr = s.array();
    int D = arr.D();
    long long k = arr.k(), a1 = arr.a(1);
    ClassificationVerdict v;
    auto note = [&v](std::string step, std::string vals) {
        v.trace.push_back({std::move(step), std::move(vals)});
    };

    if (m_bounded < 2)
        return detail::hypothesis_fails(v, "needs an m-bounded assumption with m >= 2");
    if (D < 3) return detail::hypothesis_fails(v, "diameter must be at least 3");
    if (k < 3) return detail::hypothesis_fails(v, "valency must be at least 3");
    bool some_a = false;
    for (int i = 0; i <= D; ++i) some_a = some_a || arr.a(i) != 0;
    if (!some_a)
        return detail::hypothesis_fails(v, "every a_i = 0: the array is bipartite-type");
    if (a1 == 0 || !(s.theta(D) == Scalar(Rat(-k, a1 + 1))))
        return detail::hypothesis_fails(v, "geometric premise: theta_D must be -k/(a_1+1)");
    GeometricProfile gp = gamma_sequence(s);
    if (!gp.gamma_integral)
        return detail::hypothesis_fails(
            v, "geometric premise: gamma sequence is not integral in [1, a_1+1]");
    long long q = a1 + 1;
    if (arr.c(2) < q * q + 1)
        return detail::hypothesis_fails(v, "c_2 = " + std::to_string(arr.c(2)) +
                                               " < (a_1+1)^2 + 1 = " +
                                               std::to_string(q * q + 1) + ": no claim");
    note("hypotheses", "m-bounded assumed with m = " + std::to_string(m_bounded) +
                           ", theta_D = -k/(a_1+1), gamma integral, c_2 = " +
                           std::to_string(arr.c(2)));

    // the containment-side upper bound (k - (a_1+1))/(c_2 - 1) - 1 decreases
    // in c_2 and meets the lower bound exactly at c_2 = (a_1+1)^2 + 1, so any
    // larger c_2 is impossible
    if (arr.c(2) != q * q + 1) {
        BoundReport lo = theta1_lower_bound(s);
        BoundReport hi = theta1_upper_bound(s, true);
        v.counterexample_candidate = true;
        return detail::conclusion_fails(
            v, "c2_collapse",
            "c_2 = " + std::to_string(arr.c(2)) + " > (a_1+1)^2 + 1 forces the upper bound " +
                hi.rhs.str() + " below the lower bound " + lo.rhs.str() +
                "; no graph fits between them");
    }
    note("c2_collapse", "c_2 = (a_1+1)^2 + 1 = " + std::to_string(arr.c(2)));

    ClassificationVerdict inner = classify_dual_polar(s, {.two_bounded = true});
    v.trace.insert(v.trace.end(), inner.trace.begin(), inner.trace.end());
    v.kind = inner.kind;
    v.r = inner.r;
    v.failed_step = inner.failed_step;
    v.reason = inner.reason;
    v.counterexample_candidate = v.counterexample_candidate || inner.counterexample_candidate;
    return v;
}

}  // namespace drg
