#pragma once

// Eigenvalue and multiplicity bounds whose equality cases certify light-tail
// structure, the squeeze argument that combines them, and the standard-
// sequence profile identity that a light tail at the last index forces.
// Everything is decided with exact scalar comparisons; a report records both
// sides together with the exact relation between them.

#include <drg/krein.hpp>
#include <drg/spectrum.hpp>

#include <stdexcept>
#include <string>

namespace drg {

// A bound was asked about an array that does not satisfy its hypotheses.
class HypothesisError : public std::domain_error {
public:
    explicit HypothesisError(const std::string& what) : std::domain_error(what) {}
};

enum class BoundName {
    MultiplicityLowerBound,
    Theta1LowerBound,
    Theta1UpperBound,
};

enum class Relation { LT, EQ, GT };

inline Relation relation_of(const Scalar& lhs, const Scalar& rhs) {
    int c = lhs.compare(rhs);
    if (c < 0) return Relation::LT;
    if (c > 0) return Relation::GT;
    return Relation::EQ;
}

inline const char* relation_str(Relation r) {
    switch (r) {
        case Relation::LT: return "<";
        case Relation::EQ: return "=";
        default: return ">";
    }
}

struct BoundReport {
    BoundName bound_name = BoundName::MultiplicityLowerBound;
    Scalar lhs, rhs;
    Relation relation = Relation::EQ;
    std::string equality_semantics;  // what an exact equality certifies
    int eigen_index = -1;            // set by the multiplicity bound
    bool assumed_gq_containment = false;  // set by the upper bound
};

// Lower bound on the multiplicity of eigenvalue index i, stated as
//   (m_i - k)/k  >=  -(theta_i + 1)^2 a_1 (a_1 + 1)
//                    / (((a_1+1) theta_i + k)^2 + k a_1 b_1),
// valid for theta_i != +-k when k >= 3 and D >= 2.  Equality holds exactly
// when E_i is a light tail, which verify_bound_scan_agreement cross-checks
// against the Krein row scan.
inline BoundReport multiplicity_bound(const Spectrum& s, int i) {
    const IntersectionArray& arr = s.array();
    long long k = arr.k(), a1 = arr.a(1), b1 = arr.b(1);
    if (k < 3) throw HypothesisError("multiplicity bound needs valency at least 3");
    if (arr.D() < 2) throw HypothesisError("multiplicity bound needs diameter at least 2");
    const Scalar& th = s.theta(i);
    if (th == Scalar(Rat(k)) || th == Scalar(Rat(-k)))
        throw HypothesisError("multiplicity bound excludes the eigenvalues +-k");

    BoundReport r;
    r.bound_name = BoundName::MultiplicityLowerBound;
    r.eigen_index = i;
    r.lhs = Scalar(Rat(s.multiplicity(i) - k) / Rat(k));
    Scalar shifted = th + Scalar(1);
    Scalar num = shifted * shifted * Scalar(Rat(a1) * Rat(a1 + 1));
    Scalar base = Scalar(Rat(a1 + 1)) * th + Scalar(Rat(k));
    Scalar den = base * base + Scalar(Rat(k) * Rat(a1) * Rat(b1));
    r.rhs = -(num / den);
    r.relation = relation_of(r.lhs, r.rhs);
    r.equality_semantics = "equality certifies a light tail at this eigenvalue index";
    return r;
}

// Lower bound theta_1 >= (k - (a_1+1)(a_1+2)) / (a_1+1)^2, under a_1 != 0 and
// theta_D = -k/(a_1+1).  Equality holds exactly when E_D is a light tail with
// associated idempotent E_1.
inline BoundReport theta1_lower_bound(const Spectrum& s) {
    const IntersectionArray& arr = s.array();
    long long k = arr.k(), a1 = arr.a(1);
    if (a1 == 0) throw HypothesisError("spectral-gap lower bound needs a_1 != 0");
    if (s.theta(arr.D()) != Scalar(Rat(-k, a1 + 1)))
        throw HypothesisError("spectral-gap lower bound needs theta_D = -k/(a_1+1)");

    BoundReport r;
    r.bound_name = BoundName::Theta1LowerBound;
    r.lhs = s.theta(1);
    r.rhs = Scalar(Rat(k - (a1 + 1) * (a1 + 2), (a1 + 1) * (a1 + 1)));
    r.relation = relation_of(r.lhs, r.rhs);
    r.equality_semantics =
        "equality certifies a light tail at the last index with associate index 1";
    return r;
}

// Upper bound theta_1 <= (k - (a_1+1))/(c_2 - 1) - 1, valid when c_2 != 1 and
// the graph contains an induced generalized quadrangle GQ(a_1+1, c_2-1).
// Containment cannot be decided from the array alone, so the caller supplies
// it as an assumption and the report carries the flag.
inline BoundReport theta1_upper_bound(const Spectrum& s, bool assume_gq_containment) {
    const IntersectionArray& arr = s.array();
    long long k = arr.k(), a1 = arr.a(1), c2 = arr.c(2);
    if (c2 == 1) throw HypothesisError("spectral-gap upper bound needs c_2 != 1");

    BoundReport r;
    r.bound_name = BoundName::Theta1UpperBound;
    r.lhs = s.theta(1);
    r.rhs = Scalar(Rat(k - (a1 + 1), c2 - 1) - 1);
    r.relation = relation_of(r.lhs, r.rhs);
    r.assumed_gq_containment = assume_gq_containment;
    return r;
}

struct SufficiencyResult {
    bool verdict = false;  // both bounds met with equality
    BoundReport lower, upper;
};

// When c_2 = (a_1+1)^2 + 1 the two spectral-gap bounds coincide, so a graph
// satisfying both hypotheses is squeezed into their common equality case and
// E_D must be a light tail with associate E_1.  For a candidate array the
// verdict can still be false: the bounds are theorems about graphs, and an
// array violating them cannot be realized under the assumed containment.
inline SufficiencyResult light_tail_sufficiency(const Spectrum& s, bool assume_gq_containment) {
    const IntersectionArray& arr = s.array();
    long long a1 = arr.a(1);
    if (a1 == 0) throw HypothesisError("light-tail sufficiency needs a_1 != 0");
    if (s.theta(arr.D()) != Scalar(Rat(-arr.k(), a1 + 1)))
        throw HypothesisError("light-tail sufficiency needs theta_D = -k/(a_1+1)");
    if (arr.c(2) != (a1 + 1) * (a1 + 1) + 1)
        throw HypothesisError("light-tail sufficiency needs c_2 = (a_1+1)^2 + 1");
    if (!assume_gq_containment)
        throw HypothesisError(
            "light-tail sufficiency needs the generalized-quadrangle containment assumption");

    SufficiencyResult out{false, theta1_lower_bound(s), theta1_upper_bound(s, true)};
    out.verdict = out.lower.relation == Relation::EQ && out.upper.relation == Relation::EQ;
    if (out.verdict) {
        // the Krein row must agree with the equality case
        auto scan = light_tail_scan(s);
        const auto& e = scan.at(arr.D());
        if (!e.light || e.associate != 1)
            throw std::logic_error("bound squeeze disagrees with the Krein light-tail scan");
    }
    return out;
}

// A light tail at index D with associate index 1 forces
//   u_j(theta_D)^2 = alpha + beta u_j(theta_1)  for all j,
// with alpha = (a_1+1)/(a_1 k + a_1 + 1) and beta = a_1 k/(a_1 k + a_1 + 1)
// (alpha + beta = 1).  Returns false with a diagnostic when the precondition
// or the identity itself fails.
inline bool profile_identity(const Spectrum& s, std::string* diagnostic = nullptr) {
    const IntersectionArray& arr = s.array();
    int d = arr.D();
    auto scan = light_tail_scan(s);
    const auto& e = scan.at(d);
    if (!e.light || e.associate != 1) {
        if (diagnostic)
            *diagnostic = "no light tail at the last index with associate index 1";
        return false;
    }
    long long a1 = arr.a(1), k = arr.k();
    Rat denom(a1 * k + a1 + 1);
    Scalar alpha{Rat(a1 + 1) / denom};
    Scalar beta{Rat(a1) * Rat(k) / denom};
    for (int j = 0; j <= d; ++j) {
        Scalar lhs = s.u(d, j) * s.u(d, j);
        Scalar rhs = alpha + beta * s.u(1, j);
        if (lhs != rhs) {
            if (diagnostic)
                *diagnostic = "profile identity fails at position " + std::to_string(j) +
                              ": " + lhs.str() + " != " + rhs.str();
            return false;
        }
    }
    return true;
}

// Cross-module property: on every eigenvalue index the multiplicity bound
// admits, its equality case must coincide with the Krein row scan's verdict.
// A disagreement is an internal arithmetic error, never an infeasibility.
inline void verify_bound_scan_agreement(const Spectrum& s, const LightTailScan& scan) {
    const IntersectionArray& arr = s.array();
    if (arr.k() < 3 || arr.D() < 2) return;  // bound not applicable at all
    for (int i = 1; i <= arr.D(); ++i) {
        if (s.theta(i) == Scalar(Rat(-arr.k()))) continue;  // excluded eigenvalue
        bool eq = multiplicity_bound(s, i).relation == Relation::EQ;
        if (eq != scan.at(i).light)
            throw std::logic_error(
                "multiplicity bound equality disagrees with the Krein scan at index " +
                std::to_string(i));
    }
}

}  // namespace drg
