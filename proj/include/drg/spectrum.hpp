#pragma once

// Exact spectral data of an intersection array: eigenvalues of the tridiagonal
// intersection matrix, standard sequences, multiplicities, eigenmatrices.
//
// The characteristic polynomial comes from the principal-minor three-term
// recurrence.  Its roots are provably distinct and real (the matrix is
// conjugate to a symmetric tridiagonal one with nonzero off-diagonals), so
// after factoring into irreducibles every factor is real-rooted and each
// eigenvalue is either a rational integer or a designated root of a monic
// irreducible factor.  All standard-sequence work for irrational eigenvalues
// happens inside Q[t]/(factor); nothing downstream ever touches a float.
//
// Orthogonality of the eigenmatrices (P Q = n I) is certified symbolically:
// for two distinct irreducible factors F, G the Gram polynomial
// sum_j k_j p_j(x) p_j(y) must vanish in Q[x,y]/(F(x), G(y)); for a repeated
// factor the certificate is multiplication by (x - y) vanishing in
// Q[x,y]/(F(x), F(y)), which states exactly that distinct conjugate roots are
// orthogonal while saying nothing about the diagonal.  Both reduce to finite
// rational linear algebra -- no algebraic-number arithmetic involved.

#include "factorization.hpp"
#include "intersection_array.hpp"
#include "number_field.hpp"
#include "scalar.hpp"

namespace drg {

// An array that fails a spectral feasibility condition (irrational or
// non-integral multiplicities).  Structural violations throw
// std::invalid_argument from IntersectionArray instead.
class InfeasibleArray : public std::runtime_error {
public:
    explicit InfeasibleArray(const std::string& condition)
        : std::runtime_error("infeasible intersection array: " + condition) {}
};

// tridiagonal intersection matrix, rows (c_i, a_i, b_i), size (D+1)^2
inline std::vector<std::vector<BigInt>> intersection_matrix(const IntersectionArray& arr) {
    int d = arr.D();
    std::vector<std::vector<BigInt>> L(d + 1, std::vector<BigInt>(d + 1, BigInt(0)));
    for (int i = 0; i <= d; ++i) {
        if (i > 0) L[i][i - 1] = arr.c(i);
        L[i][i] = arr.a(i);
        if (i < d) L[i][i + 1] = arr.b(i);
    }
    return L;
}

inline ZPoly char_poly_of(const IntersectionArray& arr) {
    int d = arr.D();
    ZPoly prev = ZPoly{1};                       // phi_{-1}
    ZPoly cur = ZPoly{-arr.a(0), 1};             // phi_0 = t - a_0
    for (int i = 1; i <= d; ++i) {
        ZPoly lin{-arr.a(i), 1};
        ZPoly next = lin * cur - prev * BigInt(arr.b(i - 1) * arr.c(i));
        prev = std::exchange(cur, std::move(next));
    }
    return cur;
}

class Spectrum {
public:
    explicit Spectrum(IntersectionArray array) : arr_(std::move(array)) { build(); }

    static std::optional<Spectrum> try_build(const IntersectionArray& arr,
                                             std::string* why = nullptr) {
        try {
            return Spectrum(arr);
        } catch (const InfeasibleArray& e) {
            if (why) *why = e.what();
            return std::nullopt;
        }
    }

    const IntersectionArray& array() const { return arr_; }
    const ZPoly& char_poly() const { return chi_; }
    int count() const { return arr_.D() + 1; }

    const Scalar& theta(int i) const { return theta_.at(i); }
    const BigInt& multiplicity(int i) const { return mult_.at(i); }
    const Scalar& u(int i, int j) const { return u_.at(i).at(j); }  // u_j(theta_i)

    // eigenmatrices: P[j][i] = k_i u_i(theta_j), Q[j][i] = m_i u_j(theta_i)
    Scalar P(int j, int i) const { return Scalar(Rat(arr_.k_i(i))) * u_.at(j).at(i); }
    Scalar Q(int j, int i) const { return Scalar(Rat(mult_.at(i))) * u_.at(i).at(j); }

    bool theta_is_rational(int i) const { return theta_.at(i).is_rational(); }
    Rat theta_rat(int i) const { return theta_.at(i).rat(); }

    // irreducible factors of the characteristic polynomial, and which factor
    // each eigenvalue is a root of
    const std::vector<ZPoly>& factors() const { return factors_; }
    int factor_of(int i) const { return factor_of_.at(i); }
    // standard-sequence polynomials p_j with u_j(theta) = p_j(theta)
    const std::vector<QPoly>& seq_polys() const { return seq_polys_; }
    // p_j reduced mod the given (degree >= 2) factor
    const std::vector<QPoly>& u_rep(int factor_idx) const { return u_rep_.at(factor_idx); }
    // exact rational standard sequence for a rational eigenvalue
    const std::vector<Rat>& u_rat(int i) const {
        if (!theta_is_rational(i)) throw std::logic_error("eigenvalue is not rational");
        return u_rat_.at(i);
    }
    // number field carrying eigenvalue i (degree >= 2 factors only)
    const NumberField& field_of(int i) const { return *fields_.at(i); }

private:
    IntersectionArray arr_;
    ZPoly chi_;
    std::vector<ZPoly> factors_;
    std::vector<Scalar> theta_;
    std::vector<int> factor_of_;
    std::vector<BigInt> mult_;
    std::vector<std::vector<Scalar>> u_;
    std::vector<QPoly> seq_polys_;
    std::vector<std::vector<QPoly>> u_rep_;          // per factor (empty for linear)
    std::vector<std::vector<Rat>> u_rat_;            // per eigenvalue (empty if irrational)
    std::vector<std::shared_ptr<NumberField>> fields_;  // per eigenvalue (null if rational)

    void build() {
        int d = arr_.D();
        chi_ = char_poly_of(arr_);

        // factor; the roots of a Jacobi matrix are simple, so multiplicities
        // beyond 1 signal an internal error, not an infeasible array
        auto fac = factor(chi_);
        factors_.clear();
        for (auto& [F, mult] : fac.factors) {
            if (mult != 1) throw std::logic_error("characteristic polynomial not squarefree");
            if (F.lead() != 1) throw std::logic_error("characteristic factor not monic");
            factors_.push_back(F);
        }

        // standard-sequence polynomials over Q[t]
        seq_polys_.assign(d + 1, QPoly());
        seq_polys_[0] = QPoly::constant(Rat(1));
        if (d >= 1) seq_polys_[1] = QPoly(std::vector<Rat>{Rat(0), Rat(1, arr_.k())});
        for (int j = 1; j < d; ++j) {
            QPoly tpj = QPoly(std::vector<Rat>{Rat(0), Rat(1)}) * seq_polys_[j];
            QPoly num = tpj - seq_polys_[j] * Rat(arr_.a(j)) - seq_polys_[j - 1] * Rat(arr_.c(j));
            seq_polys_[j + 1] = num * Rat(1, arr_.b(j));
        }

        // collect eigenvalues with their provenance
        struct Root {
            Scalar value;
            int factor_idx;
        };
        std::vector<Root> roots;
        u_rep_.assign(factors_.size(), {});
        for (size_t fi = 0; fi < factors_.size(); ++fi) {
            const ZPoly& F = factors_[fi];
            if (F.degree() == 1) {
                roots.push_back({Scalar(Rat(-F.coeff(0))), static_cast<int>(fi)});
            } else {
                auto ivs = isolate_real_roots(F);
                if (static_cast<int>(ivs.size()) != F.degree())
                    throw std::logic_error("characteristic factor has non-real roots");
                for (auto& [lo, hi] : ivs)
                    roots.push_back({Scalar(AlgebraicReal(F, lo, hi)), static_cast<int>(fi)});
                // reduce the sequence polynomials mod this factor once
                QPoly fq(F);
                std::vector<QPoly> reps(d + 1);
                for (int j = 0; j <= d; ++j) reps[j] = seq_polys_[j] % fq;
                u_rep_[fi] = std::move(reps);
            }
        }
        if (static_cast<int>(roots.size()) != d + 1)
            throw std::logic_error("eigenvalue count mismatch");
        std::sort(roots.begin(), roots.end(),
                  [](const Root& a, const Root& b) { return a.value > b.value; });
        if (!(roots.front().value == Scalar(Rat(arr_.k()))))
            throw std::logic_error("largest eigenvalue is not the valency");

        theta_.clear();
        factor_of_.clear();
        for (auto& r : roots) {
            theta_.push_back(r.value);
            factor_of_.push_back(r.factor_idx);
        }

        // per-eigenvalue standard sequences, fields, multiplicities
        fields_.assign(d + 1, nullptr);
        u_rat_.assign(d + 1, {});
        u_.assign(d + 1, {});
        mult_.assign(d + 1, BigInt(0));
        for (int i = 0; i <= d; ++i) {
            if (theta_[i].is_rational()) {
                Rat th = theta_[i].rat();
                std::vector<Rat> us(d + 1);
                std::vector<Scalar> uscal(d + 1);
                for (int j = 0; j <= d; ++j) {
                    us[j] = seq_polys_[j].eval(th);
                    uscal[j] = Scalar(us[j]);
                }
                // terminal identity: the recurrence closes iff theta is a root
                Rat terminal = Rat(arr_.c(d)) * us[d - 1] + Rat(arr_.a(d)) * us[d] - th * us[d];
                if (terminal != 0)
                    throw std::logic_error("terminal identity violated at rational eigenvalue");
                Rat S(0);
                for (int j = 0; j <= d; ++j) S += Rat(arr_.k_i(j)) * us[j] * us[j];
                Rat m = Rat(arr_.n()) / S;
                if (!is_integer(m) || m <= 0)
                    throw InfeasibleArray("multiplicity of eigenvalue " + theta_[i].str() +
                                          " is not a positive integer (" + to_string(m) + ")");
                mult_[i] = numerator(m);
                u_rat_[i] = std::move(us);
                u_[i] = std::move(uscal);
            } else {
                const AlgebraicReal& root = theta_[i].alg();
                auto nf = std::make_shared<NumberField>(root.min_poly(), root.lo(), root.hi());
                const auto& reps = u_rep_[factor_of_[i]];
                // terminal identity in-field
                if (d >= 1) {
                    NumberField::Elem lhs = nf->sub(
                        nf->add(nf->mul_rat(reps[d - 1], Rat(arr_.c(d))),
                                nf->mul_rat(reps[d], Rat(arr_.a(d)))),
                        nf->mul(nf->gen(), reps[d]));
                    if (!nf->is_zero(lhs))
                        throw std::logic_error("terminal identity violated in field");
                }
                NumberField::Elem S = nf->zero();
                for (int j = 0; j <= d; ++j)
                    S = nf->add(S, nf->mul_rat(nf->mul(reps[j], reps[j]), Rat(arr_.k_i(j))));
                if (!nf->is_rational(S))
                    throw InfeasibleArray("multiplicity of eigenvalue " + theta_[i].str() +
                                          " is irrational");
                Rat m = Rat(arr_.n()) / nf->rat_value(S);
                if (!is_integer(m) || m <= 0)
                    throw InfeasibleArray("multiplicity of eigenvalue " + theta_[i].str() +
                                          " is not a positive integer (" + to_string(m) + ")");
                mult_[i] = numerator(m);
                std::vector<Scalar> uscal(d + 1);
                for (int j = 0; j <= d; ++j) uscal[j] = nf->to_scalar(reps[j]);
                u_[i] = std::move(uscal);
                fields_[i] = std::move(nf);
            }
        }

        // multiplicity sum and trace identities (exact, purely rational)
        BigInt msum = 0;
        for (auto& m : mult_) msum += m;
        if (msum != arr_.n()) throw std::logic_error("multiplicities do not sum to n");
        // conjugate roots share a multiplicity; each irrational factor
        // contributes m_F times its root sum, which is -[t^{deg-1}]
        Rat trace(0);
        std::vector<bool> factor_seen(factors_.size(), false);
        for (int i = 0; i <= d; ++i) {
            if (theta_[i].is_rational()) {
                trace += Rat(mult_[i]) * theta_[i].rat();
                continue;
            }
            int fi = factor_of_[i];
            if (factor_seen[fi]) continue;
            factor_seen[fi] = true;
            const ZPoly& F = factors_[fi];
            trace += Rat(mult_[i]) * Rat(-F.coeff(F.degree() - 1));
        }
        if (trace != 0) throw std::logic_error("trace of adjacency is nonzero");

        verify_orthogonality();
    }

    // reduce a coefficient-vector polynomial by a monic factor, returning
    // exactly deg(F) coefficients
    static std::vector<Rat> reduced_coords(const QPoly& p, const ZPoly& F) {
        QPoly r = p % QPoly(F);
        std::vector<Rat> c(F.degree(), Rat(0));
        for (int i = 0; i <= r.degree(); ++i) c[i] = r.coeff(i);
        return c;
    }

    void verify_orthogonality() const {
        int d = arr_.D();
        size_t nf = factors_.size();
        // Gram coefficient matrices per factor pair
        for (size_t a = 0; a < nf; ++a) {
            for (size_t b = a; b < nf; ++b) {
                int da = factors_[a].degree(), db = factors_[b].degree();
                std::vector<std::vector<Rat>> G(da, std::vector<Rat>(db, Rat(0)));
                for (int j = 0; j <= d; ++j) {
                    auto ca = reduced_coords(seq_polys_[j], factors_[a]);
                    auto cb = reduced_coords(seq_polys_[j], factors_[b]);
                    Rat kj(arr_.k_i(j));
                    for (int x = 0; x < da; ++x) {
                        if (ca[x] == 0) continue;
                        Rat f = kj * ca[x];
                        for (int y = 0; y < db; ++y) G[x][y] += f * cb[y];
                    }
                }
                if (a != b) {
                    for (auto& row : G)
                        for (auto& v : row)
                            if (v != 0)
                                throw std::logic_error(
                                    "cross-factor orthogonality certificate failed");
                } else if (da >= 2) {
                    // (x - y) * G must vanish mod (F(x), F(y))
                    const ZPoly& F = factors_[a];
                    // x*G: shift row index, reduce x^da via monic F
                    std::vector<std::vector<Rat>> XG(da, std::vector<Rat>(db, Rat(0)));
                    for (int y = 0; y < db; ++y) {
                        for (int x = 0; x < da; ++x) {
                            Rat top = G[da - 1][y];
                            Rat shifted = (x > 0 ? G[x - 1][y] : Rat(0));
                            XG[x][y] = shifted - top * Rat(F.coeff(x));
                        }
                    }
                    std::vector<std::vector<Rat>> YG(da, std::vector<Rat>(db, Rat(0)));
                    for (int x = 0; x < da; ++x) {
                        for (int y = 0; y < db; ++y) {
                            Rat top = G[x][db - 1];
                            Rat shifted = (y > 0 ? G[x][y - 1] : Rat(0));
                            YG[x][y] = shifted - top * Rat(F.coeff(y));
                        }
                    }
                    for (int x = 0; x < da; ++x)
                        for (int y = 0; y < db; ++y)
                            if (XG[x][y] != YG[x][y])
                                throw std::logic_error(
                                    "conjugate-root orthogonality certificate failed");
                }
            }
        }
    }
};

// Standard sequence for an arbitrary claimed eigenvalue, using generic scalar
// arithmetic.  Rejects values that are not eigenvalues of the array.
inline std::vector<Scalar> standard_sequence(const IntersectionArray& arr, const Scalar& theta) {
    ZPoly chi = char_poly_of(arr);
    bool is_eigen;
    if (theta.is_rational()) {
        is_eigen = chi.eval_rat(theta.rat()) == 0;
    } else {
        // theta is an eigenvalue iff its minimal polynomial divides chi
        is_eigen = chi.divide_exact(theta.alg().min_poly()).has_value();
    }
    if (!is_eigen)
        throw std::invalid_argument("standard_sequence: " + theta.str() +
                                    " is not an eigenvalue of " + arr.str());
    int d = arr.D();
    std::vector<Scalar> u(d + 1);
    u[0] = Scalar(1);
    if (d >= 1) u[1] = theta / Scalar(Rat(arr.k()));
    for (int j = 1; j < d; ++j) {
        Scalar num = (theta - Scalar(Rat(arr.a(j)))) * u[j] - Scalar(Rat(arr.c(j))) * u[j - 1];
        u[j + 1] = num / Scalar(Rat(arr.b(j)));
    }
    return u;
}

}  // namespace drg
