#pragma once

// Arithmetic inside a fixed real number field Q[t]/(f), f monic irreducible
// with a distinguished real root.  Elements are reduced polynomials in the
// generator; this keeps long in-field computations (three-term recurrences,
// sums of squares, sign tests) purely rational and avoids round-tripping
// through general algebraic-number arithmetic.
//
// A companion QuadTower is provided for computations that genuinely mix
// several *quadratic* fields (entries of the dual eigenmatrix products):
// elements live in Q(g_1, ..., g_T) with each generator satisfying a monic
// quadratic, stored as coefficient vectors over square-free generator
// products.  Generators whose fields coincide -- including a new quadratic
// lying in the product of two existing ones -- are expressed through the
// existing generators instead of being adjoined, which keeps the basis
// genuinely independent (so zero coefficient vector <=> zero value).

#include "scalar.hpp"

#include <memory>

namespace drg {

namespace detail {

// Solve sum_i x_i * col_i = target over Q; nullopt if inconsistent.
inline std::optional<std::vector<Rat>> solve_linear(const std::vector<std::vector<Rat>>& cols,
                                                    const std::vector<Rat>& target) {
    size_t rows = target.size(), ncols = cols.size();
    for ([[maybe_unused]] auto& c : cols) assert(c.size() == rows);
    // augmented matrix
    std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(ncols + 1));
    for (size_t r = 0; r < rows; ++r) {
        for (size_t c = 0; c < ncols; ++c) m[r][c] = cols[c][r];
        m[r][ncols] = target[r];
    }
    std::vector<int> pivot_of_col(ncols, -1);
    size_t rank = 0;
    for (size_t c = 0; c < ncols && rank < rows; ++c) {
        size_t piv = rank;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[rank]);
        Rat inv = 1 / m[rank][c];
        for (size_t j = c; j <= ncols; ++j) m[rank][j] *= inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            Rat f = m[r][c];
            for (size_t j = c; j <= ncols; ++j) m[r][j] -= f * m[rank][j];
        }
        pivot_of_col[c] = static_cast<int>(rank);
        ++rank;
    }
    for (size_t r = rank; r < rows; ++r)
        if (m[r][ncols] != 0) return std::nullopt;
    // also rows above rank with zero coefficients but nonzero rhs
    for (size_t r = 0; r < rows; ++r) {
        bool allz = true;
        for (size_t c = 0; c < ncols; ++c)
            if (m[r][c] != 0) { allz = false; break; }
        if (allz && m[r][ncols] != 0) return std::nullopt;
    }
    std::vector<Rat> x(ncols, Rat(0));
    for (size_t c = 0; c < ncols; ++c)
        if (pivot_of_col[c] >= 0) x[c] = m[pivot_of_col[c]][ncols];
    return x;
}

// Minimal monic annihilator of an element given coordinate vectors of its
// powers e^0, e^1, ... (as many as the ambient dimension plus one).  Minimal
// polynomials of field elements are irreducible, which downstream code relies
// on.
inline ZPoly min_poly_from_powers(const std::vector<std::vector<Rat>>& powers) {
    for (size_t r = 1; r < powers.size(); ++r) {
        std::vector<std::vector<Rat>> cols(powers.begin(), powers.begin() + r);
        if (auto x = solve_linear(cols, powers[r])) {
            std::vector<Rat> mc(r + 1);
            for (size_t i = 0; i < r; ++i) mc[i] = -(*x)[i];
            mc[r] = 1;
            return QPoly(std::move(mc)).primitivized();
        }
    }
    throw std::logic_error("no power dependency found below ambient dimension");
}

// Interval evaluation of a polynomial at an interval argument (Horner with
// interval multiplication).
inline std::pair<Rat, Rat> interval_eval(const QPoly& p, const Rat& lo, const Rat& hi) {
    Rat alo(0), ahi(0);
    for (int i = p.degree(); i >= 0; --i) {
        // [alo,ahi] * [lo,hi]
        std::array<Rat, 4> c{alo * lo, alo * hi, ahi * lo, ahi * hi};
        Rat mlo = c[0], mhi = c[0];
        for (auto& v : c) {
            if (v < mlo) mlo = v;
            if (v > mhi) mhi = v;
        }
        alo = mlo + p.coeff(i);
        ahi = mhi + p.coeff(i);
    }
    return {alo, ahi};
}

}  // namespace detail

class NumberField {
public:
    using Elem = QPoly;  // reduced: degree < deg(modulus)

    // f: monic irreducible over Q (primitive, positive lead, degree >= 2);
    // (lo, hi) isolates the distinguished real root.
    NumberField(ZPoly f, const Rat& lo, const Rat& hi)
        : f_(std::move(f)), fq_(QPoly(f_)), root_(f_, lo, hi) {
        if (f_.lead() != 1) throw std::invalid_argument("number field modulus must be monic");
    }

    int degree() const { return f_.degree(); }
    const ZPoly& modulus() const { return f_; }
    const AlgebraicReal& generator_root() const { return root_; }

    Elem zero() const { return QPoly(); }
    Elem one() const { return QPoly::constant(Rat(1)); }
    Elem from_rat(const Rat& r) const { return r == 0 ? QPoly() : QPoly::constant(r); }
    Elem gen() const { return QPoly(std::vector<Rat>{Rat(0), Rat(1)}); }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return (a * b) % fq_; }
    Elem mul_rat(const Elem& a, const Rat& r) const { return a * r; }

    Elem inv(const Elem& a) const {
        if (a.is_zero()) throw std::domain_error("inverse of zero field element");
        auto [g, s, t] = QPoly::extended_gcd(a, fq_);
        (void)t;
        if (g.degree() != 0)
            throw std::logic_error("modulus not irreducible: gcd with element is nontrivial");
        return (s * (Rat(1) / g.coeff(0))) % fq_;
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool is_rational(const Elem& a) const { return a.degree() <= 0; }
    Rat rat_value(const Elem& a) const {
        if (!is_rational(a)) throw std::logic_error("field element is not rational");
        return a.is_zero() ? Rat(0) : a.coeff(0);
    }

    // minimal polynomial of a(theta) over Q
    ZPoly elem_min_poly(const Elem& a) const {
        if (is_rational(a)) {
            Rat v = rat_value(a);
            return QPoly(std::vector<Rat>{-v, Rat(1)}).primitivized();
        }
        int d = degree();
        std::vector<std::vector<Rat>> powers;
        Elem p = one();
        for (int j = 0; j <= d; ++j) {
            std::vector<Rat> coords(d);
            for (int i = 0; i < d; ++i) coords[i] = p.coeff(i);
            powers.push_back(std::move(coords));
            p = mul(p, a);
        }
        return detail::min_poly_from_powers(powers);
    }

    // exact sign of a(theta)
    int sign(const Elem& a) const {
        if (a.is_zero()) return 0;
        if (is_rational(a)) return sign_of(a.coeff(0));
        AlgebraicReal g = root_;
        for (;;) {
            auto [lo, hi] = detail::interval_eval(a, g.lo(), g.hi());
            if (lo > 0) return 1;
            if (hi < 0) return -1;
            g = g.refined();  // a(theta) != 0 since a is irrational
        }
    }

    int compare(const Elem& a, const Elem& b) const { return sign(sub(a, b)); }

    Scalar to_scalar(const Elem& a) const {
        if (is_rational(a)) return Scalar(rat_value(a));
        ZPoly mp = elem_min_poly(a);
        SturmChain chain(mp);
        AlgebraicReal g = root_;
        for (;;) {
            auto [lo, hi] = detail::interval_eval(a, g.lo(), g.hi());
            if (lo < hi && chain.count_in(lo, hi) == 1)
                return Scalar(AlgebraicReal(mp, lo, hi));
            g = g.refined();
        }
    }

private:
    ZPoly f_;
    QPoly fq_;
    AlgebraicReal root_;
};

// Field compositum of up to a handful of distinct real quadratic fields.
class QuadTower {
public:
    using Elem = std::vector<Rat>;  // indexed by generator bitmask; size 2^T

    int gens() const { return static_cast<int>(gens_.size()); }
    size_t dim() const { return size_t(1) << gens_.size(); }

    Elem from_rat(const Rat& r) const {
        Elem e(dim(), Rat(0));
        e[0] = r;
        return e;
    }

    // Express a quadratic algebraic real in the tower, adjoining a new
    // generator only when its field is genuinely new.
    Elem adjoin(const AlgebraicReal& a) {
        if (a.degree() != 2) throw std::invalid_argument("QuadTower only absorbs quadratics");
        // monic: t^2 - s t - p
        Rat lead(a.min_poly().coeff(2));
        Rat s = Rat(-a.min_poly().coeff(1)) / lead;
        Rat p = Rat(-a.min_poly().coeff(0)) / lead;
        Rat disc = s * s + 4 * p;  // > 0, not a rational square (a irrational)
        int sigma_a = a.compare(s / 2);  // +1 if a is the larger root

        // try to express sqrt(disc) through products of existing generators
        for (size_t mask = 1; mask < dim(); ++mask) {
            Rat prod_disc(1);
            for (size_t i = 0; i < gens_.size(); ++i)
                if (mask & (size_t(1) << i)) prod_disc *= gens_[i].disc;
            if (auto rho = rat_sqrt_exact(disc / prod_disc)) {
                // sqrt(disc) = rho * prod sqrt(disc_i); and for each i
                // sigma_i * (2 g_i - s_i) = sqrt(disc_i)
                Elem term = from_rat(Rat(*rho) * Rat(sigma_a));
                for (size_t i = 0; i < gens_.size(); ++i)
                    if (mask & (size_t(1) << i)) {
                        Elem factor(dim(), Rat(0));
                        factor[0] = -gens_[i].s * gens_[i].sigma;
                        factor[size_t(1) << i] = Rat(2) * gens_[i].sigma;
                        term = mul(term, factor);
                    }
                // a = s/2 + sigma_a * sqrt(disc)/2
                Elem out = from_rat(s / 2);
                for (size_t m = 0; m < dim(); ++m) out[m] += term[m] / 2;
                return out;
            }
        }
        // new generator
        Gen g;
        g.s = s;
        g.p = p;
        g.disc = disc;
        g.sigma = Rat(sigma_a);
        g.root = std::make_shared<AlgebraicReal>(a);
        gens_.push_back(std::move(g));
        Elem out(dim(), Rat(0));
        out[size_t(1) << (gens_.size() - 1)] = 1;
        return out;
    }

    // widen an element created when the tower was smaller
    Elem widen(const Elem& e) const {
        Elem out(dim(), Rat(0));
        for (size_t m = 0; m < e.size(); ++m) out[m] = e[m];
        return out;
    }

    Elem add(const Elem& a, const Elem& b) const {
        Elem r = widen(a), w = widen(b);
        for (size_t m = 0; m < r.size(); ++m) r[m] += w[m];
        return r;
    }
    Elem sub(const Elem& a, const Elem& b) const {
        Elem r = widen(a), w = widen(b);
        for (size_t m = 0; m < r.size(); ++m) r[m] -= w[m];
        return r;
    }
    Elem mul_rat(const Elem& a, const Rat& r) const {
        Elem out = widen(a);
        for (auto& x : out) x *= r;
        return out;
    }

    Elem mul(const Elem& a, const Elem& b) const {
        Elem av = widen(a), bv = widen(b);
        Elem out(dim(), Rat(0));
        for (size_t u = 0; u < av.size(); ++u) {
            if (av[u] == 0) continue;
            for (size_t v = 0; v < bv.size(); ++v) {
                if (bv[v] == 0) continue;
                // g_i^2 = s_i g_i + p_i on every shared generator
                std::vector<std::pair<size_t, Rat>> terms{{u ^ v, av[u] * bv[v]}};
                size_t common = u & v;
                for (size_t i = 0; i < gens_.size(); ++i) {
                    if (!(common & (size_t(1) << i))) continue;
                    std::vector<std::pair<size_t, Rat>> next;
                    next.reserve(terms.size() * 2);
                    for (auto& [m, c] : terms) {
                        next.emplace_back(m | (size_t(1) << i), c * gens_[i].s);
                        next.emplace_back(m, c * gens_[i].p);
                    }
                    terms = std::move(next);
                }
                for (auto& [m, c] : terms) out[m] += c;
            }
        }
        return out;
    }

    bool is_zero(const Elem& a) const {
        for (auto& x : a)
            if (x != 0) return false;
        return true;
    }
    bool is_rational(const Elem& a) const {
        for (size_t m = 1; m < a.size(); ++m)
            if (a[m] != 0) return false;
        return true;
    }
    Rat rat_value(const Elem& a) const {
        if (!is_rational(a)) throw std::logic_error("tower element is not rational");
        return a.empty() ? Rat(0) : a[0];
    }

    int sign(const Elem& a) const {
        if (is_zero(a)) return 0;
        if (is_rational(a)) return sign_of(a[0]);
        std::vector<AlgebraicReal> ivs;
        ivs.reserve(gens_.size());
        for (auto& g : gens_) ivs.push_back(*g.root);
        for (;;) {
            auto [lo, hi] = enclosure(a, ivs);
            if (lo > 0) return 1;
            if (hi < 0) return -1;
            for (auto& iv : ivs) iv = iv.refined();
        }
    }

    Scalar to_scalar(const Elem& a_in) const {
        Elem a = widen(a_in);
        if (is_rational(a)) return Scalar(rat_value(a));
        std::vector<std::vector<Rat>> powers;
        Elem p = from_rat(Rat(1));
        for (size_t j = 0; j <= dim(); ++j) {
            powers.push_back(p);
            p = mul(p, a);
        }
        ZPoly mp = detail::min_poly_from_powers(powers);
        SturmChain chain(mp);
        std::vector<AlgebraicReal> ivs;
        ivs.reserve(gens_.size());
        for (auto& g : gens_) ivs.push_back(*g.root);
        for (;;) {
            auto [lo, hi] = enclosure(a, ivs);
            if (lo < hi && chain.count_in(lo, hi) == 1) {
                if (mp.degree() == 1) return Scalar(Rat(-mp.coeff(0), mp.coeff(1)));
                return Scalar(AlgebraicReal(mp, lo, hi));
            }
            for (auto& iv : ivs) iv = iv.refined();
        }
    }

private:
    struct Gen {
        Rat s, p;    // g^2 = s g + p
        Rat disc;    // s^2 + 4p
        Rat sigma;   // +1 if g is the larger root of its quadratic
        std::shared_ptr<AlgebraicReal> root;
    };
    std::vector<Gen> gens_;

    std::pair<Rat, Rat> enclosure(const Elem& a, const std::vector<AlgebraicReal>& ivs) const {
        Rat lo(0), hi(0);
        for (size_t m = 0; m < a.size(); ++m) {
            if (a[m] == 0) continue;
            Rat plo = a[m], phi = a[m];
            for (size_t i = 0; i < gens_.size(); ++i) {
                if (!(m & (size_t(1) << i))) continue;
                std::array<Rat, 4> c{plo * ivs[i].lo(), plo * ivs[i].hi(), phi * ivs[i].lo(),
                                     phi * ivs[i].hi()};
                plo = phi = c[0];
                for (auto& v : c) {
                    if (v < plo) plo = v;
                    if (v > phi) phi = v;
                }
            }
            lo += plo;
            hi += phi;
        }
        return {lo, hi};
    }
};

}  // namespace drg
