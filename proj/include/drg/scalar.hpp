#pragma once

// Scalar: an exact real number that is either rational or algebraic.  All
// arithmetic is closed over this type and all comparisons are decided, never
// approximated.
//
// Mixed rational/algebraic operations use minimal-polynomial transforms
// (shift, scale, reflect, reverse).  Algebraic x algebraic operations go
// through an annihilator computed as a resultant -- evaluated by interpolation
// so only univariate integer resultants are ever needed -- followed by
// factoring the annihilator and locating the one factor whose root lies in an
// interval enclosure of the true result.  The enclosure is refinable without
// bound, and distinct algebraic numbers separate, so the selection loop
// terminates.

#include "algebraic.hpp"
#include "factorization.hpp"

#include <variant>

namespace drg {

namespace detail {

// Newton interpolation through integer sample points.
inline QPoly interpolate(const std::vector<BigInt>& xs, const std::vector<BigInt>& ys) {
    size_t n = xs.size();
    std::vector<Rat> dd(n);
    for (size_t i = 0; i < n; ++i) dd[i] = Rat(ys[i]);
    for (size_t j = 1; j < n; ++j)
        for (size_t i = n - 1; i >= j; --i)
            dd[i] = (dd[i] - dd[i - 1]) / Rat(xs[i] - xs[i - j]);
    QPoly p = QPoly::constant(dd[n - 1]);
    for (size_t i = n - 1; i-- > 0;) {
        QPoly lin(std::vector<Rat>{Rat(-xs[i]), Rat(1)});
        p = p * lin + QPoly::constant(dd[i]);
    }
    return p;
}

inline std::vector<BigInt> sample_points(int count) {
    std::vector<BigInt> xs(count);
    for (int i = 0; i < count; ++i) xs[i] = (i % 2 == 0) ? BigInt(i / 2) : BigInt(-(i / 2) - 1);
    return xs;
}

// Annihilator of alpha + beta: Res_t(f(t), g(z - t)) as a polynomial in z.
inline ZPoly annihilator_sum(const ZPoly& f, const ZPoly& g) {
    int N = f.degree() * g.degree();
    auto xs = sample_points(N + 1);
    std::vector<BigInt> ys(xs.size());
    for (size_t i = 0; i < xs.size(); ++i) {
        // g(z - t) at integer z has integer coefficients; no rescaling allowed
        // here or the samples would be inconsistent
        QPoly q = QPoly(g).compose_linear(Rat(-1), Rat(xs[i]));
        std::vector<BigInt> c(q.degree() + 1);
        for (int j = 0; j <= q.degree(); ++j) {
            assert(is_integer(q.coeff(j)));
            c[j] = numerator(q.coeff(j));
        }
        ys[i] = resultant(f, ZPoly(std::move(c)));
    }
    return interpolate(xs, ys).primitivized();
}

// Annihilator of alpha * beta: Res_t(f(t), sum_j g_j z^j t^(n-j)).
inline ZPoly annihilator_product(const ZPoly& f, const ZPoly& g) {
    int n = g.degree();
    int N = f.degree() * n;
    auto xs = sample_points(N + 1);
    std::vector<BigInt> ys(xs.size());
    for (size_t i = 0; i < xs.size(); ++i) {
        std::vector<BigInt> c(n + 1);
        BigInt zp = 1;
        for (int j = 0; j <= n; ++j) {
            c[n - j] += g.coeff(j) * zp;
            zp *= xs[i];
        }
        ys[i] = resultant(f, ZPoly(std::move(c)));
    }
    return interpolate(xs, ys).primitivized();
}

}  // namespace detail

class Scalar {
public:
    Scalar() : v_(Rat(0)) {}
    Scalar(Rat r) : v_(std::move(r)) {}
    Scalar(AlgebraicReal a) : v_(std::move(a)) {}
    Scalar(int n) : v_(Rat(n)) {}
    Scalar(const BigInt& n) : v_(Rat(n)) {}

    bool is_rational() const { return std::holds_alternative<Rat>(v_); }
    const Rat& rat() const {
        if (!is_rational()) throw std::logic_error("scalar is not rational: " + str());
        return std::get<Rat>(v_);
    }
    const AlgebraicReal& alg() const {
        assert(!is_rational());
        return std::get<AlgebraicReal>(v_);
    }

    bool is_zero() const { return is_rational() && rat() == 0; }
    int sign() const { return is_rational() ? sign_of(rat()) : alg().sign(); }

    Scalar operator-() const {
        if (is_rational()) return Scalar(-rat());
        return Scalar(alg().negated());
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        if (a.is_rational() && b.is_rational()) return Scalar(a.rat() + b.rat());
        if (a.is_rational()) return Scalar(b.alg().shifted(a.rat()));
        if (b.is_rational()) return Scalar(a.alg().shifted(b.rat()));
        return add_algebraic(a.alg(), b.alg());
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        if (a.is_rational() && b.is_rational()) return Scalar(a.rat() * b.rat());
        if (a.is_rational()) return a.rat() == 0 ? Scalar() : Scalar(b.alg().scaled(a.rat()));
        if (b.is_rational()) return b.rat() == 0 ? Scalar() : Scalar(a.alg().scaled(b.rat()));
        return mul_algebraic(a.alg(), b.alg());
    }

    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        if (b.is_zero()) throw std::domain_error("division of scalar by zero");
        if (b.is_rational()) return a * Scalar(1 / b.rat());
        if (a.is_zero()) return Scalar();
        return a * Scalar(b.alg().inverted());
    }

    // total order; 0 means equal as real numbers
    int compare(const Scalar& o) const {
        if (is_rational() && o.is_rational()) {
            Rat d = rat() - o.rat();
            return sign_of(d);
        }
        if (is_rational()) return -o.alg().compare(rat());
        if (o.is_rational()) return alg().compare(o.rat());
        return alg().compare(o.alg());
    }
    bool operator==(const Scalar& o) const { return compare(o) == 0; }
    bool operator!=(const Scalar& o) const { return compare(o) != 0; }
    bool operator<(const Scalar& o) const { return compare(o) < 0; }
    bool operator<=(const Scalar& o) const { return compare(o) <= 0; }
    bool operator>(const Scalar& o) const { return compare(o) > 0; }
    bool operator>=(const Scalar& o) const { return compare(o) >= 0; }

    double approx() const {
        return is_rational() ? rat().convert_to<double>() : alg().approx();
    }

    std::string str() const {
        if (is_rational()) return to_string(rat());
        return alg().str();
    }

private:
    std::variant<Rat, AlgebraicReal> v_;

    template <class Enclosure>
    static Scalar select_root(const ZPoly& annihilator, AlgebraicReal a, AlgebraicReal b,
                              Enclosure enclosure) {
        ZPoly sf = zpoly_squarefree_part(annihilator);
        auto factors = factor_squarefree_primitive(sf);
        std::vector<SturmChain> chains;
        chains.reserve(factors.size());
        for (auto& F : factors) chains.emplace_back(F);
        for (;;) {
            auto [lo, hi] = enclosure(a, b);
            int total = 0, which = -1;
            for (size_t i = 0; i < factors.size(); ++i) {
                int cnt = chains[i].count_in(lo, hi);
                total += cnt;
                if (cnt >= 1) which = static_cast<int>(i);
            }
            // the true result lies strictly inside the enclosure and is a root
            // of some factor, so total >= 1 always; shrink until unambiguous
            if (total == 1) {
                const ZPoly& F = factors[which];
                if (F.degree() == 1) return Scalar(Rat(-F.coeff(0), F.coeff(1)));
                return Scalar(AlgebraicReal(F, lo, hi));
            }
            a = a.refined();
            b = b.refined();
        }
    }

    static Scalar add_algebraic(const AlgebraicReal& a, const AlgebraicReal& b) {
        ZPoly ann = detail::annihilator_sum(a.min_poly(), b.min_poly());
        return select_root(ann, a, b, [](const AlgebraicReal& x, const AlgebraicReal& y) {
            return std::pair<Rat, Rat>{x.lo() + y.lo(), x.hi() + y.hi()};
        });
    }

    static Scalar mul_algebraic(const AlgebraicReal& a, const AlgebraicReal& b) {
        ZPoly ann = detail::annihilator_product(a.min_poly(), b.min_poly());
        return select_root(ann, a, b, [](const AlgebraicReal& x, const AlgebraicReal& y) {
            std::array<Rat, 4> c{x.lo() * y.lo(), x.lo() * y.hi(), x.hi() * y.lo(),
                                 x.hi() * y.hi()};
            return std::pair<Rat, Rat>{*std::min_element(c.begin(), c.end()),
                                       *std::max_element(c.begin(), c.end())};
        });
    }
};

// All real roots of p, each exact, in strictly decreasing order.  Repeated
// roots are reported once.
inline std::vector<Scalar> real_roots(const ZPoly& p) {
    if (p.is_zero()) throw std::domain_error("real_roots: zero polynomial");
    if (p.degree() == 0) return {};
    std::vector<Scalar> out;
    for (auto& [F, mult] : factor(p).factors) {
        (void)mult;
        if (F.degree() == 1) {
            out.emplace_back(Rat(-F.coeff(0), F.coeff(1)));
        } else {
            for (auto& [lo, hi] : isolate_real_roots(F)) out.emplace_back(AlgebraicReal(F, lo, hi));
        }
    }
    std::sort(out.begin(), out.end(), [](const Scalar& a, const Scalar& b) { return a > b; });
    return out;
}

inline std::vector<Scalar> real_roots(const QPoly& p) {
    if (p.is_zero()) throw std::domain_error("real_roots: zero polynomial");
    if (p.degree() == 0) return {};
    return real_roots(p.primitivized());
}

}  // namespace drg
