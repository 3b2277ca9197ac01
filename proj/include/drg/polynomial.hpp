#pragma once

// Dense univariate polynomials over Z and Q: arithmetic, gcd, resultants,
// Sturm chains and real-root isolation.  Coefficients are stored low-to-high
// and kept normalized (no trailing zeros; the zero polynomial has an empty
// coefficient vector).
//
// Degrees stay small here (characteristic polynomials of tridiagonal matrices,
// annihilators of sums/products of their roots), so the quadratic-time
// schoolbook algorithms are the right tool: simple, exact, and fast enough by
// orders of magnitude.

#include "numeric.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

namespace drg {

class QPoly;

class ZPoly {
public:
    ZPoly() = default;
    explicit ZPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }
    ZPoly(std::initializer_list<long long> coeffs) {
        for (long long v : coeffs) c_.emplace_back(v);
        trim();
    }

    static ZPoly zero() { return ZPoly(); }
    static ZPoly constant(BigInt v) { return ZPoly(std::vector<BigInt>{std::move(v)}); }
    // t^n with unit coefficient
    static ZPoly monomial(int n, BigInt coeff = BigInt(1)) {
        std::vector<BigInt> c(n + 1);
        c[n] = std::move(coeff);
        return ZPoly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const BigInt& lead() const {
        assert(!c_.empty());
        return c_.back();
    }
    BigInt coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return BigInt(0);
        return c_[i];
    }
    const std::vector<BigInt>& coeffs() const { return c_; }

    bool operator==(const ZPoly& o) const { return c_ == o.c_; }
    bool operator!=(const ZPoly& o) const { return !(*this == o); }

    ZPoly operator-() const {
        auto c = c_;
        for (auto& x : c) x = -x;
        return ZPoly(std::move(c));
    }

    ZPoly operator+(const ZPoly& o) const {
        std::vector<BigInt> c(std::max(c_.size(), o.c_.size()));
        for (size_t i = 0; i < c.size(); ++i) {
            if (i < c_.size()) c[i] += c_[i];
            if (i < o.c_.size()) c[i] += o.c_[i];
        }
        return ZPoly(std::move(c));
    }
    ZPoly operator-(const ZPoly& o) const { return *this + (-o); }

    ZPoly operator*(const ZPoly& o) const {
        if (is_zero() || o.is_zero()) return ZPoly();
        std::vector<BigInt> c(c_.size() + o.c_.size() - 1);
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < o.c_.size(); ++j)
                c[i + j] += c_[i] * o.c_[j];
        return ZPoly(std::move(c));
    }

    ZPoly operator*(const BigInt& s) const {
        auto c = c_;
        for (auto& x : c) x *= s;
        return ZPoly(std::move(c));
    }

    template <class T>
    T eval(const T& x) const {
        T acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + T(*it);
        return acc;
    }
    BigInt eval_int(const BigInt& x) const { return eval<BigInt>(x); }
    Rat eval_rat(const Rat& x) const { return eval<Rat>(x); }

    ZPoly derivative() const {
        if (degree() < 1) return ZPoly();
        std::vector<BigInt> c(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * BigInt(i);
        return ZPoly(std::move(c));
    }

    // gcd of coefficients, always >= 0 (0 for the zero polynomial)
    BigInt content() const {
        BigInt g = 0;
        for (auto& x : c_) {
            g = gcd(g, x);
            if (g == 1) break;
        }
        return g;
    }

    // content removed, sign of the leading coefficient preserved
    ZPoly primitive_part() const {
        if (is_zero()) return ZPoly();
        BigInt g = content();
        auto c = c_;
        for (auto& x : c) x /= g;
        return ZPoly(std::move(c));
    }

    // content removed *and* leading coefficient made positive: the canonical
    // representative used for minimal polynomials
    ZPoly primitive_positive() const {
        ZPoly p = primitive_part();
        if (!p.is_zero() && p.lead() < 0) p = -p;
        return p;
    }

    // f(-t), primitive sign intact
    ZPoly reflect() const {
        auto c = c_;
        for (size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
        return ZPoly(std::move(c));
    }

    // t^deg * f(1/t): the reversal used for minimal polynomials of reciprocals.
    // Requires f(0) != 0 so the degree is preserved.
    ZPoly reverse() const {
        assert(!is_zero() && c_.front() != 0);
        auto c = c_;
        std::reverse(c.begin(), c.end());
        return ZPoly(std::move(c));
    }

    // Exact division: returns quotient iff divisor divides this over Z.
    std::optional<ZPoly> divide_exact(const ZPoly& d) const;

    std::string str(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            const BigInt& a = c_[i];
            if (a == 0) continue;
            if (!out.empty()) out += (a > 0) ? " + " : " - ";
            else if (a < 0) out += "-";
            BigInt m = abs(a);
            bool unit = (m == 1) && i > 0;
            if (!unit) out += m.str();
            if (i > 0) {
                if (!unit) out += "*";
                out += var;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    std::vector<BigInt> c_;
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
};

class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    explicit QPoly(const ZPoly& z) {
        c_.reserve(z.coeffs().size());
        for (auto& x : z.coeffs()) c_.emplace_back(x);
        trim();
    }
    static QPoly constant(Rat v) { return QPoly(std::vector<Rat>{std::move(v)}); }
    static QPoly monomial(int n, Rat coeff = Rat(1)) {
        std::vector<Rat> c(n + 1);
        c[n] = std::move(coeff);
        return QPoly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Rat& lead() const {
        assert(!c_.empty());
        return c_.back();
    }
    Rat coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return Rat(0);
        return c_[i];
    }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool operator==(const QPoly& o) const { return c_ == o.c_; }
    bool operator!=(const QPoly& o) const { return !(*this == o); }

    QPoly operator-() const {
        auto c = c_;
        for (auto& x : c) x = -x;
        return QPoly(std::move(c));
    }
    QPoly operator+(const QPoly& o) const {
        std::vector<Rat> c(std::max(c_.size(), o.c_.size()));
        for (size_t i = 0; i < c.size(); ++i) {
            if (i < c_.size()) c[i] += c_[i];
            if (i < o.c_.size()) c[i] += o.c_[i];
        }
        return QPoly(std::move(c));
    }
    QPoly operator-(const QPoly& o) const { return *this + (-o); }
    QPoly operator*(const QPoly& o) const {
        if (is_zero() || o.is_zero()) return QPoly();
        std::vector<Rat> c(c_.size() + o.c_.size() - 1);
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < o.c_.size(); ++j)
                c[i + j] += c_[i] * o.c_[j];
        return QPoly(std::move(c));
    }
    QPoly operator*(const Rat& s) const {
        if (s == 0) return QPoly();
        auto c = c_;
        for (auto& x : c) x *= s;
        return QPoly(std::move(c));
    }

    Rat eval(const Rat& x) const {
        Rat acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    QPoly derivative() const {
        if (degree() < 1) return QPoly();
        std::vector<Rat> c(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rat(BigInt(i));
        return QPoly(std::move(c));
    }

    QPoly monic() const {
        assert(!is_zero());
        return *this * (Rat(1) / lead());
    }

    // Polynomial division with remainder; divisor nonzero.
    std::pair<QPoly, QPoly> divmod(const QPoly& d) const {
        assert(!d.is_zero());
        QPoly rem = *this;
        std::vector<Rat> quo(std::max(0, degree() - d.degree() + 1));
        while (!rem.is_zero() && rem.degree() >= d.degree()) {
            int shift = rem.degree() - d.degree();
            Rat factor = rem.lead() / d.lead();
            quo[shift] = factor;
            // rem -= factor * t^shift * d
            std::vector<Rat> rc = rem.c_;
            for (int i = 0; i <= d.degree(); ++i) rc[i + shift] -= factor * d.c_[i];
            rc.resize(rem.degree());  // leading term cancels by construction
            rem = QPoly(std::move(rc));
        }
        return {QPoly(std::move(quo)), rem};
    }

    QPoly operator%(const QPoly& d) const { return divmod(d).second; }
    QPoly operator/(const QPoly& d) const { return divmod(d).first; }

    // Monic gcd via the Euclidean algorithm.
    static QPoly gcd(QPoly a, QPoly b) {
        while (!b.is_zero()) {
            QPoly r = a % b;
            a = std::move(b);
            b = std::move(r);
        }
        if (a.is_zero()) return a;
        return a.monic();
    }

    // Extended Euclid: returns (g, s, t) monic g with s*a + t*b = g.
    static std::tuple<QPoly, QPoly, QPoly> extended_gcd(const QPoly& a, const QPoly& b) {
        QPoly r0 = a, r1 = b;
        QPoly s0 = QPoly::constant(Rat(1)), s1;
        QPoly t0, t1 = QPoly::constant(Rat(1));
        while (!r1.is_zero()) {
            auto [q, r] = r0.divmod(r1);
            r0 = std::exchange(r1, r);
            QPoly s2 = s0 - q * s1;
            s0 = std::exchange(s1, s2);
            QPoly t2 = t0 - q * t1;
            t0 = std::exchange(t1, t2);
        }
        if (r0.is_zero()) return {r0, s0, t0};
        Rat inv = Rat(1) / r0.lead();
        return {r0 * inv, s0 * inv, t0 * inv};
    }

    // f(a*t + b), computed by Horner over Q.
    QPoly compose_linear(const Rat& a, const Rat& b) const {
        QPoly lin(std::vector<Rat>{b, a});
        QPoly acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + QPoly::constant(*it);
        return acc;
    }

    // Clears denominators and the content: the primitive integer polynomial
    // with positive leading coefficient sharing this polynomial's roots.
    ZPoly primitivized() const {
        if (is_zero()) return ZPoly();
        BigInt l = 1;
        for (auto& x : c_) l = lcm(l, denominator(x));
        std::vector<BigInt> zc;
        zc.reserve(c_.size());
        for (auto& x : c_) zc.push_back(numerator(x) * (l / denominator(x)));
        return ZPoly(std::move(zc)).primitive_positive();
    }

    std::string str(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            const Rat& a = c_[i];
            if (a == 0) continue;
            if (!out.empty()) out += (a > 0) ? " + " : " - ";
            else if (a < 0) out += "-";
            Rat m = abs(a);
            bool unit = (m == 1) && i > 0;
            if (!unit) out += to_string(m);
            if (i > 0) {
                if (!unit) out += "*";
                out += var;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    std::vector<Rat> c_;
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
};

inline std::optional<ZPoly> ZPoly::divide_exact(const ZPoly& d) const {
    if (d.is_zero()) return std::nullopt;
    if (is_zero()) return ZPoly();
    auto [q, r] = QPoly(*this).divmod(QPoly(d));
    if (!r.is_zero()) return std::nullopt;
    std::vector<BigInt> zc;
    zc.reserve(q.coeffs().size());
    for (auto& x : q.coeffs()) {
        if (!is_integer(x)) return std::nullopt;
        zc.push_back(numerator(x));
    }
    return ZPoly(std::move(zc));
}

// gcd over Z via the primitive polynomial remainder sequence.  Result is
// primitive with positive leading coefficient (or the rational-content gcd for
// constant inputs).
inline ZPoly zpoly_gcd(ZPoly a, ZPoly b) {
    if (a.is_zero()) return (b.is_zero() || b.lead() > 0) ? b : -b;
    if (b.is_zero()) return a.lead() > 0 ? a : -a;
    BigInt ca = a.content(), cb = b.content();
    BigInt cg = gcd(ca, cb);
    a = a.primitive_part();
    b = b.primitive_part();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        QPoly r = QPoly(a) % QPoly(b);
        a = std::exchange(b, r.primitivized());
    }
    ZPoly g = a.primitive_positive();
    return g * cg;
}

inline ZPoly zpoly_squarefree_part(const ZPoly& f) {
    if (f.degree() < 1) return f.primitive_positive();
    ZPoly g = zpoly_gcd(f, f.derivative());
    if (g.degree() == 0) return f.primitive_positive();
    auto q = f.divide_exact(g);
    // primitive PRS gcd divides f up to content only; fall back through Q
    if (!q) {
        auto qq = QPoly(f).divmod(QPoly(g)).first;
        return qq.primitivized();
    }
    return q->primitive_positive();
}

// Resultant of f and g via fraction-free (Bareiss) elimination of the
// Sylvester matrix.  Exact over Z; cubic in the matrix dimension, which is
// deg f + deg g and small throughout this codebase.
inline BigInt resultant(const ZPoly& f, const ZPoly& g) {
    if (f.is_zero() || g.is_zero()) return 0;
    int m = f.degree(), n = g.degree();
    if (m == 0 && n == 0) return 1;
    if (m == 0) return boost::multiprecision::pow(f.lead(), n);
    if (n == 0) return boost::multiprecision::pow(g.lead(), m);
    int N = m + n;
    std::vector<std::vector<BigInt>> a(N, std::vector<BigInt>(N));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) a[r][r + i] = f.coeff(m - i);
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) a[n + r][r + i] = g.coeff(n - i);
    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k < N - 1; ++k) {
        if (a[k][k] == 0) {
            int piv = -1;
            for (int i = k + 1; i < N; ++i)
                if (a[i][k] != 0) { piv = i; break; }
            if (piv < 0) return 0;
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < N; ++i) {
            for (int j = k + 1; j < N; ++j) {
                BigInt num = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                a[i][j] = num / prev;  // divides exactly (Bareiss)
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign > 0 ? a[N - 1][N - 1] : -a[N - 1][N - 1];
}

// All real roots lie in (-bound, bound): Cauchy's bound 1 + max|c_i|/|lead|.
inline Rat cauchy_root_bound(const ZPoly& f) {
    assert(!f.is_zero());
    BigInt mx = 0;
    for (int i = 0; i < f.degree(); ++i) {
        BigInt a = abs(f.coeff(i));
        if (a > mx) mx = a;
    }
    return Rat(1) + Rat(mx, abs(f.lead()));
}

// Sturm chain of a squarefree polynomial; counts real roots in half-open
// intervals (a, b] by sign-variation differences.
class SturmChain {
public:
    explicit SturmChain(const ZPoly& f) {
        ZPoly p0 = f.primitive_part();
        chain_.push_back(p0);
        ZPoly p1 = f.derivative().primitive_part();
        if (!p1.is_zero()) chain_.push_back(p1);
        while (chain_.size() >= 2 && !chain_.back().is_zero() && chain_.back().degree() > 0) {
            QPoly r = QPoly(chain_[chain_.size() - 2]) % QPoly(chain_.back());
            if (r.is_zero()) break;
            QPoly s = -r;
            // strip denominators/content by a *positive* factor only, so the
            // sign pattern at any evaluation point is preserved
            ZPoly next = s.primitivized();  // positive leading coefficient
            if (s.lead() < 0) next = -next;
            chain_.push_back(next);
        }
    }

    int variations_at(const Rat& x) const {
        int var = 0, prev = 0;
        for (auto& p : chain_) {
            int s = sign_of(p.eval_rat(x));
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++var;
            prev = s;
        }
        return var;
    }

    int variations_at_pos_inf() const {
        int var = 0, prev = 0;
        for (auto& p : chain_) {
            int s = sign_of(p.lead());
            if (prev != 0 && s != prev) ++var;
            prev = s;
        }
        return var;
    }

    int variations_at_neg_inf() const {
        int var = 0, prev = 0;
        for (auto& p : chain_) {
            int s = sign_of(p.lead()) * (p.degree() % 2 == 0 ? 1 : -1);
            if (prev != 0 && s != prev) ++var;
            prev = s;
        }
        return var;
    }

    // number of distinct real roots in (a, b]
    int count_in(const Rat& a, const Rat& b) const {
        assert(a <= b);
        return variations_at(a) - variations_at(b);
    }

    int count_all() const { return variations_at_neg_inf() - variations_at_pos_inf(); }

private:
    std::vector<ZPoly> chain_;
};

// Isolating intervals for every real root of a squarefree polynomial, in
// ascending order.  Intervals are half-open (lo, hi]; when the input has no
// rational roots (the only way this is used on irreducible factors of degree
// >= 2) no endpoint is a root, so they serve as open isolating intervals.
inline std::vector<std::pair<Rat, Rat>> isolate_real_roots(const ZPoly& f) {
    assert(f.degree() >= 1);
    SturmChain chain(f);
    Rat bound = cauchy_root_bound(f);
    std::vector<std::pair<Rat, Rat>> out;
    std::vector<std::pair<Rat, Rat>> stack{{-bound, bound}};
    while (!stack.empty()) {
        auto [lo, hi] = stack.back();
        stack.pop_back();
        int cnt = chain.count_in(lo, hi);
        if (cnt == 0) continue;
        if (cnt == 1) {
            out.emplace_back(lo, hi);
            continue;
        }
        Rat mid = (lo + hi) / 2;
        stack.emplace_back(mid, hi);
        stack.emplace_back(lo, mid);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

}  // namespace drg
