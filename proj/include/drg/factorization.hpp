#pragma once

// Factorization of integer polynomials into irreducibles: factor mod a small
// prime (distinct-degree + equal-degree splitting), Hensel-lift the modular
// factors past the coefficient bound, then recombine subsets.  Degrees in this
// codebase stay in the low tens, so the classical Zassenhaus recombination is
// comfortable; the subset loop is capped defensively all the same.

#include "polynomial.hpp"

#include <array>
#include <cstdint>
#include <random>

namespace drg {

namespace fppoly {

// F_p[x] with p an odd prime below 2^31; coefficients in [0, p).
using P = std::vector<std::uint64_t>;

inline void trim(P& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}
inline int deg(const P& a) { return static_cast<int>(a.size()) - 1; }

inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    // extended Euclid; a != 0 mod p
    std::int64_t t = 0, nt = 1, r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a % p);
    while (nr != 0) {
        std::int64_t q = r / nr;
        t = std::exchange(nt, t - q * nt);
        r = std::exchange(nr, r - q * nr);
    }
    assert(r == 1);
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

inline P add(const P& a, const P& b, std::uint64_t p) {
    P c(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) {
        std::uint64_t v = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
        c[i] = v >= p ? v - p : v;
    }
    trim(c);
    return c;
}

inline P sub(const P& a, const P& b, std::uint64_t p) {
    P c(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) {
        std::uint64_t av = i < a.size() ? a[i] : 0, bv = i < b.size() ? b[i] : 0;
        c[i] = av >= bv ? av - bv : av + p - bv;
    }
    trim(c);
    return c;
}

inline P mul(const P& a, const P& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    P c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    trim(c);
    return c;
}

inline P scale(P a, std::uint64_t s, std::uint64_t p) {
    for (auto& x : a) x = x * (s % p) % p;
    trim(a);
    return a;
}

inline P monic(const P& a, std::uint64_t p) {
    assert(!a.empty());
    return scale(a, inv_mod(a.back(), p), p);
}

inline std::pair<P, P> divmod(const P& a, const P& b, std::uint64_t p) {
    assert(!b.empty());
    P rem = a, quo;
    if (deg(a) >= deg(b)) quo.assign(deg(a) - deg(b) + 1, 0);
    std::uint64_t binv = inv_mod(b.back(), p);
    while (deg(rem) >= deg(b)) {
        int shift = deg(rem) - deg(b);
        std::uint64_t f = rem.back() * binv % p;
        quo[shift] = f;
        for (size_t i = 0; i < b.size(); ++i) {
            std::uint64_t sub_v = f * b[i] % p;
            std::uint64_t& slot = rem[i + shift];
            slot = slot >= sub_v ? slot - sub_v : slot + p - sub_v;
        }
        trim(rem);
    }
    trim(quo);
    return {quo, rem};
}

inline P gcd(P a, P b, std::uint64_t p) {
    while (!b.empty()) {
        P r = divmod(a, b, p).second;
        a = std::exchange(b, r);
    }
    if (a.empty()) return a;
    return monic(a, p);
}

inline P mulmod(const P& a, const P& b, const P& f, std::uint64_t p) {
    return divmod(mul(a, b, p), f, p).second;
}

inline P powmod(P base, BigInt e, const P& f, std::uint64_t p) {
    P result{1};
    base = divmod(base, f, p).second;
    while (e > 0) {
        if ((e & 1) != 0) result = mulmod(result, base, f, p);
        base = mulmod(base, base, f, p);
        e >>= 1;
    }
    return result;
}

inline P derivative(const P& a, std::uint64_t p) {
    if (deg(a) < 1) return {};
    P d(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) d[i - 1] = a[i] * (i % p) % p;
    trim(d);
    return d;
}

// Distinct-degree stage: splits monic squarefree f into (product, degree)
// pairs where each product is a product of irreducibles of that degree.
inline std::vector<std::pair<P, int>> distinct_degree(P f, std::uint64_t p) {
    std::vector<std::pair<P, int>> out;
    P x{0, 1};
    P w = divmod(x, f, p).second;
    int i = 0;
    while (deg(f) >= 2 * (i + 1)) {
        ++i;
        w = powmod(w, BigInt(p), f, p);
        P g = gcd(sub(w, x, p), f, p);
        if (deg(g) > 0) {
            out.emplace_back(g, i);
            f = divmod(f, g, p).first;
            w = divmod(w, f, p).second;
        }
    }
    if (deg(f) > 0) out.emplace_back(f, deg(f));
    return out;
}

// Cantor--Zassenhaus equal-degree splitting for odd p.
inline void equal_degree(const P& f, int d, std::uint64_t p, std::mt19937_64& rng,
                         std::vector<P>& out) {
    if (deg(f) == d) {
        out.push_back(monic(f, p));
        return;
    }
    BigInt e = (boost::multiprecision::pow(BigInt(p), d) - 1) / 2;
    for (;;) {
        P a(deg(f));
        for (auto& x : a) x = rng() % p;
        trim(a);
        if (deg(a) < 1) continue;
        P g = gcd(a, f, p);
        if (deg(g) == 0) {
            P b = powmod(a, e, f, p);
            g = gcd(sub(b, P{1}, p), f, p);
        }
        if (deg(g) > 0 && deg(g) < deg(f)) {
            equal_degree(g, d, p, rng, out);
            equal_degree(divmod(f, g, p).first, d, p, rng, out);
            return;
        }
    }
}

inline std::vector<P> factor_monic_squarefree(const P& f, std::uint64_t p, std::mt19937_64& rng) {
    std::vector<P> out;
    for (auto& [prod, d] : distinct_degree(f, p)) equal_degree(prod, d, p, rng, out);
    return out;
}

}  // namespace fppoly

namespace hensel {

// Polynomials over Z/m with coefficients reduced into [0, m).
using M = std::vector<BigInt>;

inline void trim(M& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}
inline int deg(const M& a) { return static_cast<int>(a.size()) - 1; }

inline BigInt reduce(BigInt x, const BigInt& m) {
    x %= m;
    if (x < 0) x += m;
    return x;
}

inline M reduce_poly(const std::vector<BigInt>& a, const BigInt& m) {
    M c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = reduce(a[i], m);
    trim(c);
    return c;
}

inline M add(const M& a, const M& b, const BigInt& m) {
    M c(std::max(a.size(), b.size()));
    for (size_t i = 0; i < c.size(); ++i) {
        BigInt v = (i < a.size() ? a[i] : BigInt(0)) + (i < b.size() ? b[i] : BigInt(0));
        if (v >= m) v -= m;
        c[i] = std::move(v);
    }
    trim(c);
    return c;
}

inline M sub(const M& a, const M& b, const BigInt& m) {
    M c(std::max(a.size(), b.size()));
    for (size_t i = 0; i < c.size(); ++i) {
        BigInt av = i < a.size() ? a[i] : BigInt(0), bv = i < b.size() ? b[i] : BigInt(0);
        if (av >= bv)
            c[i] = av - bv;
        else
            c[i] = av + m - bv;
    }
    trim(c);
    return c;
}

inline M mul(const M& a, const M& b, const BigInt& m) {
    if (a.empty() || b.empty()) return {};
    M c(a.size() + b.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % m;
    }
    trim(c);
    return c;
}

// Division by a *monic* divisor; valid over any Z/m.
inline std::pair<M, M> divmod_monic(const M& a, const M& h, const BigInt& m) {
    assert(!h.empty() && h.back() == 1);
    M rem = a, quo;
    if (deg(a) >= deg(h)) quo.assign(deg(a) - deg(h) + 1, BigInt(0));
    while (deg(rem) >= deg(h)) {
        int shift = deg(rem) - deg(h);
        BigInt f = rem.back();
        quo[shift] = f;
        for (size_t i = 0; i < h.size(); ++i) {
            BigInt v = rem[i + shift] - f * h[i] % m;
            if (v < 0) v += m;
            rem[i + shift] = v;
        }
        trim(rem);
    }
    trim(quo);
    return {quo, rem};
}

// One quadratic lifting step (modulus m -> m^2) for a factorization
// f = g*h (mod m) with Bezout data s*g + t*h = 1 (mod m), h monic.
struct Pair {
    M g, h, s, t;
};

inline Pair step(const std::vector<BigInt>& f, const Pair& in, const BigInt& m) {
    BigInt m2 = m * m;
    M g = reduce_poly(in.g, m2), h = reduce_poly(in.h, m2);
    M s = reduce_poly(in.s, m2), t = reduce_poly(in.t, m2);
    M fm = reduce_poly(f, m2);
    M e = sub(fm, mul(g, h, m2), m2);
    auto [q, r] = divmod_monic(mul(s, e, m2), h, m2);
    M g1 = add(g, add(mul(t, e, m2), mul(q, g, m2), m2), m2);
    M h1 = add(h, r, m2);
    M b = sub(add(mul(s, g1, m2), mul(t, h1, m2), m2), M{1}, m2);
    auto [c, d] = divmod_monic(mul(s, b, m2), h1, m2);
    M s1 = sub(s, d, m2);
    M t1 = sub(t, add(mul(t, b, m2), mul(c, g1, m2), m2), m2);
    return {g1, h1, s1, t1};
}

}  // namespace hensel

namespace detail {

inline std::vector<std::uint64_t> small_primes_from(int count) {
    std::vector<std::uint64_t> primes;
    for (std::uint64_t n = 3; static_cast<int>(primes.size()) < count; n += 2) {
        bool ok = true;
        for (std::uint64_t d = 3; d * d <= n; d += 2)
            if (n % d == 0) { ok = false; break; }
        if (ok) primes.push_back(n);
    }
    return primes;
}

// Lifts the monic mod-p factors of f to monic factors mod target (a power of
// p), splitting the factor list in halves and lifting each product pair.
inline void lift_tree(const std::vector<BigInt>& f_coeffs, const std::vector<fppoly::P>& parts,
                      std::uint64_t p, const BigInt& target, std::vector<hensel::M>& out) {
    using namespace hensel;
    if (parts.size() == 1) {
        // f itself is congruent to lc * (the single factor); monicize
        M fm = reduce_poly(f_coeffs, target);
        assert(!fm.empty());
        BigInt lc = fm.back();
        // lc is invertible mod target (p does not divide the leading coeff)
        BigInt lc_inv;
        {
            BigInt t0 = 0, t1 = 1, r0 = target, r1 = lc % target;
            while (r1 != 0) {
                BigInt q = r0 / r1;
                BigInt tmp = t0 - q * t1;
                t0 = std::exchange(t1, tmp);
                tmp = r0 - q * r1;
                r0 = std::exchange(r1, tmp);
            }
            assert(r0 == 1);
            lc_inv = reduce(t0, target);
        }
        M monic_f(fm.size());
        for (size_t i = 0; i < fm.size(); ++i) monic_f[i] = fm[i] * lc_inv % target;
        trim(monic_f);
        out.push_back(std::move(monic_f));
        return;
    }
    size_t half = parts.size() / 2;
    std::vector<fppoly::P> left(parts.begin(), parts.begin() + half);
    std::vector<fppoly::P> right(parts.begin() + half, parts.end());
    fppoly::P gl{1}, hr{1};
    for (auto& q : left) gl = fppoly::mul(gl, q, p);
    for (auto& q : right) hr = fppoly::mul(hr, q, p);
    // scale the left product so its lc matches f's mod p
    BigInt lc_f = hensel::reduce(f_coeffs.empty() ? BigInt(0) : f_coeffs.back(), BigInt(p));
    gl = fppoly::scale(gl, static_cast<std::uint64_t>(lc_f), p);
    auto [sg, ss, st] = [&] {
        // extended Euclid in F_p[x] for s*gl + t*hr = 1
        fppoly::P r0 = gl, r1 = hr;
        fppoly::P s0{1}, s1{}, t0{}, t1{1};
        while (!r1.empty()) {
            auto [q, r] = fppoly::divmod(r0, r1, p);
            r0 = std::exchange(r1, r);
            fppoly::P s2 = fppoly::sub(s0, fppoly::mul(q, s1, p), p);
            s0 = std::exchange(s1, s2);
            fppoly::P t2 = fppoly::sub(t0, fppoly::mul(q, t1, p), p);
            t0 = std::exchange(t1, t2);
        }
        assert(fppoly::deg(r0) == 0);
        std::uint64_t inv = fppoly::inv_mod(r0[0], p);
        return std::tuple{r0, fppoly::scale(s0, inv, p), fppoly::scale(t0, inv, p)};
    }();
    (void)sg;
    hensel::Pair pair;
    auto to_m = [](const fppoly::P& a) {
        hensel::M v(a.size());
        for (size_t i = 0; i < a.size(); ++i) v[i] = a[i];
        return v;
    };
    pair.g = to_m(gl);
    pair.h = to_m(hr);
    pair.s = to_m(ss);
    pair.t = to_m(st);
    BigInt m(p);
    while (m < target) {
        pair = hensel::step(f_coeffs, pair, m);
        m *= m;
    }
    // recurse with each half, reducing everything mod target
    std::vector<BigInt> gz(pair.g.begin(), pair.g.end());
    std::vector<BigInt> hz(pair.h.begin(), pair.h.end());
    lift_tree(gz, left, p, target, out);
    lift_tree(hz, right, p, target, out);
}

inline BigInt symmetric_rep(const BigInt& x, const BigInt& m) {
    return x * 2 > m ? x - m : x;
}

}  // namespace detail

// Irreducible factors of a primitive squarefree polynomial (degree >= 1),
// sorted by (degree, coefficients) for deterministic output.
inline std::vector<ZPoly> factor_squarefree_primitive(const ZPoly& f) {
    assert(f.degree() >= 1);
    if (f.degree() == 1) return {f.primitive_positive()};

    // pick an odd prime keeping f squarefree with full degree
    static const std::vector<std::uint64_t> primes = detail::small_primes_from(200);
    std::uint64_t p = 0;
    std::vector<fppoly::P> parts;
    std::mt19937_64 rng(0x5eed0f5eedULL);
    for (std::uint64_t cand : primes) {
        if (f.lead() % cand == 0) continue;
        fppoly::P fp(f.degree() + 1);
        for (int i = 0; i <= f.degree(); ++i)
            fp[i] = static_cast<std::uint64_t>(hensel::reduce(f.coeff(i), BigInt(cand)));
        fppoly::trim(fp);
        if (fppoly::deg(fp) != f.degree()) continue;
        fppoly::P fmon = fppoly::monic(fp, cand);
        if (fppoly::deg(fppoly::gcd(fmon, fppoly::derivative(fmon, cand), cand)) != 0) continue;
        p = cand;
        parts = fppoly::factor_monic_squarefree(fmon, cand, rng);
        break;
    }
    if (p == 0) throw std::runtime_error("no usable prime found for factorization");
    if (parts.size() == 1) return {f.primitive_positive()};

    // coefficient bound for any factor of f (times lc), deliberately generous
    BigInt maxc = 0;
    for (auto& c : f.coeffs()) {
        BigInt a = abs(c);
        if (a > maxc) maxc = a;
    }
    BigInt bound = (BigInt(f.degree()) + 1) * boost::multiprecision::pow(BigInt(2), f.degree()) *
                   maxc * abs(f.lead());
    BigInt target(p);
    while (target <= 2 * bound) target *= target;

    std::vector<hensel::M> lifted;
    detail::lift_tree(f.coeffs(), parts, p, target, lifted);

    // subset recombination
    std::vector<ZPoly> result;
    std::vector<hensel::M> pool = lifted;
    ZPoly rem = f.primitive_positive();
    bool progress = true;
    while (progress && !pool.empty()) {
        progress = false;
        size_t max_take = pool.size();
        for (size_t take = 1; take * 2 <= max_take && !progress; ++take) {
            // enumerate subsets of the pool of the given size
            std::vector<size_t> idx(take);
            for (size_t i = 0; i < take; ++i) idx[i] = i;
            for (;;) {
                hensel::M prod{hensel::reduce(rem.lead(), target)};
                for (size_t i : idx) prod = hensel::mul(prod, pool[i], target);
                std::vector<BigInt> sym(prod.size());
                for (size_t i = 0; i < prod.size(); ++i)
                    sym[i] = detail::symmetric_rep(prod[i], target);
                ZPoly cand = ZPoly(std::move(sym)).primitive_positive();
                if (!cand.is_zero() && cand.degree() >= 1) {
                    if (auto quo = rem.divide_exact(cand)) {
                        result.push_back(cand);
                        rem = quo->primitive_positive();
                        std::vector<hensel::M> next_pool;
                        size_t ii = 0;
                        for (size_t i = 0; i < pool.size(); ++i) {
                            if (ii < idx.size() && idx[ii] == i) { ++ii; continue; }
                            next_pool.push_back(pool[i]);
                        }
                        pool = std::move(next_pool);
                        progress = true;
                        break;
                    }
                }
                // next subset
                int pos = static_cast<int>(take) - 1;
                while (pos >= 0 && idx[pos] == pool.size() - take + pos) --pos;
                if (pos < 0) break;
                ++idx[pos];
                for (size_t i = pos + 1; i < take; ++i) idx[i] = idx[i - 1] + 1;
            }
        }
    }
    if (rem.degree() >= 1) result.push_back(rem);
    std::sort(result.begin(), result.end(), [](const ZPoly& a, const ZPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        for (int i = a.degree(); i >= 0; --i)
            if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
        return false;
    });
    return result;
}

// Full factorization over Z: sign/content, power of t, then squarefree
// decomposition (Yun) with each squarefree part factored into irreducibles.
struct ZFactorization {
    Rat unit;  // rational content including sign; f = unit * prod(factor^mult)
    std::vector<std::pair<ZPoly, int>> factors;
};

inline ZFactorization factor(const ZPoly& f_in) {
    if (f_in.is_zero()) throw std::domain_error("cannot factor the zero polynomial");
    ZFactorization out;
    BigInt cont = f_in.content();
    out.unit = Rat(f_in.lead() < 0 ? -cont : cont);
    ZPoly f = f_in.primitive_positive();
    int v = 0;
    while (f.coeff(0) == 0) {
        std::vector<BigInt> c(f.coeffs().begin() + 1, f.coeffs().end());
        f = ZPoly(std::move(c));
        ++v;
    }
    if (v > 0) out.factors.emplace_back(ZPoly{0, 1}, v);
    if (f.degree() >= 1) {
        // Yun's squarefree decomposition; gcd(v, 0) = v covers the final round
        ZPoly u = zpoly_gcd(f, f.derivative());
        ZPoly vpart = *f.divide_exact(u);
        ZPoly w = *f.derivative().divide_exact(u);
        int i = 1;
        while (vpart.degree() > 0) {
            ZPoly z = w - vpart.derivative();
            ZPoly g = zpoly_gcd(vpart, z);
            if (g.degree() > 0) {
                for (auto& irr : factor_squarefree_primitive(g)) out.factors.emplace_back(irr, i);
                vpart = *vpart.divide_exact(g);
                w = *z.divide_exact(g);
            } else {
                w = z;
            }
            ++i;
        }
    }
    return out;
}

}  // namespace drg
