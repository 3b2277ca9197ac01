#pragma once

// Arbitrary-precision integer/rational substrate plus the handful of integer
// utilities (perfect squares, prime powers, divisor walks) everything else
// leans on.  Header-only by design: boost::multiprecision's cpp_int backend
// needs no linking.

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace drg {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline int sign_of(const BigInt& x) { return x.sign(); }
inline int sign_of(const Rat& x) { return x.sign(); }

inline BigInt rat_num(const Rat& r) { return numerator(r); }
inline BigInt rat_den(const Rat& r) { return denominator(r); }

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

// Floor of p/q for exact integers, correct for negative operands.
inline BigInt floor_div(const BigInt& p, const BigInt& q) {
    BigInt quo = p / q, rem = p % q;
    if (rem != 0 && ((rem < 0) != (q < 0))) --quo;
    return quo;
}

inline BigInt rat_floor(const Rat& r) { return floor_div(numerator(r), denominator(r)); }
inline BigInt rat_ceil(const Rat& r) { return -floor_div(-numerator(r), denominator(r)); }

inline std::string to_string(const BigInt& x) { return x.str(); }

// Rationals print as "p" or "p/q"; this is also the JSON encoding.
inline std::string to_string(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline BigInt parse_bigint(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    return BigInt(s);
}

// Accepts "p" or "p/q" with optional leading '-'.
inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(parse_bigint(s));
    BigInt p = parse_bigint(s.substr(0, slash));
    BigInt q = parse_bigint(s.substr(slash + 1));
    if (q == 0) throw std::invalid_argument("zero denominator in rational literal");
    return Rat(p, q);
}

inline BigInt isqrt(const BigInt& n) {
    if (n < 0) throw std::domain_error("isqrt of negative");
    return boost::multiprecision::sqrt(n);
}

inline bool is_perfect_square(const BigInt& n, BigInt* root = nullptr) {
    if (n < 0) return false;
    BigInt r = isqrt(n);
    if (r * r != n) return false;
    if (root) *root = r;
    return true;
}

// If r = s^2 for rational s >= 0, returns s.
inline std::optional<Rat> rat_sqrt_exact(const Rat& r) {
    if (r < 0) return std::nullopt;
    BigInt np, dp;
    if (!is_perfect_square(numerator(r), &np)) return std::nullopt;
    if (!is_perfect_square(denominator(r), &dp)) return std::nullopt;
    return Rat(np, dp);
}

// Trial-division factorization; adequate for the bases that show up here
// (prime-power checks on generator parameters, squarefree parts of small
// discriminants).  Primes are probed up to 10^6, which covers every input the
// toolkit accepts; larger leftover cofactors are rejected loudly.
inline std::vector<std::pair<BigInt, int>> factor_small(BigInt n) {
    if (n <= 0) throw std::domain_error("factor_small expects a positive integer");
    std::vector<std::pair<BigInt, int>> out;
    for (BigInt p = 2; p <= 1000000 && p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            out.emplace_back(p, e);
        }
    }
    if (n > 1) {
        if (n > BigInt(1000000) * 1000000)
            throw std::domain_error("factor_small: cofactor exceeds trial-division range");
        out.emplace_back(n, 1);
    }
    return out;
}

// n = p^e with p prime?  Reports the base/exponent when so.
inline bool is_prime_power(const BigInt& n, BigInt* base = nullptr, int* exp = nullptr) {
    if (n < 2) return false;
    auto fac = factor_small(n);
    if (fac.size() != 1) return false;
    if (base) *base = fac[0].first;
    if (exp) *exp = fac[0].second;
    return true;
}

// Largest b with b^2 | n removed, i.e. n = squarefree_part * b^2.
inline BigInt squarefree_part(const BigInt& n) {
    if (n == 0) return 0;
    BigInt m = abs(n), sf = 1;
    for (auto& [p, e] : factor_small(m))
        if (e % 2) sf *= p;
    return n < 0 ? -sf : sf;
}

}  // namespace drg
