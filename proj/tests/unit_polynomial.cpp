// Integer/rational polynomial layer: arithmetic, gcd, resultants, Sturm
// counting, isolation, and factorization into irreducibles.  Oracles here are
// deliberately independent of the code under test: products of known linear
// factors, direct product formulas for resultants, and hand-expanded
// polynomials.

#include <catch2/catch_amalgamated.hpp>

#include <drg/factorization.hpp>
#include <drg/polynomial.hpp>

#include <random>

using namespace drg;

namespace {

// prod (t - r_i) expanded by the oracle, not by ZPoly::operator*
ZPoly poly_from_roots(const std::vector<long long>& roots) {
    std::vector<BigInt> c{1};
    for (long long r : roots) {
        std::vector<BigInt> next(c.size() + 1);
        for (size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];
            next[i] -= BigInt(r) * c[i];
        }
        c = std::move(next);
    }
    return ZPoly(std::move(c));
}

}  // namespace

TEST_CASE("polynomial arithmetic basics") {
    ZPoly f{1, 2, 3};   // 3t^2 + 2t + 1
    ZPoly g{-1, 1};     // t - 1
    CHECK(f.degree() == 2);
    CHECK((f * g).degree() == 3);
    CHECK((f * g).eval_rat(Rat(2)) == f.eval_rat(Rat(2)) * g.eval_rat(Rat(2)));
    CHECK((f + g - f) == g);
    CHECK((f - f).is_zero());
    CHECK(ZPoly{}.is_zero());
    CHECK(f.derivative() == ZPoly{2, 6});
    CHECK(ZPoly{5}.derivative().is_zero());
}

TEST_CASE("evaluation matches Horner oracle on random data") {
    std::mt19937_64 rng(42);
    for (int iter = 0; iter < 500; ++iter) {
        int deg = static_cast<int>(rng() % 8);
        std::vector<BigInt> c(deg + 1);
        for (auto& x : c) x = static_cast<long long>(rng() % 41) - 20;
        ZPoly f(c);
        long long xv = static_cast<long long>(rng() % 21) - 10;
        BigInt expect = 0, pw = 1;
        for (int i = 0; i <= deg; ++i) {
            expect += c[i] * pw;
            pw *= xv;
        }
        CHECK(f.eval_int(BigInt(xv)) == expect);
    }
}

TEST_CASE("content and primitive part") {
    ZPoly f{6, -9, 12};
    CHECK(f.content() == 3);
    CHECK(f.primitive_part() == ZPoly{2, -3, 4});
    ZPoly g{-6, 0, -12};
    CHECK(g.primitive_part() == ZPoly{-1, 0, -2});
    CHECK(g.primitive_positive() == ZPoly{1, 0, 2});
}

TEST_CASE("exact division") {
    ZPoly f = poly_from_roots({1, 2, 3});
    auto q = f.divide_exact(poly_from_roots({2}));
    REQUIRE(q.has_value());
    CHECK(*q == poly_from_roots({1, 3}));
    CHECK(!f.divide_exact(ZPoly{-5, 1}).has_value());  // t - 5 does not divide
    CHECK(!f.divide_exact(ZPoly{1, 2}).has_value());   // 2t + 1 not a divisor over Z
}

TEST_CASE("gcd over Z") {
    ZPoly a = poly_from_roots({1, 2, 5}) * BigInt(4);
    ZPoly b = poly_from_roots({2, 5, 7}) * BigInt(6);
    CHECK(zpoly_gcd(a, b) == poly_from_roots({2, 5}) * BigInt(2));
    CHECK(zpoly_gcd(ZPoly{-2, 0, 1}, ZPoly{-3, 0, 1}).degree() == 0);
    CHECK(zpoly_gcd(ZPoly{}, ZPoly{-4, 2}) == ZPoly{-4, 2});
}

TEST_CASE("squarefree part strips multiplicity") {
    ZPoly a = poly_from_roots({3});
    ZPoly f = a * a * a * poly_from_roots({-1});
    CHECK(zpoly_squarefree_part(f) == poly_from_roots({3, -1}).primitive_positive());
}

TEST_CASE("resultant of split polynomials equals the pair-difference product") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 200; ++iter) {
        int m = 1 + static_cast<int>(rng() % 4), n = 1 + static_cast<int>(rng() % 4);
        std::vector<long long> as(m), bs(n);
        for (auto& x : as) x = static_cast<long long>(rng() % 19) - 9;
        for (auto& x : bs) x = static_cast<long long>(rng() % 19) - 9;
        BigInt expect = 1;
        for (long long a : as)
            for (long long b : bs) expect *= BigInt(a - b);
        CHECK(resultant(poly_from_roots(as), poly_from_roots(bs)) == expect);
    }
}

TEST_CASE("resultant special values") {
    CHECK(resultant(ZPoly{-2, 0, 1}, ZPoly{-3, 0, 1}) == 1);   // disjoint quadratics
    CHECK(resultant(ZPoly{-1, 0, 1}, ZPoly{3, -4, 1}) == 0);   // share root 1
    CHECK(resultant(ZPoly{5}, ZPoly{1, 1, 1}) == 25);          // constant^deg
}

TEST_CASE("Sturm root counting") {
    ZPoly f = ZPoly{-2, 0, 1} * ZPoly{-3, 0, 1};  // roots +-sqrt2, +-sqrt3
    SturmChain ch(f);
    CHECK(ch.count_all() == 4);
    CHECK(ch.count_in(Rat(0), Rat(2)) == 2);
    CHECK(ch.count_in(Rat(-2), Rat(0)) == 2);
    CHECK(ch.count_in(Rat(3, 2), Rat(2)) == 1);
    SturmChain none(ZPoly{1, 0, 1});  // t^2 + 1
    CHECK(none.count_all() == 0);
}

TEST_CASE("Sturm counting agrees with known integer roots") {
    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 200; ++iter) {
        // distinct integer roots
        std::vector<long long> roots;
        for (long long r = -6; r <= 6; ++r)
            if (rng() % 3 == 0) roots.push_back(r);
        if (roots.empty()) roots.push_back(0);
        ZPoly f = poly_from_roots(roots);
        SturmChain ch(f);
        long long a = static_cast<long long>(rng() % 17) - 8;
        long long b = a + static_cast<long long>(rng() % 8);
        int expect = 0;
        for (long long r : roots)
            if (a < r && r <= b) ++expect;
        CHECK(ch.count_in(Rat(a), Rat(b)) == expect);
    }
}

TEST_CASE("real root isolation separates all roots") {
    ZPoly f = ZPoly{-2, 0, 1} * ZPoly{-3, 0, 1} * ZPoly{-5, 0, 1};
    auto iv = isolate_real_roots(f);
    REQUIRE(iv.size() == 6);
    SturmChain ch(f);
    for (size_t i = 0; i < iv.size(); ++i) {
        CHECK(ch.count_in(iv[i].first, iv[i].second) == 1);
        if (i + 1 < iv.size()) CHECK(iv[i].second <= iv[i + 1].first);
    }
}

TEST_CASE("factorization recovers hand-built products") {
    auto fac = factor_squarefree_primitive(ZPoly{-2, 0, 1} * ZPoly{-3, 0, 1});
    REQUIRE(fac.size() == 2);
    CHECK(fac[0] == ZPoly{-3, 0, 1});
    CHECK(fac[1] == ZPoly{-2, 0, 1});

    // minimal polynomial of sqrt2 + sqrt3 stays in one piece
    auto irr = factor_squarefree_primitive(ZPoly{1, 0, -10, 0, 1});
    REQUIRE(irr.size() == 1);
    CHECK(irr[0] == ZPoly{1, 0, -10, 0, 1});

    // characteristic polynomial of a Petersen-like spectrum
    auto split = factor_squarefree_primitive(ZPoly{50, -45, -6, 1});
    REQUIRE(split.size() == 3);
    CHECK(split[0] == ZPoly{-10, 1});
    CHECK(split[1] == ZPoly{-1, 1});
    CHECK(split[2] == ZPoly{5, 1});
}

TEST_CASE("factorization leaves non-real irreducibles intact") {
    auto fac = factor_squarefree_primitive(ZPoly{-1, 0, 0, 0, 0, 0, 1});  // t^6 - 1
    REQUIRE(fac.size() == 4);
    ZPoly prod = ZPoly{1};
    for (auto& p : fac) prod = prod * p;
    CHECK(prod == ZPoly{-1, 0, 0, 0, 0, 0, 1});
    // expected pieces: t-1, t+1, t^2+t+1, t^2-t+1
    CHECK(fac[0] == ZPoly{-1, 1});
    CHECK(fac[1] == ZPoly{1, 1});
    CHECK(fac[2] == ZPoly{1, -1, 1});
    CHECK(fac[3] == ZPoly{1, 1, 1});
}

TEST_CASE("factorization round-trips random irreducible products") {
    // pool of pairwise distinct irreducibles over Q
    std::vector<ZPoly> pool = {
        ZPoly{-2, 1},       ZPoly{3, 1},        ZPoly{-7, 1},    ZPoly{-2, 0, 1},
        ZPoly{-3, 0, 1},    ZPoly{-5, 0, 1},    ZPoly{1, 1, 1},  ZPoly{-1, -1, 1},
        ZPoly{1, 0, -10, 0, 1},  // sqrt2+sqrt3
        ZPoly{-1, -3, 0, 1},     // discriminant 81, irreducible cubic (checked: no rational root)
    };
    std::mt19937_64 rng(99);
    for (int iter = 0; iter < 40; ++iter) {
        std::vector<int> picks;
        ZPoly prod{1};
        for (size_t i = 0; i < pool.size(); ++i)
            if (rng() % 3 == 0) {
                picks.push_back(static_cast<int>(i));
                prod = prod * pool[i];
            }
        if (picks.size() < 2) continue;
        auto fac = factor_squarefree_primitive(prod);
        REQUIRE(fac.size() == picks.size());
        ZPoly re{1};
        for (auto& p : fac) re = re * p;
        CHECK(re == prod.primitive_positive());
        for (auto& p : fac)
            CHECK(std::count(pool.begin(), pool.end(), p) == 1);
    }
}

TEST_CASE("full factorization tracks multiplicity and content") {
    ZPoly a{-1, 1}, b{-2, 0, 1};
    ZPoly f = a * a * b * BigInt(-6);
    auto fac = factor(f);
    CHECK(fac.unit == Rat(-6));
    REQUIRE(fac.factors.size() == 2);
    // rebuild
    ZPoly re = ZPoly{1};
    for (auto& [p, m] : fac.factors)
        for (int i = 0; i < m; ++i) re = re * p;
    Rat lead_ratio = Rat(f.lead()) / Rat(re.lead());
    CHECK(lead_ratio == fac.unit);
    CHECK(re * numerator(fac.unit) == f * denominator(fac.unit));
    bool saw_sq = false;
    for (auto& [p, m] : fac.factors)
        if (p == a) {
            CHECK(m == 2);
            saw_sq = true;
        }
    CHECK(saw_sq);
}

TEST_CASE("factorization handles powers of t") {
    ZPoly f = ZPoly{0, 0, 0, 1} * ZPoly{-1, 1};  // t^3 (t-1)
    auto fac = factor(f);
    bool saw_t = false;
    for (auto& [p, m] : fac.factors)
        if (p == ZPoly{0, 1}) {
            CHECK(m == 3);
            saw_t = true;
        }
    CHECK(saw_t);
}

TEST_CASE("Cauchy bound contains all real roots") {
    ZPoly f = poly_from_roots({-9, -2, 0, 3, 8});
    Rat M = cauchy_root_bound(f);
    CHECK(M > 9);
    SturmChain ch(f);
    CHECK(ch.count_in(-M, M) == 5);
}
