#pragma once
// Arithmetic tables for the quadratic field extensions GF(q^2), q in {2, 3},
// together with the conjugation x -> x^q used by Hermitian forms. Elements
// are integer indices 0 .. q^2-1 encoding a + b*w with a, b in GF(q), where
// w is a root of the reduction polynomial (w^2 = w + 1 for q = 2, w^2 = -1
// for q = 3). Every field axiom and the automorphism properties of the
// conjugation are re-verified over the full tables at construction.

#include <stdexcept>
#include <string>
#include <vector>

namespace drg {

class GFSquare {
  public:
    explicit GFSquare(int q) : q_(q), size_(q * q) {
        if (q != 2 && q != 3) throw std::invalid_argument("GFSquare: q must be 2 or 3");
        // reduction w^2 = t w + s with x^2 - t x - s irreducible over GF(q)
        int t = (q == 2) ? 1 : 0;
        int s = (q == 2) ? 1 : q - 1;
        add_.assign(size_ * size_, 0);
        mul_.assign(size_ * size_, 0);
        for (int x = 0; x < size_; ++x) {
            int xa = x % q_, xb = x / q_;
            for (int y = 0; y < size_; ++y) {
                int ya = y % q_, yb = y / q_;
                add_[x * size_ + y] = (xa + ya) % q_ + q_ * ((xb + yb) % q_);
                int pa = (xa * ya + s * xb * yb) % q_;
                int pb = (xa * yb + xb * ya + t * xb * yb) % q_;
                mul_[x * size_ + y] = pa + q_ * pb;
            }
        }
        neg_.assign(size_, 0);
        inv_.assign(size_, 0);
        conj_.assign(size_, 0);
        for (int x = 0; x < size_; ++x) {
            for (int y = 0; y < size_; ++y) {
                if (add(x, y) == 0) neg_[x] = y;
                if (x != 0 && mul(x, y) == 1) inv_[x] = y;
            }
            int p = x;
            for (int e = 1; e < q_; ++e) p = mul(p, x);  // x^q
            conj_[x] = p;
        }
        verify();
    }

    int q() const { return q_; }
    int size() const { return size_; }

    int add(int x, int y) const { return add_[x * size_ + y]; }
    int sub(int x, int y) const { return add_[x * size_ + neg_[y]]; }
    int mul(int x, int y) const { return mul_[x * size_ + y]; }
    int neg(int x) const { return neg_[x]; }
    int inv(int x) const {
        if (x == 0) throw std::domain_error("GFSquare: inverse of zero");
        return inv_[x];
    }
    int conj(int x) const { return conj_[x]; }
    // the prime subfield GF(q) is exactly the a + 0*w slice
    bool in_ground_field(int x) const { return x < q_; }

  private:
    void verify() const {
        auto fail = [](const std::string& what) {
            throw std::logic_error("GFSquare table verification failed: " + what);
        };
        for (int x = 0; x < size_; ++x) {
            if (add(x, 0) != x) fail("additive identity");
            if (mul(x, 1) != x) fail("multiplicative identity");
            if (add(x, neg(x)) != 0) fail("additive inverse");
            if (x != 0 && mul(x, inv_[x]) != 1) fail("multiplicative inverse");
            if (conj(conj(x)) != x) fail("conjugation is not an involution");
            if (in_ground_field(x) != (conj(x) == x))
                fail("conjugation fixed field is not GF(q)");
            for (int y = 0; y < size_; ++y) {
                if (add(x, y) != add(y, x)) fail("addition commutativity");
                if (mul(x, y) != mul(y, x)) fail("multiplication commutativity");
                if (conj(add(x, y)) != add(conj(x), conj(y))) fail("conjugation additivity");
                if (conj(mul(x, y)) != mul(conj(x), conj(y)))
                    fail("conjugation multiplicativity");
                if (x != 0 && y != 0 && mul(x, y) == 0) fail("zero divisor");
                for (int z = 0; z < size_; ++z) {
                    if (add(add(x, y), z) != add(x, add(y, z))) fail("addition associativity");
                    if (mul(mul(x, y), z) != mul(x, mul(y, z)))
                        fail("multiplication associativity");
                    if (mul(x, add(y, z)) != add(mul(x, y), mul(x, z))) fail("distributivity");
                }
            }
        }
    }

    int q_;
    int size_;
    std::vector<int> add_, mul_, neg_, inv_, conj_;
};

}  // namespace drg
