#pragma once

// Real algebraic numbers, represented exactly as (irreducible minimal
// polynomial, isolating rational interval).  Because the minimal polynomial
// of anything irrational here has degree >= 2 and is irreducible, it has no
// rational roots at all -- so bisection midpoints and interval endpoints can
// never collide with the root, which keeps every refinement loop simple and
// total.
//
// Values are immutable; refinement returns a new value with a narrower
// interval describing the same number.

#include "polynomial.hpp"

namespace drg {

class AlgebraicReal {
public:
    // f must be the irreducible minimal polynomial (primitive, positive
    // leading coefficient, degree >= 2); (lo, hi) must isolate exactly one of
    // its real roots.  Everything checkable at tolerable cost is checked.
    AlgebraicReal(ZPoly f, Rat lo, Rat hi) : f_(std::move(f)), lo_(std::move(lo)), hi_(std::move(hi)) {
        if (f_.degree() < 2) throw std::invalid_argument("algebraic number needs degree >= 2");
        if (f_.lead() < 0 || f_.content() != 1)
            throw std::invalid_argument("minimal polynomial must be primitive with positive lead");
        if (!(lo_ < hi_)) throw std::invalid_argument("empty isolating interval");
        if (f_.eval_rat(lo_) == 0 || f_.eval_rat(hi_) == 0)
            throw std::invalid_argument("interval endpoint is a root");
        if (SturmChain(f_).count_in(lo_, hi_) != 1)
            throw std::invalid_argument("interval does not isolate exactly one root");
    }

    const ZPoly& min_poly() const { return f_; }
    const Rat& lo() const { return lo_; }
    const Rat& hi() const { return hi_; }
    int degree() const { return f_.degree(); }

    // One bisection: same number, half the interval.
    AlgebraicReal refined() const {
        Rat mid = (lo_ + hi_) / 2;
        // mid is rational, hence not a root; the sign change tells the half
        int slo = sign_of(f_.eval_rat(lo_));
        int smid = sign_of(f_.eval_rat(mid));
        AlgebraicReal out = *this;
        if (slo != smid)
            out.hi_ = mid;
        else
            out.lo_ = mid;
        return out;
    }

    AlgebraicReal refined_until_width(const Rat& w) const {
        AlgebraicReal out = *this;
        while (out.hi_ - out.lo_ >= w) out = out.refined();
        return out;
    }

    // Narrow until the rational point r falls outside the closed interval.
    // Requires (and is guaranteed by irrationality) that *this != r.
    AlgebraicReal refined_excluding(const Rat& r) const {
        AlgebraicReal out = *this;
        while (out.lo_ < r && r < out.hi_) out = out.refined();
        return out;
    }

    int sign() const {
        AlgebraicReal a = refined_excluding(Rat(0));
        return a.lo_ >= 0 ? 1 : -1;
    }

    // strict order against a rational; never equal
    int compare(const Rat& r) const {
        AlgebraicReal a = refined_excluding(r);
        return a.lo_ >= r ? 1 : -1;
    }

    int compare(const AlgebraicReal& other) const {
        if (f_ == other.f_) {
            // same irreducible polynomial: equal iff a common root lies in the
            // interval overlap
            Rat a = std::max(lo_, other.lo_), b = std::min(hi_, other.hi_);
            if (a < b && SturmChain(f_).count_in(a, b) >= 1) return 0;
        }
        // distinct numbers: shrink both intervals until they separate
        AlgebraicReal x = *this, y = other;
        while (x.lo_ < y.hi_ && y.lo_ < x.hi_) {
            x = x.refined();
            y = y.refined();
        }
        return x.hi_ <= y.lo_ ? -1 : 1;
    }

    AlgebraicReal negated() const { return AlgebraicReal(f_.reflect().primitive_positive(), -hi_, -lo_); }

    // this + r: minimal polynomial f(t - r)
    AlgebraicReal shifted(const Rat& r) const {
        ZPoly g = QPoly(f_).compose_linear(Rat(1), -r).primitivized();
        return AlgebraicReal(std::move(g), lo_ + r, hi_ + r);
    }

    // this * r for rational r != 0: coefficient c_i picks up r^(deg-i)
    AlgebraicReal scaled(const Rat& r) const {
        assert(r != 0);
        int n = f_.degree();
        std::vector<Rat> c(n + 1);
        Rat pw(1);
        for (int i = n; i >= 0; --i) {
            c[i] = Rat(f_.coeff(i)) * pw;
            pw *= r;
        }
        ZPoly g = QPoly(std::move(c)).primitivized();
        Rat a = lo_ * r, b = hi_ * r;
        if (r < 0) std::swap(a, b);
        return AlgebraicReal(std::move(g), std::move(a), std::move(b));
    }

    // 1 / this (nonzero automatically: irreducible deg >= 2 excludes 0)
    AlgebraicReal inverted() const {
        AlgebraicReal a = refined_excluding(Rat(0));
        // an endpoint may still sit exactly at 0; the root is nonzero, so
        // bisection eventually moves it off
        while (a.lo_ == 0 || a.hi_ == 0) a = a.refined();
        // interval is now strictly sign-definite; reciprocal is monotone on it
        return AlgebraicReal(a.f_.reverse().primitive_positive(), 1 / a.hi_, 1 / a.lo_);
    }

    double approx() const {
        AlgebraicReal a = refined_until_width(Rat(1, BigInt(1) << 60));
        Rat mid = (a.lo_ + a.hi_) / 2;
        return mid.convert_to<double>();
    }

    std::string str() const {
        return "root of " + f_.str() + " in (" + to_string(lo_) + ", " + to_string(hi_) + ")";
    }

private:
    ZPoly f_;
    Rat lo_, hi_;
};

}  // namespace drg
