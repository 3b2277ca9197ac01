#pragma once

// Krein parameters (dual intersection numbers) of a spectrum, computed in
// exact arithmetic, together with the scan for eigenspaces whose entrywise
// idempotent square collapses onto the identity idempotent plus a single
// other one ("light tail" structure).
//
// With E_i = (m_i/n) sum_l u_l(theta_i) A_l the primitive idempotents,
//   E_i o E_j = (1/n) sum_h q_ij^h E_h,
//   q_ij^h = (m_i m_j / n) sum_l k_l u_l(theta_i) u_l(theta_j) u_l(theta_h).
// The inner sum T_ijh is symmetric in (i, j, h), so it is computed once per
// sorted triple.  Arithmetic is chosen by the field content of the spectrum:
// plain rationals when every eigenvalue is rational, a shared multi-quadratic
// tower when every irrational eigenvalue is quadratic, and generic algebraic
// scalars otherwise.

#include <drg/number_field.hpp>
#include <drg/spectrum.hpp>

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <vector>

namespace drg {

enum class KreinArith {
    auto_select,
    rational,
    quadratic_tower,
    generic,
};

class KreinTensor {
public:
    explicit KreinTensor(const Spectrum& s, KreinArith request = KreinArith::auto_select)
        : d_(s.array().D()), n_(s.array().n()) {
        mults_.reserve(d_ + 1);
        valencies_.reserve(d_ + 1);
        for (int i = 0; i <= d_; ++i) {
            mults_.push_back(s.multiplicity(i));
            valencies_.push_back(s.array().k_i(i));
        }

        int maxdeg = 0;
        for (const auto& f : s.factors()) maxdeg = std::max(maxdeg, f.degree());
        KreinArith pick = request;
        if (pick == KreinArith::auto_select)
            pick = maxdeg <= 1   ? KreinArith::rational
                   : maxdeg == 2 ? KreinArith::quadratic_tower
                                 : KreinArith::generic;
        if (pick == KreinArith::rational && maxdeg > 1)
            throw std::logic_error("rational Krein arithmetic requested for irrational spectrum");
        if (pick == KreinArith::quadratic_tower && maxdeg > 2)
            throw std::logic_error("quadratic Krein arithmetic requested for a deeper field");

        arith_ = pick;
        switch (pick) {
            case KreinArith::rational: build_with(RatOps{&s}); break;
            case KreinArith::quadratic_tower: build_with(TowerOps(s)); break;
            default: build_with(ScalarOps{&s}); break;
        }
    }

    int count() const { return d_ + 1; }
    KreinArith arith() const { return arith_; }
    const BigInt& multiplicity(int i) const { return mults_.at(i); }

    const Scalar& q(int i, int j, int h) const { return q_.at(index(i, j, h)); }
    int sign(int i, int j, int h) const { return sign_.at(index(i, j, h)); }
    bool is_zero(int i, int j, int h) const { return sign(i, j, h) == 0; }

    // Feasibility condition: every Krein parameter is nonnegative.
    bool nonnegative() const { return negative_.empty(); }
    // Canonical (sorted) triples with a negative parameter.
    const std::vector<std::array<int, 3>>& negative_triples() const { return negative_; }

    // Feasibility condition: for each pair the total rank of the idempotents
    // appearing in E_i o E_j is bounded by rank(E_i)rank(E_j), and by the
    // symmetric-square rank when i = j.
    struct AbsoluteBoundEntry {
        int i = 0, j = 0;
        BigInt mass;   // sum of m_h over h with q_ij^h != 0
        BigInt limit;  // m_i * m_j, or m_i(m_i+1)/2 on the diagonal
        bool holds = false;
    };
    std::vector<AbsoluteBoundEntry> absolute_bounds() const {
        std::vector<AbsoluteBoundEntry> out;
        for (int i = 0; i <= d_; ++i)
            for (int j = i; j <= d_; ++j) {
                AbsoluteBoundEntry e;
                e.i = i;
                e.j = j;
                for (int h = 0; h <= d_; ++h)
                    if (!is_zero(i, j, h)) e.mass += mults_[h];
                if (i == j)
                    e.limit = mults_[i] * (mults_[i] + 1) / 2;
                else
                    e.limit = mults_[i] * mults_[j];
                e.holds = e.mass <= e.limit;
                out.push_back(std::move(e));
            }
        return out;
    }
    bool absolute_bounds_hold() const {
        for (const auto& e : absolute_bounds())
            if (!e.holds) return false;
        return true;
    }

    bool feasible() const { return nonnegative() && absolute_bounds_hold(); }

private:
    int d_;
    BigInt n_;
    KreinArith arith_ = KreinArith::auto_select;
    std::vector<BigInt> mults_;
    std::vector<BigInt> valencies_;
    std::vector<Scalar> q_;
    std::vector<int> sign_;
    std::vector<std::array<int, 3>> negative_;

    size_t index(int i, int j, int h) const {
        if (i < 0 || j < 0 || h < 0 || i > d_ || j > d_ || h > d_)
            throw std::out_of_range("Krein index");
        int cnt = d_ + 1;
        return (size_t(i) * cnt + j) * cnt + h;
    }

    // Ring adapters.  Each provides the standard sequence values u_l(theta_i)
    // of the spectrum in its own arithmetic, plus the handful of operations
    // the tensor fill needs.

    struct RatOps {
        using V = Rat;
        const Spectrum* sp;
        const V& u(int i, int l) const { return sp->u_rat(i)[l]; }
        V zero() const { return Rat(0); }
        V mul(const V& a, const V& b) const { return a * b; }
        void add_scaled(V& acc, const V& x, const Rat& c) const { acc += x * c; }
        bool equals_rat(const V& a, const Rat& r) const { return a == r; }
        int sign(const V& a) const { return sign_of(a); }
        Scalar to_scalar(const V& a) const { return Scalar(a); }
    };

    struct TowerOps {
        using V = QuadTower::Elem;
        QuadTower tw;
        std::vector<std::vector<V>> uv;
        explicit TowerOps(const Spectrum& s) {
            int cnt = s.count();
            uv.resize(cnt);
            for (int i = 0; i < cnt; ++i) {
                uv[i].resize(cnt);
                if (s.theta_is_rational(i)) {
                    for (int l = 0; l < cnt; ++l) uv[i][l] = tw.from_rat(s.u_rat(i)[l]);
                } else {
                    V th = tw.adjoin(s.theta(i).alg());
                    const auto& reps = s.u_rep(s.factor_of(i));
                    for (int l = 0; l < cnt; ++l) {
                        V e = tw.from_rat(reps[l].coeff(0));
                        if (reps[l].degree() >= 1) e = tw.add(e, tw.mul_rat(th, reps[l].coeff(1)));
                        uv[i][l] = std::move(e);
                    }
                }
            }
        }
        const V& u(int i, int l) const { return uv[i][l]; }
        V zero() const { return tw.from_rat(Rat(0)); }
        V mul(const V& a, const V& b) const { return tw.mul(a, b); }
        void add_scaled(V& acc, const V& x, const Rat& c) const {
            acc = tw.add(acc, tw.mul_rat(x, c));
        }
        bool equals_rat(const V& a, const Rat& r) const {
            return tw.is_zero(tw.sub(a, tw.from_rat(r)));
        }
        int sign(const V& a) const { return tw.sign(a); }
        Scalar to_scalar(const V& a) const { return tw.to_scalar(a); }
    };

    struct ScalarOps {
        using V = Scalar;
        const Spectrum* sp;
        const V& u(int i, int l) const { return sp->u(i, l); }
        V zero() const { return Scalar(0); }
        V mul(const V& a, const V& b) const { return a * b; }
        void add_scaled(V& acc, const V& x, const Rat& c) const { acc = acc + x * Scalar(c); }
        bool equals_rat(const V& a, const Rat& r) const { return a == Scalar(r); }
        int sign(const V& a) const { return a.sign(); }
        Scalar to_scalar(const V& a) const { return a; }
    };

    template <class Ops>
    void build_with(const Ops& ops) {
        int cnt = d_ + 1;
        std::map<std::array<int, 3>, typename Ops::V> tring;

        // T_ijh once per sorted triple
        for (int i = 0; i < cnt; ++i)
            for (int j = i; j < cnt; ++j) {
                std::vector<typename Ops::V> pair;
                pair.reserve(cnt);
                for (int l = 0; l < cnt; ++l) pair.push_back(ops.mul(ops.u(i, l), ops.u(j, l)));
                for (int h = j; h < cnt; ++h) {
                    typename Ops::V t = ops.zero();
                    for (int l = 0; l < cnt; ++l)
                        ops.add_scaled(t, ops.mul(pair[l], ops.u(h, l)), Rat(valencies_[l]));
                    tring.emplace(std::array<int, 3>{i, j, h}, std::move(t));
                }
            }

        auto tref = [&](int i, int j, int h) -> const typename Ops::V& {
            std::array<int, 3> key{i, j, h};
            std::sort(key.begin(), key.end());
            return tring.at(key);
        };

        // Internal consistency: T_ij0 restates eigenspace orthogonality, and
        // sum_h m_h T_ijh = n because the only surviving row sum of the dual
        // eigenmatrix is the trivial one.  Violations mean a computation bug,
        // not an infeasible array.
        for (int i = 0; i < cnt; ++i)
            for (int j = i; j < cnt; ++j) {
                Rat want = (i == j) ? Rat(n_) / Rat(mults_[i]) : Rat(0);
                if (!ops.equals_rat(tref(i, j, 0), want))
                    throw std::logic_error("Krein tensor contradicts eigenspace orthogonality");
                typename Ops::V acc = ops.zero();
                for (int h = 0; h < cnt; ++h)
                    ops.add_scaled(acc, tref(i, j, h), Rat(mults_[h]));
                if (!ops.equals_rat(acc, Rat(n_)))
                    throw std::logic_error("Krein trace identity violated");
            }

        // signs and scalar values, shared across permutations of each triple
        std::map<std::array<int, 3>, std::pair<int, Scalar>> tval;
        for (const auto& [key, t] : tring) tval.emplace(key, std::pair{ops.sign(t), ops.to_scalar(t)});

        q_.assign(size_t(cnt) * cnt * cnt, Scalar(0));
        sign_.assign(size_t(cnt) * cnt * cnt, 0);
        for (int i = 0; i < cnt; ++i)
            for (int j = 0; j < cnt; ++j)
                for (int h = 0; h < cnt; ++h) {
                    std::array<int, 3> key{i, j, h};
                    std::sort(key.begin(), key.end());
                    const auto& [sg, tv] = tval.at(key);
                    sign_[index(i, j, h)] = sg;
                    q_[index(i, j, h)] =
                        Scalar(Rat(mults_[i] * mults_[j]) / Rat(n_)) * tv;
                }
        for (const auto& [key, st] : tval)
            if (st.first < 0) negative_.push_back(key);
    }
};

// One entry per nontrivial eigenspace index i = 1..D describing the shape of
// the Krein row q_ii^h over h = 1..D.
struct LightTailEntry {
    int index = -1;
    bool light = false;              // exactly one nonzero h in 1..D
    bool degenerate_rank_one = false;  // m_i = 1: the whole row vanishes
    int associate = -1;              // that unique h when light
    int nonzero_count = 0;
    Rat a_coeff;                     // E_i o E_i = a E_0 + b E_{h*}; a = m_i/n
    Rat b_coeff;                     // b = q_ii^{h*}/n (only set when light)
    Rat weight_identity;             // trace-mass fraction on E_0: 1/m_i
    Rat weight_associate;            // remaining fraction: (m_i - 1)/m_i
};

struct LightTailScan {
    std::vector<LightTailEntry> entries;  // entries[i - 1] describes index i
    bool any_light = false;
    std::vector<int> light_indices;

    const LightTailEntry& at(int index) const { return entries.at(size_t(index) - 1); }
};

inline LightTailScan light_tail_scan(const Spectrum& s, const KreinTensor& kt) {
    int d = s.array().D();
    BigInt n = s.array().n();
    LightTailScan scan;
    for (int i = 1; i <= d; ++i) {
        LightTailEntry e;
        e.index = i;
        const BigInt& m = s.multiplicity(i);
        e.a_coeff = Rat(m) / Rat(n);
        e.weight_identity = Rat(1) / Rat(m);
        e.weight_associate = Rat(m - 1) / Rat(m);
        int hstar = -1;
        for (int h = 1; h <= d; ++h)
            if (!kt.is_zero(i, i, h)) {
                ++e.nonzero_count;
                hstar = h;
            }
        if (m == 1) {
            // rank-one idempotents have u_l = +-1 throughout, so the Schur
            // square collapses onto E_0 and the row must vanish
            if (e.nonzero_count != 0)
                throw std::logic_error("rank-one eigenspace with a nonvanishing Krein row");
            e.degenerate_rank_one = true;
        } else if (e.nonzero_count == 0) {
            // impossible: the trace identity puts mass m_i(m_i - 1) > 0 on h >= 1
            throw std::logic_error("Krein row of a higher-rank eigenspace vanished entirely");
        } else if (e.nonzero_count == 1) {
            e.light = true;
            e.associate = hstar;
            const Scalar& qv = kt.q(i, i, hstar);
            if (!qv.is_rational())
                throw std::logic_error("light tail coefficient must be rational");
            // with a single carrier the trace identity pins the coefficient
            Rat expect = Rat(m * (m - 1)) / Rat(s.multiplicity(hstar));
            if (qv.rat() != expect) throw std::logic_error("light tail coefficient mismatch");
            e.b_coeff = qv.rat() / Rat(n);
        }
        if (e.light) {
            scan.any_light = true;
            scan.light_indices.push_back(i);
        }
        scan.entries.push_back(std::move(e));
    }
    return scan;
}

inline LightTailScan light_tail_scan(const Spectrum& s) {
    return light_tail_scan(s, KreinTensor(s));
}

}  // namespace drg
