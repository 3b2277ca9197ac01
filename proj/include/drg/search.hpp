#pragma once

// Exhaustive enumeration of feasibility-filtered intersection arrays inside a
// (max_k, max_D) box.  An array counts as a hit when it passes, in order:
// structural validation, k_i integrality, integral positive multiplicities,
// nonnegative Krein parameters, and the optional hypothesis predicate.
//
// Two hypothesis predicates are built in, named after the CLI vocabulary:
//   "thm12"  a_1 = 1, c_2 >= 5 and smallest eigenvalue exactly -k/2
//   "lt"     a_1 != 0, c_2 = (a_1+1)^2 + 1 and smallest eigenvalue -k/(a_1+1)
// Both pin the target eigenvalue in advance, which lets the enumerator solve
// for the final c_D from the standard-sequence termination identity instead
// of looping over it: theta is an eigenvalue of the tridiagonal intersection
// matrix exactly when c_D (u_{D-1} - u_D) = (theta - k) u_D, so c_D is
// determined by the earlier columns.  That collapses the innermost loop and
// skips every characteristic-polynomial evaluation.
//
// Unfiltered searches enumerate c_D directly and pay for a full spectrum per
// surviving array; they are practical to roughly max_k 20, max_D 3.

#include "krein.hpp"

#include <algorithm>
#include <atomic>
#include <string>
#include <thread>
#include <vector>

namespace drg {

enum class HypothesisKind {
    None,
    A1Collapse,   // CLI literal "thm12"
    LightTailEq,  // CLI literal "lt"
};

inline HypothesisKind parse_hypothesis(const std::string& text) {
    if (text.empty()) return HypothesisKind::None;
    if (text == "thm12") return HypothesisKind::A1Collapse;
    if (text == "lt") return HypothesisKind::LightTailEq;
    throw std::invalid_argument("unknown hypothesis '" + text + "' (expected thm12 or lt)");
}

struct SearchOptions {
    long long max_k = 60;  // valency cap, at most 200
    int max_D = 3;         // diameter cap, at most 6
    long long a1 = -1;     // require a_1 equal to this when >= 0
    HypothesisKind hypothesis = HypothesisKind::None;
    int jobs = 1;          // worker threads, partitioned by valency
};

struct SearchOutcome {
    // hits in canonical order: sorted by array text, independent of jobs
    std::vector<IntersectionArray> hits;
    // completed arrays that reached the spectral stage of this search slice
    long long arrays_checked = 0;
    // of those, how many had integral multiplicities and nonnegative Krein
    long long arrays_feasible = 0;
};

namespace detail {

inline BigInt floor_div(const BigInt& x, const BigInt& y) {  // y > 0
    BigInt q = x / y;
    if (x % y != 0 && x < 0) --q;
    return q;
}

inline BigInt ceil_div(const BigInt& x, const BigInt& y) {  // y > 0
    BigInt q = x / y;
    if (x % y != 0 && x > 0) ++q;
    return q;
}

// g = gcd(a, b) together with x, y solving a x + b y = g
inline BigInt egcd(const BigInt& a, const BigInt& b, BigInt& x, BigInt& y) {
    if (b == 0) {
        x = 1;
        y = 0;
        return a;
    }
    BigInt x1, y1;
    BigInt g = egcd(b, BigInt(a % b), x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

// depth-first enumeration for one (k, D) cell
class ArraySearcher {
  public:
    ArraySearcher(const SearchOptions& opt, long long k, int D, SearchOutcome& out)
        : opt_(opt), k_(k), D_(D), out_(out) {
        bs_.assign(D_, 0);
        cs_.assign(D_, 0);
        bs_[0] = k_;
        cs_[0] = 1;
        ki_.assign(D_ + 1, 0);
        ki_[0] = 1;
        ki_[1] = k_;
        us_.assign(D_ + 1, Rat(0));
        us_[0] = 1;
    }

    void run() {
        if (D_ == 1) {
            if (opt_.hypothesis != HypothesisKind::None) return;  // both need c_2
            if (opt_.a1 >= 0 && k_ - 1 != opt_.a1) return;
            emit();
            return;
        }
        step_b(1);
    }

  private:
    // choose b_i (1 <= i <= D-1), then hand over to the c_{i+1} choice
    void step_b(int i) {
        long long hi = std::min(bs_[i - 1], k_ - cs_[i - 1]);  // monotone b, a_i >= 0
        Rat step;
        if (use_theta_ && i >= 2) {
            // with theta fixed, u_{i+1} = u_i + step / b_i where step does not
            // depend on b_i; the standard sequence at the smallest eigenvalue
            // strictly alternates in sign, which caps b_i at |step| / |u_i|
            step = (theta_ - k_ + cs_[i - 1]) * us_[i] - Rat(cs_[i - 1]) * us_[i - 1];
            bool u_pos = us_[i] > 0;  // sign (-1)^i, kept alternating below
            if (u_pos ? !(step < 0) : !(step > 0)) return;
            BigInt sn = abs(rat_num(step)), sd = rat_den(step);
            BigInt un = abs(rat_num(us_[i])), ud = rat_den(us_[i]);
            BigInt cap = (sn * ud - 1) / (un * sd);  // largest b with b |u_i| < |step|
            if (cap < 1) return;
            if (cap < hi) hi = cap.convert_to<long long>();
            if (i == D_ - 1) {
                solve_last(i, step, hi);
                return;
            }
        }
        for (long long bi = 1; bi <= hi; ++bi) {
            if (i == 1) {
                long long ai = k_ - bi - 1;
                if (opt_.a1 >= 0 && ai != opt_.a1) continue;
                if (opt_.hypothesis == HypothesisKind::A1Collapse && ai != 1) continue;
                if (opt_.hypothesis == HypothesisKind::LightTailEq) {
                    if (ai == 0) continue;
                    theta_ = Rat(-k_, ai + 1);
                    use_theta_ = true;
                } else if (opt_.hypothesis == HypothesisKind::A1Collapse) {
                    theta_ = Rat(-k_, 2);
                    use_theta_ = true;
                }
                if (use_theta_) {
                    us_[1] = theta_ / k_;
                    us_[2] = ((theta_ - ai) * us_[1] - Rat(1)) / bi;
                    if (!(us_[2] > 0)) continue;  // alternation again
                }
            } else if (use_theta_) {
                us_[i + 1] = us_[i] + step / bi;
            }
            bs_[i] = bi;
            if (i == D_ - 1)
                finish_c(i);
            else
                step_c(i);
        }
    }

    // choose c_{i+1} (stored as cs_[i]) with the k_{i+1} integrality prune
    void step_c(int i) {
        long long lo = cs_[i - 1];
        long long hi = k_;
        if (opt_.hypothesis == HypothesisKind::A1Collapse && i == 1) lo = std::max(lo, 5LL);
        if (opt_.hypothesis == HypothesisKind::LightTailEq && i == 1) {
            long long a1 = k_ - bs_[1] - 1;
            long long pinned = (a1 + 1) * (a1 + 1) + 1;
            if (pinned < lo || pinned > hi) return;
            lo = hi = pinned;
        }
        for (long long ci = lo; ci <= hi; ++ci) {
            long long prod = ki_[i] * bs_[i];
            if (prod % ci != 0) continue;
            cs_[i] = ci;
            ki_[i + 1] = prod / ci;
            step_b(i + 1);
        }
    }

    // last level with a pinned eigenvalue and D >= 3: the termination
    // identity c_D (u_{D-1} - u_D) = (theta - k) u_D together with
    // u_D = u_{D-1} + step / b makes c_D linear in b = b_{D-1},
    //     c_D = A b + B,  A = (k - theta) u_{D-1} / step,  B = k - theta,
    // with A < 0 by the sign conditions, so the integer solutions form an
    // arithmetic progression that can be walked instead of scanning b
    void solve_last(int i, const Rat& step, long long hi) {
        Rat A = (Rat(k_) - theta_) * us_[i] / step;
        Rat B = Rat(k_) - theta_;
        BigInt an = rat_num(A), ad = rat_den(A);
        BigInt bn = rat_num(B), bd = rat_den(B);
        BigInt M = ad * bd, P = an * bd, Q = bn * ad;  // c = (P b + Q) / M
        long long clo = cs_[i - 1];
        BigInt neg_p = -P;
        BigInt blo = ceil_div(BigInt(Q - k_ * M), neg_p);   // from c <= k
        BigInt bhi = floor_div(BigInt(Q - clo * M), neg_p);  // from c >= c_{D-1}
        if (blo < 1) blo = 1;
        if (bhi > hi) bhi = hi;
        if (blo > bhi) return;
        BigInt pm = ((P % M) + M) % M;
        BigInt rem = (((-Q) % M) + M) % M;
        BigInt b0, stride;
        if (pm == 0) {
            if (rem != 0) return;  // c is never an integer on this branch
            b0 = blo;
            stride = 1;
        } else {
            BigInt g = gcd(pm, M);
            if (rem % g != 0) return;
            BigInt mod = M / g, x, y;
            egcd(BigInt(pm / g), mod, x, y);
            b0 = ((rem / g) % mod) * (((x % mod) + mod) % mod) % mod;
            stride = mod;
            b0 += ceil_div(BigInt(blo - b0), stride) * stride;
        }
        for (BigInt b = b0; b <= bhi; b += stride) {
            long long bll = b.convert_to<long long>();
            BigInt cbig = (P * b + Q) / M;
            long long ci = cbig.convert_to<long long>();
            long long prod = ki_[i] * bll;
            if (prod % ci != 0) continue;
            bs_[i] = bll;
            cs_[i] = ci;
            ki_[i + 1] = prod / ci;
            us_[i + 1] = us_[i] + step / bll;  // emit reads the full sequence
            emit();
        }
    }

    // the last column: either solve for c_D from the pinned eigenvalue or
    // enumerate it
    void finish_c(int i) {
        if (use_theta_) {
            Rat den = us_[D_ - 1] - us_[D_];
            if (den == 0) return;
            Rat cd = (theta_ - k_) * us_[D_] / den;
            if (!is_integer(cd)) return;
            Rat lim(k_);
            if (cd < cs_[i - 1] || cd > lim) return;
            long long ci = rat_num(cd).convert_to<long long>();
            if (opt_.hypothesis == HypothesisKind::A1Collapse && D_ == 2 && ci < 5) return;
            if (opt_.hypothesis == HypothesisKind::LightTailEq && D_ == 2) {
                long long a1 = k_ - bs_[1] - 1;
                if (ci != (a1 + 1) * (a1 + 1) + 1) return;
            }
            long long prod = ki_[i] * bs_[i];
            if (prod % ci != 0) return;
            cs_[i] = ci;
            ki_[i + 1] = prod / ci;
            emit();
        } else {
            for (long long ci = cs_[i - 1]; ci <= k_; ++ci) {
                long long prod = ki_[i] * bs_[i];
                if (prod % ci != 0) continue;
                cs_[i] = ci;
                ki_[i + 1] = prod / ci;
                emit();
            }
        }
    }

    void emit() {
        std::vector<long long> b(bs_.begin(), bs_.end());
        std::vector<long long> c(cs_.begin(), cs_.end());
        std::optional<IntersectionArray> parsed;
        try {
            parsed = IntersectionArray::from_bc(std::move(b), std::move(c));
        } catch (const std::invalid_argument&) {
            return;  // a structural rule the pruning does not model
        }
        IntersectionArray arr = std::move(*parsed);
        ++out_.arrays_checked;
        if (use_theta_) {
            // the multiplicity of the pinned eigenvalue is n / sum k_j u_j^2,
            // computable from the standard sequence alone; rejecting
            // non-integral values here skips the full spectral build
            Rat wsum(0);
            long long n = 0;
            for (int j = 0; j <= D_; ++j) {
                wsum += Rat(ki_[j]) * us_[j] * us_[j];
                n += ki_[j];
            }
            if (!is_integer(Rat(n) / wsum)) return;
        }
        std::optional<Spectrum> s = Spectrum::try_build(arr, nullptr);
        if (!s) return;
        KreinTensor kt(*s);
        if (!kt.nonnegative()) return;
        ++out_.arrays_feasible;
        if (use_theta_) {
            // construction solved the termination identity, so theta must be
            // an eigenvalue; it still has to be the smallest one
            if (!(s->theta(D_) == Scalar(theta_))) return;
            if (char_poly_of(arr).eval_rat(theta_) != 0)
                throw std::logic_error("search: derived c_D does not give an eigenvalue");
        }
        out_.hits.push_back(std::move(arr));
    }

    const SearchOptions& opt_;
    long long k_;
    int D_;
    SearchOutcome& out_;
    std::vector<long long> bs_, cs_;  // bs_[i] = b_i, cs_[i] = c_{i+1} (cs_[0] = c_1 = 1)
    std::vector<long long> ki_;       // ki_[i] = |Gamma_i|
    std::vector<Rat> us_;             // standard sequence at the pinned eigenvalue
    Rat theta_;
    bool use_theta_ = false;
};

}  // namespace detail

inline SearchOutcome search_arrays(const SearchOptions& opt) {
    if (opt.max_k < 1 || opt.max_k > 200)
        throw std::invalid_argument("search cap: max_k must lie in [1, 200]");
    if (opt.max_D < 1 || opt.max_D > 6)
        throw std::invalid_argument("search cap: max_D must lie in [1, 6]");
    if (opt.jobs < 1 || opt.jobs > 32)
        throw std::invalid_argument("search: jobs must lie in [1, 32]");

    int jobs = static_cast<int>(std::min<long long>(opt.jobs, opt.max_k));
    std::vector<SearchOutcome> parts(static_cast<size_t>(jobs));
    std::atomic<long long> next_k{1};
    auto worker = [&](int slot) {
        for (;;) {
            long long k = next_k.fetch_add(1);
            if (k > opt.max_k) break;
            for (int D = 1; D <= opt.max_D; ++D)
                detail::ArraySearcher(opt, k, D, parts[static_cast<size_t>(slot)]).run();
        }
    };
    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker, t);
        for (std::thread& t : pool) t.join();
    }

    SearchOutcome out;
    for (SearchOutcome& p : parts) {
        out.arrays_checked += p.arrays_checked;
        out.arrays_feasible += p.arrays_feasible;
        for (IntersectionArray& a : p.hits) out.hits.push_back(std::move(a));
    }
    std::sort(out.hits.begin(), out.hits.end(),
              [](const IntersectionArray& a, const IntersectionArray& b) {
                  return a.str() < b.str();
              });
    return out;
}

}  // namespace drg
