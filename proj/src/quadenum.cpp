#include "cdx/quadenum.hpp"

#include <set>
#include <stdexcept>

namespace cdx {
namespace {

Int fdiv_q(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

std::vector<QuadInt> enumerate_quadratic_integers_window(const Int& window_sq) {
    if (window_sq < 1) throw std::invalid_argument("enumerate window: w^2 must be >= 1");
    std::vector<QuadInt> out;
    std::set<QuadInt> seen;
    // T^2 < 4 w^2 for the midpoint to sit inside the window.
    Int tmax = isqrt_floor(4 * window_sq);
    if (tmax * tmax == 4 * window_sq) tmax -= 1;
    for (Int T = -tmax; T <= tmax; ++T) {
        // Both roots of x^2 - Tx + N inside (-w, w): value at both endpoints
        // positive, i.e. w^2 + N > w|T|, combined with discriminant > 0.
        // N ranges over (w|T| - w^2, T^2/4).
        Int n_hi = fdiv_q(T * T - 1, Int(4));  // N <= floor((T^2-1)/4) keeps disc > 0
        // lower bound: smallest N with (w^2+N)^2 > w^2 T^2 and w^2+N > 0
        Int wt2 = window_sq * T * T;  // (w|T|)^2
        Int s = isqrt_floor(wt2);
        Int n_lo = s + 1 - window_sq;  // N > sqrt(wt2) - w^2 handled exactly below
        for (Int N = n_lo; N <= n_hi; ++N) {
            Int lhs = window_sq + N;
            if (lhs <= 0) continue;
            if (lhs * lhs <= wt2) continue;
            Int disc = T * T - 4 * N;
            if (disc <= 0 || is_perfect_square(disc)) continue;
            Int f;
            Int core = squarefree_part(disc, &f);
            // roots (T +- f sqrt(core))/2
            for (int sign : {1, -1}) {
                QuadInt val = (T % 2 == 0 && f % 2 == 0)
                                  ? QuadInt(core, T / 2, sign * f / 2, 1)
                                  : QuadInt(core, T, sign * f, 2);
                if (seen.insert(val).second) out.push_back(val);
            }
        }
    }
    return out;
}

std::vector<QuadInt> enumerate_quadratic_integers(long d) {
    if (d < 3) throw std::invalid_argument("enumerate_quadratic_integers: d must be >= 3");
    return enumerate_quadratic_integers_window(Int(4) * (d - 1));
}

namespace {

Int ceil_sqrt(const Int& n) {
    Int s = isqrt_floor(n);
    return s * s == n ? s : Int(s + 1);
}

// #{(a,b) : 0 <= a <= floor(s_sq^(1/2)), 1 <= b <= floor((sqrt(s_sq)-a)^2)},
// with an optional residue filter on b (b = 1 mod 4 for the half-integer form).
Int box_count(const Int& s_sq, bool b_mod4_filter) {
    Int cnt(0);
    Int a_max = isqrt_floor(s_sq);
    for (Int a = 0; a <= a_max; ++a) {
        // floor((s-a)^2) = s_sq + a^2 - ceil(2 a s), with 2 a s = sqrt(4 a^2 s_sq)
        Int two_as_sq = 4 * a * a * s_sq;
        Int b_max = s_sq + a * a - ceil_sqrt(two_as_sq);
        if (b_max < 1) continue;
        if (!b_mod4_filter) {
            cnt += b_max;
        } else {
            // b in [1, b_max] with b = 1 (mod 4)
            cnt += (b_max - 1) / 4 + 1;
        }
    }
    return cnt;
}

}  // namespace

QuadCountBound quad_count_bound(long d) {
    if (d < 3) throw std::invalid_argument("quad_count_bound: d must be >= 3");
    QuadCountBound r;
    Int s1_sq = Int(4) * (d - 1);    // (2q)^2
    Int s2_sq = Int(16) * (d - 1);   // (4q)^2
    r.s1_ceil = ceil_sqrt(s1_sq);
    r.s2_ceil = ceil_sqrt(s2_sq);
    Int cube1 = pow_int(r.s1_ceil + 1, 3), cube2 = pow_int(r.s2_ceil + 1, 3);
    r.bound = (cube1 + cube2) / 3;
    r.representation_count = box_count(s1_sq, false) + box_count(s2_sq, true);
    r.value_count = Int(static_cast<long>(enumerate_quadratic_integers(d).size()));
    r.count_within_bound = r.value_count <= r.bound;
    return r;
}

}  // namespace cdx
