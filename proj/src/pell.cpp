#include "cdx/pell.hpp"

#include <stdexcept>

namespace cdx {

std::pair<Int, Int> lucas_fib(long m) {
    long n = m < 0 ? -m : m;
    Int l0 = 2, l1 = 1, f0 = 0, f1 = 1;
    if (n == 0) return {l0, f0};
    for (long i = 1; i < n; ++i) {
        Int l2 = l1 + l0, f2 = f1 + f0;
        l0 = std::move(l1);
        l1 = std::move(l2);
        f0 = std::move(f1);
        f1 = std::move(f2);
    }
    if (m < 0) {
        if (n % 2 == 0) f1 = -f1;  // F_{-n} = (-1)^{n+1} F_n
        if (n % 2 == 1) l1 = -l1;  // L_{-n} = (-1)^n L_n
    }
    return {l1, f1};
}

Int g_a1_4(const Int& a, const Int& x) {
    return x * x * x * x + x * x * x - 3 * a * x * x - 2 * a * x + a * a;
}

std::vector<PellRecord> pell_family(long m_lo, long m_hi) {
    if (m_lo > m_hi) throw std::invalid_argument("pell_family: m_lo > m_hi");
    std::vector<PellRecord> out;
    for (long m = m_lo; m <= m_hi; ++m) {
        auto [L, F] = lucas_fib(4 * m + 3);
        for (int zs : {1, -1}) {
            Int z = zs > 0 ? L : Int(-L);
            if ((z - 4) % 5 != 0) continue;  // x = (-4+z)/5 must be integral
            PellRecord rec;
            rec.m = m;
            rec.z_sign = z >= 0 ? 1 : -1;
            rec.z = z;
            rec.t = F >= 0 ? F : Int(-F);  // canonical nonnegative t; both signs below
            rec.t_sign = 1;
            rec.x = (z - 4) / 5;
            Int base = 3 * rec.x + 2;
            Int plus = rec.x * (base + rec.t), minus = rec.x * (base - rec.t);
            if (plus % 2 == 0) rec.a_plus = plus / 2;
            if (minus % 2 == 0) rec.a_minus = minus / 2;
            rec.g_identity_ok = true;
            if (rec.a_plus && g_a1_4(*rec.a_plus, rec.x) != 0) rec.g_identity_ok = false;
            if (rec.a_minus && g_a1_4(*rec.a_minus, rec.x) != 0) rec.g_identity_ok = false;
            out.push_back(std::move(rec));
        }
    }
    return out;
}

std::vector<std::pair<Int, Int>> pell_brute_oracle(long limit) {
    if (limit < 4) throw std::invalid_argument("pell_brute_oracle: limit must be >= 4");
    std::vector<std::pair<Int, Int>> out;
    for (long z = 0; z <= limit; ++z) {
        Int rhs = Int(z) * z + 4;
        if (rhs % 5 != 0) continue;
        Int t2 = rhs / 5;
        if (!is_perfect_square(t2)) continue;
        out.emplace_back(Int(z), isqrt_floor(t2));
    }
    return out;
}

Int resolvent_eval(const Int& a, const Int& y) {
    return y * y * y + 3 * a * y * y - (2 * a + 4 * a * a) * y - (5 * a * a + 12 * a * a * a);
}

namespace {

Int fdiv(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}
Int cdiv(const Int& a, const Int& b) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// Binary search for an exact zero on an interval where p(a, .) is monotone.
bool monotone_has_root(const Int& a, Int lo, Int hi, bool increasing) {
    while (lo <= hi) {
        Int mid = fdiv(lo + hi, Int(2));
        Int v = resolvent_eval(a, mid);
        if (v == 0) return true;
        bool go_right = increasing ? (v < 0) : (v > 0);
        if (go_right)
            lo = mid + 1;
        else
            hi = mid - 1;
    }
    return false;
}

}  // namespace

bool resolvent_cubic_scan(long a_max) {
    if (a_max < 1) throw std::invalid_argument("resolvent_cubic_scan: a_max must be >= 1");
    const Int three(3);
    for (long al = 1; al <= a_max; ++al) {
        Int a(al);
        // p'(y) = 3y^2 + 6ay - (2a+4a^2) vanishes at c_{1,2} = (-3a -+ sqrt(21a^2+6a))/3.
        // p increases on (-inf, c1], decreases on [c1, c2], increases on [c2, inf).
        Int disc = 21 * a * a + 6 * a;
        Int s = isqrt_floor(disc);  // s <= sqrt(disc) < s+1
        Int a_hi = fdiv(-3 * a - s - 1, three);       // <= c1
        Int b_lo = cdiv(-3 * a - s, three);           // >= c1
        Int b_hi = fdiv(-3 * a + s, three);           // <= c2
        Int c_lo = cdiv(-3 * a + s + 1, three);       // >= c2
        Int big = 13 * a * a * a + 13 * a * a + 13 * a + 13;  // beyond every root
        if (monotone_has_root(a, -big, a_hi, true)) return false;
        if (b_lo <= b_hi && monotone_has_root(a, b_lo, b_hi, false)) return false;
        if (monotone_has_root(a, c_lo, big, true)) return false;
        // Stray integers in the two bracket gaps get checked directly.
        for (Int y = a_hi + 1; y < b_lo; ++y)
            if (resolvent_eval(a, y) == 0) return false;
        for (Int y = b_hi + 1; y < c_lo; ++y)
            if (resolvent_eval(a, y) == 0) return false;
    }
    return true;
}

}  // namespace cdx
