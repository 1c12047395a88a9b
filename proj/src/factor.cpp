#include "cdx/factor.hpp"

#include "cdx/fieldpoly.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace cdx {
namespace {

// ======================= arithmetic in F_p[x], p small =======================

struct ZpPoly {
    long p;
    std::vector<long> c;  // ascending, normalized

    void norm() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    long lc() const { return c.empty() ? 0 : c.back(); }
};

long mod_inv(long a, long p) {
    long t = 0, nt = 1, r = p, nr = ((a % p) + p) % p;
    while (nr != 0) {
        long q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    if (r != 1) throw std::logic_error("mod_inv: not invertible");
    return ((t % p) + p) % p;
}

ZpPoly zp_from(const IntPoly& f, long p) {
    ZpPoly r{p, {}};
    r.c.reserve(f.degree() + 1);
    for (int i = 0; i <= f.degree(); ++i) {
        Int m = f.coeff(i) % p;
        if (m < 0) m += p;
        r.c.push_back(m.get_si());
    }
    r.norm();
    return r;
}

ZpPoly zp_mul(const ZpPoly& a, const ZpPoly& b) {
    if (a.is_zero() || b.is_zero()) return ZpPoly{a.p, {}};
    std::vector<long> r(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j) r[i + j] = (r[i + j] + a.c[i] * b.c[j]) % a.p;
    }
    ZpPoly res{a.p, std::move(r)};
    res.norm();
    return res;
}

ZpPoly zp_sub(const ZpPoly& a, const ZpPoly& b) {
    std::vector<long> r(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < a.c.size(); ++i) r[i] = a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r[i] = ((r[i] - b.c[i]) % a.p + a.p) % a.p;
    ZpPoly res{a.p, std::move(r)};
    res.norm();
    return res;
}

void zp_divmod(const ZpPoly& a, const ZpPoly& b, ZpPoly& q, ZpPoly& r) {
    if (b.is_zero()) throw std::invalid_argument("zp_divmod: division by zero");
    long p = a.p;
    std::vector<long> rem = a.c;
    int db = b.degree();
    std::vector<long> quot;
    if (a.degree() >= db) quot.assign(a.degree() - db + 1, 0);
    long binv = mod_inv(b.lc(), p);
    for (int i = static_cast<int>(rem.size()) - 1; i >= db; --i) {
        if (rem[i] == 0) continue;
        long f = rem[i] * binv % p;
        quot[i - db] = f;
        for (int j = 0; j <= db; ++j)
            rem[i - db + j] = ((rem[i - db + j] - f * b.c[j]) % p + p) % p;
    }
    q = ZpPoly{p, std::move(quot)};
    q.norm();
    r = ZpPoly{p, std::move(rem)};
    r.norm();
}

ZpPoly zp_mod(const ZpPoly& a, const ZpPoly& b) {
    ZpPoly q, r;
    zp_divmod(a, b, q, r);
    return r;
}

ZpPoly zp_gcd(ZpPoly a, ZpPoly b) {
    while (!b.is_zero()) {
        ZpPoly r = zp_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) {
        long inv = mod_inv(a.lc(), a.p);
        for (auto& x : a.c) x = x * inv % a.p;
    }
    return a;
}

ZpPoly zp_monic(ZpPoly a) {
    if (a.is_zero()) return a;
    long inv = mod_inv(a.lc(), a.p);
    for (auto& x : a.c) x = x * inv % a.p;
    return a;
}

ZpPoly zp_deriv(const ZpPoly& a) {
    ZpPoly r{a.p, {}};
    for (size_t i = 1; i < a.c.size(); ++i) r.c.push_back(a.c[i] * (static_cast<long>(i) % a.p) % a.p);
    r.norm();
    return r;
}

ZpPoly zp_powmod(const ZpPoly& base, const Int& e, const ZpPoly& mod) {
    ZpPoly result{base.p, {1}};
    ZpPoly b = zp_mod(base, mod);
    Int exp = e;
    while (exp > 0) {
        if (mpz_odd_p(exp.get_mpz_t())) result = zp_mod(zp_mul(result, b), mod);
        b = zp_mod(zp_mul(b, b), mod);
        exp >>= 1;
    }
    return result;
}

ZpPoly zp_x(long p) { return ZpPoly{p, {0, 1}}; }

// Distinct-degree splitting: list of (product of irreducible factors of
// degree d, d) for monic square-free input.
std::vector<std::pair<ZpPoly, int>> zp_ddf(ZpPoly f) {
    std::vector<std::pair<ZpPoly, int>> out;
    long p = f.p;
    ZpPoly h = zp_x(p);
    int d = 0;
    while (f.degree() > 2 * (d + 1) - 1 && f.degree() > 0) {
        ++d;
        h = zp_powmod(h, Int(p), f);
        ZpPoly g = zp_gcd(zp_sub(h, zp_x(p)), f);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            ZpPoly q, r;
            zp_divmod(f, g, q, r);
            f = zp_monic(q);
            h = zp_mod(h, f);
        }
    }
    if (f.degree() > 0) out.emplace_back(f, f.degree());
    return out;
}

// Equal-degree splitting (Cantor-Zassenhaus) with a deterministic retry
// schedule over small field elements, so runs reproduce bit-for-bit.
void zp_edf(const ZpPoly& f, int d, std::vector<ZpPoly>& out) {
    if (f.degree() == d) {
        out.push_back(zp_monic(f));
        return;
    }
    long p = f.p;
    Int exponent = (pow_int(Int(p), static_cast<unsigned long>(d)) - 1) / 2;
    // Deterministic candidates: x+1, x+2, ..., then quadratics, cubics, ...
    for (int deg = 1;; ++deg) {
        std::vector<long> idx(deg + 1, 0);
        idx[deg] = 1;
        while (true) {
            ZpPoly cand{p, idx};
            cand.norm();
            if (cand.degree() == deg) {
                ZpPoly b = zp_powmod(cand, exponent, f);
                b = zp_sub(b, ZpPoly{p, {1}});
                ZpPoly g = zp_gcd(b, f);
                if (g.degree() > 0 && g.degree() < f.degree()) {
                    ZpPoly q, r;
                    zp_divmod(f, g, q, r);
                    zp_edf(g, d, out);
                    zp_edf(zp_monic(q), d, out);
                    return;
                }
            }
            // next candidate below the leading term
            int i = 0;
            while (i < deg && idx[i] == p - 1) idx[i++] = 0;
            if (i == deg) break;
            ++idx[i];
        }
    }
}

std::vector<ZpPoly> zp_factor_squarefree(const ZpPoly& f) {
    std::vector<ZpPoly> out;
    for (const auto& [part, d] : zp_ddf(zp_monic(f))) zp_edf(part, d, out);
    std::sort(out.begin(), out.end(), [](const ZpPoly& a, const ZpPoly& b) { return a.c < b.c; });
    return out;
}

// ======================= arithmetic mod p^k (big modulus) ===================

struct ZqPoly {
    Int m;                 // modulus
    std::vector<Int> c;    // in [0, m)

    void norm() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
};

Int zq_red(const Int& x, const Int& m) {
    Int r = x % m;
    if (r < 0) r += m;
    return r;
}

ZqPoly zq_from(const IntPoly& f, const Int& m) {
    ZqPoly r{m, {}};
    for (int i = 0; i <= f.degree(); ++i) r.c.push_back(zq_red(f.coeff(i), m));
    r.norm();
    return r;
}

ZqPoly zq_from_zp(const ZpPoly& f, const Int& m) {
    ZqPoly r{m, {}};
    for (long x : f.c) r.c.emplace_back(x);
    r.norm();
    return r;
}

ZqPoly zq_lift_mod(const ZqPoly& f, const Int& m) {  // reinterpret mod m
    ZqPoly r{m, {}};
    for (const Int& x : f.c) r.c.push_back(zq_red(x, m));
    r.norm();
    return r;
}

ZqPoly zq_mul(const ZqPoly& a, const ZqPoly& b) {
    if (a.is_zero() || b.is_zero()) return ZqPoly{a.m, {}};
    std::vector<Int> r(a.c.size() + b.c.size() - 1, Int(0));
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
    }
    for (auto& x : r) x = zq_red(x, a.m);
    ZqPoly res{a.m, std::move(r)};
    res.norm();
    return res;
}

ZqPoly zq_add(const ZqPoly& a, const ZqPoly& b) {
    std::vector<Int> r(std::max(a.c.size(), b.c.size()), Int(0));
    for (size_t i = 0; i < a.c.size(); ++i) r[i] = a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r[i] = zq_red(r[i] + b.c[i], a.m);
    ZqPoly res{a.m, std::move(r)};
    res.norm();
    return res;
}

ZqPoly zq_sub(const ZqPoly& a, const ZqPoly& b) {
    std::vector<Int> r(std::max(a.c.size(), b.c.size()), Int(0));
    for (size_t i = 0; i < a.c.size(); ++i) r[i] = a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r[i] = zq_red(r[i] - b.c[i], a.m);
    ZqPoly res{a.m, std::move(r)};
    res.norm();
    return res;
}

// Division by a monic divisor.
void zq_divmod_monic(const ZqPoly& a, const ZqPoly& b, ZqPoly& q, ZqPoly& r) {
    if (b.is_zero() || b.c.back() != 1) throw std::logic_error("zq_divmod_monic: divisor not monic");
    std::vector<Int> rem = a.c;
    int db = b.degree();
    std::vector<Int> quot;
    if (a.degree() >= db) quot.assign(a.degree() - db + 1, Int(0));
    for (int i = static_cast<int>(rem.size()) - 1; i >= db; --i) {
        if (rem[i] == 0) continue;
        Int f = rem[i];
        quot[i - db] = f;
        for (int j = 0; j <= db; ++j) rem[i - db + j] = zq_red(rem[i - db + j] - f * b.c[j], a.m);
    }
    q = ZqPoly{a.m, std::move(quot)};
    q.norm();
    r = ZqPoly{a.m, std::move(rem)};
    r.norm();
}

// Symmetric representative in (-m/2, m/2].
IntPoly zq_symmetric(const ZqPoly& f) {
    std::vector<Int> c;
    Int half = f.m / 2;
    for (const Int& x : f.c) c.push_back(x > half ? Int(x - f.m) : x);
    return IntPoly(std::move(c));
}

// =========================== Hensel lifting ================================

struct HenselPair {
    ZqPoly g, h, s, t;  // f = g h, s g + t h = 1 (mod m); g, h monic
};

// One quadratic step: modulus m -> m^2 (von zur Gathen & Gerhard, Alg. 15.10/15.12).
HenselPair hensel_step(const ZqPoly& f_m2, const HenselPair& in, const Int& m2) {
    ZqPoly g = zq_lift_mod(in.g, m2), h = zq_lift_mod(in.h, m2);
    ZqPoly s = zq_lift_mod(in.s, m2), t = zq_lift_mod(in.t, m2);
    ZqPoly e = zq_sub(f_m2, zq_mul(g, h));
    ZqPoly q, r;
    zq_divmod_monic(zq_mul(s, e), h, q, r);
    ZqPoly gs = zq_add(g, zq_add(zq_mul(t, e), zq_mul(q, g)));
    ZqPoly hs = zq_add(h, r);
    ZqPoly b = zq_sub(zq_add(zq_mul(s, gs), zq_mul(t, hs)), ZqPoly{m2, {Int(1)}});
    ZqPoly c, d;
    zq_divmod_monic(zq_mul(s, b), hs, c, d);
    ZqPoly ss = zq_sub(s, d);
    ZqPoly ts = zq_sub(t, zq_add(zq_mul(t, b), zq_mul(c, gs)));
    return HenselPair{gs, hs, ss, ts};
}

// Bezout cofactors over F_p for coprime a, b.
void zp_ext_gcd(const ZpPoly& a, const ZpPoly& b, ZpPoly& s, ZpPoly& t) {
    long p = a.p;
    ZpPoly r0 = a, r1 = b;
    ZpPoly s0{p, {1}}, s1{p, {}}, t0{p, {}}, t1{p, {1}};
    while (!r1.is_zero()) {
        ZpPoly q, r;
        zp_divmod(r0, r1, q, r);
        ZpPoly s2 = zp_sub(s0, zp_mul(q, s1));
        ZpPoly t2 = zp_sub(t0, zp_mul(q, t1));
        r0 = std::move(r1); r1 = std::move(r);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (r0.degree() != 0) throw std::logic_error("zp_ext_gcd: inputs not coprime");
    long inv = mod_inv(r0.lc(), p);
    for (auto& x : s0.c) x = x * inv % p;
    for (auto& x : t0.c) x = x * inv % p;
    s = s0;
    t = t0;
}

// Lift the factorization f = prod(factors) from mod p to mod M >= target,
// where f and all factors are monic. Returns factors mod exactly `modulus`.
void hensel_lift_list(const IntPoly& f, long p, const std::vector<ZpPoly>& factors,
                      const Int& target, const Int& modulus, std::vector<ZqPoly>& out) {
    if (factors.size() == 1) {
        out.push_back(zq_from(f, modulus));
        return;
    }
    size_t half = factors.size() / 2;
    std::vector<ZpPoly> left(factors.begin(), factors.begin() + half);
    std::vector<ZpPoly> right(factors.begin() + half, factors.end());
    ZpPoly g0{p, {1}}, h0{p, {1}};
    for (const auto& x : left) g0 = zp_mul(g0, x);
    for (const auto& x : right) h0 = zp_mul(h0, x);
    ZpPoly s0, t0;
    zp_ext_gcd(g0, h0, s0, t0);

    Int m(p);
    HenselPair cur{zq_from_zp(g0, m), zq_from_zp(h0, m), zq_from_zp(s0, m), zq_from_zp(t0, m)};
    while (m < target) {
        Int m2 = m * m;
        cur = hensel_step(zq_from(f, m2), cur, m2);
        m = m2;
    }
    IntPoly g_int = zq_symmetric(zq_lift_mod(cur.g, modulus));
    IntPoly h_int = zq_symmetric(zq_lift_mod(cur.h, modulus));
    hensel_lift_list(g_int, p, left, target, modulus, out);
    hensel_lift_list(h_int, p, right, target, modulus, out);
}

// ====================== square-free & helpers over Z =======================

IntPoly int_gcd_primitive(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero()) return b.is_zero() ? b : b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    RatPoly g = RatPoly::gcd(ratpoly_from(a), ratpoly_from(b));
    return primitive_from_ratpoly(g);
}

IntPoly divexact_poly(const IntPoly& a, const IntPoly& b) {
    IntPoly q;
    if (!IntPoly::divide_exact(a, b, q)) throw std::logic_error("divexact_poly: inexact");
    return q;
}

bool zp_squarefree(const ZpPoly& f) {
    return zp_gcd(f, zp_deriv(f)).degree() == 0;
}

long next_prime_after(long n) {
    Int p(n);
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    return p.get_si();
}

// The smallest `count` primes > deg(f) with f square-free mod p and
// p not dividing lc(f).
std::vector<long> good_primes(const IntPoly& f, int count) {
    std::vector<long> primes;
    long p = f.degree() >= 2 ? f.degree() : 2;
    while (static_cast<int>(primes.size()) < count) {
        p = next_prime_after(p);
        if (f.leading() % p == 0) continue;
        if (!zp_squarefree(zp_from(f, p))) continue;
        primes.push_back(p);
    }
    return primes;
}

// Monicize a primitive f with leading coefficient l: F(x) = l^(n-1) f(x/l).
// Monic integer factors of F pull back through G(l*x) -> primitive part.
IntPoly monicize(const IntPoly& f, const Int& l) {
    int n = f.degree();
    std::vector<Int> c(n + 1);
    Int power(1);  // l^(n-1-j)
    for (int j = n; j >= 0; --j) {
        c[j] = f.coeff(j) * (j == n ? Int(1) : power);
        if (j > 0) power *= l;
    }
    return IntPoly(std::move(c));
}

IntPoly pull_back(const IntPoly& monic_factor, const Int& l) {
    IntPoly g = monic_factor.scale_arg(l);
    IntPoly prim = g.primitive_part();
    if (prim.leading() < 0) prim = -prim;
    return prim;
}

// Factor a primitive square-free polynomial of degree >= 1, lc > 0.
std::vector<IntPoly> factor_squarefree_primitive(const IntPoly& f) {
    if (f.degree() == 1) return {f};
    const Int l = f.leading();
    const IntPoly F = monicize(f, l);

    long p = good_primes(F, 1)[0];
    std::vector<ZpPoly> modular = zp_factor_squarefree(zp_from(F, p));
    if (modular.size() == 1) return {f};

    // Lift past twice the factor bound so symmetric representatives are exact.
    Int bound = mignotte_factor_bound(F);
    Int target = 2 * bound + 1;
    Int modulus(p);
    while (modulus < target) modulus *= p;
    std::vector<ZqPoly> lifted;
    hensel_lift_list(F, p, modular, target, modulus, lifted);

    // Zassenhaus: subsets in increasing cardinality, trial exact division.
    std::vector<IntPoly> monic_factors;
    std::vector<int> alive(lifted.size());
    for (size_t i = 0; i < alive.size(); ++i) alive[i] = static_cast<int>(i);
    IntPoly remaining = F;

    bool progressed = true;
    while (progressed && !alive.empty()) {
        progressed = false;
        size_t r = alive.size();
        for (size_t card = 1; card <= r / 2 && !progressed; ++card) {
            std::vector<size_t> comb(card);
            for (size_t i = 0; i < card; ++i) comb[i] = i;
            while (true) {
                ZqPoly prod{modulus, {Int(1)}};
                for (size_t i : comb) prod = zq_mul(prod, lifted[alive[i]]);
                IntPoly cand = zq_symmetric(prod);
                IntPoly q;
                if (IntPoly::divide_exact(remaining, cand, q)) {
                    monic_factors.push_back(cand);
                    remaining = q;
                    std::vector<int> next_alive;
                    for (size_t i = 0, ci = 0; i < alive.size(); ++i) {
                        if (ci < comb.size() && comb[ci] == i) { ++ci; continue; }
                        next_alive.push_back(alive[i]);
                    }
                    alive = std::move(next_alive);
                    progressed = true;
                    break;
                }
                // next combination
                long k = static_cast<long>(card) - 1;
                while (k >= 0 && comb[k] == r - card + k) --k;
                if (k < 0) break;
                ++comb[k];
                for (size_t j = k + 1; j < card; ++j) comb[j] = comb[j - 1] + 1;
            }
        }
    }
    if (remaining.degree() > 0) monic_factors.push_back(remaining);

    std::vector<IntPoly> out;
    for (const auto& g : monic_factors) out.push_back(pull_back(g, l));
    return out;
}

}  // namespace

Int mignotte_factor_bound(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("mignotte_factor_bound: zero polynomial");
    // |coeff of factor| <= 2^deg * ||p||_2 (classical Landau-Mignotte form).
    Int norm = isqrt_floor(p.norm2_sq()) + 1;
    return pow_int(Int(2), static_cast<unsigned long>(p.degree())) * norm;
}

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree_decomposition: zero polynomial");
    IntPoly f = p.primitive_part();
    std::vector<std::pair<IntPoly, int>> out;
    if (f.degree() < 1) return out;
    // Yun's algorithm.
    IntPoly g = int_gcd_primitive(f, f.derivative());
    if (g.degree() == 0) {
        out.emplace_back(f, 1);
        return out;
    }
    IntPoly c = divexact_poly(f, g);
    IntPoly d = divexact_poly(f.derivative(), g) - c.derivative();
    for (int i = 1;; ++i) {
        IntPoly a = int_gcd_primitive(c, d);
        if (a.degree() > 0) out.emplace_back(a, i);
        c = divexact_poly(c, a);
        if (c.degree() == 0) break;
        d = divexact_poly(d, a) - c.derivative();
    }
    return out;
}

std::vector<std::pair<Rat, int>> rational_roots(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
    std::vector<std::pair<Rat, int>> out;
    IntPoly f = p.primitive_part();
    // Zero roots first.
    int v = 0;
    while (f.degree() >= 1 && f.coeff(0) == 0) {
        IntPoly q;
        IntPoly::divide_exact(f, IntPoly::x(), q);
        f = q;
        ++v;
    }
    if (v > 0) out.emplace_back(Rat(0), v);
    if (f.degree() < 1) return out;

    std::vector<Int> nums = positive_divisors(f.coeff(0));
    std::vector<Int> dens = positive_divisors(f.leading());
    for (const Int& den : dens) {
        for (const Int& num : nums) {
            if (gcd_int(num, den) != 1) continue;
            for (int sign : {1, -1}) {
                Rat root = make_rat(sign * num, den);
                if (f.eval(root) != 0) continue;
                int mult = 0;
                // deflate by (den*x - sign*num)
                IntPoly lin(std::vector<Int>{Int(-sign * num), den});
                IntPoly q;
                while (IntPoly::divide_exact(f, lin, q)) {
                    f = q.primitive_part();
                    ++mult;
                }
                out.emplace_back(root, mult);
            }
        }
        if (f.degree() < 1) break;
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

Factorization factor_over_integers(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("factor_over_integers: zero polynomial");
    Factorization fact;
    fact.content = p.content();
    if (p.degree() < 1) {
        fact.certificate = "rational-root";
        return fact;
    }
    IntPoly prim = p.primitive_part();
    bool used_recombination = false;
    for (const auto& [part, mult] : squarefree_decomposition(prim)) {
        if (part.degree() >= 2) used_recombination = true;
        for (const IntPoly& irr : factor_squarefree_primitive(part)) {
            bool merged = false;
            for (auto& [f, m] : fact.factors) {
                if (f == irr) { m += mult; merged = true; break; }
            }
            if (!merged) fact.factors.emplace_back(irr, mult);
        }
    }
    std::sort(fact.factors.begin(), fact.factors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    fact.certificate = used_recombination ? "hensel-recombination" : "rational-root";
    return fact;
}

IrreducibilityResult is_irreducible(const IntPoly& p_in) {
    if (p_in.degree() < 1) throw std::invalid_argument("is_irreducible: degree must be >= 1");
    IntPoly p = p_in.primitive_part();
    if (p.degree() == 1) return {true, "degree-1"};

    // Modular degree patterns: achievable factor degrees are subset sums of
    // the mod-p degree multiset; a common proper degree across all primes is
    // necessary for reducibility.
    const int n = p.degree();
    IntPoly F = monicize(p, p.leading());
    std::vector<long> primes = good_primes(F, 5);
    std::set<int> common;
    for (int i = 1; i < n; ++i) common.insert(i);
    for (long q : primes) {
        auto parts = zp_ddf(zp_monic(zp_from(F, q)));
        // subset sums of factor degrees
        std::vector<char> reach(n + 1, 0);
        reach[0] = 1;
        for (const auto& [prod, d] : parts) {
            int copies = prod.degree() / d;
            for (int c = 0; c < copies; ++c)
                for (int s = n - d; s >= 0; --s)
                    if (reach[s]) reach[s + d] = 1;
        }
        std::set<int> here;
        for (int i = 1; i < n; ++i)
            if (reach[i]) here.insert(i);
        std::set<int> inter;
        std::set_intersection(common.begin(), common.end(), here.begin(), here.end(),
                              std::inserter(inter, inter.begin()));
        common = std::move(inter);
        if (common.empty()) return {true, "modular-degree-pattern"};
    }

    Factorization fact = factor_over_integers(p);
    bool irr = fact.factors.size() == 1 && fact.factors[0].second == 1;
    return {irr, "hensel-recombination"};
}

std::optional<IntPoly> has_factor_degree_le2(const IntPoly& p) {
    if (p.degree() < 1) throw std::invalid_argument("has_factor_degree_le2: degree must be >= 1");
    Factorization fact = factor_over_integers(p);
    std::optional<IntPoly> best;
    for (const auto& [f, m] : fact.factors) {
        if (f.degree() > 2) continue;
        if (!best || f < *best) best = f;
    }
    return best;
}

}  // namespace cdx
