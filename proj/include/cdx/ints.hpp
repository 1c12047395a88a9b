#pragma once

// Exact integer/rational arithmetic. Everything certificate-facing is built
// on GMP; no floating point is used anywhere in a verification path.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cdx {

using Int = mpz_class;
using Rat = mpq_class;

inline Int isqrt_floor(const Int& n) {
    if (n < 0) throw std::invalid_argument("isqrt_floor: negative argument");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const Int& n) {
    if (n < 0) return false;
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int gcd_int(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int abs_int(const Int& a) { return a >= 0 ? a : Int(-a); }

// Exact quotient; throws if b does not divide a.
inline Int divexact(const Int& a, const Int& b) {
    if (b == 0) throw std::invalid_argument("divexact: division by zero");
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) throw std::invalid_argument("divexact: not divisible");
    return q;
}

// Positive divisors of |n| by trial division. Intended for the modest
// constant/leading coefficients that show up in rational root hunting.
inline std::vector<Int> positive_divisors(const Int& n_in) {
    Int n = abs_int(n_in);
    if (n == 0) throw std::invalid_argument("positive_divisors: zero");
    std::vector<Int> small, large;
    for (Int d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
    return small;
}

// Square-free part: n = s^2 * result with result square-free (sign kept).
inline Int squarefree_part(const Int& n_in, Int* square_root_out = nullptr) {
    if (n_in == 0) throw std::invalid_argument("squarefree_part: zero");
    Int n = abs_int(n_in), core = 1, sq = 1;
    for (Int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        if (e % 2) core *= p;
        sq *= pow_int(p, e / 2);
    }
    core *= n;  // leftover prime
    if (square_root_out) *square_root_out = sq;
    return n_in < 0 ? Int(-core) : core;
}

inline bool is_squarefree(const Int& n) {
    Int sq;
    squarefree_part(n, &sq);
    return sq == 1;
}

inline Rat make_rat(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat make_rat(long num, long den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Int& n) { return n.get_str(); }
inline std::string to_string(const Rat& q) { return q.get_str(); }

inline Rat rat_from_string(const std::string& s) {
    Rat q(s);
    q.canonicalize();
    return q;
}

}  // namespace cdx
