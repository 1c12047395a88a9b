#pragma once

// Sturm chains over an exact ordered field. All sign decisions are exact;
// endpoint roots are handled by deflating the polynomial at the endpoint.

#include "cdx/fieldpoly.hpp"
#include "cdx/interval.hpp"
#include "cdx/quadfield.hpp"

#include <stdexcept>
#include <vector>

namespace cdx {

template <class K>
std::vector<FieldPoly<K>> sturm_chain(const FieldPoly<K>& p) {
    std::vector<FieldPoly<K>> chain;
    chain.push_back(p);
    chain.push_back(p.derivative());
    while (!chain.back().is_zero() && chain.back().degree() >= 0) {
        const auto& a = chain[chain.size() - 2];
        const auto& b = chain.back();
        if (b.degree() == 0) break;
        FieldPoly<K> r = a % b;
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

template <class K>
int sign_variations_at(const std::vector<FieldPoly<K>>& chain, const K& x) {
    int var = 0, prev = 0;
    for (const auto& p : chain) {
        int s = sign_of(p.eval(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

// Distinct real roots of a square-free p in the open interval (lo, hi).
// Endpoint roots are removed by exact division before counting.
template <class K>
int sturm_count_open(FieldPoly<K> p, const K& lo, const K& hi) {
    if (p.is_zero()) throw std::invalid_argument("sturm_count_open: zero polynomial");
    for (const K* e : {&lo, &hi}) {
        if (sign_of(p.eval(*e)) == 0) {
            FieldPoly<K> lin(std::vector<K>{K(0) - *e, K(1)});
            p = p / lin;  // square-free: single factor
        }
    }
    if (p.degree() == 0) return 0;
    auto chain = sturm_chain(p);
    return sign_variations_at(chain, lo) - sign_variations_at(chain, hi);
}

// A bound B with all real roots of p inside (-B, B) (Cauchy bound).
template <class K>
Rat cauchy_root_bound_rat(const FieldPoly<Rat>& p) = delete;

inline Rat cauchy_root_bound(const RatPoly& p) {
    if (p.is_zero() || p.degree() < 1) return Rat(1);
    Rat m(0);
    for (int i = 0; i < p.degree(); ++i) {
        Rat a = abs(p.coeff(i) / p.leading());
        if (a > m) m = a;
    }
    return m + 1;
}

// Total number of distinct real roots of a square-free rational polynomial.
inline int total_real_roots(const RatPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("total_real_roots: zero polynomial");
    if (p.degree() == 0) return 0;
    Rat b = cauchy_root_bound(p);
    return sturm_count_open(p, Rat(-b), b);
}

// Exact count of distinct real roots of square-free p in iv. Rejects
// non-square-free input; callers divide by gcd(p, p') first.
inline int sturm_root_count(const RatPoly& p, const Interval& iv) {
    if (p.is_zero()) throw std::invalid_argument("sturm_root_count: zero polynomial");
    RatPoly g = RatPoly::gcd(p, p.derivative());
    if (g.degree() > 0) throw std::invalid_argument("sturm_root_count: polynomial is not square-free");
    int inside = sturm_count_open(p, iv.lo, iv.hi);
    if (!iv.lo_open && p.eval(iv.lo) == 0) ++inside;
    if (!iv.hi_open && p.eval(iv.hi) == 0) ++inside;
    return inside;
}

inline int sturm_root_count(const IntPoly& p, const Interval& iv) {
    return sturm_root_count(ratpoly_from(p), iv);
}

}  // namespace cdx
