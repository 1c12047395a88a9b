#pragma once

// The polynomial families behind the Moore bound: G_{d,m} (path-counting
// polynomials), Chebyshev U_m, and streaming evaluation of G_{d,k}(x) in an
// arbitrary exact ring.

#include "cdx/intpoly.hpp"
#include "cdx/quadint.hpp"

#include <cstdint>
#include <stdexcept>

namespace cdx {

enum class Mode { defect, excess };

inline const char* mode_name(Mode m) { return m == Mode::defect ? "defect" : "excess"; }

// Parameters of one defect/excess instance: degree d, index k (diameter D or
// floor(g/2)), and which sign convention ties G to the matrix equation.
struct GParams {
    long d;
    long k;
    Mode mode;

    GParams(long d_, long k_, Mode mode_) : d(d_), k(k_), mode(mode_) {
        if (d < 3) throw std::invalid_argument("GParams: d must be >= 3");
        if (k < 0) throw std::invalid_argument("GParams: k must be >= 0");
    }
    // Moore bound minus/plus the defect/excess 2.
    Int order() const;
};

// M_{d,k} = 1 + d + d(d-1) + ... + d(d-1)^{k-1}; equals 2k+1 for d = 2.
inline Int moore_bound(long d, long k) {
    if (d < 2) throw std::invalid_argument("moore_bound: d must be >= 2");
    if (k < 1) throw std::invalid_argument("moore_bound: k must be >= 1");
    Int sum = 1, term = d;
    for (long i = 0; i < k; ++i) {
        sum += term;
        term *= d - 1;
    }
    return sum;
}

inline Int GParams::order() const {
    return mode == Mode::defect ? Int(moore_bound(d, k) - 2) : Int(moore_bound(d, k) + 2);
}

// G_{d,0} = 1, G_{d,1} = x+1, G_{d,m+1} = x G_{d,m} - (d-1) G_{d,m-1}.
inline IntPoly g_poly(long d, long m) {
    if (d < 3) throw std::invalid_argument("g_poly: d must be >= 3");
    if (m < 0) throw std::invalid_argument("g_poly: m must be >= 0");
    IntPoly prev = IntPoly::constant(1);
    if (m == 0) return prev;
    IntPoly cur{1, 1};
    const IntPoly x = IntPoly::x();
    const Int a = Int(d) - 1;
    for (long i = 1; i < m; ++i) {
        IntPoly next = x * cur - a * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

// Chebyshev polynomials of the second kind: U_0 = 1, U_1 = 2x,
// U_{m+2} = 2x U_{m+1} - U_m.
inline IntPoly u_poly(long m) {
    if (m < 0) throw std::invalid_argument("u_poly: m must be >= 0");
    IntPoly prev = IntPoly::constant(1);
    if (m == 0) return prev;
    IntPoly cur{0, 2};
    const IntPoly two_x{0, 2};
    for (long i = 1; i < m; ++i) {
        IntPoly next = two_x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

// Z/mZ with a small modulus.
class ModInt {
public:
    ModInt() : m_(2), v_(0) {}
    ModInt(long m, long v) : m_(m), v_(((v % m) + m) % m) {}
    static ModInt reduce(const Int& x, long m) {
        Int r = x % m;
        if (r < 0) r += m;
        return ModInt(m, r.get_si());
    }
    long value() const { return v_; }
    long modulus() const { return m_; }
    bool operator==(const ModInt& o) const { return m_ == o.m_ && v_ == o.v_; }
    friend ModInt operator+(const ModInt& x, const ModInt& y) { return ModInt(x.m_, x.v_ + y.v_); }
    friend ModInt operator-(const ModInt& x, const ModInt& y) { return ModInt(x.m_, x.v_ - y.v_); }
    friend ModInt operator*(const ModInt& x, const ModInt& y) { return ModInt(x.m_, x.v_ * y.v_); }
    friend ModInt operator*(const ModInt& x, long n) { return ModInt(x.m_, x.v_ * (((n % x.m_) + x.m_) % x.m_)); }

private:
    long m_, v_;
};

// Streaming evaluation of G_{d,k}(x) in ring R. Keeps only the pair state
// (G_{k-1}, G_k); one ring multiply-subtract per step, O(1) memory, so scans
// to k = 20000 with big integers never hold more than two values.
template <class R>
class GValueStream {
public:
    // x and the ring image of d-1 are supplied by the caller.
    GValueStream(long d, R x, R d_minus_1, R one)
        : x_(std::move(x)), a_(std::move(d_minus_1)), prev_(one), cur_(x_ + one), d_(d), k_(1) {}

    long d() const { return d_; }
    long index() const { return k_; }            // current k
    const R& value() const { return cur_; }      // G_{d,k}(x)
    const R& prev_value() const { return prev_; }

    void step() {
        R next = x_ * cur_ - a_ * prev_;
        prev_ = std::move(cur_);
        cur_ = std::move(next);
        ++k_;
    }
    // Advance to index k (k >= current index).
    void advance_to(long k) {
        while (k_ < k) step();
    }

private:
    R x_, a_, prev_, cur_;
    long d_;
    long k_;
};

inline GValueStream<Int> g_values_int(long d, const Int& x) {
    return GValueStream<Int>(d, x, Int(d) - 1, Int(1));
}
inline GValueStream<ModInt> g_values_mod(long d, long x, long m) {
    return GValueStream<ModInt>(d, ModInt(m, x), ModInt(m, d - 1), ModInt(m, 1));
}
inline GValueStream<QuadInt> g_values_quad(long d, const QuadInt& x) {
    return GValueStream<QuadInt>(d, x, QuadInt::integer(x.r(), Int(d) - 1), QuadInt::integer(x.r(), 1));
}
inline GValueStream<ModQuad> g_values_quadmod(long d, const QuadInt& x, long m) {
    return GValueStream<ModQuad>(d, ModQuad::reduce(x, m),
                                 ModQuad::reduce(QuadInt::integer(x.r(), Int(d) - 1), m),
                                 ModQuad::reduce(QuadInt::integer(x.r(), 1), m));
}

}  // namespace cdx
