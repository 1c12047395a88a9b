#pragma once

// Elements (a + b*sqrt(r))/h of the ring of integers of Q(sqrt(r)),
// r square-free, h in {1,2}. h=2 is only legal when r = 1 (mod 4) and
// a = b (mod 2); canonical form uses h=1 whenever possible.

#include "cdx/ints.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace cdx {

class QuadInt {
public:
    QuadInt() : r_(2), a_(0), b_(0), h_(1) {}
    QuadInt(Int r, Int a, Int b, int h = 1) : r_(std::move(r)), a_(std::move(a)), b_(std::move(b)), h_(h) {
        check_and_canonicalize();
    }
    // Rational integer n regarded as an element of the ring with base r.
    static QuadInt integer(Int r, Int n) { return QuadInt(std::move(r), std::move(n), 0, 1); }
    static QuadInt sqrt_of(Int r) { return QuadInt(r, 0, 1, 1); }

    const Int& r() const { return r_; }
    const Int& a() const { return a_; }
    const Int& b() const { return b_; }
    int h() const { return h_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational_integer() const { return b_ == 0; }

    bool operator==(const QuadInt& o) const {
        return r_ == o.r_ && a_ == o.a_ && b_ == o.b_ && h_ == o.h_;
    }
    bool operator!=(const QuadInt& o) const { return !(*this == o); }
    bool operator==(long n) const { return b_ == 0 && h_ == 1 && a_ == n; }

    QuadInt conj() const { return QuadInt(r_, a_, -b_, h_); }

    // N(x) = x * conj(x) = (a^2 - r b^2)/h^2; an integer by the ring invariant.
    Int norm() const { return divexact(a_ * a_ - r_ * b_ * b_, Int(h_) * h_); }
    // tr(x) = x + conj(x) = 2a/h.
    Int trace() const { return divexact(2 * a_, Int(h_)); }

    QuadInt operator-() const { return QuadInt(r_, -a_, -b_, h_); }

    friend QuadInt operator+(const QuadInt& x, const QuadInt& y) {
        x.require_same_ring(y);
        if (x.h_ == y.h_) return QuadInt(x.r_, x.a_ + y.a_, x.b_ + y.b_, x.h_);
        const QuadInt& two = x.h_ == 2 ? x : y;
        const QuadInt& one = x.h_ == 2 ? y : x;
        return QuadInt(x.r_, two.a_ + 2 * one.a_, two.b_ + 2 * one.b_, 2);
    }
    friend QuadInt operator-(const QuadInt& x, const QuadInt& y) { return x + (-y); }
    friend QuadInt operator*(const QuadInt& x, const QuadInt& y) {
        x.require_same_ring(y);
        Int a = x.a_ * y.a_ + x.r_ * x.b_ * y.b_;
        Int b = x.a_ * y.b_ + x.b_ * y.a_;
        int h = x.h_ * y.h_;
        if (h == 4) {
            // Ring closure guarantees the product is representable over h=2.
            if (a % 2 != 0 || b % 2 != 0 || (a - b) % 4 != 0)
                throw std::logic_error("QuadInt: product not in ring");
            a /= 2;
            b /= 2;
            h = 2;
        }
        return QuadInt(x.r_, std::move(a), std::move(b), h);
    }
    friend QuadInt operator*(const QuadInt& x, const Int& n) {
        return QuadInt(x.r_, x.a_ * n, x.b_ * n, x.h_);
    }
    friend QuadInt operator*(const Int& n, const QuadInt& x) { return x * n; }
    QuadInt& operator+=(const QuadInt& o) { return *this = *this + o; }
    QuadInt& operator-=(const QuadInt& o) { return *this = *this - o; }
    QuadInt& operator*=(const QuadInt& o) { return *this = *this * o; }

    // Coordinates over the integral basis (1, w), where w = sqrt(r) for
    // r = 2,3 (mod 4) and w = (1+sqrt(r))/2 for r = 1 (mod 4).
    void omega_coords(Int& u, Int& v) const {
        if (mod4(r_) == 1) {
            if (h_ == 2) {
                v = b_;
                u = divexact(a_ - b_, Int(2));
            } else {
                v = 2 * b_;
                u = a_ - b_;
            }
        } else {
            u = a_;
            v = b_;
        }
    }
    static QuadInt from_omega_coords(const Int& r, const Int& u, const Int& v) {
        if (mod4(r) == 1) return QuadInt(r, 2 * u + v, v, 2);
        return QuadInt(r, u, v, 1);
    }

    std::string str() const {
        std::ostringstream os;
        if (h_ == 1 && b_ == 0) {
            os << a_.get_str();
        } else {
            if (h_ == 2) os << "(";
            os << a_.get_str();
            if (b_ >= 0) os << "+";
            os << b_.get_str() << "*sqrt(" << r_.get_str() << ")";
            if (h_ == 2) os << ")/2";
        }
        return os.str();
    }
    friend std::ostream& operator<<(std::ostream& os, const QuadInt& q) { return os << q.str(); }

    bool operator<(const QuadInt& o) const {  // lexicographic, for containers
        if (r_ != o.r_) return r_ < o.r_;
        if (h_ != o.h_) return h_ < o.h_;
        if (a_ != o.a_) return a_ < o.a_;
        return b_ < o.b_;
    }

private:
    Int r_, a_, b_;
    int h_;

    static int mod4(const Int& n) {
        Int m = n % 4;
        if (m < 0) m += 4;
        return static_cast<int>(m.get_si());
    }

    void require_same_ring(const QuadInt& o) const {
        if (r_ != o.r_) throw std::invalid_argument("QuadInt: mixed rings");
    }

    void check_and_canonicalize() {
        if (r_ == 0 || r_ == 1) throw std::invalid_argument("QuadInt: r must not be 0 or 1");
        if (h_ != 1 && h_ != 2) throw std::invalid_argument("QuadInt: h must be 1 or 2");
        if (h_ == 2) {
            if (mod4(r_) != 1) throw std::invalid_argument("QuadInt: h=2 needs r=1 (mod 4)");
            if ((a_ - b_) % 2 != 0) throw std::invalid_argument("QuadInt: h=2 needs a=b (mod 2)");
            if (a_ % 2 == 0 && b_ % 2 == 0) {
                a_ /= 2;
                b_ /= 2;
                h_ = 1;
            }
        }
    }
};

// Residue ring R_r / (m): coordinates over the integral basis (1, w) reduced
// mod m. Multiplication uses w^2 = r, or w^2 = w + (r-1)/4 when r = 1 (mod 4).
class ModQuad {
public:
    ModQuad() : r_(2), m_(2), u_(0), v_(0) {}
    ModQuad(long r, long m, long u, long v) : r_(r), m_(m), u_(mod(u)), v_(mod(v)) {}
    static ModQuad reduce(const QuadInt& x, long m) {
        Int u, v;
        x.omega_coords(u, v);
        Int mi(m);
        Int ur = u % mi, vr = v % mi;
        if (ur < 0) ur += mi;
        if (vr < 0) vr += mi;
        return ModQuad(static_cast<long>(x.r().get_si()), m, ur.get_si(), vr.get_si());
    }

    long u() const { return u_; }
    long v() const { return v_; }
    long modulus() const { return m_; }
    bool is_zero() const { return u_ == 0 && v_ == 0; }
    bool operator==(const ModQuad& o) const {
        return r_ == o.r_ && m_ == o.m_ && u_ == o.u_ && v_ == o.v_;
    }

    friend ModQuad operator+(const ModQuad& x, const ModQuad& y) {
        return ModQuad(x.r_, x.m_, x.u_ + y.u_, x.v_ + y.v_);
    }
    friend ModQuad operator-(const ModQuad& x, const ModQuad& y) {
        return ModQuad(x.r_, x.m_, x.u_ - y.u_ + x.m_ * 4, x.v_ - y.v_ + x.m_ * 4);
    }
    friend ModQuad operator*(const ModQuad& x, const ModQuad& y) {
        long uu = x.u_ * y.u_, uv = x.u_ * y.v_ + x.v_ * y.u_, vv = x.v_ * y.v_;
        long r4 = ((x.r_ % 4) + 4) % 4;
        if (r4 == 1) {
            // w^2 = w + (r-1)/4
            long q = (x.r_ - 1) / 4;
            return ModQuad(x.r_, x.m_, uu + vv * q, uv + vv);
        }
        return ModQuad(x.r_, x.m_, uu + vv * x.r_, uv);
    }
    friend ModQuad operator*(const ModQuad& x, long n) {
        long nm = ((n % x.m_) + x.m_) % x.m_;
        return ModQuad(x.r_, x.m_, x.u_ * nm, x.v_ * nm);
    }

    std::string str() const {
        std::ostringstream os;
        os << u_ << "+" << v_ << "w mod " << m_;
        return os.str();
    }

private:
    long r_, m_, u_, v_;
    long mod(long x) const { return ((x % m_) + m_) % m_; }
};

}  // namespace cdx
