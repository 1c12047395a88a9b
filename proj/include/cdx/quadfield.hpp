#pragma once

// Exact arithmetic in the real quadratic field Q(sqrt(r)): elements a + b*sqrt(r)
// with rational a, b. Ordered field; signs are decided exactly, so Sturm chains
// over Q(sqrt(r)) need no floating point.

#include "cdx/ints.hpp"
#include "cdx/quadint.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace cdx {

class QuadRat {
public:
    QuadRat() : r_(5), a_(0), b_(0) {}
    explicit QuadRat(long n) : r_(5), a_(n), b_(0) {}
    explicit QuadRat(const Int& n) : r_(5), a_(n), b_(0) {}
    QuadRat(Int r, Rat a, Rat b) : r_(std::move(r)), a_(std::move(a)), b_(std::move(b)) {
        if (r_ <= 1) throw std::invalid_argument("QuadRat: r must be > 1");
    }
    static QuadRat sqrt_of(Int r) { return QuadRat(std::move(r), Rat(0), Rat(1)); }
    static QuadRat from_quadint(const QuadInt& x) {
        return QuadRat(x.r(), make_rat(x.a(), Int(x.h())), make_rat(x.b(), Int(x.h())));
    }

    const Int& r() const { return r_; }
    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }
    bool is_rational() const { return b_ == 0; }

    bool operator==(const QuadRat& o) const {
        if (a_ != o.a_ || b_ != o.b_) return false;
        if (b_ != 0 && r_ != o.r_) return false;
        return true;
    }
    bool operator!=(const QuadRat& o) const { return !(*this == o); }

    QuadRat conj() const { return QuadRat(r_, a_, -b_); }
    Rat norm() const { return a_ * a_ - Rat(r_) * b_ * b_; }

    QuadRat operator-() const { return QuadRat(r_, -a_, -b_); }
    friend QuadRat operator+(const QuadRat& x, const QuadRat& y) {
        return QuadRat(x.pick_r(y), x.a_ + y.a_, x.b_ + y.b_);
    }
    friend QuadRat operator-(const QuadRat& x, const QuadRat& y) { return x + (-y); }
    friend QuadRat operator*(const QuadRat& x, const QuadRat& y) {
        Int r = x.pick_r(y);
        return QuadRat(r, x.a_ * y.a_ + Rat(r) * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_);
    }
    friend QuadRat operator/(const QuadRat& x, const QuadRat& y) {
        if (y.a_ == 0 && y.b_ == 0) throw std::invalid_argument("QuadRat: division by zero");
        Rat n = y.norm();
        if (n == 0) throw std::logic_error("QuadRat: zero norm for nonzero element (r not square-free?)");
        QuadRat num = x * y.conj();
        return QuadRat(num.r_, num.a_ / n, num.b_ / n);
    }
    QuadRat& operator+=(const QuadRat& o) { return *this = *this + o; }
    QuadRat& operator-=(const QuadRat& o) { return *this = *this - o; }
    QuadRat& operator*=(const QuadRat& o) { return *this = *this * o; }

    // Exact sign of a + b*sqrt(r) as a real number (sqrt(r) > 0).
    int sign() const {
        int sa = sign_rat(a_), sb = sign_rat(b_);
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        // Opposite signs: compare a^2 vs r b^2; the larger magnitude wins.
        Rat d = a_ * a_ - Rat(r_) * b_ * b_;
        int sd = sign_rat(d);
        return sd == 0 ? 0 : sd * sa;
    }
    bool operator<(const QuadRat& o) const { return (*this - o).sign() < 0; }
    bool operator>(const QuadRat& o) const { return (*this - o).sign() > 0; }

    std::string str() const {
        std::ostringstream os;
        if (b_ == 0) return a_.get_str();
        os << a_.get_str() << (b_ > 0 ? "+" : "") << b_.get_str() << "*sqrt(" << r_.get_str() << ")";
        return os.str();
    }
    friend std::ostream& operator<<(std::ostream& os, const QuadRat& q) { return os << q.str(); }

private:
    Int r_;
    Rat a_, b_;

    static int sign_rat(const Rat& q) { return sgn(q); }
    Int pick_r(const QuadRat& o) const {
        if (b_ != 0 && o.b_ != 0 && r_ != o.r_)
            throw std::invalid_argument("QuadRat: mixed fields");
        return b_ != 0 ? r_ : o.r_;
    }
};

inline int sign_of(const QuadRat& q) { return q.sign(); }

}  // namespace cdx
