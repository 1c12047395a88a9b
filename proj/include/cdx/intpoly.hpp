#pragma once

// Dense integer-coefficient polynomials, ascending degree order.
// The zero polynomial is the empty coefficient vector.

#include "cdx/ints.hpp"

#include <algorithm>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace cdx {

class IntPoly {
public:
    IntPoly() = default;
    IntPoly(std::initializer_list<long> coeffs) {
        for (long c : coeffs) c_.emplace_back(c);
        normalize();
    }
    explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static IntPoly zero() { return IntPoly(); }
    static IntPoly constant(Int c) {
        IntPoly p;
        if (c != 0) p.c_.push_back(std::move(c));
        return p;
    }
    static IntPoly x() { return IntPoly{0, 1}; }
    static IntPoly monomial(Int coeff, int deg) {
        IntPoly p;
        if (coeff != 0) {
            p.c_.assign(deg + 1, Int(0));
            p.c_[deg] = std::move(coeff);
        }
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Int>& coeffs() const { return c_; }

    // Coefficient of x^i; zero outside the stored range.
    Int coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return Int(0);
        return c_[i];
    }
    const Int& leading() const {
        static const Int z(0);
        return c_.empty() ? z : c_.back();
    }

    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly& o) const { return c_ != o.c_; }

    IntPoly operator-() const {
        IntPoly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    IntPoly& operator+=(const IntPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Int(0));
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        normalize();
        return *this;
    }
    IntPoly& operator-=(const IntPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Int(0));
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        normalize();
        return *this;
    }
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }

    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return IntPoly();
        std::vector<Int> r(a.c_.size() + b.c_.size() - 1, Int(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return IntPoly(std::move(r));
    }
    friend IntPoly operator*(const IntPoly& a, const Int& s) {
        if (s == 0) return IntPoly();
        IntPoly r = a;
        for (auto& c : r.c_) c *= s;
        return r;
    }
    friend IntPoly operator*(const Int& s, const IntPoly& a) { return a * s; }
    IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }
    IntPoly& operator*=(const Int& s) { return *this = *this * s; }

    IntPoly pow(int e) const {
        IntPoly r = constant(1), base = *this;
        while (e > 0) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    // Horner evaluation over any commutative ring R reachable from Int.
    template <class R>
    R eval_in(const R& x) const {
        if (c_.empty()) return R(0);
        R acc(c_.back());
        for (int i = degree() - 1; i >= 0; --i) acc = acc * x + R(c_[i]);
        return acc;
    }
    Int eval(const Int& x) const { return eval_in<Int>(x); }
    Rat eval(const Rat& x) const {
        if (c_.empty()) return Rat(0);
        Rat acc(c_.back());
        for (int i = degree() - 1; i >= 0; --i) { acc *= x; acc += Rat(c_[i]); }
        return acc;
    }

    IntPoly derivative() const {
        if (c_.size() <= 1) return IntPoly();
        std::vector<Int> r(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Int(static_cast<long>(i));
        return IntPoly(std::move(r));
    }

    IntPoly compose(const IntPoly& inner) const {
        IntPoly acc;
        for (int i = degree(); i >= 0; --i) acc = acc * inner + constant(c_[i]);
        return acc;
    }

    // gcd of all coefficients, sign matching the leading coefficient; 0 for zero.
    Int content() const {
        Int g(0);
        for (const auto& c : c_) g = gcd_int(g, c);
        if (!c_.empty() && c_.back() < 0) g = -g;
        return g;
    }
    IntPoly primitive_part() const {
        if (is_zero()) return IntPoly();
        Int g = content();
        IntPoly r = *this;
        for (auto& c : r.c_) c = divexact(c, g);
        return r;
    }

    // Exact division; returns false (and leaves q unspecified) if not exact.
    static bool divide_exact(const IntPoly& a, const IntPoly& b, IntPoly& q) {
        if (b.is_zero()) throw std::invalid_argument("IntPoly division by zero");
        if (a.is_zero()) { q = IntPoly(); return true; }
        if (a.degree() < b.degree()) return false;
        std::vector<Int> rem = a.c_;
        std::vector<Int> quot(a.degree() - b.degree() + 1, Int(0));
        for (int i = a.degree() - b.degree(); i >= 0; --i) {
            Int top = rem[i + b.degree()];
            if (top == 0) continue;
            if (top % b.leading() != 0) return false;
            Int f = top / b.leading();
            quot[i] = f;
            for (int j = 0; j <= b.degree(); ++j) rem[i + j] -= f * b.c_[j];
        }
        for (const auto& c : rem)
            if (c != 0) return false;
        q = IntPoly(std::move(quot));
        return true;
    }

    // Squared 2-norm of the coefficient vector.
    Int norm2_sq() const {
        Int s(0);
        for (const auto& c : c_) s += c * c;
        return s;
    }
    Int max_abs_coeff() const {
        Int m(0);
        for (const auto& c : c_) m = std::max(m, abs_int(c));
        return m;
    }

    // Multiply the variable by s: p(s*x).
    IntPoly scale_arg(const Int& s) const {
        IntPoly r = *this;
        Int f(1);
        for (size_t i = 1; i < r.c_.size(); ++i) {
            f *= s;
            r.c_[i] *= f;
        }
        r.normalize();
        return r;
    }

    std::string str(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int i = degree(); i >= 0; --i) {
            const Int& c = c_[i];
            if (c == 0) continue;
            Int a = abs_int(c);
            if (first) {
                if (c < 0) os << "-";
                first = false;
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            if (i == 0 || a != 1) os << a.get_str();
            if (i > 0) {
                os << var;
                if (i > 1) os << "^" << i;
            }
        }
        return os.str();
    }
    friend std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << p.str(); }

    // Strict ordering for deterministic factor lists: degree, then coefficients.
    bool operator<(const IntPoly& o) const {
        if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
        for (size_t i = c_.size(); i-- > 0;)
            if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
        return false;
    }

private:
    std::vector<Int> c_;
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
};

}  // namespace cdx
