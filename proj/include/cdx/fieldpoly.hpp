#pragma once

// Polynomials over an exact field K (division, exact zero test). Used with
// K = Rat and K = QuadRat. Sturm chains additionally need an exact sign on K.

#include "cdx/intpoly.hpp"

#include <stdexcept>
#include <vector>

namespace cdx {

inline int sign_of(const Rat& q) { return sgn(q); }

template <class K>
class FieldPoly {
public:
    FieldPoly() = default;
    explicit FieldPoly(std::vector<K> coeffs) : c_(std::move(coeffs)) { normalize(); }
    static FieldPoly constant(K v) {
        FieldPoly p;
        if (!(v == K(0))) p.c_.push_back(std::move(v));
        return p;
    }
    static FieldPoly from_intpoly(const IntPoly& p) {
        std::vector<K> c;
        c.reserve(p.degree() + 1);
        for (int i = 0; i <= p.degree(); ++i) c.emplace_back(p.coeff(i));
        return FieldPoly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<K>& coeffs() const { return c_; }
    K coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return K(0);
        return c_[i];
    }
    const K& leading() const { return c_.back(); }

    bool operator==(const FieldPoly& o) const { return c_ == o.c_; }

    FieldPoly operator-() const {
        FieldPoly r = *this;
        for (auto& c : r.c_) c = K(0) - c;
        return r;
    }
    friend FieldPoly operator+(const FieldPoly& a, const FieldPoly& b) {
        std::vector<K> r(std::max(a.c_.size(), b.c_.size()), K(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] = r[i] + a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
        return FieldPoly(std::move(r));
    }
    friend FieldPoly operator-(const FieldPoly& a, const FieldPoly& b) { return a + (-b); }
    friend FieldPoly operator*(const FieldPoly& a, const FieldPoly& b) {
        if (a.is_zero() || b.is_zero()) return FieldPoly();
        std::vector<K> r(a.c_.size() + b.c_.size() - 1, K(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        return FieldPoly(std::move(r));
    }
    friend FieldPoly operator*(const FieldPoly& a, const K& s) {
        FieldPoly r = a;
        for (auto& c : r.c_) c = c * s;
        r.normalize();
        return r;
    }

    K eval(const K& x) const {
        if (c_.empty()) return K(0);
        K acc = c_.back();
        for (int i = degree() - 1; i >= 0; --i) acc = acc * x + c_[i];
        return acc;
    }

    FieldPoly derivative() const {
        if (c_.size() <= 1) return FieldPoly();
        std::vector<K> r(c_.size() - 1, K(0));
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * K(static_cast<long>(i));
        return FieldPoly(std::move(r));
    }

    FieldPoly monic() const {
        if (is_zero()) return *this;
        FieldPoly r = *this;
        K inv = K(1) / r.c_.back();
        for (auto& c : r.c_) c = c * inv;
        return r;
    }

    static void divmod(const FieldPoly& a, const FieldPoly& b, FieldPoly& q, FieldPoly& r) {
        if (b.is_zero()) throw std::invalid_argument("FieldPoly division by zero");
        std::vector<K> rem = a.c_;
        int db = b.degree();
        std::vector<K> quot;
        if (a.degree() >= db) quot.assign(a.degree() - db + 1, K(0));
        for (int i = static_cast<int>(rem.size()) - 1; i >= db; --i) {
            if (rem[i] == K(0)) continue;
            K f = rem[i] / b.c_.back();
            quot[i - db] = f;
            for (int j = 0; j <= db; ++j) rem[i - db + j] = rem[i - db + j] - f * b.c_[j];
        }
        q = FieldPoly(std::move(quot));
        r = FieldPoly(std::move(rem));
    }
    friend FieldPoly operator%(const FieldPoly& a, const FieldPoly& b) {
        FieldPoly q, r;
        divmod(a, b, q, r);
        return r;
    }
    friend FieldPoly operator/(const FieldPoly& a, const FieldPoly& b) {
        FieldPoly q, r;
        divmod(a, b, q, r);
        return q;
    }

    static FieldPoly gcd(FieldPoly a, FieldPoly b) {
        while (!b.is_zero()) {
            FieldPoly r = a % b;
            a = std::move(b);
            b = std::move(r);
        }
        return a.is_zero() ? a : a.monic();
    }

private:
    std::vector<K> c_;
    void normalize() {
        while (!c_.empty() && c_.back() == K(0)) c_.pop_back();
    }
};

using RatPoly = FieldPoly<Rat>;

inline RatPoly ratpoly_from(const IntPoly& p) { return RatPoly::from_intpoly(p); }

// Clears denominators and strips content: the primitive integer polynomial
// with the same roots.
inline IntPoly primitive_from_ratpoly(const RatPoly& p) {
    if (p.is_zero()) return IntPoly();
    Int den(1);
    for (const auto& c : p.coeffs()) den = den / gcd_int(den, c.get_den()) * c.get_den();
    std::vector<Int> ic;
    ic.reserve(p.degree() + 1);
    for (const auto& c : p.coeffs()) {
        Rat s = c * Rat(den);
        ic.push_back(s.get_num());
    }
    return IntPoly(std::move(ic)).primitive_part();
}

}  // namespace cdx
