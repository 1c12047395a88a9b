#pragma once

// Square matrices with arbitrary-precision integer entries.

#include "cdx/intpoly.hpp"

#include <stdexcept>
#include <vector>

namespace cdx {

class IntMatrix {
public:
    explicit IntMatrix(int n) : n_(n), e_(static_cast<size_t>(n) * n, Int(0)) {
        if (n < 1) throw std::invalid_argument("IntMatrix: dimension must be >= 1");
    }

    static IntMatrix identity(int n) {
        IntMatrix m(n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
    static IntMatrix ones(int n) {
        IntMatrix m(n);
        for (auto& x : m.e_) x = 1;
        return m;
    }

    int dim() const { return n_; }
    Int& at(int i, int j) { return e_[static_cast<size_t>(i) * n_ + j]; }
    const Int& at(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }

    bool operator==(const IntMatrix& o) const { return n_ == o.n_ && e_ == o.e_; }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
        a.require_same(b);
        IntMatrix r = a;
        for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += b.e_[i];
        return r;
    }
    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
        a.require_same(b);
        IntMatrix r = a;
        for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] -= b.e_[i];
        return r;
    }
    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator*(const IntMatrix& a, const Int& s) {
        IntMatrix r = a;
        for (auto& x : r.e_) x *= s;
        return r;
    }

    Int trace() const {
        Int t(0);
        for (int i = 0; i < n_; ++i) t += at(i, i);
        return t;
    }
    bool is_zero() const {
        for (const auto& x : e_)
            if (x != 0) return false;
        return true;
    }
    bool is_symmetric() const {
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if (at(i, j) != at(j, i)) return false;
        return true;
    }

private:
    int n_;
    std::vector<Int> e_;
    void require_same(const IntMatrix& o) const {
        if (n_ != o.n_) throw std::invalid_argument("IntMatrix: dimension mismatch");
    }
};

// Characteristic polynomial det(xI - M), exact, via Faddeev-LeVerrier.
IntPoly charpoly(const IntMatrix& m);

// Determinant by Bareiss fraction-free elimination. Kept algorithmically
// independent of charpoly so the two can cross-check each other.
Int bareiss_det(const IntMatrix& m);

}  // namespace cdx
