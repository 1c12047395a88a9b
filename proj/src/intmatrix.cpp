#include "cdx/intmatrix.hpp"

namespace cdx {

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    a.require_same(b);
    int n = a.n_;
    IntMatrix r(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const Int& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < n; ++j) r.at(i, j) += aik * b.at(k, j);
        }
    return r;
}

IntPoly charpoly(const IntMatrix& m) {
    int n = m.dim();
    // Faddeev-LeVerrier: M_1 = A, c_k = -tr(M_k)/k, M_{k+1} = A (M_k + c_k I).
    // The divisions are exact over the integers.
    std::vector<Int> c(n + 1);
    c[n] = 1;
    IntMatrix mk = m;
    for (int k = 1; k <= n; ++k) {
        Int ck = -mk.trace();
        ck = divexact(ck, Int(k));
        c[n - k] = ck;
        if (k < n) {
            IntMatrix adj = mk;
            for (int i = 0; i < n; ++i) adj.at(i, i) += ck;
            mk = m * adj;
        }
    }
    return IntPoly(std::move(c));
}

Int bareiss_det(const IntMatrix& m) {
    int n = m.dim();
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = m.at(i, j);
    Int prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) { piv = i; break; }
            if (piv < 0) return Int(0);
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i][j] = divexact(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : Int(-a[n - 1][n - 1]);
}

}  // namespace cdx
