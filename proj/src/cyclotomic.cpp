#include "cdx/cyclotomic.hpp"

#include "cdx/intmatrix.hpp"

#include <map>
#include <stdexcept>

namespace cdx {

long euler_phi(long n) {
    long result = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

IntPoly cyclotomic_poly(long ell) {
    if (ell < 1) throw std::invalid_argument("cyclotomic_poly: ell must be >= 1");
    // x^ell - 1 divided by Phi_m for every proper divisor m.
    std::vector<Int> xn(ell + 1, Int(0));
    xn[0] = -1;
    xn[ell] = 1;
    IntPoly num(std::move(xn));
    for (long m = 1; m < ell; ++m) {
        if (ell % m != 0) continue;
        IntPoly q;
        if (!IntPoly::divide_exact(num, cyclotomic_poly(m), q))
            throw std::logic_error("cyclotomic_poly: inexact division");
        num = std::move(q);
    }
    return num;
}

IntPoly f_poly(long ell) {
    if (ell < 3) throw std::invalid_argument("f_poly: ell must be >= 3");
    const IntPoly phi = cyclotomic_poly(ell);
    const long h = euler_phi(ell) / 2;
    // Express Phi_l(x) = sum_j a_j x^(h-j) (x^2+1)^j by descending j; then
    // f_l(y) = sum_j a_j y^j. The change of basis is triangular in the top
    // coefficient, so a_j is read off the residual directly.
    IntPoly residual = phi;
    const IntPoly x2p1{1, 0, 1};
    std::vector<Int> f(h + 1, Int(0));
    for (long j = h; j >= 0; --j) {
        Int aj = residual.coeff(static_cast<int>(h + j));
        f[j] = aj;
        if (aj != 0)
            residual -= IntPoly::monomial(aj, static_cast<int>(h - j)) * x2p1.pow(static_cast<int>(j));
    }
    if (!residual.is_zero()) throw std::logic_error("f_poly: basis descent left a residual");
    return IntPoly(std::move(f));
}

IntPoly compose_F(long ell, const GParams& params) {
    IntPoly g = g_poly(params.d, params.k);
    if (params.mode == Mode::excess) g = -g;
    return f_poly(ell).compose(g);
}

CycleCharpolyReport cycle_charpoly_identity(long n) {
    if (n < 3) throw std::invalid_argument("cycle_charpoly_identity: n must be >= 3");
    CycleCharpolyReport rep;
    IntMatrix cyc(static_cast<int>(n));
    for (long i = 0; i < n; ++i) {
        cyc.at(i, (i + 1) % n) = 1;
        cyc.at((i + 1) % n, i) = 1;
    }
    rep.charpoly_of_cycle = charpoly(cyc);
    IntPoly expected{-2, 1};  // x - 2
    if (n % 2 == 0) expected *= IntPoly{2, 1};
    for (long ell = 3; ell <= n; ++ell) {
        if (n % ell != 0) continue;
        IntPoly f = f_poly(ell);
        rep.f_factors.emplace_back(ell, f);
        expected *= f * f;
    }
    rep.holds = (expected == rep.charpoly_of_cycle);
    return rep;
}

bool eq7_identity_check(long d, long m) {
    if (d < 3) throw std::invalid_argument("eq7_identity_check: d must be >= 3");
    if (m < 1) throw std::invalid_argument("eq7_identity_check: m must be >= 1");
    const Int a = Int(d) - 1;  // q^2
    // Both sides scaled by 2^m live in Z[q]/(q^2 - a): track the q-free and
    // q-linear parts as integer polynomials in x.
    IntPoly even, odd;
    auto accumulate = [&](const IntPoly& u, long qexp_base, long two_exp_base) {
        for (int j = 0; j <= u.degree(); ++j) {
            Int c = u.coeff(j);
            if (c == 0) continue;
            long e = qexp_base - j;  // power of q
            if (e < 0) throw std::logic_error("eq7: negative q exponent");
            Int scale = c * pow_int(Int(2), static_cast<unsigned long>(two_exp_base - j));
            Int qpart = pow_int(a, static_cast<unsigned long>(e / 2));
            IntPoly term = IntPoly::monomial(scale * qpart, j);
            if (e % 2 == 0)
                even += term;
            else
                odd += term;
        }
    };
    // 2^m q^m U_m(x/2q): term j carries u_j 2^(m-j) x^j q^(m-j).
    accumulate(u_poly(m), m, m);
    // 2^m q^(m-1) U_{m-1}(x/2q): term j carries v_j 2^(m-j) x^j q^(m-1-j).
    accumulate(u_poly(m - 1), m - 1, m);
    IntPoly lhs = g_poly(d, m) * pow_int(Int(2), static_cast<unsigned long>(m));
    return odd.is_zero() && even == lhs;
}

}  // namespace cdx
