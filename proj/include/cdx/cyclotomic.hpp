#pragma once

// Cyclotomic polynomials, the half-trace factors f_l with
// x^(phi(l)/2) f_l(x + 1/x) = Phi_l(x), the composites F = f_l(G) and
// F* = f_l(-G), and the structural identities tying them to cycle spectra.

#include "cdx/intpoly.hpp"
#include "cdx/moore.hpp"

#include <vector>

namespace cdx {

long euler_phi(long n);

// The l-th cyclotomic polynomial, by iterated exact division of x^l - 1.
IntPoly cyclotomic_poly(long ell);

// The degree-phi(l)/2 integer polynomial with x^(phi(l)/2) f_l(x+1/x) = Phi_l(x).
// Rejects l < 3 (phi(l) odd there).
IntPoly f_poly(long ell);

// F_{l,d,k} = f_l(G_{d,k}) for defect, F*_{l,d,k} = f_l(-G_{d,k}) for excess.
IntPoly compose_F(long ell, const GParams& params);

struct CycleCharpolyReport {
    bool holds = false;
    IntPoly charpoly_of_cycle;
    // content of the comparison: (x-2) * [x+2 if n even] * prod f_l^2 over l|n, l>=3
    std::vector<std::pair<long, IntPoly>> f_factors;
};

// Verifies Psi(C_n, x) = (x-2) (x+2 if n even) prod_{l|n, l>=3} f_l(x)^2
// against the characteristic polynomial of the explicit cycle matrix.
CycleCharpolyReport cycle_charpoly_identity(long n);

// Verifies G_{d,m}(x) = q^m U_m(x/2q) + q^{m-1} U_{m-1}(x/2q) exactly in
// Z[q]/(q^2 - (d-1)), by comparing both sides scaled by 2^m.
bool eq7_identity_check(long d, long m);

}  // namespace cdx
