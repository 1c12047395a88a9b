#pragma once

// The Pell-type equation z^2 - 5 t^2 = -4 behind the diameter-4 analysis:
// solutions are (±L_{4m+3}, ±F_{4m+3}); integrality of x = (-4+z)/5 selects
// the candidate degrees a = x(3x+2±t)/2 with G_{a+1,4}(x) = 0.

#include "cdx/ints.hpp"

#include <optional>
#include <vector>

namespace cdx {

// Lucas/Fibonacci pair (L_m, F_m); negative indices via L_{-n} = (-1)^n L_n,
// F_{-n} = (-1)^{n+1} F_n.
std::pair<Int, Int> lucas_fib(long m);

struct PellRecord {
    long m = 0;
    int z_sign = 1, t_sign = 1;
    Int z, t;            // z = z_sign * L_{4m+3}, t = t_sign * F_{4m+3}
    Int x;               // (-4+z)/5, recorded only when integral
    std::optional<Int> a_plus, a_minus;  // x(3x+2+t)/2 and x(3x+2-t)/2 when integral
    bool g_identity_ok = false;          // G_{a+1,4}(x) = 0 for every recorded a
};

// G_{a+1,4}(x) = x^4 + x^3 - 3a x^2 - 2a x + a^2.
Int g_a1_4(const Int& a, const Int& x);

// All records for m in [m_lo, m_hi] with integral x (one per m and z-sign
// that admits it; both t-signs are carried in a_plus/a_minus).
std::vector<PellRecord> pell_family(long m_lo, long m_hi);

// All nonnegative solutions (z, t) with z <= limit, by direct scan.
std::vector<std::pair<Int, Int>> pell_brute_oracle(long limit);

// For every a in 1..a_max, verifies that the Vieta resolvent
// p(y) = y^3 + 3a y^2 - (2a + 4a^2) y - (5a^2 + 12a^3) has no integer root.
bool resolvent_cubic_scan(long a_max);

// The resolvent itself, for certificates and tests.
Int resolvent_eval(const Int& a, const Int& y);

}  // namespace cdx
