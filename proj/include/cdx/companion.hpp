#pragma once

// Scaled periodicity of the pair recurrence G_{k+1} = x G_k - (d-1) G_{k-1}:
// with M = [[x, -(d-1)], [1, 0]], a relation M^p = c I forces
// G_{d,k+p}(x) = c * G_{d,k}(x) for every k, which pins exact value patterns
// for all k at once.

#include "cdx/quadint.hpp"

#include <optional>

namespace cdx {

struct ScalarPeriod {
    long p;      // least exponent with M^p scalar
    QuadInt c;   // the scalar
};

// Least p <= p_max with M^p = c*I over the ring of x, if any.
inline std::optional<ScalarPeriod> companion_scalar_period(long d, const QuadInt& x, long p_max = 60) {
    if (p_max < 1) throw std::invalid_argument("companion_scalar_period: p_max must be >= 1");
    const Int r = x.r();
    const QuadInt zero = QuadInt::integer(r, 0);
    const QuadInt one = QuadInt::integer(r, 1);
    const QuadInt a = QuadInt::integer(r, Int(d) - 1);
    // M = [[x, -a], [1, 0]]
    QuadInt m00 = x, m01 = -a, m10 = one, m11 = zero;
    QuadInt p00 = one, p01 = zero, p10 = zero, p11 = one;
    for (long p = 1; p <= p_max; ++p) {
        QuadInt t00 = p00 * m00 + p01 * m10;
        QuadInt t01 = p00 * m01 + p01 * m11;
        QuadInt t10 = p10 * m00 + p11 * m10;
        QuadInt t11 = p10 * m01 + p11 * m11;
        p00 = t00; p01 = t01; p10 = t10; p11 = t11;
        if (p01.is_zero() && p10.is_zero() && p00 == p11)
            return ScalarPeriod{p, p00};
    }
    return std::nullopt;
}

}  // namespace cdx
