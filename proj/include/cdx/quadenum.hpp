#pragma once

// Enumeration of all real algebraic integers of degree exactly 2 whose two
// conjugates lie in the open window (-w, w), plus the explicit counting bound
// those enumerations are certified against.

#include "cdx/ints.hpp"
#include "cdx/quadint.hpp"

#include <vector>

namespace cdx {

// Window (-w, w) with w^2 = window_sq given exactly. Iterates integer traces
// T and norms N of x^2 - Tx + N with positive non-square discriminant and
// both roots inside; membership tests are exact sign comparisons, no root
// is ever extracted numerically. Output is closed under conjugation.
std::vector<QuadInt> enumerate_quadratic_integers_window(const Int& window_sq);

// The spectral window for degree d: w = 2 sqrt(d-1), i.e. w^2 = 4(d-1).
std::vector<QuadInt> enumerate_quadratic_integers(long d);

struct QuadCountBound {
    Int s1_ceil, s2_ceil;    // ceil(2q), ceil(4q)
    Int bound;               // floor((s1+1)^3/3 + (s2+1)^3/3)
    Int representation_count;  // pairs (a,b) the bound actually counts
    Int value_count;           // deduplicated values found by enumeration
    bool count_within_bound = false;
};

// Evaluates the two parametrized counting bounds (s = 2q and s = 4q forms)
// and checks the enumeration against their sum.
QuadCountBound quad_count_bound(long d);

}  // namespace cdx
