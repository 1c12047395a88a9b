#pragma once

// The degree-6 window polynomials H(r) of the diameter-4/girth-9 analysis.
// With x = (r - 1/r - 4)/5 and t = (r + 1/r)/sqrt(5), the degree candidates
// a = x(3x+2 +- t)/2 satisfy G_{a+1,4}(x) = 0 identically, and
// H(r) = r^3 (G_{a+1,4}(x+s) - target) collapses to a polynomial of degree 6
// over Q(sqrt(5)). Certifying that every real root of H has absolute value
// inside a rational window [lo, hi] excludes all golden-ratio powers outside
// that window.

#include "cdx/fieldpoly.hpp"
#include "cdx/quadfield.hpp"

#include <string>

namespace cdx {

struct RootWindow {
    int branch = +1;      // sign of +-t in a
    int s_shift = +1;     // the integer shift s in {+-1, +-2}
    int target = -2;      // -2 for defect, +2 for excess
    Rat lo, hi;           // certified: every real root of H has |root| in (lo, hi)
    int root_count = 0;   // Sturm-verified number of distinct real roots of H
    bool verified = false;
    FieldPoly<QuadRat> H;        // degree 6 over Q(sqrt 5)
    RatPoly norm_poly;           // N(H) = H * conj(H), degree 12 over Q
    int norm_total_roots = 0;    // distinct real roots of N(H)
    int norm_inside_union = 0;   // of those, inside the +-[lo_u, hi_u] union window
    Rat union_lo, union_hi;      // union window used for the norm cross-check
    std::string note;
};

// Builds H for one (branch, shift, target) combination and certifies the
// paper-level window by exact Sturm counts over Q(sqrt 5), plus the weaker
// norm-polynomial cross-check over Q (which mixes both branches).
RootWindow h_root_window(int branch, int s_shift, int target);

// The windows certified per (branch, target); shifts share a window.
void h_paper_window(int branch, int target, Rat& lo, Rat& hi);

}  // namespace cdx
