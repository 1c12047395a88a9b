#pragma once

// Scan drivers: the odd-degree nonexistence scans (window enumeration,
// modular all-k closures, exact big-integer scans, and per-hit reducibility
// eliminations) and the full cubic certificate chain.

#include "cdx/certificate.hpp"
#include "cdx/moore.hpp"

namespace cdx {

// Nonexistence certificate for degree d (odd, >= 5): enumerates the integer
// window x^2 < 4(d-1); closes each x either by a modular all-k certificate
// or by an exact scan to k_max with every hit eliminated through the
// order-congruence reducibility conditions.
TheoremCertificate nonexistence_scan(long d, long k_max, Mode mode);
TheoremCertificate nonexistence_scan_both(long d, long k_max);

// The cubic chain: integer-window closures, the mod-16/mod-32 analysis at
// x = -1, the 38-value quadratic dispatch, the unit-norm survivor filter and
// the two ring-mod-4 endgames.
TheoremCertificate cubic_certificate(long k_max);

// Worker-count override: CDX_THREADS, else hardware concurrency.
int worker_count();

}  // namespace cdx
