#pragma once

// Residue-ring periodicity certificates for the value recurrence
// G_{d,k+1}(x) = x G_{d,k}(x) - (d-1) G_{d,k-1}(x): once the pair state
// (G_{k-1}, G_k) repeats modulo m, the avoidance of a forbidden residue set
// is decided for every k >= k_min at once. Scaled-periodicity certificates
// (M^p = c I) pin exact zero patterns and eventual growth.

#include "cdx/certificate.hpp"
#include "cdx/companion.hpp"
#include "cdx/moore.hpp"

#include <optional>
#include <vector>

namespace cdx {

// k-filter: k = residue (mod modulus); modulus 1 means every k.
struct KFilter {
    long modulus = 1;
    long residue = 0;
    bool matches(long k) const { return ((k - residue) % modulus + modulus) % modulus == 0; }
};

struct PeriodicCertificate {
    long d = 0;
    QuadInt x;              // rational integers carried with b = 0
    bool quad_ring = false; // residue ring Z/m vs R_r/m
    long m = 0;
    long preperiod = 0;     // first index of the repeated pair state
    long period = 0;
    long k_min = 0;
    KFilter k_filter;
    // forbidden residues; (value, 0) in the integer case, (u, v) over R_r/m
    std::vector<std::pair<long, long>> forbidden;
    // G_k residues for k = 0 .. preperiod + period (inclusive), same encoding
    std::vector<std::pair<long, long>> trace;
    bool verified = false;
    std::optional<long> witness_k;

    Json to_json() const;
    static PeriodicCertificate from_json(const Json& j);
    // Re-runs the residue recurrence and reproduces trace + claim.
    bool recheck() const;
};

PeriodicCertificate mod_periodic_certificate_int(long d, const Int& x, long m,
                                                 const std::vector<long>& forbidden, long k_min,
                                                 KFilter filter = {});

PeriodicCertificate mod_periodic_certificate_quad(long d, const QuadInt& x, long m,
                                                  const std::vector<std::pair<long, long>>& forbidden,
                                                  long k_min, KFilter filter = {});

// Claim "G = allowed residue(s) only": forbidden = complement of allowed.
std::vector<long> complement_residues(long m, const std::vector<long>& allowed);

// Scaled periodicity M^p = c I with exact base values G_0 .. G_{p-1}:
// zero classes (k mod p with G = 0, valid for all k) and, for rational
// integer scalars |c| >= 2, the complete finite list of k with G in targets.
struct ScaledPeriodCertificate {
    long d = 0;
    QuadInt x;
    long p = 0;
    QuadInt c;
    std::vector<QuadInt> base_values;  // G_0 .. G_{p-1}
    std::vector<long> zero_classes;    // k mod p with G identically 0
    std::vector<long> targets;         // integer targets searched (empty if none)
    std::vector<std::pair<long, Int>> target_hits;  // complete (k, value) list
    bool hits_complete = false;      // growth argument applied (|c| >= 2 integer)
    bool verified = false;

    Json to_json() const;
    static ScaledPeriodCertificate from_json(const Json& j);
    bool recheck() const;
};

ScaledPeriodCertificate scaled_period_certificate(long d, const QuadInt& x,
                                                  const std::vector<long>& targets = {},
                                                  long p_max = 60);

// Exact big-integer scan: all k in [3, k_max] with G_{d,k}(x) in targets.
struct ExactScanResult {
    long d = 0;
    Int x;
    long k_max = 0;
    std::vector<long> targets;
    std::vector<std::pair<long, Int>> hits;
};

ExactScanResult exact_scan(long d, const Int& x, long k_max, const std::vector<long>& targets);

}  // namespace cdx
